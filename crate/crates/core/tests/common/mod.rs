#![allow(dead_code)]

use crx_core::text_model::{Slp, SlpRule, Symbol, Text};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random SLP with at most `max_rules` rules deriving at most `max_len`
/// symbols over an alphabet of `1..=3` symbols. Children are drawn mostly
/// from the last few rules so lengths grow close to geometrically.
pub fn random_slp(rng: &mut impl Rng, max_rules: usize, max_len: u64) -> Slp {
    let sigma = rng.gen_range(1..=3usize.min(max_rules));
    let mut rules: Vec<SlpRule> = (0..sigma as u32)
        .map(|c| SlpRule::Terminal(Symbol(c)))
        .collect();
    let mut lens = vec![1u64; sigma];
    let target = rng.gen_range((max_rules / 2).max(sigma + 1)..=max_rules);
    while rules.len() < target {
        let i = rules.len();
        let (mut l, mut r) = (pick(rng, i), pick(rng, i));
        if rng.gen_bool(0.5) {
            (l, r) = (r, l);
        }
        if lens[l] + lens[r] > max_len {
            let (a, b) = if lens[l] <= lens[r] { (l, r) } else { (r, l) };
            l = a;
            r = (0..i)
                .filter(|&x| lens[a] + lens[x] <= max_len)
                .max_by_key(|&x| lens[x])
                .unwrap_or(b);
            if lens[l] + lens[r] > max_len {
                break;
            }
        }
        rules.push(SlpRule::Pair(l, r));
        lens.push(lens[l] + lens[r]);
    }
    Slp::new(rules).unwrap()
}

fn pick(rng: &mut impl Rng, i: usize) -> usize {
    match rng.gen_range(0..10) {
        0..=4 => i - 1,
        5..=7 => i - 1 - rng.gen_range(0..i.min(4)),
        _ => rng.gen_range(0..i),
    }
}

pub fn expand(s: &Slp) -> Text {
    s.expand(u64::MAX).unwrap()
}

/// The SLP from the running example: 7 rules deriving `aababaababaab`.
pub fn figure_slp() -> Slp {
    use SlpRule::*;
    Slp::new(vec![
        Terminal(Symbol(0)),
        Terminal(Symbol(1)),
        Pair(0, 1),
        Pair(0, 2),
        Pair(2, 3),
        Pair(3, 4),
        Pair(5, 4),
    ])
    .unwrap()
}

/// Every string over `sigma` symbols of length `1..=max_len`.
pub fn all_strings(sigma: u32, max_len: usize) -> impl Iterator<Item = Vec<Symbol>> {
    (1..=max_len).flat_map(move |len| {
        let total = (sigma as u64).pow(len as u32);
        (0..total).map(move |mut code| {
            (0..len)
                .map(|_| {
                    let c = (code % sigma as u64) as u32;
                    code /= sigma as u64;
                    Symbol(c)
                })
                .collect()
        })
    })
}

pub fn brute_occ(text: &[Symbol], pat: &[Symbol]) -> Vec<u64> {
    if pat.len() > text.len() {
        return Vec::new();
    }
    (0..=text.len() - pat.len())
        .filter(|&k| &text[k..k + pat.len()] == pat)
        .map(|k| k as u64 + 1)
        .collect()
}
