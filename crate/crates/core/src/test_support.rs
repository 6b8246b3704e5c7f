//! Fixtures shared by the unit tests.

use proptest::prelude::*;

use crate::text_model::{Slp, SlpRule, Symbol, Text};

pub fn figure() -> Slp {
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

/// A small SLP for arbitrary text: left-deep chain over one terminal rule
/// per distinct symbol.
pub fn chain(s: &str) -> Slp {
    let text = Text::from_letters(s);
    let mut rules = Vec::new();
    let mut ids = std::collections::HashMap::new();
    for &c in text.iter() {
        ids.entry(c).or_insert_with(|| {
            rules.push(SlpRule::Terminal(c));
            rules.len() - 1
        });
    }
    let mut acc = ids[&text[0]];
    for c in &text[1..] {
        rules.push(SlpRule::Pair(acc, ids[c]));
        acc = rules.len() - 1;
    }
    Slp::new(rules).unwrap()
}

/// Random SLP: one terminal per symbol, then pairs joining a recent rule with
/// an arbitrary one, lengths capped at `max_len`.
pub fn random_slp(sigma: u32, picks: &[(usize, usize, bool)], max_len: u64) -> Slp {
    let mut rules: Vec<SlpRule> = (0..sigma).map(|c| SlpRule::Terminal(Symbol(c))).collect();
    let mut lens: Vec<u64> = vec![1; sigma as usize];
    for &(a, b, swap) in picks {
        let i = rules.len();
        let recent = |x: usize| i - 1 - x % i.min(4);
        let (mut l, mut r) = (recent(a), if b < 40 { recent(b) } else { b % i });
        while lens[l] + lens[r] > max_len {
            (l, r) = (r.min(l) / 2, 0);
        }
        if swap {
            (l, r) = (r, l);
        }
        rules.push(SlpRule::Pair(l, r));
        lens.push(lens[l] + lens[r]);
    }
    Slp::new(rules).unwrap()
}

pub fn slp_strategy(max_len: u64) -> impl Strategy<Value = Slp> {
    (
        1u32..4,
        proptest::collection::vec((0usize..64, 0usize..64, any::<bool>()), 1..40),
    )
        .prop_map(move |(sigma, picks)| random_slp(sigma, &picks, max_len))
}
