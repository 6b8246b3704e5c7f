//! Karp-Rabin fingerprints modulo the Mersenne prime 2^61 - 1.
//!
//! Used only to find candidate matches quickly. Every candidate found through
//! a fingerprint is confirmed by an exact comparison before it is used.

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use crate::text_model::{RleString, Slp, SlpRule, Symbol};

const MOD: u64 = (1 << 61) - 1;
const BASE: u64 = 0x0b5a_d4ec_eda1_ce2a % MOD;

fn mul(a: u64, b: u64) -> u64 {
    let p = a as u128 * b as u128;
    let s = (p as u64 & MOD) + (p >> 61) as u64;
    if s >= MOD {
        s - MOD
    } else {
        s
    }
}

fn add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= MOD {
        s - MOD
    } else {
        s
    }
}

fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + MOD - b
    }
}

/// Fingerprint of a string together with `BASE^len`, so two fingerprints
/// concatenate in O(1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    pub hash: u64,
    pub pow: u64,
    pub len: u64,
}

impl Fp {
    pub const EMPTY: Fp = Fp {
        hash: 0,
        pow: 1,
        len: 0,
    };

    pub fn symbol(c: Symbol) -> Fp {
        Fp {
            hash: (c.0 as u64 + 1) % MOD,
            pow: BASE,
            len: 1,
        }
    }

    pub fn concat(self, next: Fp) -> Fp {
        Fp {
            hash: add(mul(self.hash, next.pow), next.hash),
            pow: mul(self.pow, next.pow),
            len: self.len + next.len,
        }
    }

    /// `c^p` by repeated doubling.
    pub fn run(c: Symbol, mut p: u64) -> Fp {
        let mut acc = Fp::EMPTY;
        let mut sq = Fp::symbol(c);
        while p > 0 {
            if p & 1 == 1 {
                acc = acc.concat(sq);
            }
            sq = sq.concat(sq);
            p >>= 1;
        }
        acc
    }

    /// Fingerprint of `y` where `self` is a prefix `x` of `xy` and `whole`
    /// is `xy`.
    pub fn strip_prefix_of(self, whole: Fp) -> u64 {
        let rest = whole.len - self.len;
        sub(whole.hash, mul(self.hash, pow(BASE, rest)))
    }
}

fn pow(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, b);
        }
        b = mul(b, b);
        e >>= 1;
    }
    r
}

pub fn of_symbols(s: &[Symbol]) -> u64 {
    s.iter()
        .fold(Fp::EMPTY, |acc, &c| acc.concat(Fp::symbol(c)))
        .hash
}

/// Substring fingerprints of a run-length encoded string. Positions 0-based.
#[derive(Clone, Debug)]
pub struct RleFingerprints {
    starts: Vec<u64>,
    symbols: Vec<Symbol>,
    prefix: Vec<Fp>,
}

impl RleFingerprints {
    pub fn new(r: &RleString) -> Self {
        let mut starts = vec![0];
        let mut prefix = vec![Fp::EMPTY];
        for run in r.runs() {
            starts.push(starts.last().unwrap() + run.len);
            prefix.push(prefix.last().unwrap().concat(Fp::run(run.symbol, run.len)));
        }
        RleFingerprints {
            starts,
            symbols: r.runs().iter().map(|r| r.symbol).collect(),
            prefix,
        }
    }

    fn prefix(&self, x: u64) -> Fp {
        let u = self.starts.partition_point(|&s| s <= x) - 1;
        if x == self.starts[u] {
            return self.prefix[u];
        }
        self.prefix[u].concat(Fp::run(self.symbols[u], x - self.starts[u]))
    }

    /// Fingerprint of `S[x .. x + len)`.
    pub fn substring(&self, x: u64, len: u64) -> u64 {
        self.prefix(x).strip_prefix_of(self.prefix(x + len))
    }
}

/// Substring fingerprints of the string an SLP represents. Positions 0-based.
#[derive(Clone, Debug)]
pub struct SlpFingerprints<'a> {
    slp: &'a Slp,
    vars: Vec<Fp>,
}

impl<'a> SlpFingerprints<'a> {
    pub fn new(slp: &'a Slp) -> Self {
        let mut vars: Vec<Fp> = Vec::with_capacity(slp.size());
        for rule in slp.rules() {
            vars.push(match *rule {
                SlpRule::Terminal(c) => Fp::symbol(c),
                SlpRule::Pair(l, r) => vars[l].concat(vars[r]),
            });
        }
        SlpFingerprints { slp, vars }
    }

    pub fn var(&self, i: usize) -> Fp {
        self.vars[i]
    }

    /// Fingerprint of the first `x` symbols.
    fn prefix(&self, mut x: u64) -> Fp {
        let mut acc = Fp::EMPTY;
        let mut v = self.slp.start();
        while x > 0 {
            if x == self.slp.var_len(v) {
                return acc.concat(self.vars[v]);
            }
            match self.slp.rule(v) {
                SlpRule::Terminal(_) => unreachable!("prefix length exceeds a terminal"),
                SlpRule::Pair(l, r) => {
                    let ll = self.slp.var_len(l);
                    if x < ll {
                        v = l;
                    } else {
                        acc = acc.concat(self.vars[l]);
                        x -= ll;
                        v = r;
                    }
                }
            }
        }
        acc
    }

    /// Fingerprint of `S[x .. x + len)`.
    pub fn substring(&self, x: u64, len: u64) -> u64 {
        self.prefix(x).strip_prefix_of(self.prefix(x + len))
    }
}

/// Substrings indexed by (length, fingerprint), each stored as its 0-based
/// start in the text together with a value. Lookups take an exact equality
/// test, so a fingerprint collision can never produce a false hit. The first
/// substring under a key is stored inline; colliding ones go to a side map.
pub(crate) struct FpTable<T> {
    first: HashMap<(u64, u64), (u64, T)>,
    more: HashMap<(u64, u64), Vec<(u64, T)>>,
}

impl<T: Copy> FpTable<T> {
    pub(crate) fn new() -> Self {
        FpTable {
            first: HashMap::new(),
            more: HashMap::new(),
        }
    }

    pub(crate) fn insert(&mut self, key: (u64, u64), start: u64, value: T) {
        match self.first.entry(key) {
            Entry::Vacant(e) => {
                e.insert((start, value));
            }
            Entry::Occupied(_) => self.more.entry(key).or_default().push((start, value)),
        }
    }

    /// The value of a stored substring under `key` for which `same(start)`
    /// holds.
    pub(crate) fn find(&self, key: (u64, u64), mut same: impl FnMut(u64) -> bool) -> Option<T> {
        let &(s, v) = self.first.get(&key)?;
        if same(s) {
            return Some(v);
        }
        self.more
            .get(&key)?
            .iter()
            .find(|&&(s, _)| same(s))
            .map(|&(_, v)| v)
    }
}
