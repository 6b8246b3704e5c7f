//! Random access, substring extraction, equality and pattern matching on
//! SLPs, all without expanding them.

mod matcher;
mod occ;
mod progression;

pub use matcher::Matcher;
pub use occ::OccRepr;
pub use progression::Progression;

use crate::text_model::{Slp, SlpRule, Symbol};

/// A 1-based position or range outside the represented string.
#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
#[error("range {i}..={j} is outside 1..={len}")]
pub struct OutOfRange {
    pub i: u64,
    pub j: u64,
    pub len: u64,
}

/// The 1-based `i`-th symbol, in `O(height)` steps.
pub fn char_at(s: &Slp, i: u64) -> Result<Symbol, OutOfRange> {
    if i == 0 || i > s.len() {
        return Err(OutOfRange {
            i,
            j: i,
            len: s.len(),
        });
    }
    let (mut v, mut x) = (s.start(), i - 1);
    loop {
        match s.rule(v) {
            SlpRule::Terminal(c) => return Ok(c),
            SlpRule::Pair(l, r) => {
                let b = s.var_len(l);
                if x < b {
                    v = l;
                } else {
                    x -= b;
                    v = r;
                }
            }
        }
    }
}

/// An SLP for `S[i:j]` (1-based, inclusive) of size at most `3n + 1`.
///
/// The original rules are kept; the two root-to-boundary paths contribute one
/// new rule per level, joined by one more. Unreachable rules are then dropped.
pub fn substring_slp(s: &Slp, i: u64, j: u64) -> Result<Slp, OutOfRange> {
    if i == 0 || j < i || j > s.len() {
        return Err(OutOfRange { i, j, len: s.len() });
    }
    let mut rules = s.rules().to_vec();
    let (mut v, mut x, mut y) = (s.start(), i - 1, j);
    let root = loop {
        if x == 0 && y == s.var_len(v) {
            break v;
        }
        let SlpRule::Pair(l, r) = s.rule(v) else {
            unreachable!("a terminal is always covered whole")
        };
        let b = s.var_len(l);
        if y <= b {
            v = l;
        } else if x >= b {
            x -= b;
            y -= b;
            v = r;
        } else {
            let left = suffix(s, &mut rules, l, x);
            let right = prefix(s, &mut rules, r, y - b);
            rules.push(SlpRule::Pair(left, right));
            break rules.len() - 1;
        }
    };
    Ok(restrict(&rules, root))
}

// Variable for val(v)[x..], appending rules as needed.
fn suffix(s: &Slp, rules: &mut Vec<SlpRule>, mut v: usize, mut x: u64) -> usize {
    let mut right = Vec::new();
    while x > 0 {
        let SlpRule::Pair(l, r) = s.rule(v) else {
            unreachable!()
        };
        let b = s.var_len(l);
        if x >= b {
            x -= b;
            v = r;
        } else {
            right.push(r);
            v = l;
        }
    }
    for &r in right.iter().rev() {
        rules.push(SlpRule::Pair(v, r));
        v = rules.len() - 1;
    }
    v
}

// Variable for val(v)[..y], appending rules as needed.
fn prefix(s: &Slp, rules: &mut Vec<SlpRule>, mut v: usize, mut y: u64) -> usize {
    let mut left = Vec::new();
    while y < s.var_len(v) {
        let SlpRule::Pair(l, r) = s.rule(v) else {
            unreachable!()
        };
        let b = s.var_len(l);
        if y <= b {
            v = l;
        } else {
            left.push(l);
            y -= b;
            v = r;
        }
    }
    for &l in left.iter().rev() {
        rules.push(SlpRule::Pair(l, v));
        v = rules.len() - 1;
    }
    v
}

// Keeps the rules reachable from `root`, renumbered in their original order.
fn restrict(rules: &[SlpRule], root: usize) -> Slp {
    let mut reach = vec![false; root + 1];
    reach[root] = true;
    for i in (0..=root).rev() {
        if let (true, SlpRule::Pair(l, r)) = (reach[i], rules[i]) {
            reach[l] = true;
            reach[r] = true;
        }
    }
    let mut id = vec![usize::MAX; root + 1];
    let mut out = Vec::new();
    for i in 0..=root {
        if reach[i] {
            id[i] = out.len();
            out.push(match rules[i] {
                SlpRule::Pair(l, r) => SlpRule::Pair(id[l], id[r]),
                t => t,
            });
        }
    }
    Slp::new(out).expect("restriction keeps children before parents")
}

/// Succinct representation of every occurrence of `val(pattern)` in `val(text)`.
pub fn occurrences(text: &Slp, pattern: &Slp) -> OccRepr {
    let mut m = Matcher::new(text);
    let p = m.import(pattern);
    m.occurrences(p)
}

/// Whether two SLPs represent the same string: equal lengths and an
/// occurrence of one at position 1 of the other.
pub fn slp_equals(a: &Slp, b: &Slp) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut m = Matcher::new(a);
    let p = m.import(b);
    m.occurs_at(p, a.start(), 0)
}

/// Whether `val(pattern)` occurs in `val(text)` at 1-based position `pos`.
pub fn prefix_match(text: &Slp, pos: u64, pattern: &Slp) -> Result<bool, OutOfRange> {
    let end = pos.saturating_add(pattern.len() - 1);
    if pos == 0 || end > text.len() {
        return Err(OutOfRange {
            i: pos,
            j: end,
            len: text.len(),
        });
    }
    let mut m = Matcher::new(text);
    let p = m.import(pattern);
    Ok(m.occurs_at(p, text.start(), pos - 1))
}
