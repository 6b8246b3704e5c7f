use super::progression::Progression;
use crate::text_model::{Slp, SlpRule};

/// All occurrences of a pattern in a text SLP, stored as one progression per
/// text variable (see [`Matcher`](super::Matcher)). Every node of the
/// derivation tree contributes its variable's progression shifted to the
/// node's position, so the set is implicit and never enumerated unless asked.
///
/// Public positions are 1-based.
#[derive(Clone, Debug)]
pub struct OccRepr {
    text: Slp,
    pattern_len: u64,
    attached: Vec<Option<Progression>>,
    firsts: Vec<Option<u64>>,
    vocc: Vec<u64>,
}

impl OccRepr {
    pub(crate) fn new(text: Slp, pattern_len: u64, attached: Vec<Option<Progression>>) -> Self {
        let n = text.size();
        let mut firsts = vec![None; n];
        for t in 0..n {
            firsts[t] = match text.rule(t) {
                SlpRule::Terminal(_) => attached[t].map(|p| p.first),
                SlpRule::Pair(l, r) => firsts[l]
                    .or(attached[t].map(|p| p.first))
                    .or(firsts[r].map(|f| f + text.var_len(l))),
            };
        }
        let mut vocc = vec![0u64; n];
        vocc[n - 1] = 1;
        for t in (0..n).rev() {
            if let SlpRule::Pair(l, r) = text.rule(t) {
                vocc[l] += vocc[t];
                vocc[r] += vocc[t];
            }
        }
        OccRepr {
            text,
            pattern_len,
            attached,
            firsts,
            vocc,
        }
    }

    pub fn pattern_len(&self) -> u64 {
        self.pattern_len
    }

    /// Occurrences attached to text variable `t` (0-based), as offsets from
    /// the start of `val(t)`.
    pub fn attached(&self, t: usize) -> Option<Progression> {
        self.attached[t]
    }

    pub fn count(&self) -> u64 {
        self.attached
            .iter()
            .zip(&self.vocc)
            .map(|(p, &v)| p.map_or(0, |p| p.count) * v)
            .sum()
    }

    pub fn is_empty(&self) -> bool {
        self.min_start().is_none()
    }

    /// Whether an occurrence starts at position `k`.
    pub fn contains(&self, k: u64) -> bool {
        let m = self.pattern_len;
        if k == 0 || k - 1 + m > self.text.len() {
            return false;
        }
        let (mut t, mut x) = (self.text.start(), k - 1);
        loop {
            match self.text.rule(t) {
                SlpRule::Terminal(_) => return self.attached[t].is_some(),
                SlpRule::Pair(l, r) => {
                    let b = self.text.var_len(l);
                    if x + m <= b {
                        t = l;
                    } else if x >= b {
                        x -= b;
                        t = r;
                    } else {
                        return self.attached[t].is_some_and(|p| p.contains(x));
                    }
                }
            }
        }
    }

    pub fn min_start(&self) -> Option<u64> {
        self.firsts[self.text.start()].map(|f| f + 1)
    }

    /// Smallest start `>= lo`.
    pub fn next_start(&self, lo: u64) -> Option<u64> {
        let m = self.pattern_len;
        let mut pending = Vec::new();
        let (mut t, mut off, mut lo) = (self.text.start(), 0u64, lo.saturating_sub(1));
        loop {
            let lt = self.text.var_len(t);
            if lt < m || lo > lt - m {
                break;
            }
            if lo == 0 {
                if let Some(f) = self.firsts[t] {
                    return Some(off + f + 1);
                }
                break;
            }
            match self.text.rule(t) {
                SlpRule::Terminal(_) => break,
                SlpRule::Pair(l, r) => {
                    let b = self.text.var_len(l);
                    if lo >= b {
                        off += b;
                        lo -= b;
                        t = r;
                    } else {
                        pending.push((t, off, lo));
                        t = l;
                    }
                }
            }
        }
        // the left child had nothing: try the boundary, then the right child
        while let Some((t, off, lo)) = pending.pop() {
            if let Some(x) = self.attached[t].and_then(|p| p.first_at_least(lo)) {
                return Some(off + x + 1);
            }
            if let SlpRule::Pair(l, r) = self.text.rule(t) {
                if let Some(f) = self.firsts[r] {
                    return Some(off + self.text.var_len(l) + f + 1);
                }
            }
        }
        None
    }

    /// Some occurrence starts in `a..=b`.
    pub fn exists_start_in(&self, a: u64, b: u64) -> bool {
        self.next_start(a).is_some_and(|k| k <= b)
    }

    /// Some occurrence lies entirely in `a..=b`.
    pub fn exists_fully_within(&self, a: u64, b: u64) -> bool {
        match (b + 1).checked_sub(self.pattern_len) {
            Some(last) => self.exists_start_in(a, last),
            None => false,
        }
    }

    /// Every start, ascending. Proportional to the number of occurrences.
    pub fn starts(&self) -> Vec<u64> {
        let m = self.pattern_len;
        let mut out = Vec::new();
        // (variable, offset, visit boundary and right child next)
        let mut stack = vec![(self.text.start(), 0u64, false)];
        while let Some((t, off, second)) = stack.pop() {
            if self.text.var_len(t) < m || self.firsts[t].is_none() {
                continue;
            }
            match self.text.rule(t) {
                SlpRule::Terminal(_) => out.push(off + 1),
                SlpRule::Pair(l, r) if second => {
                    if let Some(p) = self.attached[t] {
                        out.extend(p.iter().map(|x| off + x + 1));
                    }
                    stack.push((r, off + self.text.var_len(l), false));
                }
                SlpRule::Pair(l, _) => {
                    stack.push((t, off, true));
                    stack.push((l, off, false));
                }
            }
        }
        out
    }
}
