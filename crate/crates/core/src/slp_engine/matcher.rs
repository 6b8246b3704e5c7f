use std::collections::HashMap;

use super::progression::{merge, Progression};
use super::OccRepr;
use crate::text_model::{Slp, SlpRule};

/// Pattern matching against one fixed text SLP.
///
/// Pattern variables are hash-consed by structure, so patterns built from
/// pieces of the text (substring SLPs) share their rows with earlier probes.
/// For a pattern variable `p` and text variable `t`, the row entry holds the
/// occurrences of `val(p)` attached to `t`: those crossing the boundary of
/// `t` when `|p| >= 2`, or the single offset 0 when `|p| == 1` and `t` is the
/// same terminal. Offsets are 0-based and relative to the start of `t`.
///
/// All occurrences attached to one variable contain its boundary, so they
/// form one arithmetic progression.
pub struct Matcher<'t> {
    text: &'t Slp,
    pats: Vec<SlpRule>,
    pat_len: Vec<u64>,
    intern: HashMap<SlpRule, usize>,
    rows: Vec<Vec<Option<Progression>>>,
}

impl<'t> Matcher<'t> {
    pub fn new(text: &'t Slp) -> Self {
        Matcher {
            text,
            pats: Vec::new(),
            pat_len: Vec::new(),
            intern: HashMap::new(),
            rows: Vec::new(),
        }
    }

    pub fn text(&self) -> &'t Slp {
        self.text
    }

    /// Interns every rule reachable from the start of `pattern` and returns
    /// the pattern id of its start.
    pub fn import(&mut self, pattern: &Slp) -> usize {
        let n = pattern.size();
        let mut reach = vec![false; n];
        reach[n - 1] = true;
        for i in (0..n).rev() {
            if let (true, SlpRule::Pair(l, r)) = (reach[i], pattern.rule(i)) {
                reach[l] = true;
                reach[r] = true;
            }
        }
        let mut id = vec![usize::MAX; n];
        for i in 0..n {
            if reach[i] {
                id[i] = match pattern.rule(i) {
                    SlpRule::Terminal(c) => self.intern(SlpRule::Terminal(c)),
                    SlpRule::Pair(l, r) => self.intern(SlpRule::Pair(id[l], id[r])),
                };
            }
        }
        id[n - 1]
    }

    /// Pattern id of text variable `t`.
    pub fn import_text_var(&mut self, t: usize) -> usize {
        // text variables below t, in order, so children are interned first
        let mut ids = HashMap::new();
        let mut stack = vec![(t, false)];
        while let Some((v, expanded)) = stack.pop() {
            if ids.contains_key(&v) {
                continue;
            }
            match self.text.rule(v) {
                SlpRule::Terminal(c) => {
                    ids.insert(v, self.intern(SlpRule::Terminal(c)));
                }
                SlpRule::Pair(l, r) if expanded => {
                    let p = self.intern(SlpRule::Pair(ids[&l], ids[&r]));
                    ids.insert(v, p);
                }
                SlpRule::Pair(l, r) => {
                    stack.push((v, true));
                    stack.push((r, false));
                    stack.push((l, false));
                }
            }
        }
        ids[&t]
    }

    pub fn pattern_len(&self, p: usize) -> u64 {
        self.pat_len[p]
    }

    pub fn row(&self, p: usize) -> &[Option<Progression>] {
        &self.rows[p]
    }

    fn intern(&mut self, rule: SlpRule) -> usize {
        if let Some(&p) = self.intern.get(&rule) {
            return p;
        }
        let len = match rule {
            SlpRule::Terminal(_) => 1,
            SlpRule::Pair(a, b) => self.pat_len[a] + self.pat_len[b],
        };
        let row = match rule {
            SlpRule::Terminal(c) => self
                .text
                .rules()
                .iter()
                .map(|r| (*r == SlpRule::Terminal(c)).then(|| Progression::single(0)))
                .collect(),
            SlpRule::Pair(a, b) => (0..self.text.size())
                .map(|t| self.crossing(a, b, len, t))
                .collect(),
        };
        self.pats.push(rule);
        self.pat_len.push(len);
        self.rows.push(row);
        self.intern.insert(rule, self.pats.len() - 1);
        self.pats.len() - 1
    }

    /// Does `val(q)` occur at offset `x` of `val(t)`? Needs `x + |q| <= |t|`.
    pub fn occurs_at(&self, q: usize, mut t: usize, mut x: u64) -> bool {
        let lq = self.pat_len[q];
        debug_assert!(x + lq <= self.text.var_len(t));
        loop {
            match self.text.rule(t) {
                SlpRule::Terminal(_) => return self.rows[q][t].is_some(),
                SlpRule::Pair(l, r) => {
                    let b = self.text.var_len(l);
                    if x + lq <= b {
                        t = l;
                    } else if x >= b {
                        x -= b;
                        t = r;
                    } else {
                        return self.rows[q][t].is_some_and(|p| p.contains(x));
                    }
                }
            }
        }
    }

    /// Occurrences of `val(q)` in `val(t)` starting in `lo..=hi`, a window
    /// no wider than `|q|`.
    fn local(&self, q: usize, mut t: usize, mut lo: u64, mut hi: u64) -> Option<Progression> {
        let lq = self.pat_len[q];
        debug_assert!(hi < lo + lq);
        let mut off = 0;
        let mut parts = Vec::new();
        loop {
            let lt = self.text.var_len(t);
            if lt < lq {
                break;
            }
            hi = hi.min(lt - lq);
            if lo > hi {
                break;
            }
            match self.text.rule(t) {
                SlpRule::Terminal(_) => {
                    if self.rows[q][t].is_some() {
                        parts.push(Progression::single(off));
                    }
                    break;
                }
                SlpRule::Pair(l, r) => {
                    let b = self.text.var_len(l);
                    if let Some(c) = self.rows[q][t].and_then(|p| p.clip(lo, hi)) {
                        parts.push(c.shift_up(off));
                    }
                    if b >= lq && lo <= b - lq {
                        hi = hi.min(b - lq);
                        t = l;
                    } else if hi >= b {
                        lo = lo.max(b) - b;
                        hi -= b;
                        off += b;
                        t = r;
                    } else {
                        break;
                    }
                }
            }
        }
        merge(&parts)
    }

    // Occurrences of val(a)val(b) crossing the boundary of text variable t,
    // split by where that boundary falls inside the pattern.
    fn crossing(&self, a: usize, b: usize, lp: u64, t: usize) -> Option<Progression> {
        let SlpRule::Pair(l, r) = self.text.rule(t) else {
            return None;
        };
        let lt = self.text.var_len(t);
        if lt < lp {
            return None;
        }
        let (la, lb) = (self.pat_len[a], self.pat_len[b]);
        let bnd = self.text.var_len(l);
        let mut parts = Vec::with_capacity(5);

        // boundary strictly inside the left part
        if let Some(ap) = self.rows[a][t] {
            let (k0, kl) = (ap.first, ap.last());
            if ap.count == 1 {
                if k0 + lp <= lt && self.occurs_at(b, t, k0 + la) {
                    parts.push(ap);
                }
            } else {
                // starts whose whole window lies in the periodic stretch all
                // look the same, so one of them decides for all
                if k0 + lb <= kl && self.occurs_at(b, t, k0 + la) {
                    parts.extend(ap.clip(k0, kl - lb));
                }
                let lo_k = k0.max((kl + 1).saturating_sub(lb));
                if let Some(found) = self.local(b, r, lo_k + la - bnd, kl + la - bnd) {
                    if let (Some(tail), true) = (ap.clip(lo_k, kl), found.first + bnd >= la) {
                        parts.extend(found.shift_up(bnd).shift_down(la).intersect(&tail));
                    }
                }
            }
        }

        // boundary strictly inside the right part
        if let Some(ap) = self.rows[b][t] {
            let (j0, jl) = (ap.first, ap.last());
            if ap.count == 1 {
                if j0 >= la && self.occurs_at(a, t, j0 - la) {
                    parts.push(ap.shift_down(la));
                }
            } else {
                if j0 + la <= jl && self.occurs_at(a, t, jl - la) {
                    parts.extend(ap.clip(j0 + la, jl).map(|p| p.shift_down(la)));
                }
                let hi_j = jl.min(j0 + la - 1);
                let lo_j = j0.max(la);
                if lo_j <= hi_j {
                    if let Some(found) = self.local(a, l, lo_j - la, hi_j - la) {
                        if let Some(head) = ap.clip(lo_j, hi_j) {
                            parts.extend(found.intersect(&head.shift_down(la)));
                        }
                    }
                }
            }
        }

        // boundary exactly between the parts
        if bnd >= la && bnd + lb <= lt && self.occurs_at(a, l, bnd - la) && self.occurs_at(b, r, 0)
        {
            parts.push(Progression::single(bnd - la));
        }
        merge(&parts)
    }

    /// Succinct occurrence set of pattern `p` in the whole text.
    pub fn occurrences(&self, p: usize) -> OccRepr {
        OccRepr::new(self.text.clone(), self.pat_len[p], self.rows[p].clone())
    }
}
