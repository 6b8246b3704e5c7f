use crate::text_model::{RleString, Run, Slp, SlpRule, Symbol};

/// Per-variable run summaries, all 0-based variable ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunLinkAnnotations {
    /// Length of the maximal run that is a prefix of the variable.
    pub plen: Vec<u64>,
    /// Length of the maximal run that is a suffix of the variable.
    pub slen: Vec<u64>,
    pub first: Vec<Symbol>,
    pub last: Vec<Symbol>,
    /// Number of maximal runs in the expansion.
    pub runs: Vec<u64>,
    /// Shallowest pair rule on the leftmost path (the variable itself
    /// included) whose suffix run fits inside its right child.
    pub llink: Vec<Option<usize>>,
    /// Mirror image of `llink` on the rightmost path.
    pub rlink: Vec<Option<usize>>,
    /// The variable whose interior runs equal this one's, found by skipping
    /// rules that contribute nothing of their own.
    settle: Vec<usize>,
}

pub fn annotate_runs(s: &Slp) -> RunLinkAnnotations {
    let n = s.size();
    let mut a = RunLinkAnnotations {
        plen: vec![0; n],
        slen: vec![0; n],
        first: vec![Symbol(0); n],
        last: vec![Symbol(0); n],
        runs: vec![0; n],
        llink: vec![None; n],
        rlink: vec![None; n],
        settle: (0..n).collect(),
    };
    for i in 0..n {
        match s.rule(i) {
            SlpRule::Terminal(c) => {
                (a.plen[i], a.slen[i], a.first[i], a.last[i], a.runs[i]) = (1, 1, c, c, 1);
            }
            SlpRule::Pair(l, r) => {
                let joined = a.last[l] == a.first[r];
                a.first[i] = a.first[l];
                a.last[i] = a.last[r];
                a.plen[i] = if joined && a.runs[l] == 1 {
                    a.plen[l] + a.plen[r]
                } else {
                    a.plen[l]
                };
                a.slen[i] = if joined && a.runs[r] == 1 {
                    a.slen[l] + a.slen[r]
                } else {
                    a.slen[r]
                };
                a.runs[i] = a.runs[l] + a.runs[r] - joined as u64;
                a.llink[i] = if a.slen[i] <= s.var_len(r) {
                    Some(i)
                } else {
                    a.llink[l]
                };
                a.rlink[i] = if a.plen[i] <= s.var_len(l) {
                    Some(i)
                } else {
                    a.rlink[r]
                };
                if joined && a.runs[l] == 1 {
                    a.settle[i] = a.settle[r];
                } else if joined && a.runs[r] == 1 {
                    a.settle[i] = a.settle[l];
                }
            }
        }
    }
    a
}

/// The run-length encoding of `val(s)`, in time linear in the SLP size plus
/// the number of runs.
///
/// The interior of a variable (its runs minus the first and the last) is the
/// left child's interior, the runs meeting at the seam, then the right
/// child's interior. Only children with a nonempty interior are visited, and
/// each visit emits at least one run.
pub fn slp_to_rle(s: &Slp) -> RleString {
    let a = annotate_runs(s);
    let root = s.start();
    if a.runs[root] == 1 {
        return RleString::new(vec![Run::new(a.first[root], s.len())]).unwrap();
    }
    enum Work {
        Emit(Symbol, u64),
        Interior(usize),
    }
    let mut out = vec![Run::new(a.first[root], a.plen[root])];
    let mut stack = vec![Work::Emit(a.last[root], a.slen[root]), Work::Interior(root)];
    while let Some(w) = stack.pop() {
        let v = match w {
            Work::Emit(c, p) => {
                out.push(Run::new(c, p));
                continue;
            }
            Work::Interior(v) if a.runs[v] < 3 => continue,
            Work::Interior(v) => a.settle[v],
        };
        let SlpRule::Pair(l, r) = s.rule(v) else {
            unreachable!("a terminal has one run")
        };
        let (left, right) = (a.runs[l] >= 2, a.runs[r] >= 2);
        // pushed in reverse
        stack.push(Work::Interior(r));
        if a.last[l] == a.first[r] {
            debug_assert!(left && right);
            stack.push(Work::Emit(a.first[r], a.slen[l] + a.plen[r]));
        } else {
            if right {
                stack.push(Work::Emit(a.first[r], a.plen[r]));
            }
            if left {
                stack.push(Work::Emit(a.last[l], a.slen[l]));
            }
        }
        stack.push(Work::Interior(l));
    }
    RleString::new(out).expect("runs meet only at symbol changes")
}
