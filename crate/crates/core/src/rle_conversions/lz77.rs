use std::collections::HashMap;

use crate::suffix_structures::RunText;
use crate::text_model::{Lz77Factor, Lz77Factorization, RleString, Symbol};

/// Greedy LZ77 of the expansion of `r`, same factors as the plain codec.
///
/// At a position with `rem` symbols left in its run, a longest earlier match
/// starts either at the beginning of an earlier run of the same symbol, or
/// `rem` symbols before the end of such a run so the match can continue into
/// the runs that follow. Inside the current run, its own start dominates
/// every other source. Each candidate costs one LCE query.
pub fn rle_to_lz77(r: &RleString, self_ref: bool) -> Lz77Factorization {
    let mut factors = Vec::new();
    if r.is_empty() {
        return Lz77Factorization::new(self_ref, factors).unwrap();
    }
    let text = RunText::new(r);
    let runs = r.runs();
    let mut by_symbol: HashMap<Symbol, Vec<usize>> = HashMap::new();
    for (u, run) in runs.iter().enumerate() {
        by_symbol.entry(run.symbol).or_default().push(u);
    }
    let n = text.len();
    let mut pos = 0;
    let mut emitted = 0;
    while pos < n {
        let (u, q) = text.locate(pos);
        let run = runs[u];
        let rem = run.len - q;
        // (length, source), longest first and leftmost among equals
        let mut best = (0u64, 0u64);
        let mut consider = |src: u64| {
            let mut l = text.lce(src, pos);
            if !self_ref {
                l = l.min(pos - src);
            }
            if l > best.0 || (l == best.0 && l > 0 && src < best.1) {
                best = (l, src);
            }
        };
        for &j in by_symbol[&run.symbol].iter().take_while(|&&j| j < u) {
            let (s, p) = (text.run_start(j), runs[j].len);
            consider(s);
            if p > rem {
                consider(s + p - rem);
            }
        }
        if q > 0 {
            consider(text.run_start(u));
        }
        match best {
            (0, _) => {
                factors.push(Lz77Factor::Literal(run.symbol));
                pos += 1;
            }
            (len, src) => {
                factors.push(Lz77Factor::Reference { src: src + 1, len });
                pos += len;
            }
        }
        emitted += factors.last().unwrap().len();
        debug_assert_eq!(emitted, pos);
    }
    Lz77Factorization::new(self_ref, factors).expect("greedy factors are valid")
}
