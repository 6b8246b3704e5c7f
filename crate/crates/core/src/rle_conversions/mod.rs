//! Conversions from a run-length encoding that never expand it.
//!
//! Positions are tracked as 0-based absolute offsets; [`RunText::locate`]
//! recovers the run and the offset inside it.
//!
//! [`RunText::locate`]: crate::suffix_structures::RunText::locate

mod bisection;
mod lz77;
mod lz78;
mod repair;

pub use bisection::rle_to_bisection;
pub use lz77::rle_to_lz77;
pub use lz78::rle_to_lz78;
pub use repair::rle_to_repair;

use std::collections::HashMap;

use crate::text_model::{RleString, Slp, SlpRule, Symbol};

/// An SLP for the expansion of `r` with `O(m log N)` rules: each run `c^p`
/// is assembled from doubling chains `c, c^2, c^4, ...` shared between runs
/// of the same symbol, and the runs are joined left to right.
///
/// Returns `None` for the empty string, which no SLP derives.
pub fn rle_to_slp(r: &RleString) -> Option<Slp> {
    let mut rules = Vec::new();
    let mut powers: HashMap<Symbol, Vec<usize>> = HashMap::new();
    let mut acc: Option<usize> = None;
    for run in r.runs() {
        let chain = powers.entry(run.symbol).or_insert_with(|| {
            rules.push(SlpRule::Terminal(run.symbol));
            vec![rules.len() - 1]
        });
        let top = 63 - run.len.leading_zeros() as usize;
        while chain.len() <= top {
            let last = *chain.last().unwrap();
            rules.push(SlpRule::Pair(last, last));
            chain.push(rules.len() - 1);
        }
        let mut v = chain[top];
        for k in (0..top).rev().filter(|&k| run.len >> k & 1 == 1) {
            rules.push(SlpRule::Pair(v, chain[k]));
            v = rules.len() - 1;
        }
        acc = Some(match acc {
            None => v,
            Some(a) => {
                rules.push(SlpRule::Pair(a, v));
                rules.len() - 1
            }
        });
    }
    acc.map(|_| Slp::new(rules).expect("children are created first"))
}

#[cfg(test)]
mod tests;
