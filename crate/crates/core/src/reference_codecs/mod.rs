//! Compressors that work on the uncompressed text.
//!
//! These are deliberately simple and serve as the ground truth the
//! conversions are compared with.

mod bisection;
mod lz;
mod repair;

use std::collections::HashMap;

use crate::text_model::{Grammar, GrammarSymbol, RleString, Run, Slp, SlpRule, Symbol};

pub use bisection::naive_bisection;
pub use lz::{naive_lz77, naive_lz78};
pub use repair::{naive_repair, RepairTrace, TIE_BREAK};

pub(crate) use bisection::split_point;
pub(crate) use repair::best_bigram;

/// Maximal runs of `text`.
pub fn rle_encode(text: &[Symbol]) -> RleString {
    let mut runs: Vec<Run> = Vec::new();
    for &c in text {
        match runs.last_mut() {
            Some(r) if r.symbol == c => r.len += 1,
            _ => runs.push(Run::new(c, 1)),
        }
    }
    RleString::new(runs).expect("maximal runs are valid")
}

/// Chomsky normal form of `g`: one terminal rule per distinct terminal (in
/// order of first appearance along the derivation), then every right-hand
/// side folded left to right into binary rules. Unit rules become aliases.
pub fn grammar_to_slp(g: &Grammar) -> Slp {
    let order = g.topological_order();
    let mut rules = Vec::new();
    let mut term_id: HashMap<Symbol, usize> = HashMap::new();
    for &v in order {
        for item in &g.rules()[v] {
            if let GrammarSymbol::Terminal(c) = *item {
                term_id.entry(c).or_insert_with(|| {
                    rules.push(SlpRule::Terminal(c));
                    rules.len() - 1
                });
            }
        }
    }
    let mut var_id = vec![usize::MAX; g.num_vars()];
    for &v in order {
        let id = |item: &GrammarSymbol| match *item {
            GrammarSymbol::Terminal(c) => term_id[&c],
            GrammarSymbol::Var(x) => var_id[x.0],
        };
        let rhs = &g.rules()[v];
        let mut acc = id(&rhs[0]);
        for item in &rhs[1..] {
            rules.push(SlpRule::Pair(acc, id(item)));
            acc = rules.len() - 1;
        }
        var_id[v] = acc;
    }
    debug_assert_eq!(var_id[g.start().0], rules.len() - 1);
    Slp::new(rules).expect("binarization keeps children before parents")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
#[error("compressed sizes must be positive")]
pub struct ZeroSize;

/// Normalized compression distance from the three compressed sizes.
pub fn ncd(cxy: usize, cx: usize, cy: usize) -> Result<f64, ZeroSize> {
    if cxy == 0 || cx == 0 || cy == 0 {
        return Err(ZeroSize);
    }
    let (lo, hi) = (cx.min(cy) as f64, cx.max(cy) as f64);
    Ok((cxy as f64 - lo) / hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text_model::{Text, VarId};

    fn letters(s: &str) -> Vec<Symbol> {
        Text::from_letters(s).into_inner()
    }

    fn runs(r: &RleString) -> Vec<(char, u64)> {
        r.runs()
            .iter()
            .map(|r| ((b'a' + r.symbol.0 as u8) as char, r.len))
            .collect()
    }

    #[test]
    fn rle_of_short_example() {
        let r = rle_encode(&letters("abbaaacaa"));
        assert_eq!(runs(&r), [('a', 1), ('b', 2), ('a', 3), ('c', 1), ('a', 2)]);
        assert!(rle_encode(&[]).is_empty());
    }

    #[test]
    fn rle_of_figure_string() {
        let r = rle_encode(&letters("aababaababaab"));
        let expect = [
            ('a', 2),
            ('b', 1),
            ('a', 1),
            ('b', 1),
            ('a', 2),
            ('b', 1),
            ('a', 1),
            ('b', 1),
            ('a', 2),
            ('b', 1),
        ];
        assert_eq!(runs(&r), expect);
    }

    #[test]
    fn ternary_rule_binarizes_left() {
        let t = |c: u32| GrammarSymbol::Terminal(Symbol(c));
        let g = Grammar::new(vec![vec![t(0), t(1), t(2)]]).unwrap();
        let s = grammar_to_slp(&g);
        use SlpRule::*;
        assert_eq!(
            s.rules(),
            &[
                Terminal(Symbol(0)),
                Terminal(Symbol(1)),
                Terminal(Symbol(2)),
                Pair(0, 1),
                Pair(3, 2)
            ]
        );
    }

    #[test]
    fn binary_grammar_keeps_its_shape() {
        let t = |c: u32| GrammarSymbol::Terminal(Symbol(c));
        let v = |i: usize| GrammarSymbol::Var(VarId(i));
        let g = Grammar::new(vec![vec![t(0), t(1)], vec![v(0), v(0)]]).unwrap();
        let s = grammar_to_slp(&g);
        assert_eq!(s.size(), 4);
        assert_eq!(s.expand(10).unwrap().to_letters(), "abab");
    }

    #[test]
    fn repair_output_binarizes_to_same_string() {
        let text = letters("aabaab");
        let (g, _) = naive_repair(&text).unwrap();
        let s = grammar_to_slp(&g);
        assert_eq!(s.expand(100).unwrap().into_inner(), text);
        assert!(s.size() <= 2 * g.size());
    }

    #[test]
    fn unit_start_rule_aliases() {
        let (g, _) = naive_repair(&letters("aa")).unwrap();
        let s = grammar_to_slp(&g);
        assert_eq!(s.expand(10).unwrap().to_letters(), "aa");
    }

    #[test]
    fn ncd_arithmetic() {
        assert_eq!(ncd(7, 7, 7), Ok(0.0));
        assert_eq!(ncd(10, 4, 6), Ok(1.0));
        assert_eq!(ncd(0, 4, 6), Err(ZeroSize));
    }
}
