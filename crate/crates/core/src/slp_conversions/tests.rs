use proptest::prelude::*;

use super::*;
use crate::reference_codecs::{naive_bisection, naive_lz77, naive_lz78, rle_encode};
use crate::test_support::{chain, figure, slp_strategy};
use crate::text_model::{Lz77Factor, Slp, SlpRule, Symbol, Text};

fn expand(s: &Slp) -> Text {
    s.expand(u64::MAX).unwrap()
}

fn factor_strings(f: &crate::text_model::Lz77Factorization) -> Vec<String> {
    let text = f.expand(u64::MAX).unwrap();
    let mut pos = 0;
    f.factors()
        .iter()
        .map(|x| {
            let piece = Text::new(text[pos..pos + x.len() as usize].to_vec()).to_letters();
            pos += x.len() as usize;
            piece
        })
        .collect()
}

#[test]
fn annotations() {
    let p = Slp::power(Symbol(0), 5);
    let a = annotate_runs(&p);
    for i in 0..=5 {
        assert_eq!((a.plen[i], a.slen[i]), (1 << i, 1 << i));
    }
    let f = figure();
    let a = annotate_runs(&f);
    assert_eq!((a.plen[6], a.slen[6]), (2, 1));
    assert_eq!((a.plen[2], a.slen[2], a.runs[2]), (1, 1, 2));
    assert_eq!(a.runs[6], 10);
}

#[test]
fn rle_examples() {
    let r = slp_to_rle(&figure());
    let pairs: Vec<(u32, u64)> = r.runs().iter().map(|x| (x.symbol.0, x.len)).collect();
    assert_eq!(
        pairs,
        [
            (0, 2),
            (1, 1),
            (0, 1),
            (1, 1),
            (0, 2),
            (1, 1),
            (0, 1),
            (1, 1),
            (0, 2),
            (1, 1)
        ]
    );
    let r = slp_to_rle(&Slp::power(Symbol(0), 30));
    assert_eq!(r.runs(), [crate::text_model::Run::new(Symbol(0), 1 << 30)]);
    assert_eq!(slp_to_rle(&chain("ab")).size(), 2);
}

#[test]
fn lz77_examples() {
    assert_eq!(
        factor_strings(&slp_to_lz77(&figure(), false)),
        ["a", "a", "b", "ab", "aabab", "aab"]
    );
    assert_eq!(
        factor_strings(&slp_to_lz77(&chain("aaabbaaa"), true)),
        ["a", "aa", "b", "b", "aaa"]
    );
    let f = slp_to_lz77(&Slp::power(Symbol(0), 20), true);
    assert_eq!(
        f.factors(),
        [
            Lz77Factor::Literal(Symbol(0)),
            Lz77Factor::Reference {
                src: 1,
                len: (1 << 20) - 1
            }
        ]
    );
}

#[test]
fn lz78_examples() {
    let f = slp_to_lz78(&figure());
    assert_eq!(f, naive_lz78(&expand(&figure())));
    assert_eq!(f.factor_lens(), [1, 1, 1, 2, 2, 2, 2, 2]);
    assert_eq!(slp_to_lz78(&chain("b")).size(), 1);
    for k in [0, 3, 7, 10] {
        let p = Slp::power(Symbol(0), k);
        assert_eq!(slp_to_lz78(&p), naive_lz78(&expand(&p)), "a^(2^{k})");
    }
}

#[test]
fn bisection_examples() {
    for s in ["aaaaaa", "ab", "b", "aabbaabb"] {
        assert_eq!(
            slp_to_bisection(&chain(s)),
            naive_bisection(&Text::from_letters(s)).unwrap(),
            "{s}"
        );
    }
    let g = slp_to_bisection(&Slp::power(Symbol(0), 10));
    assert_eq!(g.num_vars(), 10);
    for (i, rhs) in g.rules().iter().enumerate().skip(1) {
        let v = crate::text_model::GrammarSymbol::Var(crate::text_model::VarId(i - 1));
        assert_eq!(rhs, &[v, v]);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn rle_matches_encoding(s in slp_strategy(4096)) {
        let r = slp_to_rle(&s);
        prop_assert_eq!(r.len(), s.len());
        prop_assert!(r.runs().windows(2).all(|w| w[0].symbol != w[1].symbol));
        prop_assert_eq!(r, rle_encode(&expand(&s)));
    }

    #[test]
    fn links_follow_their_definition(s in slp_strategy(512)) {
        let a = annotate_runs(&s);
        for i in 0..s.size() {
            let t = s.var_string(i);
            let run = |v: &[Symbol]| v.iter().take_while(|&&c| c == v[0]).count() as u64;
            let rev: Vec<Symbol> = t.iter().rev().copied().collect();
            prop_assert_eq!(a.plen[i], run(&t));
            prop_assert_eq!(a.slen[i], run(&rev));
            prop_assert_eq!(a.runs[i], rle_encode(&t).size() as u64);
            // walk the leftmost path to the first rule whose suffix run fits its right child
            let mut v = i;
            let expect = loop {
                match s.rule(v) {
                    SlpRule::Terminal(_) => break None,
                    SlpRule::Pair(_, r) if a.slen[v] <= s.var_len(r) => break Some(v),
                    SlpRule::Pair(l, _) => v = l,
                }
            };
            prop_assert_eq!(a.llink[i], expect);
        }
    }

    #[test]
    fn lz_matches_plain_codecs(s in slp_strategy(1024)) {
        let t = expand(&s);
        prop_assert_eq!(slp_to_lz77(&s, true), naive_lz77(&t, true));
        prop_assert_eq!(slp_to_lz77(&s, false), naive_lz77(&t, false));
        prop_assert_eq!(slp_to_lz78(&s), naive_lz78(&t));
    }

    #[test]
    fn bisection_matches_plain_codec(s in slp_strategy(1024)) {
        prop_assert_eq!(slp_to_bisection(&s), naive_bisection(&expand(&s)).unwrap());
    }
}
