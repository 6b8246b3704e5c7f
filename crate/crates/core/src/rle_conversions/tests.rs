use proptest::prelude::*;

use super::*;
use crate::reference_codecs::{naive_bisection, naive_lz77, naive_lz78, naive_repair, rle_encode};
use crate::text_model::{canonical_relabel, Lz77Factor, RleString, Symbol, Text};

fn rle(s: &str) -> RleString {
    rle_encode(&Text::from_letters(s))
}

fn lz77_strings(r: &RleString, self_ref: bool) -> Vec<String> {
    let f = rle_to_lz77(r, self_ref);
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
fn repair_examples() {
    for s in ["abab", "aaaa", "aabaab"] {
        assert_eq!(
            rle_to_repair(&rle(s)).unwrap(),
            naive_repair(&Text::from_letters(s)).unwrap().0,
            "{s}"
        );
    }
    assert_eq!(rle_to_repair(&rle("aabaab")).unwrap().size(), 6);
    assert!(rle_to_repair(&RleString::new(vec![]).unwrap()).is_err());
}

#[test]
fn lz77_examples() {
    let r = rle("aaabbaaa");
    assert_eq!(lz77_strings(&r, true), ["a", "aa", "b", "b", "aaa"]);
    assert_eq!(lz77_strings(&r, false), ["a", "a", "a", "b", "b", "aaa"]);
    let big = RleString::from_pairs(&[(0, 1 << 20)]).unwrap();
    let f = rle_to_lz77(&big, true);
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
    let lens = |s: &str| rle_to_lz78(&rle(s)).factor_lens().to_vec();
    assert_eq!(lens("aaaa"), [1, 2, 1]);
    assert_eq!(lens("ab"), [1, 1]);
    let fig = rle("aababaababaab");
    assert_eq!(fig.size(), 10);
    assert_eq!(
        rle_to_lz78(&fig),
        naive_lz78(&Text::from_letters("aababaababaab"))
    );
    assert_eq!(rle_to_lz78(&fig).size(), 8);
}

#[test]
fn bisection_examples() {
    for s in ["aaaaaa", "ab", "aabbaabb", "a"] {
        assert_eq!(
            rle_to_bisection(&rle(s)).unwrap(),
            naive_bisection(&Text::from_letters(s)).unwrap(),
            "{s}"
        );
    }
    assert_eq!(rle_to_bisection(&rle("aaaaaa")).unwrap().num_vars(), 3);
    // aabb, its halves, and the root
    assert_eq!(rle_to_bisection(&rle("aabbaabb")).unwrap().num_vars(), 4);
}

#[test]
fn huge_runs_stay_compressed() {
    let r = RleString::from_pairs(&[(0, 1 << 30), (1, 1 << 30)]).unwrap();
    assert_eq!(rle_to_lz77(&r, true).size(), 4);
    assert_eq!(rle_to_lz77(&r, false).len(), 1 << 31);
    assert_eq!(rle_to_bisection(&r).unwrap().len(), 1 << 31);
    assert_eq!(rle_to_repair(&r).unwrap().len(), 1 << 31);
}

#[test]
fn slp_of_runs() {
    let r = RleString::from_pairs(&[(0, 1 << 40), (1, 5), (0, 3)]).unwrap();
    let s = rle_to_slp(&r).unwrap();
    assert_eq!(s.len(), (1 << 40) + 8);
    assert!(s.size() < 60);
    assert!(rle_to_slp(&RleString::new(vec![]).unwrap()).is_none());
}

fn text_strategy() -> impl Strategy<Value = Vec<Symbol>> {
    // long runs come from repeating each drawn symbol
    proptest::collection::vec((0u32..3, 1usize..6), 1..40).prop_map(|v| {
        v.into_iter()
            .flat_map(|(c, k)| std::iter::repeat_n(Symbol(c), k))
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn lz_conversions_match_plain_codecs(t in text_strategy()) {
        let r = rle_encode(&t);
        prop_assert_eq!(rle_to_lz77(&r, true), naive_lz77(&t, true));
        prop_assert_eq!(rle_to_lz77(&r, false), naive_lz77(&t, false));
        prop_assert_eq!(rle_to_lz78(&r), naive_lz78(&t));
        prop_assert_eq!(rle_to_slp(&r).unwrap().expand(u64::MAX).unwrap().into_inner(), t);
    }

    #[test]
    fn grammar_conversions_match_plain_codecs(t in text_strategy()) {
        let r = rle_encode(&t);
        let (repair, _) = naive_repair(&t).unwrap();
        let got = rle_to_repair(&r).unwrap();
        prop_assert_eq!(canonical_relabel(&got), canonical_relabel(&repair));
        prop_assert_eq!(got, repair);
        prop_assert_eq!(rle_to_bisection(&r).unwrap(), naive_bisection(&t).unwrap());
    }
}
