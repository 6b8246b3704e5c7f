use crate::fingerprint::{FpTable, RleFingerprints};
use crate::suffix_structures::RunText;
use crate::text_model::{Lz78Factor, Lz78Factorization, RleString};

/// Greedy LZ78 of the expansion of `r`, same factors as the plain codec.
///
/// Every dictionary entry is a substring of the text (an entry is a factor
/// plus the symbol after it), so each is kept as a source interval and
/// looked up by (length, fingerprint). Hits are confirmed with an LCE query.
/// Single symbols need no lookup. The dictionary is closed under prefixes,
/// so the longest match is found by binary search on its length.
pub fn rle_to_lz78(r: &RleString) -> Lz78Factorization {
    let mut factors = Vec::new();
    if r.is_empty() {
        return Lz78Factorization::new(factors).unwrap();
    }
    let text = RunText::new(r);
    let fp = RleFingerprints::new(r);
    let n = text.len();
    let mut dict = FpTable::new();
    let mut longest = 1;
    let mut prev: Option<(u64, u64)> = None;
    let mut pos = 0;
    while pos < n {
        if let Some((s, l)) = prev {
            dict.insert((l + 1, fp.substring(s, l + 1)), s, factors.len());
            longest = longest.max(l + 1);
        }
        let find = |len: u64| dict.find((len, fp.substring(pos, len)), |s| text.lce(s, pos) >= len);
        let (mut lo, mut hi) = (1, longest.min(n - pos));
        let (u, _) = text.locate(pos);
        let mut label = Lz78Factor::Symbol(r.runs()[u].symbol);
        while lo < hi {
            let mid = lo + (hi - lo).div_ceil(2);
            match find(mid) {
                Some(k) => (lo, label) = (mid, Lz78Factor::Entry(k)),
                None => hi = mid - 1,
            }
        }
        factors.push(label);
        prev = Some((pos, lo));
        pos += lo;
    }
    Lz78Factorization::new(factors).expect("greedy factors are valid")
}
