use crate::fingerprint::{FpTable, SlpFingerprints};
use crate::slp_engine::{char_at, substring_slp, Matcher};
use crate::text_model::{Lz77Factor, Lz77Factorization, Lz78Factor, Lz78Factorization, Slp};

/// Greedy LZ77 of `val(s)`, same factors as the plain codec.
///
/// The factor length at each position is found by galloping and then binary
/// search. A probe builds the SLP of the candidate factor and asks the
/// occurrence structure whether it occurs inside the already factorized
/// prefix (wholly, or just starting there when self-references are allowed).
/// The source is the leftmost occurrence.
pub fn slp_to_lz77(s: &Slp, self_ref: bool) -> Lz77Factorization {
    let n = s.len();
    let mut m = Matcher::new(s);
    let mut factors = Vec::new();
    let mut pos = 0u64;
    while pos < n {
        let mut probe = Probe {
            m: &mut m,
            s,
            pos,
            self_ref,
            yes: 0,
            no: n - pos + 1,
        };
        let Some(first) = probe.test(1) else {
            factors.push(Lz77Factor::Literal(char_at(s, pos + 1).unwrap()));
            pos += 1;
            continue;
        };
        let (mut len, mut src) = (1, first);
        let mut hi = n - pos;
        let mut step = 1;
        while len < hi {
            let l = (len + step).min(hi);
            match probe.test(l) {
                Some(x) => (len, src) = (l, x),
                None => {
                    hi = l - 1;
                    break;
                }
            }
            step *= 2;
        }
        while len < hi {
            let mid = len + (hi - len).div_ceil(2);
            match probe.test(mid) {
                Some(x) => (len, src) = (mid, x),
                None => hi = mid - 1,
            }
        }
        factors.push(Lz77Factor::Reference { src, len });
        pos += len;
    }
    Lz77Factorization::new(self_ref, factors).expect("greedy factors are valid")
}

struct Probe<'a, 't> {
    m: &'a mut Matcher<'t>,
    s: &'t Slp,
    pos: u64,
    self_ref: bool,
    // longest admissible and shortest inadmissible length seen so far
    yes: u64,
    no: u64,
}

impl Probe<'_, '_> {
    /// Leftmost admissible source of the length-`len` candidate, 1-based.
    fn test(&mut self, len: u64) -> Option<u64> {
        let pat = substring_slp(self.s, self.pos + 1, self.pos + len).unwrap();
        let p = self.m.import(&pat);
        let occ = self.m.occurrences(p);
        let ok = if self.self_ref {
            occ.exists_start_in(1, self.pos)
        } else {
            occ.exists_fully_within(1, self.pos)
        };
        if ok {
            self.yes = self.yes.max(len);
        } else {
            self.no = self.no.min(len);
        }
        assert!(
            self.yes < self.no,
            "internal error: admissibility is not monotone in the factor length at {}",
            self.pos + 1
        );
        ok.then(|| occ.min_start().unwrap())
    }
}

/// Greedy LZ78 of `val(s)`, same factors as the plain codec.
///
/// Dictionary entries are kept as intervals of the text, indexed by length
/// and fingerprint. A fingerprint hit is confirmed by matching the entry's
/// substring SLP at the current position. Entries are closed under
/// prefixes, so the longest match is found by binary search.
pub fn slp_to_lz78(s: &Slp) -> Lz78Factorization {
    let n = s.len();
    let fp = SlpFingerprints::new(s);
    let mut m = Matcher::new(s);
    let mut dict = FpTable::new();
    let mut longest = 1;
    let mut factors = Vec::new();
    let mut prev: Option<(u64, u64)> = None;
    let mut pos = 0u64;
    while pos < n {
        if let Some((x, l)) = prev {
            dict.insert((l + 1, fp.substring(x, l + 1)), x, factors.len());
            longest = longest.max(l + 1);
        }
        let mut find = |len: u64| {
            dict.find((len, fp.substring(pos, len)), |x| {
                same(&mut m, s, x, pos, len)
            })
        };
        let (mut lo, mut hi) = (1, longest.min(n - pos));
        let mut label = Lz78Factor::Symbol(char_at(s, pos + 1).unwrap());
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

/// Whether the length-`len` substrings at 0-based `x` and `y` are equal.
pub(crate) fn same(m: &mut Matcher<'_>, s: &Slp, x: u64, y: u64, len: u64) -> bool {
    if x == y {
        return true;
    }
    let p = m.import(&substring_slp(s, x + 1, x + len).unwrap());
    m.occurs_at(p, s.start(), y)
}
