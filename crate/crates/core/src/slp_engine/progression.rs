/// A nonempty arithmetic progression `first, first + step, ...` of `count`
/// values. A single value has `step == 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Progression {
    pub first: u64,
    pub step: u64,
    pub count: u64,
}

impl Progression {
    pub fn single(x: u64) -> Self {
        Progression {
            first: x,
            step: 0,
            count: 1,
        }
    }

    fn new(first: u64, step: u64, count: u64) -> Self {
        debug_assert!(count >= 1);
        if count == 1 {
            Self::single(first)
        } else {
            Progression { first, step, count }
        }
    }

    pub fn last(&self) -> u64 {
        self.first + self.step * (self.count - 1)
    }

    pub fn contains(&self, x: u64) -> bool {
        if x < self.first || x > self.last() {
            return false;
        }
        self.count == 1 || (x - self.first).is_multiple_of(self.step)
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.count).map(move |i| self.first + i * self.step)
    }

    pub fn shift_up(self, d: u64) -> Self {
        Progression {
            first: self.first + d,
            ..self
        }
    }

    pub fn shift_down(self, d: u64) -> Self {
        debug_assert!(self.first >= d);
        Progression {
            first: self.first - d,
            ..self
        }
    }

    /// Smallest member `>= lo`.
    pub fn first_at_least(&self, lo: u64) -> Option<u64> {
        if lo <= self.first {
            return Some(self.first);
        }
        if lo > self.last() {
            return None;
        }
        let i = (lo - self.first).div_ceil(self.step);
        Some(self.first + i * self.step)
    }

    /// Members within `lo..=hi`.
    pub fn clip(&self, lo: u64, hi: u64) -> Option<Self> {
        let first = self.first_at_least(lo)?;
        if first > hi {
            return None;
        }
        let last = self.last().min(hi);
        let count = if self.count == 1 {
            1
        } else {
            (last - first) / self.step + 1
        };
        Some(Self::new(first, self.step, count))
    }

    pub fn intersect(&self, other: &Self) -> Option<Self> {
        if self.count == 1 {
            return other.contains(self.first).then_some(*self);
        }
        if other.count == 1 {
            return self.contains(other.first).then_some(*other);
        }
        let lo = self.first.max(other.first);
        let hi = self.last().min(other.last());
        if lo > hi {
            return None;
        }
        // x = a (mod s), x = b (mod t)
        let (a, s, b, t) = (
            self.first as i128,
            self.step as i128,
            other.first as i128,
            other.step as i128,
        );
        let (g, p, _) = ext_gcd(s, t);
        if (b - a) % g != 0 {
            return None;
        }
        let lcm = s / g * t;
        let tg = t / g;
        let k = ((((b - a) / g).rem_euclid(tg) as u128 * p.rem_euclid(tg) as u128) % tg as u128)
            as i128;
        let x0 = (a + s * k).rem_euclid(lcm);
        let lo = lo as i128;
        let first = lo + (x0 - lo).rem_euclid(lcm);
        if first > hi as i128 {
            return None;
        }
        let count = (hi as i128 - first) / lcm + 1;
        Some(Self::new(first as u64, lcm as u64, count as u64))
    }
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Union of pairwise disjoint progressions whose union is known to be a
/// progression (all members share a common covered position).
pub(crate) fn merge(parts: &[Progression]) -> Option<Progression> {
    let total: u64 = parts.iter().map(|p| p.count).sum();
    let min = parts.iter().map(|p| p.first).min()?;
    if total == 1 {
        return Some(Progression::single(min));
    }
    let max = parts.iter().map(Progression::last).max().unwrap();
    let second = parts
        .iter()
        .flat_map(|p| [Some(p.first), (p.count > 1).then(|| p.first + p.step)])
        .flatten()
        .filter(|&x| x != min)
        .min()
        .unwrap();
    let step = second - min;
    let merged = Progression::new(min, step, (max - min) / step + 1);
    debug_assert_eq!(
        merged.count, total,
        "parts {parts:?} do not form a progression"
    );
    Some(merged)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ap(first: u64, step: u64, count: u64) -> Progression {
        Progression::new(first, step, count)
    }

    #[test]
    fn clip_and_first_at_least() {
        let p = ap(3, 4, 5); // 3 7 11 15 19
        assert_eq!(p.first_at_least(8), Some(11));
        assert_eq!(p.first_at_least(20), None);
        assert_eq!(p.clip(4, 16), Some(ap(7, 4, 3)));
        assert_eq!(p.clip(8, 10), None);
        assert_eq!(p.clip(19, 30), Some(Progression::single(19)));
    }

    #[test]
    fn merge_pieces() {
        assert_eq!(
            merge(&[ap(2, 3, 2), Progression::single(8), ap(11, 3, 2)]),
            Some(ap(2, 3, 5))
        );
        assert_eq!(merge(&[]), None);
    }

    proptest! {
        #[test]
        fn intersection_matches_sets(a in 0u64..40, s in 1u64..12, c in 1u64..10, b in 0u64..40, t in 1u64..12, d in 1u64..10) {
            let (p, q) = (ap(a, s, c), ap(b, t, d));
            let expect: Vec<u64> = p.iter().filter(|&x| q.contains(x)).collect();
            let got: Vec<u64> = p.intersect(&q).map(|r| r.iter().collect()).unwrap_or_default();
            prop_assert_eq!(got, expect);
        }

        #[test]
        fn clip_matches_filter(a in 0u64..40, s in 1u64..12, c in 1u64..10, lo in 0u64..100, len in 0u64..60) {
            let p = ap(a, s, c);
            let expect: Vec<u64> = p.iter().filter(|&x| x >= lo && x <= lo + len).collect();
            let got: Vec<u64> = p.clip(lo, lo + len).map(|r| r.iter().collect()).unwrap_or_default();
            prop_assert_eq!(got, expect);
        }
    }
}
