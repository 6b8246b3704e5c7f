//! Suffix array, LCP array and constant-time LCE over run sequences.
//!
//! Each run of an [`RleString`] becomes one meta-symbol. LCE on the meta-text
//! counts equal whole runs; [`RunText`] turns that into symbol-level LCE on
//! the represented string.

use crate::text_model::{RleString, Run};

/// The run sequence re-ranked so that equal `(symbol, exponent)` pairs share
/// a rank. Ranks are 1-based and follow the lexicographic order of the pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetaText {
    ranks: Vec<u32>,
    prefix_len: Vec<u64>,
}

impl MetaText {
    pub fn ranks(&self) -> &[u32] {
        &self.ranks
    }

    /// `prefix_len[i]` is the total length of the first `i` runs.
    pub fn prefix_len(&self) -> &[u64] {
        &self.prefix_len
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }
}

pub fn rank_runs(r: &RleString) -> MetaText {
    let key = |run: &Run| (run.symbol, run.len);
    let mut distinct: Vec<_> = r.runs().iter().map(key).collect();
    distinct.sort_unstable();
    distinct.dedup();
    let ranks = r
        .runs()
        .iter()
        .map(|run| distinct.binary_search(&key(run)).unwrap() as u32 + 1)
        .collect();
    let mut prefix_len = Vec::with_capacity(r.size() + 1);
    prefix_len.push(0);
    for run in r.runs() {
        prefix_len.push(prefix_len.last().unwrap() + run.len);
    }
    MetaText { ranks, prefix_len }
}

/// Suffix array by prefix doubling with counting sorts. Entries are 1-based
/// suffix start positions.
pub fn build_suffix_array(s: &[u32]) -> Vec<usize> {
    suffix_array0(s).into_iter().map(|i| i + 1).collect()
}

fn suffix_array0(s: &[u32]) -> Vec<usize> {
    let n = s.len();
    if n == 0 {
        return Vec::new();
    }
    let mut alphabet: Vec<u32> = s.to_vec();
    alphabet.sort_unstable();
    alphabet.dedup();
    let mut rank: Vec<usize> = s
        .iter()
        .map(|c| alphabet.binary_search(c).unwrap())
        .collect();
    let mut sa: Vec<usize> = (0..n).collect();
    sa.sort_by_key(|&i| rank[i]);
    let mut classes = alphabet.len();
    let mut tmp = vec![0usize; n];
    let mut by_second = Vec::with_capacity(n);
    let mut k = 1;
    while classes < n {
        // order by the second half: suffixes with no second half first
        by_second.clear();
        by_second.extend(n - k..n);
        by_second.extend(sa.iter().filter(|&&i| i >= k).map(|&i| i - k));
        // stable counting sort by the first half
        let mut count = vec![0usize; classes + 1];
        for &i in &by_second {
            count[rank[i] + 1] += 1;
        }
        for c in 1..=classes {
            count[c] += count[c - 1];
        }
        for &i in &by_second {
            sa[count[rank[i]]] = i;
            count[rank[i]] += 1;
        }
        let key = |i: usize| (rank[i], if i + k < n { rank[i + k] + 1 } else { 0 });
        tmp[sa[0]] = 0;
        for w in 1..n {
            tmp[sa[w]] = tmp[sa[w - 1]] + usize::from(key(sa[w]) != key(sa[w - 1]));
        }
        classes = tmp[sa[n - 1]] + 1;
        std::mem::swap(&mut rank, &mut tmp);
        k *= 2;
    }
    sa
}

/// Kasai's LCP array for a 1-based suffix array: `lcp[0] = 0` and `lcp[i]`
/// is the longest common prefix of suffixes `sa[i - 1]` and `sa[i]`.
pub fn build_lcp_array(s: &[u32], sa: &[usize]) -> Vec<usize> {
    let n = s.len();
    let mut isa = vec![0usize; n];
    for (r, &p) in sa.iter().enumerate() {
        isa[p - 1] = r;
    }
    let mut lcp = vec![0usize; n];
    let mut h = 0usize;
    for i in 0..n {
        if isa[i] == 0 {
            h = 0;
            continue;
        }
        let j = sa[isa[i] - 1] - 1;
        while i + h < n && j + h < n && s[i + h] == s[j + h] {
            h += 1;
        }
        lcp[isa[i]] = h;
        h = h.saturating_sub(1);
    }
    lcp
}

/// Sparse-table range minimum.
#[derive(Clone, Debug)]
pub struct SparseTable {
    levels: Vec<Vec<usize>>,
}

impl SparseTable {
    pub fn new(values: &[usize]) -> Self {
        let mut levels = vec![values.to_vec()];
        let mut w = 1;
        while 2 * w <= values.len() {
            let prev = levels.last().unwrap();
            let next = (0..=values.len() - 2 * w)
                .map(|i| prev[i].min(prev[i + w]))
                .collect();
            levels.push(next);
            w *= 2;
        }
        SparseTable { levels }
    }

    /// Minimum of `values[lo..=hi]` (0-based, `lo <= hi`).
    pub fn min(&self, lo: usize, hi: usize) -> usize {
        let k = (usize::BITS - 1 - (hi - lo + 1).leading_zeros()) as usize;
        self.levels[k][lo].min(self.levels[k][hi + 1 - (1 << k)])
    }
}

/// Longest common extension between suffixes of a fixed sequence in O(1).
#[derive(Clone, Debug)]
pub struct LceIndex {
    n: usize,
    isa: Vec<usize>,
    rmq: SparseTable,
}

impl LceIndex {
    pub fn new(s: &[u32]) -> Self {
        let sa = build_suffix_array(s);
        let lcp = build_lcp_array(s, &sa);
        let mut isa = vec![0usize; s.len()];
        for (r, &p) in sa.iter().enumerate() {
            isa[p - 1] = r;
        }
        LceIndex {
            n: s.len(),
            isa,
            rmq: SparseTable::new(&lcp),
        }
    }

    /// Common prefix length of the suffixes starting at 1-based `i` and `j`.
    pub fn lce(&self, i: usize, j: usize) -> usize {
        if i == j {
            return self.n - i + 1;
        }
        let (a, b) = (self.isa[i - 1], self.isa[j - 1]);
        let (a, b) = (a.min(b), a.max(b));
        self.rmq.min(a + 1, b)
    }
}

/// Symbol-level LCE and position lookup over a run-length encoded string,
/// without expanding it. Positions here are 0-based.
#[derive(Clone, Debug)]
pub struct RunText {
    runs: Vec<Run>,
    meta: MetaText,
    index: LceIndex,
}

impl RunText {
    pub fn new(r: &RleString) -> Self {
        let meta = rank_runs(r);
        let index = LceIndex::new(meta.ranks());
        RunText {
            runs: r.runs().to_vec(),
            meta,
            index,
        }
    }

    pub fn runs(&self) -> &[Run] {
        &self.runs
    }

    pub fn meta(&self) -> &MetaText {
        &self.meta
    }

    pub fn len(&self) -> u64 {
        *self.meta.prefix_len.last().unwrap()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Start of run `u` (0-based run index; `u == runs.len()` gives the length).
    pub fn run_start(&self, u: usize) -> u64 {
        self.meta.prefix_len[u]
    }

    /// The run containing `pos` and the offset inside it.
    pub fn locate(&self, pos: u64) -> (usize, u64) {
        debug_assert!(pos < self.len());
        let u = self.meta.prefix_len.partition_point(|&p| p <= pos) - 1;
        (u, pos - self.meta.prefix_len[u])
    }

    /// Common prefix length of the suffixes starting at `x` and `y`.
    pub fn lce(&self, x: u64, y: u64) -> u64 {
        let n = self.len();
        if x >= n || y >= n {
            return 0;
        }
        if x == y {
            return n - x;
        }
        let (u, q) = self.locate(x);
        let (v, r) = self.locate(y);
        if self.runs[u].symbol != self.runs[v].symbol {
            return 0;
        }
        let (a, b) = (self.runs[u].len - q, self.runs[v].len - r);
        if a != b {
            return a.min(b);
        }
        let (u, v) = (u + 1, v + 1);
        let m = self.runs.len();
        if u == m || v == m {
            return a;
        }
        let whole = self.index.lce(u + 1, v + 1);
        let mut total = a + self.meta.prefix_len[u + whole] - self.meta.prefix_len[u];
        if let (Some(p), Some(q)) = (self.runs.get(u + whole), self.runs.get(v + whole)) {
            if p.symbol == q.symbol {
                total += p.len.min(q.len);
            }
        }
        total
    }
}
