use crate::fingerprint::{FpTable, RleFingerprints};
use crate::reference_codecs::split_point;
use crate::suffix_structures::RunText;
use crate::text_model::{Grammar, GrammarSymbol, ModelError, RleString, VarId};

/// Bisection of the expansion of `r`, isomorphic to the plain codec's output
/// (in fact identical, with the same post-order numbering).
///
/// Spans are `(start, len)` pairs. Built spans are indexed by length and
/// fingerprint; a hit counts only if an LCE query confirms it.
pub fn rle_to_bisection(r: &RleString) -> Result<Grammar, ModelError> {
    if r.is_empty() {
        return Err(ModelError::EmptyText);
    }
    let mut b = Builder {
        text: RunText::new(r),
        fp: RleFingerprints::new(r),
        seen: FpTable::new(),
        rules: Vec::new(),
    };
    let len = b.text.len();
    if len == 1 {
        return Grammar::new(vec![vec![b.symbol_at(0)]]);
    }
    b.build(0, len);
    Ok(Grammar::new(b.rules).expect("post-order numbering is admissible"))
}

struct Builder {
    text: RunText,
    fp: RleFingerprints,
    seen: FpTable<usize>,
    rules: Vec<Vec<GrammarSymbol>>,
}

impl Builder {
    fn symbol_at(&self, x: u64) -> GrammarSymbol {
        GrammarSymbol::Terminal(self.text.runs()[self.text.locate(x).0].symbol)
    }

    fn build(&mut self, start: u64, len: u64) -> GrammarSymbol {
        if len == 1 {
            return self.symbol_at(start);
        }
        let key = (len, self.fp.substring(start, len));
        if let Some(v) = self.seen.find(key, |s| self.text.lce(s, start) >= len) {
            return GrammarSymbol::Var(VarId(v));
        }
        let k = split_point(len);
        let left = self.build(start, k);
        let right = self.build(start + k, len - k);
        self.rules.push(vec![left, right]);
        let v = self.rules.len() - 1;
        self.seen.insert(key, start, v);
        GrammarSymbol::Var(VarId(v))
    }
}
