use std::collections::HashMap;

use crate::text_model::{Grammar, GrammarSymbol, ModelError, Symbol, VarId};

/// Largest power of two strictly below `len` (`len >= 2`).
pub(crate) fn split_point(len: u64) -> u64 {
    debug_assert!(len >= 2);
    1 << (63 - (len - 1).leading_zeros())
}

/// Bisection on the plain text. Spans of length one are terminals; equal
/// spans share one variable; variables are numbered in post-order.
pub fn naive_bisection(text: &[Symbol]) -> Result<Grammar, ModelError> {
    if text.is_empty() {
        return Err(ModelError::EmptyText);
    }
    if text.len() == 1 {
        return Ok(Grammar::new(vec![vec![GrammarSymbol::Terminal(text[0])]]).unwrap());
    }
    struct Builder<'t> {
        seen: HashMap<&'t [Symbol], usize>,
        rules: Vec<Vec<GrammarSymbol>>,
    }
    impl<'t> Builder<'t> {
        fn build(&mut self, span: &'t [Symbol]) -> GrammarSymbol {
            if span.len() == 1 {
                return GrammarSymbol::Terminal(span[0]);
            }
            if let Some(&v) = self.seen.get(span) {
                return GrammarSymbol::Var(VarId(v));
            }
            let k = split_point(span.len() as u64) as usize;
            let left = self.build(&span[..k]);
            let right = self.build(&span[k..]);
            self.rules.push(vec![left, right]);
            let v = self.rules.len() - 1;
            self.seen.insert(span, v);
            GrammarSymbol::Var(VarId(v))
        }
    }
    let mut b = Builder {
        seen: HashMap::new(),
        rules: Vec::new(),
    };
    b.build(text);
    Ok(Grammar::new(b.rules).expect("post-order numbering is admissible"))
}
