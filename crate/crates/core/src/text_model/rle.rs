use super::{check_budget, BudgetExceeded, ModelError, Symbol, Text};

/// One run `a^p` of a run-length factorization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Run {
    pub symbol: Symbol,
    pub len: u64,
}

impl Run {
    pub fn new(symbol: Symbol, len: u64) -> Self {
        Run { symbol, len }
    }
}

/// A run-length factorization: maximal runs, so neighbours never share a symbol.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RleString {
    runs: Vec<Run>,
    len: u64,
}

impl RleString {
    pub fn new(runs: Vec<Run>) -> Result<Self, ModelError> {
        let mut len = 0u64;
        for (i, run) in runs.iter().enumerate() {
            if run.len == 0 {
                return Err(ModelError::ZeroExponent { run: i + 1 });
            }
            if i > 0 && runs[i - 1].symbol == run.symbol {
                return Err(ModelError::AdjacentEqualRuns {
                    run: i,
                    symbol: run.symbol.0,
                });
            }
            len = len.checked_add(run.len).ok_or(ModelError::LengthOverflow)?;
        }
        Ok(RleString { runs, len })
    }

    /// Builds from `(symbol code, exponent)` pairs.
    pub fn from_pairs(pairs: &[(u32, u64)]) -> Result<Self, ModelError> {
        Self::new(pairs.iter().map(|&(s, p)| Run::new(Symbol(s), p)).collect())
    }

    pub fn runs(&self) -> &[Run] {
        &self.runs
    }

    /// Number of runs, the compressed size.
    pub fn size(&self) -> usize {
        self.runs.len()
    }

    /// Length of the represented string.
    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn expand(&self, limit: u64) -> Result<Text, BudgetExceeded> {
        check_budget(self.len, limit)?;
        let mut out = Vec::with_capacity(self.len as usize);
        for run in &self.runs {
            out.extend(std::iter::repeat_n(run.symbol, run.len as usize));
        }
        Ok(Text::new(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expands_runs_in_order() {
        let r = RleString::from_pairs(&[(0, 1), (1, 2), (0, 3), (2, 1), (0, 2)]).unwrap();
        assert_eq!(r.len(), 9);
        assert_eq!(r.expand(100).unwrap().to_letters(), "abbaaacaa");
    }

    #[test]
    fn empty_runs_expand_to_empty_text() {
        let r = RleString::new(vec![]).unwrap();
        assert!(r.expand(0).unwrap().is_empty());
    }

    #[test]
    fn rejects_adjacent_equal_runs() {
        assert_eq!(
            RleString::from_pairs(&[(0, 1), (0, 2)]),
            Err(ModelError::AdjacentEqualRuns { run: 1, symbol: 0 })
        );
    }

    #[test]
    fn rejects_zero_exponent() {
        assert_eq!(
            RleString::from_pairs(&[(0, 1), (1, 0)]),
            Err(ModelError::ZeroExponent { run: 2 })
        );
    }

    #[test]
    fn budget_guards_large_runs() {
        let r = RleString::from_pairs(&[(0, 1 << 40)]).unwrap();
        assert_eq!(
            r.expand(1 << 20),
            Err(BudgetExceeded {
                needed: 1 << 40,
                limit: 1 << 20
            })
        );
    }
}
