use super::{
    check_budget, BudgetExceeded, Grammar, GrammarSymbol, ModelError, Symbol, Text, VarId,
};

/// One assignment of a straight-line program. Children of `Pair` always have
/// smaller indices than the rule itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SlpRule {
    Terminal(Symbol),
    Pair(usize, usize),
}

/// A straight-line program `X_1 .. X_n` (0-based here) representing
/// `val(X_n)`, with per-variable lengths and heights cached at construction.
///
/// Variables unreachable from the start are allowed; they simply do not
/// contribute to the represented string.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Slp {
    rules: Vec<SlpRule>,
    lens: Vec<u64>,
    heights: Vec<u32>,
}

impl Slp {
    pub fn new(rules: Vec<SlpRule>) -> Result<Self, ModelError> {
        if rules.is_empty() {
            return Err(ModelError::EmptyGrammar);
        }
        let mut lens: Vec<u64> = Vec::with_capacity(rules.len());
        let mut heights = Vec::with_capacity(rules.len());
        for (i, rule) in rules.iter().enumerate() {
            match *rule {
                SlpRule::Terminal(_) => {
                    lens.push(1);
                    heights.push(1);
                }
                SlpRule::Pair(l, r) => {
                    if l >= i || r >= i {
                        return Err(ModelError::ForwardReferenceInSlp {
                            var: i + 1,
                            target: l.max(r) + 1,
                        });
                    }
                    lens.push(
                        lens[l]
                            .checked_add(lens[r])
                            .ok_or(ModelError::LengthOverflow)?,
                    );
                    heights.push(1 + heights[l].max(heights[r]));
                }
            }
        }
        Ok(Slp {
            rules,
            lens,
            heights,
        })
    }

    /// `X_0 -> sym`, `X_i -> X_{i-1} X_{i-1}`: `k + 1` rules deriving `sym^(2^k)`.
    pub fn power(sym: Symbol, k: u32) -> Self {
        assert!(k < 64, "2^{k} does not fit in 64 bits");
        let mut rules = vec![SlpRule::Terminal(sym)];
        rules.extend((1..=k as usize).map(|i| SlpRule::Pair(i - 1, i - 1)));
        Slp::new(rules).unwrap()
    }

    pub fn rules(&self) -> &[SlpRule] {
        &self.rules
    }

    pub fn rule(&self, i: usize) -> SlpRule {
        self.rules[i]
    }

    /// Number of assignments.
    pub fn size(&self) -> usize {
        self.rules.len()
    }

    pub fn start(&self) -> usize {
        self.rules.len() - 1
    }

    pub fn len(&self) -> u64 {
        self.lens[self.start()]
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn var_len(&self, i: usize) -> u64 {
        self.lens[i]
    }

    pub fn lens(&self) -> &[u64] {
        &self.lens
    }

    pub fn height(&self, i: usize) -> u32 {
        self.heights[i]
    }

    pub fn heights(&self) -> &[u32] {
        &self.heights
    }

    pub fn max_symbol(&self) -> Option<Symbol> {
        self.rules
            .iter()
            .filter_map(|r| match r {
                SlpRule::Terminal(c) => Some(*c),
                SlpRule::Pair(..) => None,
            })
            .max()
    }

    pub fn expand(&self, limit: u64) -> Result<Text, BudgetExceeded> {
        check_budget(self.len(), limit)?;
        Ok(Text::new(self.var_string(self.start())))
    }

    /// The string derived by variable `i`, without a budget. Meant for tests.
    pub fn var_string(&self, i: usize) -> Vec<Symbol> {
        let mut out = Vec::with_capacity(self.lens[i] as usize);
        let mut stack = vec![i];
        while let Some(v) = stack.pop() {
            match self.rules[v] {
                SlpRule::Terminal(c) => out.push(c),
                SlpRule::Pair(l, r) => {
                    stack.push(r);
                    stack.push(l);
                }
            }
        }
        out
    }

    /// The same program as an admissible grammar, dropping unreachable rules.
    pub fn to_grammar(&self) -> Grammar {
        let n = self.rules.len();
        let mut reach = vec![false; n];
        reach[n - 1] = true;
        for i in (0..n).rev() {
            if let (true, SlpRule::Pair(l, r)) = (reach[i], self.rules[i]) {
                reach[l] = true;
                reach[r] = true;
            }
        }
        let mut id = vec![usize::MAX; n];
        let mut rules = Vec::new();
        for i in 0..n {
            if !reach[i] {
                continue;
            }
            id[i] = rules.len();
            rules.push(match self.rules[i] {
                SlpRule::Terminal(c) => vec![GrammarSymbol::Terminal(c)],
                SlpRule::Pair(l, r) => vec![
                    GrammarSymbol::Var(VarId(id[l])),
                    GrammarSymbol::Var(VarId(id[r])),
                ],
            });
        }
        Grammar::new(rules).expect("reachable SLP rules form an admissible grammar")
    }
}
