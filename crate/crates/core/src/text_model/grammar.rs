use std::fmt;

use super::{check_budget, BudgetExceeded, ModelError, Symbol, Text};

/// Index of a grammar variable, 0-based. Containers print it 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId(pub usize);

/// A right-hand-side item. Terminals order before variables, which is the
/// tie-break order Re-Pair relies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GrammarSymbol {
    Terminal(Symbol),
    Var(VarId),
}

impl fmt::Display for GrammarSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GrammarSymbol::Terminal(s) => write!(f, "t{}", s.0),
            GrammarSymbol::Var(v) => write!(f, "v{}", v.0 + 1),
        }
    }
}

/// An admissible grammar: one rule per variable, acyclic, every variable
/// reachable from the start, deriving exactly one nonempty string.
///
/// The start variable is always the last one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Grammar {
    rules: Vec<Vec<GrammarSymbol>>,
    lens: Vec<u64>,
    order: Vec<usize>,
}

impl Grammar {
    pub fn new(rules: Vec<Vec<GrammarSymbol>>) -> Result<Self, ModelError> {
        let n = rules.len();
        if n == 0 {
            return Err(ModelError::EmptyGrammar);
        }
        for (i, rhs) in rules.iter().enumerate() {
            if rhs.is_empty() {
                return Err(ModelError::EmptyRule { var: i + 1 });
            }
            for item in rhs {
                if let GrammarSymbol::Var(VarId(t)) = *item {
                    if t >= n {
                        return Err(ModelError::UndefinedVariable {
                            var: i + 1,
                            target: t + 1,
                        });
                    }
                }
            }
        }
        let order = post_order(&rules)?;
        if order.len() < n {
            let mut seen = vec![false; n];
            for &v in &order {
                seen[v] = true;
            }
            let var = seen.iter().position(|&s| !s).unwrap();
            return Err(ModelError::UnreachableVariable { var: var + 1 });
        }
        let mut lens = vec![0u64; n];
        for &v in &order {
            let mut len = 0u64;
            for item in &rules[v] {
                let l = match *item {
                    GrammarSymbol::Terminal(_) => 1,
                    GrammarSymbol::Var(VarId(t)) => lens[t],
                };
                len = len.checked_add(l).ok_or(ModelError::LengthOverflow)?;
            }
            lens[v] = len;
        }
        Ok(Grammar { rules, lens, order })
    }

    pub fn rules(&self) -> &[Vec<GrammarSymbol>] {
        &self.rules
    }

    pub fn rule(&self, v: VarId) -> &[GrammarSymbol] {
        &self.rules[v.0]
    }

    pub fn start(&self) -> VarId {
        VarId(self.rules.len() - 1)
    }

    pub fn num_vars(&self) -> usize {
        self.rules.len()
    }

    /// Total length of all right-hand sides.
    pub fn size(&self) -> usize {
        self.rules.iter().map(Vec::len).sum()
    }

    pub fn len(&self) -> u64 {
        self.lens[self.rules.len() - 1]
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn var_len(&self, v: VarId) -> u64 {
        self.lens[v.0]
    }

    /// Variables in post-order from the start: every variable appears after
    /// the variables its rule mentions, and the start comes last.
    pub fn topological_order(&self) -> &[usize] {
        &self.order
    }

    pub fn max_symbol(&self) -> Option<Symbol> {
        self.rules
            .iter()
            .flatten()
            .filter_map(|s| match s {
                GrammarSymbol::Terminal(c) => Some(*c),
                GrammarSymbol::Var(_) => None,
            })
            .max()
    }

    pub fn expand(&self, limit: u64) -> Result<Text, BudgetExceeded> {
        check_budget(self.len(), limit)?;
        let mut out = Vec::with_capacity(self.len() as usize);
        self.expand_var_into(self.start(), &mut out);
        Ok(Text::new(out))
    }

    /// The string derived by a single variable. Intended for tests and small
    /// grammars; no budget is applied.
    pub fn var_string(&self, v: VarId) -> Vec<Symbol> {
        let mut out = Vec::with_capacity(self.lens[v.0] as usize);
        self.expand_var_into(v, &mut out);
        out
    }

    fn expand_var_into(&self, v: VarId, out: &mut Vec<Symbol>) {
        let mut stack = vec![GrammarSymbol::Var(v)];
        while let Some(item) = stack.pop() {
            match item {
                GrammarSymbol::Terminal(c) => out.push(c),
                GrammarSymbol::Var(VarId(x)) => stack.extend(self.rules[x].iter().rev().copied()),
            }
        }
    }
}

// Iterative DFS from the start (the last rule). Returns the reachable
// variables in post-order, or the variable closing a cycle.
fn post_order(rules: &[Vec<GrammarSymbol>]) -> Result<Vec<usize>, ModelError> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Open,
        Done,
    }
    let n = rules.len();
    let mut mark = vec![Mark::New; n];
    let mut order = Vec::with_capacity(n);
    let mut stack: Vec<(usize, usize)> = vec![(n - 1, 0)];
    mark[n - 1] = Mark::Open;
    while let Some(&mut (v, ref mut next)) = stack.last_mut() {
        let rhs = &rules[v];
        let mut pushed = None;
        while *next < rhs.len() {
            let item = rhs[*next];
            *next += 1;
            if let GrammarSymbol::Var(VarId(t)) = item {
                match mark[t] {
                    Mark::Open => return Err(ModelError::CyclicGrammar { var: t + 1 }),
                    Mark::New => {
                        pushed = Some(t);
                        break;
                    }
                    Mark::Done => {}
                }
            }
        }
        match pushed {
            Some(t) => {
                mark[t] = Mark::Open;
                stack.push((t, 0));
            }
            None => {
                mark[v] = Mark::Done;
                order.push(v);
                stack.pop();
            }
        }
    }
    Ok(order)
}

/// Renumbers variables in first-use post-order of the leftmost derivation.
///
/// Two grammars that differ only in variable numbering relabel to identical
/// values, so `canonical_relabel(a) == canonical_relabel(b)` is a grammar
/// isomorphism check.
pub fn canonical_relabel(g: &Grammar) -> Grammar {
    let order = g.topological_order();
    let mut new_id = vec![usize::MAX; g.num_vars()];
    for (i, &v) in order.iter().enumerate() {
        new_id[v] = i;
    }
    let rules = order
        .iter()
        .map(|&v| {
            g.rules[v]
                .iter()
                .map(|item| match *item {
                    GrammarSymbol::Var(VarId(t)) => GrammarSymbol::Var(VarId(new_id[t])),
                    t => t,
                })
                .collect()
        })
        .collect();
    Grammar::new(rules).expect("relabelling preserves validity")
}
