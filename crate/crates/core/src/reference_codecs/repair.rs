use std::collections::HashMap;

use crate::text_model::{Grammar, GrammarSymbol, ModelError, Symbol, VarId};

/// Name of the tie-break between equally frequent bigrams: the smallest
/// `(left, right)` pair, terminals before variables, variables by index.
pub const TIE_BREAK: &str = "lexicographic";

/// The replacement history of one Re-Pair run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepairTrace {
    /// `rules[i]` is the bigram replaced by variable `i`, in creation order.
    pub rules: Vec<(GrammarSymbol, GrammarSymbol)>,
    /// The sequence left after the last round.
    pub final_string: Vec<GrammarSymbol>,
    pub tie_break: &'static str,
}

/// Left-greedy non-overlapping occurrence counts of every bigram.
pub(crate) fn bigram_counts(w: &[GrammarSymbol]) -> HashMap<(GrammarSymbol, GrammarSymbol), usize> {
    let mut counts: HashMap<_, (usize, usize)> = HashMap::new();
    for i in 0..w.len().saturating_sub(1) {
        let e = counts.entry((w[i], w[i + 1])).or_insert((0, usize::MAX));
        if e.1 == usize::MAX || e.1 + 1 < i || w[i] != w[i + 1] {
            e.0 += 1;
            e.1 = i;
        }
    }
    counts.into_iter().map(|(k, (c, _))| (k, c)).collect()
}

/// Picks the most frequent bigram under [`TIE_BREAK`], if it occurs at least twice.
pub(crate) fn best_bigram<I>(counts: I) -> Option<(GrammarSymbol, GrammarSymbol)>
where
    I: IntoIterator<Item = ((GrammarSymbol, GrammarSymbol), usize)>,
{
    counts
        .into_iter()
        .filter(|&(_, c)| c >= 2)
        .max_by(|(a, ca), (b, cb)| ca.cmp(cb).then(b.cmp(a)))
        .map(|(k, _)| k)
}

pub(crate) fn replace(
    w: &[GrammarSymbol],
    pair: (GrammarSymbol, GrammarSymbol),
    y: GrammarSymbol,
) -> Vec<GrammarSymbol> {
    let mut out = Vec::with_capacity(w.len());
    let mut i = 0;
    while i < w.len() {
        if i + 1 < w.len() && (w[i], w[i + 1]) == pair {
            out.push(y);
            i += 2;
        } else {
            out.push(w[i]);
            i += 1;
        }
    }
    out
}

/// Re-Pair on the plain text: replace the most frequent bigram until none
/// repeats. Variables are numbered in creation order and the start rule,
/// holding what is left, comes last.
pub fn naive_repair(text: &[Symbol]) -> Result<(Grammar, RepairTrace), ModelError> {
    if text.is_empty() {
        return Err(ModelError::EmptyText);
    }
    let mut w: Vec<GrammarSymbol> = text.iter().map(|&c| GrammarSymbol::Terminal(c)).collect();
    let mut rules = Vec::new();
    while let Some(pair) = best_bigram(bigram_counts(&w)) {
        let y = GrammarSymbol::Var(VarId(rules.len()));
        rules.push(pair);
        w = replace(&w, pair, y);
    }
    let mut g: Vec<Vec<GrammarSymbol>> = rules.iter().map(|&(a, b)| vec![a, b]).collect();
    g.push(w.clone());
    let grammar = Grammar::new(g).expect("every Re-Pair variable is used by a later string");
    Ok((
        grammar,
        RepairTrace {
            rules,
            final_string: w,
            tie_break: TIE_BREAK,
        },
    ))
}
