use std::collections::HashMap;

use crate::reference_codecs::best_bigram;
use crate::text_model::{Grammar, GrammarSymbol, ModelError, RleString, VarId};

type Pair = (GrammarSymbol, GrammarSymbol);

/// Re-Pair simulated on the run-length form of the working sequence.
///
/// A run `x^q` holds `q / 2` non-overlapping `xx` pairs, and each boundary
/// between runs holds one pair. Replacing `xx` turns `x^q` into `Y^(q/2)`
/// followed by one `x` when `q` is odd; replacing `xy` trims one symbol from
/// each side of every `x|y` boundary. The output is the grammar the plain
/// compressor builds, variable for variable.
pub fn rle_to_repair(r: &RleString) -> Result<Grammar, ModelError> {
    if r.is_empty() {
        return Err(ModelError::EmptyText);
    }
    let mut w: Vec<(GrammarSymbol, u64)> = r
        .runs()
        .iter()
        .map(|run| (GrammarSymbol::Terminal(run.symbol), run.len))
        .collect();
    let mut rules: Vec<Pair> = Vec::new();
    while let Some(pair) = best_bigram(counts(&w)) {
        let y = GrammarSymbol::Var(VarId(rules.len()));
        rules.push(pair);
        w = replace(&w, pair, y);
    }
    // no pair repeats, so every exponent is at most 3
    let start = w
        .iter()
        .flat_map(|&(s, q)| std::iter::repeat_n(s, q as usize))
        .collect();
    let mut g: Vec<Vec<GrammarSymbol>> = rules.iter().map(|&(a, b)| vec![a, b]).collect();
    g.push(start);
    Ok(Grammar::new(g).expect("every variable is used by a later rule"))
}

fn counts(w: &[(GrammarSymbol, u64)]) -> HashMap<Pair, usize> {
    let mut c: HashMap<Pair, usize> = HashMap::new();
    for (i, &(s, q)) in w.iter().enumerate() {
        if q >= 2 {
            *c.entry((s, s)).or_default() += (q / 2) as usize;
        }
        if let Some(&(t, _)) = w.get(i + 1) {
            *c.entry((s, t)).or_default() += 1;
        }
    }
    c
}

fn push(out: &mut Vec<(GrammarSymbol, u64)>, s: GrammarSymbol, q: u64) {
    if q == 0 {
        return;
    }
    match out.last_mut() {
        Some((t, p)) if *t == s => *p += q,
        _ => out.push((s, q)),
    }
}

fn replace(
    w: &[(GrammarSymbol, u64)],
    (x, y): Pair,
    v: GrammarSymbol,
) -> Vec<(GrammarSymbol, u64)> {
    let mut out = Vec::with_capacity(w.len());
    for (i, &(s, q)) in w.iter().enumerate() {
        if x == y {
            if s == x {
                push(&mut out, v, q / 2);
                push(&mut out, x, q % 2);
            } else {
                push(&mut out, s, q);
            }
            continue;
        }
        let head = (s == y && i > 0 && w[i - 1].0 == x) as u64;
        let tail = (s == x && w.get(i + 1).is_some_and(|&(t, _)| t == y)) as u64;
        push(&mut out, s, q - head - tail);
        push(&mut out, v, tail);
    }
    out
}
