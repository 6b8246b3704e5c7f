use super::lz::same;
use crate::fingerprint::{FpTable, SlpFingerprints};
use crate::reference_codecs::split_point;
use crate::slp_engine::{char_at, Matcher};
use crate::text_model::{Grammar, GrammarSymbol, Slp, VarId};

/// Bisection of `val(s)`, identical to the plain codec's output.
///
/// Spans are `(start, len)`. A span already built is recognized through a
/// (length, fingerprint) table and confirmed by an exact compressed
/// comparison before its variable is reused.
pub fn slp_to_bisection(s: &Slp) -> Grammar {
    let terminal = |x: u64| GrammarSymbol::Terminal(char_at(s, x + 1).unwrap());
    if s.len() == 1 {
        return Grammar::new(vec![vec![terminal(0)]]).unwrap();
    }
    let fp = SlpFingerprints::new(s);
    let mut m = Matcher::new(s);
    let mut seen = FpTable::new();
    let mut rules: Vec<Vec<GrammarSymbol>> = Vec::new();
    // post-order over spans: (start, len, children built)
    let mut stack = vec![(0u64, s.len(), false)];
    let mut done: Vec<GrammarSymbol> = Vec::new();
    while let Some((x, len, built)) = stack.pop() {
        if len == 1 {
            done.push(terminal(x));
            continue;
        }
        let key = (len, fp.substring(x, len));
        if built {
            let right = done.pop().unwrap();
            let left = done.pop().unwrap();
            rules.push(vec![left, right]);
            seen.insert(key, x, rules.len() - 1);
            done.push(GrammarSymbol::Var(VarId(rules.len() - 1)));
            continue;
        }
        if let Some(v) = seen.find(key, |y| same(&mut m, s, y, x, len)) {
            done.push(GrammarSymbol::Var(VarId(v)));
            continue;
        }
        let k = split_point(len);
        stack.push((x, len, true));
        stack.push((x + k, len - k, false));
        stack.push((x, k, false));
    }
    Grammar::new(rules).expect("post-order numbering is admissible")
}
