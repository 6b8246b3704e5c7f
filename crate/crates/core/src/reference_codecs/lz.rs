use std::collections::HashMap;

use crate::text_model::{Lz77Factor, Lz77Factorization, Lz78Factor, Lz78Factorization, Symbol};

/// Greedy LZ77 by direct comparison against every earlier start.
///
/// A factor is a literal only if its symbol has not occurred before; the
/// reference source is the leftmost among the longest matches.
pub fn naive_lz77(text: &[Symbol], self_ref: bool) -> Lz77Factorization {
    let n = text.len();
    let mut factors = Vec::new();
    let mut pos = 0;
    while pos < n {
        let (mut best_len, mut best_src) = (0, 0);
        for src in 0..pos {
            let cap = if self_ref {
                n - pos
            } else {
                (pos - src).min(n - pos)
            };
            if cap <= best_len {
                continue;
            }
            let l = text[src..]
                .iter()
                .zip(&text[pos..pos + cap])
                .take_while(|(a, b)| a == b)
                .count();
            if l > best_len {
                best_len = l;
                best_src = src;
            }
        }
        if best_len == 0 {
            factors.push(Lz77Factor::Literal(text[pos]));
            pos += 1;
        } else {
            factors.push(Lz77Factor::Reference {
                src: best_src as u64 + 1,
                len: best_len as u64,
            });
            pos += best_len;
        }
    }
    Lz77Factorization::new(self_ref, factors).expect("greedy factors are valid")
}

/// Greedy LZ78 with the dictionary in a trie. Before factor `i` is matched,
/// entry `i - 1` (previous factor plus the current symbol) is inserted, so a
/// factor may use the entry its own first symbol completes.
pub fn naive_lz78(text: &[Symbol]) -> Lz78Factorization {
    // node 0 is the root; node ids of symbol children are allocated lazily
    let mut child: HashMap<(usize, Symbol), usize> = HashMap::new();
    let mut label: Vec<Option<Lz78Factor>> = vec![None];
    let mut factors = Vec::new();
    let mut prev_node: Option<usize> = None;
    let mut pos = 0;
    while pos < text.len() {
        if let Some(p) = prev_node {
            let k = factors.len();
            let id = label.len();
            child.insert((p, text[pos]), id);
            label.push(Some(Lz78Factor::Entry(k)));
        }
        let mut node = *child.entry((0, text[pos])).or_insert_with(|| {
            label.push(Some(Lz78Factor::Symbol(text[pos])));
            label.len() - 1
        });
        let mut end = pos + 1;
        while let Some(&c) = text.get(end).and_then(|&s| child.get(&(node, s))) {
            node = c;
            end += 1;
        }
        factors.push(label[node].expect("every non-root node is labelled"));
        prev_node = Some(node);
        pos = end;
    }
    Lz78Factorization::new(factors).expect("greedy factors are valid")
}
