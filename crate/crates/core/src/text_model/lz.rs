use super::{check_budget, BudgetExceeded, ModelError, Symbol, Text};

/// One LZ77 factor. `src` is the 1-based position the copy starts from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Lz77Factor {
    Literal(Symbol),
    Reference { src: u64, len: u64 },
}

impl Lz77Factor {
    pub fn len(&self) -> u64 {
        match *self {
            Lz77Factor::Literal(_) => 1,
            Lz77Factor::Reference { len, .. } => len,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// An LZ77 factorization, with or without self-references.
///
/// Without self-references a copy must lie entirely inside the already
/// decoded prefix; with them only its start must.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lz77Factorization {
    self_referential: bool,
    factors: Vec<Lz77Factor>,
    len: u64,
}

impl Lz77Factorization {
    pub fn new(self_referential: bool, factors: Vec<Lz77Factor>) -> Result<Self, ModelError> {
        let mut decoded = 0u64;
        for (i, f) in factors.iter().enumerate() {
            if let Lz77Factor::Reference { src, len } = *f {
                if len == 0 {
                    return Err(ModelError::EmptyFactor { factor: i + 1 });
                }
                let start = decoded + 1;
                let ok = src >= 1
                    && if self_referential {
                        src < start
                    } else {
                        src.checked_add(len).is_some_and(|end| end <= start)
                    };
                if !ok {
                    return Err(ModelError::DanglingReference { factor: i + 1 });
                }
            }
            decoded = decoded
                .checked_add(f.len())
                .ok_or(ModelError::LengthOverflow)?;
        }
        Ok(Lz77Factorization {
            self_referential,
            factors,
            len: decoded,
        })
    }

    pub fn is_self_referential(&self) -> bool {
        self.self_referential
    }

    pub fn factors(&self) -> &[Lz77Factor] {
        &self.factors
    }

    pub fn size(&self) -> usize {
        self.factors.len()
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Decodes left to right. Overlapping self-references copy one symbol at
    /// a time, so a source running into the target is well defined.
    pub fn expand(&self, limit: u64) -> Result<Text, BudgetExceeded> {
        check_budget(self.len, limit)?;
        let mut out: Vec<Symbol> = Vec::with_capacity(self.len as usize);
        for f in &self.factors {
            match *f {
                Lz77Factor::Literal(c) => out.push(c),
                Lz77Factor::Reference { src, len } => {
                    let from = src as usize - 1;
                    for k in 0..len as usize {
                        out.push(out[from + k]);
                    }
                }
            }
        }
        Ok(Text::new(out))
    }
}

/// One LZ78 factor: an alphabet symbol or the dictionary entry `f_k f_{k+1}[1]`
/// created after factor `k` (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Lz78Factor {
    Symbol(Symbol),
    Entry(usize),
}

/// An LZ78 factorization stored as dictionary references.
///
/// The dictionary itself is never stored; it is rebuilt while decoding.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lz78Factorization {
    factors: Vec<Lz78Factor>,
    lens: Vec<u64>,
    len: u64,
}

impl Lz78Factorization {
    pub fn new(factors: Vec<Lz78Factor>) -> Result<Self, ModelError> {
        let mut lens = Vec::with_capacity(factors.len());
        let mut len = 0u64;
        for (i, f) in factors.iter().enumerate() {
            let flen = match *f {
                Lz78Factor::Symbol(_) => 1,
                // factor i+1 (1-based) may use entries 1..=i
                Lz78Factor::Entry(k) if k >= 1 && k <= i => lens[k - 1] + 1,
                Lz78Factor::Entry(_) => {
                    return Err(ModelError::DanglingReference { factor: i + 1 })
                }
            };
            lens.push(flen);
            len = len.checked_add(flen).ok_or(ModelError::LengthOverflow)?;
        }
        Ok(Lz78Factorization { factors, lens, len })
    }

    /// Decodes the LZW-style id sequence: ids `1..=alphabet_size` are symbols,
    /// `alphabet_size + k` is dictionary entry `k`.
    pub fn from_ids(ids: &[u64], alphabet_size: u32) -> Result<Self, ModelError> {
        let sigma = alphabet_size as u64;
        let factors = ids
            .iter()
            .enumerate()
            .map(|(i, &id)| match id {
                0 => Err(ModelError::DanglingReference { factor: i + 1 }),
                id if id <= sigma => Ok(Lz78Factor::Symbol(Symbol((id - 1) as u32))),
                id => usize::try_from(id - sigma)
                    .map(Lz78Factor::Entry)
                    .map_err(|_| ModelError::DanglingReference { factor: i + 1 }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(factors)
    }

    pub fn ids(&self, alphabet_size: u32) -> Vec<u64> {
        self.factors
            .iter()
            .map(|f| match *f {
                Lz78Factor::Symbol(c) => c.0 as u64 + 1,
                Lz78Factor::Entry(k) => alphabet_size as u64 + k as u64,
            })
            .collect()
    }

    pub fn factors(&self) -> &[Lz78Factor] {
        &self.factors
    }

    /// Length of each factor.
    pub fn factor_lens(&self) -> &[u64] {
        &self.lens
    }

    pub fn size(&self) -> usize {
        self.factors.len()
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn expand(&self, limit: u64) -> Result<Text, BudgetExceeded> {
        check_budget(self.len, limit)?;
        let mut out: Vec<Symbol> = Vec::with_capacity(self.len as usize);
        let mut starts = Vec::with_capacity(self.factors.len());
        for f in &self.factors {
            starts.push(out.len());
            match *f {
                Lz78Factor::Symbol(c) => out.push(c),
                Lz78Factor::Entry(k) => {
                    let (from, n) = (starts[k - 1], self.lens[k - 1] as usize);
                    for j in 0..n {
                        out.push(out[from + j]);
                    }
                    // the entry's last symbol is the first symbol of factor k+1,
                    // which may be the factor being written right now
                    out.push(out[starts[k]]);
                }
            }
        }
        Ok(Text::new(out))
    }
}
