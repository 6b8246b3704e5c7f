//! Texts and the compressed representations this crate converts between.
//!
//! Every representation validates its invariants on construction, so a value
//! of any of these types is always well formed. Expansion back to a [`Text`]
//! is available but always takes an explicit symbol budget.

mod container;
mod grammar;
mod lz;
mod rle;
mod slp;

use std::fmt;
use std::ops::Deref;

pub use container::{
    validate, Container, Format, ParseError, ParseErrorKind, Payload, ValidationReport,
};
pub use grammar::{canonical_relabel, Grammar, GrammarSymbol, VarId};
pub use lz::{Lz77Factor, Lz77Factorization, Lz78Factor, Lz78Factorization};
pub use rle::{RleString, Run};
pub use slp::{Slp, SlpRule};

/// Default expansion budget, in symbols (64 MiB of one-byte symbols).
pub const DEFAULT_EXPANSION_LIMIT: u64 = 64 << 20;

/// A symbol, identified by its rank in the declared alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(pub u32);

impl Symbol {
    pub fn code(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An uncompressed string over integer symbols.
///
/// Positions in the public API are 1-based, so `S[i:j]` is `text.substr(i, j)`
/// and is empty whenever `j < i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Text(Vec<Symbol>);

impl Text {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Text(symbols)
    }

    /// Maps `a` to symbol 0, `b` to 1, and so on. Handy for small examples.
    ///
    /// # Panics
    ///
    /// Panics on characters outside `a..=z`.
    pub fn from_letters(s: &str) -> Self {
        Text(
            s.chars()
                .map(|c| {
                    assert!(c.is_ascii_lowercase(), "not a lowercase letter: {c:?}");
                    Symbol(c as u32 - 'a' as u32)
                })
                .collect(),
        )
    }

    /// Inverse of [`Text::from_letters`]; symbols above 25 render as `?`.
    pub fn to_letters(&self) -> String {
        self.0
            .iter()
            .map(|s| {
                char::from_u32('a' as u32 + s.0)
                    .filter(|c| c.is_ascii_lowercase())
                    .unwrap_or('?')
            })
            .collect()
    }

    /// Identity mapping from bytes to symbol codes `0..256`.
    pub fn from_bytes(bytes: &[u8]) -> Self {
        Text(bytes.iter().map(|&b| Symbol(b as u32)).collect())
    }

    /// Returns `None` if some symbol does not fit in a byte.
    pub fn to_bytes(&self) -> Option<Vec<u8>> {
        self.0.iter().map(|s| u8::try_from(s.0).ok()).collect()
    }

    /// The 1-based character `S[i]`.
    pub fn at(&self, i: usize) -> Option<Symbol> {
        i.checked_sub(1).and_then(|i| self.0.get(i).copied())
    }

    /// The 1-based substring `S[i:j]`, empty when `j < i`.
    ///
    /// # Panics
    ///
    /// Panics if `i <= j` and the range is outside the text.
    pub fn substr(&self, i: usize, j: usize) -> &[Symbol] {
        if j < i {
            &[]
        } else {
            &self.0[i - 1..j]
        }
    }

    pub fn into_inner(self) -> Vec<Symbol> {
        self.0
    }
}

impl Deref for Text {
    type Target = [Symbol];

    fn deref(&self) -> &[Symbol] {
        &self.0
    }
}

impl From<Vec<Symbol>> for Text {
    fn from(v: Vec<Symbol>) -> Self {
        Text(v)
    }
}

impl FromIterator<Symbol> for Text {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        Text(iter.into_iter().collect())
    }
}

/// A violated representation invariant. Item numbers are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("run {run} has a zero exponent")]
    ZeroExponent { run: usize },
    #[error("runs {run} and {} both repeat symbol {symbol}", run + 1)]
    AdjacentEqualRuns { run: usize, symbol: u32 },
    #[error("factor {factor} refers outside the already decoded prefix")]
    DanglingReference { factor: usize },
    #[error("factor {factor} has length zero")]
    EmptyFactor { factor: usize },
    #[error("variable {var} derives itself")]
    CyclicGrammar { var: usize },
    #[error("rule {var} refers to variable {target}, which is not defined before it")]
    ForwardReferenceInSlp { var: usize, target: usize },
    #[error("rule {var} refers to undefined variable {target}")]
    UndefinedVariable { var: usize, target: usize },
    #[error("rule {var} has an empty right-hand side")]
    EmptyRule { var: usize },
    #[error("variable {var} is unreachable from the start variable")]
    UnreachableVariable { var: usize },
    #[error("a grammar needs at least one rule")]
    EmptyGrammar,
    #[error("symbol {symbol} is outside the alphabet of size {alphabet_size}")]
    SymbolOutOfRange { symbol: u32, alphabet_size: u32 },
    #[error("declared length {declared} but the payload derives {actual} symbols")]
    LengthMismatch { declared: u64, actual: u64 },
    #[error("derived length does not fit in 64 bits")]
    LengthOverflow,
    #[error("a grammar cannot represent the empty string")]
    EmptyText,
}

/// Expansion would produce more symbols than the caller allowed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
#[error("expanding {needed} symbols exceeds the budget of {limit}")]
pub struct BudgetExceeded {
    pub needed: u64,
    pub limit: u64,
}

pub(crate) fn check_budget(needed: u64, limit: u64) -> Result<(), BudgetExceeded> {
    if needed > limit {
        Err(BudgetExceeded { needed, limit })
    } else {
        Ok(())
    }
}
