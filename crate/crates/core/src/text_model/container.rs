//! The line-oriented `CRX1` container.
//!
//! ```text
//! CRX1 <format> <alphabet_size> <N>[ selfref]
//! <payload line>*
//! ```
//!
//! Payload lines by format: `rle` has `<sym> <exp>`, `lz77` has `L <sym>` or
//! `R <src> <len>`, `lz78` has `<id>`, and `grammar`/`slp` have
//! `v<k> -> <item>+` with items `t<code>` or `v<index>`. Variables are listed
//! in index order starting from 1 and the last one is the start variable.
//! Parsing is strict (single spaces, no leading zeros, every line ends with
//! `\n`), so `parse(c.to_string()) == c` and `parse(s).to_string() == s`.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use super::{
    BudgetExceeded, Grammar, GrammarSymbol, Lz77Factor, Lz77Factorization, Lz78Factor,
    Lz78Factorization, ModelError, RleString, Run, Slp, SlpRule, Symbol, Text, VarId,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Format {
    Rle,
    Lz77,
    Lz78,
    Grammar,
    Slp,
}

impl Format {
    pub const ALL: [Format; 5] = [
        Format::Rle,
        Format::Lz77,
        Format::Lz78,
        Format::Grammar,
        Format::Slp,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Format::Rle => "rle",
            Format::Lz77 => "lz77",
            Format::Lz78 => "lz78",
            Format::Grammar => "grammar",
            Format::Slp => "slp",
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Format::ALL
            .into_iter()
            .find(|f| f.tag() == s)
            .ok_or_else(|| format!("unknown format `{s}`"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Payload {
    Rle(RleString),
    Lz77(Lz77Factorization),
    Lz78(Lz78Factorization),
    Grammar(Grammar),
    Slp(Slp),
}

impl Payload {
    pub fn format(&self) -> Format {
        match self {
            Payload::Rle(_) => Format::Rle,
            Payload::Lz77(_) => Format::Lz77,
            Payload::Lz78(_) => Format::Lz78,
            Payload::Grammar(_) => Format::Grammar,
            Payload::Slp(_) => Format::Slp,
        }
    }

    pub fn len(&self) -> u64 {
        match self {
            Payload::Rle(r) => r.len(),
            Payload::Lz77(f) => f.len(),
            Payload::Lz78(f) => f.len(),
            Payload::Grammar(g) => g.len(),
            Payload::Slp(s) => s.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Number of payload items: runs, factors, total right-hand-side length
    /// of a grammar, or assignments of an SLP.
    pub fn compressed_size(&self) -> usize {
        match self {
            Payload::Rle(r) => r.size(),
            Payload::Lz77(f) => f.size(),
            Payload::Lz78(f) => f.size(),
            Payload::Grammar(g) => g.size(),
            Payload::Slp(s) => s.size(),
        }
    }

    /// The represented string, if it has at most `limit` symbols.
    pub fn expand(&self, limit: u64) -> Result<Text, BudgetExceeded> {
        match self {
            Payload::Rle(r) => r.expand(limit),
            Payload::Lz77(f) => f.expand(limit),
            Payload::Lz78(f) => f.expand(limit),
            Payload::Grammar(g) => g.expand(limit),
            Payload::Slp(s) => s.expand(limit),
        }
    }

    fn max_symbol(&self) -> Option<Symbol> {
        match self {
            Payload::Rle(r) => r.runs().iter().map(|r| r.symbol).max(),
            Payload::Lz77(f) => f
                .factors()
                .iter()
                .filter_map(|f| match f {
                    Lz77Factor::Literal(c) => Some(*c),
                    Lz77Factor::Reference { .. } => None,
                })
                .max(),
            Payload::Lz78(f) => f
                .factors()
                .iter()
                .filter_map(|f| match f {
                    Lz78Factor::Symbol(c) => Some(*c),
                    Lz78Factor::Entry(_) => None,
                })
                .max(),
            Payload::Grammar(g) => g.max_symbol(),
            Payload::Slp(s) => s.max_symbol(),
        }
    }
}

/// A payload tagged with its alphabet size. The represented length is always
/// the payload's own, so a container cannot disagree with its header.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Container {
    alphabet_size: u32,
    payload: Payload,
}

impl Container {
    pub fn new(alphabet_size: u32, payload: Payload) -> Result<Self, ModelError> {
        if let Some(s) = payload.max_symbol() {
            if s.0 >= alphabet_size {
                return Err(ModelError::SymbolOutOfRange {
                    symbol: s.0,
                    alphabet_size,
                });
            }
        }
        Ok(Container {
            alphabet_size,
            payload,
        })
    }

    pub fn format(&self) -> Format {
        self.payload.format()
    }

    pub fn alphabet_size(&self) -> u32 {
        self.alphabet_size
    }

    /// Length `N` of the represented string.
    pub fn len(&self) -> u64 {
        self.payload.len()
    }

    pub fn is_empty(&self) -> bool {
        self.payload.is_empty()
    }

    pub fn compressed_size(&self) -> usize {
        self.payload.compressed_size()
    }

    pub fn payload(&self) -> &Payload {
        &self.payload
    }

    pub fn into_payload(self) -> Payload {
        self.payload
    }

    pub fn parse(s: &str) -> Result<Self, ParseError> {
        parse(s)
    }
}

impl fmt::Display for Container {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        write!(
            out,
            "CRX1 {} {} {}",
            self.format(),
            self.alphabet_size,
            self.len()
        )?;
        if let Payload::Lz77(z) = &self.payload {
            if z.is_self_referential() {
                out.push_str(" selfref");
            }
        }
        out.push('\n');
        match &self.payload {
            Payload::Rle(r) => {
                for run in r.runs() {
                    writeln!(out, "{} {}", run.symbol, run.len)?;
                }
            }
            Payload::Lz77(z) => {
                for factor in z.factors() {
                    match factor {
                        Lz77Factor::Literal(c) => writeln!(out, "L {c}")?,
                        Lz77Factor::Reference { src, len } => writeln!(out, "R {src} {len}")?,
                    }
                }
            }
            Payload::Lz78(z) => {
                for id in z.ids(self.alphabet_size) {
                    writeln!(out, "{id}")?;
                }
            }
            Payload::Grammar(g) => {
                for (i, rhs) in g.rules().iter().enumerate() {
                    write!(out, "v{} ->", i + 1)?;
                    for item in rhs {
                        write!(out, " {item}")?;
                    }
                    out.push('\n');
                }
            }
            Payload::Slp(s) => {
                for (i, rule) in s.rules().iter().enumerate() {
                    match rule {
                        SlpRule::Terminal(c) => writeln!(out, "v{} -> t{}", i + 1, c)?,
                        SlpRule::Pair(l, r) => {
                            writeln!(out, "v{} -> v{} v{}", i + 1, l + 1, r + 1)?
                        }
                    }
                }
            }
        }
        f.write_str(&out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    Model(ModelError),
}

/// A container that failed to parse, with the 1-based line at fault.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {}", match kind { ParseErrorKind::Syntax(m) => m.clone(), ParseErrorKind::Model(e) => e.to_string() })]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    fn syntax(line: usize, msg: impl Into<String>) -> Self {
        ParseError {
            line,
            kind: ParseErrorKind::Syntax(msg.into()),
        }
    }

    /// The model error, if the text was well formed but violated an invariant.
    pub fn model_error(&self) -> Option<&ModelError> {
        match &self.kind {
            ParseErrorKind::Model(e) => Some(e),
            ParseErrorKind::Syntax(_) => None,
        }
    }
}

impl From<ModelError> for ParseError {
    // Payload item k sits on line k + 1; errors without an item blame the header.
    fn from(e: ModelError) -> Self {
        let item = match e {
            ModelError::ZeroExponent { run } | ModelError::AdjacentEqualRuns { run, .. } => {
                Some(run)
            }
            ModelError::DanglingReference { factor } | ModelError::EmptyFactor { factor } => {
                Some(factor)
            }
            ModelError::CyclicGrammar { var }
            | ModelError::ForwardReferenceInSlp { var, .. }
            | ModelError::UndefinedVariable { var, .. }
            | ModelError::EmptyRule { var }
            | ModelError::UnreachableVariable { var } => Some(var),
            _ => None,
        };
        ParseError {
            line: item.map_or(1, |k| k + 1),
            kind: ParseErrorKind::Model(e),
        }
    }
}

/// What a successful [`validate`] learned about a container.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub format: Format,
    pub alphabet_size: u32,
    pub len: u64,
    pub compressed_size: usize,
}

/// Parses and checks a container, reporting the first violated invariant.
pub fn validate(s: &str) -> Result<ValidationReport, ParseError> {
    let c = parse(s)?;
    Ok(ValidationReport {
        format: c.format(),
        alphabet_size: c.alphabet_size(),
        len: c.len(),
        compressed_size: c.compressed_size(),
    })
}

fn parse(s: &str) -> Result<Container, ParseError> {
    let body = s
        .strip_suffix('\n')
        .ok_or_else(|| ParseError::syntax(s.lines().count().max(1), "missing final newline"))?;
    let mut lines = body.split('\n');
    let header = lines.next().unwrap_or_default();
    let h = fields(header, 1)?;
    if h.len() < 4 || h.len() > 5 || h[0] != "CRX1" {
        return Err(ParseError::syntax(
            1,
            "expected `CRX1 <format> <alphabet_size> <N>[ selfref]`",
        ));
    }
    let format: Format = h[1].parse().map_err(|e: String| ParseError::syntax(1, e))?;
    let sigma = u32::try_from(num(h[2], 1)?)
        .map_err(|_| ParseError::syntax(1, "alphabet size too large"))?;
    let declared = num(h[3], 1)?;
    let self_ref = match h.get(4) {
        None => false,
        Some(&"selfref") if format == Format::Lz77 => true,
        Some(other) => {
            return Err(ParseError::syntax(
                1,
                format!("unexpected header field `{other}`"),
            ))
        }
    };
    let items: Vec<(usize, Vec<&str>)> = lines
        .enumerate()
        .map(|(k, l)| fields(l, k + 2).map(|f| (k + 2, f)))
        .collect::<Result<_, _>>()?;
    let sym = |f: &str, line| -> Result<Symbol, ParseError> {
        let v = num(f, line)?;
        let s = u32::try_from(v).map_err(|_| ParseError::syntax(line, "symbol too large"))?;
        if s >= sigma {
            return Err(ParseError {
                line,
                kind: ParseErrorKind::Model(ModelError::SymbolOutOfRange {
                    symbol: s,
                    alphabet_size: sigma,
                }),
            });
        }
        Ok(Symbol(s))
    };
    let payload = match format {
        Format::Rle => {
            let mut runs = Vec::with_capacity(items.len());
            for (line, f) in &items {
                let [s, p] = arity::<2>(f, *line)?;
                runs.push(Run::new(sym(s, *line)?, num(p, *line)?));
            }
            Payload::Rle(RleString::new(runs)?)
        }
        Format::Lz77 => {
            let mut factors = Vec::with_capacity(items.len());
            for (line, f) in &items {
                factors.push(match f.first() {
                    Some(&"L") => {
                        let [_, s] = arity::<2>(f, *line)?;
                        Lz77Factor::Literal(sym(s, *line)?)
                    }
                    Some(&"R") => {
                        let [_, src, len] = arity::<3>(f, *line)?;
                        Lz77Factor::Reference {
                            src: num(src, *line)?,
                            len: num(len, *line)?,
                        }
                    }
                    _ => {
                        return Err(ParseError::syntax(
                            *line,
                            "expected `L <sym>` or `R <src> <len>`",
                        ))
                    }
                });
            }
            Payload::Lz77(Lz77Factorization::new(self_ref, factors)?)
        }
        Format::Lz78 => {
            let mut ids = Vec::with_capacity(items.len());
            for (line, f) in &items {
                let [id] = arity::<1>(f, *line)?;
                ids.push(num(id, *line)?);
            }
            Payload::Lz78(Lz78Factorization::from_ids(&ids, sigma)?)
        }
        Format::Grammar | Format::Slp => {
            let mut rules = Vec::with_capacity(items.len());
            for (k, (line, f)) in items.iter().enumerate() {
                if f.len() < 3 || f[1] != "->" {
                    return Err(ParseError::syntax(*line, "expected `v<k> -> <item>+`"));
                }
                if var(f[0], *line)? != k {
                    return Err(ParseError::syntax(
                        *line,
                        format!("expected variable v{}", k + 1),
                    ));
                }
                let rhs = f[2..]
                    .iter()
                    .map(|item| match item.as_bytes().first() {
                        Some(b't') => sym(&item[1..], *line).map(GrammarSymbol::Terminal),
                        Some(b'v') => var(item, *line).map(|v| GrammarSymbol::Var(VarId(v))),
                        _ => Err(ParseError::syntax(*line, format!("bad item `{item}`"))),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                rules.push(rhs);
            }
            if format == Format::Grammar {
                Payload::Grammar(Grammar::new(rules)?)
            } else {
                let mut slp = Vec::with_capacity(rules.len());
                for (k, rhs) in rules.iter().enumerate() {
                    slp.push(match rhs[..] {
                        [GrammarSymbol::Terminal(c)] => SlpRule::Terminal(c),
                        [GrammarSymbol::Var(VarId(l)), GrammarSymbol::Var(VarId(r))] => {
                            SlpRule::Pair(l, r)
                        }
                        _ => {
                            return Err(ParseError::syntax(
                                k + 2,
                                "an SLP rule is one terminal or two variables",
                            ))
                        }
                    });
                }
                Payload::Slp(Slp::new(slp)?)
            }
        }
    };
    if payload.len() != declared {
        return Err(ModelError::LengthMismatch {
            declared,
            actual: payload.len(),
        }
        .into());
    }
    Ok(Container {
        alphabet_size: sigma,
        payload,
    })
}

fn fields(line: &str, n: usize) -> Result<Vec<&str>, ParseError> {
    let f: Vec<&str> = line.split(' ').collect();
    if f.iter().any(|x| x.is_empty()) {
        return Err(ParseError::syntax(n, "empty line or stray space"));
    }
    Ok(f)
}

fn arity<'a, const K: usize>(f: &[&'a str], line: usize) -> Result<[&'a str; K], ParseError> {
    f.try_into()
        .map_err(|_| ParseError::syntax(line, format!("expected {K} fields, found {}", f.len())))
}

fn num(s: &str, line: usize) -> Result<u64, ParseError> {
    let canonical = !s.is_empty()
        && s.bytes().all(|b| b.is_ascii_digit())
        && (s.len() == 1 || !s.starts_with('0'));
    if !canonical {
        return Err(ParseError::syntax(
            line,
            format!("`{s}` is not a canonical decimal integer"),
        ));
    }
    s.parse()
        .map_err(|_| ParseError::syntax(line, format!("`{s}` does not fit in 64 bits")))
}

fn var(s: &str, line: usize) -> Result<usize, ParseError> {
    let k = s
        .strip_prefix('v')
        .ok_or_else(|| ParseError::syntax(line, format!("`{s}` is not a variable")))?;
    match num(k, line)? {
        0 => Err(ParseError::syntax(line, "variables are numbered from 1")),
        k => {
            usize::try_from(k - 1).map_err(|_| ParseError::syntax(line, "variable index too large"))
        }
    }
}
