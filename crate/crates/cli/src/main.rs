mod route;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use crx_core::reference_codecs::{
    grammar_to_slp, naive_bisection, naive_lz77, naive_lz78, naive_repair, ncd, rle_encode,
};
use crx_core::rle_conversions::rle_to_slp;
use crx_core::slp_engine::{slp_equals, substring_slp};
use crx_core::text_model::{
    BudgetExceeded, Container, Lz77Factor, ModelError, Payload, Slp, SlpRule, Symbol, Text,
    DEFAULT_EXPANSION_LIMIT,
};

use route::{Target, Unreachable};

#[derive(Parser)]
#[command(
    name = "crx",
    version,
    about = "Convert between compressed string representations"
)]
struct Cli {
    /// Largest number of symbols any command may expand to.
    #[arg(long, global = true, env = "CRX_MAX_OUTPUT", default_value_t = DEFAULT_EXPANSION_LIMIT, value_name = "BYTES")]
    max_output: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compress a raw file with a plain codec.
    Encode {
        #[arg(long, value_enum)]
        codec: Target,
        /// Let LZ77 sources overlap the factor they produce.
        #[arg(long)]
        self_ref: bool,
        /// Explicit alphabet: byte `k` of this string becomes symbol `k`.
        #[arg(long)]
        alphabet: Option<String>,
        input: PathBuf,
        output: PathBuf,
    },
    /// Expand a container back to raw bytes.
    Decode {
        #[arg(long)]
        alphabet: Option<String>,
        input: PathBuf,
        output: PathBuf,
    },
    /// Convert a container to another representation without expanding it.
    Convert {
        #[arg(long, value_enum)]
        to: Target,
        #[arg(long)]
        self_ref: bool,
        /// Allow LZ inputs by expanding them first.
        #[arg(long)]
        via_expand: bool,
        input: PathBuf,
        output: PathBuf,
    },
    /// Check whether two containers represent the same string.
    Verify { a: PathBuf, b: PathBuf },
    /// Normalized compression distance of two raw files.
    Ncd {
        #[arg(long, value_enum)]
        codec: Target,
        x: PathBuf,
        y: PathBuf,
    },
    /// Summarize a container.
    Info { input: PathBuf },
}

/// Maps raw bytes to symbols and back.
enum Alphabet {
    Bytes,
    Table(Vec<u8>),
}

impl Alphabet {
    fn new(table: Option<&str>) -> Result<Self> {
        let Some(s) = table else {
            return Ok(Alphabet::Bytes);
        };
        let table = s.as_bytes().to_vec();
        if table.is_empty() {
            bail!("the alphabet table is empty");
        }
        for (i, b) in table.iter().enumerate() {
            if table[..i].contains(b) {
                bail!("byte {b:#04x} appears twice in the alphabet table");
            }
        }
        Ok(Alphabet::Table(table))
    }

    fn size(&self) -> u32 {
        match self {
            Alphabet::Bytes => 256,
            Alphabet::Table(t) => t.len() as u32,
        }
    }

    fn encode(&self, bytes: &[u8]) -> Result<Text> {
        match self {
            Alphabet::Bytes => Ok(Text::from_bytes(bytes)),
            Alphabet::Table(t) => bytes
                .iter()
                .map(|b| match t.iter().position(|x| x == b) {
                    Some(k) => Ok(Symbol(k as u32)),
                    None => bail!("byte {b:#04x} is not in the alphabet table"),
                })
                .collect(),
        }
    }

    fn decode(&self, text: &Text) -> Result<Vec<u8>> {
        match self {
            Alphabet::Bytes => text
                .to_bytes()
                .context("symbols above 255 need --alphabet to decode"),
            Alphabet::Table(t) => text
                .iter()
                .map(|s| {
                    t.get(s.0 as usize)
                        .copied()
                        .with_context(|| format!("symbol {} is not in the alphabet table", s.0))
                })
                .collect(),
        }
    }
}

fn read_container(path: &Path) -> Result<Container> {
    let s = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Container::parse(&s).with_context(|| format!("parsing {}", path.display()))
}

fn write(path: &Path, bytes: impl AsRef<[u8]>) -> Result<()> {
    fs::write(path, bytes).with_context(|| format!("writing {}", path.display()))
}

fn encode(text: &Text, codec: Target, self_ref: bool, sigma: u32) -> Result<Container> {
    let payload = match codec {
        Target::Rle => Payload::Rle(rle_encode(text)),
        Target::Lz77 => Payload::Lz77(naive_lz77(text, self_ref)),
        Target::Lz78 => Payload::Lz78(naive_lz78(text)),
        Target::Repair => Payload::Grammar(naive_repair(text)?.0),
        Target::Bisection => Payload::Grammar(naive_bisection(text)?),
        Target::Slp => Payload::Slp(grammar_to_slp(&naive_bisection(text)?)),
    };
    Ok(Container::new(sigma, payload)?)
}

/// An SLP for a non-LZ payload, built without expansion.
fn to_slp(p: &Payload) -> Option<Result<Slp>> {
    match p {
        Payload::Slp(s) => Some(Ok(s.clone())),
        Payload::Grammar(g) => Some(Ok(grammar_to_slp(g))),
        Payload::Rle(r) => Some(rle_to_slp(r).ok_or_else(|| ModelError::EmptyText.into())),
        Payload::Lz77(_) | Payload::Lz78(_) => None,
    }
}

fn same_prefix(a: &Slp, b: &Slp, k: u64) -> bool {
    k == 0
        || slp_equals(
            &substring_slp(a, 1, k).unwrap(),
            &substring_slp(b, 1, k).unwrap(),
        )
}

/// 1-based position of the first difference, or `None` if equal.
fn first_difference(a: &Slp, b: &Slp) -> Option<u64> {
    let m = a.len().min(b.len());
    if same_prefix(a, b, m) {
        return (a.len() != b.len()).then_some(m + 1);
    }
    // largest equal prefix length lies in [lo, hi)
    let (mut lo, mut hi) = (0, m);
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if same_prefix(a, b, mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(lo + 1)
}

fn verify(a: &Container, b: &Container, budget: u64) -> Result<Option<u64>> {
    // an empty side has no SLP; expanding it is free
    let compressed = !a.is_empty() && !b.is_empty();
    if let (true, Some(x), Some(y)) = (compressed, to_slp(a.payload()), to_slp(b.payload())) {
        return Ok(first_difference(&x?, &y?));
    }
    let (x, y) = (a.payload().expand(budget)?, b.payload().expand(budget)?);
    let diff = x.iter().zip(y.iter()).position(|(c, d)| c != d);
    Ok(match diff {
        Some(i) => Some(i as u64 + 1),
        None => (x.len() != y.len()).then_some(x.len().min(y.len()) as u64 + 1),
    })
}

fn info(c: &Container) -> Vec<(&'static str, String)> {
    let (n, len) = (c.compressed_size(), c.len());
    let ratio = if n == 0 {
        "-".to_string()
    } else {
        format!("{:.3}", len as f64 / n as f64)
    };
    let mut out = vec![
        ("format", c.format().to_string()),
        ("alphabet", c.alphabet_size().to_string()),
        ("n", n.to_string()),
        ("N", len.to_string()),
        ("ratio", ratio),
    ];
    match c.payload() {
        Payload::Rle(r) => {
            out.push((
                "longest_run",
                r.runs()
                    .iter()
                    .map(|x| x.len)
                    .max()
                    .unwrap_or(0)
                    .to_string(),
            ));
        }
        Payload::Lz77(z) => {
            let refs = z
                .factors()
                .iter()
                .filter(|f| matches!(f, Lz77Factor::Reference { .. }))
                .count();
            out.push(("selfref", z.is_self_referential().to_string()));
            out.push(("literals", (z.size() - refs).to_string()));
            out.push(("references", refs.to_string()));
            out.push((
                "longest_factor",
                z.factors()
                    .iter()
                    .map(|f| f.len())
                    .max()
                    .unwrap_or(0)
                    .to_string(),
            ));
        }
        Payload::Lz78(z) => {
            out.push((
                "longest_factor",
                z.factor_lens()
                    .iter()
                    .max()
                    .copied()
                    .unwrap_or(0)
                    .to_string(),
            ));
        }
        Payload::Grammar(g) => {
            out.push(("rules", g.num_vars().to_string()));
            out.push((
                "longest_rhs",
                g.rules()
                    .iter()
                    .map(Vec::len)
                    .max()
                    .unwrap_or(0)
                    .to_string(),
            ));
        }
        Payload::Slp(s) => {
            let terminals = s
                .rules()
                .iter()
                .filter(|r| matches!(r, SlpRule::Terminal(_)))
                .count();
            out.push(("rules", s.size().to_string()));
            out.push(("terminals", terminals.to_string()));
            out.push(("height", s.height(s.start()).to_string()));
        }
    }
    out
}

fn run(cli: Cli) -> Result<ExitCode> {
    let budget = cli.max_output;
    match cli.command {
        Command::Encode {
            codec,
            self_ref,
            alphabet,
            input,
            output,
        } => {
            let alpha = Alphabet::new(alphabet.as_deref())?;
            let bytes = fs::read(&input).with_context(|| format!("reading {}", input.display()))?;
            let c = encode(&alpha.encode(&bytes)?, codec, self_ref, alpha.size())?;
            write(&output, c.to_string())?;
        }
        Command::Decode {
            alphabet,
            input,
            output,
        } => {
            let alpha = Alphabet::new(alphabet.as_deref())?;
            let c = read_container(&input)?;
            let text = c.payload().expand(budget)?;
            write(&output, alpha.decode(&text)?)?;
        }
        Command::Convert {
            to,
            self_ref,
            via_expand,
            input,
            output,
        } => {
            let c = route::convert(read_container(&input)?, to, self_ref, via_expand, budget)?;
            write(&output, c.to_string())?;
        }
        Command::Verify { a, b } => {
            match verify(&read_container(&a)?, &read_container(&b)?, budget)? {
                None => println!("equal"),
                Some(pos) => {
                    println!("differ {pos}");
                    return Ok(ExitCode::from(4));
                }
            }
        }
        Command::Ncd { codec, x, y } => {
            let x = fs::read(&x).with_context(|| format!("reading {}", x.display()))?;
            let y = fs::read(&y).with_context(|| format!("reading {}", y.display()))?;
            if x.is_empty() || y.is_empty() {
                bail!("ncd needs two nonempty files");
            }
            let xy = [x.as_slice(), y.as_slice()].concat();
            let size = |b: &[u8]| {
                encode(&Text::from_bytes(b), codec, false, 256).map(|c| c.compressed_size())
            };
            let (cxy, cx, cy) = (size(&xy)?, size(&x)?, size(&y)?);
            println!("ncd {:.6}", ncd(cxy, cx, cy)?);
            println!("sizes {cxy} {cx} {cy}");
        }
        Command::Info { input } => {
            for (k, v) in info(&read_container(&input)?) {
                println!("{k} {v}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn exit_code(e: &anyhow::Error) -> u8 {
    if e.downcast_ref::<Unreachable>().is_some() {
        2
    } else if e.downcast_ref::<BudgetExceeded>().is_some() {
        3
    } else {
        1
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("crx: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
