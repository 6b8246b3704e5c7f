//! The conversion graph behind `crx convert`.

use std::collections::VecDeque;
use std::fmt;

use anyhow::{anyhow, Result};
use crx_core::reference_codecs::{grammar_to_slp, rle_encode};
use crx_core::rle_conversions::{
    rle_to_bisection, rle_to_lz77, rle_to_lz78, rle_to_repair, rle_to_slp,
};
use crx_core::slp_conversions::{slp_to_bisection, slp_to_lz77, slp_to_lz78, slp_to_rle};
use crx_core::text_model::{Container, Format, ModelError, Payload};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Target {
    Rle,
    Lz77,
    Lz78,
    Repair,
    Bisection,
    Slp,
}

impl Target {
    /// Formats from which the last step into this target starts.
    fn last_hop(self) -> &'static [Format] {
        match self {
            Target::Rle => &[Format::Rle],
            Target::Repair => &[Format::Rle],
            Target::Slp => &[Format::Slp],
            Target::Lz77 | Target::Lz78 | Target::Bisection => &[Format::Rle, Format::Slp],
        }
    }
}

/// No chain of implemented conversions leads from `from` to `to`.
#[derive(Debug)]
pub struct Unreachable {
    pub from: Format,
    pub to: Target,
}

impl fmt::Display for Unreachable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let to = format!("{:?}", self.to).to_lowercase();
        write!(f, "no conversion from {} to {to}", self.from)?;
        if matches!(self.from, Format::Lz77 | Format::Lz78) {
            write!(
                f,
                ": {} input must be expanded first (pass --via-expand)",
                self.from
            )?;
        }
        Ok(())
    }
}

impl std::error::Error for Unreachable {}

fn hops(f: Format, via_expand: bool) -> &'static [Format] {
    match f {
        Format::Rle => &[Format::Slp],
        Format::Slp => &[Format::Rle],
        Format::Grammar => &[Format::Slp],
        Format::Lz77 | Format::Lz78 if via_expand => &[Format::Rle],
        Format::Lz77 | Format::Lz78 => &[],
    }
}

/// Shortest chain of formats from `from` to one that feeds `to` directly.
fn plan(from: Format, to: Target, via_expand: bool) -> Option<Vec<Format>> {
    let mut prev = std::collections::HashMap::from([(from, from)]);
    let mut queue = VecDeque::from([from]);
    while let Some(f) = queue.pop_front() {
        if to.last_hop().contains(&f) {
            let mut path = vec![f];
            while path[path.len() - 1] != from {
                path.push(prev[&path[path.len() - 1]]);
            }
            path.reverse();
            return Some(path);
        }
        for &g in hops(f, via_expand) {
            if let std::collections::hash_map::Entry::Vacant(e) = prev.entry(g) {
                e.insert(f);
                queue.push_back(g);
            }
        }
    }
    None
}

fn already_there(p: &Payload, to: Target, self_ref: bool) -> bool {
    match (p, to) {
        (Payload::Rle(_), Target::Rle)
        | (Payload::Slp(_), Target::Slp)
        | (Payload::Lz78(_), Target::Lz78) => true,
        (Payload::Lz77(z), Target::Lz77) => z.is_self_referential() == self_ref,
        _ => false,
    }
}

fn step(p: Payload, to: Format, budget: u64) -> Result<Payload> {
    Ok(match (p, to) {
        (Payload::Rle(r), Format::Slp) => {
            Payload::Slp(rle_to_slp(&r).ok_or(ModelError::EmptyText)?)
        }
        (Payload::Slp(s), Format::Rle) => Payload::Rle(slp_to_rle(&s)),
        (Payload::Grammar(g), Format::Slp) => Payload::Slp(grammar_to_slp(&g)),
        (p @ (Payload::Lz77(_) | Payload::Lz78(_)), Format::Rle) => {
            Payload::Rle(rle_encode(&p.expand(budget)?))
        }
        (p, to) => unreachable!("no hop from {} to {to}", p.format()),
    })
}

fn finish(p: Payload, to: Target, self_ref: bool) -> Result<Payload> {
    Ok(match (p, to) {
        (p @ Payload::Rle(_), Target::Rle) | (p @ Payload::Slp(_), Target::Slp) => p,
        (Payload::Rle(r), Target::Lz77) => Payload::Lz77(rle_to_lz77(&r, self_ref)),
        (Payload::Rle(r), Target::Lz78) => Payload::Lz78(rle_to_lz78(&r)),
        (Payload::Rle(r), Target::Repair) => Payload::Grammar(rle_to_repair(&r)?),
        (Payload::Rle(r), Target::Bisection) => Payload::Grammar(rle_to_bisection(&r)?),
        (Payload::Slp(s), Target::Lz77) => Payload::Lz77(slp_to_lz77(&s, self_ref)),
        (Payload::Slp(s), Target::Lz78) => Payload::Lz78(slp_to_lz78(&s)),
        (Payload::Slp(s), Target::Bisection) => Payload::Grammar(slp_to_bisection(&s)),
        (p, to) => unreachable!("{} does not feed {to:?}", p.format()),
    })
}

/// Converts `c` to `to`. Expansion happens only for LZ sources and only when
/// `via_expand` is set, bounded by `budget` symbols.
pub fn convert(
    c: Container,
    to: Target,
    self_ref: bool,
    via_expand: bool,
    budget: u64,
) -> Result<Container> {
    let sigma = c.alphabet_size();
    let from = c.format();
    let mut p = c.into_payload();
    if !already_there(&p, to, self_ref) {
        let path = plan(from, to, via_expand).ok_or_else(|| anyhow!(Unreachable { from, to }))?;
        for &f in &path[1..] {
            p = step(p, f, budget)?;
        }
        p = finish(p, to, self_ref)?;
    }
    Ok(Container::new(sigma, p)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plans() {
        assert_eq!(
            plan(Format::Grammar, Target::Repair, false),
            Some(vec![Format::Grammar, Format::Slp, Format::Rle])
        );
        assert_eq!(
            plan(Format::Slp, Target::Lz78, false),
            Some(vec![Format::Slp])
        );
        assert_eq!(plan(Format::Lz78, Target::Repair, false), None);
        assert_eq!(
            plan(Format::Lz77, Target::Slp, true),
            Some(vec![Format::Lz77, Format::Rle, Format::Slp])
        );
    }
}
