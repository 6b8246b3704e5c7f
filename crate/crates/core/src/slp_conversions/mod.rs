//! Conversions from a straight-line program, none of which expands it.

mod bisection;
mod lz;
mod rle;

pub use bisection::slp_to_bisection;
pub use lz::{slp_to_lz77, slp_to_lz78};
pub use rle::{annotate_runs, slp_to_rle, RunLinkAnnotations};

#[cfg(test)]
mod tests;
