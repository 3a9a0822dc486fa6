//! Braid words, Conway notation and the Conway-form braid.

mod braid;
mod conway;

pub use braid::{BraidLetter, BraidWord};
pub use conway::{parse_conway, ConwayNotation};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("plat closures need an even, positive strand count (got {0})")]
    OddStrandCount(usize),
    #[error("generator s{generator} is out of range for {strands} strands")]
    GeneratorOutOfRange { generator: usize, strands: usize },
    #[error("the Conway braid needs an odd-length notation (got length {0})")]
    EvenConwayLength(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConwayError {
    #[error("empty Conway notation")]
    Empty,
    #[error("entry {position} is zero")]
    ZeroEntry { position: usize },
    #[error("entries must all have the same sign")]
    MixedSigns,
    #[error("not an integer: {0:?}")]
    BadInteger(String),
    #[error("unbalanced bracket")]
    UnbalancedBracket,
    #[error("Conway notation must be ASCII")]
    NonAscii,
    #[error("continued fraction overflows 64-bit integers")]
    Overflow,
}
