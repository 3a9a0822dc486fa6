//! Exact invariant reports and the identities tying them together.
//!
//! Every report is computed along independent routes (continued fraction,
//! Goeritz matrix, crossing counts, fork automaton) and the routes are
//! compared. A mismatch is an [`InvariantError::Identity`], never a warning.

mod diagram_report;
mod laws;
mod report;

pub use diagram_report::{diagram_invariants, DiagramInvariants};
pub use laws::{check_mirror, check_sum, LawSide, MirrorVerdict, SumVerdict};
pub use report::{analyze, report, Analysis, InvariantReport};

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braidkit::{parse_conway, BraidError, ConwayError, ConwayNotation};
use crate::diagram::DiagramError;
use crate::forkengine::ForkError;
use crate::goeritz::SignatureError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error(transparent)]
    Conway(#[from] ConwayError),
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Signature(#[from] SignatureError),
    #[error(transparent)]
    Fork(#[from] ForkError),
    #[error("{fraction} has even numerator: a two-component two-bridge link, not a knot")]
    NotAKnot { fraction: Fraction },
    #[error("signature {0} is odd")]
    OddSignature(i64),
    #[error("identity {name} fails: {left} != {right}")]
    Identity {
        name: &'static str,
        left: String,
        right: String,
    },
}

impl InvariantError {
    /// True when the input describes a link rather than a knot.
    pub fn is_link(&self) -> bool {
        matches!(
            self,
            InvariantError::NotAKnot { .. }
                | InvariantError::Diagram(DiagramError::LinkNotKnot { .. })
        )
    }
}

/// Fails with [`InvariantError::Identity`] unless `left == right`.
pub(crate) fn ensure<T: PartialEq + fmt::Display>(
    name: &'static str,
    left: T,
    right: T,
) -> Result<(), InvariantError> {
    if left == right {
        Ok(())
    } else {
        Err(InvariantError::Identity {
            name,
            left: left.to_string(),
            right: right.to_string(),
        })
    }
}

/// Exact rational, serialized as `{"num": …, "den": …}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fraction {
    pub num: i64,
    pub den: i64,
}

impl Fraction {
    pub fn to_ratio(self) -> Ratio<i64> {
        Ratio::new(self.num, self.den)
    }
}

impl From<Ratio<i64>> for Fraction {
    fn from(r: Ratio<i64>) -> Self {
        Self {
            num: *r.numer(),
            den: *r.denom(),
        }
    }
}

impl From<i64> for Fraction {
    fn from(n: i64) -> Self {
        Self { num: n, den: 1 }
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// A knot given either as a Conway notation or as the trivial knot, which
/// has no Conway notation of its own.
///
/// Serialized as the list of Conway entries, empty for the unknot.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub enum KnotSpec {
    Unknot,
    Conway(ConwayNotation),
}

impl KnotSpec {
    pub fn mirror(&self) -> Self {
        match self {
            KnotSpec::Unknot => KnotSpec::Unknot,
            KnotSpec::Conway(c) => KnotSpec::Conway(c.negated()),
        }
    }
}

impl TryFrom<Vec<i64>> for KnotSpec {
    type Error = ConwayError;

    fn try_from(entries: Vec<i64>) -> Result<Self, Self::Error> {
        if entries.is_empty() {
            return Ok(KnotSpec::Unknot);
        }
        ConwayNotation::new(entries).map(KnotSpec::Conway)
    }
}

impl From<KnotSpec> for Vec<i64> {
    fn from(k: KnotSpec) -> Self {
        match k {
            KnotSpec::Unknot => Vec::new(),
            KnotSpec::Conway(c) => c.entries().to_vec(),
        }
    }
}

/// Empty text, `[]` and `unknot` name the unknot; anything else must be a
/// Conway notation.
impl FromStr for KnotSpec {
    type Err = ConwayError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.is_empty() || t == "[]" || t.eq_ignore_ascii_case("unknot") {
            return Ok(KnotSpec::Unknot);
        }
        parse_conway(t).map(KnotSpec::Conway)
    }
}

impl fmt::Display for KnotSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotSpec::Unknot => write!(f, "unknot"),
            KnotSpec::Conway(c) => write!(f, "{c}"),
        }
    }
}

/// `s_R̄ = (e − w − 2(N − 1))/4` for a braid on `2N` strands.
pub fn shift(e: i64, w: i64, strand_pairs: usize) -> Ratio<i64> {
    assert!(strand_pairs >= 1, "a plat needs at least one strand pair");
    Ratio::new(e - w - 2 * (strand_pairs as i64 - 1), 4)
}

/// `r = 3σ/4`.
pub fn r_invariant(sigma: i64) -> Result<Ratio<i64>, InvariantError> {
    if sigma % 2 != 0 {
        return Err(InvariantError::OddSignature(sigma));
    }
    Ok(Ratio::new(3 * sigma, 4))
}

/// Closed form of `R̄` for an odd-length Conway notation:
/// `(e − w ∓ 2)/4` with the sign following `b_1`.
pub fn reduced_r_closed_form(c: &ConwayNotation, e: i64, w: i64) -> Ratio<i64> {
    Ratio::new(e - w - 2 * c.sign(), 4)
}

/// `L(p, q)` with `0 ≤ q < p`; the unknot's cover is `L(1,0)`.
pub fn lens_space_label(fraction: Ratio<i64>) -> String {
    let p = fraction.numer().abs();
    let q = (fraction.denom() * fraction.numer().signum()).rem_euclid(p);
    format!("L({p},{q})")
}
