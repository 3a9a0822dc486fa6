use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use super::{ensure, r_invariant, Fraction, InvariantError};
use crate::diagram::{checkerboard, OrientedDiagram};
use crate::goeritz::{gl_signature, GlData};

/// Invariants readable from a single oriented diagram, without any braid or
/// Conway data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagramInvariants {
    pub crossings: usize,
    pub w: i64,
    #[serde(rename = "mu_I")]
    pub mu_one: i64,
    #[serde(rename = "mu_II")]
    pub mu_two: i64,
    #[serde(rename = "G")]
    pub goeritz: Vec<Vec<i64>>,
    #[serde(rename = "sign_G")]
    pub goeritz_signature: i64,
    pub sigma: i64,
    /// `|det G|`, as a decimal string since it is unbounded.
    pub det: String,
    pub r: Fraction,
    #[serde(skip)]
    pub det_value: BigInt,
}

fn from_gl(oriented: &OrientedDiagram, gl: &GlData) -> Result<DiagramInvariants, InvariantError> {
    let w = oriented.writhe();
    ensure("w = mu_II - mu_I", w, gl.stats.mu_two() - gl.stats.mu_one())?;
    ensure("w from crossing table", w, gl.stats.writhe())?;
    let det_value = gl.determinant.abs();
    Ok(DiagramInvariants {
        crossings: oriented.crossing_count(),
        w,
        mu_one: gl.stats.mu_one(),
        mu_two: gl.stats.mu_two(),
        goeritz: gl.goeritz.rows(),
        goeritz_signature: gl.inertia.signature(),
        sigma: gl.sigma,
        det: det_value.to_string(),
        r: r_invariant(gl.sigma)?.into(),
        det_value,
    })
}

/// Signature, determinant and crossing counts of an oriented knot diagram.
pub fn diagram_invariants(oriented: &OrientedDiagram) -> Result<DiagramInvariants, InvariantError> {
    let colored = checkerboard(oriented.diagram())?;
    let gl = gl_signature(oriented, &colored)?;
    from_gl(oriented, &gl)
}
