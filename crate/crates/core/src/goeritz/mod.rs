//! Goeritz matrices, exact inertia and determinants, and the
//! Gordon–Litherland signature.

mod linalg;
mod matrix;

pub use linalg::{determinant, signature, SignatureResult};
pub use matrix::IntMatrix;

use num_bigint::BigInt;
use thiserror::Error;

use crate::braidkit::ConwayNotation;
use crate::diagram::{crossing_stats, ColoredDiagram, CrossingStats, OrientedDiagram};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("matrix text: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SignatureError {
    #[error("signature {0} is odd; crossing conventions are inconsistent")]
    OddSignature(i64),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Goeritz matrix over the white faces with `X_0` (the first white face)
/// deleted.
///
/// Off-diagonal entries are `-Σ η(C)` over crossings where the two faces
/// meet; each diagonal entry makes its row of the undeleted matrix sum to 0.
pub fn goeritz_matrix(colored: &ColoredDiagram) -> IntMatrix {
    let white = colored.white_faces();
    let n = white.len();
    let mut index = vec![usize::MAX; colored.faces().face_count()];
    for (i, &f) in white.iter().enumerate() {
        index[f] = i;
    }
    let mut full = IntMatrix::zeros(n);
    for c in 0..colored.diagram().crossing_count() {
        let (a, b) = colored.white_faces_at(c);
        if a == b {
            continue;
        }
        let (i, j) = (index[a], index[b]);
        let eta = colored.eta(c);
        full[(i, j)] -= eta;
        full[(j, i)] -= eta;
    }
    for i in 0..n {
        let off: i64 = (0..n).filter(|&k| k != i).map(|k| full[(i, k)]).sum();
        full[(i, i)] = -off;
    }
    if n == 0 {
        return full;
    }
    full.minor(0)
}

/// Everything the Gordon–Litherland formula reads off one colored diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlData {
    pub goeritz: IntMatrix,
    pub inertia: SignatureResult,
    pub stats: CrossingStats,
    pub determinant: BigInt,
    pub sigma: i64,
}

/// `σ(K) = sign(G(D)) − μ_II(D)`.
pub fn gl_signature(
    oriented: &OrientedDiagram,
    colored: &ColoredDiagram,
) -> Result<GlData, SignatureError> {
    let goeritz = goeritz_matrix(colored);
    let inertia = signature(&goeritz)?;
    let stats = crossing_stats(oriented, colored);
    let sigma = inertia.signature() - stats.mu_two();
    if sigma % 2 != 0 {
        return Err(SignatureError::OddSignature(sigma));
    }
    let determinant = determinant(&goeritz);
    Ok(GlData {
        goeritz,
        inertia,
        stats,
        determinant,
        sigma,
    })
}

/// Closed form of `sign(G(D))` for the Conway-form diagram:
/// `−sign(b_1) · (Σ_{i even} |b_i| + 1)`.
pub fn conway_closed_form_sign(c: &ConwayNotation) -> i64 {
    -c.sign() * (c.even_abs_sum() + 1)
}
