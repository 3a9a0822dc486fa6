use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{IntMatrix, MatrixError};

/// Inertia of a symmetric matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignatureResult {
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
}

impl SignatureResult {
    /// `n_plus - n_minus`.
    pub fn signature(&self) -> i64 {
        self.n_plus as i64 - self.n_minus as i64
    }

    pub fn dim(&self) -> usize {
        self.n_plus + self.n_minus + self.n_zero
    }
}

/// Inertia by symmetric congruence elimination over the rationals.
///
/// A nonzero diagonal pivot contributes its sign. When every remaining
/// diagonal entry vanishes but some off-diagonal `a_ij` does not, the block
/// `[[0, a], [a, 0]]` is split off and contributes one positive and one
/// negative square. A zero remainder contributes to `n_zero`.
pub fn signature(m: &IntMatrix) -> Result<SignatureResult, MatrixError> {
    if !m.is_symmetric() {
        return Err(MatrixError::NotSymmetric);
    }
    let mut a: Vec<Vec<BigRational>> = m
        .rows()
        .into_iter()
        .map(|r| r.into_iter().map(|x| BigRational::from_integer(x.into())).collect())
        .collect();
    let mut result = SignatureResult {
        n_plus: 0,
        n_minus: 0,
        n_zero: 0,
    };
    while !a.is_empty() {
        let n = a.len();
        if let Some(p) = (0..n).find(|&i| !a[i][i].is_zero()) {
            if a[p][p].is_positive() {
                result.n_plus += 1;
            } else {
                result.n_minus += 1;
            }
            a = schur_one(&a, p);
            continue;
        }
        let off = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| i != j && !a[i][j].is_zero());
        match off {
            Some((i, j)) => {
                result.n_plus += 1;
                result.n_minus += 1;
                a = schur_hyperbolic(&a, i, j);
            }
            None => {
                result.n_zero += n;
                break;
            }
        }
    }
    Ok(result)
}

/// Schur complement of the `1×1` pivot at `p`.
fn schur_one(a: &[Vec<BigRational>], p: usize) -> Vec<Vec<BigRational>> {
    let keep: Vec<usize> = (0..a.len()).filter(|&i| i != p).collect();
    let pivot = &a[p][p];
    keep.iter()
        .map(|&i| {
            let factor = &a[i][p] / pivot;
            keep.iter().map(|&j| &a[i][j] - &factor * &a[p][j]).collect()
        })
        .collect()
}

/// Schur complement of the block on rows/columns `i, j`, whose diagonal
/// entries are zero and off-diagonal entry `c` is not.
fn schur_hyperbolic(a: &[Vec<BigRational>], i: usize, j: usize) -> Vec<Vec<BigRational>> {
    let keep: Vec<usize> = (0..a.len()).filter(|&k| k != i && k != j).collect();
    let c = &a[i][j];
    // Block inverse is [[0, 1/c], [1/c, 0]]; subtract x B⁻¹ yᵀ.
    keep.iter()
        .map(|&r| {
            keep.iter()
                .map(|&s| {
                    let cross = &a[r][i] * &a[j][s] + &a[r][j] * &a[i][s];
                    &a[r][s] - cross / c
                })
                .collect()
        })
        .collect()
}

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// The empty matrix has determinant 1.
pub fn determinant(m: &IntMatrix) -> BigInt {
    let n = m.dim();
    let mut a: Vec<Vec<BigInt>> = m
        .rows()
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * &a[n - 1][n - 1]
}
