//! Oracles shared by the integration tests. None of them call into the
//! library's arithmetic.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, Zero};
use rand::Rng;

/// `b_1 + 1/(b_2 + …)` folded from the tail with exact rationals.
pub fn fraction(entries: &[i64]) -> Ratio<i64> {
    let mut x = Ratio::from_integer(*entries.last().unwrap());
    for &b in entries.iter().rev().skip(1) {
        x = Ratio::from_integer(b) + x.recip();
    }
    x
}

/// Signature of the two-bridge knot `b(p, q)`, `p` odd:
/// `Σ_{0<i<p} (-1)^⌊iq/p⌋` with `q` replaced by an odd representative.
pub fn murasugi_signature(p: i64, q: i64) -> i64 {
    let (p, mut q) = if p < 0 { (-p, -q) } else { (p, q) };
    if q % 2 == 0 {
        q += p;
    }
    (1..p)
        .map(|i| if (i * q).div_euclid(p) % 2 == 0 { 1 } else { -1 })
        .sum()
}

pub fn conway_signature(entries: &[i64]) -> i64 {
    let f = fraction(entries);
    murasugi_signature(*f.numer(), *f.denom())
}

/// Determinant by Gaussian elimination over the rationals.
pub fn rational_det(rows: &[Vec<i64>]) -> BigInt {
    let n = rows.len();
    let mut a: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let mut det = BigRational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        det *= a[k][k].clone();
        for i in k + 1..n {
            let f = &a[i][k] / &a[k][k];
            for j in k..n {
                let v = &f * &a[k][j];
                a[i][j] -= v;
            }
        }
    }
    det.to_integer()
}

fn leibniz(m: &[Vec<BigInt>], idx: &[usize]) -> BigInt {
    let k = idx.len();
    let mut perm: Vec<usize> = (0..k).collect();
    let mut total = BigInt::zero();
    loop {
        let mut inversions = 0;
        for i in 0..k {
            for j in i + 1..k {
                if perm[i] > perm[j] {
                    inversions += 1;
                }
            }
        }
        let mut term = BigInt::one();
        for i in 0..k {
            term *= &m[idx[i]][idx[perm[i]]];
        }
        if inversions % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
        // Next permutation in lexicographic order.
        let Some(i) = (0..k.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            return total;
        };
        let j = (i + 1..k).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
}

/// Coefficients of `det(xI - A)`, constant term first, from sums of
/// principal minors.
pub fn char_poly(rows: &[Vec<i64>]) -> Vec<BigInt> {
    let n = rows.len();
    let m: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| x.into()).collect()).collect();
    let mut e = vec![BigInt::zero(); n + 1];
    e[0] = BigInt::one();
    for mask in 1u32..(1 << n) {
        let idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        e[idx.len()] += leibniz(&m, &idx);
    }
    // x^{n-k} has coefficient (-1)^k E_k.
    (0..=n)
        .map(|j| {
            let k = n - j;
            if k % 2 == 0 {
                e[k].clone()
            } else {
                -e[k].clone()
            }
        })
        .collect()
}

fn sign_changes<'a>(coeffs: impl Iterator<Item = &'a BigInt>) -> usize {
    let signs: Vec<bool> = coeffs.filter(|c| !c.is_zero()).map(|c| c.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// `(n_plus, n_minus, n_zero)` of a symmetric matrix by Descartes' rule of
/// signs, exact because the characteristic polynomial is real-rooted.
pub fn inertia_oracle(rows: &[Vec<i64>]) -> (usize, usize, usize) {
    let c = char_poly(rows);
    let zero = c.iter().position(|x| !x.is_zero()).unwrap();
    let reduced = &c[zero..];
    let plus = sign_changes(reduced.iter());
    let flipped: Vec<BigInt> = reduced
        .iter()
        .enumerate()
        .map(|(j, x)| if j % 2 == 0 { x.clone() } else { -x.clone() })
        .collect();
    let minus = sign_changes(flipped.iter());
    (plus, minus, zero)
}

pub fn random_symmetric(rng: &mut impl Rng, n: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0; n]; n];
    for i in 0..n {
        for j in i..n {
            let v = rng.gen_range(-bound..=bound);
            m[i][j] = v;
            m[j][i] = v;
        }
    }
    // Some instances get a repeated row and column, hence a kernel.
    if n >= 2 && rng.gen_bool(0.25) {
        for k in 0..n {
            m[n - 1][k] = m[0][k];
        }
        for k in 0..n {
            m[k][n - 1] = m[k][0];
        }
        m[n - 1][n - 1] = m[0][0];
    }
    // And some a vanishing diagonal.
    if rng.gen_bool(0.2) {
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 0;
        }
    }
    m
}

/// Product of random elementary row operations, swaps and sign flips.
pub fn random_unimodular(rng: &mut impl Rng, n: usize, steps: usize) -> Vec<Vec<i64>> {
    let mut u: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    for _ in 0..steps {
        match rng.gen_range(0..3) {
            0 if n >= 2 => {
                let i = rng.gen_range(0..n);
                let mut j = rng.gen_range(0..n - 1);
                if j >= i {
                    j += 1;
                }
                let c = if rng.gen_bool(0.5) { 1 } else { -1 };
                for k in 0..n {
                    u[i][k] += c * u[j][k];
                }
            }
            1 if n >= 2 => {
                let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
                u.swap(i, j);
            }
            _ => {
                let i = rng.gen_range(0..n);
                for x in &mut u[i] {
                    *x = -*x;
                }
            }
        }
    }
    u
}
