use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::{BraidError, BraidWord, ConwayError};

/// Conway notation `[b_1, …, b_k]` of a two-bridge knot or link.
///
/// Entries are nonzero and share one sign. The notation names the diagram
/// obtained as the plat closure of `σ_2^{b_1} σ_1^{-b_2} … σ_2^{b_k}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct ConwayNotation(Vec<i64>);

impl ConwayNotation {
    pub fn new(entries: Vec<i64>) -> Result<Self, ConwayError> {
        if entries.is_empty() {
            return Err(ConwayError::Empty);
        }
        if let Some(pos) = entries.iter().position(|&b| b == 0) {
            return Err(ConwayError::ZeroEntry { position: pos + 1 });
        }
        let positive = entries[0] > 0;
        if entries.iter().any(|&b| (b > 0) != positive) {
            return Err(ConwayError::MixedSigns);
        }
        Ok(Self(entries))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_positive(&self) -> bool {
        self.0[0] > 0
    }

    /// `sign(b_1)` as ±1.
    pub fn sign(&self) -> i64 {
        self.0[0].signum()
    }

    /// `Σ b_i`.
    pub fn entry_sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `Σ |b_i|`, the crossing count of the Conway diagram.
    pub fn abs_sum(&self) -> i64 {
        self.0.iter().map(|b| b.abs()).sum()
    }

    /// Sum of `|b_i|` over even (1-based) positions.
    pub fn even_abs_sum(&self) -> i64 {
        self.0.iter().skip(1).step_by(2).map(|b| b.abs()).sum()
    }

    /// Entries negated; the notation of the mirror knot.
    pub fn negated(&self) -> Self {
        Self(self.0.iter().map(|b| -b).collect())
    }

    /// Exact value of `b_1 + 1/(b_2 + 1/(… + 1/b_k))` in lowest terms,
    /// with a positive denominator.
    ///
    /// Evaluated as a product of `[[b, 1], [1, 0]]` continuant matrices.
    pub fn continued_fraction(&self) -> Result<Ratio<i64>, ConwayError> {
        // (p, q) track the first column of the running matrix product.
        let (mut p, mut q): (i64, i64) = (1, 0);
        for &b in self.0.iter().rev() {
            debug_assert!(p != 0, "uniform-sign tails are never zero");
            let next = b
                .checked_mul(p)
                .and_then(|bp| bp.checked_add(q))
                .ok_or(ConwayError::Overflow)?;
            q = p;
            p = next;
        }
        assert!(q != 0, "continued fraction denominator vanished");
        Ok(Ratio::new(p, q))
    }

    /// `|p|`, the determinant of the knot.
    pub fn determinant(&self) -> Result<i64, ConwayError> {
        Ok(self.continued_fraction()?.numer().abs())
    }

    /// An odd-length notation with the same continued fraction.
    ///
    /// For even length the last entry `b_k` becomes `b_k - s, s` with
    /// `s = sign(b_k)`; when `|b_k| = 1` the last two entries merge into
    /// `b_{k-1} + s` instead.
    pub fn normalize_odd(&self) -> Self {
        if self.0.len() % 2 == 1 {
            return self.clone();
        }
        let mut entries = self.0.clone();
        let last = entries.pop().expect("nonempty");
        let s = last.signum();
        if last.abs() == 1 {
            let prev = entries.last_mut().expect("even length is at least 2");
            *prev += s;
        } else {
            entries.push(last - s);
            entries.push(s);
        }
        Self(entries)
    }

    /// The Conway braid `σ_2^{b_1} σ_1^{-b_2} σ_2^{b_3} … σ_2^{b_k}` in `B_4`.
    pub fn to_braid(&self) -> Result<BraidWord, BraidError> {
        if self.0.len() % 2 == 0 {
            return Err(BraidError::EvenConwayLength(self.0.len()));
        }
        let powers: Vec<(usize, i64)> = self
            .0
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 0 { (2, b) } else { (1, -b) })
            .collect();
        BraidWord::from_powers(4, &powers)
    }
}

impl TryFrom<Vec<i64>> for ConwayNotation {
    type Error = ConwayError;

    fn try_from(v: Vec<i64>) -> Result<Self, Self::Error> {
        Self::new(v)
    }
}

impl From<ConwayNotation> for Vec<i64> {
    fn from(c: ConwayNotation) -> Self {
        c.0
    }
}

impl FromStr for ConwayNotation {
    type Err = ConwayError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_conway(s)
    }
}

impl fmt::Display for ConwayNotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, b) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "]")
    }
}

/// Parses `"2,1,1"`, `"[2, 1, 1]"` or `"-3"`.
pub fn parse_conway(text: &str) -> Result<ConwayNotation, ConwayError> {
    if !text.is_ascii() {
        return Err(ConwayError::NonAscii);
    }
    let mut body = text.trim();
    if let Some(inner) = body.strip_prefix('[') {
        body = inner.strip_suffix(']').ok_or(ConwayError::UnbalancedBracket)?;
    } else if body.ends_with(']') {
        return Err(ConwayError::UnbalancedBracket);
    }
    let body = body.trim();
    if body.is_empty() {
        return Err(ConwayError::Empty);
    }
    let entries = body
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<i64>()
                .map_err(|_| ConwayError::BadInteger(tok.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    ConwayNotation::new(entries)
}
