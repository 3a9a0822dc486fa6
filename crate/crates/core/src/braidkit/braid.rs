use std::fmt;

use super::BraidError;

/// A single Artin generator `σ_i^{±1}`.
///
/// `generator` is 1-based, matching the usual `σ_1 … σ_{n-1}` labelling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BraidLetter {
    pub generator: usize,
    pub positive: bool,
}

impl BraidLetter {
    pub fn new(generator: usize, positive: bool) -> Self {
        Self { generator, positive }
    }

    pub fn sign(&self) -> i64 {
        if self.positive {
            1
        } else {
            -1
        }
    }

    pub fn inverse(&self) -> Self {
        Self::new(self.generator, !self.positive)
    }
}

impl fmt::Display for BraidLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "s{}", self.generator)
        } else {
            write!(f, "s{}^-1", self.generator)
        }
    }
}

/// A braid word on an even number of strands, stored as unit letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<BraidLetter>) -> Result<Self, BraidError> {
        if strands < 2 || strands % 2 != 0 {
            return Err(BraidError::OddStrandCount(strands));
        }
        if let Some(bad) = letters
            .iter()
            .find(|l| l.generator == 0 || l.generator >= strands)
        {
            return Err(BraidError::GeneratorOutOfRange {
                generator: bad.generator,
                strands,
            });
        }
        Ok(Self { strands, letters })
    }

    pub fn empty(strands: usize) -> Result<Self, BraidError> {
        Self::new(strands, Vec::new())
    }

    /// Builds a word from `(generator, exponent)` blocks, expanding each
    /// block into `|exponent|` unit letters.
    pub fn from_powers(strands: usize, powers: &[(usize, i64)]) -> Result<Self, BraidError> {
        let mut letters = Vec::new();
        for &(generator, exponent) in powers {
            let letter = BraidLetter::new(generator, exponent > 0);
            letters.extend(std::iter::repeat_n(letter, exponent.unsigned_abs() as usize));
        }
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Number of strand pairs `N` for a word in `B_{2N}`.
    pub fn strand_pairs(&self) -> usize {
        self.strands / 2
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Signed count of generators, `e(b)`.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(BraidLetter::sign).sum()
    }

    /// The braid whose plat closure is the mirror image:
    /// `σ_i^{±1} ↦ σ_{2N-i}^{∓1}`, letter order kept.
    pub fn mirror(&self) -> Self {
        let letters = self
            .letters
            .iter()
            .map(|l| BraidLetter::new(self.strands - l.generator, !l.positive))
            .collect();
        Self {
            strands: self.strands,
            letters,
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}[", self.strands)?;
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "]")
    }
}
