//! Letter-by-letter generator automaton for the reduced fork diagram of a
//! Conway-form braid.
//!
//! Punctures `μ_1, μ_2, μ_3` carry the Conway braid; `α_1` joins `μ_1` and
//! `μ_2`, and the auxiliary arc `α` joins `μ_2` and `μ_3`. The state counts
//! reduced generators in the interior of `α_1` and central intersections on
//! `α − μ_2`, each by grading level, plus the free end of `β_1`. That end
//! is a generator while it sits on `α_1` (at `μ_1` or `μ_2`) and a central
//! intersection while it sits at `μ_3`.
//!
//! For positive entries generators live at level 0 and centrals one level
//! above them. Negative entries mirror this: generators at level 1, centrals
//! one level below. The rules only ever place a spawned point one step away
//! from its parent, so concentration on a single level is checked, not
//! assumed.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::braidkit::{BraidError, BraidLetter, ConwayNotation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ForkError {
    #[error("the first Conway entry must be nonzero")]
    ZeroTwist,
    #[error("letter {0} does not act on a Conway-form fork diagram")]
    UnsupportedLetter(BraidLetter),
    #[error("letter {letter} applied to a state built from {polarity:?} entries")]
    WrongPolarity { letter: BraidLetter, polarity: Polarity },
    #[error("endpoint at {puncture:?} approaching {approach:?} is not a valid incidence")]
    InconsistentEndpoint { puncture: Puncture, approach: Approach },
    #[error("no central intersection at level {level} for the endpoint to absorb")]
    NoCentralAvailable { level: i64 },
    #[error("generators occupy {0} grading levels, expected one")]
    NotConcentrated(usize),
    #[error(transparent)]
    Braid(#[from] BraidError),
}

/// Multiset of grading levels.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GradedCount(BTreeMap<i64, u64>);

impl GradedCount {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: &[(i64, u64)]) -> Self {
        let mut g = Self::new();
        for &(level, n) in pairs {
            g.add(level, n);
        }
        g
    }

    pub fn add(&mut self, level: i64, n: u64) {
        if n > 0 {
            *self.0.entry(level).or_insert(0) += n;
        }
    }

    /// Removes one point at `level`; false if there is none.
    pub fn take_one(&mut self, level: i64) -> bool {
        match self.0.get_mut(&level) {
            Some(n) => {
                *n -= 1;
                if *n == 0 {
                    self.0.remove(&level);
                }
                true
            }
            None => false,
        }
    }

    pub fn get(&self, level: i64) -> u64 {
        self.0.get(&level).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn levels(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.0.iter().map(|(&l, &n)| (l, n))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Every point moved by `delta` levels.
    pub fn shifted(&self, delta: i64) -> Self {
        Self(self.0.iter().map(|(&l, &n)| (l + delta, n)).collect())
    }

    fn merge(&mut self, other: &Self) {
        for (l, n) in other.levels() {
            self.add(l, n);
        }
    }
}

impl fmt::Display for GradedCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (l, n)) in self.levels().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{l}: {n}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Puncture {
    Mu1,
    Mu2,
    Mu3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Approach {
    Above,
    Below,
}

impl Puncture {
    /// `β_1` reaches `μ_1` and `μ_3` from below and `μ_2` from above.
    pub fn approach(self) -> Approach {
        match self {
            Puncture::Mu2 => Approach::Above,
            Puncture::Mu1 | Puncture::Mu3 => Approach::Below,
        }
    }

    fn on_alpha_one(self) -> bool {
        matches!(self, Puncture::Mu1 | Puncture::Mu2)
    }
}

/// The free end of `β_1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EndpointState {
    pub puncture: Puncture,
    pub approach: Approach,
    pub grading: i64,
}

impl EndpointState {
    pub fn at(puncture: Puncture, grading: i64) -> Self {
        Self {
            puncture,
            approach: puncture.approach(),
            grading,
        }
    }

    fn check(&self) -> Result<(), ForkError> {
        if self.approach != self.puncture.approach() {
            return Err(ForkError::InconsistentEndpoint {
                puncture: self.puncture,
                approach: self.approach,
            });
        }
        Ok(())
    }
}

impl fmt::Display for EndpointState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = match self.puncture {
            Puncture::Mu1 => "mu1",
            Puncture::Mu2 => "mu2",
            Puncture::Mu3 => "mu3",
        };
        let a = match self.approach {
            Approach::Above => "above",
            Approach::Below => "below",
        };
        write!(f, "{p}/{a}@{}", self.grading)
    }
}

/// Sign of the Conway entries a state was built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Polarity {
    Positive,
    Negative,
}

impl Polarity {
    /// Level of the generators.
    pub fn base_level(self) -> i64 {
        match self {
            Polarity::Positive => 0,
            Polarity::Negative => 1,
        }
    }

    /// Offset from a generator to the centrals it spawns.
    fn step(self) -> i64 {
        match self {
            Polarity::Positive => 1,
            Polarity::Negative => -1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ForkState {
    pub polarity: Polarity,
    pub interior: GradedCount,
    pub central: GradedCount,
    pub endpoint: EndpointState,
}

impl ForkState {
    /// Before any twist: `β_1` ends at `μ_3`, one step off the base level.
    pub fn initial(polarity: Polarity) -> Self {
        Self {
            polarity,
            interior: GradedCount::new(),
            central: GradedCount::new(),
            endpoint: EndpointState::at(Puncture::Mu3, polarity.base_level() + polarity.step()),
        }
    }

    /// Reduced generators: interior points plus the endpoint when it lies
    /// on `α_1`.
    pub fn generators(&self) -> GradedCount {
        let mut g = self.interior.clone();
        if self.endpoint.puncture.on_alpha_one() {
            g.add(self.endpoint.grading, 1);
        }
        g
    }

    /// Central intersections, counting the endpoint when it sits at `μ_3`.
    pub fn centrals(&self) -> GradedCount {
        let mut c = self.central.clone();
        if self.endpoint.puncture == Puncture::Mu3 {
            c.add(self.endpoint.grading, 1);
        }
        c
    }

    fn expect(&self, polarity: Polarity, letter: BraidLetter) -> Result<(), ForkError> {
        if self.polarity != polarity {
            return Err(ForkError::WrongPolarity {
                letter,
                polarity: self.polarity,
            });
        }
        self.endpoint.check()
    }

    /// Twist exchanging `μ_2` and `μ_3` (`σ_2` or `σ_2^{-1}`).
    fn outer_twist(&self) -> Result<Self, ForkError> {
        let step = self.polarity.step();
        let mut next = self.clone();
        // Every central persists and spawns a generator one step closer to base.
        next.interior.merge(&self.central.shifted(-step));
        let e = self.endpoint;
        match e.puncture {
            // Case II: the central endpoint spawns the new endpoint generator
            // at μ_2 and leaves a central at its own level.
            Puncture::Mu3 => {
                next.central.add(e.grading, 1);
                next.endpoint = EndpointState::at(Puncture::Mu2, e.grading - step);
            }
            // Case I: the endpoint generator is replaced by an interior one at
            // the same level, and the end becomes a central at μ_3, taking
            // over the central next to it.
            Puncture::Mu2 => {
                let level = e.grading + step;
                if !next.central.take_one(level) {
                    return Err(ForkError::NoCentralAvailable { level });
                }
                next.interior.add(e.grading, 1);
                next.endpoint = EndpointState::at(Puncture::Mu3, level);
            }
            Puncture::Mu1 => {}
        }
        Ok(next)
    }

    /// Twist exchanging `μ_1` and `μ_2` (`σ_1^{-1}` or `σ_1`).
    fn inner_twist(&self) -> Result<Self, ForkError> {
        let step = self.polarity.step();
        let mut next = self.clone();
        // Every interior generator persists and spawns a central one step up.
        next.central.merge(&self.interior.shifted(step));
        let e = self.endpoint;
        match e.puncture {
            // The endpoint generator moves to the other end of α_1 at the same
            // level and spawns a central like any other generator.
            Puncture::Mu1 | Puncture::Mu2 => {
                next.central.add(e.grading + step, 1);
                let moved = if e.puncture == Puncture::Mu1 {
                    Puncture::Mu2
                } else {
                    Puncture::Mu1
                };
                next.endpoint = EndpointState::at(moved, e.grading);
            }
            Puncture::Mu3 => {}
        }
        Ok(next)
    }

    pub fn apply_sigma2(&self) -> Result<Self, ForkError> {
        self.expect(Polarity::Positive, BraidLetter::new(2, true))?;
        self.outer_twist()
    }

    pub fn apply_sigma1_inv(&self) -> Result<Self, ForkError> {
        self.expect(Polarity::Positive, BraidLetter::new(1, false))?;
        self.inner_twist()
    }

    pub fn apply_sigma2_inv(&self) -> Result<Self, ForkError> {
        self.expect(Polarity::Negative, BraidLetter::new(2, false))?;
        self.outer_twist()
    }

    pub fn apply_sigma1(&self) -> Result<Self, ForkError> {
        self.expect(Polarity::Negative, BraidLetter::new(1, true))?;
        self.inner_twist()
    }

    pub fn apply(&self, letter: BraidLetter) -> Result<Self, ForkError> {
        match (letter.generator, letter.positive) {
            (2, true) => self.apply_sigma2(),
            (1, false) => self.apply_sigma1_inv(),
            (2, false) => self.apply_sigma2_inv(),
            (1, true) => self.apply_sigma1(),
            _ => Err(ForkError::UnsupportedLetter(letter)),
        }
    }
}

/// State after the opening twist `σ_2^{b_1}`.
pub fn init_twist(b1: i64) -> Result<ForkState, ForkError> {
    let polarity = match b1.signum() {
        1 => Polarity::Positive,
        -1 => Polarity::Negative,
        _ => return Err(ForkError::ZeroTwist),
    };
    let letter = BraidLetter::new(2, b1 > 0);
    let mut state = ForkState::initial(polarity);
    for _ in 0..b1.unsigned_abs() {
        state = state.apply(letter)?;
    }
    Ok(state)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunResult {
    pub generator_count: u64,
    pub histogram: GradedCount,
    pub r_tilde: i64,
    pub final_state: ForkState,
    /// One line per letter when tracing was requested.
    pub trace: Vec<String>,
}

fn trace_line(letter: Option<BraidLetter>, s: &ForkState) -> String {
    let l = letter.map_or_else(|| "start".to_string(), |l| l.to_string());
    format!(
        "{l:<7} interior {} central {} endpoint {}",
        s.interior, s.central, s.endpoint
    )
}

/// Runs the automaton over the Conway braid of an odd-length notation.
pub fn run(c: &ConwayNotation, trace: bool) -> Result<RunResult, ForkError> {
    let braid = c.to_braid()?;
    let polarity = if c.is_positive() {
        Polarity::Positive
    } else {
        Polarity::Negative
    };
    let mut state = ForkState::initial(polarity);
    let mut lines = Vec::new();
    if trace {
        lines.push(trace_line(None, &state));
    }
    for &letter in braid.letters() {
        state = state.apply(letter)?;
        if trace {
            lines.push(trace_line(Some(letter), &state));
        }
    }
    let histogram = state.generators();
    let levels: Vec<i64> = histogram.levels().map(|(l, _)| l).collect();
    if levels.len() != 1 {
        return Err(ForkError::NotConcentrated(levels.len()));
    }
    Ok(RunResult {
        generator_count: histogram.total(),
        r_tilde: levels[0],
        histogram,
        final_state: state,
        trace: lines,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: &[i64]) -> ConwayNotation {
        ConwayNotation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn init_twist_examples() {
        assert_eq!(init_twist(3).unwrap().generators(), GradedCount::from_pairs(&[(0, 3)]));
        assert_eq!(init_twist(-3).unwrap().generators(), GradedCount::from_pairs(&[(1, 3)]));
        assert_eq!(init_twist(1).unwrap().generators(), GradedCount::from_pairs(&[(0, 1)]));
        assert_eq!(init_twist(0), Err(ForkError::ZeroTwist));
        // Even twists leave the end at μ_3, odd ones at μ_2.
        assert_eq!(init_twist(2).unwrap().endpoint.puncture, Puncture::Mu3);
        assert_eq!(init_twist(3).unwrap().endpoint.puncture, Puncture::Mu2);
    }

    #[test]
    fn sigma1_inv_spawns_one_central_per_generator() {
        // Two interior generators plus the central endpoint at μ_3.
        let s = init_twist(2).unwrap();
        assert_eq!(s.interior, GradedCount::from_pairs(&[(0, 2)]));
        assert_eq!(s.centrals(), GradedCount::from_pairs(&[(1, 1)]));
        let t = s.apply_sigma1_inv().unwrap();
        assert_eq!(t.interior, GradedCount::from_pairs(&[(0, 2)]));
        assert_eq!(t.centrals(), GradedCount::from_pairs(&[(1, 3)]));

        // Endpoint generator at μ_2 moves to μ_1 and spawns a central.
        let s = init_twist(1).unwrap();
        let t = s.apply_sigma1_inv().unwrap();
        assert_eq!(t.endpoint, EndpointState::at(Puncture::Mu1, 0));
        assert_eq!(t.central, GradedCount::from_pairs(&[(1, 2)]));
    }

    #[test]
    fn sigma2_spawns_one_generator_per_central() {
        // [2,1,1]: after σ_2^2 σ_1^{-1} there are three centrals, and the
        // closing σ_2 turns them into three more generators.
        let s = init_twist(2).unwrap().apply_sigma1_inv().unwrap();
        let t = s.apply_sigma2().unwrap();
        assert_eq!(t.generators(), GradedCount::from_pairs(&[(0, 5)]));
        assert_eq!(t.centrals(), GradedCount::from_pairs(&[(1, 3)]));
    }

    #[test]
    fn empty_state_only_moves_the_endpoint() {
        let s = ForkState::initial(Polarity::Positive);
        let t = s.apply_sigma1_inv().unwrap();
        assert_eq!(t, s);
        let t = s.apply_sigma2().unwrap();
        assert!(t.interior.is_empty());
        assert_eq!(t.endpoint, EndpointState::at(Puncture::Mu2, 0));
    }

    #[test]
    fn case_one_without_centrals_is_an_error() {
        let s = ForkState {
            polarity: Polarity::Positive,
            interior: GradedCount::new(),
            central: GradedCount::new(),
            endpoint: EndpointState::at(Puncture::Mu2, 0),
        };
        assert_eq!(
            s.apply_sigma2(),
            Err(ForkError::NoCentralAvailable { level: 1 })
        );
    }

    #[test]
    fn polarity_and_endpoint_are_checked() {
        let s = init_twist(3).unwrap();
        assert!(matches!(s.apply_sigma1(), Err(ForkError::WrongPolarity { .. })));
        assert!(matches!(
            s.apply(BraidLetter::new(3, true)),
            Err(ForkError::UnsupportedLetter(_))
        ));
        let mut bad = s.clone();
        bad.endpoint.approach = Approach::Below;
        assert!(matches!(
            bad.apply_sigma2(),
            Err(ForkError::InconsistentEndpoint { .. })
        ));
    }

    #[test]
    fn run_examples() {
        let r = run(&c(&[3]), false).unwrap();
        assert_eq!((r.generator_count, r.r_tilde), (3, 0));
        let r = run(&c(&[2, 1, 1]), false).unwrap();
        assert_eq!((r.generator_count, r.r_tilde), (5, 0));
        let r = run(&c(&[-3]), false).unwrap();
        assert_eq!((r.generator_count, r.r_tilde), (3, 1));
        let r = run(&c(&[-2, -1, -1]), false).unwrap();
        assert_eq!(r.histogram, GradedCount::from_pairs(&[(1, 5)]));
        assert!(run(&c(&[2, 2]), false).is_err());
    }

    #[test]
    fn single_twist_spawns_no_interior_centrals_beyond_one() {
        for b in 1..8 {
            let r = run(&c(&[b]), false).unwrap();
            assert_eq!(r.generator_count, b as u64);
            assert_eq!(r.final_state.centrals().total(), 1);
        }
    }

    #[test]
    fn trace_has_one_line_per_letter() {
        let r = run(&c(&[2, 1, 1]), true).unwrap();
        assert_eq!(r.trace.len(), 5);
        assert!(r.trace[0].starts_with("start"));
        // Four interior generators plus the endpoint on α_1.
        assert!(r.trace[4].contains("interior {0: 4}"), "{}", r.trace[4]);
        assert!(r.trace[4].ends_with("mu2/above@0"), "{}", r.trace[4]);
    }

    #[test]
    fn totals_never_decrease() {
        let braid = c(&[3, 2, 1, 2, 1]).to_braid().unwrap();
        let mut s = ForkState::initial(Polarity::Positive);
        let mut prev = (0, 1);
        for &l in braid.letters() {
            s = s.apply(l).unwrap();
            let now = (s.generators().total(), s.centrals().total());
            assert!(now.0 >= prev.0 && now.1 >= prev.1);
            prev = now;
        }
    }
}
