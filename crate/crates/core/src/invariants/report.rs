use num_bigint::BigInt;
use num_rational::Ratio;
use serde::Serialize;

use super::{
    diagram_invariants, ensure, lens_space_label, r_invariant, reduced_r_closed_form, shift,
    DiagramInvariants, Fraction, InvariantError, KnotSpec,
};
use crate::braidkit::ConwayNotation;
use crate::diagram::{orient, plat_closure, PlanarDiagram};
use crate::forkengine::{self, GradedCount};
use crate::goeritz::conway_closed_form_sign;

/// The exact invariants of one two-bridge knot.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    /// Odd-length notation the invariants were computed from; empty for
    /// the unknot.
    pub conway: Vec<i64>,
    pub fraction: Fraction,
    pub det: u64,
    pub lens_space: String,
    pub e: i64,
    pub w: i64,
    #[serde(rename = "mu_I")]
    pub mu_one: i64,
    #[serde(rename = "mu_II")]
    pub mu_two: i64,
    #[serde(rename = "s_R")]
    pub shift: Fraction,
    pub r_tilde: i64,
    #[serde(rename = "R")]
    pub reduced_r: Fraction,
    pub sigma: i64,
    pub r: Fraction,
    pub generator_count: u64,
}

/// A report together with the intermediate values it was checked against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Analysis {
    pub report: InvariantReport,
    pub diagram: DiagramInvariants,
    /// `R̄` from the automaton level plus the shift.
    pub r_bar_automaton: Ratio<i64>,
    /// `R̄` from the closed form in `e`, `w` and `sign(b_1)`.
    pub r_bar_closed: Ratio<i64>,
    pub histogram: GradedCount,
    pub trace: Vec<String>,
}

fn unknot_analysis() -> Result<Analysis, InvariantError> {
    let diagram = diagram_invariants(&orient(&PlanarDiagram::unknot())?)?;
    ensure("unknot sigma", diagram.sigma, 0)?;
    let zero = Ratio::from_integer(0);
    let one = Ratio::from_integer(1);
    Ok(Analysis {
        report: InvariantReport {
            conway: Vec::new(),
            fraction: one.into(),
            det: 1,
            lens_space: lens_space_label(one),
            e: 0,
            w: 0,
            mu_one: 0,
            mu_two: 0,
            shift: shift(0, 0, 1).into(),
            r_tilde: 0,
            reduced_r: zero.into(),
            sigma: 0,
            r: zero.into(),
            generator_count: 1,
        },
        diagram,
        r_bar_automaton: zero,
        r_bar_closed: zero,
        histogram: GradedCount::from_pairs(&[(0, 1)]),
        trace: Vec::new(),
    })
}

fn conway_analysis(c: &ConwayNotation, trace: bool) -> Result<Analysis, InvariantError> {
    let c = c.normalize_odd();
    let fraction = c.continued_fraction()?;
    let p = fraction.numer().abs();
    if p % 2 == 0 {
        return Err(InvariantError::NotAKnot {
            fraction: fraction.into(),
        });
    }
    let braid = c.to_braid()?;
    let e = braid.exponent_sum();
    let oriented = orient(&plat_closure(&braid))?;
    let diagram = diagram_invariants(&oriented)?;
    let w = diagram.w;

    ensure("-(mu_I + mu_II) = sum b_i", -(diagram.mu_one + diagram.mu_two), c.entry_sum())?;
    ensure(
        "sign(G) = -sign(b_1)(sum_even |b_i| + 1)",
        diagram.goeritz_signature,
        conway_closed_form_sign(&c),
    )?;
    ensure("|det G| = |p|", diagram.det_value.clone(), BigInt::from(p))?;

    let run = forkengine::run(&c, trace)?;
    ensure("generator_count = |p|", run.generator_count, p as u64)?;

    let s = shift(e, w, braid.strand_pairs());
    let r_bar_automaton = Ratio::from_integer(run.r_tilde) + s;
    let r_bar_closed = reduced_r_closed_form(&c, e, w);
    ensure("R (automaton) = R (closed form)", r_bar_automaton, r_bar_closed)?;
    let sigma = diagram.sigma;
    ensure("R = sigma/2", r_bar_automaton, Ratio::new(sigma, 2))?;

    Ok(Analysis {
        report: InvariantReport {
            conway: c.entries().to_vec(),
            fraction: fraction.into(),
            det: p as u64,
            lens_space: lens_space_label(fraction),
            e,
            w,
            mu_one: diagram.mu_one,
            mu_two: diagram.mu_two,
            shift: s.into(),
            r_tilde: run.r_tilde,
            reduced_r: r_bar_automaton.into(),
            sigma,
            r: r_invariant(sigma)?.into(),
            generator_count: run.generator_count,
        },
        diagram,
        r_bar_automaton,
        r_bar_closed,
        histogram: run.histogram,
        trace: run.trace,
    })
}

/// Computes every invariant of `knot` and checks all cross-identities.
///
/// Notations of even length are first rewritten to odd length. With
/// `trace`, the automaton's per-letter states are kept in the result.
pub fn analyze(knot: &KnotSpec, trace: bool) -> Result<Analysis, InvariantError> {
    match knot {
        KnotSpec::Unknot => unknot_analysis(),
        KnotSpec::Conway(c) => conway_analysis(c, trace),
    }
}

pub fn report(knot: &KnotSpec) -> Result<InvariantReport, InvariantError> {
    analyze(knot, false).map(|a| a.report)
}
