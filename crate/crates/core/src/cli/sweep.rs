use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::braidkit::ConwayNotation;
use crate::invariants::{analyze, check_mirror, KnotSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Signs {
    Positive,
    Negative,
    Both,
}

/// Bounds of an exhaustive sweep over uniform-sign Conway notations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SweepSpec {
    pub max_len: usize,
    pub max_sum: u32,
    pub signs: Signs,
}

/// All positive compositions of at most `max_sum` into at most `max_len`
/// parts.
fn compositions(max_len: usize, max_sum: u32) -> Vec<Vec<i64>> {
    fn extend(prefix: &mut Vec<i64>, left: u32, max_len: usize, out: &mut Vec<Vec<i64>>) {
        if !prefix.is_empty() {
            out.push(prefix.clone());
        }
        if prefix.len() == max_len {
            return;
        }
        for b in 1..=left {
            prefix.push(b as i64);
            extend(prefix, left - b, max_len, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), max_sum, max_len, &mut out);
    out
}

/// The sweep's cases, normalized to odd length and deduplicated.
///
/// The second value counts distinct notations skipped because they close up
/// to two-component links.
pub fn enumerate(spec: &SweepSpec) -> (Vec<ConwayNotation>, usize) {
    let mut knots = BTreeSet::new();
    let mut links = BTreeSet::new();
    for entries in compositions(spec.max_len, spec.max_sum) {
        let c = ConwayNotation::new(entries)
            .expect("positive compositions are valid")
            .normalize_odd();
        let variants = match spec.signs {
            Signs::Positive => vec![c],
            Signs::Negative => vec![c.negated()],
            Signs::Both => vec![c.clone(), c.negated()],
        };
        for v in variants {
            let p = v.determinant().expect("sweep bounds keep fractions small");
            if p % 2 == 0 {
                links.insert(v.entries().to_vec());
            } else {
                knots.insert(v.entries().to_vec());
            }
        }
    }
    let cases = knots
        .into_iter()
        .map(|e| ConwayNotation::new(e).expect("entries came from a notation"))
        .collect();
    (cases, links.len())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub conway: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub cases: usize,
    pub links_skipped: usize,
    pub failures: Vec<Failure>,
}

impl SweepSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl std::fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} cases, {} failures", self.cases, self.failures.len())
    }
}

/// Every report identity plus the mirror law for one notation.
pub fn verify_case(c: &ConwayNotation) -> Result<(), String> {
    let knot = KnotSpec::Conway(c.clone());
    let a = analyze(&knot, false).map_err(|e| e.to_string())?;
    let h = &a.histogram;
    let expected_level = if c.is_positive() { 0 } else { 1 };
    if h.levels().count() != 1 || h.get(expected_level) != a.report.generator_count {
        return Err(format!("histogram {h} not concentrated at level {expected_level}"));
    }
    let m = check_mirror(&knot).map_err(|e| e.to_string())?;
    if !m.antisymmetric {
        return Err(format!(
            "mirror law fails: sigma {} vs {}, r {} vs {}, det {} vs {}",
            m.original.sigma, m.mirror.sigma, m.original.r, m.mirror.r, m.original.det, m.mirror.det
        ));
    }
    Ok(())
}

/// Runs [`verify_case`] over the sweep; output order follows the notation
/// order whether or not the cases run in parallel.
pub fn verify(spec: &SweepSpec, parallel: bool) -> SweepSummary {
    let (cases, links_skipped) = enumerate(spec);
    let check = |c: &ConwayNotation| {
        verify_case(c).err().map(|message| Failure {
            conway: c.to_string(),
            message,
        })
    };
    let failures: Vec<Failure> = if parallel {
        cases.par_iter().filter_map(check).collect()
    } else {
        cases.iter().filter_map(check).collect()
    };
    SweepSummary {
        cases: cases.len(),
        links_skipped,
        failures,
    }
}
