use num_bigint::BigInt;
use num_rational::Ratio;
use serde::Serialize;

use super::{analyze, diagram_invariants, Fraction, InvariantError, KnotSpec};
use crate::diagram::{orient, plat_closure, splice_connected_sum, OrientedDiagram, PlanarDiagram};

/// The values a sum or mirror law compares.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawSide {
    pub sigma: i64,
    pub r: Fraction,
    pub det: String,
}

impl LawSide {
    fn of_report(knot: &KnotSpec) -> Result<(Self, BigInt), InvariantError> {
        let rep = analyze(knot, false)?.report;
        Ok((
            Self {
                sigma: rep.sigma,
                r: rep.r,
                det: rep.det.to_string(),
            },
            BigInt::from(rep.det),
        ))
    }

    fn of_diagram(d: &OrientedDiagram) -> Result<(Self, BigInt), InvariantError> {
        let inv = diagram_invariants(d)?;
        Ok((
            Self {
                sigma: inv.sigma,
                r: inv.r,
                det: inv.det,
            },
            inv.det_value,
        ))
    }
}

fn plat_diagram(knot: &KnotSpec, mirrored: bool) -> Result<OrientedDiagram, InvariantError> {
    match knot {
        KnotSpec::Unknot => Ok(orient(&PlanarDiagram::unknot())?),
        KnotSpec::Conway(c) => {
            let mut braid = c.normalize_odd().to_braid()?;
            if mirrored {
                braid = braid.mirror();
            }
            Ok(orient(&plat_closure(&braid))?)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MirrorVerdict {
    pub knot: String,
    pub original: LawSide,
    /// Computed from the plat closure of the mirrored braid.
    pub mirror: LawSide,
    pub sigma_antisymmetric: bool,
    pub r_antisymmetric: bool,
    pub det_equal: bool,
    pub antisymmetric: bool,
}

/// Compares a knot with the diagram of its mirrored braid.
pub fn check_mirror(knot: &KnotSpec) -> Result<MirrorVerdict, InvariantError> {
    let (original, det) = LawSide::of_report(knot)?;
    let (mirror, mirror_det) = LawSide::of_diagram(&plat_diagram(knot, true)?)?;
    let sigma_antisymmetric = mirror.sigma == -original.sigma;
    let r_antisymmetric = mirror.r.to_ratio() == -original.r.to_ratio();
    let det_equal = mirror_det == det;
    Ok(MirrorVerdict {
        knot: knot.to_string(),
        original,
        mirror,
        sigma_antisymmetric,
        r_antisymmetric,
        det_equal,
        antisymmetric: sigma_antisymmetric && r_antisymmetric && det_equal,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SumVerdict {
    pub first: String,
    pub second: String,
    pub parts: [LawSide; 2],
    /// Computed from the spliced diagram.
    pub sum: LawSide,
    pub r_total: Fraction,
    pub sigma_additive: bool,
    pub det_multiplicative: bool,
    pub r_additive: bool,
    pub additive: bool,
}

/// Compares the connected-sum diagram with the two summands.
pub fn check_sum(first: &KnotSpec, second: &KnotSpec) -> Result<SumVerdict, InvariantError> {
    let (a, det_a) = LawSide::of_report(first)?;
    let (b, det_b) = LawSide::of_report(second)?;
    let spliced = splice_connected_sum(&plat_diagram(first, false)?, &plat_diagram(second, false)?)?;
    let (sum, det_sum) = LawSide::of_diagram(&spliced)?;
    let r_total: Ratio<i64> = a.r.to_ratio() + b.r.to_ratio();
    let sigma_additive = sum.sigma == a.sigma + b.sigma;
    let det_multiplicative = det_sum == det_a * det_b;
    let r_additive = sum.r.to_ratio() == r_total;
    Ok(SumVerdict {
        first: first.to_string(),
        second: second.to_string(),
        parts: [a, b],
        sum,
        r_total: r_total.into(),
        sigma_additive,
        det_multiplicative,
        r_additive,
        additive: sigma_additive && det_multiplicative && r_additive,
    })
}
