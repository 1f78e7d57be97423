//! Admissibility of multiplicity pairs `(m1, m2)` for compact quadrangles and
//! isoparametric hypersurfaces with four principal curvatures.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::classifier::{classify_case1, classify_case2, semisimple, CandidatePair, CaseKind};
use crate::error::{LieError, Result};

/// Multiplicities of an isoparametric hypersurface with `g = 4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct MultiplicityPair {
    pub m1: u64,
    pub m2: u64,
}

impl MultiplicityPair {
    pub fn new(m1: u64, m2: u64) -> Result<Self> {
        if m1 == 0 || m2 == 0 {
            return Err(LieError::Precondition(
                "multiplicities must be positive".into(),
            ));
        }
        Ok(MultiplicityPair { m1, m2 })
    }
}

/// Three-valued verdict for theorems with hypotheses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

/// Which clause of the multiplicity constraint was satisfied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MunznerClause {
    /// `m1 = m2 ∈ {1, 2, 4}`.
    EqualSmall,
    /// `1 ∈ {m1, m2}`.
    ContainsOne,
    /// `m1 + m2` odd.
    OddSum,
    /// No clause holds.
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MunznerVerdict {
    pub verdict: Verdict,
    pub clause: MunznerClause,
}

pub fn munzner_admissible(p: MultiplicityPair) -> MunznerVerdict {
    let clause = if p.m1 == p.m2 && matches!(p.m1, 1 | 2 | 4) {
        MunznerClause::EqualSmall
    } else if p.m1 == 1 || p.m2 == 1 {
        MunznerClause::ContainsOne
    } else if (p.m1 + p.m2) % 2 == 1 {
        MunznerClause::OddSum
    } else {
        MunznerClause::None
    };
    MunznerVerdict {
        verdict: if clause == MunznerClause::None {
            Verdict::Fail
        } else {
            Verdict::Pass
        },
        clause,
    }
}

/// Number of `1 <= i <= k` with `i ≡ 0, 1, 2, 4 (mod 8)`.
pub fn phi(k: u64) -> u64 {
    let full = k / 8;
    let rest = (1..=k % 8).filter(|i| matches!(i, 1 | 2 | 4)).count() as u64;
    4 * full + rest
}

fn divides_power_of_two(exp: u64, n: u64) -> bool {
    exp < 64 && n.is_multiple_of(1u64 << exp)
}

/// `(4,5)` or `2^{φ(m1-1)} | m1+m2+1`, for `2 <= m1 < m2`.
pub fn stolz_admissible(p: MultiplicityPair) -> Verdict {
    if !(2 <= p.m1 && p.m1 < p.m2) {
        return Verdict::NotApplicable;
    }
    if (p.m1, p.m2) == (4, 5) || divides_power_of_two(phi(p.m1 - 1), p.m1 + p.m2 + 1) {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

/// `2^{φ(k)} | m1+m2+1` with `k = min(m2-m1, m1-1)`, for `2 <= m1 < m2`.
pub fn markert_check(p: MultiplicityPair) -> Verdict {
    if !(2 <= p.m1 && p.m1 < p.m2) {
        return Verdict::NotApplicable;
    }
    let k = (p.m2 - p.m1).min(p.m1 - 1);
    if divides_power_of_two(phi(k), p.m1 + p.m2 + 1) {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

/// Dimensions of the total space and the two focal manifolds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FocalDims {
    pub dim_f: u64,
    pub dim_p: u64,
    pub dim_l: u64,
}

pub fn dims(p: MultiplicityPair) -> FocalDims {
    FocalDims {
        dim_f: 2 * (p.m1 + p.m2),
        dim_p: 2 * p.m1 + p.m2,
        dim_l: 2 * p.m2 + p.m1,
    }
}

/// Integral cohomology patterns, as products of sphere dimensions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohomologyPatterns {
    pub p: Vec<u64>,
    pub l: Vec<u64>,
    pub f: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdmissibilityReport {
    pub m1: u64,
    pub m2: u64,
    pub munzner: MunznerVerdict,
    pub stolz: Verdict,
    pub markert: Verdict,
    pub dims: FocalDims,
    /// Present when `m1 + m2` is odd.
    pub cohomology: Option<CohomologyPatterns>,
}

pub fn report(p: MultiplicityPair) -> AdmissibilityReport {
    let s = p.m1 + p.m2;
    let cohomology = (s % 2 == 1).then(|| CohomologyPatterns {
        p: vec![p.m1, s],
        l: vec![p.m2, s],
        f: vec![p.m1, p.m2, s],
    });
    AdmissibilityReport {
        m1: p.m1,
        m2: p.m2,
        munzner: munzner_admissible(p),
        stolz: stolz_admissible(p),
        markert: markert_check(p),
        dims: dims(p),
        cohomology,
    }
}

/// Degrees `(n1, n2) = (m1, m1 + m2)` of the point space, within the range
/// covered by the classification: `m1 >= 3` and `m1 + m2` odd.
pub fn point_space_degrees(p: MultiplicityPair) -> Result<(u64, u64)> {
    if p.m1 < 3 {
        return Err(LieError::OutOfRange(format!(
            "m1 = {} < 3: point spaces are only classified for m1 >= 3",
            p.m1
        )));
    }
    if (p.m1 + p.m2).is_multiple_of(2) {
        return Err(LieError::OutOfRange(format!(
            "m1 + m2 = {} is even: the point space is not a product-of-spheres candidate",
            p.m1 + p.m2
        )));
    }
    Ok((p.m1, p.m1 + p.m2))
}

/// Classifier rows whose residual degrees match the point space of `p`.
#[derive(Debug, Clone)]
pub struct PointSpaceQuery {
    pub pair: MultiplicityPair,
    pub n1: u64,
    pub n2: u64,
    pub max_rank: u32,
    pub candidates: Vec<CandidatePair>,
}

impl PointSpaceQuery {
    pub fn to_json(&self) -> Value {
        json!({
            "m1": self.pair.m1,
            "m2": self.pair.m2,
            "n1": self.n1,
            "n2": self.n2,
            "max_rank": self.max_rank,
            "candidates": self.candidates.iter().map(CandidatePair::to_json).collect::<Vec<_>>(),
        })
    }
}

fn all_passing_rows(max_rank: u32) -> Vec<CandidatePair> {
    let mut rows = classify_case1(max_rank);
    rows.extend(classify_case2(max_rank));
    rows.extend(semisimple::classify_semisimple(max_rank));
    rows
}

fn has_residual(row: &CandidatePair, n1: u64, n2: u64) -> bool {
    let mut r: Vec<u64> = row.residual.iter().map(|&d| d as u64).collect();
    r.sort_unstable();
    r == [n1.min(n2), n1.max(n2)]
}

/// Homogeneous candidates `G/H` for the point space of an isoparametric
/// hypersurface with multiplicities `p`, whose cohomology is that of
/// `S^{m1} × S^{m1+m2}`.
pub fn candidate_point_spaces(p: MultiplicityPair, max_rank: u32) -> Result<PointSpaceQuery> {
    let (n1, n2) = point_space_degrees(p)?;
    let candidates = all_passing_rows(max_rank)
        .into_iter()
        .filter(|r| has_residual(r, n1, n2))
        .collect();
    Ok(PointSpaceQuery {
        pair: p,
        n1,
        n2,
        max_rank,
        candidates,
    })
}

/// Marker kind of an atlas point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AtlasMark {
    Series,
    Sporadic,
}

/// One point `(n1, n2 - n1)` with the group actions realizing it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AtlasPoint {
    pub n1: u64,
    pub gap: u64,
    pub mark: AtlasMark,
    /// Two or more actions share this point.
    pub double: bool,
    pub spaces: Vec<String>,
}

fn atlas_mark(row: &CandidatePair) -> AtlasMark {
    let stiefel = row
        .info
        .space
        .as_deref()
        .is_some_and(|s| s.starts_with("V2(C^") || s.starts_with("V2(H^"));
    if row.info.series.is_some() || stiefel {
        AtlasMark::Series
    } else {
        AtlasMark::Sporadic
    }
}

/// Points `(n1, n2 - n1)` with `n1, n2 - n1 <= max` of spaces that are not
/// products of homogeneous spheres. A point realized by both a series and a
/// sporadic space yields one entry per mark.
pub fn atlas(max: u64) -> Vec<AtlasPoint> {
    let rank = (max / 2 + 3).max(8) as u32;
    let mut points: BTreeMap<(u64, u64, AtlasMark), Vec<String>> = BTreeMap::new();
    for row in all_passing_rows(rank) {
        if row.case == CaseKind::Split {
            continue;
        }
        let mut r: Vec<u64> = row.residual.iter().map(|&d| d as u64).collect();
        r.sort_unstable();
        let (n1, gap) = (r[0], r[1] - r[0]);
        if n1 > max || gap > max {
            continue;
        }
        let spaces = points.entry((n1, gap, atlas_mark(&row))).or_default();
        for _ in 0..row.multiplicity.max(1) {
            spaces.push(row.quotient_name());
        }
    }
    points
        .into_iter()
        .map(|((n1, gap, mark), spaces)| AtlasPoint {
            n1,
            gap,
            mark,
            double: spaces.len() > 1,
            spaces,
        })
        .collect()
}
