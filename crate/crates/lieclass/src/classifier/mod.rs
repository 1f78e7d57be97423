//! Classification of homogeneous spaces with the cohomology of a product of
//! two spheres: exponent matching, module-existence feasibility, and the
//! integral filter on `π3` and curated torsion.

pub mod curated;
pub mod fixtures;
pub mod modules;
pub mod semisimple;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use crate::dynkin_index::{pi3_cokernel, AbelianGroup, IntMatrix, TargetField};
use crate::error::{LieError, Result};
use crate::lie_data::{exponents_of, ExponentSeq, Family, SimpleType};

use curated::{
    classical_exclusion, exceptional_inclusions, group_name, row_info, Exclusion, RowInfo,
};
use modules::modules_of_dim;

/// Kind of classification a row belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CaseKind {
    /// Both sphere dimensions odd, `G` simple.
    #[serde(rename = "I")]
    I,
    /// `n1` even, `n2` odd, `G` simple.
    #[serde(rename = "II")]
    II,
    /// Rational sphere `K/H`.
    #[serde(rename = "sphere")]
    Sphere,
    /// Real Stiefel manifold `V2(R^{2n+1})` type.
    #[serde(rename = "stiefel")]
    Stiefel,
    /// Product of two sphere actions.
    #[serde(rename = "split")]
    Split,
    /// Semisimple `G` with a diagonal factor in `H`.
    #[serde(rename = "nonsplit")]
    NonSplit,
}

impl fmt::Display for CaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseKind::I => "I",
            CaseKind::II => "II",
            CaseKind::Sphere => "sphere",
            CaseKind::Stiefel => "stiefel",
            CaseKind::Split => "split",
            CaseKind::NonSplit => "nonsplit",
        })
    }
}

/// Residual of `g` after removing the sub-multiset `h`, or `None` if `h`
/// is not contained in `g`.
pub fn match_case1(g: &ExponentSeq, h: &ExponentSeq) -> Option<Vec<u32>> {
    let mut rest: Vec<u32> = g.degrees().to_vec();
    for d in h.degrees() {
        let pos = rest.iter().position(|x| x == d)?;
        rest.remove(pos);
    }
    Some(rest)
}

/// One outcome of the even-sphere matcher.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Case2Match {
    /// Position in `h` whose degree `m` was replaced by `2m + 1`.
    pub position: usize,
    pub n1: u32,
    pub n2: u32,
}

/// Matches `g` against `h` with one degree `m` of `h` replaced by `2m + 1`.
/// Emits `(m + 1, ρ)` for each position whose transformed sequence leaves a
/// single residual `ρ > m + 1`; identical outcomes are reported once.
pub fn match_case2(g: &ExponentSeq, h: &ExponentSeq) -> Result<Vec<Case2Match>> {
    if g.len() != h.len() + 1 {
        return Err(LieError::Precondition(format!(
            "expected |g| = |h| + 1, got |g| = {} and |h| = {}",
            g.len(),
            h.len()
        )));
    }
    let mut out: Vec<Case2Match> = Vec::new();
    for (s, &m) in h.degrees().iter().enumerate() {
        let mut t = h.degrees().to_vec();
        t[s] = 2 * m + 1;
        let Some(rest) = match_case1(g, &ExponentSeq::new(t)) else {
            continue;
        };
        if let [rho] = rest.as_slice() {
            let (n1, n2) = (m + 1, *rho);
            if n2 > n1 && !out.iter().any(|c| (c.n1, c.n2) == (n1, n2)) {
                out.push(Case2Match {
                    position: s,
                    n1,
                    n2,
                });
            }
        }
    }
    Ok(out)
}

/// The group `G`: one or two simple factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupSpec {
    pub factors: Vec<SimpleType>,
}

impl GroupSpec {
    pub fn new(factors: Vec<SimpleType>) -> Result<Self> {
        if factors.is_empty() || factors.len() > 2 {
            return Err(LieError::Precondition(
                "a group has one or two simple factors".into(),
            ));
        }
        Ok(GroupSpec { factors })
    }

    pub fn simple(t: SimpleType) -> Self {
        GroupSpec { factors: vec![t] }
    }

    pub fn rank(&self) -> u32 {
        self.factors.iter().map(|t| t.rank).sum()
    }

    pub fn exponents(&self) -> ExponentSeq {
        exponents_of(&self.factors)
    }

    pub fn labels(&self) -> Vec<String> {
        self.factors.iter().map(|t| t.to_string()).collect()
    }

    /// Conventional group name, e.g. `Sp(3)×SU(3)`.
    pub fn name(&self) -> String {
        self.factors
            .iter()
            .map(|t| group_name(*t))
            .collect::<Vec<_>>()
            .join("×")
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.labels().join("+"))
    }
}

/// A factor of `H` embedded diagonally in both factors of `G`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagonalFactor {
    pub ty: SimpleType,
    /// Dynkin index of the projection to each factor of `G`.
    pub indices: Vec<u64>,
}

/// The subgroup `H`: simple factors, a central torus, and an optional
/// diagonal factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubgroupHypothesis {
    pub factors: Vec<SimpleType>,
    pub torus_rank: u32,
    pub diagonal: Option<DiagonalFactor>,
}

impl SubgroupHypothesis {
    pub fn semisimple(factors: Vec<SimpleType>) -> Self {
        SubgroupHypothesis {
            factors,
            torus_rank: 0,
            diagonal: None,
        }
    }

    pub fn trivial() -> Self {
        Self::semisimple(vec![])
    }

    pub fn rank(&self) -> u32 {
        let diag = self.diagonal.as_ref().map_or(0, |d| d.ty.rank);
        self.factors.iter().map(|t| t.rank).sum::<u32>() + self.torus_rank + diag
    }

    pub fn exponents(&self) -> ExponentSeq {
        let mut all = self.factors.clone();
        if let Some(d) = &self.diagonal {
            all.push(d.ty);
        }
        exponents_of(&all)
    }

    /// Labels per factor; the diagonal factor is prefixed with `Δ`.
    pub fn labels(&self) -> Vec<String> {
        let mut out: Vec<String> = self.factors.iter().map(|t| t.to_string()).collect();
        if self.torus_rank > 0 {
            out.push(format!("T{}", self.torus_rank));
        }
        if let Some(d) = &self.diagonal {
            out.push(format!("Δ{}", d.ty));
        }
        out
    }
}

impl fmt::Display for SubgroupHypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels = self.labels();
        if labels.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&labels.join("+"))
        }
    }
}

/// Outcome of the module-existence check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Feasibility {
    Feasible,
    Infeasible,
    CuratedDataMissing,
}

impl fmt::Display for Feasibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Feasibility::Feasible => "feasible",
            Feasibility::Infeasible => "infeasible",
            Feasibility::CuratedDataMissing => "curated-data-missing",
        })
    }
}

/// Where a witness comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    Computed,
    Curated,
}

/// A concrete embedding `H -> G` with its `π3` data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub description: String,
    pub source: Source,
    /// Map `π3(H) -> π3(G)`: one row per factor of `G`, one column per
    /// factor of `H`.
    pub matrix: IntMatrix,
    pub pi3: AbelianGroup,
    /// Order of the kernel on the center of the simply connected cover of `H`.
    pub kernel_order: Option<u32>,
    pub exclusion: Option<Exclusion>,
    pub passes: bool,
}

impl Witness {
    pub fn to_json(&self) -> Value {
        json!({
            "module": self.description,
            "source": self.source,
            "matrix": self.matrix.to_string(),
            "pi3": self.pi3.to_string(),
            "kernel_order": self.kernel_order,
            "exclusion": self.exclusion.as_ref().map(|e| e.reason.clone()),
            "passes": self.passes,
        })
    }
}

/// Required `π3(G/H)` for a product of spheres with smallest dimension `n1`.
fn pi3_ok(pi3: &AbelianGroup, n1: u32) -> bool {
    if n1 == 3 {
        *pi3 == AbelianGroup::cyclic(0)
    } else {
        pi3.is_trivial()
    }
}

pub(crate) fn make_witness(
    description: String,
    source: Source,
    matrix: IntMatrix,
    kernel_order: Option<u32>,
    exclusion: Option<Exclusion>,
    n1: u32,
) -> Witness {
    let pi3 = if matrix.ncols() == 0 {
        AbelianGroup {
            free_rank: matrix.nrows(),
            torsion: vec![],
        }
    } else {
        pi3_cokernel(&matrix)
    };
    let passes = pi3_ok(&pi3, n1) && kernel_order.is_none_or(|k| k == 1) && exclusion.is_none();
    Witness {
        description,
        source,
        matrix,
        pi3,
        kernel_order,
        exclusion,
        passes,
    }
}

/// One row of a classification table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidatePair {
    pub g: GroupSpec,
    pub h: SubgroupHypothesis,
    pub residual: Vec<u32>,
    pub case: CaseKind,
    pub feasibility: Feasibility,
    /// Flattened `π3` matrix shared by the witnesses of this row.
    pub index: Vec<u64>,
    pub witnesses: Vec<Witness>,
    pub torsion: Option<AbelianGroup>,
    pub passes: bool,
    pub info: RowInfo,
    /// Number of conjugacy classes represented by this row.
    pub multiplicity: u32,
    pub coincidence: Option<String>,
    pub notes: Vec<String>,
}

impl CandidatePair {
    /// `G/H` in conventional group names.
    pub fn quotient_name(&self) -> String {
        let h = if self.h.factors.is_empty() && self.h.torus_rank == 0 && self.h.diagonal.is_none()
        {
            "1".to_string()
        } else {
            let mut parts: Vec<String> = self.h.factors.iter().map(|t| group_name(*t)).collect();
            if self.h.torus_rank > 0 {
                parts.push(format!("T{}", self.h.torus_rank));
            }
            if let Some(d) = &self.h.diagonal {
                parts.push(format!("Δ{}", group_name(d.ty)));
            }
            parts.join("×")
        };
        format!("{}/{}", self.g.name(), h)
    }

    /// Notes shown with the row: exclusions, curated columns, coincidences.
    pub fn curated_notes(&self) -> Vec<String> {
        let mut out = self.notes.clone();
        if let Some(c) = &self.info.centralizer {
            out.push(format!("centralizer: {c}"));
        }
        if let Some(s) = &self.info.space {
            out.push(format!("space: {s}"));
        }
        if let Some(s) = &self.info.series {
            out.push(format!("series: {s}"));
        }
        if let Some(c) = &self.coincidence {
            out.push(format!("coincidence: {c}"));
        }
        if self.multiplicity > 1 {
            out.push(format!("multiplicity: {}", self.multiplicity));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "g": self.g.labels(),
            "h": self.h.labels(),
            "residual": self.residual,
            "case": self.case,
            "feasible": self.feasibility,
            "index": self.index,
            "witnesses": self.witnesses.iter().map(Witness::to_json).collect::<Vec<_>>(),
            "torsion": self.torsion.as_ref().map(|t| t.to_string()),
            "passes": self.passes,
            "curated_notes": self.curated_notes(),
        })
    }
}

fn natural_module(g: SimpleType) -> (TargetField, u64) {
    let n = g.rank as u64;
    match g.family {
        Family::A => (TargetField::Complex, n + 1),
        Family::B => (TargetField::Real, 2 * n + 1),
        Family::C => (TargetField::Quaternionic, n),
        Family::D => (TargetField::Real, 2 * n),
        _ => unreachable!("exceptional groups have no natural module here"),
    }
}

/// Verdict of the module-existence check with its witnesses.
#[derive(Debug, Clone)]
pub struct FeasibilityReport {
    pub verdict: Feasibility,
    pub witnesses: Vec<Witness>,
}

/// Module-existence check for a simple `G`: for classical `G`, all modules
/// of `H` on the natural module with every factor acting nontrivially; for
/// exceptional `G`, the curated subgroup table.
pub fn feasibility_filter(
    case: CaseKind,
    g: SimpleType,
    h: &[SimpleType],
    n1: u32,
) -> FeasibilityReport {
    if !g.family.is_classical() {
        return match exceptional_inclusions(g, h) {
            None => FeasibilityReport {
                verdict: Feasibility::CuratedDataMissing,
                witnesses: vec![],
            },
            Some(list) => {
                let witnesses: Vec<Witness> = list
                    .into_iter()
                    .map(|inc| {
                        let row: Vec<i64> = inc.index.iter().map(|&x| x as i64).collect();
                        make_witness(
                            inc.label.to_string(),
                            Source::Curated,
                            IntMatrix::from_i64(&[&row]),
                            None,
                            inc.exclusion,
                            n1,
                        )
                    })
                    .collect();
                FeasibilityReport {
                    verdict: if witnesses.is_empty() {
                        Feasibility::Infeasible
                    } else {
                        Feasibility::Feasible
                    },
                    witnesses,
                }
            }
        };
    }
    if h.is_empty() {
        return FeasibilityReport {
            verdict: Feasibility::Feasible,
            witnesses: vec![make_witness(
                "1".into(),
                Source::Computed,
                IntMatrix::from_i64(&[&[]]),
                Some(1),
                None,
                n1,
            )],
        };
    }
    let (target, dim) = natural_module(g);
    let witnesses: Vec<Witness> = modules_of_dim(h, target, dim)
        .into_iter()
        .map(|m| {
            let row: Vec<i64> = m.indices().iter().map(|&x| x as i64).collect();
            let exclusion = classical_exclusion(case, g, &m);
            make_witness(
                m.to_string(),
                Source::Computed,
                IntMatrix::from_i64(&[&row]),
                m.kernel_order(),
                exclusion,
                n1,
            )
        })
        .collect();
    FeasibilityReport {
        verdict: if witnesses.is_empty() {
            Feasibility::Infeasible
        } else {
            Feasibility::Feasible
        },
        witnesses,
    }
}

/// Integral verdict of a row: some witness has the required `π3`, a
/// faithful action, and no curated exclusion.
pub fn integral_filter(c: &CandidatePair) -> bool {
    c.feasibility == Feasibility::Feasible && c.witnesses.iter().any(|w| w.passes)
}

fn matrix_key(m: &IntMatrix) -> Vec<u64> {
    m.rows
        .iter()
        .flatten()
        .map(|x| x.to_string().parse::<u64>().unwrap_or(0))
        .collect()
}

/// Groups witnesses by their `π3` matrix into rows.
pub(crate) fn rows_from_witnesses(
    case: CaseKind,
    g: GroupSpec,
    h: SubgroupHypothesis,
    residual: Vec<u32>,
    report: FeasibilityReport,
) -> Vec<CandidatePair> {
    let base = CandidatePair {
        g,
        h,
        residual,
        case,
        feasibility: report.verdict,
        index: vec![],
        witnesses: vec![],
        torsion: None,
        passes: false,
        info: RowInfo::default(),
        multiplicity: 1,
        coincidence: None,
        notes: vec![],
    };
    if report.witnesses.is_empty() {
        let mut row = base;
        if row.feasibility == Feasibility::CuratedDataMissing {
            row.notes.push("curated-data-missing".into());
        }
        return vec![row];
    }
    let mut groups: BTreeMap<Vec<u64>, Vec<Witness>> = BTreeMap::new();
    let mut order: Vec<Vec<u64>> = Vec::new();
    for w in report.witnesses {
        let key = matrix_key(&w.matrix);
        if !groups.contains_key(&key) {
            order.push(key.clone());
        }
        groups.entry(key).or_default().push(w);
    }
    order
        .into_iter()
        .map(|key| {
            let witnesses = groups.remove(&key).unwrap_or_default();
            let mut row = base.clone();
            row.torsion = witnesses.first().map(|w| w.pi3.clone());
            row.passes = witnesses.iter().any(|w| w.passes);
            for w in &witnesses {
                if let Some(e) = &w.exclusion {
                    row.notes
                        .push(format!("excluded ({}): {}", w.description, e.reason));
                }
                if let Some(k) = w.kernel_order.filter(|&k| k > 1) {
                    row.notes.push(format!(
                        "not faithful ({}): kernel of order {k}",
                        w.description
                    ));
                }
            }
            row.index = key;
            let gs: Vec<SimpleType> = row.g.factors.clone();
            if gs.len() == 1 {
                row.info = row_info(case, gs[0], &row.h.factors, &row.residual, &row.index);
            }
            row.witnesses = witnesses;
            row
        })
        .collect()
}

/// Simple subgroup candidates of rank `r`: the trivial group for `r = 0`.
fn simple_or_trivial(r: u32) -> Vec<Vec<SimpleType>> {
    if r == 0 {
        vec![vec![]]
    } else {
        SimpleType::all_canonical(r)
            .into_iter()
            .filter(|t| t.rank == r)
            .map(|t| vec![t])
            .collect()
    }
}

/// Products of at most two simple factors of total rank `r`, as sorted
/// multisets.
fn at_most_two_factors(r: u32) -> Vec<Vec<SimpleType>> {
    let mut out = simple_or_trivial(r);
    let all = SimpleType::all_canonical(r);
    for (i, a) in all.iter().enumerate() {
        for b in &all[i..] {
            if a.rank + b.rank == r {
                out.push(vec![*a, *b]);
            }
        }
    }
    out
}

fn simple_groups(max_rank: u32, min_rank: u32) -> Vec<SimpleType> {
    SimpleType::all_canonical(max_rank)
        .into_iter()
        .filter(|t| t.rank >= min_rank)
        .collect()
}

/// Both sphere dimensions odd, `G` simple of rank at most `max_rank`, `H`
/// trivial or simple. All rows, passing or not.
pub fn classify_case1_all(max_rank: u32) -> Vec<CandidatePair> {
    let mut out = Vec::new();
    for g in simple_groups(max_rank, 2) {
        for h in simple_or_trivial(g.rank - 2) {
            let Some(residual) = match_case1(&exponents_of(&[g]), &exponents_of(&h)) else {
                continue;
            };
            let report = feasibility_filter(CaseKind::I, g, &h, residual[0]);
            out.extend(rows_from_witnesses(
                CaseKind::I,
                GroupSpec::simple(g),
                SubgroupHypothesis::semisimple(h),
                residual,
                report,
            ));
        }
    }
    out
}

/// `n1` even and `n2` odd, `G` simple of rank at most `max_rank`, `H` with
/// at most two simple factors. All rows, passing or not.
pub fn classify_case2_all(max_rank: u32) -> Vec<CandidatePair> {
    let mut out = Vec::new();
    for g in simple_groups(max_rank, 2) {
        for h in at_most_two_factors(g.rank - 1) {
            let Ok(matches) = match_case2(&exponents_of(&[g]), &exponents_of(&h)) else {
                continue;
            };
            for m in matches {
                let report = feasibility_filter(CaseKind::II, g, &h, m.n1);
                out.extend(rows_from_witnesses(
                    CaseKind::II,
                    GroupSpec::simple(g),
                    SubgroupHypothesis::semisimple(h.clone()),
                    vec![m.n1, m.n2],
                    report,
                ));
            }
        }
    }
    out
}

/// Rational spheres `K/H` with `K` simple of rank at most `max_rank`: odd
/// spheres by single-residual matching, even spheres from the curated list.
pub fn classify_spheres_all(max_rank: u32) -> Vec<CandidatePair> {
    let mut out = Vec::new();
    for g in simple_groups(max_rank, 1) {
        for h in simple_or_trivial(g.rank - 1) {
            let Some(residual) = match_case1(&exponents_of(&[g]), &exponents_of(&h)) else {
                continue;
            };
            let report = feasibility_filter(CaseKind::Sphere, g, &h, residual[0]);
            out.extend(rows_from_witnesses(
                CaseKind::Sphere,
                GroupSpec::simple(g),
                SubgroupHypothesis::semisimple(h),
                residual,
                report,
            ));
        }
    }
    for (k, h, torus, m) in curated::even_spheres(max_rank) {
        let witness = Witness {
            description: format!(
                "{}/{}",
                group_name(k),
                if torus > 0 {
                    "T1".to_string()
                } else {
                    h.iter()
                        .map(|t| group_name(*t))
                        .collect::<Vec<_>>()
                        .join("×")
                }
            ),
            source: Source::Curated,
            matrix: IntMatrix::from_i64(&[&[]]),
            pi3: AbelianGroup::trivial(),
            kernel_order: None,
            exclusion: None,
            passes: true,
        };
        let residual = vec![m];
        out.push(CandidatePair {
            g: GroupSpec::simple(k),
            h: SubgroupHypothesis {
                factors: h.clone(),
                torus_rank: torus,
                diagonal: None,
            },
            info: row_info(CaseKind::Sphere, k, &h, &residual, &[]),
            residual,
            case: CaseKind::Sphere,
            feasibility: Feasibility::Feasible,
            index: vec![],
            witnesses: vec![witness],
            torsion: None,
            passes: true,
            multiplicity: 1,
            coincidence: None,
            notes: vec![format!("curated: {}", curated::EVEN_SPHERE_QUOTE)],
        });
    }
    out
}

/// Passing rows only.
pub fn passing(rows: Vec<CandidatePair>) -> Vec<CandidatePair> {
    rows.into_iter().filter(integral_filter).collect()
}

/// Feasible rows regardless of the integral filter.
pub fn rational(rows: Vec<CandidatePair>) -> Vec<CandidatePair> {
    rows.into_iter()
        .filter(|r| r.feasibility != Feasibility::Infeasible)
        .collect()
}

pub fn classify_spheres(max_rank: u32) -> Vec<CandidatePair> {
    passing(classify_spheres_all(max_rank))
}

pub fn classify_case1(max_rank: u32) -> Vec<CandidatePair> {
    let mut rows = passing(classify_case1_all(max_rank));
    mark_coincidences(&mut rows, &classify_spheres(max_rank));
    rows
}

pub fn classify_case2(max_rank: u32) -> Vec<CandidatePair> {
    let mut rows = passing(classify_case2_all(max_rank));
    mark_coincidences(&mut rows, &classify_spheres(max_rank));
    rows
}

/// Spaces with the integral cohomology of `V2(R^{2n+1})`: sphere candidates
/// whose only obstruction is the Stiefel torsion.
pub fn classify_stiefel(max_rank: u32) -> Vec<CandidatePair> {
    let mut out = Vec::new();
    for row in classify_spheres_all(max_rank) {
        let stiefel: Vec<Witness> = row
            .witnesses
            .iter()
            .filter(|w| {
                w.exclusion
                    .as_ref()
                    .is_some_and(|e| e.reason.starts_with("V2("))
            })
            .cloned()
            .collect();
        if stiefel.is_empty() {
            continue;
        }
        let reason = stiefel[0]
            .exclusion
            .as_ref()
            .map(|e| e.reason.clone())
            .unwrap_or_default();
        let g = row.g.factors[0];
        out.push(CandidatePair {
            case: CaseKind::Stiefel,
            info: row_info(
                CaseKind::Stiefel,
                g,
                &row.h.factors,
                &row.residual,
                &row.index,
            ),
            witnesses: stiefel,
            passes: true,
            notes: vec![reason],
            ..row
        });
    }
    out
}

/// Flags pairs of passing rows `G/H`, `G'/H'` with the same residual where
/// `G'/G` and `H'/H` are passing sphere rows of equal dimension.
pub fn mark_coincidences(rows: &mut [CandidatePair], spheres: &[CandidatePair]) {
    let sphere_dim = |big: SimpleType, small: SimpleType| -> Option<u32> {
        spheres
            .iter()
            .find(|s| {
                s.g.factors == [big]
                    && s.h.factors == [small]
                    && s.h.torus_rank == 0
                    && s.residual[0] % 2 == 1
            })
            .map(|s| s.residual[0])
    };
    let n = rows.len();
    for i in 0..n {
        for j in 0..n {
            let (a, b) = (&rows[i], &rows[j]);
            if i == j
                || a.residual != b.residual
                || a.h.factors.len() != 1
                || b.h.factors.len() != 1
            {
                continue;
            }
            let (g, g2, h, h2) = (
                a.g.factors[0],
                b.g.factors[0],
                a.h.factors[0],
                b.h.factors[0],
            );
            if let (Some(d1), Some(d2)) = (sphere_dim(g2, g), sphere_dim(h2, h)) {
                if d1 == d2 {
                    let flag = format!("{} = {}", a.quotient_name(), b.quotient_name());
                    rows[i].coincidence = Some(flag.clone());
                    rows[j].coincidence = Some(flag);
                }
            }
        }
    }
}

/// Coincidence flags present in a row list, deduplicated.
pub fn coincidences(rows: &[CandidatePair]) -> Vec<String> {
    let mut out: Vec<String> = rows.iter().filter_map(|r| r.coincidence.clone()).collect();
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[u32]) -> ExponentSeq {
        ExponentSeq::new(v.to_vec())
    }

    #[test]
    fn case1_examples() {
        assert_eq!(
            match_case1(&seq(&[3, 5, 7, 9]), &seq(&[3, 5])),
            Some(vec![7, 9])
        );
        assert_eq!(
            match_case1(&seq(&[3, 7, 7, 11]), &seq(&[3, 11])),
            Some(vec![7, 7])
        );
        assert_eq!(match_case1(&seq(&[3, 5]), &seq(&[3, 5])), Some(vec![]));
        assert_eq!(match_case1(&seq(&[3, 5]), &seq(&[7])), None);
    }

    #[test]
    fn case2_examples() {
        let m = match_case2(&seq(&[3, 5, 7, 9]), &seq(&[3, 3, 5])).unwrap();
        assert_eq!(
            m.iter().map(|c| (c.n1, c.n2)).collect::<Vec<_>>(),
            vec![(4, 9)]
        );
        let m = match_case2(&seq(&[3, 7, 11]), &seq(&[3, 3])).unwrap();
        assert_eq!(
            m.iter().map(|c| (c.n1, c.n2)).collect::<Vec<_>>(),
            vec![(4, 11)]
        );
        assert!(match_case2(&seq(&[3, 5]), &seq(&[3, 5])).is_err());
    }
}
