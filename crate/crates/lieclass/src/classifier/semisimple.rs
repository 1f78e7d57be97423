//! Semisimple `G = K1 × K2`: split products of sphere actions, and the
//! non-split families where a diagonal factor `H0` of type `A1` meets both
//! factors.

use crate::dynkin_index::{AbelianGroup, IntMatrix, TargetField};
use crate::lie_data::{canonicalize, exponents_of, Family, SimpleType};

use super::curated::{g2_sp1_subgroups, Exclusion, RowInfo};
use super::modules::modules_of_dim;
use super::{
    classify_spheres, make_witness, match_case1, match_case2, passing, CandidatePair, CaseKind,
    DiagonalFactor, Feasibility, GroupSpec, Source, SubgroupHypothesis, Witness,
};

fn st(f: Family, n: u32) -> SimpleType {
    canonicalize(f, n).expect("valid type").ty
}

fn a1() -> SimpleType {
    SimpleType::of(Family::A, 1)
}

fn excl(reason: &str, quote: &'static str) -> Option<Exclusion> {
    Some(Exclusion {
        reason: reason.to_string(),
        quote,
    })
}

fn info(cen: &str, space: String, series: &str) -> RowInfo {
    RowInfo {
        centralizer: Some(cen.to_string()),
        space: Some(space),
        series: (!series.is_empty()).then(|| series.to_string()),
    }
}

/// Products of two passing sphere rows `K1/H1 × K2/H2` with dimensions
/// `3 <= n1 <= n2` and `n2` odd.
pub fn split_rows(max_rank: u32) -> Vec<CandidatePair> {
    let spheres = classify_spheres(max_rank);
    let mut out = Vec::new();
    for (i, a) in spheres.iter().enumerate() {
        for b in &spheres[i..] {
            if a.g.rank() + b.g.rank() > max_rank {
                continue;
            }
            let (da, db) = (a.residual[0], b.residual[0]);
            let (lo, hi) = (da.min(db), da.max(db));
            if lo < 3 || hi % 2 == 0 {
                continue;
            }
            let (first, second) = if da <= db { (a, b) } else { (b, a) };
            let mut factors = first.h.factors.clone();
            factors.extend(second.h.factors.iter().copied());
            let pi3 = |s: &CandidatePair| if s.residual[0] == 3 { 1 } else { 0 };
            let torsion = AbelianGroup {
                free_rank: pi3(first) + pi3(second),
                torsion: vec![],
            };
            let witness = Witness {
                description: format!("{} × {}", first.quotient_name(), second.quotient_name()),
                source: Source::Computed,
                matrix: IntMatrix::from_i64(&[&[]]),
                pi3: torsion.clone(),
                kernel_order: None,
                exclusion: None,
                passes: true,
            };
            out.push(CandidatePair {
                g: GroupSpec {
                    factors: vec![first.g.factors[0], second.g.factors[0]],
                },
                h: SubgroupHypothesis {
                    factors,
                    torus_rank: first.h.torus_rank + second.h.torus_rank,
                    diagonal: None,
                },
                residual: vec![lo, hi],
                case: CaseKind::Split,
                feasibility: Feasibility::Feasible,
                index: vec![],
                witnesses: vec![witness],
                torsion: Some(torsion),
                passes: true,
                info: RowInfo {
                    centralizer: None,
                    space: Some(format!("S^{lo}×S^{hi}")),
                    series: None,
                },
                multiplicity: 1,
                coincidence: None,
                notes: vec![],
            });
        }
    }
    out
}

/// `K1/H1` a rational sphere whose centralizer contains a factor of type
/// `A1`: `Sp(n)/Sp(n-1)` or `G2/SU(2)` in its two forms.
struct LargeCentralizer {
    k1: SimpleType,
    h1: SimpleType,
    /// Index of `H1` in `K1`.
    psi: u64,
    /// Index of the centralizing `A1` in `K1`.
    phi1: u64,
    label: String,
}

fn large_centralizer_pairs(max_k1_rank: u32) -> Vec<LargeCentralizer> {
    let mut out = Vec::new();
    for n in 2..=max_k1_rank {
        out.push(LargeCentralizer {
            k1: st(Family::C, n),
            h1: st(Family::C, n - 1),
            psi: 1,
            phi1: 1,
            label: format!("Sp({n})/Sp({})", n - 1),
        });
    }
    if max_k1_rank >= 2 {
        for (psi, phi1) in [(1, 3), (3, 1)] {
            out.push(LargeCentralizer {
                k1: SimpleType::of(Family::G2, 2),
                h1: a1(),
                psi,
                phi1,
                label: format!("G2/SU(2) (ψ index {psi}, φ1 index {phi1})"),
            });
        }
    }
    out
}

/// Homomorphisms `SU(2) -> K2` for `K2` of rank 2, with their indices.
fn rank2_targets() -> Vec<(SimpleType, Vec<(String, u64)>)> {
    let mut out = Vec::new();
    for (k2, target, dim) in [
        (st(Family::A, 2), TargetField::Complex, 3),
        (st(Family::B, 2), TargetField::Real, 5),
    ] {
        let phis = modules_of_dim(&[a1()], target, dim)
            .into_iter()
            .map(|m| (m.to_string(), m.indices()[0]))
            .collect();
        out.push((k2, phis));
    }
    let g2 = g2_sp1_subgroups()
        .into_iter()
        .map(|s| (s.label.to_string(), s.index))
        .collect();
    out.push((SimpleType::of(Family::G2, 2), g2));
    out
}

const G2_PI5_QUOTE: &str = r"$\G_2$ & $^\RR\rho_{\lambda_1}$ & & $(11,4n-1)$ & & $\pi_5=\ZZ/2$";
const G2_K1_PI5_QUOTE: &str = r"\rho_{\lambda_1})$ & $(5,11)$ & $\pi_5=\ZZ/2$";
const G2_G2_PI5_QUOTE: &str = r"$(11,11)$ & $\pi_5=\ZZ/2\oplus\ZZ/2$";
const G2_CASE2_QUOTE: &str =
    r"the fibre has the same $\ZZ/2$-cohomology as the Stiefel manifold $V_2(\RR^7)$";

fn nonsplit_exclusion(c: &LargeCentralizer, k2: SimpleType, jphi: u64) -> Option<Exclusion> {
    let k1_g2 = c.k1.family == Family::G2;
    let k2_g2 = k2.family == Family::G2;
    if k1_g2 && c.psi == 1 && jphi == 1 {
        if k2_g2 {
            return excl("π5 = Z/2⊕Z/2", G2_G2_PI5_QUOTE);
        }
        return excl("π5 = Z/2", G2_K1_PI5_QUOTE);
    }
    if k2_g2 && jphi == 1 && !k1_g2 {
        return excl("π5 = Z/2", G2_PI5_QUOTE);
    }
    None
}

fn row(
    g: GroupSpec,
    h: SubgroupHypothesis,
    residual: Vec<u32>,
    witness: Witness,
    info: RowInfo,
    multiplicity: u32,
) -> CandidatePair {
    let index: Vec<u64> = witness
        .matrix
        .rows
        .iter()
        .flatten()
        .map(|x| x.to_string().parse().unwrap_or(0))
        .collect();
    let mut notes = Vec::new();
    if let Some(e) = &witness.exclusion {
        notes.push(format!("excluded ({}): {}", witness.description, e.reason));
    }
    CandidatePair {
        g,
        h,
        residual,
        case: CaseKind::NonSplit,
        feasibility: Feasibility::Feasible,
        index,
        torsion: Some(witness.pi3.clone()),
        passes: witness.passes,
        witnesses: vec![witness],
        info,
        multiplicity,
        coincidence: None,
        notes,
    }
}

/// Non-split rows with both sphere dimensions odd.
pub fn nonsplit_case1_rows(max_rank: u32) -> Vec<CandidatePair> {
    let mut out = Vec::new();
    if max_rank < 4 {
        return out;
    }
    for c in large_centralizer_pairs(max_rank - 2) {
        for (k2, phis) in rank2_targets() {
            let g = GroupSpec {
                factors: vec![c.k1, k2],
            };
            let h_exps = exponents_of(&[c.h1, a1()]);
            let Some(residual) = match_case1(&g.exponents(), &h_exps) else {
                continue;
            };
            for (desc, jphi) in phis {
                let m = [[c.psi as i64, c.phi1 as i64], [0, jphi as i64]];
                let matrix = IntMatrix::from_i64(&[&m[0], &m[1]]);
                let witness = make_witness(
                    format!("{}; H0 -> {} via {}", c.label, k2, desc),
                    Source::Computed,
                    matrix,
                    None,
                    nonsplit_exclusion(&c, k2, jphi),
                    residual[0],
                );
                let h = SubgroupHypothesis {
                    factors: vec![c.h1],
                    torus_rank: 0,
                    diagonal: Some(DiagonalFactor {
                        ty: a1(),
                        indices: vec![c.phi1, jphi],
                    }),
                };
                let n = c.k1.rank;
                let info = match (c.k1.family == Family::G2, k2.family) {
                    (false, Family::A) => {
                        info("U(1)", format!("S^{}×S^5", 4 * n - 1), "Sp(n)×SU(3), n>=2")
                    }
                    (false, Family::B) => {
                        info("Sp(1)", format!("S^{}×S^7", 4 * n - 1), "Sp(n)×Sp(2), n>=2")
                    }
                    _ => RowInfo::default(),
                };
                out.push(row(g.clone(), h, residual.clone(), witness, info, 1));
            }
        }
    }
    let g2 = SimpleType::of(Family::G2, 2);
    let b2 = st(Family::B, 2);
    for (k2, m, mult) in [(b2, [[1i64, 3], [1, 1]], 1u32), (g2, [[1, 3], [3, 1]], 2)] {
        let g = GroupSpec {
            factors: vec![g2, k2],
        };
        let h = SubgroupHypothesis::semisimple(vec![a1(), a1()]);
        let Some(residual) = match_case1(&g.exponents(), &h.exponents()) else {
            continue;
        };
        let witness = make_witness(
            format!(
                "H0 of type A1+A1 in SO(4)×{}",
                if k2 == g2 { "SO(4)" } else { "Sp(1)×Sp(1)" }
            ),
            Source::Computed,
            IntMatrix::from_i64(&[&m[0], &m[1]]),
            None,
            None,
            residual[0],
        );
        let mut r = row(g, h, residual, witness, RowInfo::default(), mult);
        if mult == 2 {
            r.notes.push(
                "two conjugacy classes (diagonal and anti-diagonal) with equal index data".into(),
            );
        }
        out.push(r);
    }
    out
}

/// Non-split rows with `n1 = 4`: `K2/H2 = Sp(2)/Sp(1)` and `H0` of type
/// `A1` centralizing both `H1` and `H2`.
pub fn nonsplit_case2_rows(max_rank: u32) -> Vec<CandidatePair> {
    let mut out = Vec::new();
    if max_rank < 4 {
        return out;
    }
    let b2 = st(Family::B, 2);
    for c in large_centralizer_pairs(max_rank - 2) {
        let g = GroupSpec {
            factors: vec![c.k1, b2],
        };
        let h = SubgroupHypothesis {
            factors: vec![c.h1, a1()],
            torus_rank: 0,
            diagonal: Some(DiagonalFactor {
                ty: a1(),
                indices: vec![c.phi1, 1],
            }),
        };
        let Ok(matches) = match_case2(&g.exponents(), &h.exponents()) else {
            continue;
        };
        for m in matches.into_iter().filter(|m| m.n1 == 4) {
            let rows = [[c.psi as i64, 0, c.phi1 as i64], [0, 1, 1]];
            let exclusion = if c.k1.family == Family::G2 {
                excl("2-torsion in cohomology", G2_CASE2_QUOTE)
            } else {
                None
            };
            let witness = make_witness(
                format!("{} and Sp(2)/Sp(1); H0 diagonal", c.label),
                Source::Computed,
                IntMatrix::from_i64(&[&rows[0], &rows[1]]),
                None,
                exclusion,
                m.n1,
            );
            let info = if c.k1.family == Family::G2 {
                RowInfo::default()
            } else {
                info("1", "S(nη_H)".into(), "Sp(n)×Sp(2), n>=2")
            };
            out.push(row(
                g.clone(),
                h.clone(),
                vec![m.n1, m.n2],
                witness,
                info,
                1,
            ));
        }
    }
    out
}

/// All semisimple rows, passing or not.
pub fn classify_semisimple_all(max_rank: u32) -> Vec<CandidatePair> {
    let mut out = split_rows(max_rank);
    out.extend(nonsplit_case1_rows(max_rank));
    out.extend(nonsplit_case2_rows(max_rank));
    out
}

/// Passing semisimple rows.
pub fn classify_semisimple(max_rank: u32) -> Vec<CandidatePair> {
    passing(classify_semisimple_all(max_rank))
}
