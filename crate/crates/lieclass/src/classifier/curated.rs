//! Curated data that the classification uses but does not compute:
//! subgroups of exceptional groups, exclusions resting on torsion in higher
//! homotopy or mod-p cohomology, centralizer columns and space names.

use crate::lie_data::{Family, SimpleType};
use crate::rep_theory::DominantWeight;

use super::modules::{diagram_automorphisms, Module};
use super::CaseKind;

/// Conventional name of the simply connected compact group of a type.
pub fn group_name(t: SimpleType) -> String {
    let n = t.rank;
    match t.family {
        Family::A => format!("SU({})", n + 1),
        Family::B if n == 2 => "Sp(2)".into(),
        Family::B => format!("Spin({})", 2 * n + 1),
        Family::C => format!("Sp({n})"),
        Family::D => format!("Spin({})", 2 * n),
        _ => t.to_string(),
    }
}

/// A curated exclusion: the reason and its source wording.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Exclusion {
    pub reason: String,
    pub quote: &'static str,
}

fn excl(reason: impl Into<String>, quote: &'static str) -> Option<Exclusion> {
    Some(Exclusion {
        reason: reason.into(),
        quote,
    })
}

/// A curated subgroup of an exceptional group.
#[derive(Debug, Clone)]
pub struct CuratedInclusion {
    pub label: &'static str,
    pub index: Vec<u64>,
    pub quote: &'static str,
    pub exclusion: Option<Exclusion>,
}

fn st(f: Family, n: u32) -> SimpleType {
    SimpleType::of(f, n)
}

/// Subgroups of exceptional groups up to conjugacy, as far as the
/// classification needs them. `None` means no curated data for the pair.
pub fn exceptional_inclusions(g: SimpleType, h: &[SimpleType]) -> Option<Vec<CuratedInclusion>> {
    let inc = |label, index: Vec<u64>, quote, exclusion| CuratedInclusion {
        label,
        index,
        quote,
        exclusion,
    };
    match (g.family, h) {
        (Family::G2, [])
        | (Family::F4, [])
        | (Family::E6, [])
        | (Family::E7, [])
        | (Family::E8, []) => {
            let exclusion = if g.family == Family::G2 {
                excl(
                    "2-torsion: H*(G2; Z/2) = Λ(x3, x5) ⊗ Z/2[x6]/(x6^2)",
                    r"$\G_2$       & 1           &        & $(3,11)$  & 2-torsion",
                )
            } else {
                None
            };
            Some(vec![inc(
                "1",
                vec![],
                r"\item[\fbox{$(\fg_2,0)$}]",
                exclusion,
            )])
        }
        (Family::E6, [f]) if *f == st(Family::F4, 4) => Some(vec![inc(
            "F4",
            vec![1],
            r"there is a unique inclusion $\Ffour\SUB\E_6$; the resulting space is Riemannian symmetric",
            None,
        )]),
        (Family::F4, [h1]) if *h1 == st(Family::G2, 2) => Some(vec![inc(
            "G2 ⊂ Spin(7) ⊂ Spin(9)",
            vec![1],
            r"there is a unique inclusion $\G_2\SUB\Ffour$",
            excl(
                "π7 = Z/3; H*(F4/G2; Z/3) = Z/3[x8]/(x8^3) ⊗ Λ(x7, x15)",
                r"$\Ffour$     & $\G_2$      &        & $(15,23)$ & $\pi_7=\ZZ/3$",
            ),
        )]),
        (Family::F4, [h1]) if *h1 == st(Family::B, 3) => Some(vec![inc(
            "Spin(7) ⊂ Spin(9)",
            vec![1],
            r"There are two conjugacy classes of groups of type $\Spin(7)$ in $\Spin(9)$; however, both groups are conjugate in $\Ffour$",
            excl(
                "Z/3-cohomology: H*(F4/Spin(7); Z/3) = Λ(x15) ⊗ Z/3[x8]/(x8^3)",
                r"\EA_{\ZZ/3}(x_{15})\otimes(\ZZ/3)[x_8]/(x_8^3)",
            ),
        )]),
        (Family::F4, [h1]) if *h1 == st(Family::C, 3) => Some(vec![inc(
            "Sp(3) ⊂ Sp(3)·Sp(1)",
            vec![1],
            r"Then $H=\Sp(3)$. There is one conjugacy class of subgroups of this type.",
            excl(
                "π5 = Z/2",
                r"$\Ffour$        & $\Sp(3)$      & $\Sp(1)$   & $(8,23)$  & $\pi_5=\ZZ/2$",
            ),
        )]),
        (Family::G2, [h1]) if *h1 == st(Family::A, 1) => Some(
            g2_sp1_subgroups()
                .into_iter()
                .map(|s| inc(s.label, vec![s.index], SU2_IN_G2_QUOTE, s.exclusion))
                .collect(),
        ),
        (Family::G2, [h1]) if *h1 == st(Family::A, 2) => {
            Some(vec![inc("SU(3)", vec![1], EVEN_SPHERE_QUOTE, None)])
        }
        _ => None,
    }
}

const SU2_IN_G2_QUOTE: &str = r"The subgroups of type $\fa_1$ in $\G_2$ were determined in";

/// Subgroup of type `A1` in `G2`, described by its action on `R^7`.
#[derive(Debug, Clone)]
pub struct G2Sp1 {
    pub label: &'static str,
    pub index: u64,
    pub exclusion: Option<Exclusion>,
}

/// The four subgroups of type `A1` in `G2` with their indices.
pub fn g2_sp1_subgroups() -> Vec<G2Sp1> {
    vec![
        G2Sp1 {
            label: "SU(2) = λ1 + 3·1",
            index: 1,
            exclusion: excl(
                "V2(R^7): π5 = Z/2",
                r"$\G_2$        & $\SU(2)$    & $\SU(2)$   & $11$ & $V_2(\RR^7)$ & $\pi_5=\ZZ/2$",
            ),
        },
        G2Sp1 {
            label: "λ1 + 2λ1",
            index: 3,
            exclusion: None,
        },
        G2Sp1 {
            label: "2·2λ1 + 1",
            index: 4,
            exclusion: None,
        },
        G2Sp1 {
            label: "6λ1",
            index: 28,
            exclusion: None,
        },
    ]
}

/// The vector representation of `H` viewed as an orthogonal group, if any.
fn orthogonal_vector(h: SimpleType) -> Option<DominantWeight> {
    match (h.family, h.rank) {
        (Family::A, 1) => Some(DominantWeight::fundamental(h, 1, 2)),
        (Family::A, 3) => Some(DominantWeight::fundamental(h, 2, 1)),
        (Family::B, _) | (Family::D, _) => Some(DominantWeight::fundamental(h, 1, 1)),
        _ => None,
    }
}

/// True if the module is the standard inclusion `SO(k) ⊂ SO(N)`.
fn is_standard(module: &Module) -> bool {
    if module.summands.len() != 1 || module.summands[0].mult != 1 {
        return false;
    }
    let irrep = &module.summands[0].irrep;
    match module.factors.as_slice() {
        [h] => orthogonal_vector(*h).is_some_and(|v| {
            diagram_automorphisms(*h).iter().any(|perm| {
                let mut coeffs = vec![0; v.coeffs.len()];
                for (i, &c) in v.coeffs.iter().enumerate() {
                    coeffs[perm[i] - 1] = c;
                }
                coeffs == irrep.weights[0].coeffs
            })
        }),
        [a, b] if a.family == Family::A && a.rank == 1 && *a == *b => {
            irrep.weights.iter().all(|w| w.coeffs == vec![1])
        }
        _ => false,
    }
}

fn single_weight(module: &Module) -> Option<&DominantWeight> {
    match module.summands.as_slice() {
        [s] if s.mult == 1 && s.irrep.weights.len() == 1 => Some(&s.irrep.weights[0]),
        _ => None,
    }
}

/// Curated exclusion of a witness over a classical group.
pub fn classical_exclusion(case: CaseKind, g: SimpleType, module: &Module) -> Option<Exclusion> {
    let n = g.rank;
    let h = module.factors.as_slice();
    let hr: u32 = h.iter().map(|t| t.rank).sum();
    match (case, g.family) {
        (CaseKind::I, Family::B) if hr + 2 == n => {
            if is_standard(module) {
                return excl(
                    format!("V4(R^{}): π{} = Z/2", 2 * n + 1, 2 * n - 3),
                    r"& $V_4(\RR^{2n+1})$ & $\pi_{2n-3}=\ZZ/2$",
                );
            }
            let spin = single_weight(module).filter(|w| {
                w.ty.family == Family::B
                    && w.coeffs == DominantWeight::fundamental(w.ty, w.ty.rank_usize(), 1).coeffs
            });
            match (n, spin) {
                (4, Some(_)) => excl(
                    "π5 ≠ 0",
                    r"$\Spin(9)$   & $\Sp(2)$      &  $\Sp(1)$ & $(11,15)$  &                 & $\pi_5\neq 0$",
                ),
                (5, Some(_)) => excl(
                    "π9 ≠ 0",
                    r"$\Spin(11)$  & $\Spin(7)$    &  $\Sp(1)$  & $(15,19)$  &                 & $\pi_9\neq 0$",
                ),
                (3, _) if module.to_string() == "λ1 + 3·1" => excl(
                    "Spin(7)/SU(2) = V3(R^8): π5 = Z/2",
                    r"$\Spin(7)$   & $\SU(2)$  & $\SU(2)\times\SO(3)$ & $(7,11)$   & $V_3(\RR^8)$    & $\pi_5=\ZZ/2$",
                ),
                _ => None,
            }
        }
        (CaseKind::I, Family::D) if hr + 2 == n => {
            let d4_spin = n == 4
                && single_weight(module)
                    .is_some_and(|w| w.ty == st(Family::B, 2) && w.coeffs == vec![0, 1]);
            if is_standard(module) || d4_spin {
                let note = if d4_spin {
                    " (triality image of the standard inclusion)"
                } else {
                    ""
                };
                return excl(
                    format!("V3(R^{}): π{} = Z/2{note}", 2 * n, 2 * n - 3),
                    r"$\SO(2n)$    & $\SO(2n-3)$ & $\SO(3)$ & $(2n-1,4n-5)$ & $V_3(\RR^{2n})$ & $\pi_{2n-3}=\ZZ/2$",
                );
            }
            None
        }
        (CaseKind::II, Family::B) if n == 3 && h.len() == 2 => excl(
            "π2 = Z/2",
            r"$\SO(7)$        & $\SO(3)\times\SO(3)$ & 1 &             & $(4,11)$ & $\pi_2=\ZZ/2$",
        ),
        (CaseKind::II, Family::B) if hr + 1 == n && is_standard(module) => excl(
            format!("V3(R^{}) has torsion", 2 * n + 1),
            r"spaces are either not $(n_1-1)$-connected, or have torsion.",
        ),
        (CaseKind::II, Family::D) if n == 4 && h.len() == 2 => excl(
            "π2 = Z/2",
            r"$\SO(8)$         & $\SO(5)\times\SO(3)$ & 1  & $(4,11)$ & $\widetilde G_3(\RR^8)$ & $\pi_2=\ZZ/2$",
        ),
        (CaseKind::II, Family::C) if n == 3 && h.len() == 2 => {
            let double = module.summands.iter().any(|s| s.mult >= 2);
            if double {
                excl(
                    "factor without large centralizer",
                    r"The only representations of $\Sp(1)$ on $\HH^3$ with large centralizers in $\Sp(3)$ are $\Sp(1)$, with connected centralizer $\Sp(2)$, and $^\HH\rho_{3\lambda_1}$, with connected centralizer $\Sp(1)$",
                )
            } else {
                None
            }
        }
        (CaseKind::Sphere, Family::B) if hr + 1 == n && is_standard(module) => excl(
            format!("V2(R^{}): π{} = Z/2", 2 * n + 1, 2 * n - 1),
            r"$\SO(2n+1)$  & $\SO(2n-1)$   & $\SO(2)$  & $4n-1$ & $V_2(\RR^{2n+1})$ & $\pi_{2n-1}=\ZZ/2$",
        ),
        _ => None,
    }
}

/// Curated columns of a table row.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RowInfo {
    pub centralizer: Option<String>,
    pub space: Option<String>,
    pub series: Option<String>,
}

fn info(cen: &str, space: &str, series: &str) -> RowInfo {
    let opt = |s: &str| (!s.is_empty()).then(|| s.to_string());
    RowInfo {
        centralizer: opt(cen),
        space: opt(space),
        series: opt(series),
    }
}

fn is(t: &SimpleType, f: Family, n: u32) -> bool {
    canonical_eq(*t, f, n)
}

fn canonical_eq(t: SimpleType, f: Family, n: u32) -> bool {
    match crate::lie_data::canonicalize(f, n) {
        Ok(c) => c.ty == t,
        Err(_) => false,
    }
}

/// Centralizer, space and series columns for a row of the simple-group
/// tables.
pub fn row_info(
    case: CaseKind,
    g: SimpleType,
    h: &[SimpleType],
    residual: &[u32],
    index: &[u64],
) -> RowInfo {
    let n = g.rank;
    match case {
        CaseKind::I => match (g.family, h) {
            (Family::A, [hh]) if n >= 3 && is(hh, Family::A, n - 2) && index == [1] => {
                info("U(2)", &format!("V2(C^{})", n + 1), "SU(n+1)/SU(n-1), n>=3")
            }
            (Family::C, [hh]) if n >= 3 && is(hh, Family::C, n - 2) && index == [1] => {
                info("Sp(2)", &format!("V2(H^{n})"), "Sp(n)/Sp(n-2), n>=3")
            }
            (Family::E6, [_]) => info("1", "", ""),
            (Family::D, [hh]) if n == 5 && is(hh, Family::B, 3) => info("SO(2)", "", ""),
            (Family::B, [hh]) if n == 4 && is(hh, Family::G2, 2) => info("SO(2)", "V2(O^2)", ""),
            (Family::D, [hh]) if n == 4 && is(hh, Family::G2, 2) => info("1", "S^7×S^7", ""),
            (Family::A, [hh]) if n == 5 && is(hh, Family::C, 3) => info("1", "", ""),
            (Family::A, [hh]) if n == 4 && is(hh, Family::B, 2) => info("U(1)", "", ""),
            (Family::A, []) if n == 2 => info("SU(3)", "V2(C^3)", ""),
            (Family::B, []) if n == 2 => info("Sp(2)", "V2(H^2)", ""),
            _ => RowInfo::default(),
        },
        CaseKind::II => match (g.family, h) {
            (Family::D, [hh]) if is(hh, Family::D, n - 1) => info(
                "SO(2)",
                &format!("V2(R^{})", 2 * n),
                "SO(2n)/SO(2n-2), n>=3",
            ),
            (Family::A, [a, b]) if n == 3 && is(a, Family::A, 1) && is(b, Family::A, 1) => {
                info("SO(2)", "V2(R^6)", "SO(2n)/SO(2n-2), n>=3")
            }
            (Family::D, [_]) if n == 5 => info("U(1)", "", ""),
            (Family::B, [_]) if n == 4 => info("U(1)", "", ""),
            (Family::B, [_]) if n == 3 => info("U(1)", "V2(R^8)", ""),
            (Family::C, [_, _]) if n == 3 => info("Sp(1)", "", ""),
            (Family::A, [_, _]) if n == 4 => info("U(1)", "G~3(C^5)", ""),
            _ => RowInfo::default(),
        },
        CaseKind::Sphere => {
            let m = residual.first().copied().unwrap_or(0);
            let sphere = format!("S^{m}");
            if m % 2 == 0 {
                let series = if g.family == Family::G2 {
                    ""
                } else {
                    "SO(2n+1)/SO(2n), n>=1"
                };
                return info("1", &sphere, series);
            }
            match (g.family, h) {
                (Family::A, []) => info("SU(2)", &sphere, ""),
                (Family::A, [hh]) if is(hh, Family::A, n - 1) => {
                    info("U(1)", &sphere, "SU(n+1)/SU(n), n>=2")
                }
                (Family::A, [hh]) if n == 3 && is(hh, Family::B, 2) => {
                    info("1", &sphere, "SO(2n)/SO(2n-1), n>=3")
                }
                (Family::B, [hh]) if n == 2 && is(hh, Family::A, 1) && index == [1] => {
                    info("Sp(1)", &sphere, "Sp(n)/Sp(n-1), n>=2")
                }
                (Family::C, [hh]) if is(hh, Family::C, n - 1) => {
                    info("Sp(1)", &sphere, "Sp(n)/Sp(n-1), n>=2")
                }
                (Family::D, [hh]) if is(hh, Family::B, n - 1) => {
                    info("1", &sphere, "SO(2n)/SO(2n-1), n>=3")
                }
                (Family::B, [hh]) if n == 4 && is(hh, Family::B, 3) => info("1", &sphere, ""),
                (Family::B, [hh]) if n == 3 && is(hh, Family::G2, 2) => info("1", &sphere, ""),
                _ => RowInfo::default(),
            }
        }
        CaseKind::Stiefel => {
            let space = if g.family == Family::G2 {
                "V2(R^7)".to_string()
            } else {
                format!("V2(R^{})", 2 * n + 1)
            };
            let (cen, series) = if g.family == Family::G2 {
                ("U(1)", "")
            } else {
                ("SO(2)", "SO(2n+1)/SO(2n-1), n>=2")
            };
            info(cen, &space, series)
        }
        _ => RowInfo::default(),
    }
}

/// Pairs `(K, H)` with `K/H` a sphere of even dimension: `SO(2n+1)/SO(2n)`
/// and `G2/SU(3)`. The subgroup is given by its simple factors and the rank
/// of its central torus.
pub fn even_spheres(max_rank: u32) -> Vec<(SimpleType, Vec<SimpleType>, u32, u32)> {
    let mut out = Vec::new();
    for n in 1..=max_rank {
        let (k, h, torus) = match n {
            1 => (st(Family::A, 1), vec![], 1),
            2 => (
                st(Family::B, 2),
                vec![st(Family::A, 1), st(Family::A, 1)],
                0,
            ),
            3 => (st(Family::B, 3), vec![st(Family::A, 3)], 0),
            _ => (st(Family::B, n), vec![st(Family::D, n)], 0),
        };
        out.push((k, h, torus, 2 * n));
    }
    if max_rank >= 2 {
        out.push((st(Family::G2, 2), vec![st(Family::A, 2)], 0, 6));
    }
    out
}

/// Source wording for the even-sphere list.
pub const EVEN_SPHERE_QUOTE: &str = r"If $m$ is even, then $K/H$ has Euler characteristic 2, and a well-known result of Borel-De Siebenthal";
