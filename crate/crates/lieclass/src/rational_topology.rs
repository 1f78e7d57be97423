//! Rational homotopy ranks of spaces with free or truncated-polynomial
//! rational cohomology, rational cohomology of Eilenberg-MacLane spaces, and
//! the dimension-count collapse criteria.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{LieError, Result};
use crate::lie_data::ExponentSeq;

/// Free graded-commutative algebra: polynomial on even generators, exterior
/// on odd generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FreeAlgebraSpec {
    pub even_gens: Vec<u32>,
    pub odd_gens: Vec<u32>,
}

impl FreeAlgebraSpec {
    pub fn new(even_gens: Vec<u32>, odd_gens: Vec<u32>) -> Result<Self> {
        if let Some(d) = even_gens.iter().find(|&&d| d < 2 || d % 2 == 1) {
            return Err(LieError::Precondition(format!(
                "even generator degree {d} must be even and at least 2"
            )));
        }
        if let Some(d) = odd_gens.iter().find(|&&d| d < 3 || d % 2 == 0) {
            return Err(LieError::Precondition(format!(
                "odd generator degree {d} must be odd and at least 3"
            )));
        }
        Ok(FreeAlgebraSpec {
            even_gens,
            odd_gens,
        })
    }

    /// Parses a comma-separated degree list; parity decides the part.
    pub fn parse(s: &str) -> Result<Self> {
        let degs = parse_degrees(s, 0)?;
        let (even, odd): (Vec<u32>, Vec<u32>) = degs.into_iter().partition(|d| d % 2 == 0);
        Self::new(even, odd)
    }
}

/// `Q[a]/(a^m) ⊗ Λ(odd generators)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TruncatedAlgebraSpec {
    pub a_deg: u32,
    pub trunc_power: u32,
    pub odd_gens: Vec<u32>,
}

impl TruncatedAlgebraSpec {
    pub fn new(a_deg: u32, trunc_power: u32, odd_gens: Vec<u32>) -> Result<Self> {
        if a_deg < 2 || a_deg % 2 == 1 {
            return Err(LieError::Precondition(format!(
                "truncated generator degree {a_deg} must be even and at least 2"
            )));
        }
        if trunc_power < 2 {
            return Err(LieError::Precondition(format!(
                "truncation power {trunc_power} must be at least 2"
            )));
        }
        if let Some(d) = odd_gens.iter().find(|&&d| d < 3 || d % 2 == 0) {
            return Err(LieError::Precondition(format!(
                "odd generator degree {d} must be odd and at least 3"
            )));
        }
        Ok(TruncatedAlgebraSpec {
            a_deg,
            trunc_power,
            odd_gens,
        })
    }

    /// Parses `a^m;d1,d2,...`, for example `4^2;11`. The odd part may be empty.
    pub fn parse(s: &str) -> Result<Self> {
        let (head, tail) = match s.split_once(';') {
            Some((h, t)) => (h, Some(t)),
            None => (s, None),
        };
        let (a, m) = head.split_once('^').ok_or_else(|| LieError::Parse {
            position: 0,
            message: "expected 'a^m' before ';'".into(),
        })?;
        let a_deg: u32 = a.trim().parse().map_err(|_| LieError::Parse {
            position: 0,
            message: format!("bad degree '{}'", a.trim()),
        })?;
        let m_pos = a.len() + 1;
        let trunc_power: u32 = m.trim().parse().map_err(|_| LieError::Parse {
            position: m_pos,
            message: format!("bad truncation power '{}'", m.trim()),
        })?;
        let odd = match tail {
            Some(t) if !t.trim().is_empty() => parse_degrees(t, head.len() + 1)?,
            _ => vec![],
        };
        Self::new(a_deg, trunc_power, odd)
    }
}

fn parse_degrees(s: &str, offset: usize) -> Result<Vec<u32>> {
    if s.trim().is_empty() {
        return Ok(vec![]);
    }
    let mut out = Vec::new();
    let mut pos = offset;
    for part in s.split(',') {
        let t = part.trim();
        out.push(t.parse().map_err(|_| LieError::Parse {
            position: pos,
            message: format!("bad degree '{t}'"),
        })?);
        pos += part.len() + 1;
    }
    Ok(out)
}

/// Ranks of rational homotopy groups by degree; absent degrees have rank 0.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RankTable(pub BTreeMap<u32, u32>);

impl RankTable {
    pub fn rank(&self, k: u32) -> u32 {
        self.0.get(&k).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u32 {
        self.0.values().sum()
    }

    fn bump(&mut self, k: u32) {
        *self.0.entry(k).or_insert(0) += 1;
    }
}

impl fmt::Display for RankTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, r)| format!("{k}:{r}")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Rank of `π_k` equals the number of generators of degree `k`.
pub fn homotopy_ranks_free(s: &FreeAlgebraSpec) -> RankTable {
    let mut t = RankTable::default();
    for &d in s.even_gens.iter().chain(&s.odd_gens) {
        t.bump(d);
    }
    t
}

/// Rank 1 in degree `deg(a)`, one extra rank in degree `m deg(a) - 1`, and the
/// odd generators otherwise.
pub fn homotopy_ranks_truncated(s: &TruncatedAlgebraSpec) -> RankTable {
    let mut t = RankTable::default();
    t.bump(s.a_deg);
    let top = s.trunc_power * s.a_deg - 1;
    assert_ne!(top, s.a_deg, "parity excludes coincidence");
    t.bump(top);
    for &d in &s.odd_gens {
        t.bump(d);
    }
    t
}

/// Shape of a free graded-commutative algebra on equal-degree generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AlgebraKind {
    Trivial,
    Exterior,
    Polynomial,
}

/// Rational cohomology of `K(π, n)` with `rank π = r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmCohomology {
    pub kind: AlgebraKind,
    pub generators: u32,
    pub degree: u32,
}

impl fmt::Display for EmCohomology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            AlgebraKind::Trivial => f.write_str("Q"),
            AlgebraKind::Exterior => {
                write!(
                    f,
                    "exterior on {} generators of degree {}",
                    self.generators, self.degree
                )
            }
            AlgebraKind::Polynomial => {
                write!(
                    f,
                    "polynomial on {} generators of degree {}",
                    self.generators, self.degree
                )
            }
        }
    }
}

pub fn em_rational_cohomology(rank: u32, n: u32) -> Result<EmCohomology> {
    if n == 0 {
        return Err(LieError::Precondition("degree n must be at least 1".into()));
    }
    let kind = if rank == 0 {
        AlgebraKind::Trivial
    } else if n % 2 == 1 {
        AlgebraKind::Exterior
    } else {
        AlgebraKind::Polynomial
    };
    Ok(EmCohomology {
        kind,
        generators: rank,
        degree: n,
    })
}

/// Exterior-algebra collapse: `2^{|G|} = 2^r 2^{|H|}`.
pub fn collapse_budget_case1(g_exps: &ExponentSeq, h_exps: &ExponentSeq, r: usize) -> bool {
    g_exps.len() == h_exps.len() + r
}

/// Truncated case: rank gap one, so `dim E_2 = 2 dim E_∞` and the spectral
/// sequence does not collapse.
pub fn collapse_budget_case2(g_exps: &ExponentSeq, h_exps: &ExponentSeq) -> bool {
    g_exps.len() == h_exps.len() + 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_examples() {
        let t = homotopy_ranks_free(&FreeAlgebraSpec::parse("3,5").unwrap());
        assert_eq!(t.to_string(), "3:1 5:1");
        let t = homotopy_ranks_free(&FreeAlgebraSpec::parse("3,3").unwrap());
        assert_eq!(t.rank(3), 2);
        assert_eq!(
            homotopy_ranks_free(&FreeAlgebraSpec::parse("").unwrap()).total(),
            0
        );
    }

    #[test]
    fn truncated_examples() {
        let t = homotopy_ranks_truncated(&TruncatedAlgebraSpec::parse("4^2;11").unwrap());
        assert_eq!(t.to_string(), "4:1 7:1 11:1");
        let t = homotopy_ranks_truncated(&TruncatedAlgebraSpec::parse("2^3").unwrap());
        assert_eq!(t.to_string(), "2:1 5:1");
        assert!(TruncatedAlgebraSpec::parse("3^2").is_err());
        assert!(matches!(
            TruncatedAlgebraSpec::parse("4^x"),
            Err(LieError::Parse { position: 2, .. })
        ));
    }

    #[test]
    fn em_examples() {
        assert_eq!(
            em_rational_cohomology(1, 3).unwrap().kind,
            AlgebraKind::Exterior
        );
        assert_eq!(
            em_rational_cohomology(0, 5).unwrap().kind,
            AlgebraKind::Trivial
        );
        assert_eq!(
            em_rational_cohomology(2, 4).unwrap().kind,
            AlgebraKind::Polynomial
        );
    }

    #[test]
    fn budget_examples() {
        let a4 = ExponentSeq::new(vec![3, 5, 7, 9]);
        let a2 = ExponentSeq::new(vec![3, 5]);
        let a3 = ExponentSeq::new(vec![3, 5, 7]);
        assert!(collapse_budget_case1(&a4, &a2, 2));
        assert!(!collapse_budget_case1(&a4, &a3, 2));
        assert!(collapse_budget_case2(&a4, &a3));
    }
}
