//! Dynkin indices of representations and homomorphisms, and cokernels of
//! integer matrices via the Smith normal form.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{LieError, Result};
use crate::lie_data::{group_dimension, Family};
use crate::rep_theory::{casimir, dim_complex, field_type, DominantWeight, FieldType};

/// Index of `ρ_{kλ1}: SU(2) -> SU(k+1)`, equal to `binom(k+2, 3)`.
pub fn su2_index(k: u64) -> u64 {
    (k + 2) * (k + 1) * k / 6
}

/// Index of `ρ_λ: H -> SU(dim ρ_λ)`: `dim(λ) (λ, λ+2ρ) / dim H` with long
/// roots of squared length 2. Zero for the trivial weight.
pub fn dynkin_index_big(w: &DominantWeight) -> BigUint {
    let c = casimir(w);
    let total = BigRational::new(BigInt::from(*c.numer()), BigInt::from(*c.denom()))
        * BigRational::from_integer(BigInt::from(dim_complex(w)))
        / BigRational::from_integer(BigInt::from(group_dimension(w.ty)));
    assert!(total.is_integer(), "non-integral index for {} {}", w.ty, w);
    total
        .to_integer()
        .to_biguint()
        .expect("index is non-negative")
}

/// [`dynkin_index_big`] as `u64`; panics if the value exceeds 64 bits.
pub fn index_of_rep(w: &DominantWeight) -> u64 {
    dynkin_index_big(w).to_u64().expect("index fits in 64 bits")
}

/// Field over which a classical group acts on its natural module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TargetField {
    /// `SU(n)` on `C^n`.
    Complex,
    /// `SO(n)` on `R^n`.
    Real,
    /// `Sp(n)` on `H^n`.
    Quaternionic,
}

impl TargetField {
    /// Field of the natural module of a classical family.
    pub fn of_family(f: Family) -> Option<TargetField> {
        match f {
            Family::A => Some(TargetField::Complex),
            Family::B | Family::D => Some(TargetField::Real),
            Family::C => Some(TargetField::Quaternionic),
            _ => None,
        }
    }

    /// Index of the natural inclusion into the special unitary group after
    /// extending scalars to C.
    pub fn unitary_index(self) -> u64 {
        match self {
            TargetField::Complex | TargetField::Quaternionic => 1,
            TargetField::Real => 2,
        }
    }
}

/// Contribution of an irreducible summand `ρ_λ`, repeated `mult` times, to
/// the complexified module of a real, complex or quaternionic target: `R`-type
/// summands in a quaternionic target and `C`/`H`-type summands in a real
/// target enter as `ρ + ρ̄`, doubling the index.
pub fn summand_unitary_index(w: &DominantWeight, mult: u64, target: TargetField) -> u64 {
    let base = index_of_rep(w) * mult;
    let doubled = matches!(
        (target, field_type(w)),
        (TargetField::Real, FieldType::C | FieldType::H)
            | (TargetField::Quaternionic, FieldType::R | FieldType::C)
    );
    if doubled {
        2 * base
    } else {
        base
    }
}

/// Additivity over direct sums.
pub fn index_sum(a: u64, b: u64) -> u64 {
    a + b
}

/// Multiplicativity under composition.
pub fn index_compose(a: u64, b: u64) -> u64 {
    a * b
}

/// Integer matrix with arbitrary-precision entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn new(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        if let Some(first) = rows.first() {
            if rows.iter().any(|r| r.len() != first.len()) {
                return Err(LieError::Precondition("ragged matrix rows".into()));
            }
        }
        Ok(IntMatrix { rows })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        IntMatrix {
            rows: rows
                .iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    /// Parses `a,b;c,d`: rows separated by `;`, entries by `,`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut rows = Vec::new();
        let mut pos = 0usize;
        for row in s.split(';') {
            let mut entries = Vec::new();
            let mut inner = pos;
            for entry in row.split(',') {
                let t = entry.trim();
                let v: BigInt = t.parse().map_err(|_| LieError::Parse {
                    position: inner + entry.find(|c: char| !c.is_whitespace()).unwrap_or(0),
                    message: format!("expected an integer, found '{t}'"),
                })?;
                entries.push(v);
                inner += entry.len() + 1;
            }
            rows.push(entries);
            pos += row.len() + 1;
        }
        if rows.iter().any(|r| r.len() != rows[0].len()) {
            return Err(LieError::Parse {
                position: 0,
                message: "rows have different lengths".into(),
            });
        }
        Ok(IntMatrix { rows })
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        f.write_str(&rows.join(";"))
    }
}

/// Invariant factors `d_1 | d_2 | ...` of the Smith normal form, one per
/// diagonal position (`min(rows, cols)` entries), zeros last.
///
/// Pivots on the entry of minimal absolute value, ties broken by smallest row
/// and then smallest column.
#[allow(clippy::needless_range_loop)]
pub fn smith_invariants(m: &IntMatrix) -> Vec<BigInt> {
    let mut a = m.rows.clone();
    let (r, c) = (m.nrows(), m.ncols());
    let mut diag = Vec::new();
    for t in 0..r.min(c) {
        loop {
            // pivot: minimal nonzero |a_ij| in the remaining block
            let mut best: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    if a[i][j].is_zero() {
                        continue;
                    }
                    match best {
                        None => best = Some((i, j)),
                        Some((bi, bj)) => {
                            if a[i][j].abs() < a[bi][bj].abs() {
                                best = Some((i, j));
                            }
                        }
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break;
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let p = a[t][t].clone();
            let mut clean = true;
            for i in t + 1..r {
                let q = a[i][t].div_floor(&p);
                if !q.is_zero() {
                    for j in t..c {
                        let v = &a[t][j] * &q;
                        a[i][j] -= v;
                    }
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..c {
                let q = a[t][j].div_floor(&p);
                if !q.is_zero() {
                    for i in t..r {
                        let v = &a[i][t] * &q;
                        a[i][j] -= v;
                    }
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility: fold a non-divisible entry into the pivot row
            let mut bad = None;
            'search: for i in t + 1..r {
                for j in t + 1..c {
                    if !(&a[i][j] % &p).is_zero() {
                        bad = Some(i);
                        break 'search;
                    }
                }
            }
            match bad {
                Some(i) => {
                    for j in t..c {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    let (mut nonzero, zeros): (Vec<BigInt>, Vec<BigInt>) =
        diag.into_iter().partition(|d| !d.is_zero());
    nonzero.sort();
    nonzero.extend(zeros);
    nonzero
}

/// Finitely generated abelian group `Z^free ⊕ ⊕ Z/d_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbelianGroup {
    pub free_rank: usize,
    /// Torsion invariant factors greater than 1, increasing.
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup {
            free_rank: 0,
            torsion: vec![],
        }
    }

    pub fn cyclic(n: u64) -> Self {
        match n {
            0 => AbelianGroup {
                free_rank: 1,
                torsion: vec![],
            },
            1 => Self::trivial(),
            _ => AbelianGroup {
                free_rank: 0,
                torsion: vec![BigInt::from(n)],
            },
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order of a finite group; `None` if infinite.
    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.torsion.iter().fold(BigInt::one(), |a, b| a * b))
    }

    /// Parses the display form, e.g. `0`, `Z`, `Z/8`, `Z/2⊕Z/2`, `Z^2⊕Z/3`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" || s == "1" {
            return Ok(Self::trivial());
        }
        let mut g = Self::trivial();
        for part in s.split(['⊕', '+']) {
            let p = part.trim();
            if let Some(d) = p.strip_prefix("Z/") {
                g.torsion.push(d.parse().map_err(|_| LieError::Parse {
                    position: 0,
                    message: format!("bad cyclic factor '{p}'"),
                })?);
            } else if p == "Z" {
                g.free_rank += 1;
            } else if let Some(k) = p.strip_prefix("Z^") {
                g.free_rank += k.parse::<usize>().map_err(|_| LieError::Parse {
                    position: 0,
                    message: format!("bad free factor '{p}'"),
                })?;
            } else {
                return Err(LieError::Parse {
                    position: 0,
                    message: format!("unrecognized group factor '{p}'"),
                });
            }
        }
        g.torsion.retain(|d| !d.is_one());
        g.torsion.sort();
        Ok(g)
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            k => parts.push(format!("Z^{k}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join("⊕"))
        }
    }
}

impl Serialize for AbelianGroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Cokernel of `M: Z^cols -> Z^rows`.
pub fn pi3_cokernel(m: &IntMatrix) -> AbelianGroup {
    let inv = smith_invariants(m);
    let rank = inv.iter().filter(|d| !d.is_zero()).count();
    AbelianGroup {
        free_rank: m.nrows() - rank,
        torsion: inv
            .into_iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .collect(),
    }
}

/// Cokernel of a 1x1 or general index matrix given by small integers.
pub fn cokernel_of(rows: &[&[i64]]) -> AbelianGroup {
    pi3_cokernel(&IntMatrix::from_i64(rows))
}

/// `u64` value of a torsion factor list product, for display helpers.
pub fn torsion_product(g: &AbelianGroup) -> Option<u64> {
    g.order().and_then(|o| o.to_u64())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie_data::SimpleType;

    #[test]
    fn su2_values() {
        assert_eq!(su2_index(1), 1);
        assert_eq!(su2_index(2), 4);
        assert_eq!(su2_index(3), 10);
    }

    #[test]
    fn natural_representations() {
        let vec_of = |f: Family, n: u32| DominantWeight::fundamental(SimpleType::of(f, n), 1, 1);
        assert_eq!(index_of_rep(&vec_of(Family::A, 5)), 1);
        assert_eq!(index_of_rep(&vec_of(Family::C, 3)), 1);
        assert_eq!(index_of_rep(&vec_of(Family::B, 3)), 2);
        assert_eq!(index_of_rep(&vec_of(Family::D, 5)), 2);
        assert_eq!(index_of_rep(&vec_of(Family::G2, 2)), 2);
        let spin7 = DominantWeight::fundamental(SimpleType::of(Family::B, 3), 3, 1);
        assert_eq!(index_of_rep(&spin7), 2);
        let b2_spin = DominantWeight::fundamental(SimpleType::of(Family::B, 2), 2, 1);
        assert_eq!(index_of_rep(&b2_spin), 1);
        for k in 1..=12u32 {
            let w = DominantWeight::fundamental(SimpleType::of(Family::A, 1), 1, k);
            assert_eq!(index_of_rep(&w), su2_index(k as u64));
        }
    }

    #[test]
    fn smith_examples() {
        let inv = |rows: &[&[i64]]| -> Vec<i64> {
            smith_invariants(&IntMatrix::from_i64(rows))
                .iter()
                .map(|d| d.to_i64().unwrap())
                .collect()
        };
        assert_eq!(inv(&[&[3, 1], &[0, 4]]), vec![1, 12]);
        assert_eq!(inv(&[&[1, 0], &[0, 1]]), vec![1, 1]);
        assert_eq!(inv(&[&[2, 0], &[0, 3]]), vec![1, 6]);
        assert_eq!(inv(&[&[2, 4], &[4, 8]]), vec![2, 0]);
        assert_eq!(cokernel_of(&[&[1, 3], &[3, 1]]).to_string(), "Z/8");
        assert_eq!(cokernel_of(&[&[1, 3], &[1, 1]]).to_string(), "Z/2");
        assert_eq!(cokernel_of(&[&[11]]).to_string(), "Z/11");
        assert_eq!(cokernel_of(&[&[0]]).to_string(), "Z");
    }

    #[test]
    fn parse_matrix_grammar() {
        let m = IntMatrix::parse(" 1, 3 ; 3 ,1").unwrap();
        assert_eq!(m.to_string(), "1,3;3,1");
        assert!(matches!(
            IntMatrix::parse("1,x;3,1"),
            Err(LieError::Parse { position: 2, .. })
        ));
        assert!(IntMatrix::parse("1,2;3").is_err());
    }

    #[test]
    fn group_display_roundtrip() {
        for s in ["0", "Z", "Z/8", "Z/2⊕Z/2", "Z^2⊕Z/3"] {
            assert_eq!(AbelianGroup::parse(s).unwrap().to_string(), s);
        }
    }
}
