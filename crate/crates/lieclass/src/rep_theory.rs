//! Dominant weights: Weyl dimension, field type, real/quaternionic
//! dimensions, kernels in the center, and bounded enumeration.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{LieError, Result};
use crate::lie_data::{
    beta_fundamental, center, center_character, galois_involution, mod_one, Beta, CenterSpec,
    Family, Rotation, SimpleType,
};
use crate::roots::RootData;

/// Shared root data per type, computed once.
pub fn root_data(t: SimpleType) -> Arc<RootData> {
    static CACHE: OnceLock<Mutex<HashMap<SimpleType, Arc<RootData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(rd) = cache.lock().unwrap().get(&t) {
        return rd.clone();
    }
    let rd = Arc::new(RootData::new(t));
    cache.lock().unwrap().insert(t, rd.clone());
    rd
}

/// Non-negative coefficients over the fundamental weights of a simple type.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DominantWeight {
    pub ty: SimpleType,
    pub coeffs: Vec<u32>,
}

impl DominantWeight {
    pub fn new(ty: SimpleType, coeffs: Vec<u32>) -> Result<Self> {
        if coeffs.len() != ty.rank_usize() {
            return Err(LieError::WeightLength {
                got: coeffs.len(),
                expected: ty.rank_usize(),
            });
        }
        Ok(DominantWeight { ty, coeffs })
    }

    pub fn zero(ty: SimpleType) -> Self {
        DominantWeight {
            ty,
            coeffs: vec![0; ty.rank_usize()],
        }
    }

    /// `k λ_i` (1-based `i`).
    pub fn fundamental(ty: SimpleType, i: usize, k: u32) -> Self {
        let mut w = Self::zero(ty);
        w.coeffs[i - 1] = k;
        w
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Parses a comma-separated coefficient list such as `1,0,2`.
    pub fn parse(ty: SimpleType, s: &str) -> Result<Self> {
        let mut coeffs = Vec::new();
        let mut pos = 0;
        for part in s.split(',') {
            let trimmed = part.trim();
            let c: u32 = trimmed.parse().map_err(|_| LieError::Parse {
                position: pos,
                message: format!("expected a non-negative integer, found '{trimmed}'"),
            })?;
            coeffs.push(c);
            pos += part.len() + 1;
        }
        Self::new(ty, coeffs)
    }

    fn as_i64(&self) -> Vec<i64> {
        self.coeffs.iter().map(|&c| c as i64).collect()
    }
}

impl fmt::Display for DominantWeight {
    /// Writes weights as `2λ1+λ3`; the zero weight is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| {
                if c == 1 {
                    format!("λ{}", i + 1)
                } else {
                    format!("{c}λ{}", i + 1)
                }
            })
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join("+"))
        }
    }
}

impl Serialize for DominantWeight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

/// Complex dimension by the Weyl dimension formula
/// `Π_{α>0} (λ+ρ, α) / (ρ, α)` with exact integer arithmetic.
pub fn dim_complex(w: &DominantWeight) -> BigUint {
    let rd = root_data(w.ty);
    let d = rd.half_norms();
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for root in &rd.positive_roots {
        let mut top: u64 = 0;
        let mut bottom: u64 = 0;
        for i in 0..root.len() {
            let c = (root[i] * d[i]) as u64;
            top += c * (w.coeffs[i] as u64 + 1);
            bottom += c;
        }
        num *= top;
        den *= bottom;
    }
    assert!(
        (&num % &den).is_zero(),
        "non-integral Weyl quotient for {} {}",
        w.ty,
        w
    );
    num / den
}

/// `dim_complex` as `u64`; panics if the value exceeds 64 bits.
pub fn dim_u64(w: &DominantWeight) -> u64 {
    dim_complex(w).to_u64().expect("dimension fits in 64 bits")
}

/// Galois conjugate weight.
pub fn conjugate(w: &DominantWeight) -> DominantWeight {
    let perm = galois_involution(w.ty);
    let mut coeffs = vec![0; w.coeffs.len()];
    for (i, &c) in w.coeffs.iter().enumerate() {
        coeffs[perm[i] - 1] = c;
    }
    DominantWeight { ty: w.ty, coeffs }
}

/// Real, complex or quaternionic type of an irreducible representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FieldType {
    R,
    C,
    H,
}

impl fmt::Display for FieldType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FieldType::R => "R",
            FieldType::C => "C",
            FieldType::H => "H",
        })
    }
}

/// C if the weight is not Galois-fixed; otherwise H iff the coefficients on
/// quaternionic fundamental weights sum to an odd number.
pub fn field_type(w: &DominantWeight) -> FieldType {
    if conjugate(w) != *w {
        return FieldType::C;
    }
    let perm = galois_involution(w.ty);
    let mut parity = 0u32;
    for (i, &c) in w.coeffs.iter().enumerate() {
        if perm[i] == i + 1 && beta_fundamental(w.ty, i + 1) == Ok(Beta::H) {
            parity += c;
        }
    }
    if parity % 2 == 1 {
        FieldType::H
    } else {
        FieldType::R
    }
}

/// Real dimension of `^R ρ` and quaternionic dimension of `^H ρ`.
///
/// `dim_h` is `dim_c / 2` for quaternionic type and `dim_c` otherwise.
pub fn dims_over(w: &DominantWeight) -> (BigUint, BigUint) {
    let dc = dim_complex(w);
    match field_type(w) {
        FieldType::R => (dc.clone(), dc),
        FieldType::C => (&dc * 2u32, dc),
        FieldType::H => (&dc * 2u32, dc / 2u32),
    }
}

/// A subgroup of the center, listed by its elements as exponent vectors over
/// the center generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CenterSubgroup {
    pub center: String,
    pub order: u32,
    pub elements: Vec<Vec<u32>>,
}

/// Rotation number of `ρ_λ(z)` for a center element given by exponents.
pub fn central_rotation(w: &DominantWeight, element: &[u32]) -> Rotation {
    let mut acc = Ratio::zero();
    for (i, &c) in w.coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let ch = center_character(w.ty, i + 1).expect("index in range");
        for (k, &a) in element.iter().enumerate() {
            acc += ch.rotations[k] * Ratio::from_integer(c as i64 * a as i64);
        }
    }
    mod_one(acc)
}

/// Kernel of `ρ_λ` inside the center of the simply connected group.
pub fn rep_kernel(w: &DominantWeight) -> CenterSubgroup {
    let c: CenterSpec = center(w.ty);
    let elements: Vec<Vec<u32>> = c
        .elements()
        .into_iter()
        .filter(|e| central_rotation(w, e).is_zero())
        .collect();
    CenterSubgroup {
        center: c.to_string(),
        order: elements.len() as u32,
        elements,
    }
}

/// A dominant weight with its dimensions, field type and kernel.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IrrepDescriptor {
    pub weight: DominantWeight,
    pub label: String,
    pub dim_c: u64,
    pub field_type: FieldType,
    pub dim_r: u64,
    pub dim_h: u64,
    pub kernel_order: u32,
}

impl IrrepDescriptor {
    pub fn of(w: &DominantWeight) -> Self {
        let dim_c = dim_u64(w);
        let ft = field_type(w);
        let (dim_r, dim_h) = match ft {
            FieldType::R => (dim_c, dim_c),
            FieldType::C => (2 * dim_c, dim_c),
            FieldType::H => (2 * dim_c, dim_c / 2),
        };
        IrrepDescriptor {
            weight: w.clone(),
            label: w.to_string(),
            dim_c,
            field_type: ft,
            dim_r,
            dim_h,
            kernel_order: rep_kernel(w).order,
        }
    }
}

/// All dominant weights with `dim_c <= max_dim`, sorted by dimension and then
/// lexicographically by coefficients.
///
/// Breadth-first search over coefficientwise increments; a weight whose
/// dimension exceeds the bound is not expanded, since every weight above it
/// has larger dimension.
pub fn enumerate_weights(t: SimpleType, max_dim: u64) -> Vec<(DominantWeight, u64)> {
    let zero = DominantWeight::zero(t);
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut out = Vec::new();
    if max_dim == 0 {
        return out;
    }
    seen.insert(zero.coeffs.clone());
    let mut frontier = vec![zero];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in frontier {
            let d = dim_complex(&w);
            if d > BigUint::from(max_dim) {
                continue;
            }
            out.push((w.clone(), d.to_u64().unwrap()));
            for i in 0..w.coeffs.len() {
                let mut up = w.coeffs.clone();
                up[i] += 1;
                if seen.insert(up.clone()) {
                    next.push(DominantWeight { ty: t, coeffs: up });
                }
            }
        }
        frontier = next;
    }
    out.sort_by(|a, b| (a.1, &a.0.coeffs).cmp(&(b.1, &b.0.coeffs)));
    out
}

/// Enriched version of [`enumerate_weights`].
pub fn enumerate_irreps(t: SimpleType, max_dim: u64) -> Vec<IrrepDescriptor> {
    enumerate_weights(t, max_dim)
        .iter()
        .map(|(w, _)| IrrepDescriptor::of(w))
        .collect()
}

/// One representative per Galois orbit with `dim_r <= max_real_dim`; of a
/// conjugate pair the lexicographically larger coefficient vector is kept.
pub fn real_irreps_up_to(t: SimpleType, max_real_dim: u64) -> Vec<IrrepDescriptor> {
    enumerate_irreps(t, max_real_dim)
        .into_iter()
        .filter(|d| d.dim_r <= max_real_dim)
        .filter(|d| d.weight.coeffs >= conjugate(&d.weight).coeffs)
        .collect()
}

/// Weight of the adjoint representation.
pub fn adjoint_weight(t: SimpleType) -> DominantWeight {
    let n = t.rank_usize();
    let mut w = DominantWeight::zero(t);
    match t.family {
        Family::A if n == 1 => w.coeffs[0] = 2,
        Family::A => {
            w.coeffs[0] = 1;
            w.coeffs[n - 1] = 1;
        }
        Family::B if n == 2 => w.coeffs[1] = 2,
        Family::B | Family::D => w.coeffs[1] = 1,
        Family::C => w.coeffs[0] = 2,
        Family::E6 | Family::E7 => w.coeffs[5] = 1,
        Family::E8 => w.coeffs[0] = 1,
        Family::F4 => w.coeffs[3] = 1,
        Family::G2 => w.coeffs[1] = 1,
    }
    w
}

/// Second-Casimir pairing `(λ, λ + 2ρ)` with long roots of squared length 2.
pub fn casimir(w: &DominantWeight) -> Ratio<i64> {
    let rd = root_data(w.ty);
    let lam = w.as_i64();
    let shifted: Vec<i64> = lam.iter().map(|c| c + 2).collect();
    rd.pair(&lam, &shifted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie_data::{fundamental_dim, group_dimension};

    fn w(f: Family, n: u32, c: &[u32]) -> DominantWeight {
        DominantWeight::new(SimpleType::of(f, n), c.to_vec()).unwrap()
    }

    #[test]
    fn fundamental_dims_match_closed_forms() {
        for t in SimpleType::all_canonical(10) {
            for i in 1..=t.rank_usize() {
                let d = dim_complex(&DominantWeight::fundamental(t, i, 1));
                assert_eq!(d, BigUint::from(fundamental_dim(t, i).unwrap()), "{t} λ{i}");
            }
        }
    }

    #[test]
    fn adjoint_dims_and_kernels() {
        for t in SimpleType::all_canonical(10) {
            let a = adjoint_weight(t);
            assert_eq!(dim_u64(&a), group_dimension(t), "{t}");
            assert_eq!(rep_kernel(&a).order, center(t).order(), "{t}");
        }
    }

    #[test]
    fn sample_values() {
        assert_eq!(dim_u64(&w(Family::A, 2, &[1, 1])), 8);
        assert_eq!(field_type(&w(Family::A, 1, &[2])), FieldType::R);
        assert_eq!(field_type(&w(Family::D, 5, &[0, 0, 0, 1, 0])), FieldType::C);
        assert_eq!(field_type(&w(Family::C, 3, &[0, 0, 1])), FieldType::H);
        assert_eq!(rep_kernel(&w(Family::A, 3, &[0, 1, 0])).order, 2);
        assert_eq!(rep_kernel(&w(Family::C, 3, &[1, 0, 0])).order, 1);
        assert_eq!(rep_kernel(&w(Family::C, 3, &[2, 0, 0])).order, 2);
    }

    #[test]
    fn enumeration_examples() {
        let labels = |v: Vec<IrrepDescriptor>| -> Vec<(String, u64)> {
            v.into_iter().map(|d| (d.label, d.dim_c)).collect()
        };
        let b3 = labels(enumerate_irreps(SimpleType::of(Family::B, 3), 28));
        assert_eq!(
            b3,
            vec![
                ("0".into(), 1),
                ("λ1".into(), 7),
                ("λ3".into(), 8),
                ("λ2".into(), 21),
                ("2λ1".into(), 27)
            ]
        );
        let e6 = labels(enumerate_irreps(SimpleType::of(Family::E6, 6), 78));
        assert_eq!(
            e6,
            vec![
                ("0".into(), 1),
                ("λ5".into(), 27),
                ("λ1".into(), 27),
                ("λ6".into(), 78)
            ]
        );
        let a2 = labels(real_irreps_up_to(SimpleType::of(Family::A, 2), 12));
        assert_eq!(
            a2,
            vec![
                ("0".into(), 1),
                ("λ1".into(), 3),
                ("2λ1".into(), 6),
                ("λ1+λ2".into(), 8)
            ]
        );
    }
}
