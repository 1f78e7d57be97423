//! Modules of a product `H = H1 × H2` of simple groups on the natural module
//! of a classical group, used as feasibility witnesses.
//!
//! A module is a sum of irreducible `H`-modules over the natural field of the
//! target: real for `SO`, complex for `SU`, quaternionic for `Sp`. Irreducible
//! complex modules of a product are outer tensor products of irreducible
//! modules of the factors.

use std::collections::BTreeSet;
use std::fmt;

use crate::dynkin_index::{index_of_rep, TargetField};
use crate::lie_data::{center, galois_involution, Family, SimpleType};
use crate::rep_theory::{
    central_rotation, conjugate, dim_u64, enumerate_weights, field_type, DominantWeight, FieldType,
};

/// Irreducible complex module of a product, one weight per factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProductIrrep {
    pub weights: Vec<DominantWeight>,
}

impl ProductIrrep {
    pub fn new(weights: Vec<DominantWeight>) -> Self {
        ProductIrrep { weights }
    }

    pub fn is_trivial(&self) -> bool {
        self.weights.iter().all(|w| w.is_zero())
    }

    pub fn dim_c(&self) -> u64 {
        self.weights.iter().map(dim_u64).product()
    }

    pub fn conjugate(&self) -> Self {
        ProductIrrep {
            weights: self.weights.iter().map(conjugate).collect(),
        }
    }

    /// `C` unless self-conjugate; otherwise `H` iff an odd number of factors
    /// are quaternionic.
    pub fn field_type(&self) -> FieldType {
        if self.conjugate() != *self {
            return FieldType::C;
        }
        let h = self
            .weights
            .iter()
            .filter(|w| field_type(w) == FieldType::H)
            .count();
        if h % 2 == 1 {
            FieldType::H
        } else {
            FieldType::R
        }
    }

    /// Dimension over the target field of the smallest target-module
    /// containing this irreducible.
    pub fn target_dim(&self, target: TargetField) -> u64 {
        let d = self.dim_c();
        match (target, self.field_type()) {
            (TargetField::Complex, _) => d,
            (TargetField::Real, FieldType::R) => d,
            (TargetField::Real, _) => 2 * d,
            (TargetField::Quaternionic, FieldType::H) => d / 2,
            (TargetField::Quaternionic, _) => d,
        }
    }

    fn coeff_key(&self) -> Vec<Vec<u32>> {
        self.weights.iter().map(|w| w.coeffs.clone()).collect()
    }

    /// Representative of the conjugation orbit for real and quaternionic
    /// targets, where `ρ` and `ρ̄` give the same module.
    fn normalized(&self, target: TargetField) -> Self {
        if target == TargetField::Complex {
            return self.clone();
        }
        let c = self.conjugate();
        if c.coeff_key() > self.coeff_key() {
            c
        } else {
            self.clone()
        }
    }

    /// Unitary index contribution to factor `i`: `j(λ_i) · Π_{k≠i} dim λ_k`.
    fn factor_index(&self, i: usize) -> u64 {
        let other: u64 = self
            .weights
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, w)| dim_u64(w))
            .product();
        index_of_rep(&self.weights[i]) * other
    }
}

impl fmt::Display for ProductIrrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.weights.len() == 1 {
            write!(f, "{}", self.weights[0])
        } else {
            let parts: Vec<String> = self.weights.iter().map(|w| w.to_string()).collect();
            write!(f, "({})", parts.join(" ⊗ "))
        }
    }
}

/// `mult` copies of an irreducible.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Summand {
    pub irrep: ProductIrrep,
    pub mult: u32,
}

/// A module of `H` of fixed dimension over the target field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Module {
    pub factors: Vec<SimpleType>,
    pub target: TargetField,
    pub dim: u64,
    /// Nontrivial summands in canonical order.
    pub summands: Vec<Summand>,
    pub trivial: u64,
}

impl Module {
    /// Normalized Dynkin index per factor: unitary index of the complexified
    /// module divided by the index of the target's natural representation.
    pub fn indices(&self) -> Vec<u64> {
        let norm = self.target.unitary_index();
        (0..self.factors.len())
            .map(|i| {
                let total: u64 = self
                    .summands
                    .iter()
                    .map(|s| {
                        let base = s.irrep.factor_index(i) * s.mult as u64;
                        let doubled = matches!(
                            (self.target, s.irrep.field_type()),
                            (TargetField::Real, FieldType::C | FieldType::H)
                                | (TargetField::Quaternionic, FieldType::R | FieldType::C)
                        );
                        if doubled {
                            2 * base
                        } else {
                            base
                        }
                    })
                    .sum();
                assert_eq!(total % norm, 0, "index not divisible by the natural index");
                total / norm
            })
            .collect()
    }

    /// Order of the kernel on the center of the simply connected cover of
    /// `H`, for complex and quaternionic targets. `None` for real targets,
    /// where the lift to the spin group is not tracked.
    pub fn kernel_order(&self) -> Option<u32> {
        if self.target == TargetField::Real {
            return None;
        }
        let centers: Vec<Vec<Vec<u32>>> =
            self.factors.iter().map(|t| center(*t).elements()).collect();
        let mut count = 0;
        for element in cartesian(&centers) {
            let trivial = self.summands.iter().all(|s| {
                let mut total = num_rational::Ratio::from_integer(0i64);
                for (w, z) in s.irrep.weights.iter().zip(&element) {
                    total += central_rotation(w, z);
                }
                crate::lie_data::mod_one(total) == num_rational::Ratio::from_integer(0)
            });
            if trivial {
                count += 1;
            }
        }
        Some(count)
    }

    /// True if every factor of `H` acts nontrivially.
    pub fn is_effective_on_factors(&self) -> bool {
        (0..self.factors.len()).all(|i| self.summands.iter().any(|s| !s.irrep.weights[i].is_zero()))
    }
}

fn cartesian(lists: &[Vec<Vec<u32>>]) -> Vec<Vec<Vec<u32>>> {
    let mut out: Vec<Vec<Vec<u32>>> = vec![vec![]];
    for l in lists {
        let mut next = Vec::new();
        for prefix in &out {
            for e in l {
                let mut p = prefix.clone();
                p.push(e.clone());
                next.push(p);
            }
        }
        out = next;
    }
    out
}

impl fmt::Display for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .summands
            .iter()
            .map(|s| {
                if s.mult == 1 {
                    s.irrep.to_string()
                } else {
                    format!("{}·{}", s.mult, s.irrep)
                }
            })
            .collect();
        match self.trivial {
            0 => {}
            1 => parts.push("1".into()),
            k => parts.push(format!("{k}·1")),
        }
        f.write_str(&parts.join(" + "))
    }
}

/// Diagram automorphisms of a simple type as 1-based label permutations.
pub fn diagram_automorphisms(t: SimpleType) -> Vec<Vec<usize>> {
    let n = t.rank_usize();
    let id: Vec<usize> = (1..=n).collect();
    match t.family {
        Family::A if n >= 2 => vec![id, galois_involution(t)],
        Family::E6 => vec![id, galois_involution(t)],
        Family::D if n == 4 => {
            let mut out = Vec::new();
            let outer = [1usize, 3, 4];
            for p in permutations(&outer) {
                let mut perm = id.clone();
                for (k, &src) in outer.iter().enumerate() {
                    perm[src - 1] = p[k];
                }
                out.push(perm);
            }
            out
        }
        Family::D => {
            let mut swap = id.clone();
            swap.swap(n - 2, n - 1);
            vec![id, swap]
        }
        _ => vec![id],
    }
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, head);
            out.push(p);
        }
    }
    out
}

fn apply_perm(w: &DominantWeight, perm: &[usize]) -> DominantWeight {
    let mut coeffs = vec![0; w.coeffs.len()];
    for (i, &c) in w.coeffs.iter().enumerate() {
        coeffs[perm[i] - 1] = c;
    }
    DominantWeight { ty: w.ty, coeffs }
}

type ModuleKey = Vec<(Vec<Vec<u32>>, u32)>;

fn key_of(summands: &[Summand]) -> ModuleKey {
    let mut k: ModuleKey = summands
        .iter()
        .map(|s| (s.irrep.coeff_key(), s.mult))
        .collect();
    k.sort();
    k
}

/// Canonical representative under diagram automorphisms of each factor,
/// permutations of equal factors, and (for complex targets) global
/// conjugation.
fn canonical_summands(
    factors: &[SimpleType],
    target: TargetField,
    summands: &[Summand],
) -> Vec<Summand> {
    let auts: Vec<Vec<Vec<usize>>> = factors.iter().map(|t| diagram_automorphisms(*t)).collect();
    let mut factor_orders: Vec<Vec<usize>> = vec![(0..factors.len()).collect()];
    if factors.len() == 2 && factors[0] == factors[1] {
        factor_orders.push(vec![1, 0]);
    }
    let conj_options: &[bool] = if target == TargetField::Complex {
        &[false, true]
    } else {
        &[false]
    };
    let mut best: Option<(ModuleKey, Vec<Summand>)> = None;
    let aut_choices = cartesian_idx(&auts.iter().map(|a| a.len()).collect::<Vec<_>>());
    for order in &factor_orders {
        for choice in &aut_choices {
            for &conj in conj_options {
                let mapped: Vec<Summand> = summands
                    .iter()
                    .map(|s| {
                        let weights: Vec<DominantWeight> = order
                            .iter()
                            .map(|&src| {
                                let w = apply_perm(&s.irrep.weights[src], &auts[src][choice[src]]);
                                if conj {
                                    conjugate(&w)
                                } else {
                                    w
                                }
                            })
                            .collect();
                        Summand {
                            irrep: ProductIrrep::new(weights).normalized(target),
                            mult: s.mult,
                        }
                    })
                    .collect();
                let mut sorted = mapped;
                sorted.sort_by_key(|s| (s.irrep.coeff_key(), s.mult));
                let key = key_of(&sorted);
                if best.as_ref().is_none_or(|(b, _)| key < *b) {
                    best = Some((key, sorted));
                }
            }
        }
    }
    best.map(|(_, s)| s).unwrap_or_default()
}

fn cartesian_idx(sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![vec![]];
    for &n in sizes {
        let mut next = Vec::new();
        for p in &out {
            for i in 0..n {
                let mut q = p.clone();
                q.push(i);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

/// Nontrivial irreducibles of the product with target dimension at most
/// `max_dim`, one per conjugation orbit for real and quaternionic targets.
pub fn candidate_irreps(
    factors: &[SimpleType],
    target: TargetField,
    max_dim: u64,
) -> Vec<ProductIrrep> {
    let per_factor: Vec<Vec<DominantWeight>> = factors
        .iter()
        .map(|t| {
            enumerate_weights(*t, 2 * max_dim)
                .into_iter()
                .map(|(w, _)| w)
                .collect()
        })
        .collect();
    let mut combos: Vec<Vec<DominantWeight>> = vec![vec![]];
    for list in &per_factor {
        let mut next = Vec::new();
        for prefix in &combos {
            for w in list {
                let mut p = prefix.clone();
                p.push(w.clone());
                next.push(p);
            }
        }
        combos = next;
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for weights in combos {
        let irrep = ProductIrrep::new(weights);
        if irrep.is_trivial() || irrep.dim_c() > 2 * max_dim {
            continue;
        }
        if irrep.target_dim(target) > max_dim {
            continue;
        }
        let irrep = irrep.normalized(target);
        if seen.insert(irrep.coeff_key()) {
            out.push(irrep);
        }
    }
    out.sort_by_key(|i| (i.target_dim(target), i.coeff_key()));
    out
}

/// All modules of `H` of exact dimension `dim` over the target field in
/// which every factor acts nontrivially, up to automorphisms of `H` (and
/// conjugation for complex targets).
pub fn modules_of_dim(factors: &[SimpleType], target: TargetField, dim: u64) -> Vec<Module> {
    let irreps = candidate_irreps(factors, target, dim);
    let mut found: BTreeSet<ModuleKey> = BTreeSet::new();
    let mut out = Vec::new();
    let mut current: Vec<Summand> = Vec::new();
    search(
        &irreps,
        target,
        0,
        dim,
        &mut current,
        &mut |summands, used| {
            let m = Module {
                factors: factors.to_vec(),
                target,
                dim,
                summands: summands.to_vec(),
                trivial: dim - used,
            };
            if summands.is_empty() || !m.is_effective_on_factors() {
                return;
            }
            let canon = canonical_summands(factors, target, summands);
            if found.insert(key_of(&canon)) {
                out.push(Module {
                    summands: canon,
                    ..m
                });
            }
        },
    );
    out.sort_by_key(|m| (m.indices(), key_of(&m.summands)));
    out
}

fn search(
    irreps: &[ProductIrrep],
    target: TargetField,
    start: usize,
    budget: u64,
    current: &mut Vec<Summand>,
    emit: &mut dyn FnMut(&[Summand], u64),
) {
    let used: u64 = current
        .iter()
        .map(|s| s.irrep.target_dim(target) * s.mult as u64)
        .sum();
    emit(current, used);
    for i in start..irreps.len() {
        let d = irreps[i].target_dim(target);
        let mut mult = 1u32;
        while used + d * mult as u64 <= budget {
            current.push(Summand {
                irrep: irreps[i].clone(),
                mult,
            });
            search(irreps, target, i + 1, budget, current, emit);
            current.pop();
            mult += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a1() -> SimpleType {
        SimpleType::of(Family::A, 1)
    }

    #[test]
    fn su2_on_c4() {
        let mods = modules_of_dim(&[a1()], TargetField::Complex, 4);
        let idx: Vec<Vec<u64>> = mods.iter().map(|m| m.indices()).collect();
        assert_eq!(idx, vec![vec![1], vec![2], vec![4], vec![10]]);
    }

    #[test]
    fn su2_on_r7() {
        let mods = modules_of_dim(&[a1()], TargetField::Real, 7);
        let idx: Vec<u64> = mods.iter().map(|m| m.indices()[0]).collect();
        assert_eq!(idx, vec![1, 2, 3, 4, 10, 28]);
    }

    #[test]
    fn sp1_on_h3() {
        let mods = modules_of_dim(&[a1()], TargetField::Quaternionic, 3);
        let idx: Vec<u64> = mods.iter().map(|m| m.indices()[0]).collect();
        assert_eq!(idx, vec![1, 2, 3, 8, 10, 11, 35]);
    }

    #[test]
    fn kernels() {
        let mods = modules_of_dim(&[a1(), a1()], TargetField::Complex, 4);
        let standard = mods.iter().find(|m| m.indices() == vec![1, 1]).unwrap();
        assert_eq!(standard.kernel_order(), Some(1));
        let tensor = mods.iter().find(|m| m.indices() == vec![2, 2]).unwrap();
        assert_eq!(tensor.kernel_order(), Some(2));
    }
}
