//! Root data per simple type: symmetrized Cartan form, positive roots,
//! Weyl vector pairings and the invariant form on fundamental weights.

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::lie_data::{Family, SimpleType};

/// Root data in simple-root coordinates.
#[derive(Debug, Clone)]
pub struct RootData {
    pub ty: SimpleType,
    /// Symmetric integer form on simple roots, `(α_i, α_j)`.
    pub sym: Vec<Vec<i64>>,
    /// Cartan matrix `a_ij = 2 (α_i, α_j) / (α_j, α_j)`.
    pub cartan: Vec<Vec<i64>>,
    /// Positive roots as non-negative coefficient vectors.
    pub positive_roots: Vec<Vec<i64>>,
    /// Invariant form on fundamental weights; see [`RootData::weight_form`].
    form: Vec<Vec<Ratio<i64>>>,
}

fn edges(ty: SimpleType) -> Vec<(usize, usize)> {
    let n = ty.rank_usize();
    let chain = |len: usize| {
        (0..len.saturating_sub(1))
            .map(|i| (i, i + 1))
            .collect::<Vec<_>>()
    };
    match ty.family {
        Family::A | Family::B | Family::C => chain(n),
        Family::D => {
            let mut e = chain(n - 1);
            e.push((n - 3, n - 1));
            e
        }
        Family::E6 => {
            let mut e = chain(5);
            e.push((2, 5));
            e
        }
        Family::E7 => {
            let mut e = chain(6);
            e.push((3, 6));
            e
        }
        Family::E8 => {
            let mut e = chain(7);
            e.push((4, 7));
            e
        }
        Family::F4 => chain(4),
        Family::G2 => chain(2),
    }
}

fn symmetric_form(ty: SimpleType) -> Vec<Vec<i64>> {
    let n = ty.rank_usize();
    let mut s = vec![vec![0i64; n]; n];
    let diag: Vec<i64> = match ty.family {
        Family::B => (0..n).map(|i| if i + 1 == n { 2 } else { 4 }).collect(),
        Family::C => (0..n).map(|i| if i + 1 == n { 4 } else { 2 }).collect(),
        Family::F4 => vec![2, 2, 4, 4],
        Family::G2 => vec![2, 6],
        _ => vec![2; n],
    };
    for (i, d) in diag.iter().enumerate() {
        s[i][i] = *d;
    }
    for (i, j) in edges(ty) {
        let v = if ty.family == Family::G2 {
            -3
        } else if diag[i] == diag[j] {
            -diag[i] / 2
        } else {
            -diag[i].min(diag[j])
        };
        s[i][j] = v;
        s[j][i] = v;
    }
    s
}

impl RootData {
    pub fn new(ty: SimpleType) -> Self {
        let sym = symmetric_form(ty);
        let n = ty.rank_usize();
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| 2 * sym[i][j] / sym[j][j]).collect())
            .collect();
        let positive_roots = positive_roots(&cartan);
        let form = compute_weight_form(&sym, &cartan);
        RootData {
            ty,
            sym,
            cartan,
            positive_roots,
            form,
        }
    }

    pub fn rank(&self) -> usize {
        self.sym.len()
    }

    /// `d_i = (α_i, α_i) / 2`.
    pub fn half_norms(&self) -> Vec<i64> {
        (0..self.rank()).map(|i| self.sym[i][i] / 2).collect()
    }

    /// Squared length of the longest root in the symmetric form.
    pub fn long_norm(&self) -> i64 {
        (0..self.rank()).map(|i| self.sym[i][i]).max().unwrap_or(2)
    }

    /// Squared length `(α, α)` of a root given in simple-root coordinates.
    pub fn norm(&self, root: &[i64]) -> i64 {
        let n = self.rank();
        let mut acc = 0;
        for i in 0..n {
            for j in 0..n {
                acc += root[i] * root[j] * self.sym[i][j];
            }
        }
        acc
    }

    /// Highest root.
    pub fn highest_root(&self) -> Vec<i64> {
        self.positive_roots
            .iter()
            .max_by_key(|r| r.iter().sum::<i64>())
            .cloned()
            .unwrap_or_default()
    }

    /// Invariant form on fundamental weights, normalized so long roots have
    /// squared length 2: `(ω_i, ω_j) = (A^{-1})_ij d_j / (long/2)`.
    pub fn weight_form(&self) -> &[Vec<Ratio<i64>>] {
        &self.form
    }

    /// `(λ, μ)` for weights given in fundamental-weight coordinates.
    pub fn pair(&self, lambda: &[i64], mu: &[i64]) -> Ratio<i64> {
        let f = self.weight_form();
        let mut acc = Ratio::zero();
        for (i, &a) in lambda.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in mu.iter().enumerate() {
                acc += f[i][j] * Ratio::from_integer(a * b);
            }
        }
        acc
    }

    /// Fundamental-weight coordinates of a root given in simple-root coordinates.
    pub fn root_to_weight(&self, root: &[i64]) -> Vec<i64> {
        let n = self.rank();
        (0..n)
            .map(|j| (0..n).map(|i| root[i] * self.cartan[i][j]).sum())
            .collect()
    }
}

fn compute_weight_form(sym: &[Vec<i64>], cartan: &[Vec<i64>]) -> Vec<Vec<Ratio<i64>>> {
    let n = sym.len();
    let inv = invert(cartan);
    let scale = (0..n).map(|i| sym[i][i]).max().unwrap_or(2) / 2;
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| inv[i][j] * Ratio::new(sym[j][j] / 2, scale))
                .collect()
        })
        .collect()
}

/// Inverse of an integer matrix over Q by Gauss-Jordan elimination.
pub fn invert(m: &[Vec<i64>]) -> Vec<Vec<Ratio<i64>>> {
    let n = m.len();
    let mut a: Vec<Vec<Ratio<i64>>> = m
        .iter()
        .map(|row| row.iter().map(|&x| Ratio::from_integer(x)).collect())
        .collect();
    let mut inv: Vec<Vec<Ratio<i64>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Ratio::one() } else { Ratio::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("nonsingular Cartan matrix");
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..n {
                    let (x, y) = (a[col][j], inv[col][j]);
                    a[r][j] -= f * x;
                    inv[r][j] -= f * y;
                }
            }
        }
    }
    inv
}

/// Positive roots by the root-string algorithm: for a positive root `β` and a
/// simple root `α_i`, `β + α_i` is a root iff `p - q > 0` where `p` is the
/// length of the downward string and `q = <β, α_i^∨>`.
fn positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut roots: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut layer = roots.clone();
    while !layer.is_empty() {
        let mut next: Vec<Vec<i64>> = Vec::new();
        for beta in &layer {
            for i in 0..n {
                // <β, α_i^∨> = Σ_j β_j a_ji
                let q: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if down[i] < 0 || !roots.contains(&down) {
                        break;
                    }
                    p += 1;
                }
                if p - q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !next.contains(&up) {
                        next.push(up);
                    }
                }
            }
        }
        for r in &next {
            roots.push(r.clone());
        }
        layer = next;
    }
    roots.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(f: Family, n: u32) -> usize {
        RootData::new(SimpleType::of(f, n)).positive_roots.len()
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(count(Family::A, 4), 10);
        assert_eq!(count(Family::B, 3), 9);
        assert_eq!(count(Family::C, 3), 9);
        assert_eq!(count(Family::D, 4), 12);
        assert_eq!(count(Family::E6, 6), 36);
        assert_eq!(count(Family::E7, 7), 63);
        assert_eq!(count(Family::E8, 8), 120);
        assert_eq!(count(Family::F4, 4), 24);
        assert_eq!(count(Family::G2, 2), 6);
    }

    #[test]
    fn highest_root_is_long() {
        for t in SimpleType::all_canonical(8) {
            let rd = RootData::new(t);
            assert_eq!(rd.norm(&rd.highest_root()), rd.long_norm(), "{t}");
        }
    }
}
