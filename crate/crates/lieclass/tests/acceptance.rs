//! Acceptance criteria 1-9. Prints one `criterion N: PASS|FAIL` line each
//! and exits nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use serde_json::Value;

use lieclass::classifier::fixtures::{load_fixture, pi3_row_matrix, reproduce_tables};
use lieclass::classifier::{classify_case1, classify_case2, coincidences};
use lieclass::dynkin_index::{pi3_cokernel, smith_invariants, su2_index, IntMatrix};
use lieclass::geometry::{dims, munzner_admissible, stolz_admissible, MultiplicityPair, Verdict};
use lieclass::lie_data::{canonicalize, exponents, Family, SimpleType};
use lieclass::rational_topology::{
    homotopy_ranks_free, homotopy_ranks_truncated, FreeAlgebraSpec, TruncatedAlgebraSpec,
};
use lieclass::rep_theory::{
    adjoint_weight, dim_complex, dims_over, enumerate_irreps, DominantWeight,
};

/// Outcome of one criterion: failures are collected as messages.
struct Check {
    failures: Vec<String>,
}

impl Check {
    fn new() -> Self {
        Check { failures: vec![] }
    }

    fn expect(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(msg());
        }
    }
}

fn run(n: u32, limit: Duration, body: impl FnOnce(&mut Check)) -> bool {
    let mut c = Check::new();
    let start = Instant::now();
    body(&mut c);
    let elapsed = start.elapsed();
    c.expect(elapsed <= limit, || {
        format!("took {elapsed:?}, limit {limit:?}")
    });
    let ok = c.failures.is_empty();
    println!(
        "criterion {n}: {} ({:.3} s, limit {} s)",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        limit.as_secs()
    );
    for f in c.failures.iter().take(20) {
        println!("    {f}");
    }
    ok
}

/// Closed-form exponent degrees.
fn exponent_oracle(t: SimpleType) -> Vec<u32> {
    let n = t.rank;
    let mut v: Vec<u32> = match t.family {
        Family::A => (1..=n).map(|i| 2 * i + 1).collect(),
        Family::B | Family::C => (1..=n).map(|i| 4 * i - 1).collect(),
        Family::D => (1..n).map(|i| 4 * i - 1).chain([2 * n - 1]).collect(),
        Family::E6 => vec![3, 9, 11, 15, 17, 23],
        Family::E7 => vec![3, 11, 15, 19, 23, 27, 35],
        Family::E8 => vec![3, 15, 23, 27, 35, 39, 47, 59],
        Family::F4 => vec![3, 11, 15, 23],
        Family::G2 => vec![3, 11],
    };
    v.sort_unstable();
    v
}

/// Closed-form group dimension.
fn dimension_oracle(t: SimpleType) -> u64 {
    let n = t.rank as u64;
    match t.family {
        Family::A => n * (n + 2),
        Family::B | Family::C => n * (2 * n + 1),
        Family::D => n * (2 * n - 1),
        Family::E6 => 78,
        Family::E7 => 133,
        Family::E8 => 248,
        Family::F4 => 52,
        Family::G2 => 14,
    }
}

fn criterion1(c: &mut Check) {
    for t in SimpleType::all_canonical(12) {
        let got = exponents(t).degrees().to_vec();
        let want = exponent_oracle(t);
        c.expect(got == want, || format!("{t}: {got:?} != {want:?}"));
    }
    for (f, r) in [
        (Family::C, 2),
        (Family::D, 3),
        (Family::B, 1),
        (Family::C, 1),
    ] {
        let canon = canonicalize(f, r).expect("aliased type");
        let got = exponents(canon.ty).degrees().to_vec();
        let want = if f == Family::D {
            exponent_oracle(SimpleType::of(Family::D, 3))
        } else {
            (1..=r).map(|i| 4 * i - 1).collect()
        };
        c.expect(got == want, || format!("{f}{r}: {got:?} != {want:?}"));
    }
    let e8 = exponents(SimpleType::of(Family::E8, 8));
    c.expect(e8.degrees() == [3, 15, 23, 27, 35, 39, 47, 59], || {
        format!("E8: {:?}", e8.degrees())
    });
    let d4 = exponents(SimpleType::of(Family::D, 4));
    c.expect(d4.degrees() == [3, 7, 7, 11], || {
        format!("D4: {:?}", d4.degrees())
    });
}

fn big(v: &Value) -> BigUint {
    v.to_string().parse().expect("non-negative integer")
}

fn rep_rows() -> Vec<(DominantWeight, serde_json::Map<String, Value>)> {
    load_fixture("rep-tables")
        .expect("rep-tables fixture")
        .rows
        .into_iter()
        .map(|row| {
            let ty: SimpleType = row["type"]
                .as_str()
                .expect("type")
                .parse()
                .expect("valid type");
            let coeffs: Vec<u32> = row["weight"]
                .as_array()
                .expect("weight")
                .iter()
                .map(|x| x.as_u64().expect("coefficient") as u32)
                .collect();
            (DominantWeight::new(ty, coeffs).expect("weight length"), row)
        })
        .collect()
}

fn criterion2(c: &mut Check) {
    let mut checked = 0;
    for (w, row) in rep_rows() {
        if let Some(d) = row.get("dim") {
            checked += 1;
            let got = dim_complex(&w);
            c.expect(got == big(d), || format!("{} {w}: dim {got} != {d}", w.ty));
        }
    }
    c.expect(checked >= 60, || {
        format!("only {checked} dimension entries")
    });
}

fn criterion3(c: &mut Check) {
    let mut checked = 0;
    let mut seen_c3 = false;
    let mut seen_d5 = false;
    for (w, row) in rep_rows() {
        let (dim_r, dim_h) = dims_over(&w);
        if let Some(d) = row.get("dim_r") {
            checked += 1;
            c.expect(dim_r == big(d), || {
                format!("{} {w}: dim_r {dim_r} != {d}", w.ty)
            });
        }
        if let Some(d) = row.get("dim_h") {
            checked += 1;
            c.expect(dim_h == big(d), || {
                format!("{} {w}: dim_h {dim_h} != {d}", w.ty)
            });
        }
        let ty = w.ty.to_string();
        seen_c3 |= ty == "C3" && w.coeffs == [0, 0, 1] && row.get("dim_h").is_some_and(|d| d == 7);
        seen_d5 |=
            ty == "D5" && w.coeffs == [0, 0, 0, 1, 0] && row.get("dim_r").is_some_and(|d| d == 32);
    }
    c.expect(checked >= 60, || {
        format!("only {checked} field-type entries")
    });
    c.expect(seen_c3, || "Sp(3) λ3 dim_h 7 row missing".into());
    c.expect(seen_d5, || "Spin(10) λ4 dim_r 32 row missing".into());
    let c3 = DominantWeight::fundamental(SimpleType::of(Family::C, 3), 3, 1);
    c.expect(dims_over(&c3).1 == BigUint::from(7u32), || {
        "Sp(3) λ3 dim_h".into()
    });
    let d5 = DominantWeight::fundamental(SimpleType::of(Family::D, 5), 4, 1);
    c.expect(dims_over(&d5).0 == BigUint::from(32u32), || {
        "Spin(10) λ4 dim_r".into()
    });
}

/// Closed-form Weyl dimensions of the rank 1 and 2 types, with `a` on the
/// first node and `b` on the second in some labeling; only the multiset of
/// values is compared.
fn weyl_closed_form(f: Family, v: &[u64]) -> u64 {
    if let [a] = *v {
        return a + 1;
    }
    let (a, b) = (v[0], v[1]);
    match f {
        Family::A => (a + 1) * (b + 1) * (a + b + 2) / 2,
        Family::B => (a + 1) * (b + 1) * (a + b + 2) * (2 * a + b + 3) / 6,
        Family::G2 => {
            (a + 1)
                * (b + 1)
                * (a + b + 2)
                * (a + 2 * b + 3)
                * (a + 3 * b + 4)
                * (2 * a + 3 * b + 5)
                / 120
        }
        _ => unreachable!(),
    }
}

fn criterion4(c: &mut Check) {
    let max_dim = 50u64;
    for t in [
        SimpleType::of(Family::A, 1),
        SimpleType::of(Family::A, 2),
        SimpleType::of(Family::B, 2),
        SimpleType::of(Family::G2, 2),
    ] {
        let listed = enumerate_irreps(t, max_dim);
        let mut listed_weights: Vec<Vec<u32>> =
            listed.iter().map(|d| d.weight.coeffs.clone()).collect();
        listed_weights.sort();
        let mut listed_dims: Vec<u64> = listed.iter().map(|d| d.dim_c).collect();
        listed_dims.sort_unstable();

        // Every coefficient vector with entries up to max_dim: dimension is
        // at least coefficient + 1, so nothing beyond can qualify.
        let mut brute_weights = Vec::new();
        let mut brute_dims = Vec::new();
        let bound = max_dim as u32;
        let vectors: Vec<Vec<u32>> = if t.rank == 1 {
            (0..=bound).map(|a| vec![a]).collect()
        } else {
            (0..=bound)
                .flat_map(|a| (0..=bound).map(move |b| vec![a, b]))
                .collect()
        };
        for v in vectors {
            let w = DominantWeight::new(t, v.clone()).expect("weight");
            if dim_complex(&w) <= BigUint::from(max_dim) {
                brute_weights.push(v.clone());
            }
            let d = weyl_closed_form(t.family, &v.iter().map(|&x| x as u64).collect::<Vec<_>>());
            if d <= max_dim {
                brute_dims.push(d);
            }
        }
        brute_weights.sort();
        brute_dims.sort_unstable();
        c.expect(listed_weights == brute_weights, || {
            format!("{t}: enumerated {listed_weights:?} != brute force {brute_weights:?}")
        });
        c.expect(listed_dims == brute_dims, || {
            format!("{t}: dimensions {listed_dims:?} != closed form {brute_dims:?}")
        });
    }
}

/// Invariant factors of a 2x2 matrix: gcd of entries, then |det| / gcd.
fn smith_2x2(m: &IntMatrix) -> Vec<BigInt> {
    let e = &m.rows;
    let g = e[0][0].gcd(&e[0][1]).gcd(&e[1][0]).gcd(&e[1][1]);
    let det = (&e[0][0] * &e[1][1] - &e[0][1] * &e[1][0]).abs();
    if g.is_zero() {
        return vec![BigInt::zero(), BigInt::zero()];
    }
    vec![g.clone(), det / g]
}

fn determinant(m: &IntMatrix) -> Option<BigInt> {
    let e = &m.rows;
    match (m.nrows(), m.ncols()) {
        (1, 1) => Some(e[0][0].clone()),
        (2, 2) => Some(&e[0][0] * &e[1][1] - &e[0][1] * &e[1][0]),
        _ => None,
    }
}

fn criterion5(c: &mut Check) {
    for k in 0..=20u64 {
        let want = (k + 2) * (k + 1) * k / 6;
        c.expect(su2_index(k) == want, || {
            format!("su2_index({k}) = {} != {want}", su2_index(k))
        });
    }

    let eq = load_fixture("matrix-equivalences").expect("equivalences fixture");
    c.expect(eq.rows.len() == 18, || {
        format!("{} matrix pairs, expected 18", eq.rows.len())
    });
    for row in &eq.rows {
        let a = IntMatrix::parse(row["matrix"].as_str().expect("matrix")).expect("matrix grammar");
        let b = IntMatrix::parse(row["normal_form"].as_str().expect("normal form"))
            .expect("matrix grammar");
        let (sa, sb) = (smith_invariants(&a), smith_invariants(&b));
        c.expect(sa == sb, || format!("{a} ~ {b}: {sa:?} != {sb:?}"));
        c.expect(sa == smith_2x2(&a), || {
            format!("{a}: {sa:?} != gcd/det oracle {:?}", smith_2x2(&a))
        });
        let diag: Vec<BigInt> = (0..2).map(|i| b.rows[i][i].abs()).collect();
        c.expect(sb == diag, || {
            format!("{b}: invariants {sb:?} != diagonal {diag:?}")
        });
    }

    let pi3 = load_fixture("pi3-annotations").expect("pi3 fixture");
    c.expect(!pi3.rows.is_empty(), || "no π3 annotations".into());
    for row in &pi3.rows {
        let m = pi3_row_matrix(row).expect("row index data");
        let got = pi3_cokernel(&m);
        let want = row["pi3"].as_str().expect("pi3");
        c.expect(got.to_string() == want, || {
            format!("{} [{m}]: {got} != {want}", row["g"])
        });
        if let Some(det) = determinant(&m).filter(|d| !d.is_zero()) {
            let order = got.order().unwrap_or_default();
            c.expect(order == det.abs(), || {
                format!("{} [{m}]: order {order} != |det| {det}", row["g"])
            });
        }
    }
}

fn criterion6(c: &mut Check) {
    for n in 1..=10u32 {
        let spec = TruncatedAlgebraSpec::new(2 * n, 2, vec![]).expect("valid spec");
        let got = homotopy_ranks_truncated(&spec).0;
        let want = BTreeMap::from([(2 * n, 1), (4 * n - 1, 1)]);
        c.expect(got == want, || format!("n = {n}: {got:?} != {want:?}"));
    }
    let evens = prop::collection::vec((1u32..=15).prop_map(|d| 2 * d), 0..6);
    let odds = prop::collection::vec((1u32..=15).prop_map(|d| 2 * d + 1), 0..6);
    let mut runner = TestRunner::new_with_rng(
        Config {
            cases: 100,
            failure_persistence: None,
            ..Config::default()
        },
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    );
    let cases = std::cell::Cell::new(0u32);
    let result = runner.run(&(evens, odds), |(e, o)| {
        cases.set(cases.get() + 1);
        let spec = FreeAlgebraSpec::new(e.clone(), o.clone()).expect("valid spec");
        let total = homotopy_ranks_free(&spec).total() as usize;
        prop_assert_eq!(total, e.len() + o.len());
        Ok(())
    });
    c.expect(result.is_ok(), || format!("free totals: {result:?}"));
    c.expect(cases.get() >= 100, || {
        format!("only {} random specs", cases.get())
    });
}

fn criterion7(c: &mut Check) {
    for id in ["case1-simple", "case2-simple", "spheres"] {
        match reproduce_tables(id) {
            Ok(d) => {
                c.expect(d.compared > 0, || format!("{id}: empty fixture"));
                c.expect(d.is_empty(), || {
                    format!(
                        "{id}: missing {:?} extra {:?} changed {:?}",
                        d.missing, d.extra, d.changed
                    )
                })
            }
            Err(e) => c.expect(false, || format!("{id}: {e}")),
        }
    }
    let flags1 = coincidences(&classify_case1(8));
    c.expect(
        flags1.iter().any(|f| f == "SU(5)/Sp(2) = SU(6)/Sp(3)"),
        || format!("case I flags {flags1:?}"),
    );
    let flags2 = coincidences(&classify_case2(8));
    c.expect(
        flags2.iter().any(|f| f == "Spin(9)/SU(4) = Spin(10)/SU(5)"),
        || format!("case II flags {flags2:?}"),
    );
}

fn mp(a: u64, b: u64) -> MultiplicityPair {
    MultiplicityPair::new(a, b).expect("positive multiplicities")
}

fn criterion8(c: &mut Check) {
    for (a, b, want) in [
        (5, 6, Verdict::Fail),
        (3, 6, Verdict::Fail),
        (4, 5, Verdict::Pass),
    ] {
        let got = stolz_admissible(mp(a, b));
        c.expect(got == want, || {
            format!("Stolz ({a},{b}): {got:?} != {want:?}")
        });
    }
    let mut realized: Vec<(u64, u64)> = vec![(4, 5), (6, 9), (8, 7), (7, 8)];
    for k in 1..=32 {
        realized.push((1, k));
        if 2 * k >= 4 {
            realized.push((2, 2 * k - 3));
        }
    }
    for n in 2..=16 {
        realized.push((4, 4 * n - 5));
        realized.push((3, 4 * n - 4));
    }
    for (a, b) in realized {
        let v = munzner_admissible(mp(a, b));
        c.expect(v.verdict == Verdict::Pass, || {
            format!("Münzner ({a},{b}): {v:?}")
        });
    }
    for m1 in 1..=64u64 {
        for m2 in 1..=64u64 {
            let d = dims(mp(m1, m2));
            let s = m1 + m2;
            c.expect(
                d.dim_p == 2 * m1 + m2 && d.dim_l == m1 + 2 * m2 && d.dim_f == 2 * s,
                || format!("({m1},{m2}): {d:?}"),
            );
            c.expect(
                d.dim_p + d.dim_l == 3 * s && d.dim_p + d.dim_l == d.dim_f + s,
                || format!("({m1},{m2}): identity fails for {d:?}"),
            );
        }
    }
}

fn criterion9(c: &mut Check) {
    for t in SimpleType::all_canonical(10) {
        let total = exponents(t).total();
        let adjoint = dim_complex(&adjoint_weight(t))
            .to_u64()
            .expect("small dimension");
        c.expect(total == adjoint, || {
            format!("{t}: exponent sum {total} != adjoint {adjoint}")
        });
        c.expect(total == dimension_oracle(t), || {
            format!("{t}: {total} != {}", dimension_oracle(t))
        });
    }
}

fn main() -> ExitCode {
    let s = Duration::from_secs;
    let results = [
        run(1, s(1), criterion1),
        run(2, s(1), criterion2),
        run(3, s(1), criterion3),
        run(4, s(10), criterion4),
        run(5, s(1), criterion5),
        run(6, s(10), criterion6),
        run(7, s(30), criterion7),
        run(8, s(1), criterion8),
        run(9, s(10), criterion9),
    ];
    if results.iter().all(|&ok| ok) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
