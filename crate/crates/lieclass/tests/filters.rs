//! Filtering is monotone: the integral filter only removes rows.

use lieclass::classifier::{
    classify_case1_all, classify_case2_all, classify_spheres_all, passing, rational, semisimple,
    CandidatePair,
};

fn names(rows: &[CandidatePair]) -> Vec<String> {
    let mut v: Vec<String> = rows
        .iter()
        .map(|r| format!("{} {:?} {:?}", r.quotient_name(), r.residual, r.index))
        .collect();
    v.sort();
    v
}

fn check(all: Vec<CandidatePair>, label: &str) {
    let strict = names(&passing(all.clone()));
    let loose = names(&rational(all));
    for row in &strict {
        assert!(
            loose.binary_search(row).is_ok(),
            "{label}: {row} passes but is not rational"
        );
    }
    assert!(
        loose.len() > strict.len(),
        "{label}: disabling the integral filter did not enlarge output"
    );
}

#[test]
fn disabling_the_integral_filter_strictly_enlarges_output() {
    check(classify_case1_all(8), "case I");
    check(classify_case2_all(8), "case II");
    check(classify_spheres_all(6), "spheres");
    check(semisimple::classify_semisimple_all(6), "semisimple");
}

#[test]
fn passing_rows_are_feasible_and_pass() {
    for row in passing(classify_case1_all(10))
        .iter()
        .chain(&passing(classify_case2_all(10)))
    {
        assert!(row.passes, "{}", row.quotient_name());
        assert!(
            row.witnesses.iter().any(|w| w.passes),
            "{}",
            row.quotient_name()
        );
    }
}
