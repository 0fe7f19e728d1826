//! Acceptance gate: one test per headline criterion, each backed by a
//! built-in verification suite (the same code behind `kakutani verify`).
//! Every test prints a single PASS/FAIL line; run with
//! `cargo test --test acceptance -- --nocapture` to see them all.

use kakutani::verify::run_suite;

fn criterion(number: usize, suite: &str) {
    let result = run_suite(suite).expect("known suite name");
    let status = if result.passed { "PASS" } else { "FAIL" };
    println!(
        "{status} [criterion {number}] {name}: {detail}",
        name = result.name,
        detail = result.detail
    );
    assert!(result.passed, "[criterion {number}] {}", result.detail);
}

#[test]
fn criterion_01_dyadic_identity() {
    criterion(1, "dyadic");
}

#[test]
fn criterion_02_kakutani_prefix() {
    criterion(2, "kakutani-prefix");
}

#[test]
fn criterion_03_length_bounds() {
    criterion(3, "length-bounds");
}

#[test]
fn criterion_04_discrepancy_convergence() {
    criterion(4, "convergence");
}

#[test]
fn criterion_05_density_bounds() {
    criterion(5, "density-bounds");
}

#[test]
fn criterion_06_oscillating_counterexample() {
    criterion(6, "counterexample");
}

#[test]
fn criterion_07_discrepancy_oracle() {
    criterion(7, "discrepancy-oracle");
}

#[test]
fn criterion_08_sequential_random_reordering() {
    criterion(8, "reordering");
}

#[test]
fn criterion_09_lexicographic_not_uniform() {
    criterion(9, "lexicographic");
}

#[test]
fn criterion_10_van_der_corput() {
    criterion(10, "van-der-corput");
}

#[test]
fn criterion_11_permutation_uniformity() {
    criterion(11, "permutation-uniformity");
}
