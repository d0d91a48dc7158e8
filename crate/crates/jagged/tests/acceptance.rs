//! Acceptance suite: one test per criterion. Each prints a single pass/fail
//! line (visible with `cargo test --test acceptance -- --nocapture`).

use jagged::suite::{self, CriterionOutcome};

fn assert_criterion(outcome: CriterionOutcome) {
    println!(
        "[{}] criterion {:2} {:30} {}",
        if outcome.passed { "PASS" } else { "FAIL" },
        outcome.id,
        outcome.name,
        outcome.detail
    );
    assert!(
        outcome.passed,
        "criterion {} ({}) failed: {}",
        outcome.id, outcome.name, outcome.detail
    );
}

#[test]
fn criterion_01_golden_enumeration() {
    assert_criterion(suite::golden_enumeration());
}

#[test]
fn criterion_02_length_polynomial_three_ways() {
    assert_criterion(suite::length_polynomial_three_ways());
}

#[test]
fn criterion_03_j_cross_validation() {
    assert_criterion(suite::j_cross_validation());
}

#[test]
fn criterion_04_congruences() {
    assert_criterion(suite::congruences());
}

#[test]
fn criterion_05_slice_identities() {
    assert_criterion(suite::slice_identities());
}

#[test]
fn criterion_06_identity_suite() {
    assert_criterion(suite::identity_suite());
}

#[test]
fn criterion_07_length_graded_equivalence() {
    assert_criterion(suite::length_graded_equivalence());
}

#[test]
fn criterion_08_multisum_equivalences() {
    assert_criterion(suite::multisum_equivalences());
}

#[test]
fn criterion_09_qdiff_solver() {
    assert_criterion(suite::qdiff_solver());
}

#[test]
fn criterion_10_at_most_lemma() {
    assert_criterion(suite::at_most_lemma());
}

#[test]
fn criterion_11_estimate_quality() {
    assert_criterion(suite::estimate_quality());
}
