//! Acceptance suite: one test per criterion, each emitting a single
//! pass/fail line. The checks themselves live in `braidkit::suite` so the
//! CLI `suite` subcommand runs exactly the same code.

use braidkit::suite::{self, SuiteReport};

fn report_line(criterion: usize, r: &SuiteReport) {
    println!(
        "criterion {criterion:02} {}: {} ({})",
        r.name,
        if r.passed { "PASS" } else { "FAIL" },
        r.detail
    );
    assert!(
        r.passed,
        "criterion {criterion} ({}) failed with {} counterexamples: {}",
        r.name, r.counterexamples, r.detail
    );
}

#[test]
fn criterion_01_relation_verification() {
    report_line(1, &suite::relations().expect("suite runs"));
}

#[test]
fn criterion_02_word_problem_cross_validation() {
    report_line(2, &suite::word_problem().expect("suite runs"));
}

#[test]
fn criterion_03_central_identities() {
    report_line(3, &suite::center().expect("suite runs"));
}

#[test]
fn criterion_04_rotation_intersections() {
    report_line(4, &suite::prop31(&[5, 6], 4).expect("suite runs"));
}

#[test]
fn criterion_05_rotation_multicurves() {
    report_line(5, &suite::prop32(5, 4).expect("suite runs"));
}

#[test]
fn criterion_06_semidirect_round_trip() {
    report_line(6, &suite::roundtrip(5, 500).expect("suite runs"));
}

#[test]
fn criterion_07_cabling_classifier() {
    report_line(7, &suite::classifier().expect("suite runs"));
}

#[test]
fn criterion_08_b4_identities() {
    report_line(8, &suite::b4_identities().expect("suite runs"));
}

#[test]
fn criterion_09_divisibility_screen() {
    report_line(9, &suite::screen(50).expect("suite runs"));
}

#[test]
fn criterion_10_symmetric_group_enumeration() {
    report_line(10, &suite::sym().expect("suite runs"));
}

#[test]
fn criterion_11_inequivalence_fingerprints() {
    report_line(11, &suite::fingerprints().expect("suite runs"));
}

#[test]
fn criterion_12_centralizer_catalog() {
    report_line(12, &suite::centralizers().expect("suite runs"));
}
