//! Acceptance suite: runs every verification criterion at full scope and
//! prints one pass/fail line per check.

use acyclic_core::search::Budget;
use acyclic_core::verification::{run_by_id, CriterionReport, Scope};

fn run(id: &str) -> CriterionReport {
    let budget = Budget::default();
    let report = run_by_id(id, &budget, Scope::Full).expect("known criterion id");
    for line in &report.lines {
        println!(
            "[{}] {} {}: expected {}, computed {}",
            report.id,
            if line.pass { "PASS" } else { "FAIL" },
            line.label,
            line.expected,
            line.computed
        );
    }
    report
}

fn assert_criterion(id: &str) {
    let report = run(id);
    let failed: Vec<String> = report
        .lines
        .iter()
        .filter(|l| !l.pass)
        .map(|l| format!("{}: expected {}, computed {}", l.label, l.expected, l.computed))
        .collect();
    assert!(
        failed.is_empty(),
        "criterion {} failed:\n{}",
        report.id,
        failed.join("\n")
    );
}

#[test]
fn criterion_01_paley9_tau() {
    assert_criterion("C1");
}

#[test]
fn criterion_02_exact_bound_window() {
    assert_criterion("C2");
}

#[test]
fn criterion_03_pair_kneser() {
    assert_criterion("C3");
}

#[test]
fn criterion_04_binary_qkneser_path() {
    assert_criterion("C4");
}

#[test]
fn criterion_05_tensor_powers() {
    assert_criterion("C5");
}

#[test]
fn criterion_06_kneser_7_3() {
    assert_criterion("C6");
}

#[test]
fn criterion_07_odd_kneser_forests() {
    assert_criterion("C7");
}

#[test]
fn criterion_08_certificates_without_search() {
    assert_criterion("C8");
}

#[test]
fn criterion_09_paley_25_49() {
    assert_criterion("C9");
}

#[test]
fn criterion_10_two_add_scan() {
    assert_criterion("C10");
}

#[test]
fn criterion_11_oracle_agreement() {
    assert_criterion("C11");
}

#[test]
fn criterion_12_bound_consistency() {
    assert_criterion("C12");
}
