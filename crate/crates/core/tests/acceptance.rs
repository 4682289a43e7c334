//! One test per acceptance criterion. Each writes a single `ACCEPTANCE`
//! line straight to stderr so it shows up even when output is captured.

use std::io::Write;

use tradekit::verify::{run_suite, Suite, SuiteOutcome};

const SEED: u64 = 0;

fn report(number: u32, outcome: &SuiteOutcome, extra: Option<(&str, bool)>) -> bool {
    let ok = outcome.all_passed() && extra.is_none_or(|e| e.1);
    let mut line = format!(
        "ACCEPTANCE {number:>2} {}: {} ({}/{})",
        outcome_name(outcome),
        if ok { "PASS" } else { "FAIL" },
        outcome.passed(),
        outcome.total()
    );
    if let Some((what, held)) = extra {
        line.push_str(&format!(" {what}={held}"));
    }
    let mut err = std::io::stderr().lock();
    let _ = writeln!(err, "{line}");
    for r in outcome.checks().filter(|r| !r.pass).take(5) {
        let _ = writeln!(err, "    {}", r.line(false));
    }
    ok
}

fn outcome_name(outcome: &SuiteOutcome) -> &str {
    outcome.checks().next().map_or("empty", |r| r.id.as_str())
}

fn run(suite: Suite, n_max: usize) -> SuiteOutcome {
    run_suite(suite, n_max, SEED, None).expect("suite runs")
}

#[test]
fn acceptance_01_inclusion_rank() {
    assert!(report(1, &run(Suite::InclusionRank, 10), None));
}

#[test]
fn acceptance_02_total_trade_dimension() {
    assert!(report(2, &run(Suite::TotalTradeDim, 9), None));
}

#[test]
fn acceptance_03_kernel_decomposition() {
    assert!(report(3, &run(Suite::KernelDecomposition, 8), None));
}

#[test]
fn acceptance_04_intersection_rank() {
    assert!(report(4, &run(Suite::IntersectionRank, 10), None));
}

#[test]
fn acceptance_05_combination_rank() {
    let outcome = run(Suite::CombinationRank, 8);
    let text = outcome.render(false);
    let notes: Vec<&str> = text.lines().filter(|l| l.starts_with("NOTE")).collect();
    let weighted_ok = notes.iter().all(|l| l.contains("pass=true"));
    let ok = report(5, &outcome, None);
    let _ = writeln!(
        std::io::stderr().lock(),
        "    weighted rule on the {} literal mismatches: {}",
        notes.len(),
        if weighted_ok { "all agree" } else { "disagrees" }
    );
    assert!(ok);
}

#[test]
fn acceptance_06_lambda_closed_form() {
    assert!(report(6, &run(Suite::LambdaClosedForm, 30), None));
}

#[test]
fn acceptance_07_garnir_vanishing() {
    assert!(report(7, &run(Suite::Garnir, 8), None));
}

#[test]
fn acceptance_08_straightening() {
    assert!(report(8, &run(Suite::Straighten, 7), None));
}

#[test]
fn acceptance_09_graver_jurkat() {
    assert!(report(9, &run(Suite::GraverJurkat, 8), None));
}

#[test]
fn acceptance_10_orbit_decomposition() {
    assert!(report(10, &run(Suite::OrbitDecomposition, 7), None));
}

#[test]
fn acceptance_11_standard_basis() {
    let outcome = run(Suite::Basis, 8);
    let text = outcome.render(false);
    let reproduced = text
        .lines()
        .any(|l| l == "AUDIT basis-literal params=t=0,k=1,n=3 candidates=3 rank=2 dim=2 discrepancy=true");
    assert!(report(11, &outcome, Some(("audit-t0k1n3", reproduced))));
}
