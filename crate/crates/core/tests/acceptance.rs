//! Acceptance criteria, one test each. Every test prints a PASS/FAIL line.
//!
//! Run with `cargo test -p corona-spectra --test acceptance -- --nocapture`
//! to see the lines.

use corona_spectra::acceptance::*;

fn report(c: CriterionOutcome) {
    println!("{c}");
    assert!(c.passed, "{c}");
}

#[test]
fn criterion_1() {
    report(criterion_1_block_matrix());
}

#[test]
fn criterion_2() {
    let (c, reports) = criterion_2_vertex_spectrum(SPECTRUM_TOL);
    assert!(reports.len() >= 12);
    assert!(reports.iter().all(|r| r.order <= 70));
    report(c);
}

#[test]
fn criterion_3() {
    let (c, reports) = criterion_3_edge_spectrum(SPECTRUM_TOL);
    assert!(reports
        .iter()
        .filter_map(|r| r.prediction.as_ref())
        .any(|p| p.parts.repeated.multiplicity >= 2));
    report(c);
}

#[test]
fn criterion_4() {
    report(criterion_4_counts());
}

#[test]
fn criterion_5() {
    let (_, mut reports) = criterion_2_vertex_spectrum(SPECTRUM_TOL);
    reports.extend(criterion_3_edge_spectrum(SPECTRUM_TOL).1);
    report(criterion_5_range(&reports, SPECTRUM_TOL));
}

#[test]
fn criterion_6() {
    report(criterion_6_line_graph(SPECTRUM_TOL));
}

#[test]
fn criterion_7() {
    report(criterion_7_eigensolver());
}

#[test]
fn criterion_8() {
    report(criterion_8_cospectral_coronas(SPECTRUM_TOL));
}

#[test]
fn criterion_9() {
    report(criterion_9_regular_equivalence(SPECTRUM_TOL));
}

#[test]
fn full_battery_summary() {
    let result = run_battery(SPECTRUM_TOL);
    for c in &result.criteria {
        println!("{c}");
    }
    let passed = result.criteria.iter().filter(|c| c.passed).count();
    println!("{passed}/{} criteria passed", result.criteria.len());
    assert!(result.all_passed());
}
