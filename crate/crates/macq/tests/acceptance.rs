//! Acceptance suite: every release criterion as one test printing a
//! pass/fail line. All comparisons are exact; the sweeps are shared across
//! criteria through lazily initialized reports.

use std::sync::OnceLock;

use macq::graphs::{gparking_enumerate, tutte_at, Multigraph};
use macq::macdonald::{cumulant_combinatorial, CumulantProblem};
use macq::poly::MPoly;
use macq::shapes::Partition;
use macq::verify::{
    cumulant_problems, suite_axioms, suite_colored, suite_graphs, suite_hooks, suite_main,
    CheckReport, GraphSweepConfig,
};

fn main_reports() -> &'static [CheckReport] {
    static REPORTS: OnceLock<Vec<CheckReport>> = OnceLock::new();
    REPORTS.get_or_init(|| suite_main(6, Some(7)))
}

fn graph_reports() -> &'static [CheckReport] {
    static REPORTS: OnceLock<Vec<CheckReport>> = OnceLock::new();
    REPORTS.get_or_init(|| suite_graphs(&GraphSweepConfig::default()))
}

fn hook_reports() -> &'static [CheckReport] {
    static REPORTS: OnceLock<Vec<CheckReport>> = OnceLock::new();
    REPORTS.get_or_init(|| suite_hooks(6))
}

fn axiom_reports() -> &'static [CheckReport] {
    static REPORTS: OnceLock<Vec<CheckReport>> = OnceLock::new();
    REPORTS.get_or_init(|| suite_axioms(6))
}

fn colored_reports() -> &'static [CheckReport] {
    static REPORTS: OnceLock<Vec<CheckReport>> = OnceLock::new();
    REPORTS.get_or_init(|| suite_colored(5))
}

fn find<'a>(reports: &'a [CheckReport], name: &str) -> &'a CheckReport {
    reports
        .iter()
        .find(|r| r.name.contains(name))
        .unwrap_or_else(|| panic!("missing check '{name}'"))
}

fn gate(criterion: &str, report: &CheckReport, min_cases: usize) {
    let status = if report.passed() { "PASS" } else { "FAIL" };
    println!(
        "acceptance {criterion}: {status} ({} cases{})",
        report.cases,
        if report.passed() {
            String::new()
        } else {
            format!(
                ", {} failures; first: {}",
                report.failures.len(),
                report.failures.first().map(String::as_str).unwrap_or("")
            )
        }
    );
    assert!(
        report.passed(),
        "criterion '{criterion}' failed: {:?}",
        report.failures.iter().take(3).collect::<Vec<_>>()
    );
    assert!(
        report.cases >= min_cases,
        "criterion '{criterion}' swept only {} cases (expected at least {min_cases})",
        report.cases
    );
}

#[test]
fn criterion_01_main_theorem() {
    gate(
        "1 (main theorem: combinatorial = definitional on r<=3 n<=6 and r=2 n<=7)",
        find(main_reports(), "combinatorial route equals definitional"),
        100,
    );
}

#[test]
fn criterion_02_divisibility_and_integrality() {
    gate(
        "2 (division by (q-1)^(r-1) exact, coefficients in Z[q,t])",
        find(main_reports(), "division exact"),
        100,
    );
}

#[test]
fn criterion_03_four_route_inversion_polynomial() {
    gate(
        "3 (four routes to I_G agree on the graph sweep)",
        find(graph_reports(), "four routes"),
        1000,
    );
}

#[test]
fn criterion_04_merino_lopez() {
    gate(
        "4 (parking and sandpile generating functions equal T(1,q))",
        find(graph_reports(), "parking and sandpile"),
        1000,
    );
    gate(
        "4 (triangle spot values)",
        find(graph_reports(), "triangle spot values"),
        3,
    );
    // the stated spot values, asserted directly
    let k3 = Multigraph::complete(3);
    let expect = &MPoly::constant(2) + &MPoly::q();
    assert_eq!(tutte_at(&k3, &MPoly::one(), &MPoly::q()), expect);
    let parking: Vec<(usize, usize)> = gparking_enumerate(&k3)
        .unwrap()
        .iter()
        .map(|f| (f.value(2).unwrap(), f.value(3).unwrap()))
        .collect();
    assert_eq!(parking, vec![(0, 0), (0, 1), (1, 0)]);
}

#[test]
fn criterion_05_filling_statistics() {
    gate(
        "5 (inv, maj additivity, inv decomposition on all fillings <= 4)",
        find(main_reports(), "filling statistics"),
        100,
    );
}

#[test]
fn criterion_06_haglund_axioms() {
    gate(
        "6 (triangularity axioms for all shapes up to size 6)",
        find(axiom_reports(), "triangularity"),
        30,
    );
    gate(
        "6 (degree-two Schur spot values)",
        find(axiom_reports(), "degree-two"),
        2,
    );
}

#[test]
fn criterion_07_hook_kostka() {
    gate(
        "7 (hook coefficients equal Schur coefficients)",
        find(hook_reports(), "equal Schur"),
        90,
    );
    gate(
        "7 (hook coefficients nonnegative)",
        find(hook_reports(), "nonnegative"),
        90,
    );
    gate(
        "7 (corner relation between hook sums)",
        find(hook_reports(), "corner relation"),
        90,
    );
    gate(
        "7 (1-u evaluation matches hook sums)",
        find(hook_reports(), "1-u evaluation"),
        90,
    );
    // spot value: the triple cumulant of single boxes
    let problem = CumulantProblem::new(vec![
        Partition::new(vec![1]),
        Partition::new(vec![1]),
        Partition::new(vec![1]),
    ])
    .unwrap();
    let schur = cumulant_combinatorial(&problem).to_schur();
    assert_eq!(schur.coeff(&Partition::new(vec![2, 1])), MPoly::one());
    assert_eq!(
        schur.coeff(&Partition::new(vec![1, 1, 1])),
        &MPoly::constant(2) + &MPoly::q()
    );
}

#[test]
fn criterion_08_quasisymmetric_routes() {
    gate(
        "8 (standardized quasisymmetric route collapses to the cumulant, n<=5)",
        find(main_reports(), "quasisymmetric route"),
        40,
    );
    gate(
        "8 (Gessel expansion reproduces Schur functions, |lambda|<=6)",
        find(axiom_reports(), "Gessel"),
        29,
    );
}

#[test]
fn criterion_09_colored_suite() {
    gate(
        "9 (signed-filling formula equals the t-plethysm, n<=4)",
        find(colored_reports(), "signed-filling"),
        20,
    );
    gate(
        "9 (column Schur coefficient counts increasing trees, |mu|<=5)",
        find(colored_reports(), "increasing trees"),
        18,
    );
    gate(
        "9 (fully colored transition matrix nonsingular, n<=5)",
        find(colored_reports(), "determinant"),
        5,
    );
}

#[test]
fn criterion_10_q1_degeneration() {
    gate(
        "10 (cumulant numerator vanishes at q=1 to order r-1)",
        find(main_reports(), "vanishes at q=1"),
        100,
    );
}

/// Non-blocking monitor: Schur positivity of the cumulants on the sweep is
/// a conjecture, reported but never asserted.
#[test]
fn monitor_schur_positivity() {
    let problems = cumulant_problems(3, 6, None);
    let mut positive = 0usize;
    let mut negative = Vec::new();
    for pr in &problems {
        let schur = cumulant_combinatorial(pr).to_schur();
        if schur.coeffs().all(|(_, c)| c.is_nonnegative()) {
            positive += 1;
        } else {
            let parts: Vec<String> = pr.partitions().iter().map(|p| p.to_string()).collect();
            negative.push(format!("({})", parts.join(";")));
        }
    }
    println!(
        "acceptance monitor (Schur positivity, conjectural): {}/{} tuples positive{}",
        positive,
        problems.len(),
        if negative.is_empty() {
            String::new()
        } else {
            format!("; negative: {:?}", negative)
        }
    );
}
