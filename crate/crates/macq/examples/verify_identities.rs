//! Run the identity sweeps programmatically and print the summary table,
//! the same checks the `macq verify` subcommand exposes.

use macq::verify::{
    suite_axioms, suite_colored, suite_graphs, suite_hooks, suite_main, GraphSweepConfig,
};

fn main() {
    let mut reports = Vec::new();
    reports.extend(suite_axioms(4));
    reports.extend(suite_main(4, Some(5)));
    reports.extend(suite_hooks(4));
    reports.extend(suite_colored(4));
    let cfg = GraphSweepConfig {
        exhaustive_vertices: 3,
        exhaustive_edges: 5,
        random_count: 100,
        ..GraphSweepConfig::default()
    };
    reports.extend(suite_graphs(&cfg));

    for r in &reports {
        println!(
            "{}  {} ({} cases)",
            if r.passed() { "PASS" } else { "FAIL" },
            r.name,
            r.cases
        );
    }
    assert!(reports.iter().all(|r| r.passed()));
}
