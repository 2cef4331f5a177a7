//! Runs every acceptance criterion and prints one line per criterion.

use catale::suite::{run_criterion_or_fail, SuiteConfig, CRITERIA};

#[test]
fn acceptance_criteria() {
    let config = SuiteConfig::default();
    let mut failed = Vec::new();
    for &(id, _) in &CRITERIA {
        let o = run_criterion_or_fail(id, &config);
        println!("{o}");
        if !o.passed {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
