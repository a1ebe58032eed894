//! Acceptance suite: runs every property suite at the default seed and
//! prints one pass/fail line per criterion. All checks are exact.

use poisekit::suites::run_all;

#[test]
fn acceptance_criteria() {
    let results = run_all(0);
    assert_eq!(results.len(), 10);
    let mut failures = Vec::new();
    for (i, r) in results.iter().enumerate() {
        println!(
            "criterion {:>2} [{}] {} — {}",
            i + 1,
            if r.passed { "PASS" } else { "FAIL" },
            r.name,
            r.detail
        );
        if !r.passed {
            failures.push(format!("criterion {} ({}): {}", i + 1, r.name, r.detail));
        }
    }
    assert!(failures.is_empty(), "failed criteria:\n{}", failures.join("\n"));
}
