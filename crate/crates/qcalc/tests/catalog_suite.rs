//! Full catalog sweep: every record must pass both of its check strategies
//! over sampled in-domain draws across the q lattice.

use qcalc::catalog::{run_suite, SuiteConfig, Verdict};

fn draws() -> usize {
    std::env::var("QCALC_SUITE_DRAWS").ok().and_then(|s| s.parse().ok()).unwrap_or(5)
}

#[test]
fn all_records_pass_over_q_lattice() {
    let cfg = SuiteConfig { draws: draws(), seed: 20260809, ..Default::default() };
    let report = run_suite(&cfg);
    assert!(!report.entries.is_empty());
    let mut failures = Vec::new();
    for e in &report.entries {
        println!(
            "{:38} {:>9} draws={} worst={:.3e} {}",
            e.id,
            e.verdict.as_str(),
            e.draws,
            e.worst_residual,
            e.note.as_deref().unwrap_or("")
        );
        if e.verdict == Verdict::Fail {
            failures.push(e.id);
        }
    }
    assert!(failures.is_empty(), "failing records: {failures:?}");
}
