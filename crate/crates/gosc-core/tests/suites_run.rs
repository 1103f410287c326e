//! End-to-end run of every verification suite at desk scale.

use gosc_core::suites::{run_suite, SuiteParams, SUITE_NAMES};

#[test]
fn all_suites_pass_at_desk_scale() {
    let params = SuiteParams::default_desk();
    for name in SUITE_NAMES {
        let report = run_suite(name, &params).unwrap();
        assert!(!report.checks.is_empty());
        for c in &report.checks {
            assert!(
                c.pass,
                "suite {name}: check {} measured {:e} against {:e}",
                c.name, c.measured, c.tolerance
            );
        }
    }
}
