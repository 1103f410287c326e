//! Acceptance gate: every release criterion at its stated tolerance, one
//! pass/fail line per criterion. Natural units, truncation N = 40, M = 80
//! quadrature nodes per axis.

use std::sync::OnceLock;

use gosc_core::lambda_rep::QuadratureRule;
use gosc_core::nim::stationary_spectrum;
use gosc_core::oscillator::PhysParams;
use gosc_core::report::{Check, Report};
use gosc_core::suites::{run_suite, SuiteParams, SUITE_NAMES};

fn params() -> SuiteParams {
    SuiteParams::default_desk()
}

fn suite(name: &str) -> &'static Report {
    static REPORTS: [OnceLock<Report>; 6] = [const { OnceLock::new() }; 6];
    let idx = SUITE_NAMES.iter().position(|n| *n == name).expect("known suite");
    REPORTS[idx].get_or_init(|| run_suite(name, &params()).expect("suite runs"))
}

/// Collect checks by name prefix, print the criterion line, and assert.
fn criterion(id: usize, label: &str, selected: &[(&str, &str)]) {
    let mut found: Vec<(&'static Check, &str)> = Vec::new();
    for (suite_name, prefix) in selected {
        let report = suite(suite_name);
        let check = report
            .checks
            .iter()
            .find(|c| c.name.starts_with(prefix))
            .unwrap_or_else(|| panic!("criterion {id}: no check named {prefix} in {suite_name}"));
        found.push((check, suite_name));
    }
    let pass = found.iter().all(|(c, _)| c.pass);
    let worst = found
        .iter()
        .map(|(c, _)| c.measured)
        .fold(0.0f64, f64::max);
    println!(
        "criterion {id:02} {label}: {} (worst measured {worst:.3e})",
        if pass { "PASS" } else { "FAIL" }
    );
    for (c, s) in &found {
        assert!(
            c.pass,
            "criterion {id}: [{s}] {} measured {:e} vs tolerance {:e}",
            c.name, c.measured, c.tolerance
        );
    }
}

#[test]
fn criterion_01_spectrum_exact() {
    let p = PhysParams::natural();
    let rule = QuadratureRule::new(params().quad_points).unwrap();
    let states = stationary_spectrum(32, &p, params().trunc, &rule).unwrap();
    let mut exact = true;
    for st in &states {
        exact &= st.energy / (p.hbar * p.omega) == st.n as f64 + 0.5;
    }
    println!(
        "criterion 01 spectrum-levels: {} (E_n/(hbar omega) = n + 1/2 exactly, n <= 32)",
        if exact { "PASS" } else { "FAIL" }
    );
    assert!(exact);
}

#[test]
fn criterion_02_algebra_suite() {
    criterion(
        2,
        "algebra-and-field-commutators",
        &[
            ("lambda", "commutators_window"),
            ("lambda", "commutators_exact_dyadic_orbit"),
            ("group", "left_fields_structure_constants"),
            ("group", "right_fields_structure_constants"),
            ("group", "left_right_fields_commute"),
        ],
    );
}

#[test]
fn criterion_03_casimir_constancy() {
    criterion(
        3,
        "casimir-constancy",
        &[("lambda", "casimir_scalar_window"), ("lambda", "k2_analogue_exact")],
    );
}

#[test]
fn criterion_04_group_law() {
    criterion(
        4,
        "group-law",
        &[("group", "associativity_1000_triples"), ("group", "rep_lift_homomorphism")],
    );
}

#[test]
fn criterion_05_reproducing_kernel() {
    criterion(
        5,
        "reproducing-kernel",
        &[
            ("lambda", "reproducing_property_n_le_10"),
            ("lambda", "kernel_series_vs_closed_20_terms"),
        ],
    );
}

#[test]
fn criterion_06_dkernel_structure() {
    criterion(
        6,
        "kernel-structure",
        &[
            ("kernels", "cocycle_identity_100_random"),
            ("kernels", "dkernel_convolution"),
            ("kernels", "intertwining_system_residual"),
        ],
    );
}

#[test]
fn criterion_07_hstate_validity() {
    criterion(
        7,
        "solution-kernel-validity",
        &[("nim", "kernel_schrodinger_residual"), ("nim", "kernel_a_eigenrelation")],
    );
}

#[test]
fn criterion_08_correspondence() {
    criterion(
        8,
        "coherent-correspondence",
        &[
            ("nim", "kernel_paths_pointwise_equal"),
            ("nim", "kernel_coherent_ratio_constant"),
        ],
    );
}

#[test]
fn criterion_09_stationary_synthesis() {
    criterion(
        9,
        "stationary-synthesis",
        &[
            ("nim", "synthesis_overlap_n_le_8"),
            ("nim", "stationary_coefficient_magnitudes"),
        ],
    );
}

#[test]
fn criterion_10_norm_identity() {
    criterion(10, "norm-identity", &[("nim", "norm_identity_5_random_vectors")]);
}

#[test]
fn criterion_11_fock_expansion() {
    criterion(
        11,
        "number-basis-expansion",
        &[
            ("nim", "fock_coeffs_quadrature_overlaps"),
            ("nim", "fock_coeffs_ratio_recursion"),
        ],
    );
}

#[test]
fn criterion_12_oscillator_reference() {
    criterion(
        12,
        "oscillator-reference",
        &[
            ("oscillator", "psi_orthonormality_n_le_10"),
            ("oscillator", "coherent_norm_drift_one_period"),
            ("oscillator", "ladder_commutator_is_identity"),
        ],
    );
}

#[test]
fn criterion_13_negative_controls() {
    criterion(
        13,
        "negative-controls",
        &[
            ("oscillator", "symmetry_corrupted_x2_breaks_invariance"),
            ("nim", "non_solution_fails_residual"),
            ("nim", "perturbed_orbit_fails_reduction"),
            ("group", "alt_eta3_variant_fails_structure"),
        ],
    );
}
