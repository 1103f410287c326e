//! Dual-route checks on the representation-space integrals: the plane
//! Gauss-Hermite values are compared against an independent radial
//! integration of the same rotation-invariant integrands.

use gosc_core::lambda_rep::{gram_norm_sq, inner_product, FockCoeffs, QuadratureRule, RepParams};
use gosc_core::lie_osc::OrbitLabel;
use gosc_core::numerics::integrate_plane;
use num_complex::Complex64 as C64;

/// `\int_0^R r^k e^{-a r^2} 2 pi r dr` by composite Simpson; independent of
/// any Gauss-Hermite machinery.
fn radial_moment(k: u32, a: f64) -> f64 {
    let r_max = (800.0f64 / a).sqrt().min(40.0);
    let n = 40_000;
    let h = r_max / n as f64;
    let f = |r: f64| r.powi(k as i32) * (-a * r * r).exp() * 2.0 * core::f64::consts::PI * r;
    let mut acc = f(0.0) + f(r_max);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * f(i as f64 * h);
    }
    acc * h / 3.0
}

#[test]
fn gram_norms_match_radial_oracle() {
    let rep = RepParams::new(OrbitLabel::new(0.4, -1.8), 0.9, 16).unwrap();
    let rule = QuadratureRule::new(48).unwrap();
    let a = rep.gauss_rate();
    for n in 0..=8usize {
        let oracle = radial_moment(2 * n as u32, a);
        let chi = FockCoeffs::basis(n, rep).unwrap();
        let quad = inner_product(&chi, &chi, &rule).unwrap().value;
        assert!(
            (quad.re - oracle).abs() / oracle < 1e-9,
            "n = {n}: plane {} vs radial {oracle}",
            quad.re
        );
        assert!(quad.im.abs() < 1e-12 * oracle);
        // and both agree with the closed form
        assert!((gram_norm_sq(n, &rep) - oracle).abs() / oracle < 1e-9);
    }
}

#[test]
fn plane_moments_match_radial_oracle() {
    let sigma = 0.7;
    for k in [0u32, 2, 4, 6] {
        let plane = integrate_plane(|q| C64::new(q.norm_sqr().powi(k as i32 / 2), 0.0), sigma, 32);
        let oracle = radial_moment(k, sigma);
        assert!(
            (plane.re - oracle).abs() / oracle < 1e-9,
            "k = {k}: {} vs {oracle}",
            plane.re
        );
    }
}
