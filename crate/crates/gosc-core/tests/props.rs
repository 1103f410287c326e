//! Property tests over the algebraic invariants.

use gosc_core::lie_osc::{
    bracket, casimirs, poisson_bracket_coords, AlgebraVector, Covector, GroupElement,
};
use gosc_core::numerics::gauss_hermite;
use num_complex::Complex64 as C64;
use proptest::prelude::*;

fn coord() -> impl Strategy<Value = f64> {
    -3.0..3.0f64
}

fn group_elem() -> impl Strategy<Value = GroupElement> {
    (coord(), coord(), coord(), coord()).prop_map(|(a, b, c, d)| GroupElement::new(a, b, c, d))
}

fn algebra_vec() -> impl Strategy<Value = AlgebraVector> {
    proptest::array::uniform8(-2.0..2.0f64).prop_map(|v| {
        AlgebraVector::new([
            C64::new(v[0], v[1]),
            C64::new(v[2], v[3]),
            C64::new(v[4], v[5]),
            C64::new(v[6], v[7]),
        ])
    })
}

proptest! {
    #[test]
    fn compose_is_associative(g in group_elem(), h in group_elem(), k in group_elem()) {
        let left = g.compose(&h).compose(&k);
        let right = g.compose(&h.compose(&k));
        prop_assert!(left.max_abs_diff(&right) <= 1e-12);
    }

    #[test]
    fn inverse_cancels(g in group_elem()) {
        prop_assert!(g.compose(&g.inverse()).max_abs() <= 1e-13);
        prop_assert!(g.inverse().compose(&g).max_abs() <= 1e-13);
    }

    #[test]
    fn bracket_antisymmetry_and_jacobi(x in algebra_vec(), y in algebra_vec(), z in algebra_vec()) {
        prop_assert!(bracket(&x, &y).add(&bracket(&y, &x)).max_abs() <= 1e-13);
        let jac = bracket(&x, &bracket(&y, &z))
            .add(&bracket(&y, &bracket(&z, &x)))
            .add(&bracket(&z, &bracket(&x, &y)));
        prop_assert!(jac.max_abs() <= 1e-12);
    }

    #[test]
    fn casimirs_poisson_commute(f in proptest::array::uniform4(-3.0..3.0f64), b in 1usize..=4) {
        let cov = Covector::new(f);
        let grad_k1 = [2.0 * f[3], 2.0 * f[1], 2.0 * f[2], 2.0 * f[0]];
        let mut acc1 = 0.0;
        let mut acc2 = 0.0;
        for a in 1..=4usize {
            let pb = poisson_bracket_coords(a, b, &cov).unwrap();
            acc1 += grad_k1[a - 1] * pb;
            if a == 4 {
                acc2 += pb;
            }
        }
        prop_assert!(acc1.abs() <= 1e-12);
        prop_assert!(acc2.abs() == 0.0);
        // sanity: the casimir values themselves stay finite
        let (k1, k2) = casimirs(&cov);
        prop_assert!(k1.is_finite() && k2.is_finite());
    }

    #[test]
    fn gauss_hermite_even_moments(m in 3usize..24) {
        // compare quadrature against the double-factorial closed form for
        // every even monomial the rule must integrate exactly
        let (nodes, weights) = gauss_hermite(m);
        prop_assert!(weights.iter().all(|w| *w > 0.0));
        prop_assert!(nodes.windows(2).all(|w| w[0] < w[1]));
        let mut exact = core::f64::consts::PI.sqrt();
        let mut k = 0usize;
        while 2 * k + 2 <= 2 * m - 1 {
            // moment_{k+1} = moment_k * (2k + 1) / 2
            exact *= (2 * k + 1) as f64 / 2.0;
            k += 1;
            let q: f64 = nodes.iter().zip(&weights).map(|(x, w)| w * x.powi(2 * k as i32)).sum();
            prop_assert!((q - exact).abs() / exact <= 1e-12, "degree {} at M = {m}", 2 * k);
        }
    }
}
