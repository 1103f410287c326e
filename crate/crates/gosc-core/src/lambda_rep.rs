//! Irreducible representation of the oscillatory algebra on a truncated
//! holomorphic basis over a non-degenerate coadjoint orbit, together with the
//! reproducing kernel of that space, the group cocycle, the associated
//! bi-kernel, and the lifted group representation as matrix-exponential
//! products.
//!
//! The carrier space is spanned by `phi_n(q) = q^n exp(j2 q^2 / (4 hbar))`
//! with `j2 < 0`; elements are finite coefficient vectors over that basis, so
//! all generator actions are exact banded-matrix operations and truncation is
//! the single controlled approximation. Identities that involve `k`
//! successive band operators hold on the protected window of coefficients
//! with index `<= N - k`.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64 as C64;
#[allow(unused_imports)] // no_std builds resolve float math through this trait (libm)
use num_traits::Float;
use crate::error::Error;
use crate::lie_osc::{GroupElement, OrbitLabel};
use crate::numerics::{factorial, gauss_hermite, matrix_exp, CMatrix};

const I: C64 = C64::new(0.0, 1.0);

/// Parameters of the representation space: orbit label, Planck constant, and
/// truncation degree.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RepParams {
    pub orbit: OrbitLabel,
    pub hbar: f64,
    /// Maximum retained basis index N; the space has dimension N + 1.
    pub trunc: usize,
}

impl RepParams {
    pub fn new(orbit: OrbitLabel, hbar: f64, trunc: usize) -> Result<Self, Error> {
        if !(orbit.j2 < 0.0) {
            return Err(Error::InvalidParams("orbit requires j2 < 0"));
        }
        if !(hbar > 0.0) {
            return Err(Error::InvalidParams("hbar must be positive"));
        }
        if trunc < 4 {
            return Err(Error::InvalidParams("truncation degree must be at least 4"));
        }
        Ok(RepParams { orbit, hbar, trunc })
    }

    pub fn dim(&self) -> usize {
        self.trunc + 1
    }

    /// Decay rate `a = -j2 / (2 hbar)` of the total plane Gaussian
    /// `e^{-a |q|^2}` formed by basis moduli and the measure weight.
    pub fn gauss_rate(&self) -> f64 {
        -self.orbit.j2 / (2.0 * self.hbar)
    }
}

/// Basis function `phi_n(q) = q^n exp(j2 q^2 / (4 hbar))`.
pub fn basis_eval(n: usize, q: C64, rep: &RepParams) -> Result<C64, Error> {
    if n > rep.trunc {
        return Err(Error::IndexOutOfRange { index: n, max: rep.trunc });
    }
    let gauss = (rep.orbit.j2 / (4.0 * rep.hbar) * q * q).exp();
    Ok(q.powu(n as u32) * gauss)
}

/// Closed-form squared norm `<phi_n, phi_n> = pi n! (2 hbar / |j2|)^{n+1}`.
pub fn gram_norm_sq(n: usize, rep: &RepParams) -> f64 {
    PI * factorial(n) * rep.gauss_rate().recip().powi(n as i32 + 1)
}

/// The four generator matrices on the truncated basis (column = input index):
/// `L1 phi_n = i (n + j1/hbar) phi_n`,
/// `L2 phi_n = -i n phi_{n-1} + i (j2 / 2 hbar) phi_{n+1}`,
/// `L3 phi_n =    n phi_{n-1} +   (j2 / 2 hbar) phi_{n+1}`,
/// `L4 = (i j2 / hbar) Id`. Raising terms past degree N are dropped.
#[derive(Clone, Debug)]
pub struct LambdaMatrices {
    pub l1: CMatrix,
    pub l2: CMatrix,
    pub l3: CMatrix,
    pub l4: CMatrix,
}

impl LambdaMatrices {
    /// Generator by 1-based index.
    pub fn get(&self, a: usize) -> Result<&CMatrix, Error> {
        match a {
            1 => Ok(&self.l1),
            2 => Ok(&self.l2),
            3 => Ok(&self.l3),
            4 => Ok(&self.l4),
            _ => Err(Error::IndexOutOfRange { index: a, max: 4 }),
        }
    }
}

pub fn lambda_matrices(rep: &RepParams) -> LambdaMatrices {
    let d = rep.dim();
    let j1h = rep.orbit.j1 / rep.hbar;
    let band = rep.orbit.j2 / (2.0 * rep.hbar);

    let mut l1 = CMatrix::zeros(d);
    let mut l2 = CMatrix::zeros(d);
    let mut l3 = CMatrix::zeros(d);
    let mut l4 = CMatrix::zeros(d);
    for n in 0..d {
        let nf = n as f64;
        l1[(n, n)] = I * (nf + j1h);
        l4[(n, n)] = I * (rep.orbit.j2 / rep.hbar);
        if n > 0 {
            l2[(n - 1, n)] = -I * nf;
            l3[(n - 1, n)] = C64::new(nf, 0.0);
        }
        if n + 1 < d {
            l2[(n + 1, n)] = I * band;
            l3[(n + 1, n)] = C64::new(band, 0.0);
        }
    }
    LambdaMatrices { l1, l2, l3, l4 }
}

/// Quadratic Casimir in the representation:
/// `2 (-i hbar L1)(-i hbar L4) + (-i hbar L2)^2 + (-i hbar L3)^2`,
/// equal to `(2 j1 - hbar) j2 Id` on the protected window. The linear
/// Casimir analogue `-i hbar L4 = j2 Id` holds exactly everywhere.
pub fn casimir_matrix(rep: &RepParams) -> CMatrix {
    let lm = lambda_matrices(rep);
    let mih = -I * rep.hbar;
    let a1 = lm.l1.scale(mih);
    let a2 = lm.l2.scale(mih);
    let a3 = lm.l3.scale(mih);
    let a4 = lm.l4.scale(mih);
    a1.mul(&a4).scale(C64::new(2.0, 0.0)).add(&a2.mul(&a2)).add(&a3.mul(&a3))
}

/// First-order coefficients of the generator `ell_a = alpha(q) d_q + s(q)`
/// acting on functions of `q`; `a` is 1-based.
pub fn ell_coefficients(a: usize, q: C64, rep: &RepParams) -> Result<(C64, C64), Error> {
    let j1 = rep.orbit.j1;
    let j2 = rep.orbit.j2;
    let h = rep.hbar;
    match a {
        1 => Ok((I * q, I * (j1 / h) - I * (j2 / (2.0 * h)) * q * q)),
        2 => Ok((-I, I * (j2 / h) * q)),
        3 => Ok((C64::new(1.0, 0.0), C64::new(0.0, 0.0))),
        4 => Ok((C64::new(0.0, 0.0), I * (j2 / h))),
        _ => Err(Error::IndexOutOfRange { index: a, max: 4 }),
    }
}

/// Coefficient vector over the truncated basis.
#[derive(Clone, Debug, PartialEq)]
pub struct FockCoeffs {
    pub coeffs: Vec<C64>,
    pub rep: RepParams,
}

impl FockCoeffs {
    pub fn new(coeffs: Vec<C64>, rep: RepParams) -> Result<Self, Error> {
        if coeffs.len() > rep.dim() {
            return Err(Error::IndexOutOfRange { index: coeffs.len(), max: rep.dim() });
        }
        if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::InvalidParams("coefficients must be finite"));
        }
        Ok(FockCoeffs { coeffs, rep })
    }

    /// Single basis function `phi_n`.
    pub fn basis(n: usize, rep: RepParams) -> Result<Self, Error> {
        if n > rep.trunc {
            return Err(Error::IndexOutOfRange { index: n, max: rep.trunc });
        }
        let mut coeffs = alloc::vec![C64::new(0.0, 0.0); n + 1];
        coeffs[n] = C64::new(1.0, 0.0);
        Ok(FockCoeffs { coeffs, rep })
    }

    /// Polynomial part `sum_n c_n q^n`, without the basis Gaussian.
    pub fn eval_poly(&self, q: C64) -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * q + c;
        }
        acc
    }

    /// Full value `sum_n c_n phi_n(q)`.
    pub fn eval(&self, q: C64) -> C64 {
        self.eval_poly(q) * (self.rep.orbit.j2 / (4.0 * self.rep.hbar) * q * q).exp()
    }
}

/// One-axis Gauss-Hermite rule reused across plane integrals.
#[derive(Clone, Debug)]
pub struct QuadratureRule {
    pub points: usize,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn new(points: usize) -> Result<Self, Error> {
        if points < 2 {
            return Err(Error::InvalidParams("quadrature rule needs at least 2 nodes per axis"));
        }
        let (nodes, weights) = gauss_hermite(points);
        Ok(QuadratureRule { points, nodes, weights })
    }

    /// Plane integral `\int f(q) e^{-sigma |q|^2} dA` with the Gaussian
    /// weight factored out of `f`.
    pub fn integrate_plane<F: Fn(C64) -> C64>(&self, f: F, sigma: f64) -> C64 {
        crate::numerics::integrate_plane_with(f, sigma, &self.nodes, &self.weights)
    }

    /// Real-line abscissa/weight pairs at Gaussian scale `sigma`:
    /// `\int g(x) dx ~= sum_i w_i g(x_i)` for integrands that decay like
    /// `e^{-sigma x^2}` (the rule's own weight is already divided out).
    /// Underflowed weights are dropped so extreme rules cannot produce
    /// 0 * inf terms.
    pub fn real_line(&self, sigma: f64) -> Vec<(f64, f64)> {
        let scale = sigma.sqrt().recip();
        self.nodes
            .iter()
            .zip(self.weights.iter())
            .filter(|(_, &w)| w > 0.0)
            .map(|(&s, &w)| (s * scale, w * scale * (s * s).exp()))
            .collect()
    }
}

/// Inner-product value plus quadrature metadata.
#[derive(Clone, Copy, Debug)]
pub struct InnerProduct {
    pub value: C64,
    /// Set when the rule is too coarse for the requested degree (M < N + 2).
    pub accuracy_warning: bool,
}

/// `<a, b> = \int conj(a(q)) b(q) exp(-(j2 / 4 hbar)(q - conj q)^2) dA(q)`.
///
/// The basis Gaussians and the measure weight combine to
/// `exp(j2 |q|^2 / 2 hbar)` exactly, so only the polynomial parts are
/// sampled. The Gram matrix is diagonal with entries [`gram_norm_sq`].
pub fn inner_product(
    a: &FockCoeffs,
    b: &FockCoeffs,
    rule: &QuadratureRule,
) -> Result<InnerProduct, Error> {
    if a.rep != b.rep {
        return Err(Error::RepMismatch);
    }
    let value = rule.integrate_plane(|q| a.eval_poly(q).conj() * b.eval_poly(q), a.rep.gauss_rate());
    Ok(InnerProduct { value, accuracy_warning: rule.points < a.rep.trunc + 2 })
}

/// Exponent of the reproducing kernel: `(j2 / 4 hbar)(q - qbar2)^2`.
pub fn kernel_exponent(q: C64, qbar2: C64, rep: &RepParams) -> C64 {
    let d = q - qbar2;
    rep.orbit.j2 / (4.0 * rep.hbar) * d * d
}

/// Reproducing kernel of the representation space:
/// `delta(q, qbar2) = -(j2 / 2 pi hbar) exp[(j2 / 4 hbar)(q - qbar2)^2]`,
/// equal to the basis series
/// `sum_n (-j2/2hbar)^n / n! phi_n(q) conj(phi_n(q'))` at `qbar2 = conj q'`.
pub fn reproducing_kernel(q: C64, qbar2: C64, rep: &RepParams) -> C64 {
    let pref = -rep.orbit.j2 / (2.0 * PI * rep.hbar);
    pref * kernel_exponent(q, qbar2, rep).exp()
}

/// Weight of the representation measure,
/// `exp[-(j2 / 4 hbar)(q - conj q)^2]` (times the Lebesgue area element).
pub fn measure_weight(q: C64, rep: &RepParams) -> f64 {
    (rep.orbit.j2 / rep.hbar * q.im * q.im).exp()
}

/// Right action of the group on the holomorphic chart:
/// `q . g^{-1} = q e^{-i x1} + i x2 - x3`.
pub fn point_action(q: C64, g: &GroupElement) -> C64 {
    let [x1, x2, x3, _] = g.x;
    q * (-I * x1).exp() + I * x2 - x3
}

/// Exponent of the multiplier cocycle `U(q, g)`.
pub fn cocycle_exponent(q: C64, g: &GroupElement, rep: &RepParams) -> C64 {
    let [x1, x2, _, x4] = g.x;
    let j1 = rep.orbit.j1;
    let j2 = rep.orbit.j2;
    let h = rep.hbar;
    let e1 = (-2.0 * I * x1).exp();
    let em1 = (-I * x1).exp();
    -I * (j1 / h) * x1 - I * (j2 / h) * x4
        + j2 / (4.0 * h) * ((1.0 - e1) * q * q + 2.0 * (x2 - 2.0 * I * q * em1) * x2)
}

/// Multiplier cocycle of the induced representation: `U(q, e) = 1` and
/// `U(q, g~ g) = U(q, g) U(q . g^{-1}, g~)`.
pub fn cocycle_u(q: C64, g: &GroupElement, rep: &RepParams) -> C64 {
    cocycle_exponent(q, g, rep).exp()
}

/// Representation bi-kernel evaluated at the inverse argument:
/// `D_{qq'}(g^{-1}) = U(q, g) delta(q . g^{-1}, qbar2)`.
/// Reduces to the reproducing kernel at the identity; under the
/// representation measure it convolves as
/// `\int D(q, ., g1) D(., q', g2) dmu = D(q, q', g2 g1)`.
pub fn dkernel(q: C64, qbar2: C64, g: &GroupElement, rep: &RepParams) -> C64 {
    cocycle_u(q, g, rep) * reproducing_kernel(point_action(q, g), qbar2, rep)
}

/// Analytic `d/dq` of [`dkernel`]; the kernel is entire in `q`.
pub fn dkernel_dq(q: C64, qbar2: C64, g: &GroupElement, rep: &RepParams) -> C64 {
    let [x1, x2, _, _] = g.x;
    let j2 = rep.orbit.j2;
    let h = rep.hbar;
    let em1 = (-I * x1).exp();
    // d/dq of the cocycle exponent
    let dce = j2 / (4.0 * h) * (2.0 * (1.0 - (-2.0 * I * x1).exp()) * q - 4.0 * I * em1 * x2);
    // chain rule through the affine point action
    let dke = j2 / (2.0 * h) * (point_action(q, g) - qbar2) * em1;
    dkernel(q, qbar2, g, rep) * (dce + dke)
}

/// Analytic derivative of [`dkernel`] in its antiholomorphic slot `qbar2`.
pub fn dkernel_dqbar2(q: C64, qbar2: C64, g: &GroupElement, rep: &RepParams) -> C64 {
    let j2 = rep.orbit.j2;
    let h = rep.hbar;
    -j2 / (2.0 * h) * (point_action(q, g) - qbar2) * dkernel(q, qbar2, g, rep)
}

/// Density of the orbit-space measure, `j2 / (2 pi hbar)^3` per `dj1 dj2`.
/// It enters only the distributional completeness relations over the orbit
/// parameters, which are outside what the finite suites integrate; it is
/// kept here as the documented constant.
pub fn orbit_measure_density(j2: f64, hbar: f64) -> f64 {
    j2 / (2.0 * PI * hbar).powi(3)
}

/// Lift of the representation to the group on the truncated basis,
/// mirroring the canonical-coordinate factorization:
/// `exp(x4 L4) exp(x3 L3) exp(x2 L2) exp(x1 L1)`.
///
/// The raising bands make the homomorphism property exact only as N grows;
/// on low-degree coefficients it holds to quadrature-level accuracy and
/// serves as an independent oracle for the group composition law.
pub fn rep_matrix(g: &GroupElement, rep: &RepParams) -> CMatrix {
    let [x1, x2, x3, x4] = g.x;
    let d = rep.dim();
    let lm = lambda_matrices(rep);

    // L1 is diagonal and L4 scalar: exponentiate directly.
    let mut e1 = CMatrix::zeros(d);
    for n in 0..d {
        e1[(n, n)] = (x1 * lm.l1[(n, n)]).exp();
    }
    let phase4 = (x4 * lm.l4[(0, 0)]).exp();

    let e2 = matrix_exp(&lm.l2.scale(C64::new(x2, 0.0)));
    let e3 = matrix_exp(&lm.l3.scale(C64::new(x3, 0.0)));
    e3.mul(&e2).mul(&e1).scale(phase4)
}
