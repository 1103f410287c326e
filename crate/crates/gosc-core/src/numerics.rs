//! Shared numerical kernels: Hermite polynomials, Gauss-Hermite quadrature,
//! Gaussian integration over the complex plane, high-order central finite
//! differences, and dense complex matrix arithmetic with exponentials.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::ops::{Index, IndexMut};

use num_complex::Complex64 as C64;
#[allow(unused_imports)] // no_std builds resolve float math through this trait (libm)
use num_traits::Float;
use crate::error::Error;

/// Physicists' Hermite polynomial `H_n(z)` by the three-term recurrence
/// `H_{n+1} = 2 z H_n - 2 n H_{n-1}`, `H_0 = 1`, `H_1 = 2z`.
pub fn hermite_poly(n: usize, z: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 2.0 * z;
    for k in 1..n {
        let next = 2.0 * z * cur - 2.0 * (k as f64) * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `H_n` at a complex argument; same recurrence as [`hermite_poly`].
pub fn hermite_poly_complex(n: usize, z: C64) -> C64 {
    let mut prev = C64::new(1.0, 0.0);
    if n == 0 {
        return prev;
    }
    let mut cur = 2.0 * z;
    for k in 1..n {
        let next = 2.0 * z * cur - 2.0 * (k as f64) * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `n!` as a float. Exact for every `n` whose factorial fits in an `f64`
/// mantissa chain; overflows to `inf` past n = 170.
pub fn factorial(n: usize) -> f64 {
    let mut acc = 1.0;
    for k in 2..=n {
        acc *= k as f64;
    }
    acc
}

/// Orthonormal Hermite functions `psi_k(x) = h_k(x) e^{-x^2/2}` with `h_k`
/// orthonormal w.r.t. `e^{-x^2} dx`. Returns `(psi_m(x), psi_{m-1}(x))`.
/// The scaled recurrence keeps every intermediate O(1), so it is safe far
/// beyond the degrees where raw `H_n` overflows.
fn hermite_function_pair(m: usize, x: f64) -> (f64, f64) {
    let mut prev = 0.0;
    let mut cur = PI.powf(-0.25) * (-0.5 * x * x).exp();
    for k in 0..m {
        let kf = k as f64;
        let next = x * (2.0 / (kf + 1.0)).sqrt() * cur - (kf / (kf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    (cur, prev)
}

/// M-point Gauss-Hermite rule for `\int f(s) e^{-s^2} ds`, exact for
/// polynomials up to degree `2M - 1`. Nodes ascend and are symmetric about 0.
///
/// Roots are located by scanning `psi_M` for sign changes and polished with
/// a bisection-safeguarded Newton iteration on the scaled recurrence;
/// weights come from the Christoffel form `w_i = e^{-x_i^2} / (M psi_{M-1}(x_i)^2)`.
pub fn gauss_hermite(m: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(m >= 1, "gauss_hermite needs at least one node");
    let mf = m as f64;
    let upper = (2.0 * mf + 1.0).sqrt() + 1.0;
    // Adjacent roots are at least ~pi/sqrt(2M+1) apart.
    let step = 0.25 * PI / (2.0 * mf + 1.0).sqrt();

    let psi = |x: f64| hermite_function_pair(m, x).0;
    let mut pos_roots: Vec<f64> = Vec::with_capacity(m / 2);
    // For odd M, x = 0 is a root; start the scan just above it either way.
    let mut a = if m % 2 == 1 { 0.5 * step } else { 0.0 };
    let mut fa = psi(a);
    while a < upper {
        let b = a + step;
        let fb = psi(b);
        if fa == 0.0 {
            pos_roots.push(a);
        } else if fa * fb < 0.0 {
            pos_roots.push(refine_root(m, a, b));
        }
        a = b;
        fa = fb;
    }
    assert_eq!(pos_roots.len(), m / 2, "gauss_hermite root scan missed a sign change");

    let mut nodes = Vec::with_capacity(m);
    for &r in pos_roots.iter().rev() {
        nodes.push(-r);
    }
    if m % 2 == 1 {
        nodes.push(0.0);
    }
    nodes.extend(pos_roots.iter().copied());

    let weights = nodes
        .iter()
        .map(|&x| {
            let (_, psi_prev) = hermite_function_pair(m, x);
            (-x * x).exp() / (mf * psi_prev * psi_prev)
        })
        .collect();
    (nodes, weights)
}

/// Newton with bisection fallback for a root of `psi_m` bracketed in `[a, b]`.
fn refine_root(m: usize, mut a: f64, mut b: f64) -> f64 {
    let mf = m as f64;
    let mut fa = hermite_function_pair(m, a).0;
    let mut x = 0.5 * (a + b);
    for _ in 0..64 {
        let (p, p_prev) = hermite_function_pair(m, x);
        // psi_m' = sqrt(2M) psi_{M-1} - x psi_M
        let dp = (2.0 * mf).sqrt() * p_prev - x * p;
        if p == 0.0 {
            return x;
        }
        if fa * p < 0.0 {
            b = x;
        } else {
            a = x;
            fa = p;
        }
        let newton = x - p / dp;
        let next = if newton > a && newton < b { newton } else { 0.5 * (a + b) };
        if (next - x).abs() <= 1e-16 * x.abs().max(1.0) {
            return next;
        }
        x = next;
    }
    x
}

/// `\int f(q) e^{-sigma |q|^2} dA(q)` over the complex plane by a product
/// Gauss-Hermite rule after the substitution `q = (s + iv)/sqrt(sigma)`.
///
/// The Gaussian is consumed by the rule, so `f` must be the remainder with
/// the weight already factored out. Nodes are visited in fixed ascending
/// order for run-to-run bit stability.
pub fn integrate_plane<F: Fn(C64) -> C64>(f: F, sigma: f64, m: usize) -> C64 {
    let (nodes, weights) = gauss_hermite(m);
    integrate_plane_with(f, sigma, &nodes, &weights)
}

/// [`integrate_plane`] against a precomputed one-axis rule.
pub fn integrate_plane_with<F: Fn(C64) -> C64>(
    f: F,
    sigma: f64,
    nodes: &[f64],
    weights: &[f64],
) -> C64 {
    let scale = sigma.sqrt().recip();
    let mut acc = C64::new(0.0, 0.0);
    for (i, &s) in nodes.iter().enumerate() {
        if weights[i] == 0.0 {
            continue;
        }
        let mut row = C64::new(0.0, 0.0);
        for (j, &v) in nodes.iter().enumerate() {
            if weights[j] == 0.0 {
                continue;
            }
            row += weights[j] * f(C64::new(s * scale, v * scale));
        }
        acc += weights[i] * row;
    }
    acc / sigma
}

/// Which grid axis a stencil differentiates along.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    T,
    X,
}

/// Central finite-difference stencil description.
#[derive(Clone, Copy, Debug)]
pub struct Stencil {
    /// Accuracy order, 2 or 4.
    pub order: usize,
    /// Grid spacing, positive.
    pub h: f64,
    pub axis: Axis,
}

impl Stencil {
    pub fn new(order: usize, h: f64, axis: Axis) -> Result<Self, Error> {
        if order != 2 && order != 4 {
            return Err(Error::InvalidParams("stencil order must be 2 or 4"));
        }
        if !(h > 0.0) {
            return Err(Error::InvalidParams("stencil spacing must be positive"));
        }
        Ok(Stencil { order, h, axis })
    }

    /// Points needed on each side of the evaluation point.
    pub fn margin(&self) -> usize {
        self.order / 2
    }
}

/// First derivative of `f` at `x` by the central difference of the stencil's
/// order.
pub fn finite_diff<F: Fn(f64) -> C64>(f: F, x: f64, st: &Stencil) -> C64 {
    let h = st.h;
    match st.order {
        2 => (f(x + h) - f(x - h)) / (2.0 * h),
        _ => (-f(x + 2.0 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2.0 * h)) / (12.0 * h),
    }
}

/// First derivative with one Richardson step (halved spacing), raising the
/// effective order of the base stencil by two.
pub fn finite_diff_richardson<F: Fn(f64) -> C64 + Copy>(f: F, x: f64, st: &Stencil) -> C64 {
    let coarse = finite_diff(f, x, st);
    let half = Stencil { h: 0.5 * st.h, ..*st };
    let fine = finite_diff(f, x, &half);
    let k = match st.order {
        2 => 4.0,
        _ => 16.0,
    };
    (k * fine - coarse) / (k - 1.0)
}

/// Dense square complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix {
    n: usize,
    data: Vec<C64>,
}

impl CMatrix {
    pub fn zeros(n: usize) -> Self {
        CMatrix { n, data: vec![C64::new(0.0, 0.0); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = C64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn<F: FnMut(usize, usize) -> C64>(n: usize, mut f: F) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn mul(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn add(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(other.data.iter()) {
            *a += *b;
        }
        out
    }

    pub fn sub(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(other.data.iter()) {
            *a -= *b;
        }
        out
    }

    pub fn scale(&self, c: C64) -> CMatrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a *= c;
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> CMatrix {
        CMatrix::from_fn(self.n, |i, j| self[(j, i)].conj())
    }

    /// Maximum absolute column sum.
    pub fn one_norm(&self) -> f64 {
        let mut best = 0.0;
        for j in 0..self.n {
            let mut col = 0.0;
            for i in 0..self.n {
                col += self[(i, j)].norm();
            }
            best = col.max(best);
        }
        best
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Max |entry| over the leading `(k+1) x (k+1)` block: the truncation-
    /// protected window of identities involving band operators.
    pub fn max_abs_window(&self, k: usize) -> f64 {
        let k = k.min(self.n - 1);
        let mut best = 0.0;
        for i in 0..=k {
            for j in 0..=k {
                best = self[(i, j)].norm().max(best);
            }
        }
        best
    }

    pub fn max_abs_diff_window(&self, other: &CMatrix, k: usize) -> f64 {
        self.sub(other).max_abs_window(k)
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.n + j]
    }
}

/// Matrix exponential by scaling-and-squaring with a truncated Taylor core.
///
/// The series terminates exactly for nilpotent (strictly banded, truncated)
/// inputs; for the banded generators used here the cost is negligible.
pub fn matrix_exp(a: &CMatrix) -> CMatrix {
    let norm = a.one_norm();
    let s = if norm > 0.5 { (norm / 0.5).log2().ceil() as i32 } else { 0 };
    let b = a.scale(C64::new(0.5f64.powi(s), 0.0));

    let n = a.dim();
    let mut sum = CMatrix::identity(n);
    let mut term = CMatrix::identity(n);
    for k in 1..=64u32 {
        term = term.mul(&b).scale(C64::new(1.0 / k as f64, 0.0));
        let t = term.max_abs();
        if t == 0.0 {
            break;
        }
        sum = sum.add(&term);
        if t <= 1e-18 * sum.max_abs() {
            break;
        }
    }
    let mut out = sum;
    for _ in 0..s {
        out = out.mul(&out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn hermite_low_orders() {
        // H_2(z) = 4z^2 - 2, H_3(1) = -4
        assert_relative_eq!(hermite_poly(2, 0.7), 4.0 * 0.49 - 2.0, epsilon = 1e-14);
        assert_relative_eq!(hermite_poly(3, 1.0), -4.0, epsilon = 1e-14);
        let z = C64::new(0.3, -0.2);
        let h2 = hermite_poly_complex(2, z);
        assert!((h2 - (4.0 * z * z - 2.0)).norm() < 1e-14);
    }

    #[test]
    fn hermite_parity() {
        for n in 0..=20 {
            let z = 0.918_273 + 0.01 * n as f64;
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            assert_relative_eq!(
                hermite_poly(n, -z),
                sign * hermite_poly(n, z),
                max_relative = 1e-12
            );
        }
    }

    #[test]
    fn gauss_hermite_tiny_rules() {
        let (n1, w1) = gauss_hermite(1);
        assert_eq!(n1, vec![0.0]);
        assert_relative_eq!(w1[0], PI.sqrt(), epsilon = 1e-14);

        let (n2, w2) = gauss_hermite(2);
        assert_relative_eq!(n2[1], 1.0 / 2.0f64.sqrt(), epsilon = 1e-14);
        assert_relative_eq!(n2[0], -1.0 / 2.0f64.sqrt(), epsilon = 1e-14);
        assert_relative_eq!(w2[0], PI.sqrt() / 2.0, epsilon = 1e-14);
        assert_relative_eq!(w2[1], PI.sqrt() / 2.0, epsilon = 1e-14);
    }

    #[test]
    fn gauss_hermite_moments() {
        // \int s^4 e^{-s^2} ds = 3 sqrt(pi) / 4, exact from M >= 3
        for m in [3usize, 5, 8, 40, 80] {
            let (nodes, weights) = gauss_hermite(m);
            let q4: f64 = nodes.iter().zip(&weights).map(|(x, w)| w * x.powi(4)).sum();
            assert_relative_eq!(q4, 0.75 * PI.sqrt(), max_relative = 1e-13);
            let q0: f64 = weights.iter().sum();
            assert_relative_eq!(q0, PI.sqrt(), max_relative = 1e-13);
        }
    }

    #[test]
    fn gauss_hermite_exactness_degree() {
        // degree 2M-1 is integrated exactly; 2M is not (for the sharp check
        // use the monomial s^{2M} whose error is the leading-order defect).
        let m = 6;
        let (nodes, weights) = gauss_hermite(m);
        // odd monomials vanish by symmetry; check s^10 (= 2M-2) exact
        let q10: f64 = nodes.iter().zip(&weights).map(|(x, w)| w * x.powi(10)).sum();
        // \int s^{2k} e^{-s^2} = (2k-1)!! sqrt(pi) / 2^k
        let exact = 945.0 * PI.sqrt() / 32.0;
        assert_relative_eq!(q10, exact, max_relative = 1e-12);
        let q12: f64 = nodes.iter().zip(&weights).map(|(x, w)| w * x.powi(12)).sum();
        let exact12 = 10395.0 * PI.sqrt() / 64.0;
        assert!((q12 - exact12).abs() / exact12 > 1e-6);
    }

    #[test]
    fn plane_integral_basics() {
        let sigma = 1.7;
        let one = integrate_plane(|_| C64::new(1.0, 0.0), sigma, 24);
        assert_relative_eq!(one.re, PI / sigma, max_relative = 1e-13);
        assert!(one.im.abs() < 1e-15);

        let sq = integrate_plane(|q| C64::new(q.norm_sqr(), 0.0), sigma, 24);
        assert_relative_eq!(sq.re, PI / (sigma * sigma), max_relative = 1e-13);

        let lin = integrate_plane(|q| q, sigma, 24);
        assert!(lin.norm() < 1e-14);
    }

    #[test]
    fn finite_diff_accuracy() {
        // plain 4th-order error for sin' at 0 is h^4/30; the Richardson
        // variant is what reaches 1e-10 at h = 1e-2
        let st = Stencil::new(4, 1e-2, Axis::X).unwrap();
        let d = finite_diff(|x| C64::new(x.sin(), 0.0), 0.0, &st);
        assert!((d.re - 1.0).abs() < 1e-9);
        let dr = finite_diff_richardson(|x| C64::new(x.sin(), 0.0), 0.0, &st);
        assert!((dr.re - 1.0).abs() < 1e-10);

        let c = finite_diff(|_| C64::new(3.25, -1.5), 0.4, &st);
        assert!(c.norm() < 1e-12);
    }

    #[test]
    fn finite_diff_convergence_order() {
        let f = |x: f64| C64::new((2.3 * x).sin() * x.exp(), 0.0);
        let exact = |x: f64| 2.3 * (2.3 * x).cos() * x.exp() + (2.3 * x).sin() * x.exp();
        let x0 = 0.3;
        let e_h = (finite_diff(f, x0, &Stencil::new(4, 0.05, Axis::X).unwrap()).re - exact(x0)).abs();
        let e_h2 = (finite_diff(f, x0, &Stencil::new(4, 0.025, Axis::X).unwrap()).re - exact(x0)).abs();
        let ratio = e_h / e_h2;
        assert!(ratio > 12.0 && ratio < 20.0, "4th-order ratio was {ratio}");
    }

    #[test]
    fn richardson_beats_plain() {
        let f = |x: f64| C64::new((1.7 * x).cos(), 0.0);
        let exact = -1.7 * (1.7 * 0.2f64).sin();
        let st = Stencil::new(4, 0.05, Axis::X).unwrap();
        let plain = (finite_diff(f, 0.2, &st).re - exact).abs();
        let rich = (finite_diff_richardson(f, 0.2, &st).re - exact).abs();
        assert!(rich < plain);
    }

    #[test]
    fn matrix_exp_diagonal_and_zero() {
        let z = CMatrix::zeros(4);
        assert_eq!(matrix_exp(&z), CMatrix::identity(4));

        let mut d = CMatrix::zeros(3);
        d[(0, 0)] = C64::new(0.3, 1.1);
        d[(1, 1)] = C64::new(-2.0, 0.0);
        d[(2, 2)] = C64::new(0.0, -3.0);
        let e = matrix_exp(&d);
        for i in 0..3 {
            assert!((e[(i, i)] - d[(i, i)].exp()).norm() < 1e-14);
        }
        assert!((e[(0, 1)]).norm() == 0.0);
    }

    #[test]
    fn matrix_exp_nilpotent_band_exact() {
        // single super-diagonal band: series terminates, compare term-by-term
        let n = 8;
        let mut a = CMatrix::zeros(n);
        for i in 0..n - 1 {
            a[(i, i + 1)] = C64::new(0.4 + 0.1 * i as f64, -0.2);
        }
        let e = matrix_exp(&a);
        let mut expect = CMatrix::identity(n);
        let mut term = CMatrix::identity(n);
        for k in 1..n {
            term = term.mul(&a).scale(C64::new(1.0 / k as f64, 0.0));
            expect = expect.add(&term);
        }
        assert!(e.sub(&expect).max_abs() < 1e-14);
    }

    #[test]
    fn matrix_exp_inverse_pair() {
        let n = 6;
        let mut a = CMatrix::zeros(n);
        for i in 0..n - 1 {
            a[(i, i + 1)] = C64::new(1.3, 0.2);
            a[(i + 1, i)] = C64::new(-0.8, 0.5);
        }
        let e = matrix_exp(&a);
        let em = matrix_exp(&a.scale(C64::new(-1.0, 0.0)));
        let prod = e.mul(&em);
        assert!(prod.sub(&CMatrix::identity(n)).max_abs() < 1e-12);
    }
}
