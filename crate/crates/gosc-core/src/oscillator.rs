//! Reference oscillator physics: stationary Hermite states, Glauber coherent
//! states, finite-difference realizations of the basic operators on sampled
//! fields, and the first-order symmetry operators of the time-dependent
//! Schrodinger equation.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64 as C64;
#[allow(unused_imports)] // no_std builds resolve float math through this trait (libm)
use num_traits::Float;
use crate::error::Error;
use crate::numerics::{factorial, hermite_poly};
use crate::report::{Check, Report};

const I: C64 = C64::new(0.0, 1.0);

/// Oscillator constants, all strictly positive.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhysParams {
    pub mass: f64,
    pub omega: f64,
    pub hbar: f64,
}

impl PhysParams {
    pub fn new(mass: f64, omega: f64, hbar: f64) -> Result<Self, Error> {
        if !(mass > 0.0 && omega > 0.0 && hbar > 0.0) {
            return Err(Error::InvalidParams("mass, omega, hbar must be positive"));
        }
        Ok(PhysParams { mass, omega, hbar })
    }

    /// Natural units m = omega = hbar = 1.
    pub fn natural() -> Self {
        PhysParams { mass: 1.0, omega: 1.0, hbar: 1.0 }
    }

    pub fn energy(&self, n: usize) -> f64 {
        self.hbar * self.omega * (n as f64 + 0.5)
    }
}

/// Uniform rectangular (t, x) domain description.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridSpec {
    pub t_min: f64,
    pub t_max: f64,
    pub t_count: usize,
    pub x_min: f64,
    pub x_max: f64,
    pub x_count: usize,
}

impl GridSpec {
    pub fn validate(&self) -> Result<(), Error> {
        if self.t_count < 8 || self.x_count < 8 {
            return Err(Error::InvalidParams("grid counts must be at least 8"));
        }
        if !(self.t_max > self.t_min) || !(self.x_max > self.x_min) {
            return Err(Error::InvalidParams("grid ranges must be nonempty"));
        }
        Ok(())
    }
}

/// Complex field sampled on a uniform (t, x) grid, row-major in t.
///
/// `margin_t` / `margin_x` track how many boundary rows or columns hold
/// invalid data after finite-difference applications; interior queries skip
/// them.
#[derive(Clone, Debug)]
pub struct GridField {
    ts: Vec<f64>,
    xs: Vec<f64>,
    values: Vec<C64>,
    pub margin_t: usize,
    pub margin_x: usize,
}

impl GridField {
    pub fn sample<F: Fn(f64, f64) -> C64>(spec: &GridSpec, f: F) -> Result<Self, Error> {
        spec.validate()?;
        let ts: Vec<f64> = (0..spec.t_count)
            .map(|i| spec.t_min + (spec.t_max - spec.t_min) * i as f64 / (spec.t_count - 1) as f64)
            .collect();
        let xs: Vec<f64> = (0..spec.x_count)
            .map(|j| spec.x_min + (spec.x_max - spec.x_min) * j as f64 / (spec.x_count - 1) as f64)
            .collect();
        let mut values = Vec::with_capacity(ts.len() * xs.len());
        for &t in &ts {
            for &x in &xs {
                values.push(f(t, x));
            }
        }
        Ok(GridField { ts, xs, values, margin_t: 0, margin_x: 0 })
    }

    pub fn nt(&self) -> usize {
        self.ts.len()
    }

    pub fn nx(&self) -> usize {
        self.xs.len()
    }

    pub fn dt(&self) -> f64 {
        self.ts[1] - self.ts[0]
    }

    pub fn dx(&self) -> f64 {
        self.xs[1] - self.xs[0]
    }

    pub fn t(&self, i: usize) -> f64 {
        self.ts[i]
    }

    pub fn x(&self, j: usize) -> f64 {
        self.xs[j]
    }

    pub fn value(&self, i: usize, j: usize) -> C64 {
        self.values[i * self.xs.len() + j]
    }

    fn set(&mut self, i: usize, j: usize, v: C64) {
        let nx = self.xs.len();
        self.values[i * nx + j] = v;
    }

    fn like(&self, margin_t: usize, margin_x: usize) -> GridField {
        GridField {
            ts: self.ts.clone(),
            xs: self.xs.clone(),
            values: vec![C64::new(0.0, 0.0); self.values.len()],
            margin_t,
            margin_x,
        }
    }

    /// Pointwise map carrying the coordinates.
    pub fn map<F: Fn(f64, f64, C64) -> C64>(&self, f: F) -> GridField {
        let mut out = self.like(self.margin_t, self.margin_x);
        for i in 0..self.nt() {
            for j in 0..self.nx() {
                out.set(i, j, f(self.ts[i], self.xs[j], self.value(i, j)));
            }
        }
        out
    }

    pub fn zip<F: Fn(C64, C64) -> C64>(&self, other: &GridField, f: F) -> GridField {
        debug_assert_eq!(self.nt(), other.nt());
        debug_assert_eq!(self.nx(), other.nx());
        let mut out =
            self.like(self.margin_t.max(other.margin_t), self.margin_x.max(other.margin_x));
        for i in 0..self.nt() {
            for j in 0..self.nx() {
                out.set(i, j, f(self.value(i, j), other.value(i, j)));
            }
        }
        out
    }

    pub fn add(&self, other: &GridField) -> GridField {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &GridField) -> GridField {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, c: C64) -> GridField {
        self.map(|_, _, v| c * v)
    }

    fn deriv_t(&self) -> Result<GridField, Error> {
        if self.nt() < 5 {
            return Err(Error::GridTooSmall { need: 5, got: self.nt() });
        }
        let h = self.dt();
        let mut out = self.like(self.margin_t + 2, self.margin_x);
        for i in 2..self.nt() - 2 {
            for j in 0..self.nx() {
                let d = -self.value(i + 2, j) + 8.0 * self.value(i + 1, j)
                    - 8.0 * self.value(i - 1, j)
                    + self.value(i - 2, j);
                out.set(i, j, d / (12.0 * h));
            }
        }
        Ok(out)
    }

    fn deriv_x(&self) -> Result<GridField, Error> {
        if self.nx() < 5 {
            return Err(Error::GridTooSmall { need: 5, got: self.nx() });
        }
        let h = self.dx();
        let mut out = self.like(self.margin_t, self.margin_x + 2);
        for i in 0..self.nt() {
            for j in 2..self.nx() - 2 {
                let d = -self.value(i, j + 2) + 8.0 * self.value(i, j + 1)
                    - 8.0 * self.value(i, j - 1)
                    + self.value(i, j - 2);
                out.set(i, j, d / (12.0 * h));
            }
        }
        Ok(out)
    }

    fn deriv_xx(&self) -> Result<GridField, Error> {
        if self.nx() < 5 {
            return Err(Error::GridTooSmall { need: 5, got: self.nx() });
        }
        let h = self.dx();
        let mut out = self.like(self.margin_t, self.margin_x + 2);
        for i in 0..self.nt() {
            for j in 2..self.nx() - 2 {
                let d = -self.value(i, j + 2) + 16.0 * self.value(i, j + 1)
                    - 30.0 * self.value(i, j)
                    + 16.0 * self.value(i, j - 1)
                    - self.value(i, j - 2);
                out.set(i, j, d / (12.0 * h * h));
            }
        }
        Ok(out)
    }

    pub fn max_abs_interior(&self) -> f64 {
        let mut best = 0.0;
        for i in self.margin_t..self.nt() - self.margin_t {
            for j in self.margin_x..self.nx() - self.margin_x {
                best = self.value(i, j).norm().max(best);
            }
        }
        best
    }

    /// `max |self - other|` over the joint interior, relative to
    /// `max |other|` there.
    pub fn max_rel_diff_interior(&self, other: &GridField) -> f64 {
        let mt = self.margin_t.max(other.margin_t);
        let mx = self.margin_x.max(other.margin_x);
        let mut diff = 0.0;
        let mut scale = 0.0;
        for i in mt..self.nt() - mt {
            for j in mx..self.nx() - mx {
                diff = (self.value(i, j) - other.value(i, j)).norm().max(diff);
                scale = other.value(i, j).norm().max(scale);
            }
        }
        diff / scale.max(f64::MIN_POSITIVE)
    }
}

/// Stationary state `psi_n(t, x)` with energy `E_n = hbar omega (n + 1/2)`:
/// phase factor times the normalized Hermite-Gaussian profile. The
/// `(2^n n!)^{-1/2}` factor makes the family orthonormal.
pub fn psi_n(n: usize, t: f64, x: f64, p: &PhysParams) -> C64 {
    let scale = p.mass * p.omega / p.hbar;
    let norm = (p.mass * p.omega / (PI * p.hbar)).powf(0.25)
        / (2.0f64.powi(n as i32) * factorial(n)).sqrt();
    let profile = norm * (-0.5 * scale * x * x).exp() * hermite_poly(n, scale.sqrt() * x);
    (-I * p.energy(n) * t / p.hbar).exp() * profile
}

/// Glauber coherent state in the coordinate representation, label `z`
/// evolving as `z(t) = z e^{-i omega t}`.
pub fn coherent_alpha(t: f64, x: f64, z: C64, p: &PhysParams) -> C64 {
    let zt = z * (-I * p.omega * t).exp();
    let xi = (p.mass * p.omega / (2.0 * p.hbar)).sqrt() * x;
    let exponent =
        -I * (p.omega * t / 2.0) - (xi - zt) * (xi - zt) + zt * zt / 2.0 - z.norm_sqr() / 2.0;
    (p.mass * p.omega / (PI * p.hbar)).powf(0.25) * exponent.exp()
}

/// Number-basis coefficients of the coherent state:
/// `c_n = e^{-i omega t / 2} e^{-|z|^2/2} z(t)^n / sqrt(n!)`, `n <= n_max`.
/// Pair them with the time-independent profiles `psi_n(0, x)`.
pub fn fock_expansion_coherent(z: C64, t: f64, n_max: usize, p: &PhysParams) -> Vec<C64> {
    let zt = z * (-I * p.omega * t).exp();
    let pref = (-I * p.omega * t / 2.0).exp() * (-0.5 * z.norm_sqr()).exp();
    let mut out = Vec::with_capacity(n_max + 1);
    let mut zpow = C64::new(1.0, 0.0);
    for n in 0..=n_max {
        out.push(pref * zpow / factorial(n).sqrt());
        zpow *= zt;
    }
    out
}

/// Mean position and momentum of the coherent state:
/// `(sqrt(2 hbar / m omega) Re z(t), sqrt(2 m hbar omega) Im z(t))`.
pub fn mean_coherent(z: C64, t: f64, p: &PhysParams) -> (f64, f64) {
    let zt = z * (-I * p.omega * t).exp();
    (
        (2.0 * p.hbar / (p.mass * p.omega)).sqrt() * zt.re,
        (2.0 * p.mass * p.hbar * p.omega).sqrt() * zt.im,
    )
}

/// Differential operators realized with 4th-order central differences.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Operator {
    /// Position x.
    X,
    /// Momentum -i hbar d_x.
    P,
    /// Annihilation operator.
    A,
    /// Creation operator.
    ADag,
    /// Hamiltonian p^2/2m + m omega^2 x^2 / 2.
    H,
    /// Time momentum i hbar d_t.
    P0,
}

/// Apply the named operator to a sampled field; boundary rows within the
/// stencil margin are flagged invalid on the result.
pub fn apply_operator(op: Operator, field: &GridField, p: &PhysParams) -> Result<GridField, Error> {
    match op {
        Operator::X => Ok(field.map(|_, x, v| x * v)),
        Operator::P => Ok(field.deriv_x()?.scale(-I * p.hbar)),
        Operator::A => {
            let xs = (p.mass * p.omega / p.hbar).sqrt() / 2.0f64.sqrt();
            let ds = (p.hbar / (p.mass * p.omega)).sqrt() / 2.0f64.sqrt();
            let dx = field.deriv_x()?;
            Ok(field.map(|_, x, v| xs * x * v).add(&dx.scale(C64::new(ds, 0.0))))
        }
        Operator::ADag => {
            let xs = (p.mass * p.omega / p.hbar).sqrt() / 2.0f64.sqrt();
            let ds = (p.hbar / (p.mass * p.omega)).sqrt() / 2.0f64.sqrt();
            let dx = field.deriv_x()?;
            Ok(field.map(|_, x, v| xs * x * v).sub(&dx.scale(C64::new(ds, 0.0))))
        }
        Operator::H => {
            let kin = field.deriv_xx()?.scale(C64::new(-p.hbar * p.hbar / (2.0 * p.mass), 0.0));
            let pot = field.map(|_, x, v| 0.5 * p.mass * p.omega * p.omega * x * x * v);
            Ok(kin.add(&pot))
        }
        Operator::P0 => Ok(field.deriv_t()?.scale(I * p.hbar)),
    }
}

/// Schrodinger operator `i hbar d_t - H` on a sampled field.
pub fn schrodinger_apply(field: &GridField, p: &PhysParams) -> Result<GridField, Error> {
    let p0 = apply_operator(Operator::P0, field, p)?;
    let h = apply_operator(Operator::H, field, p)?;
    Ok(p0.sub(&h))
}

/// The four first-order symmetry operators of the oscillator equation,
/// `a` 1-based:
/// `X1 = (1/omega) d_t`,
/// `X2 = i [cos(omega t) p + m omega x sin(omega t)]`,
/// `X3 = i [sin(omega t) p - m omega x cos(omega t)]`,
/// `X4 = i m omega hbar` (scalar).
pub fn apply_symmetry(a: usize, field: &GridField, p: &PhysParams) -> Result<GridField, Error> {
    apply_symmetry_inner(a, field, p, 1.0)
}

/// Deliberately corrupted `X2` (its cosine runs at `freq_scale * omega`):
/// a negative control that must break the symmetry identities.
pub fn apply_symmetry_corrupted(
    field: &GridField,
    p: &PhysParams,
    freq_scale: f64,
) -> Result<GridField, Error> {
    apply_symmetry_inner(2, field, p, freq_scale)
}

fn apply_symmetry_inner(
    a: usize,
    field: &GridField,
    p: &PhysParams,
    freq_scale: f64,
) -> Result<GridField, Error> {
    let w = p.omega;
    match a {
        1 => Ok(field.deriv_t()?.scale(C64::new(1.0 / w, 0.0))),
        2 => {
            let pf = apply_operator(Operator::P, field, p)?;
            let term1 = pf.map(|t, _, v| I * (freq_scale * w * t).cos() * v);
            let term2 = field.map(|t, x, v| I * p.mass * w * x * (w * t).sin() * v);
            Ok(term1.add(&term2))
        }
        3 => {
            let pf = apply_operator(Operator::P, field, p)?;
            let term1 = pf.map(|t, _, v| I * (w * t).sin() * v);
            let term2 = field.map(|t, x, v| -I * p.mass * w * x * (w * t).cos() * v);
            Ok(term1.add(&term2))
        }
        4 => Ok(field.scale(I * p.mass * w * p.hbar)),
        _ => Err(Error::IndexOutOfRange { index: a, max: 4 }),
    }
}

fn commutator(a: usize, b: usize, field: &GridField, p: &PhysParams) -> Result<GridField, Error> {
    let ab = apply_symmetry(a, &apply_symmetry(b, field, p)?, p)?;
    let ba = apply_symmetry(b, &apply_symmetry(a, field, p)?, p)?;
    Ok(ab.sub(&ba))
}

/// Verifies the symmetry-operator structure on sampled test fields: the
/// nonzero commutators, the scalar `X4` action, commutation of each `X_a`
/// with `i hbar d_t - H` on a generic smooth field, solution preservation,
/// and a corrupted-operator negative control.
pub fn symmetry_suite(p: &PhysParams, grid: &GridSpec, tol: f64) -> Result<Report, Error> {
    let mut report = Report::new("symmetry");
    let psi0 = GridField::sample(grid, |t, x| psi_n(0, t, x, p))?;

    // [X1, X2] = -X3, [X1, X3] = X2, [X2, X3] = -X4 on the ground state
    let pairs: [(usize, usize, usize, f64); 3] = [(1, 2, 3, -1.0), (1, 3, 2, 1.0), (2, 3, 4, -1.0)];
    for (a, b, c, sign) in pairs {
        let lhs = commutator(a, b, &psi0, p)?;
        let rhs = apply_symmetry(c, &psi0, p)?.scale(C64::new(sign, 0.0));
        let scale = rhs.max_abs_interior().max(f64::MIN_POSITIVE);
        let residual = lhs.sub(&rhs);
        report.push(Check::residual(
            format!("commutator_x{a}_x{b}_matches_x{c}"),
            residual.max_abs_interior() / scale,
            tol,
        ));
    }

    // X4 multiplies by i m omega hbar
    let x4 = apply_symmetry(4, &psi0, p)?;
    let expect = psi0.scale(I * p.mass * p.omega * p.hbar);
    report.push(Check::residual("x4_scalar_action", x4.sub(&expect).max_abs_interior(), 1e-14));

    // operator identity [X_a, i hbar d_t - H] = 0 on a generic smooth field
    let t_mid = 0.5 * (grid.t_min + grid.t_max);
    let bump = GridField::sample(grid, |t, x| {
        C64::new((-0.5 * (x - 0.3) * (x - 0.3) - 0.2 * (t - t_mid) * (t - t_mid)).exp(), 0.0)
    })?;
    for a in 1..=4usize {
        let xs = apply_symmetry(a, &schrodinger_apply(&bump, p)?, p)?;
        let sx = schrodinger_apply(&apply_symmetry(a, &bump, p)?, p)?;
        let scale = xs.max_abs_interior().max(sx.max_abs_interior()).max(f64::MIN_POSITIVE);
        report.push(Check::residual(
            format!("x{a}_commutes_with_schrodinger_op"),
            xs.sub(&sx).max_abs_interior() / scale,
            tol,
        ));
    }

    // each X_a maps solutions to solutions
    for a in 1..=4usize {
        let mapped = apply_symmetry(a, &psi0, p)?;
        let res = schrodinger_apply(&mapped, p)?;
        let scale = mapped.max_abs_interior().max(f64::MIN_POSITIVE);
        report.push(Check::residual(
            format!("x{a}_maps_solutions_to_solutions"),
            res.max_abs_interior() / scale,
            tol,
        ));
    }

    // negative control: X2 with its cosine at the wrong frequency no longer
    // maps solutions to solutions
    let broken = apply_symmetry_corrupted(&psi0, p, 2.0)?;
    let res = schrodinger_apply(&broken, p)?;
    report.push(Check::at_least(
        "corrupted_x2_breaks_invariance",
        res.max_abs_interior() / broken.max_abs_interior().max(f64::MIN_POSITIVE),
        1e-2,
    ));

    Ok(report)
}
