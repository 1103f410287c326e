//! The oscillatory Lie algebra, its Poisson-Lie structure and Casimir
//! functions, and the simply connected group in canonical coordinates of the
//! second kind.
//!
//! The algebra is four-dimensional with the nonzero brackets
//! `[e1,e2] = -e3`, `[e1,e3] = e2`, `[e2,e3] = -e4`, and `e4` central. Group
//! elements are parametrized as `g(x) = exp(x4 e4) exp(x3 e3) exp(x2 e2)
//! exp(x1 e1)` with unbounded real coordinates (`x1` is not reduced mod 2pi,
//! so composition is globally smooth).

use num_complex::Complex64 as C64;
#[allow(unused_imports)] // no_std builds resolve float math through this trait (libm)
use num_traits::Float;
use crate::error::Error;

/// Dimension of the algebra and of the coordinate chart.
pub const DIM: usize = 4;

/// Structure constants `C_ab^c` with 0-based indices: `[e_a, e_b] = C_ab^c e_c`.
pub fn structure_constant(a: usize, b: usize, c: usize) -> f64 {
    match (a, b, c) {
        (0, 1, 2) => -1.0,
        (1, 0, 2) => 1.0,
        (0, 2, 1) => 1.0,
        (2, 0, 1) => -1.0,
        (1, 2, 3) => -1.0,
        (2, 1, 3) => 1.0,
        _ => 0.0,
    }
}

/// Element of the (complexified) oscillatory algebra in the basis `e1..e4`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AlgebraVector {
    pub components: [C64; DIM],
}

impl AlgebraVector {
    pub fn new(components: [C64; DIM]) -> Self {
        AlgebraVector { components }
    }

    pub fn from_real(components: [f64; DIM]) -> Self {
        AlgebraVector {
            components: components.map(|c| C64::new(c, 0.0)),
        }
    }

    pub fn zero() -> Self {
        Self::from_real([0.0; DIM])
    }

    /// Basis element `e_a`, `a` in `1..=4`.
    pub fn basis(a: usize) -> Self {
        assert!((1..=DIM).contains(&a), "basis index must be 1..=4");
        let mut c = [C64::new(0.0, 0.0); DIM];
        c[a - 1] = C64::new(1.0, 0.0);
        AlgebraVector { components: c }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut c = self.components;
        for (a, b) in c.iter_mut().zip(other.components.iter()) {
            *a += *b;
        }
        AlgebraVector { components: c }
    }

    pub fn scale(&self, s: C64) -> Self {
        AlgebraVector {
            components: self.components.map(|c| c * s),
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.components.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }
}

/// Lie bracket `[X, Y]` expanded over the structure constants.
pub fn bracket(x: &AlgebraVector, y: &AlgebraVector) -> AlgebraVector {
    let mut out = [C64::new(0.0, 0.0); DIM];
    for a in 0..DIM {
        for b in 0..DIM {
            let xy = x.components[a] * y.components[b];
            if xy.norm_sqr() == 0.0 {
                continue;
            }
            for c in 0..DIM {
                let s = structure_constant(a, b, c);
                if s != 0.0 {
                    out[c] += s * xy;
                }
            }
        }
    }
    AlgebraVector { components: out }
}

/// Point of the dual space in the dual basis `e^1..e^4`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Covector {
    pub components: [f64; DIM],
}

impl Covector {
    pub fn new(components: [f64; DIM]) -> Self {
        Covector { components }
    }
}

/// Poisson-Lie bracket of the coordinate functions `f_a, f_b` evaluated at
/// `f`: returns `C_ab^c f_c`. Indices are 1-based.
pub fn poisson_bracket_coords(a: usize, b: usize, f: &Covector) -> Result<f64, Error> {
    if !(1..=DIM).contains(&a) {
        return Err(Error::IndexOutOfRange { index: a, max: DIM });
    }
    if !(1..=DIM).contains(&b) {
        return Err(Error::IndexOutOfRange { index: b, max: DIM });
    }
    let mut acc = 0.0;
    for c in 0..DIM {
        acc += structure_constant(a - 1, b - 1, c) * f.components[c];
    }
    Ok(acc)
}

/// The two Casimir functions `(K1, K2) = (2 f1 f4 + f2^2 + f3^2, f4)`.
pub fn casimirs(f: &Covector) -> (f64, f64) {
    let [f1, f2, f3, f4] = f.components;
    (2.0 * f1 * f4 + f2 * f2 + f3 * f3, f4)
}

/// Casimirs on a complexified covector, used by the canonical-embedding
/// checks where the orbit chart is holomorphic.
pub fn casimirs_complex(f: &[C64; DIM]) -> (C64, C64) {
    let [f1, f2, f3, f4] = *f;
    (2.0 * f1 * f4 + f2 * f2 + f3 * f3, f4)
}

/// Group element in canonical coordinates of the second kind.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GroupElement {
    pub x: [f64; DIM],
}

impl GroupElement {
    pub fn new(x1: f64, x2: f64, x3: f64, x4: f64) -> Self {
        GroupElement { x: [x1, x2, x3, x4] }
    }

    pub fn identity() -> Self {
        GroupElement { x: [0.0; DIM] }
    }

    /// Group product in canonical coordinates.
    ///
    /// The quadratic `x4` term couples `x2` to the rotated translation part;
    /// associativity (and agreement with the matrix-model and representation
    /// oracles) pins its coefficients.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        let [x1, x2, x3, x4] = self.x;
        let [y1, y2, y3, y4] = other.x;
        let (s, c) = x1.sin_cos();
        let z1 = x1 + y1;
        let z2 = x2 + y2 * c + y3 * s;
        let z3 = x3 + y3 * c - y2 * s;
        let z4 = x4
            + y4
            + x2 * (y2 * s - y3 * c)
            + y2 * y3 * s * s
            + 0.25 * (y2 * y2 - y3 * y3) * (2.0 * x1).sin();
        GroupElement::new(z1, z2, z3, z4)
    }

    /// Two-sided inverse in closed form.
    pub fn inverse(&self) -> GroupElement {
        let [x1, x2, x3, x4] = self.x;
        let (s, c) = x1.sin_cos();
        let y1 = -x1;
        let y2 = -x2 * c + x3 * s;
        let y3 = -x2 * s - x3 * c;
        let y4 = -(x4
            + x2 * (y2 * s - y3 * c)
            + y2 * y3 * s * s
            + 0.25 * (y2 * y2 - y3 * y3) * (2.0 * x1).sin());
        GroupElement::new(y1, y2, y3, y4)
    }

    pub fn max_abs(&self) -> f64 {
        self.x.iter().fold(0.0, |m, v| v.abs().max(m))
    }

    pub fn max_abs_diff(&self, other: &GroupElement) -> f64 {
        self.x
            .iter()
            .zip(other.x.iter())
            .fold(0.0, |m, (a, b)| (a - b).abs().max(m))
    }
}

/// Left-invariant vector fields at `g`: row `a` holds the coefficients of
/// `xi_a` in the coordinate derivatives `d1..d4`.
pub fn left_fields(g: &GroupElement) -> [[f64; DIM]; DIM] {
    let [x1, x2, _, _] = g.x;
    let (s, c) = x1.sin_cos();
    [
        [1.0, 0.0, 0.0, 0.0],
        [0.0, c, -s, x2 * s],
        [0.0, s, c, -x2 * c],
        [0.0, 0.0, 0.0, 1.0],
    ]
}

/// Right-invariant vector fields at `g`, derived as
/// `eta_a(g) = -d/dt|_0 exp(t e_a) g`; row `a` holds the coefficients of
/// `eta_a`. In particular `eta_3 = -d3`.
pub fn right_fields(g: &GroupElement) -> [[f64; DIM]; DIM] {
    let [_, x2, x3, _] = g.x;
    [
        [-1.0, -x3, x2, 0.5 * (x3 * x3 - x2 * x2)],
        [0.0, -1.0, 0.0, x3],
        [0.0, 0.0, -1.0, 0.0],
        [0.0, 0.0, 0.0, -1.0],
    ]
}

/// Orbit label `(j1, j2)` selecting the coadjoint orbit through
/// `(j1, 0, 0, j2)`. Representation-space constructions require `j2 < 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OrbitLabel {
    pub j1: f64,
    pub j2: f64,
}

impl OrbitLabel {
    pub fn new(j1: f64, j2: f64) -> Self {
        OrbitLabel { j1, j2 }
    }
}

/// Canonical transition from Darboux coordinates `(p, q)` on the orbit to
/// dual-space coordinates:
/// `f = (i p q + j1, -i p/2 + j2 q, p/2 - i j2 q, j2)`.
/// `K1` of the result is `2 j1 j2` identically; `K2` is `j2`.
pub fn canonical_embedding(p: C64, q: C64, lambda: &OrbitLabel) -> [C64; DIM] {
    let i = C64::new(0.0, 1.0);
    [
        i * p * q + lambda.j1,
        -i * p / 2.0 + lambda.j2 * q,
        p / 2.0 - i * lambda.j2 * q,
        C64::new(lambda.j2, 0.0),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::{FRAC_PI_2, PI};

    fn ev(v: &AlgebraVector) -> [f64; 4] {
        v.components.map(|c| c.re)
    }

    #[test]
    fn bracket_basis_relations() {
        let e: alloc::vec::Vec<AlgebraVector> = (1..=4).map(AlgebraVector::basis).collect();
        assert_eq!(ev(&bracket(&e[0], &e[1])), [0.0, 0.0, -1.0, 0.0]);
        assert_eq!(ev(&bracket(&e[0], &e[2])), [0.0, 1.0, 0.0, 0.0]);
        assert_eq!(ev(&bracket(&e[1], &e[2])), [0.0, 0.0, 0.0, -1.0]);
        for a in 0..4 {
            assert_eq!(ev(&bracket(&e[a], &e[3])), [0.0; 4]);
            assert_eq!(ev(&bracket(&e[a], &e[a])), [0.0; 4]);
        }
        // linearity: [e1, e2 + e3] = e2 - e3
        let y = e[1].add(&e[2]);
        assert_eq!(ev(&bracket(&e[0], &y)), [0.0, 1.0, -1.0, 0.0]);
    }

    #[test]
    fn jacobi_identity_exact() {
        let e: alloc::vec::Vec<AlgebraVector> = (1..=4).map(AlgebraVector::basis).collect();
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    let j = bracket(&e[a], &bracket(&e[b], &e[c]))
                        .add(&bracket(&e[b], &bracket(&e[c], &e[a])))
                        .add(&bracket(&e[c], &bracket(&e[a], &e[b])));
                    assert_eq!(j.max_abs(), 0.0, "jacobi failed on ({a},{b},{c})");
                }
            }
        }
    }

    #[test]
    fn poisson_bracket_examples() {
        let f = Covector::new([0.1, 0.2, 0.3, 0.4]);
        assert_eq!(poisson_bracket_coords(2, 3, &f).unwrap(), -0.4);
        assert_eq!(poisson_bracket_coords(1, 1, &f).unwrap(), 0.0);
        let g = Covector::new([0.0, 0.0, 5.0, 0.0]);
        assert_eq!(poisson_bracket_coords(1, 2, &g).unwrap(), -5.0);
        assert!(poisson_bracket_coords(0, 2, &f).is_err());
        assert!(poisson_bracket_coords(1, 5, &f).is_err());
    }

    #[test]
    fn casimir_values() {
        assert_eq!(casimirs(&Covector::new([0.7, 0.0, 0.0, -1.3])), (2.0 * 0.7 * -1.3, -1.3));
        assert_eq!(casimirs(&Covector::new([0.0; 4])), (0.0, 0.0));
        assert_eq!(casimirs(&Covector::new([0.0, 1.0, 1.0, 0.0])), (2.0, 0.0));
    }

    #[test]
    fn compose_identity_and_example() {
        let g = GroupElement::new(0.3, -1.2, 0.8, 2.1);
        let e = GroupElement::identity();
        assert_eq!(g.compose(&e), g);
        assert_eq!(e.compose(&g), g);

        let a = GroupElement::new(FRAC_PI_2, 1.0, 0.0, 0.0);
        let b = GroupElement::new(FRAC_PI_2, 2.0, 3.0, 0.0);
        let ab = a.compose(&b);
        let expect = GroupElement::new(PI, 4.0, -2.0, 8.0);
        assert!(ab.max_abs_diff(&expect) < 1e-14, "got {:?}", ab);
    }

    #[test]
    fn inverse_examples() {
        let e = GroupElement::identity();
        assert_eq!(e.inverse(), e);

        let g = GroupElement::new(FRAC_PI_2, 1.0, 0.0, 0.0);
        let gi = g.inverse();
        let expect = GroupElement::new(-FRAC_PI_2, 0.0, -1.0, 0.0);
        assert!(gi.max_abs_diff(&expect) < 1e-15);
        assert!(g.compose(&gi).max_abs() < 1e-15);
        assert!(gi.compose(&g).max_abs() < 1e-15);
    }

    #[test]
    fn left_fields_substitutions() {
        let id = left_fields(&GroupElement::identity());
        for a in 0..4 {
            for mu in 0..4 {
                assert_eq!(id[a][mu], if a == mu { 1.0 } else { 0.0 });
            }
        }
        let c = 1.7;
        let g = GroupElement::new(FRAC_PI_2, c, 0.0, 0.0);
        let xi2 = left_fields(&g)[1];
        assert!((xi2[0]).abs() < 1e-15);
        assert!((xi2[1]).abs() < 1e-15);
        assert!((xi2[2] + 1.0).abs() < 1e-15);
        assert!((xi2[3] - c).abs() < 1e-15);
    }

    #[test]
    fn right_fields_substitutions() {
        let g = GroupElement::new(0.0, 0.0, 2.0, 0.0);
        let eta2 = right_fields(&g)[1];
        assert_eq!(eta2, [0.0, -1.0, 0.0, 2.0]);
        // at identity every eta_a is -d_a
        let id = right_fields(&GroupElement::identity());
        for a in 0..4 {
            for mu in 0..4 {
                assert_eq!(id[a][mu], if a == mu { -1.0 } else { 0.0 });
            }
        }
    }

    #[test]
    fn canonical_embedding_at_origin_and_casimir() {
        let lam = OrbitLabel::new(0.8, -1.7);
        let f0 = canonical_embedding(C64::new(0.0, 0.0), C64::new(0.0, 0.0), &lam);
        assert_eq!(f0[0], C64::new(0.8, 0.0));
        assert_eq!(f0[1], C64::new(0.0, 0.0));
        assert_eq!(f0[2], C64::new(0.0, 0.0));
        assert_eq!(f0[3], C64::new(-1.7, 0.0));

        let p = C64::new(0.4, -1.1);
        let q = C64::new(-0.9, 0.35);
        let f = canonical_embedding(p, q, &lam);
        let (k1, k2) = casimirs_complex(&f);
        assert!((k1 - 2.0 * lam.j1 * lam.j2).norm() < 1e-13);
        assert!((k2 - lam.j2).norm() == 0.0);
    }
}
