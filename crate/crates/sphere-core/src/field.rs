//! Conformal vector fields on the round sphere.
//!
//! Every conformal field on S^{D-1} decomposes as X(x) = a - (a.x) x + A x
//! with a in R^D (gradient part) and A antisymmetric (rotation part). The
//! conformal factor is beta(x) = -(a.x), so div X = (D-1) beta and
//! L_X g = 2 beta g.

use nalgebra::{SMatrix, SVector};

use crate::error::GeomError;
use crate::point::SpherePoint;

const ANTISYMMETRY_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConformalField<const D: usize> {
    grad: SVector<f64, D>,
    rot: SMatrix<f64, D, D>,
}

impl<const D: usize> ConformalField<D> {
    /// Builds a field from its gradient part `a` and rotation part `rot`.
    /// The rotation part must be antisymmetric; it is stored skew-symmetrized
    /// so downstream arithmetic cannot drift.
    pub fn new(grad: SVector<f64, D>, rot: SMatrix<f64, D, D>) -> Result<Self, GeomError> {
        let defect = (rot + rot.transpose()).abs().max();
        if defect > ANTISYMMETRY_TOL {
            return Err(GeomError::NotAntisymmetric { max_defect: defect });
        }
        Ok(Self {
            grad,
            rot: (rot - rot.transpose()) * 0.5,
        })
    }

    /// Gradient field of the linear height function x -> a.x.
    pub fn gradient(a: SVector<f64, D>) -> Self {
        Self {
            grad: a,
            rot: SMatrix::zeros(),
        }
    }

    pub fn zero() -> Self {
        Self {
            grad: SVector::zeros(),
            rot: SMatrix::zeros(),
        }
    }

    pub fn grad_part(&self) -> SVector<f64, D> {
        self.grad
    }

    pub fn rot_part(&self) -> SMatrix<f64, D, D> {
        self.rot
    }

    /// X(x) = a - (a.x) x + A x. Always tangent to the sphere.
    pub fn eval(&self, x: &SpherePoint<D>) -> SVector<f64, D> {
        let c = x.coords();
        self.grad - c * self.grad.dot(&c) + self.rot * c
    }

    /// Conformal factor beta(x) = -(a.x); div X = (D-1) beta.
    pub fn beta(&self, x: &SpherePoint<D>) -> f64 {
        -self.grad.dot(&x.coords())
    }

    /// Pullback of the field by the ambient rotation `r`, i.e. the field
    /// x -> r^T X(r x). Conjugation keeps the conformal class.
    pub fn conjugate(&self, r: &SMatrix<f64, D, D>) -> Result<Self, GeomError> {
        Self::new(r.transpose() * self.grad, r.transpose() * self.rot * r)
    }
}

impl<const D: usize> std::ops::Add for ConformalField<D> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self {
            grad: self.grad + rhs.grad,
            rot: self.rot + rhs.rot,
        }
    }
}

impl<const D: usize> std::ops::Mul<f64> for ConformalField<D> {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        Self {
            grad: self.grad * s,
            rot: self.rot * s,
        }
    }
}

/// Rotation generator about coordinate axis `k` in R^3: x -> e_k x x.
pub fn rotation_generator(k: usize) -> SMatrix<f64, 3, 3> {
    let mut a = SMatrix::<f64, 3, 3>::zeros();
    let (i, j) = match k {
        0 => (1, 2),
        1 => (2, 0),
        2 => (0, 1),
        _ => panic!("axis index out of range"),
    };
    a[(j, i)] = 1.0;
    a[(i, j)] = -1.0;
    a
}

/// Basis of the 6-dimensional conformal algebra of S^2: the three gradient
/// fields grad x_1, grad x_2, grad x_3 followed by the three rotations about
/// the coordinate axes.
pub fn conformal_basis() -> [ConformalField<3>; 6] {
    let mut out = [ConformalField::zero(); 6];
    for i in 0..3 {
        let mut a = SVector::<f64, 3>::zeros();
        a[i] = 1.0;
        out[i] = ConformalField::gradient(a);
    }
    for k in 0..3 {
        out[3 + k] = ConformalField::new(SVector::zeros(), rotation_generator(k)).unwrap();
    }
    out
}

/// Linear combination sum_i c_i B_i of the standard basis.
pub fn basis_combination(c: &[f64; 6]) -> ConformalField<3> {
    let basis = conformal_basis();
    let mut x = ConformalField::zero();
    for i in 0..6 {
        x = x + basis[i] * c[i];
    }
    x
}
