//! Points on the unit sphere S^{D-1} in R^D and geodesic helpers.

use nalgebra::SVector;

use crate::error::GeomError;

/// How far a point's norm may stray from 1 before construction fails.
pub const UNIT_NORM_TOL: f64 = 1e-12;

/// A point on the unit sphere in ambient dimension `D` (so S^1 has D = 2,
/// S^2 has D = 3). The coordinate vector always has unit norm.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpherePoint<const D: usize> {
    coords: SVector<f64, D>,
}

impl<const D: usize> SpherePoint<D> {
    pub fn new(coords: SVector<f64, D>) -> Result<Self, GeomError> {
        let norm = coords.norm();
        if (norm - 1.0).abs() > UNIT_NORM_TOL {
            return Err(GeomError::OffSphere { norm });
        }
        Ok(Self { coords: coords / norm })
    }

    /// Radial projection of an arbitrary nonzero vector onto the sphere.
    pub fn project(v: SVector<f64, D>) -> Result<Self, GeomError> {
        let norm = v.norm();
        if !(norm > 0.0) || !norm.is_finite() {
            return Err(GeomError::ZeroVector);
        }
        Ok(Self { coords: v / norm })
    }

    pub fn coords(&self) -> SVector<f64, D> {
        self.coords
    }

    /// Intrinsic dimension of the sphere this point lives on.
    pub fn sphere_dim(&self) -> usize {
        D - 1
    }

    /// Walks the unit-speed geodesic from `self` in the unit tangent
    /// direction `u` for arc length `t`.
    pub fn geodesic(&self, u: &SVector<f64, D>, t: f64) -> Self {
        let v = self.coords * t.cos() + u * t.sin();
        Self { coords: v / v.norm() }
    }

    /// Projects an ambient vector onto the tangent space at `self`.
    pub fn tangent_part(&self, v: &SVector<f64, D>) -> SVector<f64, D> {
        v - self.coords * self.coords.dot(v)
    }
}

impl SpherePoint<3> {
    /// An orthonormal basis of the tangent plane at `self`.
    pub fn tangent_basis(&self) -> [SVector<f64, 3>; 2] {
        let x = self.coords;
        // Seed with the coordinate axis least aligned with x.
        let mut k = 0;
        for i in 1..3 {
            if x[i].abs() < x[k].abs() {
                k = i;
            }
        }
        let mut e = SVector::<f64, 3>::zeros();
        e[k] = 1.0;
        let u = (e - x * x[k]).normalize();
        let v = x.cross(&u);
        [u, v]
    }
}
