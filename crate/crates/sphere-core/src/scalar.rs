//! Scalar fields on the sphere and directional derivatives along
//! conformal fields.

use std::sync::Arc;

use nalgebra::{SVector, Vector3};

use crate::field::ConformalField;
use crate::point::SpherePoint;

/// Geodesic step used by the symmetric-difference fallback when no analytic
/// gradient is attached.
pub const DIRECTIONAL_FD_STEP: f64 = 1e-5;

type EvalFn<const D: usize> = dyn Fn(&SpherePoint<D>) -> f64 + Send + Sync;
type GradFn<const D: usize> = dyn Fn(&SpherePoint<D>) -> SVector<f64, D> + Send + Sync;

/// A scalar field with an optional analytic tangential gradient. When the
/// gradient is absent, directional derivatives fall back to a symmetric
/// difference along geodesics.
#[derive(Clone)]
pub struct ScalarField<const D: usize> {
    eval: Arc<EvalFn<D>>,
    grad: Option<Arc<GradFn<D>>>,
}

impl<const D: usize> ScalarField<D> {
    pub fn new(eval: impl Fn(&SpherePoint<D>) -> f64 + Send + Sync + 'static) -> Self {
        Self {
            eval: Arc::new(eval),
            grad: None,
        }
    }

    pub fn with_gradient(
        eval: impl Fn(&SpherePoint<D>) -> f64 + Send + Sync + 'static,
        grad: impl Fn(&SpherePoint<D>) -> SVector<f64, D> + Send + Sync + 'static,
    ) -> Self {
        Self {
            eval: Arc::new(eval),
            grad: Some(Arc::new(grad)),
        }
    }

    pub fn eval(&self, x: &SpherePoint<D>) -> f64 {
        (self.eval)(x)
    }

    pub fn has_gradient(&self) -> bool {
        self.grad.is_some()
    }

    /// Analytic tangential gradient, if one was attached.
    pub fn gradient(&self, x: &SpherePoint<D>) -> Option<SVector<f64, D>> {
        self.grad.as_ref().map(|g| g(x))
    }
}

impl ScalarField<3> {
    /// The constant field.
    pub fn constant(c: f64) -> Self {
        Self::with_gradient(move |_| c, |_| Vector3::zeros())
    }

    /// Height function plus offset: x -> x_3 + c.
    pub fn x3_plus(c: f64) -> Self {
        Self::with_gradient(
            move |p| p.coords().z + c,
            |p| {
                let x = p.coords();
                Vector3::z() - x * x.z
            },
        )
    }

    /// Squared height: x -> x_3^2.
    pub fn x3_squared() -> Self {
        Self::with_gradient(
            |p| {
                let z = p.coords().z;
                z * z
            },
            |p| {
                let x = p.coords();
                (Vector3::z() - x * x.z) * (2.0 * x.z)
            },
        )
    }
}

/// Derivative of `h` along the conformal field `x_field` at `x`. Uses the
/// analytic gradient when present, otherwise a symmetric difference along
/// the geodesic through `x` in the direction of the field.
pub fn directional_derivative<const D: usize>(
    h: &ScalarField<D>,
    x_field: &ConformalField<D>,
    x: &SpherePoint<D>,
) -> f64 {
    let v = x_field.eval(x);
    if let Some(g) = h.gradient(x) {
        return g.dot(&v);
    }
    let speed = v.norm();
    if speed < 1e-14 {
        return 0.0;
    }
    let u = v / speed;
    let hstep = DIRECTIONAL_FD_STEP;
    let fp = h.eval(&x.geodesic(&u, hstep));
    let fm = h.eval(&x.geodesic(&u, -hstep));
    speed * (fp - fm) / (2.0 * hstep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::Vector3;

    fn pt(x: f64, y: f64, z: f64) -> SpherePoint<3> {
        SpherePoint::project(Vector3::new(x, y, z)).unwrap()
    }

    #[test]
    fn height_gradient_along_its_own_field_is_one_minus_z_squared() {
        let h = ScalarField::x3_plus(5.0);
        let x3 = ConformalField::gradient(Vector3::z());
        for p in [pt(1.0, 0.0, 0.0), pt(0.6, 0.0, 0.8), pt(-0.2, 0.5, -0.7)] {
            let z = p.coords().z;
            let d = directional_derivative(&h, &x3, &p);
            assert!((d - (1.0 - z * z)).abs() < 1e-14);
        }
    }

    #[test]
    fn constants_have_zero_derivative() {
        let h = ScalarField::constant(3.5);
        let x3 = ConformalField::gradient(Vector3::z());
        assert_eq!(directional_derivative(&h, &x3, &pt(0.1, 0.9, 0.3)), 0.0);
    }

    #[test]
    fn axisymmetric_height_ignores_z_rotations() {
        let h = ScalarField::x3_plus(0.0);
        let rz =
            ConformalField::new(Vector3::zeros(), crate::field::rotation_generator(2)).unwrap();
        let d = directional_derivative(&h, &rz, &pt(0.6, -0.3, 0.4));
        assert!(d.abs() < 1e-14);
    }

    #[test]
    fn fd_fallback_matches_analytic_gradient() {
        let with_grad = ScalarField::x3_squared();
        let without = ScalarField::new(|p: &SpherePoint<3>| {
            let z = p.coords().z;
            z * z
        });
        let x1 = ConformalField::gradient(Vector3::x());
        for p in [pt(0.7, 0.1, 0.7), pt(-0.4, 0.8, 0.45)] {
            let a = directional_derivative(&with_grad, &x1, &p);
            let b = directional_derivative(&without, &x1, &p);
            assert!((a - b).abs() < 1e-9, "{a} vs {b}");
        }
    }
}
