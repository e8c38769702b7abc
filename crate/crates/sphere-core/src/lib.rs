//! Round-sphere geometry for conformal-obstruction checks: sphere points,
//! the conformal algebra, quadrature rules with stated exactness, scalar
//! fields, the obstruction residual and the certificate search.
//!
//! Conventions: S^{D-1} sits in R^D with the induced round metric; conformal
//! fields are X(x) = a - (a.x) x + A x with A antisymmetric, conformal factor
//! beta(x) = -(a.x) and div X = (D-1) beta.

pub mod certify;
pub mod error;
pub mod field;
pub mod obstruction;
pub mod point;
pub mod quad;
pub mod scalar;

pub use certify::{
    certify_search, evaluate_direction, Certificate, CertifyOptions, CertifyOutcome, CERTIFY_TOL,
};
pub use error::GeomError;
pub use field::{basis_combination, conformal_basis, rotation_generator, ConformalField};
pub use obstruction::{obstruction_residual, ResidualReport};
pub use point::SpherePoint;
pub use quad::{circle_rule, gauss_legendre, sphere_rule, QuadratureNode, QuadratureRule};
pub use scalar::{directional_derivative, ScalarField, DIRECTIONAL_FD_STEP};
