//! The obstruction residual: a quadrature approximation of
//! integral of (d_X H) w over the sphere, with a normalizer for scale.
//!
//! For H the mean curvature of a conformal immersion and w its area density,
//! the integral vanishes for every conformal field X; a residual that stays
//! large under quadrature refinement witnesses that no such immersion exists.

use serde::Serialize;

use crate::error::GeomError;
use crate::field::ConformalField;
use crate::quad::QuadratureRule;
use crate::scalar::{directional_derivative, ScalarField};

#[derive(Clone, Debug, Serialize)]
pub struct ResidualReport {
    /// Signed value of the integral of (d_X H) w.
    pub value: f64,
    /// Integral of |d_X H| w, the natural scale for `value`.
    pub normalizer: f64,
    /// |value| / normalizer, or 0 when the normalizer vanishes identically.
    pub relative: f64,
    /// True when the integrand is identically zero on the nodes.
    pub exact_zero: bool,
    pub node_count: usize,
    pub degree: u32,
}

/// Evaluates the residual of integral (d_X H) w dnu on the given rule.
/// The density must be strictly positive at every node.
pub fn obstruction_residual<const D: usize>(
    h: &ScalarField<D>,
    w: &ScalarField<D>,
    x_field: &ConformalField<D>,
    rule: &QuadratureRule<D>,
) -> Result<ResidualReport, GeomError> {
    let mut value = 0.0;
    let mut normalizer = 0.0;
    for (idx, node) in rule.nodes().iter().enumerate() {
        let dh = directional_derivative(h, x_field, &node.point);
        let wv = w.eval(&node.point);
        if !wv.is_finite() || !dh.is_finite() {
            return Err(GeomError::NonFinite {
                context: "obstruction integrand",
            });
        }
        if wv <= 0.0 {
            return Err(GeomError::NonPositiveDensity {
                value: wv,
                node: idx,
            });
        }
        value += node.weight * dh * wv;
        normalizer += node.weight * dh.abs() * wv;
    }
    let exact_zero = normalizer == 0.0;
    let relative = if exact_zero {
        0.0
    } else {
        value.abs() / normalizer
    };
    if !relative.is_finite() {
        return Err(GeomError::NonFinite {
            context: "obstruction residual",
        });
    }
    Ok(ResidualReport {
        value,
        normalizer,
        relative,
        exact_zero,
        node_count: rule.node_count(),
        degree: rule.degree(),
    })
}
