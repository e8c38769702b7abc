//! Certificate search over the conformal algebra of S^2.
//!
//! A certificate is a coefficient vector c on the 6-dimensional basis whose
//! field X(c) satisfies d_{X(c)} H >= 0 at every quadrature node with a
//! strictly positive mean. Such a direction witnesses (up to discretization)
//! that H cannot be the mean curvature of any conformal immersion of the
//! round sphere, by the sign obstruction on integral (d_X H) dnu.

use serde::Serialize;

use crate::error::GeomError;
use crate::field::{basis_combination, conformal_basis};
use crate::quad::QuadratureRule;
use crate::scalar::{directional_derivative, ScalarField};

/// Default node tolerance for analytic fields.
pub const CERTIFY_TOL: f64 = 1e-9;

#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    /// Unit coefficient vector on the basis (grad x1, grad x2, grad x3,
    /// rotations about e1, e2, e3).
    pub coefficients: [f64; 6],
    /// Minimum of d_{X(c)} H over the quadrature nodes.
    pub min_value: f64,
    /// Integral of d_{X(c)} H dnu over the sphere.
    pub integral: f64,
    /// `integral` per unit measure (divided by 4 pi).
    pub mean_value: f64,
    pub tol: f64,
    pub node_count: usize,
    pub degree: u32,
}

/// Search outcome. `NoneFound` proves nothing: it only records the best
/// direction the search reached.
#[derive(Clone, Debug, Serialize)]
pub enum CertifyOutcome {
    Certificate(Certificate),
    NoneFound {
        best_coefficients: [f64; 6],
        best_min: f64,
    },
}

#[derive(Clone, Debug)]
pub struct CertifyOptions {
    pub tol: f64,
    /// Coarse pass size over the unit coefficient sphere.
    pub directions: usize,
    /// Coordinate-descent step-halving rounds.
    pub refine_rounds: usize,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        Self {
            tol: CERTIFY_TOL,
            directions: 1024,
            refine_rounds: 60,
        }
    }
}

/// Per-node derivatives against the whole basis, plus quadrature weights.
/// score(c) = min_q g_q . c is what the search maximizes; the integral is
/// linear in c so a single moment vector captures it.
struct SearchTable {
    per_node: Vec<[f64; 6]>,
    moments: [f64; 6],
    node_count: usize,
    degree: u32,
}

impl SearchTable {
    fn build(h: &ScalarField<3>, rule: &QuadratureRule<3>) -> Result<Self, GeomError> {
        let basis = conformal_basis();
        let mut per_node = Vec::with_capacity(rule.node_count());
        let mut moments = [0.0; 6];
        for node in rule.nodes() {
            let mut row = [0.0; 6];
            for (i, b) in basis.iter().enumerate() {
                let d = directional_derivative(h, b, &node.point);
                if !d.is_finite() {
                    return Err(GeomError::NonFinite {
                        context: "certificate search derivative",
                    });
                }
                row[i] = d;
                moments[i] += node.weight * d;
            }
            per_node.push(row);
        }
        Ok(Self {
            per_node,
            moments,
            node_count: rule.node_count(),
            degree: rule.degree(),
        })
    }

    fn score(&self, c: &[f64; 6]) -> f64 {
        let mut min = f64::INFINITY;
        for row in &self.per_node {
            let mut v = 0.0;
            for i in 0..6 {
                v += row[i] * c[i];
            }
            if v < min {
                min = v;
            }
        }
        min
    }

    fn integral(&self, c: &[f64; 6]) -> f64 {
        (0..6).map(|i| self.moments[i] * c[i]).sum()
    }
}

fn normalize(c: &mut [f64; 6]) -> bool {
    let n = c.iter().map(|v| v * v).sum::<f64>().sqrt();
    if n < 1e-300 {
        return false;
    }
    for v in c.iter_mut() {
        *v /= n;
    }
    true
}

/// Deterministic quasi-uniform directions on the unit sphere in R^6:
/// a Kronecker sequence driven by the generalized golden ratio, pushed to
/// directions through Box-Muller pairs.
fn fibonacci_directions(count: usize) -> Vec<[f64; 6]> {
    // Unique real root > 1 of x^7 = x + 1.
    let mut phi: f64 = 1.1;
    for _ in 0..64 {
        phi = (phi + 1.0).powf(1.0 / 7.0);
    }
    let alphas: Vec<f64> = (1..=6).map(|i| phi.powi(-i).fract()).collect();
    let mut out = Vec::with_capacity(count);
    for k in 1..=count {
        let mut u = [0.0; 6];
        for i in 0..6 {
            u[i] = (0.5 + k as f64 * alphas[i]).fract().clamp(1e-12, 1.0);
        }
        let mut c = [0.0; 6];
        for pair in 0..3 {
            let r = (-2.0 * u[2 * pair].ln()).sqrt();
            let a = 2.0 * std::f64::consts::PI * u[2 * pair + 1];
            c[2 * pair] = r * a.cos();
            c[2 * pair + 1] = r * a.sin();
        }
        if normalize(&mut c) {
            out.push(c);
        }
    }
    out
}

/// Searches the unit coefficient sphere for a certificate direction.
/// Deterministic: coarse Fibonacci-type scan, coordinate-descent refinement,
/// then a sparsification pass that zeroes coefficients when doing so does not
/// hurt the node minimum (so axis-aligned optima come out exact).
pub fn certify_search(
    h: &ScalarField<3>,
    rule: &QuadratureRule<3>,
    opts: &CertifyOptions,
) -> Result<CertifyOutcome, GeomError> {
    let table = SearchTable::build(h, rule)?;

    let mut best = [0.0; 6];
    best[0] = 1.0;
    let mut best_score = table.score(&best);
    let consider = |c: [f64; 6], best: &mut [f64; 6], best_score: &mut f64| {
        let s = table.score(&c);
        if s > *best_score {
            *best = c;
            *best_score = s;
        }
    };

    // Pure basis directions first, both signs.
    for i in 0..6 {
        for sign in [1.0, -1.0] {
            let mut c = [0.0; 6];
            c[i] = sign;
            consider(c, &mut best, &mut best_score);
        }
    }
    for c in fibonacci_directions(opts.directions.max(2)) {
        consider(c, &mut best, &mut best_score);
    }

    // Coordinate descent on the sphere with step halving.
    let mut step = 0.25;
    for _ in 0..opts.refine_rounds {
        let mut improved = false;
        for i in 0..6 {
            for sign in [1.0, -1.0] {
                let mut c = best;
                c[i] += sign * step;
                if !normalize(&mut c) {
                    continue;
                }
                let s = table.score(&c);
                if s > best_score {
                    best = c;
                    best_score = s;
                    improved = true;
                }
            }
        }
        if !improved {
            step *= 0.5;
            if step < 1e-10 {
                break;
            }
        }
    }

    // Sparsify: drop near-zero coefficients when the minimum does not suffer.
    for _ in 0..2 {
        for i in 0..6 {
            if best[i] != 0.0 && best[i].abs() < 1e-3 {
                let mut c = best;
                c[i] = 0.0;
                if normalize(&mut c) {
                    let s = table.score(&c);
                    if s >= best_score {
                        best = c;
                        best_score = s;
                    }
                }
            }
        }
    }

    let integral = table.integral(&best);
    if best_score >= -opts.tol && integral >= 10.0 * opts.tol {
        Ok(CertifyOutcome::Certificate(Certificate {
            coefficients: best,
            min_value: best_score,
            integral,
            mean_value: integral / (4.0 * std::f64::consts::PI),
            tol: opts.tol,
            node_count: table.node_count,
            degree: table.degree,
        }))
    } else {
        Ok(CertifyOutcome::NoneFound {
            best_coefficients: best,
            best_min: best_score,
        })
    }
}

/// Re-evaluates a fixed direction on a (typically denser) rule; used to
/// cross-check certificates for soundness.
pub fn evaluate_direction(
    h: &ScalarField<3>,
    rule: &QuadratureRule<3>,
    coefficients: &[f64; 6],
) -> Result<(f64, f64), GeomError> {
    let x_field = basis_combination(coefficients);
    let mut min = f64::INFINITY;
    let mut integral = 0.0;
    for node in rule.nodes() {
        let d = directional_derivative(h, &x_field, &node.point);
        if !d.is_finite() {
            return Err(GeomError::NonFinite {
                context: "certificate re-evaluation",
            });
        }
        min = min.min(d);
        integral += node.weight * d;
    }
    Ok((min, integral))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::sphere_rule;
    use std::f64::consts::PI;

    #[test]
    fn certifies_shifted_height_along_its_gradient_axis() {
        let h = ScalarField::x3_plus(5.0);
        let rule = sphere_rule(64).unwrap();
        let out = certify_search(&h, &rule, &CertifyOptions::default()).unwrap();
        let cert = match out {
            CertifyOutcome::Certificate(c) => c,
            CertifyOutcome::NoneFound { best_min, .. } => {
                panic!("expected certificate, best min {best_min}")
            }
        };
        // The optimum is the grad x3 axis exactly.
        assert!((cert.coefficients[2] - 1.0).abs() < 1e-9, "{:?}", cert.coefficients);
        assert!(cert.min_value >= 0.0);
        assert!((cert.integral - 8.0 * PI / 3.0).abs() < 1e-9);
        assert!((cert.mean_value - 2.0 / (3.0)).abs() < 1e-9);
    }

    #[test]
    fn constant_fields_yield_none_found() {
        let h = ScalarField::constant(2.0);
        let rule = sphere_rule(32).unwrap();
        match certify_search(&h, &rule, &CertifyOptions::default()).unwrap() {
            CertifyOutcome::NoneFound { best_min, .. } => assert_eq!(best_min, 0.0),
            CertifyOutcome::Certificate(c) => panic!("unexpected certificate {c:?}"),
        }
    }

    #[test]
    fn even_height_squared_yields_none_found() {
        // x3^2 is axisymmetric: the z-rotation direction achieves min 0 but
        // zero mean, and every other direction changes sign. No certificate.
        let h = ScalarField::x3_squared();
        let rule = sphere_rule(32).unwrap();
        match certify_search(&h, &rule, &CertifyOptions::default()).unwrap() {
            CertifyOutcome::NoneFound { best_min, .. } => assert!(best_min <= CERTIFY_TOL),
            CertifyOutcome::Certificate(c) => panic!("unexpected certificate {c:?}"),
        }
    }

    #[test]
    fn fibonacci_directions_are_unit_and_spread() {
        let dirs = fibonacci_directions(512);
        assert_eq!(dirs.len(), 512);
        for c in &dirs {
            let n: f64 = c.iter().map(|v| v * v).sum::<f64>();
            assert!((n - 1.0).abs() < 1e-12);
        }
        // Mean should be near the origin for a spread set.
        let mut mean = [0.0; 6];
        for c in &dirs {
            for i in 0..6 {
                mean[i] += c[i] / 512.0;
            }
        }
        assert!(mean.iter().map(|v| v.abs()).fold(0.0, f64::max) < 0.15);
    }
}
