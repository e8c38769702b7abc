//! Quadrature rules on S^1 and S^2 with stated polynomial exactness.
//!
//! S^2 rules are a product of Gauss-Legendre in z = cos(theta) and a uniform
//! trapezoid in the azimuth; S^1 rules are the uniform trapezoid. Weights are
//! strictly positive and sum to the sphere area (4 pi and 2 pi respectively).

use crate::error::GeomError;
use crate::point::SpherePoint;
use nalgebra::SVector;

/// Hard cap keeping rule construction O(degree^2) nodes at worst.
pub const MAX_DEGREE: u32 = 4096;

#[derive(Clone, Debug)]
pub struct QuadratureNode<const D: usize> {
    pub point: SpherePoint<D>,
    pub weight: f64,
}

#[derive(Clone, Debug)]
pub struct QuadratureRule<const D: usize> {
    nodes: Vec<QuadratureNode<D>>,
    degree: u32,
}

impl<const D: usize> QuadratureRule<D> {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[QuadratureNode<D>] {
        &self.nodes
    }

    pub fn integrate(&self, f: impl Fn(&SpherePoint<D>) -> f64) -> f64 {
        self.nodes.iter().map(|n| n.weight * f(&n.point)).sum()
    }

    /// Total mass of the rule (the sphere area when the rule is valid).
    pub fn total_weight(&self) -> f64 {
        self.nodes.iter().map(|n| n.weight).sum()
    }
}

/// Product rule on S^2 exact for all spherical harmonics of degree <= `degree`.
pub fn sphere_rule(degree: u32) -> Result<QuadratureRule<3>, GeomError> {
    if degree > MAX_DEGREE {
        return Err(GeomError::DegreeTooLarge {
            degree,
            max: MAX_DEGREE,
        });
    }
    let n_z = (degree / 2 + 1) as usize;
    let n_phi = (degree + 1) as usize;
    let (zs, zws) = gauss_legendre(n_z);
    let phi_w = 2.0 * std::f64::consts::PI / n_phi as f64;
    let mut nodes = Vec::with_capacity(n_z * n_phi);
    for (z, zw) in zs.iter().zip(&zws) {
        let s = (1.0 - z * z).sqrt();
        for j in 0..n_phi {
            let phi = 2.0 * std::f64::consts::PI * j as f64 / n_phi as f64;
            let p = SpherePoint::new(SVector::<f64, 3>::new(s * phi.cos(), s * phi.sin(), *z))
                .expect("product node lies on the sphere");
            nodes.push(QuadratureNode {
                point: p,
                weight: zw * phi_w,
            });
        }
    }
    Ok(QuadratureRule { nodes, degree })
}

/// Uniform trapezoid rule on S^1 exact for Fourier modes up to `degree`.
pub fn circle_rule(degree: u32) -> Result<QuadratureRule<2>, GeomError> {
    if degree > MAX_DEGREE {
        return Err(GeomError::DegreeTooLarge {
            degree,
            max: MAX_DEGREE,
        });
    }
    let m = (degree + 1) as usize;
    let w = 2.0 * std::f64::consts::PI / m as f64;
    let nodes = (0..m)
        .map(|j| {
            let t = 2.0 * std::f64::consts::PI * j as f64 / m as f64;
            QuadratureNode {
                point: SpherePoint::new(SVector::<f64, 2>::new(t.cos(), t.sin()))
                    .expect("circle node lies on the circle"),
                weight: w,
            }
        })
        .collect();
    Ok(QuadratureRule { nodes, degree })
}

/// Gauss-Legendre nodes and weights on (-1, 1), by Newton iteration on the
/// three-term recurrence. Nodes come out ascending.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1, "need at least one node");
    let mut xs = vec![0.0; n];
    let mut ws = vec![0.0; n];
    for i in 0..n {
        // Tricomi-style initial guess for the i-th root (descending order).
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        // Polish once more so weights come out to full precision.
        let (p, d) = legendre_with_derivative(n, x);
        x -= p / d;
        let dp = legendre_with_derivative(n, x).1;
        xs[n - 1 - i] = x;
        ws[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (xs, ws)
}

/// Value and derivative of the Legendre polynomial P_n at x.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn gauss_legendre_integrates_polynomials_exactly() {
        for n in 1..=40usize {
            let (xs, ws) = gauss_legendre(n);
            assert!((ws.iter().sum::<f64>() - 2.0).abs() < 1e-14);
            // Highest exactly integrated degree is 2n-1.
            for d in (0..2 * n).step_by(2) {
                let num: f64 = xs.iter().zip(&ws).map(|(x, w)| w * x.powi(d as i32)).sum();
                let exact = 2.0 / (d as f64 + 1.0);
                assert!(
                    (num - exact).abs() < 1e-13,
                    "n={n} degree={d}: {num} vs {exact}"
                );
            }
        }
    }

    #[test]
    fn gauss_legendre_nodes_are_sorted_and_interior() {
        let (xs, _) = gauss_legendre(65);
        for w in xs.windows(2) {
            assert!(w[0] < w[1]);
        }
        assert!(xs[0] > -1.0 && *xs.last().unwrap() < 1.0);
    }

    #[test]
    fn sphere_rule_mass_is_sphere_area() {
        for degree in [0, 1, 4, 17, 64, 128] {
            let q = sphere_rule(degree).unwrap();
            assert!((q.total_weight() - 4.0 * PI).abs() < 1e-12 * 4.0 * PI);
            assert!(q.nodes().iter().all(|n| n.weight > 0.0));
        }
    }

    #[test]
    fn circle_rule_mass_is_circle_length() {
        let q = circle_rule(32).unwrap();
        assert!((q.total_weight() - 2.0 * PI).abs() < 1e-13);
        assert_eq!(q.node_count(), 33);
    }

    #[test]
    fn circle_rule_kills_low_fourier_modes() {
        let q = circle_rule(16).unwrap();
        for k in 1..=16 {
            let c = q.integrate(|p| {
                let t = p.coords().y.atan2(p.coords().x);
                (k as f64 * t).cos()
            });
            let s = q.integrate(|p| {
                let t = p.coords().y.atan2(p.coords().x);
                (k as f64 * t).sin()
            });
            assert!(c.abs() < 1e-13 && s.abs() < 1e-13, "mode {k}");
        }
    }

    #[test]
    fn degree_budget_is_enforced() {
        assert!(matches!(
            sphere_rule(MAX_DEGREE + 1),
            Err(GeomError::DegreeTooLarge { .. })
        ));
    }
}
