use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::eigen::phi_rho_values;
use super::plancherel::sigma_density;
use crate::context::QContext;
use crate::discalg::GridFunction;
use crate::error::{Error, Result};
use crate::exec::map_indexed;

/// Quadrature rule a spectral function is sampled on.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadratureRule {
    pub nodes: usize,
    pub scheme: String,
}

impl QuadratureRule {
    pub fn trapezoid(nodes: usize) -> Self {
        Self {
            nodes,
            scheme: "periodic-trapezoid".into(),
        }
    }
}

/// Values of a spherical transform on the equispaced nodes `ρ_j = j·(2π/h)/N`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralFunction {
    pub nodes: Vec<f64>,
    pub values: Vec<Complex64>,
    pub rule: QuadratureRule,
}

impl SpectralFunction {
    /// Samples `f` on an `n`-node trapezoid rule.
    pub fn from_fn(n: usize, ctx: &QContext, f: impl Fn(f64) -> Complex64 + Sync + Send) -> Self {
        let nodes = trapezoid_nodes(n, ctx);
        let values = map_indexed(ctx.exec, n, |j| f(nodes[j]));
        Self {
            nodes,
            values,
            rule: QuadratureRule::trapezoid(n),
        }
    }

    /// Pointwise product with `g(ρ)`.
    pub fn multiply(&self, g: impl Fn(f64) -> Complex64) -> Self {
        Self {
            nodes: self.nodes.clone(),
            values: self.nodes.iter().zip(&self.values).map(|(r, v)| v * g(*r)).collect(),
            rule: self.rule.clone(),
        }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

pub fn trapezoid_nodes(n: usize, ctx: &QContext) -> Vec<f64> {
    let step = ctx.spectral_period() / n as f64;
    (0..n).map(|j| j as f64 * step).collect()
}

/// Forward transform `f̂(ρ) = (1-q^2) Σ_n φ_ρ(q^{2n}) f(q^{2n}) q^{-2n}` of a finitely
/// supported grid function, sampled on `ctx.transform_nodes` nodes.
pub fn transform_forward(g: &GridFunction, ctx: &QContext) -> Result<SpectralFunction> {
    transform_forward_nodes(g, ctx.transform_nodes, ctx)
}

pub fn transform_forward_nodes(g: &GridFunction, nodes: usize, ctx: &QContext) -> Result<SpectralFunction> {
    if !g.is_finite() {
        return Err(Error::Domain(
            "spherical transform needs a finitely supported function".into(),
        ));
    }
    let vals = g.values().to_vec();
    let top = vals.len().saturating_sub(1);
    let q2 = ctx.q2();
    Ok(SpectralFunction::from_fn(nodes, ctx, |rho| {
        let phi = phi_rho_values(Complex64::new(rho, 0.0), top, ctx);
        let mut s = Complex64::new(0.0, 0.0);
        let mut w = 1.0;
        for (p, f) in phi.iter().zip(&vals) {
            s += p * f * w;
            w /= q2;
        }
        s * (1.0 - q2)
    }))
}

/// Trapezoid sum of `φ_ρ(q^{2n}) F(ρ) σ(ρ)` for `n = 0..=n_max`, using every
/// `stride`-th node; also returns the absolute mass `Σ |F| σ` for scaling.
fn inverse_sum(nodes: &[f64], values: &[Complex64], stride: usize, n_max: usize, ctx: &QContext) -> (Vec<Complex64>, f64) {
    let picked: Vec<usize> = (0..nodes.len()).step_by(stride).collect();
    let step = ctx.spectral_period() / picked.len() as f64;
    let per_node = map_indexed(ctx.exec, picked.len(), |i| {
        let j = picked[i];
        let wt = sigma_density(nodes[j], ctx) * step;
        if wt == 0.0 {
            return (vec![Complex64::new(0.0, 0.0); n_max + 1], 0.0);
        }
        let phi = phi_rho_values(Complex64::new(nodes[j], 0.0), n_max, ctx);
        let f = values[j] * wt;
        (phi.into_iter().map(|p| p * f).collect::<Vec<_>>(), values[j].norm() * wt)
    });
    // fixed-order reduction
    let mut acc = vec![Complex64::new(0.0, 0.0); n_max + 1];
    let mut mass = 0.0;
    for (v, m) in per_node {
        for (a, b) in acc.iter_mut().zip(v) {
            *a += b;
        }
        mass += m;
    }
    (acc, mass)
}

/// Inverse transform `n ↦ ∫ φ_ρ(q^{2n}) F(ρ) dσ(ρ)` on grid indices `0..=n_max`.
///
/// The rule is checked against its half-node subrule; a change above
/// `quad_tol · max(1, ∫|F|dσ)` is reported as a quadrature error.
pub fn transform_inverse(f: &SpectralFunction, n_max: usize, ctx: &QContext) -> Result<GridFunction> {
    let n = f.nodes.len();
    let (full, mass) = inverse_sum(&f.nodes, &f.values, 1, n_max, ctx);
    if n >= 4 && n.is_multiple_of(2) {
        let (half, _) = inverse_sum(&f.nodes, &f.values, 2, n_max, ctx);
        let change = max_diff(&full, &half);
        let tol = ctx.quad_tol * mass.max(1.0);
        if change > tol {
            return Err(Error::Quadrature {
                nodes: n,
                change,
                tolerance: tol,
            });
        }
    }
    Ok(GridFunction::truncated(full))
}

/// Inverse transform of an analytic periodic `F`, doubling the trapezoid rule from
/// `quad_min_nodes` until successive results agree to `quad_tol · max(1, ∫|F|dσ)`.
pub fn transform_inverse_fn(
    f: impl Fn(f64) -> Complex64 + Sync + Send,
    n_max: usize,
    ctx: &QContext,
) -> Result<GridFunction> {
    let mut n = ctx.quad_min_nodes.max(2);
    let sample = |n: usize| {
        let nodes = trapezoid_nodes(n, ctx);
        let values = map_indexed(ctx.exec, n, |j| f(nodes[j]));
        inverse_sum(&nodes, &values, 1, n_max, ctx)
    };
    let (mut prev, _) = sample(n);
    let mut change = f64::INFINITY;
    let mut tol = ctx.quad_tol;
    while n * 2 <= ctx.quad_max_nodes {
        n *= 2;
        let (cur, mass) = sample(n);
        change = max_diff(&cur, &prev);
        tol = ctx.quad_tol * mass.max(1.0);
        prev = cur;
        if change <= tol {
            return Ok(GridFunction::truncated(prev));
        }
    }
    Err(Error::Quadrature {
        nodes: n,
        change,
        tolerance: tol,
    })
}

fn max_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f0_transforms_to_constant() {
        let ctx = QContext::new(0.5).unwrap().with_transform_nodes(128);
        let t = transform_forward(&GridFunction::indicator(0), &ctx).unwrap();
        for v in &t.values {
            assert!((v - (1.0 - ctx.q2())).norm() < 1e-15);
        }
        let back = transform_inverse(&t, 5, &ctx).unwrap();
        assert!((back.at(0) - 1.0).norm() < 1e-12);
        for n in 1..=5 {
            assert!(back.at(n).norm() < 1e-12);
        }
    }

    #[test]
    fn sampled_input_rejected() {
        let ctx = QContext::new(0.5).unwrap();
        let g = GridFunction::constant(Complex64::new(1.0, 0.0), 4);
        assert!(matches!(transform_forward(&g, &ctx), Err(Error::Domain(_))));
    }

    #[test]
    fn coarse_rule_is_reported() {
        let ctx = QContext::new(0.9).unwrap().with_transform_nodes(8);
        let t = transform_forward(&GridFunction::indicator(6), &ctx).unwrap();
        assert!(matches!(transform_inverse(&t, 6, &ctx), Err(Error::Quadrature { .. })));
    }
}
