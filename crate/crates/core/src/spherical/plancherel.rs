use std::f64::consts::PI;

use num_complex::Complex64;

use crate::context::QContext;
use crate::qspecial::qpochhammer_inf;

/// Density of the Plancherel measure on `[0, 2π/h]`:
/// `(1/4π)(h/(1-q^2)) |(q^2;q^2)_∞ (q^{4iρ};q^2)_∞|^2 / |(q^{1+2iρ};q^2)_∞|^4`.
///
/// This is the `Γ_{q^2}` quotient rewritten without poles; it vanishes at both
/// endpoints of the period.
pub fn sigma_density(rho: f64, ctx: &QContext) -> f64 {
    let q2 = ctx.q2();
    let w = Complex64::from_polar(1.0, -rho * ctx.h());
    let num = qpochhammer_inf(Complex64::new(q2, 0.0), q2) * qpochhammer_inf(w * w, q2);
    let den = qpochhammer_inf(w * ctx.q(), q2).norm_sqr();
    ctx.h() / (4.0 * PI * (1.0 - q2)) * num.norm_sqr() / (den * den)
}

/// The Plancherel measure as a density with its normalisation constant.
#[derive(Clone, Debug)]
pub struct PlancherelMeasure {
    ctx: QContext,
}

impl PlancherelMeasure {
    pub fn new(ctx: &QContext) -> Self {
        Self { ctx: ctx.clone() }
    }

    /// `(1/4π) h/(1-q^2)`.
    pub fn normalization(&self) -> f64 {
        self.ctx.h() / (4.0 * PI * (1.0 - self.ctx.q2()))
    }

    pub fn density(&self, rho: f64) -> f64 {
        sigma_density(rho, &self.ctx)
    }

    /// `(ρ, density)` on `n` equispaced nodes of the period.
    pub fn table(&self, n: usize) -> Vec<(f64, f64)> {
        let step = self.ctx.spectral_period() / n as f64;
        (0..n)
            .map(|j| {
                let rho = j as f64 * step;
                (rho, self.density(rho))
            })
            .collect()
    }
}
