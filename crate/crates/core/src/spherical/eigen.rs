use num_complex::Complex64;

use crate::context::QContext;
use crate::error::Result;
use crate::qspecial::{basic_hypergeometric_tol, qgamma, qgamma_recip};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// `q^{2iρ}`, equal to `e^{-iρh}`.
fn q_2irho(rho: Complex64, ctx: &QContext) -> Complex64 {
    (-I * rho * ctx.h()).exp()
}

/// Eigenvalue `λ(ρ) = -(1 - q^{1+2iρ})(1 - q^{1-2iρ}) / (1 - q^2)^2`.
pub fn lambda_rho(rho: Complex64, ctx: &QContext) -> Complex64 {
    let q = ctx.q();
    let w = q_2irho(rho, ctx);
    -(1.0 - q * w) * (1.0 - q / w) / (1.0 - ctx.q2()).powi(2)
}

/// Spherical function `φ_ρ(q^{2n})`, the radial eigenfunction with `φ_ρ(1) = 1`.
///
/// The terminating `3Φ2` form cancels catastrophically beyond a few grid points,
/// so values come from the equivalent positive-weight expansion
/// `q^n Σ_{k+j=n} a_k b_j w^{k-j}`, `a_k = (q^{1-2iρ};q^2)_k/(q^2;q^2)_k`,
/// `b_j = (q^{1+2iρ};q^2)_j/(q^2;q^2)_j`, `w = q^{2iρ}`.
pub fn phi_rho(rho: Complex64, n: usize, ctx: &QContext) -> Complex64 {
    phi_rho_values(rho, n, ctx)[n]
}

/// `φ_ρ(q^{2n})` for `n = 0..=n_max`.
pub fn phi_rho_values(rho: Complex64, n_max: usize, ctx: &QContext) -> Vec<Complex64> {
    let q = ctx.q();
    let q2 = ctx.q2();
    let w = q_2irho(rho, ctx);
    let (a, b) = (q / w, q * w);
    // coefficient sequences of the two generating series
    let mut ca = Vec::with_capacity(n_max + 1);
    let mut cb = Vec::with_capacity(n_max + 1);
    let (mut xa, mut xb) = (Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0));
    let mut qk = 1.0;
    for _ in 0..=n_max {
        ca.push(xa);
        cb.push(xb);
        let denom = 1.0 - qk * q2;
        xa *= (1.0 - a * qk) / denom;
        xb *= (1.0 - b * qk) / denom;
        qk *= q2;
    }
    let winv = 1.0 / w;
    let mut out = Vec::with_capacity(n_max + 1);
    let mut qn = 1.0;
    for n in 0..=n_max {
        // Σ_k ca[k] cb[n-k] w^{2k-n}
        let mut s = Complex64::new(0.0, 0.0);
        let mut wp = winv.powi(n as i32);
        let w2 = w * w;
        for k in 0..=n {
            s += ca[k] * cb[n - k] * wp;
            wp *= w2;
        }
        out.push(s * qn);
        qn *= q;
    }
    out
}

/// `φ_ρ(q^{2n})` from the terminating `3Φ2(q^{-2n}, q^{1+2iρ}, q^{1-2iρ}; q^2, 0; q^2, q^2)`.
///
/// Exact in exact arithmetic but loses digits rapidly with `n`; kept as an
/// independent check for small `n`.
pub fn phi_rho_hypergeometric(rho: Complex64, n: usize, ctx: &QContext) -> Result<Complex64> {
    let q = ctx.q();
    let q2 = ctx.q2();
    let w = q_2irho(rho, ctx);
    let upper = [
        Complex64::new(q2.powi(-(n as i32)), 0.0),
        q * w,
        q / w,
    ];
    let lower = [Complex64::new(q2, 0.0), Complex64::new(0.0, 0.0)];
    basic_hypergeometric_tol(&upper, &lower, q2, Complex64::new(q2, 0.0), ctx.series_tol)
}

/// Jost-type solution
/// `ψ_ρ(y) = y^{1/2-iρ} 2Φ1(q^{1-2iρ}, q^{1-2iρ}; q^{2-4iρ}; q^2, q^2 y)` at `y = q^{2n}`.
pub fn psi_rho(rho: Complex64, n: usize, ctx: &QContext) -> Result<Complex64> {
    let q2 = ctx.q2();
    let w = q_2irho(rho, ctx);
    let a = ctx.q() / w;
    let y = ctx.grid_point(n as i64);
    let series = basic_hypergeometric_tol(
        &[a, a],
        &[q2 / (w * w)],
        q2,
        Complex64::new(q2 * y, 0.0),
        ctx.series_tol,
    )?;
    let prefactor = (-(n as f64) * ctx.h() * (0.5 - I * rho)).exp();
    Ok(prefactor * series)
}

/// Connection coefficient `c(ρ) = Γ_{q^2}(2iρ) / Γ_{q^2}(1/2 + iρ)^2` in
/// `φ_ρ = c(ρ) ψ_ρ + c(-ρ) ψ_{-ρ}`.
pub fn c_function(rho: Complex64, ctx: &QContext) -> Result<Complex64> {
    let q2 = ctx.q2();
    let g = qgamma(2.0 * I * rho, q2)?;
    let r = qgamma_recip(0.5 + I * rho, q2);
    Ok(g * r * r)
}
