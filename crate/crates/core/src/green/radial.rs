use num_complex::Complex64;

use super::coefficients::{green1_coefficient, green2_coefficient, GreenOrder};
use crate::context::QContext;
use crate::discalg::GridFunction;
use crate::error::{Error, Result};
use crate::spherical::transform_inverse_fn;

const MAX_TERMS: usize = 1_000_000;

/// Sums `Σ_{m≥1} w_m t^m` for weights with `w_{m+1}/w_m ≤ q^2`, stopping once the
/// geometric tail bound `|w_{m+1}| t^{m+1} / (1 - q^2 t)` is below `tol`.
pub(crate) fn weighted_power_sum(w: impl Fn(usize) -> f64, t: f64, q: f64, tol: f64) -> f64 {
    let ratio = q * q * t;
    let mut s = 0.0;
    let mut tm = t;
    for m in 1..MAX_TERMS {
        s += w(m) * tm;
        tm *= t;
        let next = (w(m + 1) * tm).abs();
        if next / (1.0 - ratio) < tol || tm == 0.0 {
            break;
        }
    }
    s
}

/// Radial Green functions at `y = q^{2n}`:
/// `g₁ = -(1-q^2) Σ c_m y^m`,
/// `g₂ = (1-q^2)(Σ a_m y^m + (1-q^2) n Σ c_m y^m)`, the `n` coming from
/// `ln y = -n h` against the `1/h` in front of the derivative terms.
pub fn g_radial(order: GreenOrder, n: usize, ctx: &QContext) -> f64 {
    let q = ctx.q();
    let q2 = ctx.q2();
    let y = ctx.grid_point(n as i64);
    let tol = ctx.series_tol;
    let sc = weighted_power_sum(|m| green1_coefficient(m, q), y, q, tol);
    match order {
        GreenOrder::First => -(1.0 - q2) * sc,
        GreenOrder::Second => {
            let sa = weighted_power_sum(|m| green2_coefficient(m, q), y, q, tol);
            (1.0 - q2) * (sa + (1.0 - q2) * n as f64 * sc)
        }
    }
}

/// `g_order` on grid indices `0..len` as a sampled grid function.
pub fn g_radial_values(order: GreenOrder, len: usize, ctx: &QContext) -> GridFunction {
    GridFunction::from_fn_truncated(len, |n| Complex64::new(g_radial(order, n, ctx), 0.0))
}

/// `ĝ_m(ρ) = (-1)^m (1-q^2)^{2m+1} / |1 - q^{1+2iρ}|^{2m}`, the spectral image of
/// `(Δ^{(0)})^{-m} f₀`; satisfies `λ(ρ)^m ĝ_m(ρ) = 1 - q^2`.
pub fn g_hat(m: usize, rho: f64, ctx: &QContext) -> f64 {
    let q = ctx.q();
    let w = Complex64::from_polar(q, -rho * ctx.h());
    let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
    sign * (1.0 - ctx.q2()).powi(2 * m as i32 + 1) / (1.0 - w).norm_sqr().powi(m as i32)
}

/// `g_m` on grid indices `0..=n_max` by numerical inverse spherical transform of `ĝ_m`.
pub fn gm_quadrature(m: usize, n_max: usize, ctx: &QContext) -> Result<GridFunction> {
    if m == 0 {
        return Err(Error::InvalidParameter("gm_quadrature needs m ≥ 1".into()));
    }
    transform_inverse_fn(|rho| Complex64::new(g_hat(m, rho, ctx), 0.0), n_max, ctx)
}
