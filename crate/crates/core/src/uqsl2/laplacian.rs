use nalgebra::DMatrix;
use num_complex::Complex64;

use super::hopf::casimir_apply;
use crate::context::QContext;
use crate::discalg::{DiscElement, GridFunction};
use crate::error::{Error, Result};

/// Invariant Laplacian `Δ_q = q^{-1} Ω`; preserves every sector.
pub fn laplacian_apply(f: &DiscElement, ctx: &QContext) -> Result<DiscElement> {
    Ok(casimir_apply(f, ctx)?.scale_real(1.0 / ctx.q()))
}

/// `Δ_q` applied `times` times.
pub fn laplacian_power(f: &DiscElement, times: usize, ctx: &QContext) -> Result<DiscElement> {
    let mut v = f.clone();
    for _ in 0..times {
        v = laplacian_apply(&v, ctx)?;
    }
    Ok(v)
}

/// Radial part `q^{-1} y^2 D (1 - q y) D` with
/// `(Dg)(t) = (g(q^{-1}t) - g(qt)) / ((q^{-1} - q) t)`.
///
/// The inner `D` lands on the half-grid `t_k = q^{2k+1}`; the coefficient
/// `1 - q t` vanishes at `t = q^{-1}`, so no value above the grid is needed.
/// Sampled inputs of length `L` give `L - 1` output values.
pub fn radial_laplacian(g: &GridFunction, ctx: &QContext) -> GridFunction {
    let q = ctx.q();
    let dq = 1.0 / q - q;
    let len = g.len() as i64;
    let out_len = if g.is_finite() { len + 1 } else { (len - 1).max(0) };
    // u_k = (1 - q t_k) (Dg)(t_k), k = -1 .. out_len-1; u_{-1} = 0.
    let u = |k: i64| -> Complex64 {
        if k < 0 {
            return Complex64::new(0.0, 0.0);
        }
        let t = q.powi((2 * k + 1) as i32);
        (g.at(k) - g.at(k + 1)) * ((1.0 - q * t) / (dq * t))
    };
    let values = (0..out_len)
        .map(|n| (u(n - 1) - u(n)) * (ctx.grid_point(n) / (q * dq)))
        .collect();
    if g.is_finite() {
        GridFunction::finite(values)
    } else {
        GridFunction::truncated(values)
    }
}

/// Matrix of `Δ_q` restricted to sector `s`, on grid indices `0..dim`
/// (columns are images of grid indicators).
///
/// Needs `ctx.grid_horizon >= dim`; the stencil couples neighbouring indices only,
/// so the last row is cut off rather than wrong in the other entries.
pub fn sector_laplacian_matrix(s: i64, dim: usize, ctx: &QContext) -> Result<DMatrix<Complex64>> {
    if ctx.grid_horizon < dim {
        return Err(Error::Capacity(format!(
            "sector matrix of size {dim} needs grid horizon ≥ {dim}"
        )));
    }
    let mut m = DMatrix::from_element(dim, dim, Complex64::new(0.0, 0.0));
    for j in 0..dim {
        let e = DiscElement::sector_element(s, GridFunction::indicator(j));
        let img = laplacian_apply(&e, ctx)?;
        if let Some(col) = img.sector(s) {
            for (i, v) in col.values().iter().enumerate().take(dim) {
                m[(i, j)] = *v;
            }
        }
    }
    Ok(m)
}
