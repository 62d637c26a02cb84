use num_complex::Complex64;

use super::coefficients::{series_terms, GreenOrder, SeriesTerm};
use super::kernel::{kernel_assembled, leg_element, leg_value, Kernel, KernelKind, KernelMode};
use crate::context::QContext;
use crate::discalg::{DiscElement, GridFunction};
use crate::error::{Error, Result};
use crate::exec::map_indexed;
use crate::qspecial::{l_sum, Order};

/// Result of applying a kernel as an integral operator.
#[derive(Clone, Debug)]
pub struct KernelApplication {
    /// Output sampled on grid indices `0..=grid_horizon`.
    pub element: DiscElement,
    /// Number of Green series terms summed (0 for power kernels).
    pub series_terms: usize,
    /// Bound on the dropped series tail, uniform over the output grid.
    pub tail_bound: f64,
}

/// `∫ K f dν = (id ⊗ ν)(K · 1⊗f)` for finite `f`.
///
/// Only terms whose second leg sits in sector `-s` pair nontrivially with a sector-`s`
/// component of `f`, and of those only finitely many (`k ≤ max supp f + |s|`)
/// meet its support, so each power kernel contributes an exact finite sum; the
/// Green series is cut where its geometric tail bound drops below
/// `series_tol · max(1, U)`, `U` being a uniform bound on the individual terms.
pub fn apply_kernel(kernel: &Kernel, f: &DiscElement, ctx: &QContext) -> Result<KernelApplication> {
    if !f.is_finite() {
        return Err(Error::Domain("kernel application needs a finite element".into()));
    }
    let out_len = ctx.grid_horizon + 1;
    let mut out = DiscElement::zero();
    let mut used = 0;
    let mut tail = 0.0;
    for (s, phi) in f.sectors() {
        if phi.is_zero() {
            continue;
        }
        let single = DiscElement::sector_element(s, phi.clone());
        let values = match kernel.kind {
            KernelKind::Power { l, mode } => apply_power(kernel, l, mode, s, &single, phi, out_len, ctx)?,
            KernelKind::Green { order } => {
                let (v, m, t) = apply_green(kernel, order, s, &single, phi, out_len, ctx)?;
                used = used.max(m);
                tail += t;
                v
            }
        };
        out.insert(s, GridFunction::truncated(values));
    }
    Ok(KernelApplication {
        element: out,
        series_terms: used,
        tail_bound: tail,
    })
}

/// `Δ_q^{-order} f` through the assembled Green kernel.
pub fn green_solve(f: &DiscElement, order: GreenOrder, ctx: &QContext) -> Result<DiscElement> {
    Ok(apply_kernel(&kernel_assembled(order, ctx), f, ctx)?.element)
}

#[allow(clippy::too_many_arguments)]
fn apply_power(
    kernel: &Kernel,
    l: Complex64,
    mode: KernelMode,
    s: i64,
    single: &DiscElement,
    phi: &GridFunction,
    out_len: usize,
    ctx: &QContext,
) -> Result<Vec<Complex64>> {
    let q2 = ctx.q2();
    let h = ctx.h();
    let lim = kernel.index_limit(l, mode) as i64;
    let top = (phi.len() as i64 - 1 + s.abs()).min(lim);
    let leg_len = phi.len() + s.unsigned_abs() as usize + 2;
    let mut out = vec![Complex64::new(0.0, 0.0); out_len];
    for k in (-s).max(0)..=top {
        let n = k + s;
        if n > lim {
            break;
        }
        let (n, k) = (n as usize, k as usize);
        for pc in kernel.pieces(l, mode, n, k) {
            if pc.weight == Complex64::new(0.0, 0.0) {
                continue;
            }
            let leg2 = leg_element(n, k, l, pc.log2, false, leg_len, q2, h);
            let nu = leg2.normal_mul(single, ctx)?.inv_integral(ctx)?;
            if nu == Complex64::new(0.0, 0.0) {
                continue;
            }
            let w = pc.weight * nu;
            for (p, o) in out.iter_mut().enumerate() {
                *o += w * leg_value(n, k, l, pc.log1, p, q2, h);
            }
        }
    }
    Ok(out)
}

/// Uniform bounds `(U_plain, U_derivative)` on `sup_p |∫ G_m f dν|` and
/// `sup_p |∫ Ĝ_m f dν|` valid for every `m ≥ 1`.
fn term_bounds(s: i64, phi: &GridFunction, ctx: &QContext) -> Result<(f64, f64)> {
    let q2 = ctx.q2();
    let h = ctx.h();
    let c = if s < 0 { s.unsigned_abs() as i32 } else { 0 };
    let mass: f64 = phi
        .values()
        .iter()
        .enumerate()
        .map(|(p, v)| v.norm() * q2.powi(-(p as i32)))
        .sum::<f64>()
        * (1.0 - q2)
        * q2.powi(-c);
    let top = phi.len() as i64 - 1 + s.abs();
    let (mut plain, mut der) = (0.0, 0.0);
    let mut pk = 1.0;
    for k in 0..=top {
        if k > 0 {
            pk *= 1.0 - q2.powi(k as i32);
        }
        let n = k + s;
        if n < 0 {
            continue;
        }
        let pn: f64 = (1..=n).map(|j| 1.0 - q2.powi(j as i32)).product();
        let b = q2.powi(k as i32) / (pk * pn);
        let xi = Complex64::new(q2, 0.0);
        let lk = l_sum(xi, Order::Finite(k as usize), ctx.q())?.re;
        let ln = l_sum(xi, Order::Finite(n as usize), ctx.q())?.re;
        plain += b;
        der += b * (h * (lk + ln) + 2.0 / std::f64::consts::E);
    }
    Ok((plain * mass, der * mass))
}

fn tail_after(order: GreenOrder, m: usize, bounds: (f64, f64), q: f64) -> f64 {
    let q2 = q * q;
    series_terms(order, m + 1, q)
        .iter()
        .map(|t| t.weight.abs() * if t.derivative { bounds.1 } else { bounds.0 })
        .sum::<f64>()
        / (1.0 - q2)
}

#[allow(clippy::too_many_arguments)]
fn apply_green(
    kernel: &Kernel,
    order: GreenOrder,
    s: i64,
    single: &DiscElement,
    phi: &GridFunction,
    out_len: usize,
    ctx: &QContext,
) -> Result<(Vec<Complex64>, usize, f64)> {
    let q = ctx.q();
    let bounds = term_bounds(s, phi, ctx)?;
    let scale = bounds.0.max(bounds.1).max(1.0);
    let mut m_used = None;
    for m in 1..=kernel.series_terms {
        if tail_after(order, m, bounds, q) <= kernel.series_tol * scale {
            m_used = Some(m);
            break;
        }
    }
    let Some(m_used) = m_used else {
        return Err(Error::Capacity(format!(
            "Green series tail still above {:e} after {} terms",
            kernel.series_tol * scale,
            kernel.series_terms
        )));
    };
    let terms: Vec<SeriesTerm> = (1..=m_used).flat_map(|m| series_terms(order, m, q)).collect();
    let parts = map_indexed(ctx.exec, terms.len(), |i| {
        let t = terms[i];
        let mode = if t.derivative { KernelMode::Derivative } else { KernelMode::Plain };
        apply_power(kernel, Complex64::new(t.m as f64, 0.0), mode, s, single, phi, out_len, ctx)
            .map(|v| (t.weight, v))
    });
    let mut out = vec![Complex64::new(0.0, 0.0); out_len];
    for part in parts {
        let (w, v) = part?;
        for (o, x) in out.iter_mut().zip(v) {
            *o += x * w;
        }
    }
    Ok((out, m_used, tail_after(order, m_used, bounds, q)))
}
