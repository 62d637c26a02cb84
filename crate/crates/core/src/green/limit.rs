use serde::{Deserialize, Serialize};

use super::coefficients::{green1_coefficient, green2_coefficient};
use super::radial::weighted_power_sum;
use crate::error::{Error, Result};
use crate::qspecial::dilogarithm;

/// One `(q, t)` row of a classical-limit study.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LimitRow {
    pub q: f64,
    pub t: f64,
    /// `-Σ c_m t^m`.
    pub series1: f64,
    /// `ln(1 - t)`.
    pub limit1: f64,
    pub err1: f64,
    /// `Σ a_m t^m - ((1-q^2)/h) ln t Σ c_m t^m`.
    pub series2: f64,
    /// `2 Li₂(t) + ln t ln(1 - t)`.
    pub limit2: f64,
    pub err2: f64,
    /// `|S₂(1-t) - (-ln t ln(1-t) - 2 Li₂(t) + π²/3)|`, a pure dilogarithm identity.
    pub reflection_residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LimitReport {
    pub rows: Vec<LimitRow>,
    /// Whether both errors decrease strictly along the `q` list for every `t`
    /// (rows with `t = 0`, where all errors vanish, are exempt).
    pub monotone: bool,
}

/// `ln t · x`, taken as 0 at `t = 0` where `x` vanishes linearly.
fn log_times(t: f64, x: f64) -> f64 {
    if t == 0.0 {
        0.0
    } else {
        t.ln() * x
    }
}

/// `S₂(t) = 2 Li₂(t) + ln t ln(1 - t)`.
pub fn classical_s2(t: f64) -> f64 {
    // ln t ln(1 - t) vanishes at both endpoints
    let product = if t == 0.0 || t == 1.0 { 0.0 } else { t.ln() * (1.0 - t).ln() };
    2.0 * dilogarithm(t) + product
}

/// Scalar series of `𝔾₁` and `𝔾₂` on the radial diagonal at argument `t`.
pub fn limit_series(q: f64, t: f64, tol: f64) -> (f64, f64) {
    let h = -2.0 * q.ln();
    let sc = weighted_power_sum(|m| green1_coefficient(m, q), t, q, tol);
    let sa = weighted_power_sum(|m| green2_coefficient(m, q), t, q, tol);
    (-sc, sa - (1.0 - q * q) / h * log_times(t, sc))
}

/// Compares the `𝔾₁`/`𝔾₂` coefficient series with their `q → 1` limits
/// `ln(1-t)` and `2 Li₂(t) + ln t ln(1-t)` for each `q` in `q_list` and `t` in `t_list`.
///
/// `q` may exceed the range accepted for grid computations; only scalar series are
/// evaluated here.
pub fn classical_limit_report(t_list: &[f64], q_list: &[f64], tol: f64) -> Result<LimitReport> {
    if let Some(t) = t_list.iter().find(|t| !(0.0..1.0).contains(*t)) {
        return Err(Error::InvalidParameter(format!("t = {t} outside [0, 1)")));
    }
    if let Some(q) = q_list.iter().find(|q| !(**q > 0.0 && **q < 1.0)) {
        return Err(Error::InvalidParameter(format!("q = {q} outside (0, 1)")));
    }
    let mut rows = Vec::new();
    for &t in t_list {
        for &q in q_list {
            let (series1, series2) = limit_series(q, t, tol);
            let limit1 = (1.0 - t).ln();
            let limit2 = classical_s2(t);
            let lt = log_times(t, (1.0 - t).ln());
            let classical = -lt - 2.0 * dilogarithm(t) + std::f64::consts::PI.powi(2) / 3.0;
            rows.push(LimitRow {
                q,
                t,
                series1,
                limit1,
                err1: (series1 - limit1).abs(),
                series2,
                limit2,
                err2: (series2 - limit2).abs(),
                reflection_residual: (classical_s2(1.0 - t) - classical).abs(),
            });
        }
    }
    let monotone = t_list.iter().all(|&t| {
        let r: Vec<&LimitRow> = rows.iter().filter(|r| r.t == t).collect();
        t == 0.0 || r.windows(2).all(|w| w[1].err1 < w[0].err1 && w[1].err2 < w[0].err2)
    });
    Ok(LimitReport { rows, monotone })
}
