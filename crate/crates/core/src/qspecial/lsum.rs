use num_complex::Complex64;

use super::{Order, DEFAULT_SERIES_TOL};
use crate::error::{Error, Result};

/// `L_k(ξ) = Σ_{j<k} q^{2j} / (1 - q^{2j} ξ)`; `L_0 = 0`.
pub fn l_sum(xi: Complex64, k: Order, q: f64) -> Result<Complex64> {
    l_sum_tol(xi, k, q, DEFAULT_SERIES_TOL)
}

pub fn l_sum_tol(xi: Complex64, k: Order, q: f64, tol: f64) -> Result<Complex64> {
    let q2 = q * q;
    let limit = match k {
        Order::Finite(k) => Some(k),
        Order::Infinite => {
            if q2.is_nan() || q2 >= 1.0 {
                return Err(Error::Domain(format!("L_inf needs |q| < 1, got {q}")));
            }
            None
        }
    };
    let mut sum = Complex64::new(0.0, 0.0);
    let mut q2j = 1.0;
    let mut j = 0usize;
    loop {
        if limit.is_some_and(|k| j >= k) {
            return Ok(sum);
        }
        if limit.is_none() {
            // Σ_{i>=j} q^{2i} / |1 - q^{2i} ξ| <= q^{2j} / ((1-q^2)(1 - q^{2j}|ξ|)).
            let shrink = 1.0 - q2j * xi.norm();
            if shrink > 0.5 && q2j / ((1.0 - q2) * shrink) < tol {
                return Ok(sum);
            }
        }
        let den = 1.0 - xi * q2j;
        if den.norm() < 1e-15 {
            return Err(Error::Pole(format!("L-sum term {j} at ξ = {xi}")));
        }
        sum += q2j / den;
        q2j *= q2;
        j += 1;
    }
}
