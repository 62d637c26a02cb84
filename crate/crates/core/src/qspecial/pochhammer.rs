use num_complex::Complex64;

use super::{Order, DEFAULT_SERIES_TOL};
use crate::error::{Error, Result};

/// `(a; q)_n = Π_{k<n} (1 - a q^k)`, with `n = ∞` truncated once the remaining
/// factors differ from one by less than [`DEFAULT_SERIES_TOL`].
pub fn qpochhammer(a: Complex64, q: f64, n: Order) -> Result<Complex64> {
    qpochhammer_tol(a, q, n, DEFAULT_SERIES_TOL)
}

pub fn qpochhammer_tol(a: Complex64, q: f64, n: Order, tol: f64) -> Result<Complex64> {
    match n {
        Order::Finite(n) => {
            let mut prod = Complex64::new(1.0, 0.0);
            let mut qk = 1.0;
            for _ in 0..n {
                prod *= 1.0 - a * qk;
                qk *= q;
            }
            Ok(prod)
        }
        Order::Infinite => {
            if q.abs().is_nan() || q.abs() >= 1.0 {
                return Err(Error::Domain(format!(
                    "infinite Pochhammer product needs |q| < 1, got {q}"
                )));
            }
            Ok(infinite_product(a, q, tol))
        }
    }
}

/// `(a; q)_∞` for `|q| < 1`.
///
/// # Panics
/// If `|q| >= 1`.
pub fn qpochhammer_inf(a: Complex64, q: f64) -> Complex64 {
    assert!(q.abs() < 1.0, "(a; q)_inf needs |q| < 1");
    infinite_product(a, q, DEFAULT_SERIES_TOL)
}

// Once |a q^k| (1 - |q|)^{-1} < tol/2 the tail product Π_{j>=k}(1 - a q^j) lies within
// exp(tol/2) - 1 < tol of one.
fn infinite_product(a: Complex64, q: f64, tol: f64) -> Complex64 {
    let stop = 0.5 * tol * (1.0 - q.abs());
    let mut prod = Complex64::new(1.0, 0.0);
    let mut term = a;
    loop {
        if term.norm() < stop {
            return prod;
        }
        prod *= 1.0 - term;
        term *= q;
    }
}
