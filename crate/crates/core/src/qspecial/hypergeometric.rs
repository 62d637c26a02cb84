use num_complex::Complex64;

use super::DEFAULT_SERIES_TOL;
use crate::error::{Error, Result};

const MAX_TERMS: usize = 100_000;

/// The basic hypergeometric series
///
/// ```text
/// rΦs(a_1..a_r; b_1..b_s; q, z) = Σ_n (a_1;q)_n..(a_r;q)_n / ((b_1;q)_n..(b_s;q)_n (q;q)_n)
///                                    · ((-1)^n q^{n(n-1)/2})^{1+s-r} z^n
/// ```
///
/// The sum stops exactly when an upper factor `1 - a_i q^n` vanishes (to rounding)
/// and otherwise once a geometric tail estimate drops below the tolerance.
pub fn basic_hypergeometric(
    upper: &[Complex64],
    lower: &[Complex64],
    q: f64,
    z: Complex64,
) -> Result<Complex64> {
    basic_hypergeometric_tol(upper, lower, q, z, DEFAULT_SERIES_TOL)
}

pub fn basic_hypergeometric_tol(
    upper: &[Complex64],
    lower: &[Complex64],
    q: f64,
    z: Complex64,
    tol: f64,
) -> Result<Complex64> {
    let balance = 1 + lower.len() as i32 - upper.len() as i32;
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut qn = 1.0;
    let mut small_streak = 0;
    for n in 0..MAX_TERMS {
        // ratio t_{n+1}/t_n
        let mut ratio = z / (1.0 - q * qn);
        for &a in upper {
            let f = 1.0 - a * qn;
            if f.norm() <= 8.0 * f64::EPSILON * (a * qn).norm().max(1.0) {
                return Ok(sum);
            }
            ratio *= f;
        }
        for &b in lower {
            let f = 1.0 - b * qn;
            if f.norm() <= 8.0 * f64::EPSILON * (b * qn).norm().max(1.0) {
                return Err(Error::Pole(format!(
                    "lower parameter {b} vanishes at term {}",
                    n + 1
                )));
            }
            ratio /= f;
        }
        if balance != 0 {
            ratio *= (-qn).powi(balance);
        }
        term *= ratio;
        sum += term;
        if !sum.is_finite() {
            return Err(Error::Domain("basic hypergeometric series diverges".into()));
        }
        let r = ratio.norm();
        if r < 1.0 && term.norm() / (1.0 - r) <= tol * sum.norm().max(1.0) {
            small_streak += 1;
            if small_streak >= 2 {
                return Ok(sum);
            }
        } else {
            small_streak = 0;
        }
        qn *= q;
    }
    Err(Error::Domain(format!(
        "basic hypergeometric series not converged after {MAX_TERMS} terms"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qspecial::{qpochhammer, Order};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn zero_argument_gives_one() {
        let v = basic_hypergeometric(&[c(0.2, 0.1), c(3.0, 0.0)], &[c(0.5, 0.0)], 0.3, c(0.0, 0.0))
            .unwrap();
        assert_eq!(v, c(1.0, 0.0));
    }

    #[test]
    fn matches_term_by_term_resummation() {
        // Independent oracle: every term rebuilt from Pochhammer products.
        let q = 0.4;
        let upper = [c(0.3, 0.2), c(-0.7, 0.0), c(0.1, -0.5)];
        let lower = [c(0.6, 0.0), c(0.2, 0.3)];
        let z = c(0.35, -0.2);
        let mut oracle = c(0.0, 0.0);
        for n in 0..80usize {
            let mut t = z.powu(n as u32);
            for &a in &upper {
                t *= qpochhammer(a, q, Order::Finite(n)).unwrap();
            }
            for &b in &lower {
                t /= qpochhammer(b, q, Order::Finite(n)).unwrap();
            }
            t /= qpochhammer(c(q, 0.0), q, Order::Finite(n)).unwrap();
            oracle += t;
        }
        let v = basic_hypergeometric(&upper, &lower, q, z).unwrap();
        assert!((v - oracle).norm() < 1e-14);
    }

    #[test]
    fn q_binomial_sum() {
        // 1Φ0(a;;q,z) = (az;q)_∞/(z;q)_∞ (the q-binomial theorem).
        let q = 0.5;
        let a = c(0.3, 0.0);
        let z = c(0.4, 0.1);
        let v = basic_hypergeometric(&[a], &[], q, z).unwrap();
        let expect = qpochhammer(a * z, q, Order::Infinite).unwrap()
            / qpochhammer(z, q, Order::Infinite).unwrap();
        assert!((v - expect).norm() < 1e-13);
    }

    #[test]
    fn terminating_with_inverse_power() {
        // (q^{-2};q)_n vanishes from n = 3 on.
        let q: f64 = 0.5;
        let v = basic_hypergeometric(&[c(q.powi(-2), 0.0)], &[c(0.1, 0.0)], q, c(0.3, 0.0)).unwrap();
        let mut expect = c(0.0, 0.0);
        for n in 0..3usize {
            let t = qpochhammer(c(q.powi(-2), 0.0), q, Order::Finite(n)).unwrap()
                / qpochhammer(c(0.1, 0.0), q, Order::Finite(n)).unwrap()
                / qpochhammer(c(q, 0.0), q, Order::Finite(n)).unwrap()
                * ((-1.0f64).powi(n as i32) * q.powi((n * n.saturating_sub(1) / 2) as i32))
                * 0.3f64.powi(n as i32);
            expect += t;
        }
        assert!((v - expect).norm() < 1e-14);
    }

    #[test]
    fn lower_pole_is_an_error() {
        let q: f64 = 0.5;
        let r = basic_hypergeometric(&[c(0.3, 0.0)], &[c(1.0 / q, 0.0)], q, c(0.2, 0.0));
        assert!(matches!(r, Err(Error::Pole(_))));
    }

    #[test]
    fn divergence_is_an_error() {
        let r = basic_hypergeometric(&[c(0.3, 0.0), c(0.2, 0.0), c(0.1, 0.0)], &[], 0.5, c(0.9, 0.0));
        assert!(matches!(r, Err(Error::Domain(_))));
    }
}
