use num_complex::Complex64;

use super::pochhammer::qpochhammer_inf;
use crate::error::{Error, Result};

const POLE_TOL: f64 = 1e-13;

/// `Γ_q(x) = (q;q)_∞ / (q^x;q)_∞ · (1-q)^{1-x}` for `0 < q < 1`.
///
/// `q^x` and `(1-q)^{1-x}` use the principal logarithm; `ln(1-q)` is real so the
/// latter is single valued.
pub fn qgamma(x: Complex64, q: f64) -> Result<Complex64> {
    check_base(q)?;
    // The only factor of (q^x;q)_∞ that can vanish is 1 - q^{x+k} with k = -Re x.
    let k = (-x.re).round();
    if k >= 0.0 && (1.0 - qpow(q, x + k)).norm() <= POLE_TOL {
        return Err(Error::Pole(format!("Γ_q({x}) with q = {q}")));
    }
    let den = qpochhammer_inf(qpow(q, x), q);
    let num = qpochhammer_inf(Complex64::new(q, 0.0), q);
    Ok(num / den * ((1.0 - x) * (1.0 - q).ln()).exp())
}

/// `1/Γ_q(x)`, entire in `x`; vanishes at the poles of [`qgamma`].
pub fn qgamma_recip(x: Complex64, q: f64) -> Complex64 {
    let den = qpochhammer_inf(qpow(q, x), q);
    let num = qpochhammer_inf(Complex64::new(q, 0.0), q);
    den / num * ((x - 1.0) * (1.0 - q).ln()).exp()
}

fn check_base(q: f64) -> Result<()> {
    if q > 0.0 && q < 1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("q-Gamma needs 0 < q < 1, got {q}")))
    }
}

/// `q^x` on the principal branch.
pub(crate) fn qpow(q: f64, x: Complex64) -> Complex64 {
    (x * q.ln()).exp()
}
