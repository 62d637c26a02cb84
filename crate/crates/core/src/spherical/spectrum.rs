use nalgebra::{DMatrix, SymmetricEigen};

use crate::context::QContext;
use crate::error::{Error, Result};

/// The radial Laplacian on grid indices `0..dim`, symmetrised by `diag(q^{-n})`.
///
/// With `c = q^2/(1-q^2)^2` the diagonal is `c(2q^{2n} - 1 - q^{-2})` and the
/// off-diagonal `c(q^{-1} - q^{2n+1})`.
pub fn symmetrized_radial_matrix(dim: usize, ctx: &QContext) -> DMatrix<f64> {
    let q = ctx.q();
    let q2 = ctx.q2();
    let c = q2 / (1.0 - q2).powi(2);
    DMatrix::from_fn(dim, dim, |i, j| {
        let n = i.min(j) as i32;
        if i == j {
            c * (2.0 * q2.powi(n) - 1.0 - 1.0 / q2)
        } else if i.abs_diff(j) == 1 {
            c * (1.0 / q - q * q2.powi(n))
        } else {
            0.0
        }
    })
}

/// All eigenvalues of the symmetrised truncation, ascending.
pub fn truncated_spectrum(dim: usize, ctx: &QContext) -> Result<Vec<f64>> {
    if dim < 2 {
        return Err(Error::InvalidParameter("spectrum probe needs dim ≥ 2".into()));
    }
    let mut ev: Vec<f64> = SymmetricEigen::new(symmetrized_radial_matrix(dim, ctx))
        .eigenvalues
        .iter()
        .copied()
        .collect();
    ev.sort_by(f64::total_cmp);
    Ok(ev)
}

/// Extreme eigenvalues `(min, max)` of the symmetrised truncation.
pub fn spectrum_probe(dim: usize, ctx: &QContext) -> Result<(f64, f64)> {
    let ev = truncated_spectrum(dim, ctx)?;
    Ok((ev[0], ev[ev.len() - 1]))
}

/// The continuous spectrum `[-1/(1-q)^2, -1/(1+q)^2]`.
pub fn spectrum_segment(ctx: &QContext) -> (f64, f64) {
    let q = ctx.q();
    (-1.0 / (1.0 - q).powi(2), -1.0 / (1.0 + q).powi(2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two_closed_form() {
        let ctx = QContext::new(0.5).unwrap();
        let m = symmetrized_radial_matrix(2, &ctx);
        let (a, b, d) = (m[(0, 0)], m[(0, 1)], m[(1, 1)]);
        let mid = 0.5 * (a + d);
        let rad = (0.25 * (a - d).powi(2) + b * b).sqrt();
        let (lo, hi) = spectrum_probe(2, &ctx).unwrap();
        assert!((lo - (mid - rad)).abs() < 1e-12);
        assert!((hi - (mid + rad)).abs() < 1e-12);
        let (s0, s1) = spectrum_segment(&ctx);
        assert!(lo >= s0 - 1e-8 && hi <= s1 + 1e-8);
    }

    #[test]
    fn rejects_tiny_dimension() {
        let ctx = QContext::new(0.5).unwrap();
        assert!(spectrum_probe(1, &ctx).is_err());
    }
}
