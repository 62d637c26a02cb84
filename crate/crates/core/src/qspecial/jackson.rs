use num_complex::Complex64;

use crate::context::QContext;
use crate::discalg::GridFunction;

/// Outcome of a Jackson sum.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JacksonSum {
    pub value: Complex64,
    /// Bound on the neglected tail, assuming `|f|` beyond the known range does not
    /// exceed its last known magnitude. Zero for finitely supported `f`.
    pub tail_estimate: f64,
    /// Set when `tail_estimate` exceeds the context tolerance.
    pub truncation_warning: bool,
}

/// `∫_0^1 f(y) d_{q²}y = (1-q²) Σ_m f(q^{2m}) q^{2m}`.
pub fn jackson_integral(f: &GridFunction, ctx: &QContext) -> JacksonSum {
    let q2 = ctx.q2();
    let mut value = Complex64::new(0.0, 0.0);
    let mut w = 1.0;
    for v in f.values() {
        value += v * w;
        w *= q2;
    }
    value *= 1.0 - q2;
    let tail_estimate = if f.is_finite() {
        0.0
    } else {
        // (1-q²) Σ_{m>=L} |f_last| q^{2m} = |f_last| q^{2L}
        f.values().last().map_or(0.0, |v| v.norm() * w)
    };
    JacksonSum {
        value,
        tail_estimate,
        truncation_warning: tail_estimate > ctx.series_tol,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> QContext {
        QContext::new(0.6).unwrap()
    }

    #[test]
    fn constant_one() {
        let ctx = ctx();
        let one = GridFunction::constant(Complex64::new(1.0, 0.0), 200);
        let r = jackson_integral(&one, &ctx);
        assert!((r.value - 1.0).norm() < 1e-14);
        assert!(!r.truncation_warning);
    }

    #[test]
    fn single_point() {
        let ctx = ctx();
        let q2 = ctx.q2();
        let r = jackson_integral(&GridFunction::indicator(1), &ctx);
        assert!((r.value.re - (1.0 - q2) * q2).abs() < 1e-16);
        assert_eq!(r.tail_estimate, 0.0);
    }

    #[test]
    fn identity_function() {
        // (1-q²) Σ q^{4m} = 1/(1+q²)
        let ctx = ctx();
        let q2 = ctx.q2();
        let y = GridFunction::from_fn_truncated(200, |n| Complex64::new(ctx.grid_point(n as i64), 0.0));
        let r = jackson_integral(&y, &ctx);
        assert!((r.value.re - 1.0 / (1.0 + q2)).abs() < 1e-15);
    }

    #[test]
    fn non_decaying_function_warns() {
        let ctx = ctx();
        let grow = GridFunction::from_fn_truncated(10, |n| Complex64::new(ctx.grid_point(-2 * n as i64), 0.0));
        assert!(jackson_integral(&grow, &ctx).truncation_warning);
    }
}
