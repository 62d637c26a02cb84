//! Scalar q-special functions: Pochhammer symbols, the q-Gamma function, basic
//! hypergeometric series, the Jackson integral on the grid `q^{2Z+}`, the
//! logarithmic-derivative sums `L_k` and the Euler dilogarithm used by the
//! classical-limit comparisons.

mod dilog;
mod gamma;
mod hypergeometric;
mod jackson;
mod lsum;
mod pochhammer;

pub use dilog::dilogarithm;
pub use gamma::{qgamma, qgamma_recip};
pub use hypergeometric::{basic_hypergeometric, basic_hypergeometric_tol};
pub use jackson::{jackson_integral, JacksonSum};
pub use lsum::{l_sum, l_sum_tol};
pub use pochhammer::{qpochhammer, qpochhammer_inf, qpochhammer_tol};

/// Default absolute tail bound for truncated products and series.
pub const DEFAULT_SERIES_TOL: f64 = 1e-14;

/// Length of a Pochhammer product or `L`-sum: a finite count or `∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    Finite(usize),
    Infinite,
}

impl From<usize> for Order {
    fn from(n: usize) -> Self {
        Order::Finite(n)
    }
}
