use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Smallest deformation parameter accepted for grid computations.
pub const Q_MIN: f64 = 0.05;
/// Largest deformation parameter accepted for grid computations.
pub const Q_MAX: f64 = 0.995;

/// How independent evaluations (quadrature nodes, grid points, kernel terms) are scheduled.
///
/// Results never depend on the choice: parallel maps collect in index order and every
/// reduction runs sequentially afterwards.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

/// Deformation parameter together with the truncation horizons and tolerances
/// shared by every module.
#[derive(Clone, Debug, PartialEq)]
pub struct QContext {
    q: f64,
    h: f64,
    /// Absolute tail bound at which truncated series stop.
    pub series_tol: f64,
    /// Largest grid index `n` (grid point `q^{2n}`) that finite functions may occupy.
    pub grid_horizon: usize,
    /// Largest `k` admitted in the double sums defining kernels.
    pub trunc_terms: usize,
    /// Maximal number of `m` terms in the Green kernel series.
    pub green_terms: usize,
    /// Initial node count of the periodic trapezoid rule.
    pub quad_min_nodes: usize,
    /// Node count after which refinement gives up.
    pub quad_max_nodes: usize,
    /// Change between successive refinements accepted as converged.
    pub quad_tol: f64,
    /// Node count of the sampled spectral functions produced by the forward transform.
    pub transform_nodes: usize,
    pub exec: Execution,
}

impl QContext {
    /// Context with default horizons; `q` must lie in `[Q_MIN, Q_MAX]`.
    pub fn new(q: f64) -> Result<Self> {
        if !(Q_MIN..=Q_MAX).contains(&q) {
            return Err(Error::InvalidParameter(format!(
                "q = {q} outside [{Q_MIN}, {Q_MAX}]"
            )));
        }
        Ok(Self {
            q,
            h: -2.0 * q.ln(),
            series_tol: 1e-14,
            grid_horizon: 64,
            trunc_terms: 60,
            green_terms: 200,
            quad_min_nodes: 64,
            quad_max_nodes: 8192,
            quad_tol: 1e-10,
            transform_nodes: 1024,
            exec: Execution::default(),
        })
    }

    pub fn with_grid_horizon(mut self, n: usize) -> Self {
        self.grid_horizon = n;
        self
    }

    pub fn with_series_tol(mut self, tol: f64) -> Self {
        self.series_tol = tol;
        self
    }

    pub fn with_green_terms(mut self, m: usize) -> Self {
        self.green_terms = m;
        self
    }

    pub fn with_transform_nodes(mut self, n: usize) -> Self {
        self.transform_nodes = n;
        self
    }

    pub fn with_execution(mut self, exec: Execution) -> Self {
        self.exec = exec;
        self
    }

    /// Checks the tolerance and horizon fields after manual edits.
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("series_tol", self.series_tol),
            ("quad_tol", self.quad_tol),
        ];
        for (name, v) in positive {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::InvalidParameter(format!("{name} must be positive")));
            }
        }
        if self.quad_min_nodes < 2 || self.quad_max_nodes < self.quad_min_nodes {
            return Err(Error::InvalidParameter("quadrature node range is empty".into()));
        }
        if self.transform_nodes < 2 || !self.transform_nodes.is_multiple_of(2) {
            return Err(Error::InvalidParameter("transform_nodes must be even and at least 2".into()));
        }
        if self.green_terms == 0 {
            return Err(Error::InvalidParameter("green_terms must be positive".into()));
        }
        Ok(())
    }

    #[inline]
    pub fn q(&self) -> f64 {
        self.q
    }

    /// `h = ln q^{-2}`.
    #[inline]
    pub fn h(&self) -> f64 {
        self.h
    }

    /// `q^2`, the base of every Pochhammer symbol on the grid.
    #[inline]
    pub fn q2(&self) -> f64 {
        self.q * self.q
    }

    /// Grid point `q^{2n}`.
    #[inline]
    pub fn grid_point(&self, n: i64) -> f64 {
        (-(n as f64) * self.h).exp()
    }

    /// Period `2π/h` of every function of the spectral variable.
    #[inline]
    pub fn spectral_period(&self) -> f64 {
        2.0 * std::f64::consts::PI / self.h
    }
}
