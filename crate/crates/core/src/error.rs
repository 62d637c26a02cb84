use thiserror::Error;

/// Errors raised by the quantum-disc library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Argument outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A vanishing denominator (Pochhammer factor, q-Gamma pole, L-sum term).
    #[error("pole encountered: {0}")]
    Pole(String),
    /// Grid index outside the configured horizon.
    #[error("grid index {index} outside horizon 0..={horizon}")]
    Range { index: i64, horizon: usize },
    /// A product, action or truncated series would exceed the configured bounds.
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    /// Periodic trapezoid refinement did not settle.
    #[error("quadrature did not converge: {nodes} nodes, last change {change:e} > tolerance {tolerance:e}")]
    Quadrature {
        nodes: usize,
        change: f64,
        tolerance: f64,
    },
    /// Invalid configuration parameter.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
