//! Harmonic analysis on the quantum unit disc.
//!
//! The crate models the algebra of functions on the quantum disc in sector normal
//! form, the covariant action of `U_q(sl2)` and the invariant Laplacian built from
//! its Casimir element, the spherical transform of the radial Laplacian, and the
//! explicit Green kernels inverting the Laplacian and its square.

pub mod context;
pub mod discalg;
pub mod error;
pub mod exec;
pub mod green;
pub mod qspecial;
pub mod spherical;
pub mod uqsl2;
pub mod verify;

pub use context::{Execution, QContext};
pub use discalg::{DiscElement, GridFunction};
pub use error::{Error, Result};
