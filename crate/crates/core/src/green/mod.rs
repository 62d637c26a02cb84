//! Green functions of the invariant Laplacian: the radial solutions `g₁`, `g₂`,
//! the kernels `G_l` and `Ĝ_l`, the assembled Green kernels `𝔾₁`, `𝔾₂`, their
//! action as integral operators, and classical-limit studies.

mod apply;
mod coefficients;
mod kernel;
mod limit;
mod radial;

pub use apply::{apply_kernel, green_solve, KernelApplication};
pub use coefficients::{green1_coefficient, green2_coefficient, series_terms, GreenOrder, SeriesTerm};
pub use kernel::{kernel_assembled, kernel_g, Kernel, KernelKind, KernelMode, KernelTerm};
pub use limit::{classical_limit_report, classical_s2, limit_series, LimitReport, LimitRow};
pub use radial::{g_hat, g_radial, g_radial_values, gm_quadrature};
