//! The `U_q(sl2)` symmetry of the quantum disc: generator actions, Hopf data,
//! the Casimir element, the invariant Laplacian and its radial part, and
//! invariance residuals for elements and two-leg kernels.

mod action;
mod hopf;
mod invariance;
mod laplacian;

pub use action::{act, sector_grading, t_phi, Generator, SectorSpace};
pub use hopf::{casimir, casimir_apply, defining_relations, UqElement};
pub use invariance::{
    blocks_diff_sup, blocks_sup, invariance_residual, kernel_invariance_residual, KernelBlocks,
    TwoLeg,
};
pub use laplacian::{laplacian_apply, laplacian_power, radial_laplacian, sector_laplacian_matrix};
