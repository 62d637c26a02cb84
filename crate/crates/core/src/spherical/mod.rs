//! Spectral theory of the radial Laplacian: spherical functions, the Plancherel
//! measure, the spherical transform pair and truncated spectrum probes.

mod eigen;
mod plancherel;
mod spectrum;
mod transform;

pub use eigen::{c_function, lambda_rho, phi_rho, phi_rho_hypergeometric, phi_rho_values, psi_rho};
pub use plancherel::{sigma_density, PlancherelMeasure};
pub use spectrum::{spectrum_probe, spectrum_segment, symmetrized_radial_matrix, truncated_spectrum};
pub use transform::{
    transform_forward, transform_forward_nodes, transform_inverse, transform_inverse_fn,
    trapezoid_nodes, QuadratureRule, SpectralFunction,
};
