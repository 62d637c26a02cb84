//! The function algebra of the quantum disc: grid functions on `q^{2Z+}`,
//! elements in sector normal form, the invariant integral and the weighted-shift
//! representation used as an oracle.

mod element;
mod grid;
mod json;
mod rep;

pub use element::DiscElement;
pub use grid::GridFunction;
pub use json::{ElementDoc, SectorDoc};
pub use rep::{rep_matrix, RepMatrix};
