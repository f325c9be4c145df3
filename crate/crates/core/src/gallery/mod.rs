//! Worked scenarios: the torus, the dihedral extension, and Mermin's star.

pub mod anchors;
mod dihedral;
mod mermin;
mod torus;

pub use dihedral::Dihedral;
pub use mermin::{label_action, Mermin, SYMMETRY, WITNESS_EDGES};
pub use torus::Torus;
