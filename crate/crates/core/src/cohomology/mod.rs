//! Normalized cochains with `Z/d` coefficients, the connecting homomorphism,
//! class-zero decisions, and the Borel double complex.

mod cochain;
mod double;
mod obstruction;

pub use cochain::{class_zero, coboundary, coboundary_matrix, connecting_zeta, Cochain, Connecting};
pub use double::{as_vertical, vertical_part, BiCochain, DoubleComplex, Triple};
pub use obstruction::{
    convention_self_test, equivariant_obstruction, gamma, gamma_g, gamma_tilde_g, phi_from_trivialization,
    pull_along_c, two_step_class_zero, BorelGamma, EquivariantObstruction, ObstructionReport, TildeGamma,
};

#[cfg(test)]
mod tests;
