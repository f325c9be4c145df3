pub mod algebra;
pub mod cohomology;
pub mod error;
pub mod gaction;
pub mod gallery;
pub mod pauli;
pub mod pgext;
pub mod sdist;
pub mod simplicial;

pub use error::{Error, Result};
