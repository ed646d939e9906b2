//! Exact computer algebra for deformations of Lie algebras, formal jet
//! calculus of linear systems of PDE, and Vessiot structure equations.

pub mod error;
pub mod foundation;
pub mod jet;
pub mod lie_deform;
pub mod vessiot;

pub use error::{Error, Result};
