//! Minuscule representations of root systems, drops of quadratic root
//! elements, an exact matrix oracle, and the case analysis deciding which
//! bad-reduction criteria settle the Mumford-Tate conjecture for an abelian
//! variety of given dimension, toric dimension and endomorphism type.

pub mod arith;
pub mod drop_kit;
mod error;
pub mod matrix_oracle;
pub mod minuscule;
pub mod mt_decision;
pub mod root_kit;
mod serde_big;

pub use error::{Error, Result};
