//! Cartan data, positive roots and coroots, Weyl orbits of integral weights.

mod cartan;
mod datum;
mod weight;

pub use cartan::{CartanMatrix, CartanType, Family};
pub use datum::{LengthClass, RootDatum};
pub use weight::Weight;

pub(crate) use datum::{dual_from_orbit, orbit, orbit_size};
