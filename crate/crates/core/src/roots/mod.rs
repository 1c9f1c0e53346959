//! Crystallographic root systems, the bipartite Coxeter element, the
//! `ρ`-ordering of almost positive roots and the rotation maps.

mod cartan;
mod order;
mod system;

pub use cartan::{CartanType, Family, RootSystemSpec};
pub use order::ColoredRoot;
pub use system::{Component, Parabolic, RootId, RootSystem};
