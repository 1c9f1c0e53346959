//! The noncrossing partition lattice `NC(γ)`, its m-divisible
//! generalization `NC_(m)(γ)`, Möbius values, the natural edge labeling and
//! falling chains.

mod labels;
mod lattice;
mod ncm;
#[cfg(test)]
mod tests;

pub use labels::{Chain, EdgeLabel};
pub use lattice::{Cover, NcLattice};
pub use ncm::{CoverExport, LabelExport, NcmPoset, PosetExport};
