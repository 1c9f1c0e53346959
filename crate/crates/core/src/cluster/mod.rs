//! Compatibility, m-compatibility, the generalized cluster complex and the
//! face criterion through m-divisible noncrossing partitions.

mod compat;
mod complex;
mod criterion;
mod face;

pub use compat::{compatible, compatible_by_mu, compatible_by_rotation, m_compatible, m_compatible_by_rotation};
pub use complex::{ClusterComplex, ComplexSummary};
pub use criterion::{face_by_ncm_criterion, face_element, face_tuple, face_tuple_factors, positive_subcomplex_facets, w_of_part};
pub use face::Face;
