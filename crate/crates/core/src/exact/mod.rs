//! Exact scalar arithmetic: vectors and square matrices over any ring that
//! satisfies [`Scalar`], with fraction-free elimination for rank and inverse.

mod matrix;
mod scalar;
mod vector;

pub use matrix::{reflection_matrix, reflection_matrix_in_form, Matrix};
pub use scalar::{Field, Scalar};
pub use vector::Vector;
