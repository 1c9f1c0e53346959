use std::fmt::Debug;
use std::ops::Neg;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, Signed};

/// An integral domain with exact division whenever the quotient exists.
///
/// Integers (`i64`, `BigInt`), rationals and floats all qualify. Fraction-free
/// elimination only ever divides by a previous pivot, which is exact in every
/// such ring.
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> {}

impl<T> Scalar for T where T: Clone + Debug + PartialEq + Num + Neg<Output = T> {}

/// A [`Scalar`] in which every nonzero element is invertible.
pub trait Field: Scalar {}

impl<T> Field for Ratio<T> where T: Clone + Debug + Integer + Signed {}
impl Field for f32 {}
impl Field for f64 {}
