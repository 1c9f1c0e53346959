use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use crate::exact::Scalar;

/// A polynomial in `x` and `y`, stored sparsely as `(deg_x, deg_y) → c`
/// with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiPoly<T> {
    terms: BTreeMap<(u32, u32), T>,
}

impl<T: Scalar> Default for BiPoly<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> BiPoly<T> {
    pub fn zero() -> Self {
        BiPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial(dx: u32, dy: u32, c: T) -> Self {
        let mut p = Self::zero();
        p.add_term(dx, dy, c);
        p
    }

    pub fn x() -> Self {
        Self::monomial(1, 0, T::one())
    }

    pub fn y() -> Self {
        Self::monomial(0, 1, T::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (u32, u32, T)>) -> Self {
        let mut p = Self::zero();
        for (dx, dy, c) in terms {
            p.add_term(dx, dy, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c·x^dx·y^dy` in place.
    pub fn add_term(&mut self, dx: u32, dy: u32, c: T) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((dx, dy)).or_insert_with(T::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&(dx, dy));
        }
    }

    pub fn coeff(&self, dx: u32, dy: u32) -> T {
        self.terms.get(&(dx, dy)).cloned().unwrap_or_else(T::zero)
    }

    /// Nonzero terms ordered by `(deg_x, deg_y)`.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &T)> {
        self.terms.iter().map(|(&(dx, dy), c)| (dx, dy, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(dx, dy)| dx + dy).max()
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_terms(self.terms().map(|(dx, dy, v)| (dx, dy, v.clone() * c.clone())))
    }

    /// `p(x, 0)`.
    pub fn at_y_zero(&self) -> Self {
        Self::from_terms(self.terms().filter(|t| t.1 == 0).map(|(dx, _, c)| (dx, 0, c.clone())))
    }

    /// `p(s·x, t·y)` for scalars `s`, `t`.
    pub fn rescale(&self, s: &T, t: &T) -> Self {
        Self::from_terms(self.terms().map(|(dx, dy, c)| {
            let f = (0..dx).fold(T::one(), |a, _| a * s.clone());
            let g = (0..dy).fold(T::one(), |a, _| a * t.clone());
            (dx, dy, c.clone() * f * g)
        }))
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> BiPoly<U> {
        BiPoly::from_terms(self.terms().map(|(dx, dy, c)| (dx, dy, f(c))))
    }
}

impl<T: Scalar> Add for &BiPoly<T> {
    type Output = BiPoly<T>;
    fn add(self, rhs: &BiPoly<T>) -> BiPoly<T> {
        let mut out = self.clone();
        for (dx, dy, c) in rhs.terms() {
            out.add_term(dx, dy, c.clone());
        }
        out
    }
}

impl<T: Scalar> Sub for &BiPoly<T> {
    type Output = BiPoly<T>;
    fn sub(self, rhs: &BiPoly<T>) -> BiPoly<T> {
        self + &(-rhs)
    }
}

impl<T: Scalar> Neg for &BiPoly<T> {
    type Output = BiPoly<T>;
    fn neg(self) -> BiPoly<T> {
        self.map(|c| -c.clone())
    }
}

impl<T: Scalar> Mul for &BiPoly<T> {
    type Output = BiPoly<T>;
    fn mul(self, rhs: &BiPoly<T>) -> BiPoly<T> {
        let mut out = BiPoly::zero();
        for (a, b, c) in self.terms() {
            for (d, e, f) in rhs.terms() {
                out.add_term(a + d, b + e, c.clone() * f.clone());
            }
        }
        out
    }
}

/// Terms by total degree, then by decreasing power of `x`:
/// `1 + 3x + 2y + 2x^2 + 2xy + y^2`.
impl<T: Scalar + Signed + fmt::Display> fmt::Display for BiPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<(u32, u32, &T)> = self.terms().collect();
        terms.sort_by_key(|&(dx, dy, _)| (dx + dy, std::cmp::Reverse(dx)));
        for (k, (dx, dy, c)) in terms.into_iter().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let bare = dx + dy > 0;
            if !bare || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            for (var, d) in [("x", dx), ("y", dy)] {
                match d {
                    0 => {}
                    1 => write!(f, "{var}")?,
                    _ => write!(f, "{var}^{d}")?,
                }
            }
        }
        Ok(())
    }
}
