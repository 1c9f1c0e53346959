use std::ops::{Mul, Sub};

use super::{Field, Scalar, Vector};
use crate::error::{Error, Result};

/// A dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds the matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[Vector<T>]) -> Self {
        let cols = columns.len();
        let rows = columns.first().map_or(0, Vector::len);
        Self::from_fn(rows, cols, |i, j| columns[j][i].clone())
    }

    pub fn diagonal(entries: &[T]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |i, j| if i == j { entries[i].clone() } else { T::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector<T> {
        Vector::new((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn apply(&self, v: &Vector<T>) -> Vector<T> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        Vector::new(
            (0..self.rows)
                .map(|i| {
                    self.row(i)
                        .iter()
                        .zip(v.entries())
                        .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
                })
                .collect(),
        )
    }

    /// `uᵀ M v`, the bilinear form with Gram matrix `self`.
    pub fn bilinear(&self, u: &Vector<T>, v: &Vector<T>) -> T {
        u.dot(&self.apply(v))
    }

    pub fn map<U: Scalar>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Rank by fraction-free (Bareiss) elimination. Every division is by the
    /// previous pivot and is exact over any integral domain.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut prev = T::one();
        let mut rank = 0;
        for col in 0..a.cols {
            if rank == a.rows {
                break;
            }
            let Some(p) = (rank..a.rows).find(|&i| !a.get(i, col).is_zero()) else {
                continue;
            };
            a.swap_rows(p, rank);
            let pivot = a.get(rank, col).clone();
            for i in rank + 1..a.rows {
                let lead = a.get(i, col).clone();
                for j in col + 1..a.cols {
                    let v = (pivot.clone() * a.get(i, j).clone() - lead.clone() * a.get(rank, j).clone())
                        / prev.clone();
                    a.set(i, j, v);
                }
                a.set(i, col, T::zero());
            }
            prev = pivot;
            rank += 1;
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }
}

impl<T: Field> Matrix<T> {
    /// Exact inverse: fraction-free forward elimination on `[M | I]`
    /// followed by back substitution.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                T::one()
            } else {
                T::zero()
            }
        });
        let mut prev = T::one();
        for k in 0..n {
            let p = (k..n).find(|&i| !a.get(i, k).is_zero()).ok_or(Error::Singular)?;
            a.swap_rows(p, k);
            let pivot = a.get(k, k).clone();
            for i in k + 1..n {
                let lead = a.get(i, k).clone();
                for j in k + 1..2 * n {
                    let v = (pivot.clone() * a.get(i, j).clone() - lead.clone() * a.get(k, j).clone())
                        / prev.clone();
                    a.set(i, j, v);
                }
                a.set(i, k, T::zero());
            }
            prev = pivot;
        }
        for k in (0..n).rev() {
            let pivot = a.get(k, k).clone();
            for j in 0..2 * n {
                let v = a.get(k, j).clone() / pivot.clone();
                a.set(k, j, v);
            }
            for i in 0..k {
                let factor = a.get(i, k).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in 0..2 * n {
                    let v = a.get(i, j).clone() - factor.clone() * a.get(k, j).clone();
                    a.set(i, j, v);
                }
            }
        }
        Ok(Self::from_fn(n, n, |i, j| a.get(i, n + j).clone()))
    }
}

impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;

    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(T::zero(), |acc, k| {
                acc + self.get(i, k).clone() * rhs.get(k, j).clone()
            })
        })
    }
}

impl<T: Scalar> Sub for &Matrix<T> {
    type Output = Matrix<T>;

    fn sub(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

/// Reflection through the hyperplane orthogonal to `root` under the standard
/// dot product: `I - 2 α αᵀ / (α·α)`.
pub fn reflection_matrix<T: Field>(root: &Vector<T>) -> Result<Matrix<T>> {
    reflection_matrix_in_form(&Matrix::identity(root.len()), root)
}

/// Reflection in `root` for the inner product with Gram matrix `gram`:
/// `x ↦ x - 2 (x·α)/(α·α) α`.
pub fn reflection_matrix_in_form<T: Field>(gram: &Matrix<T>, root: &Vector<T>) -> Result<Matrix<T>> {
    if root.is_zero() {
        return Err(Error::ZeroRoot);
    }
    let n = root.len();
    let g_alpha = gram.apply(root);
    let norm = root.dot(&g_alpha);
    if norm.is_zero() {
        return Err(Error::ZeroRoot);
    }
    let two = T::one() + T::one();
    Ok(Matrix::from_fn(n, n, |i, j| {
        let delta = if i == j { T::one() } else { T::zero() };
        delta - two.clone() * root[i].clone() * g_alpha[j].clone() / norm.clone()
    }))
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use proptest::prelude::*;

    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn qm(rows: &[&[(i64, i64)]]) -> Matrix<BigRational> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&(n, d)| q(n, d)).collect())
                .collect(),
        )
    }

    // Coxeter element R(σ1)R(σ2) of A2 in simple-root coordinates.
    fn gamma_a2() -> Matrix<BigRational> {
        qm(&[&[(0, 1), (-1, 1)], &[(1, 1), (-1, 1)]])
    }

    #[test]
    fn rank_small_cases() {
        assert_eq!(Matrix::<BigRational>::zeros(2, 2).rank(), 0);
        assert_eq!(Matrix::<BigRational>::identity(3).rank(), 3);
        let g = gamma_a2();
        assert_eq!((&g - &Matrix::identity(2)).rank(), 2);
        // integer ring works too
        let m = Matrix::<BigInt>::from_rows(vec![
            vec![2.into(), 4.into(), 6.into()],
            vec![1.into(), 2.into(), 3.into()],
            vec![0.into(), 1.into(), 5.into()],
        ]);
        assert_eq!(m.rank(), 2);
        let m = Matrix::<i64>::from_rows(vec![vec![0, 0, 1], vec![0, 0, 2], vec![0, 3, 0]]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn inverse_small_cases() {
        let i3 = Matrix::<BigRational>::identity(3);
        assert_eq!(i3.inverse().unwrap(), i3);
        let d = Matrix::diagonal(&[q(2, 1), q(3, 1)]);
        assert_eq!(d.inverse().unwrap(), Matrix::diagonal(&[q(1, 2), q(1, 3)]));
        let m = &Matrix::identity(2) - &gamma_a2();
        let x = m.inverse().unwrap();
        assert!((&m * &x).is_identity());
        // (I - γ)^{-1} for A2 computed by hand: I-γ = [[1,1],[-1,2]], det 3
        assert_eq!(x, qm(&[&[(2, 3), (-1, 3)], &[(1, 3), (1, 3)]]));
    }

    #[test]
    fn inverse_rejects_singular_and_non_square() {
        let m = qm(&[&[(1, 1), (2, 1)], &[(2, 1), (4, 1)]]);
        assert_eq!(m.inverse(), Err(Error::Singular));
        let r = Matrix::<BigRational>::zeros(2, 3);
        assert!(matches!(r.inverse(), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn inverse_needs_row_swap() {
        let m = qm(&[&[(0, 1), (1, 1)], &[(1, 1), (0, 1)]]);
        assert_eq!(m.inverse().unwrap(), m);
    }

    #[test]
    fn reflection_of_coordinate_axis() {
        let e1 = Vector::new(vec![q(1, 1), q(0, 1)]);
        let r = reflection_matrix(&e1).unwrap();
        assert_eq!(r, Matrix::diagonal(&[q(-1, 1), q(1, 1)]));
        assert_eq!(
            reflection_matrix(&Vector::<BigRational>::zeros(2)),
            Err(Error::ZeroRoot)
        );
    }

    #[test]
    fn reflection_in_cartan_form_of_a2() {
        let gram = qm(&[&[(2, 1), (-1, 1)], &[(-1, 1), (2, 1)]]);
        let s1 = Vector::new(vec![q(1, 1), q(0, 1)]);
        let s2 = Vector::new(vec![q(0, 1), q(1, 1)]);
        let r1 = reflection_matrix_in_form(&gram, &s1).unwrap();
        assert_eq!(r1.apply(&s2), Vector::new(vec![q(1, 1), q(1, 1)]));
        assert!((&r1 * &r1).is_identity());
        let r2 = reflection_matrix_in_form(&gram, &s2).unwrap();
        assert_eq!(&r1 * &r2, gamma_a2());
    }

    #[test]
    fn floats_fit_the_same_interface() {
        let m = Matrix::<f64>::from_rows(vec![vec![4.0, 0.0], vec![0.0, 0.5]]);
        assert_eq!(m.inverse().unwrap(), Matrix::from_rows(vec![vec![0.25, 0.0], vec![0.0, 2.0]]));
    }

    fn small_vec(len: usize) -> impl Strategy<Value = Vector<BigRational>> {
        prop::collection::vec((-4i64..=4, 1i64..=3), len)
            .prop_map(|v| Vector::new(v.into_iter().map(|(n, d)| q(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn reflections_are_orthogonal_involutions(a in small_vec(3), c in (1i64..5, 1i64..5)) {
            prop_assume!(!a.is_zero());
            let r = reflection_matrix(&a).unwrap();
            prop_assert!((&r.transpose() * &r).is_identity());
            prop_assert!((&r * &r).is_identity());
            prop_assert_eq!(r.apply(&a), -&a);
            let scaled = a.scale(&q(-c.0, c.1));
            prop_assert_eq!(reflection_matrix(&scaled).unwrap(), r);
        }

        #[test]
        fn reflections_fix_the_hyperplane(a in small_vec(3), x in small_vec(3)) {
            prop_assume!(!a.is_zero());
            let r = reflection_matrix(&a).unwrap();
            // project x onto a^⊥ and check it is fixed
            let coef = x.dot(&a) / a.dot(&a);
            let perp = &x - &a.scale(&coef);
            prop_assert_eq!(r.apply(&perp), perp);
        }

        #[test]
        fn inverse_is_two_sided(rows in prop::collection::vec(small_vec(3), 3)) {
            let m = Matrix::from_rows(rows.into_iter().map(Vector::into_entries).collect());
            match m.inverse() {
                Ok(inv) => {
                    prop_assert_eq!(m.rank(), 3);
                    prop_assert!((&inv * &m).is_identity());
                    prop_assert!((&m * &inv).is_identity());
                }
                Err(e) => {
                    prop_assert_eq!(e, Error::Singular);
                    prop_assert!(m.rank() < 3);
                }
            }
        }
    }
}
