//! Dense matrices over an exact scalar ring.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{Num, Zero};

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone + Num> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    /// The all-ones matrix.
    pub fn ones(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::one(); rows * cols],
        }
    }

    /// Builds from nested rows; `None` when rows are ragged.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Option<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return None;
        }
        Some(Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        Matrix {
            rows,
            cols,
            data: (0..rows * cols).map(|k| f(k / cols, k % cols)).collect(),
        }
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

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn scale(&self, k: &T) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.clone() * k.clone()).collect(),
        }
    }

    /// `self - k I`.
    pub fn shift(&self, k: &T) -> Self {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            let x = m.get(i, i).clone() - k.clone();
            m.set(i, i, x);
        }
        m
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    /// Rank by fraction-free (Bareiss) elimination: every intermediate entry
    /// is a minor of the input, so integer inputs stay integers.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut prev = T::one();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
                continue;
            };
            a.swap_rows(r, p);
            let pivot = a.get(r, c).clone();
            for i in r + 1..a.rows {
                let lead = a.get(i, c).clone();
                for j in c + 1..a.cols {
                    let x = (pivot.clone() * a.get(i, j).clone() - lead.clone() * a.get(r, j).clone())
                        / prev.clone();
                    a.set(i, j, x);
                }
                a.set(i, c, T::zero());
            }
            prev = pivot;
            r += 1;
        }
        r
    }

    /// `cols - rank`.
    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<T: Clone + Num> Add for &Matrix<T> {
    type Output = Matrix<T>;

    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<T: Clone + Num> Sub for &Matrix<T> {
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

impl<T: Clone + Num> Mul for &Matrix<T> {
    type Output = Matrix<T>;

    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Matrix::<T>::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let x = out.get(i, j).clone() + a.clone() * rhs.get(k, j).clone();
                    out.set(i, j, x);
                }
            }
        }
        out
    }
}

impl<T: Clone + Num + fmt::Display> fmt::Display for Matrix<T> {
    /// One line per row, entries separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use proptest::prelude::*;

    type M = Matrix<BigInt>;

    fn int(rows: Vec<Vec<i64>>) -> M {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn trivial_nullities() {
        assert_eq!(M::zeros(3, 3).nullity(), 3);
        assert_eq!(M::identity(4).nullity(), 0);
        assert_eq!(M::ones(5, 5).rank(), 1);
    }

    #[test]
    fn c4_adjacency_nullity() {
        let a = int(vec![
            vec![0, 1, 0, 1],
            vec![1, 0, 1, 0],
            vec![0, 1, 0, 1],
            vec![1, 0, 1, 0],
        ]);
        assert_eq!(a.nullity(), 2);
        assert_eq!(a.shift(&BigInt::from(2)).nullity(), 1);
        assert_eq!(a.shift(&BigInt::from(-2)).nullity(), 1);
    }

    #[test]
    fn products() {
        let a = int(vec![vec![1, 2], vec![3, 4]]);
        let b = int(vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(&a * &b, int(vec![vec![2, 1], vec![4, 3]]));
        assert_eq!(&(&a + &b) - &b, a);
        assert_eq!(a.scale(&BigInt::from(2)), &a + &a);
        assert_eq!(a.apply(&[BigInt::from(1), BigInt::from(1)]), vec![BigInt::from(3), BigInt::from(7)]);
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(Matrix::<i64>::from_rows(vec![vec![1, 2], vec![3]]).is_none());
    }

    /// Plain Gaussian elimination over the rationals.
    fn rational_rank(rows: &[Vec<i64>]) -> usize {
        let mut a: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
            .collect();
        let (m, n) = (a.len(), a.first().map_or(0, Vec::len));
        let mut r = 0;
        for c in 0..n {
            let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            for i in 0..m {
                if i != r && !a[i][c].is_zero() {
                    let f = a[i][c].clone() / a[r][c].clone();
                    let pivot_row = a[r].clone();
                    for (x, p) in a[i][c..n].iter_mut().zip(&pivot_row[c..n]) {
                        *x -= p.clone() * f.clone();
                    }
                }
            }
            r += 1;
        }
        r
    }

    proptest! {
        #[test]
        fn bareiss_matches_rational_elimination(
            rows in (1usize..7, 1usize..7).prop_flat_map(|(m, n)| {
                prop::collection::vec(prop::collection::vec(-3i64..=3, n), m)
            })
        ) {
            let big = int(rows.clone());
            prop_assert_eq!(big.rank(), rational_rank(&rows));
            let small = Matrix::from_rows(rows.clone()).unwrap();
            prop_assert_eq!(small.rank(), rational_rank(&rows));
        }

        #[test]
        fn low_rank_products(
            left in prop::collection::vec(prop::collection::vec(-2i64..=2, 2), 5),
            right in prop::collection::vec(prop::collection::vec(-2i64..=2, 5), 2),
        ) {
            let p = &int(left) * &int(right);
            prop_assert!(p.rank() <= 2);
        }
    }
}
