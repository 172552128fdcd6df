//! Dense matrices over an exact [`Scalar`] ring.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
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
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Builds a matrix from row vectors. Panics on ragged input.
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

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&v| T::from_i64(v)).collect())
                .collect(),
        )
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

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        if self.cols == 0 {
            return vec![Vec::new(); self.rows];
        }
        self.data.chunks(self.cols).map(<[T]>::to_vec).collect()
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn set_column(&mut self, j: usize, col: &[T]) {
        assert_eq!(col.len(), self.rows);
        for (i, v) in col.iter().enumerate() {
            self[(i, j)] = v.clone();
        }
    }

    pub fn trace(&self) -> T {
        assert!(self.is_square());
        (0..self.rows).fold(T::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = &self[(i, j)];
                    if i == j {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Determinant by Bareiss fraction-free elimination; every division
    /// is exact over the integers.
    pub fn determinant(&self) -> T {
        assert!(self.is_square(), "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return T::one();
        }
        let mut a = self.clone();
        let mut sign = T::one();
        let mut prev = T::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&r| !a[(r, k)].is_zero()) {
                    Some(r) => {
                        a.swap_rows(k, r);
                        sign = -sign;
                    }
                    None => return T::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a[(i, j)].clone() * a[(k, k)].clone()
                        - a[(i, k)].clone() * a[(k, j)].clone())
                        / prev.clone();
                    a[(i, j)] = v;
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * a[(n - 1, n - 1)].clone()
    }

    pub fn is_unimodular(&self) -> bool {
        self.is_square() && self.determinant().abs().is_one()
    }

    /// Exact inverse of a matrix with determinant ±1, via the adjugate.
    pub fn inverse_unimodular(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let det = self.determinant();
        if !det.abs().is_one() {
            return None;
        }
        let n = self.rows;
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let cof = self.minor(i, j).determinant();
                let signed = if (i + j) % 2 == 0 { cof } else { -cof };
                // adj(A)[j][i] = cofactor(i, j)
                inv[(j, i)] = signed * det.clone();
            }
        }
        Some(inv)
    }

    fn minor(&self, row: usize, col: usize) -> Self {
        let data = (0..self.rows)
            .filter(|&i| i != row)
            .flat_map(|i| {
                (0..self.cols)
                    .filter(move |&j| j != col)
                    .map(move |j| (i, j))
            })
            .map(|(i, j)| self[(i, j)].clone())
            .collect();
        Matrix {
            rows: self.rows - 1,
            cols: self.cols - 1,
            data,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Integer power by repeated squaring.
    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// Smallest `k` in `1..=max` with `self^k = I`.
    pub fn multiplicative_order(&self, max: u32) -> Option<u32> {
        let mut p = self.clone();
        for k in 1..=max {
            if p.is_identity() {
                return Some(k);
            }
            p = &p * self;
        }
        None
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;

    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Matrix::<T>::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out[(i, j)].clone() + a.clone() * rhs[(k, j)].clone();
                    out[(i, j)] = v;
                }
            }
        }
        out
    }
}

impl<T: Scalar> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl<T: Scalar> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.to_rows().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Row-major nested arrays.
impl<T: Scalar + Serialize> Serialize for Matrix<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows = self.to_rows();
        let mut seq = serializer.serialize_seq(Some(rows.len()))?;
        for row in &rows {
            seq.serialize_element(row)?;
        }
        seq.end()
    }
}
