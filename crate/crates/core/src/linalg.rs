//! Small dense square matrices and a Cholesky factorization, generic over
//! the scalar type. Storage is row-major.

use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(n: usize) -> Self {
        Matrix { n, data: vec![T::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Every entry equal to `value`.
    pub fn filled(n: usize, value: T) -> Self {
        Matrix { n, data: vec![value; n * n] }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Matrix { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn row_sums(&self) -> Vec<T> {
        (0..self.n).map(|i| self.row(i).iter().copied().sum()).collect()
    }

    pub fn max_abs(&self) -> T {
        self.data.iter().fold(T::zero(), |acc, &x| acc.max(x.abs()))
    }

    /// Largest elementwise absolute difference.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        assert_eq!(self.n, other.n, "dimension mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .fold(T::zero(), |acc, (&a, &b)| acc.max((a - b).abs()))
    }

    pub fn is_symmetric(&self, tol: T) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| (self[(i, j)] - self[(j, i)]).abs() <= tol))
    }

    pub fn add_scalar(&self, c: T) -> Self {
        Matrix { n: self.n, data: self.data.iter().map(|&x| x + c).collect() }
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == T::zero() {
                    continue;
                }
                let src = rhs.row(k);
                let dst = &mut out.data[i * n..(i + 1) * n];
                for (d, &s) in dst.iter_mut().zip(src) {
                    *d += a * s;
                }
            }
        }
        out
    }

    /// `self += scale * x xᵀ`.
    pub fn rank_one_update(&mut self, x: &[T], scale: T) {
        let n = self.n;
        assert_eq!(x.len(), n, "dimension mismatch");
        for i in 0..n {
            let a = scale * x[i];
            let dst = &mut self.data[i * n..(i + 1) * n];
            for (d, &xj) in dst.iter_mut().zip(x) {
                *d += a * xj;
            }
        }
    }

    /// `self · (e_u − e_v)`, i.e. column `u` minus column `v`.
    pub fn times_incidence(&self, u: usize, v: usize) -> Vec<T> {
        (0..self.n).map(|i| self[(i, u)] - self[(i, v)]).collect()
    }

    /// `Mᵤᵤ − Mᵤᵥ − Mᵥᵤ + Mᵥᵥ`, the quadratic form of the signed incidence
    /// vector of `(u, v)`.
    pub fn incidence_quadratic(&self, u: usize, v: usize) -> T {
        self[(u, u)] - self[(u, v)] - self[(v, u)] + self[(v, v)]
    }

    pub fn cholesky(&self) -> Result<Cholesky<T>> {
        Cholesky::factor(self)
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.n + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.n + j]
    }
}

/// Lower-triangular factor `L` with `A = L Lᵀ`.
#[derive(Clone, Debug)]
pub struct Cholesky<T> {
    lower: Matrix<T>,
}

impl<T: Scalar> Cholesky<T> {
    /// Only the lower triangle of `a` is read.
    pub fn factor(a: &Matrix<T>) -> Result<Self> {
        let n = a.n;
        let mut l = Matrix::zeros(n);
        for j in 0..n {
            for i in j..n {
                let (ri, rj) = (&l.data[i * n..i * n + j], &l.data[j * n..j * n + j]);
                let dot: T = ri.iter().zip(rj).map(|(&x, &y)| x * y).sum();
                let s = a[(i, j)] - dot;
                if i == j {
                    if s.partial_cmp(&T::zero()) != Some(std::cmp::Ordering::Greater) {
                        return Err(Error::NumericalFailure(format!(
                            "matrix is not positive definite (pivot {j} = {s})"
                        )));
                    }
                    l[(j, j)] = s.sqrt();
                } else {
                    l[(i, j)] = s / l[(j, j)];
                }
            }
        }
        Ok(Cholesky { lower: l })
    }

    pub fn lower(&self) -> &Matrix<T> {
        &self.lower
    }

    pub fn determinant(&self) -> T {
        let n = self.lower.n;
        (0..n).map(|i| self.lower[(i, i)]).fold(T::one(), |acc, d| acc * d * d)
    }

    pub fn log_determinant(&self) -> T {
        let n = self.lower.n;
        let two = T::one() + T::one();
        (0..n).map(|i| two * self.lower[(i, i)].ln()).sum()
    }

    /// `A⁻¹ = L⁻ᵀ L⁻¹`, returned fully symmetric.
    pub fn inverse(&self) -> Matrix<T> {
        let n = self.lower.n;
        let l = &self.lower;

        // Rows of W = L⁻¹ by forward substitution on rows.
        let mut w = Matrix::zeros(n);
        for i in 0..n {
            let mut row = vec![T::zero(); i + 1];
            row[i] = T::one();
            for k in 0..i {
                let lik = l[(i, k)];
                if lik == T::zero() {
                    continue;
                }
                for (r, &wk) in row.iter_mut().zip(&w.data[k * n..k * n + k + 1]) {
                    *r -= lik * wk;
                }
            }
            let inv_d = T::one() / l[(i, i)];
            for (j, r) in row.into_iter().enumerate() {
                w[(i, j)] = r * inv_d;
            }
        }

        // Lower triangle of Wᵀ W, accumulated one row of W at a time.
        let mut out = Matrix::zeros(n);
        for k in 0..n {
            let wk = &w.data[k * n..k * n + k + 1];
            for i in 0..=k {
                let a = wk[i];
                if a == T::zero() {
                    continue;
                }
                let dst = &mut out.data[i * n..i * n + i + 1];
                for (d, &b) in dst.iter_mut().zip(&wk[..=i]) {
                    *d += a * b;
                }
            }
        }
        for i in 0..n {
            for j in 0..i {
                out[(j, i)] = out[(i, j)];
            }
        }
        out
    }
}
