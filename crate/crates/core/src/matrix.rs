use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Largest dimension any [`SquareMatrix`] may take (4096² entries).
///
/// Full-powerset matrices for frames above 12 elements exceed it, so they can
/// never be built by accident.
pub const MAX_MATRIX_DIM: usize = 1 << 12;

/// Dense row-major square matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix<T> {
    dim: usize,
    data: Vec<T>,
}

impl<T: Scalar> SquareMatrix<T> {
    pub fn zeros(dim: usize) -> Result<Self> {
        if dim > MAX_MATRIX_DIM {
            return Err(Error::MatrixTooLarge(dim));
        }
        Ok(Self {
            dim,
            data: vec![T::zero(); dim * dim],
        })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        for i in 0..dim {
            m[(i, i)] = T::one();
        }
        Ok(m)
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> T) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        for i in 0..dim {
            for j in 0..dim {
                m[(i, j)] = f(i, j);
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks(self.dim.max(1)).take(self.dim)
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut out = Self::zeros(n)?;
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == T::zero() {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * rhs.data[k * n + j];
                }
            }
        }
        Ok(out)
    }

    pub fn hadamard(&self, rhs: &Self) -> Result<Self> {
        assert_eq!(self.dim, rhs.dim);
        Ok(Self {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| a * b).collect(),
        })
    }

    /// `½(M + Mᵀ)`.
    pub fn symmetric_part(&self) -> Self {
        let half = T::lit(0.5);
        let n = self.dim;
        let mut data = self.data.clone();
        for i in 0..n {
            for j in 0..n {
                data[i * n + j] = half * (self.data[i * n + j] + self.data[j * n + i]);
            }
        }
        Self { dim: n, data }
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// `vᵀ M v`.
    pub fn quadratic_form(&self, v: &[T]) -> T {
        assert_eq!(v.len(), self.dim);
        self.rows()
            .zip(v)
            .map(|(row, &vi)| vi * row.iter().zip(v).fold(T::zero(), |acc, (&m, &vj)| acc + m * vj))
            .fold(T::zero(), |acc, x| acc + x)
    }
}

impl<T> Index<(usize, usize)> for SquareMatrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.dim + j]
    }
}

impl<T> IndexMut<(usize, usize)> for SquareMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.dim + j]
    }
}
