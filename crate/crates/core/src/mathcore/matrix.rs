use std::ops::{Index, IndexMut};

use super::{c, Complex};
use crate::error::{Error, Result};

/// Maximum `|M - M^H|` entry accepted as Hermitian.
pub const HERMITIAN_TOL: f64 = 1e-9;

/// Square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    dim: usize,
    data: Vec<Complex>,
}

impl CMatrix {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be positive");
        Self {
            dim,
            data: vec![c(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = c(1.0, 0.0);
        }
        m
    }

    /// Builds a matrix from rows. Rejects empty, ragged or non-finite input.
    pub fn from_rows(rows: &[Vec<Complex>]) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::NotSquare);
        }
        let data: Vec<Complex> = rows.iter().flatten().copied().collect();
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { dim, data })
    }

    /// Builds a matrix from real rows.
    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let rows: Vec<Vec<Complex>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| c(x, 0.0)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn diag(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = c(v, 0.0);
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<Complex>]) -> Result<Self> {
        let dim = cols.len();
        if dim == 0 || cols.iter().any(|col| col.len() != dim) {
            return Err(Error::NotSquare);
        }
        let mut m = Self::zeros(dim);
        for (j, col) in cols.iter().enumerate() {
            for (i, &z) in col.iter().enumerate() {
                m[(i, j)] = z;
            }
        }
        if m.data
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NonFinite);
        }
        Ok(m)
    }

    /// Outer product `|v><v|`.
    pub fn projector(v: &[Complex]) -> Self {
        let mut m = Self::zeros(v.len());
        for i in 0..v.len() {
            for j in 0..v.len() {
                m[(i, j)] = v[i] * v[j].conj();
            }
        }
        m
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn column(&self, j: usize) -> Vec<Complex> {
        (0..self.dim).map(|i| self[(i, j)]).collect()
    }

    pub fn rows(&self) -> Vec<Vec<Complex>> {
        self.data
            .chunks(self.dim)
            .map(<[Complex]>::to_vec)
            .collect()
    }

    pub fn is_finite(&self) -> bool {
        self.data
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        let d = self.dim;
        let mut out = Self::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let a = self[(i, k)];
                if a == c(0.0, 0.0) {
                    continue;
                }
                for j in 0..d {
                    out.data[i * d + j] += a * other.data[k * d + j];
                }
            }
        }
        Ok(out)
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let d = self.dim;
        let mut out = Self::zeros(d);
        for i in 0..d {
            for j in 0..d {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn trace(&self) -> Complex {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, s: Complex) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|&z| z * s).collect(),
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(Complex, Complex) -> Complex) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        Ok(Self {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `max |M - M^H|`.
    pub fn hermitian_defect(&self) -> f64 {
        let d = self.dim;
        let mut worst = 0.0f64;
        for i in 0..d {
            for j in i..d {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    /// `max |M^H M - I|`.
    pub fn unitarity_defect(&self) -> f64 {
        let gram = self
            .adjoint()
            .matmul(self)
            .expect("adjoint has the same dimension");
        gram.max_abs_diff(&Self::identity(self.dim))
            .expect("same dimension")
    }

    /// `<u| M |v>`.
    pub fn sandwich(&self, u: &[Complex], v: &[Complex]) -> Complex {
        let d = self.dim;
        let mut acc = c(0.0, 0.0);
        for i in 0..d {
            let mut row = c(0.0, 0.0);
            for j in 0..d {
                row += self[(i, j)] * v[j];
            }
            acc += u[i].conj() * row;
        }
        acc
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = Complex;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Complex {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex {
        &mut self.data[i * self.dim + j]
    }
}

/// Kronecker product; the first factor indexes the most significant digit.
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let (da, db) = (a.dim(), b.dim());
    let mut out = CMatrix::zeros(da * db);
    for i in 0..da {
        for j in 0..da {
            let s = a[(i, j)];
            for k in 0..db {
                for l in 0..db {
                    out[(i * db + k, j * db + l)] = s * b[(k, l)];
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> CMatrix {
        CMatrix::from_rows(&[
            vec![c(1.0, 2.0), c(-0.5, 0.25)],
            vec![c(3.0, -1.0), c(0.0, 4.0)],
        ])
        .unwrap()
    }

    #[test]
    fn trace_of_identity() {
        assert_eq!(CMatrix::identity(2).trace(), c(2.0, 0.0));
    }

    #[test]
    fn adjoint_is_an_involution() {
        let a = sample();
        assert_eq!(a.adjoint().adjoint(), a);
    }

    #[test]
    fn matmul_rejects_mismatched_dimensions() {
        let err = CMatrix::identity(2)
            .matmul(&CMatrix::identity(3))
            .unwrap_err();
        assert_eq!(err, Error::DimensionMismatch(2, 3));
    }

    #[test]
    fn matmul_small_product() {
        let a = sample();
        let p = a.matmul(&CMatrix::identity(2)).unwrap();
        assert_eq!(p, a);
        let sq = a.matmul(&a).unwrap();
        // (1+2i)^2 + (-0.5+0.25i)(3-i)
        let expect = c(1.0, 2.0) * c(1.0, 2.0) + c(-0.5, 0.25) * c(3.0, -1.0);
        assert!((sq[(0, 0)] - expect).norm() < 1e-15);
    }

    #[test]
    fn rejects_non_finite_and_ragged() {
        assert_eq!(
            CMatrix::from_real_rows(&[vec![f64::NAN]]).unwrap_err(),
            Error::NonFinite
        );
        assert_eq!(
            CMatrix::from_real_rows(&[vec![1.0, 0.0], vec![0.0]]).unwrap_err(),
            Error::NotSquare
        );
        assert_eq!(CMatrix::from_rows(&[]).unwrap_err(), Error::NotSquare);
    }

    #[test]
    fn kron_orders_first_factor_most_significant() {
        let a = CMatrix::diag(&[1.0, 2.0]);
        let b = CMatrix::diag(&[3.0, 5.0]);
        let k = kron(&a, &b);
        let diag: Vec<f64> = (0..4).map(|i| k[(i, i)].re).collect();
        assert_eq!(diag, vec![3.0, 5.0, 6.0, 10.0]);
    }
}
