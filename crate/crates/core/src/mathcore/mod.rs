//! Dense complex linear algebra for small Hermitian operators.

mod eig;
mod matrix;

pub use eig::{hermitian_eig, SpectralDecomposition, EIG_MAX_SWEEPS, EIG_OFF_DIAGONAL_TOL};
pub use matrix::{kron, CMatrix, HERMITIAN_TOL};

/// Complex scalar used throughout the crate.
pub type Complex = num_complex::Complex64;

#[inline]
pub(crate) fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

/// Pairwise (cascade) summation with a fixed split order.
///
/// The reduction tree depends only on `values.len()`, so sums over the same
/// slice are bit-identical no matter how callers partition the work.
pub fn pairwise_sum(values: &[f64]) -> f64 {
    const LEAF: usize = 32;
    if values.len() <= LEAF {
        return values.iter().sum();
    }
    let mid = values.len() / 2;
    pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
}
