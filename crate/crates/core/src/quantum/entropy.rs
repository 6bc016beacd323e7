use super::DensityMatrix;
use crate::coding::{NEGLIGIBLE_MASS, ZERO_MASS};
use crate::error::{Error, Result};
use crate::mathcore::CMatrix;

/// `S(ρ) = -tr(ρ log2 ρ)` in bits, with `0 log 0 = 0`.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> f64 {
    -rho.eigenvalues()
        .into_iter()
        .filter(|&l| l > 0.0)
        .map(|l| l * l.log2())
        .sum::<f64>()
}

fn check_dims(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<()> {
    if rho.dim() != sigma.dim() {
        return Err(Error::DimensionMismatch(rho.dim(), sigma.dim()));
    }
    Ok(())
}

/// `S(ρ||σ)` in bits, expanded in the eigenbasis `{χ_j, |χ_j>}` of σ:
///
/// `S(ρ||σ) = -S(ρ) - Σ_j η_j log2 χ_j`,  `η_j = <χ_j|ρ|χ_j>`.
///
/// Returns `+inf` when some `η_j > 1e-12` sits on `χ_j < 1e-15`.
pub fn quantum_relative_entropy(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    check_dims(rho, sigma)?;
    let chi = sigma.eigenvalues();
    let spec = sigma.spectrum();
    let mut cross = 0.0;
    for (j, &chi_j) in chi.iter().enumerate() {
        let v = spec.eigenvector(j);
        let eta_j = rho.matrix().sandwich(&v, &v).re;
        if chi_j < ZERO_MASS {
            if eta_j > NEGLIGIBLE_MASS {
                return Ok(f64::INFINITY);
            }
            continue;
        }
        cross += eta_j * chi_j.log2();
    }
    Ok(-von_neumann_entropy(rho) - cross)
}

/// `tr(ρ log2 ρ) - tr(ρ log2 σ)` evaluated with matrix logarithms.
///
/// Both logarithms are taken on the operator's support. Infinite under the same
/// support rule as [`quantum_relative_entropy`].
pub fn relative_entropy_matrix_log(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    check_dims(rho, sigma)?;
    let sspec = sigma.spectrum();
    for (j, &chi_j) in sspec.eigenvalues.iter().enumerate() {
        if chi_j < ZERO_MASS {
            let v = sspec.eigenvector(j);
            if rho.matrix().sandwich(&v, &v).re > NEGLIGIBLE_MASS {
                return Ok(f64::INFINITY);
            }
        }
    }
    let log_on_support = |x: f64| if x < ZERO_MASS { 0.0 } else { x.log2() };
    let log_rho = rho.spectrum().apply_fn(log_on_support);
    let log_sigma = sspec.apply_fn(log_on_support);
    let tr = |m: &CMatrix| -> Result<f64> { Ok(rho.matrix().matmul(m)?.trace().re) };
    Ok(tr(&log_rho)? - tr(&log_sigma)?)
}
