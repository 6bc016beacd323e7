//! Length observable and truncation fidelity on `ρ^{⊗n}`.
//!
//! The lifted code is a basis permutation, so `U ρ̃^{⊗n} U^†` stays diagonal in
//! the output basis and every quantity here is a weighted sum over its
//! diagonal. Expectations of observables diagonal in `B^{⊗n}` only see the
//! diagonal of `ρ^{⊗n}`, which equals that of `ρ̃^{⊗n}`.

use super::state::check_qubits;
use super::unitary::lift_code;
use super::StateVector;
use crate::coding::{significant_length, BlockBijection, ProbDist};
use crate::error::{Error, Result};
use crate::mathcore::pairwise_sum;
use crate::quantum::{effective_density, DensityMatrix, OrthonormalBasis};

/// `L = Σ_y ℓ(y) |y><y|` with `ℓ` the significant length.
#[derive(Debug, Clone, PartialEq)]
pub struct LengthObservable {
    n: usize,
    lengths: Vec<u32>,
}

impl LengthObservable {
    pub fn new(n: usize) -> Result<Self> {
        check_qubits(n)?;
        Ok(Self {
            n,
            lengths: (0..1u32 << n).map(significant_length).collect(),
        })
    }

    pub fn qubits(&self) -> usize {
        self.n
    }

    pub fn eigenvalue(&self, y: u32) -> u32 {
        self.lengths[y as usize]
    }

    /// `<ψ|L|ψ>`.
    pub fn expectation(&self, psi: &StateVector) -> Result<f64> {
        if psi.qubits() != self.n {
            return Err(Error::DimensionMismatch(psi.qubits(), self.n));
        }
        let terms: Vec<f64> = psi.amps().iter().map(|a| a.norm_sqr()).collect();
        self.expectation_diagonal(&terms)
    }

    /// `tr(L D)` for a state diagonal in the output basis.
    pub fn expectation_diagonal(&self, diag: &[f64]) -> Result<f64> {
        if diag.len() != self.lengths.len() {
            return Err(Error::DimensionMismatch(diag.len(), self.lengths.len()));
        }
        let terms: Vec<f64> = diag
            .iter()
            .zip(&self.lengths)
            .map(|(&w, &l)| w * f64::from(l))
            .collect();
        Ok(pairwise_sum(&terms))
    }
}

/// Diagonal of `ρ^{⊗n}` in `B^{⊗n}`: `Π_i η_{x_i}`, first qubit most
/// significant.
pub fn product_diagonal(
    rho: &DensityMatrix,
    basis: &OrthonormalBasis,
    n: usize,
) -> Result<ProbDist> {
    if rho.dim() != 2 {
        return Err(Error::DimensionMismatch(rho.dim(), 2));
    }
    check_qubits(n)?;
    let eta = effective_density(rho, basis)?.eta;
    let mut weights = vec![1.0f64];
    for _ in 0..n {
        weights = weights
            .iter()
            .flat_map(|&w| [w * eta.get(0), w * eta.get(1)])
            .collect();
    }
    ProbDist::new(weights)
}

fn output_diagonal(
    rho: &DensityMatrix,
    basis: &OrthonormalBasis,
    code: &BlockBijection,
) -> Result<Vec<f64>> {
    let u = lift_code(code)?;
    let input = product_diagonal(rho, basis, code.block_len())?;
    let mut out = vec![0.0; input.len()];
    for (x, &w) in input.weights().iter().enumerate() {
        out[u.image(x as u32) as usize] = w;
    }
    Ok(out)
}

/// `tr(L U ρ^{⊗n} U^†) / n`.
pub fn expected_length(
    rho: &DensityMatrix,
    basis: &OrthonormalBasis,
    code: &BlockBijection,
) -> Result<f64> {
    let n = code.block_len();
    let diag = output_diagonal(rho, basis, code)?;
    Ok(LengthObservable::new(n)?.expectation_diagonal(&diag)? / n as f64)
}

/// `F(m)` for `m = 0..=n`: weight of the encoded state on outputs whose
/// significant length is at most `m`.
pub fn fidelity_curve(
    rho: &DensityMatrix,
    basis: &OrthonormalBasis,
    code: &BlockBijection,
) -> Result<Vec<f64>> {
    let n = code.block_len();
    let diag = output_diagonal(rho, basis, code)?;
    let obs = LengthObservable::new(n)?;
    let mut by_len = vec![Vec::new(); n + 1];
    for (y, &w) in diag.iter().enumerate() {
        by_len[obs.eigenvalue(y as u32) as usize].push(w);
    }
    let mass: Vec<f64> = by_len.iter().map(|v| pairwise_sum(v)).collect();
    // 1 minus the discarded tail keeps F(n) = 1 exactly and F monotone.
    let mut curve = vec![1.0; n + 1];
    let mut tail = 0.0;
    for m in (0..n).rev() {
        tail += mass[m + 1];
        curve[m] = (1.0 - tail).max(0.0);
    }
    Ok(curve)
}

/// Fidelity of keeping the first `m` output qubits' worth of significant
/// length.
pub fn truncation_fidelity(
    rho: &DensityMatrix,
    basis: &OrthonormalBasis,
    code: &BlockBijection,
    m: usize,
) -> Result<f64> {
    let n = code.block_len();
    if m > n {
        return Err(Error::KeptOutOfRange { m, n });
    }
    Ok(fidelity_curve(rho, basis, code)?[m])
}
