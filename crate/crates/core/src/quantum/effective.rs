//! Overlap matrix and effective (dephased) source matrix.
//!
//! For `ρ = Σ_i λ_i |λ_i><λ_i|` and a computational basis `{|b_j>}`:
//!
//! ```text
//! P_ij = |<λ_i|b_j>|²            (doubly stochastic)
//! η_j  = Σ_i P_ij λ_i = <b_j|ρ|b_j>
//! ρ̃    = Σ_j η_j |b_j><b_j|
//! ```

use super::{
    relative_entropy_matrix_log, validate_density, von_neumann_entropy, DensityMatrix,
    OrthonormalBasis,
};
use crate::coding::{relative_entropy, shannon_entropy, ProbDist};
use crate::error::{Error, Result};
use crate::mathcore::{CMatrix, Complex};

/// Tolerance on row and column sums of the overlap matrix.
pub const STOCHASTIC_TOL: f64 = 1e-9;
/// Tolerance between the overlap-matrix route to `η` and `<b_j|ρ|b_j>`.
pub const EFFECTIVE_DIAG_TOL: f64 = 1e-10;
/// Largest off-diagonal entry of `B^H σ B` accepted for an eigenbasis.
const EIGENBASIS_TOL: f64 = 1e-9;

/// `P_ij = |<λ_i|b_j>|²`.
#[derive(Debug, Clone, PartialEq)]
pub struct OverlapMatrix {
    p: Vec<Vec<f64>>,
}

impl OverlapMatrix {
    pub fn dim(&self) -> usize {
        self.p.len()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.p[i][j]
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.p
    }

    pub fn row_sums(&self) -> Vec<f64> {
        self.p.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<f64> {
        (0..self.dim())
            .map(|j| self.p.iter().map(|r| r[j]).sum())
            .collect()
    }

    /// Largest `|sum - 1|` over rows and columns.
    pub fn stochastic_defect(&self) -> f64 {
        self.row_sums()
            .into_iter()
            .chain(self.col_sums())
            .map(|s| (s - 1.0).abs())
            .fold(0.0, f64::max)
    }
}

fn check_basis(rho: &DensityMatrix, basis: &OrthonormalBasis) -> Result<()> {
    if rho.dim() != basis.dim() {
        return Err(Error::DimensionMismatch(rho.dim(), basis.dim()));
    }
    Ok(())
}

fn inner(u: &[Complex], v: &[Complex]) -> Complex {
    u.iter().zip(v).map(|(a, b)| a.conj() * b).sum()
}

pub fn overlap_matrix(rho: &DensityMatrix, basis: &OrthonormalBasis) -> Result<OverlapMatrix> {
    check_basis(rho, basis)?;
    let d = rho.dim();
    let eigvecs: Vec<Vec<Complex>> = (0..d).map(|i| rho.spectrum().eigenvector(i)).collect();
    let bvecs: Vec<Vec<Complex>> = (0..d).map(|j| basis.vector(j)).collect();
    let p: Vec<Vec<f64>> = eigvecs
        .iter()
        .map(|l| bvecs.iter().map(|b| inner(l, b).norm_sqr()).collect())
        .collect();
    let out = OverlapMatrix { p };
    let defect = out.stochastic_defect();
    if defect > STOCHASTIC_TOL {
        return Err(Error::NotDoublyStochastic(defect));
    }
    Ok(out)
}

/// Effective source `ρ̃` and its diagonal `η` in the computational basis.
#[derive(Debug, Clone, PartialEq)]
pub struct EffectiveSource {
    pub rho_tilde: DensityMatrix,
    pub eta: ProbDist,
    pub overlap: OverlapMatrix,
}

pub fn effective_density(rho: &DensityMatrix, basis: &OrthonormalBasis) -> Result<EffectiveSource> {
    let overlap = overlap_matrix(rho, basis)?;
    let d = rho.dim();
    let lambda = &rho.spectrum().eigenvalues;
    let eta: Vec<f64> = (0..d)
        .map(|j| (0..d).map(|i| overlap.get(i, j) * lambda[i]).sum())
        .collect();
    let mut worst = 0.0f64;
    for (j, &e) in eta.iter().enumerate() {
        let b = basis.vector(j);
        worst = worst.max((rho.matrix().sandwich(&b, &b).re - e).abs());
    }
    if worst > EFFECTIVE_DIAG_TOL {
        return Err(Error::EffectiveMismatch(worst));
    }
    let eta = ProbDist::from_clamped(&eta)?;
    let mut m = CMatrix::zeros(d);
    for (j, &e) in eta.weights().iter().enumerate() {
        m = m.add(&CMatrix::projector(&basis.vector(j)).scale(Complex::new(e, 0.0)))?;
    }
    Ok(EffectiveSource {
        rho_tilde: validate_density(&m)?,
        eta,
        overlap,
    })
}

/// Both sides of `S(ρ||σ) + S(ρ) = D(η||χ) + H(η)`.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentitySides {
    /// `S(ρ||σ) + S(ρ)` from matrix logarithms.
    pub lhs: f64,
    /// `D(η||χ) + H(η)` from classical entropies.
    pub rhs: f64,
    pub eta: ProbDist,
    pub chi: ProbDist,
}

impl IdentitySides {
    /// `|lhs - rhs|`, zero when both are infinite, infinite when only one is.
    pub fn gap(&self) -> f64 {
        match (self.lhs.is_finite(), self.rhs.is_finite()) {
            (true, true) => (self.lhs - self.rhs).abs(),
            (false, false) if self.lhs == self.rhs => 0.0,
            _ => f64::INFINITY,
        }
    }
}

/// Evaluates both sides with the eigenbasis of `σ` as the computational basis.
pub fn identity_sides(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<IdentitySides> {
    if rho.dim() != sigma.dim() {
        return Err(Error::DimensionMismatch(rho.dim(), sigma.dim()));
    }
    identity_sides_in_basis(rho, sigma, &OrthonormalBasis::eigenbasis(sigma))
}

/// Same as [`identity_sides`] for a caller-supplied eigenbasis of `σ`; any
/// orthonormal basis of a degenerate eigenspace is accepted.
pub fn identity_sides_in_basis(
    rho: &DensityMatrix,
    sigma: &DensityMatrix,
    basis: &OrthonormalBasis,
) -> Result<IdentitySides> {
    if rho.dim() != sigma.dim() {
        return Err(Error::DimensionMismatch(rho.dim(), sigma.dim()));
    }
    check_basis(sigma, basis)?;
    let in_basis = basis.express(sigma.matrix())?;
    let d = sigma.dim();
    let mut off = 0.0f64;
    for i in 0..d {
        for j in 0..d {
            if i != j {
                off = off.max(in_basis[(i, j)].norm());
            }
        }
    }
    if off > EIGENBASIS_TOL {
        return Err(Error::NotEigenbasis(off));
    }
    let chi = ProbDist::from_clamped(&(0..d).map(|j| in_basis[(j, j)].re).collect::<Vec<_>>())?;
    let eta = effective_density(rho, basis)?.eta;
    let rhs = relative_entropy(&eta, &chi)? + shannon_entropy(&eta);
    let lhs = relative_entropy_matrix_log(rho, sigma)? + von_neumann_entropy(rho);
    Ok(IdentitySides { lhs, rhs, eta, chi })
}
