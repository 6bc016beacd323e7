use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::mathcore::{c, hermitian_eig, CMatrix, Complex, SpectralDecomposition};

/// Most negative eigenvalue accepted as PSD noise.
pub const PSD_TOL: f64 = 1e-10;
/// Tolerance on `tr ρ = 1`.
pub const TRACE_TOL: f64 = 1e-9;
/// Tolerance on `B^H B = I`.
pub const UNITARY_TOL: f64 = 1e-10;

/// Validated density operator together with its spectral decomposition.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    mat: CMatrix,
    spectrum: SpectralDecomposition,
}

impl DensityMatrix {
    pub fn matrix(&self) -> &CMatrix {
        &self.mat
    }

    pub fn dim(&self) -> usize {
        self.mat.dim()
    }

    pub fn spectrum(&self) -> &SpectralDecomposition {
        &self.spectrum
    }

    /// Eigenvalues (descending) with PSD noise clamped to zero.
    pub fn eigenvalues(&self) -> Vec<f64> {
        self.spectrum
            .eigenvalues
            .iter()
            .map(|&l| l.max(0.0))
            .collect()
    }

    /// `U ρ U^H`.
    pub fn conjugate_by(&self, u: &CMatrix) -> Result<Self> {
        let m = u.matmul(&self.mat)?.matmul(&u.adjoint())?;
        validate_density(&m)
    }

    /// `diag(values)`.
    pub fn diagonal(values: &[f64]) -> Result<Self> {
        validate_density(&CMatrix::diag(values))
    }

    pub fn maximally_mixed(d: usize) -> Self {
        validate_density(&CMatrix::diag(&vec![1.0 / d as f64; d])).expect("I/d is a state")
    }
}

/// Checks Hermiticity (1e-9), unit trace (1e-9) and PSD (eigenvalues ≥ -1e-10).
pub fn validate_density(m: &CMatrix) -> Result<DensityMatrix> {
    let spectrum = hermitian_eig(m)?;
    let tr = m.trace();
    if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > TRACE_TOL {
        return Err(Error::BadTrace {
            re: tr.re,
            im: tr.im,
        });
    }
    let min = spectrum.eigenvalues.last().copied().unwrap_or(0.0);
    if min < -PSD_TOL {
        return Err(Error::NotPSD(min));
    }
    Ok(DensityMatrix {
        mat: m.clone(),
        spectrum,
    })
}

/// Qubit state `(I + r_x X + r_y Y + r_z Z) / 2`.
pub fn bloch_to_density(r: [f64; 3]) -> Result<DensityMatrix> {
    if r.iter().any(|x| !x.is_finite()) {
        return Err(Error::NonFinite);
    }
    let norm = r.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm > 1.0 + 1e-12 {
        return Err(Error::OutsideBlochBall(norm));
    }
    let [x, y, z] = r;
    let m = CMatrix::from_rows(&[
        vec![c((1.0 + z) / 2.0, 0.0), c(x / 2.0, -y / 2.0)],
        vec![c(x / 2.0, y / 2.0), c((1.0 - z) / 2.0, 0.0)],
    ])?;
    validate_density(&m)
}

/// Orthonormal basis stored as the columns of a unitary matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthonormalBasis {
    vectors: CMatrix,
}

impl OrthonormalBasis {
    pub fn new(vectors: CMatrix) -> Result<Self> {
        let defect = vectors.unitarity_defect();
        if defect.is_nan() || defect > UNITARY_TOL {
            return Err(Error::NotUnitary(defect));
        }
        Ok(Self { vectors })
    }

    pub fn computational(d: usize) -> Self {
        Self {
            vectors: CMatrix::identity(d),
        }
    }

    /// `{|+>, |->}`.
    pub fn hadamard() -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        Self {
            vectors: CMatrix::from_real_rows(&[vec![h, h], vec![h, -h]]).expect("2x2"),
        }
    }

    /// Eigenbasis of `rho`, ordered by descending eigenvalue.
    pub fn eigenbasis(rho: &DensityMatrix) -> Self {
        Self {
            vectors: rho.spectrum().eigenvectors.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.vectors.dim()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.vectors
    }

    pub fn vector(&self, j: usize) -> Vec<Complex> {
        self.vectors.column(j)
    }

    /// `B^H M B`: the operator's matrix in this basis.
    pub fn express(&self, m: &CMatrix) -> Result<CMatrix> {
        self.vectors.adjoint().matmul(m)?.matmul(&self.vectors)
    }

    /// Basis obtained by `U` acting on each vector.
    pub fn rotated(&self, u: &CMatrix) -> Result<Self> {
        Self::new(u.matmul(&self.vectors)?)
    }
}

/// Haar-random unitary via Gram–Schmidt on a complex Gaussian matrix.
pub fn random_unitary(d: usize, rng: &mut impl Rng) -> CMatrix {
    let mut cols: Vec<Vec<Complex>> = Vec::with_capacity(d);
    while cols.len() < d {
        let mut v: Vec<Complex> = (0..d).map(|_| gaussian(rng)).collect();
        for u in &cols {
            let proj: Complex = u.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
            for (vi, ui) in v.iter_mut().zip(u) {
                *vi -= proj * ui;
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-6 {
            continue;
        }
        cols.push(v.into_iter().map(|z| z / norm).collect());
    }
    CMatrix::from_columns(&cols).expect("square")
}

/// Full-rank random state `G G^H / tr(G G^H)` with Gaussian `G`.
pub fn random_density(d: usize, rng: &mut impl Rng) -> DensityMatrix {
    let mut g = CMatrix::zeros(d);
    for i in 0..d {
        for j in 0..d {
            g[(i, j)] = gaussian(rng);
        }
    }
    let w = g.matmul(&g.adjoint()).expect("square");
    let tr = w.trace().re;
    let mut m = w.scale(c(1.0 / tr, 0.0));
    // exact Hermitian symmetry
    m = m.add(&m.adjoint()).expect("square").scale(c(0.5, 0.0));
    validate_density(&m).expect("Wishart matrices are states")
}

/// Random pure state `|ψ><ψ|`.
pub fn random_pure_density(d: usize, rng: &mut impl Rng) -> DensityMatrix {
    let u = random_unitary(d, rng);
    validate_density(&CMatrix::projector(&u.column(0))).expect("projector is a state")
}

fn gaussian(rng: &mut impl Rng) -> Complex {
    c(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::generator;

    #[test]
    fn accepts_states() {
        assert!(DensityMatrix::diagonal(&[0.5, 0.5]).is_ok());
        assert!(DensityMatrix::diagonal(&[0.9, 0.1]).is_ok());
    }

    #[test]
    fn rejects_non_states() {
        assert!(matches!(
            DensityMatrix::diagonal(&[1.2, -0.2]),
            Err(Error::NotPSD(_))
        ));
        assert!(matches!(
            DensityMatrix::diagonal(&[0.5, 0.6]),
            Err(Error::BadTrace { .. })
        ));
        let m = CMatrix::from_real_rows(&[vec![0.5, 0.3], vec![0.0, 0.5]]).unwrap();
        assert!(matches!(validate_density(&m), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn bloch_examples() {
        let up = bloch_to_density([0.0, 0.0, 1.0]).unwrap();
        assert!(
            up.matrix()
                .max_abs_diff(&CMatrix::diag(&[1.0, 0.0]))
                .unwrap()
                < 1e-15
        );
        let mixed = bloch_to_density([0.0, 0.0, 0.0]).unwrap();
        assert!(
            mixed
                .matrix()
                .max_abs_diff(&CMatrix::diag(&[0.5, 0.5]))
                .unwrap()
                < 1e-15
        );
        let plus = bloch_to_density([0.8, 0.0, 0.0]).unwrap();
        let ev = plus.eigenvalues();
        assert!((ev[0] - 0.9).abs() < 1e-12 && (ev[1] - 0.1).abs() < 1e-12);
        // eigenvectors are |+> and |-> up to phase
        let basis = OrthonormalBasis::eigenbasis(&plus);
        let overlap = basis
            .matrix()
            .adjoint()
            .matmul(OrthonormalBasis::hadamard().matrix())
            .unwrap();
        assert!((overlap[(0, 0)].norm() - 1.0).abs() < 1e-12);
        assert!((overlap[(1, 1)].norm() - 1.0).abs() < 1e-12);
        assert!(matches!(
            bloch_to_density([1.0, 0.1, 0.0]),
            Err(Error::OutsideBlochBall(_))
        ));
        assert!(bloch_to_density([0.6, 0.0, 0.8]).is_ok());
    }

    #[test]
    fn random_objects_are_valid() {
        let mut g = generator(1);
        for d in [2, 3, 4] {
            let u = random_unitary(d, &mut g);
            assert!(u.unitarity_defect() < 1e-12);
            let rho = random_density(d, &mut g);
            assert!((rho.matrix().trace().re - 1.0).abs() < 1e-12);
            let pure = random_pure_density(d, &mut g);
            assert!((pure.eigenvalues()[0] - 1.0).abs() < 1e-10);
        }
        assert!(OrthonormalBasis::new(CMatrix::diag(&[1.0, 2.0])).is_err());
    }
}
