use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::mathcore::{c, Complex};

/// Largest register simulated densely (`2^20` amplitudes, 16 MB).
pub const MAX_QUBITS: usize = 20;
/// Tolerance on `‖ψ‖ = 1`.
pub const NORM_TOL: f64 = 1e-10;

/// Normalized `n`-qubit pure state; index bits are qubits, first qubit most
/// significant.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n: usize,
    amps: Vec<Complex>,
}

pub(crate) fn check_qubits(n: usize) -> Result<()> {
    if n == 0 || n > MAX_QUBITS {
        return Err(Error::BlockTooLarge(n));
    }
    Ok(())
}

impl StateVector {
    pub fn new(n: usize, amps: Vec<Complex>) -> Result<Self> {
        check_qubits(n)?;
        if amps.len() != 1 << n {
            return Err(Error::DimensionMismatch(amps.len(), 1 << n));
        }
        let norm = amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs().is_nan() || (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized(norm));
        }
        Ok(Self { n, amps })
    }

    /// Computational basis state `|x>`.
    pub fn basis(n: usize, x: u32) -> Result<Self> {
        check_qubits(n)?;
        if x as usize >= 1 << n {
            return Err(Error::DimensionMismatch(x as usize, 1 << n));
        }
        let mut amps = vec![c(0.0, 0.0); 1 << n];
        amps[x as usize] = c(1.0, 0.0);
        Ok(Self { n, amps })
    }

    /// Product state `|φ>^{⊗n}` from single-qubit amplitudes.
    pub fn product(single: [Complex; 2], n: usize) -> Result<Self> {
        check_qubits(n)?;
        let amps = (0..1u32 << n)
            .map(|x| {
                (0..n).fold(c(1.0, 0.0), |acc, k| {
                    acc * single[((x >> (n - 1 - k)) & 1) as usize]
                })
            })
            .collect();
        Self::new(n, amps)
    }

    /// Gaussian-random normalized state.
    pub fn random(n: usize, rng: &mut impl Rng) -> Result<Self> {
        check_qubits(n)?;
        let mut amps: Vec<Complex> = (0..1 << n)
            .map(|_| c(rng.sample(StandardNormal), rng.sample(StandardNormal)))
            .collect();
        let norm = amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for a in &mut amps {
            *a /= norm;
        }
        Self::new(n, amps)
    }

    pub fn qubits(&self) -> usize {
        self.n
    }

    pub fn amps(&self) -> &[Complex] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn probability(&self, x: u32) -> f64 {
        self.amps[x as usize].norm_sqr()
    }

    pub(crate) fn from_parts_unchecked(n: usize, amps: Vec<Complex>) -> Self {
        Self { n, amps }
    }
}
