use crate::error::{Error, Result};

/// Tolerance on `Σ p = 1`.
pub const DIST_SUM_TOL: f64 = 1e-9;

/// Finite probability distribution. Zero entries are allowed.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbDist {
    weights: Vec<f64>,
}

impl ProbDist {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidDistribution("empty".into()));
        }
        if let Some(w) = weights.iter().find(|w| !w.is_finite() || **w < 0.0) {
            return Err(Error::InvalidDistribution(format!("bad weight {w}")));
        }
        let total: f64 = weights.iter().sum();
        if (total - 1.0).abs() > DIST_SUM_TOL {
            return Err(Error::InvalidDistribution(format!("sums to {total}")));
        }
        Ok(Self { weights })
    }

    /// Binary distribution `(1 - p1, p1)`.
    pub fn bernoulli(p1: f64) -> Result<Self> {
        Self::new(vec![1.0 - p1, p1])
    }

    pub fn uniform(k: usize) -> Self {
        assert!(k > 0);
        Self {
            weights: vec![1.0 / k as f64; k],
        }
    }

    /// Clamps tiny negative noise to zero and renormalizes. Used for
    /// eigenvalue-derived distributions.
    pub(crate) fn from_clamped(weights: &[f64]) -> Result<Self> {
        let clamped: Vec<f64> = weights.iter().map(|&w| w.max(0.0)).collect();
        let total: f64 = clamped.iter().sum();
        if (total - 1.0).abs() > DIST_SUM_TOL || total == 0.0 {
            return Err(Error::InvalidDistribution(format!("sums to {total}")));
        }
        Self::new(clamped)
    }

    /// Empirical symbol frequencies over an alphabet of size `k`.
    pub fn empirical(symbols: &[u8], k: usize) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut counts = vec![0usize; k];
        for &s in symbols {
            *counts.get_mut(s as usize).ok_or(Error::InvalidSymbol(s))? += 1;
        }
        let n = symbols.len() as f64;
        Self::new(counts.into_iter().map(|c| c as f64 / n).collect())
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn get(&self, i: usize) -> f64 {
        self.weights[i]
    }

    /// Largest entrywise difference.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch(self.len(), other.len()));
        }
        Ok(self
            .weights
            .iter()
            .zip(&other.weights)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max))
    }
}
