use super::ProbDist;
use crate::error::{Error, Result};

/// Mass above which a symbol counts as present when checking support.
pub const NEGLIGIBLE_MASS: f64 = 1e-12;
/// Model mass below which a symbol counts as outside the support.
pub const ZERO_MASS: f64 = 1e-15;

/// Shannon entropy `H(p) = -Σ p log2 p` in bits; zero terms are skipped.
pub fn shannon_entropy(p: &ProbDist) -> f64 {
    -p.weights()
        .iter()
        .filter(|&&w| w > 0.0)
        .map(|&w| w * w.log2())
        .sum::<f64>()
}

/// Relative entropy `D(q||p) = Σ q log2(q/p)` in bits.
///
/// Returns `f64::INFINITY` when some `q(x) > 1e-12` has `p(x) < 1e-15`.
/// Terms with `q(x) <= 1e-12` and `p(x) < 1e-15` are dropped.
pub fn relative_entropy(q: &ProbDist, p: &ProbDist) -> Result<f64> {
    if q.len() != p.len() {
        return Err(Error::DimensionMismatch(q.len(), p.len()));
    }
    let mut acc = 0.0;
    for (&qx, &px) in q.weights().iter().zip(p.weights()) {
        if px < ZERO_MASS {
            if qx > NEGLIGIBLE_MASS {
                return Ok(f64::INFINITY);
            }
            continue;
        }
        if qx > 0.0 {
            acc += qx * (qx / px).log2();
        }
    }
    Ok(acc)
}
