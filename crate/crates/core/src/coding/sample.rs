use rand::Rng;

use super::ProbDist;
use crate::error::{Error, Result};
use crate::rng;

/// Binary source sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolSeq {
    symbols: Vec<u8>,
}

impl SymbolSeq {
    pub fn new(symbols: Vec<u8>) -> Result<Self> {
        if let Some(&s) = symbols.iter().find(|&&s| s > 1) {
            return Err(Error::InvalidSymbol(s));
        }
        Ok(Self { symbols })
    }

    /// Parses a string of `'0'`/`'1'` characters.
    pub fn from_bits_str(s: &str) -> Result<Self> {
        s.bytes()
            .map(|b| match b {
                b'0' => Ok(0),
                b'1' => Ok(1),
                other => Err(Error::InvalidSymbol(other)),
            })
            .collect::<Result<Vec<u8>>>()
            .map(|symbols| Self { symbols })
    }

    /// The `n`-symbol block for integer `x`, most significant bit first.
    pub fn from_block(x: u32, n: usize) -> Self {
        Self {
            symbols: (0..n).rev().map(|k| ((x >> k) & 1) as u8).collect(),
        }
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn count_ones(&self) -> usize {
        self.symbols.iter().filter(|&&s| s == 1).count()
    }

    /// `log2 Π model(x_i)`; `-inf` when a symbol has zero model mass.
    pub fn log2_prob(&self, model: &ProbDist) -> f64 {
        let (p0, p1) = (model.get(0), model.get(1));
        let ones = self.count_ones() as f64;
        let zeros = self.len() as f64 - ones;
        let term = |count: f64, p: f64| if count == 0.0 { 0.0 } else { count * p.log2() };
        term(zeros, p0) + term(ones, p1)
    }
}

/// Draws `n` i.i.d. symbols from a binary distribution.
///
/// Symbol `i` is 1 exactly when the `i`-th uniform `f64` from
/// `rng::generator(seed)` is below `p(1)`.
pub fn sample_iid(p: &ProbDist, n: usize, seed: u64) -> Result<SymbolSeq> {
    if p.len() != 2 {
        return Err(Error::DimensionMismatch(p.len(), 2));
    }
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let p1 = p.get(1);
    let mut g = rng::generator(seed);
    let symbols = (0..n).map(|_| u8::from(g.random::<f64>() < p1)).collect();
    Ok(SymbolSeq { symbols })
}
