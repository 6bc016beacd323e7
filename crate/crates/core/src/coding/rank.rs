//! Rank block code: a length-preserving bijection on `n`-bit blocks.
//!
//! Blocks are sorted by descending model probability, ties broken by
//! ascending block value (lexicographic order, first symbol most
//! significant). A block maps to the `n`-bit big-endian encoding of its rank,
//! so the most probable block maps to `0…0`. The codeword length of a block
//! is the significant length of its image: `n` minus the leading zero bits.
//!
//! Because `rank(x) · Pr(x) <= Σ_{y ranked before x} Pr(y) <= 1`, every
//! block satisfies `significant_length(forward(x)) <= -log2 Pr(x) + 1`.

use super::{ProbDist, SymbolSeq};
use crate::error::{Error, Result};
use crate::mathcore::pairwise_sum;

/// Largest block length with an exhaustive table.
pub const MAX_BLOCK_LEN: usize = 20;

/// Reversible map on `n`-bit blocks.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockBijection {
    n: usize,
    forward: Vec<u32>,
    inverse: Vec<u32>,
    model: Option<ProbDist>,
}

/// `n` minus the number of leading zeros of the `n`-bit block `block`.
#[inline]
pub fn significant_length(block: u32) -> u32 {
    u32::BITS - block.leading_zeros()
}

fn check_block_len(n: usize) -> Result<()> {
    if n == 0 || n > MAX_BLOCK_LEN {
        return Err(Error::BlockTooLarge(n));
    }
    Ok(())
}

/// Probability of an `n`-block with `ones` ones, evaluated as
/// `p0^(n-ones) · p1^ones` so equal-weight blocks get bit-identical values.
fn block_prob(p0: f64, p1: f64, n: usize, ones: u32) -> f64 {
    let zeros = n as i32 - ones as i32;
    p0.powi(zeros) * p1.powi(ones as i32)
}

impl BlockBijection {
    /// Rank code for `model` on `n`-bit blocks.
    pub fn rank_code(model: &ProbDist, n: usize) -> Result<Self> {
        check_block_len(n)?;
        if model.len() != 2 {
            return Err(Error::DimensionMismatch(model.len(), 2));
        }
        let (p0, p1) = (model.get(0), model.get(1));
        let probs: Vec<f64> = (0..=n as u32).map(|k| block_prob(p0, p1, n, k)).collect();
        let mut order: Vec<u32> = (0..1u32 << n).collect();
        // stable sort: equal probabilities stay in ascending block order
        order.sort_by(|&a, &b| {
            probs[b.count_ones() as usize].total_cmp(&probs[a.count_ones() as usize])
        });
        let mut forward = vec![0u32; order.len()];
        for (rank, &x) in order.iter().enumerate() {
            forward[x as usize] = rank as u32;
        }
        let mut code = Self::from_forward(n, forward)?;
        code.model = Some(model.clone());
        Ok(code)
    }

    /// Wraps an arbitrary table, verifying it is a bijection.
    pub fn from_forward(n: usize, forward: Vec<u32>) -> Result<Self> {
        check_block_len(n)?;
        let size = 1usize << n;
        if forward.len() != size {
            return Err(Error::DimensionMismatch(forward.len(), size));
        }
        let mut inverse = vec![u32::MAX; size];
        for (x, &y) in forward.iter().enumerate() {
            let slot = inverse.get_mut(y as usize).ok_or(Error::NotBijective(n))?;
            if *slot != u32::MAX {
                return Err(Error::NotBijective(n));
            }
            *slot = x as u32;
        }
        Ok(Self {
            n,
            forward,
            inverse,
            model: None,
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        check_block_len(n)?;
        Self::from_forward(n, (0..1u32 << n).collect())
    }

    pub fn block_len(&self) -> usize {
        self.n
    }

    pub fn model(&self) -> Option<&ProbDist> {
        self.model.as_ref()
    }

    #[inline]
    pub fn forward(&self, x: u32) -> u32 {
        self.forward[x as usize]
    }

    #[inline]
    pub fn inverse(&self, y: u32) -> u32 {
        self.inverse[y as usize]
    }

    pub fn forward_table(&self) -> &[u32] {
        &self.forward
    }

    pub fn inverse_table(&self) -> &[u32] {
        &self.inverse
    }

    /// Significant length of the codeword for block `x`.
    #[inline]
    pub fn codeword_length(&self, x: u32) -> u32 {
        significant_length(self.forward(x))
    }

    /// Codeword for block `x` with its leading zeros dropped.
    pub fn codeword(&self, x: u32) -> SymbolSeq {
        let len = self.codeword_length(x) as usize;
        SymbolSeq::from_block(self.forward(x), len)
    }
}

/// `(1/n) Σ_x q^n(x) · significant_length(forward(x))`, summed over all `2^n`
/// blocks.
pub fn expected_block_rate(q: &ProbDist, code: &BlockBijection) -> Result<f64> {
    let n = code.block_len();
    check_block_len(n)?;
    if q.len() != 2 {
        return Err(Error::DimensionMismatch(q.len(), 2));
    }
    let probs: Vec<f64> = (0..=n as u32)
        .map(|k| block_prob(q.get(0), q.get(1), n, k))
        .collect();
    let terms: Vec<f64> = (0..1u32 << n)
        .map(|x| probs[x.count_ones() as usize] * f64::from(code.codeword_length(x)))
        .collect();
    Ok(pairwise_sum(&terms) / n as f64)
}
