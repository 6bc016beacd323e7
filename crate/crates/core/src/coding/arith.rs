//! Static-model binary arithmetic coder.
//!
//! The coder keeps a 64-bit window of the interval start (`low`) and width
//! (`range`), renormalizing one bit at a time so that `range >= 2^62`. A split
//! that overflows `low` is a carry into the bits already emitted. Model
//! probabilities are quantized to 32-bit fractions.
//!
//! Termination emits the shortest bit string `b` whose dyadic interval
//! `[0.b, 0.b + 2^-|b|)` lies inside the final coding interval, so every
//! codeword is a prefix-free description and
//! `|encode(x)| <= -log2 P(x) + 2`.
//!
//! The decoder treats bits past the end of the codeword as zeros.

use std::fmt;

use super::{ProbDist, SymbolSeq, NEGLIGIBLE_MASS};
use crate::error::{Error, Result};

/// Bits of precision for quantized probabilities.
pub const PROB_BITS: u32 = 32;
const PROB_ONE: u64 = 1 << PROB_BITS;
const RANGE_MIN: u64 = 1 << 62;

/// Arbitrary-length string of bits.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Bitstring {
    bits: Vec<bool>,
}

impl Bitstring {
    pub fn new(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    fn bit_or_zero(&self, i: usize) -> u64 {
        u64::from(self.bits.get(i).copied().unwrap_or(false))
    }
}

impl fmt::Display for Bitstring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Probability of symbol 0 as a fraction of `2^32`, clamped to `[1, 2^32 - 1]`
/// so both sub-intervals stay non-empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuantizedModel {
    p0: u64,
}

impl QuantizedModel {
    pub fn new(model: &ProbDist) -> Result<Self> {
        if model.len() != 2 {
            return Err(Error::DimensionMismatch(model.len(), 2));
        }
        let scaled = (model.get(0) * PROB_ONE as f64).round() as u64;
        Ok(Self {
            p0: scaled.clamp(1, PROB_ONE - 1),
        })
    }

    pub fn p0_scaled(&self) -> u64 {
        self.p0
    }

    #[inline]
    fn split(&self, range: u64) -> u64 {
        ((u128::from(range) * u128::from(self.p0)) >> PROB_BITS) as u64
    }
}

struct Encoder {
    model: QuantizedModel,
    low: u64,
    range: u64,
    out: Vec<bool>,
}

impl Encoder {
    fn new(model: QuantizedModel) -> Self {
        Self {
            model,
            low: 0,
            range: u64::MAX,
            out: Vec::new(),
        }
    }

    // a carry always finds a 0 bit: the interval never leaves [0, 1)
    fn carry(&mut self) {
        let mut i = self.out.len();
        loop {
            assert!(i > 0, "carry out of the unit interval");
            i -= 1;
            if self.out[i] {
                self.out[i] = false;
            } else {
                self.out[i] = true;
                break;
            }
        }
    }

    fn push(&mut self, symbol: u8) {
        let r0 = self.model.split(self.range);
        if symbol == 0 {
            self.range = r0;
        } else {
            let (low, overflow) = self.low.overflowing_add(r0);
            self.low = low;
            if overflow {
                self.carry();
            }
            self.range -= r0;
        }
        while self.range < RANGE_MIN {
            self.out.push(self.low >> 63 == 1);
            self.low <<= 1;
            self.range <<= 1;
        }
    }

    fn finish(mut self) -> Bitstring {
        let low = u128::from(self.low);
        let top = low + u128::from(self.range);
        for j in 1..=64u32 {
            let m = 64 - j;
            let t = (low + (1u128 << m) - 1) >> m;
            if (t + 1) << m <= top {
                let t = if t == 1u128 << j {
                    self.carry();
                    0
                } else {
                    t
                };
                self.out.extend((0..j).rev().map(|k| (t >> k) & 1 == 1));
                return Bitstring::new(self.out);
            }
        }
        unreachable!("range >= 2^62 always admits a dyadic sub-interval")
    }
}

/// Encodes `x` with the static model.
///
/// Fails with [`Error::ModelSupportViolation`] when `x` contains a symbol
/// whose model probability is below `1e-12`.
pub fn arithmetic_encode(x: &SymbolSeq, model: &ProbDist) -> Result<Bitstring> {
    let quantized = QuantizedModel::new(model)?;
    for s in 0..2u8 {
        let prob = model.get(s as usize);
        if prob < NEGLIGIBLE_MASS && x.symbols().contains(&s) {
            return Err(Error::ModelSupportViolation { symbol: s, prob });
        }
    }
    let mut enc = Encoder::new(quantized);
    for &s in x.symbols() {
        enc.push(s);
    }
    Ok(enc.finish())
}

/// Decodes `n` symbols.
pub fn arithmetic_decode(b: &Bitstring, model: &ProbDist, n: usize) -> Result<SymbolSeq> {
    let quantized = QuantizedModel::new(model)?;
    let mut diff = 0u64;
    for i in 0..64 {
        diff = (diff << 1) | b.bit_or_zero(i);
    }
    let mut pos = 64;
    let mut range = u64::MAX;
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let r0 = quantized.split(range);
        if diff < r0 {
            out.push(0);
            range = r0;
        } else {
            out.push(1);
            diff -= r0;
            range -= r0;
        }
        while range < RANGE_MIN {
            diff = (diff << 1) | b.bit_or_zero(pos);
            pos += 1;
            range <<= 1;
        }
    }
    SymbolSeq::new(out)
}
