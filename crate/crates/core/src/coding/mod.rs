//! Classical side: distributions, entropies, sampling and source codes.

mod arith;
mod dist;
mod entropy;
mod lz;
mod rank;
mod sample;

pub use arith::{arithmetic_decode, arithmetic_encode, Bitstring, QuantizedModel, PROB_BITS};
pub use dist::{ProbDist, DIST_SUM_TOL};
pub use entropy::{relative_entropy, shannon_entropy, NEGLIGIBLE_MASS, ZERO_MASS};
pub use lz::{cross_parse, lz78_parse, zm_estimate, ParseResult};
pub use rank::{expected_block_rate, significant_length, BlockBijection, MAX_BLOCK_LEN};
pub use sample::{sample_iid, SymbolSeq};
