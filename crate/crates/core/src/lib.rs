//! # qrelcode
//!
//! Quantum relative entropy measured as an excess compression rate.
//!
//! A qubit source `ρ` is compressed with a quantum code built from a classical
//! code that is optimal for another source `σ`. The code is a basis-permutation
//! unitary lifted from a reversible classical block map, the source is
//! replaced by its effective (dephased) density matrix in the computational
//! basis, and every expectation is evaluated exhaustively on registers of up to
//! 20 qubits.
//!
//! ## Modules
//!
//! - [`mathcore`]: complex matrices and a cyclic Jacobi Hermitian eigensolver.
//! - [`quantum`]: density matrices, von Neumann and relative entropy, overlap
//!   matrices, effective density matrices and the entropy identity checker.
//! - [`coding`]: classical distributions and entropies, i.i.d. sampling, a
//!   static-model binary arithmetic coder, the rank block code and LZ78 /
//!   cross-parsing relative entropy estimation.
//! - [`qsim`]: permutation unitaries, the two-register XOR construction,
//!   product diagonals, the length observable and truncation fidelity.
//! - [`cli`]: the batch experiment driver behind the `qrelcode` binary.
//!
//! All entropies are in bits.

#![forbid(unsafe_code)]

pub mod cli;
pub mod coding;
pub mod error;
pub mod mathcore;
pub mod qsim;
pub mod quantum;
pub mod rng;

pub use error::{Error, Result};
