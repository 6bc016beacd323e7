//! Density matrices, quantum entropies and the effective source matrix.

mod density;
mod effective;
mod entropy;

pub use crate::coding::ProbDist;
pub use density::{
    bloch_to_density, random_density, random_pure_density, random_unitary, validate_density,
    DensityMatrix, OrthonormalBasis, PSD_TOL, TRACE_TOL, UNITARY_TOL,
};
pub use effective::{
    effective_density, identity_sides, identity_sides_in_basis, overlap_matrix, EffectiveSource,
    IdentitySides, OverlapMatrix, EFFECTIVE_DIAG_TOL, STOCHASTIC_TOL,
};
pub use entropy::{quantum_relative_entropy, relative_entropy_matrix_log, von_neumann_entropy};
