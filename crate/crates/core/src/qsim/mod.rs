//! Exact small-register simulation of lifted classical codes.

mod observable;
mod state;
mod unitary;

pub use observable::{
    expected_length, fidelity_curve, product_diagonal, truncation_fidelity, LengthObservable,
};
pub use state::{StateVector, MAX_QUBITS, NORM_TOL};
pub use unitary::{
    apply_permutation, lift_code, two_register_transform, xor_into_input, xor_into_output,
    xor_step_unitaries, PermutationUnitary, TwoRegister,
};
