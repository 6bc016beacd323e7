//! Basis-permutation unitaries and the two-register XOR construction.
//!
//! A reversible map `φ` on `n`-bit strings lifts to `U|x> = |φ(x)>`. The same
//! map is realized reversibly on an input and an output register by
//!
//! ```text
//! step 1: |x>|y> -> |x>|y ⊕ φ(x)>
//! step 2: |x>|w> -> |x ⊕ φ⁻¹(w)>|w>
//! ```
//!
//! which takes `|x>|0…0>` to `|0…0>|φ(x)>`.

use super::state::check_qubits;
use super::StateVector;
use crate::coding::BlockBijection;
use crate::error::{Error, Result};
use crate::mathcore::c;

/// `U|x> = |perm(x)>` on `n` qubits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationUnitary {
    n: usize,
    perm: Vec<u32>,
    inverse: Vec<u32>,
}

impl PermutationUnitary {
    pub fn new(n: usize, perm: Vec<u32>) -> Result<Self> {
        check_qubits(n)?;
        let size = 1usize << n;
        if perm.len() != size {
            return Err(Error::DimensionMismatch(perm.len(), size));
        }
        let mut inverse = vec![u32::MAX; size];
        for (x, &y) in perm.iter().enumerate() {
            match inverse.get_mut(y as usize) {
                Some(slot) if *slot == u32::MAX => *slot = x as u32,
                _ => return Err(Error::NotBijective(n)),
            }
        }
        Ok(Self { n, perm, inverse })
    }

    pub fn identity(n: usize) -> Result<Self> {
        check_qubits(n)?;
        Self::new(n, (0..1u32 << n).collect())
    }

    pub fn qubits(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn image(&self, x: u32) -> u32 {
        self.perm[x as usize]
    }

    pub fn table(&self) -> &[u32] {
        &self.perm
    }

    /// `U^†`.
    pub fn inverse(&self) -> Self {
        Self {
            n: self.n,
            perm: self.inverse.clone(),
            inverse: self.perm.clone(),
        }
    }

    /// `self` after `first`.
    pub fn after(&self, first: &Self) -> Result<Self> {
        if self.n != first.n {
            return Err(Error::DimensionMismatch(self.n, first.n));
        }
        Self::new(self.n, first.perm.iter().map(|&x| self.image(x)).collect())
    }
}

/// Lifts a block code to its basis-permutation unitary.
pub fn lift_code(code: &BlockBijection) -> Result<PermutationUnitary> {
    let n = code.block_len();
    check_qubits(n)?;
    Ok(PermutationUnitary {
        n,
        perm: code.forward_table().to_vec(),
        inverse: code.inverse_table().to_vec(),
    })
}

/// Relabels amplitudes: `amps'[perm(x)] = amps[x]`.
pub fn apply_permutation(u: &PermutationUnitary, psi: &StateVector) -> Result<StateVector> {
    if u.qubits() != psi.qubits() {
        return Err(Error::DimensionMismatch(u.qubits(), psi.qubits()));
    }
    let mut out = vec![c(0.0, 0.0); psi.amps().len()];
    for (x, &a) in psi.amps().iter().enumerate() {
        out[u.image(x as u32) as usize] = a;
    }
    Ok(StateVector::from_parts_unchecked(psi.qubits(), out))
}

/// Basis state of the input and output registers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoRegister {
    pub input: u32,
    pub output: u32,
}

/// Step 1: `output ^= φ(input)`.
pub fn xor_into_output(phi: &BlockBijection, reg: TwoRegister) -> TwoRegister {
    TwoRegister {
        input: reg.input,
        output: reg.output ^ phi.forward(reg.input),
    }
}

/// Step 2: `input ^= φ⁻¹(output)`.
pub fn xor_into_input(phi: &BlockBijection, reg: TwoRegister) -> TwoRegister {
    TwoRegister {
        input: reg.input ^ phi.inverse(reg.output),
        output: reg.output,
    }
}

/// Runs both steps on `|x>|0…0>`.
pub fn two_register_transform(phi: &BlockBijection, x: u32) -> Result<TwoRegister> {
    let n = phi.block_len();
    if x as usize >= 1 << n {
        return Err(Error::DimensionMismatch(x as usize, 1 << n));
    }
    let start = TwoRegister {
        input: x,
        output: 0,
    };
    Ok(xor_into_input(phi, xor_into_output(phi, start)))
}

/// Both steps as permutations of the joint `2n`-qubit register, index
/// `(input << n) | output`. Requires `2n <= 20`.
pub fn xor_step_unitaries(
    phi: &BlockBijection,
) -> Result<(PermutationUnitary, PermutationUnitary)> {
    let n = phi.block_len();
    check_qubits(2 * n)?;
    let mask = (1u32 << n) - 1;
    let split = |i: u32| TwoRegister {
        input: i >> n,
        output: i & mask,
    };
    let join = |r: TwoRegister| (r.input << n) | r.output;
    let all = 0..1u32 << (2 * n);
    let step1 = all
        .clone()
        .map(|i| join(xor_into_output(phi, split(i))))
        .collect();
    let step2 = all.map(|i| join(xor_into_input(phi, split(i)))).collect();
    Ok((
        PermutationUnitary::new(2 * n, step1)?,
        PermutationUnitary::new(2 * n, step2)?,
    ))
}
