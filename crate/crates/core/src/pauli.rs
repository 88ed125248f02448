use fixedbitset::FixedBitSet;

use crate::clifford1q::{Pauli, PauliFactor};

/// `i^s · ∏ X_a^{x_a} · ∏ Z_a^{z_a}` with every X to the left of every Z.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PauliProduct {
    pub x: FixedBitSet,
    pub z: FixedBitSet,
    pub s: u8,
}

impl PauliProduct {
    pub fn identity(n: usize) -> Self {
        Self { x: FixedBitSet::with_capacity(n), z: FixedBitSet::with_capacity(n), s: 0 }
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    /// `∏_{q ∈ qubits} Z_q`.
    pub fn z_on(n: usize, qubits: &[usize]) -> Self {
        let mut p = Self::identity(n);
        p.z.extend(qubits.iter().copied());
        p
    }

    /// `∏_{q ∈ qubits} X_q`.
    pub fn x_on(n: usize, qubits: &[usize]) -> Self {
        let mut p = Self::identity(n);
        p.x.extend(qubits.iter().copied());
        p
    }

    pub fn single(n: usize, q: usize, p: Pauli) -> Self {
        let mut out = Self::identity(n);
        match p {
            Pauli::X => out.x.insert(q),
            Pauli::Z => out.z.insert(q),
            Pauli::Y => {
                // Y = iXZ
                out.x.insert(q);
                out.z.insert(q);
                out.s = 1;
            }
        }
        out
    }

    /// Multiplies the phase by `i^k`.
    pub fn with_phase(mut self, k: u8) -> Self {
        self.s = (self.s + k) % 4;
        self
    }

    pub fn factor(&self, q: usize) -> PauliFactor {
        PauliFactor { x: self.x.contains(q), z: self.z.contains(q), s: 0 }
    }

    pub fn is_identity_up_to_phase(&self) -> bool {
        self.x.is_clear() && self.z.is_clear()
    }

    /// Qubits where the product acts non-trivially.
    pub fn support(&self) -> FixedBitSet {
        let mut s = self.x.clone();
        s.union_with(&self.z);
        s
    }
}

/// The operator `I + i^k ∏_{j ∈ B} Z_j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZProjectorForm {
    pub k: u8,
    pub b: FixedBitSet,
}
