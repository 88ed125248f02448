//! Exact dense state vectors over [`CycCoeff`].
//!
//! This is the ground truth the graph-state machinery is tested against. It
//! is deliberately naive: amplitudes are computed straight from the
//! definition of a graph state and gates are applied as explicit matrices.
//!
//! Basis index bit `n-1-q` holds qubit `q`, so qubit 0 is the most
//! significant bit and `|10…0⟩` reads as "qubit 0 is set".

use crate::clifford1q::Mat2;
use crate::coeff::CycCoeff;
use crate::error::SimError;
use crate::gate::Gate;
use crate::graph::Graph;
use crate::pauli::PauliProduct;
use crate::state::{StabilizerTerm, StateSum};

pub const DEFAULT_CAP: usize = 16;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Dense {
    pub n: usize,
    pub amps: Vec<CycCoeff>,
}

fn check_cap(n: usize, cap: usize) -> Result<(), SimError> {
    if n > cap {
        return Err(SimError::OracleCap { n, cap });
    }
    Ok(())
}

impl Dense {
    pub fn zeros(n: usize) -> Self {
        Self { n, amps: vec![CycCoeff::ZERO; 1 << n] }
    }

    /// The computational basis state with the given index.
    pub fn basis(n: usize, index: usize) -> Self {
        let mut d = Self::zeros(n);
        d.amps[index] = CycCoeff::ONE;
        d
    }

    fn bit(&self, q: usize) -> usize {
        1 << (self.n - 1 - q)
    }

    /// `|G⟩ = ∏_{edges} CZ |+⟩^⊗n`.
    pub fn graph_state(g: &Graph) -> Self {
        let n = g.n();
        let norm = CycCoeff::inv_sqrt2_pow(n as u32);
        let edges = g.edges();
        let mut d = Self::zeros(n);
        for (z, amp) in d.amps.iter_mut().enumerate() {
            let bit = |q: usize| (z >> (n - 1 - q)) & 1 == 1;
            let parity = edges.iter().filter(|&&(a, b)| bit(a) && bit(b)).count() % 2;
            *amp = if parity == 1 { -norm } else { norm };
        }
        d
    }

    pub fn scale(&mut self, c: CycCoeff) {
        for a in &mut self.amps {
            *a *= c;
        }
    }

    pub fn add_assign(&mut self, other: &Dense) {
        assert_eq!(self.n, other.n);
        for (a, b) in self.amps.iter_mut().zip(&other.amps) {
            *a += *b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.amps.iter().all(CycCoeff::is_zero)
    }

    pub fn apply_single(&mut self, q: usize, m: &Mat2) {
        let bit = self.bit(q);
        let m = &m.0;
        for i in 0..self.amps.len() {
            if i & bit == 0 {
                let (a0, a1) = (self.amps[i], self.amps[i | bit]);
                self.amps[i] = m[0][0] * a0 + m[0][1] * a1;
                self.amps[i | bit] = m[1][0] * a0 + m[1][1] * a1;
            }
        }
    }

    /// Applies a `2^k × 2^k` matrix to the listed qubits; `qubits[0]` is the
    /// most significant bit of the matrix index.
    pub fn apply_matrix(&mut self, m: &[Vec<CycCoeff>], qubits: &[usize]) {
        let k = qubits.len();
        let dim = 1 << k;
        assert_eq!(m.len(), dim);
        let bits: Vec<usize> = qubits.iter().map(|&q| self.bit(q)).collect();
        let mask: usize = bits.iter().sum();
        let offset = |local: usize| -> usize {
            (0..k).filter(|&j| (local >> (k - 1 - j)) & 1 == 1).map(|j| bits[j]).sum()
        };
        let offsets: Vec<usize> = (0..dim).map(offset).collect();
        let mut scratch = vec![CycCoeff::ZERO; dim];
        for base in 0..self.amps.len() {
            if base & mask != 0 {
                continue;
            }
            for (s, off) in scratch.iter_mut().zip(&offsets) {
                *s = self.amps[base | off];
            }
            for (r, off) in offsets.iter().enumerate() {
                self.amps[base | off] = (0..dim).map(|c| m[r][c] * scratch[c]).sum();
            }
        }
    }

    pub fn apply_gate(&mut self, gate: Gate, qubits: &[usize]) -> Result<(), SimError> {
        gate.check_operands(qubits, self.n)?;
        self.apply_matrix(&gate.matrix(), qubits);
        Ok(())
    }

    /// Applies `i^s ∏X^x ∏Z^z` (Z factors act first).
    pub fn apply_pauli(&mut self, p: &PauliProduct) {
        for q in p.z.ones() {
            self.apply_single(q, &Mat2::pauli_z());
        }
        for q in p.x.ones() {
            self.apply_single(q, &Mat2::pauli_x());
        }
        self.scale(CycCoeff::i_pow(p.s as i64));
    }

    /// `(I + P)|ψ⟩`.
    pub fn apply_projector(&mut self, p: &PauliProduct) {
        let mut pv = self.clone();
        pv.apply_pauli(p);
        self.add_assign(&pv);
    }

    /// Float view `(re, im)` strings for reports.
    pub fn approx_pairs(&self) -> Vec<[String; 2]> {
        self.amps
            .iter()
            .map(|a| {
                let z = a.to_complex();
                let clean = |x: f64| if x.abs() < 5e-13 { 0.0 } else { x };
                [format!("{:.6}", clean(z.re)), format!("{:.6}", clean(z.im))]
            })
            .collect()
    }
}

pub fn term_to_vector(t: &StabilizerTerm, cap: usize) -> Result<Dense, SimError> {
    check_cap(t.n(), cap)?;
    let mut d = Dense::graph_state(&t.graph);
    for (q, v) in t.vops.iter().enumerate() {
        if *v != crate::clifford1q::LocalClifford::IDENTITY {
            d.apply_single(q, &v.matrix());
        }
    }
    d.scale(t.coeff);
    Ok(d)
}

pub fn sum_to_vector(s: &StateSum, cap: usize) -> Result<Dense, SimError> {
    check_cap(s.n, cap)?;
    let mut acc = Dense::zeros(s.n);
    for t in &s.terms {
        acc.add_assign(&term_to_vector(t, cap)?);
    }
    Ok(acc)
}

pub fn apply_gate_dense(v: &mut Dense, gate: Gate, qubits: &[usize], cap: usize) -> Result<(), SimError> {
    check_cap(v.n, cap)?;
    v.apply_gate(gate, qubits)
}

pub fn sums_equal(a: &StateSum, b: &StateSum, cap: usize) -> Result<bool, SimError> {
    if a.n != b.n {
        return Err(SimError::QubitMismatch(a.n, b.n));
    }
    Ok(sum_to_vector(a, cap)? == sum_to_vector(b, cap)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford1q::{LocalClifford, NamedLocal};

    fn c(v: i64) -> CycCoeff {
        CycCoeff::from_int(v)
    }

    #[test]
    fn graph_state_amplitudes() {
        let t = StabilizerTerm::plus(1);
        let r = CycCoeff::FRAC_1_SQRT2;
        assert_eq!(term_to_vector(&t, 16).unwrap().amps, vec![r, r]);

        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let t = StabilizerTerm::new(CycCoeff::ONE, vec![LocalClifford::IDENTITY; 2], g);
        let h = CycCoeff::HALF;
        assert_eq!(term_to_vector(&t, 16).unwrap().amps, vec![h, h, h, -h]);

        let t = StabilizerTerm::zero(1);
        assert_eq!(term_to_vector(&t, 16).unwrap().amps, vec![c(1), c(0)]);
    }

    #[test]
    fn gate_examples() {
        let mut v = Dense::basis(1, 0);
        v.apply_gate(Gate::T, &[0]).unwrap();
        assert_eq!(v.amps, vec![c(1), c(0)]);
        let mut v = Dense::basis(1, 1);
        v.apply_gate(Gate::T, &[0]).unwrap();
        assert_eq!(v.amps, vec![c(0), CycCoeff::OMEGA]);
        let mut v = Dense::basis(3, 0b110);
        v.apply_gate(Gate::CCX, &[0, 1, 2]).unwrap();
        assert_eq!(v, Dense::basis(3, 0b111));
        // operand order matters: control is the first operand
        let mut v = Dense::basis(2, 0b01);
        v.apply_gate(Gate::CX, &[1, 0]).unwrap();
        assert_eq!(v, Dense::basis(2, 0b11));
    }

    #[test]
    fn closed_form_states() {
        // T|+⟩ = (|0⟩ + ω|1⟩)/√2
        let mut v = term_to_vector(&StabilizerTerm::plus(1), 16).unwrap();
        v.apply_gate(Gate::T, &[0]).unwrap();
        let r = CycCoeff::FRAC_1_SQRT2;
        assert_eq!(v.amps, vec![r, r * CycCoeff::OMEGA]);
        // CZ|++⟩ = |G⟩ for the single edge
        let mut v = term_to_vector(&StabilizerTerm::plus(2), 16).unwrap();
        v.apply_gate(Gate::CZ, &[0, 1]).unwrap();
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(v, Dense::graph_state(&g));
    }

    #[test]
    fn sums_equal_examples() {
        let h = LocalClifford::of(NamedLocal::H);
        let t = StabilizerTerm::new(CycCoeff::I, vec![h, LocalClifford::IDENTITY], Graph::empty(2));
        let s = StateSum::from_term(t.clone());
        assert!(sums_equal(&s, &s, 16).unwrap());
        let s2 = StateSum::from_term(StabilizerTerm { coeff: t.coeff * c(2), ..t });
        assert!(!sums_equal(&s, &s2, 16).unwrap());
    }

    #[test]
    fn linearity() {
        let h = LocalClifford::of(NamedLocal::H);
        let a = StabilizerTerm::new(CycCoeff::OMEGA, vec![h, h], Graph::from_edges(2, &[(0, 1)]).unwrap());
        let b = StabilizerTerm::plus(2);
        let both = StateSum::from_terms(2, vec![a.clone(), b.clone()]);
        let mut sum = term_to_vector(&a, 16).unwrap();
        sum.add_assign(&term_to_vector(&b, 16).unwrap());
        assert_eq!(sum_to_vector(&both, 16).unwrap(), sum);
    }

    #[test]
    fn cap_is_enforced() {
        let t = StabilizerTerm::plus(5);
        assert_eq!(term_to_vector(&t, 4), Err(SimError::OracleCap { n: 5, cap: 4 }));
    }
}
