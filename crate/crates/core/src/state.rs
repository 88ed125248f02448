//! Terms `coeff · (⊗ vops) |G⟩` and their sums.

use std::collections::HashMap;

use serde::Serialize;

use crate::clifford1q::{LocalClifford, PhasedClass};
use crate::coeff::CycCoeff;
use crate::graph::Graph;

pub use crate::pauli::{PauliProduct, ZProjectorForm};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StabilizerTerm {
    pub coeff: CycCoeff,
    pub vops: Vec<LocalClifford>,
    pub graph: Graph,
}

impl StabilizerTerm {
    pub fn new(coeff: CycCoeff, vops: Vec<LocalClifford>, graph: Graph) -> Self {
        assert_eq!(vops.len(), graph.n(), "vops length must match qubit count");
        Self { coeff, vops, graph }
    }

    /// `|+⟩^⊗n`: the empty graph with identity vertex operators.
    pub fn plus(n: usize) -> Self {
        Self::new(CycCoeff::ONE, vec![LocalClifford::IDENTITY; n], Graph::empty(n))
    }

    /// `|0⟩^⊗n = H^⊗n |+⟩^⊗n`.
    pub fn zero(n: usize) -> Self {
        let h = LocalClifford::of(crate::clifford1q::NamedLocal::H);
        Self::new(CycCoeff::ONE, vec![h; n], Graph::empty(n))
    }

    pub fn n(&self) -> usize {
        self.vops.len()
    }

    /// Replaces `vops[q]` by `vops[q] · op`, moving the phase into the coefficient.
    pub fn right_mul_vop(&mut self, q: usize, op: PhasedClass) {
        let p = self.vops[q].mul(op.class);
        self.vops[q] = p.class;
        self.coeff = self.coeff.mul_omega_pow((p.phase + op.phase) as i64);
    }

    /// Replaces `vops[q]` by `op · vops[q]`.
    pub fn left_mul_vop(&mut self, q: usize, op: PhasedClass) {
        let p = op.class.mul(self.vops[q]);
        self.vops[q] = p.class;
        self.coeff = self.coeff.mul_omega_pow((p.phase + op.phase) as i64);
    }

    /// Same vertex operators and graph; only the coefficient may differ.
    pub fn same_shape(&self, other: &Self) -> bool {
        self.vops == other.vops && self.graph == other.graph
    }

    pub fn to_json(&self) -> TermJson {
        let (a, b, c, d, h) = self.coeff.parts();
        TermJson {
            coeff: CoeffJson { a, b, c, d, h, approx: self.coeff.approx_string() },
            vops: self.vops.iter().map(|v| v.label().to_string()).collect(),
            edges: self.graph.edges().into_iter().map(|(a, b)| [a + 1, b + 1]).collect(),
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct CoeffJson {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub h: u32,
    pub approx: String,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct TermJson {
    pub coeff: CoeffJson,
    pub vops: Vec<String>,
    pub edges: Vec<[usize; 2]>,
}

/// A linear combination of stabilizer terms on the same qubits.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StateSum {
    pub n: usize,
    pub terms: Vec<StabilizerTerm>,
}

/// Outcome counts of [`StateSum::collect`].
#[derive(Clone, Copy, Default, Debug, PartialEq, Eq)]
pub struct CollectStats {
    /// Pairwise coefficient additions that left a nonzero term.
    pub combined: usize,
    /// Groups of identical terms whose coefficients summed to zero.
    pub cancelled: usize,
}

impl StateSum {
    pub fn new(n: usize) -> Self {
        Self { n, terms: Vec::new() }
    }

    pub fn from_term(t: StabilizerTerm) -> Self {
        Self { n: t.n(), terms: vec![t] }
    }

    pub fn from_terms(n: usize, terms: Vec<StabilizerTerm>) -> Self {
        debug_assert!(terms.iter().all(|t| t.n() == n));
        Self { n, terms }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn push(&mut self, t: StabilizerTerm) {
        assert_eq!(t.n(), self.n);
        self.terms.push(t);
    }

    /// Adds coefficients of terms with identical `(vops, graph)` and drops
    /// zeros. Survivors keep the order of their first appearance.
    pub fn collect(&mut self) -> CollectStats {
        let mut stats = CollectStats::default();
        let mut first: HashMap<(&[LocalClifford], &Graph), usize> = HashMap::new();
        let mut coeffs: Vec<CycCoeff> = Vec::with_capacity(self.terms.len());
        let mut owner: Vec<Option<usize>> = Vec::with_capacity(self.terms.len());
        let mut group_sizes: Vec<usize> = Vec::new();
        for t in &self.terms {
            match first.get(&(t.vops.as_slice(), &t.graph)) {
                Some(&g) => {
                    coeffs[g] += t.coeff;
                    group_sizes[g] += 1;
                    owner.push(None);
                }
                None => {
                    let g = coeffs.len();
                    first.insert((t.vops.as_slice(), &t.graph), g);
                    coeffs.push(t.coeff);
                    group_sizes.push(1);
                    owner.push(Some(g));
                }
            }
        }
        drop(first);
        let terms = std::mem::take(&mut self.terms);
        for (t, slot) in terms.into_iter().zip(owner) {
            let Some(g) = slot else { continue };
            let c = coeffs[g];
            if c.is_zero() {
                stats.cancelled += 1;
            } else {
                stats.combined += group_sizes[g] - 1;
                self.terms.push(StabilizerTerm { coeff: c, ..t });
            }
        }
        stats
    }

    pub fn peak_degree(&self) -> f64 {
        self.terms.iter().map(|t| t.graph.average_degree()).fold(0.0, f64::max)
    }

    pub fn average_degree(&self) -> f64 {
        if self.terms.is_empty() {
            return 0.0;
        }
        self.terms.iter().map(|t| t.graph.average_degree()).sum::<f64>() / self.terms.len() as f64
    }
}
