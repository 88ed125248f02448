//! Pairwise merging of terms that share a graph.
//!
//! Two terms `c1·U1|G⟩` and `c2·U2|G⟩` combine when `U1⁻¹U2` is a Pauli `P`
//! up to phase. Then `P|G⟩ = i^k' Z_B|G⟩` and the sum equals
//! `c1·U1·(I + i^k Z_B)|G⟩` whenever the coefficients differ by a power of
//! `i`, which is one term again.

use std::collections::HashMap;

use crate::c3engine::{apply_z_projector, pauli_to_z};
use crate::clifford1q::PhasedClass;
use crate::coeff::CycCoeff;
use crate::graph::Graph;
use crate::pauli::{PauliProduct, ZProjectorForm};
use crate::state::{StabilizerTerm, StateSum};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MergeOutcome {
    Merged(StabilizerTerm),
    Cancelled,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MergeStats {
    /// Terms absorbed into another term, by collection or pairwise merge.
    pub merges: usize,
    /// Terms that vanished.
    pub cancellations: usize,
}

impl MergeStats {
    pub fn absorb(&mut self, other: MergeStats) {
        self.merges += other.merges;
        self.cancellations += other.cancellations;
    }
}

/// Attempts to write `t1 + t2` as at most one term.
pub fn try_merge(t1: &StabilizerTerm, t2: &StabilizerTerm) -> Option<MergeOutcome> {
    if t1.n() != t2.n() || t1.graph != t2.graph {
        return None;
    }
    let n = t1.n();
    let mut p = PauliProduct::identity(n);
    let mut omega = 0u32;
    let mut s = 0u32;
    for q in 0..n {
        let v = t1.vops[q].inverse().then_mul(PhasedClass { class: t2.vops[q], phase: 0 });
        let (f, t) = v.class.pauli_form()?;
        omega += (v.phase + t) as u32;
        s += f.s as u32;
        p.x.set(q, f.x);
        p.z.set(q, f.z);
    }
    p.s = (s % 4) as u8;
    let form = pauli_to_z(&t1.graph, &p);
    let lhs = t2.coeff.mul_omega_pow(omega as i64 + 2 * form.k as i64);
    let r = lhs.omega_ratio(t1.coeff)?;
    if r % 2 == 1 {
        return None;
    }
    let k = r / 2;
    let mut out = t1.clone();
    if form.b.is_clear() {
        if k == 2 {
            return Some(MergeOutcome::Cancelled);
        }
        out.coeff *= CycCoeff::ONE + CycCoeff::i_pow(k as i64);
        return Some(MergeOutcome::Merged(out));
    }
    apply_z_projector(&mut out, &ZProjectorForm { k, b: form.b }).expect("non-empty B");
    Some(MergeOutcome::Merged(out))
}

/// The lexicographically first mergeable pair `(i, j)`, `i < j`.
fn first_pair(terms: &[StabilizerTerm]) -> Option<(usize, usize, MergeOutcome)> {
    let mut groups: HashMap<&Graph, Vec<usize>> = HashMap::new();
    for (i, t) in terms.iter().enumerate() {
        groups.entry(&t.graph).or_default().push(i);
    }
    for (i, t) in terms.iter().enumerate() {
        let group = &groups[&t.graph];
        for &j in group.iter().filter(|&&j| j > i) {
            if let Some(out) = try_merge(t, &terms[j]) {
                return Some((i, j, out));
            }
        }
    }
    None
}

/// Collects like terms, then merges pairs greedily until no pair merges.
pub fn normalize(sum: &mut StateSum) -> MergeStats {
    let mut stats = MergeStats::default();
    loop {
        let c = sum.collect();
        stats.merges += c.combined;
        stats.cancellations += c.cancelled;
        let Some((i, j, out)) = first_pair(&sum.terms) else { break };
        sum.terms.remove(j);
        match out {
            MergeOutcome::Merged(t) => {
                sum.terms[i] = t;
                stats.merges += 1;
            }
            MergeOutcome::Cancelled => {
                sum.terms.remove(i);
                stats.cancellations += 2;
            }
        }
    }
    stats
}
