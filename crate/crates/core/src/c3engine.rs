//! C3 gates on sums of graph-state terms.
//!
//! Each gate is written as a sum of two branches, every branch a scalar
//! times a product of projectors `I + P` after some Clifford gates:
//!
//! | gate  | branch 1     | branch 2                                   |
//! |-------|--------------|--------------------------------------------|
//! | T     | ½(I+Z)       | ½ω(I−Z)                                    |
//! | CS    | ½(I+Z_a)     | ½(I−Z_a)·S_b                               |
//! | CH    | ½(I+Z_a)     | ½(I−Z_a)·H_b                               |
//! | CCZ   | I            | −¼(I−Z_a)(I−Z_b)(I−Z_c)                    |
//! | CCX   | I            | −¼(I−Z_a)(I−Z_b)(I−X_c)                    |
//! | CSWAP | I            | −¼(I−Z_a)(I−Z_bZ_c)(I−X_bX_c)              |
//!
//! A projector meets a term `U|G⟩` by being pulled through the vertex
//! operators, rewritten as `I + i^k ∏_B Z` on the bare graph state, and then
//! absorbed into a single new term:
//!
//! ```text
//! (I + i^k ∏_{j∈B} Z_j)|G⟩ = √2 · H_v Z_v ∏_{x,y∈A} CS_{x,y}^k ∏_{x∈A,y∈B} CZ_{x,y} |G⟩
//! ```
//!
//! with pivot `v = min B`, `A = nbhd(v) ∪ {v}`, `CU_{a,a} = U_a`, and both
//! products taken over ordered pairs.

use std::sync::OnceLock;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::clifford1q::{tables, Mat2, PhasedClass};
use crate::cliffordsim::apply_clifford;
use crate::coeff::CycCoeff;
use crate::error::SimError;
use crate::gate::Gate;
use crate::graph::Graph;
use crate::merge::{normalize, MergeStats};
use crate::oracle::Dense;
use crate::pauli::{PauliProduct, ZProjectorForm};
use crate::state::{StabilizerTerm, StateSum};

/// `scalar · ∏ (I + P_i) · cliffords`, cliffords applied first and
/// projectors applied right to left.
#[derive(Clone, Debug, PartialEq)]
pub struct Branch {
    pub scalar: CycCoeff,
    /// Each entry `P` denotes the projector `I + P`.
    pub projectors: Vec<PauliProduct>,
    pub cliffords: Vec<(Gate, Vec<usize>)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct C3Decomposition {
    pub branches: [Branch; 2],
}

impl C3Decomposition {
    /// Dense matrix of the branch sum on `n` qubits, built column by column
    /// with the oracle.
    pub fn dense_matrix(&self, n: usize) -> Vec<Vec<CycCoeff>> {
        let dim = 1 << n;
        let mut m = vec![vec![CycCoeff::ZERO; dim]; dim];
        for col in 0..dim {
            let mut acc = Dense::zeros(n);
            for br in &self.branches {
                let mut v = Dense::basis(n, col);
                for (g, qs) in &br.cliffords {
                    v.apply_gate(*g, qs).expect("valid branch clifford");
                }
                for p in br.projectors.iter().rev() {
                    v.apply_projector(p);
                }
                v.scale(br.scalar);
                acc.add_assign(&v);
            }
            for (row, amp) in m.iter_mut().zip(acc.amps) {
                row[col] = amp;
            }
        }
        m
    }
}

fn identity_branch() -> Branch {
    Branch { scalar: CycCoeff::ONE, projectors: Vec::new(), cliffords: Vec::new() }
}

pub fn decompose_c3(gate: Gate, qubits: &[usize], n: usize) -> Result<C3Decomposition, SimError> {
    if gate.is_clifford() {
        return Err(SimError::NotC3(gate.name()));
    }
    gate.check_operands(qubits, n)?;
    let plus_z = |q: usize| PauliProduct::z_on(n, &[q]);
    // I − P is I + i²P
    let minus = |p: PauliProduct| p.with_phase(2);
    let half = CycCoeff::HALF;
    let quarter = CycCoeff::new(-1, 0, 0, 0, 2);
    let a = qubits[0];
    let branches = match gate {
        Gate::T => [
            Branch { scalar: half, projectors: vec![plus_z(a)], cliffords: vec![] },
            Branch {
                scalar: half * CycCoeff::OMEGA,
                projectors: vec![minus(plus_z(a))],
                cliffords: vec![],
            },
        ],
        Gate::CS | Gate::CH => {
            let local = if gate == Gate::CS { Gate::S } else { Gate::H };
            [
                Branch { scalar: half, projectors: vec![plus_z(a)], cliffords: vec![] },
                Branch {
                    scalar: half,
                    projectors: vec![minus(plus_z(a))],
                    cliffords: vec![(local, vec![qubits[1]])],
                },
            ]
        }
        Gate::CCZ | Gate::CCX => {
            let (b, c) = (qubits[1], qubits[2]);
            let target = if gate == Gate::CCZ { plus_z(c) } else { PauliProduct::x_on(n, &[c]) };
            [
                identity_branch(),
                Branch {
                    scalar: quarter,
                    projectors: vec![minus(plus_z(a)), minus(plus_z(b)), minus(target)],
                    cliffords: vec![],
                },
            ]
        }
        Gate::CSwap => {
            let (b, c) = (qubits[1], qubits[2]);
            [
                identity_branch(),
                Branch {
                    scalar: quarter,
                    projectors: vec![
                        minus(plus_z(a)),
                        minus(PauliProduct::z_on(n, &[b, c])),
                        minus(PauliProduct::x_on(n, &[b, c])),
                    ],
                    cliffords: vec![],
                },
            ]
        }
        _ => unreachable!("Clifford gates rejected above"),
    };
    Ok(C3Decomposition { branches })
}

/// Returns `P'` with `P · (⊗ vops) = (⊗ vops) · P'`.
pub fn push_pauli_through_vops(term: &StabilizerTerm, p: &PauliProduct) -> PauliProduct {
    let n = term.n();
    let mut out = PauliProduct::identity(n);
    let mut s = p.s as u32;
    for q in p.support().ones() {
        let f = term.vops[q].pull_through(p.x.contains(q), p.z.contains(q));
        out.x.set(q, f.x);
        out.z.set(q, f.z);
        s += f.s as u32;
    }
    out.s = (s % 4) as u8;
    out
}

/// Rewrites `P|G⟩` as `i^k ∏_{j∈B} Z_j |G⟩`.
///
/// The Z part is moved to the left of the X part (one sign per qubit
/// carrying both), then each `X_a` becomes `∏_{b∈nbhd(a)} Z_b`; moving those
/// Z's past the remaining X's costs one sign per edge inside the X support.
pub fn pauli_to_z(g: &Graph, p: &PauliProduct) -> ZProjectorForm {
    let mut b = p.z.clone();
    let mut flips = p.x.intersection_count(&p.z);
    let mut inner = 0;
    for a in p.x.ones() {
        let nb = g.neighbors(a);
        b.symmetric_difference_with(nb);
        inner += nb.intersection_count(&p.x);
    }
    // every edge inside the X support was counted from both ends
    flips += inner / 2;
    ZProjectorForm { k: ((p.s as usize + 2 * flips) % 4) as u8, b }
}

struct ProjectorLocals {
    /// `[k][in_b]` = S^k · Z^{in_b}
    plain: [[PhasedClass; 2]; 4],
    /// `[k]` = H · Z · S^k · Z
    pivot: [PhasedClass; 4],
}

fn projector_locals() -> &'static ProjectorLocals {
    static LOCALS: OnceLock<ProjectorLocals> = OnceLock::new();
    LOCALS.get_or_init(|| {
        let t = tables();
        let s_pow = |k: usize| (0..k).fold(Mat2::identity(), |m, _| m.mul(&Mat2::phase()));
        let classify = |m: Mat2| t.classify(&m).expect("projector local is Clifford");
        let plain = std::array::from_fn(|k| {
            [classify(s_pow(k)), classify(s_pow(k).mul(&Mat2::pauli_z()))]
        });
        let hz = Mat2::hadamard().mul(&Mat2::pauli_z());
        let pivot = std::array::from_fn(|k| classify(hz.mul(&s_pow(k)).mul(&Mat2::pauli_z())));
        ProjectorLocals { plain, pivot }
    })
}

/// Absorbs `(I + i^k ∏_{j∈B} Z_j)` acting directly on `|G⟩` into the term.
///
/// The emitted local operators compose onto the vertex operators from the
/// inside (`vops[q] := vops[q] · local_q`), the coefficient gains √2 and
/// edges are toggled per the ordered-pair products.
pub fn apply_z_projector(term: &mut StabilizerTerm, form: &ZProjectorForm) -> Result<(), SimError> {
    let pivot = form.b.minimum().ok_or(SimError::EmptyProjector)?;
    let k = (form.k % 4) as usize;
    let mut a_set: FixedBitSet = term.graph.neighbors(pivot).clone();
    a_set.insert(pivot);
    let locals = projector_locals();
    for x in a_set.ones() {
        let op = if x == pivot { locals.pivot[k] } else { locals.plain[k][form.b.contains(x) as usize] };
        term.right_mul_vop(x, op);
    }
    if k % 2 == 1 {
        term.graph.toggle_clique(&a_set);
    }
    term.graph.toggle_bipartite(&a_set, &form.b);
    term.coeff *= CycCoeff::SQRT2;
    Ok(())
}

/// Applies `I + P` to the term; `None` when the result is exactly zero.
pub fn apply_projector(mut term: StabilizerTerm, p: &PauliProduct) -> Option<StabilizerTerm> {
    let pushed = push_pauli_through_vops(&term, p);
    let form = pauli_to_z(&term.graph, &pushed);
    if form.b.is_clear() {
        if form.k == 2 {
            return None;
        }
        term.coeff *= CycCoeff::ONE + CycCoeff::i_pow(form.k as i64);
        return Some(term);
    }
    apply_z_projector(&mut term, &form).expect("non-empty B");
    Some(term)
}

fn apply_branch(term: &StabilizerTerm, br: &Branch) -> Result<Option<StabilizerTerm>, SimError> {
    let mut t = term.clone();
    for (g, qs) in &br.cliffords {
        apply_clifford(&mut t, *g, qs)?;
    }
    t.coeff *= br.scalar;
    for p in br.projectors.iter().rev() {
        match apply_projector(t, p) {
            Some(next) => t = next,
            None => return Ok(None),
        }
    }
    Ok(Some(t))
}

/// Applies a C3 gate without merging: every input term yields at most two
/// output terms, in input order and branch order.
pub fn apply_c3_split(sum: &StateSum, gate: Gate, qubits: &[usize]) -> Result<StateSum, SimError> {
    let dec = decompose_c3(gate, qubits, sum.n)?;
    let parts: Vec<Vec<StabilizerTerm>> = sum
        .terms
        .par_iter()
        .map(|t| {
            let mut out = Vec::with_capacity(2);
            for br in &dec.branches {
                if let Some(r) = apply_branch(t, br)? {
                    out.push(r);
                }
            }
            Ok(out)
        })
        .collect::<Result<_, SimError>>()?;
    Ok(StateSum::from_terms(sum.n, parts.into_iter().flatten().collect()))
}

/// Splits, then normalizes (collect + pairwise merges).
pub fn apply_c3(sum: &StateSum, gate: Gate, qubits: &[usize]) -> Result<(StateSum, MergeStats), SimError> {
    let mut out = apply_c3_split(sum, gate, qubits)?;
    let stats = normalize(&mut out);
    Ok((out, stats))
}
