//! Clifford gates on `coeff · (⊗ vops)|G⟩` terms.
//!
//! Local gates only touch one vertex operator. CZ follows the graph-state
//! simulation scheme of Anders and Briegel: vertex operators that do not
//! commute with CZ are removed with local complementations, using the exact
//! identity
//!
//! ```text
//! |G⟩ = (H S† H)_v · ∏_{w ∈ nbhd(v)} S_w · |τ_v(G)⟩
//! ```
//!
//! where `τ_v` complements the neighborhood of `v`. When an operand has no
//! neighbor outside the pair, a two-qubit table takes over. That table is
//! produced by exhaustive search against the dense oracle.

use std::collections::HashMap;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::clifford1q::{tables, LocalClifford, Mat2, NamedLocal, PhasedClass, NUM_CLASSES};
use crate::coeff::CycCoeff;
use crate::error::SimError;
use crate::gate::Gate;
use crate::graph::Graph;
use crate::oracle::{term_to_vector, Dense};
use crate::state::{StabilizerTerm, StateSum};

/// Right factor gained by the complemented vertex itself: H S† H.
fn lc_self_factor() -> PhasedClass {
    let m = Mat2::hadamard().mul(&Mat2::phase_dagger()).mul(&Mat2::hadamard());
    tables().classify(&m).expect("H S† H is Clifford")
}

/// Right factor gained by each neighbor of the complemented vertex: S.
fn lc_neighbor_factor() -> PhasedClass {
    tables().named(NamedLocal::S)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Move {
    /// Local complementation at the vertex being reduced.
    AtSelf,
    /// Local complementation at one of its neighbors.
    AtNeighbor,
}

/// Shortest local-complementation sequences taking each class to a diagonal one.
fn reduction_moves() -> &'static [Vec<Move>; NUM_CLASSES] {
    static MOVES: OnceLock<[Vec<Move>; NUM_CLASSES]> = OnceLock::new();
    MOVES.get_or_init(|| {
        let (fs, fn_) = (lc_self_factor().class, lc_neighbor_factor().class);
        let mut best: [Option<Vec<Move>>; NUM_CLASSES] = Default::default();
        let mut queue = std::collections::VecDeque::new();
        for c in LocalClifford::all().filter(|c| c.is_diagonal()) {
            best[c.index()] = Some(Vec::new());
            queue.push_back(c);
        }
        // Search backwards from the diagonal classes: c·f = d means c reaches d with move f.
        while let Some(d) = queue.pop_front() {
            let tail = best[d.index()].clone().unwrap();
            for c in LocalClifford::all() {
                if best[c.index()].is_some() {
                    continue;
                }
                for (f, mv) in [(fs, Move::AtSelf), (fn_, Move::AtNeighbor)] {
                    if c.mul(f).class == d {
                        let mut path = vec![mv];
                        path.extend(tail.iter().copied());
                        best[c.index()] = Some(path);
                        queue.push_back(c);
                        break;
                    }
                }
            }
        }
        best.map(|p| p.expect("every class reduces to a diagonal one"))
    })
}

/// Entry of the two-qubit CZ table: new vops, new edge flag, and the phase
/// `ω^phase` picked up by the coefficient.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CzEntry {
    pub vop_a: LocalClifford,
    pub vop_b: LocalClifford,
    pub edge: bool,
    pub phase: u8,
}

type CzKey = (LocalClifford, LocalClifford, bool);

fn two_qubit_term(a: LocalClifford, b: LocalClifford, edge: bool) -> StabilizerTerm {
    let g = if edge { Graph::from_edges(2, &[(0, 1)]).unwrap() } else { Graph::empty(2) };
    StabilizerTerm::new(CycCoeff::ONE, vec![a, b], g)
}

/// Builds the residual CZ table by exhaustive search at n = 2.
///
/// For every `(vop_a, vop_b, edge)` the target `CZ · (vop_a ⊗ vop_b)|G⟩` is
/// matched against all 1152 two-qubit terms times ω^k. An operand whose
/// input vop is diagonal keeps a diagonal vop in the chosen entry, so the
/// entry stays valid when that operand has further neighbors.
pub fn generate_cz_table() -> HashMap<CzKey, CzEntry> {
    let mut by_vector: HashMap<Vec<CycCoeff>, Vec<(CzKey, u8)>> = HashMap::new();
    let keys: Vec<CzKey> = LocalClifford::all()
        .flat_map(|a| LocalClifford::all().flat_map(move |b| [(a, b, false), (a, b, true)]))
        .collect();
    for &key in &keys {
        let v = term_to_vector(&two_qubit_term(key.0, key.1, key.2), 2).unwrap();
        for k in 0..8u8 {
            let rotated: Vec<CycCoeff> = v.amps.iter().map(|x| x.mul_omega_pow(k as i64)).collect();
            by_vector.entry(rotated).or_default().push((key, k));
        }
    }
    keys.iter()
        .map(|&key| {
            let mut target = term_to_vector(&two_qubit_term(key.0, key.1, key.2), 2).unwrap();
            target.apply_gate(Gate::CZ, &[0, 1]).unwrap();
            let candidates = &by_vector[&target.amps];
            let keeps_diagonal = |out: &CzKey| {
                (!key.0.is_diagonal() || out.0.is_diagonal()) && (!key.1.is_diagonal() || out.1.is_diagonal())
            };
            let &(out, phase) = candidates
                .iter()
                .find(|(out, _)| keeps_diagonal(out))
                .unwrap_or_else(|| panic!("no diagonal-preserving CZ entry for {key:?}"));
            (key, CzEntry { vop_a: out.0, vop_b: out.1, edge: out.2, phase })
        })
        .collect()
}

pub fn cz_table() -> &'static HashMap<CzKey, CzEntry> {
    static TABLE: OnceLock<HashMap<CzKey, CzEntry>> = OnceLock::new();
    TABLE.get_or_init(generate_cz_table)
}

/// Left-multiplies `vops[v]` by a single-qubit Clifford.
pub fn apply_local(term: &mut StabilizerTerm, v: usize, op: PhasedClass) {
    term.left_mul_vop(v, op);
}

/// Local complementation at `v` that leaves the represented vector unchanged.
pub fn local_complement_term(term: &mut StabilizerTerm, v: usize) {
    let nb = term.graph.neighbors(v).clone();
    term.graph.local_complement(v).expect("vertex in range");
    term.right_mul_vop(v, lc_self_factor());
    let s = lc_neighbor_factor();
    for w in nb.ones() {
        term.right_mul_vop(w, s);
    }
}

fn outside_neighbor(g: &Graph, u: usize, other: usize) -> Option<usize> {
    g.neighbors(u).ones().find(|&w| w != other)
}

/// Makes `vops[u]` diagonal using local complementations at `u` and at a
/// neighbor `w ≠ other`.
fn reduce_vop(term: &mut StabilizerTerm, u: usize, w: usize) {
    for mv in &reduction_moves()[term.vops[u].index()] {
        match mv {
            Move::AtSelf => local_complement_term(term, u),
            Move::AtNeighbor => local_complement_term(term, w),
        }
    }
    debug_assert!(term.vops[u].is_diagonal());
}

pub fn apply_cz(term: &mut StabilizerTerm, a: usize, b: usize) -> Result<(), SimError> {
    Gate::CZ.check_operands(&[a, b], term.n())?;
    for _ in 0..4 {
        let pending = [(a, b), (b, a)].into_iter().find_map(|(u, other)| {
            if term.vops[u].is_diagonal() {
                return None;
            }
            outside_neighbor(&term.graph, u, other).map(|w| (u, w))
        });
        match pending {
            Some((u, w)) => reduce_vop(term, u, w),
            None => break,
        }
    }
    let (va, vb) = (term.vops[a], term.vops[b]);
    if va.is_diagonal() && vb.is_diagonal() {
        term.graph.toggle_edge(a, b)?;
        return Ok(());
    }
    debug_assert!(va.is_diagonal() || outside_neighbor(&term.graph, a, b).is_none());
    debug_assert!(vb.is_diagonal() || outside_neighbor(&term.graph, b, a).is_none());
    let edge = term.graph.has_edge(a, b);
    let e = cz_table()[&(va, vb, edge)];
    term.vops[a] = e.vop_a;
    term.vops[b] = e.vop_b;
    if e.edge != edge {
        term.graph.toggle_edge(a, b)?;
    }
    term.coeff = term.coeff.mul_omega_pow(e.phase as i64);
    Ok(())
}

fn named_for(gate: Gate) -> Option<NamedLocal> {
    Some(match gate {
        Gate::H => NamedLocal::H,
        Gate::S => NamedLocal::S,
        Gate::Sdg => NamedLocal::Sdg,
        Gate::X => NamedLocal::X,
        Gate::Y => NamedLocal::Y,
        Gate::Z => NamedLocal::Z,
        _ => return None,
    })
}

pub fn apply_clifford(term: &mut StabilizerTerm, gate: Gate, qubits: &[usize]) -> Result<(), SimError> {
    if !gate.is_clifford() {
        return Err(SimError::NotClifford(gate.name()));
    }
    gate.check_operands(qubits, term.n())?;
    if let Some(named) = named_for(gate) {
        apply_local(term, qubits[0], tables().named(named));
        return Ok(());
    }
    let h = tables().named(NamedLocal::H);
    let (a, b) = (qubits[0], qubits[1]);
    let cx = |term: &mut StabilizerTerm, c: usize, t: usize| -> Result<(), SimError> {
        apply_local(term, t, h);
        apply_cz(term, c, t)?;
        apply_local(term, t, h);
        Ok(())
    };
    match gate {
        Gate::CZ => apply_cz(term, a, b),
        Gate::CX => cx(term, a, b),
        Gate::Swap => {
            cx(term, a, b)?;
            cx(term, b, a)?;
            cx(term, a, b)
        }
        _ => unreachable!("single-qubit Cliffords handled above"),
    }
}

/// Applies a Clifford gate to every term of a sum.
pub fn apply_clifford_sum(sum: &mut StateSum, gate: Gate, qubits: &[usize]) -> Result<(), SimError> {
    gate.check_operands(qubits, sum.n)?;
    sum.terms
        .par_iter_mut()
        .try_for_each(|t| apply_clifford(t, gate, qubits))
}

/// Dense check used by tests: `CZ` via the table against the oracle at n = 2.
pub fn verify_cz_table() -> Result<(), String> {
    for (&(a, b, edge), e) in cz_table() {
        let mut lhs = term_to_vector(&two_qubit_term(a, b, edge), 2).unwrap();
        lhs.apply_gate(Gate::CZ, &[0, 1]).unwrap();
        let mut out = two_qubit_term(e.vop_a, e.vop_b, e.edge);
        out.coeff = CycCoeff::omega_pow(e.phase as i64);
        let rhs: Dense = term_to_vector(&out, 2).unwrap();
        if lhs != rhs {
            return Err(format!("entry {:?} -> {e:?} disagrees with CZ", (a.word(), b.word(), edge)));
        }
    }
    if cz_table().len() != 2 * NUM_CLASSES * NUM_CLASSES {
        return Err(format!("table has {} entries", cz_table().len()));
    }
    Ok(())
}
