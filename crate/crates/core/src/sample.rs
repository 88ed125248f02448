//! Seeded random instances for tests, the acceptance suite and benchmarks.

use rand::rngs::StdRng;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};

use crate::circuit::{Circuit, Init, Op};
use crate::clifford1q::LocalClifford;
use crate::coeff::CycCoeff;
use crate::gate::Gate;
use crate::graph::Graph;
use crate::state::StabilizerTerm;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Erdős–Rényi graph with edge probability `p`.
pub fn random_graph<R: Rng>(r: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for a in 0..n {
        for b in a + 1..n {
            if r.gen_bool(p.clamp(0.0, 1.0)) {
                g.toggle_edge(a, b).unwrap();
            }
        }
    }
    g
}

/// Random graph with about `n·d/2` edges, i.e. average degree close to `d`.
pub fn random_graph_with_degree<R: Rng>(r: &mut R, n: usize, d: f64) -> Graph {
    let p = if n > 1 { d / (n - 1) as f64 } else { 0.0 };
    random_graph(r, n, p)
}

pub fn random_coeff<R: Rng>(r: &mut R) -> CycCoeff {
    loop {
        let c = CycCoeff::new(
            r.gen_range(-3..=3),
            r.gen_range(-3..=3),
            r.gen_range(-3..=3),
            r.gen_range(-3..=3),
            r.gen_range(0..=2),
        );
        if !c.is_zero() {
            return c;
        }
    }
}

pub fn random_vops<R: Rng>(r: &mut R, n: usize) -> Vec<LocalClifford> {
    (0..n)
        .map(|_| LocalClifford::from_index(r.gen_range(0..crate::clifford1q::NUM_CLASSES)).unwrap())
        .collect()
}

/// A term with random coefficient, vertex operators and graph.
pub fn random_term<R: Rng>(r: &mut R, n: usize, p_edge: f64) -> StabilizerTerm {
    let g = random_graph(r, n, p_edge);
    StabilizerTerm::new(random_coeff(r), random_vops(r, n), g)
}

/// `k` distinct qubits in random order.
pub fn random_operands<R: Rng>(r: &mut R, n: usize, k: usize) -> Vec<usize> {
    sample(r, n, k).into_vec()
}

pub const CLIFFORD_GATES: [Gate; 9] =
    [Gate::H, Gate::S, Gate::Sdg, Gate::X, Gate::Y, Gate::Z, Gate::CZ, Gate::CX, Gate::Swap];

/// Random Clifford+C3 circuit of the given depth with at most `max_c3`
/// C3 gates. Gates whose arity exceeds `n` are skipped.
pub fn random_circuit<R: Rng>(r: &mut R, n: usize, depth: usize, max_c3: usize) -> Circuit {
    let mut ops = Vec::with_capacity(depth);
    let mut c3_left = max_c3;
    let c3: Vec<Gate> = Gate::C3.into_iter().filter(|g| g.arity() <= n).collect();
    let cl: Vec<Gate> = CLIFFORD_GATES.into_iter().filter(|g| g.arity() <= n).collect();
    while ops.len() < depth {
        let gate = if c3_left > 0 && r.gen_bool(0.2) {
            c3_left -= 1;
            c3[r.gen_range(0..c3.len())]
        } else {
            cl[r.gen_range(0..cl.len())]
        };
        ops.push(Op { gate, qubits: random_operands(r, n, gate.arity()) });
    }
    Circuit { n, init: if r.gen_bool(0.5) { Init::Zero } else { Init::Plus }, ops }
}
