//! End-to-end circuit execution.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::c3engine::apply_c3_split;
use crate::circuit::Circuit;
use crate::cliffordsim::apply_clifford_sum;
use crate::error::SimError;
use crate::merge::{normalize, MergeStats};
use crate::oracle::{term_to_vector, Dense};
use crate::state::StateSum;

#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    pub no_merge: bool,
}

#[derive(Clone, Debug, Default, Serialize, PartialEq)]
pub struct RunStats {
    /// Upper bound on the stabilizer rank of the final state.
    pub final_terms: usize,
    pub peak_terms: usize,
    pub merges: usize,
    pub cancellations: usize,
    /// Mean over final terms of the graph's average degree.
    pub avg_degree: f64,
    pub gates: usize,
    pub c3_gates: usize,
    #[serde(rename = "wall_time_ms")]
    #[serde(serialize_with = "as_millis")]
    pub wall_time: Duration,
}

fn as_millis<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

pub fn run_circuit(c: &Circuit, opts: RunOptions) -> Result<(StateSum, RunStats), SimError> {
    let start = Instant::now();
    let mut sum = c.initial_state();
    let mut peak = sum.len();
    let mut merged = MergeStats::default();
    for (index, op) in c.ops.iter().enumerate() {
        let wrap = |e: SimError| SimError::AtGate { index: index + 1, gate: op.gate.to_string(), source: Box::new(e) };
        if op.gate.is_clifford() {
            apply_clifford_sum(&mut sum, op.gate, &op.qubits).map_err(wrap)?;
        } else {
            sum = apply_c3_split(&sum, op.gate, &op.qubits).map_err(wrap)?;
            peak = peak.max(sum.len());
            if !opts.no_merge {
                merged.absorb(normalize(&mut sum));
            }
        }
    }
    let stats = RunStats {
        final_terms: sum.len(),
        peak_terms: peak,
        merges: merged.merges,
        cancellations: merged.cancellations,
        avg_degree: sum.average_degree(),
        gates: c.ops.len(),
        c3_gates: c.c3_count(),
        wall_time: start.elapsed(),
    };
    Ok((sum, stats))
}

/// Replays the circuit on the dense oracle from the initial state.
pub fn replay_dense(c: &Circuit, cap: usize) -> Result<Dense, SimError> {
    let init = c.initial_state();
    let mut v = term_to_vector(&init.terms[0], cap)?;
    for op in &c.ops {
        v.apply_gate(op.gate, &op.qubits)?;
    }
    Ok(v)
}
