//! Exact simulation of Clifford + C3 circuits.
//!
//! The state is a sum of terms `c · (⊗ U_q) |G⟩` where `c` is an exact
//! cyclotomic coefficient, each `U_q` is one of the 24 single-qubit Clifford
//! classes and `|G⟩` is a graph state. Clifford gates act on every term
//! without changing the term count. Each C3 gate (T, CS, CH, CCZ, CCX,
//! CSWAP) splits a term into at most two, after which terms on the same
//! graph are merged where possible.
//!
//! ```
//! use c3graph::{parse_circuit, run_circuit, RunOptions};
//!
//! let c = parse_circuit("qubits 2\ninit plus\nT 1\nT 2").unwrap();
//! let (state, stats) = run_circuit(&c, RunOptions::default()).unwrap();
//! assert_eq!(state.len(), 2);
//! assert_eq!(stats.peak_terms, 4);
//! ```

pub mod bench;
pub mod c3engine;
pub mod circuit;
pub mod clifford1q;
pub mod cliffordsim;
pub mod coeff;
pub mod error;
pub mod gate;
pub mod graph;
pub mod merge;
pub mod oracle;
pub mod pauli;
pub mod report;
pub mod runner;
pub mod sample;
pub mod state;

pub use c3engine::{apply_c3, apply_c3_split, decompose_c3};
pub use circuit::{parse_circuit, Circuit, Init, Op, ParseError};
pub use clifford1q::LocalClifford;
pub use cliffordsim::{apply_clifford, apply_clifford_sum};
pub use coeff::CycCoeff;
pub use error::SimError;
pub use gate::Gate;
pub use graph::Graph;
pub use merge::{normalize, try_merge, MergeStats};
pub use report::{emit_report, Format, Report, ReportOptions};
pub use runner::{run_circuit, RunOptions, RunStats};
pub use state::{StabilizerTerm, StateSum};
