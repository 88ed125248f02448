use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SimError {
    #[error("vertex {vertex} out of range for {n} qubits")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("gate {gate} expects {expected} operands, got {got}")]
    Arity { gate: &'static str, expected: usize, got: usize },
    #[error("gate {gate} has repeated operand {operand}")]
    RepeatedOperand { gate: &'static str, operand: usize },
    #[error("projector with empty Z support has no pivot")]
    EmptyProjector,
    #[error("{0} is not a C3 gate")]
    NotC3(&'static str),
    #[error("{0} is not a Clifford gate")]
    NotClifford(&'static str),
    #[error("dense oracle limited to {cap} qubits, state has {n}")]
    OracleCap { n: usize, cap: usize },
    #[error("qubit count mismatch: {0} vs {1}")]
    QubitMismatch(usize, usize),
    #[error("gate {index} ({gate}): {source}")]
    AtGate {
        index: usize,
        gate: String,
        #[source]
        source: Box<SimError>,
    },
}
