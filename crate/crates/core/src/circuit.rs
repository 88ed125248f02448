//! Circuit files.
//!
//! ```text
//! # comment
//! qubits 3
//! init plus
//! H 1
//! CCX 1 2 3
//! ```
//!
//! `qubits N` must come before any gate; `init plus|zero` is optional and
//! defaults to `zero`. Qubits are 1-indexed in the file and 0-indexed in
//! memory.

use std::fmt;

use thiserror::Error;

use crate::error::SimError;
use crate::gate::Gate;
use crate::state::{StabilizerTerm, StateSum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Init {
    #[default]
    Zero,
    Plus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Op {
    pub gate: Gate,
    /// 0-based operands.
    pub qubits: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit {
    pub n: usize,
    pub init: Init,
    pub ops: Vec<Op>,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("missing `qubits N` directive")]
    MissingQubits,
    #[error("duplicate `{0}` directive")]
    Duplicate(&'static str),
    #[error("bad qubit count `{0}`")]
    BadQubitCount(String),
    #[error("bad init `{0}` (expected plus or zero)")]
    BadInit(String),
    #[error("`{0}` must precede gate lines")]
    Misplaced(&'static str),
    #[error("unknown gate `{0}`")]
    UnknownGate(String),
    #[error("bad operand `{0}`")]
    BadOperand(String),
    #[error("operand {operand} out of range 1..={n}")]
    OutOfRange { operand: usize, n: usize },
    #[error("{gate} expects {expected} operands, got {got}")]
    Arity { gate: Gate, expected: usize, got: usize },
    #[error("{gate} repeats operand {operand}")]
    RepeatedOperand { gate: Gate, operand: usize },
}

impl Circuit {
    pub fn new(n: usize, init: Init) -> Self {
        Self { n, init, ops: Vec::new() }
    }

    /// Appends a gate with 0-based operands.
    pub fn push(&mut self, gate: Gate, qubits: &[usize]) -> Result<(), SimError> {
        gate.check_operands(qubits, self.n)?;
        self.ops.push(Op { gate, qubits: qubits.to_vec() });
        Ok(())
    }

    pub fn c3_count(&self) -> usize {
        self.ops.iter().filter(|op| !op.gate.is_clifford()).count()
    }

    pub fn initial_state(&self) -> StateSum {
        let t = match self.init {
            Init::Zero => StabilizerTerm::zero(self.n),
            Init::Plus => StabilizerTerm::plus(self.n),
        };
        StateSum::from_term(t)
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "qubits {}", self.n)?;
        let init = match self.init {
            Init::Zero => "zero",
            Init::Plus => "plus",
        };
        writeln!(f, "init {init}")?;
        for op in &self.ops {
            write!(f, "{}", op.gate)?;
            for q in &op.qubits {
                write!(f, " {}", q + 1)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

pub fn parse_circuit(text: &str) -> Result<Circuit, ParseError> {
    let mut n: Option<usize> = None;
    let mut init: Option<Init> = None;
    let mut ops = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let err = |kind| ParseError { line, kind };
        let content = raw.split('#').next().unwrap_or("");
        let mut words = content.split_whitespace();
        let Some(head) = words.next() else { continue };
        let args: Vec<&str> = words.collect();
        match head.to_ascii_lowercase().as_str() {
            "qubits" => {
                if n.is_some() {
                    return Err(err(ParseErrorKind::Duplicate("qubits")));
                }
                let count = match args.as_slice() {
                    [v] => v.parse::<usize>().ok().filter(|&c| c > 0),
                    _ => None,
                };
                n = Some(count.ok_or_else(|| err(ParseErrorKind::BadQubitCount(args.join(" "))))?);
            }
            "init" => {
                if init.is_some() {
                    return Err(err(ParseErrorKind::Duplicate("init")));
                }
                if !ops.is_empty() {
                    return Err(err(ParseErrorKind::Misplaced("init")));
                }
                init = Some(match args.as_slice() {
                    [v] if v.eq_ignore_ascii_case("plus") => Init::Plus,
                    [v] if v.eq_ignore_ascii_case("zero") => Init::Zero,
                    _ => return Err(err(ParseErrorKind::BadInit(args.join(" ")))),
                });
            }
            _ => {
                let gate: Gate = head
                    .to_ascii_uppercase()
                    .parse()
                    .map_err(|_| err(ParseErrorKind::UnknownGate(head.to_string())))?;
                let n = n.ok_or_else(|| err(ParseErrorKind::MissingQubits))?;
                if args.len() != gate.arity() {
                    return Err(err(ParseErrorKind::Arity { gate, expected: gate.arity(), got: args.len() }));
                }
                let mut qubits = Vec::with_capacity(args.len());
                for a in &args {
                    let q: usize = a.parse().map_err(|_| err(ParseErrorKind::BadOperand(a.to_string())))?;
                    if q == 0 || q > n {
                        return Err(err(ParseErrorKind::OutOfRange { operand: q, n }));
                    }
                    if qubits.contains(&(q - 1)) {
                        return Err(err(ParseErrorKind::RepeatedOperand { gate, operand: q }));
                    }
                    qubits.push(q - 1);
                }
                ops.push(Op { gate, qubits });
            }
        }
    }
    let n = n.ok_or(ParseError { line: text.lines().count().max(1), kind: ParseErrorKind::MissingQubits })?;
    Ok(Circuit { n, init: init.unwrap_or_default(), ops })
}
