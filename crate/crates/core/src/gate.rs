//! The supported gate set and exact gate matrices.

use std::fmt;
use std::str::FromStr;

use crate::coeff::CycCoeff;
use crate::error::SimError;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Gate {
    X,
    Y,
    Z,
    H,
    S,
    Sdg,
    CX,
    CZ,
    Swap,
    T,
    CS,
    CH,
    CCX,
    CCZ,
    CSwap,
}

impl Gate {
    pub const ALL: [Gate; 15] = [
        Gate::X,
        Gate::Y,
        Gate::Z,
        Gate::H,
        Gate::S,
        Gate::Sdg,
        Gate::CX,
        Gate::CZ,
        Gate::Swap,
        Gate::T,
        Gate::CS,
        Gate::CH,
        Gate::CCX,
        Gate::CCZ,
        Gate::CSwap,
    ];

    pub const C3: [Gate; 6] = [Gate::T, Gate::CS, Gate::CH, Gate::CCZ, Gate::CCX, Gate::CSwap];

    pub fn name(self) -> &'static str {
        match self {
            Gate::X => "X",
            Gate::Y => "Y",
            Gate::Z => "Z",
            Gate::H => "H",
            Gate::S => "S",
            Gate::Sdg => "SDG",
            Gate::CX => "CX",
            Gate::CZ => "CZ",
            Gate::Swap => "SWAP",
            Gate::T => "T",
            Gate::CS => "CS",
            Gate::CH => "CH",
            Gate::CCX => "CCX",
            Gate::CCZ => "CCZ",
            Gate::CSwap => "CSWAP",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Gate::X | Gate::Y | Gate::Z | Gate::H | Gate::S | Gate::Sdg | Gate::T => 1,
            Gate::CX | Gate::CZ | Gate::Swap | Gate::CS | Gate::CH => 2,
            Gate::CCX | Gate::CCZ | Gate::CSwap => 3,
        }
    }

    pub fn is_clifford(self) -> bool {
        !Gate::C3.contains(&self)
    }

    /// Checks arity, range and distinctness of 0-based operands.
    pub fn check_operands(self, qubits: &[usize], n: usize) -> Result<(), SimError> {
        if qubits.len() != self.arity() {
            return Err(SimError::Arity { gate: self.name(), expected: self.arity(), got: qubits.len() });
        }
        for (i, &q) in qubits.iter().enumerate() {
            if q >= n {
                return Err(SimError::VertexOutOfRange { vertex: q, n });
            }
            if qubits[..i].contains(&q) {
                return Err(SimError::RepeatedOperand { gate: self.name(), operand: q });
            }
        }
        Ok(())
    }

    /// Exact unitary on `arity()` qubits; the first operand is the most
    /// significant bit of the row/column index.
    pub fn matrix(self) -> Vec<Vec<CycCoeff>> {
        let o = CycCoeff::ZERO;
        let l = CycCoeff::ONE;
        let i = CycCoeff::I;
        let r = CycCoeff::FRAC_1_SQRT2;
        let one_qubit = |m: [[CycCoeff; 2]; 2]| m.iter().map(|row| row.to_vec()).collect::<Vec<_>>();
        let x = one_qubit([[o, l], [l, o]]);
        let z = one_qubit([[l, o], [o, -l]]);
        let h = one_qubit([[r, r], [r, -r]]);
        let s = one_qubit([[l, o], [o, i]]);
        match self {
            Gate::X => x,
            Gate::Y => one_qubit([[o, -i], [i, o]]),
            Gate::Z => z,
            Gate::H => h,
            Gate::S => s,
            Gate::Sdg => one_qubit([[l, o], [o, -i]]),
            Gate::T => one_qubit([[l, o], [o, CycCoeff::OMEGA]]),
            Gate::CX => controlled(&x, 1),
            Gate::CZ => controlled(&z, 1),
            Gate::CS => controlled(&s, 1),
            Gate::CH => controlled(&h, 1),
            Gate::CCX => controlled(&x, 2),
            Gate::CCZ => controlled(&z, 2),
            Gate::Swap => permutation(4, |k| [0, 2, 1, 3][k]),
            Gate::CSwap => permutation(8, |k| [0, 1, 2, 3, 4, 6, 5, 7][k]),
        }
    }
}

/// Block-diagonal `diag(I, …, I, U)` with `controls` leading control qubits.
fn controlled(u: &[Vec<CycCoeff>], controls: u32) -> Vec<Vec<CycCoeff>> {
    let k = u.len();
    let dim = k << controls;
    let off = dim - k;
    let mut m = vec![vec![CycCoeff::ZERO; dim]; dim];
    for (d, row) in m.iter_mut().enumerate().take(off) {
        row[d] = CycCoeff::ONE;
    }
    for a in 0..k {
        for b in 0..k {
            m[off + a][off + b] = u[a][b];
        }
    }
    m
}

fn permutation(dim: usize, image: impl Fn(usize) -> usize) -> Vec<Vec<CycCoeff>> {
    let mut m = vec![vec![CycCoeff::ZERO; dim]; dim];
    for col in 0..dim {
        m[image(col)][col] = CycCoeff::ONE;
    }
    m
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Gate {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Gate::ALL
            .iter()
            .copied()
            .find(|g| g.name() == s)
            .ok_or_else(|| format!("unknown gate `{s}`"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for g in Gate::ALL {
            assert_eq!(g.name().parse::<Gate>().unwrap(), g);
        }
        assert!("FOO".parse::<Gate>().is_err());
    }

    #[test]
    fn matrices_are_unitary() {
        for g in Gate::ALL {
            let m = g.matrix();
            let dim = 1 << g.arity();
            assert_eq!(m.len(), dim);
            for a in 0..dim {
                for b in 0..dim {
                    let ip: CycCoeff = (0..dim).map(|k| m[k][a].conj() * m[k][b]).sum();
                    let expect = if a == b { CycCoeff::ONE } else { CycCoeff::ZERO };
                    assert_eq!(ip, expect, "{g} column {a}·{b}");
                }
            }
        }
    }

    #[test]
    fn operand_checks() {
        assert!(Gate::CS.check_operands(&[0, 0], 2).is_err());
        assert!(Gate::CS.check_operands(&[0], 2).is_err());
        assert!(Gate::CS.check_operands(&[0, 2], 2).is_err());
        assert!(Gate::CCX.check_operands(&[2, 0, 1], 3).is_ok());
    }
}
