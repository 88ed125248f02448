//! The single-qubit Clifford group ⟨H, S⟩ modulo global phase.
//!
//! All 24 classes, their multiplication table (with the exact ω-power that
//! relates a product to its canonical representative), inverses and Pauli
//! conjugation are generated once by closing {H, S} under exact 2×2 matrix
//! products. Nothing here is hand-transcribed.
//!
//! Generator words read as matrix products from left to right, so the word
//! `"HS"` is the matrix `H·S` (S acts first).

use std::fmt;
use std::sync::OnceLock;

use crate::coeff::CycCoeff;

/// A 2×2 matrix over [`CycCoeff`], row-major.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Mat2(pub [[CycCoeff; 2]; 2]);

impl Mat2 {
    pub fn new(m00: CycCoeff, m01: CycCoeff, m10: CycCoeff, m11: CycCoeff) -> Self {
        Self([[m00, m01], [m10, m11]])
    }

    pub fn identity() -> Self {
        Self::diag(CycCoeff::ONE, CycCoeff::ONE)
    }

    pub fn diag(d0: CycCoeff, d1: CycCoeff) -> Self {
        Self::new(d0, CycCoeff::ZERO, CycCoeff::ZERO, d1)
    }

    pub fn hadamard() -> Self {
        let r = CycCoeff::FRAC_1_SQRT2;
        Self::new(r, r, r, -r)
    }

    pub fn phase() -> Self {
        Self::diag(CycCoeff::ONE, CycCoeff::I)
    }

    pub fn phase_dagger() -> Self {
        Self::diag(CycCoeff::ONE, -CycCoeff::I)
    }

    pub fn pauli_x() -> Self {
        Self::new(CycCoeff::ZERO, CycCoeff::ONE, CycCoeff::ONE, CycCoeff::ZERO)
    }

    pub fn pauli_y() -> Self {
        Self::new(CycCoeff::ZERO, -CycCoeff::I, CycCoeff::I, CycCoeff::ZERO)
    }

    pub fn pauli_z() -> Self {
        Self::diag(CycCoeff::ONE, -CycCoeff::ONE)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let (a, b) = (&self.0, &rhs.0);
        let mut out = [[CycCoeff::ZERO; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        Self(out)
    }

    pub fn scale(&self, s: CycCoeff) -> Self {
        let m = &self.0;
        Self::new(m[0][0] * s, m[0][1] * s, m[1][0] * s, m[1][1] * s)
    }

    pub fn adjoint(&self) -> Self {
        let m = &self.0;
        Self::new(m[0][0].conj(), m[1][0].conj(), m[0][1].conj(), m[1][1].conj())
    }

    pub fn is_diagonal(&self) -> bool {
        self.0[0][1].is_zero() && self.0[1][0].is_zero()
    }

    /// The k in 0..8 with `self == ω^k · other`, if one exists.
    pub fn omega_ratio(&self, other: &Self) -> Option<u8> {
        (0..8u8).find(|&k| other.scale(CycCoeff::omega_pow(k as i64)) == *self)
    }
}

/// One of the 24 single-qubit Clifford classes. Class 0 is the identity.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LocalClifford(u8);

/// A class together with a global phase ω^`phase`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PhasedClass {
    pub class: LocalClifford,
    pub phase: u8,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Pauli {
    X,
    Y,
    Z,
}

impl Pauli {
    pub const ALL: [Pauli; 3] = [Pauli::X, Pauli::Y, Pauli::Z];

    pub fn matrix(self) -> Mat2 {
        match self {
            Pauli::X => Mat2::pauli_x(),
            Pauli::Y => Mat2::pauli_y(),
            Pauli::Z => Mat2::pauli_z(),
        }
    }
}

/// A single-qubit Pauli operator written `i^s · X^x · Z^z`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct PauliFactor {
    pub x: bool,
    pub z: bool,
    pub s: u8,
}

impl PauliFactor {
    pub fn matrix(self) -> Mat2 {
        let mut m = Mat2::identity();
        if self.x {
            m = m.mul(&Mat2::pauli_x());
        }
        if self.z {
            m = m.mul(&Mat2::pauli_z());
        }
        m.scale(CycCoeff::i_pow(self.s as i64))
    }

    /// Index into the non-identity table slots: X → 0, Z → 1, XZ → 2.
    fn slot(x: bool, z: bool) -> Option<usize> {
        match (x, z) {
            (false, false) => None,
            (true, false) => Some(0),
            (false, true) => Some(1),
            (true, true) => Some(2),
        }
    }
}

/// Named single-qubit gates with exact matrices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum NamedLocal {
    I,
    H,
    S,
    Sdg,
    X,
    Y,
    Z,
}

impl NamedLocal {
    pub const ALL: [NamedLocal; 7] = [
        NamedLocal::I,
        NamedLocal::H,
        NamedLocal::S,
        NamedLocal::Sdg,
        NamedLocal::X,
        NamedLocal::Y,
        NamedLocal::Z,
    ];

    pub fn matrix(self) -> Mat2 {
        match self {
            NamedLocal::I => Mat2::identity(),
            NamedLocal::H => Mat2::hadamard(),
            NamedLocal::S => Mat2::phase(),
            NamedLocal::Sdg => Mat2::phase_dagger(),
            NamedLocal::X => Mat2::pauli_x(),
            NamedLocal::Y => Mat2::pauli_y(),
            NamedLocal::Z => Mat2::pauli_z(),
        }
    }
}

pub const NUM_CLASSES: usize = 24;

/// Generated lookup tables for the 24 classes.
pub struct CliffordTables {
    reps: Vec<Mat2>,
    words: Vec<String>,
    mul: Vec<[PhasedClass; NUM_CLASSES]>,
    inv: Vec<PhasedClass>,
    conj: Vec<[(Pauli, i8); 3]>,
    /// `pull[c][slot]` = rep_c† · (X^x Z^z) · rep_c as a [`PauliFactor`].
    pull: Vec<[PauliFactor; 3]>,
    /// For Pauli classes: rep = ω^t · (i^s X^x Z^z) stored as (factor, t).
    pauli_form: Vec<Option<(PauliFactor, u8)>>,
    named: Vec<(NamedLocal, PhasedClass)>,
}

static TABLES: OnceLock<CliffordTables> = OnceLock::new();

/// The process-wide tables, generated on first use.
pub fn tables() -> &'static CliffordTables {
    TABLES.get_or_init(|| CliffordTables::generate().expect("single-qubit Clifford table generation"))
}

#[derive(Debug, thiserror::Error)]
#[error("closure of {{H, S}} produced {0} classes, expected 24")]
pub struct TableError(usize);

impl CliffordTables {
    pub fn generate() -> Result<Self, TableError> {
        let gens = [('H', Mat2::hadamard()), ('S', Mat2::phase())];
        let mut reps = vec![Mat2::identity()];
        let mut words = vec![String::new()];
        let mut head = 0;
        while head < reps.len() {
            let (m, w) = (reps[head], words[head].clone());
            head += 1;
            for (name, g) in &gens {
                let next = m.mul(g);
                if !reps.iter().any(|r| next.omega_ratio(r).is_some()) {
                    reps.push(next);
                    words.push(format!("{w}{name}"));
                }
            }
            if reps.len() > NUM_CLASSES {
                break;
            }
        }
        if reps.len() != NUM_CLASSES {
            return Err(TableError(reps.len()));
        }

        let classify = |m: &Mat2| -> PhasedClass {
            reps.iter()
                .enumerate()
                .find_map(|(i, r)| {
                    m.omega_ratio(r).map(|phase| PhasedClass { class: LocalClifford(i as u8), phase })
                })
                .expect("matrix outside the generated Clifford classes")
        };

        let mul = reps
            .iter()
            .map(|a| {
                let mut row = [PhasedClass { class: LocalClifford(0), phase: 0 }; NUM_CLASSES];
                for (j, b) in reps.iter().enumerate() {
                    row[j] = classify(&a.mul(b));
                }
                row
            })
            .collect();
        let inv = reps.iter().map(|r| classify(&r.adjoint())).collect();

        let signed_paulis: Vec<(Pauli, i8, Mat2)> = Pauli::ALL
            .iter()
            .flat_map(|&p| [(p, 1i8, p.matrix()), (p, -1i8, p.matrix().scale(-CycCoeff::ONE))])
            .collect();
        let conj = reps
            .iter()
            .map(|r| {
                Pauli::ALL.map(|p| {
                    let m = r.mul(&p.matrix()).mul(&r.adjoint());
                    let (q, sign, _) = signed_paulis
                        .iter()
                        .find(|(_, _, pm)| *pm == m)
                        .expect("Clifford conjugation left the Pauli group");
                    (*q, *sign)
                })
            })
            .collect();

        let factors: Vec<PauliFactor> = (0..4u8)
            .flat_map(|s| {
                [(true, false), (false, true), (true, true)].map(|(x, z)| PauliFactor { x, z, s })
            })
            .collect();
        let pull = reps
            .iter()
            .map(|r| {
                [(true, false), (false, true), (true, true)].map(|(x, z)| {
                    let p = PauliFactor { x, z, s: 0 }.matrix();
                    let m = r.adjoint().mul(&p).mul(r);
                    *factors
                        .iter()
                        .find(|f| f.matrix() == m)
                        .expect("Clifford conjugation left the Pauli group")
                })
            })
            .collect();

        let mut pauli_candidates = vec![PauliFactor::default()];
        pauli_candidates.extend([(true, false), (false, true), (true, true)].map(|(x, z)| PauliFactor { x, z, s: 0 }));
        let pauli_form = reps
            .iter()
            .map(|r| {
                pauli_candidates
                    .iter()
                    .find_map(|f| r.omega_ratio(&f.matrix()).map(|t| (*f, t)))
            })
            .collect();

        let named = NamedLocal::ALL.iter().map(|&g| (g, classify(&g.matrix()))).collect();

        Ok(Self { reps, words, mul, inv, conj, pull, pauli_form, named })
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Finds the class and phase of an arbitrary single-qubit Clifford matrix.
    pub fn classify(&self, m: &Mat2) -> Option<PhasedClass> {
        self.reps.iter().enumerate().find_map(|(i, r)| {
            m.omega_ratio(r).map(|phase| PhasedClass { class: LocalClifford(i as u8), phase })
        })
    }

    pub fn named(&self, g: NamedLocal) -> PhasedClass {
        self.named.iter().find(|(n, _)| *n == g).map(|(_, p)| *p).unwrap()
    }
}

impl LocalClifford {
    pub const IDENTITY: LocalClifford = LocalClifford(0);

    pub fn all() -> impl Iterator<Item = LocalClifford> {
        (0..NUM_CLASSES as u8).map(LocalClifford)
    }

    pub fn from_index(i: usize) -> Option<Self> {
        (i < NUM_CLASSES).then_some(LocalClifford(i as u8))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// The class of a named gate (discarding its phase).
    pub fn of(g: NamedLocal) -> Self {
        tables().named(g).class
    }

    /// Parses a generator word such as `"HSH"`; returns the class and the
    /// phase relating the word's matrix to the class representative.
    pub fn from_word(word: &str) -> Option<PhasedClass> {
        let mut m = Mat2::identity();
        for ch in word.chars() {
            m = m.mul(&match ch {
                'H' => Mat2::hadamard(),
                'S' => Mat2::phase(),
                _ => return None,
            });
        }
        tables().classify(&m)
    }

    /// Canonical generator word; the identity is `""`.
    pub fn word(self) -> &'static str {
        &tables().words[self.index()]
    }

    /// The word, or `"I"` for the identity.
    pub fn label(self) -> &'static str {
        match self.word() {
            "" => "I",
            w => w,
        }
    }

    /// Canonical representative matrix.
    pub fn matrix(self) -> Mat2 {
        tables().reps[self.index()]
    }

    /// `self · rhs` as a class with the exact ω-power.
    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, rhs: LocalClifford) -> PhasedClass {
        tables().mul[self.index()][rhs.index()]
    }

    pub fn inverse(self) -> PhasedClass {
        tables().inv[self.index()]
    }

    /// `U P U† = sign · P'`.
    pub fn conjugate_pauli(self, p: Pauli) -> (Pauli, i8) {
        let idx = match p {
            Pauli::X => 0,
            Pauli::Y => 1,
            Pauli::Z => 2,
        };
        tables().conj[self.index()][idx]
    }

    /// `U† (X^x Z^z) U`, i.e. what a Pauli on the left becomes after being
    /// pulled through this vertex operator to its right.
    pub fn pull_through(self, x: bool, z: bool) -> PauliFactor {
        match PauliFactor::slot(x, z) {
            None => PauliFactor::default(),
            Some(i) => tables().pull[self.index()][i],
        }
    }

    /// For a Pauli class, `(P, t)` with representative = ω^t · P.
    pub fn pauli_form(self) -> Option<(PauliFactor, u8)> {
        tables().pauli_form[self.index()]
    }

    /// Diagonal classes commute with CZ: I, Z, S, S†.
    pub fn is_diagonal(self) -> bool {
        self.matrix().is_diagonal()
    }
}

impl PhasedClass {
    pub fn matrix(self) -> Mat2 {
        self.class.matrix().scale(CycCoeff::omega_pow(self.phase as i64))
    }

    /// `self · rhs` with phases added.
    pub fn then_mul(self, rhs: PhasedClass) -> PhasedClass {
        let p = self.class.mul(rhs.class);
        PhasedClass { class: p.class, phase: (p.phase + self.phase + rhs.phase) % 8 }
    }
}

impl fmt::Debug for LocalClifford {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LocalClifford({}:{:?})", self.0, self.word())
    }
}

impl fmt::Display for LocalClifford {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.word())
    }
}
