use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result, C64};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn name(self) -> &'static str {
        match self {
            Axis::X => "x",
            Axis::Y => "y",
            Axis::Z => "z",
        }
    }

    /// Action on a computational basis bit: `σ|b⟩ = phase · |b ⊕ flip⟩`.
    #[inline]
    fn act(self, bit: bool) -> (bool, C64) {
        match (self, bit) {
            (Axis::X, _) => (true, C64::new(1.0, 0.0)),
            (Axis::Y, false) => (true, C64::new(0.0, 1.0)),
            (Axis::Y, true) => (true, C64::new(0.0, -1.0)),
            (Axis::Z, false) => (false, C64::new(1.0, 0.0)),
            (Axis::Z, true) => (false, C64::new(-1.0, 0.0)),
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Axis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "x" | "X" => Ok(Axis::X),
            "y" | "Y" => Ok(Axis::Y),
            "z" | "Z" => Ok(Axis::Z),
            other => Err(Error::Parse(format!("unknown axis `{other}`"))),
        }
    }
}

/// A real multiple of a tensor product of Pauli factors on distinct qubits.
#[derive(Clone, Debug, PartialEq)]
pub struct PauliTerm {
    coefficient: f64,
    factors: Vec<(usize, Axis)>,
}

impl PauliTerm {
    pub fn new(coefficient: f64, factors: impl IntoIterator<Item = (usize, Axis)>) -> Result<Self> {
        let mut factors: Vec<_> = factors.into_iter().collect();
        factors.sort_by_key(|&(q, _)| q);
        if let Some(w) = factors.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::RepeatedQubit(w[0].0));
        }
        Ok(Self { coefficient, factors })
    }

    /// `coefficient · σ_a^axis σ_b^axis`.
    pub fn pair(coefficient: f64, a: usize, b: usize, axis: Axis) -> Result<Self> {
        Self::new(coefficient, [(a, axis), (b, axis)])
    }

    pub fn coefficient(&self) -> f64 {
        self.coefficient
    }

    /// Factors sorted by qubit index.
    pub fn factors(&self) -> &[(usize, Axis)] {
        &self.factors
    }

    pub fn max_qubit(&self) -> Option<usize> {
        self.factors.last().map(|&(q, _)| q)
    }

    pub fn acts_on(&self, qubit: usize) -> bool {
        self.factors.iter().any(|&(q, _)| q == qubit)
    }

    /// Image of basis state `index` under the bare Pauli string (coefficient
    /// excluded): returns `(target index, phase)`.
    #[inline]
    pub fn map_basis(&self, index: usize) -> (usize, C64) {
        let mut out = index;
        let mut phase = C64::new(1.0, 0.0);
        for &(q, axis) in &self.factors {
            let (flip, p) = axis.act(index >> q & 1 == 1);
            if flip {
                out ^= 1 << q;
            }
            phase *= p;
        }
        (out, phase)
    }

    /// `P|ψ⟩` for the bare Pauli string, accumulated into `out` with weight `w`.
    pub fn apply_into(&self, w: C64, amps: &[C64], out: &mut [C64]) {
        for (j, &a) in amps.iter().enumerate() {
            if a == C64::new(0.0, 0.0) {
                continue;
            }
            let (k, phase) = self.map_basis(j);
            out[k] += w * phase * a;
        }
    }
}

impl fmt::Display for PauliTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coefficient)?;
        for (q, a) in &self.factors {
            write!(f, "·{a}{q}")?;
        }
        Ok(())
    }
}

/// Weighted sum of Pauli strings over a fixed register width. Every
/// coefficient is real, so the sum is Hermitian by construction.
#[derive(Clone, Debug, PartialEq)]
pub struct PauliSum {
    n_qubits: usize,
    terms: Vec<PauliTerm>,
}

impl PauliSum {
    pub fn new(n_qubits: usize) -> Self {
        Self { n_qubits, terms: Vec::new() }
    }

    pub fn from_terms(n_qubits: usize, terms: impl IntoIterator<Item = PauliTerm>) -> Result<Self> {
        let mut sum = Self::new(n_qubits);
        for t in terms {
            sum.push(t)?;
        }
        Ok(sum)
    }

    pub fn push(&mut self, term: PauliTerm) -> Result<()> {
        if let Some(q) = term.max_qubit() {
            if q >= self.n_qubits {
                return Err(Error::QubitOutOfRange { qubit: q, n_qubits: self.n_qubits });
            }
        }
        self.terms.push(term);
        Ok(())
    }

    pub fn extend(&mut self, other: &PauliSum) -> Result<()> {
        for t in &other.terms {
            self.push(t.clone())?;
        }
        Ok(())
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn terms(&self) -> &[PauliTerm] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when no term contains an `x` or `y` factor.
    pub fn is_diagonal(&self) -> bool {
        self.terms.iter().all(|t| t.factors.iter().all(|&(_, a)| a == Axis::Z))
    }

    /// Matrix-free `H|ψ⟩`. Works at any width the amplitude slice allows.
    pub fn apply(&self, amps: &[C64]) -> Result<Vec<C64>> {
        let dim = 1usize << self.n_qubits;
        if amps.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, got: amps.len() });
        }
        let mut out = vec![C64::new(0.0, 0.0); dim];
        for t in &self.terms {
            t.apply_into(C64::new(t.coefficient, 0.0), amps, &mut out);
        }
        Ok(out)
    }
}
