//! Chain architectures and their computation-phase Hamiltonians.
//!
//! Physical layout:
//!
//! * diagonal chain: logical bit `k` is `(a_k, b_k) = (2k, 2k+1)`;
//! * exchange chain: logical bit `k` is the star `q_k = 3k` followed by its
//!   isolator dots `(3k+1, 3k+2)`. Isolator `k` sits between `q_k` and
//!   `q_{k+1}`; the last bit keeps a trailing isolator coupled to one star.

use std::collections::BTreeMap;

use crate::statevector::{Axis, PauliSum, PauliTerm};
use crate::{Error, Result};

fn check_positive(name: &str, v: f64) -> Result<()> {
    if !(v.is_finite() && v > 0.0) {
        return Err(Error::InvalidArchitecture(format!("{name} must be positive and finite, got {v}")));
    }
    Ok(())
}

fn ordered(p: usize, q: usize) -> (usize, usize) {
    if p <= q {
        (p, q)
    } else {
        (q, p)
    }
}

fn check_adjacent(n_logical: usize, k: usize, l: usize) -> Result<usize> {
    for &i in &[k, l] {
        if i >= n_logical {
            return Err(Error::LogicalOutOfRange { index: i, width: n_logical });
        }
    }
    if k.abs_diff(l) != 1 {
        return Err(Error::NotAdjacent(k, l));
    }
    Ok(k.min(l))
}

/// Ising chain: `j0·σᶻσᶻ` inside each logical bit, `j1` between every
/// physical qubit of neighbouring bits.
#[derive(Clone, Debug, PartialEq)]
pub struct DiagonalChain {
    n_logical: usize,
    j0: f64,
    j1: f64,
    overrides: BTreeMap<(usize, usize), f64>,
}

impl DiagonalChain {
    pub fn new(n_logical: usize, j0: f64, j1: f64) -> Result<Self> {
        if n_logical == 0 {
            return Err(Error::InvalidArchitecture("n_logical must be at least 1".into()));
        }
        check_positive("j0", j0)?;
        check_positive("j1", j1)?;
        Ok(Self { n_logical, j0, j1, overrides: BTreeMap::new() })
    }

    /// Replaces the coupling on one existing physical edge.
    pub fn with_edge_coupling(mut self, p: usize, q: usize, j: f64) -> Result<Self> {
        check_positive("edge coupling", j)?;
        let e = ordered(p, q);
        if !self.edges().iter().any(|&(x, y, _)| (x, y) == e) {
            return Err(Error::InvalidArchitecture(format!("({p}, {q}) is not an edge of the chain")));
        }
        self.overrides.insert(e, j);
        Ok(self)
    }

    pub fn n_logical(&self) -> usize {
        self.n_logical
    }

    pub fn n_qubits(&self) -> usize {
        2 * self.n_logical
    }

    pub fn j0(&self) -> f64 {
        self.j0
    }

    pub fn j1(&self) -> f64 {
        self.j1
    }

    pub fn is_uniform(&self) -> bool {
        self.overrides.is_empty()
    }

    pub fn a(&self, k: usize) -> usize {
        2 * k
    }

    pub fn b(&self, k: usize) -> usize {
        2 * k + 1
    }

    pub fn qubits_of(&self, k: usize) -> [usize; 2] {
        [self.a(k), self.b(k)]
    }

    /// All coupled pairs `(p, q, J)` with `p < q`.
    pub fn edges(&self) -> Vec<(usize, usize, f64)> {
        let mut out = Vec::new();
        for k in 0..self.n_logical {
            out.push(self.edge(self.a(k), self.b(k), self.j0));
            if k + 1 < self.n_logical {
                for p in self.qubits_of(k) {
                    for q in self.qubits_of(k + 1) {
                        out.push(self.edge(p, q, self.j1));
                    }
                }
            }
        }
        out
    }

    fn edge(&self, p: usize, q: usize, default: f64) -> (usize, usize, f64) {
        let e = ordered(p, q);
        (e.0, e.1, self.overrides.get(&e).copied().unwrap_or(default))
    }

    /// Coupling on the physical pair, if they are connected.
    pub fn coupling(&self, p: usize, q: usize) -> Option<f64> {
        let e = ordered(p, q);
        self.edges().into_iter().find(|&(x, y, _)| (x, y) == e).map(|(_, _, j)| j)
    }

    /// `j0·σᶻ_a σᶻ_b` of bit `k`.
    pub fn intra_terms(&self, k: usize) -> Result<PauliSum> {
        if k >= self.n_logical {
            return Err(Error::LogicalOutOfRange { index: k, width: self.n_logical });
        }
        let (p, q, j) = self.edge(self.a(k), self.b(k), self.j0);
        PauliSum::from_terms(self.n_qubits(), [PauliTerm::pair(j, p, q, Axis::Z)?])
    }

    /// `j1(σᶻ_{a_k}+σᶻ_{b_k})(σᶻ_{a_l}+σᶻ_{b_l})` expanded into four terms.
    pub fn interaction_between(&self, k: usize, l: usize) -> Result<PauliSum> {
        let lo = check_adjacent(self.n_logical, k, l)?;
        let mut h = PauliSum::new(self.n_qubits());
        for p in self.qubits_of(lo) {
            for q in self.qubits_of(lo + 1) {
                let (p, q, j) = self.edge(p, q, self.j1);
                h.push(PauliTerm::pair(j, p, q, Axis::Z)?)?;
            }
        }
        Ok(h)
    }

    pub fn hamiltonian(&self) -> Result<PauliSum> {
        let mut h = PauliSum::new(self.n_qubits());
        for (p, q, j) in self.edges() {
            h.push(PauliTerm::pair(j, p, q, Axis::Z)?)?;
        }
        Ok(h)
    }
}

/// Couplings of one exchange edge.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Exchange {
    pub jxy: f64,
    pub jz: f64,
}

/// Exchange chain: every star couples to both dots of each neighbouring
/// isolator with `jxy(σˣσˣ+σʸσʸ) + jz σᶻσᶻ`. The dot-dot couplings are off
/// during computation and do not appear.
#[derive(Clone, Debug, PartialEq)]
pub struct ExchangeChain {
    n_logical: usize,
    jxy: f64,
    jz: f64,
    overrides: BTreeMap<(usize, usize), Exchange>,
}

/// The four qubits around one interior isolator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IsolatorGroup {
    pub isolator: usize,
    pub stars: [usize; 2],
    pub dots: [usize; 2],
}

impl IsolatorGroup {
    pub fn other_star(&self, star: usize) -> Option<usize> {
        match self.stars {
            [s, o] | [o, s] if s == star => Some(o),
            _ => None,
        }
    }

    pub fn other_dot(&self, dot: usize) -> Option<usize> {
        match self.dots {
            [d, o] | [o, d] if d == dot => Some(o),
            _ => None,
        }
    }

    pub fn qubits(&self) -> [usize; 4] {
        [self.stars[0], self.dots[0], self.dots[1], self.stars[1]]
    }
}

impl ExchangeChain {
    pub fn new(n_logical: usize, jxy: f64, jz: f64) -> Result<Self> {
        if n_logical == 0 {
            return Err(Error::InvalidArchitecture("n_logical must be at least 1".into()));
        }
        check_positive("jxy", jxy)?;
        if !(jz.is_finite() && jz >= 0.0) {
            return Err(Error::InvalidArchitecture(format!("jz must be finite and non-negative, got {jz}")));
        }
        Ok(Self { n_logical, jxy, jz, overrides: BTreeMap::new() })
    }

    pub fn with_edge_coupling(mut self, p: usize, q: usize, c: Exchange) -> Result<Self> {
        check_positive("edge jxy", c.jxy)?;
        let e = ordered(p, q);
        if !self.edges().iter().any(|&(x, y, _)| (x, y) == e) {
            return Err(Error::InvalidArchitecture(format!("({p}, {q}) is not an edge of the chain")));
        }
        self.overrides.insert(e, c);
        Ok(self)
    }

    pub fn n_logical(&self) -> usize {
        self.n_logical
    }

    pub fn n_qubits(&self) -> usize {
        3 * self.n_logical
    }

    pub fn jxy(&self) -> f64 {
        self.jxy
    }

    pub fn jz(&self) -> f64 {
        self.jz
    }

    pub fn is_uniform(&self) -> bool {
        self.overrides.is_empty()
    }

    pub fn star(&self, k: usize) -> usize {
        3 * k
    }

    pub fn dots(&self, k: usize) -> [usize; 2] {
        [3 * k + 1, 3 * k + 2]
    }

    pub fn is_star(&self, q: usize) -> bool {
        q < self.n_qubits() && q.is_multiple_of(3)
    }

    /// Star-dot edges `(p, q, couplings)` with `p < q`.
    pub fn edges(&self) -> Vec<(usize, usize, Exchange)> {
        let mut out = Vec::new();
        for k in 0..self.n_logical {
            let s = self.star(k);
            if k > 0 {
                for d in self.dots(k - 1) {
                    out.push(self.edge(s, d));
                }
            }
            for d in self.dots(k) {
                out.push(self.edge(s, d));
            }
        }
        out
    }

    fn edge(&self, p: usize, q: usize) -> (usize, usize, Exchange) {
        let e = ordered(p, q);
        let c = self.overrides.get(&e).copied().unwrap_or(Exchange { jxy: self.jxy, jz: self.jz });
        (e.0, e.1, c)
    }

    pub fn coupling(&self, p: usize, q: usize) -> Option<Exchange> {
        let e = ordered(p, q);
        self.edges().into_iter().find(|&(x, y, _)| (x, y) == e).map(|(_, _, c)| c)
    }

    fn push_edge(&self, h: &mut PauliSum, p: usize, q: usize) -> Result<()> {
        let (p, q, c) = self.edge(p, q);
        h.push(PauliTerm::pair(c.jxy, p, q, Axis::X)?)?;
        h.push(PauliTerm::pair(c.jxy, p, q, Axis::Y)?)?;
        h.push(PauliTerm::pair(c.jz, p, q, Axis::Z)?)
    }

    /// Star `q_k` coupled to its own isolator.
    pub fn intra_terms(&self, k: usize) -> Result<PauliSum> {
        if k >= self.n_logical {
            return Err(Error::LogicalOutOfRange { index: k, width: self.n_logical });
        }
        let mut h = PauliSum::new(self.n_qubits());
        for d in self.dots(k) {
            self.push_edge(&mut h, self.star(k), d)?;
        }
        Ok(h)
    }

    /// Carrier-isolator coupling between adjacent bits: the star of the
    /// right-hand bit against the isolator of the left-hand bit, six terms.
    pub fn interaction_between(&self, k: usize, l: usize) -> Result<PauliSum> {
        let lo = check_adjacent(self.n_logical, k, l)?;
        let mut h = PauliSum::new(self.n_qubits());
        for d in self.dots(lo) {
            self.push_edge(&mut h, self.star(lo + 1), d)?;
        }
        Ok(h)
    }

    pub fn hamiltonian(&self) -> Result<PauliSum> {
        let mut h = PauliSum::new(self.n_qubits());
        for (p, q, _) in self.edges() {
            self.push_edge(&mut h, p, q)?;
        }
        Ok(h)
    }

    /// The two stars and two dots around interior isolator `isolator`.
    pub fn isolator_group(&self, isolator: usize) -> Result<IsolatorGroup> {
        if isolator + 1 >= self.n_logical {
            return Err(Error::InvalidArchitecture(format!(
                "isolator {isolator} is not shared by two stars in a chain of {} bits",
                self.n_logical
            )));
        }
        Ok(IsolatorGroup { isolator, stars: [self.star(isolator), self.star(isolator + 1)], dots: self.dots(isolator) })
    }

    /// Group containing the star-dot pair, if the dot's isolator is interior
    /// and the star is adjacent to it.
    pub fn group_of_pair(&self, star: usize, dot: usize) -> Result<IsolatorGroup> {
        let err = Error::PairNotInGroup { star, dot };
        if !self.is_star(star) || dot >= self.n_qubits() || dot.is_multiple_of(3) {
            return Err(err);
        }
        let g = self.isolator_group(dot / 3).map_err(|_| err.clone())?;
        if g.stars.contains(&star) {
            Ok(g)
        } else {
            Err(err)
        }
    }
}

/// Either chain, for code that handles both.
#[derive(Clone, Debug, PartialEq)]
pub enum Architecture {
    Diagonal(DiagonalChain),
    Exchange(ExchangeChain),
}

impl Architecture {
    pub fn n_qubits(&self) -> usize {
        match self {
            Architecture::Diagonal(c) => c.n_qubits(),
            Architecture::Exchange(c) => c.n_qubits(),
        }
    }

    pub fn n_logical(&self) -> usize {
        match self {
            Architecture::Diagonal(c) => c.n_logical(),
            Architecture::Exchange(c) => c.n_logical(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Architecture::Diagonal(_) => "diagonal",
            Architecture::Exchange(_) => "exchange",
        }
    }

    pub fn build_hamiltonian(&self) -> Result<PauliSum> {
        match self {
            Architecture::Diagonal(c) => c.hamiltonian(),
            Architecture::Exchange(c) => c.hamiltonian(),
        }
    }

    pub fn interaction_between(&self, k: usize, l: usize) -> Result<PauliSum> {
        match self {
            Architecture::Diagonal(c) => c.interaction_between(k, l),
            Architecture::Exchange(c) => c.interaction_between(k, l),
        }
    }

    pub fn intra_terms(&self, k: usize) -> Result<PauliSum> {
        match self {
            Architecture::Diagonal(c) => c.intra_terms(k),
            Architecture::Exchange(c) => c.intra_terms(k),
        }
    }

    /// Physical qubits belonging to logical bit `k`.
    pub fn qubits_of(&self, k: usize) -> Vec<usize> {
        match self {
            Architecture::Diagonal(c) => c.qubits_of(k).to_vec(),
            Architecture::Exchange(c) => {
                let [d1, d2] = c.dots(k);
                vec![c.star(k), d1, d2]
            }
        }
    }
}

impl From<DiagonalChain> for Architecture {
    fn from(c: DiagonalChain) -> Self {
        Architecture::Diagonal(c)
    }
}

impl From<ExchangeChain> for Architecture {
    fn from(c: ExchangeChain) -> Self {
        Architecture::Exchange(c)
    }
}

/// Dot-dot coupling used only while preparing isolators.
pub fn isolator_pair_hamiltonian(jxy: f64, jz: f64) -> Result<PauliSum> {
    check_positive("jxy", jxy)?;
    PauliSum::from_terms(
        2,
        [PauliTerm::pair(jxy, 0, 1, Axis::X)?, PauliTerm::pair(jxy, 0, 1, Axis::Y)?, PauliTerm::pair(jz, 0, 1, Axis::Z)?],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::statevector::{matrix_of, StateVector};
    use crate::C64;

    fn term_key(t: &PauliTerm) -> (u64, Vec<(usize, Axis)>) {
        (t.coefficient().to_bits(), t.factors().to_vec())
    }

    #[test]
    fn diagonal_term_counts() {
        let c = DiagonalChain::new(2, 1.0, 0.5).unwrap();
        assert_eq!(c.hamiltonian().unwrap().len(), 6);
        let c1 = DiagonalChain::new(1, 2.0, 0.5).unwrap();
        let h = c1.hamiltonian().unwrap();
        assert_eq!(h.len(), 1);
        assert_eq!(h.terms()[0].coefficient(), 2.0);
        assert_eq!(h.terms()[0].factors(), &[(0, Axis::Z), (1, Axis::Z)]);
    }

    #[test]
    fn exchange_term_counts() {
        let c = ExchangeChain::new(2, 1.0, 0.3).unwrap();
        let h = c.hamiltonian().unwrap();
        let interior = c.dots(0);
        let touching = h.terms().iter().filter(|t| interior.iter().any(|&d| t.acts_on(d))).count();
        assert_eq!(touching, 12);
        // plus the trailing isolator on the last star
        assert_eq!(h.len(), 18);
    }

    #[test]
    fn interaction_between_examples() {
        let d = DiagonalChain::new(3, 1.0, 0.7).unwrap();
        let h = d.interaction_between(1, 2).unwrap();
        assert_eq!(h.len(), 4);
        assert!(h.terms().iter().all(|t| t.coefficient() == 0.7));
        assert_eq!(d.interaction_between(2, 1).unwrap(), h);

        let e = ExchangeChain::new(2, 1.0, 0.5).unwrap();
        let h = e.interaction_between(0, 1).unwrap();
        assert_eq!(h.len(), 6);
        assert!(h.terms().iter().all(|t| t.acts_on(e.star(1))));

        assert_eq!(d.interaction_between(1, 1).unwrap_err(), Error::NotAdjacent(1, 1));
        assert_eq!(d.interaction_between(0, 2).unwrap_err(), Error::NotAdjacent(0, 2));
        assert!(matches!(d.interaction_between(2, 3), Err(Error::LogicalOutOfRange { .. })));
    }

    #[test]
    fn hamiltonian_decomposes_into_intra_and_pair_terms() {
        for arch in [
            Architecture::from(DiagonalChain::new(4, 1.3, 0.4).unwrap()),
            Architecture::from(ExchangeChain::new(3, 1.0, 0.25).unwrap()),
        ] {
            let mut parts = PauliSum::new(arch.n_qubits());
            for k in 0..arch.n_logical() {
                parts.extend(&arch.intra_terms(k).unwrap()).unwrap();
                if k + 1 < arch.n_logical() {
                    parts.extend(&arch.interaction_between(k, k + 1).unwrap()).unwrap();
                }
            }
            let mut a: Vec<_> = arch.build_hamiltonian().unwrap().terms().iter().map(term_key).collect();
            let mut b: Vec<_> = parts.terms().iter().map(term_key).collect();
            a.sort();
            b.sort();
            assert_eq!(a, b, "{}", arch.kind());
        }
    }

    #[test]
    fn coefficients_are_raw_couplings() {
        let d = DiagonalChain::new(3, 1.25, 0.75).unwrap();
        assert!(d.hamiltonian().unwrap().terms().iter().all(|t| [1.25, 0.75].contains(&t.coefficient())));
        let e = ExchangeChain::new(3, 0.9, 0.4).unwrap();
        assert!(e.hamiltonian().unwrap().terms().iter().all(|t| [0.9, 0.4].contains(&t.coefficient())));
    }

    #[test]
    fn exchange_has_only_star_dot_terms() {
        let e = ExchangeChain::new(3, 1.0, 1.0).unwrap();
        for t in e.hamiltonian().unwrap().terms() {
            let stars = t.factors().iter().filter(|(q, _)| e.is_star(*q)).count();
            assert_eq!(stars, 1, "term {t}");
            assert_eq!(t.factors().len(), 2);
        }
    }

    #[test]
    fn invalid_architectures() {
        assert!(DiagonalChain::new(0, 1.0, 1.0).is_err());
        assert!(DiagonalChain::new(1, 0.0, 1.0).is_err());
        assert!(DiagonalChain::new(1, 1.0, -1.0).is_err());
        assert!(ExchangeChain::new(1, 0.0, 0.0).is_err());
        assert!(ExchangeChain::new(1, 1.0, -0.1).is_err());
        assert!(ExchangeChain::new(1, 1.0, 0.0).is_ok());
    }

    #[test]
    fn edge_overrides() {
        let d = DiagonalChain::new(2, 1.0, 1.0).unwrap().with_edge_coupling(3, 0, 1.1).unwrap();
        assert_eq!(d.coupling(0, 3), Some(1.1));
        assert_eq!(d.coupling(1, 2), Some(1.0));
        assert!(!d.is_uniform());
        assert!(DiagonalChain::new(2, 1.0, 1.0).unwrap().with_edge_coupling(0, 0, 1.0).is_err());
        let e = ExchangeChain::new(2, 1.0, 0.0).unwrap();
        assert!(e.clone().with_edge_coupling(0, 3, Exchange { jxy: 1.0, jz: 0.0 }).is_err());
        let e = e.with_edge_coupling(3, 1, Exchange { jxy: 1.2, jz: 0.1 }).unwrap();
        assert_eq!(e.coupling(1, 3), Some(Exchange { jxy: 1.2, jz: 0.1 }));
    }

    #[test]
    fn groups() {
        let e = ExchangeChain::new(3, 1.0, 0.0).unwrap();
        let g = e.isolator_group(1).unwrap();
        assert_eq!(g.stars, [3, 6]);
        assert_eq!(g.dots, [4, 5]);
        assert!(e.isolator_group(2).is_err());
        assert_eq!(e.group_of_pair(6, 4).unwrap(), g);
        assert_eq!(e.group_of_pair(0, 1).unwrap(), e.isolator_group(0).unwrap());
        assert!(e.group_of_pair(0, 4).is_err());
        assert!(e.group_of_pair(6, 7).is_err());
        assert!(e.group_of_pair(1, 2).is_err());
    }

    fn singlet() -> StateVector {
        StateVector::from_sparse(2, &[(0b10, C64::new(1.0, 0.0)), (0b01, C64::new(-1.0, 0.0))]).unwrap()
    }

    fn apply(h: &PauliSum, s: &StateVector) -> Vec<C64> {
        h.apply(s.amplitudes()).unwrap()
    }

    #[test]
    fn isolator_pair_spectrum() {
        // Hand-derived eigenvectors of jxy(XX+YY)+jz ZZ: |00⟩,|11⟩ → jz;
        // (|01⟩+|10⟩)/√2 → 2jxy − jz; singlet → −2jxy − jz.
        for (jxy, jz, singlet_e) in [(1.0, 1.0, -3.0), (1.0, 0.0, -2.0)] {
            let h = isolator_pair_hamiltonian(jxy, jz).unwrap();
            let s = singlet();
            let hs = apply(&h, &s);
            for (x, y) in hs.iter().zip(s.amplitudes()) {
                assert!((x - y * singlet_e).norm() < 1e-15);
            }
            let triplet0 = StateVector::from_sparse(2, &[(1, C64::new(1.0, 0.0)), (2, C64::new(1.0, 0.0))]).unwrap();
            let ht = apply(&h, &triplet0);
            for (x, y) in ht.iter().zip(triplet0.amplitudes()) {
                assert!((x - y * (2.0 * jxy - jz)).norm() < 1e-15);
            }
            let mut spectrum: Vec<f64> = vec![jz, jz, 2.0 * jxy - jz, singlet_e];
            spectrum.sort_by(f64::total_cmp);
            let trace: f64 = (0..4).map(|i| matrix_of(&h).unwrap().matrix()[(i, i)].re).sum();
            assert!((trace - spectrum.iter().sum::<f64>()).abs() < 1e-15);
            assert!(spectrum[0] < spectrum[1]);
        }
        assert_eq!(
            [-3.0, 1.0, 1.0, 1.0].to_vec(),
            {
                let p = crate::statevector::Propagator::new(&isolator_pair_hamiltonian(1.0, 1.0).unwrap()).unwrap();
                let mut e: Vec<f64> = p.energies().iter().map(|x| (x * 1e12).round() / 1e12).collect();
                e.sort_by(f64::total_cmp);
                e
            }
        );
    }
}
