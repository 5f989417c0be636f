//! Hopf curvature configurations and principal-curvature multisets.
//!
//! A `HopfConfig` carries the Reeb value alpha, the spectrum of the shape
//! operator restricted to the maximal A-invariant subbundle Q, and the
//! dimension parameter m. The 0-block of multiplicity 2 (directions AN and
//! A-xi) and the Reeb entry of multiplicity 1 are structural and implicit.

use crate::mult::{MDim, Mult};
use hopfq_exact::AlgebraicReal;
use std::cmp::Ordering;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("dimension parameter must satisfy m >= 3, got {0}")]
    DimensionTooSmall(u32),
    #[error("spectrum values must be pairwise distinct")]
    DuplicateValue,
    #[error("spectrum multiplicities must sum to 2m-4 (got {0})")]
    MultiplicitySum(String),
    #[error("multiplicity {0} is not positive for the configured m")]
    NonPositiveMult(String),
    #[error("Reeb value alpha must be nonnegative")]
    NegativeAlpha,
}

/// Multiset of (curvature value, multiplicity), values distinct and sorted.
#[derive(Clone, PartialEq, Eq)]
pub struct PrincipalMultiset {
    entries: Vec<(AlgebraicReal, Mult)>,
}

impl PrincipalMultiset {
    pub fn empty() -> Self {
        PrincipalMultiset { entries: vec![] }
    }

    /// Build by merging entries with equal values (canonical merge).
    pub fn from_entries(entries: Vec<(AlgebraicReal, Mult)>) -> Self {
        let mut ms = PrincipalMultiset { entries: vec![] };
        for (v, m) in entries {
            ms.push(v, m);
        }
        ms
    }

    pub fn push(&mut self, value: AlgebraicReal, mult: Mult) {
        if mult.is_zero() {
            return;
        }
        match self
            .entries
            .binary_search_by(|(v, _)| v.compare(&value))
        {
            Ok(i) => self.entries[i].1 = self.entries[i].1 + mult,
            Err(i) => self.entries.insert(i, (value, mult)),
        }
    }

    pub fn entries(&self) -> &[(AlgebraicReal, Mult)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, value: &AlgebraicReal) -> Option<Mult> {
        self.entries
            .binary_search_by(|(v, _)| v.compare(value))
            .ok()
            .map(|i| self.entries[i].1)
    }

    pub fn contains(&self, value: &AlgebraicReal) -> bool {
        self.get(value).is_some()
    }

    pub fn total(&self) -> Mult {
        self.entries
            .iter()
            .fold(Mult::ZERO, |acc, (_, m)| acc + *m)
    }

    pub fn values(&self) -> impl Iterator<Item = &AlgebraicReal> {
        self.entries.iter().map(|(v, _)| v)
    }

    /// Invariance of the multiset under sign change.
    pub fn is_austere(&self) -> bool {
        self.entries.iter().all(|(v, m)| {
            let neg = v.neg();
            self.get(&neg) == Some(*m)
        })
    }

    pub fn negated(&self) -> Self {
        PrincipalMultiset::from_entries(
            self.entries
                .iter()
                .map(|(v, m)| (v.neg(), *m))
                .collect(),
        )
    }

    /// Sum of value * multiplicity for concrete m.
    pub fn weighted_trace(&self, m: u32) -> AlgebraicReal {
        let mut acc = AlgebraicReal::zero();
        for (v, mult) in &self.entries {
            let k = hopfq_exact::rat(mult.eval(m), 1);
            acc = acc.add(&v.mul_rational(&k));
        }
        acc
    }
}

impl fmt::Display for PrincipalMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (v, m)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}: {}", v, m)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for PrincipalMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An A-isotropic Hopf curvature configuration.
#[derive(Clone, PartialEq, Eq)]
pub struct HopfConfig {
    m: MDim,
    alpha: AlgebraicReal,
    spectrum: Vec<(AlgebraicReal, Mult)>,
}

impl HopfConfig {
    /// Validating constructor (spectrum = sigma(Q) only, structural entries implicit).
    pub fn new(
        m: MDim,
        alpha: AlgebraicReal,
        spectrum: Vec<(AlgebraicReal, Mult)>,
    ) -> Result<Self, ConfigError> {
        if alpha.sign() < 0 {
            return Err(ConfigError::NegativeAlpha);
        }
        Self::new_any_orientation(m, alpha, spectrum)
    }

    /// Same validation but alpha of either sign (parallel flows can leave the
    /// alpha >= 0 normalization; negative alpha is the flipped co-orientation).
    pub fn new_any_orientation(
        m: MDim,
        alpha: AlgebraicReal,
        spectrum: Vec<(AlgebraicReal, Mult)>,
    ) -> Result<Self, ConfigError> {
        if let MDim::Concrete(mm) = m {
            if mm < 3 {
                return Err(ConfigError::DimensionTooSmall(mm));
            }
        }
        let mut spectrum = spectrum;
        spectrum.sort_by(|a, b| a.0.compare(&b.0));
        for w in spectrum.windows(2) {
            if w[0].0.compare(&w[1].0) == Ordering::Equal {
                return Err(ConfigError::DuplicateValue);
            }
        }
        let total = spectrum.iter().fold(Mult::ZERO, |acc, (_, k)| acc + *k);
        let expected = Mult::new(2, -4);
        let sum_ok = match m {
            MDim::Symbolic => total == expected,
            MDim::Concrete(mm) => total.eval(mm) == expected.eval(mm),
        };
        if !sum_ok {
            return Err(ConfigError::MultiplicitySum(total.to_string()));
        }
        for (_, k) in &spectrum {
            // Symbolic multiplicities must be eventually positive and never
            // negative in the family range (m-3 is allowed: the entry is
            // simply absent at m = 3).
            let ok = match m {
                MDim::Symbolic => (k.a > 0 && k.eval(3) >= 0) || (k.a == 0 && k.b >= 1),
                MDim::Concrete(mm) => k.eval(mm) >= 1,
            };
            if !ok {
                return Err(ConfigError::NonPositiveMult(k.to_string()));
            }
        }
        Ok(HopfConfig { m, alpha, spectrum })
    }

    pub fn m(&self) -> MDim {
        self.m
    }

    pub fn alpha(&self) -> &AlgebraicReal {
        &self.alpha
    }

    pub fn spectrum(&self) -> &[(AlgebraicReal, Mult)] {
        &self.spectrum
    }

    pub fn spectrum_multiset(&self) -> PrincipalMultiset {
        PrincipalMultiset::from_entries(self.spectrum.clone())
    }

    pub fn spectrum_mult_of(&self, value: &AlgebraicReal) -> Option<Mult> {
        self.spectrum
            .iter()
            .find(|(v, _)| v.compare(value) == Ordering::Equal)
            .map(|(_, k)| *k)
    }

    /// Instantiate symbolic multiplicities at a concrete m.
    pub fn instantiate(&self, m: u32) -> Result<HopfConfig, ConfigError> {
        HopfConfig::new_any_orientation(
            MDim::Concrete(m),
            self.alpha.clone(),
            self.spectrum.clone(),
        )
    }

    /// All principal curvatures: sigma(Q) plus the structural Reeb entry
    /// (alpha, 1) and the 0-block (0, 2), merged canonically.
    pub fn full_multiset(&self) -> PrincipalMultiset {
        let mut entries = self.spectrum.clone();
        entries.push((self.alpha.clone(), Mult::ONE));
        entries.push((AlgebraicReal::zero(), Mult::constant(2)));
        PrincipalMultiset::from_entries(entries)
    }

    /// Number of distinct principal curvatures (g of the classification).
    pub fn distinct_count(&self) -> usize {
        self.full_multiset().len()
    }
}

impl fmt::Debug for HopfConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HopfConfig(m={}, alpha={}, sigma(Q)=", self.m, self.alpha)?;
        write!(f, "{}", PrincipalMultiset::from_entries(self.spectrum.clone()))?;
        write!(f, ")")
    }
}

impl fmt::Display for HopfConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
