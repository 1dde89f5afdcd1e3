//! Invariant rings of diagonal group actions on polynomial rings.
//!
//! The monoid of invariant monomials of a diagonal action is a saturated
//! affine monoid; its Hilbert basis generates the invariant ring and the
//! binomial relations among those generators present it. Everything here is
//! combinatorial on exponent vectors: no polynomial arithmetic is needed.

mod action;
pub mod catalog;
mod fixed;
mod hilbert;
mod iso;
mod relations;

pub use action::{DiagonalAction, FiniteFactor};
pub use fixed::{fixed_locus_presentation, CoordinateInvolution, FixedLocus};
pub use hilbert::{hilbert_basis_candidates, invariant_generators, DEFAULT_DEGREE_BOUND};
pub use iso::{generator_map_from_variables, presentations_isomorphic, IsoCertificate};
pub use relations::{
    congruence_closure, default_relation_bound, family_rank, fibers, minimal_relations,
    toric_relations, ClosureGap, ClosureReport, Fiber,
};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::Monomial;

/// A binomial relation `prod g^lhs = prod g^rhs`, exponents indexed by generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Relation {
    pub lhs: Vec<u32>,
    pub rhs: Vec<u32>,
}

impl Relation {
    pub fn new(lhs: Vec<u32>, rhs: Vec<u32>) -> Self {
        Self { lhs, rhs }
    }

    /// Degree in the generators (the larger side).
    pub fn degree(&self) -> u32 {
        self.lhs.iter().sum::<u32>().max(self.rhs.iter().sum())
    }

    pub fn is_trivial(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Monomial generators of an invariant ring plus binomial relations among them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidPresentation {
    pub ambient_dim: usize,
    pub variable_names: Vec<String>,
    pub generators: Vec<Monomial>,
    pub labels: Vec<String>,
    pub relations: Vec<Relation>,
}

impl MonoidPresentation {
    /// Generators only, with default labels `g1, g2, ...`.
    pub fn from_generators(ambient_dim: usize, generators: Vec<Monomial>) -> Result<Self> {
        for g in &generators {
            if g.dim() != ambient_dim {
                return Err(Error::DimensionMismatch { expected: ambient_dim, found: g.dim() });
            }
            if g.is_one() {
                return Err(Error::InvalidInput("constant generator".into()));
            }
        }
        let labels = (1..=generators.len()).map(|i| format!("g{i}")).collect();
        let variable_names = (1..=ambient_dim).map(|i| format!("z{i}")).collect();
        Ok(Self { ambient_dim, variable_names, generators, labels, relations: Vec::new() })
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn with_variable_names(mut self, names: Vec<String>) -> Self {
        self.variable_names = names;
        self
    }

    /// Relabel generators with `f(generator)`.
    pub fn relabel(mut self, f: impl Fn(&Monomial) -> String) -> Self {
        self.labels = self.generators.iter().map(f).collect();
        self
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Ambient exponent vector of a product of generators.
    pub fn expand(&self, word: &[u32]) -> Vec<u32> {
        let mut out = vec![0u32; self.ambient_dim];
        for (g, &c) in self.generators.iter().zip(word) {
            if c == 0 {
                continue;
            }
            for (o, &e) in out.iter_mut().zip(g.exponents()) {
                *o += c * e;
            }
        }
        out
    }

    /// Both sides of the relation expand to the same ambient monomial.
    pub fn relation_holds(&self, rel: &Relation) -> bool {
        rel.lhs.len() == self.len() && rel.rhs.len() == self.len() && self.expand(&rel.lhs) == self.expand(&rel.rhs)
    }

    /// Number of relations by generator degree.
    pub fn degree_profile(&self) -> BTreeMap<u32, usize> {
        let mut out = BTreeMap::new();
        for r in &self.relations {
            *out.entry(r.degree()).or_insert(0) += 1;
        }
        out
    }

    /// Number of generators by ambient degree.
    pub fn generator_degree_profile(&self) -> BTreeMap<u32, usize> {
        let mut out = BTreeMap::new();
        for g in &self.generators {
            *out.entry(g.degree()).or_insert(0) += 1;
        }
        out
    }

    pub fn word_to_string(&self, word: &[u32]) -> String {
        let mut parts = Vec::new();
        for (label, &c) in self.labels.iter().zip(word) {
            match c {
                0 => {}
                1 => parts.push(label.clone()),
                _ => parts.push(format!("{label}^{c}")),
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    pub fn relation_to_string(&self, rel: &Relation) -> String {
        format!("{} = {}", self.word_to_string(&rel.lhs), self.word_to_string(&rel.rhs))
    }

    pub fn generator_to_string(&self, i: usize) -> String {
        self.generators[i].display_with(&self.variable_names)
    }
}
