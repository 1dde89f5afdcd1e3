//! Finite abelian diagonal quotients `C^n / G` and the Reid–Tai criterion.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `diag(zeta^a_1, ..., zeta^a_n)` with `zeta = exp(2 pi i / order)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CyclicDiagonalElement {
    order: u32,
    exponents: Vec<u32>,
}

impl CyclicDiagonalElement {
    pub fn new(order: u32, exponents: Vec<u32>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidInput("element order must be at least 1".into()));
        }
        if let Some(&a) = exponents.iter().find(|&&a| a >= order) {
            return Err(Error::InvalidInput(format!("exponent {a} is not reduced mod {order}")));
        }
        Ok(Self { order, exponents })
    }

    /// Build from arbitrary integer exponents, reducing them mod `order`.
    /// `(2, [-1, -1])` is `-1` on `C^2`.
    pub fn from_weights(order: u32, weights: &[i64]) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidInput("element order must be at least 1".into()));
        }
        let r = i64::from(order);
        Self::new(order, weights.iter().map(|w| w.rem_euclid(r) as u32).collect())
    }

    pub fn identity(n: usize) -> Self {
        Self { order: 1, exponents: vec![0; n] }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn dim(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_identity(&self) -> bool {
        self.exponents.iter().all(|&a| a == 0)
    }

    /// Eigenvalues different from 1.
    pub fn nontrivial_eigenvalues(&self) -> usize {
        self.exponents.iter().filter(|&&a| a != 0).count()
    }

    /// Fixes a hyperplane pointwise.
    pub fn is_quasi_reflection(&self) -> bool {
        self.nontrivial_eigenvalues() == 1
    }

    /// Same element written with its true order.
    pub fn reduced(&self) -> Self {
        let g = self.exponents.iter().fold(self.order, |g, &a| g.gcd(&a));
        Self { order: self.order / g, exponents: self.exponents.iter().map(|a| a / g).collect() }
    }

    pub fn power(&self, t: u32) -> Self {
        let r = u64::from(self.order);
        Self {
            order: self.order,
            exponents: self.exponents.iter().map(|&a| (u64::from(a) * u64::from(t) % r) as u32).collect(),
        }
        .reduced()
    }

    pub fn inverse(&self) -> Self {
        Self { order: self.order, exponents: self.exponents.iter().map(|&a| (self.order - a) % self.order).collect() }
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        let l = u64::from(self.order).lcm(&u64::from(other.order));
        let order = u32::try_from(l).map_err(|_| Error::Overflow("element order"))?;
        let (s, t) = (l / u64::from(self.order), l / u64::from(other.order));
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(&a, &b)| ((u64::from(a) * s + u64::from(b) * t) % l) as u32)
            .collect();
        Ok(Self { order, exponents }.reduced())
    }
}

impl fmt::Display for CyclicDiagonalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.exponents.iter().map(u32::to_string).collect();
        write!(f, "1/{}({})", self.order, e.join(","))
    }
}

/// `(sum a_j) / r`.
pub fn age(g: &CyclicDiagonalElement) -> Ratio<u64> {
    let s: u64 = g.exponents.iter().map(|&a| u64::from(a)).sum();
    Ratio::new(s, u64::from(g.order))
}

/// The subgroup of `GL_n` generated by a list of diagonal elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteDiagonalGroup {
    generators: Vec<CyclicDiagonalElement>,
    elements: Vec<CyclicDiagonalElement>,
}

impl FiniteDiagonalGroup {
    pub fn generated_by(generators: Vec<CyclicDiagonalElement>) -> Result<Self> {
        let n = generators.first().map(CyclicDiagonalElement::dim).ok_or_else(|| {
            Error::InvalidInput("a group needs at least one generator to fix the dimension".into())
        })?;
        if let Some(g) = generators.iter().find(|g| g.dim() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: g.dim() });
        }
        let reduced: Vec<_> = generators.iter().map(CyclicDiagonalElement::reduced).collect();
        let mut seen: BTreeSet<CyclicDiagonalElement> = BTreeSet::new();
        let mut frontier = vec![CyclicDiagonalElement::identity(n)];
        seen.insert(frontier[0].clone());
        while let Some(x) = frontier.pop() {
            for g in &reduced {
                let y = x.compose(g)?;
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        Ok(Self { generators, elements: seen.into_iter().collect() })
    }

    /// `Z/2` acting by `-1` on `C^n`.
    pub fn minus_identity(n: usize) -> Self {
        Self::generated_by(vec![CyclicDiagonalElement { order: 2, exponents: vec![1; n] }])
            .expect("one generator")
    }

    pub fn generators(&self) -> &[CyclicDiagonalElement] {
        &self.generators
    }

    /// All elements, identity first.
    pub fn elements(&self) -> &[CyclicDiagonalElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn dim(&self) -> usize {
        self.elements[0].dim()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QuotientClass {
    Terminal,
    CanonicalNotTerminal,
    NotCanonical,
}

impl fmt::Display for QuotientClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QuotientClass::Terminal => "terminal",
            QuotientClass::CanonicalNotTerminal => "canonical_not_terminal",
            QuotientClass::NotCanonical => "not_canonical",
        })
    }
}

/// Smallest age over all nontrivial elements and all their primitive
/// embeddings, or `None` for the trivial group.
pub fn minimum_age(group: &FiniteDiagonalGroup) -> Option<Ratio<u64>> {
    group
        .elements()
        .iter()
        .filter(|g| !g.is_identity())
        .flat_map(|g| {
            (1..g.order()).filter(move |t| t.gcd(&g.order()) == 1).map(move |t| age(&g.power(t)))
        })
        .min()
}

/// Reid–Tai: terminal iff every nontrivial element has age `> 1`, canonical iff `>= 1`.
pub fn classify_quotient(group: &FiniteDiagonalGroup) -> Result<QuotientClass> {
    if let Some(g) = group.elements().iter().find(|g| g.is_quasi_reflection()) {
        return Err(Error::QuasiReflection(g.to_string()));
    }
    let one = Ratio::from_integer(1);
    Ok(match minimum_age(group) {
        None => QuotientClass::Terminal,
        Some(m) if m > one => QuotientClass::Terminal,
        Some(m) if m == one => QuotientClass::CanonicalNotTerminal,
        Some(_) => QuotientClass::NotCanonical,
    })
}

/// Hypothesis taken on trust rather than computed.
pub const Q_FACTORIAL_ASSUMPTION: &str =
    "finite quotients of smooth germs are Q-factorial; the class group is not computed";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ResolutionVerdict {
    NoSymplecticDesingularization,
    Inconclusive,
}

impl fmt::Display for ResolutionVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ResolutionVerdict::NoSymplecticDesingularization => "no symplectic desingularization",
            ResolutionVerdict::Inconclusive => "inconclusive by this criterion",
        })
    }
}

/// Terminal and Q-factorial singularities admit no crepant resolution, hence no symplectic one.
pub fn symplectic_resolution_verdict(class: QuotientClass) -> ResolutionVerdict {
    match class {
        QuotientClass::Terminal => ResolutionVerdict::NoSymplecticDesingularization,
        _ => ResolutionVerdict::Inconclusive,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(r: u32, a: &[u32]) -> CyclicDiagonalElement {
        CyclicDiagonalElement::new(r, a.to_vec()).unwrap()
    }

    #[test]
    fn ages() {
        assert_eq!(age(&CyclicDiagonalElement::identity(5)), Ratio::from_integer(0));
        assert_eq!(age(&el(2, &[1, 1, 1, 1])), Ratio::from_integer(2));
        assert_eq!(age(&el(2, &[1, 1])), Ratio::from_integer(1));
        assert_eq!(age(&el(3, &[1, 1])), Ratio::new(2, 3));
    }

    #[test]
    fn rejects_unreduced_exponents() {
        assert!(CyclicDiagonalElement::new(2, vec![2]).is_err());
        assert!(CyclicDiagonalElement::new(0, vec![]).is_err());
        assert_eq!(CyclicDiagonalElement::from_weights(2, &[-1, 3]).unwrap(), el(2, &[1, 1]));
    }

    #[test]
    fn composition_lifts_to_common_order() {
        let a = el(2, &[1, 0]);
        let b = el(3, &[0, 1]);
        assert_eq!(a.compose(&b).unwrap(), el(6, &[3, 2]));
        assert_eq!(a.compose(&a).unwrap(), CyclicDiagonalElement::identity(2));
        assert_eq!(el(4, &[2, 2]).reduced(), el(2, &[1, 1]));
    }

    #[test]
    fn klein_four_group() {
        let g = FiniteDiagonalGroup::generated_by(vec![el(2, &[0, 0, 1, 1, 1, 1]), el(2, &[1, 1, 0, 0, 1, 1])]).unwrap();
        assert_eq!(g.order(), 4);
        assert!(g.elements()[0].is_identity());
        assert_eq!(classify_quotient(&g).unwrap(), QuotientClass::Terminal);
    }

    #[test]
    fn classification_examples() {
        let c4 = FiniteDiagonalGroup::minus_identity(4);
        let class = classify_quotient(&c4).unwrap();
        assert_eq!(class, QuotientClass::Terminal);
        assert_eq!(symplectic_resolution_verdict(class), ResolutionVerdict::NoSymplecticDesingularization);
        let c2 = FiniteDiagonalGroup::minus_identity(2);
        assert_eq!(classify_quotient(&c2).unwrap(), QuotientClass::CanonicalNotTerminal);
        assert_eq!(symplectic_resolution_verdict(QuotientClass::CanonicalNotTerminal), ResolutionVerdict::Inconclusive);
        // 1/3(1,1): age 2/3
        let g = FiniteDiagonalGroup::generated_by(vec![el(3, &[1, 1])]).unwrap();
        assert_eq!(classify_quotient(&g).unwrap(), QuotientClass::NotCanonical);
    }

    #[test]
    fn quasi_reflections_are_refused() {
        let g = FiniteDiagonalGroup::generated_by(vec![el(2, &[1, 0, 0])]).unwrap();
        assert!(matches!(classify_quotient(&g), Err(Error::QuasiReflection(_))));
    }
}
