//! Intersection numbers on a surface with a fixed finite basis of classes.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::curves::riemann_hurwitz_branch;
use crate::error::{Error, Result};

/// Named classes with a symmetric integer pairing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassBasis {
    labels: Vec<String>,
    pairing: Vec<Vec<i64>>,
}

impl ClassBasis {
    pub fn new(labels: Vec<String>, pairing: Vec<Vec<i64>>) -> Result<Self> {
        let n = labels.len();
        if pairing.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: pairing.len() });
        }
        if let Some(row) = pairing.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: row.len() });
        }
        for i in 0..n {
            for j in 0..i {
                if pairing[i][j] != pairing[j][i] {
                    return Err(Error::InvalidInput(format!("pairing is not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(Self { labels, pairing })
    }

    /// `{f1, f2, Delta}` on `C x C` for a curve of genus `genus`: fibers of the two
    /// projections meet once, `Delta^2 = 2 - 2g`, and `Delta . f_i = diag_f`.
    pub fn product_of_curves(genus: i64, diag_f: i64) -> Self {
        Self {
            labels: vec!["f1".into(), "f2".into(), "Delta".into()],
            pairing: vec![vec![0, 1, diag_f], vec![1, 0, diag_f], vec![diag_f, diag_f, 2 - 2 * genus]],
        }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn pairing(&self) -> &[Vec<i64>] {
        &self.pairing
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// An integer combination of basis classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorClass {
    basis: Arc<ClassBasis>,
    coefficients: Vec<i64>,
}

impl DivisorClass {
    pub fn new(basis: &Arc<ClassBasis>, coefficients: Vec<i64>) -> Result<Self> {
        if coefficients.len() != basis.dim() {
            return Err(Error::DimensionMismatch { expected: basis.dim(), found: coefficients.len() });
        }
        Ok(Self { basis: Arc::clone(basis), coefficients })
    }

    pub fn zero(basis: &Arc<ClassBasis>) -> Self {
        Self { basis: Arc::clone(basis), coefficients: vec![0; basis.dim()] }
    }

    /// The class `coefficient * label`.
    pub fn basis_element(basis: &Arc<ClassBasis>, label: &str, coefficient: i64) -> Result<Self> {
        let i = basis.index_of(label).ok_or_else(|| Error::InvalidInput(format!("no class labelled {label}")))?;
        let mut out = Self::zero(basis);
        out.coefficients[i] = coefficient;
        Ok(out)
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn basis(&self) -> &Arc<ClassBasis> {
        &self.basis
    }

    fn same_basis(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.basis, &other.basis) || self.basis == other.basis {
            Ok(())
        } else {
            Err(Error::BasisMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_basis(other)?;
        let coefficients = self.coefficients.iter().zip(&other.coefficients).map(|(a, b)| a + b).collect();
        Ok(Self { basis: Arc::clone(&self.basis), coefficients })
    }

    pub fn scale(&self, k: i64) -> Self {
        Self { basis: Arc::clone(&self.basis), coefficients: self.coefficients.iter().map(|a| k * a).collect() }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(-1))
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (&c, l) in self.coefficients.iter().zip(self.basis.labels()) {
            if c == 0 {
                continue;
            }
            match (first, c < 0) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            f.write_str(l)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `a^T P b` for the basis pairing `P`.
pub fn intersect(a: &DivisorClass, b: &DivisorClass) -> Result<i64> {
    a.same_basis(b)?;
    let p = a.basis.pairing();
    let mut total: i64 = 0;
    for (i, &x) in a.coefficients.iter().enumerate() {
        for (j, &y) in b.coefficients.iter().enumerate() {
            let term = x.checked_mul(y).and_then(|t| t.checked_mul(p[i][j])).ok_or(Error::Overflow("intersect"))?;
            total = total.checked_add(term).ok_or(Error::Overflow("intersect"))?;
        }
    }
    Ok(total)
}

/// Genus from `2g - 2 = deg K`.
pub fn adjunction_genus(canonical_degree: i64) -> Result<i64> {
    if canonical_degree % 2 != 0 {
        return Err(Error::OddCanonicalDegree(canonical_degree));
    }
    Ok((canonical_degree + 2) / 2)
}

/// Class on `C x C` cut by a form of bidegree `(p, q)` when the hyperplane
/// class of `C` has degree `hyperplane_degree`: `q h f1 + p h f2`.
pub fn bidegree_class(basis: &Arc<ClassBasis>, p: i64, q: i64, hyperplane_degree: i64) -> Result<DivisorClass> {
    if p < 0 || q < 0 || hyperplane_degree < 0 {
        return Err(Error::InvalidInput("bidegree and hyperplane degree must be non-negative".into()));
    }
    DivisorClass::basis_element(basis, "f1", q * hyperplane_degree)?
        .add(&DivisorClass::basis_element(basis, "f2", p * hyperplane_degree)?)
}

/// The curve `D` in `B x B` cut by a bidegree `(1, 2)` form minus twice the
/// diagonal, for a canonical curve `B`, and the double-cover count it feeds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductCurveChain {
    pub genus_b: i64,
    pub diag_f: i64,
    pub delta_squared: i64,
    pub d_class: String,
    pub canonical_class: String,
    pub canonical_degree: i64,
    pub genus_d: i64,
    pub cover_degree: i64,
    pub branch_points: i64,
}

impl ProductCurveChain {
    pub fn compute(genus_b: i64, diag_f: i64, cover_degree: i64) -> Result<Self> {
        let basis = Arc::new(ClassBasis::product_of_curves(genus_b, diag_f));
        let h = 2 * genus_b - 2;
        let delta = DivisorClass::basis_element(&basis, "Delta", 1)?;
        let d = bidegree_class(&basis, 1, 2, h)?.sub(&delta.scale(2))?;
        let k = bidegree_class(&basis, 1, 1, h)?;
        let canonical_degree = intersect(&k.add(&d)?, &d)?;
        let genus_d = adjunction_genus(canonical_degree)?;
        let branch_points = riemann_hurwitz_branch(genus_d, genus_b, cover_degree)?;
        Ok(Self {
            genus_b,
            diag_f,
            delta_squared: intersect(&delta, &delta)?,
            d_class: d.to_string(),
            canonical_class: k.add(&d)?.to_string(),
            canonical_degree,
            genus_d,
            cover_degree,
            branch_points,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn genus_four() -> Arc<ClassBasis> {
        Arc::new(ClassBasis::product_of_curves(4, 1))
    }

    #[test]
    fn basic_pairings() {
        let b = genus_four();
        let delta = DivisorClass::basis_element(&b, "Delta", 1).unwrap();
        let f1 = DivisorClass::basis_element(&b, "f1", 1).unwrap();
        assert_eq!(intersect(&delta, &delta).unwrap(), -6);
        assert_eq!(intersect(&f1, &f1).unwrap(), 0);
    }

    #[test]
    fn canonical_degree_of_d() {
        let b = genus_four();
        let kd = DivisorClass::new(&b, vec![18, 12, -2]).unwrap();
        let d = DivisorClass::new(&b, vec![12, 6, -2]).unwrap();
        assert_eq!(intersect(&kd, &d).unwrap(), 132);
        assert_eq!(kd.to_string(), "18f1 + 12f2 - 2Delta");
    }

    #[test]
    fn bidegrees() {
        let b = genus_four();
        assert_eq!(bidegree_class(&b, 1, 2, 6).unwrap().coefficients(), &[12, 6, 0]);
        assert_eq!(bidegree_class(&b, 0, 0, 6).unwrap(), DivisorClass::zero(&b));
        assert_eq!(bidegree_class(&b, 1, 1, 6).unwrap().coefficients(), &[6, 6, 0]);
    }

    #[test]
    fn adjunction() {
        assert_eq!(adjunction_genus(132).unwrap(), 67);
        assert_eq!(adjunction_genus(-2).unwrap(), 0);
        assert_eq!(adjunction_genus(0).unwrap(), 1);
        assert_eq!(adjunction_genus(3), Err(Error::OddCanonicalDegree(3)));
    }

    #[test]
    fn mismatched_bases() {
        let a = DivisorClass::zero(&genus_four());
        let b = DivisorClass::zero(&Arc::new(ClassBasis::product_of_curves(4, 0)));
        assert_eq!(intersect(&a, &b), Err(Error::BasisMismatch));
        assert!(ClassBasis::new(vec!["a".into(), "b".into()], vec![vec![0, 1], vec![2, 0]]).is_err());
    }

    #[test]
    fn chain() {
        let c = ProductCurveChain::compute(4, 1, 4).unwrap();
        assert_eq!((c.delta_squared, c.canonical_degree, c.genus_d, c.branch_points), (-6, 132, 67, 108));
        assert_eq!(c.d_class, "12f1 + 6f2 - 2Delta");
        // with Delta . f_i = 0 the same classes give 228
        assert_eq!(ProductCurveChain::compute(4, 0, 4).unwrap().canonical_degree, 228);
    }
}
