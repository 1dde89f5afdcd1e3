use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::IntegerMatrix;

/// A cyclic factor `Z/m` acting on variable `i` by `zeta_m^weights[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteFactor {
    pub modulus: u32,
    pub weights: Vec<i64>,
}

/// Diagonal action of `(C*)^k x prod Z/m_j` on `C^n`.
///
/// A monomial `x^e` is invariant iff `torus_weights * e = 0` and every finite
/// weight row dotted with `e` vanishes modulo its modulus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagonalAction {
    ambient_dim: usize,
    torus_weights: Vec<Vec<i64>>,
    finite_factors: Vec<FiniteFactor>,
}

impl DiagonalAction {
    pub fn new(ambient_dim: usize, torus_weights: Vec<Vec<i64>>, finite_factors: Vec<FiniteFactor>) -> Result<Self> {
        for row in &torus_weights {
            if row.len() != ambient_dim {
                return Err(Error::DimensionMismatch { expected: ambient_dim, found: row.len() });
            }
        }
        for f in &finite_factors {
            if f.modulus < 2 {
                return Err(Error::InvalidInput(format!("finite factor modulus {} < 2", f.modulus)));
            }
            if f.weights.len() != ambient_dim {
                return Err(Error::DimensionMismatch { expected: ambient_dim, found: f.weights.len() });
            }
        }
        Ok(Self { ambient_dim, torus_weights, finite_factors })
    }

    pub fn torus(ambient_dim: usize, torus_weights: Vec<Vec<i64>>) -> Result<Self> {
        Self::new(ambient_dim, torus_weights, Vec::new())
    }

    pub fn finite(ambient_dim: usize, finite_factors: Vec<FiniteFactor>) -> Result<Self> {
        Self::new(ambient_dim, Vec::new(), finite_factors)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn torus_weights(&self) -> &[Vec<i64>] {
        &self.torus_weights
    }

    pub fn finite_factors(&self) -> &[FiniteFactor] {
        &self.finite_factors
    }

    pub fn weight_matrix(&self) -> IntegerMatrix {
        IntegerMatrix::from_rows(self.ambient_dim, &self.torus_weights).expect("rows validated on construction")
    }

    pub fn is_invariant(&self, exponents: &[u32]) -> bool {
        if exponents.len() != self.ambient_dim {
            return false;
        }
        let torus_ok = self
            .torus_weights
            .iter()
            .all(|row| row.iter().zip(exponents).map(|(w, &e)| w * e as i64).sum::<i64>() == 0);
        torus_ok
            && self.finite_factors.iter().all(|f| {
                f.weights.iter().zip(exponents).map(|(w, &e)| w * e as i64).sum::<i64>().rem_euclid(f.modulus as i64) == 0
            })
    }

    /// Per-variable character: torus weights followed by finite weights reduced mod their modulus.
    pub(crate) fn characters(&self) -> Vec<Vec<i64>> {
        (0..self.ambient_dim)
            .map(|i| {
                self.torus_weights
                    .iter()
                    .map(|row| row[i])
                    .chain(self.finite_factors.iter().map(|f| f.weights[i].rem_euclid(f.modulus as i64)))
                    .collect()
            })
            .collect()
    }

    /// Test an accumulated character (see [`Self::characters`]) for triviality.
    pub(crate) fn character_is_trivial(&self, acc: &[i64]) -> bool {
        let k = self.torus_weights.len();
        acc[..k].iter().all(|&a| a == 0)
            && self
                .finite_factors
                .iter()
                .zip(&acc[k..])
                .all(|(f, &a)| a.rem_euclid(f.modulus as i64) == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariance_checks() {
        let a = DiagonalAction::torus(2, vec![vec![1, -1]]).unwrap();
        assert!(a.is_invariant(&[2, 2]));
        assert!(!a.is_invariant(&[2, 1]));
        let b = DiagonalAction::finite(3, vec![FiniteFactor { modulus: 2, weights: vec![1, 1, 1] }]).unwrap();
        assert!(b.is_invariant(&[1, 1, 0]));
        assert!(!b.is_invariant(&[1, 1, 1]));
    }

    #[test]
    fn rejects_bad_factors() {
        assert!(DiagonalAction::finite(2, vec![FiniteFactor { modulus: 1, weights: vec![1, 1] }]).is_err());
        assert!(DiagonalAction::torus(3, vec![vec![1, 1]]).is_err());
    }
}
