//! Enumerative arithmetic of plane curves, covers and elliptic fibrations.
//!
//! Everything here is integer-valued. Results that come out negative or
//! non-integral are errors, never rounded.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn ovf(op: &'static str) -> Error {
    Error::Overflow(op)
}

fn non_negative(op: &'static str, value: i64) -> Result<i64> {
    if value < 0 {
        Err(Error::NegativeResult { op, value })
    } else {
        Ok(value)
    }
}

/// `d(d-1) - 2 delta - 3 kappa`.
pub fn pluecker_dual_degree(d: i64, delta: i64, kappa: i64) -> Result<i64> {
    require_non_negative(&[d, delta, kappa])?;
    let v = d
        .checked_mul(d - 1)
        .and_then(|x| x.checked_sub(delta.checked_mul(2)?))
        .and_then(|x| x.checked_sub(kappa.checked_mul(3)?))
        .ok_or(ovf("pluecker_dual_degree"))?;
    non_negative("pluecker_dual_degree", v)
}

/// Bitangents and flexes `(b, f)` from the two relations
/// `b + f = (d*-1)(d*-2)/2 - g` and `2b + 3f = d*(d*-1) - d`.
pub fn pluecker_solve_bf(d: i64, d_star: i64, g: i64) -> Result<(i64, i64)> {
    require_non_negative(&[d, d_star, g])?;
    let arith = || -> Option<(i64, i64)> {
        let sum = (d_star - 1).checked_mul(d_star - 2)? / 2 - g;
        let weighted = d_star.checked_mul(d_star - 1)?.checked_sub(d)?;
        let f = weighted.checked_sub(sum.checked_mul(2)?)?;
        let b = sum.checked_sub(f)?;
        Some((b, f))
    };
    let (b, f) = arith().ok_or(ovf("pluecker_solve_bf"))?;
    if b < 0 || f < 0 {
        return Err(Error::NoIntegerSolution {
            op: "pluecker_solve_bf",
            detail: format!("solution (b, f) = ({b}, {f}) is negative"),
        });
    }
    Ok((b, f))
}

/// `3d(d-2) - 6 delta - 8 kappa`.
pub fn flex_count(d: i64, delta: i64, kappa: i64) -> Result<i64> {
    require_non_negative(&[d, delta, kappa])?;
    let v = d
        .checked_mul(3)
        .and_then(|x| x.checked_mul(d - 2))
        .and_then(|x| x.checked_sub(delta.checked_mul(6)?))
        .and_then(|x| x.checked_sub(kappa.checked_mul(8)?))
        .ok_or(ovf("flex_count"))?;
    non_negative("flex_count", v)
}

/// Arithmetic genus `(d-1)(d-2)/2` of a plane curve of degree `d`.
pub fn plane_arithmetic_genus(d: i64) -> Result<i64> {
    (d - 1).checked_mul(d - 2).map(|x| x / 2).ok_or(ovf("plane_arithmetic_genus"))
}

fn require_non_negative(values: &[i64]) -> Result<()> {
    match values.iter().find(|&&v| v < 0) {
        Some(&v) => Err(Error::InvalidInput(format!("expected a non-negative integer, got {v}"))),
        None => Ok(()),
    }
}

/// Plücker data of a plane curve; `None` means unknown.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlueckerData {
    pub d: Option<i64>,
    pub delta: Option<i64>,
    pub kappa: Option<i64>,
    pub g: Option<i64>,
    pub d_star: Option<i64>,
    pub b: Option<i64>,
    pub f: Option<i64>,
}

impl PlueckerData {
    /// Checks signs and, when `d, delta, kappa, g` are all known, the genus formula.
    pub fn validate(&self) -> Result<()> {
        let fields = [self.d, self.delta, self.kappa, self.g, self.d_star, self.b, self.f];
        require_non_negative(&fields.iter().flatten().copied().collect::<Vec<_>>())?;
        if let (Some(d), Some(delta), Some(kappa), Some(g)) = (self.d, self.delta, self.kappa, self.g) {
            let expected = plane_arithmetic_genus(d)? - delta - kappa;
            if expected != g {
                return Err(Error::InvalidInput(format!("genus {g} does not match (d-1)(d-2)/2 - delta - kappa = {expected}")));
            }
        }
        Ok(())
    }

    /// Fill in `g`, `d_star`, `b`, `f` from `d`, `delta`, `kappa`.
    pub fn complete(d: i64, delta: i64, kappa: i64) -> Result<Self> {
        let g = plane_arithmetic_genus(d)? - delta - kappa;
        non_negative("geometric genus", g)?;
        let d_star = pluecker_dual_degree(d, delta, kappa)?;
        let (b, f) = pluecker_solve_bf(d, d_star, g)?;
        let out = Self {
            d: Some(d),
            delta: Some(delta),
            kappa: Some(kappa),
            g: Some(g),
            d_star: Some(d_star),
            b: Some(b),
            f: Some(f),
        };
        out.validate()?;
        Ok(out)
    }
}

/// `2 g_source - 2 - degree (2 g_target - 2)`.
pub fn riemann_hurwitz_branch(g_source: i64, g_target: i64, degree: i64) -> Result<i64> {
    if degree < 1 {
        return Err(Error::InvalidInput(format!("cover degree must be at least 1, got {degree}")));
    }
    let v = (2 * g_source - 2)
        .checked_sub(degree.checked_mul(2 * g_target - 2).ok_or(ovf("riemann_hurwitz_branch"))?)
        .ok_or(ovf("riemann_hurwitz_branch"))?;
    non_negative("riemann_hurwitz_branch", v)
}

/// A finite cover of curves satisfying Riemann–Hurwitz.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverData {
    degree: i64,
    g_source: i64,
    g_target: i64,
    branch_degree: i64,
}

impl CoverData {
    pub fn new(degree: i64, g_source: i64, g_target: i64) -> Result<Self> {
        let branch_degree = riemann_hurwitz_branch(g_source, g_target, degree)?;
        Ok(Self { degree, g_source, g_target, branch_degree })
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn g_source(&self) -> i64 {
        self.g_source
    }

    pub fn g_target(&self) -> i64 {
        self.g_target
    }

    pub fn branch_degree(&self) -> i64 {
        self.branch_degree
    }

    pub fn satisfies_riemann_hurwitz(&self) -> bool {
        2 * self.g_source - 2 == self.degree * (2 * self.g_target - 2) + self.branch_degree
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

/// `2^(g-1) (2^g -+ 1)` theta characteristics of the given parity.
pub fn theta_characteristics(g: u32, parity: Parity) -> Result<u64> {
    if g == 0 {
        return Err(Error::InvalidInput("genus must be at least 1".into()));
    }
    let half = 1u64.checked_shl(g - 1).filter(|_| g < 64).ok_or(ovf("theta_characteristics"))?;
    let full = half * 2;
    let second = match parity {
        Parity::Odd => full - 1,
        Parity::Even => full.checked_add(1).ok_or(ovf("theta_characteristics"))?,
    };
    half.checked_mul(second).ok_or(ovf("theta_characteristics"))
}

/// `(n+1)^2 - 1`.
pub fn pgl_dim(n: u32) -> i64 {
    let m = i64::from(n) + 1;
    m * m - 1
}

fn binomial(n: u64, k: u64) -> Result<i64> {
    let mut acc: u64 = 1;
    for i in 0..k.min(n - k) {
        acc = acc.checked_mul(n - i).ok_or(ovf("binomial"))? / (i + 1);
    }
    i64::try_from(acc).map_err(|_| ovf("binomial"))
}

/// Dimension of the space of tuples of hypersurfaces of the given degrees in
/// `P^n`, minus the dimension of the acting group.
pub fn moduli_dimension_check(n: u32, degrees: &[u32], group_dim: i64) -> Result<i64> {
    let mut total: i64 = 0;
    for &d in degrees {
        let forms = binomial(u64::from(n) + u64::from(d), u64::from(n))?;
        total = total.checked_add(forms - 1).ok_or(ovf("moduli_dimension_check"))?;
    }
    Ok(total - group_dim)
}

/// Components of a reducible curve with a sheaf of given Euler characteristic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolystableSpec {
    pub genera: Vec<i64>,
    /// Symmetric table of `C_i . C_j`; the diagonal is ignored.
    pub intersections: Vec<Vec<i64>>,
    pub total_chi: i64,
}

impl PolystableSpec {
    /// `C_i . C = 2 g_i - 2 + sum_{j != i} C_i . C_j`, which must all be positive.
    pub fn slope_denominators(&self) -> Result<Vec<i64>> {
        let k = self.genera.len();
        if k == 0 {
            return Err(Error::InvalidInput("no components".into()));
        }
        if self.intersections.len() != k || self.intersections.iter().any(|r| r.len() != k) {
            return Err(Error::DimensionMismatch { expected: k, found: self.intersections.len() });
        }
        for i in 0..k {
            for j in 0..k {
                if i != j && self.intersections[i][j] != self.intersections[j][i] {
                    return Err(Error::InvalidInput(format!("intersection table is not symmetric at ({i}, {j})")));
                }
            }
        }
        (0..k)
            .map(|i| {
                let d = 2 * self.genera[i] - 2 + (0..k).filter(|&j| j != i).map(|j| self.intersections[i][j]).sum::<i64>();
                if d > 0 {
                    Ok(d)
                } else {
                    Err(Error::InvalidInput(format!("component {i} has non-positive degree {d} against the curve")))
                }
            })
            .collect()
    }
}

/// Degrees `d_i` making all slopes `(1 - g_i + d_i) / (C_i . C)` equal with
/// `sum (1 - g_i + d_i) = total_chi`.
pub fn solve_polystable_degrees(spec: &PolystableSpec) -> Result<Vec<i64>> {
    let denominators = spec.slope_denominators()?;
    let total: i64 = denominators.iter().sum();
    denominators
        .iter()
        .zip(&spec.genera)
        .map(|(&d, &g)| {
            let num = d.checked_mul(spec.total_chi).ok_or(ovf("solve_polystable_degrees"))?;
            let (chi, rem) = num.div_rem(&total);
            if rem != 0 {
                return Err(Error::NoIntegerSolution {
                    op: "solve_polystable_degrees",
                    detail: format!("component Euler characteristic {num}/{total} is not an integer"),
                });
            }
            Ok(chi - 1 + g)
        })
        .collect()
}

/// For two components, slope equality as `a d_1 + c = e d_2` in lowest terms, returned as `(a, c, e)`.
pub fn two_component_slope_relation(spec: &PolystableSpec) -> Result<(i64, i64, i64)> {
    if spec.genera.len() != 2 {
        return Err(Error::InvalidInput("expected exactly two components".into()));
    }
    let dn = spec.slope_denominators()?;
    let (g1, g2) = (spec.genera[0], spec.genera[1]);
    // D2 (1 - g1 + d1) = D1 (1 - g2 + d2)
    let (a, c, e) = (dn[1], dn[1] * (1 - g1) - dn[0] * (1 - g2), dn[0]);
    let h = a.gcd(&c).gcd(&e).max(1);
    Ok((a / h, c / h, e / h))
}

/// `chi(X) = chi(F) chi(B) + sum count (chi(F_s) - chi(F))` for a fibration with
/// general fiber `F` over a base `B` and special fibers `F_s`.
pub fn fibration_euler(strata: &[(i64, i64)], smooth_fiber_chi: i64, base_chi: i64) -> Result<i64> {
    let start = smooth_fiber_chi.checked_mul(base_chi).ok_or(ovf("fibration_euler"))?;
    strata
        .iter()
        .try_fold(start, |acc, &(count, chi)| acc.checked_add(count.checked_mul(chi - smooth_fiber_chi)?))
        .ok_or(ovf("fibration_euler"))
}

/// The number of special fibers of Euler characteristic `unknown_fiber_chi`
/// needed to reach `total_chi`.
pub fn solve_unknown_count(
    total_chi: i64,
    known: &[(i64, i64)],
    unknown_fiber_chi: i64,
    smooth_fiber_chi: i64,
    base_chi: i64,
) -> Result<i64> {
    let rest = total_chi - fibration_euler(known, smooth_fiber_chi, base_chi)?;
    let step = unknown_fiber_chi - smooth_fiber_chi;
    if step == 0 {
        return Err(Error::NoIntegerSolution {
            op: "solve_unknown_count",
            detail: "unknown fibers have the Euler characteristic of a smooth fiber".into(),
        });
    }
    let (count, rem) = rest.div_rem(&step);
    if rem != 0 || count < 0 {
        return Err(Error::NoIntegerSolution {
            op: "solve_unknown_count",
            detail: format!("{rest}/{step} is not a non-negative integer"),
        });
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dual_degrees() {
        assert_eq!(pluecker_dual_degree(6, 6, 0).unwrap(), 18);
        assert_eq!(pluecker_dual_degree(2, 0, 0).unwrap(), 2);
        assert_eq!(pluecker_dual_degree(3, 0, 0).unwrap(), 6);
        assert!(matches!(pluecker_dual_degree(2, 2, 0), Err(Error::NegativeResult { .. })));
    }

    #[test]
    fn bitangents_and_flexes() {
        assert_eq!(pluecker_solve_bf(3, 6, 1).unwrap(), (0, 9));
        assert_eq!(pluecker_solve_bf(4, 12, 3).unwrap(), (28, 24));
        assert_eq!(pluecker_solve_bf(6, 18, 4).unwrap(), (96, 36));
        assert!(pluecker_solve_bf(6, 2, 4).is_err());
    }

    #[test]
    fn flexes() {
        assert_eq!(flex_count(3, 0, 0).unwrap(), 9);
        assert_eq!(flex_count(6, 6, 0).unwrap(), 36);
        assert_eq!(flex_count(2, 0, 0).unwrap(), 0);
    }

    #[test]
    fn branch_degrees() {
        assert_eq!(riemann_hurwitz_branch(4, 0, 6).unwrap(), 18);
        assert_eq!(riemann_hurwitz_branch(4, 0, 4).unwrap(), 14);
        assert_eq!(riemann_hurwitz_branch(67, 4, 4).unwrap(), 108);
        assert_eq!(riemann_hurwitz_branch(1, 1, 7).unwrap(), 0);
        assert!(riemann_hurwitz_branch(0, 1, 2).is_err());
        assert!(riemann_hurwitz_branch(1, 1, 0).is_err());
    }

    #[test]
    fn thetas() {
        assert_eq!(theta_characteristics(4, Parity::Odd).unwrap(), 120);
        assert_eq!(theta_characteristics(3, Parity::Odd).unwrap(), 28);
        assert_eq!(theta_characteristics(1, Parity::Odd).unwrap(), 1);
        assert_eq!(theta_characteristics(1, Parity::Even).unwrap(), 3);
        assert!(theta_characteristics(0, Parity::Odd).is_err());
    }

    #[test]
    fn moduli_dimensions() {
        assert_eq!(pgl_dim(3), 15);
        assert_eq!(moduli_dimension_check(3, &[2, 3], pgl_dim(3)).unwrap(), 13);
        assert_eq!(moduli_dimension_check(2, &[3], pgl_dim(2)).unwrap(), 1);
        assert_eq!(moduli_dimension_check(5, &[], 0).unwrap(), 0);
    }

    #[test]
    fn polystable_degrees() {
        let two = PolystableSpec { genera: vec![0, 1], intersections: vec![vec![0, 4], vec![4, 0]], total_chi: -3 };
        assert_eq!(solve_polystable_degrees(&two).unwrap(), vec![-2, -2]);
        assert_eq!(two_component_slope_relation(&two).unwrap(), (2, 2, 1));
        let three = PolystableSpec {
            genera: vec![0, 0, 0],
            intersections: vec![vec![0, 2, 2], vec![2, 0, 2], vec![2, 2, 0]],
            total_chi: -3,
        };
        assert_eq!(solve_polystable_degrees(&three).unwrap(), vec![-2, -2, -2]);
        let one = PolystableSpec { genera: vec![4], intersections: vec![vec![0]], total_chi: -3 };
        assert_eq!(solve_polystable_degrees(&one).unwrap(), vec![0]);
        let odd = PolystableSpec { genera: vec![0, 1], intersections: vec![vec![0, 4], vec![4, 0]], total_chi: -2 };
        assert!(solve_polystable_degrees(&odd).is_err());
    }

    #[test]
    fn elliptic_fibrations() {
        assert_eq!(solve_unknown_count(12, &[], 1, 0, 2).unwrap(), 12);
        assert_eq!(solve_unknown_count(24, &[(5, 2)], 1, 0, 2).unwrap(), 14);
        assert_eq!(fibration_euler(&[(19, 1)], 0, 2).unwrap(), 19);
        assert!(solve_unknown_count(13, &[], 2, 0, 2).is_err());
    }

    #[test]
    fn completed_data_is_consistent() {
        let p = PlueckerData::complete(6, 6, 0).unwrap();
        assert_eq!((p.d_star, p.b, p.f, p.g), (Some(18), Some(96), Some(36), Some(4)));
        let bad = PlueckerData { d: Some(4), delta: Some(0), kappa: Some(0), g: Some(2), ..Default::default() };
        assert!(bad.validate().is_err());
    }
}
