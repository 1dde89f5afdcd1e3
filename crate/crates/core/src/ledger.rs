//! Euler characteristic of a fibration as a sum over strata of the base,
//! `chi = sum chi(base stratum) * chi(fiber)`.
//!
//! A ledger is either a transcription of stated values (`Mode::Paper`) or a
//! recomputation of every row that has a recipe (`Mode::Derived`). The two are
//! compared row by row; nothing is reconciled.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::curves::{
    fibration_euler, pluecker_dual_degree, pluecker_solve_bf, riemann_hurwitz_branch, solve_unknown_count,
    theta_characteristics, Parity,
};
use crate::error::{Error, Result};
use crate::lines27::{dual_stratification_counts, Configuration27};
use crate::surface::ProductCurveChain;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Paper,
    Derived,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Paper => "paper",
            Mode::Derived => "derived",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Paper,
    Derived,
    Trivial,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Paper => "PAPER",
            Provenance::Derived => "DERIVED",
            Provenance::Trivial => "TRIVIAL",
        })
    }
}

/// Which fibration a ledger describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LedgerSurface {
    /// Double cover of a cubic surface, strata `a` to `s`.
    Cubic,
    /// Degree 2 del Pezzo analogue, three point strata `i`, `ii`, `iii`.
    #[serde(rename = "del-pezzo-2")]
    DelPezzo2,
}

const CUBIC_STRATA: [(&str, u8, &str); 19] = [
    ("a", 2, "one tau-invariant node"),
    ("b", 2, "two nodes swapped by tau"),
    ("c", 1, "two tau-invariant nodes"),
    ("d", 1, "one cusp"),
    ("e", 1, "three nodes, one invariant and two swapped"),
    ("f", 1, "tacnode"),
    ("g", 1, "two cusps swapped by tau"),
    ("h", 1, "two components meeting in four points"),
    ("i", 0, "cusp and node"),
    ("j", 0, "tacnode from a quadruple contact"),
    ("k", 0, "three tau-invariant nodes"),
    ("l", 0, "two swapped cusps and an invariant node"),
    ("m", 0, "A5 point"),
    ("n", 0, "line plus tangent conic"),
    ("o", 0, "two invariant and two swapped nodes"),
    ("p", 0, "tacnode and node"),
    ("q", 0, "D4 point"),
    ("r", 0, "two swapped nodes and an invariant cusp"),
    ("s", 0, "three lines"),
];

const DEL_PEZZO_2_STRATA: [(&str, u8, &str); 3] =
    [("i", 0, "first point stratum"), ("ii", 0, "second point stratum"), ("iii", 0, "third point stratum")];

impl LedgerSurface {
    pub fn strata(self) -> &'static [(&'static str, u8, &'static str)] {
        match self {
            LedgerSurface::Cubic => &CUBIC_STRATA,
            LedgerSurface::DelPezzo2 => &DEL_PEZZO_2_STRATA,
        }
    }
}

/// How a row's base Euler characteristic is recomputed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Recipe {
    /// Odd theta characteristics of a curve of this genus.
    OddThetaCharacteristics { genus: u32 },
    /// Branch points of a cover of the line, once per line on the surface.
    BranchPointsPerLine { g_source: i64, degree: i64, lines: i64 },
    /// `b * N - 2 * branch`: bitangents of a projected curve against the
    /// discriminant degree, minus the doubled branch count of the product chain.
    BitangentsAgainstDiscriminant { d: i64, delta: i64, kappa: i64, genus: i64, genus_b: i64, cover_degree: i64 },
    /// Tritangent planes of the cubic surface.
    TritangentPlanes,
    /// Bitangents of a plane curve from its degree, dual degree and genus.
    Bitangents { d: i64, d_star: i64, genus: i64 },
}

impl Recipe {
    /// Value and a description of the operations that produced it.
    pub fn evaluate(&self) -> Result<(i64, String)> {
        match *self {
            Recipe::OddThetaCharacteristics { genus } => {
                let v = theta_characteristics(genus, Parity::Odd)?;
                let v = i64::try_from(v).map_err(|_| Error::Overflow("theta_characteristics"))?;
                Ok((v, format!("theta_characteristics({genus}, odd) = {v}")))
            }
            Recipe::BranchPointsPerLine { g_source, degree, lines } => {
                let r = riemann_hurwitz_branch(g_source, 0, degree)?;
                Ok((r * lines, format!("riemann_hurwitz_branch({g_source}, 0, {degree}) = {r}, times {lines} lines")))
            }
            Recipe::BitangentsAgainstDiscriminant { d, delta, kappa, genus, genus_b, cover_degree } => {
                let d_star = pluecker_dual_degree(d, delta, kappa)?;
                let (b, _) = pluecker_solve_bf(d, d_star, genus)?;
                let n = discriminant_degrees()?.cubic_dual;
                let chain = ProductCurveChain::compute(genus_b, 1, cover_degree)?;
                let v = b * n - 2 * chain.branch_points;
                Ok((
                    v,
                    format!(
                        "pluecker_solve_bf({d}, {d_star}, {genus}) gives b = {b}; {b} * {n} - 2 * {} = {v}",
                        chain.branch_points
                    ),
                ))
            }
            Recipe::TritangentPlanes => {
                let c = dual_stratification_counts(&Configuration27::build())?;
                Ok((c.triple_points as i64, format!("tritangent_triples count = {}", c.triple_points)))
            }
            Recipe::Bitangents { d, d_star, genus } => {
                let (b, f) = pluecker_solve_bf(d, d_star, genus)?;
                Ok((b, format!("pluecker_solve_bf({d}, {d_star}, {genus}) = ({b}, {f})")))
            }
        }
    }
}

/// One row `chi(base) * chi(fiber)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StratumEntry {
    pub label: String,
    pub dimension: u8,
    /// `None` when the base Euler characteristic is not computed; allowed only with zero fiber contribution.
    #[serde(default)]
    pub chi_base: Option<i64>,
    pub chi_fiber: i64,
    pub provenance: Provenance,
    #[serde(default)]
    pub recipe: Option<Recipe>,
    #[serde(default)]
    pub note: Option<String>,
}

impl StratumEntry {
    pub fn contribution(&self) -> Result<i64> {
        match self.chi_base {
            Some(b) => b.checked_mul(self.chi_fiber).ok_or(Error::Overflow("ledger contribution")),
            None if self.chi_fiber == 0 => Ok(0),
            None => Err(Error::IncompleteLedger(format!("row {} has a fiber contribution but no base value", self.label))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Ledger {
    pub surface: LedgerSurface,
    pub mode: Mode,
    pub entries: Vec<StratumEntry>,
}

fn row(label: &str, dimension: u8, base: Option<i64>, fiber: i64, provenance: Provenance) -> StratumEntry {
    StratumEntry { label: label.into(), dimension, chi_base: base, chi_fiber: fiber, provenance, recipe: None, note: None }
}

/// Fiber Euler characteristics of the contributing point strata of the cubic case.
const CUBIC_FIBERS: [(&str, i64); 4] = [("k", 2), ("n", 3), ("o", 1), ("s", 1)];

fn cubic_recipe(label: &str) -> Option<Recipe> {
    match label {
        "k" => Some(Recipe::OddThetaCharacteristics { genus: 4 }),
        "n" => Some(Recipe::BranchPointsPerLine { g_source: 4, degree: 4, lines: 27 }),
        "o" => Some(Recipe::BitangentsAgainstDiscriminant { d: 6, delta: 6, kappa: 0, genus: 4, genus_b: 4, cover_degree: 4 }),
        "s" => Some(Recipe::TritangentPlanes),
        _ => None,
    }
}

fn del_pezzo_2_recipe(label: &str) -> Option<Recipe> {
    match label {
        "i" => Some(Recipe::OddThetaCharacteristics { genus: 3 }),
        "iii" => Some(Recipe::Bitangents { d: 4, d_star: 12, genus: 3 }),
        _ => None,
    }
}

impl Ledger {
    pub fn new(surface: LedgerSurface, mode: Mode, entries: Vec<StratumEntry>) -> Result<Self> {
        let out = Self { surface, mode, entries };
        out.validate()?;
        Ok(out)
    }

    /// Every label of the surface appears exactly once, with its dimension, and nothing else.
    pub fn validate(&self) -> Result<()> {
        let expected = self.surface.strata();
        let mut seen = BTreeSet::new();
        for e in &self.entries {
            let Some(&(_, dim, _)) = expected.iter().find(|(l, _, _)| *l == e.label) else {
                return Err(Error::IncompleteLedger(format!("unknown stratum label {}", e.label)));
            };
            if !seen.insert(e.label.as_str()) {
                return Err(Error::IncompleteLedger(format!("stratum {} appears twice", e.label)));
            }
            if e.dimension != dim {
                return Err(Error::IncompleteLedger(format!("stratum {} has dimension {dim}, not {}", e.label, e.dimension)));
            }
            e.contribution()?;
        }
        if let Some((l, _, _)) = expected.iter().find(|(l, _, _)| !seen.contains(l)) {
            return Err(Error::IncompleteLedger(format!("stratum {l} is missing")));
        }
        Ok(())
    }

    pub fn entry(&self, label: &str) -> Option<&StratumEntry> {
        self.entries.iter().find(|e| e.label == label)
    }

    /// Stated values for the cubic case.
    pub fn stated_cubic() -> Self {
        let entries = CUBIC_STRATA
            .iter()
            .map(|&(l, dim, _)| {
                let stated = match l {
                    "k" => Some(120),
                    "n" => Some(378),
                    "o" => Some(864),
                    "s" => Some(45),
                    _ => None,
                };
                let fiber = CUBIC_FIBERS.iter().find(|(m, _)| *m == l).map_or(0, |&(_, f)| f);
                let mut e = row(l, dim, stated, fiber, Provenance::Paper);
                e.recipe = cubic_recipe(l);
                if l == "o" {
                    e.note = Some("stated with b = 90 bitangents: 90 * 12 - 2 * 108".into());
                }
                if stated.is_none() {
                    e.note = Some("positive-dimensional fiber strata only; contributes 0".into());
                }
                e
            })
            .collect();
        Self { surface: LedgerSurface::Cubic, mode: Mode::Paper, entries }
    }

    /// Stated values for the degree 2 del Pezzo case.
    pub fn stated_del_pezzo_2() -> Self {
        let stated = [("i", 28, 2), ("ii", 128, 1), ("iii", 28, 1)];
        let entries = stated
            .iter()
            .map(|&(l, b, f)| {
                let mut e = row(l, 0, Some(b), f, Provenance::Paper);
                e.recipe = del_pezzo_2_recipe(l);
                e
            })
            .collect();
        Self { surface: LedgerSurface::DelPezzo2, mode: Mode::Paper, entries }
    }

    /// Recompute every row of `stated` that has a recipe. Rows without one are
    /// copied when `strict` is false and refused otherwise, unless their fiber
    /// contribution is zero.
    pub fn derive_from(stated: &Ledger, strict: bool) -> Result<Self> {
        let mut entries = Vec::with_capacity(stated.entries.len());
        for e in &stated.entries {
            entries.push(match derive_entry(stated.surface, &e.label) {
                Ok(d) => StratumEntry { chi_fiber: e.chi_fiber, dimension: e.dimension, ..d },
                Err(Error::UnderivableLabel(_)) if !strict || e.contribution()? == 0 => e.clone(),
                Err(err) => return Err(err),
            });
        }
        Self::new(stated.surface, Mode::Derived, entries)
    }
}

/// Recompute one row's base value from its recipe. The fiber value is the stated one.
pub fn derive_entry(surface: LedgerSurface, label: &str) -> Result<StratumEntry> {
    let recipe = match surface {
        LedgerSurface::Cubic => cubic_recipe(label),
        LedgerSurface::DelPezzo2 => del_pezzo_2_recipe(label),
    }
    .ok_or_else(|| Error::UnderivableLabel(label.to_string()))?;
    let (value, cause) = recipe.evaluate()?;
    let fiber = match surface {
        LedgerSurface::Cubic => CUBIC_FIBERS.iter().find(|(m, _)| *m == label).map_or(0, |&(_, f)| f),
        LedgerSurface::DelPezzo2 => Ledger::stated_del_pezzo_2().entry(label).map_or(0, |e| e.chi_fiber),
    };
    let dimension = surface.strata().iter().find(|(l, _, _)| *l == label).map_or(0, |&(_, d, _)| d);
    Ok(StratumEntry {
        label: label.into(),
        dimension,
        chi_base: Some(value),
        chi_fiber: fiber,
        provenance: Provenance::Derived,
        recipe: Some(recipe),
        note: Some(cause),
    })
}

/// `sum chi_base * chi_fiber` over a complete ledger.
pub fn total_chi(ledger: &Ledger) -> Result<i64> {
    ledger.validate()?;
    ledger.entries.iter().try_fold(0i64, |acc, e| acc.checked_add(e.contribution()?).ok_or(Error::Overflow("total_chi")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub label: String,
    pub quantity: String,
    pub stated_value: Option<i64>,
    pub derived_value: Option<i64>,
    pub upstream_cause: String,
}

/// Rows whose base or fiber values differ between the two ledgers.
pub fn discrepancy_report(stated: &Ledger, derived: &Ledger) -> Result<Vec<Discrepancy>> {
    stated.validate()?;
    derived.validate()?;
    if stated.surface != derived.surface {
        return Err(Error::InvalidInput("ledgers describe different surfaces".into()));
    }
    let mut out = Vec::new();
    for p in &stated.entries {
        let d = derived.entry(&p.label).expect("validated ledgers share labels");
        let cause = || d.note.clone().unwrap_or_else(|| "no derivation recorded".into());
        if p.chi_base != d.chi_base {
            out.push(Discrepancy {
                label: p.label.clone(),
                quantity: "chi_base".into(),
                stated_value: p.chi_base,
                derived_value: d.chi_base,
                upstream_cause: cause(),
            });
        }
        if p.chi_fiber != d.chi_fiber {
            out.push(Discrepancy {
                label: p.label.clone(),
                quantity: "chi_fiber".into(),
                stated_value: Some(p.chi_fiber),
                derived_value: Some(d.chi_fiber),
                upstream_cause: cause(),
            });
        }
    }
    Ok(out)
}

/// Degrees of the two discriminant components: the dual of the cubic surface
/// and the dual of the branch curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscriminantDegrees {
    pub cubic_dual: i64,
    pub branch_dual: i64,
    pub total: i64,
}

/// The cubic's dual degree counts nodal members of a pencil of plane cubics
/// through the blowup of `P^2` in nine points (`chi = 3 + 9`); the branch
/// curve's dual degree is the branch count of a degree 6 map of a genus 4
/// curve to the line.
pub fn discriminant_degrees() -> Result<DiscriminantDegrees> {
    let cubic_dual = solve_unknown_count(3 + 9, &[], 1, 0, 2)?;
    let branch_dual = riemann_hurwitz_branch(4, 0, 6)?;
    Ok(DiscriminantDegrees { cubic_dual, branch_dual, total: cubic_dual + branch_dual })
}

/// Brute-force checks of the finite arithmetic behind the fiber counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberPointChecks {
    /// `(q, #{p in (Z/4)^2 : 2p = q})` for each 2-torsion `q`, written in `Z/4` coordinates.
    pub halving_counts: Vec<([u8; 2], usize)>,
    /// Classes of `{-2, ..., 2}` under `d ~ -d`.
    pub s_equivalence_classes: usize,
}

pub fn fiber_point_checks() -> FiberPointChecks {
    let two_torsion = [[0u8, 0], [2, 0], [0, 2], [2, 2]];
    let halving_counts = two_torsion
        .iter()
        .map(|&q| {
            let n = (0..4u8)
                .flat_map(|x| (0..4u8).map(move |y| [x, y]))
                .filter(|p| p.iter().zip(&q).all(|(a, b)| (2 * a) % 4 == *b))
                .count();
            (q, n)
        })
        .collect();
    let classes: BTreeSet<i64> = (-2..=2i64).map(i64::abs).collect();
    FiberPointChecks { halving_counts, s_equivalence_classes: classes.len() }
}

/// Euler characteristic of an elliptic fibration over `P^1` from its singular fiber counts.
pub fn elliptic_total(strata: &[(i64, i64)]) -> Result<i64> {
    fibration_euler(strata, 0, 2)
}
