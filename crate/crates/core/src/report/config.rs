//! TOML configuration. Every numeric field is an integer.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::catalog::LabelScheme;
use crate::invariants::{CoordinateInvolution, DiagonalAction, FiniteFactor};
use crate::curves::Parity;
use crate::ledger::{Ledger, LedgerSurface, Mode, Provenance, StratumEntry};
use crate::singularity::{CyclicDiagonalElement, QuotientClass, ResolutionVerdict};

/// The configuration `verify-all` uses when none is given.
pub const BUILTIN_SUITE: &str = include_str!("builtin_suite.toml");

fn derived() -> Provenance {
    Provenance::Derived
}

fn two() -> i64 {
    2
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Settings {
    #[serde(default)]
    pub mode: Option<Mode>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiniteFactorSpec {
    pub modulus: u32,
    pub weights: Vec<i64>,
}

/// Which displayed relation families to regenerate for an action or fixed locus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilySet {
    SegreMinors,
    Veronese,
    Triple,
    TripleFixed,
    Z2z2,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionSpec {
    pub name: String,
    pub ambient_dim: usize,
    #[serde(default)]
    pub variables: Vec<String>,
    #[serde(default)]
    pub torus_weights: Vec<Vec<i64>>,
    #[serde(default)]
    pub finite: Vec<FiniteFactorSpec>,
    pub degree_bound: u32,
    #[serde(default = "generic_labels")]
    pub labels: LabelScheme,
    #[serde(default)]
    pub families: Option<FamilySet>,
    #[serde(default)]
    pub expected_generators: Option<usize>,
    /// `[[degree, count], ...]`.
    #[serde(default)]
    pub expected_generator_degrees: Option<Vec<[u32; 2]>>,
    #[serde(default = "derived")]
    pub provenance: Provenance,
}

fn generic_labels() -> LabelScheme {
    LabelScheme::Generic
}

impl ActionSpec {
    pub fn action(&self) -> Result<DiagonalAction> {
        DiagonalAction::new(
            self.ambient_dim,
            self.torus_weights.clone(),
            self.finite.iter().map(|f| FiniteFactor { modulus: f.modulus, weights: f.weights.clone() }).collect(),
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InvolutionSpec {
    pub name: String,
    pub action: String,
    pub image: Vec<usize>,
    #[serde(default)]
    pub signs: Option<Vec<i8>>,
    #[serde(default)]
    pub families: Option<FamilySet>,
    #[serde(default)]
    pub expected_generators: Option<usize>,
    #[serde(default)]
    pub expected_generator_degrees: Option<Vec<[u32; 2]>>,
    #[serde(default = "derived")]
    pub provenance: Provenance,
}

impl InvolutionSpec {
    pub fn involution(&self) -> Result<CoordinateInvolution> {
        CoordinateInvolution::new(self.image.clone(), self.signs.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IsomorphismSpec {
    pub name: String,
    /// An action or involution name.
    pub source: String,
    pub target: String,
    /// Target variable for each source variable, `-1` for unmapped.
    #[serde(default)]
    pub variable_map: Option<Vec<i64>>,
    #[serde(default)]
    pub generator_map: Option<Vec<usize>>,
    pub degree_bound: u32,
    pub expected: bool,
    #[serde(default = "derived")]
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementSpec {
    pub order: u32,
    pub exponents: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SingularitySpec {
    pub name: String,
    pub generators: Vec<ElementSpec>,
    #[serde(default)]
    pub expected_class: Option<QuotientClass>,
    #[serde(default)]
    pub expected_verdict: Option<ResolutionVerdict>,
    /// `[numerator, denominator]` of the smallest age.
    #[serde(default)]
    pub expected_min_age: Option<[u64; 2]>,
    #[serde(default = "derived")]
    pub provenance: Provenance,
}

impl SingularitySpec {
    pub fn elements(&self) -> Result<Vec<CyclicDiagonalElement>> {
        self.generators.iter().map(|g| CyclicDiagonalElement::from_weights(g.order, &g.exponents)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlueckerSpec {
    pub name: String,
    pub d: i64,
    pub delta: i64,
    pub kappa: i64,
    #[serde(default)]
    pub g: Option<i64>,
    #[serde(default)]
    pub expected_d_star: Option<i64>,
    /// Oracle values for `(b, f)`.
    #[serde(default)]
    pub expected_bf: Option<[i64; 2]>,
    /// A stated bitangent count kept for comparison only.
    #[serde(default)]
    pub stated_b: Option<i64>,
    #[serde(default = "derived")]
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverSpec {
    pub name: String,
    pub g_source: i64,
    pub g_target: i64,
    pub degree: i64,
    pub expected_branch: Option<i64>,
    #[serde(default = "derived")]
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThetaSpec {
    pub name: String,
    pub genus: u32,
    pub parity: Parity,
    pub expected: Option<u64>,
    #[serde(default = "derived")]
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuliSpec {
    pub name: String,
    pub n: u32,
    pub degrees: Vec<u32>,
    /// Defaults to `dim PGL(n + 1)`.
    #[serde(default)]
    pub group_dim: Option<i64>,
    pub expected: Option<i64>,
    #[serde(default = "derived")]
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolystableConfig {
    pub name: String,
    pub genera: Vec<i64>,
    pub intersections: Vec<Vec<i64>>,
    pub total_chi: i64,
    pub expected_degrees: Option<Vec<i64>>,
    /// `(a, c, e)` in `a d1 + c = e d2`, two components only.
    #[serde(default)]
    pub expected_relation: Option<[i64; 3]>,
    #[serde(default = "derived")]
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FibrationSpec {
    pub name: String,
    /// Known special fibers as `[count, fiber_chi]`.
    #[serde(default)]
    pub strata: Vec<[i64; 2]>,
    #[serde(default)]
    pub smooth_fiber_chi: i64,
    #[serde(default = "two")]
    pub base_chi: i64,
    /// With `unknown_fiber_chi`, solve for the number of such fibers.
    #[serde(default)]
    pub total_chi: Option<i64>,
    #[serde(default)]
    pub unknown_fiber_chi: Option<i64>,
    pub expected: Option<i64>,
    #[serde(default = "derived")]
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductChainSpec {
    pub name: String,
    pub genus: i64,
    #[serde(default = "one")]
    pub diag_f: i64,
    /// A stated value of `Delta . f_i`, recomputed for comparison.
    #[serde(default)]
    pub stated_diag_f: Option<i64>,
    pub cover_degree: i64,
    pub expected_delta_squared: Option<i64>,
    pub expected_canonical_degree: Option<i64>,
    pub expected_genus: Option<i64>,
    pub expected_branch: Option<i64>,
    #[serde(default = "derived")]
    pub provenance: Provenance,
}

fn one() -> i64 {
    1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairingSpec {
    pub name: String,
    pub labels: Vec<String>,
    pub pairing: Vec<Vec<i64>>,
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    pub expected: Option<i64>,
    #[serde(default = "derived")]
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Lines27Spec {
    #[serde(default = "cubic_degree")]
    pub del_pezzo_degree: u32,
    pub expected_lines: Option<usize>,
    pub expected_tritangents: Option<usize>,
    pub expected_per_line: Option<usize>,
    pub expected_per_triple: Option<usize>,
    #[serde(default = "derived")]
    pub provenance: Provenance,
}

fn cubic_degree() -> u32 {
    3
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LedgerSpec {
    pub name: String,
    pub surface: LedgerSurface,
    /// Rows as stated; when absent the built-in transcription is used.
    #[serde(default)]
    pub rows: Option<Vec<StratumEntry>>,
    pub expected_total: Option<i64>,
    #[serde(default = "derived")]
    pub provenance: Provenance,
}

impl LedgerSpec {
    pub fn stated_ledger(&self) -> Result<Ledger> {
        match &self.rows {
            Some(rows) => Ledger::new(self.surface, Mode::Paper, rows.clone()),
            None => Ok(match self.surface {
                LedgerSurface::Cubic => Ledger::stated_cubic(),
                LedgerSurface::DelPezzo2 => Ledger::stated_del_pezzo_2(),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiscriminantSpec {
    pub expected_cubic_dual: Option<i64>,
    pub expected_branch_dual: Option<i64>,
    pub expected_total: Option<i64>,
    #[serde(default = "derived")]
    pub provenance: Provenance,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigDocument {
    #[serde(default)]
    pub settings: Settings,
    #[serde(default)]
    pub actions: Vec<ActionSpec>,
    #[serde(default)]
    pub involutions: Vec<InvolutionSpec>,
    #[serde(default)]
    pub isomorphisms: Vec<IsomorphismSpec>,
    #[serde(default)]
    pub singularities: Vec<SingularitySpec>,
    #[serde(default)]
    pub pluecker: Vec<PlueckerSpec>,
    #[serde(default)]
    pub covers: Vec<CoverSpec>,
    #[serde(default)]
    pub theta: Vec<ThetaSpec>,
    #[serde(default)]
    pub moduli: Vec<ModuliSpec>,
    #[serde(default)]
    pub polystable: Vec<PolystableConfig>,
    #[serde(default)]
    pub fibrations: Vec<FibrationSpec>,
    #[serde(default)]
    pub product_chains: Vec<ProductChainSpec>,
    #[serde(default)]
    pub pairings: Vec<PairingSpec>,
    #[serde(default)]
    pub lines27: Option<Lines27Spec>,
    #[serde(default)]
    pub ledgers: Vec<LedgerSpec>,
    #[serde(default)]
    pub discriminant: Option<DiscriminantSpec>,
}

impl ConfigDocument {
    /// Parse and validate. Every failure is an [`Error::Config`].
    pub fn from_toml(text: &str) -> Result<Self> {
        let doc: Self = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        doc.validate()?;
        Ok(doc)
    }

    pub fn builtin_suite() -> Self {
        Self::from_toml(BUILTIN_SUITE).expect("bundled suite is valid")
    }

    /// Checks that go beyond the schema: dimensions, references, unique names, complete ledgers.
    pub fn validate(&self) -> Result<()> {
        let cfg = |what: &str, name: &str, e: Error| Error::Config(format!("{what} {name}: {e}"));
        let mut names = BTreeSet::new();
        for a in &self.actions {
            if !names.insert(a.name.as_str()) {
                return Err(Error::Config(format!("duplicate name {}", a.name)));
            }
            a.action().map_err(|e| cfg("action", &a.name, e))?;
            if !a.variables.is_empty() && a.variables.len() != a.ambient_dim {
                return Err(Error::Config(format!("action {}: {} variable names for dimension {}", a.name, a.variables.len(), a.ambient_dim)));
            }
            if a.degree_bound == 0 {
                return Err(Error::Config(format!("action {}: degree_bound must be positive", a.name)));
            }
        }
        for i in &self.involutions {
            if !names.insert(i.name.as_str()) {
                return Err(Error::Config(format!("duplicate name {}", i.name)));
            }
            let action = self
                .actions
                .iter()
                .find(|a| a.name == i.action)
                .ok_or_else(|| Error::Config(format!("involution {}: unknown action {}", i.name, i.action)))?;
            let inv = i.involution().map_err(|e| cfg("involution", &i.name, e))?;
            if inv.dim() != action.ambient_dim {
                return Err(Error::Config(format!("involution {}: acts on {} coordinates, action on {}", i.name, inv.dim(), action.ambient_dim)));
            }
        }
        for s in &self.isomorphisms {
            for side in [&s.source, &s.target] {
                if !names.contains(side.as_str()) {
                    return Err(Error::Config(format!("isomorphism {}: unknown presentation {side}", s.name)));
                }
            }
            if s.variable_map.is_some() && s.generator_map.is_some() {
                return Err(Error::Config(format!("isomorphism {}: give variable_map or generator_map, not both", s.name)));
            }
        }
        for s in &self.singularities {
            if s.generators.is_empty() {
                return Err(Error::Config(format!("singularity {}: no generators", s.name)));
            }
            s.elements().map_err(|e| cfg("singularity", &s.name, e))?;
            if let Some([_, 0]) = s.expected_min_age {
                return Err(Error::Config(format!("singularity {}: zero denominator", s.name)));
            }
        }
        for f in &self.fibrations {
            if f.unknown_fiber_chi.is_some() != f.total_chi.is_some() {
                return Err(Error::Config(format!("fibration {}: total_chi and unknown_fiber_chi go together", f.name)));
            }
        }
        for p in &self.pairings {
            let n = p.labels.len();
            if p.a.len() != n || p.b.len() != n {
                return Err(Error::Config(format!("pairing {}: class vectors must have {n} entries", p.name)));
            }
        }
        for l in &self.ledgers {
            l.stated_ledger().map_err(|e| cfg("ledger", &l.name, e))?;
        }
        Ok(())
    }
}
