use thiserror::Error;

use crate::lattice::Monomial;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An irreducible invariant monomial exists above the requested bound.
    #[error("generators not saturated at degree bound {bound}: irreducible invariant {witness} has degree {}", witness.degree())]
    NonSaturated { bound: u32, witness: Monomial },

    #[error("involution does not normalize the action: image of generator {generator} is not invariant")]
    NotNormalizing { generator: usize },

    #[error("group contains a quasi-reflection: {0}")]
    QuasiReflection(String),

    #[error("{op}: negative result {value} (inconsistent input)")]
    NegativeResult { op: &'static str, value: i64 },

    #[error("{op}: no non-negative integer solution ({detail})")]
    NoIntegerSolution { op: &'static str, detail: String },

    #[error("canonical degree {0} is odd")]
    OddCanonicalDegree(i64),

    #[error("divisor classes live on different bases")]
    BasisMismatch,

    #[error("unsupported configuration: {0}")]
    Unsupported(String),

    #[error("incomplete ledger: {0}")]
    IncompleteLedger(String),

    #[error("no derivation recipe for stratum {0}")]
    UnderivableLabel(String),

    #[error("{0}: integer overflow")]
    Overflow(&'static str),

    #[error("config error: {0}")]
    Config(String),

    #[error("unknown subcommand `{0}`")]
    UnknownSubcommand(String),
}
