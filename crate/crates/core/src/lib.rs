//! Exact-arithmetic checks for a six-dimensional singular symplectic variety
//! fibred over the anticanonical system of a cubic surface.
//!
//! Covered: invariant rings of the diagonal actions that model the
//! singularities, the Reid–Tai classification of those singularities, the
//! enumerative arithmetic of plane curves and covers, the 27 lines, and the
//! Euler characteristic ledger. Stated values sit next to derived ones and
//! disagreements are reported, not reconciled.
//!
//! No floating point is used anywhere. Lattice computations run on
//! arbitrary-precision integers; the enumerative formulas use checked
//! machine integers and fail loudly on overflow.

pub mod curves;
pub mod error;
pub mod invariants;
pub mod lattice;
pub mod ledger;
pub mod lines27;
pub mod report;
pub mod singularity;
pub mod surface;






pub use error::{Error, Result};
pub use lattice::{IntegerMatrix, Monomial};

/// Version string stamped into every verification report.
pub const TOOLKIT_VERSION: &str = env!("CARGO_PKG_VERSION");
