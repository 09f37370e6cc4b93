//! Exact arithmetic for universal enveloping algebras of semisimple Lie algebras.
//!
//! The crate constructs Lie algebras from root data or from built-in commutator
//! tables, performs PBW normal-form arithmetic in the enveloping algebra with
//! arbitrary-precision rational coefficients, solves for commutants of nilradical
//! (and general) subalgebras as graded exact linear systems, counts invariants of
//! nilpotent Lie algebras through Maurer-Cartan two-forms, and verifies the
//! decomposition bookkeeping of the enveloping algebra of G2.
//!
//! Everything is exact: no floating point is used anywhere.
//!
//! The rank-two algebras D2, A2 = sl(3,C), B2 = so(5,C) and G2 ship as built-in
//! tables together with fixture files transcribing their known commutant
//! generator sets, commutator ledgers and dependence relations; `verify`
//! re-derives and checks all of them. See the `examples/` directory for a
//! runnable tour of each capability and `README.md` for the CLI.

pub mod cache;
pub mod cli;
pub mod commutant;
pub mod decomp;
pub mod exterior;
pub mod fixtures;
pub mod linalg;
pub mod parse;
pub mod rootsys;
pub mod scalar;
pub mod suites;
pub mod symalg;
pub mod uea;

pub use rootsys::{builtin_algebra, CartanMatrix, RootSystem, SeriesTag, StructureConstants, Weight};
pub use scalar::Rat;
pub use uea::{AlgebraCtx, Element, Monomial, PbwOrder};

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown algebra tag `{0}`")]
    UnknownAlgebra(String),
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("rank {0} exceeds the supported bound {1}")]
    RankBound(usize, usize),
    #[error("algebra mismatch between operands")]
    AlgebraMismatch,
    #[error("basis element {0} is not a simultaneous eigenvector of the Cartan action")]
    NotWeightVector(String),
    #[error("index set is not closed under the bracket: [{0},{1}] leaves the span")]
    NotASubalgebra(String, String),
    #[error("monomial enumeration exceeded the cap of {0} monomials")]
    MonomialCap(usize),
    #[error("work budget exceeded while normal-ordering (limit {0} elementary products)")]
    BudgetExceeded(u64),
    #[error("element is not left-divisible: {0}")]
    NotDivisible(String),
    #[error("parity violation in abelian bound: {0} is odd")]
    ParityViolation(i64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unresolved name `{0}` in relation")]
    UnresolvedName(String),
    #[error("weight mismatch in relation term `{0}`: expected {1:?}, found {2:?}")]
    WeightMismatch(String, Vec<i64>, Vec<i64>),
    #[error("non-dominant weight {0:?}")]
    NonDominant(Vec<i64>),
    #[error("series {0:?} has no entry for rank {1}")]
    SeriesRange(SeriesTag, usize),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
