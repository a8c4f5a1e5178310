//! Exact arithmetic for dual graph polynomials and their point-counting
//! invariants.
//!
//! The crate is organized around a small set of value types:
//!
//! * [`graph::MultiGraph`] — oriented multigraphs with stable edge ids and
//!   deletion/contraction minors,
//! * [`cycles::CycleMatrix`] / [`cycles::BlockMatrix`] — a basis of small
//!   cycles and the block matrix whose minors are the dual Dodgson
//!   polynomials,
//! * [`poly::SparsePoly`] — exact sparse multivariate polynomials, generic
//!   over the integer scalar type,
//! * [`fq::FieldSpec`] — GF(p^k) arithmetic backed by exp/log tables,
//! * verification records ([`reports`], [`admissible`]) that machine-check
//!   the polynomial identities and point-count congruences.
//!
//! All values are immutable after construction and safe to share across
//! threads.

pub mod admissible;
pub mod c2;
pub mod count;
pub mod cycles;
pub mod dodgson;
pub mod enumerate;
pub mod faces;
pub mod fq;
pub mod graph;
pub mod identities;
pub mod matrix;
pub mod poly;
pub mod reports;
pub mod robertson;
pub mod scalar;
pub mod search;

pub use graph::{EdgeId, EdgeSet, MultiGraph};
pub use poly::SparsePoly;
pub use scalar::Scalar;

/// Arbitrary-precision integer used as the default polynomial coefficient.
///
/// Iterated resultants can exceed machine words, so the public entry points
/// default to big integers; the generic layers underneath also run on `i64`
/// or `i128` where a caller knows the bounds.
pub type Int = num_bigint::BigInt;

/// The default exact polynomial type: big-integer coefficients.
pub type IntPoly = poly::SparsePoly<Int>;

/// Machine-word polynomial, for small fixed-size computations.
pub type MachinePoly = poly::SparsePoly<i64>;

/// Errors surfaced by graph, polynomial and counting operations.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("unknown edge id {0}")]
    UnknownEdge(EdgeId),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is degenerate (a self-loop was contracted)")]
    Degenerate,
    #[error("edge sets must have equal cardinality: |I|={0}, |J|={1}")]
    CardinalityMismatch(usize, usize),
    #[error("edge sets must be disjoint")]
    Overlap,
    #[error("expected {expected} edges, got {got}")]
    WrongEdgeCount { expected: usize, got: usize },
    #[error("polynomial is not linear in variable a{0}")]
    NonLinear(usize),
    #[error("polynomial is not multilinear")]
    NotMultilinear,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("edges do not form a {0}")]
    NotAFace(&'static str),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field order {0} exceeds the 2^16 limit")]
    FieldTooLarge(u64),
    #[error("evaluation budget of {budget} exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("matrix dimension mismatch: {0}")]
    Dimension(String),
    #[error("count {count} is not divisible by q^2 = {q_squared}")]
    DivisibilityFailure { count: u64, q_squared: u64 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("matrix entry outside the 0/±1/variable alphabet")]
    BadEntry,
}

pub type Result<T> = std::result::Result<T, Error>;
