//! Exact arithmetic for skew PBW extensions `A = σ(K)⟨x_1, ..., x_n⟩` over a
//! rational-function field `K = Q(params)`, together with Gröbner-style ideal
//! membership, Quillen–Suslin certificates for idempotent matrices over
//! univariate Ore rings, and verification of free resolutions of `K`.

pub mod catalog;
pub mod commands;
pub mod dsl;
pub mod gbasis;
pub mod homology;
pub mod linalg;
pub mod matring;
pub mod orefree;
pub mod polyarith;
pub mod presentation;
pub mod report;
pub mod scalars;

pub use matring::{Complex, Mat, Side};
pub use polyarith::{Mono, Poly, Ring};
pub use presentation::{Commutation, Gld, Presentation};
pub use report::{Check, Report, Status};
pub use scalars::{Scalar, ScalarMap};
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("zero divisor in field")]
    ZeroDivisor,
    #[error("singular substitution")]
    SingularSubstitution,
    #[error("map not invertible")]
    NotInvertible,
    #[error("{line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("relation shape: {0}")]
    Shape(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not idempotent")]
    NotIdempotent,
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("augmentation analysis requires central coefficient field")]
    AugmentationRequiresCentral,
    #[error("bound too small")]
    BoundTooSmall,
    #[error("unknown preset `{name}`; available: {}", available.join(", "))]
    UnknownPreset { name: String, available: Vec<String> },
    #[error("ring must have exactly one variable")]
    NotUnivariate,
    #[error("presentation rejected: {0}")]
    Rejected(String),
    #[error("zero generator")]
    ZeroGenerator,
    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
