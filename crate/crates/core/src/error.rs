//! Error type shared by every module of the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("lattice is not a sublattice of the given ambient lattice")]
    NotASublattice,

    #[error("integer value does not fit in 64 bits")]
    Overflow,

    #[error("empty generator list")]
    EmptyGenerators,

    #[error("membership search exceeded its budget of {0} nodes")]
    BudgetExceeded(usize),

    #[error("fiber enumeration exceeded its budget of {0} classes")]
    FiberBudgetExceeded(usize),

    #[error("Gröbner basis computation exceeded its budget ({0})")]
    DegreeBudgetExceeded(String),

    #[error("vector {0:?} is not an element of the monoid")]
    NotInMonoid(Vec<i64>),

    #[error("image {0:?} of a source generator is not in the target monoid")]
    ImageNotInTarget(Vec<i64>),

    #[error("relation {0:?} of the source monoid is not respected")]
    RelationsNotRespected(Vec<i64>),

    #[error("index {index} out of range for a tensor power of length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("operation requires a pointed monoid")]
    NonPointedUnsupported,

    #[error("coefficient {0} is not defined in the coefficient field")]
    InvalidCoefficient(String),

    #[error("polynomials live in different rings")]
    InvalidAmbient,

    #[error("ideal is not torus invariant: homogeneous component {component} of generator {generator} escapes the ideal")]
    NotToric { generator: usize, component: String },

    #[error("colon ideal is not binomial")]
    BinomialityViolated,

    #[error("ideal is not generated by differences of characters")]
    NotDifferenceGenerated,

    #[error("input is not an equivalence relation: {0}")]
    NotAnEquivalenceRelation(String),

    #[error("internal invariant violated: {0}")]
    InternalInvariantViolated(String),

    #[error("element is not a cocycle")]
    NotACocycle,

    #[error("element is not in the ideal")]
    GNotInI,

    #[error("{0} is not a submonoid of the ambient monoid")]
    NotASubmonoid(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for the errors that report an exhausted resource budget.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::BudgetExceeded(_) | Error::FiberBudgetExceeded(_) | Error::DegreeBudgetExceeded(_)
        )
    }

    /// The variant name, for machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::NotASublattice => "NotASublattice",
            Error::Overflow => "Overflow",
            Error::EmptyGenerators => "EmptyGenerators",
            Error::BudgetExceeded(_) => "BudgetExceeded",
            Error::FiberBudgetExceeded(_) => "FiberBudgetExceeded",
            Error::DegreeBudgetExceeded(_) => "DegreeBudgetExceeded",
            Error::NotInMonoid(_) => "NotInMonoid",
            Error::ImageNotInTarget(_) => "ImageNotInTarget",
            Error::RelationsNotRespected(_) => "RelationsNotRespected",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::NonPointedUnsupported => "NonPointedUnsupported",
            Error::InvalidCoefficient(_) => "InvalidCoefficient",
            Error::InvalidAmbient => "InvalidAmbient",
            Error::NotToric { .. } => "NotToric",
            Error::BinomialityViolated => "BinomialityViolated",
            Error::NotDifferenceGenerated => "NotDifferenceGenerated",
            Error::NotAnEquivalenceRelation(_) => "NotAnEquivalenceRelation",
            Error::InternalInvariantViolated(_) => "InternalInvariantViolated",
            Error::NotACocycle => "NotACocycle",
            Error::GNotInI => "GNotInI",
            Error::NotASubmonoid(_) => "NotASubmonoid",
            Error::InvalidInput(_) => "InvalidInput",
        }
    }
}
