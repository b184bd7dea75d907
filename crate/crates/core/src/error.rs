use thiserror::Error;

/// Errors raised by the algebra, generators and front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("non-removable pole at {0}")]
    PoleAtPoint(String),
    #[error("element is not invertible: {0}")]
    NotInvertible(String),
    #[error("cannot combine terms carrying different exponential factors")]
    CarrierMismatch,
    #[error("series has a vanishing constant coefficient")]
    ZeroLeadingCoefficient,
    #[error("series coefficient {0} is not rational in z")]
    NonRationalCoefficient(usize),
    #[error("no rational function with the requested degrees: {0}")]
    UnsolvableSystem(String),
    #[error("duplicate interpolation node at E = {0}")]
    DuplicateNode(String),
    #[error("singular parameter: {0}")]
    SingularParameter(String),
    #[error("H has a factor depending on both z and E: {0}")]
    MixedFactor(String),
    #[error("deg_E w = {w} is below deg_E num(M) + deg_E den(M) + 1 = {bound}")]
    DegreeBoundViolated { w: usize, bound: usize },
    #[error("reconstructed potential depends on E: {0}")]
    EDependentPotential(String),
    #[error("second derivative is not proportional to the eigenfunction")]
    InconsistentRatio,
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("nu must be a number here")]
    SymbolicNu,
    #[error("no closed-form eigenfunction at E = {0}")]
    NoSolution(String),
    #[error("eigenfunction degree {needed} exceeds the cap {cap}")]
    DegreeCapExceeded { needed: usize, cap: usize },
    #[error("unbound parameter {0}")]
    UnboundParameter(String),
    #[error("syntax error at byte {offset}: expected {expected}")]
    Syntax { offset: usize, expected: String },
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
