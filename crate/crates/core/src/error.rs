use thiserror::Error;

/// Errors raised across the crate.
///
/// Variants group by outcome class; [`Error::exit_code`] maps each class to the
/// command-line exit status.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("incompatible fields: {left} and {right}")]
    IncompatibleFields { left: String, right: String },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("minimal polynomial {0} is reducible over its base")]
    ReducibleMinPoly(String),
    #[error("unsupported extension: {0}")]
    UnsupportedExtension(String),
    #[error("extension degree over the prime field would exceed {0}")]
    ExtensionTooLarge(usize),
    #[error("integer {0} is too large to enumerate divisors")]
    CoefficientTooLarge(String),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("coordinates are not suitable: lowest form vanishes at (0,1)")]
    NotSuitable,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("variable sets do not match: {0}")]
    VariableMismatch(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("non-rational point: {0}; retry over a finite field such as --field p:101")]
    NonRationalPoint(String),
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("curves share a common component")]
    CommonComponent,
    #[error("depth cap {0} reached before the transforms were resolved")]
    DepthCapExceeded(usize),
    #[error("tree is not resolved")]
    UnresolvedTree,
    #[error("curve is reducible: {0}")]
    Reducible(String),
    #[error("could not certify irreducibility; pass --assume-irreducible to proceed")]
    IrreducibilityUnverified,
    #[error("genus formula gave {0}; the singular point list is incomplete or the curve is reducible")]
    NegativeGenus(i64),
    #[error("no shear isolates the origin in its fiber")]
    FiberNotIsolated,
    #[error("usage: {0}")]
    Usage(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

impl Error {
    /// Exit status for the command-line front end: 3 for non-rational points,
    /// 4 for depth caps, 1 for malformed input and 5 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NonRationalPoint(_) => 3,
            Error::DepthCapExceeded(_) | Error::UnresolvedTree => 4,
            Error::Parse { .. } | Error::VariableMismatch(_) | Error::NotPrime(_) | Error::Usage(_) => 1,
            _ => 5,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
