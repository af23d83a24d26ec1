use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// Each variant has a stable name (see [`Error::code`]) used by the CLI's
/// JSON output.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generator list")]
    EmptyGenerators,
    #[error("generators must be positive, got {0}")]
    NonPositiveGenerator(i64),
    #[error("the generators {0:?} have gcd {1}, so they do not generate a numerical semigroup")]
    GcdNotOne(Vec<u32>, u32),
    #[error("semigroup is too large: conductor would exceed {0}")]
    TooLarge(u32),
    #[error("{0} is not a positive member of the semigroup")]
    NotAMember(i64),
    #[error("{0} is not a minimal generator of the semigroup")]
    NotMinimalGenerator(u32),
    #[error("the semigroup is already N, it has no Frobenius number to adjoin")]
    AlreadyFull,

    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("coefficient of x{0} is zero")]
    ZeroCoefficient(usize),
    #[error("variable x{0} is missing (indices must be 1..n without gaps)")]
    MissingVariable(usize),
    #[error("variable x{0} appears more than once")]
    DuplicateVariable(usize),
    #[error("tuple is not non-increasing")]
    NotSorted,
    #[error("tuple has length {got}, pattern has length {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("the zero pattern has no derived pattern")]
    EmptyPattern,
    #[error("index {index} is out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("pattern is not boolean (coefficients must all be +1 or -1)")]
    NotBoolean,
    #[error("pattern has admissibility degree 0")]
    DegreeZero,
    #[error("pattern has infinite admissibility degree")]
    DegreeInfinite,
    #[error("pattern is not premonic (no prefix sum equals 1)")]
    NotPremonic,
    #[error("pattern is not strongly admissible")]
    NotStronglyAdmissible,
    #[error("the semigroup does not admit the pattern")]
    DoesNotAdmit,
    #[error("internal consistency check failed: {0}")]
    VerificationFailed(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("construction is not a numerical semigroup: {0}")]
    NotASemigroup(String),
}

impl Error {
    /// Stable machine-readable name of the error.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyGenerators => "EmptyGenerators",
            Error::NonPositiveGenerator(_) => "NonPositiveGenerator",
            Error::GcdNotOne(..) => "GcdNotOne",
            Error::TooLarge(_) => "TooLarge",
            Error::NotAMember(_) => "NotAMember",
            Error::NotMinimalGenerator(_) => "NotMinimalGenerator",
            Error::AlreadyFull => "AlreadyFull",
            Error::Syntax { .. } => "SyntaxError",
            Error::ZeroCoefficient(_) => "ZeroCoefficient",
            Error::MissingVariable(_) => "MissingVariable",
            Error::DuplicateVariable(_) => "DuplicateVariable",
            Error::NotSorted => "NotSorted",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::EmptyPattern => "EmptyPattern",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::NotBoolean => "NotBoolean",
            Error::DegreeZero => "DegreeZero",
            Error::DegreeInfinite => "DegreeInfinite",
            Error::NotPremonic => "NotPremonic",
            Error::NotStronglyAdmissible => "NotStronglyAdmissible",
            Error::DoesNotAdmit => "DoesNotAdmit",
            Error::VerificationFailed(_) => "VerificationFailed",
            Error::InvalidParameters(_) => "InvalidParameters",
            Error::NotASemigroup(_) => "NotASemigroup",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
