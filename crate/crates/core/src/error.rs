use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime in the supported range 2..=251")]
    NotPrime(u32),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("modulus mismatch: {0} vs {1}")]
    Modulus(u8, u8),
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("matrix is singular")]
    Singular,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("degree mismatch: {0} vs {1}")]
    Degree(usize, usize),
    #[error("invalid permutation: {0}")]
    InvalidPerm(String),
    #[error("element is not a member of the group")]
    NotMember,
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("search bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("point {0} out of range")]
    PointOutOfRange(usize),
    #[error("relator check failed: {0}")]
    Relator(String),
    #[error("representation has no group attached")]
    NoGroup,
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("certification inconclusive: {0}")]
    Inconclusive(String),
    #[error("{file}:{line}: {msg}")]
    Parse {
        file: String,
        line: usize,
        msg: String,
    },
    #[error("{0}: {1}")]
    Io(String, #[source] std::io::Error),
}

impl Error {
    pub(crate) fn dim(msg: impl Into<String>) -> Self {
        Error::Dimension(msg.into())
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub fn is_inconclusive(&self) -> bool {
        matches!(self, Error::Inconclusive(_))
    }
}
