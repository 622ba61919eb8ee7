use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("enumeration budget exceeded: {generators} generators (limit {limit})")]
    BudgetExceeded { generators: usize, limit: usize },

    #[error("code has no nonzero codeword")]
    ZeroCode,

    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("invalid code: {0}")]
    InvalidCode(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("empty block set")]
    EmptyBlockSet,

    #[error("words of mixed weight")]
    MixedWeights,

    #[error("non-integral parameter: {0}")]
    NonIntegral(String),

    #[error("unsupported length n = {0}")]
    UnsupportedLength(usize),

    #[error("strength t = {t} not allowed (minimum distance {d})")]
    StrengthOutOfRange { t: usize, d: usize },

    #[error("secret {0} is not reachable from column g0")]
    UnreachableSecret(char),

    #[error("missing share of participant P{0}")]
    MissingShare(usize),

    #[error("recovery vectors belong to the same class H{0}")]
    SameClass(u8),

    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),

    #[error("weight class {0} does not hold a 1-design")]
    NotOneDesign(usize),

    #[error("unknown catalog entry {0:?}")]
    UnknownName(String),

    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors caused by the enumeration budget rather than the input domain.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}
