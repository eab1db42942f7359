use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative power of a polynomial that is not a single term")]
    NegativePowerOfNonmonomial,
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("variable `{0}` is zero but occurs with a negative exponent")]
    ZeroAtNegativePower(String),
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("duplicate rule head `{0}`")]
    DuplicateRuleHead(String),
    #[error("unknown grammar `{0}`")]
    UnknownName(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("{0} is not a PRW permutation")]
    NotPrw(String),
    #[error("value {value} is out of range 1..={n}")]
    ValueOutOfRange { value: usize, n: usize },
    #[error("size {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("polynomial is not homogeneous in {0}")]
    NotHomogeneous(String),
    #[error("polynomial is not symmetric in {0} and {1}")]
    NotSymmetric(String, String),
    #[error("gamma peeling left a nonzero residual: {0}")]
    NonzeroResidual(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
