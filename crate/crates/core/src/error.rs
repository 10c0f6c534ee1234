use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),

    #[error("resource cap exceeded: {what} ({value} > {cap})")]
    CapExceeded {
        what: &'static str,
        value: u64,
        cap: u64,
    },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("subgroup is not normal: {0}")]
    NotNormal(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("singular: {0}")]
    Singular(String),

    #[error("meataxe retry budget exhausted after {0} attempts")]
    RetryBudget(usize),

    #[error("no suitable prime below {0} for the character table")]
    NoSuitablePrime(u64),

    #[error("eigenspace refinement did not terminate: {0}")]
    Refinement(String),

    #[error("not a cocycle: {0}")]
    NotCocycle(String),

    #[error("not a projective representation: {0}")]
    NotProjective(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),

    #[error("no solution: {0}")]
    NoSolution(String),

    #[error("input format: {0}")]
    Format(String),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
