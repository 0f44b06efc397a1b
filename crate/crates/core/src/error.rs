use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cover relation contains a cycle; input is not a partial order")]
    CycleDetected,
    #[error("element index {index} out of range for {n} elements")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("poset has no elements")]
    EmptyPoset,
    #[error("{what}: {n} elements exceeds the limit of {limit}")]
    SizeLimitExceeded {
        what: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("search exceeded its time budget of {seconds} s")]
    BudgetExceeded { seconds: u64 },
    #[error("poset is not ranked")]
    NotRanked,
    #[error("chain partition does not match the poset: {0}")]
    PartitionMismatch(String),
    #[error("k = {k} is outside 1..={max}")]
    BadK { k: usize, max: usize },
    #[error("invalid difference sequence: {0}")]
    InvalidDelta(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("no sequence exists for n = {n}, c = {c}, a = {a}")]
    Infeasible { n: usize, c: usize, a: usize },
    #[error("invalid realizer: {0}")]
    InvalidRealizer(String),
    #[error("names: expected {expected}, got {got}")]
    NameCount { expected: usize, got: usize },
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
