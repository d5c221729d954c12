use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a unit of Z[v, v^-1]")]
    NonUnit(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} has odd powers of v and cannot be evaluated at a value of q")]
    OddPower(String),
    #[error("invalid Cartan data: {0}")]
    InvalidCartan(String),
    #[error("incompatible lattice: {0}")]
    IncompatibleLattice(String),
    #[error("no descent found while peeling an element of length {0}")]
    NoDescent(usize),
    #[error("element of length {length} exceeds the length budget {budget}")]
    BudgetExceeded { length: usize, budget: usize },
    #[error("{0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("basis conversion failed: {0}")]
    SolveFailed(String),
    #[error("no separating element found after {0} trials")]
    InconclusiveAfterTrials(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
