use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("non-coprime entries (gcd = {0})")]
    NonCoprime(String),
    #[error("entry {index} is not positive")]
    NonPositive { index: usize },
    #[error("matrix is not simplicial: {0}")]
    NotSimplicial(String),
    #[error("matrix is not unimodular")]
    NotUnimodular,
    #[error("starting point violates the bound of row {row}")]
    Infeasible { row: usize },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("enumeration budget of {budget} exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("search box of {cells} points exceeds the budget of {budget}")]
    BoxTooLarge { cells: String, budget: u64 },
    #[error("polyhedron is unbounded in coordinate {0}")]
    Unbounded(usize),
    #[error("body is not lattice free")]
    NotLatticeFree,
    #[error("three-variable reduction ended outside the target sign pattern")]
    ReductionStuck,
    #[error("cross-check failed: {0}")]
    CrossCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for errors caused by running out of enumeration budget.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. } | Error::BoxTooLarge { .. })
    }
}
