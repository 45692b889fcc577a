use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A complex-arithmetic path failed to land on an integer, or a rational
    /// path failed to reduce to one. Always an implementation bug.
    #[error("internal consistency error in {context}: residual {residual:e}")]
    InternalConsistency { context: String, residual: f64 },

    #[error("oracle budget exceeded: {needed} states needed, limit {limit}")]
    BudgetExceeded { needed: String, limit: u64 },

    /// The subset-gcd hypothesis of the distinct-solution formula fails.
    #[error("hypothesis violated: gcd of coefficient sum over subset {subset:?} with n={n} is {gcd}")]
    Hypothesis { subset: Vec<usize>, n: u64, gcd: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
