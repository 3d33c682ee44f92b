use thiserror::Error;

/// Everything that can go wrong inside the library.
///
/// The CLI maps [`Error::is_mathematical`] failures to exit code 3 and the
/// rest to exit code 2.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("NotAPower: polynomial is not an exact {0}-th power over the rationals")]
    NotAPower(usize),
    #[error("DependentBasis: the Wronskian of the given polynomials vanishes")]
    DependentBasis,
    #[error("OutOfRange: {0}")]
    OutOfRange(String),
    #[error("RankMismatch: {0}")]
    RankMismatch(String),
    #[error("BudgetExceeded: N(d-N) = {size} exceeds the enumeration budget {budget}")]
    BudgetExceeded { size: usize, budget: usize },
    #[error("OddN: no closed degree formula for odd N = {0}")]
    OddN(usize),
    #[error("NotDivisible: {0}")]
    NotDivisible(String),
    #[error("MembershipFailed: {0}")]
    MembershipFailed(String),
    #[error("UnresolvedSingularity: Wronskian factor {0} has no rational root; supply stratum data explicitly")]
    UnresolvedSingularity(String),
    #[error("InvalidArgument: {0}")]
    InvalidArgument(String),
    #[error("Parse: {0}")]
    Parse(String),
}

impl Error {
    /// Failures that signal a mathematical obstruction rather than bad input.
    pub fn is_mathematical(&self) -> bool {
        matches!(
            self,
            Error::NotAPower(_)
                | Error::DependentBasis
                | Error::NotDivisible(_)
                | Error::MembershipFailed(_)
                | Error::UnresolvedSingularity(_)
        )
    }

    /// The bare failure name, e.g. `NotDivisible`.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotAPower(_) => "NotAPower",
            Error::DependentBasis => "DependentBasis",
            Error::OutOfRange(_) => "OutOfRange",
            Error::RankMismatch(_) => "RankMismatch",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::OddN(_) => "OddN",
            Error::NotDivisible(_) => "NotDivisible",
            Error::MembershipFailed(_) => "MembershipFailed",
            Error::UnresolvedSingularity(_) => "UnresolvedSingularity",
            Error::InvalidArgument(_) => "InvalidArgument",
            Error::Parse(_) => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
