use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("constant term {0} is not a unit over the integers")]
    NonUnitConstantTerm(BigInt),

    #[error("numerator valuation {numerator:?} is below denominator valuation {denominator}")]
    ValuationMismatch {
        /// `None` means the numerator is zero to its truncation order.
        numerator: Option<usize>,
        denominator: usize,
    },

    #[error("series has nonzero constant term {0}")]
    NonzeroConstantTerm(BigInt),

    #[error("coefficient of x^{k} in {what} is not an integer")]
    NonIntegerCoefficient { what: &'static str, k: usize },

    #[error("slope ({alpha}, {beta}) is invalid: components must be positive and coprime")]
    InvalidSlope { alpha: u32, beta: u32 },

    #[error("{what} is only defined for beta = 1 (got slope ({alpha}, {beta}))")]
    BetaNotOne {
        what: &'static str,
        alpha: u32,
        beta: u32,
    },

    #[error("{what} is not defined for slope ({alpha}, {beta})")]
    UnsupportedSlope {
        what: &'static str,
        alpha: u32,
        beta: u32,
    },

    #[error("unknown series name '{0}'")]
    UnknownSeries(String),

    #[error("{what} does not support restriction {restriction}")]
    UnsupportedRestriction {
        what: &'static str,
        restriction: &'static str,
    },

    #[error("invalid two-row shape: {0}")]
    InvalidShape(String),

    #[error("malformed path: {0}")]
    MalformedPath(String),

    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("{what} disagrees at x^{k}: {left} vs {right}")]
    IdentityMismatch {
        what: &'static str,
        k: usize,
        left: BigInt,
        right: BigInt,
    },
}
