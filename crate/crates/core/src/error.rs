use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("series is zero on its known window and has no inverse")]
    NotInvertible,
    #[error("coefficient of t^{exponent} is unknown (known below t^{order})")]
    CoefficientUnknown { exponent: i64, order: i64 },
    #[error("series has a nonzero coefficient at t^{exponent}")]
    NotAPowerSeries { exponent: i64 },
    #[error("z-index {index} outside window (zorder {zorder})")]
    IndexOutOfWindow { index: usize, zorder: usize },
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
}
