use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("base {0} is outside the supported range 2..=256")]
    BaseOutOfRange(u64),

    #[error("digit {digit} is not valid in base {base}")]
    DigitOutOfRange { digit: u32, base: u32 },

    #[error("digit string is empty")]
    EmptyDigits,

    #[error("invalid natural number {0:?}: expected a non-empty string of decimal digits")]
    InvalidNatural(String),

    #[error("sample size must be at least 1")]
    ZeroSampleSize,

    #[error("horizon must be at least 1 step")]
    ZeroHorizon,

    #[error("invalid dynamics {0:?}: expected `linear`, `constant:c` or `decline:D,a`")]
    InvalidDynamics(String),

    #[error("fit window is empty")]
    EmptyWindow,

    #[error("fit window {start}..={end} lies outside the trace horizon 1..={horizon}")]
    WindowOutOfRange { start: u64, end: u64, horizon: u64 },

    #[error("fit window needs at least two distinct time points")]
    DegenerateWindow,

    #[error("total at t = {0} is zero, log undefined")]
    NonPositiveTotal(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
