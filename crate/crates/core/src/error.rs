use thiserror::Error;

/// Errors raised by the numeric, construction and fitting routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{what} must be finite, got {value}")]
    NotFinite { what: &'static str, value: f64 },

    #[error("{what} = {value} lies outside {range}")]
    OutOfRange {
        what: &'static str,
        value: f64,
        range: String,
    },

    #[error("ordering violated: {0}")]
    Ordering(String),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn finite(what: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NotFinite { what, value })
    }
}

/// Checks `lo < value < hi`, rejecting NaN.
pub(crate) fn open_interval(what: &'static str, value: f64, lo: f64, hi: f64) -> Result<f64> {
    if value > lo && value < hi {
        Ok(value)
    } else {
        Err(Error::OutOfRange {
            what,
            value,
            range: format!("({lo}, {hi})"),
        })
    }
}
