use std::fmt;

/// Error type shared across the crate.
#[derive(Debug, Clone)]
pub enum Error {
    /// Tensor shape or dimension mismatch.
    Shape(String),
    /// Invalid configuration value or combination.
    Config(String),
    /// Numeric failure (NaN gradients, divergence, degenerate norms).
    Numeric(String),
    /// File I/O or encoding failure.
    Io(String),
    /// Dataset construction or loading failure.
    Data(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Shape(m) => write!(f, "shape error: {m}"),
            Error::Config(m) => write!(f, "config error: {m}"),
            Error::Numeric(m) => write!(f, "numeric error: {m}"),
            Error::Io(m) => write!(f, "io error: {m}"),
            Error::Data(m) => write!(f, "data error: {m}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

macro_rules! shape_err {
    ($($arg:tt)*) => { $crate::error::Error::Shape(format!($($arg)*)) };
}
macro_rules! config_err {
    ($($arg:tt)*) => { $crate::error::Error::Config(format!($($arg)*)) };
}
macro_rules! numeric_err {
    ($($arg:tt)*) => { $crate::error::Error::Numeric(format!($($arg)*)) };
}
macro_rules! data_err {
    ($($arg:tt)*) => { $crate::error::Error::Data(format!($($arg)*)) };
}

pub(crate) use {config_err, data_err, numeric_err, shape_err};
