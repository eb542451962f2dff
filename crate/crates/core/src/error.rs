use thiserror::Error;

/// Errors raised by evaluation, series analysis and endpoint solving.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("mean arguments must be positive and finite, got ({a}, {b})")]
    NonPositiveArgument { a: f64, b: f64 },

    #[error("invalid parameter {value} for {what}")]
    InvalidParameter { what: &'static str, value: f64 },

    #[error("arguments must be distinct")]
    EqualArguments,

    #[error("unknown mean `{0}`")]
    UnknownMean(String),

    #[error("unknown {what} `{name}`")]
    UnknownName { what: &'static str, name: String },

    #[error("parameter {value} outside ({lo}, {hi})")]
    OutsideRange { value: f64, lo: f64, hi: f64 },

    #[error("single sign change criterion not applicable: {0}")]
    NotApplicable(&'static str),

    #[error("no sign change of the series within radius {radius}")]
    NoSignChange { radius: f64 },

    #[error("root not bracketed on [{lo}, {hi}]")]
    NotBracketed { lo: f64, hi: f64 },

    #[error("predicate {0} within the search window")]
    EndpointNotBracketed(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
