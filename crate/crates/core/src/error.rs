use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("weight at level {level} is {value}, must be positive")]
    NonPositiveWeight { level: usize, value: String },
    #[error("brute-force oracle limited to N <= {max}, got N = {n}")]
    OracleTooLarge { n: usize, max: usize },
    #[error("path ensemble is empty")]
    EmptyEnsemble,
    #[error("evaluation point is a pole of the generating function")]
    PoleHit,
    #[error("negative sub*sup product at offdiagonal {index}, matrix not symmetrizable")]
    NegativeProduct { index: usize },
    #[error("{what} did not converge within {limit} steps")]
    NotConverged { what: &'static str, limit: usize },
    #[error("lambda = {lambda} outside the spectral-edge window for K = {k}")]
    OutOfWindow { k: usize, lambda: f64 },
    #[error("degenerate fit input: {0}")]
    DegenerateInput(String),
    #[error("{0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
