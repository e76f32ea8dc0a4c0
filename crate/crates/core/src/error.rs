use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("beta must be a finite real number > 1, got {0}")]
    InvalidBeta(f64),

    #[error("agm requires positive finite arguments, got ({0}, {1})")]
    NonPositiveAgm(f64, f64),

    #[error("agm did not converge within {0} iterations")]
    AgmNoConvergence(usize),

    #[error("argument must have finite components")]
    NonFinite,

    #[error("lattice does not belong to the given curve parameters")]
    InconsistentLattice,

    #[error("logarithmic derivative undefined at a zero or pole of R")]
    ZeroOrPole,

    #[error("radicand {value:e} is negative beyond rounding at beta = {beta}")]
    NegativeRadicand { beta: f64, value: f64 },

    #[error("beta = {0} is too close to 1 for the closed forms")]
    Degenerate(f64),

    #[error("lattice-sum cutoff must be at least 10, got {0}")]
    InvalidCutoff(usize),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
