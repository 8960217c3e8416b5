use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate similarity exponent: {0}")]
    DegenerateExponent(String),

    #[error("time must be positive, got t = {0}")]
    NonPositiveTime(f64),

    #[error("non-finite right-hand side at z = {z}")]
    SingularRhs { z: f64 },

    #[error("group parameter must be positive, got omega = {omega}")]
    OmegaNonPositive { omega: f64 },

    #[error("secant breakdown at h* = {h_star}: equal transformation function values")]
    SecantBreakdown { h_star: f64 },

    #[error("secant iterate h* = {h_star} left the admissible domain twice")]
    DomainExit { h_star: f64 },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("argument {value} outside domain [{lo}, {hi}]")]
    DomainError { value: f64, lo: f64, hi: f64 },

    #[error("no tabulated reference value for S = {0}")]
    NotTabulated(f64),
}
