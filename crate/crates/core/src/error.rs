use thiserror::Error;

/// Errors raised across the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("invalid polynomial text {input:?}: {reason}")]
    ParsePoly { input: String, reason: String },

    #[error("polynomial {poly} is reducible; witness factor {factor}")]
    Reducible { poly: String, factor: String },

    #[error("polynomial {poly} is not primitive (content {content})")]
    Imprimitive { poly: String, content: String },

    #[error("polynomial {0} has degree 0; an algebraic number needs degree >= 1")]
    ConstantMinpoly(String),

    #[error("resource cap exceeded: {what} would exceed {cap}")]
    ResourceCap { what: String, cap: u64 },

    #[error("root finder did not converge after {iterations} sweeps (best residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("residue {x} is not a unit mod {p}")]
    NotAUnit { x: u64, p: u64 },

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("prime {p} is {d}-exceptional: it divides Res({first}, {second})")]
    ExceptionalPrime {
        p: u64,
        d: usize,
        first: String,
        second: String,
    },

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("factorization incomplete: deadline reached with unfactored cofactor {0}")]
    FactorIncomplete(String),

    #[error("corrupt record at line {line} of {path}: {reason}")]
    CorruptRecord {
        path: String,
        line: usize,
        reason: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
