//! Error type shared across the crate.

use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("invalid Bernoulli order {0}: must be in 1..=20")]
    InvalidOrder(usize),

    #[error("argument t={0} outside [0,1]")]
    TimeDomain(f64),

    #[error("point ({0}, {1}) outside the problem domain")]
    SpaceDomain(f64, f64),

    #[error("invalid grid parameters: M={m}, d={d}")]
    GridParams { m: usize, d: usize },

    #[error("degenerate barycentric weight at node {0}")]
    DegenerateWeight(usize),

    #[error("time-derivative oracle cannot supply order {0}")]
    DerivativeOrder(usize),

    #[error("matrix is singular: |pivot|={pivot:.3e} at step {index}")]
    Singular { index: usize, pivot: f64 },

    #[error("singular {factor} while building the preconditioner")]
    SingularFactor { factor: &'static str },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("order N={0} rejected: dimension-expanded preconditioners need even N (and N >= 4 for second-order cases)")]
    OddOrder(usize),

    #[error("problem size {size} exceeds the dense-eigensolve budget {budget}")]
    SizeBudget { size: usize, budget: usize },

    #[error("matrix of {needed} bytes exceeds available memory ({available} bytes)")]
    MemoryBudget { needed: u64, available: u64 },

    #[error("unknown builtin problem '{0}'")]
    UnknownProblem(String),

    #[error("expression parse error: {0}")]
    Parse(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("GMRES failed to converge: relative residual {residual:.3e} after {iterations} iterations")]
    NonConvergence { residual: f64, iterations: usize },

    #[error("boundary/initial data incompatible at ({x}, {y}): |g(0)-alpha0| = {gap:.3e}")]
    Incompatible { x: f64, y: f64, gap: f64 },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
