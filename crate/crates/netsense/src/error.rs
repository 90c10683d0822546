//! Crate-wide error type.

use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("interaction matrix requires at least one edge")]
    EmptyEdgeSet,

    #[error("symmetric eigensolver failed to converge (lapack info {info})")]
    EigenFailed { info: i32 },

    #[error("nonsymmetric eigensolver failed (lapack error: {0})")]
    Lapack(String),

    #[error("transfer function pole at s = {s}: |g(s) - {lambda}| below threshold")]
    Pole { s: Complex64, lambda: f64 },

    #[error("near-singular system at omega = {omega}: {detail}")]
    NearPole { omega: f64, detail: String },

    #[error("solve residual {residual:.3e} exceeds bound {bound:.3e} at omega = {omega}")]
    ResidualTooLarge {
        omega: f64,
        residual: f64,
        bound: f64,
    },

    #[error("unstable configuration: lambda_1 = {lambda}, stability margin = {margin}")]
    Unstable { lambda: f64, margin: f64 },

    #[error("degree sequence is constant; degree correlation is undefined")]
    ConstantDegrees,

    #[error(
        "scaling regression impossible: {excluded} trial(s) with w1 = 1 excluded, \
         leaving a size with no usable data"
    )]
    DegenerateScaling { excluded: usize },

    #[error("simulation diverged at t = {t:.3}: |x|_inf = {norm:.3e}")]
    Divergence { t: f64, norm: f64 },

    #[error("config error: {0}")]
    Config(String),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
