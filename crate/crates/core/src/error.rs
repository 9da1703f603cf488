use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by the numerical routines in this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("Gamma function pole at z = {0}")]
    Pole(Complex64),

    #[error("argument outside the domain: {0}")]
    Domain(String),

    #[error("curve is singular at t = {t}: speed {speed:e}")]
    SingularCurve { t: f64, speed: f64 },

    #[error("degenerate chart point ({t1}, {t2}): area element {area:e}")]
    DegenerateChart { t1: f64, t2: f64, area: f64 },

    #[error("coincident points: |v - u| = {0:e}")]
    CoincidentPoints(f64),

    #[error("Re s = {re} is outside the convergence region Re s > {sigma_min}")]
    ConvergenceRegion { re: f64, sigma_min: f64 },

    #[error("extrapolation did not converge: last change {change:e} exceeds {limit:e}")]
    NonConvergence { change: f64, limit: f64 },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
