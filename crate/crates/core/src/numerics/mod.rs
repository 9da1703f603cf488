//! Complex scalars, the complex log-Gamma function, one-dimensional
//! quadrature rules and truncated power series.

mod gamma;
mod quadrature;
pub(crate) mod series;

pub use gamma::{euler_beta_moment, log_gamma, POLE_TOLERANCE};
pub use quadrature::{integrate_1d, GradedRule, QuadratureRule, RuleKind};

use num_complex::Complex64;

/// The value domain of `s`, of beta-function values and of residues.
pub type ComplexScalar = Complex64;

/// `r^s` for a real base `r >= 0`, computed as `exp(s ln r)` with the real
/// logarithm. `0^s` is `0` for `Re s > 0`; other zero-base cases are
/// non-finite and left to the caller to reject.
#[inline]
pub fn real_pow(r: f64, s: ComplexScalar) -> ComplexScalar {
    if r == 0.0 {
        return if s.re > 0.0 {
            Complex64::new(0.0, 0.0)
        } else if s.re == 0.0 && s.im == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(f64::INFINITY, 0.0)
        };
    }
    if s.im == 0.0 {
        return Complex64::new(r.powf(s.re), 0.0);
    }
    let ln_r = r.ln();
    let modulus = (s.re * ln_r).exp();
    let (sin, cos) = (s.im * ln_r).sin_cos();
    Complex64::new(modulus * cos, modulus * sin)
}
