use num_complex::Complex64;

use crate::error::{Error, Result};

/// Distance below which an argument is treated as sitting on a Gamma pole.
pub const POLE_TOLERANCE: f64 = 1e-12;

/// Real part above which the Stirling series is applied directly.
const STIRLING_THRESHOLD: f64 = 15.0;

// B_{2k} / (2k (2k - 1)) for k = 1..8.
const STIRLING_COEFFS: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
];

const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_8;

/// Complex log-Gamma.
///
/// Returns the analytic continuation of `ln Γ(z)` from the positive real
/// axis (branch cut along the negative real axis, approached from below).
/// With this branch `log_gamma(z + 1) = log_gamma(z) + ln z` holds exactly
/// off the cut. Small arguments are shifted up by the recurrence until the
/// Stirling series is accurate.
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Domain(format!("log_gamma of non-finite argument {z}")));
    }
    if z.re < -1e5 {
        return Err(Error::Domain(format!("log_gamma argument {z} too far left")));
    }
    let nearest = z.re.round();
    if nearest <= 0.0 && (z - nearest).norm() < POLE_TOLERANCE {
        return Err(Error::Pole(z));
    }

    let mut shift = Complex64::new(0.0, 0.0);
    let mut w = z;
    while w.re < STIRLING_THRESHOLD {
        shift += w.ln();
        w += 1.0;
    }
    Ok(stirling(w) - shift)
}

fn stirling(z: Complex64) -> Complex64 {
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut tail = Complex64::new(0.0, 0.0);
    for &c in STIRLING_COEFFS.iter().rev() {
        tail = tail * inv2 + c;
    }
    (z - 0.5) * z.ln() - z + HALF_LN_TWO_PI + tail * inv
}

fn ln_gamma_real(x: f64) -> Result<f64> {
    Ok(log_gamma(Complex64::new(x, 0.0))?.re)
}

/// Closed form of `∫_{-1}^{1} x (1-x)^a (1-x²)^{b/2} dx`:
///
/// `-2^{a+b+1} a Γ(a + b/2 + 1) Γ(1 + b/2) / Γ(a + b + 3)`.
///
/// The integral converges iff `b > -2` and `a + b/2 > -1`; the function also
/// requires `a > -1`.
pub fn euler_beta_moment(a: f64, b: f64) -> Result<f64> {
    if !(a > -1.0 && b > -2.0 && a + 0.5 * b > -1.0) {
        return Err(Error::Domain(format!(
            "euler_beta_moment needs a > -1, b > -2, a + b/2 > -1 (got a = {a}, b = {b})"
        )));
    }
    if a == 0.0 {
        return Ok(0.0);
    }
    let log_mag = (a + b + 1.0) * std::f64::consts::LN_2
        + a.abs().ln()
        + ln_gamma_real(a + 0.5 * b + 1.0)?
        + ln_gamma_real(1.0 + 0.5 * b)?
        - ln_gamma_real(a + b + 3.0)?;
    Ok(-a.signum() * log_mag.exp())
}
