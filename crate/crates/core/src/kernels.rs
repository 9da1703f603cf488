//! Pointwise integrands of the single- and double-layer beta functions.

use nalgebra::SVector;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::real_pow;

/// Separation below which two points are treated as coincident.
pub const COINCIDENCE_TOLERANCE: f64 = 1e-14;

/// Two points of a hypersurface in `ℝ^D` with their unit normals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfelPair<const D: usize> {
    pub u: SVector<f64, D>,
    pub nu_u: SVector<f64, D>,
    pub v: SVector<f64, D>,
    pub nu_v: SVector<f64, D>,
}

impl<const D: usize> SurfelPair<D> {
    pub fn new(u: SVector<f64, D>, nu_u: SVector<f64, D>, v: SVector<f64, D>, nu_v: SVector<f64, D>) -> Self {
        Self { u, nu_u, v, nu_v }
    }

    /// The pair with the roles of `u` and `v` exchanged.
    pub fn swapped(&self) -> Self {
        Self { u: self.v, nu_u: self.nu_v, v: self.u, nu_v: self.nu_u }
    }
}

/// `∂_{ν_u} ∂_{ν_v} |v - u|^s`.
pub fn double_layer_kernel<const D: usize>(pair: &SurfelPair<D>, s: Complex64) -> Result<Complex64> {
    double_layer_kernel_chord(&(pair.v - pair.u), &pair.nu_u, &pair.nu_v, s)
}

/// [`double_layer_kernel`] from the chord `w = v - u`.
///
/// Evaluated as `-s r^{s-2} [(s-2)⟨ŵ,ν_u⟩⟨ŵ,ν_v⟩ + ⟨ν_u,ν_v⟩]`, which equals
/// `-s(s-2) r^{s-4}⟨w,ν_u⟩⟨w,ν_v⟩ - s r^{s-2}⟨ν_u,ν_v⟩`.
#[inline]
pub fn double_layer_kernel_chord<const D: usize>(
    w: &SVector<f64, D>,
    nu_u: &SVector<f64, D>,
    nu_v: &SVector<f64, D>,
    s: Complex64,
) -> Result<Complex64> {
    let r = w.norm();
    if !(r >= COINCIDENCE_TOLERANCE) {
        return Err(Error::CoincidentPoints(r));
    }
    double_layer_kernel_raw(w, nu_u, nu_v, s)
}

/// As [`double_layer_kernel_chord`] but only rejects `r = 0`; graded rules
/// resolve separations far below the public coincidence tolerance.
#[inline]
pub(crate) fn double_layer_kernel_raw<const D: usize>(
    w: &SVector<f64, D>,
    nu_u: &SVector<f64, D>,
    nu_v: &SVector<f64, D>,
    s: Complex64,
) -> Result<Complex64> {
    let m = w.amax();
    if !(m > 0.0) {
        return Err(Error::CoincidentPoints(m));
    }
    // scale first: |w|² underflows long before |w| does
    let unit = w / m;
    let len = unit.norm();
    let r = m * len;
    let cu = unit.dot(nu_u) / len;
    let cv = unit.dot(nu_v) / len;
    let bracket = (s - 2.0) * (cu * cv) + nu_u.dot(nu_v);
    Ok(-s * real_pow(r, s - 2.0) * bracket)
}

/// `|v - u|^s`.
pub fn single_layer_kernel<const D: usize>(u: &SVector<f64, D>, v: &SVector<f64, D>, s: Complex64) -> Result<Complex64> {
    single_layer_kernel_chord(&(v - u), s)
}

#[inline]
pub fn single_layer_kernel_chord<const D: usize>(w: &SVector<f64, D>, s: Complex64) -> Result<Complex64> {
    let m = w.amax();
    let r = if m > 0.0 { m * (w / m).norm() } else { m };
    if r == 0.0 && s.re <= 0.0 {
        return Err(Error::CoincidentPoints(r));
    }
    Ok(real_pow(r, s))
}
