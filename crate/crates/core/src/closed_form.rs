//! The double-layer beta function of a round sphere `S^{d-1}(R) ⊂ ℝ^d` in
//! closed form, continued to the whole `s`-plane.
//!
//! ```text
//! B(s) = π^{(d-1)/2} ω_{d-1} 2^{s+d-4} R^{s+2d-4} s(s-2)(s+d-2) Γ((s+d-3)/2) / Γ(s/2+d-1)
//! ```
//!
//! The [`Variant::Printed`] normalization carries `2^{s+d-5}` instead and is
//! exactly half of the corrected value. Direct quadrature of the circle at
//! `s = 3` gives `48π`, which only the corrected form reproduces; the
//! corrected form is also the only one whose residues match `-2·Length` on
//! the circle and `8π²` on the 2-sphere.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::beta::residue_extrapolate;
use crate::error::{Error, Result};
use crate::numerics::{log_gamma, POLE_TOLERANCE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Variant {
    /// Total measure factor `ω_{d-1}R^{d-1}` applied to the per-point value.
    #[default]
    Corrected,
    /// Half of [`Variant::Corrected`].
    Printed,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphereSpec {
    pub d: u32,
    pub radius: f64,
    pub variant: Variant,
}

impl SphereSpec {
    pub fn new(d: u32, radius: f64, variant: Variant) -> Result<Self> {
        if !(2..=3).contains(&d) {
            return Err(Error::Domain(format!("ambient dimension must be 2 or 3 (got {d})")));
        }
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::Domain(format!("radius must be positive (got {radius})")));
        }
        Ok(Self { d, radius, variant })
    }

    pub fn corrected(d: u32, radius: f64) -> Result<Self> {
        Self::new(d, radius, Variant::Corrected)
    }

    /// Poles the residue routes cover: `3-d, 1-d, …` down to `-5`.
    pub fn poles(&self) -> Vec<f64> {
        let mut out = Vec::new();
        let mut p = 3.0 - self.d as f64;
        while p >= -5.0 {
            out.push(p);
            p -= 2.0;
        }
        out
    }
}

/// `ω_n = 2π^{(n+1)/2} / Γ((n+1)/2)`, the area of the unit `n`-sphere.
pub fn unit_sphere_area(n: u32) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("unit sphere dimension must be at least 1".into()));
    }
    let h = 0.5 * (n as f64 + 1.0);
    Ok(2.0 * (h * PI.ln() - log_gamma(Complex64::new(h, 0.0))?.re).exp())
}

/// A linear factor `slope·(s - root)`.
#[derive(Debug, Clone, Copy)]
struct Linear {
    slope: f64,
    root: f64,
}

impl Linear {
    fn at(&self, s: Complex64) -> Complex64 {
        (s - self.root) * self.slope
    }
}

/// Closed-form beta function; removable singularities are cancelled exactly.
pub fn sphere_beta(spec: &SphereSpec, s: Complex64) -> Result<Complex64> {
    let d = spec.d as f64;
    let mut numerator = vec![
        Linear { slope: 1.0, root: 0.0 },
        Linear { slope: 1.0, root: 2.0 },
        Linear { slope: 1.0, root: 2.0 - d },
    ];
    let constant = (0.5 * (d - 1.0) * PI.ln()).exp() * unit_sphere_area(spec.d - 1)?;
    let power = ((s + d - 4.0) * std::f64::consts::LN_2 + (s + 2.0 * d - 4.0) * spec.radius.ln()).exp();
    let mut scale = Complex64::new(constant, 0.0) * power;

    let a = (s + d - 3.0) * 0.5;
    let b = s * 0.5 + d - 1.0;
    if spec.d % 2 == 1 {
        // Γ(a)/Γ(a+n) = 1/∏(a+k) with n = (d+1)/2
        let n = spec.d.div_ceil(2);
        let mut denominator: Vec<Linear> =
            (0..n).map(|k| Linear { slope: 0.5, root: 3.0 - d - 2.0 * k as f64 }).collect();
        denominator.retain(|den| {
            match numerator.iter().position(|num| num.root == den.root) {
                Some(i) => {
                    scale *= numerator[i].slope / den.slope;
                    numerator.remove(i);
                    false
                }
                None => true,
            }
        });
        let mut den = Complex64::new(1.0, 0.0);
        for f in &denominator {
            let v = f.at(s);
            if v.norm() < POLE_TOLERANCE {
                return Err(Error::Pole(s));
            }
            den *= v;
        }
        scale /= den;
    } else {
        let near_pole = |z: Complex64| {
            let m = z.re.round();
            m <= 0.0 && (z - m).norm() < POLE_TOLERANCE
        };
        if near_pole(b) {
            // 1/Γ(b) vanishes; Γ(a) is finite here for d even
            return Ok(Complex64::new(0.0, 0.0));
        }
        if near_pole(a) {
            let m = -a.re.round();
            let i = numerator
                .iter()
                .position(|f| f.at(s).norm() < POLE_TOLERANCE)
                .ok_or(Error::Pole(s))?;
            // slope·(s - s0)·Γ(a) → slope·2(-1)^m/m!
            let m_fact = log_gamma(Complex64::new(m + 1.0, 0.0))?.re.exp();
            let sign = if m as i64 % 2 == 0 { 1.0 } else { -1.0 };
            scale *= numerator[i].slope * 2.0 * sign / m_fact / log_gamma(b)?.exp();
            numerator.remove(i);
        } else {
            scale *= (log_gamma(a)? - log_gamma(b)?).exp();
        }
    }
    let mut value = scale;
    for f in &numerator {
        value *= f.at(s);
    }
    if spec.variant == Variant::Printed {
        value *= 0.5;
    }
    if s.im == 0.0 {
        value.im = 0.0;
    }
    Ok(value)
}

/// Residue of [`sphere_beta`] at one of [`SphereSpec::poles`], by Richardson
/// extrapolation of `(s - pole) B(s)` from the right.
pub fn sphere_beta_residue(spec: &SphereSpec, pole: f64) -> Result<f64> {
    if !spec.poles().contains(&pole) {
        return Err(Error::Domain(format!("{pole} is not a covered pole for d = {}", spec.d)));
    }
    let eval = |s: f64| sphere_beta(spec, Complex64::new(s, 0.0));
    let reference = 0.5 * eval(pole + 0.5)?.norm();
    Ok(residue_extrapolate(eval, pole, 12, 1e-10 * (1.0 + reference))?.re)
}
