//! Direct quadrature of the beta function in its convergence half-plane.
//!
//! The double integral is split into an outer rule over `u` and, for every
//! outer node, an inner rule over `v` laid out around `u`. The inner rules
//! are geometrically graded towards `v = u`, so the kernel singularity
//! `|v - u|^{Re s - 2}` is integrated to full accuracy and the diagonal is
//! never sampled:
//!
//! * curves: `v = γ(t ± τ)` with `τ ∈ (0, π]` graded;
//! * spheres and ellipsoids: polar coordinates centred at `u` on the
//!   preimage unit sphere, graded in the polar angle;
//! * tori: four Duffy triangles tiling the periodic chart square around `u`,
//!   graded in the radial variable.
//!
//! Outer sums run in parallel; the per-node contributions are collected in
//! node order and added sequentially, so results are reproducible.

use nalgebra::Vector2;
use num_complex::Complex64;
use rayon::prelude::*;

use crate::curve::PlaneCurve;
use crate::error::{Error, Result};
use crate::kernels::{double_layer_kernel_raw, single_layer_kernel_chord};
use crate::numerics::{GradedRule, QuadratureRule};
use crate::shape::Shape;
use crate::surface::{area_nodes, for_each_partner, ParamSurface, PartnerRule};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Layer {
    Single,
    Double,
}

/// One evaluation of `B(s)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaSample {
    pub s: Complex64,
    pub value: Complex64,
    /// Outer node count: points on the curve, azimuthal points on a surface.
    pub node_count: usize,
    /// `|B_n(s) - B_{n/2}(s)|`.
    pub error_estimate: f64,
}

/// Node layout for one evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaRule {
    pub nodes: usize,
    /// Inner radial rule; the default grows with the outer count.
    pub grading: Option<GradedRule>,
}

impl BetaRule {
    pub fn new(nodes: usize) -> Self {
        Self { nodes, grading: None }
    }
}

/// Abscissa of convergence of the double integral.
///
/// Double layer: `1` on curves, `0` on surfaces. Single layer: `-dim M`.
pub fn sigma_min(shape: &Shape, layer: Layer) -> f64 {
    match (layer, shape) {
        (Layer::Double, Shape::Curve(_)) => 1.0,
        (Layer::Double, Shape::Surface(_)) => 0.0,
        (Layer::Single, _) => -(shape.dim() as f64),
    }
}

fn check_region(shape: &Shape, layer: Layer, s: Complex64) -> Result<()> {
    let sigma = sigma_min(shape, layer);
    if !(s.re > sigma) || !s.im.is_finite() {
        return Err(Error::ConvergenceRegion { re: s.re, sigma_min: sigma });
    }
    Ok(())
}

pub fn beta_double_layer(shape: &Shape, s: Complex64, nodes: usize) -> Result<BetaSample> {
    beta_sample(shape, Layer::Double, s, nodes)
}

pub fn beta_single_layer(shape: &Shape, s: Complex64, nodes: usize) -> Result<BetaSample> {
    beta_sample(shape, Layer::Single, s, nodes)
}

/// `B(s)` at `nodes` and `nodes/2`, reporting the finer value.
pub fn beta_sample(shape: &Shape, layer: Layer, s: Complex64, nodes: usize) -> Result<BetaSample> {
    let value = beta_with_rule(shape, layer, s, &BetaRule::new(nodes))?;
    let coarse = beta_with_rule(shape, layer, s, &BetaRule::new(nodes / 2))?;
    Ok(BetaSample { s, value, node_count: nodes, error_estimate: (value - coarse).norm() })
}

/// One quadrature evaluation of `B(s)` with an explicit rule.
pub fn beta_with_rule(shape: &Shape, layer: Layer, s: Complex64, rule: &BetaRule) -> Result<Complex64> {
    check_region(shape, layer, s)?;
    let min_nodes = match shape {
        Shape::Curve(_) => 4,
        Shape::Surface(_) => 8,
    };
    if rule.nodes < min_nodes {
        return Err(Error::Domain(format!("need at least {min_nodes} nodes (got {})", rule.nodes)));
    }
    match shape {
        Shape::Curve(c) => curve_beta(c, layer, s, rule),
        Shape::Surface(m) => surface_beta(m, layer, s, rule),
    }
}

fn ordered_sum(parts: Vec<Result<Complex64>>) -> Result<Complex64> {
    let mut acc = Complex64::new(0.0, 0.0);
    for p in parts {
        acc += p?;
    }
    if !(acc.re.is_finite() && acc.im.is_finite()) {
        return Err(Error::Domain("quadrature overflowed; the inner grading is too deep for this s".into()));
    }
    Ok(acc)
}

fn curve_beta(curve: &PlaneCurve, layer: Layer, s: Complex64, rule: &BetaRule) -> Result<Complex64> {
    let outer = QuadratureRule::periodic_trapezoid(rule.nodes)?;
    let grading = rule.grading.unwrap_or_else(|| GradedRule::with_total(rule.nodes / 2, 12));
    let inner = grading.on(std::f64::consts::PI)?;
    let parts: Vec<Result<Complex64>> = outer
        .nodes()
        .par_iter()
        .zip(outer.weights().par_iter())
        .map(|(&t, &w)| {
            let (_, nu_u, speed_u) = curve.frame(t)?;
            let mut acc = Complex64::new(0.0, 0.0);
            for (tau, wt) in inner.iter() {
                for offset in [tau, -tau] {
                    let chord: Vector2<f64> = curve.chord(t, offset);
                    let (_, nu_v, speed_v) = curve.frame(t + offset)?;
                    let k = match layer {
                        Layer::Double => double_layer_kernel_raw(&chord, &nu_u, &nu_v, s)?,
                        Layer::Single => single_layer_kernel_chord(&chord, s)?,
                    };
                    acc += k * (wt * speed_v);
                }
            }
            Ok(acc * (w * speed_u))
        })
        .collect();
    ordered_sum(parts)
}

fn surface_beta(surface: &ParamSurface, layer: Layer, s: Complex64, rule: &BetaRule) -> Result<Complex64> {
    let outer = area_nodes(surface, rule.nodes)?;
    let partners = PartnerRule::new(surface, rule.nodes, rule.grading)?;
    let parts: Vec<Result<Complex64>> = outer
        .par_iter()
        .map(|node| {
            let mut acc = Complex64::new(0.0, 0.0);
            let mut failure = None;
            for_each_partner(surface, node.t1, node.t2, &partners, |chord, nu_v, w| {
                if failure.is_some() {
                    return;
                }
                let k = match layer {
                    Layer::Double => double_layer_kernel_raw(&chord, &node.normal, &nu_v, s),
                    Layer::Single => single_layer_kernel_chord(&chord, s),
                };
                match k {
                    Ok(k) => acc += k * w,
                    Err(e) => failure = Some(e),
                }
            });
            match failure {
                Some(e) => Err(e),
                None => Ok(acc * node.weight),
            }
        })
        .collect();
    ordered_sum(parts)
}

/// `lim_{s → pole⁺} (s - pole)·f(s)` by Richardson extrapolation over
/// `s = pole + 2^{-k}`, `k = 1..=steps`.
///
/// Fails with [`Error::NonConvergence`] when the last two diagonal entries
/// of the tableau differ by more than `10·tol`.
pub fn residue_extrapolate<F>(mut evaluator: F, pole: f64, steps: usize, tol: f64) -> Result<Complex64>
where
    F: FnMut(f64) -> Result<Complex64>,
{
    if steps < 2 {
        return Err(Error::Domain(format!("extrapolation needs at least 2 steps (got {steps})")));
    }
    let mut table: Vec<Vec<Complex64>> = Vec::with_capacity(steps);
    for k in 1..=steps {
        let h = 0.5f64.powi(k as i32);
        let mut row = vec![evaluator(pole + h)? * h];
        for j in 1..k {
            let prev = &table[k - 2];
            let factor = 2f64.powi(j as i32) - 1.0;
            row.push(row[j - 1] + (row[j - 1] - prev[j - 1]) / factor);
        }
        table.push(row);
    }
    let last = table[steps - 1][steps - 1];
    let before = table[steps - 2][steps - 2];
    let change = (last - before).norm();
    if change > 10.0 * tol {
        return Err(Error::NonConvergence { change, limit: 10.0 * tol });
    }
    Ok(last)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn convergence_region() {
        let circle = Shape::Curve(PlaneCurve::circle(1.0).unwrap());
        assert!(matches!(beta_double_layer(&circle, c(1.0), 32), Err(Error::ConvergenceRegion { .. })));
        assert!(matches!(beta_double_layer(&circle, c(0.0), 32), Err(Error::ConvergenceRegion { .. })));
        assert!(matches!(beta_single_layer(&circle, c(-1.0), 32), Err(Error::ConvergenceRegion { .. })));
        let sphere = Shape::Surface(ParamSurface::sphere(1.0).unwrap());
        assert!(beta_double_layer(&sphere, c(0.0), 16).is_err());
        assert_eq!(sigma_min(&sphere, Layer::Single), -2.0);
    }

    #[test]
    fn circle_single_layer() {
        let circle = Shape::Curve(PlaneCurve::circle(1.0).unwrap());
        let b0 = beta_single_layer(&circle, c(0.0), 64).unwrap();
        assert!((b0.value.re - 4.0 * PI * PI).abs() < 1e-10);
        let b1 = beta_single_layer(&circle, c(1.0), 128).unwrap();
        assert!((b1.value.re - 16.0 * PI).abs() < 1e-9, "{}", b1.value);
    }

    #[test]
    fn circle_double_layer_at_three() {
        let circle = Shape::Curve(PlaneCurve::circle(1.0).unwrap());
        let b = beta_double_layer(&circle, c(3.0), 256).unwrap();
        assert!((b.value.re - 48.0 * PI).abs() < 1e-8 * 48.0 * PI, "{}", b.value);
        assert!(b.error_estimate >= 0.0);
    }

    #[test]
    fn extrapolation_of_simple_pole() {
        // 3/(s - 1) + 2 + s
        let r = residue_extrapolate(|s| Ok(c(3.0 / (s - 1.0) + 2.0 + s)), 1.0, 8, 1e-12).unwrap();
        assert!((r.re - 3.0).abs() < 1e-12);
        let bad = residue_extrapolate(|s| Ok(c(1.0 / (s * s))), 0.0, 6, 1e-12);
        assert!(matches!(bad, Err(Error::NonConvergence { .. })));
    }
}
