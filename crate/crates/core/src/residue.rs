//! Residues of the double-layer beta function at the poles nearest the
//! convergence region.
//!
//! Two independent routes are evaluated for every pole. The invariant route
//! integrates polynomials in curvature invariants (`κ_0..κ_4` on curves, the
//! `H` monomials on surfaces). The jet route integrates polynomials in the
//! local graph coefficients. Both densities are pointwise, so agreement is a
//! check on the jets and on the two families of formulas, not on quadrature.
//!
//! | shape   | poles            |
//! |---------|------------------|
//! | curve   | `1, -1, -3, -5`  |
//! | surface | `0, -2, -4`      |

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::beta::{beta_with_rule, residue_extrapolate, BetaRule, Layer};
use crate::closed_form::sphere_beta_residue;
use crate::curve::{curvature_jet, curve_measure, graph_jet, CurveJet, PlaneCurve};
use crate::error::{Error, Result};
use crate::numerics::{GradedRule, QuadratureRule};
use crate::shape::Shape;
use crate::surface::{area_nodes, invariant_monomials, surface_graph_jet, InvariantMonomials, ParamSurface, SurfaceJet};

pub const CURVE_POLES: [f64; 4] = [1.0, -1.0, -3.0, -5.0];
pub const SURFACE_POLES: [f64; 3] = [0.0, -2.0, -4.0];

/// Residue values keyed by pole, in decreasing pole order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResidueTable {
    pub entries: Vec<(f64, f64)>,
}

impl ResidueTable {
    pub fn get(&self, pole: f64) -> Option<f64> {
        self.entries.iter().find(|(p, _)| *p == pole).map(|&(_, v)| v)
    }

    pub fn poles(&self) -> impl Iterator<Item = f64> + '_ {
        self.entries.iter().map(|&(p, _)| p)
    }
}

/// Curve densities from `κ_0..κ_4`, one per entry of [`CURVE_POLES`].
pub fn curve_density_invariant(k: &[f64]) -> [f64; 4] {
    let (k0, k1, k2, k3, k4) = (k[0], k[1], k[2], k[3], k[4]);
    let k0_2 = k0 * k0;
    [
        -2.0,
        0.75 * k0_2,
        45.0 / 64.0 * k0_2 * k0_2 + 1.25 * k1 * k1 + 15.0 / 8.0 * k0 * k2,
        175.0 / 512.0 * k0_2 * k0_2 * k0_2
            + 1295.0 / 288.0 * k0_2 * k1 * k1
            + 1085.0 / 576.0 * k0_2 * k0 * k2
            + 175.0 / 576.0 * k2 * k2
            + 35.0 / 72.0 * k1 * k3
            + 35.0 / 144.0 * k0 * k4,
    ]
}

/// Curve densities from the graph coefficients `a_2..a_6`.
pub fn curve_density_jet(jet: &CurveJet) -> [f64; 4] {
    let (a2, a3, a4, a5, a6) = (jet.coeff(2), jet.coeff(3), jet.coeff(4), jet.coeff(5), jet.coeff(6));
    let a2_2 = a2 * a2;
    [
        -2.0,
        3.0 * a2_2,
        (360.0 * a2 * a4 + 180.0 * a3 * a3 - 315.0 * a2_2 * a2_2) / 4.0,
        (2800.0 * a2 * a6 + 2800.0 * a3 * a5 + 1400.0 * a4 * a4
            - 12600.0 * a2_2 * a2 * a4
            - 18900.0 * a2_2 * a3 * a3
            + 5775.0 * a2_2 * a2_2 * a2_2)
            / 8.0,
    ]
}

/// Surface densities from the `H` monomials, one per entry of [`SURFACE_POLES`].
pub fn surface_density_invariant(h: &InvariantMonomials) -> [f64; 3] {
    [
        0.0,
        PI / 4.0 * (h.h0_sq + 2.0 * h.h1),
        PI / 8.0
            * (-15.0 / 16.0 * h.h0_4
                + 3.75 * h.h1_sq
                + 2.0 * h.h2
                + 1.5 * h.h0_h3
                + 4.5 * h.h4
                + 1.5 * h.h5
                + 3.0 * h.h6),
    ]
}

/// Surface densities from the graph coefficients `b`, `c`, `d`.
pub fn surface_density_jet(jet: &SurfaceJet) -> [f64; 3] {
    let [b1, b2, b3] = jet.b;
    let [c1, c2, c3, c4] = jet.c;
    let [d1, d2, d3, d4, d5] = jet.d;
    let (b1_2, b2_2, b3_2) = (b1 * b1, b2 * b2, b3 * b3);
    let bracket = 360.0 * b3 * d5 + 72.0 * b1 * d5 + 72.0 * b2 * d4 + 180.0 * c4 * c4 + 72.0 * c2 * c4
        + 72.0 * b3 * d3
        + 72.0 * b1 * d3
        + 36.0 * c3 * c3
        + 72.0 * c1 * c3
        - 315.0 * b3_2 * b3_2
        - 180.0 * b1 * b3_2 * b3
        - 270.0 * b2_2 * b3_2
        - 162.0 * b1_2 * b3_2
        - 324.0 * b1 * b2_2 * b3
        + 72.0 * d1 * b3
        - 180.0 * b1_2 * b1 * b3
        + 72.0 * b2 * d2
        + 36.0 * c2 * c2
        - 270.0 * b1_2 * b2_2
        + 360.0 * b1 * d1
        + 180.0 * c1 * c1
        - 315.0 * b1_2 * b1_2
        - 27.0 * b2_2 * b2_2;
    [0.0, PI * (3.0 * b3_2 + 2.0 * b1 * b3 + b2_2 + 3.0 * b1_2), PI / 8.0 * bracket]
}

fn integrate<const N: usize, T>(
    items: &[T],
    density: impl Fn(&T) -> Result<[f64; N]> + Sync,
    weight: impl Fn(&T) -> f64 + Sync,
    poles: [f64; N],
) -> Result<ResidueTable>
where
    T: Sync,
{
    let parts: Vec<Result<[f64; N]>> = items
        .par_iter()
        .map(|item| {
            let w = weight(item);
            density(item).map(|d| d.map(|v| v * w))
        })
        .collect();
    let mut acc = [0.0; N];
    for p in parts {
        for (a, v) in acc.iter_mut().zip(p?) {
            *a += v;
        }
    }
    Ok(ResidueTable { entries: poles.into_iter().zip(acc).collect() })
}

/// Arc-length quadrature of the curvature densities over `rule` on `[0, 2π)`.
pub fn curve_residues_invariant(curve: &PlaneCurve, rule: &QuadratureRule) -> Result<ResidueTable> {
    let measure = curve_measure(curve, rule)?;
    integrate(
        &measure.nodes,
        |n| Ok(curve_density_invariant(&curvature_jet(curve, n.t, 4)?)),
        |n| n.weight,
        CURVE_POLES,
    )
}

/// Arc-length quadrature of the graph-jet densities over `rule` on `[0, 2π)`.
pub fn curve_residues_jet(curve: &PlaneCurve, rule: &QuadratureRule) -> Result<ResidueTable> {
    let measure = curve_measure(curve, rule)?;
    integrate(&measure.nodes, |n| Ok(curve_density_jet(&graph_jet(curve, n.t)?)), |n| n.weight, CURVE_POLES)
}

/// Area quadrature of the `H`-monomial densities with [`area_nodes`]`(n)`.
pub fn surface_residues_invariant(surface: &ParamSurface, n: usize) -> Result<ResidueTable> {
    let nodes = area_nodes(surface, n)?;
    integrate(
        &nodes,
        |p| Ok(surface_density_invariant(&invariant_monomials(&surface_graph_jet(surface, p.t1, p.t2)?))),
        |p| p.weight,
        SURFACE_POLES,
    )
}

/// Area quadrature of the graph-jet densities with [`area_nodes`]`(n)`.
pub fn surface_residues_jet(surface: &ParamSurface, n: usize) -> Result<ResidueTable> {
    let nodes = area_nodes(surface, n)?;
    integrate(
        &nodes,
        |p| Ok(surface_density_jet(&surface_graph_jet(surface, p.t1, p.t2)?)),
        |p| p.weight,
        SURFACE_POLES,
    )
}

/// All residue estimates at one pole.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResidueReport {
    pub pole: f64,
    pub route_invariant: f64,
    pub route_jet: f64,
    /// Extrapolated from the closed form; round circles and spheres only.
    pub closed_form: Option<f64>,
    /// Extrapolated from direct quadrature; first pole only.
    pub extrapolated: Option<f64>,
    /// Largest absolute difference between any two populated estimates.
    pub max_pairwise_gap: f64,
}

impl ResidueReport {
    fn new(pole: f64, route_invariant: f64, route_jet: f64, closed_form: Option<f64>, extrapolated: Option<f64>) -> Self {
        let values: Vec<f64> =
            [Some(route_invariant), Some(route_jet), closed_form, extrapolated].into_iter().flatten().collect();
        let mut gap = 0.0f64;
        for (i, a) in values.iter().enumerate() {
            for b in &values[i + 1..] {
                gap = gap.max((a - b).abs());
            }
        }
        Self { pole, route_invariant, route_jet, closed_form, extrapolated, max_pairwise_gap: gap }
    }
}

/// Graded inner rule for curve quadrature near the first pole: ratio 8,
/// eight points per piece, 255 levels.
pub fn deep_grading() -> GradedRule {
    GradedRule { levels: 255, ratio: 8.0, points: 8 }
}

/// Residue at the first pole from `h·B(pole + h)`, `h = 2^{-k}`, `k = 1..=6`,
/// by direct quadrature with `nodes` outer nodes.
///
/// Curves use [`deep_grading`] so that `∫ τ^{h-1}` is resolved down to
/// `h = 1/64`. On surfaces the factor `s` removes the pole at `0` and the
/// default rule is used.
pub fn quadrature_residue(shape: &Shape, nodes: usize) -> Result<f64> {
    let (pole, grading) = match shape {
        Shape::Curve(_) => (CURVE_POLES[0], Some(deep_grading())),
        Shape::Surface(_) => (SURFACE_POLES[0], None),
    };
    let rule = BetaRule { nodes, grading };
    let eval = |s: f64| beta_with_rule(shape, Layer::Double, Complex64::new(s, 0.0), &rule);
    let reference = 0.5 * eval(pole + 0.5)?.norm();
    // the last tableau step may move the estimate by at most 1% of h·B at h = 1/2
    Ok(residue_extrapolate(eval, pole, 6, 1e-3 * reference)?.re)
}

/// Residue reports for every covered pole of `shape`.
///
/// Curves use a periodic trapezoid with `nodes` points; surfaces use
/// [`area_nodes`]`(nodes)`. `with_extrapolation` adds [`quadrature_residue`]
/// at the first pole, with at most 64 outer nodes on curves and 32 on
/// surfaces.
pub fn residue_report(shape: &Shape, nodes: usize, with_extrapolation: bool) -> Result<Vec<ResidueReport>> {
    let (invariant, jet) = match shape {
        Shape::Curve(c) => {
            let rule = QuadratureRule::periodic_trapezoid(nodes)?;
            (curve_residues_invariant(c, &rule)?, curve_residues_jet(c, &rule)?)
        }
        Shape::Surface(m) => (surface_residues_invariant(m, nodes)?, surface_residues_jet(m, nodes)?),
    };
    let spec = shape.sphere_spec();
    let cap = if shape.dim() == 1 { 64 } else { 32 };
    let extrapolated = if with_extrapolation { Some(quadrature_residue(shape, nodes.min(cap))?) } else { None };
    invariant
        .entries
        .iter()
        .enumerate()
        .map(|(i, &(pole, route_invariant))| {
            let route_jet = jet.get(pole).ok_or_else(|| Error::Domain(format!("missing pole {pole}")))?;
            let closed = spec.map(|sp| sphere_beta_residue(&sp, pole)).transpose()?;
            let extra = if i == 0 { extrapolated } else { None };
            Ok(ResidueReport::new(pole, route_invariant, route_jet, closed, extra))
        })
        .collect()
}
