//! Desk-scale re-run of the acceptance checks.

use std::f64::consts::PI;

use brylinski_core::{
    beta_double_layer, beta_single_layer, curvature_jet, graph_jet, quadrature_residue, residue_extrapolate,
    residue_report, sphere_beta, FourierMode, ParamSurface, PlaneCurve, Shape, SphereSpec, Variant,
};
use num_complex::Complex64;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Fast,
    Full,
}

/// One named comparison; passes iff `|actual - expected| <= tolerance`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: f64,
    pub actual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
    pub pass: bool,
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

struct Checks(Vec<Check>);

impl Checks {
    fn push(&mut self, name: &str, expected: f64, actual: brylinski_core::Result<f64>, tolerance: f64) {
        self.push_opt(name, expected, actual.ok(), tolerance);
    }

    fn push_opt(&mut self, name: &str, expected: f64, actual: Option<f64>, tolerance: f64) {
        // a numerical failure is reported as NaN and fails the check
        let actual = actual.unwrap_or(f64::NAN);
        let pass = (actual - expected).abs() <= tolerance;
        self.0.push(Check { name: name.to_string(), expected, actual, tolerance, pass });
    }
}

fn test_curves() -> Vec<PlaneCurve> {
    let mut curves = vec![PlaneCurve::ellipse(2.0, 1.0).unwrap()];
    for (i, k) in [2u32, 3, 4].into_iter().enumerate() {
        let e = 0.02 * (i + 1) as f64;
        curves.push(
            PlaneCurve::new(vec![
                FourierMode { k: 1, p: 1.0, q: 0.1, r: -0.05, w: 0.9 },
                FourierMode { k, p: e, q: -0.5 * e, r: 0.3 * e, w: e },
            ])
            .unwrap(),
        );
    }
    curves
}

fn kappa_relation_error(curves: &[PlaneCurve]) -> brylinski_core::Result<f64> {
    let mut worst = 0.0f64;
    for curve in curves {
        for t in [0.1, 1.7, 3.9, 5.2] {
            let k = curvature_jet(curve, t, 3)?;
            let a = graph_jet(curve, t)?.a;
            let want = [
                2.0 * a[0],
                6.0 * a[1],
                24.0 * a[2] - 24.0 * a[0].powi(3),
                120.0 * a[3] - 456.0 * a[0] * a[0] * a[1],
            ];
            for (x, y) in k.iter().zip(want) {
                worst = worst.max((x - y).abs() / (1.0 + y.abs()));
            }
        }
    }
    Ok(worst)
}

fn route_gap(shape: &Shape, nodes: usize) -> brylinski_core::Result<f64> {
    Ok(residue_report(shape, nodes, false)?
        .iter()
        .map(|r| (r.route_invariant - r.route_jet).abs() / (1.0 + r.route_invariant.abs()))
        .fold(0.0, f64::max))
}

pub fn run_verify(level: Level) -> VerifyReport {
    let full = level == Level::Full;
    let mut checks = Checks(Vec::new());
    let circle: Shape = PlaneCurve::circle(1.0).unwrap().into();
    let sphere: Shape = ParamSurface::sphere(1.0).unwrap().into();
    let circle_spec = SphereSpec::new(2, 1.0, Variant::default()).unwrap();

    let closed = sphere_beta(&circle_spec, c(3.0)).map(|v| v.re).unwrap_or(f64::NAN);
    checks.push(
        "circle-s3-quadrature-vs-closed-form",
        closed,
        beta_double_layer(&circle, c(3.0), if full { 2048 } else { 512 }).map(|b| b.value.re),
        1e-6 * closed.abs(),
    );
    checks.push(
        "circle-single-layer-s0",
        4.0 * PI * PI,
        beta_single_layer(&circle, c(0.0), 128).map(|b| b.value.re),
        1e-10 * 4.0 * PI * PI,
    );
    checks.push(
        "sphere-s2-divergence-identity",
        0.0,
        beta_double_layer(&sphere, c(2.0), if full { 32 } else { 16 }).map(|b| b.value.re),
        1e-8 * 16.0 * PI * PI,
    );
    let circle_report = residue_report(&circle, 256, false).ok();
    for (i, target) in [-4.0 * PI, 1.5 * PI, 45.0 * PI / 32.0, 175.0 * PI / 256.0].into_iter().enumerate() {
        let report = circle_report.as_ref().map(|r| &r[i]);
        let pole = [1, -1, -3, -5][i];
        let name = |route: &str| format!("circle-residue-pole{pole}-{route}");
        checks.push_opt(&name("route-invariant"), target, report.map(|r| r.route_invariant), 1e-8);
        checks.push_opt(&name("route-jet"), target, report.map(|r| r.route_jet), 1e-8);
        checks.push_opt(&name("closed-form"), target, report.and_then(|r| r.closed_form), 1e-8);
    }
    checks.push(
        "circle-closed-form-extrapolation-pole1",
        -4.0 * PI,
        residue_extrapolate(|s| sphere_beta(&circle_spec, c(s)), 1.0, 8, 1e-6).map(|v| v.re),
        0.01 * 4.0 * PI,
    );
    checks.push(
        "sphere-residue-pole-2",
        8.0 * PI * PI,
        residue_report(&sphere, 16, false).map(|r| r[1].route_invariant),
        1e-9,
    );
    let curves = test_curves();
    checks.push(
        "curvature-graph-relations",
        0.0,
        kappa_relation_error(if full { &curves } else { &curves[..2] }),
        1e-9,
    );

    if full {
        checks.push("ellipse-residue-route-agreement", 0.0, route_gap(&curves[0].clone().into(), 512), 1e-8);
        checks.push(
            "torus-residue-route-agreement",
            0.0,
            route_gap(&ParamSurface::torus(2.0, 1.0).unwrap().into(), 64),
            1e-6,
        );
        checks.push(
            "ellipsoid-residue-route-agreement",
            0.0,
            route_gap(&ParamSurface::ellipsoid(1.5, 1.0, 0.8).unwrap().into(), 64),
            1e-6,
        );
        checks.push(
            "torus-s2-divergence-identity",
            0.0,
            beta_double_layer(&ParamSurface::torus(2.0, 1.0).unwrap().into(), c(2.0), 32).map(|b| b.value.re),
            1e-8 * 64.0 * PI.powi(4),
        );
        checks.push(
            "sphere-single-layer-s1",
            64.0 * PI * PI / 3.0,
            beta_single_layer(&sphere, c(1.0), 32).map(|b| b.value.re),
            1e-7 * 64.0 * PI * PI / 3.0,
        );
        checks.push("circle-quadrature-extrapolation-pole1", -4.0 * PI, quadrature_residue(&circle, 64), 0.05 * 4.0 * PI);
    }
    let pass = checks.0.iter().all(|c| c.pass);
    VerifyReport { checks: checks.0, pass }
}
