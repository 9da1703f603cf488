mod common;

use brylinski_core::{
    curvature_jet, curve_measure, graph_jet, graph_jet_from_chart, invariant_monomials, surface_graph_jet, ChartJet,
    InvariantMonomials, ParamSurface, PlaneCurve, QuadratureRule,
};
use common::{adaptive, rel, rigid_curve, rigid_surface, rng};
use proptest::prelude::*;
use rand::Rng;
use std::f64::consts::PI;

/// `κ_0..κ_5` as polynomials in `a_2..a_7`.
fn kappa_from_graph(a: &[f64; 6]) -> [f64; 6] {
    let [a2, a3, a4, a5, a6, a7] = *a;
    let a2_2 = a2 * a2;
    [
        2.0 * a2,
        6.0 * a3,
        24.0 * a4 - 24.0 * a2_2 * a2,
        120.0 * a5 - 456.0 * a2_2 * a3,
        720.0 * a6 - 16.0 * a2_2 * (24.0 * a4 - 24.0 * a2_2 * a2) - 2880.0 * a2_2 * a4 - 3456.0 * a2 * a3 * a3
            + 1440.0 * a2_2 * a2_2 * a2,
        5040.0 * a7
            - 24.0 * a2_2 * (120.0 * a5 - 432.0 * a2_2 * a3)
            - 16.0 * a2_2 * (120.0 * a5 - 456.0 * a2_2 * a3)
            - 21600.0 * a2_2 * a5
            - 180.0 * a2 * a3 * (24.0 * a4 - 24.0 * a2_2 * a2)
            - 52992.0 * a2 * a3 * a4
            - 10368.0 * a3 * a3 * a3
            + 65664.0 * a2_2 * a2_2 * a3,
    ]
}

#[test]
fn kappa_graph_relations_on_random_curves() {
    let mut r = rng(5);
    for _ in 0..20 {
        let curve = common::random_curve(&mut r);
        let t = r.gen_range(0.0..2.0 * PI);
        let k = curvature_jet(&curve, t, 5).unwrap();
        let want = kappa_from_graph(&graph_jet(&curve, t).unwrap().a);
        for i in 0..6 {
            assert!(rel(k[i], want[i]) < 1e-9, "κ{i} at t = {t}: {} vs {}", k[i], want[i]);
        }
    }
}

#[test]
fn circle_jets() {
    for radius in [0.5, 1.0, 3.0] {
        let c = PlaneCurve::circle(radius).unwrap();
        let jet = graph_jet(&c, 0.9).unwrap();
        // R - sqrt(R² - x²) = x²/(2R) + x⁴/(8R³) + x⁶/(16R⁵)
        let want = [0.5 / radius, 0.0, 0.125 / radius.powi(3), 0.0, 0.0625 / radius.powi(5), 0.0];
        for (g, w) in jet.a.iter().zip(want) {
            assert!((g - w).abs() < 1e-12 / radius.powi(5));
        }
    }
}

#[test]
fn rigid_motion_leaves_jets_unchanged() {
    let mut r = rng(6);
    for _ in 0..5 {
        let curve = common::random_curve(&mut r);
        let moved = rigid_curve(&curve);
        let t = r.gen_range(0.0..2.0 * PI);
        let (j0, j1) = (graph_jet(&curve, t).unwrap(), graph_jet(&moved, t).unwrap());
        for (a, b) in j0.a.iter().zip(&j1.a) {
            assert!((a - b).abs() < 1e-10 * (1.0 + a.abs()));
        }
        let (k0, k1) = (curvature_jet(&curve, t, 5).unwrap(), curvature_jet(&moved, t, 5).unwrap());
        for (a, b) in k0.iter().zip(&k1) {
            assert!((a - b).abs() < 1e-10 * (1.0 + a.abs()));
        }
    }
}

#[test]
fn reversal_flips_even_derivatives_of_curvature() {
    let mut r = rng(7);
    let curve = common::random_curve(&mut r);
    let back = curve.reversed();
    for t in [0.3, 2.0, 4.4] {
        let k = curvature_jet(&curve, t, 5).unwrap();
        let kb = curvature_jet(&back, -t, 5).unwrap();
        for i in 0..6 {
            let sign = if i % 2 == 0 { -1.0 } else { 1.0 };
            assert!((kb[i] - sign * k[i]).abs() < 1e-10 * (1.0 + k[i].abs()), "κ{i}");
        }
        let even = |k: &[f64]| {
            [
                k[0] * k[0],
                k[1] * k[1],
                k[0] * k[2],
                k[0].powi(3) * k[2],
                k[2] * k[2],
                k[1] * k[3],
                k[0] * k[4],
            ]
        };
        for (a, b) in even(&k).iter().zip(even(&kb)) {
            assert!((a - b).abs() < 1e-10 * (1.0 + a.abs()));
        }
    }
}

#[test]
fn arc_length_against_adaptive_quadrature() {
    let mut r = rng(8);
    for _ in 0..3 {
        let curve = common::random_curve(&mut r);
        let rule = QuadratureRule::periodic_trapezoid(256).unwrap();
        let length = curve_measure(&curve, &rule).unwrap().length;
        let c2 = &curve;
        let oracle = adaptive(move |t| c2.speed(t), 0.0, 2.0 * PI, 1e-13);
        assert!(rel(length, oracle) < 1e-12);
    }
    let e = PlaneCurve::ellipse(2.0, 1.0).unwrap();
    let length = curve_measure(&e, &QuadratureRule::periodic_trapezoid(128).unwrap()).unwrap().length;
    assert!((length - 9.688_448_220_547_675).abs() < 1e-12);
}

#[test]
fn fourier_file_roundtrip() {
    let mut r = rng(9);
    let curve = common::random_curve(&mut r);
    let text = curve.to_fourier_string();
    let back = PlaneCurve::parse_fourier(&format!("# comment\n{text}")).unwrap();
    assert_eq!(back, curve);
}

fn monomials(m: &InvariantMonomials) -> [f64; 11] {
    [m.h0, m.h0_sq, m.h1, m.h0_4, m.h1_sq, m.h0_sq_h1, m.h2, m.h0_h3, m.h4, m.h5, m.h6]
}

fn test_surfaces() -> Vec<ParamSurface> {
    vec![ParamSurface::torus(2.0, 1.0).unwrap(), ParamSurface::ellipsoid(1.5, 1.0, 0.8).unwrap()]
}

#[test]
fn monomials_invariant_under_frame_rotation_and_flip() {
    let mut r = rng(10);
    for surface in test_surfaces() {
        for _ in 0..10 {
            let (t1, t2) = (r.gen_range(0.2..2.9), r.gen_range(0.0..2.0 * PI));
            let chart = ChartJet::of(&surface, t1, t2);
            let base = graph_jet_from_chart(&chart, surface.orientation(), 0.0).unwrap();
            let h = monomials(&invariant_monomials(&base));
            let turned = graph_jet_from_chart(&chart, surface.orientation(), r.gen_range(0.0..2.0 * PI)).unwrap();
            let hr = monomials(&invariant_monomials(&turned));
            let hf = monomials(&invariant_monomials(&base.flipped()));
            // h0 itself is odd under the flip
            assert!((hf[0] + h[0]).abs() < 1e-15 * (1.0 + h[0].abs()));
            for i in 0..11 {
                assert!(rel(hr[i], h[i]) < 1e-8, "field {i}: {} vs {}", hr[i], h[i]);
                if i > 0 {
                    assert_eq!(hf[i], h[i], "field {i}");
                }
            }
        }
    }
}

#[test]
fn sphere_jets() {
    for radius in [0.7, 1.0, 2.5] {
        let s = ParamSurface::sphere(radius).unwrap();
        let j = surface_graph_jet(&s, 1.1, 0.4).unwrap();
        let tol = 1e-10 / radius.powi(3);
        assert!((j.b[0] - 0.5 / radius).abs() < tol && j.b[1].abs() < tol && (j.b[2] - 0.5 / radius).abs() < tol);
        assert!(j.c.iter().all(|v| v.abs() < tol));
        let r3 = radius.powi(3);
        assert!((j.d[0] - 0.125 / r3).abs() < tol && (j.d[2] - 0.25 / r3).abs() < tol && (j.d[4] - 0.125 / r3).abs() < tol);
        assert!(j.d[1].abs() < tol && j.d[3].abs() < tol);
    }
}

#[test]
fn monomial_weights_under_scaling() {
    let weights = [1, 2, 2, 4, 4, 4, 4, 4, 4, 4, 4];
    for surface in test_surfaces() {
        for lambda in [0.5, 2.0] {
            let big = surface.scaled(lambda).unwrap();
            let h = monomials(&invariant_monomials(&surface_graph_jet(&surface, 0.8, 2.1).unwrap()));
            let hs = monomials(&invariant_monomials(&surface_graph_jet(&big, 0.8, 2.1).unwrap()));
            for i in 0..11 {
                let want = h[i] * lambda.powi(-weights[i]);
                assert!((hs[i] - want).abs() < 1e-8 * (1e-8 + want.abs()), "field {i}");
            }
        }
    }
}

#[test]
fn rigid_motion_leaves_surface_jets_unchanged() {
    for surface in test_surfaces() {
        let moved = rigid_surface(&surface);
        let (a, b) = (surface_graph_jet(&surface, 1.3, 0.2).unwrap(), surface_graph_jet(&moved, 1.3, 0.2).unwrap());
        for (x, y) in a.b.iter().chain(&a.c).chain(&a.d).zip(b.b.iter().chain(&b.c).chain(&b.d)) {
            assert!((x - y).abs() < 1e-10 * (1.0 + x.abs()));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ellipsoid_monomials_frame_invariant(
        a in 0.6f64..2.0, b in 0.6f64..2.0, c in 0.6f64..2.0,
        t1 in 0.3f64..2.8, t2 in 0.0f64..std::f64::consts::TAU, angle in 0.0f64..std::f64::consts::TAU,
    ) {
        let surface = ParamSurface::ellipsoid(a, b, c).unwrap();
        let chart = ChartJet::of(&surface, t1, t2);
        let h = monomials(&invariant_monomials(&graph_jet_from_chart(&chart, 1.0, 0.0).unwrap()));
        let hr = monomials(&invariant_monomials(&graph_jet_from_chart(&chart, 1.0, angle).unwrap()));
        for i in 0..11 {
            prop_assert!(rel(hr[i], h[i]) < 1e-8);
        }
    }

    #[test]
    fn curve_relations_hold_everywhere(seed in 0u64..1000, t in 0.0f64..std::f64::consts::TAU) {
        let curve = common::random_curve(&mut rng(seed));
        let k = curvature_jet(&curve, t, 5).unwrap();
        let want = kappa_from_graph(&graph_jet(&curve, t).unwrap().a);
        for i in 0..6 {
            prop_assert!(rel(k[i], want[i]) < 1e-9);
        }
    }
}
