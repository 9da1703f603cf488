mod common;

use brylinski_core::{
    beta_double_layer, beta_sample, beta_single_layer, sphere_beta, Layer, ParamSurface, PlaneCurve, Shape,
    SphereSpec,
};
use common::{rigid_curve, rigid_surface, rng};
use num_complex::Complex64;
use std::f64::consts::PI;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * (1e-12 + b.norm())
}

#[test]
fn circle_matches_closed_form() {
    let circle = Shape::from(PlaneCurve::circle(1.3).unwrap());
    let spec = SphereSpec::corrected(2, 1.3).unwrap();
    for s in [c(2.5, 0.0), c(3.0, 0.0), c(4.2, 0.0), c(3.0, 2.0), c(2.0, -5.0)] {
        let got = beta_double_layer(&circle, s, 512).unwrap().value;
        let want = sphere_beta(&spec, s).unwrap();
        assert!((got - want).norm() < 1e-8 * (1.0 + want.norm()), "s = {s}: {got} vs {want}");
    }
}

#[test]
fn sphere_matches_closed_form() {
    let sphere = Shape::from(ParamSurface::sphere(0.8).unwrap());
    let spec = SphereSpec::corrected(3, 0.8).unwrap();
    for s in [c(1.0, 0.0), c(1.7, 0.0), c(3.0, 0.0), c(2.0, 1.5)] {
        let got = beta_double_layer(&sphere, s, 32).unwrap().value;
        let want = sphere_beta(&spec, s).unwrap();
        assert!((got - want).norm() < 1e-8 * (1.0 + want.norm()), "s = {s}: {got} vs {want}");
    }
}

#[test]
fn single_layer_examples() {
    let sphere = Shape::from(ParamSurface::sphere(1.0).unwrap());
    let v = beta_single_layer(&sphere, c(1.0, 0.0), 32).unwrap().value;
    assert!((v.re - 64.0 * PI * PI / 3.0).abs() < 1e-7 * v.re);
    let torus = ParamSurface::torus(2.0, 1.0).unwrap();
    let area = torus.area().unwrap();
    let v = beta_single_layer(&Shape::from(torus), c(0.0, 0.0), 16).unwrap().value;
    assert!((v.re - area * area).abs() < 1e-10 * area * area);
}

#[test]
fn scaling_law() {
    let curve = Shape::from(common::random_curve(&mut rng(31)));
    let surface = Shape::from(ParamSurface::torus(2.0, 0.7).unwrap());
    for (shape, n, d) in [(&curve, 128, 2), (&surface, 16, 3)] {
        for lambda in [0.5, 2.0] {
            let big = shape.scaled(lambda).unwrap();
            for s in [c(2.6, 0.0), c(3.3, -1.0)] {
                let want = beta_double_layer(shape, s, n).unwrap().value
                    * c(lambda, 0.0).powc(s + 2.0 * d as f64 - 4.0);
                assert!(close(beta_double_layer(&big, s, n).unwrap().value, want, 1e-8));
            }
        }
    }
}

#[test]
fn rigid_motion_invariance() {
    let curve = common::random_curve(&mut rng(32));
    let pairs = [
        (Shape::from(curve.clone()), Shape::from(rigid_curve(&curve)), 128),
        (
            Shape::from(ParamSurface::ellipsoid(1.5, 1.0, 0.8).unwrap()),
            Shape::from(rigid_surface(&ParamSurface::ellipsoid(1.5, 1.0, 0.8).unwrap())),
            16,
        ),
    ];
    for (a, b, n) in &pairs {
        for layer in [Layer::Single, Layer::Double] {
            let s = c(2.5, 0.5);
            let (x, y) = (beta_sample(a, layer, s, *n).unwrap(), beta_sample(b, layer, s, *n).unwrap());
            assert!(close(y.value, x.value, 1e-9));
        }
    }
}

#[test]
fn conjugate_symmetry() {
    let shapes =
        [Shape::from(PlaneCurve::ellipse(2.0, 1.0).unwrap()), Shape::from(ParamSurface::torus(2.0, 1.0).unwrap())];
    for (shape, n) in shapes.iter().zip([128, 16]) {
        let s = c(2.4, 3.0);
        let a = beta_double_layer(shape, s, n).unwrap().value;
        let b = beta_double_layer(shape, s.conj(), n).unwrap().value;
        assert!(close(b, a.conj(), 1e-12));
    }
}

#[test]
fn node_halving_error_decreases() {
    let ellipse = Shape::from(PlaneCurve::ellipse(2.0, 1.0).unwrap());
    for s in [c(2.5, 0.0), c(3.7, 1.0)] {
        let errs: Vec<f64> =
            [32, 64, 128, 256].iter().map(|&n| beta_double_layer(&ellipse, s, n).unwrap().error_estimate).collect();
        assert!(errs.windows(2).all(|w| w[1] < w[0]), "{errs:?}");
    }
    let sphere = Shape::from(ParamSurface::ellipsoid(1.2, 1.0, 0.9).unwrap());
    let errs: Vec<f64> =
        [16, 24, 32].iter().map(|&n| beta_double_layer(&sphere, c(1.5, 0.0), n).unwrap().error_estimate).collect();
    assert!(errs.windows(2).all(|w| w[1] < w[0]), "{errs:?}");
}

#[test]
fn divergence_identity_at_two() {
    let shapes: [(Shape, usize, f64); 3] = [
        (PlaneCurve::ellipse(2.0, 1.0).unwrap().into(), 128, 9.688_448_220_547_675),
        (ParamSurface::torus(2.0, 1.0).unwrap().into(), 32, 8.0 * PI * PI),
        (ParamSurface::ellipsoid(1.5, 1.0, 0.8).unwrap().into(), 64, 14.930_856_544_871_241),
    ];
    for (shape, n, measure) in &shapes {
        let v = beta_double_layer(shape, c(2.0, 0.0), *n).unwrap().value;
        assert!(v.norm() < 1e-8 * measure * measure, "{v}");
    }
}
