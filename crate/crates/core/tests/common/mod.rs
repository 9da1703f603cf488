#![allow(dead_code)]

use brylinski_core::{FourierMode, ParamSurface, PlaneCurve};
use nalgebra::{Matrix2, Matrix3, Rotation3, Unit, Vector2, Vector3};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A unit circle with small modes 2..=4 added; always regular.
pub fn random_curve(rng: &mut StdRng) -> PlaneCurve {
    let mut modes = vec![FourierMode { k: 1, p: 1.0, q: 0.0, r: 0.0, w: 1.0 }];
    for k in 2..=4u32 {
        let a = 0.08 / (k * k) as f64;
        modes.push(FourierMode {
            k,
            p: rng.gen_range(-a..a),
            q: rng.gen_range(-a..a),
            r: rng.gen_range(-a..a),
            w: rng.gen_range(-a..a),
        });
    }
    PlaneCurve::new(modes).unwrap()
}

pub fn rotation2(angle: f64) -> Matrix2<f64> {
    let (s, c) = angle.sin_cos();
    Matrix2::new(c, -s, s, c)
}

pub fn rotation3(axis: Vector3<f64>, angle: f64) -> Matrix3<f64> {
    *Rotation3::from_axis_angle(&Unit::new_normalize(axis), angle).matrix()
}

pub fn rigid_curve(curve: &PlaneCurve) -> PlaneCurve {
    curve.transformed(&rotation2(0.7), &Vector2::new(1.5, -0.4)).unwrap()
}

pub fn rigid_surface(surface: &ParamSurface) -> ParamSurface {
    surface.transformed(&rotation3(Vector3::new(1.0, 2.0, -0.5), 1.1), &Vector3::new(0.3, -2.0, 1.0)).unwrap()
}

pub fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / (1.0 + b.abs())
}

/// Adaptive Gauss–Legendre: bisect until the 10- and 20-point rules
/// agree.
pub fn adaptive<F: Fn(f64) -> f64 + Copy>(f: F, a: f64, b: f64, tol: f64) -> f64 {
    fn gl(f: &dyn Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
        let (x, w) = legendre(n);
        let (h, m) = (0.5 * (b - a), 0.5 * (b + a));
        x.iter().zip(&w).map(|(&t, &wt)| wt * f(m + h * t)).sum::<f64>() * h
    }
    fn go(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
        let coarse = gl(f, a, b, 10);
        let fine = gl(f, a, b, 20);
        if (fine - coarse).abs() <= tol || depth > 40 {
            return fine;
        }
        let m = 0.5 * (a + b);
        go(f, a, m, 0.5 * tol, depth + 1) + go(f, m, b, 0.5 * tol, depth + 1)
    }
    go(&f, a, b, tol, 0)
}

/// Legendre nodes by Newton iteration from Chebyshev guesses.
pub fn legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = Vec::with_capacity(n);
    let mut w = Vec::with_capacity(n);
    for i in 0..n {
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, z);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * z * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (z * p1 - p0) / (z * z - 1.0);
            let dz = p1 / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        x.push(z);
        w.push(2.0 / ((1.0 - z * z) * dp * dp));
    }
    (x, w)
}
