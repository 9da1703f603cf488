//! Closed plane curves given by finite Fourier series.

use std::fmt::Write as _;
use std::path::Path;

use nalgebra::{Matrix2, Vector2};

use crate::error::{Error, Result};
use crate::numerics::series::Series;
use crate::numerics::QuadratureRule;

/// Highest derivative order available from [`PlaneCurve::derivative`].
pub const MAX_DERIVATIVE: usize = 9;

/// Speed below which a curve counts as singular.
pub const MIN_SPEED: f64 = 1e-12;

const REGULARITY_GRID: usize = 1024;

/// One Fourier mode: `x += p cos kt + q sin kt`, `y += r cos kt + w sin kt`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourierMode {
    pub k: u32,
    pub p: f64,
    pub q: f64,
    pub r: f64,
    pub w: f64,
}

/// A closed, regular, 2π-periodic plane curve.
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneCurve {
    modes: Vec<FourierMode>,
}

impl PlaneCurve {
    /// Build a curve from modes; duplicate wave numbers are rejected and the
    /// curve is checked for regularity on a 1024-point grid.
    pub fn new(mut modes: Vec<FourierMode>) -> Result<Self> {
        modes.sort_by_key(|m| m.k);
        for pair in modes.windows(2) {
            if pair[0].k == pair[1].k {
                return Err(Error::Domain(format!("duplicate Fourier mode k = {}", pair[0].k)));
            }
        }
        for m in &modes {
            if ![m.p, m.q, m.r, m.w].iter().all(|v| v.is_finite()) {
                return Err(Error::Domain(format!("non-finite coefficient in mode k = {}", m.k)));
            }
        }
        let curve = Self { modes };
        for j in 0..REGULARITY_GRID {
            let t = 2.0 * std::f64::consts::PI * j as f64 / REGULARITY_GRID as f64;
            curve.check_regular(t)?;
        }
        Ok(curve)
    }

    pub fn circle(radius: f64) -> Result<Self> {
        Self::ellipse(radius, radius)
    }

    /// `(a cos t, b sin t)`.
    pub fn ellipse(a: f64, b: f64) -> Result<Self> {
        if !(a > 0.0 && b > 0.0) {
            return Err(Error::Domain(format!("ellipse semi-axes must be positive (got {a}, {b})")));
        }
        Self::new(vec![FourierMode { k: 1, p: a, q: 0.0, r: 0.0, w: b }])
    }

    pub fn modes(&self) -> &[FourierMode] {
        &self.modes
    }

    /// Parse the text format: one `k p q r w` line per mode, `#` comments.
    pub fn parse_fourier(text: &str) -> Result<Self> {
        let mut modes = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parse_err = |message: String| Error::Parse { line: idx + 1, message };
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 5 {
                return Err(parse_err(format!("expected 5 fields, found {}", fields.len())));
            }
            let k: u32 = fields[0]
                .parse()
                .map_err(|_| parse_err(format!("wave number {:?} is not a non-negative integer", fields[0])))?;
            let mut v = [0.0; 4];
            for (slot, field) in v.iter_mut().zip(&fields[1..]) {
                *slot = field
                    .parse()
                    .map_err(|_| parse_err(format!("{field:?} is not a number")))?;
            }
            modes.push(FourierMode { k, p: v[0], q: v[1], r: v[2], w: v[3] });
        }
        if modes.is_empty() {
            return Err(Error::Parse { line: 0, message: "no Fourier modes".into() });
        }
        Self::new(modes)
    }

    pub fn read_fourier(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse_fourier(&std::fs::read_to_string(path)?)
    }

    pub fn to_fourier_string(&self) -> String {
        let mut out = String::from("# k p q r w\n");
        for m in &self.modes {
            let _ = writeln!(out, "{} {:e} {:e} {:e} {:e}", m.k, m.p, m.q, m.r, m.w);
        }
        out
    }

    /// Image under `x ↦ rotation·x + translation`.
    pub fn transformed(&self, rotation: &Matrix2<f64>, translation: &Vector2<f64>) -> Result<Self> {
        let mut modes: Vec<FourierMode> = self
            .modes
            .iter()
            .map(|m| {
                let c = rotation * Vector2::new(m.p, m.r);
                let s = rotation * Vector2::new(m.q, m.w);
                FourierMode { k: m.k, p: c.x, q: s.x, r: c.y, w: s.y }
            })
            .collect();
        match modes.iter_mut().find(|m| m.k == 0) {
            Some(m) => {
                m.p += translation.x;
                m.r += translation.y;
            }
            None => modes.push(FourierMode { k: 0, p: translation.x, q: 0.0, r: translation.y, w: 0.0 }),
        }
        Self::new(modes)
    }

    pub fn scaled(&self, lambda: f64) -> Result<Self> {
        if !(lambda > 0.0) {
            return Err(Error::Domain(format!("scale factor must be positive (got {lambda})")));
        }
        self.transformed(&Matrix2::from_diagonal_element(lambda), &Vector2::zeros())
    }

    /// Same curve traversed backwards, `t ↦ -t`.
    pub fn reversed(&self) -> Self {
        let modes = self
            .modes
            .iter()
            .map(|m| FourierMode { q: -m.q, w: -m.w, ..*m })
            .collect();
        Self { modes }
    }

    /// Radius if the curve is a round circle traversed once.
    pub fn circle_radius(&self) -> Option<f64> {
        let mut first = None;
        for m in &self.modes {
            match m.k {
                0 => {}
                1 => first = Some(m),
                _ if [m.p, m.q, m.r, m.w].iter().all(|v| *v == 0.0) => {}
                _ => return None,
            }
        }
        let m = first?;
        let c = Vector2::new(m.p, m.r);
        let s = Vector2::new(m.q, m.w);
        let scale = c.norm().max(s.norm());
        let tol = 1e-13 * scale;
        if (c.norm() - s.norm()).abs() <= tol && c.dot(&s).abs() <= tol * scale {
            Some(c.norm())
        } else {
            None
        }
    }

    pub fn position(&self, t: f64) -> Vector2<f64> {
        self.derivative(t, 0)
    }

    /// `γ^{(order)}(t)` for `order ≤ 9`.
    pub fn derivative(&self, t: f64, order: usize) -> Vector2<f64> {
        assert!(order <= MAX_DERIVATIVE, "derivative order {order} exceeds {MAX_DERIVATIVE}");
        let mut acc = Vector2::zeros();
        for m in &self.modes {
            if m.k == 0 {
                if order == 0 {
                    acc += Vector2::new(m.p, m.r);
                }
                continue;
            }
            let k = m.k as f64;
            let (s, c) = (k * t).sin_cos();
            // d^n/dt^n of (cos, sin) cycles with period 4
            let (dc, ds) = match order % 4 {
                0 => (c, s),
                1 => (-s, c),
                2 => (-c, -s),
                _ => (s, -c),
            };
            let f = k.powi(order as i32);
            acc += f * Vector2::new(m.p * dc + m.q * ds, m.r * dc + m.w * ds);
        }
        acc
    }

    /// `γ(t + tau) - γ(t)` without cancellation for small `tau`.
    pub fn chord(&self, t: f64, tau: f64) -> Vector2<f64> {
        let mut acc = Vector2::zeros();
        for m in self.modes.iter().filter(|m| m.k != 0) {
            let k = m.k as f64;
            let half = 0.5 * k * tau;
            let sh = half.sin();
            let (sm, cm) = (k * t + half).sin_cos();
            let dc = -2.0 * sh * sm;
            let ds = 2.0 * sh * cm;
            acc += Vector2::new(m.p * dc + m.q * ds, m.r * dc + m.w * ds);
        }
        acc
    }

    pub fn speed(&self, t: f64) -> f64 {
        self.derivative(t, 1).norm()
    }

    fn check_regular(&self, t: f64) -> Result<f64> {
        let speed = self.speed(t);
        if !(speed >= MIN_SPEED) {
            return Err(Error::SingularCurve { t, speed });
        }
        Ok(speed)
    }

    /// Unit tangent, outward normal (tangent turned clockwise) and speed.
    pub fn frame(&self, t: f64) -> Result<(Vector2<f64>, Vector2<f64>, f64)> {
        let d1 = self.derivative(t, 1);
        let speed = self.check_regular(t)?;
        let tangent = d1 / speed;
        Ok((tangent, rot_cw(&tangent), speed))
    }

    /// Taylor coefficients `γ^{(k)}(t)/k!`, `k = 0..=order`, projected on `axis`.
    fn taylor_along(&self, t: f64, order: usize, axis: &Vector2<f64>) -> Series {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut fact = 1.0;
        for k in 0..=order {
            if k > 0 {
                fact *= k as f64;
            }
            coeffs.push(self.derivative(t, k).dot(axis) / fact);
        }
        Series::from_coeffs(order, &coeffs)
    }
}

pub(crate) fn rot_cw(v: &Vector2<f64>) -> Vector2<f64> {
    Vector2::new(v.y, -v.x)
}

pub(crate) fn rot_ccw(v: &Vector2<f64>) -> Vector2<f64> {
    Vector2::new(-v.y, v.x)
}

/// Signed curvature `κ_0` and its arc-length derivatives `κ_1..κ_order`.
///
/// `κ_0 = (x'y'' - y'x'')/|γ'|³`, positive on counterclockwise circles.
pub fn curvature_jet(curve: &PlaneCurve, t: f64, order: usize) -> Result<Vec<f64>> {
    if order > 5 {
        return Err(Error::Domain(format!("curvature jet order {order} exceeds 5")));
    }
    curve.check_regular(t)?;
    let n = order + 2;
    let x = curve.taylor_along(t, n + 1, &Vector2::x());
    let y = curve.taylor_along(t, n + 1, &Vector2::y());
    let (x1, y1) = (x.derivative(), y.derivative());
    let (x2, y2) = (x1.derivative(), y1.derivative());
    let speed_sq = &(&x1 * &x1) + &(&y1 * &y1);
    let inv_speed = speed_sq.powf(-0.5);
    let mut kappa = &(&(&x1 * &y2) - &(&y1 * &x2)) * &speed_sq.powf(-1.5);
    let mut out = Vec::with_capacity(order + 1);
    for _ in 0..=order {
        out.push(kappa.coeff(0));
        kappa = &kappa.derivative() * &inv_speed;
    }
    Ok(out)
}

/// Local graph description of a curve over its tangent line.
///
/// Near `point` the curve is `point + x·tangent - f(x)·normal` with
/// `f(x) = a_2 x² + … + a_7 x⁷ + O(x⁸)`; `normal` is the outward normal, so
/// `f` is positive on convex curves traversed counterclockwise.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveJet {
    pub point: Vector2<f64>,
    pub tangent: Vector2<f64>,
    pub normal: Vector2<f64>,
    /// `a_2..a_7`.
    pub a: [f64; 6],
    pub(crate) a8: f64,
}

impl CurveJet {
    /// Graph coefficient `a_i` for `2 ≤ i ≤ 7`.
    pub fn coeff(&self, i: usize) -> f64 {
        self.a[i - 2]
    }

    /// Evaluate the truncated graph function.
    pub fn graph(&self, x: f64) -> f64 {
        self.a.iter().rev().fold(0.0, |acc, &c| (acc + c) * x) * x
    }
}

/// Graph jet by reverting the tangential coordinate to order 8.
pub fn graph_jet(curve: &PlaneCurve, t: f64) -> Result<CurveJet> {
    const ORDER: usize = 8;
    let (tangent, normal, _) = curve.frame(t)?;
    let axis = rot_ccw(&tangent);
    let mut along = curve.taylor_along(t, ORDER, &tangent);
    let mut height = curve.taylor_along(t, ORDER, &axis);
    // drop the base point
    along = &along - &Series::constant(ORDER, along.coeff(0));
    height = &height - &Series::constant(ORDER, height.coeff(0));
    let f = height.compose(&along.revert());
    let mut a = [0.0; 6];
    for (i, slot) in a.iter_mut().enumerate() {
        *slot = f.coeff(i + 2);
    }
    Ok(CurveJet {
        point: curve.position(t),
        tangent,
        normal,
        a,
        a8: f.coeff(8),
    })
}

/// A quadrature node on a curve with its arc-length weight.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveNode {
    pub t: f64,
    pub weight: f64,
    pub point: Vector2<f64>,
    pub normal: Vector2<f64>,
}

#[derive(Debug, Clone)]
pub struct CurveMeasure {
    pub length: f64,
    pub nodes: Vec<CurveNode>,
}

/// Arc-length weighted nodes `|γ'(t_j)| w_j`.
pub fn curve_measure(curve: &PlaneCurve, rule: &QuadratureRule) -> Result<CurveMeasure> {
    let nodes = rule
        .iter()
        .map(|(t, w)| {
            let (_, normal, speed) = curve.frame(t)?;
            Ok(CurveNode { t, weight: speed * w, point: curve.position(t), normal })
        })
        .collect::<Result<Vec<_>>>()?;
    let length = nodes.iter().map(|n| n.weight).sum();
    Ok(CurveMeasure { length, nodes })
}
