//! Closed parametric surfaces in 3-space and their local graph jets.

use std::f64::consts::PI;

use nalgebra::{Matrix3, Vector3};

use crate::error::{Error, Result};
use crate::numerics::series::Series2;
use crate::numerics::{GradedRule, QuadratureRule};

/// Built-in surface families.
///
/// Sphere and ellipsoid use `(θ, φ)` with `x = (a sinθ cosφ, b sinθ sinφ, c cosθ)`.
/// The torus uses `(t1, t2)` = (tube angle, azimuth) with
/// `x = ((R + r cos t1) cos t2, (R + r cos t1) sin t2, r sin t1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SurfaceKind {
    Sphere { radius: f64 },
    Ellipsoid { a: f64, b: f64, c: f64 },
    Torus { major: f64, minor: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Factor {
    One,
    Cos,
    Sin,
}

impl Factor {
    fn derivative(self, t: f64, order: usize) -> f64 {
        let (s, c) = t.sin_cos();
        match self {
            Factor::One => (order == 0) as u8 as f64,
            Factor::Cos => [c, -s, -c, s][order % 4],
            Factor::Sin => [s, c, -s, -c][order % 4],
        }
    }
}

/// `coef · g1(t1) · g2(t2)`.
#[derive(Debug, Clone, Copy)]
struct ChartTerm {
    coef: Vector3<f64>,
    g1: Factor,
    g2: Factor,
}

/// A rigidly placed member of one of the built-in families.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamSurface {
    kind: SurfaceKind,
    rotation: Matrix3<f64>,
    translation: Vector3<f64>,
}

impl ParamSurface {
    pub fn new(kind: SurfaceKind) -> Result<Self> {
        let ok = match kind {
            SurfaceKind::Sphere { radius } => radius > 0.0 && radius.is_finite(),
            SurfaceKind::Ellipsoid { a, b, c } => [a, b, c].iter().all(|v| *v > 0.0 && v.is_finite()),
            SurfaceKind::Torus { major, minor } => minor > 0.0 && major > minor && major.is_finite(),
        };
        if !ok {
            return Err(Error::Domain(format!("invalid surface parameters {kind:?}")));
        }
        Ok(Self { kind, rotation: Matrix3::identity(), translation: Vector3::zeros() })
    }

    pub fn sphere(radius: f64) -> Result<Self> {
        Self::new(SurfaceKind::Sphere { radius })
    }

    pub fn ellipsoid(a: f64, b: f64, c: f64) -> Result<Self> {
        Self::new(SurfaceKind::Ellipsoid { a, b, c })
    }

    pub fn torus(major: f64, minor: f64) -> Result<Self> {
        Self::new(SurfaceKind::Torus { major, minor })
    }

    pub fn kind(&self) -> SurfaceKind {
        self.kind
    }

    /// Image under `x ↦ rotation·x + translation`; `rotation` must be orthogonal.
    pub fn transformed(&self, rotation: &Matrix3<f64>, translation: &Vector3<f64>) -> Result<Self> {
        let err = (rotation.transpose() * rotation - Matrix3::identity()).norm();
        if err > 1e-10 {
            return Err(Error::Domain(format!("transformation is not orthogonal (defect {err:e})")));
        }
        Ok(Self {
            kind: self.kind,
            rotation: rotation * self.rotation,
            translation: rotation * self.translation + translation,
        })
    }

    pub fn scaled(&self, lambda: f64) -> Result<Self> {
        if !(lambda > 0.0) {
            return Err(Error::Domain(format!("scale factor must be positive (got {lambda})")));
        }
        let kind = match self.kind {
            SurfaceKind::Sphere { radius } => SurfaceKind::Sphere { radius: lambda * radius },
            SurfaceKind::Ellipsoid { a, b, c } => SurfaceKind::Ellipsoid { a: lambda * a, b: lambda * b, c: lambda * c },
            SurfaceKind::Torus { major, minor } => SurfaceKind::Torus { major: lambda * major, minor: lambda * minor },
        };
        Ok(Self { kind, rotation: self.rotation, translation: lambda * self.translation })
    }

    /// Radius if the surface is a round sphere.
    pub fn sphere_radius(&self) -> Option<f64> {
        match self.kind {
            SurfaceKind::Sphere { radius } => Some(radius),
            SurfaceKind::Ellipsoid { a, b, c } if a == b && b == c => Some(a),
            _ => None,
        }
    }

    /// Sign turning `∂1 × ∂2` into the outward normal.
    pub fn orientation(&self) -> f64 {
        match self.kind {
            SurfaceKind::Torus { .. } => -1.0,
            _ => 1.0,
        }
    }

    /// Exact surface area.
    pub fn area(&self) -> Option<f64> {
        match self.kind {
            SurfaceKind::Sphere { radius } => Some(4.0 * PI * radius * radius),
            SurfaceKind::Torus { major, minor } => Some(4.0 * PI * PI * major * minor),
            SurfaceKind::Ellipsoid { .. } => None,
        }
    }

    fn axes(&self) -> Option<Vector3<f64>> {
        match self.kind {
            SurfaceKind::Sphere { radius } => Some(Vector3::repeat(radius)),
            SurfaceKind::Ellipsoid { a, b, c } => Some(Vector3::new(a, b, c)),
            SurfaceKind::Torus { .. } => None,
        }
    }

    fn terms(&self) -> Vec<ChartTerm> {
        use Factor::*;
        let term = |x: f64, y: f64, z: f64, g1, g2| ChartTerm { coef: Vector3::new(x, y, z), g1, g2 };
        match self.kind {
            SurfaceKind::Torus { major, minor } => vec![
                term(major, 0.0, 0.0, One, Cos),
                term(minor, 0.0, 0.0, Cos, Cos),
                term(0.0, major, 0.0, One, Sin),
                term(0.0, minor, 0.0, Cos, Sin),
                term(0.0, 0.0, minor, Sin, One),
            ],
            _ => {
                let ax = self.axes().unwrap_or_default();
                vec![
                    term(ax.x, 0.0, 0.0, Sin, Cos),
                    term(0.0, ax.y, 0.0, Sin, Sin),
                    term(0.0, 0.0, ax.z, Cos, One),
                ]
            }
        }
    }

    /// Mixed partial `∂1^i ∂2^j x(t1, t2)`.
    pub fn partial(&self, t1: f64, t2: f64, i: usize, j: usize) -> Vector3<f64> {
        let local: Vector3<f64> = self
            .terms()
            .iter()
            .map(|tm| tm.coef * (tm.g1.derivative(t1, i) * tm.g2.derivative(t2, j)))
            .sum();
        let mut x = self.rotation * local;
        if i == 0 && j == 0 {
            x += self.translation;
        }
        x
    }

    pub fn position(&self, t1: f64, t2: f64) -> Vector3<f64> {
        self.partial(t1, t2, 0, 0)
    }
}

/// Position, frame and area element at a chart point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfaceFrame {
    pub point: Vector3<f64>,
    pub normal: Vector3<f64>,
    pub e1: Vector3<f64>,
    pub e2: Vector3<f64>,
    pub area_element: f64,
}

fn frame_from_partials(
    point: Vector3<f64>,
    d1: Vector3<f64>,
    d2: Vector3<f64>,
    orientation: f64,
    at: (f64, f64),
) -> Result<SurfaceFrame> {
    let cross = d1.cross(&d2);
    let area_element = cross.norm();
    let scale = d1.norm() * d2.norm();
    if !(area_element > 1e-12 * scale.max(1e-300)) {
        return Err(Error::DegenerateChart { t1: at.0, t2: at.1, area: area_element });
    }
    let e1 = d1.normalize();
    let e2 = (d2 - e1 * e1.dot(&d2)).normalize();
    Ok(SurfaceFrame { point, normal: orientation * e1.cross(&e2), e1, e2, area_element })
}

/// Outward normal, tangent frame (`e1` along `∂1`) and area element.
pub fn surface_frame(surface: &ParamSurface, t1: f64, t2: f64) -> Result<SurfaceFrame> {
    frame_from_partials(
        surface.position(t1, t2),
        surface.partial(t1, t2, 1, 0),
        surface.partial(t1, t2, 0, 1),
        surface.orientation(),
        (t1, t2),
    )
}

/// Partial derivatives `∂1^i ∂2^j x` at one chart point, `i + j ≤ 4`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChartJet {
    pub at: (f64, f64),
    pub partials: [[Vector3<f64>; 5]; 5],
}

impl ChartJet {
    pub fn of(surface: &ParamSurface, t1: f64, t2: f64) -> Self {
        let mut partials = [[Vector3::zeros(); 5]; 5];
        for (i, row) in partials.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate().take(5 - i) {
                *slot = surface.partial(t1, t2, i, j);
            }
        }
        Self { at: (t1, t2), partials }
    }
}

/// Local graph description of a surface over its tangent plane.
///
/// Near `point` the surface is `point + u1 e1 + u2 e2 - f(u1, u2) normal`,
/// `f = b1 u1² + b2 u1u2 + b3 u2² + c1 u1³ + … + d5 u2⁴ + O(|u|⁵)`, with
/// `normal` outward. Spheres therefore have positive `b`.
#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceJet {
    pub point: Vector3<f64>,
    pub e1: Vector3<f64>,
    pub e2: Vector3<f64>,
    pub normal: Vector3<f64>,
    pub b: [f64; 3],
    pub c: [f64; 4],
    pub d: [f64; 5],
}

impl SurfaceJet {
    /// The jet of the same surface with the opposite normal.
    pub fn flipped(&self) -> Self {
        Self {
            normal: -self.normal,
            e2: -self.e2,
            b: self.b.map(|v| -v),
            c: self.c.map(|v| -v),
            d: self.d.map(|v| -v),
            ..self.clone()
        }
    }
}

/// Graph jet from chart derivatives. `orientation` turns `∂1 × ∂2` outward;
/// `frame_angle` rotates the tangent frame away from `∂1`.
pub fn graph_jet_from_chart(chart: &ChartJet, orientation: f64, frame_angle: f64) -> Result<SurfaceJet> {
    let p = &chart.partials;
    let frame = frame_from_partials(p[0][0], p[1][0], p[0][1], orientation, chart.at)?;
    let (sa, ca) = frame_angle.sin_cos();
    let e1 = ca * frame.e1 + sa * frame.e2;
    let e2 = -sa * frame.e1 + ca * frame.e2;
    let down = -frame.normal;

    let project = |axis: &Vector3<f64>| {
        let mut s = Series2::zero();
        let mut fi = 1.0;
        for i in 0..5 {
            if i > 0 {
                fi *= i as f64;
            }
            let mut fj = 1.0;
            for j in 0..5 - i {
                if j > 0 {
                    fj *= j as f64;
                }
                if i + j > 0 {
                    s.set(i, j, p[i][j].dot(axis) / (fi * fj));
                }
            }
        }
        s
    };
    let (u1, u2, z) = (project(&e1), project(&e2), project(&down));
    let (t1, t2) = Series2::revert_pair(&u1, &u2).ok_or(Error::DegenerateChart {
        t1: chart.at.0,
        t2: chart.at.1,
        area: frame.area_element,
    })?;
    let f = z.compose(&t1, &t2);
    Ok(SurfaceJet {
        point: frame.point,
        e1,
        e2,
        normal: frame.normal,
        b: [f.coeff(2, 0), f.coeff(1, 1), f.coeff(0, 2)],
        c: [f.coeff(3, 0), f.coeff(2, 1), f.coeff(1, 2), f.coeff(0, 3)],
        d: [f.coeff(4, 0), f.coeff(3, 1), f.coeff(2, 2), f.coeff(1, 3), f.coeff(0, 4)],
    })
}

/// Graph jet at a chart point, tangent frame aligned with `∂1`.
pub fn surface_graph_jet(surface: &ParamSurface, t1: f64, t2: f64) -> Result<SurfaceJet> {
    graph_jet_from_chart(&ChartJet::of(surface, t1, t2), surface.orientation(), 0.0)
}

/// Complete contractions of the second fundamental form and its first two
/// covariant derivatives at a point, as polynomials in the graph jet.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct InvariantMonomials {
    /// Mean-curvature trace `2(b1 + b3)` in the graph convention.
    pub h0: f64,
    pub h0_sq: f64,
    pub h1: f64,
    pub h0_4: f64,
    pub h1_sq: f64,
    pub h0_sq_h1: f64,
    pub h2: f64,
    pub h0_h3: f64,
    pub h4: f64,
    pub h5: f64,
    pub h6: f64,
}

pub fn invariant_monomials(jet: &SurfaceJet) -> InvariantMonomials {
    let [b1, b2, b3] = jet.b;
    let [c1, c2, c3, c4] = jet.c;
    let [d1, d2, d3, d4, d5] = jet.d;
    let (b1_2, b2_2, b3_2) = (b1 * b1, b2 * b2, b3 * b3);
    let h0 = 2.0 * (b1 + b3);
    let h0_sq = 4.0 * b3_2 + 8.0 * b1 * b3 + 4.0 * b1_2;
    let h1 = 4.0 * b3_2 + 2.0 * b2_2 + 4.0 * b1_2;
    let h0_4 = 16.0 * b3_2 * b3_2 + 64.0 * b1 * b3 * b3_2 + 96.0 * b1_2 * b3_2 + 64.0 * b1 * b1_2 * b3
        + 16.0 * b1_2 * b1_2;
    let h1_sq = 16.0 * b3_2 * b3_2 + 16.0 * b2_2 * b3_2 + 32.0 * b1_2 * b3_2 + 4.0 * b2_2 * b2_2
        + 16.0 * b1_2 * b2_2
        + 16.0 * b1_2 * b1_2;
    let h0_sq_h1 = 16.0 * b3_2 * b3_2 + 32.0 * b1 * b3 * b3_2 + 8.0 * b2_2 * b3_2 + 32.0 * b1_2 * b3_2
        + 16.0 * b1 * b2_2 * b3
        + 32.0 * b1 * b1_2 * b3
        + 8.0 * b1_2 * b2_2
        + 16.0 * b1_2 * b1_2;
    let h2 = 36.0 * c4 * c4 + 12.0 * c3 * c3 + 12.0 * c2 * c2 + 36.0 * c1 * c1;
    let h0_h3 = 48.0 * b3 * d5 + 48.0 * b1 * d5 + 16.0 * b3 * d3 + 16.0 * b1 * d3 - 48.0 * b3_2 * b3_2
        - 64.0 * b1 * b3 * b3_2
        - 32.0 * b2_2 * b3_2
        - 32.0 * b1_2 * b3_2
        - 64.0 * b1 * b2_2 * b3
        + 48.0 * d1 * b3
        - 64.0 * b1 * b1_2 * b3
        - 32.0 * b1_2 * b2_2
        + 48.0 * b1 * d1
        - 48.0 * b1_2 * b1_2;
    let h4 = 48.0 * b3 * d5 + 12.0 * b2 * d4 + 8.0 * b3 * d3 + 8.0 * b1 * d3 - 48.0 * b3_2 * b3_2
        - 48.0 * b2_2 * b3_2
        - 32.0 * b1_2 * b3_2
        - 32.0 * b1 * b2_2 * b3
        + 12.0 * b2 * d2
        - 8.0 * b2_2 * b2_2
        - 48.0 * b1_2 * b2_2
        + 48.0 * b1 * d1
        - 48.0 * b1_2 * b1_2;
    let h5 = 48.0 * b3 * d5 + 12.0 * b2 * d4 + 8.0 * b3 * d3 + 8.0 * b1 * d3 - 48.0 * b3_2 * b3_2
        - 16.0 * b1 * b3 * b3_2
        - 44.0 * b2_2 * b3_2
        - 56.0 * b1 * b2_2 * b3
        - 16.0 * b1 * b1_2 * b3
        + 12.0 * b2 * d2
        - 4.0 * b2_2 * b2_2
        - 44.0 * b1_2 * b2_2
        + 48.0 * b1 * d1
        - 48.0 * b1_2 * b1_2;
    let h6 = 36.0 * c4 * c4 + 24.0 * c2 * c4 + 4.0 * c3 * c3 + 24.0 * c1 * c3 + 4.0 * c2 * c2 + 36.0 * c1 * c1;
    InvariantMonomials { h0, h0_sq, h1, h0_4, h1_sq, h0_sq_h1, h2, h0_h3, h4, h5, h6 }
}

/// An area-weighted quadrature node.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfaceNode {
    pub t1: f64,
    pub t2: f64,
    pub weight: f64,
    pub point: Vector3<f64>,
    pub normal: Vector3<f64>,
}

/// Tensor-product area nodes with `n` azimuthal points.
///
/// Sphere and ellipsoid: `n/2` Gauss–Legendre points in `θ` (never at the
/// poles) × `n` trapezoid points in `φ`. Torus: `n/2 × n` trapezoid.
pub fn area_nodes(surface: &ParamSurface, n: usize) -> Result<Vec<SurfaceNode>> {
    if n < 4 {
        return Err(Error::Domain(format!("surface rules need at least 4 azimuthal nodes (got {n})")));
    }
    let azimuth = QuadratureRule::periodic_trapezoid(n)?;
    let first = match surface.kind {
        SurfaceKind::Torus { .. } => QuadratureRule::periodic_trapezoid(n / 2)?,
        _ => QuadratureRule::gauss_legendre(n / 2, 0.0, PI)?,
    };
    let mut nodes = Vec::with_capacity(first.len() * azimuth.len());
    for (t1, w1) in first.iter() {
        for (t2, w2) in azimuth.iter() {
            let f = surface_frame(surface, t1, t2)?;
            nodes.push(SurfaceNode { t1, t2, weight: f.area_element * w1 * w2, point: f.point, normal: f.normal });
        }
    }
    Ok(nodes)
}

/// Inner node layout for the near-singular partner integral around a point.
#[derive(Debug, Clone)]
pub(crate) struct PartnerRule {
    radial: QuadratureRule,
    angular: QuadratureRule,
    #[cfg_attr(not(test), allow(dead_code))]
    patches: usize,
}

impl PartnerRule {
    /// `n` is the outer azimuthal count; `grading` overrides the radial rule.
    pub(crate) fn new(surface: &ParamSurface, n: usize, grading: Option<GradedRule>) -> Result<Self> {
        match surface.kind {
            SurfaceKind::Torus { .. } => {
                let radial = grading.unwrap_or_else(|| default_radial(n)).on(1.0)?;
                let angular = QuadratureRule::gauss_legendre((n / 2).max(4), -1.0, 1.0)?;
                Ok(Self { radial, angular, patches: 4 })
            }
            _ => {
                let radial = grading.unwrap_or_else(|| default_radial(n)).on(PI)?;
                let angular = QuadratureRule::periodic_trapezoid(n)?;
                Ok(Self { radial, angular, patches: 1 })
            }
        }
    }

    #[cfg(test)]
    pub(crate) fn len(&self) -> usize {
        self.patches * self.radial.len() * self.angular.len()
    }
}

/// Ten-point pieces, `max(3, n/4)` levels.
fn default_radial(n: usize) -> GradedRule {
    GradedRule { levels: (n / 4).max(3), ratio: 4.0, points: 10 }
}

/// Visit every partner `v ≠ u` of the outer chart point `(t1, t2)` with
/// `(v - u, ν_v, area weight)`. The point `u` itself is never sampled.
pub(crate) fn for_each_partner<F>(surface: &ParamSurface, t1: f64, t2: f64, rule: &PartnerRule, mut f: F)
where
    F: FnMut(Vector3<f64>, Vector3<f64>, f64),
{
    match surface.kind {
        SurfaceKind::Torus { major, minor } => {
            for k in 0..4 {
                // quarter turns of the reference triangle {(ρ, ρη)}
                let (c, s) = [(1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)][k];
                for (rho, wr) in rule.radial.iter() {
                    for (eta, we) in rule.angular.iter() {
                        let d1 = PI * rho * (c - s * eta);
                        let d2 = PI * rho * (s + c * eta);
                        let (chord, normal, area) = torus_partner(major, minor, t1, t2, d1, d2);
                        f(
                            surface.rotation * chord,
                            surface.rotation * normal,
                            PI * PI * rho * wr * we * area,
                        );
                    }
                }
            }
        }
        _ => {
            let axes = surface.axes().unwrap_or_default();
            let (st, ct) = t1.sin_cos();
            let (sp, cp) = t2.sin_cos();
            let pole = Vector3::new(st * cp, st * sp, ct);
            let b1 = Vector3::new(ct * cp, ct * sp, -st);
            let b2 = Vector3::new(-sp, cp, 0.0);
            let volume = axes.x * axes.y * axes.z;
            for (th, wt) in rule.radial.iter() {
                let (sth, cth) = th.sin_cos();
                let half = (0.5 * th).sin();
                for (ph, wp) in rule.angular.iter() {
                    let (sph, cph) = ph.sin_cos();
                    let dir = cph * b1 + sph * b2;
                    let q = cth * pole + sth * dir;
                    let chord = (sth * dir - 2.0 * half * half * pole).component_mul(&axes);
                    let grad = q.component_div(&axes);
                    let g = grad.norm();
                    f(
                        surface.rotation * chord,
                        surface.rotation * (grad / g),
                        volume * g * sth * wt * wp,
                    );
                }
            }
        }
    }
}

/// Torus chord, outward normal at the partner and its area element.
fn torus_partner(major: f64, minor: f64, t1: f64, t2: f64, d1: f64, d2: f64) -> (Vector3<f64>, Vector3<f64>, f64) {
    let diff_cos = |t: f64, d: f64| -2.0 * (0.5 * d).sin() * (t + 0.5 * d).sin();
    let diff_sin = |t: f64, d: f64| 2.0 * (0.5 * d).sin() * (t + 0.5 * d).cos();
    let (v1, v2) = (t1 + d1, t2 + d2);
    let c1 = t1.cos();
    let (sv1, cv1) = v1.sin_cos();
    let (sv2, cv2) = v2.sin_cos();
    let (dc1, ds1) = (diff_cos(t1, d1), diff_sin(t1, d1));
    let (dc2, ds2) = (diff_cos(t2, d2), diff_sin(t2, d2));
    // (R + r cos v1) g(v2) - (R + r cos t1) g(t2) = (R + r cos t1) Δg + r Δcos · g(v2)
    let ring = major + minor * c1;
    let chord = Vector3::new(ring * dc2 + minor * dc1 * cv2, ring * ds2 + minor * dc1 * sv2, minor * ds1);
    let normal = Vector3::new(cv1 * cv2, cv1 * sv2, sv1);
    (chord, normal, minor * (major + minor * cv1))
}
