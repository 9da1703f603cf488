use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleKind {
    /// Equispaced nodes on `[0, 2π)`, equal weights.
    PeriodicTrapezoid,
    /// Gauss–Legendre nodes on `[a, b]`.
    GaussLegendre,
    /// Composite Gauss–Legendre on `(0, L]`, geometrically refined towards 0.
    GradedGaussLegendre,
}

/// A fixed set of quadrature nodes and weights on an interval.
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    kind: RuleKind,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn periodic_trapezoid(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("trapezoid rule needs at least one node".into()));
        }
        let h = 2.0 * PI / n as f64;
        Ok(Self {
            kind: RuleKind::PeriodicTrapezoid,
            nodes: (0..n).map(|j| j as f64 * h).collect(),
            weights: vec![h; n],
        })
    }

    pub fn gauss_legendre(n: usize, a: f64, b: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("Gauss-Legendre rule needs at least one node".into()));
        }
        if !(b > a) {
            return Err(Error::Domain(format!("empty interval [{a}, {b}]")));
        }
        let (x, w) = legendre_nodes(n);
        let half = 0.5 * (b - a);
        let mid = 0.5 * (b + a);
        Ok(Self {
            kind: RuleKind::GaussLegendre,
            nodes: x.iter().map(|&t| mid + half * t).collect(),
            weights: w.iter().map(|&w| half * w).collect(),
        })
    }

    pub fn kind(&self) -> RuleKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.nodes.iter().copied().zip(self.weights.iter().copied())
    }
}

/// Weighted node sum `Σ w_j f(x_j)`, accumulated in node order.
pub fn integrate_1d<F>(rule: &QuadratureRule, mut f: F) -> Result<Complex64>
where
    F: FnMut(f64) -> Result<Complex64>,
{
    let mut acc = Complex64::new(0.0, 0.0);
    for (x, w) in rule.iter() {
        acc += f(x)? * w;
    }
    Ok(acc)
}

/// Geometric refinement towards the left end of `(0, L]`.
///
/// The interval is split at `L q^{-1}, L q^{-2}, …, L q^{-levels}` (with
/// `q = ratio`) and every piece, including the innermost `(0, L q^{-levels}]`,
/// gets `points` Gauss–Legendre nodes. The left end itself is never sampled,
/// which is what the near-diagonal parts of the layer integrals need.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GradedRule {
    pub levels: usize,
    pub ratio: f64,
    pub points: usize,
}

impl GradedRule {
    pub fn new(levels: usize, ratio: f64, points: usize) -> Result<Self> {
        if points == 0 || !(ratio > 1.0) {
            return Err(Error::Domain(format!(
                "graded rule needs points >= 1 and ratio > 1 (got {points}, {ratio})"
            )));
        }
        Ok(Self { levels, ratio, points })
    }

    /// At most `n` nodes in pieces of `points` nodes (ratio 4), with as many
    /// levels as the budget allows.
    pub fn with_total(n: usize, points: usize) -> Self {
        let points = points.clamp(1, n.max(1));
        let levels = (n / points).max(1) - 1;
        Self { levels, ratio: 4.0, points }
    }

    pub fn node_count(&self) -> usize {
        (self.levels + 1) * self.points
    }

    /// Realize the rule on `(0, len]`. Nodes are ordered from the outermost
    /// piece inwards.
    pub fn on(&self, len: f64) -> Result<QuadratureRule> {
        if !(len > 0.0) {
            return Err(Error::Domain(format!("graded rule on empty interval (0, {len}]")));
        }
        let (x, w) = legendre_nodes(self.points);
        let mut nodes = Vec::with_capacity(self.node_count());
        let mut weights = Vec::with_capacity(self.node_count());
        let mut hi = len;
        for level in 0..=self.levels {
            let lo = if level == self.levels { 0.0 } else { hi / self.ratio };
            let half = 0.5 * (hi - lo);
            let mid = 0.5 * (hi + lo);
            for (&t, &wt) in x.iter().zip(&w) {
                nodes.push(mid + half * t);
                weights.push(half * wt);
            }
            hi = lo;
        }
        Ok(QuadratureRule {
            kind: RuleKind::GradedGaussLegendre,
            nodes,
            weights,
        })
    }
}

/// Gauss–Legendre nodes and weights on `[-1, 1]` by Newton iteration on the
/// three-term recurrence.
fn legendre_nodes(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut z = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..100 {
            let (p, d) = legendre_eval(n, z);
            dp = d;
            let dz = p / d;
            z -= dz;
            if dz.abs() < 1e-16 {
                let (_, d) = legendre_eval(n, z);
                dp = d;
                break;
            }
        }
        let wi = 2.0 / ((1.0 - z * z) * dp * dp);
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
    if n % 2 == 1 {
        x[n / 2] = 0.0;
    }
    (x, w)
}

fn legendre_eval(n: usize, z: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = z;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (z * p1 - p0) / (z * z - 1.0);
    (p1, dp)
}
