//! Truncated power series in one and two variables.

use std::ops::{Add, Mul, Neg, Sub};

/// Univariate series `Σ c_k t^k`, truncated after `t^order`.
#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    c: Vec<f64>,
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Self { c: vec![0.0; order + 1] }
    }

    pub fn from_coeffs(order: usize, coeffs: &[f64]) -> Self {
        let mut s = Self::zero(order);
        for (k, &v) in coeffs.iter().enumerate().take(order + 1) {
            s.c[k] = v;
        }
        s
    }

    pub fn constant(order: usize, v: f64) -> Self {
        Self::from_coeffs(order, &[v])
    }

    /// The identity series `t`.
    pub fn variable(order: usize) -> Self {
        Self::from_coeffs(order, &[0.0, 1.0])
    }

    pub fn order(&self) -> usize {
        self.c.len() - 1
    }

    pub fn coeff(&self, k: usize) -> f64 {
        self.c.get(k).copied().unwrap_or(0.0)
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.c
    }

    pub fn scale(&self, a: f64) -> Self {
        Self { c: self.c.iter().map(|v| v * a).collect() }
    }

    /// Term-wise derivative; the top coefficient becomes 0.
    pub fn derivative(&self) -> Self {
        let n = self.order();
        let mut out = Self::zero(n);
        for k in 1..=n {
            out.c[k - 1] = k as f64 * self.c[k];
        }
        out
    }

    /// `self^p` for a series with nonzero constant term (J. C. P. Miller's
    /// recurrence).
    pub fn powf(&self, p: f64) -> Self {
        let n = self.order();
        let a0 = self.c[0];
        assert!(a0 != 0.0, "powf needs a nonzero constant term");
        let mut b = vec![0.0; n + 1];
        b[0] = a0.powf(p);
        for k in 1..=n {
            let mut acc = 0.0;
            for j in 1..=k {
                acc += ((p + 1.0) * j as f64 - k as f64) * self.c[j] * b[k - j];
            }
            b[k] = acc / (k as f64 * a0);
        }
        Self { c: b }
    }

    pub fn recip(&self) -> Self {
        self.powf(-1.0)
    }

    /// `self(inner(t))` where `inner` has zero constant term.
    pub fn compose(&self, inner: &Series) -> Self {
        debug_assert!(inner.coeff(0) == 0.0);
        let n = self.order().min(inner.order());
        let mut acc = Self::zero(n);
        for k in (0..=n).rev() {
            acc = &acc * inner;
            acc.c[0] += self.c[k];
        }
        acc
    }

    /// Compositional inverse of a series `a_1 t + a_2 t² + …` with `a_1 ≠ 0`.
    pub fn revert(&self) -> Self {
        let n = self.order();
        let a1 = self.c[1];
        assert!(self.c[0] == 0.0 && a1 != 0.0, "revert needs a_0 = 0, a_1 != 0");
        let mut nonlinear = self.clone();
        nonlinear.c[1] = 0.0;
        let x = Self::variable(n);
        let mut t = x.scale(1.0 / a1);
        // each pass fixes one more coefficient
        for _ in 1..n {
            t = (&x - &nonlinear.compose(&t)).scale(1.0 / a1);
        }
        t
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        Series { c: (0..=n).map(|k| self.c[k] + rhs.c[k]).collect() }
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        Series { c: (0..=n).map(|k| self.c[k] - rhs.c[k]).collect() }
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        self.scale(-1.0)
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        let mut out = Series::zero(n);
        for i in 0..=n {
            if self.c[i] == 0.0 {
                continue;
            }
            for j in 0..=n - i {
                out.c[i + j] += self.c[i] * rhs.c[j];
            }
        }
        out
    }
}

/// Total degree kept by [`Series2`].
pub const DEG2: usize = 4;

/// Bivariate series `Σ c_ij t1^i t2^j`, truncated at total degree [`DEG2`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Series2 {
    c: [[f64; DEG2 + 1]; DEG2 + 1],
}

impl Series2 {
    pub fn zero() -> Self {
        Self { c: [[0.0; DEG2 + 1]; DEG2 + 1] }
    }

    pub fn constant(v: f64) -> Self {
        let mut s = Self::zero();
        s.c[0][0] = v;
        s
    }

    /// `t1` for `index == 0`, `t2` for `index == 1`.
    pub fn variable(index: usize) -> Self {
        let mut s = Self::zero();
        if index == 0 {
            s.c[1][0] = 1.0;
        } else {
            s.c[0][1] = 1.0;
        }
        s
    }

    pub fn coeff(&self, i: usize, j: usize) -> f64 {
        if i + j <= DEG2 {
            self.c[i][j]
        } else {
            0.0
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        assert!(i + j <= DEG2, "degree {} exceeds truncation", i + j);
        self.c[i][j] = v;
    }

    pub fn scale(&self, a: f64) -> Self {
        let mut out = *self;
        for row in out.c.iter_mut() {
            for v in row.iter_mut() {
                *v *= a;
            }
        }
        out
    }

    /// Drop terms of total degree below 2.
    pub fn nonlinear_part(&self) -> Self {
        let mut out = *self;
        out.c[0][0] = 0.0;
        out.c[1][0] = 0.0;
        out.c[0][1] = 0.0;
        out
    }

    /// `self(u1, u2)` for inner series with zero constant term.
    pub fn compose(&self, u1: &Series2, u2: &Series2) -> Self {
        debug_assert!(u1.c[0][0] == 0.0 && u2.c[0][0] == 0.0);
        let mut p1 = [Self::constant(1.0); DEG2 + 1];
        let mut p2 = [Self::constant(1.0); DEG2 + 1];
        for k in 1..=DEG2 {
            p1[k] = p1[k - 1] * *u1;
            p2[k] = p2[k - 1] * *u2;
        }
        let mut out = Self::zero();
        for i in 0..=DEG2 {
            for j in 0..=DEG2 - i {
                if self.c[i][j] != 0.0 {
                    out = out + (p1[i] * p2[j]).scale(self.c[i][j]);
                }
            }
        }
        out
    }

    /// Invert the map `t ↦ (x1(t), x2(t))` near 0, returning `(t1(x), t2(x))`.
    /// Both components must vanish at 0 and the linear part must be invertible.
    pub fn revert_pair(x1: &Series2, x2: &Series2) -> Option<(Series2, Series2)> {
        let (a, b, c, d) = (x1.c[1][0], x1.c[0][1], x2.c[1][0], x2.c[0][1]);
        let det = a * d - b * c;
        if x1.c[0][0] != 0.0 || x2.c[0][0] != 0.0 || det.abs() < 1e-300 {
            return None;
        }
        let inv = |r1: Series2, r2: Series2| {
            ((r1.scale(d) - r2.scale(b)).scale(1.0 / det), (r2.scale(a) - r1.scale(c)).scale(1.0 / det))
        };
        let (n1, n2) = (x1.nonlinear_part(), x2.nonlinear_part());
        let (v1, v2) = (Self::variable(0), Self::variable(1));
        let (mut t1, mut t2) = inv(v1, v2);
        for _ in 1..DEG2 {
            let r1 = v1 - n1.compose(&t1, &t2);
            let r2 = v2 - n2.compose(&t1, &t2);
            (t1, t2) = inv(r1, r2);
        }
        Some((t1, t2))
    }
}

impl Add for Series2 {
    type Output = Series2;
    fn add(mut self, rhs: Series2) -> Series2 {
        for i in 0..=DEG2 {
            for j in 0..=DEG2 - i {
                self.c[i][j] += rhs.c[i][j];
            }
        }
        self
    }
}

impl Sub for Series2 {
    type Output = Series2;
    fn sub(self, rhs: Series2) -> Series2 {
        self + rhs.scale(-1.0)
    }
}

impl Mul for Series2 {
    type Output = Series2;
    fn mul(self, rhs: Series2) -> Series2 {
        let mut out = Series2::zero();
        for i in 0..=DEG2 {
            for j in 0..=DEG2 - i {
                let a = self.c[i][j];
                if a == 0.0 {
                    continue;
                }
                let rem = DEG2 - i - j;
                for k in 0..=rem {
                    for l in 0..=rem - k {
                        out.c[i + k][j + l] += a * rhs.c[k][l];
                    }
                }
            }
        }
        out
    }
}
