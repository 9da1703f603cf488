use crate::closed_form::{SphereSpec, Variant};
use crate::curve::PlaneCurve;
use crate::error::Result;
use crate::surface::ParamSurface;

/// A closed hypersurface: a plane curve or a surface in 3-space.
#[derive(Debug, Clone, PartialEq)]
pub enum Shape {
    Curve(PlaneCurve),
    Surface(ParamSurface),
}

impl Shape {
    /// Dimension of the hypersurface itself (1 or 2).
    pub fn dim(&self) -> usize {
        match self {
            Shape::Curve(_) => 1,
            Shape::Surface(_) => 2,
        }
    }

    /// Ambient dimension `d`.
    pub fn ambient_dim(&self) -> usize {
        self.dim() + 1
    }

    /// The matching closed form, for round circles and spheres.
    pub fn sphere_spec(&self) -> Option<SphereSpec> {
        let (d, radius) = match self {
            Shape::Curve(c) => (2, c.circle_radius()?),
            Shape::Surface(s) => (3, s.sphere_radius()?),
        };
        SphereSpec::new(d, radius, Variant::Corrected).ok()
    }

    pub fn scaled(&self, lambda: f64) -> Result<Self> {
        Ok(match self {
            Shape::Curve(c) => Shape::Curve(c.scaled(lambda)?),
            Shape::Surface(s) => Shape::Surface(s.scaled(lambda)?),
        })
    }
}

impl From<PlaneCurve> for Shape {
    fn from(c: PlaneCurve) -> Self {
        Shape::Curve(c)
    }
}

impl From<ParamSurface> for Shape {
    fn from(s: ParamSurface) -> Self {
        Shape::Surface(s)
    }
}
