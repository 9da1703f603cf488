use std::str::FromStr;

use brylinski_core::{ParamSurface, PlaneCurve, Shape};

use crate::CliError;

/// `name:params` with comma-separated positional parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum ShapeArg {
    Circle(f64),
    Ellipse(f64, f64),
    Fourier(String),
    Sphere(f64),
    Ellipsoid(f64, f64, f64),
    Torus(f64, f64),
}

fn numbers(name: &str, params: &str, count: usize) -> Result<Vec<f64>, CliError> {
    let values: Vec<f64> = params
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| CliError::Usage(format!("{name}: could not parse parameters '{params}'")))?;
    if values.len() != count {
        return Err(CliError::Usage(format!("{name} takes {count} parameter(s), got {}", values.len())));
    }
    if let Some(v) = values.iter().find(|v| !(**v > 0.0 && v.is_finite())) {
        return Err(CliError::Usage(format!("{name}: dimensions must be positive (got {v})")));
    }
    Ok(values)
}

impl FromStr for ShapeArg {
    type Err = CliError;

    fn from_str(text: &str) -> Result<Self, CliError> {
        let (name, params) = text
            .split_once(':')
            .ok_or_else(|| CliError::Usage(format!("shape '{text}' is not of the form name:params")))?;
        Ok(match name {
            "circle" => ShapeArg::Circle(numbers(name, params, 1)?[0]),
            "ellipse" => {
                let v = numbers(name, params, 2)?;
                ShapeArg::Ellipse(v[0], v[1])
            }
            "fourier" if !params.is_empty() => ShapeArg::Fourier(params.to_string()),
            "sphere" => ShapeArg::Sphere(numbers(name, params, 1)?[0]),
            "ellipsoid" => {
                let v = numbers(name, params, 3)?;
                ShapeArg::Ellipsoid(v[0], v[1], v[2])
            }
            "torus" => {
                let v = numbers(name, params, 2)?;
                ShapeArg::Torus(v[0], v[1])
            }
            _ => return Err(CliError::Usage(format!("unknown shape '{text}'"))),
        })
    }
}

impl ShapeArg {
    pub fn build(&self) -> Result<Shape, CliError> {
        let usage = |e: brylinski_core::Error| CliError::Usage(e.to_string());
        Ok(match self {
            ShapeArg::Circle(r) => PlaneCurve::circle(*r).map_err(usage)?.into(),
            ShapeArg::Ellipse(a, b) => PlaneCurve::ellipse(*a, *b).map_err(usage)?.into(),
            ShapeArg::Fourier(path) => PlaneCurve::read_fourier(path)
                .map_err(|e| CliError::Usage(format!("{path}: {e}")))?
                .into(),
            ShapeArg::Sphere(r) => ParamSurface::sphere(*r).map_err(usage)?.into(),
            ShapeArg::Ellipsoid(a, b, c) => ParamSurface::ellipsoid(*a, *b, *c).map_err(usage)?.into(),
            ShapeArg::Torus(major, minor) => ParamSurface::torus(*major, *minor).map_err(usage)?.into(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar() {
        assert_eq!("circle:1".parse::<ShapeArg>().unwrap(), ShapeArg::Circle(1.0));
        assert_eq!("ellipsoid:1.5, 1,0.8".parse::<ShapeArg>().unwrap(), ShapeArg::Ellipsoid(1.5, 1.0, 0.8));
        assert_eq!("fourier:a/b.txt".parse::<ShapeArg>().unwrap(), ShapeArg::Fourier("a/b.txt".into()));
        for bad in ["circle", "circle:", "circle:-1", "torus:2", "cube:1", "ellipse:1,x", "fourier:"] {
            assert!(bad.parse::<ShapeArg>().is_err(), "{bad}");
        }
    }

    #[test]
    fn torus_needs_major_above_minor() {
        assert!("torus:1,2".parse::<ShapeArg>().unwrap().build().is_err());
    }
}
