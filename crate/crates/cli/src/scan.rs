use std::io::Write;

use brylinski_core::{beta_sample, sigma_min, Layer, Shape};
use num_complex::Complex64;

use crate::CliError;

#[derive(Debug, Clone)]
pub struct ScanArgs {
    pub shape: Shape,
    pub layer: Layer,
    pub s_re: Vec<f64>,
    pub s_imag: f64,
    pub nodes: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanRow {
    pub s: Complex64,
    pub value: Complex64,
    pub nodes: usize,
    pub error_estimate: f64,
}

/// `from:to:step` to the grid `from, from + step, …` up to `to`.
pub fn parse_range(text: &str) -> Result<Vec<f64>, CliError> {
    let parts: Vec<&str> = text.split(':').collect();
    let bad = || CliError::Usage(format!("range '{text}' is not of the form from:to:step"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let v: Vec<f64> = parts.iter().map(|p| p.trim().parse::<f64>()).collect::<Result<_, _>>().map_err(|_| bad())?;
    let (from, to, step) = (v[0], v[1], v[2]);
    if !v.iter().all(|x| x.is_finite()) {
        return Err(bad());
    }
    if to < from {
        return Err(CliError::Usage(format!("range '{text}' runs backwards")));
    }
    if !(step > 0.0) {
        return Err(CliError::Usage(format!("range '{text}' needs a positive step")));
    }
    let count = ((to - from) / step + 1e-9).floor() as usize + 1;
    if count > 1_000_000 {
        return Err(CliError::Usage(format!("range '{text}' has more than 10^6 points")));
    }
    Ok((0..count).map(|k| from + k as f64 * step).collect())
}

/// Evaluate every grid point; the whole grid is checked against the
/// convergence region before any quadrature runs.
pub fn run_scan(args: &ScanArgs) -> Result<Vec<ScanRow>, CliError> {
    let sigma = sigma_min(&args.shape, args.layer);
    if let Some(bad) = args.s_re.iter().find(|&&re| !(re > sigma)) {
        return Err(CliError::Domain(format!("Re s = {bad} is outside the convergence region Re s > {sigma}")));
    }
    args.s_re
        .iter()
        .map(|&re| {
            let s = Complex64::new(re, args.s_imag);
            let b = beta_sample(&args.shape, args.layer, s, args.nodes).map_err(|e| CliError::Domain(e.to_string()))?;
            Ok(ScanRow { s, value: b.value, nodes: b.node_count, error_estimate: b.error_estimate })
        })
        .collect()
}

pub fn write_csv(rows: &[ScanRow], out: &mut impl Write) -> std::io::Result<()> {
    writeln!(out, "s_re,s_im,beta_re,beta_im,nodes,err_est")?;
    for r in rows {
        writeln!(
            out,
            "{:.16e},{:.16e},{:.16e},{:.16e},{},{:.16e}",
            r.s.re, r.s.im, r.value.re, r.value.im, r.nodes, r.error_estimate
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3:3:1").unwrap(), vec![3.0]);
        assert_eq!(parse_range("1:2:0.5").unwrap(), vec![1.0, 1.5, 2.0]);
        assert_eq!(parse_range("0:0.3:0.1").unwrap().len(), 4);
        for bad in ["1:2", "2:1:1", "1:2:0", "a:b:c", "1:2:-1"] {
            assert!(parse_range(bad).is_err(), "{bad}");
        }
    }
}
