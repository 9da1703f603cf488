//! Command-line front end: shape arguments, beta scans, residue reports and
//! the verification harness.

// `!(x > 0.0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod scan;
pub mod shape_arg;
pub mod verify;

use std::fmt;

pub use scan::{parse_range, run_scan, write_csv, ScanArgs, ScanRow};
pub use shape_arg::ShapeArg;
pub use verify::{run_verify, Check, Level, VerifyReport};

/// Failure of a subcommand, mapped to the documented exit codes.
#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or input files (exit 2).
    Usage(String),
    /// A numerical domain error such as leaving the convergence region (exit 3).
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

/// Default outer node count: 512 on curves, 32 on surfaces.
pub fn default_nodes(shape: &brylinski_core::Shape) -> usize {
    match shape.dim() {
        1 => 512,
        _ => 32,
    }
}
