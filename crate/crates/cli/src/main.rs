use std::io::Write;
use std::process::ExitCode;

use brylinski_core::{residue_report, Layer};
use brylinski_cli::{default_nodes, parse_range, run_scan, run_verify, write_csv, CliError, Level, ScanArgs, ShapeArg};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "brylinski", version, about = "Beta functions of layers on closed curves and surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum LayerArg {
    Single,
    Double,
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Fast,
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate B(s) along a horizontal line and print CSV.
    Scan {
        /// circle:R, ellipse:a,b, fourier:PATH, sphere:R, ellipsoid:a,b,c or torus:R,r
        #[arg(long)]
        shape: String,
        #[arg(long, value_enum, default_value = "double")]
        layer: LayerArg,
        /// Real parts as from:to:step.
        #[arg(long)]
        s: String,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        s_imag: f64,
        /// Outer node count [default: 512 on curves, 32 on surfaces].
        #[arg(long)]
        nodes: Option<usize>,
    },
    /// Print residues at every covered pole as JSON.
    Residues {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        nodes: Option<usize>,
        /// Also extrapolate the first residue from direct quadrature.
        #[arg(long)]
        with_extrapolation: bool,
    },
    /// Re-run the acceptance checks and print a JSON report.
    Verify {
        #[arg(long, value_enum, default_value = "fast")]
        level: LevelArg,
    },
}

fn emit(text: &str) -> Result<(), CliError> {
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes()).and_then(|_| out.flush()).map_err(|e| CliError::Usage(format!("stdout: {e}")))
}

fn json<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value).map(|s| s + "\n").map_err(|e| CliError::Domain(e.to_string()))
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Scan { shape, layer, s, s_imag, nodes } => {
            let shape = shape.parse::<ShapeArg>()?.build()?;
            let s_re = parse_range(&s)?;
            if !s_imag.is_finite() {
                return Err(CliError::Usage(format!("--s-imag must be finite (got {s_imag})")));
            }
            let layer = match layer {
                LayerArg::Single => Layer::Single,
                LayerArg::Double => Layer::Double,
            };
            let nodes = nodes.unwrap_or_else(|| default_nodes(&shape));
            let rows = run_scan(&ScanArgs { shape, layer, s_re, s_imag, nodes })?;
            let mut buf = Vec::new();
            write_csv(&rows, &mut buf).map_err(|e| CliError::Usage(e.to_string()))?;
            emit(&String::from_utf8_lossy(&buf))?;
        }
        Command::Residues { shape, nodes, with_extrapolation } => {
            let shape = shape.parse::<ShapeArg>()?.build()?;
            let nodes = nodes.unwrap_or_else(|| default_nodes(&shape));
            let reports = residue_report(&shape, nodes, with_extrapolation).map_err(|e| match e {
                brylinski_core::Error::Domain(m) => CliError::Usage(m),
                other => CliError::Domain(other.to_string()),
            })?;
            emit(&json(&reports)?)?;
        }
        Command::Verify { level } => {
            let report = run_verify(match level {
                LevelArg::Fast => Level::Fast,
                LevelArg::Full => Level::Full,
            });
            emit(&json(&report)?)?;
            if !report.pass {
                let failed: Vec<&str> = report.checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
                eprintln!("brylinski: verification failed: {}", failed.join(", "));
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            // fold clap's message into one line, dropping the usage block
            let rendered = e.to_string();
            let message: Vec<&str> = rendered
                .lines()
                .take_while(|l| !l.starts_with("Usage:"))
                .map(|l| l.trim())
                .filter(|l| !l.is_empty())
                .collect();
            eprintln!("brylinski: {}", message.join(" ").trim_start_matches("error: "));
            return ExitCode::from(2);
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("brylinski: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
