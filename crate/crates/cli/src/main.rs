use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cpkin_cli::output::to_json;
use cpkin_cli::verify::{run_verify, VerifyOptions, DEFAULT_P};
use cpkin_cli::{bobillier_cmd, circle, inflection, CliResult};

#[derive(Parser)]
#[command(name = "cpkin", version, about = "Kinematics and the Bobillier formula in the generalized complex plane")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Draw the unit circle |x^2 - p y^2| = 1 (SVG plus CSV of the samples).
    Circle {
        #[arg(long, allow_negative_numbers = true)]
        p: f64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 256)]
        samples: usize,
    },
    /// Draw the inflection geometry of one instant of a motion.
    Inflection {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        t: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the seeded property battery and print a JSON report.
    Verify {
        /// Comma-separated plane parameters.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        p: Vec<f64>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        cases: usize,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        /// Include wall-clock timings (makes the report non-reproducible).
        #[arg(long)]
        timing: bool,
    },
    /// Evaluate the Bobillier residual of a configuration file.
    Bobillier {
        #[arg(long)]
        config: PathBuf,
    },
}

fn run(cli: Cli) -> CliResult<u8> {
    match cli.cmd {
        Cmd::Circle { p, out, samples } => circle::cmd_circle(p, &out, samples).map(|_| 0),
        Cmd::Inflection { config, t, out } => inflection::cmd_inflection(&config, t, &out).map(|_| 0),
        Cmd::Verify { p, seed, cases, tol, timing } => {
            if cases == 0 {
                return Err(cpkin_cli::CliError::Input("cases must be at least 1".into()));
            }
            if p.iter().any(|v| !v.is_finite()) {
                return Err(cpkin_cli::CliError::Input("p values must be finite".into()));
            }
            let p_values = if p.is_empty() { DEFAULT_P.to_vec() } else { p };
            let report = run_verify(&VerifyOptions { p_values, seed, cases, tol, timing });
            print!("{}", to_json(&report));
            Ok(if report.passed() { 0 } else { 1 })
        }
        Cmd::Bobillier { config } => {
            let report = bobillier_cmd::cmd_bobillier(&config)?;
            print!("{}", to_json(&report));
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
