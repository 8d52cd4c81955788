//! Thin command-line front end over the library.
//!
//! Exit codes: 0 success, 1 verification or tolerance failure, 2 invalid
//! input. Reports go to stdout, diagnostics to stderr.

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use chc::error::Error;
use chc::half::HalfInt;
use chc::report;
use chc::theta::HCParameter;
use chc::torus::TorusPoint;
use chc::weight::Weight;

#[derive(Parser)]
#[command(name = "chc", about = "Discrete series character transfer for unitary dual pairs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline for one Harish-Chandra parameter (JSON report).
    Transfer {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        /// Comma-separated half-integers, e.g. "1/2,-3/2".
        #[arg(long)]
        lambda: String,
    },
    /// Sweep every parameter in a box and check matching, vanishing and
    /// orbit consistency (CSV report, one row per parameter).
    Verify {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Entry bound, a half-integer such as "13/2".
        #[arg(long, default_value = "13/2")]
        max_abs_lambda: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Evaluate a discrete series character at given or sampled points
    /// (CSV table of values and |D|^(1/2)|Θ|).
    Eval {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        lambda: String,
        /// Comma-separated angles in radians; repeatable.
        #[arg(long = "theta")]
        thetas: Vec<String>,
        /// Additionally scan this many random regular points.
        #[arg(long)]
        scan: Option<usize>,
    },
    /// Run the floating-point oracles against the symbolic results
    /// (JSON report with max errors).
    Oracle {
        /// Circle-quadrature sample count.
        #[arg(long, default_value_t = 2048)]
        n: usize,
        /// Deformation magnitudes, comma separated.
        #[arg(long, default_value = "0.5,0.25,0.125")]
        schedule: String,
        /// Torus-quadrature samples per axis.
        #[arg(long, default_value_t = 512)]
        transfer_n: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            let name = match &err {
                Error::Param(p) => p.name().to_string(),
                other => other.to_string(),
            };
            eprintln!("error: {name}");
            if let Error::Param(p) = &err {
                eprintln!("detail: {p}");
            }
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Transfer { p, q, lambda } => {
            let raw = Weight::parse_list(&lambda)?;
            let report = report::transfer_report(p, q, &raw)?;
            println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { max_n, max_abs_lambda, jobs } => {
            if max_n > 8 {
                return Err(Error::Invalid("max_n is capped at 8".into()));
            }
            let max_abs: HalfInt = max_abs_lambda.parse()?;
            let (csv, ok) = report::verify_csv(max_n, max_abs, jobs);
            print!("{csv}");
            if ok {
                eprintln!("verify: all rows pass");
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!("verify: FAILURES present");
                Ok(ExitCode::from(1))
            }
        }
        Command::Eval { p, q, lambda, thetas, scan } => {
            let raw = Weight::parse_list(&lambda)?;
            let param = HCParameter::new(raw, p, q)?;
            let mut points = Vec::new();
            for list in &thetas {
                let angles = list
                    .split(',')
                    .map(|v| v.trim().parse::<f64>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| Error::Invalid(format!("bad angle list {list:?}: {e}")))?;
                if angles.len() != param.n() {
                    return Err(Error::Invalid(format!(
                        "theta needs {} angles, got {}",
                        param.n(),
                        angles.len()
                    )));
                }
                points.push(TorusPoint::new(angles));
            }
            if let Some(count) = scan {
                points.extend(report::scan_points(&param, count, report::env_seed()));
            }
            let rows = report::eval_rows(&param, &points)?;
            println!("{}", report::EVAL_CSV_HEADER);
            for row in &rows {
                println!("{}", row.to_csv_line());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { n, schedule, transfer_n } => {
            let schedule: Vec<f64> = schedule
                .split(',')
                .map(|v| v.trim().parse::<f64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| Error::Invalid(format!("bad schedule: {e}")))?;
            if schedule.is_empty() || schedule.iter().any(|&x| x <= 0.0) {
                return Err(Error::Invalid("schedule needs positive magnitudes".into()));
            }
            let (report, pass) =
                report::oracle_report(n, &schedule, transfer_n, report::env_seed())?;
            println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}
