use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use chyp_core::cake::{build_cake, verify_identifications, verify_mapping_tables, CAKE_TOL};
use chyp_core::construction::ConstructionError;
use chyp_core::numerics::CertifyFailure;
use chyp_core::verification::{
    certify_conditions, condition_enclosures, scan, scan_point, verify, write_csv, ScanError,
    ScanRow, Tolerances, VerificationError, VerifyOptions, CERTIFY_RANGE, CONDITION_IDS,
    DEFAULT_MAX_DEPTH, PUBLISHED_T, TOLEDO_SAMPLES,
};
use chyp_core::{build_configuration, Backend};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "chyp", version, about = "Construct and verify the triangle-of-bisectors configuration")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full verification at one parameter.
    Verify(VerifyArgs),
    /// Condition values on an equispaced parameter grid.
    Scan(ScanArgs),
    /// Interval certification of the existence conditions over a range.
    Certify(CertifyArgs),
    /// Combinatorial audit of the cake and its side pairings.
    Cake(CakeArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum BackendArg {
    Fast,
    Rigorous,
}

impl From<BackendArg> for Backend {
    fn from(b: BackendArg) -> Backend {
        match b {
            BackendArg::Fast => Backend::Fast,
            BackendArg::Rigorous => Backend::Rigorous,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct TolArgs {
    /// Relative tolerance against printed values.
    #[arg(long, default_value_t = Tolerances::default().published_rel)]
    tol_rel: f64,
    /// Absolute tolerance for residuals.
    #[arg(long, default_value_t = Tolerances::default().residual_abs)]
    tol_abs: f64,
    /// Magnitude below which point values count as zero.
    #[arg(long, default_value_t = Tolerances::default().zero_tol)]
    zero_tol: f64,
}

impl TolArgs {
    fn tolerances(&self) -> Result<Tolerances, String> {
        for (name, v) in [
            ("--tol-rel", self.tol_rel),
            ("--tol-abs", self.tol_abs),
            ("--zero-tol", self.zero_tol),
        ] {
            if !(v.is_finite() && v >= 0.0) {
                return Err(format!("{name} must be a finite nonnegative number, got {v}"));
            }
        }
        Ok(Tolerances {
            published_rel: self.tol_rel,
            residual_abs: self.tol_abs,
            zero_tol: self.zero_tol,
            ..Tolerances::default()
        })
    }
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value_t = PUBLISHED_T)]
    t: f64,
    #[arg(long, value_enum, default_value_t = BackendArg::Fast)]
    backend: BackendArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Sampling intervals for the Toledo phase tracking.
    #[arg(long, default_value_t = TOLEDO_SAMPLES)]
    samples: usize,
    #[command(flatten)]
    tol: TolArgs,
}

#[derive(Args, Debug)]
struct ScanArgs {
    #[arg(long, default_value_t = CERTIFY_RANGE.0)]
    lo: f64,
    #[arg(long, default_value_t = CERTIFY_RANGE.1)]
    hi: f64,
    /// Number of grid points, endpoints included.
    #[arg(long, default_value_t = 22)]
    steps: usize,
    #[arg(long, value_enum, default_value_t = BackendArg::Fast)]
    backend: BackendArg,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[command(flatten)]
    tol: TolArgs,
}

#[derive(Args, Debug)]
struct CertifyArgs {
    #[arg(long, default_value_t = CERTIFY_RANGE.0)]
    lo: f64,
    #[arg(long, default_value_t = CERTIFY_RANGE.1)]
    hi: f64,
    #[arg(long, default_value_t = DEFAULT_MAX_DEPTH)]
    max_depth: usize,
    /// Certificate file; the certificate goes to stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct CakeArgs {
    /// Parameter at which the pairings and tables are checked.
    #[arg(long, default_value_t = PUBLISHED_T)]
    t: f64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

/// Outcome of a subcommand: text for stdout and an exit status.
struct Outcome {
    stdout: String,
    stderr: String,
    code: u8,
}

impl Outcome {
    fn ok(stdout: String, passed: bool) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: if passed { 0 } else { EXIT_FAIL },
        }
    }

    fn fail(code: u8, message: String) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: message,
            code,
        }
    }
}

fn construction_outcome(t: f64, e: &ConstructionError) -> Outcome {
    match e {
        ConstructionError::ParameterOutOfDomain { .. } => Outcome::fail(
            EXIT_USAGE,
            format!("domain error at t = {t}: {e} (requires {})", e.precondition()),
        ),
        _ => Outcome::fail(
            EXIT_FAIL,
            format!("verification failed at t = {t}: {} fails: {e}", e.precondition()),
        ),
    }
}

fn unsupported(cmd: &str, format: Format) -> Outcome {
    Outcome::fail(
        EXIT_USAGE,
        format!("format {format:?} is not available for {cmd}").to_lowercase(),
    )
}

fn csv_string(rows: &[ScanRow]) -> Result<String, ScanError> {
    let mut buf = Vec::new();
    write_csv(rows, &mut buf)?;
    Ok(String::from_utf8(buf).expect("csv output is utf-8"))
}

fn run_verify(args: &VerifyArgs) -> Outcome {
    let tolerances = match args.tol.tolerances() {
        Ok(t) => t,
        Err(e) => return Outcome::fail(EXIT_USAGE, e),
    };
    if args.samples == 0 {
        return Outcome::fail(EXIT_USAGE, "--samples must be positive".into());
    }
    if !args.t.is_finite() {
        return Outcome::fail(EXIT_USAGE, format!("--t must be finite, got {}", args.t));
    }
    let options = VerifyOptions {
        t: args.t,
        backend: args.backend.into(),
        tolerances,
        toledo_samples: args.samples,
    };
    if args.format == Format::Csv {
        let row = scan_point(args.t, options.backend, tolerances.zero_tol);
        return match csv_string(std::slice::from_ref(&row)) {
            Ok(s) => Outcome::ok(s, row.all_positive()),
            Err(e) => Outcome::fail(EXIT_FAIL, e.to_string()),
        };
    }
    match verify(&options) {
        Ok(report) => {
            let stdout = match args.format {
                Format::Json => report.to_json() + "\n",
                _ => report.to_text(),
            };
            let mut out = Outcome::ok(stdout, report.passed);
            if !report.passed {
                out.stderr = report
                    .failures()
                    .map(|v| format!("FAIL {}: {}\n", v.name, v.detail))
                    .collect();
            }
            out
        }
        Err(VerificationError::Construction(e)) => construction_outcome(args.t, &e),
        Err(e) => Outcome::fail(EXIT_FAIL, e.to_string()),
    }
}

fn run_scan(args: &ScanArgs) -> Outcome {
    let tolerances = match args.tol.tolerances() {
        Ok(t) => t,
        Err(e) => return Outcome::fail(EXIT_USAGE, e),
    };
    let rows = match scan(args.lo, args.hi, args.steps, args.backend.into(), tolerances.zero_tol) {
        Ok(rows) => rows,
        Err(e) => return Outcome::fail(EXIT_USAGE, e.to_string()),
    };
    let passed = rows.iter().all(ScanRow::all_positive);
    let stdout = match args.format {
        Format::Csv => match csv_string(&rows) {
            Ok(s) => s,
            Err(e) => return Outcome::fail(EXIT_FAIL, e.to_string()),
        },
        Format::Json => {
            serde_json::json!({
                "command": "scan",
                "lo": args.lo,
                "hi": args.hi,
                "steps": args.steps,
                "backend": Backend::from(args.backend).as_str(),
                "rows": rows,
            })
            .to_string()
                + "\n"
        }
        Format::Text => {
            let mut s = format!(
                "scan lo {} hi {} steps {} backend {}\n",
                args.lo,
                args.hi,
                args.steps,
                Backend::from(args.backend).as_str()
            );
            for r in &rows {
                let status = match (&r.error, r.all_positive()) {
                    (Some(e), _) => format!("error: {e}"),
                    (None, true) => "all positive".to_string(),
                    (None, false) => {
                        let c = r.conditions.as_ref().and_then(|c| c.first_failure());
                        format!("condition ({}) not positive", c.map_or("?", |v| v.id.as_str()))
                    }
                };
                s += &format!("t {:.6} {}\n", r.t, status);
            }
            s
        }
    };
    Outcome::ok(stdout, passed)
}

fn run_certify(args: &CertifyArgs) -> Outcome {
    if args.format == Format::Csv {
        return unsupported("certify", args.format);
    }
    let cert = match certify_conditions(args.lo, args.hi, args.max_depth) {
        Ok(c) => c,
        Err(e @ CertifyFailure::InvalidDomain { .. }) => {
            return Outcome::fail(EXIT_USAGE, e.to_string())
        }
        Err(e) => return Outcome::fail(EXIT_FAIL, format!("certification failed: {e}")),
    };
    if let Err(e) = cert.replay(&condition_enclosures) {
        return Outcome::fail(EXIT_FAIL, format!("certificate does not replay: {e}"));
    }
    let body = match args.format {
        Format::Json => serde_json::to_string_pretty(&cert).expect("certificate serializes") + "\n",
        _ => cert.to_text(),
    };
    let mut summary = format!(
        "certified [{}, {}] max_depth {} leaves {} min_leaf_width {:.3e}\n",
        args.lo,
        args.hi,
        args.max_depth,
        cert.leaves.len(),
        cert.min_leaf_width()
    );
    for id in CONDITION_IDS {
        summary += &format!("condition {:<3} leaves {}\n", id, cert.leaves_for(id).count());
    }
    match &args.out {
        Some(path) => match fs::write(path, body) {
            Ok(()) => {
                summary += &format!("certificate written to {}\n", path.display());
                Outcome::ok(summary, true)
            }
            Err(e) => Outcome::fail(EXIT_FAIL, format!("cannot write {}: {e}", path.display())),
        },
        None => Outcome {
            stdout: body,
            stderr: summary,
            code: 0,
        },
    }
}

fn run_cake(args: &CakeArgs) -> Outcome {
    if args.format == Format::Csv {
        return unsupported("cake", args.format);
    }
    let cake = match build_cake() {
        Ok(c) => c,
        Err(e) => return Outcome::fail(EXIT_FAIL, e.to_string()),
    };
    let cfg = match build_configuration(args.t) {
        Ok(c) => c,
        Err(e) => return construction_outcome(args.t, &e),
    };
    let tables = verify_mapping_tables(&cfg);
    let ids = verify_identifications(&cfg);
    let passed = cake.matches_expected_counts()
        && tables.iter().all(|c| c.passed())
        && ids.iter().all(|c| c.passed);
    let stdout = match args.format {
        Format::Json => {
            serde_json::to_string_pretty(&serde_json::json!({
                "command": "cake",
                "t": args.t,
                "tolerance": CAKE_TOL,
                "structure": cake,
                "mapping_tables": tables,
                "identifications": ids,
            }))
            .expect("cake serializes")
                + "\n"
        }
        _ => {
            let mut s = cake.to_text();
            s += &format!("\n# mapping tables at t = {} (tolerance {:e})\n", args.t, CAKE_TOL);
            for c in &tables {
                s += &format!(
                    "{:<24} residual {:.3e} {}\n",
                    c.statement,
                    c.residual,
                    if c.passed() { "ok" } else { "FAIL" }
                );
            }
            s += "\n# identifications\n";
            for c in &ids {
                s += &format!(
                    "{} {}: {} -> {} {}\n",
                    c.name,
                    c.notation,
                    c.source,
                    c.target,
                    if c.passed { "ok" } else { "FAIL" }
                );
            }
            s
        }
    };
    Outcome::ok(stdout, passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Verify(a) => run_verify(a),
        Command::Scan(a) => run_scan(a),
        Command::Certify(a) => run_certify(a),
        Command::Cake(a) => run_cake(a),
    };
    // a closed pipe is not worth a panic
    let _ = io::stdout().write_all(outcome.stdout.as_bytes());
    if !outcome.stderr.is_empty() {
        eprintln!("{}", outcome.stderr.trim_end());
    }
    ExitCode::from(outcome.code)
}
