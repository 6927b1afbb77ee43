//! `bombieri` command-line front end.
//!
//! Exit codes: 0 success, 1 semantic regression (verification failures, or a
//! scan that found only one sign), 2 usage or parse error, 3 I/O error.

pub mod input;
pub mod output;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use bombieri_core::compare::{scan_f, ScanConfig};
use bombieri_core::verify::{
    run_corpus, standard_p_list, verify_all_with, CorpusConfig, CorpusRun, FieldChoice, Tolerance,
    DEFAULT_ABS_TOL, DEFAULT_REL_TOL, MAX_DIM, MAX_N,
};
use bombieri_core::BoundError;
use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub use input::InputDocument;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("malformed input: {0}")]
    Parse(#[from] serde_json::Error),

    #[error(transparent)]
    Invalid(#[from] BoundError),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) | CliError::Invalid(_) => 2,
            CliError::Io { .. } => 3,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "bombieri",
    version,
    about = "Evaluate, verify and compare Bombieri-type bounds"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate every bound on the vectors of an input document.
    Compute(ComputeArgs),
    /// Check every bound on a reproducible corpus of random instances.
    Verify(VerifyArgs),
    /// Tabulate f(b, p) = M2 - M1 on a grid over [0, 1] x [1 + eps, 2].
    Scan(ScanArgs),
}

fn exponent_arg(s: &str) -> Result<f64, String> {
    input::parse_exponent(s)
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// JSON input document.
    #[arg(long)]
    pub input: PathBuf,
    /// Output CSV path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Hölder exponent (repeatable; `inf` allowed). Overrides the document's p_list.
    #[arg(long = "p", value_parser = exponent_arg)]
    pub p: Vec<f64>,
    #[arg(long = "rel-tol", default_value_t = DEFAULT_REL_TOL)]
    pub rel_tol: f64,
    #[arg(long = "abs-tol", default_value_t = DEFAULT_ABS_TOL)]
    pub abs_tol: f64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FieldArg {
    Real,
    Complex,
    Both,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Largest ambient dimension drawn.
    #[arg(long, default_value_t = 8)]
    pub dims: usize,
    /// Largest family size drawn.
    #[arg(long, default_value_t = 10)]
    pub n: usize,
    #[arg(long, default_value_t = 10_000)]
    pub trials: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = FieldArg::Both)]
    pub field: FieldArg,
    /// Hölder exponent (repeatable); defaults to 1, 1.1, 1.5, 2, 3, inf.
    #[arg(long = "p", value_parser = exponent_arg)]
    pub p: Vec<f64>,
    #[arg(long = "rel-tol", default_value_t = DEFAULT_REL_TOL)]
    pub rel_tol: f64,
    #[arg(long = "abs-tol", default_value_t = DEFAULT_ABS_TOL)]
    pub abs_tol: f64,
    /// Write every evaluated case as CSV.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long, default_value_t = 201)]
    pub nb: usize,
    #[arg(long, default_value_t = 100)]
    pub np: usize,
    /// Grid starts at p = 1 + eps; eps = 1 restricts the grid to p = 2.
    #[arg(long, default_value_t = 0.01)]
    pub eps: f64,
    /// Output CSV path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn tolerance(rel: f64, abs: f64) -> Result<Tolerance<f64>, CliError> {
    if !(rel.is_finite() && rel >= 0.0 && abs.is_finite() && abs >= 0.0) {
        return Err(CliError::Usage(format!(
            "tolerances must be finite and nonnegative, got rel {rel}, abs {abs}"
        )));
    }
    Ok(Tolerance { rel, abs })
}

fn write_output(path: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    let io_err = |path: &str, source| CliError::Io {
        path: path.to_string(),
        source,
    };
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| io_err(&p.display().to_string(), e)),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| io_err("<stdout>", e)),
    }
}

pub fn cmd_compute(args: &ComputeArgs, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let tol = tolerance(args.rel_tol, args.abs_tol)?;
    let doc = InputDocument::read(&args.input)?;
    let p_list = if !args.p.is_empty() {
        args.p.clone()
    } else {
        doc.p_list.clone().unwrap_or_else(standard_p_list)
    };
    let report = verify_all_with(&doc.x, &doc.family, &doc.coefficients, &p_list, &tol)?;
    write_output(
        args.out.as_deref(),
        &output::compute_csv(&report.cases),
        stdout,
    )?;
    Ok(0)
}

/// Totals, the worst case, and one replay line per failing case.
pub fn verify_summary(run: &CorpusRun<f64>) -> String {
    let mut summary = format!(
        "instances={} cases={} pass={} fail={}\n",
        run.entries.len(),
        run.n_cases(),
        run.n_pass(),
        run.n_fail()
    );
    if let Some((entry, case)) = run.worst_case() {
        summary.push_str(&format!(
            "worst: trial={} {} p={} lhs={} rhs={} relative_margin={}\n",
            entry.trial,
            case.kind,
            case.p.map_or_else(|| "-".into(), output::num),
            output::num(case.lhs),
            output::num(case.rhs),
            output::num(case.relative_margin()),
        ));
    }
    for entry in run.failing() {
        for case in entry.report.failures() {
            summary.push_str(&format!(
                "replay: trial={},{} bound={} p={}\n",
                entry.trial,
                entry.spec,
                case.kind,
                case.p.map_or_else(|| "-".into(), output::num),
            ));
        }
    }
    summary
}

pub fn cmd_verify(
    args: &VerifyArgs,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, CliError> {
    if !(1..=MAX_DIM).contains(&args.dims) {
        return Err(CliError::Usage(format!(
            "--dims {} outside 1..={MAX_DIM}",
            args.dims
        )));
    }
    if args.n > MAX_N {
        return Err(CliError::Usage(format!(
            "--n {} outside 0..={MAX_N}",
            args.n
        )));
    }
    let config = CorpusConfig {
        trials: args.trials,
        max_dim: args.dims,
        max_n: args.n,
        fields: match args.field {
            FieldArg::Real => FieldChoice::Real,
            FieldArg::Complex => FieldChoice::Complex,
            FieldArg::Both => FieldChoice::Both,
        },
        seed: args.seed,
        p_list: if args.p.is_empty() {
            standard_p_list()
        } else {
            args.p.clone()
        },
        tol: tolerance(args.rel_tol, args.abs_tol)?,
    };
    let run = run_corpus(&config)?;
    if let Some(path) = &args.out {
        write_output(Some(path), &output::verify_csv(&run), stdout)?;
    }

    let summary = verify_summary(&run);
    write_output(None, &summary, stdout)?;
    if run.n_fail() > 0 {
        let _ = writeln!(
            stderr,
            "verification failed: {} violated cases",
            run.n_fail()
        );
        return Ok(1);
    }
    Ok(0)
}

pub fn cmd_scan(
    args: &ScanArgs,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, CliError> {
    let config = ScanConfig {
        nb: args.nb,
        np: args.np,
        eps: args.eps,
    };
    config
        .validate()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let report = scan_f::<f64>(&config)?;
    write_output(args.out.as_deref(), &output::scan_csv(&report), stdout)?;
    if args.out.is_some() {
        let _ = writeln!(stdout, "{}", output::scan_summary(&report));
    }
    if !report.both_signs() {
        let _ = writeln!(
            stderr,
            "scan found only one sign: {} positive, {} negative",
            report.n_positive, report.n_negative
        );
        return Ok(1);
    }
    Ok(0)
}

/// Parses `args` (including the program name) and runs one command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(rendered.as_bytes())
            } else {
                stderr.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Compute(a) => cmd_compute(a, stdout),
        Command::Verify(a) => cmd_verify(a, stdout, stderr),
        Command::Scan(a) => cmd_scan(a, stdout, stderr),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
