//! `bergman-nr`: build operator truncations, sweep numerical ranges and run
//! the check registry.
//!
//! Exit codes: 0 success or all checks pass, 1 a check failed or a
//! computation did not converge, 2 usage or configuration error.

mod config;
mod output;
#[cfg(test)]
mod tests;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bergman_numrange::numrange::{boundary_points, hull_of_boundary, DEFAULT_ANGLES};
use bergman_numrange::suite::{check_accepts, list_checks, run_check, CheckReport};
use bergman_numrange::{CMatrix, Error};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use config::JobConfig;

#[derive(Parser)]
#[command(
    name = "bergman-nr",
    version,
    about = "Numerical ranges of operators on weighted Bergman spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Args)]
struct ConfigOverrides {
    /// Job configuration (JSON).
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    truncation: Option<usize>,
    #[arg(long)]
    angles: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Write the truncated operator matrix of a job configuration.
    Build {
        #[command(flatten)]
        job: ConfigOverrides,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Sweep the numerical range of a configured operator or a matrix CSV.
    Range {
        #[command(flatten)]
        job: ConfigOverrides,
        /// Matrix CSV as written by `build`.
        #[arg(long, conflicts_with = "config")]
        matrix: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Draw the range hull as SVG.
    Plot {
        #[command(flatten)]
        job: ConfigOverrides,
        #[arg(long, conflicts_with = "config")]
        matrix: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run one registered check, or `all`, and print one JSON report per line.
    Check {
        id: String,
        /// JSON object of parameter overrides.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        truncation: Option<usize>,
        #[arg(long)]
        angles: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Parameter override `key=JSON`, repeatable.
        #[arg(long = "set", value_name = "KEY=JSON")]
        set: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List registered checks with their anchors and default parameters.
    ListChecks {
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    Failed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Numeric(_) => Failure::Failed(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn emit(out: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<(), Failure> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| usage(format!("cannot write {}: {e}", p.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .and_then(|_| stdout.flush())
            .map_err(|e| Failure::Failed(format!("cannot write to stdout: {e}"))),
    }
}

fn load_job(job: &ConfigOverrides) -> Result<JobConfig, Failure> {
    let path = job
        .config
        .as_deref()
        .ok_or_else(|| usage("--config PATH is required"))?;
    let mut cfg = JobConfig::load(path)?;
    if let Some(a) = job.alpha {
        cfg.alpha = a;
    }
    if let Some(n) = job.truncation {
        cfg.truncation = n;
    }
    if let Some(k) = job.angles {
        cfg.angles = k;
    }
    if let Some(s) = job.seed {
        cfg.seed = s;
    }
    cfg.validate()?;
    Ok(cfg)
}

/// Matrix, angle count and seed for `range` and `plot`.
fn range_input(job: &ConfigOverrides, matrix: Option<&Path>) -> Result<(CMatrix, usize, u64), Failure> {
    match matrix {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| usage(format!("cannot read matrix {}: {e}", path.display())))?;
            let angles = job.angles.unwrap_or(DEFAULT_ANGLES);
            if angles < 8 {
                return Err(usage(format!("--angles must be >= 8, got {angles}")));
            }
            let seed = job.seed.unwrap_or(bergman_numrange::suite::DEFAULT_SEED);
            Ok((output::parse_matrix_csv(&text)?, angles, seed))
        }
        None => {
            let cfg = load_job(job)?;
            Ok((cfg.build()?.matrix, cfg.angles, cfg.seed))
        }
    }
}

fn check_overrides(
    config: Option<&Path>,
    flags: [(&str, Option<Value>); 4],
    set: &[String],
) -> Result<Map<String, Value>, Failure> {
    let mut map = match config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| usage(format!("cannot read overrides {}: {e}", path.display())))?;
            match serde_json::from_str::<Value>(&text) {
                Ok(Value::Object(m)) => m,
                Ok(_) => return Err(usage("check overrides must be a JSON object")),
                Err(e) => return Err(usage(format!("overrides: {e}"))),
            }
        }
        None => Map::new(),
    };
    for (key, value) in flags {
        if let Some(v) = value {
            map.insert(key.into(), v);
        }
    }
    for item in set {
        let (key, raw) = item
            .split_once('=')
            .ok_or_else(|| usage(format!("--set expects KEY=JSON, got `{item}`")))?;
        let value = serde_json::from_str(raw).map_err(|e| usage(format!("--set {key}: {e}")))?;
        map.insert(key.to_string(), value);
    }
    Ok(map)
}

fn report_line(r: &CheckReport) -> Result<String, Failure> {
    serde_json::to_string(r).map_err(|e| Failure::Failed(format!("cannot encode report: {e}")))
}

fn run(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<bool, Failure> {
    match cli.command {
        Command::Build { job, out, format } => {
            let cfg = load_job(&job)?;
            let op = cfg.build()?;
            let text = match format {
                Format::Csv => output::matrix_csv(&op.matrix),
                Format::Json => {
                    let rows: Vec<Vec<[f64; 2]>> = (0..op.size())
                        .map(|i| op.matrix.row(i).iter().map(|z| [z.re, z.im]).collect())
                        .collect();
                    let doc = json!({
                        "alpha": op.alpha,
                        "truncation": op.size(),
                        "operator": op.description,
                        "seed": cfg.seed,
                        "matrix": rows,
                    });
                    format!("{doc}\n")
                }
                Format::Svg => return Err(usage("build writes csv or json")),
            };
            emit(out.as_deref(), &text, stdout)?;
            Ok(true)
        }
        Command::Range {
            job,
            matrix,
            out,
            format,
        } => {
            let (m, angles, seed) = range_input(&job, matrix.as_deref())?;
            let pts = boundary_points(&m, angles)?;
            let text = match format {
                Format::Csv => output::range_csv(&pts),
                Format::Svg => output::hull_svg(&hull_of_boundary(&pts)?),
                Format::Json => {
                    let hull = hull_of_boundary(&pts)?;
                    let doc = json!({
                        "angles": angles,
                        "seed": seed,
                        "points": pts,
                        "hull": hull.vertices().iter().map(|z| [z.re, z.im]).collect::<Vec<_>>(),
                    });
                    format!("{doc}\n")
                }
            };
            emit(out.as_deref(), &text, stdout)?;
            Ok(true)
        }
        Command::Plot { job, matrix, out } => {
            let (m, angles, _) = range_input(&job, matrix.as_deref())?;
            let hull = hull_of_boundary(&boundary_points(&m, angles)?)?;
            emit(out.as_deref(), &output::hull_svg(&hull), stdout)?;
            Ok(true)
        }
        Command::Check {
            id,
            config,
            alpha,
            truncation,
            angles,
            seed,
            set,
            out,
        } => {
            let flags = [
                ("alpha", alpha.map(Value::from)),
                ("truncation", truncation.map(Value::from)),
                ("angles", angles.map(Value::from)),
                ("seed", seed.map(Value::from)),
            ];
            let overrides = check_overrides(config.as_deref(), flags, &set)?;
            let mut lines = String::new();
            let mut all_pass = true;
            if id == "all" {
                for info in list_checks() {
                    let own: Map<String, Value> = overrides
                        .iter()
                        .filter(|(k, _)| check_accepts(info.id, k))
                        .map(|(k, v)| (k.clone(), v.clone()))
                        .collect();
                    let r = run_check(info.id, &own)?;
                    let _ = writeln!(stderr, "{} {}", if r.pass { "pass" } else { "FAIL" }, r.id);
                    all_pass &= r.pass;
                    lines.push_str(&report_line(&r)?);
                    lines.push('\n');
                }
            } else {
                let r = run_check(&id, &overrides)?;
                all_pass = r.pass;
                lines.push_str(&report_line(&r)?);
                lines.push('\n');
            }
            emit(out.as_deref(), &lines, stdout)?;
            Ok(all_pass)
        }
        Command::ListChecks { format } => {
            let checks = list_checks();
            let text = match format {
                Format::Json => checks
                    .iter()
                    .map(|c| serde_json::to_string(c).map(|s| s + "\n"))
                    .collect::<Result<String, _>>()
                    .map_err(|e| Failure::Failed(e.to_string()))?,
                Format::Csv => {
                    let mut s = String::from("id,anchor\n");
                    for c in &checks {
                        s.push_str(&format!("{},\"{}\"\n", c.id, c.anchor.replace('"', "\"\"")));
                    }
                    s
                }
                Format::Svg => return Err(usage("list-checks writes json or csv")),
            };
            emit(None, &text, stdout)?;
            Ok(true)
        }
    }
}

/// Runs the command line `args` (program name first) and returns the exit
/// code.
fn execute<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                return 2;
            }
            let _ = write!(stdout, "{}", e.render());
            return 0;
        }
    };
    match run(cli, stdout, stderr) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::Failed(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
    }
}

fn main() -> ExitCode {
    let code = execute(
        std::env::args_os(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    ExitCode::from(code)
}
