//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage or unmet hypothesis,
//! 3 malformed or invalid input file.

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};

use leibniz::bimodule::SpinConfig;
use leibniz::checker::{self, Case, Outcome, SuiteConfig};
use leibniz::par::{self, Strategy};
use leibniz::subnormal::{subnormal_chain, HypothesisMode};
use leibniz::{catalogue, io, Error, FieldSpec, LeibnizAlgebra, Subspace};

#[derive(Parser)]
#[command(name = "leibniz", version, about = "Exact computations with left Leibniz algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the left Leibniz identity on every basis triple.
    Validate { algebra: PathBuf },
    /// Lower central series of the algebra or of a subalgebra.
    Series {
        algebra: PathBuf,
        /// Spanning rows, e.g. "1,0,0; 0,1,0".
        #[arg(long)]
        sub: Option<String>,
    },
    /// Canonical chain of ideal closures down to a subalgebra.
    Subnormal {
        algebra: PathBuf,
        #[arg(long)]
        sub: String,
    },
    /// Ideality of the nilpotent residual of a subnormal subalgebra.
    ResidualCheck {
        algebra: PathBuf,
        #[arg(long)]
        sub: String,
        /// Run even when the subalgebra is not subnormal.
        #[arg(long)]
        report_only: bool,
    },
    /// Composition factors of a bimodule, optionally restricted to a subalgebra.
    Compfactors {
        algebra: PathBuf,
        bimodule: PathBuf,
        #[arg(long)]
        sub: Option<String>,
        /// Largest number of vectors an exhaustive spin may visit.
        #[arg(long, default_value_t = leibniz::DEFAULT_ENUMERATION_CAP)]
        cap: u64,
    },
    /// Run every check over catalogue and generated instances.
    Verify {
        #[arg(long, value_parser = parse_field, default_value = "2")]
        field: FieldSpec,
        #[arg(long, default_value_t = 5)]
        max_dim: usize,
        #[arg(long, default_value_t = 50)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads; defaults to all cores.
        #[arg(long)]
        jobs: Option<usize>,
        /// Run on a single thread regardless of `--jobs`.
        #[arg(long)]
        sequential: bool,
        /// Also exercise non-subnormal subalgebras without judging them.
        #[arg(long)]
        report_only: bool,
        /// Only generated instances.
        #[arg(long)]
        no_catalogue: bool,
        /// Directory for `.case` files of failures and report-only violations.
        #[arg(long)]
        failures: Option<PathBuf>,
    },
    /// List catalogue entries and optionally write them as algebra files.
    Catalogue {
        #[arg(long, value_parser = parse_field, default_value = "q")]
        field: FieldSpec,
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Re-run a check from a `.case` artifact.
    Rerun { case: PathBuf },
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    FieldSpec::parse_token(s).map_err(|e| match e {
        Error::Parse { message, .. } => message,
        other => other.to_string(),
    })
}

/// Writes to stdout; a closed pipe ends the process quietly.
fn emit(text: &str) {
    if let Err(e) = std::io::stdout().lock().write_all(text.as_bytes()) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: stdout: {e}");
        std::process::exit(2);
    }
}

macro_rules! out {
    ($($arg:tt)*) => {
        emit(&format!("{}\n", format_args!($($arg)*)))
    };
}

/// A terminal condition: message and exit code.
struct Exit(u8, String);

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::InvalidAlgebra { .. } | Error::InvalidBimodule { .. } => 3,
            _ => 2,
        };
        Exit(code, e.to_string())
    }
}

type CliResult<T> = Result<T, Exit>;

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| Exit(2, format!("{}: {e}", path.display())))
}

fn with_path(path: &Path) -> impl Fn(Error) -> Exit + '_ {
    move |e| {
        let Exit(code, msg) = Exit::from(e);
        Exit(code, format!("{}: {msg}", path.display()))
    }
}

fn load_unchecked(path: &Path) -> CliResult<LeibnizAlgebra> {
    io::parse_algebra(&read(path)?).map_err(with_path(path))
}

/// Parsed and validated.
fn load(path: &Path) -> CliResult<LeibnizAlgebra> {
    let alg = load_unchecked(path)?;
    let violations = alg.validate().len();
    if violations > 0 {
        return Err(with_path(path)(Error::InvalidAlgebra { violations }));
    }
    Ok(alg)
}

fn subspace(alg: &LeibnizAlgebra, rows: &str) -> CliResult<Subspace> {
    io::parse_rows(alg.field(), alg.dim(), rows).map_err(|e| Exit(2, format!("--sub: {e}")))
}

fn subalgebra(alg: &LeibnizAlgebra, rows: Option<&str>) -> CliResult<Subspace> {
    let Some(rows) = rows else {
        return Ok(alg.full());
    };
    let s = subspace(alg, rows)?;
    if !alg.is_subalgebra(&s)? {
        return Err(Error::NotSubalgebra.into());
    }
    Ok(s)
}

fn rows_or_zero(s: &Subspace) -> String {
    if s.is_zero() {
        "0".into()
    } else {
        io::format_rows(s)
    }
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn run(cli: Cli) -> CliResult<u8> {
    match cli.command {
        Command::Validate { algebra } => {
            let alg = load_unchecked(&algebra)?;
            let violations = alg.validate();
            for v in &violations {
                out!("{v}");
            }
            if violations.is_empty() {
                out!("VALID {} dim {} field {}", alg.name(), alg.dim(), alg.field());
                Ok(0)
            } else {
                out!("INVALID {} violations", violations.len());
                Ok(1)
            }
        }
        Command::Series { algebra, sub } => {
            let alg = load(&algebra)?;
            let u = subalgebra(&alg, sub.as_deref())?;
            let series = alg.lower_central_series(&u)?;
            out!("dims {}", join(series.dims()));
            out!("stabilized_at {}", series.stabilized_at);
            out!("residual_dim {}", series.residual.dim());
            out!("residual {}", rows_or_zero(&series.residual));
            Ok(0)
        }
        Command::Subnormal { algebra, sub } => {
            let alg = load(&algebra)?;
            let u = subspace(&alg, &sub)?;
            let report = subnormal_chain(&alg, &u)?;
            out!("chain {}", join(report.dims()));
            match report.defect {
                Some(d) => out!("defect {d}"),
                None => out!("NOT SUBNORMAL"),
            }
            Ok(0)
        }
        Command::ResidualCheck {
            algebra,
            sub,
            report_only,
        } => {
            let alg = load(&algebra)?;
            let u = subspace(&alg, &sub)?;
            if !alg.is_subalgebra(&u)? {
                return Err(Error::NotSubalgebra.into());
            }
            let mode = if report_only {
                HypothesisMode::ReportOnly
            } else {
                HypothesisMode::Enforce
            };
            if mode == HypothesisMode::Enforce && !subnormal_chain(&alg, &u)?.subnormal {
                return Err(Error::NotSubnormal.into());
            }
            let mut failed = false;
            for (name, v) in [
                ("corollary", checker::verify_corollary(&alg, &u, mode)),
                ("theorem2", checker::verify_theorem2(&alg, &u, mode)),
            ] {
                out!("{name} {} {}", v.outcome, v.detail);
                failed |= v.outcome == Outcome::Fail || v.report_only_violation;
            }
            Ok(u8::from(failed))
        }
        Command::Compfactors {
            algebra,
            bimodule,
            sub,
            cap,
        } => {
            let alg = Arc::new(load(&algebra)?);
            let v = io::parse_bimodule(&read(&bimodule)?, &alg).map_err(with_path(&bimodule))?;
            let violations = v.validate().len();
            if violations > 0 {
                return Err(with_path(&bimodule)(Error::InvalidBimodule { violations }));
            }
            let u = subalgebra(&alg, sub.as_deref())?;
            let v = v.restrict(&alg.subalgebra(&u)?)?;
            if v.dim() == 0 {
                out!("series 0");
                out!("factors");
                return Ok(0);
            }
            let report = v.composition_series(&SpinConfig {
                cap,
                strategy: Strategy::default(),
            })?;
            out!("series {}", join(report.series.iter().map(Subspace::dim)));
            out!("factors {}", join(report.factor_dims()));
            for (c, class) in report.iso_classes.iter().enumerate() {
                out!("class {c}: {}", join(class));
            }
            Ok(0)
        }
        Command::Verify {
            field,
            max_dim,
            budget,
            seed,
            jobs,
            sequential,
            report_only,
            no_catalogue,
            failures,
        } => {
            if max_dim == 0 || max_dim > leibniz::algebra::MAX_DIM {
                return Err(Exit(2, format!("--max-dim must be in 1..={}", leibniz::algebra::MAX_DIM)));
            }
            let cfg = SuiteConfig {
                fields: vec![field],
                max_dim,
                budget,
                seed,
                include_catalogue: !no_catalogue,
                report_only,
                spin: SpinConfig {
                    strategy: if sequential {
                        Strategy::Sequential
                    } else {
                        Strategy::Parallel
                    },
                    ..SpinConfig::default()
                },
                ..SuiteConfig::default()
            };
            let report = par::with_threads(jobs, || checker::run_suite(&cfg));
            emit(&report.render());
            if let Some(dir) = failures {
                report.write_artifacts(&dir)?;
            }
            Ok(u8::from(report.count(Outcome::Fail) > 0))
        }
        Command::Catalogue { field, out_dir } => {
            if let Some(dir) = &out_dir {
                std::fs::create_dir_all(dir).map_err(Error::from)?;
            }
            for e in catalogue::catalogue(field) {
                out!(
                    "{} dim {} lie {} nilpotent {} residual {}",
                    e.name(),
                    e.algebra.dim(),
                    e.is_lie,
                    e.nilpotent,
                    e.residual_dim
                );
                if let Some(dir) = &out_dir {
                    std::fs::write(dir.join(format!("{}.alg", e.name())), io::write_algebra(&e.algebra))
                        .map_err(Error::from)?;
                }
            }
            Ok(0)
        }
        Command::Rerun { case } => {
            let c = Case::parse(&read(&case)?).map_err(with_path(&case))?;
            let v = c.run(&SpinConfig::default());
            out!("{} {} {} {}", c.instance, c.check, v.outcome, v.detail);
            Ok(u8::from(v.outcome == Outcome::Fail || v.report_only_violation))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Exit(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
