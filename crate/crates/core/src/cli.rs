//! Command-line front end. Every command prints one JSON document.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::field::PrimeField;
use crate::geometry::{dimension, GeometryError, Preset, SystemSpec};
use crate::horace_engine::{certify, replay, Certificate, HoraceError, Status, Strategy};
use crate::oracle;
use crate::staircase::Staircase;
use crate::trunc_algebra::{colon_x1, is_staircase_ideal, monomial_ideal, translated_ideal};

#[derive(Debug, Parser)]
#[command(
    name = "horace",
    version,
    about = "Dimensions of linear systems of plane and space curves with monomial base schemes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Dimension and virtual dimension of a system.
    Dim(Common),
    /// Run Horace steps and emit a certificate.
    Certify(Common),
    /// Slices and slice removals of a staircase.
    Slices(Common),
    /// Cross-check the dimension with the independent recomputation.
    Oracle(Common),
    /// Run the built-in invariant grids.
    Selftest(Common),
}

#[derive(Debug, Clone, Default, Args)]
pub struct Common {
    /// System spec as a JSON file.
    #[arg(long)]
    pub spec: Option<PathBuf>,
    /// Named configuration: quintic_intro, sextic_intro or conic_special.
    #[arg(long)]
    pub preset: Option<String>,
    /// Comma-separated strictly decreasing slice indices, e.g. 3,1.
    #[arg(long, value_delimiter = ',')]
    pub slices: Option<Vec<u32>>,
    /// Index of the scheme to move onto the divisor.
    #[arg(long)]
    pub moving: Option<usize>,
    /// Staircase points as JSON, e.g. `[[0,0],[1,0]]`, for `slices`.
    #[arg(long)]
    pub staircase: Option<String>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub prime: Option<u64>,
    /// Also write the JSON output to this file.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Certificate to re-run, for `certify`.
    #[arg(long)]
    pub replay: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Dim,
    Certify,
    Slices,
    Oracle,
    Selftest,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: CommandKind,
    pub options: Common,
}

impl From<Command> for RunConfig {
    fn from(c: Command) -> Self {
        let (command, options) = match c {
            Command::Dim(o) => (CommandKind::Dim, o),
            Command::Certify(o) => (CommandKind::Certify, o),
            Command::Slices(o) => (CommandKind::Slices, o),
            Command::Oracle(o) => (CommandKind::Oracle, o),
            Command::Selftest(o) => (CommandKind::Selftest, o),
        };
        RunConfig { command, options }
    }
}

/// Exit status and JSON document of one command.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub exit_code: i32,
    pub output: Value,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("invalid JSON in {path}: {source}")]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Horace(#[from] HoraceError),
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| CliError::Json {
        path: path.clone(),
        source,
    })
}

fn prime_of(o: &Common) -> Result<Option<PrimeField>, CliError> {
    o.prime
        .map(|p| PrimeField::new(p).map_err(|e| CliError::Usage(e.to_string())))
        .transpose()
}

/// The system named by `--spec` or `--preset`, with `--seed` and `--prime`
/// applied, and the preset's moving index if any.
fn load_spec(o: &Common) -> Result<(SystemSpec, Option<usize>), CliError> {
    let prime = prime_of(o)?;
    match (&o.spec, &o.preset) {
        (Some(_), Some(_)) => Err(CliError::Usage(
            "give only one of --spec and --preset".into(),
        )),
        (None, None) => Err(CliError::Usage(
            "one of --spec or --preset is required".into(),
        )),
        (Some(path), None) => {
            let mut spec: SystemSpec = read_json(path)?;
            if let Some(p) = prime {
                spec.prime = p;
            }
            if let Some(s) = o.seed {
                spec.seed = s;
            }
            Ok((spec, None))
        }
        (None, Some(name)) => {
            let preset: Preset = name.parse().map_err(CliError::Usage)?;
            let spec = preset.spec(prime.unwrap_or_default(), o.seed.unwrap_or(0));
            Ok((spec, Some(preset.moving_index())))
        }
    }
}

fn exit_for(status: Status) -> i32 {
    match status {
        Status::Proven => 0,
        Status::UpperBoundOnly | Status::Inconclusive => 2,
    }
}

pub fn run(config: &RunConfig) -> Result<Outcome, CliError> {
    let o = &config.options;
    match config.command {
        CommandKind::Dim => {
            let (spec, _) = load_spec(o)?;
            let report = dimension(&spec)?;
            let mut out = serde_json::to_value(report).expect("report serializes");
            out["prime"] = json!(spec.prime.modulus());
            out["seed"] = json!(spec.seed);
            Ok(Outcome {
                exit_code: 0,
                output: out,
            })
        }
        CommandKind::Certify => run_certify(o),
        CommandKind::Slices => run_slices(o),
        CommandKind::Oracle => {
            let (spec, _) = load_spec(o)?;
            let main = dimension(&spec)?.dimension;
            let oracle_seed = spec.seed.wrapping_add(1);
            let other = oracle::recompute_dimension(&spec, oracle_seed)?;
            Ok(Outcome {
                exit_code: if main == other { 0 } else { 1 },
                output: json!({
                    "dimension": main,
                    "oracle_dimension": other,
                    "agree": main == other,
                    "prime": spec.prime.modulus(),
                    "seed": spec.seed,
                    "oracle_seed": oracle_seed,
                }),
            })
        }
        CommandKind::Selftest => Ok(selftest(
            o.seed.unwrap_or(0),
            prime_of(o)?.unwrap_or_default(),
        )),
    }
}

fn run_certify(o: &Common) -> Result<Outcome, CliError> {
    if let Some(path) = &o.replay {
        let stored: Certificate = read_json(path)?;
        let report = replay(&stored)?;
        let code = if report.reproduced {
            exit_for(report.certificate.status)
        } else {
            1
        };
        return Ok(Outcome {
            exit_code: code,
            output: serde_json::to_value(&report).expect("report serializes"),
        });
    }
    let (spec, preset_moving) = load_spec(o)?;
    let strategy = match &o.slices {
        None => Strategy::Auto,
        Some(slices) => {
            let moving = o
                .moving
                .or(preset_moving)
                .or_else(|| spec.schemes.iter().position(|s| s.is_generic()))
                .ok_or_else(|| {
                    CliError::Usage("no generic scheme to move; pass --moving".into())
                })?;
            Strategy::Explicit(vec![(moving, slices.clone())])
        }
    };
    match certify(&spec, &strategy) {
        Ok(cert) => Ok(Outcome {
            exit_code: exit_for(cert.status),
            output: serde_json::to_value(&cert).expect("certificate serializes"),
        }),
        Err(HoraceError::HypothesisFailed {
            i,
            n_i,
            dim_lhs,
            dim_rhs,
        }) => Ok(Outcome {
            exit_code: 2,
            output: json!({
                "status": "hypothesis_failed",
                "i": i,
                "n_i": n_i,
                "dim_lhs": dim_lhs,
                "dim_rhs": dim_rhs,
                "prime": spec.prime.modulus(),
                "seed": spec.seed,
            }),
        }),
        Err(e) => Err(e.into()),
    }
}

fn run_slices(o: &Common) -> Result<Outcome, CliError> {
    let e = match &o.staircase {
        Some(text) => {
            let points: Vec<Vec<u32>> = serde_json::from_str(text)
                .map_err(|err| CliError::Usage(format!("--staircase: {err}")))?;
            let dim = points.first().map_or(2, Vec::len);
            Staircase::from_points(dim, points).map_err(GeometryError::from)?
        }
        None => {
            let (spec, preset_moving) = load_spec(o)?;
            let index = o.moving.or(preset_moving).unwrap_or(0);
            spec.schemes
                .get(index)
                .ok_or(GeometryError::NoSuchScheme { index })?
                .staircase
                .clone()
        }
    };
    let slices: Vec<Value> = (1..=e.max_height())
        .map(|k| {
            let t = e.slice(k);
            json!({"k": k, "degree": t.degree(), "points": t})
        })
        .collect();
    let mut out = json!({
        "staircase": e,
        "degree": e.degree(),
        "max_height": e.max_height(),
        "picture": e.render(),
        "slices": slices,
    });
    if let Some(ns) = &o.slices {
        let removed = e.remove_slices(ns).map_err(GeometryError::from)?;
        let taken: usize = ns.iter().map(|&k| e.slice(k).degree()).sum();
        out["removed"] = json!({
            "slices": ns,
            "staircase": removed,
            "degree": removed.degree(),
            "picture": removed.render(),
            "degree_identity_holds": removed.degree() + taken == e.degree(),
        });
    }
    Ok(Outcome {
        exit_code: 0,
        output: out,
    })
}

fn tally(passed: usize, failed: usize) -> Value {
    json!({"passed": passed, "failed": failed})
}

fn count<I: IntoIterator<Item = bool>>(checks: I) -> (usize, usize) {
    checks.into_iter().fold(
        (0, 0),
        |(p, f), ok| if ok { (p + 1, f) } else { (p, f + 1) },
    )
}

/// Small exhaustive grids over the core invariants.
pub fn selftest(seed: u64, field: PrimeField) -> Outcome {
    let slice_identity = count(
        (1..=3usize)
            .flat_map(|n| oracle::enumerate_staircases(n, 6))
            .flat_map(|e| {
                (1..=e.max_height() + 1)
                    .map(|k| e.slice(k).degree() + e.remove_slice(k).degree() == e.degree())
                    .collect::<Vec<_>>()
            }),
    );
    let small: Vec<Staircase> = oracle::enumerate_staircases(2, 3);
    let mut predicate = Vec::new();
    let mut residue = Vec::new();
    for e in &small {
        for q in 2..=3 {
            for s in 2..=3 {
                predicate.push(is_staircase_ideal(&translated_ideal(e, q, s, field), e));
                let colon = colon_x1(&monomial_ideal(e, q, s, field));
                let residual = e.remove_slice(1).below_degree(s - 1);
                residue.push(colon == monomial_ideal(&residual, q, s, field));
            }
        }
    }
    let presets = count(Preset::ALL.iter().map(|p| {
        let spec = p.spec(field, seed);
        match (
            dimension(&spec),
            oracle::recompute_dimension(&spec, seed.wrapping_add(1)),
        ) {
            (Ok(a), Ok(b)) => a.dimension == b,
            _ => false,
        }
    }));
    let sextic = certify(
        &Preset::SexticIntro.spec(field, seed),
        &Strategy::Explicit(vec![(3, vec![3, 1])]),
    )
    .map(|c| c.status == Status::Proven && c.claimed_dimension == 12)
    .unwrap_or(false);
    let grids = [
        ("slice_degree_identity", slice_identity),
        ("staircase_ideal_predicate", count(predicate)),
        ("monomial_residue_law", count(residue)),
        ("preset_dimensions_vs_oracle", presets),
        ("sextic_certificate", count([sextic])),
    ];
    let failed: usize = grids.iter().map(|(_, (_, f))| f).sum();
    let report: serde_json::Map<String, Value> = grids
        .iter()
        .map(|(name, (p, f))| (name.to_string(), tally(*p, *f)))
        .collect();
    Outcome {
        exit_code: if failed == 0 { 0 } else { 1 },
        output: json!({
            "grids": report,
            "all_passed": failed == 0,
            "prime": field.modulus(),
            "seed": seed,
        }),
    }
}

/// Parses, runs, prints and, with `--out`, saves the output.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let config = RunConfig::from(cli.command);
    match run(&config) {
        Ok(outcome) => {
            let text = serde_json::to_string_pretty(&outcome.output).expect("JSON value prints");
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            if let Some(path) = &config.options.out {
                if let Err(e) = fs::write(path, format!("{text}\n")) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return 1;
                }
            }
            outcome.exit_code
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}
