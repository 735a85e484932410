//! Command-line front end. [`run`] parses arguments, dispatches to a
//! subcommand and returns the exit code with the JSON text to print.
//!
//! Exit codes: 0 success, 1 malformed input or arguments, 2 invariant
//! violation (the JSON names the violated invariant), 3 solver
//! non-convergence.

pub mod json;

use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::cone::{MAX_DIM, MIN_DIM};
use crate::copolarity::{check_identities, classify, classify_faces_with, conjugate_face, copolar};
use crate::corpus::{gen_instances, random_pseudocone};
use crate::error::Error;
use crate::linalg::{rat_to_f64, LpValue, Rational, DEFAULT_ABS_TOL};
use crate::minkowski::{
    coconvex_volume, solve_minkowski, surface_area_measure, truncation_pipeline, CoconvexVolume,
    DyadicGenerator, Initialization, SolverConfig, WeightRule, DEFAULT_MAX_ITER,
    DEFAULT_RESIDUAL_TOL,
};
use crate::pseudocone::PseudoCone;
use json::{InputError, InputResult};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MALFORMED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_NON_CONVERGENCE: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ScalarMode {
    /// Exact `"p/q"` strings.
    Rational,
    /// Nearest floats.
    Float,
}

#[derive(Debug, Parser)]
#[command(
    name = "pseudocone",
    version,
    about = "Polyhedral C-pseudo-cones, copolarity and the Minkowski problem"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalArgs {
    /// Absolute and relative tolerance for float comparisons.
    #[arg(long, global = true, default_value_t = DEFAULT_ABS_TOL)]
    tol: f64,
    /// Relative residual at which the Minkowski solver stops.
    #[arg(long = "residual-tol", global = true, default_value_t = DEFAULT_RESIDUAL_TOL)]
    residual_tol: f64,
    #[arg(long = "max-iter", global = true, default_value_t = DEFAULT_MAX_ITER)]
    max_iter: usize,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// How scalar results are written.
    #[arg(long, global = true, value_enum, default_value_t = ScalarMode::Rational)]
    scalar: ScalarMode,
    /// Ambient dimension for generated instances.
    #[arg(long, global = true, default_value_t = 2)]
    dim: usize,
    /// Number of pipeline stages (overrides the generator file).
    #[arg(long, global = true)]
    stages: Option<usize>,
}

#[derive(Debug, Args)]
struct Input {
    /// Pseudo-cone JSON file, `-` for standard input.
    #[arg(value_name = "FILE")]
    file: Option<PathBuf>,
    #[arg(long = "pseudocone", value_name = "FILE", conflicts_with = "file")]
    pseudocone: Option<PathBuf>,
}

impl Input {
    fn path(&self) -> InputResult<&Path> {
        self.file
            .as_deref()
            .or(self.pseudocone.as_deref())
            .ok_or_else(|| InputError::Malformed("missing input file".into()))
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate a pseudo-cone and print its canonical description.
    Validate(Input),
    /// Copolar set, a pseudo-cone for the polar cone.
    Copolar(Input),
    /// Face lattice with classes and conjugates.
    Faces(Input),
    /// Conjugate of one face, by its index in the face report.
    Conjugate {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        face: usize,
    },
    /// Surface area measure.
    Measure(Input),
    /// Coconvex volume by triangulation and by the divergence formula.
    Volume(Input),
    /// Support value in a direction given as comma-separated rationals.
    Support {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        direction: String,
    },
    /// Radial function at a point of the interior of the cone.
    Radial {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Distance of the pseudo-cone from the origin.
    Bdist(Input),
    /// Solve the Minkowski problem for a cone and a measure.
    Solve {
        #[arg(long, value_name = "FILE")]
        cone: PathBuf,
        #[arg(long, value_name = "FILE")]
        measure: PathBuf,
    },
    /// Truncation pipeline for a generated measure.
    Pipeline {
        /// Generator file `{"angles_rule", "weights_rule", "stages"}`; defaults apply without it.
        #[arg(value_name = "FILE")]
        spec: Option<PathBuf>,
    },
    /// Copolarity identity battery on a corpus (generated when no file is given).
    CheckIdentities {
        #[arg(value_name = "FILE")]
        corpus: Option<PathBuf>,
        #[arg(long, default_value_t = 10)]
        count: usize,
        /// Sample points per instance.
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Random valid pseudo-cones.
    Gen {
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
}

/// Settings shared by all subcommands.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub scalar_mode: ScalarMode,
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_iter: usize,
    pub residual_tol: f64,
    pub seed: u64,
    pub dimension: usize,
    /// Pipeline stages, overriding the generator file.
    pub stages: Option<usize>,
}

impl RunConfig {
    fn from_args(g: &GlobalArgs) -> crate::Result<Self> {
        for (name, t) in [("tol", g.tol), ("residual-tol", g.residual_tol)] {
            if !(t.is_finite() && t > 0.0) {
                return Err(Error::InvalidInput(format!("--{name} must be positive")));
            }
        }
        if !(MIN_DIM..=MAX_DIM).contains(&g.dim) {
            return Err(Error::UnsupportedDimension(g.dim));
        }
        Ok(Self {
            scalar_mode: g.scalar,
            abs_tol: g.tol,
            rel_tol: g.tol,
            max_iter: g.max_iter,
            residual_tol: g.residual_tol,
            seed: g.seed,
            dimension: g.dim,
            stages: g.stages,
        })
    }

    fn solver(&self) -> SolverConfig {
        SolverConfig {
            max_iter: self.max_iter,
            residual_tol: self.residual_tol,
            init: Initialization::Unit,
        }
    }

    fn scalar(&self, x: &Rational) -> Value {
        match self.scalar_mode {
            ScalarMode::Rational => json::rational(x),
            ScalarMode::Float => json!(rat_to_f64(x)),
        }
    }
}

enum Failure {
    Input(InputError),
    Identities(Value),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(InputError::Invalid(e))
    }
}

fn read(path: &Path) -> InputResult<Value> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    }
    .map_err(|e| InputError::Malformed(format!("cannot read {}: {e}", path.display())))?;
    json::parse(&text)
}

fn load(input: &Input) -> InputResult<PseudoCone> {
    json::parse_pseudocone(&read(input.path()?)?)
}

fn error_json(e: &Error) -> Value {
    let mut body = json!({"reason": e.reason(), "message": e.to_string()});
    let mut inner = e;
    if let Error::Stage { stage, source } = e {
        body["stage"] = json!(stage);
        inner = source;
    }
    if let Error::NonConvergence {
        iterations,
        residual,
    } = inner
    {
        body["diagnostics"] = json::diagnostics(Some(*iterations), Some(*residual), None, None);
    }
    json::versioned(vec![("error", body)])
}

fn is_non_convergence(e: &Error) -> bool {
    match e {
        Error::NonConvergence { .. } => true,
        Error::Stage { source, .. } => is_non_convergence(source),
        _ => false,
    }
}

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

/// Runs the command line `args` (including the program name) and returns
/// the exit code and the text for standard output.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_MALFORMED
            } else {
                EXIT_OK
            };
            return (code, e.to_string());
        }
    };
    let outcome = RunConfig::from_args(&cli.global)
        .map_err(Failure::from)
        .and_then(|cfg| dispatch(&cli.command, &cfg));
    match outcome {
        Ok(v) => (EXIT_OK, render(&v)),
        Err(Failure::Input(InputError::Malformed(msg))) => (
            EXIT_MALFORMED,
            render(&json::versioned(vec![(
                "error",
                json!({"reason": "malformed-input", "message": msg}),
            )])),
        ),
        Err(Failure::Input(InputError::Invalid(e))) => {
            let code = if is_non_convergence(&e) {
                EXIT_NON_CONVERGENCE
            } else {
                EXIT_INVALID
            };
            (code, render(&error_json(&e)))
        }
        Err(Failure::Identities(v)) => (EXIT_INVALID, render(&v)),
    }
}

fn dispatch(command: &Command, cfg: &RunConfig) -> Result<Value, Failure> {
    Ok(match command {
        Command::Validate(input) => {
            let k = load(input)?;
            let mut v = json::pseudocone(&k);
            v["c_full"] = json!(k.is_c_full());
            v
        }
        Command::Copolar(input) => json::pseudocone(&copolar(&load(input)?)),
        Command::Faces(input) => faces(&load(input)?),
        Command::Conjugate { input, face } => conjugate(&load(input)?, *face)?,
        Command::Measure(input) => {
            let k = load(input)?;
            let m = surface_area_measure(&k);
            let volume = coconvex_volume(&k);
            json::versioned(vec![
                ("atoms", json::measure(&m)),
                (
                    "diagnostics",
                    json::diagnostics(None, None, None, Some(volume.value())),
                ),
            ])
        }
        Command::Volume(input) => volume(&load(input)?, cfg),
        Command::Support { input, direction } => {
            let k = load(input)?;
            let u = json::parse_vector_arg(direction)?;
            crate::linalg::check_dim(k.dim(), u.dim())?;
            match k.support(&u) {
                LpValue::Finite(h) => json::versioned(vec![
                    ("support", cfg.scalar(&h)),
                    ("unbounded", json!(false)),
                ]),
                LpValue::Unbounded => {
                    json::versioned(vec![("support", Value::Null), ("unbounded", json!(true))])
                }
            }
        }
        Command::Radial { input, point } => {
            let k = load(input)?;
            let x = json::parse_vector_arg(point)?;
            json::versioned(vec![("radial", cfg.scalar(&k.radial(&x)?))])
        }
        Command::Bdist(input) => {
            let k = load(input)?;
            json::versioned(vec![
                ("b", json!(k.distance_b())),
                ("b_squared", cfg.scalar(&k.distance_b_sq())),
            ])
        }
        Command::Solve { cone, measure } => {
            let c = Arc::new(json::parse_cone(&read(cone)?)?);
            let phi = json::parse_measure(&c, &read(measure)?)?;
            let (k, state) = solve_minkowski(&c, &phi, &cfg.solver())?;
            json::versioned(vec![
                ("pseudocone", json::pseudocone(&k)),
                ("state", json::solver_state(&state)),
                (
                    "diagnostics",
                    json::diagnostics(
                        Some(state.iterations),
                        Some(state.residual),
                        Some(state.lambda),
                        Some(state.volume),
                    ),
                ),
            ])
        }
        Command::Pipeline { spec } => pipeline(spec.as_deref(), cfg)?,
        Command::CheckIdentities {
            corpus,
            count,
            samples,
        } => identities(corpus.as_deref(), *count, *samples, cfg)?,
        Command::Gen { count } => {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            if cfg.dimension > 3 {
                return Err(Error::UnsupportedDimension(cfg.dimension).into());
            }
            let instances = gen_instances(&mut rng, cfg.dimension, *count);
            json::versioned(vec![(
                "instances",
                Value::Array(instances.iter().map(json::pseudocone).collect()),
            )])
        }
    })
}

fn faces(k: &PseudoCone) -> Value {
    let star = copolar(k);
    let report = classify_faces_with(k, &star);
    let lattice = k.faces();
    let face_list: Vec<Value> = report
        .faces
        .iter()
        .map(|d| {
            let mut f = json::face(d.face, &lattice.faces()[d.face], d.class);
            f["conjugate"] = json!(d.conjugate);
            f
        })
        .collect();
    let copolar_faces: Vec<Value> = star
        .faces()
        .faces()
        .iter()
        .enumerate()
        .map(|(i, f)| json::face(i, f, report.copolar_classes[i]))
        .collect();
    json::versioned(vec![
        ("faces", Value::Array(face_list)),
        ("copolar", json::pseudocone(&star)),
        ("copolar_faces", Value::Array(copolar_faces)),
        (
            "report",
            json!({
                "class_counts": class_counts(report.class_counts()),
                "copolar_class_counts": class_counts(report.copolar_class_counts()),
                "class_bijections": report.class_bijections,
                "involution": report.involution,
                "dimension_law": report.dimension_law,
                "inclusion_reversing": report.inclusion_reversing,
                "onto": report.onto,
            }),
        ),
    ])
}

fn class_counts(c: [usize; 4]) -> Value {
    json!({"B_IN": c[0], "B_BD": c[1], "U_IN": c[2], "U_BD": c[3]})
}

fn conjugate(k: &PseudoCone, index: usize) -> Result<Value, Failure> {
    let f = k.faces().faces().get(index).ok_or(Error::NotAFace)?;
    let star = copolar(k);
    let conj = conjugate_face(k, &star, f)?.map(|j| {
        let g = &star.faces().faces()[j];
        json::face(j, g, classify(&star, g))
    });
    Ok(json::versioned(vec![
        ("face", json::face(index, f, classify(k, f))),
        ("conjugate", conj.unwrap_or(Value::Null)),
    ]))
}

fn volume(k: &PseudoCone, cfg: &RunConfig) -> Value {
    let v = coconvex_volume(k);
    let (tri, div) = match v {
        CoconvexVolume::Finite {
            triangulation,
            divergence,
        } => (json!(triangulation), json!(divergence)),
        CoconvexVolume::Infinite => (json!("inf"), json!("inf")),
    };
    json::versioned(vec![
        ("finite", json!(v.is_finite())),
        ("triangulation", tri),
        ("divergence", div),
        ("relative_gap", json!(v.relative_gap())),
        ("agree", json!(v.relative_gap() <= cfg.rel_tol)),
        (
            "diagnostics",
            json::diagnostics(None, None, None, Some(v.value())),
        ),
    ])
}

fn pipeline(spec: Option<&Path>, cfg: &RunConfig) -> Result<Value, Failure> {
    let spec = match spec {
        Some(p) => read(p)?,
        None => json!({}),
    };
    let angles = spec
        .get("angles_rule")
        .and_then(Value::as_str)
        .unwrap_or("dyadic");
    if angles != "dyadic" {
        return Err(InputError::Malformed(format!("unknown angles_rule \"{angles}\"")).into());
    }
    let weights = match spec
        .get("weights_rule")
        .and_then(Value::as_str)
        .unwrap_or("decaying")
    {
        "decaying" => WeightRule::Decaying,
        "growing" => WeightRule::Growing,
        other => {
            return Err(InputError::Malformed(format!("unknown weights_rule \"{other}\"")).into())
        }
    };
    let stages = match cfg_stages(cfg, &spec) {
        Some(s) if s >= 1 => s,
        _ => return Err(Error::InvalidInput("stages must be at least 1".into()).into()),
    };
    let c = Arc::new(match spec.get("cone") {
        Some(v) => json::parse_cone(v)?,
        None => crate::cone::PolyCone::orthant(2)?,
    });
    let phi = DyadicGenerator { weights }.atoms(&c, stages)?;
    let report = truncation_pipeline(&c, &phi, stages, &cfg.solver())?;
    let last = report.stages.last().expect("at least one stage");
    let stage_list: Vec<Value> = report
        .stages
        .iter()
        .map(|s| {
            json!({
                "stage": s.stage,
                "tau": s.tau,
                "atoms": s.atoms,
                "lambda": s.lambda,
                "b": s.distance_b,
                "volume": s.volume,
                "delta_moment": s.delta_moment,
                "iterations": s.iterations,
                "residual": s.residual,
                "hbar_change": s.hbar_change,
                "truncation_distances": s.truncation_distances,
            })
        })
        .collect();
    let (b_min, b_max) = report.distance_b_range();
    Ok(json::versioned(vec![
        (
            "ladder",
            Value::Array(report.ladder.iter().map(|l| cfg.scalar(l)).collect()),
        ),
        ("stages", Value::Array(stage_list)),
        (
            "summary",
            json!({
                "lambda_increasing": report.lambda_increasing(),
                "distances_decreasing": (0..report.ladder.len()).all(|r| report.distances_decreasing(r)),
                "b_min": b_min,
                "b_max": b_max,
                "max_volume": report.max_volume(),
            }),
        ),
        (
            "diagnostics",
            json::diagnostics(
                Some(last.iterations),
                Some(last.residual),
                Some(last.lambda),
                Some(last.volume),
            ),
        ),
    ]))
}

const DEFAULT_STAGES: usize = 6;

fn cfg_stages(cfg: &RunConfig, spec: &Value) -> Option<usize> {
    cfg.stages.or_else(|| match spec.get("stages") {
        None => Some(DEFAULT_STAGES),
        Some(v) => v.as_u64().map(|s| s as usize),
    })
}

fn identities(
    corpus: Option<&Path>,
    count: usize,
    samples: usize,
    cfg: &RunConfig,
) -> Result<Value, Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let instances = match corpus {
        Some(p) => json::parse_instances(&read(p)?)?,
        None => {
            if cfg.dimension > 3 {
                return Err(Error::UnsupportedDimension(cfg.dimension).into());
            }
            gen_instances(&mut rng, cfg.dimension, count)
        }
    };
    let mut all_passed = true;
    let mut results = Vec::new();
    for (i, k) in instances.iter().enumerate() {
        let partner = random_pseudocone(&mut rng, k.cone_arc());
        let checks = check_identities(k, &partner, samples, cfg.seed.wrapping_add(i as u64));
        let failed: Vec<&str> = checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name)
            .collect();
        all_passed &= failed.is_empty();
        results.push(json!({
            "instance": i,
            "checks": checks.iter().map(|c| json!({"name": c.name, "passed": c.passed})).collect::<Vec<_>>(),
            "failed": failed,
        }));
    }
    let v = json::versioned(vec![
        ("instances", Value::Array(results)),
        ("all_passed", json!(all_passed)),
    ]);
    if all_passed {
        Ok(v)
    } else {
        let mut v = v;
        v["error"] =
            json!({"reason": "identity-failure", "message": "an exact copolarity identity failed"});
        Err(Failure::Identities(v))
    }
}
