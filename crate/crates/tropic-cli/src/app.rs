//! Command-line interface: argument parsing, kind dispatch, and the
//! per-command report builders.
//!
//! Exit codes: `0` success (including solvable verdicts), `1` well-posed
//! negative verdicts (no solution, empty family, dependent system, infinite
//! residual, oracle disagreement), `2` data and internal errors, `64` usage
//! errors.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use tropic::dependence;
use tropic::metric::Distance;
use tropic::oracle::{self, GridSpec};
use tropic::residual;
use tropic::semifield::{
    MaxPlus, MaxPlusExact, MaxTimes, MinPlus, Scalar, Semifield, SemifieldKind, SemifieldSpec,
};
use tropic::solver::{self, Bound, Verdict};
use tropic::{Matrix, Vector};

use crate::io;
use crate::report::{BoxRepr, Field, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_DATA: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

/// Environment variable overriding the default tolerance for float kinds.
pub const TOLERANCE_ENV: &str = "TROPIC_TOLERANCE";

#[derive(Debug)]
enum AppError {
    Usage(String),
    Data(String),
}

impl AppError {
    fn exit_code(&self) -> i32 {
        match self {
            AppError::Usage(_) => EXIT_USAGE,
            AppError::Data(_) => EXIT_DATA,
        }
    }
}

impl fmt::Display for AppError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AppError::Usage(msg) | AppError::Data(msg) => f.write_str(msg),
        }
    }
}

impl From<tropic::Error> for AppError {
    fn from(e: tropic::Error) -> Self {
        AppError::Data(e.to_string())
    }
}

impl From<io::ParseError> for AppError {
    fn from(e: io::ParseError) -> Self {
        AppError::Data(e.to_string())
    }
}

impl From<std::io::Error> for AppError {
    fn from(e: std::io::Error) -> Self {
        AppError::Data(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "tropic",
    version,
    about = "Tropical linear algebra: span distances and exact solution of A⊗x = d"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Residual Δ of d against the span of the columns of A
    Residual(ProblemArgs),
    /// Distance from d to the span, with the minimizer and nearest point
    Distance(ProblemArgs),
    /// Solve A⊗x = d (exit 1 when no solution exists)
    Solve(ProblemArgs),
    /// Pseudo-solution Δ⊗(d⁻A)⁻ (exit 1 when the residual is infinite)
    Pseudo(ProblemArgs),
    /// Enumerate the complete solution family (exit 1 when it is empty)
    General(GeneralArgs),
    /// Decide linear independence of the columns of A (exit 1 if dependent)
    Independent(ProblemArgs),
    /// Reduce the columns of A to an equivalent independent system
    Reduce(ProblemArgs),
    /// Apply the consistency transform, reporting Â and the index sets I, J
    Consistify(ProblemArgs),
    /// Brute-force oracles for reproducing verification runs
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Debug, Args)]
struct ProblemArgs {
    /// Problem file: "<kind>; A: [rows]; d: [tokens]"
    problem: Option<PathBuf>,
    /// Matrix file (rows on lines, whitespace-separated tokens)
    #[arg(short = 'A', value_name = "FILE")]
    matrix: Option<PathBuf>,
    /// Right-hand side vector file
    #[arg(short = 'd', value_name = "FILE")]
    vector: Option<PathBuf>,
    /// Semifield kind: maxplus-rational, maxplus-float, minplus-float, maxtimes-float
    #[arg(long, value_name = "KIND")]
    semifield: Option<String>,
    /// Report format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Comparison tolerance (float kinds; the rational kind is exact)
    #[arg(long, value_name = "REAL")]
    tol: Option<f64>,
}

#[derive(Debug, Args)]
struct GeneralArgs {
    #[command(flatten)]
    problem: ProblemArgs,
    /// Column cap for the subset enumeration
    #[arg(long, value_name = "INT", default_value_t = solver::DEFAULT_ENUMERATION_CAP)]
    max_cols: usize,
}

#[derive(Debug, Subcommand)]
enum OracleCommand {
    /// Sweep a grid of combinations and compare with the closed form
    Grid(GridArgs),
    /// Enumerate minimal generating subsets and compare with the solver
    Generators(GeneralArgs),
    /// Emit a deterministic random instance as a problem file
    Random(RandomArgs),
}

#[derive(Debug, Args)]
struct GridArgs {
    #[command(flatten)]
    problem: ProblemArgs,
    /// Lower grid bound (token in the chosen kind)
    #[arg(long, default_value = "-15", value_name = "TOKEN", allow_hyphen_values = true)]
    lo: String,
    /// Upper grid bound
    #[arg(long, default_value = "15", value_name = "TOKEN", allow_hyphen_values = true)]
    hi: String,
    /// Grid step
    #[arg(long, default_value = "1/2", value_name = "TOKEN", allow_hyphen_values = true)]
    step: String,
    /// Grid point limit
    #[arg(long, value_name = "INT", default_value_t = oracle::DEFAULT_GRID_POINT_LIMIT)]
    cap: u128,
}

#[derive(Debug, Args)]
struct RandomArgs {
    /// Generator seed
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value_t = 3)]
    rows: usize,
    #[arg(long, default_value_t = 3)]
    cols: usize,
    /// Probability that an entry is nonzero
    #[arg(long, default_value_t = 0.75)]
    density: f64,
    /// Lower value bound (integer)
    #[arg(long, default_value_t = -5, allow_hyphen_values = true)]
    lo: i64,
    /// Upper value bound (integer)
    #[arg(long, default_value_t = 5, allow_hyphen_values = true)]
    hi: i64,
}

/// Entry point shared by the binary and the tests.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    eprint!("{e}");
                    EXIT_USAGE
                }
            }
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

/// Raw, kind-independent inputs of one invocation.
struct Inputs {
    problem_text: Option<String>,
    matrix_text: Option<String>,
    vector_text: Option<String>,
    spec: SemifieldSpec,
    format: Format,
}

fn resolve_inputs(args: &ProblemArgs) -> Result<Inputs, AppError> {
    let flag_kind = match &args.semifield {
        Some(tag) => Some(
            SemifieldKind::from_tag(tag)
                .ok_or_else(|| AppError::Usage(format!("unknown semifield: {tag:?}")))?,
        ),
        None => None,
    };

    let (problem_text, kind) = match &args.problem {
        Some(path) => {
            if args.matrix.is_some() || args.vector.is_some() {
                return Err(AppError::Usage(
                    "give either a problem file or -A/-d, not both".into(),
                ));
            }
            let text = std::fs::read_to_string(path)?;
            let source = io::parse_problem_source(&text)?;
            if let Some(flagged) = flag_kind {
                if flagged != source.kind {
                    return Err(AppError::Usage(format!(
                        "--semifield {} conflicts with the problem file's {}",
                        flagged, source.kind
                    )));
                }
            }
            (Some(text), source.kind)
        }
        None => (None, flag_kind.unwrap_or(SemifieldKind::MaxPlusRational)),
    };

    let matrix_text = match &args.matrix {
        Some(path) => Some(std::fs::read_to_string(path)?),
        None => None,
    };
    if problem_text.is_none() && matrix_text.is_none() {
        return Err(AppError::Usage(
            "no input: give a problem file or -A <file>".into(),
        ));
    }
    let vector_text = match &args.vector {
        Some(path) => Some(std::fs::read_to_string(path)?),
        None => None,
    };

    let tolerance = match args.tol {
        Some(t) => t,
        None => match std::env::var(TOLERANCE_ENV) {
            Ok(raw) if !kind.is_exact() => raw.parse::<f64>().map_err(|_| {
                AppError::Usage(format!("{TOLERANCE_ENV} is not a number: {raw:?}"))
            })?,
            _ => SemifieldSpec::with_default_tolerance(kind).tolerance,
        },
    };
    let spec = SemifieldSpec::new(kind, tolerance).map_err(|e| AppError::Usage(e.to_string()))?;

    Ok(Inputs {
        problem_text,
        matrix_text,
        vector_text,
        spec,
        format: args.format,
    })
}

/// Parses the matrix (and the vector when present) for a concrete kind.
fn load<S: Semifield>(inputs: &Inputs) -> Result<(Matrix<S>, Option<Vector<S>>), AppError> {
    if let Some(text) = &inputs.problem_text {
        let source = io::parse_problem_source(text)?;
        let a = io::parse_matrix_body::<S>(text, &source.matrix_src, source.matrix_offset)?;
        let d = match &source.vector_src {
            Some(body) => Some(io::parse_vector_body::<S>(text, body, source.vector_offset)?),
            None => None,
        };
        return Ok((a, d));
    }
    let matrix_text = inputs.matrix_text.as_ref().expect("resolver checked");
    let a = io::parse_matrix_body::<S>(matrix_text, matrix_text, 0)?;
    let d = match &inputs.vector_text {
        Some(text) => Some(io::parse_vector_body::<S>(text, text, 0)?),
        None => None,
    };
    Ok((a, d))
}

/// Everything a typed command needs.
struct Ctx<S: Semifield> {
    a: Matrix<S>,
    d: Option<Vector<S>>,
    spec: SemifieldSpec,
    format: Format,
}

impl<S: Semifield> Ctx<S> {
    fn tol(&self) -> f64 {
        self.spec.tolerance
    }

    fn require_d(&self) -> Result<&Vector<S>, AppError> {
        let d = self.d.as_ref().ok_or_else(|| {
            AppError::Usage(
                "this command needs a right-hand side: give -d or a \"d:\" section".into(),
            )
        })?;
        if self.a.rows() != d.len() {
            return Err(AppError::Data(format!(
                "dimension mismatch: matrix has {} rows, vector has {} components",
                self.a.rows(),
                d.len()
            )));
        }
        Ok(d)
    }

    fn header(&self, command: &str) -> Report {
        let mut r = Report::new();
        r.text("command", command)
            .text("semifield", S::KIND.tag())
            .text("tolerance", format!("{}", self.spec.tolerance))
            .text("A", self.a.to_string());
        if let Some(d) = &self.d {
            r.text("d", d.to_string());
        }
        r
    }

    fn emit(&self, report: &Report, out: &mut dyn Write) -> Result<(), AppError> {
        let rendered = match self.format {
            Format::Text => report.render_text(),
            Format::Json => report.render_json(),
        };
        out.write_all(rendered.as_bytes())?;
        Ok(())
    }

    /// Columns must be nonzero for the dependence commands.
    fn reject_zero_columns(&self) -> Result<(), AppError> {
        let zeros = self.a.zero_columns();
        if let Some(&j) = zeros.first() {
            return Err(AppError::Data(format!(
                "column {} of A is the zero vector; dependence analysis needs nonzero columns",
                j + 1
            )));
        }
        Ok(())
    }
}

/// A command body generic over the semifield kind.
trait GenericRun {
    fn run<S: Semifield>(&self, ctx: Ctx<S>, out: &mut dyn Write) -> Result<i32, AppError>;
}

fn dispatch<R: GenericRun>(args: &ProblemArgs, out: &mut dyn Write, run: R) -> Result<i32, AppError> {
    let inputs = resolve_inputs(args)?;
    fn typed<S: Semifield, R: GenericRun>(
        inputs: &Inputs,
        out: &mut dyn Write,
        run: &R,
    ) -> Result<i32, AppError> {
        let (a, d) = load::<S>(inputs)?;
        let ctx = Ctx {
            a,
            d,
            spec: inputs.spec,
            format: inputs.format,
        };
        run.run::<S>(ctx, out)
    }
    match inputs.spec.kind {
        SemifieldKind::MaxPlusRational => typed::<MaxPlusExact, R>(&inputs, out, &run),
        SemifieldKind::MaxPlusFloat => typed::<MaxPlus, R>(&inputs, out, &run),
        SemifieldKind::MinPlusFloat => typed::<MinPlus, R>(&inputs, out, &run),
        SemifieldKind::MaxTimesFloat => typed::<MaxTimes, R>(&inputs, out, &run),
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, AppError> {
    match cli.command {
        Command::Residual(args) => dispatch(&args, out, RunResidual),
        Command::Distance(args) => dispatch(&args, out, RunDistance),
        Command::Solve(args) => dispatch(&args, out, RunSolve),
        Command::Pseudo(args) => dispatch(&args, out, RunPseudo),
        Command::General(args) => dispatch(&args.problem, out, RunGeneral { cap: args.max_cols }),
        Command::Independent(args) => dispatch(&args, out, RunIndependent),
        Command::Reduce(args) => dispatch(&args, out, RunReduce),
        Command::Consistify(args) => dispatch(&args, out, RunConsistify),
        Command::Oracle(OracleCommand::Grid(args)) => {
            let run = RunOracleGrid {
                lo: args.lo.clone(),
                hi: args.hi.clone(),
                step: args.step.clone(),
                cap: args.cap,
            };
            dispatch(&args.problem, out, run)
        }
        Command::Oracle(OracleCommand::Generators(args)) => {
            dispatch(&args.problem, out, RunOracleGenerators { cap: args.max_cols })
        }
        Command::Oracle(OracleCommand::Random(args)) => run_oracle_random(&args, out),
    }
}

fn vector_tokens<S: Semifield>(v: &Vector<S>) -> Field {
    Field::TokenList(v.iter().map(|c| c.to_string()).collect())
}

fn one_based(indices: &[usize]) -> Vec<usize> {
    indices.iter().map(|&i| i + 1).collect()
}

fn residual_fields<S: Semifield>(r: &mut Report, delta: &Distance<S>, tol: f64) {
    r.text("residual", delta.to_string());
    r.push("residual-is-one", Field::Bool(delta.is_one(tol)));
}

struct RunResidual;

impl GenericRun for RunResidual {
    fn run<S: Semifield>(&self, ctx: Ctx<S>, out: &mut dyn Write) -> Result<i32, AppError> {
        let d = ctx.require_d()?.clone();
        let span = residual::distance_to_span(&ctx.a, &d)?;
        let mut report = ctx.header("residual");
        residual_fields(&mut report, &span.delta, ctx.tol());
        ctx.emit(&report, out)?;
        Ok(EXIT_OK)
    }
}

struct RunDistance;

impl GenericRun for RunDistance {
    fn run<S: Semifield>(&self, ctx: Ctx<S>, out: &mut dyn Write) -> Result<i32, AppError> {
        let d = ctx.require_d()?.clone();
        let span = residual::distance_to_span(&ctx.a, &d)?;
        let mut report = ctx.header("distance");
        residual_fields(&mut report, &span.delta, ctx.tol());
        match &span.minimizer {
            Some(x) => report.push("minimizer", vector_tokens(x)),
            None => report.push("minimizer", Field::None),
        };
        match &span.nearest_point {
            Some(y) => report.push("nearest-point", vector_tokens(y)),
            None => report.push("nearest-point", Field::None),
        };
        ctx.emit(&report, out)?;
        Ok(EXIT_OK)
    }
}

struct RunSolve;

impl GenericRun for RunSolve {
    fn run<S: Semifield>(&self, ctx: Ctx<S>, out: &mut dyn Write) -> Result<i32, AppError> {
        let d = ctx.require_d()?.clone();
        let solution = solver::solve(&ctx.a, &d, ctx.tol())?;
        let mut report = ctx.header("solve");
        residual_fields(&mut report, &solution.residual, ctx.tol());
        let verdict = match solution.verdict {
            Verdict::NoSolution => "none",
            Verdict::Unique => "unique",
            Verdict::Family => "family",
        };
        report.text("verdict", verdict);
        match &solution.principal {
            Some(x) => report.push("principal", vector_tokens(x)),
            None => report.push("principal", Field::None),
        };
        match &solution.pseudo {
            Some(x) => report.push("pseudo", vector_tokens(x)),
            None => report.push("pseudo", Field::None),
        };
        report.push("free-indices", Field::IndexSet(one_based(&solution.free_indices)));
        ctx.emit(&report, out)?;
        Ok(if solution.verdict == Verdict::NoSolution {
            EXIT_NEGATIVE
        } else {
            EXIT_OK
        })
    }
}

struct RunPseudo;

impl GenericRun for RunPseudo {
    fn run<S: Semifield>(&self, ctx: Ctx<S>, out: &mut dyn Write) -> Result<i32, AppError> {
        let d = ctx.require_d()?.clone();
        let span = residual::distance_to_span(&ctx.a, &d)?;
        let mut report = ctx.header("pseudo");
        residual_fields(&mut report, &span.delta, ctx.tol());
        match solver::pseudo_solve(&ctx.a, &d) {
            Ok(x) => {
                let nearest = ctx.a.mul_vec(&x)?;
                report.push("pseudo", vector_tokens(&x));
                report.push("nearest-point", vector_tokens(&nearest));
                ctx.emit(&report, out)?;
                Ok(EXIT_OK)
            }
            Err(tropic::Error::InfiniteResidual) => {
                report.push("pseudo", Field::None);
                report.push("nearest-point", Field::None);
                ctx.emit(&report, out)?;
                Ok(EXIT_NEGATIVE)
            }
            Err(e) => Err(e.into()),
        }
    }
}

struct RunGeneral {
    cap: usize,
}

impl GenericRun for RunGeneral {
    fn run<S: Semifield>(&self, ctx: Ctx<S>, out: &mut dyn Write) -> Result<i32, AppError> {
        let d = ctx.require_d()?.clone();
        let solution = solver::solve(&ctx.a, &d, ctx.tol())?;
        let general = solver::general_solution(&ctx.a, &d, self.cap, ctx.tol())?;
        let mut report = ctx.header("general");
        report.push("max-cols", Field::UInt(self.cap));
        residual_fields(&mut report, &solution.residual, ctx.tol());
        report.push("family-size", Field::UInt(general.family.len()));
        report.push("complete", Field::Bool(general.complete));
        report.push("family", Field::Boxes(boxes_repr(&general.family)));
        ctx.emit(&report, out)?;
        Ok(if general.family.is_empty() {
            EXIT_NEGATIVE
        } else {
            EXIT_OK
        })
    }
}

fn boxes_repr<S: Semifield>(family: &[solver::BoxSolution<S>]) -> Vec<BoxRepr> {
    family
        .iter()
        .map(|b| BoxRepr {
            index_set: one_based(&b.index_set),
            fixed: b
                .fixed
                .iter()
                .map(|(i, value)| (i + 1, value.to_string()))
                .collect(),
            bounds: b
                .upper_bounds
                .iter()
                .map(|(i, bound)| match bound {
                    Bound::Finite(value) => (i + 1, Some(value.to_string())),
                    Bound::Unbounded => (i + 1, None),
                })
                .collect(),
        })
        .collect()
}

struct RunIndependent;

impl GenericRun for RunIndependent {
    fn run<S: Semifield>(&self, ctx: Ctx<S>, out: &mut dyn Write) -> Result<i32, AppError> {
        ctx.reject_zero_columns()?;
        let mut report = ctx.header("independent");
        report.push("columns", Field::UInt(ctx.a.cols()));
        let independent = if ctx.a.cols() == 1 {
            report.push("delta", Field::None);
            true
        } else {
            let delta = dependence::delta_independence(&ctx.a)?;
            report.text("delta", delta.to_string());
            delta.gt_one(ctx.tol())
        };
        report.push("independent", Field::Bool(independent));
        ctx.emit(&report, out)?;
        Ok(if independent { EXIT_OK } else { EXIT_NEGATIVE })
    }
}

struct RunReduce;

impl GenericRun for RunReduce {
    fn run<S: Semifield>(&self, ctx: Ctx<S>, out: &mut dyn Write) -> Result<i32, AppError> {
        ctx.reject_zero_columns()?;
        let trace = dependence::reduce_to_independent(&ctx.a, ctx.tol())?;
        let mut report = ctx.header("reduce");
        report.push("kept", Field::IndexSet(one_based(&trace.kept)));
        report.push("removed", Field::IndexSet(one_based(&trace.removed)));
        report.push(
            "step-residuals",
            Field::TokenList(trace.step_residuals.iter().map(|d| d.to_string()).collect()),
        );
        ctx.emit(&report, out)?;
        Ok(EXIT_OK)
    }
}

struct RunConsistify;

impl GenericRun for RunConsistify {
    fn run<S: Semifield>(&self, ctx: Ctx<S>, out: &mut dyn Write) -> Result<i32, AppError> {
        let d = ctx.require_d()?.clone();
        let consistency = residual::consistify(&ctx.a, &d)?;
        let mut report = ctx.header("consistify");
        report.text("a-hat", consistency.a_hat.to_string());
        report.push(
            "zero-rows-of-d",
            Field::IndexSet(one_based(&consistency.zero_rows_of_d)),
        );
        report.push(
            "forced-zero-columns",
            Field::IndexSet(one_based(&consistency.forced_zero_columns)),
        );
        ctx.emit(&report, out)?;
        Ok(EXIT_OK)
    }
}

struct RunOracleGrid {
    lo: String,
    hi: String,
    step: String,
    cap: u128,
}

impl GenericRun for RunOracleGrid {
    fn run<S: Semifield>(&self, ctx: Ctx<S>, out: &mut dyn Write) -> Result<i32, AppError> {
        let d = ctx.require_d()?.clone();
        let parse = |token: &str| -> Result<Scalar<S>, AppError> {
            token
                .parse::<Scalar<S>>()
                .map_err(|e| AppError::Usage(format!("grid bound {token:?}: {e}")))
        };
        let grid = GridSpec::new(
            parse(&self.lo)?,
            parse(&self.hi)?,
            parse(&self.step)?,
            ctx.a.cols(),
        )
        .map_err(|e| AppError::Usage(e.to_string()))?;
        let per_dim = grid.values().len();
        let (oracle_min, argmin) =
            oracle::grid_min_distance_with_cap(&ctx.a, &d, &grid, self.cap)?;
        let span = residual::distance_to_span(&ctx.a, &d)?;
        let agreement = oracle_min == span.delta;

        let mut report = ctx.header("oracle grid");
        report
            .text("grid-lo", &self.lo)
            .text("grid-hi", &self.hi)
            .text("grid-step", &self.step)
            .push("grid-points-per-dim", Field::UInt(per_dim));
        report.text("oracle-min", oracle_min.to_string());
        report.push("oracle-argmin", vector_tokens(&argmin));
        report.text("closed-form", span.delta.to_string());
        report.push("agreement", Field::Bool(agreement));
        ctx.emit(&report, out)?;
        Ok(if agreement { EXIT_OK } else { EXIT_NEGATIVE })
    }
}

struct RunOracleGenerators {
    cap: usize,
}

impl GenericRun for RunOracleGenerators {
    fn run<S: Semifield>(&self, ctx: Ctx<S>, out: &mut dyn Write) -> Result<i32, AppError> {
        let d = ctx.require_d()?.clone();
        let oracle_sets = oracle::enumerate_minimal_generators(&ctx.a, &d, ctx.tol())?;
        let general = solver::general_solution(&ctx.a, &d, self.cap, ctx.tol())?;
        let solver_sets: Vec<Vec<usize>> = general
            .family
            .iter()
            .map(|b| b.index_set.clone())
            .collect();
        let agreement = oracle_sets == solver_sets;

        let mut report = ctx.header("oracle generators");
        report.push(
            "minimal-generators",
            Field::SetList(oracle_sets.iter().map(|s| one_based(s)).collect()),
        );
        report.push(
            "solver-generators",
            Field::SetList(solver_sets.iter().map(|s| one_based(s)).collect()),
        );
        report.push("agreement", Field::Bool(agreement));
        ctx.emit(&report, out)?;
        Ok(if agreement { EXIT_OK } else { EXIT_NEGATIVE })
    }
}

fn run_oracle_random(args: &RandomArgs, out: &mut dyn Write) -> Result<i32, AppError> {
    if !(0.0..=1.0).contains(&args.density) {
        return Err(AppError::Usage("density must lie in [0,1]".into()));
    }
    if args.lo >= args.hi {
        return Err(AppError::Usage("--lo must be below --hi".into()));
    }
    if args.rows == 0 || args.cols == 0 {
        return Err(AppError::Usage("dimensions must be positive".into()));
    }
    let (a, d) = oracle::random_instance(
        args.seed, args.rows, args.cols, args.density, args.lo, args.hi,
    );
    out.write_all(io::print_problem(&a, &d).as_bytes())?;
    Ok(EXIT_OK)
}
