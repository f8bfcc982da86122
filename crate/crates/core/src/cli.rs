//! Command-line front end.
//!
//! Exit codes: 0 success, 2 unreadable input or bad flags, 3 domain or
//! budget error, 4 a bound violation or verification mismatch was found.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::cheby;
use crate::convolve::{self, ConvolutionKind};
use crate::error::{Error, Result};
use crate::pinch;
use crate::poly::{text, Polynomial};
use crate::rational;
use crate::rmt::{self, RationalMatrix};
use crate::transforms::{self, BoundReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_VIOLATION: i32 = 4;
/// Failure to write the output file.
pub const EXIT_IO: i32 = 1;

const CSV_HEADER: &str = "context,param1,param2,lhs,rhs,margin,satisfied";

#[derive(Parser, Debug)]
#[command(
    name = "finfree",
    version,
    about = "Finite free convolutions, transforms, bounds and random-matrix checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Seed for every random choice; recorded in the output.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Output file (standard output when absent).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Output format; bound sweeps default to csv, everything else to json.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Check that inputs are admissible (real-rooted, nonnegative roots
    /// where required) before computing.
    #[arg(long, global = true)]
    pub validate: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Convolve two polynomial files: sym-add, sym-mult or asym-add.
    Conv {
        kind: ConvolutionKind,
        p: PathBuf,
        q: PathBuf,
        /// Convolution degree; defaults to the larger input degree.
        #[arg(long)]
        d: Option<usize>,
    },
    /// Evaluate a transform of a polynomial at the given points.
    Transform {
        which: TransformName,
        p: PathBuf,
        #[arg(
            long,
            value_delimiter = ',',
            required = true,
            allow_hyphen_values = true
        )]
        at: Vec<f64>,
    },
    /// Check a max-root bound for a pair of polynomials over a grid.
    Bounds {
        bound: BoundName,
        p: PathBuf,
        q: PathBuf,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, value_delimiter = ',', default_value = "0.25,1,4")]
        alpha_grid: Vec<f64>,
        #[arg(long, value_delimiter = ',', default_value = "0.25,1,4")]
        w_grid: Vec<f64>,
    },
    /// Pinch the extreme roots of a polynomial, preserving a barrier root.
    Pinch {
        p: PathBuf,
        #[arg(long, value_enum, default_value_t = PinchMode::Additive)]
        mode: PinchMode,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        w: Option<f64>,
        /// 1-based index of the root pinched with the largest one.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
    },
    /// Grid checks of the Chebyshev inequalities.
    Cheby {
        check: ChebyCheck,
        /// Degree or inclusive range `A..B`.
        #[arg(long)]
        d: Option<DimRange>,
        #[arg(long, value_delimiter = ',', default_value = "1")]
        alpha_grid: Vec<f64>,
        #[arg(long, default_value = "1")]
        lambda: String,
        #[arg(long, default_value = "1")]
        mu: String,
        /// Points per grid.
        #[arg(long, default_value_t = 64)]
        points: usize,
    },
    /// Compare convolution formulas with their random-matrix definitions.
    Verify {
        mode: VerifyMode,
        /// Dimension or inclusive range `A..B`.
        #[arg(long)]
        d: DimRange,
        #[arg(long, default_value = "sym-add")]
        op: ConvolutionKind,
        /// Random instances per dimension (default 20 for quadrature, 1 for
        /// Monte Carlo).
        #[arg(long)]
        instances: Option<usize>,
        /// Monte Carlo sample count.
        #[arg(long, default_value_t = 100_000)]
        n: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TransformName {
    Cauchy,
    Invcauchy,
    Rtrans,
    Mtrans,
    Strans,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BoundName {
    Sqsum,
    Recsum,
    Mult,
    Walsh,
    Szego,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PinchMode {
    /// Preserve `maxroot(U_α p)`.
    Additive,
    /// Preserve `maxroot(W_w p)`.
    Mult,
    /// Preserve `maxroot(U_α 𝕊p)`.
    Rec,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ChebyCheck {
    Barrier,
    Ratio,
    Coth,
    P1q1,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyMode {
    Quadrature,
    Montecarlo,
}

/// A single dimension `N` or an inclusive range `A..B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimRange(pub RangeInclusive<usize>);

impl FromStr for DimRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad dimension {t:?}")))
        };
        let range = match s.split_once("..") {
            Some((a, b)) => num(a)?..=num(b.trim_start_matches('='))?,
            None => num(s)?..=num(s)?,
        };
        if range.is_empty() {
            return Err(Error::Parse(format!("empty dimension range {s:?}")));
        }
        Ok(DimRange(range))
    }
}

/// A command's result: the rendered output and whether everything checked
/// out.
struct Outcome {
    body: String,
    ok: bool,
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
        }
    };
    match execute(&cli) {
        Ok(outcome) => match emit(cli.out.as_deref(), &outcome.body) {
            Ok(()) if outcome.ok => EXIT_OK,
            Ok(()) => EXIT_VIOLATION,
            Err(e) => {
                eprintln!("error: cannot write output: {e}");
                EXIT_IO
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => EXIT_PARSE,
        _ => EXIT_DOMAIN,
    }
}

fn emit(out: Option<&Path>, body: &str) -> std::io::Result<()> {
    match out {
        Some(path) => fs::write(path, body),
        None => std::io::stdout().write_all(body.as_bytes()),
    }
}

fn execute(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Conv { kind, p, q, d } => cmd_conv(cli, *kind, p, q, *d),
        Command::Transform { which, p, at } => cmd_transform(cli, *which, p, at),
        Command::Bounds {
            bound,
            p,
            q,
            d,
            alpha_grid,
            w_grid,
        } => cmd_bounds(cli, *bound, p, q, *d, alpha_grid, w_grid),
        Command::Pinch {
            p,
            mode,
            alpha,
            w,
            k,
            d,
        } => cmd_pinch(cli, p, *mode, *alpha, *w, *k, *d),
        Command::Cheby {
            check,
            d,
            alpha_grid,
            lambda,
            mu,
            points,
        } => cmd_cheby(cli, *check, d.as_ref(), alpha_grid, lambda, mu, *points),
        Command::Verify {
            mode,
            d,
            op,
            instances,
            n,
        } => cmd_verify(cli, *mode, d, *op, *instances, *n),
    }
}

fn read_poly(path: &Path) -> Result<Polynomial> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    text::parse(&text)
}

fn default_degree(p: &Polynomial, q: &Polynomial) -> Result<usize> {
    match (p.degree(), q.degree()) {
        (None, None) => Err(Error::ZeroPolynomial("both inputs are zero")),
        (a, b) => Ok(a.unwrap_or(0).max(b.unwrap_or(0))),
    }
}

fn json_only(cli: &Cli, command: &str) -> Result<()> {
    match cli.format {
        Some(Format::Csv) => Err(Error::Parse(format!("{command} output is JSON only"))),
        _ => Ok(()),
    }
}

fn pretty(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// Doubles in CSV carry 17 significant digits, enough to round-trip.
fn num(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        x.to_string()
    }
}

fn non_empty(grid: &[f64], name: &str) -> Result<()> {
    if grid.is_empty() {
        Err(Error::Parse(format!("{name} must not be empty")))
    } else {
        Ok(())
    }
}

fn cmd_conv(
    cli: &Cli,
    kind: ConvolutionKind,
    p: &Path,
    q: &Path,
    d: Option<usize>,
) -> Result<Outcome> {
    json_only(cli, "conv")?;
    let (p, q) = (read_poly(p)?, read_poly(q)?);
    let d = match d {
        Some(d) => d,
        None => default_degree(&p, &q)?,
    };
    let r = if cli.validate {
        convolve::convolve_validated(kind, &p, &q, d)?
    } else {
        convolve::convolve(kind, &p, &q, d)?
    };
    let mut value = text::to_value(&r);
    value["kind"] = json!(kind.name());
    value["seed"] = json!(cli.seed);
    Ok(Outcome {
        body: pretty(&value),
        ok: true,
    })
}

fn cmd_transform(cli: &Cli, which: TransformName, p: &Path, at: &[f64]) -> Result<Outcome> {
    let p = read_poly(p)?;
    if cli.validate && !p.is_real_rooted()? {
        return Err(Error::NotRealRooted);
    }
    let name = which
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string();
    let values = at
        .iter()
        .map(|&x| match which {
            TransformName::Cauchy => transforms::cauchy_transform(&p, x),
            TransformName::Invcauchy => transforms::inverse_cauchy(&p, x),
            TransformName::Rtrans => transforms::r_transform(&p, x),
            TransformName::Mtrans => transforms::m_transform(&p, x),
            TransformName::Strans => transforms::s_transform_variant(&p, x),
        })
        .collect::<Result<Vec<f64>>>()?;
    let body = match cli.format.unwrap_or(Format::Json) {
        Format::Json => pretty(&json!({
            "command": "transform",
            "transform": name,
            "seed": cli.seed,
            "values": at.iter().zip(&values).map(|(x, v)| json!({"at": x, "value": v})).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut s = format!("# seed={}\ncontext,point,value\n", cli.seed);
            for (x, v) in at.iter().zip(&values) {
                writeln!(s, "{name},{},{}", num(*x), num(*v)).expect("string write");
            }
            s
        }
    };
    Ok(Outcome { body, ok: true })
}

/// One row of a bound sweep.
struct Row {
    param1: String,
    param2: String,
    report: BoundReport,
}

fn render_rows(cli: &Cli, command: &str, rows: &[Row], default: Format) -> Outcome {
    let ok = rows.iter().all(|r| r.report.satisfied);
    let body = match cli.format.unwrap_or(default) {
        Format::Csv => {
            let mut s = format!("# seed={}\n{CSV_HEADER}\n", cli.seed);
            for r in rows {
                let b = &r.report;
                writeln!(
                    s,
                    "{},{},{},{},{},{},{}",
                    b.context,
                    r.param1,
                    r.param2,
                    num(b.lhs),
                    num(b.rhs),
                    num(b.margin),
                    b.satisfied
                )
                .expect("string write");
            }
            s
        }
        Format::Json => pretty(&json!({
            "command": command,
            "seed": cli.seed,
            "all_satisfied": ok,
            "rows": rows.iter().map(|r| {
                let mut v = serde_json::to_value(&r.report).expect("report serializes");
                v["param1"] = json!(r.param1);
                v["param2"] = json!(r.param2);
                v
            }).collect::<Vec<_>>(),
        })),
    };
    Outcome { body, ok }
}

fn cmd_bounds(
    cli: &Cli,
    bound: BoundName,
    p: &Path,
    q: &Path,
    d: Option<usize>,
    alpha_grid: &[f64],
    w_grid: &[f64],
) -> Result<Outcome> {
    let (p, q) = (read_poly(p)?, read_poly(q)?);
    let d = match d {
        Some(d) => d,
        None => default_degree(&p, &q)?,
    };
    if cli.validate {
        let kind = match bound {
            BoundName::Sqsum | BoundName::Walsh => ConvolutionKind::SymAdditive,
            BoundName::Mult | BoundName::Szego => ConvolutionKind::SymMultiplicative,
            BoundName::Recsum => ConvolutionKind::AsymAdditive,
        };
        convolve::validate_inputs(kind, &p, &q)?;
    }
    let ds = d.to_string();
    let sweep = |grid: &[f64],
                 name: &str,
                 check: &dyn Fn(f64) -> Result<BoundReport>|
     -> Result<Vec<Row>> {
        non_empty(grid, name)?;
        grid.iter()
            .map(|&a| {
                Ok(Row {
                    param1: num(a),
                    param2: ds.clone(),
                    report: check(a)?,
                })
            })
            .collect()
    };
    let rows = match bound {
        BoundName::Sqsum => sweep(alpha_grid, "--alpha-grid", &|a| {
            transforms::check_sqsum_bound(&p, &q, a, d)
        })?,
        BoundName::Recsum => sweep(alpha_grid, "--alpha-grid", &|a| {
            transforms::check_recsum_bound(&p, &q, a, d)
        })?,
        BoundName::Mult => sweep(w_grid, "--w-grid", &|w| {
            transforms::check_mult_bound(&p, &q, w, d)
        })?,
        BoundName::Walsh | BoundName::Szego => {
            let kind = if bound == BoundName::Walsh {
                ConvolutionKind::SymAdditive
            } else {
                ConvolutionKind::SymMultiplicative
            };
            let report = transforms::check_classical_bounds(&p, &q, kind, d)?;
            vec![Row {
                param1: String::new(),
                param2: ds.clone(),
                report,
            }]
        }
    };
    Ok(render_rows(cli, "bounds", &rows, Format::Csv))
}

fn required(v: Option<f64>, flag: &str, mode: &str) -> Result<f64> {
    v.ok_or_else(|| Error::Parse(format!("{mode} pinching needs {flag}")))
}

fn cmd_pinch(
    cli: &Cli,
    p: &Path,
    mode: PinchMode,
    alpha: Option<f64>,
    w: Option<f64>,
    k: Option<usize>,
    d: Option<usize>,
) -> Result<Outcome> {
    json_only(cli, "pinch")?;
    let p = read_poly(p)?;
    if cli.validate && !p.is_real_rooted()? {
        return Err(Error::NotRealRooted);
    }
    let d = d.or(p.degree()).ok_or(Error::ZeroPolynomial("pinch"))?;
    let result = match mode {
        PinchMode::Additive => pinch::pinch(&p, required(alpha, "--alpha", "additive")?, k)?,
        PinchMode::Mult => pinch::mult_pinch(&p, required(w, "--w", "multiplicative")?, d)?,
        PinchMode::Rec => pinch::rec_pinch(&p, required(alpha, "--alpha", "rectangular")?, d)?,
    };
    let mut value = serde_json::to_value(&result).expect("pinch result serializes");
    value["mode"] = json!(mode
        .to_possible_value()
        .expect("no skipped variants")
        .get_name());
    value["decomposition_error"] = json!(result.decomposition_error(&p));
    value["seed"] = json!(cli.seed);
    Ok(Outcome {
        body: pretty(&value),
        ok: true,
    })
}

fn cmd_cheby(
    cli: &Cli,
    check: ChebyCheck,
    d: Option<&DimRange>,
    alpha_grid: &[f64],
    lambda: &str,
    mu: &str,
    points: usize,
) -> Result<Outcome> {
    if points == 0 {
        return Err(Error::Parse("--points must be positive".into()));
    }
    let dims = |default: RangeInclusive<usize>| d.map_or(default, |r| r.0.clone());
    let mut rows = Vec::new();
    let mut push = |param1: String, grid: &[f64], reports: Vec<BoundReport>| {
        for (t, report) in grid.iter().zip(reports) {
            rows.push(Row {
                param1: param1.clone(),
                param2: num(*t),
                report,
            });
        }
    };
    match check {
        ChebyCheck::Barrier | ChebyCheck::Ratio => {
            let grid = cheby::edge_grid(points);
            for d in dims(1..=10) {
                let reports = if check == ChebyCheck::Barrier {
                    cheby::check_cheby_barrier(d, &grid)?
                } else {
                    cheby::check_cheby_ratio(d, &grid)?
                };
                push(d.to_string(), &grid, reports);
            }
        }
        ChebyCheck::Coth => {
            non_empty(alpha_grid, "--alpha-grid")?;
            let grid: Vec<f64> = (1..=points)
                .map(|i| i as f64 / (points + 1) as f64)
                .collect();
            for &alpha in alpha_grid {
                push(
                    num(alpha),
                    &grid,
                    cheby::check_coth_convexity(alpha, &grid)?,
                );
            }
        }
        ChebyCheck::P1q1 => {
            let (l, m) = (rational::parse(lambda)?, rational::parse(mu)?);
            let edge = rational::to_f64(&l).sqrt() + rational::to_f64(&m).sqrt();
            let grid: Vec<f64> = cheby::edge_grid(points)
                .iter()
                .map(|g| edge + (g - 1.0) * edge.max(1.0))
                .collect();
            for d in dims(3..=3) {
                push(
                    d.to_string(),
                    &grid,
                    cheby::check_p1q1_cauchy(d, &l, &m, &grid)?,
                );
            }
        }
    }
    Ok(render_rows(cli, "cheby", &rows, Format::Csv))
}

fn matrix_json(m: &RationalMatrix) -> Value {
    let d = m.dim();
    json!((0..d)
        .map(|i| (0..d)
            .map(|j| rational::format(m.get(i, j)))
            .collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

/// Random integer fixtures for one instance of `op` at dimension `d`.
fn fixture(
    op: ConvolutionKind,
    d: usize,
    rng: &mut ChaCha8Rng,
) -> (RationalMatrix, RationalMatrix) {
    match op {
        ConvolutionKind::SymAdditive => (
            rmt::random_integer_symmetric(d, -3, 3, rng),
            rmt::random_integer_symmetric(d, -3, 3, rng),
        ),
        ConvolutionKind::SymMultiplicative => (
            rmt::random_integer_square(d, -2, 2, rng).gram(),
            rmt::random_integer_square(d, -2, 2, rng).gram(),
        ),
        ConvolutionKind::AsymAdditive => (
            rmt::random_integer_square(d, -3, 3, rng),
            rmt::random_integer_square(d, -3, 3, rng),
        ),
    }
}

/// The convolution formula evaluated on the spectra of the fixtures.
pub fn formula_target(
    op: ConvolutionKind,
    a: &RationalMatrix,
    b: &RationalMatrix,
) -> Result<Polynomial> {
    let d = a.dim();
    match op {
        ConvolutionKind::AsymAdditive => convolve::asym_additive(
            &rmt::charpoly_exact(&a.gram()),
            &rmt::charpoly_exact(&b.gram()),
            d,
        ),
        _ => convolve::convolve(op, &rmt::charpoly_exact(a), &rmt::charpoly_exact(b), d),
    }
}

fn cmd_verify(
    cli: &Cli,
    mode: VerifyMode,
    dims: &DimRange,
    op: ConvolutionKind,
    instances: Option<usize>,
    n: u64,
) -> Result<Outcome> {
    json_only(cli, "verify")?;
    let max_d = *dims.0.end();
    if *dims.0.start() == 0 {
        return Err(Error::domain("dimensions must be at least 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let mut records = Vec::new();
    let mut ok = true;
    match mode {
        VerifyMode::Quadrature => {
            let limit = match op {
                ConvolutionKind::SymAdditive => rmt::MAX_SYM_QUADRATURE_DIM,
                ConvolutionKind::AsymAdditive => rmt::MAX_ASYM_QUADRATURE_DIM,
                ConvolutionKind::SymMultiplicative => {
                    return Err(Error::domain(
                        "quadrature is available for sym-add and asym-add",
                    ))
                }
            };
            if max_d > limit {
                return Err(Error::Budget(format!(
                    "{op} quadrature is limited to d ≤ {limit}, got {max_d}"
                )));
            }
            for d in dims.0.clone() {
                for index in 0..instances.unwrap_or(20) {
                    let (a, b) = fixture(op, d, &mut rng);
                    let quad = match op {
                        ConvolutionKind::SymAdditive => rmt::quad_sym_additive(&a, &b)?,
                        _ => rmt::quad_asym_additive(&a, &b)?,
                    };
                    let formula = formula_target(op, &a, &b)?;
                    let matches = quad == formula;
                    ok &= matches;
                    records.push(json!({
                        "d": d,
                        "index": index,
                        "a": matrix_json(&a),
                        "b": matrix_json(&b),
                        "quadrature": text::to_value(&quad),
                        "formula": text::to_value(&formula),
                        "exact_match": matches,
                    }));
                }
            }
        }
        VerifyMode::Montecarlo => {
            if n == 0 {
                return Err(Error::domain("--n must be positive"));
            }
            for d in dims.0.clone() {
                for index in 0..instances.unwrap_or(1) {
                    let (a, b) = fixture(op, d, &mut rng);
                    let sample_seed: u64 = rng.random();
                    let (fa, fb) = (a.to_f64(), b.to_f64());
                    let estimate = match op {
                        ConvolutionKind::SymAdditive => {
                            rmt::mc_sym_additive(&fa, &fb, n, sample_seed)?
                        }
                        ConvolutionKind::SymMultiplicative => {
                            rmt::mc_sym_multiplicative(&fa, &fb, n, sample_seed)?
                        }
                        ConvolutionKind::AsymAdditive => {
                            rmt::mc_asym_additive(&fa, &fb, n, sample_seed)?
                        }
                    };
                    let target = formula_target(op, &a, &b)?;
                    let exact = rmt::exact_signed(&target, d)?;
                    let z = estimate.z_scores(&exact);
                    let max_abs_z = z.iter().fold(0.0f64, |m, v| m.max(v.abs()));
                    let within = estimate.consistent_with(&exact, 4.0);
                    ok &= within;
                    records.push(json!({
                        "d": d,
                        "index": index,
                        "a": matrix_json(&a),
                        "b": matrix_json(&b),
                        "formula": text::to_value(&target),
                        "exact_coeffs": exact,
                        "estimate": estimate,
                        "z_scores": z,
                        "max_abs_z": max_abs_z,
                        "within_4_stderr": within,
                    }));
                }
            }
        }
    }
    let mode_name = mode
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string();
    let body = pretty(&json!({
        "command": "verify",
        "mode": mode_name,
        "op": op.name(),
        "seed": cli.seed,
        "n_samples": if mode == VerifyMode::Montecarlo { Some(n) } else { None },
        "all_passed": ok,
        "instances": records,
    }));
    Ok(Outcome { body, ok })
}
