//! Command-line interface: compute interpolation polynomials, print
//! value tables and operator matrices, and run the exact verification
//! suites.
//!
//! Exit codes: 0 on success, 1 when a verification suite reports a
//! failing identity, 2 on usage or precondition errors.

mod render;

use std::io::Write;
use std::process::ExitCode;

use capelli_core::datum::Weight;
use capelli_core::ftau::virtual_dimension;
use capelli_core::ops::{exp_ad_l_with, OpMatrix};
use capelli_core::verify::{applicable_suites, run_suite, SuiteParams, SuiteReport};
use capelli_core::{
    dominance_class, parse_rat, Case, Error as CoreError, MultiPoly, Rat, Rho, RootDatum, Tables,
    DEFAULT_SEED,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use render::SCHEMA;

#[derive(Parser)]
#[command(
    name = "capelli",
    version,
    about = "Exact interpolation polynomials, difference operators, and identity verification for multiplicity free weight data"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute one interpolation polynomial (or its normalization, or the
    /// virtual dimension) for a dominant weight.
    Compute(ComputeArgs),
    /// Print the full value table p_mu(rho + lambda) up to a depth.
    Table(TableArgs),
    /// Print one operator as an exact matrix on a truncated basis.
    Op(OpArgs),
    /// Run named verification suites and report exact residuals.
    Verify(VerifyArgs),
    /// Walk through the one-dimensional closed forms.
    RankOneDemo(DemoArgs),
}

#[derive(Args, Clone)]
struct CommonArgs {
    /// Which combinatorial case to build: rank-one, classical, semiclassical.
    #[arg(long, default_value = "rank-one")]
    case: String,
    /// Dimension of the weight space (forced to 1 for rank-one).
    #[arg(long, default_value_t = 1)]
    n: usize,
    /// First shift parameter, as an exact rational "p/q".
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    r: String,
    /// Second shift parameter, as an exact rational "p/q".
    #[arg(long, default_value = "1/2", allow_hyphen_values = true)]
    s: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Latex,
    Text,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Dominant weight, comma-separated: e.g. "2" or "2,1,0".
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    /// What to compute: p, q, or d (virtual dimension only).
    #[arg(long, default_value = "p")]
    which: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to a file instead of stdout.
    #[arg(long)]
    output: Option<String>,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[arg(long, default_value_t = 3)]
    max_ell: i64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    output: Option<String>,
}

#[derive(Args)]
struct OpArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Operator: L, L-, L*, E, ell, D, m. D and m take --h.
    #[arg(long)]
    which: String,
    /// Invariant used by D and m: ell, ell2, or orbit2.
    #[arg(long, default_value = "ell")]
    h: String,
    /// Basis truncation depth.
    #[arg(long, default_value_t = 4)]
    truncation: i64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    output: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Suite name, or "all" for every suite that applies to the case.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 3)]
    max_ell: i64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads for running suites.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long)]
    output: Option<String>,
}

#[derive(Args)]
struct DemoArgs {
    /// Shift parameter, as an exact rational "p/q".
    #[arg(long, default_value = "1/2", allow_hyphen_values = true)]
    s: String,
    #[arg(long, default_value_t = 4)]
    max_ell: i64,
}

struct Failure {
    message: String,
    code: u8,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            message: message.into(),
            code: 2,
        }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        Failure {
            message: e.to_string(),
            code: 2,
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            message: e.to_string(),
            code: 2,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.cmd {
        Cmd::Compute(args) => cmd_compute(args),
        Cmd::Table(args) => cmd_table(args),
        Cmd::Op(args) => cmd_op(args),
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::RankOneDemo(args) => cmd_demo(args),
    }
}

fn seed_from_env() -> Result<u64, Failure> {
    match std::env::var("CAPELLI_SEED") {
        Ok(text) => text
            .trim()
            .parse::<u64>()
            .map_err(|_| Failure::usage(format!("CAPELLI_SEED is not a u64: {text:?}"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

struct Setup {
    datum: RootDatum,
    rho: Rho,
    r: Rat,
    s: Rat,
}

fn setup(common: &CommonArgs) -> Result<Setup, Failure> {
    let case = Case::parse(&common.case)?;
    let datum = RootDatum::new(case, common.n)?;
    let r = parse_rat(&common.r)?;
    let s = parse_rat(&common.s)?;
    let rho = Rho::new(&datum, r.clone(), s.clone());
    Ok(Setup { datum, rho, r, s })
}

fn emit(output: &Option<String>, body: &str) -> Result<(), Failure> {
    match output {
        Some(path) => {
            let mut f = std::fs::File::create(path)?;
            writeln!(f, "{body}")?;
        }
        None => {
            // A consumer that closes the pipe early is not an error;
            // stop writing and let the exit code stand.
            let mut out = std::io::stdout().lock();
            match writeln!(out, "{body}") {
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
                other => other?,
            }
        }
    }
    Ok(())
}

fn parse_lambda(text: &str, n: usize) -> Result<Weight, Failure> {
    let coords: Result<Vec<i64>, _> = text.split(',').map(|t| t.trim().parse::<i64>()).collect();
    let coords = coords.map_err(|_| Failure::usage(format!("malformed weight: {text:?}")))?;
    if coords.len() != n {
        return Err(Failure::usage(format!(
            "weight has {} coordinates, expected {n}",
            coords.len()
        )));
    }
    Ok(Weight(coords))
}

fn cmd_compute(args: ComputeArgs) -> Result<u8, Failure> {
    let Setup { datum, rho, r, s } = setup(&args.common)?;
    let lambda = parse_lambda(&args.lambda, datum.n())?;
    if !datum.in_lambda_plus(&lambda.0) {
        return Err(Failure::usage(format!(
            "weight {:?} is not dominant for the {} case",
            lambda.0,
            datum.case().name()
        )));
    }
    let flags = dominance_class(&datum, &rho);
    if !flags.dominant {
        return Err(Failure::usage(
            "precondition violated: rho is not dominant",
        ));
    }
    let ell = datum.ell(&lambda);
    let dim = if flags.strongly_dominant {
        Some(virtual_dimension(&datum, &rho, &lambda)?)
    } else {
        None
    };

    let poly = match args.which.as_str() {
        "p" => Some(capelli_core::capelli_polynomial(&datum, &rho, &lambda)?),
        "q" => {
            if !flags.strongly_dominant {
                return Err(Failure::usage(
                    "precondition violated: rho is not strongly dominant",
                ));
            }
            Some(capelli_core::q_polynomial(&datum, &rho, &lambda)?)
        }
        "d" => {
            if dim.is_none() {
                return Err(Failure::usage(
                    "precondition violated: rho is not strongly dominant",
                ));
            }
            None
        }
        other => return Err(Failure::usage(format!("unknown --which: {other:?}"))),
    };

    let body = match args.format {
        Format::Json => {
            let dto = render::ComputeDto {
                schema: SCHEMA,
                command: "compute",
                case_name: datum.case().name().to_string(),
                n: datum.n(),
                r: r.to_string(),
                s: s.to_string(),
                lambda: lambda.0.clone(),
                ell,
                d_lambda: dim.as_ref().map(|d| d.to_string()),
                which: args.which.clone(),
                polynomial: poly.as_ref().map(render::poly_terms),
            };
            serde_json::to_string(&dto).expect("serialization cannot fail")
        }
        Format::Latex => match &poly {
            Some(p) => render::latex_poly(p),
            None => render::latex_poly(&MultiPoly::constant(
                datum.n(),
                dim.clone().expect("dimension present for which=d"),
            )),
        },
        Format::Text => {
            let mut out = format!(
                "case {} n={} r={} s={} lambda={:?} ell={}",
                datum.case().name(),
                datum.n(),
                r,
                s,
                lambda.0,
                ell
            );
            if let Some(d) = &dim {
                out.push_str(&format!(" d={d}"));
            }
            if let Some(p) = &poly {
                out.push_str(&format!("\n{}[{}] = {}", args.which, args.lambda, p));
            }
            out
        }
    };
    emit(&args.output, &body)?;
    Ok(0)
}

fn cmd_table(args: TableArgs) -> Result<u8, Failure> {
    let Setup { datum, rho, r, s } = setup(&args.common)?;
    if args.max_ell < 0 {
        return Err(Failure::usage("--max-ell must be nonnegative"));
    }
    let tables = Tables::build(&datum, &rho, args.max_ell)?;
    let (weights, entries) = render::table_entries(&tables);
    let body = match args.format {
        Format::Json => {
            let dto = render::TableDto {
                schema: SCHEMA,
                command: "table",
                case_name: datum.case().name().to_string(),
                n: datum.n(),
                r: r.to_string(),
                s: s.to_string(),
                max_ell: args.max_ell,
                weights,
                entries,
            };
            serde_json::to_string(&dto).expect("serialization cannot fail")
        }
        Format::Latex => {
            return Err(Failure::usage("table has no latex format"));
        }
        Format::Text => {
            let mut out = String::new();
            out.push_str(&format!(
                "value table, {} n={} r={} s={} depth {}\nrows mu, columns lambda: p_mu(rho + lambda)\n",
                datum.case().name(),
                datum.n(),
                r,
                s,
                args.max_ell
            ));
            for (mu, row) in entries.iter().enumerate() {
                out.push_str(&format!("{:?}: {}\n", weights[mu], row.join(" ")));
            }
            out.pop();
            out
        }
    };
    emit(&args.output, &body)?;
    Ok(0)
}

fn named_invariant(datum: &RootDatum, name: &str) -> Result<MultiPoly, Failure> {
    match name {
        "ell" => Ok(datum.ell_poly()),
        "ell2" => Ok(datum.ell_poly().pow(2)),
        "orbit2" => {
            let mut e = vec![0u32; datum.n()];
            e[0] = 2;
            Ok(datum.orbit_sum(&capelli_core::Monomial(e)))
        }
        other => Err(Failure::usage(format!("unknown --h: {other:?}"))),
    }
}

fn cmd_op(args: OpArgs) -> Result<u8, Failure> {
    let Setup { datum, rho, r, s } = setup(&args.common)?;
    if args.truncation < 1 {
        return Err(Failure::usage("--truncation must be at least 1"));
    }
    let tables = Tables::build(&datum, &rho, args.truncation)?;
    let op = match args.which.as_str() {
        "L" => OpMatrix::raising(&tables)?,
        "L-" => OpMatrix::lowering_conjugate(&tables)?,
        "L*" => OpMatrix::lowering_adjoint(&tables)?,
        "E" => OpMatrix::euler(&tables),
        "ell" => OpMatrix::ell_mult(&tables)?,
        "D" => OpMatrix::eigen_of(&tables, &named_invariant(&datum, &args.h)?),
        "m" => OpMatrix::mult(&tables, &named_invariant(&datum, &args.h)?)?,
        other => return Err(Failure::usage(format!("unknown --which: {other:?}"))),
    };
    let weights: Vec<Vec<i64>> = tables.weights().iter().map(|w| w.0.clone()).collect();
    let entries: Vec<Vec<String>> = (0..tables.len())
        .map(|i| {
            (0..tables.len())
                .map(|j| op.mat().get(i, j).to_string())
                .collect()
        })
        .collect();
    let body = match args.format {
        Format::Json => {
            let dto = render::OpDto {
                schema: SCHEMA,
                command: "op",
                case_name: datum.case().name().to_string(),
                n: datum.n(),
                r: r.to_string(),
                s: s.to_string(),
                which: args.which.clone(),
                truncation: args.truncation,
                degree_shift: op.shift(),
                window: op.window(),
                weights,
                entries,
            };
            serde_json::to_string(&dto).expect("serialization cannot fail")
        }
        Format::Latex => return Err(Failure::usage("op has no latex format")),
        Format::Text => {
            let mut out = format!(
                "operator {} at truncation {} (degree shift {}, window {})\n",
                args.which,
                args.truncation,
                op.shift(),
                op.window()
            );
            for (i, row) in entries.iter().enumerate() {
                out.push_str(&format!("{:?}: {}\n", weights[i], row.join(" ")));
            }
            out.pop();
            out
        }
    };
    emit(&args.output, &body)?;
    Ok(0)
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, Failure> {
    let Setup { datum, rho: _, r, s } = setup(&args.common)?;
    if args.max_ell < 0 {
        return Err(Failure::usage("--max-ell must be nonnegative"));
    }
    let seed = seed_from_env()?;
    let params = SuiteParams {
        case: datum.case(),
        n: datum.n(),
        r,
        s,
        max_ell: args.max_ell,
        seed,
    };
    let names: Vec<&'static str> = if args.suite == "all" {
        applicable_suites(datum.case())
    } else {
        let name = capelli_core::verify::SUITE_NAMES
            .iter()
            .copied()
            .find(|&n| n == args.suite)
            .ok_or_else(|| Failure::usage(format!("unknown suite: {:?}", args.suite)))?;
        vec![name]
    };

    let reports = run_suites(&names, &params, args.jobs.max(1))?;
    let pass = reports.iter().all(|rep| rep.pass());

    let body = match args.format {
        Format::Json => {
            let dto = render::VerifyDto {
                schema: SCHEMA,
                command: "verify",
                pass,
                reports: reports.iter().map(render::report_dto).collect(),
            };
            serde_json::to_string(&dto).expect("serialization cannot fail")
        }
        Format::Latex => return Err(Failure::usage("verify has no latex format")),
        Format::Text => {
            let mut out = String::new();
            for rep in &reports {
                out.push_str(&format!(
                    "{:<16} {} n={} r={} s={} depth {}: {} ({} checks, {} failures)\n",
                    rep.suite,
                    rep.case_name,
                    rep.n,
                    rep.r,
                    rep.s,
                    rep.max_ell,
                    if rep.pass() { "PASS" } else { "FAIL" },
                    rep.checks,
                    rep.failures.len()
                ));
                for f in &rep.failures {
                    out.push_str(&format!(
                        "  {} lambda={:?} mu={:?} residual={}\n",
                        f.check, f.lambda, f.mu, f.residual
                    ));
                }
            }
            out.pop();
            out
        }
    };
    emit(&args.output, &body)?;
    Ok(if pass { 0 } else { 1 })
}

/// Run suites on up to `jobs` worker threads; results keep the requested
/// order regardless of completion order.
fn run_suites(
    names: &[&'static str],
    params: &SuiteParams,
    jobs: usize,
) -> Result<Vec<SuiteReport>, Failure> {
    if jobs <= 1 || names.len() <= 1 {
        return names
            .iter()
            .map(|name| run_suite(name, params).map_err(Failure::from))
            .collect();
    }
    let mut slots: Vec<Option<Result<SuiteReport, CoreError>>> = Vec::new();
    slots.resize_with(names.len(), || None);
    let next = std::sync::atomic::AtomicUsize::new(0);
    let slots = std::sync::Mutex::new(&mut slots);
    std::thread::scope(|scope| {
        for _ in 0..jobs.min(names.len()) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                if i >= names.len() {
                    break;
                }
                let result = run_suite(names[i], params);
                slots.lock().expect("worker poisoned the slot lock")[i] = Some(result);
            });
        }
    });
    let slots = slots.into_inner().expect("worker poisoned the slot lock");
    slots
        .iter_mut()
        .map(|slot| {
            slot.take()
                .expect("every suite slot is filled")
                .map_err(Failure::from)
        })
        .collect()
}

fn cmd_demo(args: DemoArgs) -> Result<u8, Failure> {
    let s = parse_rat(&args.s)?;
    let datum = RootDatum::new(Case::RankOne, 1)?;
    let rho = Rho::new(&datum, parse_rat("0")?, s.clone());
    if !dominance_class(&datum, &rho).strongly_dominant {
        return Err(Failure::usage(
            "precondition violated: rho is not strongly dominant (2s must avoid nonpositive integers)",
        ));
    }
    let depth = args.max_ell.max(1);
    let tables = Tables::build(&datum, &rho, depth)?;

    let mut out = String::new();
    out.push_str(&format!("one-dimensional data at s = {s}\n\n"));
    out.push_str("interpolation basis (binomial closed forms):\n");
    for i in 0..tables.len() {
        out.push_str(&format!("  p_{} = {}\n", i, tables.p(i)));
    }
    out.push_str("\nvirtual dimensions:\n");
    for i in 0..tables.len() {
        out.push_str(&format!("  d_{} = {}\n", i, tables.dim(i)?));
    }
    out.push_str("\nvalue table (rows mu, columns lambda, binomial coefficients):\n");
    for mu in 0..tables.len() {
        let row: Vec<String> = (0..tables.len())
            .map(|lam| tables.value(mu, lam).to_string())
            .collect();
        out.push_str(&format!("  {}\n", row.join(" ")));
    }
    let l = OpMatrix::raising(&tables)?;
    out.push_str("\nraising operator (shift by one, multiply by z - s):\n");
    for lam in 0..tables.count_up_to(depth - 1) {
        let col = l.mat().column(lam);
        let entries: Vec<String> = col.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!("  L p_{} -> [{}]\n", lam, entries.join(" ")));
    }
    let ell = datum.ell_poly();
    let built = exp_ad_l_with(&tables, &ell, &l)?;
    let euler = OpMatrix::euler(&tables);
    let ok = built.mismatches(&euler, &tables, None).is_empty();
    out.push_str(&format!(
        "\nexponential-adjoint of the degree form equals the Euler operator: {}\n",
        if ok { "yes" } else { "NO" }
    ));

    let params = SuiteParams {
        case: Case::RankOne,
        n: 1,
        r: parse_rat("0")?,
        s,
        max_ell: depth,
        seed: seed_from_env()?,
    };
    let report = run_suite("rank-one", &params)?;
    out.push_str(&format!(
        "closed-form suite: {} ({} checks)",
        if report.pass() { "PASS" } else { "FAIL" },
        report.checks
    ));
    emit(&None, &out)?;
    Ok(if report.pass() && ok { 0 } else { 1 })
}
