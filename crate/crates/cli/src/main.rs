//! `nefslope`: nef thresholds, rationality certificates and simplicity scans
//! from the command line.
//!
//! JSON goes to stdout (or `--output`), a one-line summary per instance to
//! stderr. Exit codes: 0 success, 10 scan found a witness, 2 input error,
//! 3 precondition violated.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nefslope_core::arith::{fmt_rat, parse_rat, rat_to_f64};
use nefslope_core::generators::gen_random;
use nefslope_core::nefslope::{
    certify_rationality, default_width, is_nef, slope_lower_bound, slope_with_width,
};
use nefslope_core::simplicity::{scan, ScanInstance};
use nefslope_core::wire::{
    instances_from_value, parse_json, InstanceOut, LabeledInstance, NefOut, RationalityOut,
    ScanOut, SlopeOut,
};
use nefslope_core::{
    Error, GenKind, GenSpec, Instance, IntersectionProfile, Rat, SlopeResult, ValidationLevel,
};
use serde_json::{json, Value};

const EXIT_WITNESS: u8 = 10;
const EXIT_INPUT: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;

#[derive(Parser)]
#[command(
    name = "nefslope",
    version,
    about = "Exact nef thresholds on abelian varieties"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Nef threshold sigma(L, M) with its rationality certificate.
    Slope(InputArgs),
    /// Nefness of the class whose profile is given.
    Nef(InputArgs),
    /// Rationality certificate only; fails on infinite slope.
    Certify(InputArgs),
    /// Lower bound for the slope; requires -M not nef.
    Bound(InputArgs),
    /// Look for rational slopes (non-simplicity witnesses) across instances
    /// sharing L^n.
    Scan(ScanArgs),
    /// Emit seeded random instances.
    Gen(GenArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Instance file, or inline JSON. Reads stdin when absent.
    #[arg(long)]
    input: Option<String>,
    /// Write JSON here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Level::Syntactic)]
    level: Level,
    /// Refinement width for reported intervals, e.g. `1/1000000`.
    #[arg(long, env = "NEFSLOPE_WIDTH")]
    width: Option<String>,
}

#[derive(Args)]
struct ScanArgs {
    #[command(flatten)]
    io: InputArgs,
    /// Worker threads; results keep input order.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long, default_value_t = 10)]
    count: usize,
    #[arg(long, default_value_t = 10)]
    bound: i64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Dimension (ignored for surfaces).
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Largest denominator for rational-matrix.
    #[arg(long, default_value_t = 4)]
    denom: i64,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Level {
    Syntactic,
    Spectral,
    Hodge,
}

impl From<Level> for ValidationLevel {
    fn from(l: Level) -> Self {
        match l {
            Level::Syntactic => ValidationLevel::Syntactic,
            Level::Spectral => ValidationLevel::Spectral,
            Level::Hodge => ValidationLevel::SurfaceHodge,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Surface,
    ProductMatrix,
    RationalMatrix,
    RationalSpectrum,
    #[value(alias = "random")]
    Profile,
}

/// Failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_precondition() {
            EXIT_PRECONDITION
        } else {
            EXIT_INPUT
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Slope(a) => {
            let width = width(&a)?;
            per_instance(&a, |label, p| {
                let s = slope_with_width(p, &width)?;
                eprintln!("{label}: {}", describe_slope(&s));
                Ok(serde_json::to_value(SlopeOut::from(&s)).expect("serializable"))
            })
        }
        Command::Nef(a) => per_instance(&a, |label, p| {
            let r = is_nef(p);
            let kind = match (r.is_nef(), r.ample) {
                (true, true) => "ample",
                (true, false) => "nef, not ample",
                (false, _) => "not nef",
            };
            eprintln!("{label}: {kind}");
            Ok(serde_json::to_value(NefOut::from(&r)).expect("serializable"))
        }),
        Command::Certify(a) => per_instance(&a, |label, p| {
            let r = certify_rationality(p)?;
            eprintln!(
                "{label}: {}",
                if r.is_rational() {
                    "rational"
                } else {
                    "irrational"
                }
            );
            Ok(serde_json::to_value(RationalityOut::from(&r)).expect("serializable"))
        }),
        Command::Bound(a) => per_instance(&a, |label, p| {
            let b = slope_lower_bound(p)?;
            eprintln!("{label}: slope >= {}", fmt_rat(&b));
            Ok(json!({ "bound": fmt_rat(&b), "approx": format!("{:.17e}", rat_to_f64(&b)) }))
        }),
        Command::Scan(a) => run_scan(&a),
        Command::Gen(g) => run_gen(&g),
    }
}

fn width(a: &InputArgs) -> Result<Rat, Failure> {
    let Some(text) = &a.width else {
        return Ok(default_width());
    };
    let w = parse_rat(text).map_err(|e| input_error(format!("--width: {e}")))?;
    if w <= Rat::from_integer(0.into()) {
        return Err(input_error("--width must be positive"));
    }
    Ok(w)
}

fn read_input(a: &InputArgs) -> Result<Vec<LabeledInstance>, Failure> {
    let text = match a.input.as_deref() {
        Some(s) if s.trim_start().starts_with(['{', '[']) => s.to_string(),
        Some(path) => fs::read_to_string(path).map_err(|e| input_error(format!("{path}: {e}")))?,
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| input_error(format!("stdin: {e}")))?;
            s
        }
    };
    let instances = instances_from_value(parse_json(&text)?)?;
    if instances.is_empty() {
        return Err(input_error("no instances in input"));
    }
    Ok(instances)
}

fn profile_of(
    inst: &LabeledInstance,
    level: ValidationLevel,
) -> Result<IntersectionProfile, Failure> {
    let p = inst.instance.profile()?;
    p.validate(level)
        .map_err(|v| input_error(format!("{}: {}", label_or(inst, 0), v.detail)))?;
    Ok(p)
}

fn label_or(inst: &LabeledInstance, index: usize) -> String {
    inst.label.clone().unwrap_or_else(|| format!("#{index}"))
}

/// Runs `f` on every instance; a single instance yields an object, several
/// an array.
fn per_instance(
    a: &InputArgs,
    mut f: impl FnMut(&str, &IntersectionProfile) -> Result<Value, Error>,
) -> Result<u8, Failure> {
    let instances = read_input(a)?;
    let mut out = Vec::with_capacity(instances.len());
    for (i, inst) in instances.iter().enumerate() {
        let p = profile_of(inst, a.level.into())?;
        out.push(f(&label_or(inst, i), &p)?);
    }
    let value = if out.len() == 1 {
        out.pop().expect("one")
    } else {
        Value::Array(out)
    };
    emit(&value, a.output.as_ref())?;
    Ok(0)
}

fn run_scan(a: &ScanArgs) -> Result<u8, Failure> {
    let instances = read_input(&a.io)?;
    let mut items = Vec::with_capacity(instances.len());
    for (i, inst) in instances.iter().enumerate() {
        profile_of(inst, a.io.level.into())?;
        let label = label_or(inst, i);
        items.push(match &inst.instance {
            Instance::Profile(p) => ScanInstance::from_profile(label, p.clone()),
            Instance::Matrix(m) => ScanInstance::from_matrix(label, m.clone())?,
        });
    }
    let result = scan(items, a.jobs.max(1))?;
    for (inst, verdict) in &result.entries {
        eprintln!("{}: {}", inst.label, verdict_name(verdict));
    }
    let out = ScanOut::from(&result);
    eprintln!("overall: {}", out.overall);
    emit(
        &serde_json::to_value(&out).expect("serializable"),
        a.io.output.as_ref(),
    )?;
    Ok(if result.witnesses().next().is_some() {
        EXIT_WITNESS
    } else {
        0
    })
}

fn run_gen(g: &GenArgs) -> Result<u8, Failure> {
    if g.bound < 1 {
        return Err(input_error("--bound must be at least 1"));
    }
    let kind = match g.kind {
        Kind::Surface => GenKind::Surface { bound: g.bound },
        Kind::ProductMatrix => GenKind::ProductMatrix {
            n: g.n,
            bound: g.bound,
        },
        Kind::RationalMatrix => GenKind::RationalMatrix {
            n: g.n,
            bound: g.bound,
            denom: g.denom.max(1),
        },
        Kind::RationalSpectrum => GenKind::RationalSpectrum {
            n: g.n,
            bound: g.bound,
        },
        Kind::Profile => GenKind::Profile {
            n: g.n,
            bound: g.bound,
        },
    };
    if !matches!(kind, GenKind::Surface { .. }) && g.n < 1 {
        return Err(input_error("--n must be at least 1"));
    }
    let instances = gen_random(&GenSpec {
        kind,
        count: g.count,
        seed: g.seed,
    });
    let out: Vec<InstanceOut> = instances.iter().map(InstanceOut::from).collect();
    eprintln!("generated {} instances", out.len());
    emit(
        &serde_json::to_value(&out).expect("serializable"),
        g.output.as_ref(),
    )?;
    Ok(0)
}

fn verdict_name(v: &nefslope_core::ScanVerdict) -> String {
    use nefslope_core::ScanVerdict::*;
    match v {
        SkippedProportional { ratio } => {
            format!("proportional (M = {} L), skipped", fmt_rat(ratio))
        }
        Witness { p, q, .. } => format!("rational slope {p}/{q}, witness"),
        Irrational { slope } => format!("irrational slope ~ {:.6}", slope.to_f64()),
        Infinite => "infinite slope".into(),
        Unrealizable { p, q, .. } => {
            format!("rational slope {p}/{q}, boundary class not nef-and-not-ample")
        }
    }
}

fn describe_slope(s: &SlopeResult) -> String {
    match s {
        SlopeResult::Infinite { .. } => "slope = infinity".into(),
        SlopeResult::Finite { slope, .. } => match slope.exact() {
            Some(r) => format!("slope = {} (rational)", fmt_rat(r)),
            None => format!("slope ~ {:.12} (irrational)", slope.to_f64()),
        },
    }
}

fn emit(value: &Value, path: Option<&PathBuf>) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    match path {
        Some(p) => fs::write(p, text).map_err(|e| input_error(format!("{}: {e}", p.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| input_error(format!("stdout: {e}"))),
    }
}
