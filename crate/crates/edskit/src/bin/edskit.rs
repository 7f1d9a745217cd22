//! Thin command-line front end over the library: batch sequence
//! computation, closed-form evaluation, verification sweeps, square/cube
//! verdicts, Pell solutions, and curve recovery, with JSON (default) or
//! CSV output. All big numbers are emitted as decimal strings.
//!
//! Exit codes: 0 success, 1 internal-consistency failure (a bug or a
//! failed verification sweep), 2 parameter errors.

use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde_json::{json, Value};

use edskit::analytic::recover_curve;
use edskit::arith::{pell_solutions, Int, Rat};
use edskit::closedform::{
    spec_for, validate_spec, ClosedFormValue, ErratumDetail, ErratumReport, Target,
};
use edskit::curve::{Curve, Point};
use edskit::divpoly::eval_sequences;
use edskit::error::Error;
use edskit::squarecube::{
    classify, eval_condition, verify_classification, Classification, PowerKind, SquareCubeQuery,
};
use edskit::tate::{kubert_curve, tate_curve, TateCurve};

const SCHEMA: &str = "edskit/1";
const ALL_FAMILIES: [u32; 10] = [2, 3, 4, 5, 6, 7, 8, 9, 10, 12];

#[derive(Parser)]
#[command(name = "edskit", version, about = "Exact sequences attached to rational points on elliptic curves")]
struct Cli {
    /// Suppress the metadata line (timestamps live only there; the payload
    /// is byte-identical across runs).
    #[arg(long, global = true)]
    plain: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the F, G, H arrays for a curve and point.
    Seq(SeqArgs),
    /// Evaluate a closed-form general term over a range of indices.
    Closedform(ClosedformArgs),
    /// Sweep closed forms (and optionally square/cube verdicts) against
    /// the recursion oracle; nonzero exit on any mismatch outside the
    /// recorded errata.
    Verify(VerifyArgs),
    /// Square/cube verdict for one sequence index.
    Classify(ClassifyArgs),
    /// Smallest positive solutions of x² − D·y² = 1.
    Pell(PellArgs),
    /// Recover (a, b) of y² = x³ + ax + b from the sequences at a point.
    Recover(RecoverArgs),
}

#[derive(Args)]
struct SeqArgs {
    /// Curve coefficients a1,a2,a3,a4,a6 (rationals allowed: p/q).
    #[arg(long, conflicts_with = "tate")]
    curve: Option<String>,
    /// Torsion-family shorthand N:alpha (orders 4..=10, 12) or N:c1,c2
    /// (orders 2, 3).
    #[arg(long)]
    tate: Option<String>,
    /// Base point x,y; defaults to 0,0 with --tate.
    #[arg(long)]
    point: Option<String>,
    /// Normalization constant.
    #[arg(long, default_value = "1")]
    gamma: String,
    /// Largest index to compute.
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct ClosedformArgs {
    /// Family order N in {2,...,10,12}.
    #[arg(long, alias = "N")]
    family: u32,
    /// Family parameter: alpha, or a4 (order 2), or a3 (order 3).
    #[arg(long, alias = "alpha")]
    param: String,
    #[arg(long, value_enum)]
    target: TargetArg,
    #[arg(long, default_value_t = 0)]
    n_min: u64,
    #[arg(long)]
    n_max: u64,
}

#[derive(Args)]
struct VerifyArgs {
    /// Family order, or "all".
    #[arg(long, default_value = "all")]
    family: String,
    /// Check parameters with |param| up to this bound.
    #[arg(long, default_value_t = 8)]
    alpha_bound: i64,
    /// Largest index per family; defaults to 4N (6N for --classify).
    #[arg(long)]
    n_max: Option<u64>,
    /// Also sweep the square/cube verdict tables.
    #[arg(long)]
    classify: bool,
    /// Worker threads for the sweep over parameters.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long, alias = "N")]
    family: u32,
    #[arg(long, value_enum)]
    target: TargetArg,
    #[arg(long, value_enum)]
    power: PowerArg,
    #[arg(long)]
    n: u64,
    /// Evaluate the verdict's condition at this parameter value.
    #[arg(long)]
    alpha: Option<String>,
}

#[derive(Args)]
struct PellArgs {
    #[arg(long = "d", alias = "D")]
    d: String,
    #[arg(long)]
    count: usize,
}

#[derive(Args)]
struct RecoverArgs {
    /// Curve coefficients a1,a2,a3,a4,a6 (must be 0,0,0,a,b).
    #[arg(long)]
    curve: String,
    #[arg(long)]
    point: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    F,
    G,
    H,
}

impl From<TargetArg> for Target {
    fn from(t: TargetArg) -> Target {
        match t {
            TargetArg::F => Target::F,
            TargetArg::G => Target::G,
            TargetArg::H => Target::H,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PowerArg {
    Square,
    Cube,
}

impl From<PowerArg> for PowerKind {
    fn from(p: PowerArg) -> PowerKind {
        match p {
            PowerArg::Square => PowerKind::Square,
            PowerArg::Cube => PowerKind::Cube,
        }
    }
}

fn main() {
    let cli = Cli::parse();
    if !cli.plain {
        let now = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        println!("# edskit {} run-at {}", env!("CARGO_PKG_VERSION"), now);
    }
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            if e.is_internal() {
                1
            } else {
                2
            }
        }
    };
    std::process::exit(code);
}

fn run(command: Command) -> Result<i32, Error> {
    match command {
        Command::Seq(args) => cmd_seq(args),
        Command::Closedform(args) => cmd_closedform(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Classify(args) => cmd_classify(args),
        Command::Pell(args) => cmd_pell(args),
        Command::Recover(args) => cmd_recover(args),
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

fn parse_int(s: &str) -> Result<Int, Error> {
    s.trim().parse().map_err(|_| bad(format!("not an integer: {:?}", s)))
}

fn parse_rat(s: &str) -> Result<Rat, Error> {
    let s = s.trim();
    match s.split_once('/') {
        Some((num, den)) => {
            let d = parse_int(den)?;
            if d.is_zero() {
                return Err(bad(format!("zero denominator in {:?}", s)));
            }
            Ok(Rat::new(parse_int(num)?, d))
        }
        None => Ok(Rat::from_integer(parse_int(s)?)),
    }
}

fn parse_rat_list(s: &str, expect: usize, what: &str) -> Result<Vec<Rat>, Error> {
    let parts: Vec<_> = s.split(',').map(parse_rat).collect::<Result<_, _>>()?;
    if parts.len() != expect {
        return Err(bad(format!("{} needs {} comma-separated values", what, expect)));
    }
    Ok(parts)
}

fn parse_curve(s: &str) -> Result<Curve, Error> {
    let mut c = parse_rat_list(s, 5, "--curve")?;
    let a6 = c.pop().unwrap();
    let a4 = c.pop().unwrap();
    let a3 = c.pop().unwrap();
    let a2 = c.pop().unwrap();
    let a1 = c.pop().unwrap();
    Curve::new(a1, a2, a3, a4, a6)
}

fn parse_point(s: &str) -> Result<Point, Error> {
    let mut p = parse_rat_list(s, 2, "--point")?;
    let y = p.pop().unwrap();
    let x = p.pop().unwrap();
    Ok(Point::affine(x, y))
}

fn parse_tate(s: &str) -> Result<TateCurve, Error> {
    let (order, rest) = s
        .split_once(':')
        .ok_or_else(|| bad("--tate expects N:alpha or N:c1,c2"))?;
    let order: u32 = order.trim().parse().map_err(|_| bad("bad family order"))?;
    match order {
        2 | 3 => {
            let parts: Vec<_> = rest.split(',').map(parse_int).collect::<Result<_, _>>()?;
            if parts.len() != 2 {
                return Err(bad(format!("order {} takes two coefficients", order)));
            }
            kubert_curve(order, &parts[0], &parts[1])
        }
        _ => tate_curve(order, &parse_int(rest)?),
    }
}

fn rat_str(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn rat_array(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(|r| Value::String(rat_str(r))).collect())
}

fn curve_json(c: &Curve) -> Value {
    json!([rat_str(&c.a1), rat_str(&c.a2), rat_str(&c.a3), rat_str(&c.a4), rat_str(&c.a6)])
}

fn errata_json(errata: &[ErratumReport]) -> Value {
    Value::Array(
        errata
            .iter()
            .map(|e| {
                let (kind, residues) = match &e.detail {
                    ErratumDetail::Offset { residues, .. } => ("offset", json!(residues)),
                    ErratumDetail::Divisor { .. } => ("divisor", Value::Null),
                };
                json!({
                    "family": e.family,
                    "target": e.target.letter().to_string(),
                    "base": e.base,
                    "modulus": e.modulus,
                    "kind": kind,
                    "residues": residues,
                    "printed": e.detail.printed(),
                    "fitted": e.detail.fitted(),
                })
            })
            .collect(),
    )
}

fn emit(command: &str, params: Value, results: Value, errata: Value) {
    let record = json!({
        "schema": SCHEMA,
        "command": command,
        "params": params,
        "results": results,
        "errata": errata,
    });
    println!("{}", serde_json::to_string_pretty(&record).expect("serializable"));
}

fn memo_limit_check(n_max: usize) -> Result<(), Error> {
    if let Some(limit) =
        std::env::var("EDSKIT_MEMO_LIMIT").ok().and_then(|v| v.parse::<usize>().ok())
    {
        if n_max + 2 > limit {
            return Err(Error::MemoLimitExceeded { limit, requested: n_max });
        }
    }
    Ok(())
}

fn cmd_seq(args: SeqArgs) -> Result<i32, Error> {
    let (curve, default_point, family) = match (&args.curve, &args.tate) {
        (Some(c), None) => (parse_curve(c)?, None, Value::Null),
        (None, Some(t)) => {
            let tc = parse_tate(t)?;
            (tc.curve.clone(), Some(tc.point()), json!(tc.order))
        }
        _ => return Err(bad("exactly one of --curve or --tate is required")),
    };
    let point = match &args.point {
        Some(p) => parse_point(p)?,
        None => default_point.ok_or_else(|| bad("--point is required with --curve"))?,
    };
    let gamma = parse_rat(&args.gamma)?;
    memo_limit_check(args.n)?;
    let seq = eval_sequences(&curve, &point, &gamma, args.n)?;

    match args.format {
        Format::Csv => {
            println!("n,F,G,H");
            for n in 0..=seq.n_max() {
                let h = if seq.h_defined { rat_str(&seq.h[n]) } else { "undefined".into() };
                println!("{},{},{},{}", n, rat_str(&seq.f[n]), rat_str(&seq.g[n]), h);
            }
        }
        Format::Json => {
            let (px, py) = point.xy().expect("affine");
            let results = json!({
                "f": rat_array(&seq.f),
                "g": rat_array(&seq.g),
                "h": if seq.h_defined { rat_array(&seq.h) } else { Value::Null },
                "h_defined": seq.h_defined,
                "h_note": if seq.h_defined { Value::Null } else {
                    Value::String("H is undefined here: the base point is 2-torsion (F2 = 0)".into())
                },
            });
            emit(
                "seq",
                json!({
                    "curve": curve_json(&curve),
                    "family": family,
                    "point": [rat_str(px), rat_str(py)],
                    "gamma": rat_str(&gamma),
                    "n_max": args.n,
                }),
                results,
                json!([]),
            );
        }
    }
    Ok(0)
}

fn closed_value_json(n: u64, v: &ClosedFormValue) -> Value {
    match v {
        ClosedFormValue::Zero => json!({ "n": n, "zero": true, "value": "0" }),
        ClosedFormValue::Value { sign, factors } => {
            let fs: Vec<Value> =
                factors.iter().map(|(b, e)| json!([b.to_string(), e])).collect();
            json!({
                "n": n,
                "zero": false,
                "sign": sign,
                "factors": fs,
                "value": v.expand().to_string(),
            })
        }
    }
}

fn cmd_closedform(args: ClosedformArgs) -> Result<i32, Error> {
    let target: Target = args.target.into();
    let spec = spec_for(args.family, target)?;
    let param = parse_int(&args.param)?;
    if args.n_min > args.n_max {
        return Err(bad("--n-min must not exceed --n-max"));
    }
    let mut terms = Vec::new();
    for n in args.n_min..=args.n_max {
        terms.push(closed_value_json(n, &spec.eval(&param, n)?));
    }
    emit(
        "closedform",
        json!({
            "family": args.family,
            "target": target.letter().to_string(),
            "param": param.to_string(),
            "n_min": args.n_min,
            "n_max": args.n_max,
        }),
        json!({ "terms": terms, "table": spec.audit_text() }),
        errata_json(&spec.errata()),
    );
    Ok(0)
}

fn family_list(spec: &str) -> Result<Vec<u32>, Error> {
    if spec == "all" {
        return Ok(ALL_FAMILIES.to_vec());
    }
    let n: u32 = spec.parse().map_err(|_| bad("--family takes an order or 'all'"))?;
    if !ALL_FAMILIES.contains(&n) {
        return Err(bad(format!("no torsion family of order {}", n)));
    }
    Ok(vec![n])
}

fn cmd_verify(args: VerifyArgs) -> Result<i32, Error> {
    let families = family_list(&args.family)?;
    let params: Vec<Int> = (-args.alpha_bound..=args.alpha_bound).map(Int::from).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs.max(1))
        .build()
        .map_err(|e| bad(format!("cannot build thread pool: {}", e)))?;

    let mut closed_reports = Vec::new();
    let mut classify_reports = Vec::new();
    let mut all_ok = true;
    let mut errata = Vec::new();

    for &family in &families {
        let n_max = args.n_max.unwrap_or(4 * family as u64);
        for target in [Target::F, Target::G, Target::H] {
            let spec = match spec_for(family, target) {
                Ok(s) => s,
                Err(_) => continue,
            };
            // Parallel over parameters, merged back in input order so the
            // output does not depend on --jobs.
            let outcomes: Vec<_> = pool.install(|| {
                use rayon::prelude::*;
                params
                    .par_iter()
                    .map(|p| validate_spec(spec, std::slice::from_ref(p), n_max))
                    .collect::<Result<Vec<_>, _>>()
            })?;
            let mut checked = 0usize;
            let mut mismatches = Vec::new();
            for o in outcomes {
                checked += o.values_checked;
                for m in o.mismatches {
                    mismatches.push(json!({
                        "param": m.param.to_string(),
                        "companion": m.companion.map(|c| c.to_string()),
                        "n": m.n,
                        "closed": m.closed.to_string(),
                        "oracle": rat_str(&m.oracle),
                    }));
                }
            }
            let ok = mismatches.is_empty();
            all_ok &= ok;
            errata.extend(spec.errata());
            closed_reports.push(json!({
                "family": family,
                "target": target.letter().to_string(),
                "n_max": n_max,
                "values_checked": checked,
                "ok": ok,
                "mismatches": mismatches,
            }));
        }

        if args.classify {
            let n_max = args.n_max.unwrap_or(6 * family as u64);
            for target in [Target::G, Target::H] {
                if family == 2 && target == Target::H {
                    continue;
                }
                for power in [PowerKind::Square, PowerKind::Cube] {
                    let report = verify_classification(family, target, power, &params, n_max)?;
                    let ok = report.ok();
                    all_ok &= ok;
                    let disagreements: Vec<Value> = report
                        .disagreements
                        .iter()
                        .map(|d| {
                            json!({
                                "param": d.param.to_string(),
                                "n": d.n,
                                "verdict": d.verdict.verdict_word(),
                                "expected": d.expected,
                                "actual": d.actual,
                            })
                        })
                        .collect();
                    classify_reports.push(json!({
                        "family": family,
                        "target": target.letter().to_string(),
                        "power": power.word(),
                        "n_max": n_max,
                        "terms_checked": report.terms_checked,
                        "ok": ok,
                        "disagreements": disagreements,
                    }));
                }
            }
        }
    }

    emit(
        "verify",
        json!({
            "family": args.family,
            "alpha_bound": args.alpha_bound,
            "classify": args.classify,
            "jobs": args.jobs,
        }),
        json!({
            "ok": all_ok,
            "closed_form": closed_reports,
            "classification": classify_reports,
        }),
        errata_json(&errata),
    );
    Ok(if all_ok { 0 } else { 1 })
}

fn cmd_classify(args: ClassifyArgs) -> Result<i32, Error> {
    let query = SquareCubeQuery {
        family: args.family,
        target: args.target.into(),
        power: args.power.into(),
        n: args.n,
    };
    let verdict = classify(&query)?;
    let alpha = args.alpha.as_deref().map(parse_int).transpose()?;
    let condition = match &verdict {
        Classification::Iff(c) => Value::String(c.to_string()),
        _ => Value::Null,
    };
    let holds = match (&verdict, &alpha) {
        (Classification::ZeroTerm, _) => Value::Null,
        (Classification::Always, Some(_)) => Value::Bool(true),
        (Classification::Never, Some(_)) => Value::Bool(false),
        (Classification::Iff(c), Some(a)) => Value::Bool(eval_condition(c, a)),
        (_, None) => Value::Null,
    };
    emit(
        "classify",
        json!({
            "family": args.family,
            "target": Target::from(args.target).letter().to_string(),
            "power": PowerKind::from(args.power).word(),
            "n": args.n,
            "alpha": alpha.map(|a| a.to_string()),
        }),
        json!({
            "verdict": verdict.verdict_word(),
            "condition": condition,
            "holds": holds,
        }),
        json!([]),
    );
    Ok(0)
}

fn cmd_pell(args: PellArgs) -> Result<i32, Error> {
    let d = parse_int(&args.d)?;
    let solutions = pell_solutions(&d, args.count)?;
    let sols: Vec<Value> = solutions
        .iter()
        .map(|s| json!({ "x": s.x.to_string(), "y": s.y.to_string() }))
        .collect();
    emit(
        "pell",
        json!({ "d": d.to_string(), "count": args.count }),
        json!({ "solutions": sols }),
        json!([]),
    );
    Ok(0)
}

fn cmd_recover(args: RecoverArgs) -> Result<i32, Error> {
    let curve = parse_curve(&args.curve)?;
    let point = parse_point(&args.point)?;
    let (a, b) = recover_curve(&curve, &point)?;
    let (px, py) = point.xy().expect("affine");
    emit(
        "recover",
        json!({ "curve": curve_json(&curve), "point": [rat_str(px), rat_str(py)] }),
        json!({ "a": rat_str(&a), "b": rat_str(&b) }),
        json!([]),
    );
    Ok(0)
}
