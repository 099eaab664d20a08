//! `uhg`: exact constructions, metrics, null parametrizations and theorem
//! verification from the command line.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use uhg::constructions::{
    classify_point, classify_triangle, classify_trilateral, midlines, midpoints, Couple, Triangle, Trilateral,
};
use uhg::metric::{cross_ratio, quadrance, quadrea, quadreal, spread};
use uhg::nullkernel::{
    join_null, line_through_null_point, null_diagonal_point, null_param_of, null_param_of_line, null_point,
    point_on_null_line,
};
use uhg::projective::{join, meet};
use uhg::trig::{
    right_parallax, right_parallax_spread, solve_right_triangle, solve_right_trilateral, RightTriangleState,
    RightTrilateralState, TrigError,
};
use uhg::verifier::{find, registry, run_or_sample, Strategy, VerificationReport};
use uhg::{Field, GeomError, Line, MetricValue, Point, Proportion2, Scalar};

#[derive(Parser)]
#[command(name = "uhg", version, about = "Exact universal hyperbolic geometry")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct Output {
    /// Print bare values instead of JSON.
    #[arg(long, global = true, conflicts_with = "json")]
    plain: bool,
    /// Print JSON (the default).
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Args)]
struct FieldArg {
    /// `Q`, `Fp=<p>` or `Q[sqrt=<d>,...]`.
    #[arg(long, default_value = "Q")]
    field: String,
}

#[derive(Subcommand)]
enum Command {
    /// Constructions and metrics on points and lines.
    Compute {
        op: ComputeOp,
        #[command(flatten)]
        field: FieldArg,
        /// Point `[x:y:z]` and line `(l:m:n)` literals.
        args: Vec<String>,
    },
    /// Right triangles and trilaterals from two known quantities.
    Solve {
        op: SolveOp,
        #[command(flatten)]
        field: FieldArg,
        #[arg(long = "q1", allow_hyphen_values = true)]
        q1: Option<String>,
        #[arg(long = "q2", allow_hyphen_values = true)]
        q2: Option<String>,
        #[arg(long = "q3", allow_hyphen_values = true)]
        q3: Option<String>,
        #[arg(long = "S1", allow_hyphen_values = true)]
        s1: Option<String>,
        #[arg(long = "S2", allow_hyphen_values = true)]
        s2: Option<String>,
        #[arg(long = "S3", allow_hyphen_values = true)]
        s3: Option<String>,
        /// Quadrance, for `parallax`.
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
        /// Spread, for `parallax`.
        #[arg(long = "S", allow_hyphen_values = true)]
        s: Option<String>,
    },
    /// Null points and lines from their parameters `t:u`.
    Null {
        op: NullOp,
        #[command(flatten)]
        field: FieldArg,
        args: Vec<String>,
    },
    /// Run theorem checks.
    Verify {
        /// A check id such as `T42-pythagoras`.
        id: Option<String>,
        #[arg(long, conflicts_with = "id")]
        all: bool,
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        trials: Option<u64>,
        #[arg(long)]
        bound: Option<u64>,
        /// Enumerate every configuration (prime fields only).
        #[arg(long)]
        exhaustive: bool,
    },
    /// Klein picture: `[x:y:z]` to `[x/z, y/z]`.
    Project {
        #[command(flatten)]
        field: FieldArg,
        points: Vec<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ComputeOp {
    Join,
    Meet,
    Dual,
    Quadrance,
    Spread,
    Quadrea,
    Quadreal,
    Midpoints,
    Altitude,
    Base,
    Parallel,
    Crossratio,
    Classify,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolveOp {
    RightTriangle,
    RightTrilateral,
    Parallax,
}

#[derive(Clone, Copy, ValueEnum)]
enum NullOp {
    Point,
    Param,
    Join,
    Diagonal,
    OnLine,
    ThroughPoint,
}

/// Exit statuses.
enum Failure {
    Usage(String),
    Undefined(String),
    /// Reports with at least one failing configuration.
    Verification(Out),
}

type Res<T> = Result<T, Failure>;

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

/// Result of one command: its JSON form and its plain text.
struct Out {
    json: Value,
    plain: String,
}

impl Out {
    fn value(v: impl ToString) -> Out {
        let s = v.to_string();
        Out { json: json!({ "result": s }), plain: s }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(out) => {
            print(&cli.out, &out);
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(out)) => {
            print(&cli.out, &out);
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Undefined(m)) => {
            if cli.out.plain {
                println!("undefined");
            } else {
                println!("{}", json!({ "result": null, "undefined": m }));
            }
            eprintln!("undefined: {m}");
            ExitCode::from(3)
        }
    }
}

fn print(o: &Output, out: &Out) {
    if o.plain {
        println!("{}", out.plain);
    } else {
        println!("{}", out.json);
    }
}

fn run(c: &Command) -> Res<Out> {
    match c {
        Command::Compute { op, field, args } => compute(*op, &field_of(field)?, args),
        Command::Solve { op, field, q1, q2, q3, s1, s2, s3, q, s } => {
            let f = field_of(field)?;
            let sc = |x: &Option<String>| x.as_deref().map(|t| scalar(&f, t)).transpose();
            match op {
                SolveOp::RightTriangle => {
                    let state =
                        RightTriangleState { s1: sc(s1)?, s2: sc(s2)?, q1: sc(q1)?, q2: sc(q2)?, q3: sc(q3)? };
                    let t = solve_right_triangle(&state).map_err(trig_failure)?;
                    let plain = format!("q1={} q2={} q3={} S1={} S2={}", t.q1, t.q2, t.q3, t.s1, t.s2);
                    Ok(Out { json: serde_json::to_value(&t).unwrap(), plain })
                }
                SolveOp::RightTrilateral => {
                    let state =
                        RightTrilateralState { q1: sc(q1)?, q2: sc(q2)?, s1: sc(s1)?, s2: sc(s2)?, s3: sc(s3)? };
                    let t = solve_right_trilateral(&state).map_err(trig_failure)?;
                    let plain = format!("q1={} q2={} S1={} S2={} S3={}", t.q1, t.q2, t.s1, t.s2, t.s3);
                    Ok(Out { json: serde_json::to_value(&t).unwrap(), plain })
                }
                SolveOp::Parallax => match (sc(q)?, sc(s)?) {
                    (None, Some(s)) => {
                        let q = right_parallax(&s).map_err(trig_failure)?;
                        Ok(Out { json: json!({ "q": q.to_string(), "S": s.to_string() }), plain: q.to_string() })
                    }
                    (Some(q), None) => {
                        let s = right_parallax_spread(&q).map_err(trig_failure)?;
                        Ok(Out { json: json!({ "q": q.to_string(), "S": s.to_string() }), plain: s.to_string() })
                    }
                    _ => Err(usage("parallax takes exactly one of --q and --S")),
                },
            }
        }
        Command::Null { op, field, args } => null(*op, &field_of(field)?, args),
        Command::Verify { id, all, field, seed, trials, bound, exhaustive } => {
            let f = field_of(field)?;
            let prime = matches!(f, Field::Prime(_));
            if *exhaustive && !prime {
                return Err(usage(format!("--exhaustive needs a prime field, got {}", field.field)));
            }
            let sampled = seed.is_some() || trials.is_some() || bound.is_some();
            let strategy = if *exhaustive || (prime && !sampled) {
                Strategy::exhaustive()
            } else {
                Strategy::random(trials.unwrap_or(500), bound.unwrap_or(8), seed.unwrap_or(42))
            };
            let reports = match (id, all) {
                (Some(id), false) => {
                    let c = find(id).ok_or_else(|| usage(format!("unknown theorem id: {id}")))?;
                    let st = if c.is_converse() { Strategy::Targeted } else { strategy };
                    vec![run_or_sample(&c, &f, st).map_err(usage)?]
                }
                (None, true) => registry()
                    .iter()
                    .filter(|c| !c.is_converse())
                    .map(|c| run_or_sample(c, &f, strategy))
                    .collect::<Result<_, _>>()
                    .map_err(usage)?,
                _ => return Err(usage("give a check id or --all")),
            };
            verify_output(reports)
        }
        Command::Project { field, points } => {
            let f = field_of(field)?;
            let mut json = vec![];
            let mut plain = vec![];
            for s in points {
                let a = point(&f, s)?;
                let [x, y, z] = a.coords();
                if z.is_zero() {
                    // The point's own display already clears denominators.
                    let shown = a.to_string();
                    let xy = format!("{}]", shown.strip_suffix(":0]").unwrap_or(&shown));
                    json.push(json!({ "point": shown, "at_infinity": xy }));
                    plain.push(format!("at infinity: {xy}"));
                } else {
                    let (px, py) = (x / z, y / z);
                    json.push(json!({ "point": a.to_string(), "x": px.to_string(), "y": py.to_string() }));
                    plain.push(format!("[{px}, {py}]"));
                }
            }
            let json = if json.len() == 1 { json.pop().unwrap() } else { Value::Array(json) };
            Ok(Out { json, plain: plain.join("\n") })
        }
    }
}

fn verify_output(reports: Vec<VerificationReport>) -> Res<Out> {
    let failed = reports.iter().any(|r| r.failed > 0);
    let plain = reports
        .iter()
        .map(|r| {
            let status = if r.failed > 0 { "FAIL" } else { "ok" };
            format!(
                "{status} {} {} {} passed={} failed={} skipped={}",
                r.id,
                r.field,
                r.strategy,
                r.passed,
                r.failed,
                r.skipped_total()
            )
        })
        .collect::<Vec<_>>()
        .join("\n");
    let json = if reports.len() == 1 {
        serde_json::to_value(&reports[0]).unwrap()
    } else {
        serde_json::to_value(&reports).unwrap()
    };
    let out = Out { json, plain };
    if failed {
        Err(Failure::Verification(out))
    } else {
        Ok(out)
    }
}

fn field_of(f: &FieldArg) -> Res<Field> {
    Field::parse(&f.field).map_err(|e| usage(format!("field `{}`: {e}", f.field)))
}

fn scalar(f: &Field, s: &str) -> Res<Scalar> {
    f.parse_scalar(s).map_err(|_| usage(format!("cannot parse `{s}` as a scalar")))
}

fn point(f: &Field, s: &str) -> Res<Point> {
    Point::parse(f, s).map_err(|e| usage(format!("`{s}`: {e}")))
}

fn line(f: &Field, s: &str) -> Res<Line> {
    Line::parse(f, s).map_err(|e| usage(format!("`{s}`: {e}")))
}

fn param(f: &Field, s: &str) -> Res<Proportion2> {
    Proportion2::parse(f, s).map_err(|e| usage(format!("`{s}`: {e}")))
}

enum Lit {
    P(Point),
    L(Line),
}

fn literal(f: &Field, s: &str) -> Res<Lit> {
    match s.trim_start().chars().next() {
        Some('[') => point(f, s).map(Lit::P),
        Some('(') => line(f, s).map(Lit::L),
        _ => Err(usage(format!("`{s}` is neither a point [x:y:z] nor a line (l:m:n)"))),
    }
}

fn arity(args: &[String], n: usize, what: &str) -> Res<()> {
    if args.len() == n {
        Ok(())
    } else {
        Err(usage(format!("expected {n} {what}, got {}", args.len())))
    }
}

fn points(f: &Field, args: &[String], n: usize) -> Res<Vec<Point>> {
    arity(args, n, "points")?;
    args.iter().map(|s| point(f, s)).collect()
}

fn lines(f: &Field, args: &[String], n: usize) -> Res<Vec<Line>> {
    arity(args, n, "lines")?;
    args.iter().map(|s| line(f, s)).collect()
}

fn geom(e: GeomError) -> Failure {
    match e {
        GeomError::NoMidpoint => Failure::Undefined(e.to_string()),
        e => usage(e),
    }
}

fn trig_failure(e: TrigError) -> Failure {
    match e {
        TrigError::DegenerateDenominator | TrigError::ZeroSpread => Failure::Undefined(e.to_string()),
        e => usage(e),
    }
}

fn metric(m: MetricValue, what: &str) -> Res<Out> {
    match m.into_value() {
        Some(v) => Ok(Out::value(v)),
        None => Err(Failure::Undefined(format!("{what} is undefined here"))),
    }
}

fn pair(a: impl ToString, b: impl ToString) -> Out {
    let (a, b) = (a.to_string(), b.to_string());
    Out { plain: format!("{a} {b}"), json: json!({ "result": [a, b] }) }
}

/// Point and line in either order: `Ok((a, L, true))` when the point
/// came first.
fn couple_args(f: &Field, args: &[String]) -> Res<(Couple, bool)> {
    arity(args, 2, "arguments (a point and a line)")?;
    let (a, l, point_first) = match (literal(f, &args[0])?, literal(f, &args[1])?) {
        (Lit::P(a), Lit::L(l)) => (a, l, true),
        (Lit::L(l), Lit::P(a)) => (a, l, false),
        _ => return Err(usage("expected one point and one line")),
    };
    Ok((Couple::new(a, l).map_err(geom)?, point_first))
}

fn compute(op: ComputeOp, f: &Field, args: &[String]) -> Res<Out> {
    match op {
        ComputeOp::Join => {
            let p = points(f, args, 2)?;
            Ok(Out::value(join(&p[0], &p[1]).map_err(geom)?))
        }
        ComputeOp::Meet => {
            let l = lines(f, args, 2)?;
            Ok(Out::value(meet(&l[0], &l[1]).map_err(geom)?))
        }
        ComputeOp::Dual => {
            arity(args, 1, "literal")?;
            Ok(match literal(f, &args[0])? {
                Lit::P(a) => Out::value(a.dual()),
                Lit::L(l) => Out::value(l.dual()),
            })
        }
        ComputeOp::Quadrance => {
            let p = points(f, args, 2)?;
            metric(quadrance(&p[0], &p[1]), "quadrance")
        }
        ComputeOp::Spread => {
            let l = lines(f, args, 2)?;
            metric(spread(&l[0], &l[1]), "spread")
        }
        ComputeOp::Quadrea => {
            let p = points(f, args, 3)?;
            metric(quadrea(&p[0], &p[1], &p[2]), "quadrea")
        }
        ComputeOp::Quadreal => {
            let l = lines(f, args, 3)?;
            metric(quadreal(&l[0], &l[1], &l[2]), "quadreal")
        }
        ComputeOp::Midpoints => {
            arity(args, 2, "points or lines")?;
            match (literal(f, &args[0])?, literal(f, &args[1])?) {
                (Lit::P(a), Lit::P(b)) => midpoints(f, &a, &b).map(|(m, n)| pair(m, n)).map_err(geom),
                (Lit::L(a), Lit::L(b)) => midlines(f, &a, &b).map(|(m, n)| pair(m, n)).map_err(geom),
                _ => Err(usage("midpoints takes two points or two lines")),
            }
        }
        ComputeOp::Altitude => {
            let (c, point_first) = couple_args(f, args)?;
            if point_first {
                c.altitude_line().map(Out::value).map_err(geom)
            } else {
                c.altitude_point().map(Out::value).map_err(geom)
            }
        }
        ComputeOp::Base => {
            let (c, point_first) = couple_args(f, args)?;
            if point_first {
                c.base_point().map(Out::value).map_err(geom)
            } else {
                c.base_line().map(Out::value).map_err(geom)
            }
        }
        ComputeOp::Parallel => {
            let (c, point_first) = couple_args(f, args)?;
            if point_first {
                c.parallel_line().map(Out::value).map_err(geom)
            } else {
                c.parallel_point().map(Out::value).map_err(geom)
            }
        }
        ComputeOp::Crossratio => {
            let p = points(f, args, 4)?;
            cross_ratio(&p[0], &p[1], &p[2], &p[3])
                .map(Out::value)
                .map_err(|e| Failure::Undefined(format!("cross ratio: {e}")))
        }
        ComputeOp::Classify => classify(f, args),
    }
}

fn classify(f: &Field, args: &[String]) -> Res<Out> {
    if args.len() == 1 {
        let a = point(f, &args[0])?;
        let c = format!("{:?}", classify_point(f, &a)).to_lowercase();
        return Ok(Out { json: json!({ "point": a.to_string(), "class": c }), plain: c });
    }
    arity(args, 3, "points or lines (or one point)")?;
    let lits = args.iter().map(|s| literal(f, s)).collect::<Res<Vec<_>>>()?;
    let (c, kind) = match &lits[..] {
        [Lit::P(a), Lit::P(b), Lit::P(c)] => {
            (classify_triangle(&Triangle::new(a.clone(), b.clone(), c.clone()).map_err(geom)?), "triangle")
        }
        [Lit::L(a), Lit::L(b), Lit::L(c)] => {
            (classify_trilateral(&Trilateral::new(a.clone(), b.clone(), c.clone()).map_err(geom)?), "trilateral")
        }
        _ => return Err(usage("classify takes three points or three lines")),
    };
    Ok(Out {
        json: json!({ "kind": kind, "null": c.null, "nil": c.nil, "right": c.right }),
        plain: format!("{kind} null={} nil={} right={}", c.null, c.nil, c.right),
    })
}

fn null(op: NullOp, f: &Field, args: &[String]) -> Res<Out> {
    let params = |n: usize| -> Res<Vec<Proportion2>> {
        arity(args, n, "parameters t:u")?;
        args.iter().map(|s| param(f, s)).collect()
    };
    match op {
        NullOp::Point => Ok(Out::value(null_point(&params(1)?[0]))),
        NullOp::Param => {
            arity(args, 1, "null point or null line")?;
            let p = match literal(f, &args[0])? {
                Lit::P(a) => null_param_of(&a),
                Lit::L(l) => null_param_of_line(&l),
            };
            p.map(Out::value).map_err(geom)
        }
        NullOp::Join => {
            let p = params(2)?;
            join_null(&p[0], &p[1]).map(Out::value).map_err(geom)
        }
        NullOp::Diagonal => {
            let p = params(4)?;
            null_diagonal_point(&p[0], &p[1], &p[2], &p[3]).map(Out::value).map_err(geom)
        }
        NullOp::OnLine => {
            let p = params(2)?;
            Ok(Out::value(point_on_null_line(&p[0], &p[1])))
        }
        NullOp::ThroughPoint => {
            let p = params(2)?;
            Ok(Out::value(line_through_null_point(&p[0], &p[1])))
        }
    }
}
