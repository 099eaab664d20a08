//! Executable registry of the theorems, with exhaustive and sampled runs.
//!
//! Every check draws a configuration of points, lines, null parameters,
//! proportions or scalars and evaluates a predicate on it. Checks keyed
//! `T<n>-…` are the numbered theorems, `ID-…` standalone polynomial
//! identities, and `CX-…` the converse statements that are known to fail;
//! the last group only runs against its named counterexample family.

mod converse;
mod gen;
mod identities;
mod incidence;
mod metrics;
mod nulls;
mod triangles;

use std::collections::BTreeMap;
use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::field::{Field, FieldError, FieldSpec, Scalar};
use crate::projective::{all_lines, all_points, Line, Point, Proportion2};

pub use gen::Gen;

/// One drawn object.
#[derive(Debug, Clone, PartialEq)]
pub enum Obj {
    Point(Point),
    Line(Line),
    /// Parameter `t:u` of the null point `α(t:u)`.
    Null(Proportion2),
    Param(Proportion2),
    Scalar(Scalar),
}

impl Obj {
    pub fn kind(&self) -> Kind {
        match self {
            Obj::Point(_) => Kind::Point,
            Obj::Line(_) => Kind::Line,
            Obj::Null(_) => Kind::Null,
            Obj::Param(_) => Kind::Param,
            Obj::Scalar(_) => Kind::Scalar,
        }
    }
}

impl fmt::Display for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Obj::Point(a) => write!(f, "{a}"),
            Obj::Line(l) => write!(f, "{l}"),
            Obj::Null(p) | Obj::Param(p) => write!(f, "{p}"),
            Obj::Scalar(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Point,
    Line,
    Null,
    Param,
    Scalar,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Skip(&'static str),
    Fail(String),
}

/// Evaluation context handed to predicates.
pub struct Ctx<'a> {
    pub field: &'a Field,
    small: Option<(Vec<Point>, Vec<Line>)>,
}

impl<'a> Ctx<'a> {
    /// Uniqueness sweeps are enabled over prime fields with `p ≤ 7`.
    pub fn new(field: &'a Field) -> Ctx<'a> {
        let small = match field {
            Field::Prime(p) if *p <= 7 => Some((all_points(field).unwrap(), all_lines(field).unwrap())),
            _ => None,
        };
        Ctx { field, small }
    }

    /// All points, when the field is small enough for a sweep.
    pub fn sweep_points(&self) -> Option<&[Point]> {
        self.small.as_ref().map(|s| s.0.as_slice())
    }

    pub fn sweep_lines(&self) -> Option<&[Line]> {
        self.small.as_ref().map(|s| s.1.as_slice())
    }

    pub fn sweep_params(&self) -> Option<Vec<Proportion2>> {
        self.small.as_ref().and_then(|_| Proportion2::all(self.field))
    }
}

pub type Sampler = fn(&mut Gen) -> Option<Vec<Obj>>;
pub type Predicate = fn(&Ctx, &[Obj]) -> Outcome;
/// Builds the configurations of a counterexample family over a field.
pub type Family = fn(&Field) -> Result<Vec<Vec<Obj>>, String>;

pub struct TheoremCheck {
    pub id: &'static str,
    pub name: &'static str,
    /// Theorem number, absent for identities.
    pub theorem: Option<u32>,
    pub domain: &'static [Kind],
    /// Whether exhaustive runs enumerate ordered tuples rather than sets.
    pub labelled: bool,
    /// Excluded characteristics.
    pub guard: &'static [u64],
    pub sampler: Option<Sampler>,
    pub predicate: Predicate,
    pub family: Option<Family>,
}

impl TheoremCheck {
    pub fn is_converse(&self) -> bool {
        self.family.is_some()
    }

    /// Largest prime for which exhaustive enumeration is allowed.
    pub fn exhaustive_cap(&self) -> u64 {
        let n = self.domain.len();
        let geometric = self.domain.iter().filter(|k| matches!(k, Kind::Point | Kind::Line)).count();
        if n <= 3 || (geometric == 0 && n <= 5) {
            13
        } else {
            7
        }
    }
}

impl fmt::Debug for TheoremCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TheoremCheck").field("id", &self.id).field("domain", &self.domain).finish()
    }
}

pub(crate) fn check(
    id: &'static str,
    name: &'static str,
    theorem: u32,
    domain: &'static [Kind],
    predicate: Predicate,
) -> TheoremCheck {
    TheoremCheck {
        id,
        name,
        theorem: Some(theorem),
        domain,
        labelled: false,
        guard: &[],
        sampler: None,
        predicate,
        family: None,
    }
}

impl TheoremCheck {
    pub(crate) fn labelled(mut self) -> Self {
        self.labelled = true;
        self
    }

    pub(crate) fn sampler(mut self, s: Sampler) -> Self {
        self.sampler = Some(s);
        self
    }

    pub(crate) fn guard(mut self, g: &'static [u64]) -> Self {
        self.guard = g;
        self
    }

    pub(crate) fn family(mut self, f: Family) -> Self {
        self.family = Some(f);
        self
    }

    pub(crate) fn identity(mut self) -> Self {
        self.theorem = None;
        self
    }
}

/// Every check, in registry order: theorems by number, then identities,
/// then converse families.
pub fn registry() -> Vec<TheoremCheck> {
    let mut v = incidence::checks();
    v.extend(metrics::checks());
    v.extend(triangles::checks());
    v.extend(nulls::checks());
    v.sort_by_key(|c| c.theorem);
    v.extend(identities::checks());
    v.extend(converse::checks());
    v
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Every configuration over a prime field; `cap` overrides the
    /// per-check bound on `p`.
    Exhaustive { cap: Option<u64> },
    Random { trials: u64, bound: u64, seed: u64 },
    /// The check's counterexample family.
    Targeted,
}

impl Strategy {
    pub fn exhaustive() -> Strategy {
        Strategy::Exhaustive { cap: None }
    }

    pub fn random(trials: u64, bound: u64, seed: u64) -> Strategy {
        Strategy::Random { trials, bound, seed }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strategy::Exhaustive { cap: None } => write!(f, "exhaustive"),
            Strategy::Exhaustive { cap: Some(c) } => write!(f, "exhaustive(cap={c})"),
            Strategy::Random { trials, bound, seed } => {
                write!(f, "random(trials={trials},bound={bound},seed={seed})")
            }
            Strategy::Targeted => write!(f, "targeted"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkipCount {
    pub reason: String,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub config: Vec<String>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub field: String,
    pub strategy: String,
    pub drawn: u64,
    pub passed: u64,
    pub failed: u64,
    pub skipped: Vec<SkipCount>,
    /// The first few failing configurations.
    pub failures: Vec<Failure>,
    pub diagnostics: Vec<String>,
}

impl VerificationReport {
    pub fn skipped_total(&self) -> u64 {
        self.skipped.iter().map(|s| s.count).sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("unknown theorem id: {0}")]
    UnknownTheorem(String),
    #[error("strategy incompatible with this check or field: {0}")]
    IncompatibleStrategy(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

const MAX_RECORDED_FAILURES: usize = 20;
const RETRY_FACTOR: u64 = 100;

struct Tally {
    drawn: u64,
    passed: u64,
    failed: u64,
    skipped: BTreeMap<&'static str, u64>,
    failures: Vec<Failure>,
}

impl Tally {
    fn new() -> Tally {
        Tally { drawn: 0, passed: 0, failed: 0, skipped: BTreeMap::new(), failures: Vec::new() }
    }

    fn record(&mut self, cfg: &[Obj], out: Outcome) {
        self.drawn += 1;
        match out {
            Outcome::Pass => self.passed += 1,
            Outcome::Skip(r) => *self.skipped.entry(r).or_insert(0) += 1,
            Outcome::Fail(detail) => {
                self.failed += 1;
                if self.failures.len() < MAX_RECORDED_FAILURES {
                    self.failures.push(Failure { config: cfg.iter().map(|o| o.to_string()).collect(), detail });
                }
            }
        }
    }

    fn report(self, id: &str, field: &Field, strategy: &Strategy, diagnostics: Vec<String>) -> VerificationReport {
        VerificationReport {
            id: id.to_string(),
            field: field.spec().to_string(),
            strategy: strategy.to_string(),
            drawn: self.drawn,
            passed: self.passed,
            failed: self.failed,
            skipped: self.skipped.into_iter().map(|(reason, count)| SkipCount { reason: reason.into(), count }).collect(),
            failures: self.failures,
            diagnostics,
        }
    }
}

/// Seed for one check: the first eight bytes of SHA-256 over the master
/// seed (little endian) followed by the id.
pub fn derive_seed(master: u64, id: &str) -> u64 {
    let mut h = Sha256::new();
    h.update(master.to_le_bytes());
    h.update(id.as_bytes());
    let d = h.finalize();
    u64::from_le_bytes(d[..8].try_into().unwrap())
}

pub fn find(id: &str) -> Option<TheoremCheck> {
    registry().into_iter().find(|c| c.id == id)
}

pub fn run(id: &str, field: &FieldSpec, strategy: Strategy) -> Result<VerificationReport, VerifyError> {
    let c = find(id).ok_or_else(|| VerifyError::UnknownTheorem(id.to_string()))?;
    let field = crate::field::make_field(field)?;
    run_check(&c, &field, strategy)
}

pub fn run_check(c: &TheoremCheck, field: &Field, strategy: Strategy) -> Result<VerificationReport, VerifyError> {
    match strategy {
        Strategy::Targeted if !c.is_converse() => {
            return Err(VerifyError::IncompatibleStrategy(format!("{} has no counterexample family", c.id)))
        }
        Strategy::Exhaustive { .. } | Strategy::Random { .. } if c.is_converse() => {
            return Err(VerifyError::IncompatibleStrategy(format!("{} only runs targeted", c.id)))
        }
        Strategy::Exhaustive { cap } => {
            let p = match field {
                Field::Prime(p) => *p,
                _ => return Err(VerifyError::IncompatibleStrategy("exhaustive runs need a prime field".into())),
            };
            let cap = cap.unwrap_or_else(|| c.exhaustive_cap());
            if p > cap {
                return Err(VerifyError::IncompatibleStrategy(format!(
                    "{} is exhaustive only up to p = {cap}",
                    c.id
                )));
            }
        }
        _ => {}
    }
    if c.guard.contains(&field.characteristic()) {
        let mut t = Tally::new();
        t.skipped.insert("characteristic guard", 0);
        let diag = vec![format!("characteristic {} excluded", field.characteristic())];
        return Ok(t.report(c.id, field, &strategy, diag));
    }
    let ctx = Ctx::new(field);
    let mut tally = Tally::new();
    let mut diagnostics = Vec::new();
    match strategy {
        Strategy::Exhaustive { .. } => enumerate(c, &ctx, &mut tally),
        Strategy::Random { trials, bound, seed } => {
            let mut g = Gen::new(field, bound, derive_seed(seed, c.id));
            let cap = trials.saturating_mul(RETRY_FACTOR);
            let mut attempts = 0;
            while tally.passed + tally.failed < trials && attempts < cap {
                attempts += 1;
                let cfg = match c.sampler {
                    Some(s) => s(&mut g),
                    None => Some(g.draw(c.domain)),
                };
                match cfg {
                    Some(cfg) => {
                        let out = (c.predicate)(&ctx, &cfg);
                        tally.record(&cfg, out);
                    }
                    None => tally.record(&[], Outcome::Skip("sampler found no configuration")),
                }
            }
            if tally.passed + tally.failed < trials {
                diagnostics.push(format!(
                    "retry cap reached: {} of {trials} configurations met the preconditions after {attempts} draws",
                    tally.passed + tally.failed
                ));
            }
        }
        Strategy::Targeted => {
            let family = c.family.unwrap();
            let configs = family(field).map_err(VerifyError::IncompatibleStrategy)?;
            for cfg in configs {
                let out = (c.predicate)(&ctx, &cfg);
                tally.record(&cfg, out);
            }
        }
    }
    Ok(tally.report(c.id, field, &strategy, diagnostics))
}

/// Runs every theorem and identity check, in registry order. Exhaustive
/// runs beyond a check's cap fall back to sampling with a diagnostic.
pub fn run_all(field: &FieldSpec, strategy: Strategy) -> Result<Vec<VerificationReport>, VerifyError> {
    let f = crate::field::make_field(field)?;
    let mut out = Vec::new();
    for c in registry().iter().filter(|c| !c.is_converse()) {
        out.push(run_or_sample(c, &f, strategy)?);
    }
    Ok(out)
}

/// [`run_check`], except that an exhaustive run past the check's cap is
/// replaced by `random(500, 8, 42)` with a diagnostic saying so.
pub fn run_or_sample(c: &TheoremCheck, field: &Field, strategy: Strategy) -> Result<VerificationReport, VerifyError> {
    match run_check(c, field, strategy) {
        Err(VerifyError::IncompatibleStrategy(msg)) if matches!(strategy, Strategy::Exhaustive { .. }) => {
            let fallback = Strategy::random(500, 8, 42);
            let mut r = run_check(c, field, fallback)?;
            r.diagnostics.insert(0, format!("{msg}; sampled with {fallback} instead"));
            Ok(r)
        }
        other => other,
    }
}

/// Every converse check against its family. These are expected to fail.
pub fn run_converses(field: &FieldSpec) -> Result<Vec<VerificationReport>, VerifyError> {
    let f = crate::field::make_field(field)?;
    registry().iter().filter(|c| c.is_converse()).map(|c| run_check(c, &f, Strategy::Targeted)).collect()
}

fn universe(field: &Field, k: Kind) -> Vec<Obj> {
    match k {
        Kind::Point => all_points(field).unwrap().into_iter().map(Obj::Point).collect(),
        Kind::Line => all_lines(field).unwrap().into_iter().map(Obj::Line).collect(),
        Kind::Null => Proportion2::all(field).unwrap().into_iter().map(Obj::Null).collect(),
        Kind::Param => Proportion2::all(field).unwrap().into_iter().map(Obj::Param).collect(),
        Kind::Scalar => field.elements().unwrap().into_iter().map(Obj::Scalar).collect(),
    }
}

/// Walks every configuration: sets (or, when labelled, tuples of distinct
/// elements) of points, lines and null parameters, and all tuples of
/// proportions and scalars.
fn enumerate(c: &TheoremCheck, ctx: &Ctx, tally: &mut Tally) {
    let pools: Vec<Vec<Obj>> = c.domain.iter().map(|k| universe(ctx.field, *k)).collect();
    let mut idx: Vec<usize> = Vec::with_capacity(pools.len());
    let mut cfg: Vec<Obj> = Vec::with_capacity(pools.len());
    walk(c, ctx, &pools, &mut idx, &mut cfg, tally);
}

fn walk(c: &TheoremCheck, ctx: &Ctx, pools: &[Vec<Obj>], idx: &mut Vec<usize>, cfg: &mut Vec<Obj>, tally: &mut Tally) {
    let pos = idx.len();
    if pos == pools.len() {
        let out = (c.predicate)(ctx, cfg);
        tally.record(cfg, out);
        return;
    }
    let kind = c.domain[pos];
    let distinct = matches!(kind, Kind::Point | Kind::Line | Kind::Null);
    let start = if distinct && !c.labelled && pos > 0 && c.domain[pos - 1] == kind { idx[pos - 1] + 1 } else { 0 };
    for i in start..pools[pos].len() {
        if distinct && c.labelled && (0..pos).any(|j| c.domain[j] == kind && idx[j] == i) {
            continue;
        }
        idx.push(i);
        cfg.push(pools[pos][i].clone());
        walk(c, ctx, pools, idx, cfg, tally);
        cfg.pop();
        idx.pop();
    }
}

pub(crate) fn new_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

// Predicate helpers shared by the check modules.

pub(crate) fn pt(o: &Obj) -> &Point {
    match o {
        Obj::Point(a) => a,
        _ => panic!("expected a point, got {o:?}"),
    }
}

pub(crate) fn ln(o: &Obj) -> &Line {
    match o {
        Obj::Line(l) => l,
        _ => panic!("expected a line, got {o:?}"),
    }
}

pub(crate) fn par(o: &Obj) -> &Proportion2 {
    match o {
        Obj::Null(p) | Obj::Param(p) => p,
        _ => panic!("expected a proportion, got {o:?}"),
    }
}

pub(crate) fn sc(o: &Obj) -> &Scalar {
    match o {
        Obj::Scalar(s) => s,
        _ => panic!("expected a scalar, got {o:?}"),
    }
}

pub(crate) const UNDEFINED: &str = "undefined metric";

/// Unwraps an `Option`, or skips with the given reason.
macro_rules! need {
    ($e:expr, $r:expr) => {
        match $e {
            Some(v) => v,
            None => return $crate::verifier::Outcome::Skip($r),
        }
    };
}

/// Unwraps a metric value, skipping when it is undefined.
macro_rules! val {
    ($e:expr) => {
        need!($e.into_value(), $crate::verifier::UNDEFINED)
    };
}

/// Skips unless the condition holds.
macro_rules! require {
    ($c:expr, $r:expr) => {
        if !$c {
            return $crate::verifier::Outcome::Skip($r);
        }
    };
}

/// Fails with a formatted detail unless the condition holds.
macro_rules! ensure {
    ($c:expr, $($fmt:tt)+) => {
        if !$c {
            return $crate::verifier::Outcome::Fail(format!($($fmt)+));
        }
    };
}

pub(crate) use {ensure, need, require, val};

/// Points, lines, quadrances and spreads of a triangle, labelled so that
/// `q[i]` is opposite `a[i]` and `s[i]` is the spread at `a[i]`.
pub(crate) struct Tri {
    pub a: [Point; 3],
    pub l: [Line; 3],
    pub q: [crate::metric::MetricValue; 3],
    pub s: [crate::metric::MetricValue; 3],
}

impl Tri {
    pub fn of_points(a1: &Point, a2: &Point, a3: &Point) -> Option<Tri> {
        let t = crate::constructions::Triangle::new(a1.clone(), a2.clone(), a3.clone()).ok()?;
        let m = crate::trig::triangle_report(&t);
        Some(Tri { a: t.points().clone(), l: t.lines(), q: m.q, s: m.s })
    }

    /// The trilateral `L₁L₂L₃` through its points `a₁ = L₂L₃`, `a₂ = L₁L₃`,
    /// `a₃ = L₁L₂`; then `q₁ = q(L₁L₂, L₁L₃)` and `S₁ = S(L₂, L₃)` as for
    /// the triangle.
    pub fn of_lines(l1: &Line, l2: &Line, l3: &Line) -> Option<Tri> {
        let t = crate::constructions::Trilateral::new(l1.clone(), l2.clone(), l3.clone()).ok()?;
        let [a1, a2, a3] = t.points();
        Tri::of_points(&a1, &a2, &a3)
    }

    pub fn qs(&self) -> Option<[Scalar; 3]> {
        let [a, b, c] = &self.q;
        Some([a.value()?.clone(), b.value()?.clone(), c.value()?.clone()])
    }

    pub fn ss(&self) -> Option<[Scalar; 3]> {
        let [a, b, c] = &self.s;
        Some([a.value()?.clone(), b.value()?.clone(), c.value()?.clone()])
    }

    pub fn has_null_line(&self) -> bool {
        self.l.iter().any(|l| l.is_null())
    }

    pub fn has_null_point(&self) -> bool {
        self.a.iter().any(|a| a.is_null())
    }
}

/// The other two indices, in cyclic order.
pub(crate) fn others(k: usize) -> (usize, usize) {
    ((k + 1) % 3, (k + 2) % 3)
}
