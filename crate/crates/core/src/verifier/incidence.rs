//! Theorems 1–31: joins, meets, perpendiculars, couples and the
//! parametrizations. Each asserts incidence and, over 𝔽₅ and 𝔽₇, that
//! no second solution exists.

use super::{check, ensure, ln, need, par, pt, require, Ctx, Gen, Kind, Obj, Outcome, TheoremCheck};
use crate::constructions::{opposite_lines, opposite_points, perpendicular_line, perpendicular_point, Couple, Side, Triangle, Vertex};
use crate::field::Scalar;
use crate::nullkernel::{
    join_null, meet_null, null_diagonal_line, null_diagonal_point, null_line, null_lines_through_point, null_param_of,
    null_param_of_line, null_point, null_points_on_line, line_through_null_point, point_on_null_line,
};
use crate::projective::{
    collinear, concurrent, det3, join, join_coordinates, line_point_param, line_through_meet, meet, meet_coordinates,
    perpendicular_lines, perpendicular_points, point_line_param, point_on_join, span_coordinates, Proportion2,
    Vec3,
};

use Kind::{Line as L, Null as N, Point as P};

pub(super) fn checks() -> Vec<TheoremCheck> {
    vec![
        check("T1-join-of-points", "Join of points", 1, &[P, P], t1),
        check("T2-meet-of-lines", "Meet of lines", 2, &[L, L], t2),
        check("T3-collinear-points", "Collinear points", 3, &[P, P, P], t3).sampler(s3),
        check("T4-concurrent-lines", "Concurrent lines", 4, &[L, L, L], t4).sampler(s4),
        check("T5-line-through-null-points", "Line through null points", 5, &[L], t5).sampler(s5),
        check("T6-point-on-null-lines", "Point on null lines", 6, &[P], t6).sampler(s6),
        check("T7-perpendicular-point", "Perpendicular point", 7, &[P, P], t7),
        check("T8-perpendicular-line", "Perpendicular line", 8, &[L, L], t8),
        check("T9-opposite-points", "Opposite points", 9, &[P, P], t9).labelled().sampler(s9),
        check("T10-opposite-lines", "Opposite lines", 10, &[L, L], t10).labelled().sampler(s10),
        check("T11-altitude-line", "Altitude line", 11, &[P, L], t11),
        check("T12-altitude-point", "Altitude point", 12, &[P, L], t12),
        check("T13-parallel-line", "Parallel line", 13, &[P, L], t13),
        check("T14-parallel-point", "Parallel point", 14, &[P, L], t14),
        check("T15-base-point", "Base point", 15, &[P, L], t15),
        check("T16-base-line", "Base line", 16, &[P, L], t16),
        check("T17-parametrizing-a-line", "Parametrizing a line", 17, &[L, P], t17).sampler(s17),
        check("T18-parametrizing-a-point", "Parametrizing a point", 18, &[P, L], t18).sampler(s18),
        check("T19-parametrizing-a-join", "Parametrizing a join", 19, &[P, P, P], t19).sampler(s3),
        check("T20-parametrizing-a-meet", "Parametrizing a meet", 20, &[L, L, L], t20).sampler(s4),
        check("T21-parametrization-of-null-points", "Parametrization of null points", 21, &[P], t21).sampler(s21),
        check("T22-parametrization-of-null-lines", "Parametrization of null lines", 22, &[L], t22).sampler(s22),
        check("T23-join-of-null-points", "Join of null points", 23, &[N, N], t23),
        check("T24-meet-of-null-lines", "Meet of null lines", 24, &[N, N], t24),
        check("T25-null-diagonal-point", "Null diagonal point", 25, &[N, N, N, N], t25),
        check("T26-null-diagonal-line", "Null diagonal line", 26, &[N, N, N, N], t26),
        check("T27-perpendicular-null-line", "Perpendicular null line", 27, &[P, P], t27).sampler(s27),
        check("T28-perpendicular-null-point", "Perpendicular null point", 28, &[L, L], t28).sampler(s28),
        check("T29-parametrizing-a-null-line", "Parametrizing a null line", 29, &[N, P], t29).sampler(s29),
        check("T30-parametrizing-a-null-point", "Parametrizing a null point", 30, &[N, L], t30).sampler(s30),
        check("T31-triangle-trilateral-duality", "Triangle trilateral duality", 31, &[P, P, P], t31),
    ]
}

fn count<T>(xs: Option<&[T]>, f: impl Fn(&T) -> bool) -> Option<usize> {
    xs.map(|xs| xs.iter().filter(|x| f(x)).count())
}

fn t1(ctx: &Ctx, c: &[Obj]) -> Outcome {
    let (a1, a2) = (pt(&c[0]), pt(&c[1]));
    let l = need!(join(a1, a2).ok(), "identical points");
    ensure!(a1.lies_on(&l) && a2.lies_on(&l), "join {l} misses a point");
    if let Some(n) = count(ctx.sweep_lines(), |m| m.passes_through(a1) && m.passes_through(a2)) {
        ensure!(n == 1, "{n} lines pass through both points");
    }
    Outcome::Pass
}

fn t2(ctx: &Ctx, c: &[Obj]) -> Outcome {
    let (l1, l2) = (ln(&c[0]), ln(&c[1]));
    let a = need!(meet(l1, l2).ok(), "identical lines");
    ensure!(a.lies_on(l1) && a.lies_on(l2), "meet {a} misses a line");
    if let Some(n) = count(ctx.sweep_points(), |b| b.lies_on(l1) && b.lies_on(l2)) {
        ensure!(n == 1, "{n} points lie on both lines");
    }
    Outcome::Pass
}

fn s3(g: &mut Gen) -> Option<Vec<Obj>> {
    let (a1, a2) = (g.point(), g.point());
    let a3 = match join(&a1, &a2) {
        Ok(l) if g.coin() => g.point_on(&l),
        _ => g.point(),
    };
    Some(vec![Obj::Point(a1), Obj::Point(a2), Obj::Point(a3)])
}

fn s4(g: &mut Gen) -> Option<Vec<Obj>> {
    let (l1, l2) = (g.line(), g.line());
    let l3 = match meet(&l1, &l2) {
        Ok(a) if g.coin() => g.line_through(&a),
        _ => g.line(),
    };
    Some(vec![Obj::Line(l1), Obj::Line(l2), Obj::Line(l3)])
}

fn t3(_: &Ctx, c: &[Obj]) -> Outcome {
    let (a1, a2, a3) = (pt(&c[0]), pt(&c[1]), pt(&c[2]));
    require!(a1 != a2 && a1 != a3 && a2 != a3, "points not distinct");
    let det = det3(a1.coords(), a2.coords(), a3.coords());
    let on = a3.lies_on(&join(a1, a2).unwrap());
    ensure!(det.is_zero() == on, "determinant {det} but incidence {on}");
    Outcome::Pass
}

fn t4(_: &Ctx, c: &[Obj]) -> Outcome {
    let (l1, l2, l3) = (ln(&c[0]), ln(&c[1]), ln(&c[2]));
    require!(l1 != l2 && l1 != l3 && l2 != l3, "lines not distinct");
    let det = det3(l1.coords(), l2.coords(), l3.coords());
    let on = l3.passes_through(&meet(l1, l2).unwrap());
    ensure!(det.is_zero() == on, "determinant {det} but incidence {on}");
    Outcome::Pass
}

fn s5(g: &mut Gen) -> Option<Vec<Obj>> {
    let (p1, p2) = (g.param(), g.param());
    let l = join_null(&p1, &p2).unwrap_or_else(|_| null_line(&p1));
    Some(vec![Obj::Line(if g.coin() { l } else { g.line() })])
}

fn s6(g: &mut Gen) -> Option<Vec<Obj>> {
    let (p1, p2) = (g.param(), g.param());
    let a = meet_null(&p1, &p2).unwrap_or_else(|_| null_point(&p1));
    Some(vec![Obj::Point(if g.coin() { a } else { g.point() })])
}

fn t5(ctx: &Ctx, c: &[Obj]) -> Outcome {
    let l = ln(&c[0]);
    let found = null_points_on_line(ctx.field, l);
    ensure!(found.len() <= 2, "{} null points found", found.len());
    for a in &found {
        ensure!(a.is_null() && a.lies_on(l), "{a} is not a null point of the line");
    }
    if l.is_null() {
        ensure!(found == vec![l.dual()], "a null line meets the null points only at its dual");
    }
    if let Some(n) = count(ctx.sweep_points(), |a| a.is_null() && a.lies_on(l)) {
        ensure!(n == found.len(), "sweep finds {n} null points, construction {}", found.len());
    }
    Outcome::Pass
}

fn t6(ctx: &Ctx, c: &[Obj]) -> Outcome {
    let a = pt(&c[0]);
    let found = null_lines_through_point(ctx.field, a);
    ensure!(found.len() <= 2, "{} null lines found", found.len());
    for l in &found {
        ensure!(l.is_null() && l.passes_through(a), "{l} is not a null line through the point");
    }
    if let Some(n) = count(ctx.sweep_lines(), |l| l.is_null() && l.passes_through(a)) {
        ensure!(n == found.len(), "sweep finds {n} null lines, construction {}", found.len());
    }
    Outcome::Pass
}

fn t7(ctx: &Ctx, c: &[Obj]) -> Outcome {
    let (a1, a2) = (pt(&c[0]), pt(&c[1]));
    let side = need!(Side::new(a1.clone(), a2.clone()).ok(), "identical points");
    let p = perpendicular_point(&side);
    ensure!(perpendicular_points(&p, a1) && perpendicular_points(&p, a2), "{p} not perpendicular to both");
    ensure!(p == meet(&a1.dual(), &a2.dual()).unwrap(), "{p} differs from a₁^⊥a₂^⊥");
    if let Some(n) = count(ctx.sweep_points(), |b| perpendicular_points(b, a1) && perpendicular_points(b, a2)) {
        ensure!(n == 1, "{n} points perpendicular to both");
    }
    Outcome::Pass
}

fn t8(ctx: &Ctx, c: &[Obj]) -> Outcome {
    let (l1, l2) = (ln(&c[0]), ln(&c[1]));
    let v = need!(Vertex::new(l1.clone(), l2.clone()).ok(), "identical lines");
    let p = perpendicular_line(&v);
    ensure!(perpendicular_lines(&p, l1) && perpendicular_lines(&p, l2), "{p} not perpendicular to both");
    ensure!(p == join(&l1.dual(), &l2.dual()).unwrap(), "{p} differs from L₁^⊥L₂^⊥");
    if let Some(n) = count(ctx.sweep_lines(), |m| perpendicular_lines(m, l1) && perpendicular_lines(m, l2)) {
        ensure!(n == 1, "{n} lines perpendicular to both");
    }
    Outcome::Pass
}

fn s9(g: &mut Gen) -> Option<Vec<Obj>> {
    let a1 = if g.coin() { g.null_point() } else { g.point() };
    Some(vec![Obj::Point(a1), Obj::Point(g.point())])
}

fn s10(g: &mut Gen) -> Option<Vec<Obj>> {
    let l1 = if g.coin() { null_line(&g.param()) } else { g.line() };
    Some(vec![Obj::Line(l1), Obj::Line(g.line())])
}

fn t9(ctx: &Ctx, c: &[Obj]) -> Outcome {
    let (a1, a2) = (pt(&c[0]), pt(&c[1]));
    require!(a1 != a2, "identical points");
    let l = join(a1, a2).unwrap();
    require!(!l.is_null(), "null side");
    let (o1, o2) = opposite_points(a1, a2).unwrap();
    ensure!(o1.lies_on(&l) && perpendicular_points(&o1, a1), "o₁ = {o1} misplaced");
    ensure!(o2.lies_on(&l) && perpendicular_points(&o2, a2), "o₂ = {o2} misplaced");
    ensure!(o1 != o2, "opposite points coincide");
    if a1.is_null() {
        ensure!(&o1 == a1, "null a₁ but o₁ = {o1}");
    }
    if a2.is_null() {
        ensure!(&o2 == a2, "null a₂ but o₂ = {o2}");
    }
    ensure!(o1 == meet(&l, &a1.dual()).unwrap(), "o₁ differs from (a₁a₂)a₁^⊥");
    if let Some(n) = count(ctx.sweep_points(), |b| b.lies_on(&l) && perpendicular_points(b, a1)) {
        ensure!(n == 1, "{n} points of the side are perpendicular to a₁");
    }
    Outcome::Pass
}

fn t10(ctx: &Ctx, c: &[Obj]) -> Outcome {
    let (l1, l2) = (ln(&c[0]), ln(&c[1]));
    require!(l1 != l2, "identical lines");
    let a = meet(l1, l2).unwrap();
    require!(!a.is_null(), "null vertex");
    let (o1, o2) = opposite_lines(l1, l2).unwrap();
    ensure!(o1.passes_through(&a) && perpendicular_lines(&o1, l1), "O₁ = {o1} misplaced");
    ensure!(o2.passes_through(&a) && perpendicular_lines(&o2, l2), "O₂ = {o2} misplaced");
    ensure!(o1 != o2, "opposite lines coincide");
    if l1.is_null() {
        ensure!(&o1 == l1, "null L₁ but O₁ = {o1}");
    }
    ensure!(o1 == join(&a, &l1.dual()).unwrap(), "O₁ differs from (L₁L₂)L₁^⊥");
    if let Some(n) = count(ctx.sweep_lines(), |m| m.passes_through(&a) && perpendicular_lines(m, l1)) {
        ensure!(n == 1, "{n} lines through the vertex are perpendicular to L₁");
    }
    Outcome::Pass
}

fn couple(c: &[Obj]) -> Result<Couple, &'static str> {
    let cp = Couple::new(pt(&c[0]).clone(), ln(&c[1]).clone()).map_err(|_| "point lies on line")?;
    if cp.is_dual() {
        return Err("dual couple");
    }
    Ok(cp)
}

macro_rules! couple_or_skip {
    ($c:expr) => {
        match couple($c) {
            Ok(cp) => cp,
            Err(r) => return Outcome::Skip(r),
        }
    };
}

fn t11(ctx: &Ctx, c: &[Obj]) -> Outcome {
    let cp = couple_or_skip!(c);
    let (a, l) = (cp.point(), cp.line());
    let n = cp.altitude_line().unwrap();
    ensure!(n.passes_through(a) && perpendicular_lines(&n, l), "N = {n} misplaced");
    ensure!(n == join(a, &l.dual()).unwrap(), "N differs from aL^⊥");
    if let Some(k) = count(ctx.sweep_lines(), |m| m.passes_through(a) && perpendicular_lines(m, l)) {
        ensure!(k == 1, "{k} altitude lines");
    }
    Outcome::Pass
}

fn t12(ctx: &Ctx, c: &[Obj]) -> Outcome {
    let cp = couple_or_skip!(c);
    let (a, l) = (cp.point(), cp.line());
    let n = cp.altitude_point().unwrap();
    ensure!(n.lies_on(l) && perpendicular_points(&n, a), "n = {n} misplaced");
    if let Some(k) = count(ctx.sweep_points(), |b| b.lies_on(l) && perpendicular_points(b, a)) {
        ensure!(k == 1, "{k} altitude points");
    }
    Outcome::Pass
}

fn t13(ctx: &Ctx, c: &[Obj]) -> Outcome {
    let cp = couple_or_skip!(c);
    let a = cp.point();
    let n = cp.altitude_line().unwrap();
    let r = cp.parallel_line().unwrap();
    ensure!(r.passes_through(a) && perpendicular_lines(&r, &n), "R = {r} misplaced");
    if let Some(k) = count(ctx.sweep_lines(), |m| m.passes_through(a) && perpendicular_lines(m, &n)) {
        ensure!(k == 1, "{k} parallel lines");
    }
    Outcome::Pass
}

fn t14(ctx: &Ctx, c: &[Obj]) -> Outcome {
    let cp = couple_or_skip!(c);
    let a = cp.point();
    let n = cp.altitude_point().unwrap();
    let r = cp.parallel_point().unwrap();
    ensure!(r.lies_on(&a.dual()) && perpendicular_points(&r, &n), "r = {r} misplaced");
    ensure!(r == meet(&a.dual(), &cp.altitude_line().unwrap()).unwrap(), "r differs from a^⊥(aL^⊥)");
    if let Some(k) = count(ctx.sweep_points(), |b| b.lies_on(&a.dual()) && perpendicular_points(b, &n)) {
        ensure!(k == 1, "{k} parallel points");
    }
    Outcome::Pass
}

fn t15(ctx: &Ctx, c: &[Obj]) -> Outcome {
    let cp = couple_or_skip!(c);
    let l = cp.line();
    let n = cp.altitude_line().unwrap();
    let b = cp.base_point().unwrap();
    ensure!(b.lies_on(l) && b.lies_on(&n), "b = {b} misplaced");
    if let Some(k) = count(ctx.sweep_points(), |x| x.lies_on(l) && x.lies_on(&n)) {
        ensure!(k == 1, "{k} base points");
    }
    Outcome::Pass
}

fn t16(ctx: &Ctx, c: &[Obj]) -> Outcome {
    let cp = couple_or_skip!(c);
    let lp = cp.line().dual();
    let n = cp.altitude_point().unwrap();
    let b = cp.base_line().unwrap();
    ensure!(b.passes_through(&lp) && b.passes_through(&n), "B = {b} misplaced");
    if let Some(k) = count(ctx.sweep_lines(), |m| m.passes_through(&lp) && m.passes_through(&n)) {
        ensure!(k == 1, "{k} base lines");
    }
    Outcome::Pass
}

/// One solution of `m·x = b` by row reduction, free unknowns set to zero.
pub(crate) fn solve3(m: [[Scalar; 3]; 3], b: Vec3) -> Option<[Scalar; 3]> {
    let zero = b[0].zero_like();
    let mut rows: Vec<[Scalar; 4]> =
        (0..3).map(|i| [m[i][0].clone(), m[i][1].clone(), m[i][2].clone(), b[i].clone()]).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..3 {
        let Some(k) = (r..3).find(|&k| !rows[k][col].is_zero()) else { continue };
        rows.swap(r, k);
        let inv = rows[r][col].inv().unwrap();
        for j in 0..4 {
            rows[r][j] = &rows[r][j] * &inv;
        }
        for i in 0..3 {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                for j in 0..4 {
                    rows[i][j] = &rows[i][j] - &(&f * &rows[r][j]);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[3].is_zero()) {
        return None;
    }
    let mut x = [zero.clone(), zero.clone(), zero];
    for (i, &col) in pivots.iter().enumerate() {
        x[col] = rows[i][3].clone();
    }
    Some(x)
}

fn s17(g: &mut Gen) -> Option<Vec<Obj>> {
    let l = g.line();
    let a = g.point_on(&l);
    Some(vec![Obj::Line(l), Obj::Point(a)])
}

fn s18(g: &mut Gen) -> Option<Vec<Obj>> {
    let a = g.point();
    let l = g.line_through(&a);
    Some(vec![Obj::Point(a), Obj::Line(l)])
}

fn t17(_: &Ctx, c: &[Obj]) -> Outcome {
    let (l, a) = (ln(&c[0]), pt(&c[1]));
    require!(a.lies_on(l), "point not on line");
    let [lc, mc, nc] = l.coords().clone();
    let z = lc.zero_like();
    let m = [[nc.clone(), z.clone(), -&mc], [z.clone(), nc.clone(), lc.clone()], [lc, mc, z]];
    let x = need!(solve3(m, a.coords().clone()), "no parameters solve the system");
    ensure!(line_point_param(l, &x[0], &x[1], &x[2]).as_ref() == Ok(a), "parameters {:?} miss the point", x);
    Outcome::Pass
}

fn t18(_: &Ctx, c: &[Obj]) -> Outcome {
    let (a, l) = (pt(&c[0]), ln(&c[1]));
    require!(l.passes_through(a), "line not through point");
    let [x, y, zc] = a.coords().clone();
    let z = x.zero_like();
    let m = [[zc.clone(), z.clone(), -&y], [z.clone(), zc.clone(), x.clone()], [x, y, z]];
    let s = need!(solve3(m, l.coords().clone()), "no parameters solve the system");
    ensure!(point_line_param(a, &s[0], &s[1], &s[2]).as_ref() == Ok(l), "parameters {:?} miss the line", s);
    Outcome::Pass
}

/// For each member of a collinear triple, its join coordinates relative to
/// the other two.
fn t19(ctx: &Ctx, c: &[Obj]) -> Outcome {
    let ps = [pt(&c[0]), pt(&c[1]), pt(&c[2])];
    require!(ps[0] != ps[1] && ps[0] != ps[2] && ps[1] != ps[2], "points not distinct");
    require!(collinear(ps[0], ps[1], ps[2]), "not collinear");
    let params = ctx.sweep_params();
    for i in 0..3 {
        let a = ps[i];
        let (v1, v2) = (ps[(i + 1) % 3].coords(), ps[(i + 2) % 3].coords());
        let tu = join_coordinates(a, v1, v2).unwrap();
        ensure!(point_on_join(v1, v2, &tu).as_ref() == Ok(a), "{tu} does not recover {a}");
        if let Some(ps) = &params {
            let n = ps.iter().filter(|p| point_on_join(v1, v2, p).as_ref() == Ok(a)).count();
            ensure!(n == 1, "{n} proportions give {a}");
        }
    }
    Outcome::Pass
}

fn t20(ctx: &Ctx, c: &[Obj]) -> Outcome {
    let ls = [ln(&c[0]), ln(&c[1]), ln(&c[2])];
    require!(ls[0] != ls[1] && ls[0] != ls[2] && ls[1] != ls[2], "lines not distinct");
    require!(concurrent(ls[0], ls[1], ls[2]), "not concurrent");
    let params = ctx.sweep_params();
    for i in 0..3 {
        let l = ls[i];
        let (v1, v2) = (ls[(i + 1) % 3].coords(), ls[(i + 2) % 3].coords());
        let tu = meet_coordinates(l, v1, v2).unwrap();
        ensure!(line_through_meet(v1, v2, &tu).as_ref() == Ok(l), "{tu} does not recover {l}");
        if let Some(ps) = &params {
            let n = ps.iter().filter(|p| line_through_meet(v1, v2, p).as_ref() == Ok(l)).count();
            ensure!(n == 1, "{n} proportions give {l}");
        }
    }
    Outcome::Pass
}

fn s21(g: &mut Gen) -> Option<Vec<Obj>> {
    let a = if g.coin() { g.null_point() } else { g.point() };
    Some(vec![Obj::Point(a)])
}

fn s22(g: &mut Gen) -> Option<Vec<Obj>> {
    let l = if g.coin() { null_line(&g.param()) } else { g.line() };
    Some(vec![Obj::Line(l)])
}

fn t21(ctx: &Ctx, c: &[Obj]) -> Outcome {
    let a = pt(&c[0]);
    require!(a.is_null(), "point not null");
    let tu = null_param_of(a).unwrap();
    ensure!(&null_point(&tu) == a, "α({tu}) ≠ {a}");
    if let Some(ps) = ctx.sweep_params() {
        let n = ps.iter().filter(|p| &null_point(p) == a).count();
        ensure!(n == 1, "{n} proportions give {a}");
    }
    Outcome::Pass
}

fn t22(ctx: &Ctx, c: &[Obj]) -> Outcome {
    let l = ln(&c[0]);
    require!(l.is_null(), "line not null");
    let tu = null_param_of_line(l).unwrap();
    ensure!(&null_line(&tu) == l, "Λ({tu}) ≠ {l}");
    if let Some(ps) = ctx.sweep_params() {
        let n = ps.iter().filter(|p| &null_line(p) == l).count();
        ensure!(n == 1, "{n} proportions give {l}");
    }
    Outcome::Pass
}

fn t23(_: &Ctx, c: &[Obj]) -> Outcome {
    let (p1, p2) = (par(&c[0]), par(&c[1]));
    require!(p1 != p2, "equal parameters");
    let l = join_null(p1, p2).unwrap();
    ensure!(l == join(&null_point(p1), &null_point(p2)).unwrap(), "{l} differs from the join");
    ensure!(!l.is_null(), "join of null points is null");
    Outcome::Pass
}

fn t24(_: &Ctx, c: &[Obj]) -> Outcome {
    let (p1, p2) = (par(&c[0]), par(&c[1]));
    require!(p1 != p2, "equal parameters");
    let a = meet_null(p1, p2).unwrap();
    ensure!(a == meet(&null_line(p1), &null_line(p2)).unwrap(), "{a} differs from the meet");
    ensure!(!a.is_null(), "meet of null lines is null");
    Outcome::Pass
}

const PAIRINGS: [[usize; 4]; 3] = [[0, 1, 2, 3], [0, 2, 1, 3], [0, 3, 1, 2]];

fn four(c: &[Obj]) -> [&Proportion2; 4] {
    [par(&c[0]), par(&c[1]), par(&c[2]), par(&c[3])]
}

fn distinct4(p: &[&Proportion2; 4]) -> bool {
    (0..4).all(|i| (i + 1..4).all(|j| p[i] != p[j]))
}

fn t25(_: &Ctx, c: &[Obj]) -> Outcome {
    let p = four(c);
    require!(distinct4(&p), "equal parameters");
    for [i, j, k, l] in PAIRINGS {
        let d = null_diagonal_point(p[i], p[j], p[k], p[l]).unwrap();
        let m = meet(&join_null(p[i], p[j]).unwrap(), &join_null(p[k], p[l]).unwrap()).unwrap();
        ensure!(d == m, "pairing {i}{j}|{k}{l}: formula {d}, meet {m}");
    }
    Outcome::Pass
}

fn t26(_: &Ctx, c: &[Obj]) -> Outcome {
    let p = four(c);
    require!(distinct4(&p), "equal parameters");
    for [i, j, k, l] in PAIRINGS {
        let d = null_diagonal_line(p[i], p[j], p[k], p[l]).unwrap();
        let m = join(&meet_null(p[i], p[j]).unwrap(), &meet_null(p[k], p[l]).unwrap()).unwrap();
        ensure!(d == m, "pairing {i}{j}|{k}{l}: formula {d}, join {m}");
    }
    Outcome::Pass
}

fn s27(g: &mut Gen) -> Option<Vec<Obj>> {
    let a1 = g.null_point();
    let a2 = if g.coin() { g.point_on(&a1.dual()) } else { g.point() };
    Some(vec![Obj::Point(a1), Obj::Point(a2)])
}

fn s28(g: &mut Gen) -> Option<Vec<Obj>> {
    let l1 = null_line(&g.param());
    let l2 = if g.coin() { g.line_through(&l1.dual()) } else { g.line() };
    Some(vec![Obj::Line(l1), Obj::Line(l2)])
}

fn t27(_: &Ctx, c: &[Obj]) -> Outcome {
    let (a1, a2) = (pt(&c[0]), pt(&c[1]));
    require!(a1 != a2, "identical points");
    require!(a1.is_null() || a2.is_null(), "no null point");
    for (x, y) in [(a1, a2), (a2, a1)] {
        if !x.is_null() {
            continue;
        }
        let l = join(x, y).unwrap();
        ensure!(l.is_null() == perpendicular_points(x, y), "null join {} but perpendicular {}", l.is_null(), !l.is_null());
        if l.is_null() {
            ensure!(l == x.dual(), "null join {l} is not the dual of {x}");
        }
    }
    Outcome::Pass
}

fn t28(_: &Ctx, c: &[Obj]) -> Outcome {
    let (l1, l2) = (ln(&c[0]), ln(&c[1]));
    require!(l1 != l2, "identical lines");
    require!(l1.is_null() || l2.is_null(), "no null line");
    for (x, y) in [(l1, l2), (l2, l1)] {
        if !x.is_null() {
            continue;
        }
        let a = meet(x, y).unwrap();
        ensure!(a.is_null() == perpendicular_lines(x, y), "null meet {} but perpendicular {}", a.is_null(), !a.is_null());
        if a.is_null() {
            ensure!(a == x.dual(), "null meet {a} is not the dual of {x}");
        }
    }
    Outcome::Pass
}

/// Spanning vectors of `Λ(t:u)` in the two cases of the parametrization.
fn null_line_basis(tu: &Proportion2) -> (Vec3, Vec3) {
    let (t, u) = (tu.t(), tu.u());
    let n = t.sq() + u.sq();
    let z = t.zero_like();
    if n.is_zero() {
        ([t.clone(), u.clone(), z.clone()], [z.clone(), z, t.one_like()])
    } else {
        let d = t.sq() - u.sq();
        let c = 2 * (t * u);
        ([d.clone(), c.clone(), n], [-c, d, z])
    }
}

fn s29(g: &mut Gen) -> Option<Vec<Obj>> {
    let tu = g.param();
    let a = g.point_on(&null_line(&tu));
    Some(vec![Obj::Null(tu), Obj::Point(a)])
}

fn s30(g: &mut Gen) -> Option<Vec<Obj>> {
    let tu = g.param();
    let l = g.line_through(&null_point(&tu));
    Some(vec![Obj::Null(tu), Obj::Line(l)])
}

fn t29(ctx: &Ctx, c: &[Obj]) -> Outcome {
    let (tu, a) = (par(&c[0]), pt(&c[1]));
    require!(a.lies_on(&null_line(tu)), "point not on null line");
    let (v1, v2) = null_line_basis(tu);
    let rs = span_coordinates(a.coords(), &v1, &v2).unwrap();
    ensure!(&point_on_null_line(tu, &rs) == a, "r:s = {rs} does not recover {a}");
    if let Some(ps) = ctx.sweep_params() {
        let n = ps.iter().filter(|p| &point_on_null_line(tu, p) == a).count();
        ensure!(n == 1, "{n} proportions give {a}");
    }
    Outcome::Pass
}

fn t30(ctx: &Ctx, c: &[Obj]) -> Outcome {
    let (tu, l) = (par(&c[0]), ln(&c[1]));
    require!(l.passes_through(&null_point(tu)), "line not through null point");
    let (v1, v2) = null_line_basis(tu);
    let rs = span_coordinates(l.coords(), &v1, &v2).unwrap();
    ensure!(&line_through_null_point(tu, &rs) == l, "r:s = {rs} does not recover {l}");
    if let Some(ps) = ctx.sweep_params() {
        let n = ps.iter().filter(|p| &line_through_null_point(tu, p) == l).count();
        ensure!(n == 1, "{n} proportions give {l}");
    }
    Outcome::Pass
}

fn t31(_: &Ctx, c: &[Obj]) -> Outcome {
    let tri = need!(Triangle::new(pt(&c[0]).clone(), pt(&c[1]).clone(), pt(&c[2]).clone()).ok(), "collinear points");
    let d = tri.dual();
    let lines = tri.lines();
    let dpts = d.points();
    let (sides, verts, couples) = (tri.sides(), tri.vertices(), tri.couples());
    let (dsides, dverts, dcouples) = (d.sides(), d.vertices(), d.couples());
    for i in 0..3 {
        ensure!(d.lines()[i] == tri.points()[i].dual(), "line {i} is not dual to point {i}");
        ensure!(dpts[i] == lines[i].dual(), "point {i} is not dual to line {i}");
        ensure!(sides[i].dual() == dverts[i], "side {i} is not dual to vertex {i}");
        ensure!(verts[i].dual() == dsides[i], "vertex {i} is not dual to side {i}");
        ensure!(couples[i].dual() == dcouples[i], "couple {i} is not dual to couple {i}");
    }
    ensure!(d.dual() == tri, "double dual differs");
    Outcome::Pass
}
