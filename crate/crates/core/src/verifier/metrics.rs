//! Theorems 32–61: quadrance and spread, the triple quad and spread
//! formulas, the laws of a triangle, midpoints and spread polynomials.

use super::gen::reflect;
use super::{check, ensure, ln, need, others, pt, require, sc, val, Ctx, Gen, Kind, Obj, Outcome, TheoremCheck, Tri};
use crate::constructions::{is_midpoint, midlines, midpoints, opposite_points};
use crate::field::{Field, Scalar};
use crate::metric::{
    couple_metric, cross, cross_ratio, product, quadrance, quadrance_via_cross, quadrea, quadreal, spread,
    spread_via_cross, triple_cross, triple_product,
};
use crate::projective::{
    bilinear, collinear, concurrent, det3, form, hcross, join, meet, perpendicular_lines, perpendicular_points, Line,
    Point,
};
use crate::trig::{mid_substitution, spread_poly, triple_spread_fn};

use Kind::{Line as L, Point as P, Scalar as S};

pub(super) fn checks() -> Vec<TheoremCheck> {
    vec![
        check("T32-quadrance", "Quadrance", 32, &[P, P], t32),
        check("T33-zero-quadrance", "Zero quadrance", 33, &[P, P], t33).sampler(s33),
        check("T34-spread", "Spread", 34, &[L, L], t34),
        check("T35-zero-spread", "Zero spread", 35, &[L, L], t35).sampler(s35),
        check("T36-quadrance-spread-duality", "Quadrance spread duality", 36, &[P, P], t36),
        check("T37-quadrance-cross-ratio", "Quadrance cross ratio", 37, &[P, P], t37),
        check("T38-triple-quad", "Triple quad formula", 38, &[P, P, P], t38).sampler(s38),
        check("T39-triple-spread", "Triple spread formula", 39, &[L, L, L], t39).sampler(s39),
        check("T40-complementary-quadrances-spreads", "Complementary quadrances spreads", 40, &[S, S, S], t40)
            .sampler(s40),
        check("T41-equal-quadrances-spreads", "Equal quadrances spreads", 41, &[S, S, S], t41).sampler(s41),
        check("T42-pythagoras", "Pythagoras", 42, &[P, P, P], t42).sampler(s42),
        check("T43-pythagoras-dual", "Pythagoras' dual", 43, &[L, L, L], t43).sampler(s43),
        check("T44-spread-formula", "Spread formula", 44, &[P, P, P], t44),
        check("T45-spread-law", "Spread law", 45, &[P, P, P], t45),
        check("T46-spread-dual-law", "Spread dual law", 46, &[L, L, L], t46),
        check("T47-quadrea", "Quadrea", 47, &[P, P, P], t47),
        check("T48-quadreal", "Quadreal", 48, &[L, L, L], t48),
        check("T49-quadrea-quadreal-product", "Quadrea quadreal product", 49, &[P, P, P], t49),
        check("T50-cross-law", "Cross law", 50, &[P, P, P], t50),
        check("T51-cross-dual-law", "Cross dual law", 51, &[L, L, L], t51),
        check("T52-triple-product-relation", "Triple product relation", 52, &[P, P, P], t52),
        check("T53-triple-cross-relation", "Triple cross relation", 53, &[L, L, L], t53),
        check("T54-midpoints", "Midpoints", 54, &[P, P], t54).sampler(s54),
        check("T55-midlines", "Midlines", 55, &[L, L], t55).sampler(s55),
        check("T56-triple-quad-mid", "Triple quad mid", 56, &[S, S, S], t56).sampler(s56),
        check("T57-pythagoras-mid", "Pythagoras mid", 57, &[S, S, S], t57).sampler(s57),
        check("T58-cross-mid", "Cross mid", 58, &[S, S, S, S], t58).sampler(s58),
        check("T59-couple-quadrance-spread", "Couple quadrance spread", 59, &[P, L], t59),
        check("T60-three-equal-quadrances", "Three equal quadrances", 60, &[S, S, S], t60).sampler(s60),
        check("T61-recursive-spreads", "Recursive spreads", 61, &[S], t61),
    ]
}

fn t32(_: &Ctx, c: &[Obj]) -> Outcome {
    let (a1, a2) = (pt(&c[0]), pt(&c[1]));
    let (q, qx) = (quadrance(a1, a2), quadrance_via_cross(a1, a2));
    ensure!(q == qx, "definition gives {q}, cross form {qx}");
    Outcome::Pass
}

/// Half the draws lie on a common null line.
fn s33(g: &mut Gen) -> Option<Vec<Obj>> {
    if g.coin() {
        let l = crate::nullkernel::null_line(&g.param());
        return Some(vec![Obj::Point(g.point_on(&l)), Obj::Point(g.point_on(&l))]);
    }
    Some(vec![Obj::Point(g.point()), Obj::Point(g.point())])
}

fn s35(g: &mut Gen) -> Option<Vec<Obj>> {
    if g.coin() {
        let n = g.null_point();
        return Some(vec![Obj::Line(g.line_through(&n)), Obj::Line(g.line_through(&n))]);
    }
    Some(vec![Obj::Line(g.line()), Obj::Line(g.line())])
}

fn t33(_: &Ctx, c: &[Obj]) -> Outcome {
    let (a1, a2) = (pt(&c[0]), pt(&c[1]));
    require!(a1 != a2, "identical points");
    let q = val!(quadrance(a1, a2));
    let null = join(a1, a2).unwrap().is_null();
    ensure!(q.is_zero() == null, "q = {q} but null join {null}");
    Outcome::Pass
}

fn t34(_: &Ctx, c: &[Obj]) -> Outcome {
    let (l1, l2) = (ln(&c[0]), ln(&c[1]));
    let (s, sx) = (spread(l1, l2), spread_via_cross(l1, l2));
    ensure!(s == sx, "definition gives {s}, cross form {sx}");
    Outcome::Pass
}

fn t35(_: &Ctx, c: &[Obj]) -> Outcome {
    let (l1, l2) = (ln(&c[0]), ln(&c[1]));
    require!(l1 != l2, "identical lines");
    let s = val!(spread(l1, l2));
    let null = meet(l1, l2).unwrap().is_null();
    ensure!(s.is_zero() == null, "S = {s} but null meet {null}");
    Outcome::Pass
}

fn t36(_: &Ctx, c: &[Obj]) -> Outcome {
    let (a1, a2) = (pt(&c[0]), pt(&c[1]));
    require!(!a1.is_null() && !a2.is_null(), "null point");
    let (q, s) = (quadrance(a1, a2), spread(&a1.dual(), &a2.dual()));
    ensure!(q == s, "q = {q}, S of duals = {s}");
    Outcome::Pass
}

fn t37(_: &Ctx, c: &[Obj]) -> Outcome {
    let (a1, a2) = (pt(&c[0]), pt(&c[1]));
    require!(a1 != a2, "identical points");
    require!(!join(a1, a2).unwrap().is_null(), "null side");
    require!(!a1.is_null() && !a2.is_null(), "nil side");
    let (o1, o2) = opposite_points(a1, a2).unwrap();
    let q = val!(quadrance(a1, a2));
    let r = need!(cross_ratio(a1, &o2, a2, &o1).ok(), "degenerate cross ratio");
    ensure!(q == r, "q = {q}, cross ratio {r}");
    Outcome::Pass
}

fn s38(g: &mut Gen) -> Option<Vec<Obj>> {
    let l = g.line();
    Some(vec![Obj::Point(g.point_on(&l)), Obj::Point(g.point_on(&l)), Obj::Point(g.point_on(&l))])
}

fn s39(g: &mut Gen) -> Option<Vec<Obj>> {
    let a = g.point();
    Some(vec![Obj::Line(g.line_through(&a)), Obj::Line(g.line_through(&a)), Obj::Line(g.line_through(&a))])
}

fn t38(_: &Ctx, c: &[Obj]) -> Outcome {
    let (a1, a2, a3) = (pt(&c[0]), pt(&c[1]), pt(&c[2]));
    require!(a1 != a2 && a1 != a3 && a2 != a3, "points not distinct");
    require!(collinear(a1, a2, a3), "not collinear");
    let (q1, q2, q3) = (val!(quadrance(a2, a3)), val!(quadrance(a1, a3)), val!(quadrance(a1, a2)));
    let r = triple_spread_fn(&q1, &q2, &q3);
    ensure!(r.is_zero(), "residual {r} at q = ({q1}, {q2}, {q3})");
    Outcome::Pass
}

fn t39(_: &Ctx, c: &[Obj]) -> Outcome {
    let (l1, l2, l3) = (ln(&c[0]), ln(&c[1]), ln(&c[2]));
    require!(l1 != l2 && l1 != l3 && l2 != l3, "lines not distinct");
    require!(concurrent(l1, l2, l3), "not concurrent");
    let (s1, s2, s3) = (val!(spread(l2, l3)), val!(spread(l1, l3)), val!(spread(l1, l2)));
    let r = triple_spread_fn(&s1, &s2, &s3);
    ensure!(r.is_zero(), "residual {r} at S = ({s1}, {s2}, {s3})");
    Outcome::Pass
}

/// Roots `c` of `S(a, b, c) = 0`, by the quadratic formula for
/// `c² − 2(a+b−2ab)c + (a−b)²`.
pub(crate) fn third_roots(f: &Field, a: &Scalar, b: &Scalar) -> Vec<Scalar> {
    let h = a + b - 2 * (a * b);
    let disc = h.sq() - (a - b).sq();
    match f.sqrt(&disc) {
        Ok(r) => vec![&h + &r, &h - &r],
        Err(_) => vec![],
    }
}

fn pick(g: &mut Gen, v: Vec<Scalar>) -> Option<Scalar> {
    if v.is_empty() {
        return None;
    }
    use rand::Rng;
    let i = g.rng.gen_range(0..v.len());
    Some(v[i].clone())
}

fn scalars(v: [Scalar; 3]) -> Vec<Obj> {
    v.into_iter().map(Obj::Scalar).collect()
}

fn s40(g: &mut Gen) -> Option<Vec<Obj>> {
    let a = g.scalar();
    let one = g.field.one();
    let b = pick(g, third_roots(g.field, &a, &one))?;
    Some(scalars([a, b, one]))
}

fn t40(_: &Ctx, c: &[Obj]) -> Outcome {
    let (a, b, cc) = (sc(&c[0]), sc(&c[1]), sc(&c[2]));
    require!(triple_spread_fn(a, b, cc).is_zero(), "S(a,b,c) ≠ 0");
    require!(cc.is_one(), "c ≠ 1");
    ensure!((a + b).is_one(), "a + b = {}", a + b);
    Outcome::Pass
}

fn s41(g: &mut Gen) -> Option<Vec<Obj>> {
    let a = g.scalar();
    let c = pick(g, third_roots(g.field, &a, &a))?;
    Some(scalars([a.clone(), a, c]))
}

fn t41(_: &Ctx, c: &[Obj]) -> Outcome {
    let (a, b, cc) = (sc(&c[0]), sc(&c[1]), sc(&c[2]));
    require!(triple_spread_fn(a, b, cc).is_zero(), "S(a,b,c) ≠ 0");
    require!(a == b, "a ≠ b");
    ensure!(cc.is_zero() || *cc == 4 * (a * (1 - a)), "c = {cc}");
    Outcome::Pass
}

fn points3(v: [Point; 3]) -> Vec<Obj> {
    v.into_iter().map(Obj::Point).collect()
}

fn lines3(v: [Point; 3]) -> Vec<Obj> {
    v.into_iter().map(|a| Obj::Line(a.dual())).collect()
}

fn s42(g: &mut Gen) -> Option<Vec<Obj>> {
    g.right_triangle().map(points3)
}

fn s43(g: &mut Gen) -> Option<Vec<Obj>> {
    g.right_triangle().map(lines3)
}

fn tri_of(c: &[Obj]) -> Option<Tri> {
    Tri::of_points(pt(&c[0]), pt(&c[1]), pt(&c[2]))
}

fn tril_of(c: &[Obj]) -> Option<Tri> {
    Tri::of_lines(ln(&c[0]), ln(&c[1]), ln(&c[2]))
}

const COLLINEAR: &str = "collinear or repeated points";
const CONCURRENT: &str = "concurrent or repeated lines";

fn t42(_: &Ctx, c: &[Obj]) -> Outcome {
    let t = need!(tri_of(c), COLLINEAR);
    let right: Vec<usize> = (0..3)
        .filter(|&k| {
            let (i, j) = others(k);
            perpendicular_lines(&t.l[i], &t.l[j])
        })
        .collect();
    require!(!right.is_empty(), "no right vertex");
    let q = need!(t.qs(), super::UNDEFINED);
    for k in right {
        let (i, j) = others(k);
        let rhs = &q[i] + &q[j] - &q[i] * &q[j];
        ensure!(q[k] == rhs, "right at a{}: q = {} but q_i + q_j − q_i q_j = {rhs}", k + 1, q[k]);
    }
    Outcome::Pass
}

fn t43(_: &Ctx, c: &[Obj]) -> Outcome {
    let t = need!(tril_of(c), CONCURRENT);
    let right: Vec<usize> = (0..3)
        .filter(|&k| {
            let (i, j) = others(k);
            perpendicular_points(&t.a[i], &t.a[j])
        })
        .collect();
    require!(!right.is_empty(), "no right side");
    let s = need!(t.ss(), super::UNDEFINED);
    for k in right {
        let (i, j) = others(k);
        let rhs = &s[i] + &s[j] - &s[i] * &s[j];
        ensure!(s[k] == rhs, "right side opposite A{}: S = {} but S_i + S_j − S_i S_j = {rhs}", k + 1, s[k]);
    }
    Outcome::Pass
}

fn t44(_: &Ctx, c: &[Obj]) -> Outcome {
    let ps = [pt(&c[0]), pt(&c[1]), pt(&c[2])];
    require!(ps[0] != ps[1] && ps[0] != ps[2] && ps[1] != ps[2], "points not distinct");
    let mut checked = false;
    for k in 0..3 {
        let (i, j) = others(k);
        let (a1, a2, a3) = (ps[k].coords(), ps[i].coords(), ps[j].coords());
        let (l2, l3) = (hcross(a3, a1), hcross(a1, a2));
        let den = form(&l2) * form(&l3);
        if den.is_zero() {
            continue;
        }
        let s = spread(&join(ps[k], ps[i]).unwrap(), &join(ps[k], ps[j]).unwrap());
        let formula = -(form(a1) * det3(a1, a2, a3).sq()) / den;
        ensure!(s.value() == Some(&formula), "spread at a{} is {s}, formula {formula}", k + 1);
        checked = true;
    }
    require!(checked, "null lines at every vertex");
    Outcome::Pass
}

fn t45(_: &Ctx, c: &[Obj]) -> Outcome {
    let t = need!(tri_of(c), COLLINEAR);
    let (q, s) = (need!(t.qs(), super::UNDEFINED), need!(t.ss(), super::UNDEFINED));
    for k in 0..3 {
        let (i, _) = others(k);
        ensure!(&s[k] * &q[i] == &s[i] * &q[k], "S{}/q{} ≠ S{}/q{}", k + 1, k + 1, i + 1, i + 1);
    }
    Outcome::Pass
}

fn t46(_: &Ctx, c: &[Obj]) -> Outcome {
    let t = need!(tril_of(c), CONCURRENT);
    let (q, s) = (need!(t.qs(), super::UNDEFINED), need!(t.ss(), super::UNDEFINED));
    for k in 0..3 {
        let (i, _) = others(k);
        ensure!(&q[k] * &s[i] == &q[i] * &s[k], "q{}/S{} ≠ q{}/S{}", k + 1, k + 1, i + 1, i + 1);
    }
    Outcome::Pass
}

fn t47(_: &Ctx, c: &[Obj]) -> Outcome {
    let t = need!(tri_of(c), COLLINEAR);
    let a = val!(quadrea(&t.a[0], &t.a[1], &t.a[2]));
    let mut checked = false;
    for k in 0..3 {
        let (i, j) = others(k);
        let (Some(qi), Some(qj), Some(sk)) = (t.q[i].value(), t.q[j].value(), t.s[k].value()) else { continue };
        let v = qi * qj * sk;
        ensure!(v == a, "at a{}: q q S = {v}, quadrea {a}", k + 1);
        checked = true;
    }
    require!(checked, super::UNDEFINED);
    Outcome::Pass
}

fn t48(_: &Ctx, c: &[Obj]) -> Outcome {
    let t = need!(tril_of(c), CONCURRENT);
    let l = val!(quadreal(&t.l[0], &t.l[1], &t.l[2]));
    let mut checked = false;
    for k in 0..3 {
        let (i, j) = others(k);
        let (Some(si), Some(sj), Some(qk)) = (t.s[i].value(), t.s[j].value(), t.q[k].value()) else { continue };
        let v = si * sj * qk;
        ensure!(v == l, "at L{}: S S q = {v}, quadreal {l}", k + 1);
        checked = true;
    }
    require!(checked, super::UNDEFINED);
    Outcome::Pass
}

fn t49(_: &Ctx, c: &[Obj]) -> Outcome {
    let t = need!(tri_of(c), COLLINEAR);
    let a = val!(quadrea(&t.a[0], &t.a[1], &t.a[2]));
    let l = val!(quadreal(&t.l[0], &t.l[1], &t.l[2]));
    let (q, s) = (need!(t.qs(), super::UNDEFINED), need!(t.ss(), super::UNDEFINED));
    let rhs = &q[0] * &q[1] * &q[2] * &s[0] * &s[1] * &s[2];
    ensure!(&a * &l == rhs, "AL = {} but q₁q₂q₃S₁S₂S₃ = {rhs}", &a * &l);
    Outcome::Pass
}

fn t50(_: &Ctx, c: &[Obj]) -> Outcome {
    let t = need!(tri_of(c), COLLINEAR);
    let q = need!(t.qs(), super::UNDEFINED);
    let mut checked = false;
    for k in 0..3 {
        let (i, j) = others(k);
        let Some(sk) = t.s[k].value() else { continue };
        let lhs = (&q[i] * &q[j] * sk - &q[0] - &q[1] - &q[2] + 2).sq();
        let rhs = 4 * ((1 - &q[0]) * (1 - &q[1]) * (1 - &q[2]));
        ensure!(lhs == rhs, "at a{}: {lhs} ≠ {rhs}", k + 1);
        checked = true;
    }
    require!(checked, super::UNDEFINED);
    Outcome::Pass
}

fn t51(_: &Ctx, c: &[Obj]) -> Outcome {
    let t = need!(tril_of(c), CONCURRENT);
    let s = need!(t.ss(), super::UNDEFINED);
    let mut checked = false;
    for k in 0..3 {
        let (i, j) = others(k);
        let Some(qk) = t.q[k].value() else { continue };
        let lhs = (&s[i] * &s[j] * qk - &s[0] - &s[1] - &s[2] + 2).sq();
        let rhs = 4 * ((1 - &s[0]) * (1 - &s[1]) * (1 - &s[2]));
        ensure!(lhs == rhs, "at L{}: {lhs} ≠ {rhs}", k + 1);
        checked = true;
    }
    require!(checked, super::UNDEFINED);
    Outcome::Pass
}

fn t52(_: &Ctx, c: &[Obj]) -> Outcome {
    let (a1, a2, a3) = (pt(&c[0]), pt(&c[1]), pt(&c[2]));
    let a = val!(quadrea(a1, a2, a3));
    let p = val!(triple_product(a1, a2, a3));
    let (p1, p2, p3) = (val!(product(a2, a3)), val!(product(a1, a3)), val!(product(a1, a2)));
    let lhs = &a + &p1 + &p2 + &p3 - 1;
    ensure!(lhs == 2 * &p, "A + p₁ + p₂ + p₃ − 1 = {lhs}, 2P = {}", 2 * &p);
    Outcome::Pass
}

fn t53(_: &Ctx, c: &[Obj]) -> Outcome {
    let (l1, l2, l3) = (ln(&c[0]), ln(&c[1]), ln(&c[2]));
    let l = val!(quadreal(l1, l2, l3));
    let cc = val!(triple_cross(l1, l2, l3));
    let (c1, c2, c3) = (val!(cross(l2, l3)), val!(cross(l1, l3)), val!(cross(l1, l2)));
    let lhs = &l + &c1 + &c2 + &c3 - 1;
    ensure!(lhs == 2 * &cc, "L + C₁ + C₂ + C₃ − 1 = {lhs}, 2C = {}", 2 * &cc);
    Outcome::Pass
}

fn s54(g: &mut Gen) -> Option<Vec<Obj>> {
    let a1 = g.point();
    let a2 = if g.coin() { reflect(&a1, &g.non_null_point()) } else { g.point() };
    Some(vec![Obj::Point(a1), Obj::Point(a2)])
}

fn s55(g: &mut Gen) -> Option<Vec<Obj>> {
    let a1 = g.point();
    let a2 = if g.coin() { reflect(&a1, &g.non_null_point()) } else { g.point() };
    Some(vec![Obj::Line(a1.dual()), Obj::Line(a2.dual())])
}

fn t54(ctx: &Ctx, c: &[Obj]) -> Outcome {
    let (a1, a2) = (pt(&c[0]), pt(&c[1]));
    require!(a1 != a2, "identical points");
    let l = join(a1, a2).unwrap();
    require!(!l.is_null(), "null side");
    let p = val!(product(a1, a2));
    require!(!p.is_zero(), "p = 0");
    let square = ctx.field.is_square(&p);
    let found = midpoints(ctx.field, a1, a2);
    ensure!(square == found.is_ok(), "p = {p} square {square} but construction gives {:?}", found);
    let expected = match found {
        Ok((m1, m2)) => {
            ensure!(is_midpoint(a1, a2, &m1) && is_midpoint(a1, a2, &m2), "{m1} or {m2} is not a midpoint");
            ensure!(m1 != m2 && perpendicular_points(&m1, &m2), "midpoints {m1}, {m2} not perpendicular");
            2
        }
        Err(_) => 0,
    };
    if let Some(all) = ctx.sweep_points() {
        let n = all.iter().filter(|m| is_midpoint(a1, a2, m)).count();
        ensure!(n == expected, "sweep finds {n} midpoints, expected {expected}");
    }
    Outcome::Pass
}

fn is_midline(l1: &Line, l2: &Line, m: &Line) -> bool {
    let Ok(a) = meet(l1, l2) else { return false };
    let (s1, s2) = (spread(l1, m), spread(l2, m));
    m.passes_through(&a) && !s1.is_undefined() && s1 == s2
}

fn t55(ctx: &Ctx, c: &[Obj]) -> Outcome {
    let (l1, l2) = (ln(&c[0]), ln(&c[1]));
    require!(l1 != l2, "identical lines");
    require!(!meet(l1, l2).unwrap().is_null(), "null vertex");
    let cr = val!(cross(l1, l2));
    require!(!cr.is_zero(), "C = 0");
    let square = ctx.field.is_square(&cr);
    let found = midlines(ctx.field, l1, l2);
    ensure!(square == found.is_ok(), "C = {cr} square {square} but construction gives {:?}", found);
    let expected = match found {
        Ok((m1, m2)) => {
            ensure!(is_midline(l1, l2, &m1) && is_midline(l1, l2, &m2), "{m1} or {m2} is not a midline");
            ensure!(m1 != m2 && perpendicular_lines(&m1, &m2), "midlines {m1}, {m2} not perpendicular");
            2
        }
        Err(_) => 0,
    };
    if let Some(all) = ctx.sweep_lines() {
        let n = all.iter().filter(|m| is_midline(l1, l2, m)).count();
        ensure!(n == expected, "sweep finds {n} midlines, expected {expected}");
    }
    Outcome::Pass
}

fn s56(g: &mut Gen) -> Option<Vec<Obj>> {
    let (p1, p2) = (g.scalar(), g.scalar());
    let p3 = if g.coin() {
        pick(g, third_roots(g.field, &p1, &p2))?
    } else {
        1 - pick(g, third_roots(g.field, &(1 - &p1), &(1 - &p2)))?
    };
    Some(scalars([p1, p2, p3]))
}

fn t56(_: &Ctx, c: &[Obj]) -> Outcome {
    let p = [sc(&c[0]), sc(&c[1]), sc(&c[2])];
    let q = p.map(mid_substitution);
    let lhs = triple_spread_fn(&q[0], &q[1], &q[2]).is_zero();
    let rhs = triple_spread_fn(p[0], p[1], p[2]).is_zero() || triple_spread_fn(&(1 - p[0]), &(1 - p[1]), &(1 - p[2])).is_zero();
    ensure!(lhs == rhs, "S(q) = 0 is {lhs} but the alternatives give {rhs}");
    Outcome::Pass
}

fn s57(g: &mut Gen) -> Option<Vec<Obj>> {
    let (p1, p2) = (g.scalar(), g.scalar());
    let p3 = match g.coin() {
        true => &p1 + &p2 - 2 * (&p1 * &p2),
        false => 2 * (&p1 * &p2) - &p1 - &p2 + 1,
    };
    Some(scalars([p1, p2, p3]))
}

/// The first alternative is `p₃ = p₁ + p₂ − 2p₁p₂`, the factor of the
/// underlying identity.
fn t57(_: &Ctx, c: &[Obj]) -> Outcome {
    let p = [sc(&c[0]), sc(&c[1]), sc(&c[2])];
    let q = p.map(mid_substitution);
    let lhs = q[2] == &q[0] + &q[1] - &q[0] * &q[1];
    let prod = p[0] * p[1];
    let rhs = *p[2] == p[0] + p[1] - 2 * &prod || *p[2] == 2 * &prod - p[0] - p[1] + 1;
    ensure!(lhs == rhs, "Pythagoras in q is {lhs} but the alternatives give {rhs}");
    Outcome::Pass
}

fn s58(g: &mut Gen) -> Option<Vec<Obj>> {
    let p = [g.scalar(), g.scalar(), g.scalar()];
    let a = match g.coin() {
        true => 4 * triple_spread_fn(&p[0], &p[1], &p[2]),
        false => 4 * triple_spread_fn(&(1 - &p[0]), &(1 - &p[1]), &(1 - &p[2])),
    };
    let [p1, p2, p3] = p;
    Some(vec![Obj::Scalar(a), Obj::Scalar(p1), Obj::Scalar(p2), Obj::Scalar(p3)])
}

fn t58(_: &Ctx, c: &[Obj]) -> Outcome {
    let a = sc(&c[0]);
    let p = [sc(&c[1]), sc(&c[2]), sc(&c[3])];
    let q = p.map(mid_substitution);
    let cross_law = (a - &q[0] - &q[1] - &q[2] + 2).sq() - 4 * ((1 - &q[0]) * (1 - &q[1]) * (1 - &q[2]));
    let lhs = cross_law.is_zero();
    let rhs = *a == 4 * triple_spread_fn(p[0], p[1], p[2]) || *a == 4 * triple_spread_fn(&(1 - p[0]), &(1 - p[1]), &(1 - p[2]));
    ensure!(lhs == rhs, "C(A, q) = 0 is {lhs} but the alternatives give {rhs}");
    Outcome::Pass
}

fn t59(_: &Ctx, c: &[Obj]) -> Outcome {
    let (a, l) = (pt(&c[0]), ln(&c[1]));
    require!(!a.lies_on(l), "point lies on line");
    require!(!a.is_null() && !l.is_null(), "null couple");
    let q = 1 - val!(quadrance(a, &l.dual()));
    let s = 1 - val!(spread(l, &a.dual()));
    let formula = bilinear(a.coords(), l.coords()).sq() / (a.form() * l.form());
    ensure!(q == s && s == formula, "q(aL) = {q}, S(aL) = {s}, formula {formula}");
    ensure!(couple_metric(a, l).value() == Some(&formula), "couple metric differs from the formula");
    Outcome::Pass
}

fn s60(g: &mut Gen) -> Option<Vec<Obj>> {
    let a = g.scalar();
    let b = mid_substitution(&a);
    let c = pick(g, third_roots(g.field, &a, &b))?;
    Some(scalars([a, b, c]))
}

fn t60(_: &Ctx, c: &[Obj]) -> Outcome {
    let (a, b, cc) = (sc(&c[0]), sc(&c[1]), sc(&c[2]));
    require!(triple_spread_fn(a, b, cc).is_zero(), "S(a,b,c) ≠ 0");
    require!(*b == mid_substitution(a), "b ≠ S₂(a)");
    ensure!(cc == a || *cc == a * (3 - 4 * a).sq(), "c = {cc}");
    Outcome::Pass
}

fn t61(_: &Ctx, c: &[Obj]) -> Outcome {
    let x = sc(&c[0]);
    for n in 1..=20 {
        let r = triple_spread_fn(x, &spread_poly(n - 1, x), &spread_poly(n, x));
        ensure!(r.is_zero(), "n = {n}: residual {r}");
    }
    Outcome::Pass
}
