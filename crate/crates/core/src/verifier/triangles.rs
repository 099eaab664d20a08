//! Theorems 62–79: right triangles, isosceles and equilateral triangles,
//! and the proportion theorems of Menelaus and Ceva.

use super::gen::reflect;
use super::{check, ensure, ln, need, others, par, pt, require, sc, val, Ctx, Gen, Kind, Obj, Outcome, TheoremCheck, Tri};
use crate::constructions::Couple;
use crate::field::Scalar;
use crate::metric::{quadrance, spread};
use crate::projective::{join, meet, point_on_join, Line, Point};
use crate::trig::{
    equilateral_residual, isosceles_derive, mid_substitution, solve_right_triangle, solve_right_trilateral,
    RightTriangleState, RightTrilateralState, TrigError,
};

use Kind::{Line as L, Param as T, Point as P, Scalar as S};

pub(super) fn checks() -> Vec<TheoremCheck> {
    vec![
        check("T62-thales", "Thales", 62, &[P, P, P], t62).sampler(right),
        check("T63-thales-dual", "Thales' dual", 63, &[L, L, L], t63).sampler(right_dual),
        check("T64-right-parallax", "Right parallax", 64, &[P, P, P], t64).sampler(s64),
        check("T65-right-parallax-dual", "Right parallax dual", 65, &[L, L, L], t65).sampler(s65),
        check("T66-napiers-rules", "Napier's rules", 66, &[P, P, P], t66).sampler(right),
        check("T67-napiers-dual-rules", "Napier's dual rules", 67, &[L, L, L], t67).sampler(right_dual),
        check("T68-pons-asinorum", "Pons Asinorum", 68, &[P, P, P], t68).sampler(isosceles),
        check("T69-isosceles-right", "Isosceles right", 69, &[P, P, P], t69).sampler(s69),
        check("T70-isosceles-mid", "Isosceles mid", 70, &[P, P, P], t70).sampler(isosceles),
        check("T71-isosceles-triangle", "Isosceles triangle", 71, &[P, P, P], t71).sampler(isosceles),
        check("T72-isosceles-parallax", "Isosceles parallax", 72, &[P, P, P], t72).sampler(s72),
        check("T73-equilateral", "Equilateral", 73, &[P, P, P], t73).sampler(s73),
        check("T74-equilateral-mid", "Equilateral mid", 74, &[S, S], t74).sampler(s74),
        check("T75-triangle-proportions", "Triangle proportions", 75, &[P, P, P, T], t75),
        check("T76-menelaus", "Menelaus", 76, &[P, P, P, L], t76).sampler(s76),
        check("T77-menelaus-dual", "Menelaus' dual", 77, &[L, L, L, P], t77).sampler(s77),
        check("T78-ceva", "Ceva", 78, &[P, P, P, P], t78),
        check("T79-ceva-dual", "Ceva's dual", 79, &[L, L, L, L], t79),
    ]
}

const COLLINEAR: &str = "collinear or repeated points";
const CONCURRENT: &str = "concurrent or repeated lines";

fn points(v: [Point; 3]) -> Vec<Obj> {
    v.into_iter().map(Obj::Point).collect()
}

/// The dual trilateral, whose quadrances are the triangle's spreads.
fn lines(v: [Point; 3]) -> Vec<Obj> {
    v.into_iter().map(|a| Obj::Line(a.dual())).collect()
}

fn right(g: &mut Gen) -> Option<Vec<Obj>> {
    g.right_triangle().map(points)
}

fn right_dual(g: &mut Gen) -> Option<Vec<Obj>> {
    g.right_triangle().map(lines)
}

fn isosceles(g: &mut Gen) -> Option<Vec<Obj>> {
    g.isosceles().map(points)
}

fn tri(c: &[Obj]) -> Option<Tri> {
    Tri::of_points(pt(&c[0]), pt(&c[1]), pt(&c[2]))
}

fn tril(c: &[Obj]) -> Option<Tri> {
    Tri::of_lines(ln(&c[0]), ln(&c[1]), ln(&c[2]))
}

fn all(t: &Tri) -> Option<([Scalar; 3], [Scalar; 3])> {
    Some((t.qs()?, t.ss()?))
}

fn t62(_: &Ctx, c: &[Obj]) -> Outcome {
    let t = need!(tri(c), COLLINEAR);
    let (q, s) = need!(all(&t), "null or nil triangle");
    let mut checked = false;
    for k in (0..3).filter(|&k| s[k].is_one()) {
        let (i, j) = others(k);
        ensure!(&s[i] * &q[k] == q[i] && &s[j] * &q[k] == q[j], "right at a{}: S = {s:?}, q = {q:?}", k + 1);
        checked = true;
    }
    require!(checked, "no right spread");
    Outcome::Pass
}

fn t63(_: &Ctx, c: &[Obj]) -> Outcome {
    let t = need!(tril(c), CONCURRENT);
    let (q, s) = need!(all(&t), "null or nil trilateral");
    let mut checked = false;
    for k in (0..3).filter(|&k| q[k].is_one()) {
        let (i, j) = others(k);
        ensure!(&q[i] * &s[k] == s[i] && &q[j] * &s[k] == s[j], "right at A{}: q = {q:?}, S = {s:?}", k + 1);
        checked = true;
    }
    require!(checked, "no right quadrance");
    Outcome::Pass
}

/// `a₁` null and the triangle right at `a₃`.
fn parallax_triangle(g: &mut Gen) -> Option<[Point; 3]> {
    let a1 = g.null_point();
    let a3 = g.point();
    let l2 = join(&a1, &a3).ok()?;
    let l1 = join(&a3, &l2.dual()).ok()?;
    Some([a1, g.point_on(&l1), a3])
}

fn s64(g: &mut Gen) -> Option<Vec<Obj>> {
    parallax_triangle(g).map(points)
}

fn s65(g: &mut Gen) -> Option<Vec<Obj>> {
    parallax_triangle(g).map(lines)
}

/// Role assignments `(n, m, r)` with values `x[n] = 0`, `x[m] ≠ 0` and
/// `x[r] = 1`.
fn parallax_roles(x: &[Option<&Scalar>; 3]) -> Vec<(usize, usize, usize)> {
    let mut v = vec![];
    for n in 0..3 {
        for r in 0..3 {
            if n == r {
                continue;
            }
            let m = 3 - n - r;
            if let (Some(xn), Some(xm), Some(xr)) = (x[n], x[m], x[r]) {
                if xn.is_zero() && !xm.is_zero() && xr.is_one() {
                    v.push((n, m, r));
                }
            }
        }
    }
    v
}

fn t64(_: &Ctx, c: &[Obj]) -> Outcome {
    let t = need!(tri(c), COLLINEAR);
    let s = [t.s[0].value(), t.s[1].value(), t.s[2].value()];
    let roles = parallax_roles(&s);
    require!(!roles.is_empty(), "spreads are not 0, S, 1");
    for (n, m, r) in roles {
        let sm = s[m].unwrap();
        ensure!(t.q[m].is_undefined() && t.q[r].is_undefined(), "more than one quadrance is defined");
        let qn = need!(t.q[n].value(), super::UNDEFINED);
        ensure!(qn * sm == sm - 1, "q{} = {qn} but S = {sm}", n + 1);
    }
    Outcome::Pass
}

fn t65(_: &Ctx, c: &[Obj]) -> Outcome {
    let t = need!(tril(c), CONCURRENT);
    let q = [t.q[0].value(), t.q[1].value(), t.q[2].value()];
    let roles = parallax_roles(&q);
    require!(!roles.is_empty(), "quadrances are not 0, q, 1");
    for (n, m, r) in roles {
        let qm = q[m].unwrap();
        ensure!(t.s[m].is_undefined() && t.s[r].is_undefined(), "more than one spread is defined");
        let sn = need!(t.s[n].value(), super::UNDEFINED);
        ensure!(sn * qm == qm - 1, "S{} = {sn} but q = {qm}", n + 1);
    }
    Outcome::Pass
}

/// Every pair drawn from five slots.
fn pairs() -> impl Iterator<Item = [bool; 5]> {
    (0..5).flat_map(|i| {
        (i + 1..5).map(move |j| {
            let mut m = [false; 5];
            m[i] = true;
            m[j] = true;
            m
        })
    })
}

fn keep(x: &Scalar, on: bool) -> Option<Scalar> {
    on.then(|| x.clone())
}

/// Errors allowed when the two given quantities do not determine the rest.
fn degenerate(e: &TrigError) -> bool {
    matches!(e, TrigError::DegenerateDenominator | TrigError::ZeroSpread)
}

fn t66(_: &Ctx, c: &[Obj]) -> Outcome {
    let t = need!(tri(c), COLLINEAR);
    let (q, s) = need!(all(&t), "null or nil triangle");
    let mut checked = false;
    for k in (0..3).filter(|&k| s[k].is_one()) {
        let (i, j) = others(k);
        let full = [&s[i], &s[j], &q[i], &q[j], &q[k]];
        for m in pairs() {
            let st = RightTriangleState {
                s1: keep(full[0], m[0]),
                s2: keep(full[1], m[1]),
                q1: keep(full[2], m[2]),
                q2: keep(full[3], m[3]),
                q3: keep(full[4], m[4]),
            };
            match solve_right_triangle(&st) {
                Ok(r) => {
                    let got = [&r.s1, &r.s2, &r.q1, &r.q2, &r.q3];
                    ensure!(got == full, "right at a{}: from {m:?} solved {got:?}, actual {full:?}", k + 1);
                }
                Err(e) => ensure!(degenerate(&e), "right at a{}: from {m:?}: {e}", k + 1),
            }
        }
        checked = true;
    }
    require!(checked, "no right spread");
    Outcome::Pass
}

fn t67(_: &Ctx, c: &[Obj]) -> Outcome {
    let t = need!(tril(c), CONCURRENT);
    let (q, s) = need!(all(&t), "null or nil trilateral");
    let mut checked = false;
    for k in (0..3).filter(|&k| q[k].is_one()) {
        let (i, j) = others(k);
        let full = [&q[i], &q[j], &s[i], &s[j], &s[k]];
        for m in pairs() {
            let st = RightTrilateralState {
                q1: keep(full[0], m[0]),
                q2: keep(full[1], m[1]),
                s1: keep(full[2], m[2]),
                s2: keep(full[3], m[3]),
                s3: keep(full[4], m[4]),
            };
            match solve_right_trilateral(&st) {
                Ok(r) => {
                    let got = [&r.q1, &r.q2, &r.s1, &r.s2, &r.s3];
                    ensure!(got == full, "right at A{}: from {m:?} solved {got:?}, actual {full:?}", k + 1);
                }
                Err(e) => ensure!(degenerate(&e), "right at A{}: from {m:?}: {e}", k + 1),
            }
        }
        checked = true;
    }
    require!(checked, "no right quadrance");
    Outcome::Pass
}

fn t68(_: &Ctx, c: &[Obj]) -> Outcome {
    let t = need!(tri(c), COLLINEAR);
    let (q, s) = need!(all(&t), "null or nil triangle");
    for k in 0..3 {
        let (i, j) = others(k);
        ensure!((q[i] == q[j]) == (s[i] == s[j]), "q{0} = q{1} is {2} but S{0} = S{1} is {3}", i + 1, j + 1, q[i] == q[j], s[i] == s[j]);
    }
    Outcome::Pass
}

/// `a₁`, `a₂` on a line `L` and `a₃ = L^⊥`.
fn s69(g: &mut Gen) -> Option<Vec<Obj>> {
    let l = g.line();
    let (a1, a2) = (g.point_on(&l), g.point_on(&l));
    Some(points([a1, a2, l.dual()]))
}

fn t69(_: &Ctx, c: &[Obj]) -> Outcome {
    let t = need!(tri(c), COLLINEAR);
    let q = need!(t.qs(), "nil triangle");
    let mut checked = false;
    for k in 0..3 {
        let (i, j) = others(k);
        let (Some(si), Some(sj)) = (t.s[i].value(), t.s[j].value()) else { continue };
        if !(si.is_one() && sj.is_one()) || q[k].is_zero() {
            continue;
        }
        ensure!(q[i].is_one() && q[j].is_one(), "q{} = {}, q{} = {}", i + 1, q[i], j + 1, q[j]);
        let sk = val!(t.s[k].clone());
        ensure!(sk == q[k], "S{0} = {sk} but q{0} = {1}", k + 1, q[k]);
        checked = true;
    }
    require!(checked, "no two right spreads");
    Outcome::Pass
}

/// Each apex `k` whose two adjacent quadrances and spreads agree, with the
/// base point of the couple from the apex to the opposite side.
fn isosceles_apexes(t: &Tri) -> Vec<(usize, Scalar, Scalar, Option<Point>)> {
    let mut v = vec![];
    let (Some(q), Some(s)) = (t.qs(), t.ss()) else { return v };
    for k in 0..3 {
        let (i, j) = others(k);
        if q[i] == q[j] && s[i] == s[j] {
            let b = Couple::new(t.a[k].clone(), t.l[k].clone()).ok().and_then(|c| c.base_point().ok());
            v.push((k, q[i].clone(), s[i].clone(), b));
        }
    }
    v
}

fn t70(_: &Ctx, c: &[Obj]) -> Outcome {
    let t = need!(tri(c), COLLINEAR);
    let apexes = isosceles_apexes(&t);
    require!(!apexes.is_empty(), "not isosceles with defined metrics");
    let mut checked = false;
    for (k, q, s, b) in apexes {
        let Some(b) = b else { continue };
        let (i, j) = others(k);
        let (Some(ri), Some(rj), Some(rk)) = (
            quadrance(&t.a[i], &b).into_value(),
            quadrance(&t.a[j], &b).into_value(),
            quadrance(&t.a[k], &b).into_value(),
        ) else {
            continue;
        };
        let sq = &s * &q;
        ensure!(rk == sq, "apex a{}: r = {rk} but Sq = {sq}", k + 1);
        ensure!(!sq.is_one(), "apex a{}: Sq = 1", k + 1);
        let rhs = &q * (1 - &s);
        ensure!(&ri * (1 - &sq) == rhs && &rj * (1 - &sq) == rhs, "apex a{}: legs {ri}, {rj}", k + 1);
        checked = true;
    }
    require!(checked, "dual couple or undefined leg");
    Outcome::Pass
}

fn t71(ctx: &Ctx, c: &[Obj]) -> Outcome {
    let t = need!(tri(c), COLLINEAR);
    let apexes = isosceles_apexes(&t);
    require!(!apexes.is_empty(), "not isosceles with defined metrics");
    let (qs, ss) = need!(all(&t), super::UNDEFINED);
    let mut checked = false;
    for (k, q, s, b) in apexes {
        if b.is_none() {
            continue;
        }
        let (qk, sk) = match isosceles_derive(&q, &s) {
            Ok(v) => v,
            Err(e) => return Outcome::Fail(format!("apex a{}: {e}", k + 1)),
        };
        ensure!(qk == qs[k] && sk == ss[k], "apex a{}: derived ({qk}, {sk}), actual ({}, {})", k + 1, qs[k], ss[k]);
        ensure!(ctx.field.is_square(&(1 - &qs[k])), "1 − q{} is not a square", k + 1);
        checked = true;
    }
    require!(checked, "dual couple");
    Outcome::Pass
}

/// `a₁` null, and `a₃` the reflection of `a₂` in a mirror through `a₁`.
fn s72(g: &mut Gen) -> Option<Vec<Obj>> {
    let a1 = g.null_point();
    let c = g.point_on(&a1.dual());
    if c.is_null() {
        return None;
    }
    let a2 = g.point();
    let a3 = reflect(&a2, &c);
    Some(points([a1, a2, a3]))
}

fn t72(_: &Ctx, c: &[Obj]) -> Outcome {
    let t = need!(tri(c), COLLINEAR);
    require!(!t.has_null_line(), "null triangle");
    let mut checked = false;
    for n in (0..3).filter(|&n| t.a[n].is_null()) {
        let (i, j) = others(n);
        let (si, sj) = (val!(t.s[i].clone()), val!(t.s[j].clone()));
        let Some(q) = t.q[n].value() else { continue };
        if si != sj {
            continue;
        }
        ensure!(q * si.sq() == 4 * (&si - 1), "null a{}: q = {q}, S = {si}", n + 1);
        checked = true;
    }
    require!(checked, "no null apex with equal spreads");
    Outcome::Pass
}

fn s73(g: &mut Gen) -> Option<Vec<Obj>> {
    g.equilateral().map(points)
}

fn t73(_: &Ctx, c: &[Obj]) -> Outcome {
    let t = need!(tri(c), COLLINEAR);
    let (q, s) = need!(all(&t), "null or nil triangle");
    require!(q[0] == q[1] && q[1] == q[2] && s[0] == s[1] && s[1] == s[2], "not equilateral");
    let r = equilateral_residual(&q[0], &s[0]);
    ensure!(r.is_zero(), "residual {r} at q = {}, S = {}", q[0], s[0]);
    Outcome::Pass
}

fn s74(g: &mut Gen) -> Option<Vec<Obj>> {
    let p = g.scalar();
    use rand::Rng;
    let r = match g.rng.gen_range(0..5) {
        0 => (4 * &p).inv()?,
        1 => 1 - (4 * &p).inv()?,
        2 => (4 * (1 - &p)).inv()?,
        3 => 1 - (4 * (1 - &p)).inv()?,
        _ => g.scalar(),
    };
    Some(vec![Obj::Scalar(r), Obj::Scalar(p)])
}

fn t74(_: &Ctx, c: &[Obj]) -> Outcome {
    let (r, p) = (sc(&c[0]), sc(&c[1]));
    let (s, q) = (mid_substitution(r), mid_substitution(p));
    let lhs = equilateral_residual(&q, &s).is_zero();
    let rhs = [4 * (r * p), 4 * (r * (1 - p)), 4 * (p * (1 - r)), 4 * ((1 - r) * (1 - p))].iter().any(|x| x.is_one());
    ensure!(lhs == rhs, "relation holds is {lhs} but the alternatives give {rhs}");
    Outcome::Pass
}

/// Each point may serve as the apex `a₃`; `d` is the point `t:u` of the
/// opposite side.
fn t75(_: &Ctx, c: &[Obj]) -> Outcome {
    let t = need!(tri(c), COLLINEAR);
    let mut checked = false;
    for k in 0..3 {
        let (i, j) = others(k);
        let (a1, a2, a3) = (&t.a[i], &t.a[j], &t.a[k]);
        let Ok(d) = point_on_join(a1.coords(), a2.coords(), par(&c[3])) else { continue };
        if d.is_null() || &d == a1 || &d == a2 {
            continue;
        }
        let (Some(s1), Some(s2), Some(q1), Some(q2)) = (t.s[i].value(), t.s[j].value(), t.q[i].value(), t.q[j].value())
        else {
            continue;
        };
        let (Ok(l1), Ok(l2), Ok(ld)) = (join(a3, a1), join(a3, a2), join(a3, &d)) else { continue };
        let (Some(r1), Some(r2), Some(big1), Some(big2)) = (
            quadrance(a1, &d).into_value(),
            quadrance(a2, &d).into_value(),
            spread(&l1, &ld).into_value(),
            spread(&l2, &ld).into_value(),
        ) else {
            continue;
        };
        ensure!(&big1 * s2 * &r2 == &big2 * s1 * &r1, "apex a{}: R₁S₂r₂ ≠ R₂S₁r₁", k + 1);
        ensure!(&big1 * q2 * &r2 == &big2 * q1 * &r1, "apex a{}: R₁q₂r₂ ≠ R₂q₁r₁", k + 1);
        checked = true;
    }
    require!(checked, super::UNDEFINED);
    Outcome::Pass
}

/// The products `r₁r₂r₃` and `t₁t₂t₃` for points `d₁, d₂, d₃` on the
/// sides opposite `a₁, a₂, a₃`.
fn ratio_products(a: &[Point; 3], d: &[Point; 3]) -> Option<(Scalar, Scalar)> {
    let q = |x: &Point, y: &Point| quadrance(x, y).into_value();
    let r = q(&a[1], &d[0])? * q(&a[2], &d[1])? * q(&a[0], &d[2])?;
    let t = q(&d[0], &a[2])? * q(&d[1], &a[0])? * q(&d[2], &a[1])?;
    Some((r, t))
}

/// The dual products, for lines `D₁, D₂, D₃` through the points opposite
/// `A₁, A₂, A₃`.
fn spread_products(a: &[Line; 3], d: &[Line; 3]) -> Option<(Scalar, Scalar)> {
    let s = |x: &Line, y: &Line| spread(x, y).into_value();
    let r = s(&a[1], &d[0])? * s(&a[2], &d[1])? * s(&a[0], &d[2])?;
    let t = s(&d[0], &a[2])? * s(&d[1], &a[0])? * s(&d[2], &a[1])?;
    Some((r, t))
}

fn s76(g: &mut Gen) -> Option<Vec<Obj>> {
    let mut v = g.draw(&[P, P, P, L]);
    if g.coin() {
        // A transversal through a point of one side.
        let a = g.point_on(&join(pt(&v[0]), pt(&v[1])).ok()?);
        v[3] = Obj::Line(g.line_through(&a));
    }
    Some(v)
}

fn t76(_: &Ctx, c: &[Obj]) -> Outcome {
    let t = need!(tri(c), COLLINEAR);
    let l = ln(&c[3]);
    require!(!t.has_null_line() && !l.is_null(), "null line");
    let mut d = vec![];
    for side in &t.l {
        d.push(need!(meet(side, l).ok(), "transversal is a side"));
    }
    let d: [Point; 3] = d.try_into().unwrap();
    require!(d.iter().all(|x| !x.is_null()), "null meet");
    let (r, tt) = need!(ratio_products(&t.a, &d), super::UNDEFINED);
    ensure!(r == tt, "r₁r₂r₃ = {r}, t₁t₂t₃ = {tt}");
    Outcome::Pass
}

fn s77(g: &mut Gen) -> Option<Vec<Obj>> {
    let mut v = g.draw(&[L, L, L, P]);
    if g.coin() {
        let l = g.line_through(&meet(ln(&v[0]), ln(&v[1])).ok()?);
        v[3] = Obj::Point(g.point_on(&l));
    }
    Some(v)
}

fn t77(_: &Ctx, c: &[Obj]) -> Outcome {
    let big = [ln(&c[0]).clone(), ln(&c[1]).clone(), ln(&c[2]).clone()];
    let t = need!(Tri::of_lines(&big[0], &big[1], &big[2]), CONCURRENT);
    let a = pt(&c[3]);
    require!(!t.has_null_point() && !a.is_null(), "null point");
    let mut d = vec![];
    for p in &t.a {
        d.push(need!(join(p, a).ok(), "point is a vertex"));
    }
    let d: [Line; 3] = d.try_into().unwrap();
    require!(d.iter().all(|x| !x.is_null()), "null join");
    let (r, tt) = need!(spread_products(&big, &d), super::UNDEFINED);
    ensure!(r == tt, "R₁R₂R₃ = {r}, T₁T₂T₃ = {tt}");
    Outcome::Pass
}

/// Each of the four points may serve as `a₀`.
fn t78(_: &Ctx, c: &[Obj]) -> Outcome {
    let ps: Vec<&Point> = c.iter().map(pt).collect();
    let mut checked = false;
    'outer: for o in 0..4 {
        let rest: Vec<&Point> = (0..4).filter(|&x| x != o).map(|x| ps[x]).collect();
        let a0 = ps[o];
        let Some(t) = Tri::of_points(rest[0], rest[1], rest[2]) else { continue };
        if t.has_null_point() || a0.is_null() || t.a.contains(a0) {
            continue;
        }
        let mut d = vec![];
        for k in 0..3 {
            let cevian = join(a0, &t.a[k]).unwrap();
            if cevian.is_null() {
                continue 'outer;
            }
            let Ok(dk) = meet(&cevian, &t.l[k]) else { continue 'outer };
            d.push(dk);
        }
        let d: [Point; 3] = d.try_into().unwrap();
        let Some((r, tt)) = ratio_products(&t.a, &d) else { continue };
        ensure!(r == tt, "a₀ = {a0}: r₁r₂r₃ = {r}, t₁t₂t₃ = {tt}");
        checked = true;
    }
    require!(checked, "no admissible choice of a₀");
    Outcome::Pass
}

fn t79(_: &Ctx, c: &[Obj]) -> Outcome {
    let ls: Vec<&Line> = c.iter().map(ln).collect();
    let mut checked = false;
    'outer: for o in 0..4 {
        let rest: Vec<&Line> = (0..4).filter(|&x| x != o).map(|x| ls[x]).collect();
        let a0 = ls[o];
        let Some(t) = Tri::of_lines(rest[0], rest[1], rest[2]) else { continue };
        let big = [rest[0].clone(), rest[1].clone(), rest[2].clone()];
        if t.has_null_line() || a0.is_null() || big.contains(a0) {
            continue;
        }
        let mut d = vec![];
        for k in 0..3 {
            let foot = meet(a0, &big[k]).unwrap();
            if foot.is_null() {
                continue 'outer;
            }
            let Ok(dk) = join(&foot, &t.a[k]) else { continue 'outer };
            d.push(dk);
        }
        let d: [Line; 3] = d.try_into().unwrap();
        let Some((r, tt)) = spread_products(&big, &d) else { continue };
        ensure!(r == tt, "A₀ = {a0}: R₁R₂R₃ = {r}, T₁T₂T₃ = {tt}");
        checked = true;
    }
    require!(checked, "no admissible choice of A₀");
    Outcome::Pass
}
