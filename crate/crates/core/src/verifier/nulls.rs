//! Theorems 80–92: triangles with null points or null lines, thinness,
//! null perspective and four null points.

use super::{check, ensure, ln, need, others, par, pt, require, val, Ctx, Kind, Obj, Outcome, TheoremCheck};
use crate::constructions::Couple;
use crate::field::Scalar;
use crate::metric::{couple_metric, quadrance, quadrea, quadreal, spread};
use crate::nullkernel::{null_point, point_on_null_line, NullParam};
use crate::projective::{collinear, concurrent, det3, join, meet, point_on_join, Line, Point, Vec3};

use Kind::{Line as L, Null as N, Param as T, Point as P};

pub(super) fn checks() -> Vec<TheoremCheck> {
    vec![
        check("T80-nil-cross-law", "Nil cross law", 80, &[N, P, P], t80),
        check("T81-doubly-nil-triangle", "Doubly nil triangle", 81, &[N, N, P], t81),
        check("T82-triply-nil-quadreal", "Triply nil quadreal", 82, &[N, N, N], t82),
        check("T83-triply-nil-balance", "Triply nil balance", 83, &[N, N, N, T], t83),
        check("T84-triply-nil-orthocenter", "Triply nil orthocenter", 84, &[N, N, N], t84).guard(&[2, 3, 5]),
        check("T85-triply-nil-cevian-thinness", "Triply nil Cevian thinness", 85, &[N, N, N, P], t85),
        check("T86-triply-nil-altitude-thinness", "Triply nil altitude thinness", 86, &[N, N, N, P], t86),
        check("T87-singly-null-singly-nil-thales", "Singly null singly nil Thales", 87, &[N, T, P], t87),
        check("T88-singly-null-singly-nil-orthocenter", "Singly null singly nil orthocenter", 88, &[N, N, T, T], t88)
            .labelled(),
        check("T89-null-perspective", "Null perspective", 89, &[N, N, N, T, T, T], t89).labelled(),
        check("T90-null-subtended-quadrance", "Null subtended quadrance", 90, &[N, N, N, L], t90),
        check("T91-fully-nil-quadrangle-diagonal", "Fully nil quadrangle diagonal", 91, &[N, N, N, N], t91),
        check("T92-48-64", "48/64 theorem", 92, &[N, N, N, N], t92),
    ]
}

fn nulls(c: &[Obj], n: usize) -> Option<Vec<(NullParam, Point)>> {
    let v: Vec<(NullParam, Point)> = c[..n].iter().map(|o| (par(o).clone(), null_point(par(o)))).collect();
    for i in 0..n {
        for j in i + 1..n {
            if v[i].0 == v[j].0 {
                return None;
            }
        }
    }
    Some(v)
}

const REPEATED: &str = "repeated null points";

fn base(a: &Point, l: &Line) -> Option<Point> {
    Couple::new(a.clone(), l.clone()).ok()?.base_point().ok()
}

fn t80(ctx: &Ctx, c: &[Obj]) -> Outcome {
    let a3 = null_point(par(&c[0]));
    let (a1, a2) = (pt(&c[1]), pt(&c[2]));
    require!(!a1.is_null() && !a2.is_null(), "not singly nil");
    require!(!collinear(a1, a2, &a3), "collinear or repeated points");
    let (l12, l13, l23) = (join(a1, a2).unwrap(), join(a1, &a3).unwrap(), join(a2, &a3).unwrap());
    let s1 = val!(spread(&l12, &l13));
    let s2 = val!(spread(&l12, &l23));
    let s3 = val!(spread(&l13, &l23));
    let q3 = val!(quadrance(a1, a2));
    ensure!(s3.is_zero(), "S₃ = {s3}");
    let p = &s1 * &s2;
    let r = p.sq() * q3.sq() - 2 * (&q3 * &p * (&s1 + &s2 - 2)) + (&s2 - &s1).sq();
    ensure!(r.is_zero(), "residual {r} at q₃ = {q3}, S₁ = {s1}, S₂ = {s2}");
    ensure!(ctx.field.is_square(&((1 - &s1) * (1 - &s2))), "(1 − S₁)(1 − S₂) is not a square");
    Outcome::Pass
}

fn t81(_: &Ctx, c: &[Obj]) -> Outcome {
    let v = need!(nulls(c, 2), REPEATED);
    let (a1, a2, a3) = (&v[0].1, &v[1].1, pt(&c[2]));
    require!(!a3.is_null(), "not doubly nil");
    require!(!collinear(a1, a2, a3), "a₃ lies on a₁a₂");
    let l3 = join(a1, a2).unwrap();
    let h = val!(couple_metric(a3, &l3));
    let s3 = val!(spread(&join(a3, a1).unwrap(), &join(a3, a2).unwrap()));
    ensure!(&s3 * (1 - &h).sq() == -4 * &h, "S₃ = {s3}, h = {h}");
    Outcome::Pass
}

fn t82(ctx: &Ctx, c: &[Obj]) -> Outcome {
    let v = need!(nulls(c, 3), REPEATED);
    let (a1, a2, a3) = (&v[0].1, &v[1].1, &v[2].1);
    let l = val!(quadreal(&join(a2, a3).unwrap(), &join(a1, a3).unwrap(), &join(a1, a2).unwrap()));
    ensure!(l == ctx.field.int(-4), "quadreal {l}");
    Outcome::Pass
}

/// Each null point may serve as `α₃`; `d` is the point `r:s` of the
/// other two's join.
fn t83(_: &Ctx, c: &[Obj]) -> Outcome {
    let v = need!(nulls(c, 3), REPEATED);
    let mut checked = false;
    for k in 0..3 {
        let (i, j) = others(k);
        let (al1, al2, al3) = (&v[i].1, &v[j].1, &v[k].1);
        let d = point_on_join(al1.coords(), al2.coords(), par(&c[3])).unwrap();
        if &d == al1 || &d == al2 {
            continue;
        }
        let (Some(b1), Some(b2)) = (base(&d, &join(al1, al3).unwrap()), base(&d, &join(al2, al3).unwrap())) else {
            continue;
        };
        let (q1, q2) = (val!(quadrance(&d, &b1)), val!(quadrance(&d, &b2)));
        ensure!((&q1 * &q2).is_one(), "q(d,b₁) = {q1}, q(d,b₂) = {q2}");
        let s = val!(spread(&join(&d, &b1).unwrap(), &join(&d, &b2).unwrap()));
        ensure!(s.is_one(), "S(db₁, db₂) = {s}");
        checked = true;
    }
    require!(checked, "dual couple or d at a null point");
    Outcome::Pass
}

fn t84(ctx: &Ctx, c: &[Obj]) -> Outcome {
    let v = need!(nulls(c, 3), REPEATED);
    let a = [v[0].1.clone(), v[1].1.clone(), v[2].1.clone()];
    let l = [join(&a[1], &a[2]).unwrap(), join(&a[0], &a[2]).unwrap(), join(&a[0], &a[1]).unwrap()];
    ensure!(l.iter().all(|x| !x.is_null()), "a side is null");
    let mut alt = vec![];
    let mut b = vec![];
    for k in 0..3 {
        let couple = Couple::new(a[k].clone(), l[k].clone()).unwrap();
        alt.push(need!(couple.altitude_line().ok(), "dual couple"));
        b.push(couple.base_point().unwrap());
    }
    ensure!(concurrent(&alt[0], &alt[1], &alt[2]), "altitudes are not concurrent");
    let o = meet(&alt[0], &alt[1]).unwrap();
    let (b1, b2, b3) = (&b[0], &b[1], &b[2]);
    ensure!(!collinear(b1, b2, b3), "bases are collinear");
    let m = [join(b2, b3).unwrap(), join(b1, b3).unwrap(), join(b1, b2).unwrap()];
    for k in 0..3 {
        let (i, j) = others(k);
        let q = val!(quadrance(&b[i], &b[j]));
        ensure!(q == ratio(ctx, -5, 4), "q(b{}, b{}) = {q}", i + 1, j + 1);
        let s = val!(spread(&m[i], &m[j]));
        ensure!(s == ratio(ctx, 16, 25), "spread at b{} is {s}", k + 1);
        let h = need!(join(&b[k], &m[k].dual()).ok(), "dual couple");
        ensure!(o.lies_on(&h), "altitude from b{} misses o", k + 1);
        let qo = val!(quadrance(&o, &b[k]));
        ensure!(qo == ratio(ctx, -1, 3), "q(o, b{}) = {qo}", k + 1);
    }
    Outcome::Pass
}

/// Only called where the guard keeps the denominators invertible.
fn ratio(ctx: &Ctx, n: i64, d: i64) -> Scalar {
    ctx.field.ratio(n, d).expect("guarded characteristic")
}

fn t85(_: &Ctx, c: &[Obj]) -> Outcome {
    let v = need!(nulls(c, 3), REPEATED);
    let a = pt(&c[3]);
    require!(v.iter().all(|x| &x.1 != a), "a is a null point of the triangle");
    let mut cev = vec![];
    for k in 0..3 {
        let (i, j) = others(k);
        let side = join(&v[i].1, &v[j].1).unwrap();
        cev.push(meet(&join(a, &v[k].1).unwrap(), &side).unwrap());
    }
    let area = val!(quadrea(&cev[0], &cev[1], &cev[2]));
    ensure!(area.is_one(), "quadrea of cevian points {area}");
    Outcome::Pass
}

/// The base point `b₃` written out in the parameters of the two null
/// points on the side and the coordinates of `a`.
fn base_formula(a: &Vec3, p1: &NullParam, p2: &NullParam) -> Vec3 {
    let [x, y, z] = a;
    let (t1, u1, t2, u2) = (p1.t(), p1.u(), p2.t(), p2.u());
    let m = t1 * u2 + t2 * u1;
    let dm = t1 * t2 - u1 * u2;
    let pm = t1 * t2 + u1 * u2;
    [
        x * (t1.sq() - u1.sq()) * (t2.sq() - u2.sq()) + y * &m * &dm - z * (t1.sq() * t2.sq() - u1.sq() * u2.sq()),
        x * &m * &dm + 4 * (y * t1 * t2 * u1 * u2) - z * &pm * &m,
        x * (t1.sq() * t2.sq() - u1.sq() * u2.sq()) + y * &pm * &m - z * (t1.sq() + u1.sq()) * (t2.sq() + u2.sq()),
    ]
}

/// `x(t²−u²) + 2tuy − z(t²+u²)`, the bilinear form of `a` with `α(t:u)`
/// before normalization.
fn against(a: &Vec3, p: &NullParam) -> Scalar {
    let [x, y, z] = a;
    let (t, u) = (p.t(), p.u());
    x * (t.sq() - u.sq()) + 2 * (t * u * y) - z * (t.sq() + u.sq())
}

/// Also checks the determinant of the three written-out bases, which
/// factors as the brackets times `Π B(a, α(tᵢ:uᵢ))`.
fn t86(_: &Ctx, c: &[Obj]) -> Outcome {
    let v = need!(nulls(c, 3), REPEATED);
    let a = pt(&c[3]);
    let mut b = vec![];
    for k in 0..3 {
        let (i, j) = others(k);
        let side = join(&v[i].1, &v[j].1).unwrap();
        require!(a.dual() != side, "a is the dual of a side");
        let bk = need!(base(a, &side), "a lies on a side");
        let (lo, hi) = (i.min(j), i.max(j));
        let formula = base_formula(a.coords(), &v[lo].0, &v[hi].0);
        ensure!(Point::from_vec(formula).ok().as_ref() == Some(&bk), "written-out base b{} differs from {bk}", k + 1);
        b.push(bk);
    }
    let (p1, p2, p3) = (&v[0].0, &v[1].0, &v[2].0);
    let x = a.coords();
    let det = det3(&base_formula(x, p2, p3), &base_formula(x, p1, p3), &base_formula(x, p1, p2));
    let br = |p: &NullParam, q: &NullParam| p.t() * q.u() - q.t() * p.u();
    let rhs = br(p1, p2) * br(p1, p3) * br(p2, p3) * against(x, p1) * against(x, p2) * against(x, p3);
    ensure!(det == rhs, "determinant {det}, factored form {rhs}");
    let area = val!(quadrea(&b[0], &b[1], &b[2]));
    ensure!(area.is_one(), "quadrea of bases {area}");
    Outcome::Pass
}

/// `a₃ = α(t:u)`, `a₂` the point `r:s` of the null line at `a₃`, and `a₁`
/// arbitrary.
fn t87(_: &Ctx, c: &[Obj]) -> Outcome {
    let tu = par(&c[0]);
    let a3 = null_point(tu);
    let a2 = point_on_null_line(tu, par(&c[1]));
    let a1 = pt(&c[2]);
    require!(a2 != a3, "a₂ = a₃");
    require!(!collinear(a1, &a2, &a3), "collinear points");
    require!(!a1.is_null() && !a2.is_null(), "more than one null point");
    let (l12, l13) = (join(a1, &a2).unwrap(), join(a1, &a3).unwrap());
    require!(!l12.is_null() && !l13.is_null(), "more than one null line");
    let q3 = val!(quadrance(a1, &a2));
    let s1 = val!(spread(&l12, &l13));
    ensure!((&q3 * &s1).is_one(), "q₃ = {q3}, S₁ = {s1}");
    Outcome::Pass
}

/// `a₃` is the first null point; `a₁`, `a₂` are the points `r:s` of the
/// null line at the second.
fn t88(_: &Ctx, c: &[Obj]) -> Outcome {
    let v = need!(nulls(c, 2), REPEATED);
    let a3 = &v[0].1;
    let (a1, a2) = (point_on_null_line(&v[1].0, par(&c[2])), point_on_null_line(&v[1].0, par(&c[3])));
    require!(a1 != a2, "a₁ = a₂");
    let ((b1, b2), (l1, l2, l3)) = need!(complementary_config(&a1, &a2, a3), "dual couple or null base");
    let o = need!(meet(&l1, &l2).ok().or_else(|| meet(&l1, &l3).ok()), "coincident lines");
    ensure!(o.lies_on(&l1) && o.lies_on(&l2) && o.lies_on(&l3), "a₁b₁, a₂b₂ and a₃(a₁a₂)^⊥ are not concurrent");
    let (q1o, qo1, q2o, qo2) =
        (val!(quadrance(&a1, &o)), val!(quadrance(&o, &b1)), val!(quadrance(&a2, &o)), val!(quadrance(&o, &b2)));
    ensure!((&q1o + &qo1).is_one(), "q(a₁,o) + q(o,b₁) = {}", &q1o + &qo1);
    ensure!((&q2o + &qo2).is_one(), "q(a₂,o) + q(o,b₂) = {}", &q2o + &qo2);
    let q11 = val!(quadrance(&a1, &b1));
    let rhs = -((2 * &q1o - 1) * (2 * &qo1 - 1));
    ensure!(q11 == rhs, "q(a₁,b₁) = {q11}, product form {rhs}");
    Outcome::Pass
}

/// Bases `b₁`, `b₂` and the three lines of the singly null singly nil
/// orthocenter configuration, for `a₁a₂` null and `a₃` null.
pub(crate) fn complementary_config(a1: &Point, a2: &Point, a3: &Point) -> Option<((Point, Point), (Line, Line, Line))> {
    if a1.is_null() || a2.is_null() || collinear(a1, a2, a3) {
        return None;
    }
    let b1 = base(a1, &join(a2, a3).ok()?)?;
    let b2 = base(a2, &join(a1, a3).ok()?)?;
    let l1 = join(a1, &b1).ok()?;
    let l2 = join(a2, &b2).ok()?;
    let l3 = join(a3, &join(a1, a2).ok()?.dual()).ok()?;
    Some(((b1, b2), (l1, l2, l3)))
}

/// `α₁` is common to both lines: `d` on `α₁α₃`, `x` and `y` on `α₁α₂`.
fn t89(_: &Ctx, c: &[Obj]) -> Outcome {
    let v = need!(nulls(c, 3), REPEATED);
    let (al1, al2, al3) = (&v[0].1, &v[1].1, &v[2].1);
    let d = point_on_join(al1.coords(), al3.coords(), par(&c[3])).unwrap();
    require!(&d != al1 && &d != al3, "d is a null point");
    let x = point_on_join(al1.coords(), al2.coords(), par(&c[4])).unwrap();
    let y = point_on_join(al1.coords(), al2.coords(), par(&c[5])).unwrap();
    let l23 = join(al2, al3).unwrap();
    let z = meet(&l23, &join(&x, &d).unwrap()).unwrap();
    let w = meet(&l23, &join(&y, &d).unwrap()).unwrap();
    let (qxy, qzw) = (val!(quadrance(&x, &y)), val!(quadrance(&z, &w)));
    ensure!(qxy == qzw, "q(x,y) = {qxy}, q(z,w) = {qzw}");
    Outcome::Pass
}

/// Each null point may serve as `α₃`.
fn t90(_: &Ctx, c: &[Obj]) -> Outcome {
    let v = need!(nulls(c, 3), REPEATED);
    let m = ln(&c[3]);
    let mut checked = false;
    for k in 0..3 {
        let (i, j) = others(k);
        let l = join(&v[i].1, &v[j].1).unwrap();
        let (l13, l23) = (join(&v[i].1, &v[k].1).unwrap(), join(&v[j].1, &v[k].1).unwrap());
        if m == &l13 || m == &l23 {
            continue;
        }
        let (a1, a2) = (meet(&l13, m).unwrap(), meet(&l23, m).unwrap());
        let (Some(q), Some(s)) = (quadrance(&a1, &a2).into_value(), spread(&l, m).into_value()) else { continue };
        ensure!((&q * &s).is_one(), "α₃ = {}: q = {q}, S = {s}", v[k].1);
        checked = true;
    }
    require!(checked, super::UNDEFINED);
    Outcome::Pass
}

/// The diagonal points `d`, `e`, `f` of four null points.
fn diagonals(a: &[Point]) -> [Point; 3] {
    let m = |i: usize, j: usize, k: usize, l: usize| {
        meet(&join(&a[i], &a[j]).unwrap(), &join(&a[k], &a[l]).unwrap()).unwrap()
    };
    [m(0, 1, 2, 3), m(0, 2, 1, 3), m(0, 3, 1, 2)]
}

fn t91(_: &Ctx, c: &[Obj]) -> Outcome {
    let v = need!(nulls(c, 4), REPEATED);
    let a: Vec<Point> = v.into_iter().map(|x| x.1).collect();
    let [d, e, f] = diagonals(&a);
    ensure!(!collinear(&d, &e, &f), "diagonal points {d}, {e}, {f} are collinear");
    ensure!(join(&e, &f).unwrap() == d.dual(), "d^⊥ ≠ ef");
    ensure!(join(&d, &f).unwrap() == e.dual(), "e^⊥ ≠ df");
    ensure!(join(&d, &e).unwrap() == f.dual(), "f^⊥ ≠ de");
    Outcome::Pass
}

fn t92(ctx: &Ctx, c: &[Obj]) -> Outcome {
    let v = need!(nulls(c, 4), REPEATED);
    let a: Vec<&Point> = v.iter().map(|x| &x.1).collect();
    let s = |i: usize, j: usize, k: usize, l: usize| spread(&join(a[i], a[j]).unwrap(), &join(a[k], a[l]).unwrap());
    let (p, r, t) = (val!(s(0, 1, 2, 3)), val!(s(0, 2, 1, 3)), val!(s(0, 3, 1, 2)));
    let sum = &p * &r + &r * &t + &t * &p;
    ensure!(sum == ctx.field.int(48), "PR + RT + TP = {sum}");
    let prod = &p * &r * &t;
    ensure!(prod == ctx.field.int(64), "PRT = {prod}");
    Outcome::Pass
}
