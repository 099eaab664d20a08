//! Polynomial identities behind several of the theorems, checked on raw
//! coordinates and parameters.

use super::{check, ensure, need, par, pt, require, sc, Ctx, Kind, Obj, Outcome, Predicate, TheoremCheck};
use crate::field::Scalar;
use crate::metric::{cross_ratio, spread};
use crate::projective::{bilinear, det3, form, hcross, join, point_on_join, Proportion2};
use crate::trig::{cross_fn, mid_substitution, triple_spread_fn};

use Kind::{Param as T, Point as P, Scalar as S};

pub(super) fn checks() -> Vec<TheoremCheck> {
    vec![
        ident("ID-fibonacci-ext", "Extension of Fibonacci's identity", &[P, P], fibonacci_ext),
        ident("ID-null-line-product", "Null line product", &[T, T], null_line_product),
        ident("ID-pleasant", "Null diagonal point form", &[T, T, T, T], pleasant),
        ident("ID-cross-ratio", "Cross ratio complement", &[P, P, T, T], cross_ratio_sum),
        ident("ID-spread-formula", "Spread formula", &[P, P, P], spread_formula),
        ident("ID-quadrea-relation", "Quadrea relation", &[P, P, P], quadrea_relation),
        ident("ID-triple-quad-mid", "Triple quad mid factorization", &[S, S, S], triple_quad_mid),
        ident("ID-pythagoras-mid", "Pythagoras mid factorization", &[S, S, S], pythagoras_mid),
        ident("ID-cross-mid", "Cross mid factorization", &[S, S, S, S], cross_mid),
        ident("ID-equilateral-mid", "Equilateral mid factorization", &[S, S], equilateral_mid),
    ]
}

fn ident(id: &'static str, name: &'static str, domain: &'static [Kind], predicate: Predicate) -> TheoremCheck {
    check(id, name, 0, domain, predicate).identity()
}

fn fibonacci_ext(_: &Ctx, c: &[Obj]) -> Outcome {
    let (v, w) = (pt(&c[0]).coords(), pt(&c[1]).coords());
    let [x2, y2, z2] = v;
    let [x3, y3, z3] = w;
    let lhs = bilinear(v, w).sq() - (y2 * z3 - y3 * z2).sq() - (z2 * x3 - z3 * x2).sq() + (x3 * y2 - x2 * y3).sq();
    let rhs = form(v) * form(w);
    ensure!(lhs == rhs, "{lhs} ≠ {rhs}");
    Outcome::Pass
}

fn null_line_product(_: &Ctx, c: &[Obj]) -> Outcome {
    let (p1, p2) = (par(&c[0]), par(&c[1]));
    let (t1, u1, t2, u2) = (p1.t(), p1.u(), p2.t(), p2.u());
    let lhs = (t1 * t2 - u1 * u2).sq() + (t1 * u2 + t2 * u1).sq() - (t1 * t2 + u1 * u2).sq();
    let rhs = (t1 * u2 - t2 * u1).sq();
    ensure!(lhs == rhs, "{lhs} ≠ {rhs}");
    Outcome::Pass
}

/// Coordinates of the meet of two joins of null points.
fn diagonal(p: [&Proportion2; 4]) -> [Scalar; 3] {
    let (t1, u1, t2, u2) = (p[0].t(), p[0].u(), p[1].t(), p[1].u());
    let (t3, u3, t4, u4) = (p[2].t(), p[2].u(), p[3].t(), p[3].u());
    let (m12, m34) = (t1 * u2 + t2 * u1, t3 * u4 + t4 * u3);
    let (s12, s34) = (t1 * t2 + u1 * u2, t3 * t4 + u3 * u4);
    let (d12, d34) = (t1 * t2 - u1 * u2, t3 * t4 - u3 * u4);
    [&m12 * &s34 - &m34 * &s12, &s12 * &d34 - &s34 * &d12, &m12 * &d34 - &m34 * &d12]
}

fn pleasant(_: &Ctx, c: &[Obj]) -> Outcome {
    let p = [par(&c[0]), par(&c[1]), par(&c[2]), par(&c[3])];
    let lhs = form(&diagonal(p));
    let (t1, u1, t2, u2) = (p[0].t(), p[0].u(), p[1].t(), p[1].u());
    let (t3, u3, t4, u4) = (p[2].t(), p[2].u(), p[3].t(), p[3].u());
    let rhs = 4 * ((t3 * u2 - t2 * u3) * (u1 * t3 - t1 * u3) * (u1 * t4 - t1 * u4) * (u2 * t4 - t2 * u4));
    ensure!(lhs == rhs, "{lhs} ≠ {rhs}");
    Outcome::Pass
}

fn cross_ratio_sum(_: &Ctx, c: &[Obj]) -> Outcome {
    let (v1, v2) = (pt(&c[0]), pt(&c[1]));
    require!(v1 != v2, "v₁ = v₂");
    let u1 = point_on_join(v1.coords(), v2.coords(), par(&c[2])).unwrap();
    let u2 = point_on_join(v1.coords(), v2.coords(), par(&c[3])).unwrap();
    let a = need!(cross_ratio(v1, v2, &u1, &u2).ok(), "degenerate arrangement");
    let b = need!(cross_ratio(v1, &u1, v2, &u2).ok(), "degenerate arrangement");
    ensure!((&a + &b).is_one(), "{a} + {b} ≠ 1");
    Outcome::Pass
}

fn spread_formula(_: &Ctx, c: &[Obj]) -> Outcome {
    let (a1, a2, a3) = (pt(&c[0]), pt(&c[1]), pt(&c[2]));
    let (x1, x2, x3) = (a1.coords(), a2.coords(), a3.coords());
    let (l2, l3) = (form(&hcross(x3, x1)), form(&hcross(x1, x2)));
    let den = &l2 * &l3;
    require!(!den.is_zero(), "a null or degenerate side");
    let formula = -(form(x1) * det3(x1, x2, x3).sq()) / den;
    let direct = spread(&join(a1, a2).unwrap(), &join(a1, a3).unwrap());
    let s = need!(direct.value(), "spread undefined on non-null lines");
    ensure!(s == &formula, "spread {s}, formula {formula}");
    Outcome::Pass
}

fn quadrea_relation(_: &Ctx, c: &[Obj]) -> Outcome {
    let (x1, x2, x3) = (pt(&c[0]).coords(), pt(&c[1]).coords(), pt(&c[2]).coords());
    let (f1, f2, f3) = (form(x1), form(x2), form(x3));
    let (b23, b13, b12) = (bilinear(x2, x3), bilinear(x1, x3), bilinear(x1, x2));
    let lhs = -det3(x1, x2, x3).sq() + &f1 * b23.sq() + &f2 * b13.sq() + &f3 * b12.sq() - &f1 * &f2 * &f3;
    let rhs = 2 * (b23 * b13 * b12);
    ensure!(lhs == rhs, "{lhs} ≠ {rhs}");
    Outcome::Pass
}

fn mids(c: &[Obj]) -> ([&Scalar; 3], [Scalar; 3], [Scalar; 3]) {
    let p = [sc(&c[0]), sc(&c[1]), sc(&c[2])];
    (p, p.map(mid_substitution), p.map(|x| 1 - x))
}

fn triple_quad_mid(_: &Ctx, c: &[Obj]) -> Outcome {
    let (p, q, r) = mids(c);
    let lhs = triple_spread_fn(&q[0], &q[1], &q[2]);
    let rhs = -16 * (triple_spread_fn(p[0], p[1], p[2]) * triple_spread_fn(&r[0], &r[1], &r[2]));
    ensure!(lhs == rhs, "{lhs} ≠ {rhs}");
    Outcome::Pass
}

fn pythagoras_mid(_: &Ctx, c: &[Obj]) -> Outcome {
    let (p, q, _) = mids(c);
    let (p1, p2, p3) = (p[0], p[1], p[2]);
    let lhs = &q[2] - &q[0] - &q[1] + &q[0] * &q[1];
    let rhs = -4 * ((p3 - p1 - p2 + 2 * (p1 * p2)) * (p3 - 2 * (p1 * p2) + p1 + p2 - 1));
    ensure!(lhs == rhs, "{lhs} ≠ {rhs}");
    Outcome::Pass
}

fn cross_mid(_: &Ctx, c: &[Obj]) -> Outcome {
    let (p, q, r) = mids(c);
    let a = sc(&c[3]);
    let lhs = cross_fn(a, &q[0], &q[1], &q[2]);
    let rhs = (a - 4 * triple_spread_fn(p[0], p[1], p[2])) * (a - 4 * triple_spread_fn(&r[0], &r[1], &r[2]));
    ensure!(lhs == rhs, "{lhs} ≠ {rhs}");
    Outcome::Pass
}

/// With `S = 4R(1−R)` and `q = 4p(1−p)`.
fn equilateral_mid(_: &Ctx, c: &[Obj]) -> Outcome {
    let (r, p) = (sc(&c[0]), sc(&c[1]));
    let (s, q) = (mid_substitution(r), mid_substitution(p));
    let lhs = (1 - &s * &q).sq() - 4 * ((1 - &s) * (1 - &q));
    let rhs = (4 * (r * p) - 1) * (4 * (r * (1 - p)) - 1) * (4 * (p * (1 - r)) - 1) * (4 * ((1 - r) * (1 - p)) - 1);
    ensure!(lhs == rhs, "{lhs} ≠ {rhs}");
    Outcome::Pass
}
