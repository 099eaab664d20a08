//! Converses that do not hold, each run against a family of
//! configurations where the hypothesis is met and the conclusion fails.

use super::{check, ensure, need, par, pt, require, val, Ctx, Family, Kind, Obj, Outcome, Predicate, TheoremCheck};
use crate::field::{Field, Scalar};
use crate::metric::{quadrance, spread};
use crate::nullkernel::{null_point, point_on_null_line};
use crate::projective::{collinear, join, meet, Point, Proportion2};
use crate::trig::triple_spread_fn;

use super::nulls::complementary_config;
use Kind::{Null as N, Param as T, Point as P};

pub(super) fn checks() -> Vec<TheoremCheck> {
    vec![
        converse("CX-triple-quad-converse", "Triple quad formula converse", &[P, P, P], triple_quad, example_11),
        converse("CX-complementary-converse", "Complementary quadrances converse", &[N, N, T, T], complementary, orthocenter),
        converse("CX-pythagoras-converse", "Pythagoras converse", &[P, P, P], pythagoras, example_14),
    ]
}

fn converse(
    id: &'static str,
    name: &'static str,
    domain: &'static [Kind],
    predicate: Predicate,
    family: Family,
) -> TheoremCheck {
    check(id, name, 0, domain, predicate).identity().family(family)
}

/// Groups coordinates by three into triangles, dropping any with a zero
/// vector.
fn points(v: Vec<[Scalar; 3]>) -> Vec<Vec<Obj>> {
    v.chunks(3)
        .filter_map(|t| t.iter().map(|x| Point::from_vec(x.clone()).ok().map(Obj::Point)).collect())
        .collect()
}

/// `a₁ = [0:0:1]`, `a₂ = [x:y:1]`, `a₃ = [x:−y:1]` with `y² = −1`.
fn example_11(f: &Field) -> Result<Vec<Vec<Obj>>, String> {
    let i = f.sqrt(&f.int(-1)).map_err(|_| format!("−1 is not a square in {f}"))?;
    let (zero, one) = (f.int(0), f.int(1));
    let mut v = vec![];
    for x in [2, 3, 4, 5, 7] {
        let x = f.int(x);
        v.push([zero.clone(), zero.clone(), one.clone()]);
        v.push([x.clone(), i.clone(), one.clone()]);
        v.push([x, -&i, one.clone()]);
    }
    Ok(points(v))
}

/// Collinear whenever the three quadrances satisfy the Triple quad formula.
fn triple_quad(_: &Ctx, c: &[Obj]) -> Outcome {
    let (a1, a2, a3) = (pt(&c[0]), pt(&c[1]), pt(&c[2]));
    require!(a1 != a2 && a2 != a3 && a1 != a3, "repeated points");
    for (x, y) in [(a1, a2), (a2, a3), (a1, a3)] {
        require!(!join(x, y).unwrap().is_null(), "a null side");
    }
    let (q1, q2, q3) = (val!(quadrance(a2, a3)), val!(quadrance(a1, a3)), val!(quadrance(a1, a2)));
    require!(triple_spread_fn(&q1, &q2, &q3).is_zero(), "S(q₁,q₂,q₃) ≠ 0");
    ensure!(collinear(a1, a2, a3), "S(q₁,q₂,q₃) = 0 with q = {q1}, {q2}, {q3} but the points are not collinear");
    Outcome::Pass
}

/// The same triangle with `x² − y² = 2`, from `x − y = k`, `x + y = 2/k`.
fn example_14(f: &Field) -> Result<Vec<Vec<Obj>>, String> {
    let (zero, one) = (f.int(0), f.int(1));
    let mut v = vec![];
    for (n, d) in [(1, 1), (2, 1), (1, 2), (3, 1), (1, 3), (2, 3)] {
        let k = f.ratio(n, d).map_err(|e| e.to_string())?;
        let m = 2 / &k;
        let (x, y) = ((&k + &m) / 2, (&m - &k) / 2);
        v.push([zero.clone(), zero.clone(), one.clone()]);
        v.push([x.clone(), y.clone(), one.clone()]);
        v.push([x, -y, one.clone()]);
    }
    Ok(points(v))
}

/// Right at `a₁` whenever `q₁ = q₂ + q₃ − q₂q₃`.
fn pythagoras(_: &Ctx, c: &[Obj]) -> Outcome {
    let (a1, a2, a3) = (pt(&c[0]), pt(&c[1]), pt(&c[2]));
    require!(!collinear(a1, a2, a3), "collinear points");
    let (q1, q2, q3) = (val!(quadrance(a2, a3)), val!(quadrance(a1, a3)), val!(quadrance(a1, a2)));
    require!(q1 == &q2 + &q3 - &q2 * &q3, "q₁ ≠ q₂ + q₃ − q₂q₃");
    let s1 = val!(spread(&join(a1, a2).unwrap(), &join(a1, a3).unwrap()));
    ensure!(s1.is_one(), "q₁ = q₂ + q₃ − q₂q₃ with q₁ = {q1} but S₁ = {s1}");
    Outcome::Pass
}

/// Singly null singly nil triangles over small integer parameters.
fn orthocenter(f: &Field) -> Result<Vec<Vec<Obj>>, String> {
    let params: Vec<Proportion2> = [(0, 1), (1, 0), (1, 1), (1, 2), (2, 1), (1, 3), (3, 2)]
        .iter()
        .map(|&(t, u)| Proportion2::new(f.int(t), f.int(u)).unwrap())
        .collect();
    let mut v = vec![];
    for n1 in &params {
        for n2 in &params {
            if n1 == n2 {
                continue;
            }
            for (i, r1) in params.iter().enumerate() {
                for r2 in &params[i + 1..] {
                    v.push(vec![Obj::Null(n1.clone()), Obj::Null(n2.clone()), Obj::Param(r1.clone()), Obj::Param(r2.clone())]);
                }
            }
        }
    }
    Ok(v)
}

/// `c = 1` whenever `S(a,b,c) = 0` and `a + b = 1`, tried on the collinear
/// triple `a₁`, `o`, `b₁` of the singly null singly nil orthocenter.
fn complementary(_: &Ctx, c: &[Obj]) -> Outcome {
    let (n1, n2) = (par(&c[0]), par(&c[1]));
    require!(n1 != n2, "repeated null points");
    let a3 = null_point(n1);
    let (a1, a2) = (point_on_null_line(n2, par(&c[2])), point_on_null_line(n2, par(&c[3])));
    require!(a1 != a2, "a₁ = a₂");
    let ((b1, _), (l1, l2, _)) = need!(complementary_config(&a1, &a2, &a3), "dual couple or null base");
    let o = need!(meet(&l1, &l2).ok(), "coincident lines");
    let (a, b, cc) = (val!(quadrance(&a1, &o)), val!(quadrance(&o, &b1)), val!(quadrance(&a1, &b1)));
    require!(triple_spread_fn(&a, &b, &cc).is_zero(), "S(a,b,c) ≠ 0");
    require!((&a + &b).is_one(), "a + b ≠ 1");
    ensure!(cc.is_one(), "S(a,b,c) = 0 and a + b = 1 with a = {a}, b = {b} but c = {cc}");
    Outcome::Pass
}
