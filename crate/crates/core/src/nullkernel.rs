//! Null points and null lines.
//!
//! Null points are parametrized by proportions `t:u` through
//! `α(t:u) = [t²−u² : 2tu : t²+u²]`, and null lines likewise by `Λ(t:u)`.

use crate::field::{Field, Scalar};
use crate::projective::{GeomError, Line, Point, Proportion2, Vec3};

/// Parameter `t:u` of a null point or null line.
pub type NullParam = Proportion2;

fn alpha(tu: &NullParam) -> Vec3 {
    let (t, u) = (tu.t(), tu.u());
    [t.sq() - u.sq(), 2 * (t * u), t.sq() + u.sq()]
}

/// `α(t:u)`.
pub fn null_point(tu: &NullParam) -> Point {
    Point::from_vec(alpha(tu)).expect("α never vanishes in characteristic other than two")
}

/// `Λ(t:u)`.
pub fn null_line(tu: &NullParam) -> Line {
    null_point(tu).dual()
}

fn param_of(v: &Vec3) -> Result<NullParam, GeomError> {
    let [x, y, z] = v;
    if !(x.sq() + y.sq() - z.sq()).is_zero() {
        return Err(GeomError::NotNull);
    }
    let s = x + z;
    if s.is_zero() {
        Proportion2::new(x.zero_like(), x.one_like())
    } else {
        Proportion2::new(s, y.clone())
    }
}

/// The unique `t:u` with `α(t:u) = a`.
pub fn null_param_of(a: &Point) -> Result<NullParam, GeomError> {
    param_of(a.coords())
}

pub fn null_param_of_line(l: &Line) -> Result<NullParam, GeomError> {
    param_of(l.coords())
}

fn l_vec(p1: &NullParam, p2: &NullParam) -> Vec3 {
    let (t1, u1, t2, u2) = (p1.t(), p1.u(), p2.t(), p2.u());
    [t1 * t2 - u1 * u2, t1 * u2 + t2 * u1, t1 * t2 + u1 * u2]
}

/// `α₁α₂ = (t₁t₂−u₁u₂ : t₁u₂+t₂u₁ : t₁t₂+u₁u₂)`.
pub fn join_null(p1: &NullParam, p2: &NullParam) -> Result<Line, GeomError> {
    if p1 == p2 {
        return Err(GeomError::EqualParams);
    }
    Line::from_vec(l_vec(p1, p2))
}

/// `Λ₁Λ₂`, by the same formula.
pub fn meet_null(p1: &NullParam, p2: &NullParam) -> Result<Point, GeomError> {
    join_null(p1, p2).map(|l| l.dual())
}

fn diagonal_vec(p: [&NullParam; 4]) -> Vec3 {
    let [a, b, c, d] = p;
    let (t1, u1, t2, u2) = (a.t(), a.u(), b.t(), b.u());
    let (t3, u3, t4, u4) = (c.t(), c.u(), d.t(), d.u());
    let s12 = t1 * u2 + t2 * u1;
    let s34 = t3 * u4 + t4 * u3;
    let p12 = t1 * t2 + u1 * u2;
    let p34 = t3 * t4 + u3 * u4;
    let m12 = t1 * t2 - u1 * u2;
    let m34 = t3 * t4 - u3 * u4;
    [
        &s12 * &p34 - &s34 * &p12,
        &p12 * &m34 - &p34 * &m12,
        &s12 * &m34 - &s34 * &m12,
    ]
}

/// Meet of the lines `L(t₁:u₁|t₂:u₂)` and `L(t₃:u₃|t₄:u₄)`.
pub fn null_diagonal_point(
    p1: &NullParam,
    p2: &NullParam,
    p3: &NullParam,
    p4: &NullParam,
) -> Result<Point, GeomError> {
    Point::from_vec(diagonal_vec([p1, p2, p3, p4])).map_err(|_| GeomError::CoincidentLines)
}

/// Join of the points `a(t₁:u₁|t₂:u₂)` and `a(t₃:u₃|t₄:u₄)`.
pub fn null_diagonal_line(
    p1: &NullParam,
    p2: &NullParam,
    p3: &NullParam,
    p4: &NullParam,
) -> Result<Line, GeomError> {
    null_diagonal_point(p1, p2, p3, p4).map(|a| a.dual())
}

/// Raw coordinates of the diagonal point, for identity checks.
pub fn null_diagonal_coords(p: [&NullParam; 4]) -> Vec3 {
    diagonal_vec(p)
}

/// Solutions `t:u` of `(l−n)t² + 2m·tu − (l+n)u² = 0`, whose discriminant
/// is the form of `(l:m:n)`.
fn tangent_params(field: &Field, v: &Vec3) -> Vec<NullParam> {
    let [l, m, n] = v;
    let a = l - n;
    let c = -(l + n);
    let mut out = Vec::new();
    if a.is_zero() {
        // u·(2m·t + c·u) = 0
        out.push(Proportion2::new(field.one(), field.zero()).unwrap());
        if let Ok(p) = Proportion2::new(-&c, 2 * m) {
            out.push(p);
        }
    } else if let Ok(r) = field.sqrt(&(m.sq() + l.sq() - n.sq())) {
        for s in [r.clone(), -r] {
            out.push(Proportion2::new(&s - m, a.clone()).unwrap());
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Null points on `L`: two, one when `L` is null (tangent), or none.
pub fn null_points_on_line(field: &Field, l: &Line) -> Vec<Point> {
    let mut v: Vec<Point> = tangent_params(field, l.coords()).iter().map(null_point).collect();
    v.sort();
    v.dedup();
    v
}

/// Null lines through `a`, dual to [`null_points_on_line`].
pub fn null_lines_through_point(field: &Field, a: &Point) -> Vec<Line> {
    null_points_on_line(field, &a.dual()).into_iter().map(|p| p.dual()).collect()
}

fn on_null(tu: &NullParam, rs: &Proportion2) -> Vec3 {
    let (t, u, r, s) = (tu.t(), tu.u(), rs.t(), rs.u());
    let n = t.sq() + u.sq();
    if n.is_zero() {
        [r * t, r * u, s.clone()]
    } else {
        let d = t.sq() - u.sq();
        [r * &d - 2 * (s * t * u), 2 * (r * t * u) + s * &d, r * &n]
    }
}

/// A point on `Λ(t:u)`, parametrized by `r:s`.
pub fn point_on_null_line(tu: &NullParam, rs: &Proportion2) -> Point {
    Point::from_vec(on_null(tu, rs)).expect("parametrization of a null line is injective")
}

/// A line through `α(t:u)`, parametrized by `r:s`.
pub fn line_through_null_point(tu: &NullParam, rs: &Proportion2) -> Line {
    point_on_null_line(tu, rs).dual()
}

/// Every null point over a finite field, one per proportion.
pub fn all_null_params(field: &Field) -> Option<Vec<NullParam>> {
    Proportion2::all(field)
}

/// `(t₁u₂ − t₂u₁)`, the bracket of two parameters.
pub fn bracket(p1: &NullParam, p2: &NullParam) -> Scalar {
    p1.t() * p2.u() - p2.t() * p1.u()
}
