//! Proportions, points and lines, and the incidence geometry built on the
//! bilinear form `x₁x₂ + y₁y₂ − z₁z₂`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::field::{Field, FieldError, Scalar};

pub type Vec3 = [Scalar; 3];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("all coordinates are zero")]
    ZeroTriple,
    #[error("the points are identical")]
    IdenticalPoints,
    #[error("the lines are identical")]
    IdenticalLines,
    #[error("the vectors are linearly dependent")]
    DependentVectors,
    #[error("the point does not lie on the join")]
    NotOnJoin,
    #[error("the side is null")]
    NullSide,
    #[error("the vertex is null")]
    NullVertex,
    #[error("the couple is dual")]
    DualCouple,
    #[error("the point lies on the line")]
    Incident,
    #[error("no midpoint exists")]
    NoMidpoint,
    #[error("a null point or line was given where a non-null one is required")]
    NullPoint,
    #[error("not a null point or line")]
    NotNull,
    #[error("the parameters are equal")]
    EqualParams,
    #[error("the lines coincide")]
    CoincidentLines,
    #[error("the points are collinear")]
    Collinear,
    #[error("the lines are concurrent")]
    Concurrent,
    #[error("degenerate configuration")]
    Degenerate,
    #[error("cannot parse `{0}`")]
    Parse(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// `J(v₁; v₂)`, the hyperbolic cross product.
pub fn hcross(v1: &Vec3, v2: &Vec3) -> Vec3 {
    let [x1, y1, z1] = v1;
    let [x2, y2, z2] = v2;
    [
        y1 * z2 - y2 * z1,
        z1 * x2 - z2 * x1,
        x2 * y1 - x1 * y2,
    ]
}

/// The bilinear form `x₁x₂ + y₁y₂ − z₁z₂`.
pub fn bilinear(v1: &Vec3, v2: &Vec3) -> Scalar {
    &v1[0] * &v2[0] + &v1[1] * &v2[1] - &v1[2] * &v2[2]
}

/// The quadratic form `x² + y² − z²`.
pub fn form(v: &Vec3) -> Scalar {
    bilinear(v, v)
}

pub fn det3(a: &Vec3, b: &Vec3, c: &Vec3) -> Scalar {
    &a[0] * (&b[1] * &c[2] - &b[2] * &c[1]) - &a[1] * (&b[0] * &c[2] - &b[2] * &c[0])
        + &a[2] * (&b[0] * &c[1] - &b[1] * &c[0])
}

pub fn is_zero_vec(v: &Vec3) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn scale(v: &Vec3, k: &Scalar) -> Vec3 {
    [&v[0] * k, &v[1] * k, &v[2] * k]
}

pub fn add_vec(a: &Vec3, b: &Vec3) -> Vec3 {
    [&a[0] + &b[0], &a[1] + &b[1], &a[2] + &b[2]]
}

pub fn sub_vec(a: &Vec3, b: &Vec3) -> Vec3 {
    [&a[0] - &b[0], &a[1] - &b[1], &a[2] - &b[2]]
}

/// A nonzero triple up to scaling, stored with its last nonzero coordinate
/// (looking at z, then y, then x) equal to one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Proportion3 {
    v: Vec3,
}

impl Proportion3 {
    pub fn new(v: Vec3) -> Result<Proportion3, GeomError> {
        let k = v
            .iter()
            .rev()
            .find(|c| !c.is_zero())
            .ok_or(GeomError::ZeroTriple)?
            .inv()
            .unwrap();
        Ok(Proportion3 { v: scale(&v, &k) })
    }

    pub fn coords(&self) -> &Vec3 {
        &self.v
    }

    /// Equality by the three cross-multiplication conditions, usable on
    /// arbitrary representatives.
    pub fn equal_vectors(a: &Vec3, b: &Vec3) -> bool {
        (&a[0] * &b[1] - &b[0] * &a[1]).is_zero()
            && (&a[1] * &b[2] - &b[1] * &a[2]).is_zero()
            && (&a[2] * &b[0] - &b[2] * &a[0]).is_zero()
    }

    fn display_coords(&self) -> Vec<String> {
        if self.v.iter().all(|c| c.as_rational().is_some()) {
            let rs: Vec<_> = self.v.iter().map(|c| c.as_rational().unwrap().clone()).collect();
            let l = rs.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
            let ints: Vec<BigInt> = rs.iter().map(|r| (r * &l).to_integer()).collect();
            let g = ints.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
            let sign = ints.iter().rev().find(|n| !n.is_zero()).map(|n| n.signum()).unwrap();
            return ints.iter().map(|n| (n / &g * &sign).to_string()).collect();
        }
        self.v.iter().map(|c| c.to_string()).collect()
    }

    fn parse(field: &Field, s: &str, open: char, close: char) -> Result<Proportion3, GeomError> {
        let t = s.trim();
        let inner = t
            .strip_prefix(open)
            .and_then(|r| r.strip_suffix(close))
            .ok_or_else(|| GeomError::Parse(s.to_string()))?;
        let parts: Vec<&str> = inner.split(':').collect();
        if parts.len() != 3 {
            return Err(GeomError::Parse(s.to_string()));
        }
        let mut v = Vec::with_capacity(3);
        for p in parts {
            v.push(field.parse_scalar(p).map_err(|_| GeomError::Parse(p.trim().to_string()))?);
        }
        let v: Vec3 = v.try_into().unwrap();
        Proportion3::new(v)
    }
}

/// A point `[x:y:z]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point(Proportion3);

/// A line `(l:m:n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Line(Proportion3);

macro_rules! role {
    ($t:ident, $open:expr, $close:expr) => {
        impl $t {
            pub fn new(x: Scalar, y: Scalar, z: Scalar) -> Result<$t, GeomError> {
                Proportion3::new([x, y, z]).map($t)
            }

            pub fn from_vec(v: Vec3) -> Result<$t, GeomError> {
                Proportion3::new(v).map($t)
            }

            /// Builds from integer coordinates in `field`.
            pub fn ints(field: &Field, x: i64, y: i64, z: i64) -> Result<$t, GeomError> {
                $t::new(field.int(x), field.int(y), field.int(z))
            }

            pub fn parse(field: &Field, s: &str) -> Result<$t, GeomError> {
                Proportion3::parse(field, s, $open, $close).map($t)
            }

            pub fn coords(&self) -> &Vec3 {
                self.0.coords()
            }

            pub fn rep(&self) -> &Proportion3 {
                &self.0
            }

            /// Value of the quadratic form on the canonical representative.
            pub fn form(&self) -> Scalar {
                form(self.coords())
            }

            pub fn is_null(&self) -> bool {
                self.form().is_zero()
            }
        }

        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}{}{}", $open, self.0.display_coords().join(":"), $close)
            }
        }
    };
}

role!(Point, '[', ']');
role!(Line, '(', ')');

impl Point {
    pub fn dual(&self) -> Line {
        Line(self.0.clone())
    }

    pub fn lies_on(&self, l: &Line) -> bool {
        lies_on(self, l)
    }
}

impl Line {
    pub fn dual(&self) -> Point {
        Point(self.0.clone())
    }

    pub fn passes_through(&self, a: &Point) -> bool {
        lies_on(a, self)
    }
}

/// `lx + my − nz = 0`.
pub fn lies_on(a: &Point, l: &Line) -> bool {
    bilinear(a.coords(), l.coords()).is_zero()
}

pub fn perpendicular_points(a1: &Point, a2: &Point) -> bool {
    bilinear(a1.coords(), a2.coords()).is_zero()
}

pub fn perpendicular_lines(l1: &Line, l2: &Line) -> bool {
    bilinear(l1.coords(), l2.coords()).is_zero()
}

pub fn join(a1: &Point, a2: &Point) -> Result<Line, GeomError> {
    Line::from_vec(hcross(a1.coords(), a2.coords())).map_err(|_| GeomError::IdenticalPoints)
}

pub fn meet(l1: &Line, l2: &Line) -> Result<Point, GeomError> {
    Point::from_vec(hcross(l1.coords(), l2.coords())).map_err(|_| GeomError::IdenticalLines)
}

pub fn collinear(a1: &Point, a2: &Point, a3: &Point) -> bool {
    det3(a1.coords(), a2.coords(), a3.coords()).is_zero()
}

pub fn concurrent(l1: &Line, l2: &Line, l3: &Line) -> bool {
    det3(l1.coords(), l2.coords(), l3.coords()).is_zero()
}

/// A nonzero pair up to scaling, stored with its last nonzero entry equal
/// to one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Proportion2 {
    t: Scalar,
    u: Scalar,
}

impl Proportion2 {
    pub fn new(t: Scalar, u: Scalar) -> Result<Proportion2, GeomError> {
        if !u.is_zero() {
            let k = u.inv().unwrap();
            Ok(Proportion2 { t: &t * &k, u: u.one_like() })
        } else if !t.is_zero() {
            Ok(Proportion2 { t: t.one_like(), u })
        } else {
            Err(GeomError::ZeroTriple)
        }
    }

    pub fn ints(field: &Field, t: i64, u: i64) -> Result<Proportion2, GeomError> {
        Proportion2::new(field.int(t), field.int(u))
    }

    pub fn t(&self) -> &Scalar {
        &self.t
    }

    pub fn u(&self) -> &Scalar {
        &self.u
    }

    /// `t₁u₂ − t₂u₁ = 0` on raw pairs.
    pub fn equal_pairs(t1: &Scalar, u1: &Scalar, t2: &Scalar, u2: &Scalar) -> bool {
        (t1 * u2 - t2 * u1).is_zero()
    }

    /// Parses `t:u`.
    pub fn parse(field: &Field, s: &str) -> Result<Proportion2, GeomError> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        if parts.len() != 2 {
            return Err(GeomError::Parse(s.to_string()));
        }
        let t = field.parse_scalar(parts[0]).map_err(|_| GeomError::Parse(parts[0].trim().into()))?;
        let u = field.parse_scalar(parts[1]).map_err(|_| GeomError::Parse(parts[1].trim().into()))?;
        Proportion2::new(t, u)
    }

    /// Every proportion over a finite field: `t:1` for each `t`, then `1:0`.
    pub fn all(field: &Field) -> Option<Vec<Proportion2>> {
        let els = field.elements()?;
        let mut out: Vec<_> = els
            .iter()
            .map(|t| Proportion2 { t: t.clone(), u: field.one() })
            .collect();
        out.push(Proportion2 { t: field.one(), u: field.zero() });
        Some(out)
    }
}

impl fmt::Display for Proportion2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let (Some(t), Some(u)) = (self.t.as_rational(), self.u.as_rational()) {
            let l = t.denom().lcm(u.denom());
            let (a, b) = ((t * &l).to_integer(), (u * &l).to_integer());
            let g = a.gcd(&b);
            let (a, b) = (&a / &g, &b / &g);
            let (a, b) = if b.is_negative() { (-a, -b) } else { (a, b) };
            return write!(f, "{a}:{b}");
        }
        write!(f, "{}:{}", self.t, self.u)
    }
}

/// All `p² + p + 1` points of the plane over a finite field, in canonical
/// form.
pub fn all_points(field: &Field) -> Option<Vec<Point>> {
    all_proportions(field).map(|v| v.into_iter().map(Point).collect())
}

pub fn all_lines(field: &Field) -> Option<Vec<Line>> {
    all_proportions(field).map(|v| v.into_iter().map(Line).collect())
}

fn all_proportions(field: &Field) -> Option<Vec<Proportion3>> {
    let els = field.elements()?;
    let (zero, one) = (field.zero(), field.one());
    let mut out = Vec::new();
    for x in &els {
        for y in &els {
            out.push(Proportion3 { v: [x.clone(), y.clone(), one.clone()] });
        }
    }
    for x in &els {
        out.push(Proportion3 { v: [x.clone(), one.clone(), zero.clone()] });
    }
    out.push(Proportion3 { v: [one.clone(), zero.clone(), zero.clone()] });
    Some(out)
}

/// `[t·v₁ + u·v₂]`.
pub fn point_on_join(v1: &Vec3, v2: &Vec3, tu: &Proportion2) -> Result<Point, GeomError> {
    if is_zero_vec(&hcross(v1, v2)) {
        return Err(GeomError::DependentVectors);
    }
    Point::from_vec(add_vec(&scale(v1, &tu.t), &scale(v2, &tu.u)))
}

/// `(t·v₁ + u·v₂)`.
pub fn line_through_meet(v1: &Vec3, v2: &Vec3, tu: &Proportion2) -> Result<Line, GeomError> {
    point_on_join(v1, v2, tu).map(|p| p.dual())
}

/// Recovers `t:u` with `a = [t·v₁ + u·v₂]`.
pub fn join_coordinates(a: &Point, v1: &Vec3, v2: &Vec3) -> Result<Proportion2, GeomError> {
    span_coordinates(a.coords(), v1, v2)
}

pub fn meet_coordinates(l: &Line, v1: &Vec3, v2: &Vec3) -> Result<Proportion2, GeomError> {
    span_coordinates(l.coords(), v1, v2)
}

pub fn span_coordinates(w: &Vec3, v1: &Vec3, v2: &Vec3) -> Result<Proportion2, GeomError> {
    let c = hcross(v1, v2);
    if is_zero_vec(&c) {
        return Err(GeomError::DependentVectors);
    }
    if !det3(w, v1, v2).is_zero() {
        return Err(GeomError::NotOnJoin);
    }
    // w = t v₁ + u v₂ gives J(w; v₂) = t J(v₁; v₂) and J(v₁; w) = u J(v₁; v₂).
    let k = (0..3).find(|&i| !c[i].is_zero()).unwrap();
    let t = hcross(w, v2)[k].clone();
    let u = hcross(v1, w)[k].clone();
    Proportion2::new(t, u)
}

/// `[np − ms : ls + nr : lp + mr]`, a point on `L = (l:m:n)`. Every point of
/// `L` arises this way for some `p, r, s`; distinct parameters may give the
/// same point.
pub fn line_point_param(l: &Line, p: &Scalar, r: &Scalar, s: &Scalar) -> Result<Point, GeomError> {
    let [l, m, n] = l.coords();
    Point::new(n * p - m * s, l * s + n * r, l * p + m * r)
}

/// `(zp − ys : xs + zr : xp + yr)`, a line through `a = [x:y:z]`.
pub fn point_line_param(a: &Point, p: &Scalar, r: &Scalar, s: &Scalar) -> Result<Line, GeomError> {
    let [x, y, z] = a.coords();
    Line::new(z * p - y * s, x * s + z * r, x * p + y * r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rationals()
    }

    #[test]
    fn hcross_examples() {
        let f = q();
        let e = |a, b, c| [f.int(a), f.int(b), f.int(c)];
        assert!(Proportion3::equal_vectors(&hcross(&e(1, 0, 0), &e(0, 1, 0)), &e(0, 0, 1)));
        let v = e(2, -3, 5);
        assert!(is_zero_vec(&hcross(&v, &v)));
        let (x, y) = (Scalar::rational(2, 7), Scalar::rational(-5, 3));
        let j = hcross(&[x.clone(), f.zero(), f.one()], &[f.zero(), y.clone(), f.one()]);
        assert_eq!(j, [-&y, -&x, -(&x * &y)]);
    }

    #[test]
    fn join_and_meet_examples() {
        let f = q();
        let a = Point::ints(&f, 1, 0, 0).unwrap();
        let b = Point::ints(&f, 0, 1, 0).unwrap();
        assert_eq!(join(&a, &b).unwrap(), Line::ints(&f, 0, 0, 1).unwrap());
        assert_eq!(join(&a, &a), Err(GeomError::IdenticalPoints));
        let l1 = Line::ints(&f, 1, 0, 0).unwrap();
        let l2 = Line::ints(&f, 0, 1, 0).unwrap();
        assert_eq!(meet(&l1, &l2).unwrap(), Point::ints(&f, 0, 0, 1).unwrap());
        let l3 = Line::ints(&f, 3, 7, 0).unwrap();
        assert_eq!(meet(&l1, &l3).unwrap(), Point::ints(&f, 0, 0, 1).unwrap());
        assert_eq!(meet(&l1, &l1), Err(GeomError::IdenticalLines));
    }

    #[test]
    fn lies_on_examples() {
        let f = q();
        let x = Scalar::rational(3, 4);
        let a = Point::new(x, f.zero(), f.one()).unwrap();
        assert!(a.lies_on(&Line::ints(&f, 0, 1, 0).unwrap()));
        let o = Point::ints(&f, 0, 0, 1).unwrap();
        assert!(!o.lies_on(&o.dual()));
    }

    #[test]
    fn canonical_form_and_display() {
        let f = q();
        let a = Point::new(Scalar::rational(1, 2), Scalar::integer(1), Scalar::integer(-3)).unwrap();
        let b = Point::ints(&f, -3, -6, 18).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "[-1:-2:6]");
        assert_eq!(Point::parse(&f, &a.to_string()).unwrap(), a);
        assert_eq!(Line::parse(&f, " ( 1/2 : 0 : 1 ) ").unwrap().to_string(), "(1:0:2)");
        assert!(Point::parse(&f, "[0:0:0]").is_err());
        assert!(Point::parse(&f, "(1:0:0)").is_err());
        assert_eq!(Proportion2::parse(&f, "4:2").unwrap().to_string(), "2:1");
    }

    #[test]
    fn exhaustive_point_count() {
        for p in [3u64, 5, 7] {
            let f = Field::prime(p).unwrap();
            let pts = all_points(&f).unwrap();
            assert_eq!(pts.len() as u64, p * p + p + 1);
            let mut sorted = pts.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), pts.len());
        }
    }

    #[test]
    fn line_param_example() {
        let f = q();
        let l = Line::ints(&f, 0, 0, 1).unwrap();
        let a = line_point_param(&l, &f.int(1), &f.int(2), &f.int(0)).unwrap();
        assert_eq!(a, Point::ints(&f, 1, 2, 0).unwrap());
    }

    #[test]
    fn line_param_surjective_over_f5() {
        let f = Field::prime(5).unwrap();
        let els = f.elements().unwrap();
        let pts = all_points(&f).unwrap();
        for l in all_lines(&f).unwrap() {
            let mut hit = std::collections::BTreeSet::new();
            for p in &els {
                for r in &els {
                    for s in &els {
                        if let Ok(a) = line_point_param(&l, p, r, s) {
                            assert!(a.lies_on(&l));
                            hit.insert(a);
                        }
                    }
                }
            }
            let on: std::collections::BTreeSet<_> = pts.iter().filter(|a| a.lies_on(&l)).cloned().collect();
            assert_eq!(hit, on);
            let a = &pts[7];
            for p in &els {
                if let Ok(m) = point_line_param(a, p, &f.int(1), &f.int(2)) {
                    assert!(a.lies_on(&m));
                }
            }
        }
    }

    #[test]
    fn join_param_endpoints() {
        let f = q();
        let v1 = [f.int(1), f.int(2), f.int(5)];
        let v2 = [f.int(-1), f.int(0), f.int(3)];
        let a1 = point_on_join(&v1, &v2, &Proportion2::ints(&f, 1, 0).unwrap()).unwrap();
        assert_eq!(a1, Point::from_vec(v1.clone()).unwrap());
        let a2 = point_on_join(&v1, &v2, &Proportion2::ints(&f, 0, 1).unwrap()).unwrap();
        assert_eq!(a2, Point::from_vec(v2.clone()).unwrap());
        assert_eq!(
            point_on_join(&v1, &scale(&v1, &f.int(3)), &Proportion2::ints(&f, 1, 1).unwrap()),
            Err(GeomError::DependentVectors)
        );
        let off = Point::ints(&f, 0, 0, 1).unwrap();
        assert_eq!(join_coordinates(&off, &v1, &v2), Err(GeomError::NotOnJoin));
    }
}
