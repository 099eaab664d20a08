//! Quadrance, spread and the other metrical quantities of points and lines.
//!
//! Every quantity whose defining denominator is a product of forms returns a
//! [`MetricValue`], which is `Undefined` exactly when one of the arguments is
//! null.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::field::Scalar;
use crate::projective::{bilinear, det3, form, hcross, span_coordinates, GeomError, Line, Point, Vec3};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MetricValue {
    Value(Scalar),
    Undefined,
}

use MetricValue::{Undefined, Value};

impl MetricValue {
    pub fn value(&self) -> Option<&Scalar> {
        match self {
            Value(s) => Some(s),
            Undefined => None,
        }
    }

    pub fn into_value(self) -> Option<Scalar> {
        match self {
            Value(s) => Some(s),
            Undefined => None,
        }
    }

    pub fn is_undefined(&self) -> bool {
        matches!(self, Undefined)
    }

    pub fn map(&self, f: impl FnOnce(&Scalar) -> Scalar) -> MetricValue {
        match self {
            Value(s) => Value(f(s)),
            Undefined => Undefined,
        }
    }

    /// `1 − self`.
    pub fn complement(&self) -> MetricValue {
        self.map(|s| 1 - s)
    }

    /// Division that yields `Undefined` on an undefined operand or a zero
    /// divisor.
    pub fn div(&self, o: &MetricValue) -> MetricValue {
        match (self, o) {
            (Value(a), Value(b)) => a.checked_div(b).map(Value).unwrap_or(Undefined),
            _ => Undefined,
        }
    }
}

impl From<Scalar> for MetricValue {
    fn from(s: Scalar) -> MetricValue {
        Value(s)
    }
}

impl fmt::Display for MetricValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value(s) => write!(f, "{s}"),
            Undefined => write!(f, "undefined"),
        }
    }
}

macro_rules! metric_op {
    ($tr:ident, $m:ident) => {
        impl $tr<&MetricValue> for &MetricValue {
            type Output = MetricValue;
            fn $m(self, o: &MetricValue) -> MetricValue {
                match (self, o) {
                    (Value(a), Value(b)) => Value(a.$m(b)),
                    _ => Undefined,
                }
            }
        }
        impl $tr<MetricValue> for MetricValue {
            type Output = MetricValue;
            fn $m(self, o: MetricValue) -> MetricValue {
                (&self).$m(&o)
            }
        }
    };
}

metric_op!(Add, add);
metric_op!(Sub, sub);
metric_op!(Mul, mul);

/// `n / (f₁·f₂·…)`, undefined if any form vanishes.
fn ratio(num: Scalar, forms: &[Scalar]) -> MetricValue {
    let mut den = num.one_like();
    for f in forms {
        if f.is_zero() {
            return Undefined;
        }
        den = den * f;
    }
    Value(num / den)
}

fn q_vec(v1: &Vec3, v2: &Vec3) -> MetricValue {
    ratio(bilinear(v1, v2).sq(), &[form(v1), form(v2)]).complement()
}

/// Quadrance through the hyperbolic cross product: `−form(J(v₁;v₂))/(f₁f₂)`.
fn q_vec_cross(v1: &Vec3, v2: &Vec3) -> MetricValue {
    ratio(-form(&hcross(v1, v2)), &[form(v1), form(v2)])
}

/// `q(a₁,a₂) = 1 − (a₁·a₂)²/(f(a₁)f(a₂))`.
pub fn quadrance(a1: &Point, a2: &Point) -> MetricValue {
    q_vec(a1.coords(), a2.coords())
}

/// The same quadrance computed from the cross product of the points.
pub fn quadrance_via_cross(a1: &Point, a2: &Point) -> MetricValue {
    q_vec_cross(a1.coords(), a2.coords())
}

pub fn spread(l1: &Line, l2: &Line) -> MetricValue {
    q_vec(l1.coords(), l2.coords())
}

pub fn spread_via_cross(l1: &Line, l2: &Line) -> MetricValue {
    q_vec_cross(l1.coords(), l2.coords())
}

/// `p = 1 − q`.
pub fn product(a1: &Point, a2: &Point) -> MetricValue {
    ratio(bilinear(a1.coords(), a2.coords()).sq(), &[a1.form(), a2.form()])
}

/// `C = 1 − S`.
pub fn cross(l1: &Line, l2: &Line) -> MetricValue {
    ratio(bilinear(l1.coords(), l2.coords()).sq(), &[l1.form(), l2.form()])
}

fn quadrea_vec(v1: &Vec3, v2: &Vec3, v3: &Vec3) -> MetricValue {
    ratio(-det3(v1, v2, v3).sq(), &[form(v1), form(v2), form(v3)])
}

pub fn quadrea(a1: &Point, a2: &Point, a3: &Point) -> MetricValue {
    quadrea_vec(a1.coords(), a2.coords(), a3.coords())
}

pub fn quadreal(l1: &Line, l2: &Line, l3: &Line) -> MetricValue {
    quadrea_vec(l1.coords(), l2.coords(), l3.coords())
}

fn triple_vec(v1: &Vec3, v2: &Vec3, v3: &Vec3) -> MetricValue {
    let num = bilinear(v2, v3) * bilinear(v1, v3) * bilinear(v1, v2);
    ratio(num, &[form(v1), form(v2), form(v3)])
}

pub fn triple_product(a1: &Point, a2: &Point, a3: &Point) -> MetricValue {
    triple_vec(a1.coords(), a2.coords(), a3.coords())
}

pub fn triple_cross(l1: &Line, l2: &Line, l3: &Line) -> MetricValue {
    triple_vec(l1.coords(), l2.coords(), l3.coords())
}

/// Quadrance and spread of the couple `aL`: `(lx+my−nz)²/(f(a)f(L))`.
pub fn couple_metric(a: &Point, l: &Line) -> MetricValue {
    ratio(bilinear(a.coords(), l.coords()).sq(), &[a.form(), l.form()])
}

/// Cross ratio `(v₁,v₂:u₁,u₂)` of four vectors in a common plane through
/// the origin. Writing `uᵢ = zᵢv₁ + wᵢv₂`, this is `w₁z₂/(w₂z₁)`.
pub fn cross_ratio_vecs(v1: &Vec3, v2: &Vec3, u1: &Vec3, u2: &Vec3) -> Result<Scalar, GeomError> {
    let c1 = span_coordinates(u1, v1, v2).map_err(|_| GeomError::Degenerate)?;
    let c2 = span_coordinates(u2, v1, v2).map_err(|_| GeomError::Degenerate)?;
    let (z1, w1) = (c1.t(), c1.u());
    let (z2, w2) = (c2.t(), c2.u());
    (w1 * z2).checked_div(&(w2 * z1)).ok_or(GeomError::Degenerate)
}

pub fn cross_ratio(v1: &Point, v2: &Point, u1: &Point, u2: &Point) -> Result<Scalar, GeomError> {
    cross_ratio_vecs(v1.coords(), v2.coords(), u1.coords(), u2.coords())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn pt(x: &Scalar, y: &Scalar, z: i64) -> Point {
        Point::new(x.clone(), y.clone(), x.from_int_like(z)).unwrap()
    }

    #[test]
    fn self_quadrance_is_zero() {
        let f = Field::rationals();
        let a = Point::ints(&f, 2, 3, 7).unwrap();
        assert_eq!(quadrance(&a, &a), Value(f.zero()));
        assert_eq!(product(&a, &a), Value(f.one()));
        let l = a.dual();
        assert_eq!(spread(&l, &l), Value(f.zero()));
    }

    #[test]
    fn null_arguments_are_undefined() {
        let f = Field::rationals();
        let n = Point::ints(&f, 1, 0, 1).unwrap();
        let a = Point::ints(&f, 0, 0, 1).unwrap();
        assert!(quadrance(&n, &a).is_undefined());
        assert!(quadrea(&n, &a, &Point::ints(&f, 1, 2, 5).unwrap()).is_undefined());
        let c = couple_metric(&a, &Line::ints(&f, 1, 0, 1).unwrap());
        assert!(c.is_undefined());
    }

    #[test]
    fn origin_quadrance_closed_form() {
        let (x, y) = (Scalar::rational(1, 3), Scalar::rational(-2, 5));
        let o = Point::ints(&Field::rationals(), 0, 0, 1).unwrap();
        let d = &x.sq() + &y.sq();
        assert_eq!(quadrance(&o, &pt(&x, &y, 1)), Value(&d / (&d - 1)));
    }

    #[test]
    fn perpendicular_product_is_zero() {
        let f = Field::rationals();
        let a = Point::ints(&f, 1, 0, 0).unwrap();
        let b = Point::ints(&f, 0, 1, 0).unwrap();
        assert_eq!(product(&a, &b), Value(f.zero()));
        let c = Point::ints(&f, 0, 0, 1).unwrap();
        assert_eq!(triple_product(&a, &b, &c), Value(f.zero()));
    }

    #[test]
    fn harmonic_cross_ratio() {
        let f = Field::rationals();
        let v1 = [f.int(1), f.int(2), f.int(4)];
        let v2 = [f.int(-3), f.int(1), f.int(2)];
        let u1 = [f.int(-2), f.int(3), f.int(6)];
        let u2 = [f.int(4), f.int(1), f.int(2)];
        assert_eq!(cross_ratio_vecs(&v1, &v2, &u1, &u2).unwrap(), f.int(-1));
    }

    #[test]
    fn collinear_quadrea_is_zero() {
        let f = Field::rationals();
        let a = Point::ints(&f, 1, 2, 5).unwrap();
        let b = Point::ints(&f, 0, 1, 3).unwrap();
        let c = Point::from_vec(crate::projective::add_vec(a.coords(), b.coords())).unwrap();
        assert_eq!(quadrea(&a, &b, &c), Value(f.zero()));
    }
}
