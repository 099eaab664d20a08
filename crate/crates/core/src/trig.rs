//! Trigonometric functions and solvers built on quadrance and spread.

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::constructions::Triangle;
use crate::field::{Field, FieldError, Scalar};
use crate::metric::{quadrance, quadrea, quadreal, spread, MetricValue};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TrigError {
    #[error("fewer than two quantities are known")]
    UnderDetermined,
    #[error("more than two quantities are given")]
    OverDetermined,
    #[error("a denominator vanishes for this input")]
    DegenerateDenominator,
    #[error("spread is zero")]
    ZeroSpread,
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// `S(a,b,c) = (a+b+c)² − 2(a²+b²+c²) − 4abc`.
pub fn triple_spread_fn(a: &Scalar, b: &Scalar, c: &Scalar) -> Scalar {
    let s = a + b + c;
    s.sq() - 2 * (a.sq() + b.sq() + c.sq()) - 4 * (a * b * c)
}

/// `C(A,q₁,q₂,q₃) = (A − q₁ − q₂ − q₃ + 2)² − 4(1−q₁)(1−q₂)(1−q₃)`.
pub fn cross_fn(a: &Scalar, q1: &Scalar, q2: &Scalar, q3: &Scalar) -> Scalar {
    (a - q1 - q2 - q3 + 2).sq() - 4 * ((1 - q1) * (1 - q2) * (1 - q3))
}

/// The values of `A` with `C(A,q₁,q₂,q₃) = 0`, smallest first in the
/// field's order. Empty when `(1−q₁)(1−q₂)(1−q₃)` is not a square.
pub fn cross_fn_roots(field: &Field, q1: &Scalar, q2: &Scalar, q3: &Scalar) -> Vec<Scalar> {
    let disc = (1 - q1) * (1 - q2) * (1 - q3);
    let Ok(r) = field.sqrt(&disc) else {
        return vec![];
    };
    let centre = q1 + q2 + q3 - 2;
    let mut roots = vec![&centre + 2 * &r, &centre - 2 * &r];
    roots.sort();
    roots.dedup();
    roots
}

/// `4p(1−p)`, the second spread polynomial, used to pass between the
/// products of a triangle and its mid quantities.
pub fn mid_substitution(p: &Scalar) -> Scalar {
    4 * (p * (1 - p))
}

/// Integer coefficients of a spread polynomial, constant term first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpreadPolynomial {
    pub n: usize,
    pub coefficients: Vec<BigInt>,
}

impl SpreadPolynomial {
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.iter().rposition(|c| *c != BigInt::from(0))
    }

    pub fn leading(&self) -> BigInt {
        self.degree().map(|d| self.coefficients[d].clone()).unwrap_or_default()
    }

    pub fn eval(&self, field: &Field, x: &Scalar) -> Scalar {
        self.coefficients
            .iter()
            .rev()
            .fold(field.zero(), |acc, c| acc * x + field.from_bigint(c))
    }
}

/// Coefficients of `Sₙ` from `Sₙ = 2(1−2x)Sₙ₋₁ − Sₙ₋₂ + 2x`.
pub fn spread_poly_coeffs(n: usize) -> SpreadPolynomial {
    let mut prev: Vec<BigInt> = vec![];
    let mut cur: Vec<BigInt> = vec![BigInt::from(0), BigInt::from(1)];
    if n == 0 {
        return SpreadPolynomial { n, coefficients: vec![BigInt::from(0)] };
    }
    for _ in 1..n {
        let mut next = vec![BigInt::from(0); cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i] += 2 * c;
            next[i + 1] -= 4 * c;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= c;
        }
        next[1] += 2;
        prev = std::mem::replace(&mut cur, next);
    }
    SpreadPolynomial { n, coefficients: cur }
}

/// `Sₙ(x)` by the recurrence.
pub fn spread_poly(n: usize, x: &Scalar) -> Scalar {
    let (mut prev, mut cur) = (x.zero_like(), x.clone());
    if n == 0 {
        return prev;
    }
    let k = 2 * (1 - 2 * x);
    for _ in 1..n {
        let next = &k * &cur - &prev + 2 * x;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Right parallax: the quadrance `(S−1)/S` of a right triangle with one
/// null vertex and spread `S` at the other acute vertex.
pub fn right_parallax(s: &Scalar) -> Result<Scalar, TrigError> {
    if s.is_zero() {
        return Err(TrigError::ZeroSpread);
    }
    Ok((s - 1) / s)
}

/// Inverse of [`right_parallax`]: `S = 1/(1−q)`.
pub fn right_parallax_spread(q: &Scalar) -> Result<Scalar, TrigError> {
    (1 - q).inv().ok_or(TrigError::DegenerateDenominator)
}

/// Base quadrance and apex spread `(q₃, S₃)` of an isosceles triangle with
/// equal quadrances `q` and equal spreads `S`.
pub fn isosceles_derive(q: &Scalar, s: &Scalar) -> Result<(Scalar, Scalar), TrigError> {
    let d = (1 - s * q).sq();
    if d.is_zero() {
        return Err(TrigError::DegenerateDenominator);
    }
    let q3 = 4 * ((1 - s) * q * (1 - q)) / &d;
    let s3 = 4 * (s * (1 - s) * (1 - q)) / &d;
    Ok((q3, s3))
}

/// `(1−Sq)² − 4(1−S)(1−q)`, which vanishes for equilateral triangles.
pub fn equilateral_residual(q: &Scalar, s: &Scalar) -> Scalar {
    (1 - s * q).sq() - 4 * ((1 - s) * (1 - q))
}

/// The five quantities of a right triangle with `S₃ = 1`; `None` is unknown.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RightTriangleState {
    pub s1: Option<Scalar>,
    pub s2: Option<Scalar>,
    pub q1: Option<Scalar>,
    pub q2: Option<Scalar>,
    pub q3: Option<Scalar>,
}

/// A fully solved right triangle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RightTriangle {
    #[serde(rename = "S1", serialize_with = "ser_display")]
    pub s1: Scalar,
    #[serde(rename = "S2", serialize_with = "ser_display")]
    pub s2: Scalar,
    #[serde(serialize_with = "ser_display")]
    pub q1: Scalar,
    #[serde(serialize_with = "ser_display")]
    pub q2: Scalar,
    #[serde(serialize_with = "ser_display")]
    pub q3: Scalar,
}

fn ser_display<S: serde::Serializer>(x: &Scalar, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(x)
}

impl RightTriangleState {
    fn known(&self) -> usize {
        [&self.s1, &self.s2, &self.q1, &self.q2, &self.q3].iter().filter(|x| x.is_some()).count()
    }

    fn swapped(&self) -> RightTriangleState {
        RightTriangleState {
            s1: self.s2.clone(),
            s2: self.s1.clone(),
            q1: self.q2.clone(),
            q2: self.q1.clone(),
            q3: self.q3.clone(),
        }
    }
}

impl RightTriangle {
    fn swapped(self) -> RightTriangle {
        RightTriangle { s1: self.s2, s2: self.s1, q1: self.q2, q2: self.q1, q3: self.q3 }
    }

    /// `S₁ = q₁/q₃`, `S₂ = q₂/q₃` (cleared of denominators) and
    /// `q₃ = q₁ + q₂ − q₁q₂`.
    pub fn satisfies_basic_equations(&self) -> bool {
        let RightTriangle { s1, s2, q1, q2, q3 } = self;
        &(s1 * q3) == q1 && &(s2 * q3) == q2 && q3 == &(q1 + q2 - q1 * q2)
    }
}

fn div(a: Scalar, b: Scalar) -> Result<Scalar, TrigError> {
    a.checked_div(&b).ok_or(TrigError::DegenerateDenominator)
}

/// Solves a right triangle with `S₃ = 1` from exactly two of its other five
/// quantities, following the basic equations case by case.
pub fn solve_right_triangle(state: &RightTriangleState) -> Result<RightTriangle, TrigError> {
    match state.known() {
        0 | 1 => return Err(TrigError::UnderDetermined),
        2 => {}
        _ => return Err(TrigError::OverDetermined),
    }
    // Cases with index 2 but not index 1 are solved on the mirrored state.
    let mirror = (state.s1.is_none() && state.q1.is_none())
        || (state.s2.is_some() && state.q1.is_some() && state.s1.is_none());
    if mirror {
        return solve_basic(&state.swapped()).map(RightTriangle::swapped);
    }
    solve_basic(state)
}

fn solve_basic(st: &RightTriangleState) -> Result<RightTriangle, TrigError> {
    let from_quadrances = |q1: Scalar, q2: Scalar, q3: Scalar| -> Result<RightTriangle, TrigError> {
        let s1 = div(q1.clone(), q3.clone())?;
        let s2 = div(q2.clone(), q3.clone())?;
        Ok(RightTriangle { s1, s2, q1, q2, q3 })
    };
    match st {
        RightTriangleState { q1: Some(q1), q2: Some(q2), .. } => {
            let q3 = q1 + q2 - q1 * q2;
            from_quadrances(q1.clone(), q2.clone(), q3)
        }
        RightTriangleState { q1: Some(q1), q3: Some(q3), .. } => {
            let q2 = div(q3 - q1, 1 - q1)?;
            from_quadrances(q1.clone(), q2, q3.clone())
        }
        RightTriangleState { s1: Some(s1), s2: Some(s2), .. } => {
            let num = s1 + s2 - 1;
            let q3 = div(num.clone(), s1 * s2)?;
            let q1 = div(num.clone(), s2.clone())?;
            let q2 = div(num, s1.clone())?;
            Ok(RightTriangle { s1: s1.clone(), s2: s2.clone(), q1, q2, q3 })
        }
        RightTriangleState { s1: Some(s1), q3: Some(q3), .. } => {
            let q1 = s1 * q3;
            let d = 1 - s1 * q3;
            let q2 = div(q3 * (1 - s1), d.clone())?;
            let s2 = div(1 - s1, d)?;
            Ok(RightTriangle { s1: s1.clone(), s2, q1, q2, q3: q3.clone() })
        }
        RightTriangleState { s1: Some(s1), q1: Some(q1), .. } => {
            let q3 = div(q1.clone(), s1.clone())?;
            let q2 = div(q1 * (1 - s1), s1 * (1 - q1))?;
            let s2 = div(1 - s1, 1 - q1)?;
            Ok(RightTriangle { s1: s1.clone(), s2, q1: q1.clone(), q2, q3 })
        }
        RightTriangleState { s1: Some(s1), q2: Some(q2), .. } => {
            let s2 = 1 - s1 * (1 - q2);
            let q3 = div(q2.clone(), s2.clone())?;
            let q1 = div(s1 * q2, s2.clone())?;
            Ok(RightTriangle { s1: s1.clone(), s2, q1, q2: q2.clone(), q3 })
        }
        _ => Err(TrigError::UnderDetermined),
    }
}

/// The five quantities of a right trilateral with `q₃ = 1`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RightTrilateralState {
    pub q1: Option<Scalar>,
    pub q2: Option<Scalar>,
    pub s1: Option<Scalar>,
    pub s2: Option<Scalar>,
    pub s3: Option<Scalar>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RightTrilateral {
    #[serde(serialize_with = "ser_display")]
    pub q1: Scalar,
    #[serde(serialize_with = "ser_display")]
    pub q2: Scalar,
    #[serde(rename = "S1", serialize_with = "ser_display")]
    pub s1: Scalar,
    #[serde(rename = "S2", serialize_with = "ser_display")]
    pub s2: Scalar,
    #[serde(rename = "S3", serialize_with = "ser_display")]
    pub s3: Scalar,
}

/// The dual solver: `q₁ = S₁/S₃`, `q₂ = S₂/S₃`, `S₃ = S₁ + S₂ − S₁S₂`.
pub fn solve_right_trilateral(state: &RightTrilateralState) -> Result<RightTrilateral, TrigError> {
    let dual = RightTriangleState {
        s1: state.q1.clone(),
        s2: state.q2.clone(),
        q1: state.s1.clone(),
        q2: state.s2.clone(),
        q3: state.s3.clone(),
    };
    let t = solve_right_triangle(&dual)?;
    Ok(RightTrilateral { q1: t.s1, q2: t.s2, s1: t.q1, s2: t.q2, s3: t.q3 })
}

/// Quadrances, spreads, quadrea and quadreal of a triangle, indexed so that
/// `q₁ = q(a₂,a₃)` and `S₁` is the spread at `a₁`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleMetrics {
    pub q: [MetricValue; 3],
    pub s: [MetricValue; 3],
    pub quadrea: MetricValue,
    pub quadreal: MetricValue,
}

pub fn triangle_report(t: &Triangle) -> TriangleMetrics {
    let [a1, a2, a3] = t.points();
    let [l1, l2, l3] = t.lines();
    TriangleMetrics {
        q: [quadrance(a2, a3), quadrance(a1, a3), quadrance(a1, a2)],
        s: [spread(&l2, &l3), spread(&l1, &l3), spread(&l1, &l2)],
        quadrea: quadrea(a1, a2, a3),
        quadreal: quadreal(&l1, &l2, &l3),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projective::Point;

    fn r(n: i64, d: i64) -> Scalar {
        Scalar::rational(n, d)
    }

    #[test]
    fn triple_spread_forms_agree() {
        for (a, b, c) in [(r(1, 2), r(-3, 7), r(5, 4)), (r(0, 1), r(2, 1), r(9, 5))] {
            let s = triple_spread_fn(&a, &b, &c);
            let alt = 4 * ((1 - &a) * (1 - &b) * (1 - &c)) - (&a + &b + &c - 2).sq();
            assert_eq!(s, alt);
        }
        assert_eq!(triple_spread_fn(&r(1, 3), &r(2, 3), &r(1, 1)), r(0, 1));
    }

    #[test]
    fn cross_fn_example_roots() {
        let f = Field::rationals();
        let m3 = f.int(-3);
        assert_eq!(cross_fn_roots(&f, &m3, &m3, &m3), vec![f.int(-27), f.int(5)]);
        let a = r(7, 2);
        assert_eq!(cross_fn(&a, &m3, &m3, &m3), (&a + 11).sq() - 256);
    }

    #[test]
    fn spread_polynomial_table() {
        let want: [&[i64]; 8] = [
            &[0],
            &[0, 1],
            &[0, 4, -4],
            &[0, 9, -24, 16],
            &[0, 16, -80, 128, -64],
            &[0, 25, -200, 560, -640, 256],
            &[0, 36, -420, 1792, -3456, 3072, -1024],
            &[0, 49, -784, 4704, -13440, 19712, -14336, 4096],
        ];
        for (n, w) in want.iter().enumerate() {
            let p = spread_poly_coeffs(n);
            let w: Vec<BigInt> = w.iter().map(|&c| BigInt::from(c)).collect();
            assert_eq!(p.coefficients, w, "S_{n}");
        }
        let f = Field::rationals();
        let x = r(2, 7);
        for n in 0..12 {
            assert_eq!(spread_poly_coeffs(n).eval(&f, &x), spread_poly(n, &x));
        }
    }

    #[test]
    fn napier_example() {
        let st = RightTriangleState { s1: Some(r(1, 4)), s2: Some(r(1, 2)), ..Default::default() };
        let t = solve_right_triangle(&st).unwrap();
        assert_eq!((t.q3.clone(), t.q1.clone(), t.q2.clone()), (r(-2, 1), r(-1, 2), r(-1, 1)));
        assert!(t.satisfies_basic_equations());
        let f23 = Field::prime(23).unwrap();
        let st = RightTriangleState { s1: Some(f23.int(6)), s2: Some(f23.int(12)), ..Default::default() };
        assert_eq!(solve_right_triangle(&st).unwrap().q3, f23.int(21));
    }

    #[test]
    fn napier_all_pairs_round_trip() {
        let full = solve_right_triangle(&RightTriangleState {
            q1: Some(r(2, 5)),
            q2: Some(r(-3, 4)),
            ..Default::default()
        })
        .unwrap();
        let vals = [&full.s1, &full.s2, &full.q1, &full.q2, &full.q3];
        for i in 0..5 {
            for j in i + 1..5 {
                let mut st = RightTriangleState::default();
                for k in [i, j] {
                    let v = Some(vals[k].clone());
                    match k {
                        0 => st.s1 = v,
                        1 => st.s2 = v,
                        2 => st.q1 = v,
                        3 => st.q2 = v,
                        _ => st.q3 = v,
                    }
                }
                assert_eq!(solve_right_triangle(&st).unwrap(), full, "pair {i},{j}");
            }
        }
        let dual = solve_right_trilateral(&RightTrilateralState {
            s1: Some(r(2, 5)),
            s2: Some(r(-3, 4)),
            ..Default::default()
        })
        .unwrap();
        assert_eq!(dual.s3, full.q3);
        assert_eq!(
            solve_right_triangle(&RightTriangleState { s1: Some(r(1, 2)), ..Default::default() }),
            Err(TrigError::UnderDetermined)
        );
        let zero = RightTriangleState { s1: Some(r(0, 1)), s2: Some(r(1, 2)), ..Default::default() };
        assert_eq!(solve_right_triangle(&zero), Err(TrigError::DegenerateDenominator));
    }

    #[test]
    fn parallax_and_isosceles() {
        assert_eq!(right_parallax(&r(1, 2)).unwrap(), r(-1, 1));
        assert_eq!(right_parallax(&r(0, 1)), Err(TrigError::ZeroSpread));
        assert_eq!(right_parallax_spread(&r(-1, 1)).unwrap(), r(1, 2));
        let (q, s) = (r(-3, 1), r(5, 9));
        assert_eq!(equilateral_residual(&q, &s), r(0, 1));
        assert_eq!(equilateral_residual(&r(-3, 1), &r(-3, 1)), r(0, 1));
        assert_eq!(equilateral_residual(&r(3, 4), &r(0, 1)), r(0, 1));
        assert_eq!(isosceles_derive(&q, &s).unwrap(), (q.clone(), s.clone()));
        let (q3, _) = isosceles_derive(&r(1, 3), &r(1, 1)).unwrap();
        assert!(q3.is_zero());
    }

    #[test]
    fn report_of_symmetric_triangle() {
        let f = Field::parse("Q[sqrt=2,3]").unwrap();
        let s2 = f.parse_scalar("sqrt(2)").unwrap();
        let s3 = f.parse_scalar("sqrt(3)").unwrap();
        let a1 = Point::new(s2.clone(), f.zero(), f.one()).unwrap();
        let a2 = Point::new(f.int(-1), s3.clone(), s2.clone()).unwrap();
        let a3 = Point::new(f.int(-1), -&s3, s2.clone()).unwrap();
        let m = triangle_report(&Triangle::new(a1, a2, a3).unwrap());
        for q in &m.q {
            assert_eq!(q, &MetricValue::Value(f.int(-3)));
        }
    }
}
