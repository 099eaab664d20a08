//! Invariants over random configurations, over ℚ and 𝔽₁₃.

use proptest::prelude::*;
use uhg::metric::{quadrance, quadrance_via_cross, spread, spread_via_cross};
use uhg::nullkernel::{join_null, null_point, null_points_on_line};
use uhg::projective::{collinear, concurrent, join, meet, point_on_join, Line, Point, Proportion2};
use uhg::trig::{cross_fn, spread_poly, spread_poly_coeffs, triple_spread_fn};
use uhg::{Field, Scalar};

fn fields() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::rationals()), Just(Field::prime(13).unwrap())]
}

fn coords() -> impl Strategy<Value = [i64; 3]> {
    [-9i64..=9, -9i64..=9, -9i64..=9].prop_filter("zero vector", |v| v.iter().any(|&c| c != 0))
}

fn point(f: &Field, v: [i64; 3]) -> Option<Point> {
    Point::ints(f, v[0], v[1], v[2]).ok()
}

fn line(f: &Field, v: [i64; 3]) -> Option<Line> {
    Line::ints(f, v[0], v[1], v[2]).ok()
}

fn param(f: &Field, t: i64, u: i64) -> Option<Proportion2> {
    Proportion2::ints(f, t, u).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn scaling_gives_the_same_point(f in fields(), v in coords(), k in 1i64..12) {
        let Some(a) = point(&f, v) else { return Ok(()) };
        prop_assume!(!f.int(k).is_zero());
        let b = point(&f, v.map(|c| c * k)).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(Point::parse(&f, &a.to_string()).unwrap(), a);
    }

    #[test]
    fn duality_is_an_involution(f in fields(), v in coords()) {
        let Some(a) = point(&f, v) else { return Ok(()) };
        prop_assert_eq!(a.dual().dual(), a.clone());
        prop_assert_eq!(a.is_null(), a.dual().is_null());
        prop_assert_eq!(a.lies_on(&a.dual()), a.is_null());
    }

    #[test]
    fn join_and_meet_are_incident(f in fields(), v in coords(), w in coords()) {
        let (Some(a), Some(b)) = (point(&f, v), point(&f, w)) else { return Ok(()) };
        prop_assume!(a != b);
        let l = join(&a, &b).unwrap();
        prop_assert!(a.lies_on(&l) && b.lies_on(&l));
        prop_assert_eq!(meet(&a.dual(), &b.dual()).unwrap(), l.dual());
    }

    #[test]
    fn quadrance_is_dual_to_spread(f in fields(), v in coords(), w in coords()) {
        let (Some(a), Some(b)) = (point(&f, v), point(&f, w)) else { return Ok(()) };
        prop_assert_eq!(quadrance(&a, &b), spread(&a.dual(), &b.dual()));
        prop_assert_eq!(quadrance(&a, &b), quadrance(&b, &a));
        prop_assert_eq!(quadrance(&a, &b), quadrance_via_cross(&a, &b));
        let (l, m) = (a.dual(), b.dual());
        prop_assert_eq!(spread(&l, &m), spread_via_cross(&l, &m));
    }

    #[test]
    fn collinear_points_satisfy_triple_quad(
        f in fields(), v in coords(), w in coords(), t in -9i64..=9, u in -9i64..=9,
    ) {
        let (Some(a1), Some(a2)) = (point(&f, v), point(&f, w)) else { return Ok(()) };
        let Some(tu) = param(&f, t, u) else { return Ok(()) };
        prop_assume!(a1 != a2);
        let a3 = point_on_join(a1.coords(), a2.coords(), &tu).unwrap();
        prop_assert!(collinear(&a1, &a2, &a3));
        let q = [quadrance(&a2, &a3), quadrance(&a1, &a3), quadrance(&a1, &a2)];
        let [Some(q1), Some(q2), Some(q3)] = q.each_ref().map(|x| x.value()) else { return Ok(()) };
        prop_assert!(triple_spread_fn(q1, q2, q3).is_zero());
    }

    #[test]
    fn concurrent_lines_satisfy_triple_spread(
        f in fields(), v in coords(), w in coords(), t in -9i64..=9, u in -9i64..=9,
    ) {
        let (Some(l1), Some(l2)) = (line(&f, v), line(&f, w)) else { return Ok(()) };
        let Some(tu) = param(&f, t, u) else { return Ok(()) };
        prop_assume!(l1 != l2);
        let l3 = Line::from_vec(point_on_join(l1.coords(), l2.coords(), &tu).unwrap().coords().clone()).unwrap();
        prop_assert!(concurrent(&l1, &l2, &l3));
        let s = [spread(&l2, &l3), spread(&l1, &l3), spread(&l1, &l2)];
        let [Some(s1), Some(s2), Some(s3)] = s.each_ref().map(|x| x.value()) else { return Ok(()) };
        prop_assert!(triple_spread_fn(s1, s2, s3).is_zero());
    }

    #[test]
    fn triangles_satisfy_spread_and_cross_laws(f in fields(), u in coords(), v in coords(), w in coords()) {
        let (Some(a1), Some(a2), Some(a3)) = (point(&f, u), point(&f, v), point(&f, w)) else { return Ok(()) };
        prop_assume!(!collinear(&a1, &a2, &a3));
        let (l1, l2, l3) = (join(&a2, &a3).unwrap(), join(&a1, &a3).unwrap(), join(&a1, &a2).unwrap());
        let vals = [
            quadrance(&a2, &a3), quadrance(&a1, &a3), quadrance(&a1, &a2),
            spread(&l2, &l3), spread(&l1, &l3), spread(&l1, &l2),
        ];
        let Some(vals) = vals.iter().map(|x| x.value().cloned()).collect::<Option<Vec<Scalar>>>() else { return Ok(()) };
        let (q, s) = (&vals[..3], &vals[3..]);
        prop_assume!(q.iter().all(|x| !x.is_zero()));
        prop_assert!((&s[0] / &q[0] == &s[1] / &q[1]) && (&s[1] / &q[1] == &s[2] / &q[2]));
        let a = &q[1] * &q[2] * &s[0];
        prop_assert!(cross_fn(&a, &q[0], &q[1], &q[2]).is_zero());
    }

    #[test]
    fn joins_of_null_points_agree(f in fields(), t1 in -9i64..=9, u1 in -9i64..=9, t2 in -9i64..=9, u2 in -9i64..=9) {
        let (Some(p1), Some(p2)) = (param(&f, t1, u1), param(&f, t2, u2)) else { return Ok(()) };
        prop_assume!(p1 != p2);
        let (n1, n2) = (null_point(&p1), null_point(&p2));
        prop_assert!(n1.is_null() && n2.is_null());
        let l = join_null(&p1, &p2).unwrap();
        prop_assert_eq!(&l, &join(&n1, &n2).unwrap());
        let on = null_points_on_line(&f, &l);
        prop_assert!(on.contains(&n1) && on.contains(&n2));
    }

    #[test]
    fn spread_polynomials_compose(n in 0usize..6, m in 0usize..6, x in -20i64..=20, d in 1i64..=20) {
        let f = Field::rationals();
        let x = f.ratio(x, d).unwrap();
        prop_assert_eq!(spread_poly(n, &spread_poly(m, &x)), spread_poly(n * m, &x));
        prop_assert_eq!(spread_poly_coeffs(n).eval(&f, &x), spread_poly(n, &x));
    }

    #[test]
    fn field_operations_are_consistent(f in fields(), a in -50i64..=50, b in -50i64..=50, c in -50i64..=50) {
        let (a, b, c) = (f.int(a), f.int(b), f.int(c));
        prop_assert_eq!((&a + &b) * &c, &a * &c + &b * &c);
        if !b.is_zero() {
            prop_assert_eq!(&a / &b * &b, a.clone());
        }
        if let Ok(r) = f.sqrt(&a.sq()) {
            prop_assert_eq!(r.sq(), a.sq());
        } else {
            prop_assert!(false, "{} has no square root", a.sq());
        }
    }
}
