//! Sides, vertices, couples, triangles and trilaterals, and the points and
//! lines built from them by perpendicularity.

use std::hash::{Hash, Hasher};

use crate::field::Field;
use crate::metric::{product, quadrance};
use crate::nullkernel::null_lines_through_point;
use crate::projective::{
    add_vec, bilinear, collinear, concurrent, form, join, meet, perpendicular_lines,
    perpendicular_points, scale, sub_vec, GeomError, Line, Point,
};

/// An unordered pair of distinct points, stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Side {
    a1: Point,
    a2: Point,
}

impl Side {
    pub fn new(a1: Point, a2: Point) -> Result<Side, GeomError> {
        match a1.cmp(&a2) {
            std::cmp::Ordering::Equal => Err(GeomError::IdenticalPoints),
            std::cmp::Ordering::Less => Ok(Side { a1, a2 }),
            std::cmp::Ordering::Greater => Ok(Side { a1: a2, a2: a1 }),
        }
    }

    pub fn points(&self) -> (&Point, &Point) {
        (&self.a1, &self.a2)
    }

    pub fn line(&self) -> Line {
        join(&self.a1, &self.a2).expect("side points are distinct")
    }

    pub fn is_null(&self) -> bool {
        self.line().is_null()
    }

    /// Contains a null point.
    pub fn is_nil(&self) -> bool {
        self.a1.is_null() || self.a2.is_null()
    }

    pub fn is_right(&self) -> bool {
        perpendicular_points(&self.a1, &self.a2)
    }

    pub fn dual(&self) -> Vertex {
        Vertex::new(self.a1.dual(), self.a2.dual()).unwrap()
    }
}

/// An unordered pair of distinct lines, stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vertex {
    l1: Line,
    l2: Line,
}

impl Vertex {
    pub fn new(l1: Line, l2: Line) -> Result<Vertex, GeomError> {
        match l1.cmp(&l2) {
            std::cmp::Ordering::Equal => Err(GeomError::IdenticalLines),
            std::cmp::Ordering::Less => Ok(Vertex { l1, l2 }),
            std::cmp::Ordering::Greater => Ok(Vertex { l1: l2, l2: l1 }),
        }
    }

    pub fn lines(&self) -> (&Line, &Line) {
        (&self.l1, &self.l2)
    }

    pub fn point(&self) -> Point {
        meet(&self.l1, &self.l2).expect("vertex lines are distinct")
    }

    pub fn is_null(&self) -> bool {
        self.point().is_null()
    }

    pub fn is_nil(&self) -> bool {
        self.l1.is_null() || self.l2.is_null()
    }

    pub fn is_right(&self) -> bool {
        perpendicular_lines(&self.l1, &self.l2)
    }

    pub fn dual(&self) -> Side {
        Side::new(self.l1.dual(), self.l2.dual()).unwrap()
    }
}

/// `(a₁a₂)^⊥ = a₁^⊥a₂^⊥`.
pub fn perpendicular_point(s: &Side) -> Point {
    s.line().dual()
}

/// `(L₁L₂)^⊥`.
pub fn perpendicular_line(v: &Vertex) -> Line {
    v.point().dual()
}

/// Opposite points `o₁ = (a₁a₂)a₁^⊥` and `o₂ = (a₁a₂)a₂^⊥`, in the order of
/// the given points.
pub fn opposite_points(a1: &Point, a2: &Point) -> Result<(Point, Point), GeomError> {
    let l = join(a1, a2)?;
    if l.is_null() {
        return Err(GeomError::NullSide);
    }
    let (v1, v2) = (a1.coords(), a2.coords());
    let b = bilinear(v1, v2);
    let o1 = Point::from_vec(sub_vec(&scale(v1, &b), &scale(v2, &form(v1))))?;
    let o2 = Point::from_vec(sub_vec(&scale(v1, &form(v2)), &scale(v2, &b)))?;
    Ok((o1, o2))
}

/// Opposite lines `O₁ = (L₁L₂)L₁^⊥` and `O₂ = (L₁L₂)L₂^⊥`.
pub fn opposite_lines(l1: &Line, l2: &Line) -> Result<(Line, Line), GeomError> {
    opposite_points(&l1.dual(), &l2.dual())
        .map(|(a, b)| (a.dual(), b.dual()))
        .map_err(|e| if e == GeomError::NullSide { GeomError::NullVertex } else { e })
}

/// A point and a line not through it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Couple {
    a: Point,
    l: Line,
}

impl Couple {
    pub fn new(a: Point, l: Line) -> Result<Couple, GeomError> {
        if a.lies_on(&l) {
            return Err(GeomError::Incident);
        }
        Ok(Couple { a, l })
    }

    pub fn point(&self) -> &Point {
        &self.a
    }

    pub fn line(&self) -> &Line {
        &self.l
    }

    /// `a^⊥ = L`.
    pub fn is_dual(&self) -> bool {
        self.a.dual() == self.l
    }

    pub fn is_null(&self) -> bool {
        self.a.is_null() || self.l.is_null()
    }

    /// The couple `L^⊥a^⊥`.
    pub fn dual(&self) -> Couple {
        Couple { a: self.l.dual(), l: self.a.dual() }
    }

    fn non_dual(&self) -> Result<(), GeomError> {
        if self.is_dual() {
            Err(GeomError::DualCouple)
        } else {
            Ok(())
        }
    }

    /// `N = aL^⊥`.
    pub fn altitude_line(&self) -> Result<Line, GeomError> {
        self.non_dual()?;
        join(&self.a, &self.l.dual())
    }

    /// `n = a^⊥L`.
    pub fn altitude_point(&self) -> Result<Point, GeomError> {
        self.non_dual()?;
        meet(&self.a.dual(), &self.l)
    }

    /// `R = a(a^⊥L)`.
    pub fn parallel_line(&self) -> Result<Line, GeomError> {
        join(&self.a, &self.altitude_point()?)
    }

    /// `r = a^⊥(aL^⊥)`.
    pub fn parallel_point(&self) -> Result<Point, GeomError> {
        meet(&self.a.dual(), &self.altitude_line()?)
    }

    /// `b = (aL^⊥)L`.
    pub fn base_point(&self) -> Result<Point, GeomError> {
        meet(&self.altitude_line()?, &self.l)
    }

    /// `B = (a^⊥L)L^⊥`.
    pub fn base_line(&self) -> Result<Line, GeomError> {
        join(&self.altitude_point()?, &self.l.dual())
    }
}

/// The two midpoints of the non-null side `a₁a₂`, in unspecified order.
/// They exist when the forms of the two points differ by a square factor; renormalizing `v₂` so
/// the forms agree, they are `[v₁ + v₂]` and `[v₁ − v₂]`.
pub fn midpoints(field: &Field, a1: &Point, a2: &Point) -> Result<(Point, Point), GeomError> {
    if a1 == a2 {
        return Err(GeomError::IdenticalPoints);
    }
    if join(a1, a2)?.is_null() {
        return Err(GeomError::NullSide);
    }
    let (f1, f2) = (a1.form(), a2.form());
    if f1.is_zero() || f2.is_zero() {
        return Err(GeomError::NullPoint);
    }
    let lambda = field.sqrt(&(&f1 / &f2)).map_err(|_| GeomError::NoMidpoint)?;
    let (v1, v2) = (a1.coords(), scale(a2.coords(), &lambda));
    let m1 = Point::from_vec(add_vec(v1, &v2))?;
    let m2 = Point::from_vec(sub_vec(v1, &v2))?;
    Ok((m1, m2))
}

/// Midlines of the vertex `L₁L₂`, dual to [`midpoints`].
pub fn midlines(field: &Field, l1: &Line, l2: &Line) -> Result<(Line, Line), GeomError> {
    midpoints(field, &l1.dual(), &l2.dual())
        .map(|(a, b)| (a.dual(), b.dual()))
        .map_err(|e| match e {
            GeomError::IdenticalPoints => GeomError::IdenticalLines,
            GeomError::NullSide => GeomError::NullVertex,
            e => e,
        })
}

/// Whether `p(a₁, a₂)` is a square, the midpoint criterion.
pub fn has_square_product(field: &Field, a1: &Point, a2: &Point) -> Option<bool> {
    product(a1, a2).value().map(|p| field.is_square(p))
}

/// Three non-collinear points, labelled `a₁, a₂, a₃`. Equality ignores the
/// labelling.
#[derive(Debug, Clone, Eq)]
pub struct Triangle {
    pts: [Point; 3],
}

impl Triangle {
    fn sorted(&self) -> [Point; 3] {
        let mut a = self.pts.clone();
        a.sort();
        a
    }
}

impl PartialEq for Triangle {
    fn eq(&self, other: &Triangle) -> bool {
        self.sorted() == other.sorted()
    }
}

impl Hash for Triangle {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.sorted().hash(h)
    }
}

impl Triangle {
    pub fn new(a1: Point, a2: Point, a3: Point) -> Result<Triangle, GeomError> {
        if collinear(&a1, &a2, &a3) {
            return Err(GeomError::Collinear);
        }
        Ok(Triangle { pts: [a1, a2, a3] })
    }

    pub fn points(&self) -> &[Point; 3] {
        &self.pts
    }

    /// `L₁ = a₂a₃`, `L₂ = a₁a₃`, `L₃ = a₁a₂`.
    pub fn lines(&self) -> [Line; 3] {
        let [a1, a2, a3] = &self.pts;
        [join(a2, a3).unwrap(), join(a1, a3).unwrap(), join(a1, a2).unwrap()]
    }

    /// The associated trilateral of lines.
    pub fn trilateral(&self) -> Trilateral {
        let [l1, l2, l3] = self.lines();
        Trilateral { lines: [l1, l2, l3] }
    }

    /// The dual trilateral `a₁^⊥a₂^⊥a₃^⊥`.
    pub fn dual(&self) -> Trilateral {
        let [a1, a2, a3] = &self.pts;
        Trilateral { lines: [a1.dual(), a2.dual(), a3.dual()] }
    }

    pub fn sides(&self) -> [Side; 3] {
        let [a1, a2, a3] = &self.pts;
        [
            Side::new(a2.clone(), a3.clone()).unwrap(),
            Side::new(a1.clone(), a3.clone()).unwrap(),
            Side::new(a1.clone(), a2.clone()).unwrap(),
        ]
    }

    /// Vertices at `a₁`, `a₂`, `a₃`.
    pub fn vertices(&self) -> [Vertex; 3] {
        let [l1, l2, l3] = self.lines();
        [
            Vertex::new(l2.clone(), l3.clone()).unwrap(),
            Vertex::new(l1.clone(), l3).unwrap(),
            Vertex::new(l1, l2).unwrap(),
        ]
    }

    pub fn couples(&self) -> [Couple; 3] {
        let ls = self.lines();
        [0, 1, 2].map(|i| Couple::new(self.pts[i].clone(), ls[i].clone()).unwrap())
    }
}

/// Three non-concurrent lines, labelled `L₁, L₂, L₃`.
#[derive(Debug, Clone, Eq)]
pub struct Trilateral {
    lines: [Line; 3],
}

impl Trilateral {
    fn sorted(&self) -> [Line; 3] {
        let mut a = self.lines.clone();
        a.sort();
        a
    }
}

impl PartialEq for Trilateral {
    fn eq(&self, other: &Trilateral) -> bool {
        self.sorted() == other.sorted()
    }
}

impl Hash for Trilateral {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.sorted().hash(h)
    }
}

impl Trilateral {
    pub fn new(l1: Line, l2: Line, l3: Line) -> Result<Trilateral, GeomError> {
        if concurrent(&l1, &l2, &l3) {
            return Err(GeomError::Concurrent);
        }
        Ok(Trilateral { lines: [l1, l2, l3] })
    }

    pub fn lines(&self) -> &[Line; 3] {
        &self.lines
    }

    /// `a₁ = L₂L₃`, `a₂ = L₁L₃`, `a₃ = L₁L₂`.
    pub fn points(&self) -> [Point; 3] {
        let [l1, l2, l3] = &self.lines;
        [meet(l2, l3).unwrap(), meet(l1, l3).unwrap(), meet(l1, l2).unwrap()]
    }

    pub fn triangle(&self) -> Triangle {
        Triangle { pts: self.points() }
    }

    pub fn dual(&self) -> Triangle {
        let [l1, l2, l3] = &self.lines;
        Triangle { pts: [l1.dual(), l2.dual(), l3.dual()] }
    }

    /// Vertices `L₂L₃`, `L₁L₃`, `L₁L₂`.
    pub fn vertices(&self) -> [Vertex; 3] {
        let [l1, l2, l3] = &self.lines;
        [
            Vertex::new(l2.clone(), l3.clone()).unwrap(),
            Vertex::new(l1.clone(), l3.clone()).unwrap(),
            Vertex::new(l1.clone(), l2.clone()).unwrap(),
        ]
    }

    pub fn sides(&self) -> [Side; 3] {
        let [a1, a2, a3] = self.points();
        [
            Side::new(a2.clone(), a3.clone()).unwrap(),
            Side::new(a1.clone(), a3).unwrap(),
            Side::new(a1, a2).unwrap(),
        ]
    }

    pub fn couples(&self) -> [Couple; 3] {
        let ps = self.points();
        [0, 1, 2].map(|i| Couple::new(ps[i].clone(), self.lines[i].clone()).unwrap())
    }
}

/// Counts of null lines, null points and right vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct Classification {
    pub null: u8,
    pub nil: u8,
    pub right: u8,
}

pub fn classify_triangle(t: &Triangle) -> Classification {
    let null = t.lines().iter().filter(|l| l.is_null()).count() as u8;
    let nil = t.points().iter().filter(|a| a.is_null()).count() as u8;
    let right = t.vertices().iter().filter(|v| v.is_right()).count() as u8;
    Classification { null, nil, right }
}

/// Counts of null points, null lines and right sides.
pub fn classify_trilateral(t: &Trilateral) -> Classification {
    let null = t.points().iter().filter(|a| a.is_null()).count() as u8;
    let nil = t.lines().iter().filter(|l| l.is_null()).count() as u8;
    let right = t.sides().iter().filter(|s| s.is_right()).count() as u8;
    Classification { null, nil, right }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum PointClass {
    Internal,
    Null,
    External,
}

/// Null points are `Null`; otherwise `External` when null lines pass
/// through the point and `Internal` when none do.
pub fn classify_point(field: &Field, a: &Point) -> PointClass {
    if a.is_null() {
        PointClass::Null
    } else if null_lines_through_point(field, a).is_empty() {
        PointClass::Internal
    } else {
        PointClass::External
    }
}

/// `q(a₁,m) = q(a₂,m)`, the defining property of a midpoint.
pub fn is_midpoint(a1: &Point, a2: &Point, m: &Point) -> bool {
    let on = crate::projective::lies_on(m, &match join(a1, a2) {
        Ok(l) => l,
        Err(_) => return false,
    });
    let (q1, q2) = (quadrance(a1, m), quadrance(a2, m));
    on && !q1.is_undefined() && q1 == q2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Scalar;
    use crate::projective::all_points;

    fn q() -> Field {
        Field::rationals()
    }

    #[test]
    fn relabelled_triangles_hash_alike() {
        use std::collections::HashSet;
        let f = q();
        let p = |x, y, z| Point::ints(&f, x, y, z).unwrap();
        let t = Triangle::new(p(1, 0, 3), p(0, 1, 2), p(0, 0, 1)).unwrap();
        let u = Triangle::new(p(0, 0, 1), p(1, 0, 3), p(0, 1, 2)).unwrap();
        assert_eq!(t, u);
        assert_eq!(HashSet::from([t.clone(), u]).len(), 1);
        assert_eq!(HashSet::from([t.trilateral(), t.dual()]).len(), 2);
    }

    #[test]
    fn perpendicular_point_example() {
        let (x, y) = (Scalar::rational(2, 3), Scalar::rational(5, 7));
        let f = q();
        let a1 = Point::new(x.clone(), f.zero(), f.one()).unwrap();
        let a2 = Point::new(f.zero(), y.clone(), f.one()).unwrap();
        let s = Side::new(a1, a2).unwrap();
        assert_eq!(perpendicular_point(&s), Point::new(y.clone(), x.clone(), &x * &y).unwrap());
        let v = Vertex::new(Line::ints(&f, 1, 2, 0).unwrap(), Line::ints(&f, 3, -1, 0).unwrap()).unwrap();
        assert_eq!(perpendicular_line(&v), Line::ints(&f, 0, 0, 1).unwrap());
    }

    #[test]
    fn opposite_points_example() {
        let (x, y) = (Scalar::rational(2, 3), Scalar::rational(5, 7));
        let f = q();
        let a1 = Point::new(x.clone(), f.zero(), f.one()).unwrap();
        let a2 = Point::new(f.zero(), y.clone(), f.one()).unwrap();
        let (o1, o2) = opposite_points(&a1, &a2).unwrap();
        assert_eq!(o1, Point::new(x.clone(), &y * (x.sq() - 1), x.sq()).unwrap());
        assert_eq!(o2, Point::new(&x * (y.sq() - 1), y.clone(), y.sq()).unwrap());
        let (l1, l2) = (Line::ints(&f, 2, 3, 0).unwrap(), Line::ints(&f, -1, 4, 0).unwrap());
        let (p1, p2) = opposite_lines(&l1, &l2).unwrap();
        assert_eq!(p1, Line::ints(&f, -3, 2, 0).unwrap());
        assert_eq!(p2, Line::ints(&f, -4, -1, 0).unwrap());
    }

    #[test]
    fn opposite_points_properties() {
        let f = q();
        let n = Point::ints(&f, 3, 4, 5).unwrap();
        let a = Point::ints(&f, 0, 0, 1).unwrap();
        let (o1, o2) = opposite_points(&n, &a).unwrap();
        assert_eq!(o1, n);
        assert!(perpendicular_points(&a, &o2));
        let (a1, a2) = (Point::ints(&f, 1, 2, 7).unwrap(), Point::ints(&f, -2, 1, 4).unwrap());
        let (o1, o2) = opposite_points(&a1, &a2).unwrap();
        let s = join(&a1, &a2).unwrap();
        assert!(o1.lies_on(&s) && o2.lies_on(&s));
        assert!(perpendicular_points(&a1, &o1) && perpendicular_points(&a2, &o2));
        assert_eq!(opposite_points(&o1, &o2).unwrap(), (a1, a2));
        let null_side = (Point::ints(&f, 1, 0, 1).unwrap(), Point::ints(&f, 1, 1, 1).unwrap());
        assert_eq!(opposite_points(&null_side.0, &null_side.1), Err(GeomError::NullSide));
    }

    #[test]
    fn couple_constructions_are_consistent() {
        let f = q();
        let a = Point::ints(&f, 1, 2, 7).unwrap();
        let l = Line::ints(&f, 3, -1, 4).unwrap();
        let c = Couple::new(a.clone(), l.clone()).unwrap();
        let n_line = c.altitude_line().unwrap();
        let b = c.base_point().unwrap();
        assert!(b.lies_on(&l) && b.lies_on(&n_line));
        let r = c.parallel_line().unwrap();
        assert!(a.lies_on(&r) && perpendicular_lines(&r, &n_line));
        assert_eq!(c.altitude_line().unwrap().dual(), c.altitude_point().unwrap());
        assert_eq!(c.base_point().unwrap().dual(), c.base_line().unwrap());
        assert_eq!(c.parallel_line().unwrap().dual(), c.parallel_point().unwrap());
        let d = c.dual();
        assert_eq!(d.altitude_line().unwrap(), n_line);
        assert_eq!(d.parallel_line().unwrap(), c.base_line().unwrap());
        let dual = Couple::new(Point::ints(&f, 0, 0, 1).unwrap(), Line::ints(&f, 0, 0, 1).unwrap()).unwrap();
        assert_eq!(dual.altitude_line(), Err(GeomError::DualCouple));
        assert_eq!(Couple::new(a.clone(), a.dual()).map(|_| ()), Ok(()));
    }

    #[test]
    fn symmetric_side_midpoints() {
        let f = q();
        let x = Scalar::rational(1, 3);
        let a1 = Point::new(x.clone(), f.zero(), f.one()).unwrap();
        let a2 = Point::new(-&x, f.zero(), f.one()).unwrap();
        let (m1, m2) = midpoints(&f, &a1, &a2).unwrap();
        let mut got = vec![m1, m2];
        got.sort();
        let mut want = vec![Point::ints(&f, 0, 0, 1).unwrap(), Point::ints(&f, 1, 0, 0).unwrap()];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn midpoints_match_brute_force_f13() {
        let f = Field::prime(13).unwrap();
        let pts: Vec<Point> = all_points(&f).unwrap().into_iter().filter(|a| !a.is_null()).collect();
        let all = all_points(&f).unwrap();
        for (i, a1) in pts.iter().enumerate() {
            for a2 in pts.iter().skip(i + 1).step_by(3) {
                if join(a1, a2).unwrap().is_null() {
                    continue;
                }
                let brute: Vec<&Point> = all.iter().filter(|m| is_midpoint(a1, a2, m)).collect();
                match midpoints(&f, a1, a2) {
                    Ok((m1, m2)) => {
                        assert!(perpendicular_points(&m1, &m2));
                        assert!(is_midpoint(a1, a2, &m1) && is_midpoint(a1, a2, &m2));
                        let p = product(a1, a2).into_value().unwrap();
                        assert!(f.is_square(&p));
                        let mut b: Vec<Point> = brute.into_iter().cloned().collect();
                        b.retain(|m| !m.is_null());
                        assert!(b.contains(&m1) && b.contains(&m2));
                    }
                    Err(e) => {
                        assert_eq!(e, GeomError::NoMidpoint);
                        assert!(brute.iter().all(|m| m.is_null()), "{a1} {a2}");
                    }
                }
            }
        }
    }

    #[test]
    fn fully_null_example() {
        let f = q();
        let (t, u) = (f.int(2), f.int(5));
        let s = t.sq() + u.sq();
        let d = t.sq() - u.sq();
        let tu = 2 * (&t * &u);
        let a1 = Point::new(s.clone(), f.zero(), d.clone()).unwrap();
        let a2 = Point::new(f.zero(), s.clone(), tu.clone()).unwrap();
        let a3 = Point::new(tu, d, f.zero()).unwrap();
        let tri = Triangle::new(a1, a2, a3).unwrap();
        assert_eq!(classify_triangle(&tri).null, 3);
    }

    #[test]
    fn point_classes() {
        let f = q();
        assert_eq!(classify_point(&f, &Point::ints(&f, 0, 0, 1).unwrap()), PointClass::Internal);
        assert_eq!(classify_point(&f, &Point::ints(&f, 1, 0, 0).unwrap()), PointClass::External);
        assert_eq!(classify_point(&f, &Point::ints(&f, 3, 4, 5).unwrap()), PointClass::Null);
    }

    #[test]
    fn triangle_duality() {
        let f = q();
        let t = Triangle::new(
            Point::ints(&f, 1, 2, 7).unwrap(),
            Point::ints(&f, -3, 1, 5).unwrap(),
            Point::ints(&f, 0, 4, 9).unwrap(),
        )
        .unwrap();
        let d = t.dual();
        for (s, v) in t.sides().iter().zip(d.vertices().iter()) {
            assert_eq!(&s.dual(), v);
        }
        for (l, p) in t.lines().iter().zip(d.points().iter()) {
            assert_eq!(&l.dual(), p);
        }
        for (c, e) in t.couples().iter().zip(d.couples().iter()) {
            assert_eq!(&c.dual(), e);
        }
        assert_eq!(d.dual(), t);
    }
}
