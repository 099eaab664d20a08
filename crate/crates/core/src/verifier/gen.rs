use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{new_rng, Kind, Obj};
use crate::field::{Field, Scalar};
use crate::nullkernel::null_point;
use crate::projective::{add_vec, bilinear, form, hcross, scale, sub_vec, Line, Point, Proportion2, Vec3};

/// Seeded source of random configurations over one field.
pub struct Gen<'a> {
    pub field: &'a Field,
    pub bound: u64,
    pub rng: ChaCha8Rng,
}

impl<'a> Gen<'a> {
    pub fn new(field: &'a Field, bound: u64, seed: u64) -> Gen<'a> {
        Gen { field, bound, rng: new_rng(seed) }
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen()
    }

    pub fn scalar(&mut self) -> Scalar {
        self.field.sample(self.bound, &mut self.rng)
    }

    pub fn nonzero(&mut self) -> Scalar {
        self.field.sample_nonzero(self.bound, &mut self.rng)
    }

    pub fn vec3(&mut self) -> Vec3 {
        loop {
            let v = [self.scalar(), self.scalar(), self.scalar()];
            if v.iter().any(|c| !c.is_zero()) {
                return v;
            }
        }
    }

    /// Integer coordinates in `[-bound, bound]`.
    fn int_vec3(&mut self) -> Vec3 {
        let b = self.bound.max(1) as i64;
        [0; 3].map(|_| self.field.int(self.rng.gen_range(-b..=b)))
    }

    pub fn point(&mut self) -> Point {
        Point::from_vec(self.vec3()).unwrap()
    }

    pub fn line(&mut self) -> Line {
        Line::from_vec(self.vec3()).unwrap()
    }

    pub fn param(&mut self) -> Proportion2 {
        loop {
            if let Ok(p) = Proportion2::new(self.scalar(), self.scalar()) {
                return p;
            }
        }
    }

    pub fn null_point(&mut self) -> Point {
        null_point(&self.param())
    }

    pub fn non_null_point(&mut self) -> Point {
        loop {
            let a = self.point();
            if !a.is_null() {
                return a;
            }
        }
    }

    /// A random point on `l`: its meet with a random line.
    pub fn point_on(&mut self, l: &Line) -> Point {
        loop {
            if let Ok(a) = Point::from_vec(hcross(l.coords(), &self.vec3())) {
                return a;
            }
        }
    }

    /// A random line through `a`.
    pub fn line_through(&mut self, a: &Point) -> Line {
        loop {
            if let Ok(l) = Line::from_vec(hcross(a.coords(), &self.vec3())) {
                return l;
            }
        }
    }

    /// Independent draws for each kind in the domain.
    pub fn draw(&mut self, domain: &[Kind]) -> Vec<Obj> {
        domain
            .iter()
            .map(|k| match k {
                Kind::Point => Obj::Point(self.point()),
                Kind::Line => Obj::Line(self.line()),
                Kind::Null => Obj::Null(self.param()),
                Kind::Param => Obj::Param(self.param()),
                Kind::Scalar => Obj::Scalar(self.scalar()),
            })
            .collect()
    }
}

/// `v − 2(v·c)/(c·c)·c`: the reflection in the line `c^⊥`, which is also
/// the half turn about `c`. Needs `c` non-null.
pub fn reflect(a: &Point, c: &Point) -> Point {
    let (v, w) = (a.coords(), c.coords());
    let k = 2 * bilinear(v, w) / form(w);
    Point::from_vec(sub_vec(v, &scale(w, &k))).expect("reflection is invertible")
}

impl Gen<'_> {
    /// A triangle right at `a₃`.
    pub fn right_triangle(&mut self) -> Option<[Point; 3]> {
        let a3 = self.point();
        let l2 = self.line_through(&a3);
        let a1 = self.point_on(&l2);
        let l1 = crate::projective::join(&a3, &l2.dual()).ok()?;
        let a2 = self.point_on(&l1);
        Some([a1, a2, a3])
    }

    /// A triangle with `q₁ = q₂`: `a₃` on the mirror `c^⊥` and `a₂` the
    /// reflection of `a₁`.
    pub fn isosceles(&mut self) -> Option<[Point; 3]> {
        let c = self.non_null_point();
        let a3 = self.point_on(&c.dual());
        let a1 = self.point();
        let a2 = reflect(&a1, &c);
        Some([a1, a2, a3])
    }

    /// An equilateral triangle: a point and its images under a rotation
    /// composed of reflections in two mirrors with spread `3/4`.
    pub fn equilateral(&mut self) -> Option<[Point; 3]> {
        let f = self.field;
        // In an extension a generic 3f₁/f_o is almost never a square, so the
        // centre and first mirror come from the prime subfield there.
        let integral = matches!(f, Field::Extension(_));
        for _ in 0..64 {
            let (o, m1) = if integral {
                let (o, v) = (self.int_vec3(), self.int_vec3());
                let Ok(o) = Point::from_vec(o) else { continue };
                let Ok(m1) = Line::from_vec(hcross(o.coords(), &v)) else { continue };
                (o, m1)
            } else {
                let o = self.non_null_point();
                let m1 = self.line_through(&o);
                (o, m1)
            };
            if o.is_null() {
                continue;
            }
            if m1.is_null() {
                continue;
            }
            let Ok(perp) = crate::projective::join(&o, &m1.dual()) else { continue };
            let (f1, fo) = (m1.form(), perp.form());
            if fo.is_zero() {
                continue;
            }
            let Ok(t) = f.sqrt(&(3 * &f1 / &fo)) else { continue };
            // c₂ is dual to the second mirror m₁ + t·perp.
            let Ok(c2) = Point::from_vec(add_vec(m1.coords(), &scale(perp.coords(), &t))) else { continue };
            if c2.is_null() {
                continue;
            }
            let c1 = m1.dual();
            let a1 = self.point();
            let a2 = reflect(&reflect(&a1, &c1), &c2);
            let a3 = reflect(&reflect(&a2, &c1), &c2);
            return Some([a1, a2, a3]);
        }
        None
    }
}
