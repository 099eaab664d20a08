//! Exact scalar fields: rationals, odd prime fields, and quadratic extension
//! towers built over either.
//!
//! A [`Scalar`] carries enough context (the prime, or the adjoined `d`) to do
//! arithmetic on its own, so formulas can be written with ordinary operators.
//! A [`Field`] is needed only for things that depend on the whole field:
//! square roots, sampling, enumeration and parsing.
//!
//! Extension elements whose `√d` coefficient is zero are stored as the base
//! element, so structural equality is field equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use thiserror::Error;

/// Default cap on the number of adjoined square roots.
pub const DEFAULT_MAX_DEPTH: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("characteristic two is not supported")]
    CharacteristicTwo,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is already a square in the base field")]
    RedundantExtension(String),
    #[error("extension tower deeper than {0}")]
    TowerTooDeep(usize),
    #[error("not a square in this field")]
    NonSquare,
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse `{0}`")]
    Parse(String),
}

/// Residue modulo an odd prime, stored in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    v: u64,
    p: u64,
}

impl Fp {
    pub fn new(v: i128, p: u64) -> Fp {
        Fp { v: v.rem_euclid(p as i128) as u64, p }
    }

    pub fn value(&self) -> u64 {
        self.v
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn add(self, o: Fp) -> Fp {
        let s = self.v as u128 + o.v as u128;
        Fp { v: (s % self.p as u128) as u64, p: self.p }
    }

    fn sub(self, o: Fp) -> Fp {
        let s = self.v as u128 + (self.p - o.v) as u128;
        Fp { v: (s % self.p as u128) as u64, p: self.p }
    }

    fn mul(self, o: Fp) -> Fp {
        Fp { v: mulmod(self.v, o.v, self.p), p: self.p }
    }

    fn neg(self) -> Fp {
        Fp { v: if self.v == 0 { 0 } else { self.p - self.v }, p: self.p }
    }

    fn pow(self, e: u64) -> Fp {
        Fp { v: powmod(self.v, e, self.p), p: self.p }
    }

    fn inv(self) -> Option<Fp> {
        if self.v == 0 {
            None
        } else {
            Some(self.pow(self.p - 2))
        }
    }
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, b, m);
        }
        b = mulmod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Tonelli-Shanks. Returns the root in `[0, (p-1)/2]`.
fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if powmod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    let mut q = p - 1;
    let mut s = 0u32;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    let mut z = 2;
    while powmod(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = powmod(z, q, p);
    let mut t = powmod(a, q, p);
    let mut r = powmod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mulmod(t2, t2, p);
            i += 1;
        }
        let b = powmod(c, 1 << (m - i - 1), p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    Some(r.min(p - r))
}

/// `a + b·√d` with `b ≠ 0`; `a`, `b`, `d` live in the field one level down.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtElem {
    level: u8,
    a: Scalar,
    b: Scalar,
    d: Scalar,
}

/// An element of some field. Arithmetic between elements of different
/// fields panics; elements of a tower mix freely with elements of its
/// subfields.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Fp(Fp),
    Ext(Arc<ExtElem>),
}

impl Scalar {
    pub fn rational(n: i64, d: i64) -> Scalar {
        Scalar::Rat(BigRational::new(n.into(), d.into()))
    }

    pub fn integer(n: i64) -> Scalar {
        Scalar::Rat(BigRational::from_integer(n.into()))
    }

    fn ext(level: u8, a: Scalar, b: Scalar, d: Scalar) -> Scalar {
        if b.is_zero() {
            a
        } else {
            Scalar::Ext(Arc::new(ExtElem { level, a, b, d }))
        }
    }

    /// Components `(a, b, d)` of an extension element, if this is one.
    pub fn ext_parts(&self) -> Option<(&Scalar, &Scalar, &Scalar)> {
        match self {
            Scalar::Ext(e) => Some((&e.a, &e.b, &e.d)),
            _ => None,
        }
    }

    fn level(&self) -> u8 {
        match self {
            Scalar::Ext(e) => e.level,
            _ => 0,
        }
    }

    fn ground(&self) -> &Scalar {
        match self {
            Scalar::Ext(e) => e.a.ground(),
            s => s,
        }
    }

    /// The integer `n` in the prime subfield this element belongs to.
    pub fn from_int_like(&self, n: i64) -> Scalar {
        match self.ground() {
            Scalar::Fp(x) => Scalar::Fp(Fp::new(n as i128, x.p)),
            _ => Scalar::integer(n),
        }
    }

    pub fn zero_like(&self) -> Scalar {
        self.from_int_like(0)
    }

    pub fn one_like(&self) -> Scalar {
        self.from_int_like(1)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp(x) => x.v == 0,
            Scalar::Ext(_) => false,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp(x) => x.v == 1,
            Scalar::Ext(_) => false,
        }
    }

    fn split(&self, level: u8) -> (Scalar, Scalar) {
        match self {
            Scalar::Ext(e) if e.level == level => (e.a.clone(), e.b.clone()),
            s => (s.clone(), s.zero_like()),
        }
    }

    fn top_d(x: &Scalar, y: &Scalar, level: u8) -> Scalar {
        match (x, y) {
            (Scalar::Ext(e1), Scalar::Ext(e2)) if e1.level == level && e2.level == level => {
                assert!(e1.d == e2.d, "mixing elements of different extension fields");
                e1.d.clone()
            }
            (Scalar::Ext(e), _) if e.level == level => e.d.clone(),
            (_, Scalar::Ext(e)) if e.level == level => e.d.clone(),
            _ => unreachable!(),
        }
    }

    fn add_ref(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp(a), Scalar::Fp(b)) => {
                check_same_prime(a, b);
                Scalar::Fp(a.add(*b))
            }
            _ => {
                let l = self.level().max(o.level());
                check_compatible(self, o);
                let d = Scalar::top_d(self, o, l);
                let (a1, b1) = self.split(l);
                let (a2, b2) = o.split(l);
                Scalar::ext(l, a1.add_ref(&a2), b1.add_ref(&b2), d)
            }
        }
    }

    fn sub_ref(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            (Scalar::Fp(a), Scalar::Fp(b)) => {
                check_same_prime(a, b);
                Scalar::Fp(a.sub(*b))
            }
            _ => self.add_ref(&o.neg_ref()),
        }
    }

    fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fp(a) => Scalar::Fp(a.neg()),
            Scalar::Ext(e) => Scalar::ext(e.level, e.a.neg_ref(), e.b.neg_ref(), e.d.clone()),
        }
    }

    fn mul_ref(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp(a), Scalar::Fp(b)) => {
                check_same_prime(a, b);
                Scalar::Fp(a.mul(*b))
            }
            _ => {
                let l = self.level().max(o.level());
                check_compatible(self, o);
                let d = Scalar::top_d(self, o, l);
                let (a1, b1) = self.split(l);
                let (a2, b2) = o.split(l);
                let a = a1.mul_ref(&a2).add_ref(&d.mul_ref(&b1.mul_ref(&b2)));
                let b = a1.mul_ref(&b2).add_ref(&a2.mul_ref(&b1));
                Scalar::ext(l, a, b, d)
            }
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rat(a) => {
                if a.is_zero() {
                    None
                } else {
                    Some(Scalar::Rat(a.recip()))
                }
            }
            Scalar::Fp(a) => a.inv().map(Scalar::Fp),
            Scalar::Ext(e) => {
                let norm = e.a.mul_ref(&e.a).sub_ref(&e.d.mul_ref(&e.b.mul_ref(&e.b)));
                let ni = norm.inv()?;
                Some(Scalar::ext(
                    e.level,
                    e.a.mul_ref(&ni),
                    e.b.neg_ref().mul_ref(&ni),
                    e.d.clone(),
                ))
            }
        }
    }

    pub fn checked_div(&self, o: &Scalar) -> Option<Scalar> {
        o.inv().map(|i| self.mul_ref(&i))
    }

    pub fn sq(&self) -> Scalar {
        self.mul_ref(self)
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut r = self.one_like();
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul_ref(&b);
            }
            b = b.mul_ref(&b);
            e >>= 1;
        }
        r
    }

    /// True for the representative chosen as the canonical square root
    /// among `±r`.
    fn is_canonical_root(&self) -> bool {
        match self {
            Scalar::Rat(r) => !r.is_negative(),
            Scalar::Fp(x) => x.v <= (x.p - 1) / 2,
            Scalar::Ext(e) => {
                if e.a.is_zero() {
                    e.b.is_canonical_root()
                } else {
                    e.a.is_canonical_root()
                }
            }
        }
    }

    /// Numerator and denominator, for rational scalars.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            _ => None,
        }
    }

    fn is_negative_rational(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_negative())
    }
}

fn check_same_prime(a: &Fp, b: &Fp) {
    assert!(a.p == b.p, "mixing residues mod {} and mod {}", a.p, b.p);
}

fn check_compatible(x: &Scalar, y: &Scalar) {
    let kind = |s: &Scalar| match s.ground() {
        Scalar::Fp(f) => f.p,
        _ => 0,
    };
    assert!(kind(x) == kind(y), "mixing scalars of different fields");
}

impl Ord for Scalar {
    fn cmp(&self, other: &Scalar) -> Ordering {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a.cmp(b),
            (Scalar::Fp(a), Scalar::Fp(b)) => (a.p, a.v).cmp(&(b.p, b.v)),
            (Scalar::Ext(a), Scalar::Ext(b)) => a
                .level
                .cmp(&b.level)
                .then_with(|| a.d.cmp(&b.d))
                .then_with(|| a.a.cmp(&b.a))
                .then_with(|| a.b.cmp(&b.b)),
            (Scalar::Ext(_), _) => Ordering::Greater,
            (_, Scalar::Ext(_)) => Ordering::Less,
            (Scalar::Rat(_), Scalar::Fp(_)) => Ordering::Less,
            (Scalar::Fp(_), Scalar::Rat(_)) => Ordering::Greater,
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Scalar) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp(x) => write!(f, "{}", x.v),
            Scalar::Ext(e) => {
                let root = format!("sqrt({})", e.d);
                let coeff = |b: &Scalar| -> String {
                    if b.is_one() {
                        root.clone()
                    } else if matches!(b, Scalar::Ext(_)) {
                        format!("({})*{}", b, root)
                    } else {
                        format!("{}*{}", b, root)
                    }
                };
                if e.a.is_zero() {
                    if e.b.neg_ref().is_one() {
                        return write!(f, "-{}", root);
                    }
                    return write!(f, "{}", coeff(&e.b));
                }
                let a = if matches!(e.a, Scalar::Ext(_)) {
                    format!("({})", e.a)
                } else {
                    e.a.to_string()
                };
                if e.b.is_negative_rational() {
                    let nb = e.b.neg_ref();
                    write!(f, "{}-{}", a, coeff(&nb))
                } else {
                    write!(f, "{}+{}", a, coeff(&e.b))
                }
            }
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $inner:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                self.$inner(o)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$inner(&o)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                self.$inner(o)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$inner(&o)
            }
        }
        impl $tr<i64> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: i64) -> Scalar {
                self.$inner(&self.from_int_like(o))
            }
        }
        impl $tr<i64> for Scalar {
            type Output = Scalar;
            fn $m(self, o: i64) -> Scalar {
                self.$inner(&self.from_int_like(o))
            }
        }
        impl $tr<&Scalar> for i64 {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                o.from_int_like(self).$inner(o)
            }
        }
        impl $tr<Scalar> for i64 {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                o.from_int_like(self).$inner(&o)
            }
        }
    };
}

binop!(Add, add, add_ref);
binop!(Sub, sub, sub_ref);
binop!(Mul, mul, mul_ref);
binop!(Div, div, div_ref);

impl Scalar {
    fn div_ref(&self, o: &Scalar) -> Scalar {
        self.checked_div(o).expect("division by zero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

/// Description of a field, as written on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
    Extension { base: Box<FieldSpec>, d: BigInt },
}

impl FieldSpec {
    /// Parses `Q`, `Fp=<p>`, `Q[sqrt=<d1>,<d2>,...]` or `Fp=<p>[sqrt=...]`.
    pub fn parse(s: &str) -> Result<FieldSpec, FieldError> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = || FieldError::Parse(s.to_string());
        let (head, tower) = match t.find('[') {
            Some(i) => {
                let rest = t[i..].strip_prefix("[sqrt=").ok_or_else(err)?;
                let rest = rest.strip_suffix(']').ok_or_else(err)?;
                (&t[..i], Some(rest))
            }
            None => (t.as_str(), None),
        };
        let mut spec = if head == "Q" {
            FieldSpec::Rationals
        } else if let Some(p) = head.strip_prefix("Fp=") {
            FieldSpec::PrimeField(p.parse().map_err(|_| err())?)
        } else {
            return Err(err());
        };
        if let Some(list) = tower {
            for part in list.split(',') {
                let d: BigInt = part.parse().map_err(|_| err())?;
                spec = FieldSpec::Extension { base: Box::new(spec), d };
            }
        }
        Ok(spec)
    }

    fn roots(&self) -> (String, Vec<String>) {
        match self {
            FieldSpec::Rationals => ("Q".into(), vec![]),
            FieldSpec::PrimeField(p) => (format!("Fp={p}"), vec![]),
            FieldSpec::Extension { base, d } => {
                let (h, mut v) = base.roots();
                v.push(d.to_string());
                (h, v)
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (head, roots) = self.roots();
        if roots.is_empty() {
            write!(f, "{head}")
        } else {
            write!(f, "{head}[sqrt={}]", roots.join(","))
        }
    }
}

#[derive(Debug, PartialEq, Eq)]
pub struct ExtField {
    base: Field,
    d: Scalar,
    level: u8,
}

/// A realized field: cheap to clone, immutable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Field {
    Rationals,
    Prime(u64),
    Extension(Arc<ExtField>),
}

/// Builds a field with the default tower depth cap.
pub fn make_field(spec: &FieldSpec) -> Result<Field, FieldError> {
    make_field_with_depth(spec, DEFAULT_MAX_DEPTH)
}

pub fn make_field_with_depth(spec: &FieldSpec, max_depth: usize) -> Result<Field, FieldError> {
    match spec {
        FieldSpec::Rationals => Ok(Field::Rationals),
        FieldSpec::PrimeField(p) => {
            if *p == 2 {
                Err(FieldError::CharacteristicTwo)
            } else if !is_prime(*p) {
                Err(FieldError::NotPrime(*p))
            } else {
                Ok(Field::Prime(*p))
            }
        }
        FieldSpec::Extension { base, d } => {
            let base = make_field_with_depth(base, max_depth)?;
            let level = base.depth() + 1;
            if level > max_depth {
                return Err(FieldError::TowerTooDeep(max_depth));
            }
            let d = base.from_bigint(d);
            if base.is_square(&d) {
                return Err(FieldError::RedundantExtension(d.to_string()));
            }
            Ok(Field::Extension(Arc::new(ExtField { base, d, level: level as u8 })))
        }
    }
}

impl Field {
    pub fn rationals() -> Field {
        Field::Rationals
    }

    pub fn prime(p: u64) -> Result<Field, FieldError> {
        make_field(&FieldSpec::PrimeField(p))
    }

    /// Adjoins `√d` to `self`.
    pub fn extend(&self, d: i64) -> Result<Field, FieldError> {
        make_field(&FieldSpec::Extension { base: Box::new(self.spec()), d: d.into() })
    }

    pub fn parse(s: &str) -> Result<Field, FieldError> {
        make_field(&FieldSpec::parse(s)?)
    }

    pub fn spec(&self) -> FieldSpec {
        match self {
            Field::Rationals => FieldSpec::Rationals,
            Field::Prime(p) => FieldSpec::PrimeField(*p),
            Field::Extension(e) => FieldSpec::Extension {
                base: Box::new(e.base.spec()),
                d: e.d.as_rational().map(|r| r.to_integer()).unwrap_or_else(|| match &e.d {
                    Scalar::Fp(x) => x.v.into(),
                    _ => unreachable!("extension parameters are integers"),
                }),
            },
        }
    }

    fn depth(&self) -> usize {
        match self {
            Field::Extension(e) => e.level as usize,
            _ => 0,
        }
    }

    /// 0 for fields containing the rationals, otherwise the prime.
    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
            Field::Extension(e) => e.base.characteristic(),
        }
    }

    /// Number of elements for finite fields.
    pub fn order(&self) -> Option<u64> {
        match self {
            Field::Rationals => None,
            Field::Prime(p) => Some(*p),
            Field::Extension(e) => e.base.order().map(|q| q * q),
        }
    }

    pub fn int(&self, n: i64) -> Scalar {
        match self.characteristic() {
            0 => Scalar::integer(n),
            p => Scalar::Fp(Fp::new(n as i128, p)),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.int(0)
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self.characteristic() {
            0 => Scalar::Rat(BigRational::from_integer(n.clone())),
            p => {
                let r = n.mod_floor(&BigInt::from(p));
                Scalar::Fp(Fp { v: r.to_u64().unwrap(), p })
            }
        }
    }

    /// `n/d` mapped into the field; fails if `d` vanishes here.
    pub fn ratio(&self, n: i64, d: i64) -> Result<Scalar, FieldError> {
        self.int(n).checked_div(&self.int(d)).ok_or(FieldError::DivisionByZero)
    }

    /// The generator `√d` of the outermost extension.
    pub fn generator(&self) -> Option<Scalar> {
        match self {
            Field::Extension(e) => Some(Scalar::ext(
                e.level,
                e.base.zero(),
                e.base.one(),
                e.d.clone(),
            )),
            _ => None,
        }
    }

    /// Whether `x` belongs to this field.
    pub fn contains(&self, x: &Scalar) -> bool {
        match (self, x) {
            (Field::Rationals, Scalar::Rat(_)) => true,
            (Field::Prime(p), Scalar::Fp(v)) => v.p == *p,
            (Field::Extension(e), Scalar::Ext(el)) if el.level == e.level => {
                el.d == e.d && e.base.contains(&el.a) && e.base.contains(&el.b)
            }
            (Field::Extension(e), s) => e.base.contains(s),
            _ => false,
        }
    }

    pub fn is_square(&self, x: &Scalar) -> bool {
        self.sqrt(x).is_ok()
    }

    /// Canonical square root: non-negative over ℚ, in `[0, (p-1)/2]` over
    /// 𝔽_p, and componentwise-canonical in extensions.
    pub fn sqrt(&self, x: &Scalar) -> Result<Scalar, FieldError> {
        match self {
            Field::Rationals => {
                let r = x.as_rational().ok_or(FieldError::NonSquare)?;
                if r.is_negative() {
                    return Err(FieldError::NonSquare);
                }
                let n = r.numer().sqrt();
                let d = r.denom().sqrt();
                if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
                    Ok(Scalar::Rat(BigRational::new(n, d)))
                } else {
                    Err(FieldError::NonSquare)
                }
            }
            Field::Prime(p) => match x {
                Scalar::Fp(v) => sqrt_mod(v.v, *p)
                    .map(|r| Scalar::Fp(Fp { v: r, p: *p }))
                    .ok_or(FieldError::NonSquare),
                _ => Err(FieldError::NonSquare),
            },
            Field::Extension(e) => {
                let root = e.sqrt(x)?;
                Ok(if root.is_canonical_root() { root } else { -root })
            }
        }
    }

    /// Draws a scalar: over ℚ a reduced fraction with numerator and
    /// denominator bounded by `bound`, over 𝔽_p a uniform residue, in an
    /// extension each component independently.
    pub fn sample<R: Rng + ?Sized>(&self, bound: u64, rng: &mut R) -> Scalar {
        match self {
            Field::Rationals => {
                let b = bound.max(1) as i64;
                let n = rng.gen_range(-b..=b);
                let d = rng.gen_range(1..=b);
                Scalar::rational(n, d)
            }
            Field::Prime(p) => Scalar::Fp(Fp { v: rng.gen_range(0..*p), p: *p }),
            Field::Extension(e) => {
                let a = e.base.sample(bound, rng);
                let b = e.base.sample(bound, rng);
                Scalar::ext(e.level, a, b, e.d.clone())
            }
        }
    }

    /// Draws a nonzero scalar.
    pub fn sample_nonzero<R: Rng + ?Sized>(&self, bound: u64, rng: &mut R) -> Scalar {
        loop {
            let s = self.sample(bound, rng);
            if !s.is_zero() {
                return s;
            }
        }
    }

    /// All elements, for finite fields.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match self {
            Field::Rationals => None,
            Field::Prime(p) => Some((0..*p).map(|v| Scalar::Fp(Fp { v, p: *p })).collect()),
            Field::Extension(e) => {
                let base = e.base.elements()?;
                let mut out = Vec::with_capacity(base.len() * base.len());
                for b in &base {
                    for a in &base {
                        out.push(Scalar::ext(e.level, a.clone(), b.clone(), e.d.clone()));
                    }
                }
                Some(out)
            }
        }
    }

    /// Parses a scalar expression: integers, `+ - * /`, parentheses and
    /// `sqrt(<int>)`, which resolves to the canonical root in this field.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar, FieldError> {
        let toks = tokenize(s)?;
        let mut p = ExprParser { toks: &toks, pos: 0, field: self, src: s };
        let v = p.expr()?;
        if p.pos != toks.len() {
            return Err(FieldError::Parse(s.to_string()));
        }
        Ok(v)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.spec())
    }
}

impl ExtField {
    fn sqrt(&self, x: &Scalar) -> Result<Scalar, FieldError> {
        let (a, b) = x.split(self.level);
        let two = self.base.int(2);
        if b.is_zero() {
            if let Ok(r) = self.base.sqrt(&a) {
                return Ok(r);
            }
            let y2 = a.checked_div(&self.d).ok_or(FieldError::NonSquare)?;
            let y = self.base.sqrt(&y2)?;
            return Ok(Scalar::ext(self.level, self.base.zero(), y, self.d.clone()));
        }
        // (u + v√d)² = a + b√d  ⇔  u² + d v² = a, 2uv = b.
        let n = self.base.sqrt(&(a.sq() - &self.d * b.sq()))?;
        for s in [&a + &n, &a - &n] {
            let u2 = s / &two;
            if let Ok(u) = self.base.sqrt(&u2) {
                if u.is_zero() {
                    continue;
                }
                let v = &b / (&two * &u);
                return Ok(Scalar::ext(self.level, u, v, self.d.clone()));
            }
        }
        Err(FieldError::NonSquare)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Op(char),
    Sqrt,
}

fn tokenize(s: &str) -> Result<Vec<Tok>, FieldError> {
    let mut out = Vec::new();
    let cs: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_ascii_digit() {
            let start = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let n: String = cs[start..i].iter().collect();
            out.push(Tok::Num(n.parse().unwrap()));
            continue;
        }
        if "+-*/()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
            continue;
        }
        let rest: String = cs[i..].iter().collect();
        if rest.starts_with("sqrt") {
            out.push(Tok::Sqrt);
            i += 4;
            continue;
        }
        return Err(FieldError::Parse(s.to_string()));
    }
    Ok(out)
}

struct ExprParser<'a> {
    toks: &'a [Tok],
    pos: usize,
    field: &'a Field,
    src: &'a str,
}

impl ExprParser<'_> {
    fn err(&self) -> FieldError {
        FieldError::Parse(self.src.to_string())
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Scalar, FieldError> {
        let mut v = self.term()?;
        loop {
            if self.eat('+') {
                v = v + self.term()?;
            } else if self.eat('-') {
                v = v - self.term()?;
            } else {
                return Ok(v);
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, FieldError> {
        let mut v = self.unary()?;
        loop {
            if self.eat('*') {
                v = v * self.unary()?;
            } else if self.eat('/') {
                let d = self.unary()?;
                v = v.checked_div(&d).ok_or(FieldError::DivisionByZero)?;
            } else {
                return Ok(v);
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar, FieldError> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Scalar, FieldError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(self.field.from_bigint(&n))
            }
            Some(Tok::Sqrt) => {
                self.pos += 1;
                if !self.eat('(') {
                    return Err(self.err());
                }
                let arg = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err());
                }
                self.field.sqrt(&arg)
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err());
                }
                Ok(v)
            }
            _ => Err(self.err()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn prime_field_construction() {
        let f = Field::prime(23).unwrap();
        assert_eq!(f.characteristic(), 23);
        assert_eq!(Field::prime(2), Err(FieldError::CharacteristicTwo));
        assert_eq!(Field::prime(9), Err(FieldError::NotPrime(9)));
    }

    #[test]
    fn redundant_extension_rejected() {
        assert!(matches!(
            Field::rationals().extend(4),
            Err(FieldError::RedundantExtension(_))
        ));
        let q2 = Field::rationals().extend(2).unwrap();
        assert!(matches!(q2.extend(8), Err(FieldError::RedundantExtension(_))));
        assert!(q2.extend(3).is_ok());
    }

    #[test]
    fn tower_depth_cap() {
        let f = Field::parse("Q[sqrt=2,3,5]").unwrap();
        assert_eq!(f.to_string(), "Q[sqrt=2,3,5]");
        assert_eq!(Field::parse("Q[sqrt=2,3,5,7]"), Err(FieldError::TowerTooDeep(3)));
        let deep = make_field_with_depth(&FieldSpec::parse("Q[sqrt=2,3,5,7]").unwrap(), 4);
        assert!(deep.is_ok());
    }

    #[test]
    fn square_roots() {
        let f23 = Field::prime(23).unwrap();
        assert_eq!(f23.sqrt(&f23.int(2)).unwrap(), f23.int(5));
        assert_eq!(f23.sqrt(&f23.int(3)).unwrap(), f23.int(7));
        let q = Field::rationals();
        assert_eq!(q.sqrt(&Scalar::rational(4, 9)).unwrap(), Scalar::rational(2, 3));
        assert!(!q.is_square(&Scalar::integer(-1)));
        let f7 = Field::prime(7).unwrap();
        assert!(!f7.is_square(&f7.int(3)));
    }

    #[test]
    fn squares_mod_7_by_enumeration() {
        let f7 = Field::prime(7).unwrap();
        let squares: Vec<u64> = (0..7u64).filter(|&v| f7.is_square(&f7.int(v as i64))).collect();
        assert_eq!(squares, vec![0, 1, 2, 4]);
    }

    #[test]
    fn nonzero_square_count() {
        for p in (3..=101u64).filter(|&p| is_prime(p)) {
            let f = Field::prime(p).unwrap();
            let n = f
                .elements()
                .unwrap()
                .iter()
                .filter(|x| !x.is_zero() && f.is_square(x))
                .count();
            assert_eq!(n as u64, (p - 1) / 2, "p = {p}");
        }
    }

    #[test]
    fn extension_sqrt() {
        let f = Field::parse("Q[sqrt=2]").unwrap();
        let r2 = f.generator().unwrap();
        assert_eq!(f.sqrt(&f.int(2)).unwrap(), r2);
        let x = f.int(3) + &r2 * 2;
        let s = f.sqrt(&x.sq()).unwrap();
        assert_eq!(s, x);
        // 3 + 2√2 = (1 + √2)²
        assert_eq!(f.sqrt(&x).unwrap(), f.int(1) + &r2);
        assert!(!f.is_square(&r2));
        let t = Field::parse("Q[sqrt=2,3]").unwrap();
        assert_eq!(t.sqrt(&t.int(6)).unwrap().sq(), t.int(6));
    }

    #[test]
    fn extension_inverse_and_embedding() {
        let f = Field::parse("Q[sqrt=2,3]").unwrap();
        let r3 = f.generator().unwrap();
        let r2 = f.parse_scalar("sqrt(2)").unwrap();
        let x = &r2 + &r3;
        assert_eq!(&x * x.inv().unwrap(), f.one());
        assert_eq!((&r2 * &r3).sq(), f.int(6));
        assert_eq!(Scalar::integer(5) + &r2 - &r2, Scalar::integer(5));
    }

    #[test]
    fn sample_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let q = Field::rationals();
        for _ in 0..200 {
            let s = q.sample(1, &mut rng);
            assert!([-1, 0, 1].iter().any(|&n| s == Scalar::integer(n)));
        }
        let f5 = Field::prime(5).unwrap();
        for _ in 0..200 {
            assert!(f5.contains(&f5.sample(100, &mut rng)));
        }
        let e = Field::parse("Q[sqrt=2]").unwrap();
        for _ in 0..200 {
            let s = e.sample(2, &mut rng);
            let (a, b) = match s.ext_parts() {
                Some((a, b, _)) => (a.clone(), b.clone()),
                None => (s.clone(), Scalar::integer(0)),
            };
            for c in [a, b] {
                let r = c.as_rational().unwrap();
                assert!(r.numer().abs() <= 2.into() && r.denom() <= &2.into());
            }
        }
    }

    #[test]
    fn parse_and_display_round_trip() {
        let f = Field::parse("Q[sqrt=2,3]").unwrap();
        for src in ["1/2", "-3", "1+sqrt(2)", "sqrt(3)", "(1+sqrt(2))*sqrt(3)", "2-sqrt(2)/3"] {
            let x = f.parse_scalar(src).unwrap();
            assert_eq!(f.parse_scalar(&x.to_string()).unwrap(), x, "{src} -> {x}");
        }
        let g = Field::parse("Fp=13").unwrap();
        assert_eq!(g.parse_scalar("-1").unwrap().to_string(), "12");
        assert_eq!(g.parse_scalar("1/2").unwrap(), g.int(7));
        assert!(g.parse_scalar("1/0").is_err());
        assert!(g.parse_scalar("x").is_err());
    }

    #[test]
    fn spec_grammar() {
        assert_eq!(FieldSpec::parse("Q").unwrap(), FieldSpec::Rationals);
        assert_eq!(FieldSpec::parse("Fp=23").unwrap(), FieldSpec::PrimeField(23));
        assert_eq!(FieldSpec::parse(" Q[ sqrt=-1 ]").unwrap().to_string(), "Q[sqrt=-1]");
        assert!(FieldSpec::parse("R").is_err());
        assert!(FieldSpec::parse("Q[sqrt=]").is_err());
    }
}
