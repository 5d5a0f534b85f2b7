//! Coefficient domains.
//!
//! [`Ring`] is the context-free element interface used by the generic
//! algorithms (determinants, the minor/cycle-sum transforms). [`Coeff`] is
//! what a [`Poly`](super::Poly) stores; it carries an explicit context so
//! that residues mod `p` do not need to store `p` per element.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::modular;

fn rzero() -> BigRational {
    Zero::zero()
}

fn rone() -> BigRational {
    One::one()
}

/// A commutative ring with context-free constants.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync + Zero + One + 'static {
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negated(&self) -> Self;
    fn from_i64(n: i64) -> Self;

    fn power(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        acc
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;

    fn div(&self, o: &Self) -> Option<Self> {
        o.inv().map(|i| self.times(&i))
    }
}

impl Ring for BigInt {
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
}

impl Ring for BigRational {
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

/// Elements `a + b·√d` of a quadratic extension of the rationals.
///
/// `d` is fixed per computation. Elements with `b = 0` are plain rationals
/// and combine with any radicand; mixing two different nonzero radicands
/// is a logic error and panics.
#[derive(Clone, Debug)]
pub struct QuadExt {
    pub a: BigRational,
    pub b: BigRational,
    pub d: BigRational,
}

impl QuadExt {
    pub fn rational(a: BigRational) -> Self {
        QuadExt { a, b: rzero(), d: rzero() }
    }

    pub fn new(a: BigRational, b: BigRational, d: BigRational) -> Self {
        let mut q = QuadExt { a, b, d };
        q.normalize();
        q
    }

    /// `√d`.
    pub fn sqrt_of(d: BigRational) -> Self {
        QuadExt::new(rzero(), rone(), d)
    }

    fn normalize(&mut self) {
        if Zero::is_zero(&self.d) {
            self.b = rzero();
        }
    }

    fn radicand(&self, o: &Self) -> BigRational {
        let da = !Zero::is_zero(&self.b);
        let db = !Zero::is_zero(&o.b);
        match (da, db) {
            (true, true) => {
                assert_eq!(self.d, o.d, "mixing quadratic extensions with different radicands");
                self.d.clone()
            }
            (true, false) => self.d.clone(),
            (false, true) => o.d.clone(),
            (false, false) => {
                if Zero::is_zero(&self.d) {
                    o.d.clone()
                } else {
                    self.d.clone()
                }
            }
        }
    }

    /// Galois conjugate `a - b√d`.
    pub fn conjugate(&self) -> Self {
        QuadExt { a: self.a.clone(), b: -self.b.clone(), d: self.d.clone() }
    }

    /// Norm `a² - d b²`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.d * &self.b * &self.b
    }

    pub fn is_rational(&self) -> bool {
        Zero::is_zero(&self.b)
    }
}

impl PartialEq for QuadExt {
    fn eq(&self, o: &Self) -> bool {
        self.a == o.a && self.b == o.b && (Zero::is_zero(&self.b) || self.d == o.d)
    }
}

impl Eq for QuadExt {}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Zero::is_zero(&self.b) {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{} + {}*sqrt({})", self.a, self.b, self.d)
        }
    }
}

impl std::ops::Add for QuadExt {
    type Output = QuadExt;
    fn add(self, o: QuadExt) -> QuadExt {
        Ring::plus(&self, &o)
    }
}

impl std::ops::Mul for QuadExt {
    type Output = QuadExt;
    fn mul(self, o: QuadExt) -> QuadExt {
        Ring::times(&self, &o)
    }
}

impl Zero for QuadExt {
    fn zero() -> Self {
        QuadExt::rational(rzero())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.a) && Zero::is_zero(&self.b)
    }
}

impl One for QuadExt {
    fn one() -> Self {
        QuadExt::rational(rone())
    }
}

impl Ring for QuadExt {
    fn plus(&self, o: &Self) -> Self {
        QuadExt::new(&self.a + &o.a, &self.b + &o.b, self.radicand(o))
    }
    fn minus(&self, o: &Self) -> Self {
        QuadExt::new(&self.a - &o.a, &self.b - &o.b, self.radicand(o))
    }
    fn times(&self, o: &Self) -> Self {
        let d = self.radicand(o);
        let a = &self.a * &o.a + &d * &self.b * &o.b;
        let b = &self.a * &o.b + &self.b * &o.a;
        QuadExt::new(a, b, d)
    }
    fn negated(&self) -> Self {
        QuadExt { a: -self.a.clone(), b: -self.b.clone(), d: self.d.clone() }
    }
    fn from_i64(n: i64) -> Self {
        QuadExt::rational(BigRational::from_integer(BigInt::from(n)))
    }
}

impl Field for QuadExt {
    /// Fails for zero and for zero divisors (possible when `d` is a square).
    fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if Zero::is_zero(&n) {
            return None;
        }
        let c = self.conjugate();
        Some(QuadExt::new(&c.a / &n, &c.b / &n, c.d))
    }
}

/// The coefficient domain of a polynomial, as a runtime tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    Integer,
    Rational,
    Modular(u64),
    Other,
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Integer => write!(f, "ZZ"),
            Domain::Rational => write!(f, "QQ"),
            Domain::Modular(p) => write!(f, "GF({p})"),
            Domain::Other => write!(f, "other"),
        }
    }
}

/// Element type stored in a polynomial, with an explicit context.
pub trait Coeff: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    type Ctx: Clone + PartialEq + fmt::Debug + Send + Sync + 'static;

    fn domain(ctx: &Self::Ctx) -> Domain;
    fn k_zero(ctx: &Self::Ctx) -> Self;
    fn k_one(ctx: &Self::Ctx) -> Self;
    fn k_is_zero(&self) -> bool;
    fn k_add(&self, o: &Self, ctx: &Self::Ctx) -> Self;
    fn k_sub(&self, o: &Self, ctx: &Self::Ctx) -> Self;
    fn k_mul(&self, o: &Self, ctx: &Self::Ctx) -> Self;
    fn k_neg(&self, ctx: &Self::Ctx) -> Self;
    fn k_from_i64(n: i64, ctx: &Self::Ctx) -> Self;
    fn k_from_bigint(n: &BigInt, ctx: &Self::Ctx) -> Self;

    /// Canonical text; `None` if the domain has no text form.
    fn render(&self) -> String;
    fn parse(s: &str, ctx: &Self::Ctx) -> Option<Self>;
    /// Whether the rendered form starts with a minus sign.
    fn k_is_negative(&self) -> bool {
        false
    }
}

macro_rules! coeff_via_ring {
    ($t:ty, $dom:expr) => {
        impl Coeff for $t {
            type Ctx = ();
            fn domain(_: &()) -> Domain {
                $dom
            }
            fn k_zero(_: &()) -> Self {
                <$t as Zero>::zero()
            }
            fn k_one(_: &()) -> Self {
                <$t as One>::one()
            }
            fn k_is_zero(&self) -> bool {
                <$t as Zero>::is_zero(self)
            }
            fn k_add(&self, o: &Self, _: &()) -> Self {
                Ring::plus(self, o)
            }
            fn k_sub(&self, o: &Self, _: &()) -> Self {
                Ring::minus(self, o)
            }
            fn k_mul(&self, o: &Self, _: &()) -> Self {
                Ring::times(self, o)
            }
            fn k_neg(&self, _: &()) -> Self {
                Ring::negated(self)
            }
            fn k_from_i64(n: i64, _: &()) -> Self {
                <$t as Ring>::from_i64(n)
            }
            fn k_from_bigint(n: &BigInt, _: &()) -> Self {
                <$t>::from(n.clone())
            }
            fn render(&self) -> String {
                self.to_string()
            }
            fn parse(s: &str, _: &()) -> Option<Self> {
                s.parse().ok()
            }
            fn k_is_negative(&self) -> bool {
                Signed::is_negative(self)
            }
        }
    };
}

coeff_via_ring!(BigInt, Domain::Integer);
coeff_via_ring!(BigRational, Domain::Rational);

impl Coeff for QuadExt {
    type Ctx = ();
    fn domain(_: &()) -> Domain {
        Domain::Other
    }
    fn k_zero(_: &()) -> Self {
        <QuadExt as Zero>::zero()
    }
    fn k_one(_: &()) -> Self {
        <QuadExt as One>::one()
    }
    fn k_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn k_add(&self, o: &Self, _: &()) -> Self {
        Ring::plus(self, o)
    }
    fn k_sub(&self, o: &Self, _: &()) -> Self {
        Ring::minus(self, o)
    }
    fn k_mul(&self, o: &Self, _: &()) -> Self {
        Ring::times(self, o)
    }
    fn k_neg(&self, _: &()) -> Self {
        Ring::negated(self)
    }
    fn k_from_i64(n: i64, _: &()) -> Self {
        <QuadExt as Ring>::from_i64(n)
    }
    fn k_from_bigint(n: &BigInt, _: &()) -> Self {
        QuadExt::rational(BigRational::from_integer(n.clone()))
    }
    fn render(&self) -> String {
        format!("({self})")
    }
    fn parse(_: &str, _: &()) -> Option<Self> {
        None
    }
}

/// A residue modulo the prime held in the polynomial's context.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Residue(pub u64);

/// Context for [`Residue`]: the modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Modulus(pub u64);

impl Coeff for Residue {
    type Ctx = Modulus;
    fn domain(ctx: &Modulus) -> Domain {
        Domain::Modular(ctx.0)
    }
    fn k_zero(_: &Modulus) -> Self {
        Residue(0)
    }
    fn k_one(_: &Modulus) -> Self {
        Residue(1)
    }
    fn k_is_zero(&self) -> bool {
        self.0 == 0
    }
    fn k_add(&self, o: &Self, ctx: &Modulus) -> Self {
        Residue(modular::add_mod(self.0, o.0, ctx.0))
    }
    fn k_sub(&self, o: &Self, ctx: &Modulus) -> Self {
        Residue(modular::sub_mod(self.0, o.0, ctx.0))
    }
    fn k_mul(&self, o: &Self, ctx: &Modulus) -> Self {
        Residue(modular::mul_mod(self.0, o.0, ctx.0))
    }
    fn k_neg(&self, ctx: &Modulus) -> Self {
        Residue(modular::sub_mod(0, self.0, ctx.0))
    }
    fn k_from_i64(n: i64, ctx: &Modulus) -> Self {
        Residue(modular::reduce_i128(n as i128, ctx.0))
    }
    fn k_from_bigint(n: &BigInt, ctx: &Modulus) -> Self {
        Residue(modular::reduce_bigint(n, ctx.0))
    }
    fn render(&self) -> String {
        self.0.to_string()
    }
    fn parse(s: &str, ctx: &Modulus) -> Option<Self> {
        let n: BigInt = s.parse().ok()?;
        Some(Residue(modular::reduce_bigint(&n, ctx.0)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn quadext_arithmetic() {
        let s = QuadExt::sqrt_of(q(5));
        let sq = s.times(&s);
        assert_eq!(sq, QuadExt::rational(q(5)));
        let x = QuadExt::new(q(1), q(2), q(5));
        let inv = x.inv().unwrap();
        assert!(x.times(&inv).is_one());
        assert_eq!(x.plus(&x.conjugate()), QuadExt::rational(q(2)));
    }

    #[test]
    fn quadext_square_radicand_zero_divisor() {
        // d = 4: (2 - √4) is a zero divisor, not invertible
        let x = QuadExt::new(q(2), q(-1), q(4));
        assert!(x.inv().is_none());
    }

    #[test]
    fn residue_ops() {
        let m = Modulus(7);
        let a = Residue(5);
        assert_eq!(a.k_add(&Residue(4), &m), Residue(2));
        assert_eq!(a.k_neg(&m), Residue(2));
        assert_eq!(Residue::k_from_i64(-1, &m), Residue(6));
    }
}
