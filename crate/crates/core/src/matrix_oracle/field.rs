use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact scalar arithmetic for the oracle's dense matrices.
pub trait Field: Clone + PartialEq + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn kind(&self) -> FieldKind;
    fn render(&self, a: &Self::Elem) -> String;

    /// `acc += a * b`
    fn mul_add_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        *acc = self.add(acc, &self.mul(a, b));
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.sub(&self.zero(), a)
    }
}

/// Which field a matrix lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldKind {
    Rationals,
    Prime(u64),
}

impl FieldKind {
    pub const DEFAULT_PRIME: u64 = 10_007;

    pub fn prime(p: u64) -> Result<Self> {
        PrimeField::new(p).map(|f| FieldKind::Prime(f.p))
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rationals => f.write_str("Q"),
            FieldKind::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

/// An exact rational. Integers that fit in `i64` are stored inline, which
/// keeps zero entries and integral matrices free of heap allocation; every
/// other value is a normalized `BigRational`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rational {
    Small(i64),
    /// Never an integer that fits in `i64`. Boxed so the common case stays
    /// two words wide.
    Big(Box<BigRational>),
}

impl Rational {
    fn from_big(v: BigRational) -> Rational {
        if v.is_integer() {
            if let Some(i) = v.numer().to_i64() {
                return Rational::Small(i);
            }
        }
        Rational::Big(Box::new(v))
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rational::Small(i) => BigRational::from_integer(BigInt::from(*i)),
            Rational::Big(v) => (**v).clone(),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Small(i) => write!(f, "{i}"),
            Rational::Big(v) => write!(f, "{v}"),
        }
    }
}

/// The field `Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::Small(0)
    }

    fn one(&self) -> Rational {
        Rational::Small(1)
    }

    fn from_i64(&self, v: i64) -> Rational {
        Rational::Small(v)
    }

    #[inline]
    fn is_zero(&self, a: &Rational) -> bool {
        matches!(a, Rational::Small(0))
    }

    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        if let (Rational::Small(x), Rational::Small(y)) = (a, b) {
            if let Some(v) = x.checked_add(*y) {
                return Rational::Small(v);
            }
        }
        Rational::from_big(a.to_big() + b.to_big())
    }

    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        if let (Rational::Small(x), Rational::Small(y)) = (a, b) {
            if let Some(v) = x.checked_sub(*y) {
                return Rational::Small(v);
            }
        }
        Rational::from_big(a.to_big() - b.to_big())
    }

    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        if let (Rational::Small(x), Rational::Small(y)) = (a, b) {
            if let Some(v) = x.checked_mul(*y) {
                return Rational::Small(v);
            }
        }
        Rational::from_big(a.to_big() * b.to_big())
    }

    fn inv(&self, a: &Rational) -> Option<Rational> {
        match a {
            Rational::Small(0) => None,
            Rational::Small(x @ (1 | -1)) => Some(Rational::Small(*x)),
            other => Some(Rational::from_big(other.to_big().recip())),
        }
    }

    fn kind(&self) -> FieldKind {
        FieldKind::Rationals
    }

    fn render(&self, a: &Rational) -> String {
        a.to_string()
    }

    fn mul_add_assign(&self, acc: &mut Rational, a: &Rational, b: &Rational) {
        if let (Rational::Small(c), Rational::Small(x), Rational::Small(y)) = (&*acc, a, b) {
            if let Some(v) = x.checked_mul(*y).and_then(|p| p.checked_add(*c)) {
                *acc = Rational::Small(v);
                return;
            }
        }
        *acc = self.add(acc, &self.mul(a, b));
    }

    fn neg(&self, a: &Rational) -> Rational {
        match a {
            Rational::Small(x) if *x != i64::MIN => Rational::Small(-x),
            other => Rational::from_big(-other.to_big()),
        }
    }
}

/// The prime field `F_p` with `p < 2^32`, elements kept reduced in `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..1 << 32).contains(&p) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // Fermat: a^(p-2)
        let (mut base, mut exp, mut acc) = (*a, self.p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        Some(acc)
    }

    fn kind(&self) -> FieldKind {
        FieldKind::Prime(self.p)
    }

    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.from_i64(-1), 6);
        assert_eq!(f.mul(&3, &5), 1);
        assert_eq!(f.inv(&3), Some(5));
        assert_eq!(f.inv(&0), None);
        for a in 1..7 {
            assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
        }
        assert!(PrimeField::new(10_007).is_ok());
        assert_eq!(PrimeField::new(10_005), Err(Error::NotPrime(10_005)));
        assert_eq!(PrimeField::new(1), Err(Error::NotPrime(1)));
    }

    #[test]
    fn rationals_overflow_into_big_values() {
        let q = Rationals;
        let big = q.from_i64(i64::MAX);
        let sum = q.add(&big, &q.one());
        assert!(matches!(sum, Rational::Big(_)));
        assert_eq!(q.render(&sum), "9223372036854775808");
        assert_eq!(q.sub(&sum, &q.one()), big);
        let sq = q.mul(&big, &big);
        assert_eq!(q.mul(&sq, &q.inv(&big).unwrap()), big);
        assert_eq!(q.neg(&q.from_i64(i64::MIN)), q.add(&big, &q.one()));
        let third = q.inv(&q.from_i64(3)).unwrap();
        assert_eq!(q.mul(&third, &q.from_i64(3)), q.one());
        assert!(q.is_zero(&q.sub(&third, &third)));
    }

    #[test]
    fn rational_fast_path_agrees() {
        let q = Rationals;
        let mut acc = q.from_i64(5);
        q.mul_add_assign(&mut acc, &q.from_i64(-3), &q.from_i64(4));
        assert_eq!(acc, q.from_i64(-7));
        let half = q.inv(&q.from_i64(2)).unwrap();
        q.mul_add_assign(&mut acc, &half, &q.from_i64(3));
        assert_eq!(q.render(&acc), "-11/2");
    }
}
