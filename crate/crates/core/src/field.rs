//! Ground fields and exact scalars.
//!
//! Two fields are supported: the rationals (arbitrary precision, always kept
//! in lowest terms) and prime fields GF(p) for odd primes p.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("modulus {0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("cannot parse scalar {0:?}")]
    BadScalar(String),
    #[error("zero denominator in scalar {0:?}")]
    ZeroDenominator(String),
}

/// The ground field of a computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldSpec {
    /// GF(p); `p` must be an odd prime below 2^63.
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        if !(3..(1 << 63)).contains(&p) || !is_prime(p) {
            return Err(FieldError::NotOddPrime(p));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::zero()),
            FieldSpec::Prime(p) => Scalar::Modular { value: 0, modulus: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Prime(p) => Scalar::Modular {
                value: (n as i128).rem_euclid(*p as i128) as u64,
                modulus: *p,
            },
        }
    }

    /// `num / den`; panics on a zero denominator in the field.
    pub fn ratio(&self, num: i64, den: i64) -> Scalar {
        let d = self.from_i64(den).inv().expect("zero denominator");
        &self.from_i64(num) * &d
    }

    /// Parses `"a"` or `"a/b"` with integer `a`, `b` and `b != 0` in the field.
    pub fn parse(&self, text: &str) -> Result<Scalar, FieldError> {
        let t = text.trim();
        let (num, den) = match t.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (t, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| FieldError::BadScalar(text.to_string()))?;
        let den: BigInt = den.parse().map_err(|_| FieldError::BadScalar(text.to_string()))?;
        if den.is_zero() {
            return Err(FieldError::ZeroDenominator(text.to_string()));
        }
        match self {
            FieldSpec::Rationals => Ok(Scalar::Rational(BigRational::new(num, den))),
            FieldSpec::Prime(p) => {
                let m = BigInt::from(*p);
                let a = num.mod_floor(&m).to_u64().unwrap();
                let b = den.mod_floor(&m).to_u64().unwrap();
                if b == 0 {
                    return Err(FieldError::ZeroDenominator(text.to_string()));
                }
                let s = Scalar::Modular { value: a, modulus: *p };
                let d = Scalar::Modular { value: b, modulus: *p };
                Ok(&s * &d.inv().unwrap())
            }
        }
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        matches!(
            (self, s),
            (FieldSpec::Rationals, Scalar::Rational(_))
                | (FieldSpec::Prime(_), Scalar::Modular { .. })
        ) && s.field() == *self
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// An exact field element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Modular { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    /// `self += a * b`.
    #[inline]
    pub fn add_mul(&mut self, a: &Scalar, b: &Scalar) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        match (self, a, b) {
            (
                Scalar::Modular { value, modulus },
                Scalar::Modular { value: x, .. },
                Scalar::Modular { value: y, .. },
            ) => {
                *value = (*value + mul_mod(*x, *y, *modulus)) % *modulus;
            }
            (Scalar::Rational(acc), Scalar::Rational(x), Scalar::Rational(y)) => {
                if y.is_one() {
                    *acc += x;
                } else if x.is_one() {
                    *acc += y;
                } else {
                    *acc += x * y;
                }
            }
            _ => panic!("field mismatch in scalar arithmetic"),
        }
    }

    /// `self -= a * b`.
    #[inline]
    pub fn sub_mul(&mut self, a: &Scalar, b: &Scalar) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        match (self, a, b) {
            (
                Scalar::Modular { value, modulus },
                Scalar::Modular { value: x, .. },
                Scalar::Modular { value: y, .. },
            ) => {
                *value = (*value + *modulus - mul_mod(*x, *y, *modulus)) % *modulus;
            }
            (Scalar::Rational(acc), Scalar::Rational(x), Scalar::Rational(y)) => {
                if y.is_one() {
                    *acc -= x;
                } else if x.is_one() {
                    *acc -= y;
                } else {
                    *acc -= x * y;
                }
            }
            _ => panic!("field mismatch in scalar arithmetic"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a += b,
            (Scalar::Modular { value, modulus }, Scalar::Modular { value: b, .. }) => {
                *value = (*value + b) % *modulus
            }
            _ => panic!("field mismatch in scalar arithmetic"),
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a -= b,
            (Scalar::Modular { value, modulus }, Scalar::Modular { value: b, .. }) => {
                *value = (*value + *modulus - b) % *modulus
            }
            _ => panic!("field mismatch in scalar arithmetic"),
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a *= b,
            (Scalar::Modular { value, modulus }, Scalar::Modular { value: b, .. }) => {
                *value = mul_mod(*value, *b, *modulus)
            }
            _ => panic!("field mismatch in scalar arithmetic"),
        }
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $assign:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                let mut out = self.clone();
                out.$assign(rhs);
                out
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(mut self, rhs: Scalar) -> Scalar {
                self.$assign(&rhs);
                self
            }
        }
    };
}

binop!(Add, add, add_assign);
binop!(Sub, sub, sub_assign);
binop!(Mul, mul, mul_assign);

impl Scalar {
    /// Absolute height of a rational (max of |numerator|, denominator); 0 for GF(p).
    pub fn height(&self) -> BigInt {
        match self {
            Scalar::Rational(q) => q.numer().abs().max(q.denom().clone()),
            Scalar::Modular { .. } => BigInt::zero(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_rationals() {
        let q = FieldSpec::Rationals;
        assert_eq!(q.parse("3/6").unwrap(), q.ratio(1, 2));
        assert_eq!(q.parse("-4").unwrap(), q.from_i64(-4));
        assert_eq!(q.parse(" 2 / -4 ").unwrap(), q.ratio(-1, 2));
        assert!(matches!(q.parse("1/0"), Err(FieldError::ZeroDenominator(_))));
        assert!(matches!(q.parse("x"), Err(FieldError::BadScalar(_))));
    }

    #[test]
    fn parse_modular() {
        let f = FieldSpec::prime(7).unwrap();
        // 1/2 = 4 mod 7
        assert_eq!(f.parse("1/2").unwrap(), f.from_i64(4));
        assert_eq!(f.parse("-1").unwrap(), f.from_i64(6));
        assert!(matches!(f.parse("1/14"), Err(FieldError::ZeroDenominator(_))));
    }

    #[test]
    fn only_odd_primes() {
        assert!(FieldSpec::prime(2).is_err());
        assert!(FieldSpec::prime(9).is_err());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(101).is_ok());
    }

    #[test]
    fn inverses() {
        let f = FieldSpec::prime(11).unwrap();
        for n in 1..11 {
            let x = f.from_i64(n);
            assert!((&x * &x.inv().unwrap()).is_one());
        }
        assert!(f.zero().inv().is_none());
        let q = FieldSpec::Rationals;
        assert_eq!(q.ratio(-3, 4).inv().unwrap(), q.ratio(-4, 3));
    }

    #[test]
    fn display_round_trips() {
        let q = FieldSpec::Rationals;
        for s in ["0", "1", "-7", "5/3", "-2/9"] {
            assert_eq!(q.parse(s).unwrap().to_string(), s);
        }
    }
}
