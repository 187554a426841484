//! Exact field scalars: arbitrary-precision rationals and prime fields.
//!
//! All arithmetic is exact; nothing is ever rounded. Binary operations
//! panic if the operands belong to different fields — public constructors
//! validate field uniformity once, so a mismatch deeper in the engine is a
//! programming error, not a data error.

use crate::error::{Error, Result};
use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

/// The coefficient field of an algebra: the rationals or GF(p).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Field {
    Rationals,
    Prime(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl Field {
    /// GF(p) constructor; rejects composites and primes >= 2^31.
    pub fn prime(p: u64) -> Result<Field> {
        if p >= (1 << 31) || !is_prime(p) {
            return Err(Error::BadPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => {
                let m = n.rem_euclid(*p as i64) as u64;
                Scalar::Modular {
                    value: m,
                    modulus: *p,
                }
            }
        }
    }

    /// Parses "a" or "a/b" (arbitrary-precision over the rationals,
    /// residues mod p over GF(p)).
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let (num_s, den_s) = match s.split_once('/') {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None => (s, None),
        };
        match self {
            Field::Rationals => {
                let n = BigInt::from_str(num_s)
                    .map_err(|_| Error::Invalid(format!("bad rational literal '{s}'")))?;
                let d = match den_s {
                    Some(d) => BigInt::from_str(d)
                        .map_err(|_| Error::Invalid(format!("bad rational literal '{s}'")))?,
                    None => BigInt::one(),
                };
                if d.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Scalar::Rational(BigRational::new(n, d)))
            }
            Field::Prime(_) => {
                let n: i64 = num_s
                    .parse()
                    .map_err(|_| Error::Invalid(format!("bad GF(p) literal '{s}'")))?;
                let a = self.from_i64(n);
                match den_s {
                    None => Ok(a),
                    Some(d) => {
                        let d: i64 = d
                            .parse()
                            .map_err(|_| Error::Invalid(format!("bad GF(p) literal '{s}'")))?;
                        a.div(&self.from_i64(d))
                    }
                }
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// An element of `Field`: exact rational or residue mod p.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Modular { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    fn check_same_field(&self, other: &Scalar) {
        assert!(
            self.field() == other.field(),
            "scalar field mismatch: {} vs {}",
            self.field(),
            other.field()
        );
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Modular { value, modulus } => {
                // Fermat: a^(p-2) mod p, p prime.
                let (mut base, mut exp, p) = (*value as u128, *modulus - 2, *modulus as u128);
                let mut acc: u128 = 1;
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = acc * base % p;
                    }
                    base = base * base % p;
                    exp >>= 1;
                }
                Scalar::Modular {
                    value: acc as u64,
                    modulus: *modulus,
                }
            }
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self * &other.inv()?)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, other: &Scalar) -> Scalar {
        self.check_same_field(other);
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (
                Scalar::Modular {
                    value: a,
                    modulus: p,
                },
                Scalar::Modular { value: b, .. },
            ) => Scalar::Modular {
                value: (a + b) % p,
                modulus: *p,
            },
            _ => unreachable!(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, other: &Scalar) -> Scalar {
        self + &(-other)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, other: &Scalar) -> Scalar {
        self.check_same_field(other);
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (
                Scalar::Modular {
                    value: a,
                    modulus: p,
                },
                Scalar::Modular { value: b, .. },
            ) => {
                let v = (*a as u128) * (*b as u128) % (*p as u128);
                Scalar::Modular {
                    value: v as u64,
                    modulus: *p,
                }
            }
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, other: Scalar) -> Scalar {
                (&self).$method(&other)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    /// Lowest terms over the rationals ("-3/2", "7"); canonical residue
    /// 0..p-1 over GF(p).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else if r.denom().is_negative() {
                    // BigRational::new normalizes, but guard reduced() inputs.
                    write!(f, "{}/{}", -r.numer(), -r.denom())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_parse_and_display_lowest_terms() {
        let q = Field::Rationals;
        assert_eq!(q.parse("4/6").unwrap().to_string(), "2/3");
        assert_eq!(q.parse("-3/2").unwrap().to_string(), "-3/2");
        assert_eq!(q.parse("3/-2").unwrap().to_string(), "-3/2");
        assert_eq!(q.parse("0/5").unwrap().to_string(), "0");
        assert_eq!(q.parse("7").unwrap().to_string(), "7");
        assert!(q.parse("1/0").is_err());
        assert!(q.parse("x").is_err());
    }

    #[test]
    fn rational_arithmetic_is_exact() {
        let q = Field::Rationals;
        let third = q.parse("1/3").unwrap();
        let sum = &(&third + &third) + &third;
        assert!(sum.is_one());
        let x = q.parse("2/7").unwrap();
        assert_eq!(x.div(&x).unwrap(), q.one());
        assert!(q.zero().inv().is_err());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f5 = Field::prime(5).unwrap();
        let a = f5.from_i64(3);
        let b = f5.from_i64(4);
        assert_eq!(&a + &b, f5.from_i64(2));
        assert_eq!(&a * &b, f5.from_i64(2));
        assert_eq!(-&a, f5.from_i64(2));
        assert_eq!(a.inv().unwrap(), f5.from_i64(2)); // 3*2 = 6 = 1 mod 5
        assert_eq!(f5.from_i64(-1), f5.from_i64(4));
        assert_eq!(f5.parse("3/4").unwrap(), f5.from_i64(2)); // 4^-1 = 4, 3*4 = 2
    }

    #[test]
    fn prime_validation() {
        assert!(Field::prime(6).is_err());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(2).is_ok());
        assert!(Field::prime(97).is_ok());
        assert!(Field::prime(1 << 32).is_err());
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn mixed_field_arithmetic_panics() {
        let _ = &Field::Rationals.one() + &Field::prime(5).unwrap().one();
    }
}
