use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// The coefficient field of a polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CoefficientField {
    Rationals,
    Prime(u32),
}

/// A field element. Modular values are kept reduced into `0..p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rational(BigRational),
    Modular(u32),
}

/// Default prime used by tests and generated instances.
pub const DEFAULT_PRIME: u32 = 32003;

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl CoefficientField {
    pub fn prime(p: u64) -> Result<Self> {
        if p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::domain("ring", format!("{p} is not a supported prime")));
        }
        Ok(CoefficientField::Prime(p as u32))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            CoefficientField::Rationals => 0,
            CoefficientField::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Coeff {
        match self {
            CoefficientField::Rationals => Coeff::Rational(BigRational::zero()),
            CoefficientField::Prime(_) => Coeff::Modular(0),
        }
    }

    pub fn one(&self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        match self {
            CoefficientField::Rationals => Coeff::Rational(BigRational::from_integer(BigInt::from(n))),
            CoefficientField::Prime(p) => Coeff::Modular(n.rem_euclid(*p as i64) as u32),
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Coeff {
        match self {
            CoefficientField::Rationals => Coeff::Rational(BigRational::from_integer(n.clone())),
            CoefficientField::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(*p));
                Coeff::Modular(r.to_u32().expect("reduced residue fits"))
            }
        }
    }

    /// `num / den`; fails when the denominator vanishes in this field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Coeff> {
        let d = self.from_bigint(den);
        if self.is_zero(&d) {
            return Err(Error::domain("ring", format!("division by {den}, which is zero in this field")));
        }
        Ok(self.div(&self.from_bigint(num), &d))
    }

    pub fn is_zero(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Rational(r) => r.is_zero(),
            Coeff::Modular(v) => *v == 0,
        }
    }

    pub fn is_one(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Rational(r) => r.is_one(),
            Coeff::Modular(v) => *v == 1,
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (_, Coeff::Rational(x), Coeff::Rational(y)) => Coeff::Rational(x + y),
            (CoefficientField::Prime(p), Coeff::Modular(x), Coeff::Modular(y)) => {
                Coeff::Modular(((*x as u64 + *y as u64) % *p as u64) as u32)
            }
            _ => panic!("coefficient does not belong to {self}"),
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (_, Coeff::Rational(x)) => Coeff::Rational(-x),
            (CoefficientField::Prime(p), Coeff::Modular(x)) => Coeff::Modular(if *x == 0 { 0 } else { p - x }),
            _ => panic!("coefficient does not belong to {self}"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (_, Coeff::Rational(x), Coeff::Rational(y)) => Coeff::Rational(x * y),
            (CoefficientField::Prime(p), Coeff::Modular(x), Coeff::Modular(y)) => {
                Coeff::Modular(((*x as u64 * *y as u64) % *p as u64) as u32)
            }
            _ => panic!("coefficient does not belong to {self}"),
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: &Coeff) -> Coeff {
        assert!(!self.is_zero(a), "inverse of zero");
        match (self, a) {
            (_, Coeff::Rational(x)) => Coeff::Rational(x.recip()),
            (CoefficientField::Prime(p), Coeff::Modular(x)) => {
                let (g, s, _) = ext_gcd(*x as i64, *p as i64);
                debug_assert_eq!(g, 1);
                Coeff::Modular(s.rem_euclid(*p as i64) as u32)
            }
            _ => panic!("coefficient does not belong to {self}"),
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.mul(a, &self.inv(b))
    }

    /// Sign and magnitude for printing. Modular values use the symmetric
    /// representative in `(-p/2, p/2]`.
    pub(crate) fn sign_and_magnitude(&self, a: &Coeff) -> (bool, String) {
        match (self, a) {
            (_, Coeff::Rational(x)) => (x.is_negative(), x.abs().to_string()),
            (CoefficientField::Prime(p), Coeff::Modular(x)) => {
                if *x > p / 2 {
                    (true, (p - x).to_string())
                } else {
                    (false, x.to_string())
                }
            }
            _ => panic!("coefficient does not belong to {self}"),
        }
    }

    pub fn format(&self, a: &Coeff) -> String {
        let (neg, mag) = self.sign_and_magnitude(a);
        if neg {
            format!("-{mag}")
        } else {
            mag
        }
    }
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, s, t) = ext_gcd(b, a % b);
        (g, t, s - (a / b) * t)
    }
}

impl fmt::Display for CoefficientField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientField::Rationals => write!(f, "Q"),
            CoefficientField::Prime(p) => write!(f, "GF({p})"),
        }
    }
}
