//! Coefficient fields: the rationals and prime fields 𝔽_p.
//!
//! Coefficients are always stored as [`BigRational`]; in characteristic p
//! they are kept as integers in `[0, p)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Coef = BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum Field {
    #[default]
    Rational,
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if !(2..1 << 31).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not a prime below 2^31")));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Coef {
        Coef::zero()
    }

    pub fn one(&self) -> Coef {
        Coef::one()
    }

    pub fn from_i64(&self, v: i64) -> Coef {
        self.reduce_int(BigInt::from(v))
    }

    fn reduce_int(&self, v: BigInt) -> Coef {
        match self {
            Field::Rational => Coef::from_integer(v),
            Field::Prime(p) => Coef::from_integer(v.mod_floor(&BigInt::from(*p))),
        }
    }

    /// Maps an exact rational into the field.
    pub fn from_rational(&self, q: &BigRational) -> Result<Coef> {
        match self {
            Field::Rational => Ok(q.clone()),
            Field::Prime(p) => {
                let pb = BigInt::from(*p);
                let den = q.denom().mod_floor(&pb);
                if den.is_zero() {
                    return Err(Error::InvalidCoefficient(q.to_string()));
                }
                let inv = mod_inverse(&den, &pb);
                Ok(Coef::from_integer((q.numer() * inv).mod_floor(&pb)))
            }
        }
    }

    /// Parses an exact rational such as `-3/4` and maps it into the field.
    pub fn parse(&self, s: &str) -> Result<Coef> {
        let s = s.trim();
        let bad = || Error::InvalidCoefficient(s.to_string());
        let q = match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                BigRational::new(n, d)
            }
            None => BigRational::from_integer(s.parse().map_err(|_| bad())?),
        };
        self.from_rational(&q)
    }

    pub fn add(&self, a: &Coef, b: &Coef) -> Coef {
        match self {
            Field::Rational => a + b,
            Field::Prime(_) => self.reduce_int(a.numer() + b.numer()),
        }
    }

    pub fn sub(&self, a: &Coef, b: &Coef) -> Coef {
        match self {
            Field::Rational => a - b,
            Field::Prime(_) => self.reduce_int(a.numer() - b.numer()),
        }
    }

    pub fn mul(&self, a: &Coef, b: &Coef) -> Coef {
        match self {
            Field::Rational => a * b,
            Field::Prime(_) => self.reduce_int(a.numer() * b.numer()),
        }
    }

    pub fn neg(&self, a: &Coef) -> Coef {
        match self {
            Field::Rational => -a,
            Field::Prime(_) => self.reduce_int(-a.numer()),
        }
    }

    /// Multiplicative inverse; `a` must be nonzero.
    pub fn inv(&self, a: &Coef) -> Coef {
        assert!(!a.is_zero(), "inverse of zero");
        match self {
            Field::Rational => a.recip(),
            Field::Prime(p) => {
                let pb = BigInt::from(*p);
                Coef::from_integer(mod_inverse(a.numer(), &pb))
            }
        }
    }

    pub fn div(&self, a: &Coef, b: &Coef) -> Coef {
        self.mul(a, &self.inv(b))
    }

    /// Renders a coefficient in the symmetric range for 𝔽_p, as a fraction over ℚ.
    pub fn display(&self, a: &Coef) -> String {
        match self {
            Field::Rational => a.to_string(),
            Field::Prime(p) => {
                let v = a.numer().to_i64().unwrap_or(0);
                let p = *p as i64;
                if v > p / 2 {
                    (v - p).to_string()
                } else {
                    v.to_string()
                }
            }
        }
    }
}

fn mod_inverse(a: &BigInt, p: &BigInt) -> BigInt {
    let e = a.mod_floor(p).extended_gcd(p);
    debug_assert!(e.gcd.abs().is_one());
    (e.x * e.gcd.signum()).mod_floor(p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(7).unwrap();
        let a = f.from_i64(3);
        let b = f.from_i64(5);
        assert_eq!(f.add(&a, &b), f.from_i64(1));
        assert_eq!(f.mul(&a, &b), f.from_i64(1));
        assert_eq!(f.inv(&a), f.from_i64(5));
        assert_eq!(f.parse("1/2").unwrap(), f.from_i64(4));
        assert_eq!(f.display(&f.from_i64(6)), "-1");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Field::prime(8).is_err());
        assert!(Field::prime(2).unwrap().parse("1/2").is_err());
        assert!(Field::Rational.parse("1/0").is_err());
        assert!(Field::Rational.parse("x").is_err());
        assert_eq!(Field::Rational.parse("-6/4").unwrap().to_string(), "-3/2");
    }
}
