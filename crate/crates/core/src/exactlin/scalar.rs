use std::fmt;

use serde::{Deserialize, Serialize};

use super::rat::Rat;
use crate::error::{Error, Result};

/// Ground field: the rationals or a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rationals,
    Prime(u32),
}

pub(crate) fn mod_inverse(a: u64, p: u64) -> u64 {
    // p is prime, so a^(p-2) is the inverse.
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn prime(p: u32) -> Result<Field> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn is_char_zero(&self) -> bool {
        matches!(self, Field::Rationals)
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match *self {
            Field::Rationals => Scalar::Q(Rat::from_int(n)),
            Field::Prime(p) => Scalar::Fp(n.rem_euclid(p as i64) as u32, p),
        }
    }

    /// Maps a rational into this field; fails for prime fields dividing the denominator.
    pub fn from_rat(&self, r: &Rat) -> Result<Scalar> {
        match *self {
            Field::Rationals => Ok(Scalar::Q(r.clone())),
            Field::Prime(p) => r
                .mod_p(p as u64)
                .map(|v| Scalar::Fp(v as u32, p))
                .ok_or_else(|| Error::Parse { line: 0, msg: format!("{r} has no residue mod {p}") }),
        }
    }

    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let r: Rat =
            s.trim().parse().map_err(|e: super::rat::ParseRatError| Error::Parse { line: 0, msg: e.to_string() })?;
        self.from_rat(&r)
    }

    /// All elements of a prime field, in residue order. Empty for the rationals.
    pub fn elements(&self) -> Vec<Scalar> {
        match *self {
            Field::Rationals => Vec::new(),
            Field::Prime(p) => (0..p).map(|v| Scalar::Fp(v, p)).collect(),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "q"),
            Field::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl std::str::FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        match s.trim() {
            "q" | "Q" | "rationals" => Ok(Field::Rationals),
            other => {
                let p = other
                    .strip_prefix("fp:")
                    .and_then(|p| p.parse::<u32>().ok())
                    .ok_or_else(|| Error::Usage(format!("unknown field `{other}`")))?;
                Field::prime(p)
            }
        }
    }
}

/// A field element. Prime-field residues carry their modulus.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(Rat),
    Fp(u32, u32),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp(v, _) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::Fp(v, _) => *v == 1,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rationals,
            Scalar::Fp(_, p) => Field::Prime(*p),
        }
    }

    #[inline]
    pub fn add(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.add(b)),
            (Scalar::Fp(a, p), Scalar::Fp(b, _)) => Scalar::Fp(((*a as u64 + *b as u64) % *p as u64) as u32, *p),
            _ => panic!("mixed fields"),
        }
    }

    #[inline]
    pub fn sub(&self, o: &Scalar) -> Scalar {
        self.add(&o.neg())
    }

    #[inline]
    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(a.neg()),
            Scalar::Fp(0, p) => Scalar::Fp(0, *p),
            Scalar::Fp(a, p) => Scalar::Fp(p - a, *p),
        }
    }

    #[inline]
    pub fn mul(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.mul(b)),
            (Scalar::Fp(a, p), Scalar::Fp(b, _)) => Scalar::Fp(((*a as u64 * *b as u64) % *p as u64) as u32, *p),
            _ => panic!("mixed fields"),
        }
    }

    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(a.inv()),
            Scalar::Fp(a, p) => {
                assert!(*a != 0, "division by zero");
                Scalar::Fp(mod_inverse(*a as u64, *p as u64) as u32, *p)
            }
        }
    }

    pub fn div(&self, o: &Scalar) -> Scalar {
        self.mul(&o.inv())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => write!(f, "{r}"),
            Scalar::Fp(v, _) => write!(f, "{v}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(7).unwrap();
        let a = f.from_i64(3);
        assert_eq!(a.mul(&a.inv()), f.one());
        assert_eq!(a.neg().add(&a), f.zero());
        assert_eq!(f.from_i64(-1), f.from_i64(6));
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(1).is_err());
        assert_eq!("fp:5".parse::<Field>().unwrap(), Field::Prime(5));
    }

    #[test]
    fn rational_residues() {
        let f = Field::Prime(5);
        assert_eq!(f.parse_scalar("1/2").unwrap(), Scalar::Fp(3, 5));
        assert!(f.parse_scalar("1/10").is_err());
    }
}
