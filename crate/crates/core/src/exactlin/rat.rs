use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary precision rational number.
///
/// Values whose numerator and denominator fit in an `i64` are kept inline and
/// computed with `i128` intermediates; anything larger spills to a
/// `BigRational`. The representation is canonical: a value is `Small` iff it
/// fits, so derived equality on the variants is value equality.
#[derive(Clone, Debug)]
pub enum Rat {
    Small(i64, i64),
    Big(BigRational),
}

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rat {
    pub const ZERO: Rat = Rat::Small(0, 1);
    pub const ONE: Rat = Rat::Small(1, 1);

    pub fn from_int(n: i64) -> Rat {
        Rat::Small(n, 1)
    }

    /// Builds `num/den` in lowest terms. Panics on a zero denominator.
    pub fn new(num: i64, den: i64) -> Rat {
        Rat::from_i128(num as i128, den as i128)
    }

    fn from_i128(mut num: i128, mut den: i128) -> Rat {
        assert!(den != 0, "zero denominator");
        if den < 0 {
            num = -num;
            den = -den;
        }
        let g = gcd_i128(num, den);
        if g > 1 {
            num /= g;
            den /= g;
        }
        if num == 0 {
            return Rat::ZERO;
        }
        match (i64::try_from(num), i64::try_from(den)) {
            (Ok(n), Ok(d)) => Rat::Small(n, d),
            _ => Rat::Big(BigRational::new_raw(BigInt::from(num), BigInt::from(den))),
        }
    }

    fn from_big(r: BigRational) -> Rat {
        // BigRational arithmetic keeps values reduced with positive denominator.
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Rat::Small(n, d),
            _ => Rat::Big(r),
        }
    }

    fn to_big(&self) -> BigRational {
        match self {
            Rat::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Rat::Big(r) => r.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rat::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Rat::Small(1, 1))
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Rat::Small(n, _) => BigInt::from(*n),
            Rat::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Rat::Small(_, d) => BigInt::from(*d),
            Rat::Big(r) => r.denom().clone(),
        }
    }

    pub fn add(&self, other: &Rat) -> Rat {
        match (self, other) {
            (Rat::Small(a, b), Rat::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    Rat::from_i128(a + c, b)
                } else {
                    Rat::from_i128(a * d + c * b, b * d)
                }
            }
            _ => Rat::from_big(self.to_big() + other.to_big()),
        }
    }

    pub fn neg(&self) -> Rat {
        match self {
            Rat::Small(n, d) if *n != i64::MIN => Rat::Small(-n, *d),
            _ => Rat::from_big(-self.to_big()),
        }
    }

    pub fn sub(&self, other: &Rat) -> Rat {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Rat) -> Rat {
        match (self, other) {
            (Rat::Small(a, b), Rat::Small(c, d)) => Rat::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128),
            _ => Rat::from_big(self.to_big() * other.to_big()),
        }
    }

    pub fn inv(&self) -> Rat {
        assert!(!self.is_zero(), "division by zero");
        match self {
            Rat::Small(n, d) => Rat::from_i128(*d as i128, *n as i128),
            Rat::Big(r) => Rat::from_big(r.recip()),
        }
    }

    pub fn div(&self, other: &Rat) -> Rat {
        self.mul(&other.inv())
    }

    /// Residue modulo `p`, or `None` when `p` divides the denominator.
    pub fn mod_p(&self, p: u64) -> Option<u64> {
        let pb = BigInt::from(p);
        let n = self.numer().mod_floor(&pb).to_u64()?;
        let d = self.denom().mod_floor(&pb).to_u64()?;
        if d == 0 {
            return None;
        }
        Some(n * super::scalar::mod_inverse(d, p) % p)
    }
}

impl PartialEq for Rat {
    fn eq(&self, other: &Rat) -> bool {
        match (self, other) {
            (Rat::Small(a, b), Rat::Small(c, d)) => a == c && b == d,
            (Rat::Big(a), Rat::Big(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Rat {}

impl Hash for Rat {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Rat::Small(n, d) => {
                0u8.hash(state);
                n.hash(state);
                d.hash(state);
            }
            Rat::Big(r) => {
                1u8.hash(state);
                r.hash(state);
            }
        }
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Rat) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Rat) -> Ordering {
        match (self, other) {
            (Rat::Small(a, b), Rat::Small(c, d)) => (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128)),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rat::Small(n, 1) => write!(f, "{n}"),
            Rat::Small(n, d) => write!(f, "{n}/{d}"),
            Rat::Big(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Rat::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRatError(pub String);

impl fmt::Display for ParseRatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational `{}`", self.0)
    }
}

impl FromStr for Rat {
    type Err = ParseRatError;

    fn from_str(s: &str) -> Result<Rat, ParseRatError> {
        let err = || ParseRatError(s.to_string());
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let n: BigInt = n.parse().map_err(|_| err())?;
        let d: BigInt = d.parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        let mut r = BigRational::new(n, d);
        if r.denom().is_negative() {
            r = BigRational::new_raw(-r.numer().clone(), -r.denom().clone());
        }
        Ok(Rat::from_big(r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_sign() {
        assert_eq!(Rat::new(2, -4), Rat::new(-1, 2));
        assert_eq!(Rat::new(0, -7), Rat::ZERO);
        assert_eq!(Rat::new(6, 3).to_string(), "2");
        assert_eq!(Rat::new(-6, 4).to_string(), "-3/2");
    }

    #[test]
    fn spills_to_big_and_back() {
        let big = Rat::from_int(i64::MAX).mul(&Rat::from_int(i64::MAX));
        assert!(matches!(big, Rat::Big(_)));
        let back = big.div(&Rat::from_int(i64::MAX));
        assert_eq!(back, Rat::from_int(i64::MAX));
        assert!(matches!(back, Rat::Small(..)));
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["0", "-3/7", "12", "123456789012345678901234567891/2"] {
            let r: Rat = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert_eq!("4/-6".parse::<Rat>().unwrap(), Rat::new(-2, 3));
        assert!("1/0".parse::<Rat>().is_err());
    }

    #[test]
    fn mod_p_residue() {
        assert_eq!(Rat::new(1, 2).mod_p(5), Some(3));
        assert_eq!(Rat::new(1, 5).mod_p(5), None);
        assert_eq!(Rat::from_int(-1).mod_p(7), Some(6));
    }
}
