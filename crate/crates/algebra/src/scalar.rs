//! Exact coefficients: rationals and Gaussian rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::AlgebraError;

/// An exact number `re + im*i`. The `Gauss` tag always has a nonzero
/// imaginary part, so derived equality is structural equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Gauss(BigRational, BigRational),
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rat(BigRational::one())
    }

    pub fn i() -> Self {
        Scalar::Gauss(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rat(BigRational::from_integer(BigInt::from(n)))
    }

    /// `n/d`; panics on `d == 0`.
    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::Rat(rat(n, d))
    }

    pub fn complex(re: BigRational, im: BigRational) -> Self {
        if im.is_zero() {
            Scalar::Rat(re)
        } else {
            Scalar::Gauss(re, im)
        }
    }

    pub fn re(&self) -> BigRational {
        match self {
            Scalar::Rat(r) => r.clone(),
            Scalar::Gauss(r, _) => r.clone(),
        }
    }

    pub fn im(&self) -> BigRational {
        match self {
            Scalar::Rat(_) => BigRational::zero(),
            Scalar::Gauss(_, i) => i.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_one())
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Scalar::Rat(_))
    }

    pub fn conj(&self) -> Self {
        match self {
            Scalar::Rat(_) => self.clone(),
            Scalar::Gauss(a, b) => Scalar::Gauss(a.clone(), -b),
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        match self {
            Scalar::Rat(r) if r.is_zero() => None,
            Scalar::Rat(r) => Some(Scalar::Rat(r.recip())),
            Scalar::Gauss(a, b) => {
                let n = a * a + b * b;
                Some(Scalar::complex(a / &n, -(b / &n)))
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Option<Self> {
        other.inv().map(|d| self * &d)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::Rat(r)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            _ => Scalar::complex(self.re() + o.re(), self.im() + o.im()),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            _ => Scalar::complex(self.re() - o.re(), self.im() - o.im()),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Rat(a), Scalar::Gauss(c, d)) | (Scalar::Gauss(c, d), Scalar::Rat(a)) => {
                Scalar::complex(a * c, a * d)
            }
            (Scalar::Gauss(a, b), Scalar::Gauss(c, d)) => {
                Scalar::complex(a * c - b * d, a * d + b * c)
            }
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Gauss(a, b) => Scalar::Gauss(-a, -b),
        }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for Scalar {
            type Output = Scalar;
            fn $f(self, o: Scalar) -> Scalar { (&self).$f(&o) }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $f(self, o: &Scalar) -> Scalar { (&self).$f(o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl std::ops::AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        match (&mut *self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => *a += b,
            _ => *self = &*self + o,
        }
    }
}

fn fmt_rat(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{}", fmt_rat(r)),
            Scalar::Gauss(a, b) => {
                let sign = if b.is_negative() { '-' } else { '+' };
                write!(f, "{}{}{}*i", fmt_rat(a), sign, fmt_rat(&b.abs()))
            }
        }
    }
}

fn parse_rat(s: &str, whole: &str) -> Result<BigRational, AlgebraError> {
    let bad = || AlgebraError::BadScalar(whole.to_string());
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    if n.is_empty() || d.is_empty() || d.starts_with(['+', '-']) {
        return Err(bad());
    }
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

impl FromStr for Scalar {
    type Err = AlgebraError;

    /// Accepts `p`, `p/q`, `c/d*i`, `a/b+c/d*i` and `a/b-c/d*i`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.is_empty() {
            return Err(AlgebraError::BadScalar(s.to_string()));
        }
        let Some(body) = t.strip_suffix("*i") else {
            return Ok(Scalar::Rat(parse_rat(t, s)?));
        };
        // split at the last sign that is not the leading one
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(k, _)| k)
            .last();
        let (re, im) = match split {
            Some(k) => (parse_rat(&body[..k], s)?, {
                let im = &body[k..];
                parse_rat(im.strip_prefix('+').unwrap_or(im), s)?
            }),
            None => (BigRational::zero(), parse_rat(body, s)?),
        };
        Ok(Scalar::complex(re, im))
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
