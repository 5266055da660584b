//! Complex scalars that are either exact (pairs of big rationals) or
//! floating point, tagged by the backend that produced them.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type ComplexRational = Complex<BigRational>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Exact,
    Float,
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Backend::Exact => f.write_str("exact"),
            Backend::Float => f.write_str("float"),
        }
    }
}

/// A complex number held exactly when every input was exact.
///
/// Arithmetic between an exact and a float operand yields a float, so a
/// value only carries [`Backend::Exact`] when nothing upstream was rounded.
#[derive(Clone, Debug, PartialEq)]
pub enum MomentValue {
    Exact(ComplexRational),
    Float(Complex64),
}

impl MomentValue {
    pub fn zero() -> Self {
        MomentValue::Exact(Complex::new(BigRational::zero(), BigRational::zero()))
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        MomentValue::Exact(Complex::new(r, BigRational::zero()))
    }

    pub fn complex_rational(re: BigRational, im: BigRational) -> Self {
        MomentValue::Exact(Complex::new(re, im))
    }

    pub fn from_f64(x: f64) -> Self {
        MomentValue::Float(Complex64::new(x, 0.0))
    }

    pub fn from_complex64(z: Complex64) -> Self {
        MomentValue::Float(z)
    }

    pub fn backend(&self) -> Backend {
        match self {
            MomentValue::Exact(_) => Backend::Exact,
            MomentValue::Float(_) => Backend::Float,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, MomentValue::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&ComplexRational> {
        match self {
            MomentValue::Exact(z) => Some(z),
            MomentValue::Float(_) => None,
        }
    }

    /// The real part as an exact rational, when exact and purely real.
    pub fn as_real_rational(&self) -> Option<BigRational> {
        match self {
            MomentValue::Exact(z) if z.im.is_zero() => Some(z.re.clone()),
            _ => None,
        }
    }

    pub fn to_complex64(&self) -> Complex64 {
        match self {
            MomentValue::Exact(z) => Complex64::new(rational_to_f64(&z.re), rational_to_f64(&z.im)),
            MomentValue::Float(z) => *z,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            MomentValue::Exact(z) => z.re.is_zero() && z.im.is_zero(),
            MomentValue::Float(z) => z.re == 0.0 && z.im == 0.0,
        }
    }

    pub fn is_real(&self) -> bool {
        match self {
            MomentValue::Exact(z) => z.im.is_zero(),
            MomentValue::Float(z) => z.im == 0.0,
        }
    }

    pub fn conj(&self) -> Self {
        match self {
            MomentValue::Exact(z) => MomentValue::Exact(z.conj()),
            MomentValue::Float(z) => MomentValue::Float(z.conj()),
        }
    }

    /// `|z|²`, exact whenever `z` is.
    pub fn norm_sqr(&self) -> Self {
        match self {
            MomentValue::Exact(z) => MomentValue::from_rational(z.norm_sqr()),
            MomentValue::Float(z) => MomentValue::from_f64(z.norm_sqr()),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = MomentValue::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplicative inverse. Fails on zero.
    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Numeric("reciprocal of zero".into()));
        }
        Ok(match self {
            MomentValue::Exact(z) => MomentValue::Exact(z.inv()),
            MomentValue::Float(z) => MomentValue::Float(z.inv()),
        })
    }

    /// Square root of a nonnegative real value. Stays exact only when the
    /// value is the square of a rational.
    pub fn sqrt_real(&self) -> Result<Self> {
        if !self.is_real() {
            return Err(Error::domain("square root of a non-real value"));
        }
        match self {
            MomentValue::Exact(z) => {
                if z.re.is_negative() {
                    return Err(Error::domain("square root of a negative value"));
                }
                match rational_sqrt(&z.re) {
                    Some(r) => Ok(MomentValue::from_rational(r)),
                    None => Ok(MomentValue::from_f64(rational_to_f64(&z.re).sqrt())),
                }
            }
            MomentValue::Float(z) => {
                if z.re < 0.0 {
                    return Err(Error::domain("square root of a negative value"));
                }
                Ok(MomentValue::from_f64(z.re.sqrt()))
            }
        }
    }

    fn to_float(&self) -> Complex64 {
        self.to_complex64()
    }

    /// `p/q` for exact reals, `a + b i` style otherwise.
    pub fn to_exact_string(&self) -> String {
        self.to_string()
    }
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // numerator and denominator too large for f64 individually
        let n = r.numer().bits() as i64;
        let d = r.denom().bits() as i64;
        let shift = (n - d).clamp(-1000, 1000);
        let scaled = if shift >= 0 {
            r / BigRational::from_integer(BigInt::one() << shift as usize)
        } else {
            r * BigRational::from_integer(BigInt::one() << (-shift) as usize)
        };
        scaled.to_f64().unwrap_or(f64::NAN) * 2f64.powi(shift as i32)
    })
}

/// Exact square root of a nonnegative rational, if it exists.
pub fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

/// Parses `"p/q"`, `"p"`, or a decimal like `"0.25"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let num = BigInt::from_str(num.trim()).map_err(|_| Error::parse(format!("bad numerator in {s:?}")))?;
        let den = BigInt::from_str(den.trim()).map_err(|_| Error::parse(format!("bad denominator in {s:?}")))?;
        if den.is_zero() {
            return Err(Error::parse(format!("zero denominator in {s:?}")));
        }
        return Ok(BigRational::new(num, den));
    }
    if let Ok(n) = BigInt::from_str(s) {
        return Ok(BigRational::from_integer(n));
    }
    // plain decimal, read digit by digit so 0.1 stays 1/10
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = body
        .split_once('.')
        .ok_or_else(|| Error::parse(format!("not a rational: {s:?}")))?;
    if int_part.is_empty() && frac_part.is_empty()
        || !int_part.chars().all(|c| c.is_ascii_digit())
        || !frac_part.chars().all(|c| c.is_ascii_digit())
    {
        return Err(Error::parse(format!("not a rational: {s:?}")));
    }
    let digits = format!("{int_part}{frac_part}");
    let num = BigInt::from_str(if digits.is_empty() { "0" } else { &digits }).map_err(|_| Error::parse(s.to_string()))?;
    let den = num_traits::pow(BigInt::from(10), frac_part.len());
    let r = BigRational::new(num, den);
    Ok(if neg { -r } else { r })
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for MomentValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MomentValue::Exact(z) => {
                if z.im.is_zero() {
                    write!(f, "{}", fmt_rational(&z.re))
                } else if z.re.is_zero() {
                    write!(f, "{}i", fmt_rational(&z.im))
                } else if z.im.is_negative() {
                    write!(f, "{} - {}i", fmt_rational(&z.re), fmt_rational(&-z.im.clone()))
                } else {
                    write!(f, "{} + {}i", fmt_rational(&z.re), fmt_rational(&z.im))
                }
            }
            MomentValue::Float(z) => {
                if z.im == 0.0 {
                    write!(f, "{:e}", z.re)
                } else {
                    write!(f, "{:e} {} {:e}i", z.re, if z.im < 0.0 { '-' } else { '+' }, z.im.abs())
                }
            }
        }
    }
}

impl From<BigRational> for MomentValue {
    fn from(r: BigRational) -> Self {
        MomentValue::from_rational(r)
    }
}

impl From<Complex64> for MomentValue {
    fn from(z: Complex64) -> Self {
        MomentValue::Float(z)
    }
}

impl From<ComplexRational> for MomentValue {
    fn from(z: ComplexRational) -> Self {
        MomentValue::Exact(z)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl<'a> $trait<&'a MomentValue> for &'a MomentValue {
            type Output = MomentValue;
            fn $method(self, rhs: &'a MomentValue) -> MomentValue {
                match (self, rhs) {
                    (MomentValue::Exact(a), MomentValue::Exact(b)) => MomentValue::Exact(a $op b),
                    (a, b) => MomentValue::Float(a.to_float() $op b.to_float()),
                }
            }
        }
        impl $trait for MomentValue {
            type Output = MomentValue;
            fn $method(self, rhs: MomentValue) -> MomentValue {
                match (self, rhs) {
                    (MomentValue::Exact(a), MomentValue::Exact(b)) => MomentValue::Exact(a $op b),
                    (a, b) => MomentValue::Float(a.to_float() $op b.to_float()),
                }
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

impl<'a> Div<&'a MomentValue> for &'a MomentValue {
    type Output = Result<MomentValue>;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &'a MomentValue) -> Result<MomentValue> {
        Ok(self * &rhs.recip()?)
    }
}

impl Neg for MomentValue {
    type Output = MomentValue;
    fn neg(self) -> MomentValue {
        match self {
            MomentValue::Exact(a) => MomentValue::Exact(-a),
            MomentValue::Float(a) => MomentValue::Float(-a),
        }
    }
}

impl AddAssign<&MomentValue> for MomentValue {
    fn add_assign(&mut self, rhs: &MomentValue) {
        match (&mut *self, rhs) {
            (MomentValue::Exact(a), MomentValue::Exact(b)) => *a += b,
            _ => *self = MomentValue::Float(self.to_float() + rhs.to_float()),
        }
    }
}

impl MulAssign<&MomentValue> for MomentValue {
    fn mul_assign(&mut self, rhs: &MomentValue) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_times_float_downgrades() {
        let a = MomentValue::ratio(1, 2);
        let b = MomentValue::from_f64(2.0);
        let c = &a * &b;
        assert_eq!(c.backend(), Backend::Float);
        assert_eq!(c.to_complex64(), Complex64::new(1.0, 0.0));
        assert_eq!((&a * &a).backend(), Backend::Exact);
    }

    #[test]
    fn display_forms() {
        assert_eq!(MomentValue::ratio(2, 4).to_string(), "1/2");
        assert_eq!(MomentValue::from_int(3).to_string(), "3");
        let z = MomentValue::complex_rational(BigRational::zero(), BigRational::new(1.into(), 2.into()));
        assert_eq!(z.to_string(), "1/2i");
        let w = MomentValue::complex_rational(BigRational::one(), -BigRational::one());
        assert_eq!(w.to_string(), "1 - 1i");
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("3/6").unwrap(), BigRational::new(1.into(), 2.into()));
        assert_eq!(parse_rational("-0.25").unwrap(), BigRational::new((-1).into(), 4.into()));
        assert_eq!(parse_rational("7").unwrap(), BigRational::from_integer(7.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn sqrt_stays_exact_on_squares() {
        let v = MomentValue::ratio(9, 4).sqrt_real().unwrap();
        assert_eq!(v, MomentValue::ratio(3, 2));
        let w = MomentValue::from_int(2).sqrt_real().unwrap();
        assert_eq!(w.backend(), Backend::Float);
    }

    #[test]
    fn pow_matches_repeated_product() {
        let z = MomentValue::complex_rational(BigRational::one(), BigRational::new(1.into(), 2.into()));
        let mut acc = MomentValue::one();
        for _ in 0..5 {
            acc = &acc * &z;
        }
        assert_eq!(z.pow(5), acc);
    }
}
