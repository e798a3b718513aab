//! Exact scalars: arbitrary-precision rationals and Gaussian rationals `a + bi`.
//!
//! Every value is kept in canonical form (positive, coprime denominator), so
//! structural equality is mathematical equality.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An exact rational number.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Always positive.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Self> {
        Rational::one().checked_div(self)
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, exp: i64) -> Result<Self> {
        if exp < 0 {
            return self.recip()?.pow(-exp);
        }
        let mut acc = Rational::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        Ok(acc)
    }

    /// Returns the value as an `i64` when it is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }

    /// Nearest double; may be infinite for huge values.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or_else(|| {
            if self.is_negative() {
                f64::NEG_INFINITY
            } else {
                f64::INFINITY
            }
        })
    }

    /// Exact conversion of a finite double.
    pub fn from_f64(x: f64) -> Option<Self> {
        BigRational::from_float(x).map(Rational)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `p` or `p/q` with optional sign on `p`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidRational(s.to_string());
        let t = s.trim();
        let parse_int = |part: &str| -> Result<BigInt> {
            let p = part.trim();
            if p.is_empty() || p.starts_with('+') && p.len() == 1 {
                return Err(bad());
            }
            p.parse::<BigInt>().map_err(|_| bad())
        };
        match t.split_once('/') {
            Some((num, den)) => {
                let den_str = den.trim();
                if den_str.starts_with('-') || den_str.starts_with('+') {
                    return Err(bad());
                }
                let d = parse_int(den_str)?;
                if d.is_zero() {
                    return Err(bad());
                }
                Rational::new(parse_int(num)?, d)
            }
            None => Ok(Rational::from_integer(parse_int(t)?)),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! forward_binop {
    ($ty:ident, $trait:ident, $method:ident, $assign_trait:ident, $assign_method:ident, $body:expr) => {
        impl<'a> $trait<&'a $ty> for &'a $ty {
            type Output = $ty;
            fn $method(self, rhs: &'a $ty) -> $ty {
                let f: fn(&$ty, &$ty) -> $ty = $body;
                f(self, rhs)
            }
        }
        impl $trait<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a $ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &'a $ty) -> $ty {
                (&self).$method(rhs)
            }
        }
        impl<'a> $assign_trait<&'a $ty> for $ty {
            fn $assign_method(&mut self, rhs: &'a $ty) {
                *self = (&*self).$method(rhs);
            }
        }
        impl $assign_trait<$ty> for $ty {
            fn $assign_method(&mut self, rhs: $ty) {
                *self = (&*self).$method(&rhs);
            }
        }
    };
}
pub(crate) use forward_binop;

forward_binop!(Rational, Add, add, AddAssign, add_assign, |a, b| Rational(&a.0 + &b.0));
forward_binop!(Rational, Sub, sub, SubAssign, sub_assign, |a, b| Rational(&a.0 - &b.0));
forward_binop!(Rational, Mul, mul, MulAssign, mul_assign, |a, b| Rational(&a.0 * &b.0));

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

/// An element `re + im·i` of the field Q(i).
///
/// The derived ordering is lexicographic on `(re, im)`. It carries no
/// mathematical meaning and exists so values can key ordered maps.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussianRational { re, im: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(Rational::from(n))
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn i() -> Self {
        GaussianRational { re: Rational::zero(), im: Rational::one() }
    }

    /// `i^k` for any integer `k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Self::one(),
            1 => Self::i(),
            2 => Self::from_int(-1),
            _ => -Self::i(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -&self.im }
    }

    /// `re² + im²`.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, k: &Rational) -> Self {
        GaussianRational { re: &self.re * k, im: &self.im * k }
    }

    pub fn checked_div(&self, rhs: &GaussianRational) -> Result<Self> {
        let n = rhs.norm_sqr();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let num = self * &rhs.conj();
        Ok(GaussianRational { re: num.re.checked_div(&n)?, im: num.im.checked_div(&n)? })
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one().checked_div(self)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
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

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> Self {
        GaussianRational::real(r)
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        GaussianRational::from_int(n)
    }
}

forward_binop!(GaussianRational, Add, add, AddAssign, add_assign, |a, b| GaussianRational {
    re: &a.re + &b.re,
    im: &a.im + &b.im,
});
forward_binop!(GaussianRational, Sub, sub, SubAssign, sub_assign, |a, b| GaussianRational {
    re: &a.re - &b.re,
    im: &a.im - &b.im,
});
forward_binop!(GaussianRational, Mul, mul, MulAssign, mul_assign, |a, b| GaussianRational {
    re: &a.re * &b.re - &a.im * &b.im,
    im: &a.re * &b.im + &a.im * &b.re,
});

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re, im: -self.im }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -&self.re, im: -&self.im }
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) if self.im.is_negative() => write!(f, "{} - {}i", self.re, self.im.abs()),
            (false, false) => write!(f, "{} + {}i", self.re, self.im),
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `n!/l!` for `l <= n`, as the product `(l+1)(l+2)…n`.
pub fn falling_ratio(n: u64, l: u64) -> BigInt {
    debug_assert!(l <= n);
    (l + 1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Generalized binomial coefficient `a(a−1)…(a−j+1)/j!` for rational `a`.
pub fn binomial_general(a: &Rational, j: u64) -> Rational {
    let mut numer = Rational::one();
    let mut k = a.clone();
    for _ in 0..j {
        numer = &numer * &k;
        k = &k - &Rational::one();
    }
    let denom = Rational::from_integer(factorial(j));
    numer.checked_div(&denom).expect("factorial is nonzero")
}

/// Greatest common divisor of the numerator and denominator, exposed for
/// invariant checks.
pub fn is_canonical(r: &Rational) -> bool {
    r.denom().is_positive() && r.numer().gcd(r.denom()).is_one()
        && (!r.numer().is_zero() || r.denom().is_one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn rational_basics() {
        assert_eq!(q("1/2") + q("1/3"), q("5/6"));
        assert_eq!(q("3/4") * Rational::zero(), Rational::zero());
        let z = q("3/4") * Rational::zero();
        assert_eq!(z.numer(), &BigInt::from(0));
        assert_eq!(z.denom(), &BigInt::from(1));
        let half = Rational::new(2, 4).unwrap();
        assert_eq!(half.numer(), &BigInt::from(1));
        assert_eq!(half.denom(), &BigInt::from(2));
        assert_eq!(Rational::new(3, -6).unwrap(), q("-1/2"));
        assert!(q("1/3") < q("1/2"));
        assert_eq!(q("-7/3").to_string(), "-7/3");
        assert_eq!(q("6/3").to_string(), "2");
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(q("1/2").checked_div(&Rational::zero()), Err(Error::DivisionByZero));
        assert_eq!(Rational::new(1, 0), Err(Error::DivisionByZero));
        assert_eq!(GaussianRational::one().checked_div(&GaussianRational::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn malformed_literals() {
        for s in ["", "1/", "/2", "1/0", "a", "1/-2", "1.5", "1//2", "+"] {
            assert!(s.parse::<Rational>().is_err(), "{s:?} should not parse");
        }
        assert_eq!(q(" -3/5 "), Rational::new(-3, 5).unwrap());
        assert_eq!(q("+4"), Rational::from(4));
    }

    #[test]
    fn gaussian_basics() {
        let i = GaussianRational::i();
        assert_eq!(&i * &i, GaussianRational::from_int(-1));
        assert_eq!(i.pow(4), GaussianRational::one());
        let a = GaussianRational::new(q("1"), q("1"));
        assert_eq!(&a * &a.conj(), GaussianRational::from_int(2));
        for k in -8..8 {
            assert_eq!(GaussianRational::i_pow(k), if k >= 0 { i.pow(k as u32) } else { i.pow((-k) as u32).recip().unwrap() });
        }
        let b = GaussianRational::new(q("3/2"), q("-2"));
        assert_eq!(a.checked_div(&b).unwrap() * b, a);
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(factorial(12), BigInt::from(479001600u64));
        for n in 1..=30u64 {
            assert_eq!(factorial(n), factorial(n - 1) * n);
        }
        assert_eq!(falling_ratio(6, 2), BigInt::from(360));
    }

    #[test]
    fn generalized_binomial() {
        assert_eq!(binomial_general(&q("-1"), 3), q("-1"));
        assert_eq!(binomial_general(&q("7/3"), 0), Rational::one());
        assert_eq!(binomial_general(&q("5/2"), 2), q("15/8"));
        for j in 0..=64u64 {
            let expected = if j % 2 == 0 { Rational::one() } else { -Rational::one() };
            assert_eq!(binomial_general(&q("-1"), j), expected);
        }
        // integer top agrees with Pascal
        assert_eq!(binomial_general(&q("10"), 3), q("120"));
        assert_eq!(binomial_general(&q("3"), 5), Rational::zero());
    }

    #[test]
    fn f64_roundtrip() {
        assert_eq!(Rational::from_f64(0.75).unwrap(), q("3/4"));
        assert_eq!(q("-1/4").to_f64(), -0.25);
        assert!(Rational::from_f64(f64::NAN).is_none());
    }
}
