//! Dense polynomials and sparse Laurent polynomials over Q(i).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::arith::{forward_binop, GaussianRational, Rational};

/// Dense univariate polynomial, coefficients in ascending degree.
///
/// Never stores a trailing zero; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<GaussianRational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_rationals(coeffs: impl IntoIterator<Item = Rational>) -> Self {
        Poly::new(coeffs.into_iter().map(GaussianRational::real).collect())
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| GaussianRational::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(GaussianRational::one())
    }

    pub fn x() -> Self {
        Poly::monomial(GaussianRational::one(), 1)
    }

    pub fn constant(c: GaussianRational) -> Self {
        Poly::new(vec![c])
    }

    /// `c·x^k`
    pub fn monomial(c: GaussianRational, k: usize) -> Self {
        let mut coeffs = vec![GaussianRational::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<GaussianRational> {
        self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> GaussianRational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&GaussianRational> {
        self.coeffs.last()
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(GaussianRational::is_real)
    }

    /// Number of nonzero coefficients.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn scale(&self, k: &GaussianRational) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn scale_rational(&self, k: &Rational) -> Poly {
        self.scale(&GaussianRational::real(k.clone()))
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![GaussianRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(&Rational::from(k as i64)))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, n: usize) -> Poly {
        (0..n).fold(self.clone(), |p, _| p.derivative())
    }

    /// Horner evaluation.
    pub fn eval(&self, z: &GaussianRational) -> GaussianRational {
        self.coeffs.iter().rev().fold(GaussianRational::zero(), |acc, c| &acc * z + c)
    }

    /// `q(x) = p(c·x)`.
    pub fn scale_arg(&self, c: &GaussianRational) -> Poly {
        let mut power = GaussianRational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a * &power);
            power = &power * c;
        }
        Poly::new(coeffs)
    }

    pub fn pow(&self, exp: u32) -> Poly {
        (0..exp).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// Real parts of the coefficients, or `None` if any is complex.
    pub fn real_coeffs(&self) -> Option<Vec<Rational>> {
        self.coeffs.iter().map(|c| c.is_real().then(|| c.re.clone())).collect()
    }

    /// Approximate real-argument evaluation using only the real parts.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.re.to_f64())
    }

    /// True iff every nonzero coefficient sits at a degree of parity `parity`.
    pub fn has_parity(&self, parity: usize) -> bool {
        self.coeffs.iter().enumerate().all(|(k, c)| c.is_zero() || k % 2 == parity % 2)
    }
}

forward_binop!(Poly, Add, add, AddAssign, add_assign, |a, b| {
    let n = a.coeffs.len().max(b.coeffs.len());
    Poly::new((0..n).map(|k| a.coeff(k) + b.coeff(k)).collect())
});
forward_binop!(Poly, Sub, sub, SubAssign, sub_assign, |a, b| {
    let n = a.coeffs.len().max(b.coeffs.len());
    Poly::new((0..n).map(|k| a.coeff(k) - b.coeff(k)).collect())
});
forward_binop!(Poly, Mul, mul, MulAssign, mul_assign, |a, b| {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let mut out = vec![GaussianRational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    Poly::new(out)
});

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Sparse polynomial in `x` and `x^{-1}`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, GaussianRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(GaussianRational::one(), 0)
    }

    /// `c·x^k`
    pub fn monomial(c: GaussianRational, k: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        LaurentPoly { terms }
    }

    pub fn from_terms(pairs: impl IntoIterator<Item = (i64, GaussianRational)>) -> Self {
        let mut out = LaurentPoly::zero();
        for (k, c) in pairs {
            out.add_term(k, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &GaussianRational)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, k: i64) -> GaussianRational {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn add_term(&mut self, k: i64, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn scale(&self, k: &GaussianRational) -> LaurentPoly {
        if k.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect() }
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: i64) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn derivative(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.terms
                .iter()
                .filter(|(e, _)| **e != 0)
                .map(|(e, c)| (e - 1, c.scale(&Rational::from(*e)))),
        )
    }

    /// The ordinary polynomial, if no negative exponent is present.
    pub fn to_poly(&self) -> Option<Poly> {
        if self.min_exponent().is_some_and(|e| e < 0) {
            return None;
        }
        let deg = match self.max_exponent() {
            None => return Some(Poly::zero()),
            Some(d) => d as usize,
        };
        let mut coeffs = vec![GaussianRational::zero(); deg + 1];
        for (e, c) in &self.terms {
            coeffs[*e as usize] = c.clone();
        }
        Some(Poly::new(coeffs))
    }
}

impl From<&Poly> for LaurentPoly {
    fn from(p: &Poly) -> Self {
        LaurentPoly::from_terms(p.coeffs().iter().enumerate().map(|(k, c)| (k as i64, c.clone())))
    }
}

impl From<Poly> for LaurentPoly {
    fn from(p: Poly) -> Self {
        LaurentPoly::from(&p)
    }
}

forward_binop!(LaurentPoly, Add, add, AddAssign, add_assign, |a, b| {
    let mut out = a.clone();
    for (k, c) in &b.terms {
        out.add_term(*k, c.clone());
    }
    out
});
forward_binop!(LaurentPoly, Sub, sub, SubAssign, sub_assign, |a, b| {
    let mut out = a.clone();
    for (k, c) in &b.terms {
        out.add_term(*k, -c);
    }
    out
});
forward_binop!(LaurentPoly, Mul, mul, MulAssign, mul_assign, |a, b| {
    let mut out = LaurentPoly::zero();
    for (i, x) in &a.terms {
        for (j, y) in &b.terms {
            out.add_term(i + j, x * y);
        }
    }
    out
});

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().rev().map(|(k, c)| format!("({c})x^{k}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::new(Rational::from(re), Rational::from(im))
    }

    #[test]
    fn arithmetic() {
        let xm1 = Poly::from_ints(&[-1, 1]);
        let xp1 = Poly::from_ints(&[1, 1]);
        assert_eq!(&xm1 + &Poly::one(), Poly::x());
        assert_eq!(&xm1 * &xp1, Poly::from_ints(&[-1, 0, 1]));
        assert_eq!(&Poly::zero() * &xm1, Poly::zero());
        assert_eq!(&xm1 - &xm1, Poly::zero());
        assert_eq!((&xm1 - &xm1).degree(), None);
        assert_eq!((&xm1 * &xp1).degree(), Some(2));
    }

    #[test]
    fn derivatives() {
        let e2 = Poly::from_ints(&[2, -2, 1]);
        assert_eq!(e2.derivative(), Poly::from_ints(&[-2, 2]));
        assert_eq!(Poly::from_ints(&[7]).derivative(), Poly::zero());
        assert_eq!(Poly::from_ints(&[-1, 1]).derivative(), Poly::one());
        assert_eq!(e2.nth_derivative(3), Poly::zero());
    }

    #[test]
    fn evaluation() {
        let e2 = Poly::from_ints(&[2, -2, 1]);
        assert_eq!(e2.eval(&GaussianRational::zero()), g(2, 0));
        let e1 = Poly::from_ints(&[-1, 1]);
        assert_eq!(e1.eval(&GaussianRational::i()), g(-1, 1));
        assert_eq!(e2.eval_f64(1.5), 1.25);
    }

    #[test]
    fn argument_scaling() {
        let i = GaussianRational::i();
        assert_eq!(Poly::from_ints(&[0, 0, 1]).scale_arg(&i), Poly::from_ints(&[0, 0, -1]));
        let e2 = Poly::from_ints(&[2, -2, 1]);
        assert_eq!(e2.scale_arg(&GaussianRational::one()), e2);
        assert_eq!(e2.scale_arg(&i), Poly::new(vec![g(2, 0), g(0, -2), g(-1, 0)]));
    }

    #[test]
    fn laurent_round_trip_and_derivative() {
        let p = Poly::from_ints(&[1, 2, 3]);
        assert_eq!(LaurentPoly::from(&p).to_poly(), Some(p));
        let inv = LaurentPoly::monomial(GaussianRational::one(), -1);
        assert_eq!(inv.to_poly(), None);
        assert_eq!(inv.derivative(), LaurentPoly::monomial(g(-1, 0), -2));
        assert_eq!(inv.shift(1), LaurentPoly::one());
        assert_eq!((&inv - &inv), LaurentPoly::zero());
        assert_eq!(LaurentPoly::zero().to_poly(), Some(Poly::zero()));
    }
}
