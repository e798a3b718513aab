//! Sums `Σ p_k(x)·e^(μ_k x)` with Laurent-polynomial parts and distinct rates.
//!
//! This class is closed under addition, multiplication and differentiation,
//! which is everything the Rodrigues formulas and the antiderivative checker
//! need. Equality is canonical: two values are equal iff they represent the
//! same function.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::arith::{forward_binop, GaussianRational};
use crate::poly::{LaurentPoly, Poly};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExpPoly {
    terms: BTreeMap<GaussianRational, LaurentPoly>,
}

impl ExpPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `part·e^(rate·x)`
    pub fn term(rate: GaussianRational, part: LaurentPoly) -> Self {
        let mut out = ExpPoly::zero();
        out.add_part(rate, part);
        out
    }

    /// `e^(rate·x)`
    pub fn exp(rate: GaussianRational) -> Self {
        Self::term(rate, LaurentPoly::one())
    }

    /// A plain polynomial (rate zero).
    pub fn poly(p: &Poly) -> Self {
        Self::term(GaussianRational::zero(), LaurentPoly::from(p))
    }

    pub fn laurent(p: LaurentPoly) -> Self {
        Self::term(GaussianRational::zero(), p)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GaussianRational, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn rates(&self) -> impl Iterator<Item = &GaussianRational> {
        self.terms.keys()
    }

    pub fn part(&self, rate: &GaussianRational) -> LaurentPoly {
        self.terms.get(rate).cloned().unwrap_or_default()
    }

    fn add_part(&mut self, rate: GaussianRational, part: LaurentPoly) {
        if part.is_zero() {
            return;
        }
        let entry = self.terms.entry(rate.clone()).or_default();
        *entry += part;
        if entry.is_zero() {
            self.terms.remove(&rate);
        }
    }

    pub fn scale(&self, k: &GaussianRational) -> ExpPoly {
        let mut out = ExpPoly::zero();
        for (r, p) in &self.terms {
            out.add_part(r.clone(), p.scale(k));
        }
        out
    }

    /// Multiply every part by a Laurent polynomial.
    pub fn mul_laurent(&self, q: &LaurentPoly) -> ExpPoly {
        let mut out = ExpPoly::zero();
        for (r, p) in &self.terms {
            out.add_part(r.clone(), p * q);
        }
        out
    }

    /// `d/dx [p·e^(μx)] = (p′ + μp)·e^(μx)`, termwise.
    pub fn derivative(&self) -> ExpPoly {
        let mut out = ExpPoly::zero();
        for (r, p) in &self.terms {
            out.add_part(r.clone(), p.derivative() + p.scale(r));
        }
        out
    }

    pub fn nth_derivative(&self, n: usize) -> ExpPoly {
        (0..n).fold(self.clone(), |f, _| f.derivative())
    }

    /// The value as a Laurent polynomial, if only the zero rate is present.
    pub fn as_laurent(&self) -> Option<LaurentPoly> {
        match self.terms.len() {
            0 => Some(LaurentPoly::zero()),
            1 => self.terms.get(&GaussianRational::zero()).cloned(),
            _ => None,
        }
    }

    /// The value as an ordinary polynomial, if it is one.
    pub fn as_poly(&self) -> Option<Poly> {
        self.as_laurent()?.to_poly()
    }

    /// True iff the value is a constant function.
    pub fn is_constant(&self) -> bool {
        self.as_laurent()
            .is_some_and(|p| p.terms().all(|(k, _)| k == 0))
    }
}

forward_binop!(ExpPoly, Add, add, AddAssign, add_assign, |a, b| {
    let mut out = a.clone();
    for (r, p) in &b.terms {
        out.add_part(r.clone(), p.clone());
    }
    out
});
forward_binop!(ExpPoly, Sub, sub, SubAssign, sub_assign, |a, b| {
    let mut out = a.clone();
    for (r, p) in &b.terms {
        out.add_part(r.clone(), -p);
    }
    out
});
forward_binop!(ExpPoly, Mul, mul, MulAssign, mul_assign, |a, b| {
    let mut out = ExpPoly::zero();
    for (r1, p1) in &a.terms {
        for (r2, p2) in &b.terms {
            out.add_part(r1 + r2, p1 * p2);
        }
    }
    out
});

impl Neg for &ExpPoly {
    type Output = ExpPoly;
    fn neg(self) -> ExpPoly {
        self.scale(&GaussianRational::from_int(-1))
    }
}

impl Neg for ExpPoly {
    type Output = ExpPoly;
    fn neg(self) -> ExpPoly {
        -&self
    }
}

impl fmt::Debug for ExpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(r, p)| format!("[{p:?}]·e^(({r})x)")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    fn inv_x_exp() -> ExpPoly {
        ExpPoly::term(g(1), LaurentPoly::monomial(g(1), -1))
    }

    #[test]
    fn first_rodrigues_step() {
        let d = inv_x_exp().derivative();
        let expected = ExpPoly::term(g(1), LaurentPoly::from_terms([(-1, g(1)), (-2, g(-1))]));
        assert_eq!(d, expected);
        assert_eq!(inv_x_exp().nth_derivative(1), expected);
    }

    #[test]
    fn second_rodrigues_step() {
        let expected = ExpPoly::term(g(1), LaurentPoly::from_terms([(-1, g(1)), (-2, g(-2)), (-3, g(2))]));
        assert_eq!(inv_x_exp().nth_derivative(2), expected);
    }

    #[test]
    fn trivial_derivatives() {
        assert_eq!(ExpPoly::exp(g(1)).derivative(), ExpPoly::exp(g(1)));
        let p = Poly::from_ints(&[2, -2, 1]);
        assert_eq!(ExpPoly::poly(&p).derivative(), ExpPoly::poly(&p.derivative()));
        assert_eq!(inv_x_exp().nth_derivative(0), inv_x_exp());
    }

    #[test]
    fn rates_cancel_and_merge() {
        let i = GaussianRational::i();
        let a = ExpPoly::exp(i.clone());
        let b = ExpPoly::exp(-&i);
        assert_eq!(&(&a * &b), &ExpPoly::poly(&Poly::one()));
        assert_eq!(&a - &a, ExpPoly::zero());
        let doubled = &a + &a;
        assert_eq!(doubled.rates().count(), 1);
        assert_eq!(doubled.part(&i), LaurentPoly::monomial(g(2), 0));
    }

    #[test]
    fn cos_squared_plus_sin_squared() {
        let i = GaussianRational::i();
        let half = GaussianRational::real(Rational::new(1, 2).unwrap());
        let cos = (&ExpPoly::exp(i.clone()) + &ExpPoly::exp(-&i)).scale(&half);
        let sin = (&ExpPoly::exp(i.clone()) - &ExpPoly::exp(-&i)).scale(&(&half * &(-&i)));
        let one = &(&cos * &cos) + &(&sin * &sin);
        assert!(one.is_constant());
        assert_eq!(one.as_poly(), Some(Poly::one()));
        assert_eq!(cos.derivative(), -&sin);
    }
}
