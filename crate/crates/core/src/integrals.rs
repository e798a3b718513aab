//! Closed-form antiderivatives of `xⁿ sin x`, `xⁿ cos x` and `xⁿ e^(mx)`,
//! their exact symbolic check, float evaluation, and an independent adaptive
//! Simpson quadrature used as a numerical oracle.

use std::fmt;
use std::str::FromStr;

use astro_float::{BigFloat, Consts, Radix, RoundingMode};

use crate::arith::{GaussianRational, Rational};
use crate::error::{Error, Result};
use crate::exppoly::ExpPoly;
use crate::families::{antideriv_poly_exp, c_from_s, chat, s_explicit, shat};
use crate::poly::{LaurentPoly, Poly};
use crate::report::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IntegralKind {
    Sin,
    Cos,
    Exp,
}

impl IntegralKind {
    pub const ALL: [IntegralKind; 3] = [IntegralKind::Sin, IntegralKind::Cos, IntegralKind::Exp];

    pub fn name(self) -> &'static str {
        match self {
            IntegralKind::Sin => "sin",
            IntegralKind::Cos => "cos",
            IntegralKind::Exp => "exp",
        }
    }
}

impl fmt::Display for IntegralKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IntegralKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IntegralKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Unknown { kind: "integral kind", name: s.to_string() })
    }
}

/// Polynomial parts of a closed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosedFormParts {
    /// `cos_part·cos x + sin_part·sin x`
    Trig { cos_part: Poly, sin_part: Poly },
    /// `poly·e^(rate·x)`
    Exp { poly: Poly, rate: Rational },
}

/// An antiderivative of `xⁿ·basis(x)` plus an integration constant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedForm {
    pub kind: IntegralKind,
    pub n: usize,
    pub parts: ClosedFormParts,
    pub constant: Rational,
}

/// `S_n = s_n cos x + ŝ_{n−1} sin x`, `C_n = c_n sin x + ĉ_{n−1} cos x`,
/// `E_n^(m) = P e^(mx)`. `m` defaults to 1 and is rejected for trig kinds.
pub fn closed_form(kind: IntegralKind, n: usize, m: Option<&Rational>) -> Result<ClosedForm> {
    let ni = n as i64;
    let parts = match kind {
        IntegralKind::Sin | IntegralKind::Cos if m.is_some() => {
            return Err(Error::InvalidArgument(format!("rate m does not apply to {kind}")))
        }
        IntegralKind::Sin => ClosedFormParts::Trig { cos_part: s_explicit(n), sin_part: shat(ni - 1) },
        IntegralKind::Cos => ClosedFormParts::Trig { cos_part: chat(ni - 1), sin_part: c_from_s(n) },
        IntegralKind::Exp => {
            let rate = m.cloned().unwrap_or_else(Rational::one);
            ClosedFormParts::Exp { poly: antideriv_poly_exp(n, &rate)?, rate }
        }
    };
    Ok(ClosedForm { kind, n, parts, constant: Rational::zero() })
}

impl ClosedForm {
    pub fn with_constant(mut self, c: Rational) -> Self {
        self.constant = c;
        self
    }

    /// The rate of the exponential, for `Exp` forms.
    pub fn rate(&self) -> Option<&Rational> {
        match &self.parts {
            ClosedFormParts::Exp { rate, .. } => Some(rate),
            ClosedFormParts::Trig { .. } => None,
        }
    }

    /// The function as an exact exponential polynomial.
    pub fn to_exp_poly(&self) -> ExpPoly {
        let constant = ExpPoly::poly(&Poly::constant(GaussianRational::real(self.constant.clone())));
        let body = match &self.parts {
            ClosedFormParts::Trig { cos_part, sin_part } => {
                &(&cos_exp() * &ExpPoly::poly(cos_part)) + &(&sin_exp() * &ExpPoly::poly(sin_part))
            }
            ClosedFormParts::Exp { poly, rate } => {
                ExpPoly::term(GaussianRational::real(rate.clone()), LaurentPoly::from(poly))
            }
        };
        &body + &constant
    }

    /// `xⁿ·basis(x)` as an exact exponential polynomial.
    pub fn integrand(&self) -> ExpPoly {
        integrand(self.kind, self.n, self.rate())
    }
}

fn half() -> GaussianRational {
    GaussianRational::real(Rational::new(1, 2).expect("nonzero"))
}

/// `cos x = (e^(ix) + e^(−ix))/2`
pub fn cos_exp() -> ExpPoly {
    let i = GaussianRational::i();
    (&ExpPoly::exp(i.clone()) + &ExpPoly::exp(-&i)).scale(&half())
}

/// `sin x = (e^(ix) − e^(−ix))/(2i)`
pub fn sin_exp() -> ExpPoly {
    let i = GaussianRational::i();
    (&ExpPoly::exp(i.clone()) - &ExpPoly::exp(-&i)).scale(&(&half() * &(-&i)))
}

/// `xⁿ·sin x`, `xⁿ·cos x` or `xⁿ·e^(mx)` (rate 1 if `m` is absent).
pub fn integrand(kind: IntegralKind, n: usize, m: Option<&Rational>) -> ExpPoly {
    let xn = ExpPoly::poly(&Poly::monomial(GaussianRational::one(), n));
    match kind {
        IntegralKind::Sin => &xn * &sin_exp(),
        IntegralKind::Cos => &xn * &cos_exp(),
        IntegralKind::Exp => {
            let rate = m.cloned().unwrap_or_else(Rational::one);
            &xn * &ExpPoly::exp(GaussianRational::real(rate))
        }
    }
}

/// True iff the exact derivative of `cf` equals its integrand.
pub fn check_antiderivative(cf: &ClosedForm) -> bool {
    cf.to_exp_poly().derivative() == cf.integrand()
}

fn closed_exp_poly(kind: IntegralKind, n: i64) -> ExpPoly {
    if n < 0 {
        return ExpPoly::zero();
    }
    closed_form(kind, n as usize, None).expect("trig kinds take no rate").to_exp_poly()
}

/// Checks, up to an additive constant, the integration-by-parts identities
/// `S_n = −xⁿ cos x + n C_{n−1}`, `C_n = xⁿ sin x − n S_{n−1}` and their
/// two-step forms, for `1 <= n <= n_max`.
pub fn check_integral_recurrences(n_max: usize) -> Report {
    let mut report = Report::new("integral recurrences");
    let (cos, sin) = (cos_exp(), sin_exp());
    for n in 1..=n_max {
        let ni = n as i64;
        let xn = ExpPoly::poly(&Poly::monomial(GaussianRational::one(), n));
        let xn1 = ExpPoly::poly(&Poly::monomial(GaussianRational::one(), n - 1));
        let k = |v: i64| GaussianRational::from_int(v);
        let s_n = closed_exp_poly(IntegralKind::Sin, ni);
        let c_n = closed_exp_poly(IntegralKind::Cos, ni);
        let s_prev = closed_exp_poly(IntegralKind::Sin, ni - 1);
        let c_prev = closed_exp_poly(IntegralKind::Cos, ni - 1);
        let s_prev2 = closed_exp_poly(IntegralKind::Sin, ni - 2);
        let c_prev2 = closed_exp_poly(IntegralKind::Cos, ni - 2);

        let rhs = &(-&(&xn * &cos)) + &c_prev.scale(&k(ni));
        report.record(format!("n={n} S_n = -x^n cos x + n C_(n-1) + const"), (&s_n - &rhs).is_constant());
        let rhs = &(&xn * &sin) - &s_prev.scale(&k(ni));
        report.record(format!("n={n} C_n = x^n sin x - n S_(n-1) + const"), (&c_n - &rhs).is_constant());
        let rhs = &(&(-&(&xn * &cos)) + &(&xn1 * &sin).scale(&k(ni))) - &s_prev2.scale(&k(ni * (ni - 1)));
        report.record(
            format!("n={n} S_n = -x^n cos x + n x^(n-1) sin x - n(n-1) S_(n-2) + const"),
            (&s_n - &rhs).is_constant(),
        );
        let rhs = &(&(&xn * &sin) + &(&xn1 * &cos).scale(&k(ni))) - &c_prev2.scale(&k(ni * (ni - 1)));
        report.record(
            format!("n={n} C_n = x^n sin x + n x^(n-1) cos x - n(n-1) C_(n-2) + const"),
            (&c_n - &rhs).is_constant(),
        );
    }
    report
}

/// `s_n` from `(−iⁿ/2) x^(n+1) [(−1)ⁿ e^(−ix) Dⁿ(x^(−1) e^(ix)) + e^(ix) Dⁿ(x^(−1) e^(−ix))]`.
pub fn s_rodrigues(n: usize) -> Result<Poly> {
    let i = GaussianRational::i();
    let inv_x = LaurentPoly::monomial(GaussianRational::one(), -1);
    let d_plus = ExpPoly::term(i.clone(), inv_x.clone()).nth_derivative(n);
    let d_minus = ExpPoly::term(-&i, inv_x).nth_derivative(n);
    let sign = GaussianRational::from_int(if n.is_multiple_of(2) { 1 } else { -1 });
    let bracket = &(&ExpPoly::exp(-&i) * &d_plus).scale(&sign) + &(&ExpPoly::exp(i.clone()) * &d_minus);
    let prefactor = -&(&GaussianRational::i_pow(n as i64) * &half());
    let full = bracket
        .mul_laurent(&LaurentPoly::monomial(prefactor, n as i64 + 1));
    let p = full
        .as_poly()
        .ok_or_else(|| Error::Internal(format!("s_rodrigues n={n}: not a polynomial: {full:?}")))?;
    if !p.is_real() {
        return Err(Error::Internal(format!("s_rodrigues n={n}: imaginary residue in {p:?}")));
    }
    Ok(p)
}

/// Evaluates `cf` at a real point in double precision.
pub fn eval_closed_form(cf: &ClosedForm, x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::InvalidArgument(format!("evaluation point {x} is not finite")));
    }
    let value = match &cf.parts {
        ClosedFormParts::Trig { cos_part, sin_part } => {
            cos_part.eval_f64(x) * x.cos() + sin_part.eval_f64(x) * x.sin()
        }
        ClosedFormParts::Exp { poly, rate } => {
            let e = (rate.to_f64() * x).exp();
            if !e.is_finite() {
                return Err(Error::Overflow(format!("e^({rate}·{x})")));
            }
            poly.eval_f64(x) * e
        }
    } + cf.constant.to_f64();
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Overflow(format!("{} n={} at x={x}", cf.kind, cf.n)))
    }
}

/// Working precision, in bits, of [`definite_integral`].
const WIDE_BITS: usize = 192;

/// Extended-precision evaluation of a closed form at exactly representable
/// points. Polynomial parts reach `n!` near the origin, so `F(b) − F(a)`
/// loses most of its digits in double precision on short intervals.
struct Wide {
    cc: Consts,
}

impl Wide {
    const RM: RoundingMode = RoundingMode::ToEven;

    fn new() -> Result<Self> {
        Consts::new()
            .map(|cc| Wide { cc })
            .map_err(|e| Error::Internal(format!("extended-precision constants: {e:?}")))
    }

    fn rational(&mut self, r: &Rational) -> BigFloat {
        let num = BigFloat::parse(&r.numer().to_string(), Radix::Dec, WIDE_BITS, Self::RM, &mut self.cc);
        let den = BigFloat::parse(&r.denom().to_string(), Radix::Dec, WIDE_BITS, Self::RM, &mut self.cc);
        num.div(&den, WIDE_BITS, Self::RM)
    }

    fn poly(&mut self, p: &Poly, x: &BigFloat) -> BigFloat {
        let mut acc = BigFloat::from_f64(0.0, WIDE_BITS);
        for c in p.coeffs().iter().rev() {
            let c = self.rational(&c.re);
            acc = acc.mul(x, WIDE_BITS, Self::RM).add(&c, WIDE_BITS, Self::RM);
        }
        acc
    }

    fn eval(&mut self, cf: &ClosedForm, x: f64) -> BigFloat {
        let xw = BigFloat::from_f64(x, WIDE_BITS);
        let value = match &cf.parts {
            ClosedFormParts::Trig { cos_part, sin_part } => {
                let c = xw.cos(WIDE_BITS, Self::RM, &mut self.cc);
                let s = xw.sin(WIDE_BITS, Self::RM, &mut self.cc);
                let pc = self.poly(cos_part, &xw).mul(&c, WIDE_BITS, Self::RM);
                let ps = self.poly(sin_part, &xw).mul(&s, WIDE_BITS, Self::RM);
                pc.add(&ps, WIDE_BITS, Self::RM)
            }
            ClosedFormParts::Exp { poly, rate } => {
                let e = self.rational(rate).mul(&xw, WIDE_BITS, Self::RM).exp(WIDE_BITS, Self::RM, &mut self.cc);
                self.poly(poly, &xw).mul(&e, WIDE_BITS, Self::RM)
            }
        };
        let constant = self.rational(&cf.constant);
        value.add(&constant, WIDE_BITS, Self::RM)
    }

    fn round(&mut self, v: &BigFloat) -> Result<f64> {
        let text = v
            .format(Radix::Dec, Self::RM, &mut self.cc)
            .map_err(|e| Error::Internal(format!("extended-precision format: {e:?}")))?;
        text.parse::<f64>().map_err(|e| Error::Internal(format!("extended-precision value {text}: {e}")))
    }
}

/// Newton–Leibniz `F(b) − F(a)`, computed in extended precision and rounded
/// once. The endpoints are taken as the exact binary values of `a` and `b`.
pub fn definite_integral(cf: &ClosedForm, a: f64, b: f64) -> Result<f64> {
    // also rejects non-finite endpoints and overflowing exponentials
    eval_closed_form(cf, a)?;
    eval_closed_form(cf, b)?;
    if a == b {
        return Ok(0.0);
    }
    let mut wide = Wide::new()?;
    let diff = wide.eval(cf, b).sub(&wide.eval(cf, a), WIDE_BITS, Wide::RM);
    let value = wide.round(&diff)?;
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Overflow(format!("{} n={} on [{a}, {b}]", cf.kind, cf.n)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub est_error: f64,
    pub evaluations: usize,
}

pub const QUAD_MAX_DEPTH: usize = 50;

/// Sample count of the coarse `∫|f|` estimate that scales the tolerance.
const SCALE_PANELS: usize = 64;

struct Simpson<'a> {
    f: &'a dyn Fn(f64) -> f64,
    evaluations: usize,
    est_error: f64,
}

impl Simpson<'_> {
    fn eval(&mut self, x: f64) -> f64 {
        self.evaluations += 1;
        (self.f)(x)
    }

    #[allow(clippy::too_many_arguments)]
    fn refine(&mut self, a: f64, b: f64, fa: f64, fm: f64, fb: f64, whole: f64, tol: f64, depth: usize) -> Result<f64> {
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = (self.eval(lm), self.eval(rm));
        let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        let diff = left + right - whole;
        if diff.abs() <= 15.0 * tol {
            self.est_error += diff.abs() / 15.0;
            return Ok(left + right + diff / 15.0);
        }
        if depth >= QUAD_MAX_DEPTH {
            return Err(Error::MaxDepthExceeded(QUAD_MAX_DEPTH));
        }
        let l = self.refine(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1)?;
        let r = self.refine(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1)?;
        Ok(l + r)
    }
}

/// Adaptive Simpson with Richardson correction for an arbitrary smooth `f`.
///
/// Refinement starts from a fixed grid of panels, which also gives the
/// `∫|f|` estimate; `tol` is relative to `max(1, ∫|f|)` and is shared among
/// the panels by width.
pub fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> Result<QuadResult> {
    if !(a.is_finite() && b.is_finite()) || a > b {
        return Err(Error::InvalidArgument(format!("need finite a <= b, got [{a}, {b}]")));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    if a == b {
        return Ok(QuadResult { value: 0.0, est_error: 0.0, evaluations: 0 });
    }
    let mut s = Simpson { f, evaluations: 0, est_error: 0.0 };
    let h = (b - a) / SCALE_PANELS as f64;
    let mut panels = Vec::with_capacity(SCALE_PANELS);
    let mut abs_mass = 0.0;
    for k in 0..SCALE_PANELS {
        let x0 = a + k as f64 * h;
        let x1 = if k + 1 == SCALE_PANELS { b } else { x0 + h };
        let (f0, fm, f1) = (s.eval(x0), s.eval(0.5 * (x0 + x1)), s.eval(x1));
        abs_mass += (x1 - x0) / 6.0 * (f0.abs() + 4.0 * fm.abs() + f1.abs());
        panels.push((x0, x1, f0, fm, f1));
    }
    let abs_tol = tol * abs_mass.max(1.0);
    let mut value = 0.0;
    for (x0, x1, f0, fm, f1) in panels {
        let whole = (x1 - x0) / 6.0 * (f0 + 4.0 * fm + f1);
        value += s.refine(x0, x1, f0, fm, f1, whole, abs_tol * (x1 - x0) / (b - a), 0)?;
    }
    if !value.is_finite() {
        return Err(Error::Overflow("quadrature".into()));
    }
    Ok(QuadResult { value, est_error: s.est_error, evaluations: s.evaluations })
}

/// Numerically integrates `xⁿ·basis(x)` over `[a, b]`.
pub fn quad_adaptive(kind: IntegralKind, n: usize, m: Option<&Rational>, a: f64, b: f64, tol: f64) -> Result<QuadResult> {
    let exponent = n as i32;
    let rate = match (kind, m) {
        (IntegralKind::Exp, Some(r)) if r.is_zero() => return Err(Error::ZeroRate),
        (IntegralKind::Exp, Some(r)) => r.to_f64(),
        (IntegralKind::Exp, None) => 1.0,
        (_, Some(_)) => return Err(Error::InvalidArgument(format!("rate m does not apply to {kind}"))),
        (_, None) => 0.0,
    };
    let f: Box<dyn Fn(f64) -> f64> = match kind {
        IntegralKind::Sin => Box::new(move |x: f64| x.powi(exponent) * x.sin()),
        IntegralKind::Cos => Box::new(move |x: f64| x.powi(exponent) * x.cos()),
        IntegralKind::Exp => Box::new(move |x: f64| x.powi(exponent) * (rate * x).exp()),
    };
    adaptive_simpson(f.as_ref(), a, b, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn closed_form_examples() {
        let s0 = closed_form(IntegralKind::Sin, 0, None).unwrap();
        assert_eq!(s0.parts, ClosedFormParts::Trig { cos_part: Poly::from_ints(&[-1]), sin_part: Poly::zero() });
        let e2 = closed_form(IntegralKind::Exp, 2, Some(&Rational::one())).unwrap();
        assert_eq!(e2.parts, ClosedFormParts::Exp { poly: Poly::from_ints(&[2, -2, 1]), rate: Rational::one() });
        let s2 = closed_form(IntegralKind::Sin, 2, None).unwrap();
        assert_eq!(
            s2.parts,
            ClosedFormParts::Trig { cos_part: Poly::from_ints(&[2, 0, -1]), sin_part: Poly::from_ints(&[0, 2]) }
        );
        assert_eq!(closed_form(IntegralKind::Exp, 1, Some(&Rational::zero())), Err(Error::ZeroRate));
        assert!(closed_form(IntegralKind::Sin, 1, Some(&Rational::one())).is_err());
    }

    #[test]
    fn antiderivative_checks() {
        for kind in IntegralKind::ALL {
            for n in 0..6 {
                assert!(check_antiderivative(&closed_form(kind, n, None).unwrap()), "{kind} {n}");
            }
        }
        assert!(check_antiderivative(&closed_form(IntegralKind::Exp, 4, Some(&q("3"))).unwrap()));
        assert!(check_antiderivative(&closed_form(IntegralKind::Cos, 3, None).unwrap().with_constant(q("7/2"))));

        let mut bad = closed_form(IntegralKind::Sin, 3, None).unwrap();
        if let ClosedFormParts::Trig { cos_part, .. } = &mut bad.parts {
            *cos_part = &*cos_part + &Poly::one();
        }
        assert!(!check_antiderivative(&bad));
    }

    #[test]
    fn integral_recurrences_small() {
        let r = check_integral_recurrences(6);
        assert!(r.all_passed(), "{r}");
        assert_eq!(r.checks.len(), 24);
    }

    #[test]
    fn s_rodrigues_small() {
        assert_eq!(s_rodrigues(0).unwrap(), Poly::from_ints(&[-1]));
        assert_eq!(s_rodrigues(1).unwrap(), Poly::from_ints(&[0, -1]));
        assert_eq!(s_rodrigues(4).unwrap(), s_explicit(4));
    }

    #[test]
    fn float_evaluation() {
        let s1 = closed_form(IntegralKind::Sin, 1, None).unwrap();
        assert!((eval_closed_form(&s1, PI).unwrap() - PI).abs() < 1e-14);
        let e0 = closed_form(IntegralKind::Exp, 0, None).unwrap();
        assert_eq!(eval_closed_form(&e0, 0.0).unwrap(), 1.0);
        let c0 = closed_form(IntegralKind::Cos, 0, None).unwrap();
        assert!((eval_closed_form(&c0, PI / 2.0).unwrap() - 1.0).abs() < 1e-15);
        let big = closed_form(IntegralKind::Exp, 2, Some(&q("100"))).unwrap();
        assert!(matches!(eval_closed_form(&big, 10.0), Err(Error::Overflow(_))));
        assert!(eval_closed_form(&s1, f64::NAN).is_err());
    }

    #[test]
    fn definite_integrals() {
        let s1 = closed_form(IntegralKind::Sin, 1, None).unwrap();
        assert!((definite_integral(&s1, 0.0, PI).unwrap() - PI).abs() < 1e-12);
        assert_eq!(definite_integral(&s1, 0.0, 0.0).unwrap(), 0.0);
        let e1 = closed_form(IntegralKind::Exp, 1, None).unwrap();
        assert!((definite_integral(&e1, 0.0, 1.0).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn quadrature_oracle() {
        let r = quad_adaptive(IntegralKind::Sin, 1, None, 0.0, PI, 1e-12).unwrap();
        assert!((r.value - PI).abs() < 1e-11, "{r:?}");
        assert!(r.est_error >= 0.0);
        let z = quad_adaptive(IntegralKind::Cos, 4, None, 1.5, 1.5, 1e-12).unwrap();
        assert_eq!(z.value, 0.0);
        let e3 = closed_form(IntegralKind::Exp, 3, None).unwrap();
        let exact = definite_integral(&e3, 0.0, 2.0).unwrap();
        let r = quad_adaptive(IntegralKind::Exp, 3, None, 0.0, 2.0, 1e-12).unwrap();
        assert!((r.value - exact).abs() <= 1e-9 * exact.abs());
        assert!(quad_adaptive(IntegralKind::Sin, 1, None, 1.0, 0.0, 1e-12).is_err());
        assert!(quad_adaptive(IntegralKind::Sin, 1, None, 0.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn quadrature_depth_limit() {
        // a jump defeats the error estimate at any depth; near the origin the
        // depth-50 subintervals are still wider than the float spacing
        let step = |x: f64| if x < 1.0 / 300.0 { 0.0 } else { 1.0 };
        assert_eq!(adaptive_simpson(&step, 0.0, 1.0, 1e-300), Err(Error::MaxDepthExceeded(QUAD_MAX_DEPTH)));
    }
}
