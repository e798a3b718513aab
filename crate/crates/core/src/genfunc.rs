//! Truncated power series in `t` with polynomial coefficients in `x`, the
//! exponential generating functions of the families, and the degenerate-case
//! generating-function formula for hypergeometric equations with linear `A`, `B`.

use std::fmt;

use crate::arith::{binomial_general, factorial, GaussianRational, Rational};
use crate::error::{Error, Result};
use crate::families::{c_from_s, e_explicit, em_explicit, s_explicit};
use crate::poly::Poly;
use crate::report::Report;

/// `Σ_{k=0}^{N} a_k(x) t^k`, exact up to and including `t^N`.
#[derive(Clone, PartialEq, Eq)]
pub struct FormalSeries {
    order: usize,
    coeffs: Vec<Poly>,
}

impl FormalSeries {
    /// Pads or truncates `coeffs` to `order + 1` entries.
    pub fn new(order: usize, mut coeffs: Vec<Poly>) -> Self {
        coeffs.resize(order + 1, Poly::zero());
        FormalSeries { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        FormalSeries::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        FormalSeries::new(order, vec![Poly::one()])
    }

    /// A series whose coefficients are scalars.
    pub fn from_scalars(order: usize, scalars: impl IntoIterator<Item = GaussianRational>) -> Self {
        FormalSeries::new(order, scalars.into_iter().take(order + 1).map(Poly::constant).collect())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    /// Coefficient of `t^k`; zero above the truncation order.
    pub fn coeff(&self, k: usize) -> Poly {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    fn same_order(&self, other: &FormalSeries) -> Result<()> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(Error::OrderMismatch { left: self.order, right: other.order })
        }
    }

    pub fn add(&self, other: &FormalSeries) -> Result<FormalSeries> {
        self.same_order(other)?;
        Ok(FormalSeries {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &FormalSeries) -> Result<FormalSeries> {
        self.same_order(other)?;
        Ok(FormalSeries {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    /// Cauchy product, truncated.
    pub fn mul(&self, other: &FormalSeries) -> Result<FormalSeries> {
        self.same_order(other)?;
        let n = self.order;
        let coeffs = (0..=n)
            .map(|k| {
                (0..=k).fold(Poly::zero(), |acc, j| {
                    let (a, b) = (&self.coeffs[j], &other.coeffs[k - j]);
                    if a.is_zero() || b.is_zero() {
                        acc
                    } else {
                        &acc + &(a * b)
                    }
                })
            })
            .collect();
        Ok(FormalSeries { order: n, coeffs })
    }

    pub fn scale(&self, c: &GaussianRational) -> FormalSeries {
        FormalSeries { order: self.order, coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect() }
    }

    /// Multiplicative inverse; the `t^0` coefficient must be a nonzero constant.
    pub fn inverse(&self) -> Result<FormalSeries> {
        let a0 = &self.coeffs[0];
        if a0.degree() != Some(0) {
            return Err(Error::NotInvertible);
        }
        let inv0 = a0.coeff(0).recip()?;
        let mut out = vec![Poly::constant(inv0.clone())];
        for k in 1..=self.order {
            let mut acc = Poly::zero();
            for j in 1..=k {
                acc = &acc + &(&self.coeffs[j] * &out[k - j]);
            }
            out.push(acc.scale(&-&inv0));
        }
        Ok(FormalSeries { order: self.order, coeffs: out })
    }

    /// `F(c·x, d·t)`
    pub fn substitute(&self, x_scale: &GaussianRational, t_scale: &GaussianRational) -> FormalSeries {
        let mut power = GaussianRational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a.scale_arg(x_scale).scale(&power));
            power = &power * t_scale;
        }
        FormalSeries { order: self.order, coeffs }
    }

    /// `∂F/∂x`, coefficientwise.
    pub fn d_dx(&self) -> FormalSeries {
        FormalSeries { order: self.order, coeffs: self.coeffs.iter().map(Poly::derivative).collect() }
    }

    /// `k!·[t^k]F`, i.e. the family member when `F` is an exponential generating function.
    pub fn egf_member(&self, k: usize) -> Poly {
        self.coeff(k).scale_rational(&Rational::from_integer(factorial(k as u64)))
    }
}

impl fmt::Debug for FormalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().enumerate().map(|(k, p)| format!("[{p:?}]t^{k}")).collect();
        write!(f, "{} + O(t^{})", parts.join(" + "), self.order + 1)
    }
}

/// `e^(scale·x·t) = Σ (scale·x)^k t^k / k!`
pub fn series_exp_xt(scale: &Rational, order: usize) -> FormalSeries {
    let base = Poly::monomial(GaussianRational::real(scale.clone()), 1);
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut term = Poly::one();
    for k in 0..=order {
        if k > 0 {
            term = (&term * &base).scale_rational(&Rational::new(1, k as i64).expect("k > 0"));
        }
        coeffs.push(term.clone());
    }
    FormalSeries::new(order, coeffs)
}

/// `(1 + a·t)^K = Σ C(K, k) a^k t^k` for rational `K`.
pub fn binomial_series(a: &Rational, exponent: &Rational, order: usize) -> FormalSeries {
    let mut a_pow = Rational::one();
    let mut scalars = Vec::with_capacity(order + 1);
    for k in 0..=order as u64 {
        scalars.push(GaussianRational::real(binomial_general(exponent, k) * &a_pow));
        a_pow = &a_pow * a;
    }
    FormalSeries::from_scalars(order, scalars)
}

/// `1/(1 + t^power)` as a series.
fn reciprocal_one_plus_t_pow(power: usize, order: usize) -> FormalSeries {
    let mut scalars = vec![GaussianRational::zero(); order + 1];
    scalars[0] = GaussianRational::one();
    if power <= order {
        scalars[power] = GaussianRational::one();
    }
    FormalSeries::from_scalars(order, scalars).inverse().expect("constant term is 1")
}

/// `E(x,t) = e^(xt)/(1+t)`
pub fn series_e(order: usize) -> FormalSeries {
    series_exp_xt(&Rational::one(), order)
        .mul(&reciprocal_one_plus_t_pow(1, order))
        .expect("same order")
}

/// `E^(m)(x,t) = e^(mxt)/(1+t)`
pub fn series_em(m: &Rational, order: usize) -> Result<FormalSeries> {
    if m.is_zero() {
        return Err(Error::ZeroRate);
    }
    series_exp_xt(m, order).mul(&reciprocal_one_plus_t_pow(1, order))
}

/// `S(x,t) = −e^(xt)/(1+t²)`
pub fn series_s(order: usize) -> FormalSeries {
    series_c(order).scale(&GaussianRational::from_int(-1))
}

/// `C(x,t) = e^(xt)/(1+t²)`
pub fn series_c(order: usize) -> FormalSeries {
    series_exp_xt(&Rational::one(), order)
        .mul(&reciprocal_one_plus_t_pow(2, order))
        .expect("same order")
}

/// Checks `−2S(x,t) = 2C(x,t) = E(ix,−it) + E(−ix,it)` coefficientwise.
pub fn series_connection_check(order: usize) -> Report {
    let mut report = Report::new("generating-function connection");
    let i = GaussianRational::i();
    let e = series_e(order);
    let e_side = e.substitute(&i, &-&i).add(&e.substitute(&-&i, &i)).expect("same order");
    let two = GaussianRational::from_int(2);
    let c2 = series_c(order).scale(&two);
    let s2 = series_s(order).scale(&GaussianRational::from_int(-2));
    for k in 0..=order {
        let (a, b, c) = (s2.coeff(k), c2.coeff(k), e_side.coeff(k));
        report.record(format!("t^{k}: -2S = 2C"), a == b);
        report.record(format!("t^{k}: 2C = E(ix,-it) + E(-ix,it)"), b == c);
    }
    report
}

/// Checks the partial differential equations `∂E/∂x + E = e^(xt)` and
/// `∂²S/∂x² + S = −e^(xt)` (and the `C` companion) up to `order`.
pub fn series_ode_check(order: usize) -> Report {
    let mut report = Report::new("generating-function ODEs");
    let exp = series_exp_xt(&Rational::one(), order);
    let e = series_e(order);
    let s = series_s(order);
    let c = series_c(order);
    let e_lhs = e.d_dx().add(&e).expect("same order");
    let s_lhs = s.d_dx().d_dx().add(&s).expect("same order");
    let c_lhs = c.d_dx().d_dx().add(&c).expect("same order");
    for k in 0..=order {
        report.record(format!("t^{k}: dE/dx + E = e^(xt)"), e_lhs.coeff(k) == exp.coeff(k));
        report.record(format!("t^{k}: d2S/dx2 + S = -e^(xt)"), s_lhs.coeff(k) == -exp.coeff(k));
        report.record(format!("t^{k}: d2C/dx2 + C = e^(xt)"), c_lhs.coeff(k) == exp.coeff(k));
    }
    report
}

/// Checks `n!·[tⁿ]` of each generating function against its family.
pub fn series_family_check(order: usize, rates: &[Rational]) -> Report {
    let mut report = Report::new("generating-function coefficients");
    let (e, s, c) = (series_e(order), series_s(order), series_c(order));
    for n in 0..=order {
        report.record(format!("n={n} n![t^n]E = e_n"), e.egf_member(n) == e_explicit(n));
        report.record(format!("n={n} n![t^n]S = s_n"), s.egf_member(n) == s_explicit(n));
        report.record(format!("n={n} n![t^n]C = c_n"), c.egf_member(n) == c_from_s(n));
    }
    for m in rates {
        match series_em(m, order) {
            Ok(em) => {
                for n in 0..=order {
                    report.record_result(
                        format!("m={m} n={n} n![t^n]E^(m) = e_n^(m)"),
                        em_explicit(n, m).map(|p| p == em.egf_member(n)),
                    );
                }
            }
            Err(e) => report.record_with(format!("m={m} E^(m)"), false, e.to_string()),
        }
    }
    report
}

/// Hypergeometric-type equation `A y″ + B y′ + λ y = 0` with `A(x) = αx + β`
/// and `B(x) = γx + δ₀ + δ₁·n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearHGSpec {
    alpha: Rational,
    beta: Rational,
    gamma: Rational,
    delta0: Rational,
    delta1: Rational,
}

impl LinearHGSpec {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational, delta0: Rational, delta1: Rational) -> Result<Self> {
        if alpha.is_zero() {
            return Err(Error::ZeroAlpha);
        }
        Ok(LinearHGSpec { alpha, beta, gamma, delta0, delta1 })
    }

    /// `x y″ + (x − n) y′ − n y = 0`, solved by `e_n`.
    pub fn e_family() -> Self {
        Self::em_family(&Rational::one()).expect("rate 1 is nonzero")
    }

    /// `x y″ + (mx − n) y′ − mn y = 0`, solved by `e_n^(m)`.
    pub fn em_family(m: &Rational) -> Result<Self> {
        if m.is_zero() {
            return Err(Error::ZeroRate);
        }
        LinearHGSpec::new(Rational::one(), Rational::zero(), m.clone(), Rational::zero(), Rational::from(-1))
    }

    /// `x y″ + (α_L + 1 − x) y′ + n y = 0`, the associated Laguerre equation.
    pub fn laguerre(order: &Rational) -> Self {
        LinearHGSpec::new(Rational::one(), Rational::zero(), Rational::from(-1), order + &Rational::one(), Rational::zero())
            .expect("alpha is 1")
    }

    /// `(x + 1) y″ − (x + n) y′ + n y = 0`, solved by `(−1)ⁿ(x + 1)ⁿ`.
    pub fn shifted_power() -> Self {
        LinearHGSpec::new(Rational::one(), Rational::one(), Rational::from(-1), Rational::zero(), Rational::from(-1))
            .expect("alpha is 1")
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    pub fn gamma(&self) -> &Rational {
        &self.gamma
    }

    /// `δ = δ₀ + δ₁·n`
    pub fn delta(&self, n: usize) -> Rational {
        &self.delta0 + &(&self.delta1 * &Rational::from(n as i64))
    }

    /// `λ_n = −n·B′ − n(n−1)/2·A″ = −nγ` for linear `A`.
    pub fn lambda(&self, n: usize) -> Rational {
        -(&self.gamma * &Rational::from(n as i64))
    }

    pub fn a_poly(&self) -> Poly {
        Poly::from_rationals([self.beta.clone(), self.alpha.clone()])
    }

    pub fn b_poly(&self, n: usize) -> Poly {
        Poly::from_rationals([self.delta(n), self.gamma.clone()])
    }

    /// `(−βγ + α(δ − α))/α²`, the exponent of `A` in `ρ`.
    fn rho_exponent(&self, n: usize) -> Rational {
        let num = &(-(&self.beta * &self.gamma)) + &(&self.alpha * &(&self.delta(n) - &self.alpha));
        num.checked_div(&(&self.alpha * &self.alpha)).expect("alpha is nonzero")
    }

    fn rate(&self) -> Rational {
        self.gamma.checked_div(&self.alpha).expect("alpha is nonzero")
    }

    /// Residual of `A y″ + B y′ + λ_n y` for a candidate `y`.
    pub fn residual(&self, n: usize, y: &Poly) -> Poly {
        let lam = y.scale_rational(&self.lambda(n));
        &(&(&self.a_poly() * &y.nth_derivative(2)) + &(&self.b_poly(n) * &y.derivative())) + &lam
    }
}

/// `(αx + β)^exponent · e^(rate·x)`, held symbolically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RhoForm {
    pub alpha: Rational,
    pub beta: Rational,
    pub exponent: Rational,
    pub rate: Rational,
}

/// The weight `ρ` solving `(Aρ)′ = Bρ`.
pub fn rho_linear(spec: &LinearHGSpec, n: usize) -> RhoForm {
    RhoForm {
        alpha: spec.alpha.clone(),
        beta: spec.beta.clone(),
        exponent: spec.rho_exponent(n),
        rate: spec.rate(),
    }
}

/// `σ = ρ_n = Aⁿ·ρ`.
pub fn sigma_linear(spec: &LinearHGSpec, n: usize) -> RhoForm {
    let mut rho = rho_linear(spec, n);
    rho.exponent = &rho.exponent + &Rational::from(n as i64);
    rho
}

/// True iff the exponent of `σ` does not depend on `n`, i.e. `δ₁ = −α`.
pub fn nu_degeneracy_check(spec: &LinearHGSpec) -> bool {
    spec.delta1 == -&spec.alpha
}

/// `E(x,t) = σ(ξ)/σ(x)` with `ξ = x + A(x)·t`, which for linear `A` is
/// `(1 + αt)^K · e^((γ/α)(αx + β)t)` with `K` the constant exponent of `σ`.
pub fn theorem2_genfunc(spec: &LinearHGSpec, order: usize) -> Result<FormalSeries> {
    if !nu_degeneracy_check(spec) {
        return Err(Error::NotDegenerate);
    }
    let k = sigma_linear(spec, 0).exponent;
    let binom = binomial_series(&spec.alpha, &k, order);
    // (γ/α)(αx + β) = γx + γβ/α
    let lin = Poly::from_rationals([&spec.gamma * &spec.beta.checked_div(&spec.alpha)?, spec.gamma.clone()]);
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut term = Poly::one();
    for j in 0..=order {
        if j > 0 {
            term = (&term * &lin).scale_rational(&Rational::new(1, j as i64)?);
        }
        coeffs.push(term.clone());
    }
    binom.mul(&FormalSeries::new(order, coeffs))
}

/// `y_n = (1/ρ) dⁿ/dxⁿ (Aⁿ ρ)` with unit normalization, for `β = 0` and an
/// integer exponent in `ρ` (so that every intermediate is a Laurent polynomial
/// times one exponential).
pub fn rodrigues_linear(spec: &LinearHGSpec, n: usize) -> Result<Poly> {
    use crate::exppoly::ExpPoly;
    use crate::poly::LaurentPoly;

    if !spec.beta.is_zero() {
        return Err(Error::Unsupported("Rodrigues route needs beta = 0".into()));
    }
    let rho = rho_linear(spec, n);
    let sigma = sigma_linear(spec, n);
    let (Some(rho_exp), Some(sigma_exp)) = (rho.exponent.to_i64(), sigma.exponent.to_i64()) else {
        return Err(Error::Unsupported("Rodrigues route needs an integer weight exponent".into()));
    };
    // A^k = α^k x^k, folded into the constant factors.
    let rate = GaussianRational::real(rho.rate.clone());
    let alpha_sigma = GaussianRational::real(spec.alpha.pow(sigma_exp)?);
    let alpha_rho = GaussianRational::real(spec.alpha.pow(rho_exp)?);
    let weighted = ExpPoly::term(rate.clone(), LaurentPoly::monomial(alpha_sigma, sigma_exp));
    let inv_rho = ExpPoly::term(-&rate, LaurentPoly::monomial(alpha_rho.recip()?, -rho_exp));
    let y = &weighted.nth_derivative(n) * &inv_rho;
    y.as_poly()
        .ok_or_else(|| Error::Internal(format!("Rodrigues route for {spec:?} left {y:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn rp(coeffs: &[&str]) -> Poly {
        Poly::from_rationals(coeffs.iter().map(|s| q(s)))
    }

    #[test]
    fn geometric_inverse() {
        for n in [0, 1, 5, 12] {
            let one_plus_t = FormalSeries::from_scalars(n, [GaussianRational::one(), GaussianRational::one()]);
            let inv = one_plus_t.inverse().unwrap();
            for k in 0..=n {
                let expected = if k % 2 == 0 { 1 } else { -1 };
                assert_eq!(inv.coeff(k), Poly::from_ints(&[expected]));
            }
            assert_eq!(one_plus_t.mul(&inv).unwrap(), FormalSeries::one(n));
        }
        assert_eq!(FormalSeries::zero(3).inverse(), Err(Error::NotInvertible));
    }

    #[test]
    fn arithmetic_basics() {
        let f = series_exp_xt(&Rational::one(), 2);
        assert_eq!(f.mul(&FormalSeries::zero(2)).unwrap(), FormalSeries::zero(2));
        let sq = f.mul(&f).unwrap();
        assert_eq!(sq, FormalSeries::new(2, vec![Poly::one(), Poly::from_ints(&[0, 2]), Poly::from_ints(&[0, 0, 2])]));
        assert_eq!(f.add(&series_exp_xt(&Rational::one(), 3)), Err(Error::OrderMismatch { left: 2, right: 3 }));
        assert!(f.mul(&FormalSeries::one(4)).is_err());
    }

    #[test]
    fn exponential_series() {
        let f = series_exp_xt(&Rational::one(), 2);
        assert_eq!(f.coeffs(), &[Poly::one(), Poly::x(), rp(&["0", "0", "1/2"])]);
        assert_eq!(series_exp_xt(&Rational::zero(), 4), FormalSeries::one(4));
        assert_eq!(series_exp_xt(&q("3"), 2).coeff(2), rp(&["0", "0", "9/2"]));
    }

    #[test]
    fn named_series_low_order() {
        assert_eq!(series_e(3).coeff(1), Poly::from_ints(&[-1, 1]));
        assert_eq!(series_s(3).coeff(0), Poly::from_ints(&[-1]));
        assert_eq!(series_c(3).coeff(2), rp(&["-1", "0", "1/2"]));
        assert_eq!(series_em(&Rational::zero(), 3), Err(Error::ZeroRate));
    }

    #[test]
    fn connection_low_orders() {
        let r = series_connection_check(1);
        assert!(r.all_passed(), "{r}");
        let i = GaussianRational::i();
        let e = series_e(1);
        let side = e.substitute(&i, &-&i).add(&e.substitute(&-&i, &i)).unwrap();
        assert_eq!(side.coeff(0), Poly::from_ints(&[2]));
        assert_eq!(side.coeff(1), Poly::from_ints(&[0, 2]));
    }

    #[test]
    fn rho_and_sigma() {
        let e = LinearHGSpec::e_family();
        let rho = rho_linear(&e, 3);
        assert_eq!((rho.exponent.clone(), rho.rate.clone()), (q("-4"), q("1")));
        for n in [0, 7] {
            let s = sigma_linear(&e, n);
            assert_eq!((s.exponent, s.rate), (q("-1"), q("1")));
        }
        let al = q("5/2");
        let lag = LinearHGSpec::laguerre(&al);
        let rho = rho_linear(&lag, 4);
        assert_eq!((rho.exponent, rho.rate), (al.clone(), q("-1")));
        assert_eq!(sigma_linear(&lag, 4).exponent, &al + &q("4"));
        let em = LinearHGSpec::em_family(&q("-3/5")).unwrap();
        let rho = rho_linear(&em, 6);
        assert_eq!((rho.exponent, rho.rate), (q("-7"), q("-3/5")));
        assert_eq!(LinearHGSpec::new(q("0"), q("1"), q("1"), q("0"), q("0")), Err(Error::ZeroAlpha));
    }

    #[test]
    fn degeneracy() {
        assert!(nu_degeneracy_check(&LinearHGSpec::e_family()));
        assert!(!nu_degeneracy_check(&LinearHGSpec::laguerre(&q("0"))));
        assert!(!nu_degeneracy_check(&LinearHGSpec::laguerre(&q("2"))));
        assert!(nu_degeneracy_check(&LinearHGSpec::shifted_power()));
        assert_eq!(theorem2_genfunc(&LinearHGSpec::laguerre(&q("1")), 3), Err(Error::NotDegenerate));
    }

    #[test]
    fn lambda_helper() {
        let m = q("-3/5");
        let spec = LinearHGSpec::em_family(&m).unwrap();
        for n in 0..6 {
            assert_eq!(spec.lambda(n), -(&m * &Rational::from(n as i64)));
        }
    }

    #[test]
    fn shifted_power_family() {
        let spec = LinearHGSpec::shifted_power();
        let g = theorem2_genfunc(&spec, 8).unwrap();
        for n in 0..=8 {
            let expected = Poly::from_ints(&[-1, -1]).pow(n as u32);
            assert_eq!(g.egf_member(n), expected, "n={n}");
            assert!(spec.residual(n, &expected).is_zero());
        }
    }

    #[test]
    fn rodrigues_linear_routes() {
        let e = LinearHGSpec::e_family();
        for n in 0..8 {
            assert_eq!(rodrigues_linear(&e, n).unwrap(), e_explicit(n));
        }
        // (1/n!)·route gives L_n^(α) for integer α
        let lag = LinearHGSpec::laguerre(&q("2"));
        let l3 = rodrigues_linear(&lag, 3).unwrap().scale_rational(&q("1/6"));
        assert_eq!(l3, crate::families::laguerre_general(3, &q("2")));
        assert!(rodrigues_linear(&LinearHGSpec::shifted_power(), 2).is_err());
    }
}
