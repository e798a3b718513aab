//! The polynomial families `e_n`, `s_n`, `c_n`, `ŝ_n`, `ĉ_n` and `e_n^(m)`,
//! each built by every independent route available.
//!
//! Families at a negative index are the zero polynomial.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::arith::{binomial_general, factorial, falling_ratio, GaussianRational, Rational};
use crate::error::{Error, Result};
use crate::exppoly::ExpPoly;
use crate::poly::{LaurentPoly, Poly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyTag {
    E,
    S,
    C,
    SHat,
    CHat,
    Em,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 6] =
        [FamilyTag::E, FamilyTag::S, FamilyTag::C, FamilyTag::SHat, FamilyTag::CHat, FamilyTag::Em];

    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::E => "e",
            FamilyTag::S => "s",
            FamilyTag::C => "c",
            FamilyTag::SHat => "shat",
            FamilyTag::CHat => "chat",
            FamilyTag::Em => "em",
        }
    }

    pub fn needs_rate(self) -> bool {
        self == FamilyTag::Em
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyTag::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Unknown { kind: "family", name: s.to_string() })
    }
}

/// A member of one family: tag, index and (for `Em` only) a nonzero rate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilyId {
    pub tag: FamilyTag,
    pub n: i64,
    pub m: Option<Rational>,
}

impl FamilyId {
    pub fn new(tag: FamilyTag, n: i64, m: Option<Rational>) -> Result<Self> {
        match (&m, tag.needs_rate()) {
            (None, true) => return Err(Error::InvalidArgument("family em requires a rate m".into())),
            (Some(_), false) => {
                return Err(Error::InvalidArgument(format!("family {tag} takes no rate")))
            }
            (Some(r), true) if r.is_zero() => return Err(Error::ZeroRate),
            _ => {}
        }
        Ok(FamilyId { tag, n, m })
    }

    /// The polynomial via the primary (explicit) construction.
    pub fn build(&self) -> Result<Poly> {
        if self.n < 0 {
            return Ok(Poly::zero());
        }
        let n = self.n as usize;
        Ok(match self.tag {
            FamilyTag::E => e_explicit(n),
            FamilyTag::S => s_explicit(n),
            FamilyTag::C => c_from_s(n),
            FamilyTag::SHat => shat(self.n),
            FamilyTag::CHat => chat(self.n),
            FamilyTag::Em => em_explicit(n, self.m.as_ref().ok_or(Error::ZeroRate)?)?,
        })
    }
}

fn signed(sign_exponent: u64, value: BigInt) -> GaussianRational {
    let r = Rational::from_integer(value);
    GaussianRational::real(if sign_exponent.is_multiple_of(2) { r } else { -r })
}

/// `e_n(x) = xⁿ + Σ_{l<n} (−1)^(l+n) (n!/l!) x^l`
pub fn e_explicit(n: usize) -> Poly {
    let nn = n as u64;
    Poly::new((0..=nn).map(|l| signed(l + nn, falling_ratio(nn, l))).collect())
}

/// `e_n = xⁿ − n·e_{n−1}`, iterated from `e_0 = 1`.
pub fn e_recurrence(n: usize) -> Poly {
    let mut e = Poly::one();
    for k in 1..=n {
        let xk = Poly::monomial(GaussianRational::one(), k);
        e = &xk - &e.scale_rational(&Rational::from(k as i64));
    }
    e
}

/// `x^(n+1)·e^(−μx)·dⁿ/dxⁿ[x^(−1)·e^(μx)]`, which must collapse to a polynomial.
fn rodrigues_inverse_x(n: usize, rate: &GaussianRational) -> Result<Poly> {
    let seed = ExpPoly::term(rate.clone(), LaurentPoly::monomial(GaussianRational::one(), -1));
    let stripped = seed
        .nth_derivative(n)
        .mul_laurent(&LaurentPoly::monomial(GaussianRational::one(), n as i64 + 1))
        * ExpPoly::exp(-rate);
    let laurent = stripped
        .as_laurent()
        .ok_or_else(|| Error::Internal(format!("Rodrigues n={n}: residual exponential {stripped:?}")))?;
    laurent
        .to_poly()
        .ok_or_else(|| Error::Internal(format!("Rodrigues n={n}: negative exponent in {laurent:?}")))
}

/// `e_n(x) = x^(n+1) e^(−x) dⁿ/dxⁿ (x^(−1) e^x)`
pub fn e_rodrigues(n: usize) -> Result<Poly> {
    rodrigues_inverse_x(n, &GaussianRational::one())
}

/// Associated Laguerre polynomial `L_n^(α)(x) = Σ_k (−1)^k C(n+α, n−k) x^k/k!`.
pub fn laguerre_general(n: usize, alpha: &Rational) -> Poly {
    let top = alpha + &Rational::from(n as i64);
    Poly::from_rationals((0..=n as u64).map(|k| {
        let c = binomial_general(&top, n as u64 - k)
            .checked_div(&Rational::from_integer(factorial(k)))
            .expect("factorial is nonzero");
        if k.is_multiple_of(2) {
            c
        } else {
            -c
        }
    }))
}

/// `e_n(x) = n!·L_n^(−n−1)(−x)`
pub fn e_laguerre(n: usize) -> Poly {
    let alpha = Rational::from(-(n as i64) - 1);
    laguerre_general(n, &alpha)
        .scale_arg(&GaussianRational::from_int(-1))
        .scale_rational(&Rational::from_integer(factorial(n as u64)))
}

fn check_rate(m: &Rational) -> Result<()> {
    if m.is_zero() {
        Err(Error::ZeroRate)
    } else {
        Ok(())
    }
}

/// `e_n^(m)(x) = mⁿxⁿ + Σ_{l<n} (−1)^(l+n) m^l (n!/l!) x^l`
pub fn em_explicit(n: usize, m: &Rational) -> Result<Poly> {
    check_rate(m)?;
    let nn = n as u64;
    let mut coeffs = Vec::with_capacity(n + 1);
    let mut m_pow = Rational::one();
    for l in 0..=nn {
        let base = Rational::from_integer(falling_ratio(nn, l)) * &m_pow;
        coeffs.push(if (l + nn).is_multiple_of(2) { base } else { -base });
        m_pow = &m_pow * m;
    }
    Ok(Poly::from_rationals(coeffs))
}

/// `e_n^(m)(x) = x^(n+1) e^(−mx) dⁿ/dxⁿ (x^(−1) e^(mx))`
pub fn em_rodrigues(n: usize, m: &Rational) -> Result<Poly> {
    check_rate(m)?;
    rodrigues_inverse_x(n, &GaussianRational::real(m.clone()))
}

/// The polynomial `P` with `d/dx[P·e^(mx)] = xⁿ·e^(mx)`, i.e. `e_n^(m)/m^(n+1)`.
pub fn antideriv_poly_exp(n: usize, m: &Rational) -> Result<Poly> {
    let p = em_explicit(n, m)?;
    Ok(p.scale_rational(&m.pow(n as i64 + 1)?.recip()?))
}

/// The even/odd explicit sums for `s_n`, over `l ≡ n (mod 2)` only.
pub fn s_explicit(n: usize) -> Poly {
    let nn = n as u64;
    let mut coeffs = vec![GaussianRational::zero(); n + 1];
    coeffs[n] = GaussianRational::from_int(-1);
    for l in (0..nn.saturating_sub(1)).filter(|l| (l + nn).is_multiple_of(2)) {
        let half = (l + nn) / 2;
        let sign_exponent = if nn.is_multiple_of(2) { half + 1 } else { half };
        coeffs[l as usize] = signed(sign_exponent, falling_ratio(nn, l));
    }
    Poly::new(coeffs)
}

fn real_or_internal(p: Poly, what: &str) -> Result<Poly> {
    if p.is_real() {
        Ok(p)
    } else {
        Err(Error::Internal(format!("{what}: imaginary residue in {p:?}")))
    }
}

/// `(i^k/2)·[σ·e_n(ix) + τ·e_n(−ix)]` with signs `σ, τ ∈ {±1}`.
fn combine_e_at_imaginary(n: usize, i_power: i64, sigma: i64, tau: i64) -> Poly {
    let e = e_explicit(n);
    let i = GaussianRational::i();
    let plus = e.scale_arg(&i).scale(&GaussianRational::from_int(sigma));
    let minus = e.scale_arg(&-&i).scale(&GaussianRational::from_int(tau));
    let half = GaussianRational::real(Rational::new(1, 2).expect("nonzero"));
    (&plus + &minus).scale(&(&GaussianRational::i_pow(i_power) * &half))
}

fn parity_sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `s_n(x) = (iⁿ/2)[(−1)^(n+1) e_n(ix) − e_n(−ix)]`
pub fn s_from_e(n: usize) -> Result<Poly> {
    real_or_internal(combine_e_at_imaginary(n, n as i64, parity_sign(n + 1), -1), "s_from_e")
}

/// `c_n(x) = (iⁿ/2)[(−1)ⁿ e_n(ix) + e_n(−ix)]`
pub fn c_from_e(n: usize) -> Result<Poly> {
    real_or_internal(combine_e_at_imaginary(n, n as i64, parity_sign(n), 1), "c_from_e")
}

/// `s′_n(x) = (i^(n+1)/2)[(−1)ⁿ e_n(ix) − e_n(−ix)]`
pub fn s_prime_from_e(n: usize) -> Result<Poly> {
    real_or_internal(combine_e_at_imaginary(n, n as i64 + 1, parity_sign(n), -1), "s_prime_from_e")
}

/// `c′_n(x) = (i^(n+1)/2)[(−1)^(n+1) e_n(ix) + e_n(−ix)]`
pub fn c_prime_from_e(n: usize) -> Result<Poly> {
    real_or_internal(combine_e_at_imaginary(n, n as i64 + 1, parity_sign(n + 1), 1), "c_prime_from_e")
}

/// `c_n = −s_n`
pub fn c_from_s(n: usize) -> Poly {
    -s_explicit(n)
}

/// `ŝ_k = −s′_{k+1}`; zero for `k < 0`.
pub fn shat(k: i64) -> Poly {
    if k < 0 {
        return Poly::zero();
    }
    -s_explicit(k as usize + 1).derivative()
}

/// `ĉ_k = c′_{k+1}`; zero for `k < 0`.
pub fn chat(k: i64) -> Poly {
    if k < 0 {
        return Poly::zero();
    }
    c_from_s(k as usize + 1).derivative()
}

/// `s_n` with the zero convention for negative `n`.
pub fn s_at(n: i64) -> Poly {
    if n < 0 {
        Poly::zero()
    } else {
        s_explicit(n as usize)
    }
}

/// `c_n` with the zero convention for negative `n`.
pub fn c_at(n: i64) -> Poly {
    -s_at(n)
}

/// `e_n` with the zero convention for negative `n`.
pub fn e_at(n: i64) -> Poly {
    if n < 0 {
        Poly::zero()
    } else {
        e_explicit(n as usize)
    }
}
