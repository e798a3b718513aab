//! Built-in construction routes.

use crate::arith::{GaussianRational, Rational};
use crate::error::{Error, Result};
use crate::families::{self, FamilyTag};
use crate::genfunc::{self, LinearHGSpec};
use crate::integrals;
use crate::poly::Poly;
use crate::registry::{ConstructionRoute, RouteRegistry};

type Builder = fn(usize, Option<&Rational>) -> Result<Poly>;

struct FnRoute {
    family: FamilyTag,
    name: &'static str,
    description: &'static str,
    build: Builder,
}

impl ConstructionRoute for FnRoute {
    fn family(&self) -> FamilyTag {
        self.family
    }

    fn name(&self) -> &'static str {
        self.name
    }

    fn description(&self) -> &'static str {
        self.description
    }

    fn build(&self, n: usize, m: Option<&Rational>) -> Result<Poly> {
        (self.build)(n, m)
    }
}

fn rate(m: Option<&Rational>) -> Result<&Rational> {
    let m = m.ok_or_else(|| Error::InvalidArgument("rate m is required".into()))?;
    if m.is_zero() {
        return Err(Error::ZeroRate);
    }
    Ok(m)
}

fn x_pow(n: usize) -> Poly {
    Poly::monomial(GaussianRational::one(), n)
}

/// `p_n = lead(n)·xⁿ − mult(n)·p_{n−2}` seeded by `p_0`, `p_1`.
fn two_step(n: usize, p0: Poly, p1: Poly, lead: fn(i64) -> i64, mult: fn(i64) -> i64) -> Poly {
    let (mut prev, mut cur) = (p0, p1);
    if n == 0 {
        return prev;
    }
    for k in 2..=n {
        let ki = k as i64;
        let next = &x_pow(k).scale_rational(&Rational::from(lead(ki)))
            - &prev.scale_rational(&Rational::from(mult(ki)));
        prev = cur;
        cur = next;
    }
    cur
}

/// `ŝ_n = (n+1)xⁿ − n(n+1)ŝ_{n−2}` from `ŝ_0 = 1`, `ŝ_1 = 2x`.
fn hat_recurrence(n: usize) -> Poly {
    two_step(n, Poly::one(), Poly::from_ints(&[0, 2]), |k| k + 1, |k| k * (k + 1))
}

pub(crate) fn register_builtin(reg: &mut RouteRegistry) {
    let table: &[(FamilyTag, &'static str, &'static str, Builder)] = &[
        (FamilyTag::E, "explicit", "closed sum over n!/l!", |n, _| Ok(families::e_explicit(n))),
        (FamilyTag::E, "recurrence", "e_n = x^n - n e_(n-1)", |n, _| Ok(families::e_recurrence(n))),
        (FamilyTag::E, "rodrigues", "x^(n+1) e^-x D^n(e^x/x)", |n, _| families::e_rodrigues(n)),
        (FamilyTag::E, "laguerre", "n! L_n^(-n-1)(-x)", |n, _| Ok(families::e_laguerre(n))),
        (FamilyTag::E, "genfunc", "n![t^n] e^(xt)/(1+t)", |n, _| Ok(genfunc::series_e(n).egf_member(n))),
        (FamilyTag::E, "sigma-ratio", "n![t^n] sigma(x + A t)/sigma(x)", |n, _| {
            Ok(genfunc::theorem2_genfunc(&LinearHGSpec::e_family(), n)?.egf_member(n))
        }),
        (FamilyTag::E, "weight", "(1/rho) D^n(A^n rho) from the linear spec", |n, _| {
            genfunc::rodrigues_linear(&LinearHGSpec::e_family(), n)
        }),
        (FamilyTag::Em, "explicit", "closed sum over m^l n!/l!", |n, m| families::em_explicit(n, rate(m)?)),
        (FamilyTag::Em, "rodrigues", "x^(n+1) e^-mx D^n(e^mx/x)", |n, m| families::em_rodrigues(n, rate(m)?)),
        (FamilyTag::Em, "genfunc", "n![t^n] e^(mxt)/(1+t)", |n, m| {
            Ok(genfunc::series_em(rate(m)?, n)?.egf_member(n))
        }),
        (FamilyTag::Em, "sigma-ratio", "n![t^n] sigma(x + A t)/sigma(x)", |n, m| {
            Ok(genfunc::theorem2_genfunc(&LinearHGSpec::em_family(rate(m)?)?, n)?.egf_member(n))
        }),
        (FamilyTag::Em, "weight", "(1/rho) D^n(A^n rho) from the linear spec", |n, m| {
            genfunc::rodrigues_linear(&LinearHGSpec::em_family(rate(m)?)?, n)
        }),
        (FamilyTag::S, "explicit", "even/odd sums", |n, _| Ok(families::s_explicit(n))),
        (FamilyTag::S, "from-e", "(i^n/2)[(-1)^(n+1) e_n(ix) - e_n(-ix)]", |n, _| families::s_from_e(n)),
        (FamilyTag::S, "rodrigues", "complex-exponential Rodrigues form", |n, _| integrals::s_rodrigues(n)),
        (FamilyTag::S, "genfunc", "n![t^n] -e^(xt)/(1+t^2)", |n, _| Ok(genfunc::series_s(n).egf_member(n))),
        (FamilyTag::S, "recurrence", "s_n = -x^n - n(n-1) s_(n-2)", |n, _| {
            Ok(two_step(n, Poly::from_ints(&[-1]), Poly::from_ints(&[0, -1]), |_| -1, |k| k * (k - 1)))
        }),
        (FamilyTag::C, "from-s", "c_n = -s_n", |n, _| Ok(families::c_from_s(n))),
        (FamilyTag::C, "from-e", "(i^n/2)[(-1)^n e_n(ix) + e_n(-ix)]", |n, _| families::c_from_e(n)),
        (FamilyTag::C, "genfunc", "n![t^n] e^(xt)/(1+t^2)", |n, _| Ok(genfunc::series_c(n).egf_member(n))),
        (FamilyTag::C, "recurrence", "c_n = x^n - n(n-1) c_(n-2)", |n, _| {
            Ok(two_step(n, Poly::one(), Poly::x(), |_| 1, |k| k * (k - 1)))
        }),
        (FamilyTag::SHat, "derivative", "shat_n = -s'_(n+1)", |n, _| Ok(families::shat(n as i64))),
        (FamilyTag::SHat, "from-c", "shat_n = (n+1) c_n", |n, _| {
            Ok(families::c_from_s(n).scale_rational(&Rational::from(n as i64 + 1)))
        }),
        (FamilyTag::SHat, "recurrence", "shat_n = (n+1)x^n - n(n+1) shat_(n-2)", |n, _| Ok(hat_recurrence(n))),
        (FamilyTag::CHat, "derivative", "chat_n = c'_(n+1)", |n, _| Ok(families::chat(n as i64))),
        (FamilyTag::CHat, "from-s", "chat_n = -(n+1) s_n", |n, _| {
            Ok(families::s_explicit(n).scale_rational(&Rational::from(-(n as i64) - 1)))
        }),
        (FamilyTag::CHat, "recurrence", "chat_n = (n+1)x^n - n(n+1) chat_(n-2)", |n, _| Ok(hat_recurrence(n))),
    ];
    for &(family, name, description, build) in table {
        reg.register(Box::new(FnRoute { family, name, description, build }));
    }
}
