//! Every family checked against an oracle that shares no code with the
//! library's constructions: plain `i128` arithmetic, back-substitution and
//! brute-force differentiation.

use sce_core::families::{self, FamilyId, FamilyTag};
use sce_core::genfunc::{self, LinearHGSpec};
use sce_core::integrals::{self, IntegralKind};
use sce_core::{GaussianRational, Poly, Rational, RouteRegistry};

const N_MAX: usize = 30;

fn from_i128(coeffs: &[i128]) -> Poly {
    Poly::new(
        coeffs
            .iter()
            .map(|&c| GaussianRational::real(Rational::from_integer(c)))
            .collect(),
    )
}

/// `P' + P = xⁿ` solved from the top: `p_n = 1`, `p_k = −(k+1)·p_{k+1}`.
fn e_oracle(n: usize) -> Poly {
    let mut p = vec![0i128; n + 1];
    p[n] = 1;
    for k in (0..n).rev() {
        p[k] = -((k as i128) + 1) * p[k + 1];
    }
    from_i128(&p)
}

/// `s = −(1 − D² + D⁴ − …) xⁿ`, the terminating Neumann series of
/// `(1 + D²)⁻¹` applied to `−xⁿ`.
fn s_oracle(n: usize) -> Poly {
    let mut p = vec![0i128; n + 1];
    let mut term: i128 = -1;
    let mut deg = n as i128;
    loop {
        p[deg as usize] = term;
        if deg < 2 {
            break;
        }
        term = -term * deg * (deg - 1);
        deg -= 2;
    }
    from_i128(&p)
}

/// `P' + mP = m^(n+1)·xⁿ` solved from the top in exact rationals.
fn em_oracle(n: usize, m: &Rational) -> Poly {
    let mut p = vec![Rational::zero(); n + 1];
    p[n] = m.pow(n as i64).unwrap();
    for k in (0..n).rev() {
        p[k] = -(&(&Rational::from((k + 1) as i64) * &p[k + 1]) * &m.recip().unwrap());
    }
    Poly::from_rationals(p)
}

fn rates() -> Vec<Rational> {
    ["1", "2", "-1", "1/2", "-3/5", "7/3"].iter().map(|s| s.parse().unwrap()).collect()
}

#[test]
fn e_matches_back_substitution() {
    for n in 0..=N_MAX {
        let expected = e_oracle(n);
        assert_eq!(families::e_explicit(n), expected, "explicit n={n}");
        assert_eq!(families::e_recurrence(n), expected, "recurrence n={n}");
        assert_eq!(families::e_rodrigues(n).unwrap(), expected, "rodrigues n={n}");
        assert_eq!(families::e_laguerre(n), expected, "laguerre n={n}");
    }
}

#[test]
fn s_and_c_match_neumann_series() {
    for n in 0..=N_MAX {
        let s = s_oracle(n);
        assert_eq!(families::s_explicit(n), s, "s explicit n={n}");
        assert_eq!(families::s_from_e(n).unwrap(), s, "s from e n={n}");
        assert_eq!(integrals::s_rodrigues(n).unwrap(), s, "s rodrigues n={n}");
        assert_eq!(families::c_from_e(n).unwrap(), -&s, "c from e n={n}");
    }
}

#[test]
fn hats_are_brute_force_derivatives() {
    for n in 0..N_MAX {
        let ni = n as i64;
        assert_eq!(families::shat(ni), -&s_oracle(n + 1).derivative(), "shat n={n}");
        assert_eq!(families::chat(ni), -&s_oracle(n + 1).derivative(), "chat n={n}");
    }
}

#[test]
fn em_matches_back_substitution() {
    for m in rates() {
        for n in 0..=20 {
            let expected = em_oracle(n, &m);
            assert_eq!(families::em_explicit(n, &m).unwrap(), expected, "explicit n={n} m={m}");
            assert_eq!(families::em_rodrigues(n, &m).unwrap(), expected, "rodrigues n={n} m={m}");
        }
    }
}

#[test]
fn every_registered_route_matches_its_oracle() {
    let reg = RouteRegistry::with_builtin();
    for n in 0..=N_MAX {
        let s = s_oracle(n);
        let shat = -&s_oracle(n + 1).derivative();
        let expected = [
            (FamilyTag::E, e_oracle(n)),
            (FamilyTag::S, s.clone()),
            (FamilyTag::C, -&s),
            (FamilyTag::SHat, shat.clone()),
            (FamilyTag::CHat, shat),
        ];
        for (tag, want) in expected {
            for route in reg.routes(tag) {
                assert_eq!(route.build(n, None).unwrap(), want, "{tag}/{} n={n}", route.name());
            }
        }
    }
    let m: Rational = "-3/5".parse().unwrap();
    for n in 0..=15 {
        for route in reg.routes(FamilyTag::Em) {
            assert_eq!(route.build(n, Some(&m)).unwrap(), em_oracle(n, &m), "em/{} n={n}", route.name());
        }
    }
}

#[test]
fn series_coefficients_match_oracles() {
    let order = N_MAX;
    let (e, s, c) = (genfunc::series_e(order), genfunc::series_s(order), genfunc::series_c(order));
    let m: Rational = "1/2".parse().unwrap();
    let em = genfunc::series_em(&m, order).unwrap();
    for n in 0..=order {
        assert_eq!(e.egf_member(n), e_oracle(n));
        assert_eq!(s.egf_member(n), s_oracle(n));
        assert_eq!(c.egf_member(n), -&s_oracle(n));
        assert_eq!(em.egf_member(n), em_oracle(n, &m));
    }
}

#[test]
fn sigma_ratio_series_for_shifted_power() {
    // y_n = (−1)ⁿ(x+1)ⁿ has egf e^(−(x+1)t)
    let g = genfunc::theorem2_genfunc(&LinearHGSpec::shifted_power(), 12).unwrap();
    let mut want = Poly::one();
    for n in 0..=12 {
        assert_eq!(g.egf_member(n), want, "n={n}");
        want = &want * &Poly::from_ints(&[-1, -1]);
    }
}

#[test]
fn closed_forms_differentiate_back() {
    for n in 0..=N_MAX {
        for kind in [IntegralKind::Sin, IntegralKind::Cos] {
            let cf = integrals::closed_form(kind, n, None).unwrap();
            assert!(integrals::check_antiderivative(&cf), "{kind} n={n}");
        }
        for m in rates() {
            let cf = integrals::closed_form(IntegralKind::Exp, n, Some(&m)).unwrap();
            assert!(integrals::check_antiderivative(&cf), "exp n={n} m={m}");
        }
    }
}

#[test]
fn perturbed_closed_form_is_rejected() {
    let mut cf = integrals::closed_form(IntegralKind::Sin, 4, None).unwrap();
    if let integrals::ClosedFormParts::Trig { cos_part, .. } = &mut cf.parts {
        *cos_part = &*cos_part + &Poly::x();
    }
    assert!(!integrals::check_antiderivative(&cf));
    let shifted = integrals::closed_form(IntegralKind::Cos, 4, None).unwrap().with_constant(Rational::from(7));
    assert!(integrals::check_antiderivative(&shifted));
}

#[test]
fn negative_indices_give_zero() {
    for tag in FamilyTag::ALL {
        let m = tag.needs_rate().then(|| Rational::from(2));
        for n in [-1, -2, -7] {
            assert!(FamilyId::new(tag, n, m.clone()).unwrap().build().unwrap().is_zero(), "{tag} n={n}");
        }
    }
}
