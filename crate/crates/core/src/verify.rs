//! Built-in verification suites, one per group of identities.

use crate::arith::{factorial, GaussianRational, Rational};
use crate::exppoly::ExpPoly;
use crate::families::{self, FamilyTag};
use crate::genfunc::{self, LinearHGSpec};
use crate::integrals::{self, IntegralKind};
use crate::poly::Poly;
use crate::registry::{RouteRegistry, SuiteRegistry, VerifySuite};
use crate::relations::{check_relation_group, RelationGroup};
use crate::report::Report;

/// Rates exercised wherever `e_n^(m)` is checked.
pub fn test_rates() -> Vec<Rational> {
    ["1", "2", "-1", "1/2", "-3/5"].iter().map(|s| s.parse().expect("valid literal")).collect()
}

fn x_pow(n: usize) -> Poly {
    Poly::monomial(GaussianRational::one(), n)
}

fn r(v: i64) -> Rational {
    Rational::from(v)
}

pub struct RoutesSuite;

impl VerifySuite for RoutesSuite {
    fn name(&self) -> &'static str {
        "routes"
    }

    fn description(&self) -> &'static str {
        "every construction route of every family agrees"
    }

    fn run(&self, max_n: usize) -> Report {
        let reg = RouteRegistry::with_builtin();
        let mut report = Report::new("routes");
        for n in 0..=max_n {
            for tag in [FamilyTag::E, FamilyTag::S, FamilyTag::C, FamilyTag::SHat, FamilyTag::CHat] {
                report.extend(reg.cross_check(tag, n, None));
            }
            for m in test_rates() {
                report.extend(reg.cross_check(FamilyTag::Em, n, Some(&m)));
            }
            report.record_result(
                format!("n={n} e_n^(1) = e_n"),
                families::em_explicit(n, &Rational::one()).map(|p| p == families::e_explicit(n)),
            );
        }
        report
    }
}

pub struct RecurrencesSuite;

impl VerifySuite for RecurrencesSuite {
    fn name(&self) -> &'static str {
        "recurrences"
    }

    fn description(&self) -> &'static str {
        "the four recurrence groups and the complex-argument relations"
    }

    fn run(&self, max_n: usize) -> Report {
        let mut report = Report::new("recurrences");
        for g in [RelationGroup::G1, RelationGroup::G2, RelationGroup::G3, RelationGroup::G4, RelationGroup::ComplexArg] {
            report.extend(check_relation_group(g, max_n));
        }
        report
    }
}

pub struct OdesSuite;

impl VerifySuite for OdesSuite {
    fn name(&self) -> &'static str {
        "odes"
    }

    fn description(&self) -> &'static str {
        "first- and second-order differential equations of every family"
    }

    fn run(&self, max_n: usize) -> Report {
        let mut report = Report::new("odes");
        report.extend(check_relation_group(RelationGroup::DiffEqs, max_n));
        let rates = test_rates();
        for n in 0..=max_n {
            let ni = n as i64;
            let xn = x_pow(n);
            let e = families::e_explicit(n);
            let lhs = &(&e.nth_derivative(2).shift(1) + &(&Poly::from_ints(&[-ni, 1]) * &e.derivative()))
                - &e.scale_rational(&r(ni));
            report.record(format!("n={n} x e'' + (x-n) e' - n e = 0"), lhs.is_zero());

            for m in &rates {
                let Ok(em) = families::em_explicit(n, m) else {
                    report.record(format!("n={n} m={m} e_n^(m)"), false);
                    continue;
                };
                let b = Poly::from_rationals([r(-ni), m.clone()]);
                let lhs = &(&em.nth_derivative(2).shift(1) + &(&b * &em.derivative()))
                    - &em.scale_rational(&(m * &r(ni)));
                report.record(format!("n={n} m={m} x y'' + (mx-n) y' - mn y = 0"), lhs.is_zero());

                let first = &em.derivative() + &em.scale_rational(m);
                let scaled = m.pow(ni + 1).map(|k| xn.scale_rational(&k));
                report.record_result(
                    format!("n={n} m={m} y' + m y = m^(n+1) x^n"),
                    scaled.map(|rhs| first == rhs),
                );
                // the unscaled statement y' + m y = x^n holds only when m^(n+1) = 1
                report.record_result(
                    format!("n={n} m={m} y' + m y = x^n iff m^(n+1) = 1"),
                    m.pow(ni + 1).map(|k| (first == xn) == k.is_one()),
                );
                report.record_result(
                    format!("n={n} m={m} P' + m P = x^n for P = e_n^(m)/m^(n+1)"),
                    families::antideriv_poly_exp(n, m).map(|p| &p.derivative() + &p.scale_rational(m) == xn),
                );
            }

            // general solution e_n + C e^(-x) of y' + y = x^n and of the second-order equation
            let exp_neg = ExpPoly::exp(GaussianRational::from_int(-1));
            for c in ["0", "1", "-2/3"] {
                let c: Rational = c.parse().expect("valid literal");
                let y = &ExpPoly::poly(&e) + &exp_neg.scale(&GaussianRational::real(c.clone()));
                let first = &y.derivative() + &y;
                report.record(format!("n={n} C={c} y = e_n + C e^-x: y' + y = x^n"), first == ExpPoly::poly(&xn));
                let x = ExpPoly::poly(&Poly::x());
                let second = &(&(&x * &y.nth_derivative(2)) + &(&ExpPoly::poly(&Poly::from_ints(&[-ni, 1])) * &y.derivative()))
                    - &y.scale(&GaussianRational::from_int(ni));
                report.record(format!("n={n} C={c} y = e_n + C e^-x solves x y'' + (x-n) y' - n y = 0"), second.is_zero());
            }
        }
        report
    }
}

pub struct GenfuncSuite;

impl VerifySuite for GenfuncSuite {
    fn name(&self) -> &'static str {
        "genfunc"
    }

    fn description(&self) -> &'static str {
        "generating-function coefficients, connection identity and PDEs"
    }

    fn run(&self, max_n: usize) -> Report {
        let mut report = Report::new("genfunc");
        report.extend(genfunc::series_family_check(max_n, &test_rates()));
        report.extend(genfunc::series_connection_check(max_n));
        report.extend(genfunc::series_ode_check(max_n));
        report
    }
}

pub struct LaguerreSuite;

impl VerifySuite for LaguerreSuite {
    fn name(&self) -> &'static str {
        "laguerre"
    }

    fn description(&self) -> &'static str {
        "e_n = n! L_n^(-n-1)(-x) and the Laguerre equation"
    }

    fn run(&self, max_n: usize) -> Report {
        let mut report = Report::new("laguerre");
        for n in 0..=max_n {
            let ni = n as i64;
            report.record(format!("n={n} e_n = n! L_n^(-n-1)(-x)"), families::e_laguerre(n) == families::e_explicit(n));
            for alpha in [r(-ni - 1), r(0), "1/2".parse().expect("valid literal"), r(3)] {
                let y = families::laguerre_general(n, &alpha);
                let spec = LinearHGSpec::laguerre(&alpha);
                report.record(format!("n={n} alpha={alpha} L_n^(alpha) solves its equation"), spec.residual(n, &y).is_zero());
                if alpha.is_integer() {
                    let via_weight = genfunc::rodrigues_linear(&spec, n)
                        .map(|p| p.scale_rational(&Rational::from_integer(factorial(n as u64)).recip().expect("nonzero")) == y);
                    report.record_result(format!("n={n} alpha={alpha} L_n^(alpha) by Rodrigues"), via_weight);
                }
            }
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let expected = GaussianRational::real(Rational::from_integer(factorial(n as u64)) * &r(sign));
            report.record(
                format!("n={n} e_n(0) = (-1)^n n!"),
                families::e_explicit(n).eval(&GaussianRational::zero()) == expected,
            );
        }
        report
    }
}

pub struct AntiderivativeSuite;

impl VerifySuite for AntiderivativeSuite {
    fn name(&self) -> &'static str {
        "theorem1"
    }

    fn description(&self) -> &'static str {
        "closed-form antiderivatives differentiate back to their integrands"
    }

    fn run(&self, max_n: usize) -> Report {
        let mut report = Report::new("theorem1");
        let rates: Vec<Rational> = test_rates().into_iter().take(4).collect();
        for n in 0..=max_n {
            for kind in [IntegralKind::Sin, IntegralKind::Cos] {
                match integrals::closed_form(kind, n, None) {
                    Ok(cf) => {
                        report.record(format!("n={n} {kind} d/dx F = x^n {kind} x"), integrals::check_antiderivative(&cf));
                        if let integrals::ClosedFormParts::Trig { cos_part, sin_part } = &cf.parts {
                            let (main, hat) = if kind == IntegralKind::Sin { (cos_part, sin_part) } else { (sin_part, cos_part) };
                            let degrees_ok = main.degree() == Some(n) && hat.degree() == n.checked_sub(1);
                            report.record(format!("n={n} {kind} part degrees"), degrees_ok);
                            report.record(
                                format!("n={n} {kind} part parities"),
                                main.has_parity(n) && hat.has_parity(n + 1),
                            );
                        }
                    }
                    Err(e) => report.record_with(format!("n={n} {kind}"), false, e.to_string()),
                }
            }
            for m in &rates {
                report.record_result(
                    format!("n={n} exp m={m} d/dx F = x^n e^(mx)"),
                    integrals::closed_form(IntegralKind::Exp, n, Some(m)).map(|cf| integrals::check_antiderivative(&cf)),
                );
            }
        }
        report.extend(integrals::check_integral_recurrences(max_n));
        report
    }
}

pub struct SigmaRatioSuite;

impl VerifySuite for SigmaRatioSuite {
    fn name(&self) -> &'static str {
        "theorem2"
    }

    fn description(&self) -> &'static str {
        "degeneracy criterion and sigma-ratio generating functions"
    }

    fn run(&self, max_n: usize) -> Report {
        let mut report = Report::new("theorem2");
        let order = max_n;
        report.record_result(
            format!("e spec: sigma ratio = e^(xt)/(1+t) to order {order}"),
            genfunc::theorem2_genfunc(&LinearHGSpec::e_family(), order).map(|g| g == genfunc::series_e(order)),
        );
        for m in test_rates() {
            let outcome = LinearHGSpec::em_family(&m)
                .and_then(|spec| genfunc::theorem2_genfunc(&spec, order))
                .and_then(|g| Ok(g == genfunc::series_em(&m, order)?));
            report.record_result(format!("e^(m) spec m={m}: sigma ratio = e^(mxt)/(1+t)"), outcome);
            if let Ok(spec) = LinearHGSpec::em_family(&m) {
                let lambda_ok = (0..=max_n).all(|n| spec.lambda(n) == -(&m * &r(n as i64)));
                report.record(format!("e^(m) spec m={m}: lambda_n = -mn"), lambda_ok);
            }
        }
        let shifted = LinearHGSpec::shifted_power();
        let outcome = genfunc::theorem2_genfunc(&shifted, order).map(|g| {
            (0..=order).all(|n| g.egf_member(n) == Poly::from_ints(&[-1, -1]).pow(n as u32))
        });
        report.record_result("(x+1) spec: n![t^n] = (-1)^n (x+1)^n", outcome);

        report.record("e spec is degenerate", genfunc::nu_degeneracy_check(&LinearHGSpec::e_family()));
        report.record("(x+1) spec is degenerate", genfunc::nu_degeneracy_check(&shifted));
        for alpha in [r(0), r(1), r(-3), "1/2".parse().expect("valid literal")] {
            let spec = LinearHGSpec::laguerre(&alpha);
            report.record(format!("Laguerre alpha={alpha} is not degenerate"), !genfunc::nu_degeneracy_check(&spec));
            report.record(
                format!("Laguerre alpha={alpha}: sigma ratio rejected"),
                genfunc::theorem2_genfunc(&spec, 2).is_err(),
            );
        }
        let mut specs = vec![("e", LinearHGSpec::e_family()), ("(x+1)", shifted)];
        specs.extend(test_rates().into_iter().filter_map(|m| LinearHGSpec::em_family(&m).ok().map(|s| ("e^(m)", s))));
        for (label, spec) in specs {
            let s0 = genfunc::sigma_linear(&spec, 0);
            let constant = (0..=10).all(|n| genfunc::sigma_linear(&spec, n) == s0);
            report.record(format!("{label} spec {:?}: sigma independent of n", spec.gamma()), constant);
        }
        report
    }
}

pub(crate) fn register_builtin(reg: &mut SuiteRegistry) {
    reg.register(Box::new(RoutesSuite));
    reg.register(Box::new(RecurrencesSuite));
    reg.register(Box::new(OdesSuite));
    reg.register(Box::new(GenfuncSuite));
    reg.register(Box::new(LaguerreSuite));
    reg.register(Box::new(AntiderivativeSuite));
    reg.register(Box::new(SigmaRatioSuite));
}
