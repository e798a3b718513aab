//! Exact checks of the identities linking `s`, `c`, `ŝ`, `ĉ` and `e`.

use std::fmt;
use std::str::FromStr;

use crate::arith::{GaussianRational, Rational};
use crate::error::Error;
use crate::families::{
    c_at, c_from_e, c_from_s, c_prime_from_e, chat, e_at, e_explicit, s_at, s_explicit, s_from_e,
    s_prime_from_e, shat,
};
use crate::poly::Poly;
use crate::report::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RelationGroup {
    /// From `S_n = −xⁿ cos x + n C_{n−1}`: `s_n = −xⁿ + n ĉ_{n−2}`, `ŝ_n = (n+1) c_n`.
    G1,
    /// From the two-step `S` recurrence: `s_n = −xⁿ − n(n−1) s_{n−2}`,
    /// `ŝ_n = (n+1)xⁿ − n(n+1) ŝ_{n−2}`.
    G2,
    /// From `C_n = xⁿ sin x − n S_{n−1}`: `c_n = xⁿ − n ŝ_{n−2}`, `ĉ_n = −(n+1) s_n`.
    G3,
    /// From the two-step `C` recurrence: `c_n = xⁿ − n(n−1) c_{n−2}`,
    /// `ĉ_n = (n+1)xⁿ − n(n+1) ĉ_{n−2}`.
    G4,
    /// The differential equations and the first-order links between families.
    DiffEqs,
    /// Relations through `e_n(±ix)`.
    ComplexArg,
}

impl RelationGroup {
    pub const ALL: [RelationGroup; 6] = [
        RelationGroup::G1,
        RelationGroup::G2,
        RelationGroup::G3,
        RelationGroup::G4,
        RelationGroup::DiffEqs,
        RelationGroup::ComplexArg,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RelationGroup::G1 => "g1",
            RelationGroup::G2 => "g2",
            RelationGroup::G3 => "g3",
            RelationGroup::G4 => "g4",
            RelationGroup::DiffEqs => "diff-eqs",
            RelationGroup::ComplexArg => "complex-arg",
        }
    }
}

impl fmt::Display for RelationGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RelationGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        RelationGroup::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| Error::Unknown { kind: "relation group", name: s.to_string() })
    }
}

fn x_pow(n: usize) -> Poly {
    Poly::monomial(GaussianRational::one(), n)
}

fn k(v: i64) -> Rational {
    Rational::from(v)
}

pub fn check_relation_group(group: RelationGroup, n_max: usize) -> Report {
    let mut report = Report::new(format!("relations {group}"));
    for n in 0..=n_max {
        let ni = n as i64;
        let xn = x_pow(n);
        match group {
            RelationGroup::G1 => {
                let rhs = &chat(ni - 2).scale_rational(&k(ni)) - &xn;
                report.record(format!("n={n} s_n = -x^n + n chat_(n-2)"), s_explicit(n) == rhs);
                report.record(
                    format!("n={n} shat_n = (n+1) c_n"),
                    shat(ni) == c_from_s(n).scale_rational(&k(ni + 1)),
                );
            }
            RelationGroup::G2 => {
                let rhs = &(-&xn) - &s_at(ni - 2).scale_rational(&k(ni * (ni - 1)));
                report.record(format!("n={n} s_n = -x^n - n(n-1) s_(n-2)"), s_explicit(n) == rhs);
                let rhs = &xn.scale_rational(&k(ni + 1)) - &shat(ni - 2).scale_rational(&k(ni * (ni + 1)));
                report.record(format!("n={n} shat_n = (n+1)x^n - n(n+1) shat_(n-2)"), shat(ni) == rhs);
            }
            RelationGroup::G3 => {
                let rhs = &xn - &shat(ni - 2).scale_rational(&k(ni));
                report.record(format!("n={n} c_n = x^n - n shat_(n-2)"), c_from_s(n) == rhs);
                report.record(
                    format!("n={n} chat_n = -(n+1) s_n"),
                    chat(ni) == s_explicit(n).scale_rational(&k(-(ni + 1))),
                );
            }
            RelationGroup::G4 => {
                let rhs = &xn - &c_at(ni - 2).scale_rational(&k(ni * (ni - 1)));
                report.record(format!("n={n} c_n = x^n - n(n-1) c_(n-2)"), c_from_s(n) == rhs);
                let rhs = &xn.scale_rational(&k(ni + 1)) - &chat(ni - 2).scale_rational(&k(ni * (ni + 1)));
                report.record(format!("n={n} chat_n = (n+1)x^n - n(n+1) chat_(n-2)"), chat(ni) == rhs);
            }
            RelationGroup::DiffEqs => {
                let s = s_explicit(n);
                let c = c_from_s(n);
                let e = e_explicit(n);
                report.record(format!("n={n} s'' + s = -x^n"), &s.nth_derivative(2) + &s == -&xn);
                report.record(format!("n={n} c'' + c = x^n"), &c.nth_derivative(2) + &c == xn);
                report.record(format!("n={n} e' + e = x^n"), &e.derivative() + &e == xn);
                report.record(format!("n={n} e'_n = n e_(n-1)"), e.derivative() == e_at(ni - 1).scale_rational(&k(ni)));
                report.record(format!("n={n} s'_n + shat_(n-1) = 0"), (&s.derivative() + &shat(ni - 1)).is_zero());
                report.record(format!("n={n} shat'_(n-1) - s_n = x^n"), &shat(ni - 1).derivative() - &s == xn);
                report.record(format!("n={n} c'_n - chat_(n-1) = 0"), (&c.derivative() - &chat(ni - 1)).is_zero());
                report.record(format!("n={n} chat'_(n-1) + c_n = x^n"), &chat(ni - 1).derivative() + &c == xn);
                let rhs = &xn + &s_at(ni - 1).derivative().scale_rational(&k(ni));
                report.record(format!("n={n} c_n = x^n + n s'_(n-1)"), c == rhs);
                report.record(
                    format!("n={n} c'_n = -n s_(n-1)"),
                    c.derivative() == s_at(ni - 1).scale_rational(&k(-ni)),
                );
            }
            RelationGroup::ComplexArg => {
                let s = s_explicit(n);
                let c = c_from_s(n);
                report.record_result(format!("n={n} s_n via e_n(+-ix)"), s_from_e(n).map(|p| p == s));
                report.record_result(format!("n={n} c_n via e_n(+-ix)"), c_from_e(n).map(|p| p == c));
                report.record_result(
                    format!("n={n} s'_n via e_n(+-ix)"),
                    s_prime_from_e(n).map(|p| p == s.derivative()),
                );
                report.record_result(
                    format!("n={n} c'_n via e_n(+-ix)"),
                    c_prime_from_e(n).map(|p| p == c.derivative()),
                );
                report.record(format!("n={n} c_n = -s_n"), c == -&s);
                report.record(format!("n={n} shat_n = chat_n"), shat(ni) == chat(ni));
            }
        }
    }
    report
}
