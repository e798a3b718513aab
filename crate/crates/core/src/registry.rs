//! Name-keyed registries of interchangeable strategies.
//!
//! Every family has several independent construction routes. They sit behind
//! [`ConstructionRoute`] and are picked by name at runtime (e.g. `--route`
//! on the command line). Verification suites work the same way through
//! [`VerifySuite`].

use std::collections::BTreeMap;

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::families::FamilyTag;
use crate::poly::Poly;
use crate::report::Report;

/// One way of building a family member.
pub trait ConstructionRoute: Send + Sync {
    fn family(&self) -> FamilyTag;

    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str {
        ""
    }

    /// `m` is `Some` exactly for families that take a rate.
    fn build(&self, n: usize, m: Option<&Rational>) -> Result<Poly>;
}

/// A named batch of identity checks.
pub trait VerifySuite: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str {
        ""
    }

    fn run(&self, max_n: usize) -> Report;
}

#[derive(Default)]
pub struct RouteRegistry {
    routes: BTreeMap<FamilyTag, Vec<Box<dyn ConstructionRoute>>>,
}

impl RouteRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// All built-in routes; the first registered per family is its default.
    pub fn with_builtin() -> Self {
        let mut reg = Self::new();
        crate::routes::register_builtin(&mut reg);
        reg
    }

    /// Replaces an existing route with the same family and name.
    pub fn register(&mut self, route: Box<dyn ConstructionRoute>) {
        let list = self.routes.entry(route.family()).or_default();
        match list.iter().position(|r| r.name() == route.name()) {
            Some(i) => list[i] = route,
            None => list.push(route),
        }
    }

    pub fn routes(&self, family: FamilyTag) -> &[Box<dyn ConstructionRoute>] {
        self.routes.get(&family).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn names(&self, family: FamilyTag) -> Vec<&'static str> {
        self.routes(family).iter().map(|r| r.name()).collect()
    }

    pub fn get(&self, family: FamilyTag, name: &str) -> Result<&dyn ConstructionRoute> {
        self.routes(family)
            .iter()
            .find(|r| r.name() == name)
            .map(|r| r.as_ref())
            .ok_or_else(|| Error::Unknown { kind: "route", name: format!("{family}/{name}") })
    }

    pub fn default_route(&self, family: FamilyTag) -> Result<&dyn ConstructionRoute> {
        self.routes(family)
            .first()
            .map(|r| r.as_ref())
            .ok_or_else(|| Error::Unknown { kind: "route", name: format!("{family}/<default>") })
    }

    /// Builds `family(n)` by every route and reports whether all agree with
    /// the default route.
    pub fn cross_check(&self, family: FamilyTag, n: usize, m: Option<&Rational>) -> Report {
        let mut report = Report::new(format!("routes {family}"));
        let label = |name: &str| match m {
            Some(m) => format!("{family} n={n} m={m} {name}"),
            None => format!("{family} n={n} {name}"),
        };
        let Ok(reference) = self.default_route(family) else {
            report.record_with(label("<default>"), false, "no routes registered");
            return report;
        };
        let expected = match reference.build(n, m) {
            Ok(p) => p,
            Err(e) => {
                report.record_with(label(reference.name()), false, e.to_string());
                return report;
            }
        };
        for route in &self.routes(family)[1..] {
            let outcome = route.build(n, m).map(|p| p == expected);
            report.record_result(label(&format!("{} = {}", route.name(), reference.name())), outcome);
        }
        report
    }
}

#[derive(Default)]
pub struct SuiteRegistry {
    suites: Vec<Box<dyn VerifySuite>>,
}

impl SuiteRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_builtin() -> Self {
        let mut reg = Self::new();
        crate::verify::register_builtin(&mut reg);
        reg
    }

    pub fn register(&mut self, suite: Box<dyn VerifySuite>) {
        match self.suites.iter().position(|s| s.name() == suite.name()) {
            Some(i) => self.suites[i] = suite,
            None => self.suites.push(suite),
        }
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.suites.iter().map(|s| s.name()).collect()
    }

    pub fn get(&self, name: &str) -> Result<&dyn VerifySuite> {
        self.suites
            .iter()
            .find(|s| s.name() == name)
            .map(|s| s.as_ref())
            .ok_or_else(|| Error::Unknown { kind: "suite", name: name.to_string() })
    }

    /// Runs the named suite; `all` runs every registered suite in order.
    pub fn run(&self, name: &str, max_n: usize) -> Result<Report> {
        if name == "all" && self.get("all").is_err() {
            let mut report = Report::new("all");
            for suite in &self.suites {
                report.extend(suite.run(max_n));
            }
            return Ok(report);
        }
        Ok(self.get(name)?.run(max_n))
    }
}
