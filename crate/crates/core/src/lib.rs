//! Exact construction of the polynomial families behind the antiderivatives
//! of `xⁿ sin x`, `xⁿ cos x` and `xⁿ e^(mx)`.
//!
//! - [`arith`]: rationals and Gaussian rationals
//! - [`poly`], [`exppoly`]: polynomial and exponential-polynomial calculus
//! - [`families`]: `e_n`, `s_n`, `c_n`, `ŝ_n`, `ĉ_n`, `e_n^(m)` by every route
//! - [`relations`]: recurrence groups and differential identities
//! - [`genfunc`]: generating functions and the degenerate-weight formula
//! - [`integrals`]: closed-form antiderivatives and a quadrature oracle
//! - [`registry`]: runtime selection of construction routes and verify suites

pub mod arith;
pub mod error;
pub mod exppoly;
pub mod families;
pub mod genfunc;
pub mod integrals;
pub mod poly;
pub mod registry;
pub mod relations;
pub mod report;
mod routes;
pub mod verify;

pub use arith::{binomial_general, factorial, GaussianRational, Rational};
pub use error::{Error, Result};
pub use exppoly::ExpPoly;
pub use families::{FamilyId, FamilyTag};
pub use genfunc::{FormalSeries, LinearHGSpec, RhoForm};
pub use integrals::{ClosedForm, ClosedFormParts, IntegralKind, QuadResult};
pub use poly::{LaurentPoly, Poly};
pub use registry::{ConstructionRoute, RouteRegistry, SuiteRegistry, VerifySuite};
pub use report::{Check, Report};
