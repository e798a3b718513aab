//! The `sce` command line: build family members, integrate, expand
//! generating functions and run verification suites.
//!
//! Exit codes: 0 on success, 1 when a verification or numerical check
//! fails, 2 on a usage error.

pub mod render;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};
use sce_core::families::FamilyId;
use sce_core::integrals::{self, IntegralKind};
use sce_core::{genfunc, FamilyTag, Rational, RouteRegistry, SuiteRegistry};

use render::OutputFormat;

pub const MAX_N_VAR: &str = "SCE_MAX_N";
pub const DEFAULT_MAX_N: usize = 64;
/// Relative discrepancy accepted by `integrate --check`.
pub const CHECK_TOLERANCE: f64 = 1e-9;
const QUAD_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitCode {
    Success = 0,
    CheckFailed = 1,
    Usage = 2,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] sce_core::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// Library errors that reach the top level come from bad input.
    fn exit_code(&self) -> ExitCode {
        ExitCode::Usage
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "sce", version, about = "Exact polynomial families for the integrals of x^n sin x, x^n cos x, x^n e^(mx)")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print one member of a family: e, s, c, shat, chat or em
    Poly {
        family: String,
        #[arg(long)]
        n: usize,
        /// Rate for the em family, as an integer or p/q
        #[arg(long, allow_hyphen_values = true)]
        m: Option<String>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Construction route; see `sce routes`
        #[arg(long)]
        route: Option<String>,
    },
    /// Closed-form antiderivative, or a definite integral with --a and --b
    Integrate {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        m: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<f64>,
        /// Compare against adaptive quadrature
        #[arg(long)]
        check: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Run a verification suite, or `all`
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long = "max-n")]
        max_n: usize,
        /// Print only failures and the summary
        #[arg(long)]
        quiet: bool,
    },
    /// Truncated generating function of e, s, c or em
    Genfunc {
        #[arg(long)]
        family: String,
        #[arg(long)]
        order: usize,
        #[arg(long, allow_hyphen_values = true)]
        m: Option<String>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// List the construction routes of every family, or of one
    Routes { family: Option<String> },
}

/// Reads the `n` cap from the environment, falling back to the default.
pub fn max_n_from_env() -> usize {
    std::env::var(MAX_N_VAR).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_MAX_N)
}

fn parse_rate(m: Option<&str>) -> CliResult<Option<Rational>> {
    m.map(|s| s.parse::<Rational>().map_err(|e| CliError::Usage(format!("invalid rate {s:?}: {e}"))))
        .transpose()
}

fn parse_family(name: &str) -> CliResult<FamilyTag> {
    name.parse().map_err(|_| {
        let known: Vec<_> = FamilyTag::ALL.iter().map(|t| t.name()).collect();
        CliError::Usage(format!("unknown family {name:?}; expected one of {}", known.join(", ")))
    })
}

fn check_cap(what: &str, value: usize, cap: usize) -> CliResult<()> {
    if value > cap {
        return Err(CliError::Usage(format!("{what} = {value} exceeds the cap {cap} (set {MAX_N_VAR} to raise it)")));
    }
    Ok(())
}

struct Ctx<'a> {
    out: &'a mut dyn Write,
    cap: usize,
}

impl Ctx<'_> {
    fn poly(&mut self, family: &str, n: usize, m: Option<&str>, format: OutputFormat, route: Option<&str>) -> CliResult<ExitCode> {
        check_cap("n", n, self.cap)?;
        let tag = parse_family(family)?;
        let rate = parse_rate(m)?;
        let id = FamilyId::new(tag, n as i64, rate.clone())?;
        let p = match route {
            None => id.build()?,
            Some(name) => {
                let reg = RouteRegistry::with_builtin();
                let route = reg.get(tag, name).map_err(|_| {
                    CliError::Usage(format!("unknown route {name:?} for {tag}; expected one of {}", reg.names(tag).join(", ")))
                })?;
                route.build(n, rate.as_ref())?
            }
        };
        let text = match format {
            OutputFormat::Text => render::poly_text(&p),
            OutputFormat::Latex => render::poly_latex(&p),
            OutputFormat::Json => render::PolyDoc::new(tag.name(), n as i64, rate.as_ref(), &p).to_json(),
            OutputFormat::Csv => render::poly_csv(&p).trim_end().to_string(),
        };
        writeln!(self.out, "{text}")?;
        Ok(ExitCode::Success)
    }

    #[allow(clippy::too_many_arguments)]
    fn integrate(
        &mut self,
        kind: &str,
        n: usize,
        m: Option<&str>,
        a: Option<f64>,
        b: Option<f64>,
        check: bool,
        format: OutputFormat,
    ) -> CliResult<ExitCode> {
        check_cap("n", n, self.cap)?;
        let kind: IntegralKind = kind
            .parse()
            .map_err(|_| CliError::Usage(format!("unknown kind {kind:?}; expected sin, cos or exp")))?;
        let rate = parse_rate(m)?;
        let cf = integrals::closed_form(kind, n, rate.as_ref())?;
        let (a, b) = match (a, b) {
            (None, None) if check => return Err(CliError::Usage("--check needs --a and --b".into())),
            (None, None) => {
                let text = match format {
                    OutputFormat::Text => render::closed_form_text(&cf),
                    OutputFormat::Latex => render::closed_form_latex(&cf),
                    other => return Err(CliError::Usage(format!("format {other:?} is not available for closed forms"))),
                };
                writeln!(self.out, "{text}")?;
                return Ok(ExitCode::Success);
            }
            (Some(a), Some(b)) => (a, b),
            _ => return Err(CliError::Usage("--a and --b must be given together".into())),
        };
        if !(a.is_finite() && b.is_finite()) {
            return Err(CliError::Usage("endpoints must be finite".into()));
        }
        let value = integrals::definite_integral(&cf, a, b)?;
        writeln!(self.out, "value = {value}")?;
        if !check {
            return Ok(ExitCode::Success);
        }
        let (lo, hi, sign) = if a <= b { (a, b, 1.0) } else { (b, a, -1.0) };
        let quad = integrals::quad_adaptive(kind, n, rate.as_ref(), lo, hi, QUAD_TOLERANCE)?;
        let reference = sign * quad.value;
        let discrepancy = (value - reference).abs() / reference.abs().max(1.0);
        let passed = discrepancy <= CHECK_TOLERANCE;
        writeln!(self.out, "quadrature = {reference}")?;
        writeln!(self.out, "discrepancy = {discrepancy:e} (relative)")?;
        writeln!(self.out, "check: {}", if passed { "pass" } else { "fail" })?;
        Ok(if passed { ExitCode::Success } else { ExitCode::CheckFailed })
    }

    fn verify(&mut self, suite: &str, max_n: usize, quiet: bool) -> CliResult<ExitCode> {
        check_cap("max-n", max_n, self.cap)?;
        let reg = SuiteRegistry::with_builtin();
        let report = reg.run(suite, max_n).map_err(|_| {
            CliError::Usage(format!("unknown suite {suite:?}; expected one of {}, all", reg.names().join(", ")))
        })?;
        if quiet {
            for c in report.failures() {
                writeln!(self.out, "FAIL {}", c.label)?;
            }
            writeln!(self.out, "{}: {}/{} passed", report.title, report.passed_count(), report.checks.len())?;
        } else {
            writeln!(self.out, "{report}")?;
        }
        Ok(if report.all_passed() { ExitCode::Success } else { ExitCode::CheckFailed })
    }

    fn genfunc(&mut self, family: &str, order: usize, m: Option<&str>, format: OutputFormat) -> CliResult<ExitCode> {
        check_cap("order", order, self.cap)?;
        let tag = parse_family(family)?;
        let rate = parse_rate(m)?;
        if rate.is_some() != tag.needs_rate() {
            return Err(CliError::Usage(match tag.needs_rate() {
                true => format!("family {tag} requires --m"),
                false => format!("family {tag} takes no --m"),
            }));
        }
        let series = match (tag, &rate) {
            (FamilyTag::E, _) => genfunc::series_e(order),
            (FamilyTag::S, _) => genfunc::series_s(order),
            (FamilyTag::C, _) => genfunc::series_c(order),
            (FamilyTag::Em, Some(m)) => genfunc::series_em(m, order)?,
            _ => return Err(CliError::Usage(format!("no generating function for {tag}; expected e, s, c or em"))),
        };
        let text = match format {
            OutputFormat::Text => render::series_text(&series),
            OutputFormat::Latex => render::series_latex(&series),
            OutputFormat::Json => render::SeriesDoc::new(tag.name(), rate.as_ref(), &series).to_json(),
            OutputFormat::Csv => render::series_csv(&series).trim_end().to_string(),
        };
        writeln!(self.out, "{text}")?;
        Ok(ExitCode::Success)
    }

    fn routes(&mut self, family: Option<&str>) -> CliResult<ExitCode> {
        let tags = match family {
            Some(f) => vec![parse_family(f)?],
            None => FamilyTag::ALL.to_vec(),
        };
        let reg = RouteRegistry::with_builtin();
        for tag in tags {
            for route in reg.routes(tag) {
                writeln!(self.out, "{tag}\t{}\t{}", route.name(), route.description())?;
            }
        }
        Ok(ExitCode::Success)
    }

    fn dispatch(&mut self, command: Command) -> CliResult<ExitCode> {
        match command {
            Command::Poly { family, n, m, format, route } => self.poly(&family, n, m.as_deref(), format, route.as_deref()),
            Command::Integrate { kind, n, m, a, b, check, format } => {
                self.integrate(&kind, n, m.as_deref(), a, b, check, format)
            }
            Command::Verify { suite, max_n, quiet } => self.verify(&suite, max_n, quiet),
            Command::Genfunc { family, order, m, format } => self.genfunc(&family, order, m.as_deref(), format),
            Command::Routes { family } => self.routes(family.as_deref()),
        }
    }
}

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, cap: usize, out: &mut dyn Write, err: &mut dyn Write) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => ExitCode::Success,
                _ => ExitCode::Usage,
            };
        }
    };
    let mut ctx = Ctx { out, cap };
    match ctx.dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (ExitCode, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let argv = std::iter::once("sce").chain(args.iter().copied());
        let code = run(argv, DEFAULT_MAX_N, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn documented_outputs() {
        assert_eq!(run_str(&["poly", "e", "--n", "2", "--format", "text"]).1, "x^2 - 2x + 2\n");
        assert_eq!(run_str(&["poly", "em", "--n", "1", "--m", "3", "--format", "text"]).1, "3x - 1\n");
        assert_eq!(
            run_str(&["poly", "e", "--n", "0", "--format", "json"]).1,
            "{\"family\":\"e\",\"n\":0,\"coeffs\":[{\"re\":\"1\",\"im\":\"0\"}]}\n"
        );
        assert_eq!(run_str(&["integrate", "--kind", "exp", "--n", "2"]).1, "(x^2 - 2x + 2) e^x + C\n");
        assert_eq!(run_str(&["genfunc", "--family", "e", "--order", "1"]).1, "1 + (x - 1) t\n");
        assert_eq!(run_str(&["genfunc", "--family", "s", "--order", "0"]).1, "-1\n");
        assert_eq!(run_str(&["genfunc", "--family", "c", "--order", "2"]).1, "1 + x t + (x^2/2 - 1) t^2\n");
    }

    #[test]
    fn usage_errors_exit_2() {
        for args in [
            &["integrate", "--kind", "exp", "--n", "1", "--m", "0"][..],
            &["poly", "em", "--n", "1", "--m", "1/0"],
            &["poly", "em", "--n", "1", "--m", "x/2"],
            &["poly", "em", "--n", "1"],
            &["poly", "q", "--n", "1"],
            &["poly", "e", "--n", "1", "--route", "nope"],
            &["verify", "--suite", "bogus", "--max-n", "1"],
            &["integrate", "--kind", "tan", "--n", "1"],
            &["poly", "e", "--n", "65"],
            &["genfunc", "--family", "shat", "--order", "2"],
        ] {
            let (code, out, err) = run_str(args);
            assert_eq!(code, ExitCode::Usage, "{args:?}");
            assert!(out.is_empty() && !err.is_empty(), "{args:?}");
        }
    }

    #[test]
    fn integrate_check() {
        let (code, out, _) = run_str(&["integrate", "--kind", "sin", "--n", "1", "--a", "0", "--b", "3.14159265358979", "--check"]);
        assert_eq!(code, ExitCode::Success);
        assert!(out.starts_with("value = 3.14159"), "{out}");
        assert!(out.contains("check: pass"));
        let (code, out, _) = run_str(&["integrate", "--kind", "exp", "--n", "3", "--m", "-1", "--a", "2", "--b", "-1", "--check"]);
        assert_eq!(code, ExitCode::Success, "{out}");
    }

    #[test]
    fn verify_and_routes() {
        let (code, out, _) = run_str(&["verify", "--suite", "all", "--max-n", "0"]);
        assert_eq!(code, ExitCode::Success);
        assert!(out.contains("passed"));
        let (code, out, _) = run_str(&["routes", "e"]);
        assert_eq!(code, ExitCode::Success);
        assert!(out.lines().any(|l| l.starts_with("e\trodrigues")));
        let (code, out, _) = run_str(&["poly", "s", "--n", "4", "--route", "rodrigues"]);
        assert_eq!((code, out.as_str()), (ExitCode::Success, "-x^4 + 12x^2 - 24\n"));
    }
}
