//! Text, LaTeX, JSON and CSV rendering of polynomials, series and closed
//! forms, plus parsing the JSON form back.

use std::fmt::Write as _;

use sce_core::integrals::{ClosedForm, ClosedFormParts};
use sce_core::{FormalSeries, GaussianRational, Poly, Rational};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Text,
    Latex,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Style {
    Text,
    Latex,
}

/// One signed term, split into its sign and its unsigned body.
struct Term {
    negative: bool,
    body: String,
}

fn power(style: Style, var: &str, k: usize) -> String {
    match (k, style) {
        (0, _) => String::new(),
        (1, _) => var.to_string(),
        (k, Style::Text) => format!("{var}^{k}"),
        (k, Style::Latex) => format!("{var}^{{{k}}}"),
    }
}

fn fraction(style: Style, numer: &str, denom: &str) -> String {
    match style {
        Style::Text => format!("{numer}/{denom}"),
        Style::Latex => format!("\\frac{{{numer}}}{{{denom}}}"),
    }
}

/// `c·var^k` for a coefficient with a single nonzero component, where
/// `unit` is `""` for real and `"i"` for imaginary coefficients.
fn pure_term(style: Style, c: &Rational, unit: &str, var: &str, k: usize) -> Term {
    let numer = c.numer().magnitude().to_string();
    let denom = c.denom().to_string();
    let x = power(style, var, k);
    let head = match (numer.as_str(), unit, k) {
        ("1", "", 0) => "1".to_string(),
        ("1", u, _) => u.to_string(),
        (n, u, _) => format!("{n}{u}"),
    };
    let body = match (style, denom.as_str()) {
        (_, "1") => format!("{head}{x}"),
        (Style::Text, d) if head.is_empty() => format!("{x}/{d}"),
        (Style::Text, d) => format!("{head}{x}/{d}"),
        (Style::Latex, d) => {
            let top = if head.is_empty() { "1".to_string() } else { head };
            format!("{}{x}", fraction(style, &top, d))
        }
    };
    Term { negative: c.is_negative(), body }
}

fn coefficient_scalar(style: Style, c: &Rational) -> String {
    let numer = c.numer().to_string();
    let denom = c.denom().to_string();
    if denom == "1" {
        numer
    } else {
        fraction(style, &numer, &denom)
    }
}

fn term(style: Style, c: &GaussianRational, var: &str, k: usize) -> Term {
    match (c.re.is_zero(), c.im.is_zero()) {
        (_, true) => pure_term(style, &c.re, "", var, k),
        (true, false) => pure_term(style, &c.im, "i", var, k),
        (false, false) => {
            let sign = if c.im.is_negative() { "-" } else { "+" };
            let inner = format!(
                "{} {sign} {}i",
                coefficient_scalar(style, &c.re),
                coefficient_scalar(style, &c.im.abs())
            );
            let wrapped = match style {
                Style::Text => format!("({inner})"),
                Style::Latex => format!("\\left({inner}\\right)"),
            };
            Term { negative: false, body: format!("{wrapped}{}", power(style, var, k)) }
        }
    }
}

fn join(terms: impl IntoIterator<Item = Term>) -> String {
    let mut out = String::new();
    for (idx, t) in terms.into_iter().enumerate() {
        match (idx, t.negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&t.body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn poly_terms(style: Style, p: &Poly, var: &str) -> Vec<Term> {
    p.coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| term(style, c, var, k))
        .collect()
}

fn poly_in(style: Style, p: &Poly) -> String {
    join(poly_terms(style, p, "x"))
}

/// Descending powers: `x^2 - 2x + 2`, `x^2/2 - 1`, `-x^2 - 2ix + 2`.
pub fn poly_text(p: &Poly) -> String {
    poly_in(Style::Text, p)
}

/// Descending powers: `x^{2} - 2x + 2`, `\frac{1}{2}x^{2} - 1`.
pub fn poly_latex(p: &Poly) -> String {
    poly_in(Style::Latex, p)
}

/// `p` as a signed factor in front of `tail`: `(x - 1) t`, `-x t`, `t`.
fn factor_term(style: Style, p: &Poly, tail: &str) -> Option<Term> {
    let mut terms = poly_terms(style, p, "x");
    match terms.len() {
        0 => None,
        1 => {
            let t = terms.pop().expect("one term");
            let body = match t.body.as_str() {
                "1" => tail.to_string(),
                b => format!("{b} {tail}"),
            };
            Some(Term { negative: t.negative, body })
        }
        _ => {
            let inner = join(terms);
            let body = match style {
                Style::Text => format!("({inner}) {tail}"),
                Style::Latex => format!("\\left({inner}\\right) {tail}"),
            };
            Some(Term { negative: false, body })
        }
    }
}

fn series_in(style: Style, s: &FormalSeries) -> String {
    let mut terms = Vec::new();
    for (k, c) in s.coeffs().iter().enumerate() {
        if k == 0 {
            terms.extend(poly_terms(style, c, "x"));
            continue;
        }
        terms.extend(factor_term(style, c, &power(style, "t", k)));
    }
    join(terms)
}

/// Ascending powers of `t`: `1 + (x - 1) t + (x^2/2 - 1) t^2`.
pub fn series_text(s: &FormalSeries) -> String {
    series_in(Style::Text, s)
}

pub fn series_latex(s: &FormalSeries) -> String {
    series_in(Style::Latex, s)
}

fn exp_factor(style: Style, rate: &Rational) -> String {
    let exponent = poly_in(style, &Poly::monomial(GaussianRational::real(rate.clone()), 1));
    match (style, exponent.as_str()) {
        (Style::Text, "x") => "e^x".to_string(),
        (Style::Text, e) => format!("e^({e})"),
        (Style::Latex, e) => format!("e^{{{e}}}"),
    }
}

fn closed_form_in(style: Style, cf: &ClosedForm) -> String {
    let pieces: Vec<(&Poly, String)> = match &cf.parts {
        ClosedFormParts::Exp { poly, rate } => vec![(poly, exp_factor(style, rate))],
        ClosedFormParts::Trig { cos_part, sin_part } => {
            let (cos, sin) = match style {
                Style::Text => ("cos x", "sin x"),
                Style::Latex => ("\\cos x", "\\sin x"),
            };
            match cf.kind {
                sce_core::IntegralKind::Cos => vec![(sin_part, sin.to_string()), (cos_part, cos.to_string())],
                _ => vec![(cos_part, cos.to_string()), (sin_part, sin.to_string())],
            }
        }
    };
    let mut terms: Vec<Term> = pieces.iter().filter_map(|(p, tail)| factor_term(style, p, tail)).collect();
    if !cf.constant.is_zero() {
        terms.push(pure_term(style, &cf.constant, "", "x", 0));
    }
    terms.push(Term { negative: false, body: "C".to_string() });
    join(terms)
}

/// `(x^2 - 2x + 2) e^x + C`, `(x/2 - 1/4) e^(2x) + C`, `-cos x + C`.
pub fn closed_form_text(cf: &ClosedForm) -> String {
    closed_form_in(Style::Text, cf)
}

pub fn closed_form_latex(cf: &ClosedForm) -> String {
    closed_form_in(Style::Latex, cf)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonCoeff {
    pub re: String,
    pub im: String,
}

impl From<&GaussianRational> for JsonCoeff {
    fn from(c: &GaussianRational) -> Self {
        JsonCoeff { re: c.re.to_string(), im: c.im.to_string() }
    }
}

impl JsonCoeff {
    pub fn parse(&self) -> Result<GaussianRational, String> {
        let re: Rational = self.re.parse().map_err(|e| format!("re {:?}: {e}", self.re))?;
        let im: Rational = self.im.parse().map_err(|e| format!("im {:?}: {e}", self.im))?;
        Ok(GaussianRational::new(re, im))
    }
}

/// Schema of `poly --format json`; coefficients ascend by degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyDoc {
    pub family: String,
    pub n: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<String>,
    pub coeffs: Vec<JsonCoeff>,
}

impl PolyDoc {
    pub fn new(family: &str, n: i64, m: Option<&Rational>, p: &Poly) -> Self {
        PolyDoc {
            family: family.to_string(),
            n,
            m: m.map(|r| r.to_string()),
            coeffs: p.coeffs().iter().map(JsonCoeff::from).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| e.to_string())
    }

    pub fn poly(&self) -> Result<Poly, String> {
        Ok(Poly::new(self.coeffs.iter().map(JsonCoeff::parse).collect::<Result<_, _>>()?))
    }
}

/// Schema of `genfunc --format json`: one coefficient list per power of `t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesDoc {
    pub family: String,
    pub order: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<String>,
    pub coeffs: Vec<Vec<JsonCoeff>>,
}

impl SeriesDoc {
    pub fn new(family: &str, m: Option<&Rational>, s: &FormalSeries) -> Self {
        SeriesDoc {
            family: family.to_string(),
            order: s.order(),
            m: m.map(|r| r.to_string()),
            coeffs: s.coeffs().iter().map(|p| p.coeffs().iter().map(JsonCoeff::from).collect()).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

pub const POLY_CSV_HEADER: &str = "degree,re_num,re_den,im_num,im_den";

fn csv_row(out: &mut String, lead: &str, c: &GaussianRational) {
    let _ = writeln!(out, "{lead}{},{},{},{}", c.re.numer(), c.re.denom(), c.im.numer(), c.im.denom());
}

/// One row per degree from 0 to the degree of `p`; the zero polynomial has
/// only the header.
pub fn poly_csv(p: &Poly) -> String {
    let mut out = format!("{POLY_CSV_HEADER}\n");
    for (k, c) in p.coeffs().iter().enumerate() {
        csv_row(&mut out, &format!("{k},"), c);
    }
    out
}

pub fn series_csv(s: &FormalSeries) -> String {
    let mut out = format!("power,{POLY_CSV_HEADER}\n");
    for (j, p) in s.coeffs().iter().enumerate() {
        for (k, c) in p.coeffs().iter().enumerate() {
            csv_row(&mut out, &format!("{j},{k},"), c);
        }
    }
    out
}
