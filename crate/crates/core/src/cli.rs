//! The `p2count` command line: input parsing, command dispatch, and rendering.
//!
//! Exit codes: 0 success (or agreement for `verify`), 1 `verify` mismatch,
//! 2 input error, 3 enumeration or brute-force cap exceeded.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, ValueEnum};
use num_bigint::{BigInt, BigUint};
use serde::{de, Deserialize, Deserializer, Serialize};

use crate::error::Error;
use crate::rootcount::{
    count_and_enumerate, count_roots_p2, oracle_count_p2, PrimeContext, RootReport,
    DEFAULT_MAX_ENUM_P, DEFAULT_MAX_ORACLE_SQ,
};
use crate::splitfact::validate_factorization;
use crate::zpoly::{IntPoly, ModPoly};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

/// Largest exponent accepted in `terms` form; the representation is dense.
pub const MAX_TERM_EXP: usize = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Root count modulo p^2 from the factorization formula.
    Count,
    /// Formula count plus the explicit sorted roots (needs p <= --max-enum-p).
    Enumerate,
    /// The ascending factorization of f mod p with the auxiliary t and h2.
    Factor,
    /// Brute-force count over all residues mod p^2 (needs p^2 <= --max-oracle-sq).
    Oracle,
    /// Run the formula and the brute force and compare them.
    Verify,
}

#[derive(Debug, Parser)]
#[command(name = "p2count", version, about = "Count roots of integer polynomials modulo p^2")]
pub struct CliArgs {
    #[arg(value_enum)]
    pub command: Command,
    /// The prime p (decimal, arbitrary size).
    #[arg(long)]
    pub prime: String,
    /// Whitespace-separated decimal coefficients, low-to-high.
    #[arg(long, conflicts_with = "file", required_unless_present = "file", allow_hyphen_values = true)]
    pub poly: Option<String>,
    /// JSON document with either `coeffs` or `terms`.
    #[arg(long)]
    pub file: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
    /// Trust that --prime is prime.
    #[arg(long)]
    pub no_prime_check: bool,
    #[arg(long, default_value_t = DEFAULT_MAX_ENUM_P)]
    pub max_enum_p: u64,
    #[arg(long, default_value_t = DEFAULT_MAX_ORACLE_SQ)]
    pub max_oracle_sq: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InputSource {
    Inline(String),
    File(PathBuf),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliConfig {
    pub prime: BigUint,
    pub command: Command,
    pub input: InputSource,
    pub json: bool,
    pub no_prime_check: bool,
    pub max_enum_p: u64,
    pub max_oracle_sq: u64,
}

impl CliConfig {
    pub fn new(command: Command, prime: impl Into<BigUint>, input: InputSource) -> Self {
        CliConfig {
            prime: prime.into(),
            command,
            input,
            json: false,
            no_prime_check: false,
            max_enum_p: DEFAULT_MAX_ENUM_P,
            max_oracle_sq: DEFAULT_MAX_ORACLE_SQ,
        }
    }
}

impl TryFrom<CliArgs> for CliConfig {
    type Error = String;

    fn try_from(args: CliArgs) -> Result<Self, String> {
        let prime = BigUint::from_str(args.prime.trim())
            .map_err(|_| format!("--prime: not a nonnegative decimal integer: {:?}", args.prime))?;
        let input = match (args.poly, args.file) {
            (Some(s), None) => InputSource::Inline(s),
            (None, Some(path)) => InputSource::File(path),
            _ => return Err("exactly one of --poly or --file is required".into()),
        };
        Ok(CliConfig {
            prime,
            command: args.command,
            input,
            json: args.json,
            no_prime_check: args.no_prime_check,
            max_enum_p: args.max_enum_p,
            max_oracle_sq: args.max_oracle_sq,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InputError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("the polynomial is empty or identically zero")]
    EmptyPolynomial,
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

fn parse_decimal(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str(s).ok()
}

fn nonzero(poly: IntPoly) -> Result<IntPoly, InputError> {
    if poly.is_zero() {
        Err(InputError::EmptyPolynomial)
    } else {
        Ok(poly)
    }
}

/// Whitespace-separated decimal coefficients, low-to-high.
pub fn parse_inline(text: &str) -> Result<IntPoly, InputError> {
    let mut coeffs = Vec::new();
    for (line_no, line) in text.lines().enumerate() {
        let mut rest = line;
        let mut offset = 0;
        while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
            let tail = &rest[start..];
            let len = tail.find(char::is_whitespace).unwrap_or(tail.len());
            let token = &tail[..len];
            let column = line[..offset + start].chars().count() + 1;
            let value = parse_decimal(token).ok_or_else(|| InputError::Parse {
                line: line_no + 1,
                column,
                message: format!("expected a decimal integer, found {token:?}"),
            })?;
            coeffs.push(value);
            offset += start + len;
            rest = &tail[len..];
        }
    }
    nonzero(IntPoly::new(coeffs))
}

/// A decimal string holding an arbitrary-precision integer.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Decimal(BigInt);

impl<'de> Deserialize<'de> for Decimal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_decimal(&s)
            .map(Decimal)
            .ok_or_else(|| de::Error::custom(format!("expected a decimal integer string, found {s:?}")))
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTerm {
    coeff: Decimal,
    exp: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    coeffs: Option<Vec<Decimal>>,
    terms: Option<Vec<RawTerm>>,
}

/// File input: exactly one of `coeffs` (decimal strings, low-to-high) or
/// `terms` (`{coeff, exp}` with strictly increasing `exp`).
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(try_from = "RawDocument")]
pub enum PolyInputDocument {
    Coeffs(Vec<BigInt>),
    Terms(Vec<(BigInt, usize)>),
}

impl TryFrom<RawDocument> for PolyInputDocument {
    type Error = String;

    fn try_from(raw: RawDocument) -> Result<Self, String> {
        match (raw.coeffs, raw.terms) {
            (Some(c), None) => Ok(PolyInputDocument::Coeffs(c.into_iter().map(|d| d.0).collect())),
            (None, Some(t)) => {
                if let Some(w) = t.windows(2).find(|w| w[0].exp >= w[1].exp) {
                    return Err(format!(
                        "term exponents must be strictly increasing ({} then {})",
                        w[0].exp, w[1].exp
                    ));
                }
                if let Some(term) = t.iter().find(|term| term.exp > MAX_TERM_EXP) {
                    return Err(format!("exponent {} exceeds {MAX_TERM_EXP}", term.exp));
                }
                Ok(PolyInputDocument::Terms(t.into_iter().map(|term| (term.coeff.0, term.exp)).collect()))
            }
            _ => Err("exactly one of `coeffs` or `terms` must be present".into()),
        }
    }
}

impl PolyInputDocument {
    pub fn into_poly(self) -> IntPoly {
        match self {
            PolyInputDocument::Coeffs(c) => IntPoly::new(c),
            PolyInputDocument::Terms(terms) => {
                let len = terms.last().map_or(0, |&(_, e)| e + 1);
                let mut dense = vec![BigInt::default(); len];
                for (c, e) in terms {
                    dense[e] = c;
                }
                IntPoly::new(dense)
            }
        }
    }
}

pub fn parse_document(text: &str) -> Result<IntPoly, InputError> {
    let doc: PolyInputDocument = serde_json::from_str(text).map_err(|e| InputError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    nonzero(doc.into_poly())
}

pub fn parse_input(source: &InputSource) -> Result<IntPoly, InputError> {
    match source {
        InputSource::Inline(s) => parse_inline(s),
        InputSource::File(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| InputError::Io {
                path: path.display().to_string(),
                message: e.to_string(),
            })?;
            parse_document(&text)
        }
    }
}

/// Report as emitted by `count` and `enumerate`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub p: String,
    pub ell: usize,
    pub deg_f1: usize,
    pub deg_h2: usize,
    pub count: String,
    pub nonlifting: usize,
    pub size_metric: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub roots: Option<Vec<String>>,
}

impl From<&RootReport> for ReportDocument {
    fn from(r: &RootReport) -> Self {
        ReportDocument {
            p: r.p.to_string(),
            ell: r.ell,
            deg_f1: r.deg_f1,
            deg_h2: r.deg_h2,
            count: r.count.to_string(),
            nonlifting: r.nonlifting,
            size_metric: r.size_metric,
            roots: r.roots.as_ref().map(|v| v.iter().map(ToString::to_string).collect()),
        }
    }
}

pub fn render_document(doc: &ReportDocument, json: bool) -> String {
    if json {
        return serde_json::to_string(doc).expect("plain data serializes");
    }
    let mut out = String::new();
    let _ = writeln!(out, "p: {}", doc.p);
    let _ = writeln!(out, "ell: {}", doc.ell);
    let _ = writeln!(out, "deg_f1: {}", doc.deg_f1);
    let _ = writeln!(out, "deg_h2: {}", doc.deg_h2);
    let _ = writeln!(out, "count: {}", doc.count);
    let _ = writeln!(out, "nonlifting: {}", doc.nonlifting);
    let _ = writeln!(out, "size_metric: {}", doc.size_metric);
    if let Some(roots) = &doc.roots {
        let _ = writeln!(out, "roots: {}", roots.join(" "));
    }
    out
}

pub fn render_report(report: &RootReport, json: bool) -> String {
    render_document(&ReportDocument::from(report), json)
}

/// Parses the JSON form produced by [`render_report`].
pub fn parse_report(text: &str) -> Result<ReportDocument, serde_json::Error> {
    serde_json::from_str(text)
}

fn coeff_strings(p: &ModPoly) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}

#[derive(Debug, Serialize)]
struct FactorEntry {
    multiplicity: usize,
    coeffs: Vec<String>,
}

#[derive(Debug, Serialize)]
struct FactorDocument {
    p: String,
    ell: usize,
    factors: Vec<FactorEntry>,
    g: Vec<String>,
    t: Vec<String>,
    h2: Vec<String>,
}

fn render_factor(report: &RootReport, json: bool) -> String {
    let fact = &report.factorization;
    let nontrivial = || fact.factors.iter().enumerate().filter(|(_, f)| !f.is_one());
    if json {
        let doc = FactorDocument {
            p: report.p.to_string(),
            ell: fact.ell,
            factors: nontrivial()
                .map(|(i, f)| FactorEntry { multiplicity: i + 1, coeffs: coeff_strings(f) })
                .collect(),
            g: coeff_strings(&fact.g),
            t: coeff_strings(&report.t),
            h2: coeff_strings(&report.h2),
        };
        return serde_json::to_string(&doc).expect("plain data serializes");
    }
    let line = |name: &str, p: &ModPoly| format!("{name}: [{}]  # {p}\n", coeff_strings(p).join(", "));
    let mut out = format!("p: {}\nell: {}\n", report.p, fact.ell);
    for (i, f) in nontrivial() {
        out += &line(&format!("f_{}", i + 1), f);
    }
    out += &line("g", &fact.g);
    out += &line("t", &report.t);
    out += &line("h2", &report.h2);
    out
}

#[derive(Debug, Serialize)]
struct OracleDocument {
    p: String,
    count: String,
    roots: Vec<String>,
}

#[derive(Debug, Serialize)]
struct VerifyDocument {
    p: String,
    formula_count: String,
    oracle_count: String,
    factorization_valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    enumeration_matches: Option<bool>,
    agree: bool,
}

/// What a single invocation prints and returns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, message: impl std::fmt::Display) -> Self {
        Outcome { code, stdout: String::new(), stderr: format!("p2count: {message}\n") }
    }
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::PrimeTooLargeForEnumeration { .. } | Error::PrimeTooLargeForOracle { .. } => EXIT_CAP,
        _ => EXIT_INPUT,
    }
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

pub fn execute(config: &CliConfig) -> Outcome {
    let f = match parse_input(&config.input) {
        Ok(f) => f,
        Err(e) => return Outcome::fail(EXIT_INPUT, e),
    };
    let ctx = if config.no_prime_check {
        PrimeContext::new_unchecked(config.prime.clone())
    } else {
        PrimeContext::new(config.prime.clone())
    };
    let ctx = match ctx {
        Ok(c) => c,
        Err(e) => return Outcome::fail(EXIT_INPUT, e),
    };
    match run(config, &f, &ctx) {
        Ok(out) => out,
        Err(e) => Outcome::fail(error_code(&e), e),
    }
}

fn run(config: &CliConfig, f: &IntPoly, ctx: &PrimeContext) -> crate::Result<Outcome> {
    let json = config.json;
    let out = match config.command {
        Command::Count => Outcome::ok(with_newline(render_report(&count_roots_p2(f, ctx)?, json))),
        Command::Enumerate => Outcome::ok(with_newline(render_report(
            &count_and_enumerate(f, ctx, config.max_enum_p)?,
            json,
        ))),
        Command::Factor => Outcome::ok(with_newline(render_factor(&count_roots_p2(f, ctx)?, json))),
        Command::Oracle => {
            let o = oracle_count_p2(f, ctx, config.max_oracle_sq)?;
            let doc = OracleDocument {
                p: ctx.p().to_string(),
                count: o.count.to_string(),
                roots: o.roots.iter().map(ToString::to_string).collect(),
            };
            let text = if json {
                serde_json::to_string(&doc).expect("plain data serializes")
            } else {
                format!("p: {}\ncount: {}\nroots: {}\n", doc.p, doc.count, doc.roots.join(" "))
            };
            Outcome::ok(with_newline(text))
        }
        Command::Verify => {
            let oracle = oracle_count_p2(f, ctx, config.max_oracle_sq)?;
            let report = count_roots_p2(f, ctx)?;
            let h1 = f.reduce(ctx.field());
            let factorization_valid = validate_factorization(&report.factorization, &h1);
            let p_fits = ctx.p() <= &BigUint::from(config.max_enum_p);
            let enumeration_matches = if p_fits {
                Some(count_and_enumerate(f, ctx, config.max_enum_p)?.roots == Some(oracle.roots.clone()))
            } else {
                None
            };
            let agree = report.count == oracle.count
                && factorization_valid
                && enumeration_matches.unwrap_or(true);
            let doc = VerifyDocument {
                p: ctx.p().to_string(),
                formula_count: report.count.to_string(),
                oracle_count: oracle.count.to_string(),
                factorization_valid,
                enumeration_matches,
                agree,
            };
            let text = if json {
                serde_json::to_string(&doc).expect("plain data serializes")
            } else {
                let mut s = format!(
                    "p: {}\nformula_count: {}\noracle_count: {}\nfactorization_valid: {}\n",
                    doc.p, doc.formula_count, doc.oracle_count, doc.factorization_valid
                );
                if let Some(m) = doc.enumeration_matches {
                    let _ = writeln!(s, "enumeration_matches: {m}");
                }
                let _ = writeln!(s, "agree: {}", doc.agree);
                s
            };
            Outcome {
                code: if agree { EXIT_OK } else { EXIT_MISMATCH },
                stdout: with_newline(text),
                stderr: String::new(),
            }
        }
    };
    Ok(out)
}
