//! Browser bindings for p2count. Every entry point takes the prime and the
//! coefficients (whitespace-separated decimals, low-to-high) as text and
//! returns a JSON string; failures come back as `{"error": "..."}`.

use num_bigint::BigUint;
use p2count::cli::{execute, parse_inline, CliConfig, Command, InputSource};
use p2count::rootcount::{lift_roots, PrimeContext, RootKind};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest prime the lift grid will draw (`p^2` cells).
pub const MAX_GRID_P: u64 = 97;

#[derive(Serialize)]
struct ErrorDocument {
    error: String,
}

fn error_json(message: impl ToString) -> String {
    serde_json::to_string(&ErrorDocument { error: message.to_string().trim_end().to_string() })
        .expect("plain data serializes")
}

fn run(command: Command, prime: &str, coeffs: &str) -> String {
    let prime: BigUint = match prime.trim().parse() {
        Ok(p) => p,
        Err(_) => return error_json(format!("expected a decimal prime, found {:?}", prime.trim())),
    };
    let mut config = CliConfig::new(command, prime, InputSource::Inline(coeffs.to_string()));
    config.json = true;
    let out = execute(&config);
    if out.code == 0 {
        out.stdout.trim_end().to_string()
    } else {
        error_json(out.stderr.trim_start_matches("p2count: "))
    }
}

/// The count report: `p, ell, deg_f1, deg_h2, count, nonlifting, size_metric`.
#[wasm_bindgen]
pub fn count(prime: &str, coeffs: &str) -> String {
    run(Command::Count, prime, coeffs)
}

/// The ascending factorization with `t` and `h2`.
#[wasm_bindgen]
pub fn factor(prime: &str, coeffs: &str) -> String {
    run(Command::Factor, prime, coeffs)
}

#[derive(Serialize)]
struct GridRoot {
    base: u64,
    kind: &'static str,
    lifts: Vec<u64>,
}

#[derive(Serialize)]
struct GridDocument {
    p: u64,
    count: usize,
    roots: Vec<GridRoot>,
}

fn kind_name(kind: RootKind) -> &'static str {
    match kind {
        RootKind::Simple => "simple",
        RootKind::DegenerateLifts => "degenerate-lifts",
        RootKind::DegenerateDies => "degenerate-dies",
    }
}

/// Roots mod `p` with their lifts mod `p^2`, for drawing the `p x p` grid
/// whose cell `(r, j)` is the residue `r + j p`.
#[wasm_bindgen]
pub fn lift_grid(prime: &str, coeffs: &str) -> String {
    let p: u64 = match prime.trim().parse() {
        Ok(p) if (2..=MAX_GRID_P).contains(&p) => p,
        _ => return error_json(format!("the grid needs a prime between 2 and {MAX_GRID_P}")),
    };
    let f = match parse_inline(coeffs) {
        Ok(f) => f,
        Err(e) => return error_json(e),
    };
    let lifted = PrimeContext::new(p).and_then(|ctx| lift_roots(&f, &ctx, MAX_GRID_P));
    let lifted = match lifted {
        Ok(l) => l,
        Err(e) => return error_json(e),
    };
    let small = |b: &BigUint| u64::try_from(b).expect("below p^2");
    let roots: Vec<GridRoot> = lifted
        .iter()
        .map(|l| GridRoot { base: small(&l.base), kind: kind_name(l.kind), lifts: l.lifts.iter().map(small).collect() })
        .collect();
    let count = roots.iter().map(|r| r.lifts.len()).sum();
    serde_json::to_string(&GridDocument { p, count, roots }).expect("plain data serializes")
}
