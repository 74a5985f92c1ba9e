//! Root counting modulo `p^2`.
//!
//! With `h1 = f mod p = f_1 f_2^2 ... f_l^l g`, the count is
//! `#{a in [0, p^2) : f(a) = 0 mod p^2} = deg f_1 + p * deg h2`, where
//! `h2 = gcd(f_2 ... f_l, t)` and `t = ((f - g~ * prod f_i~^i) / p) mod p`.
//! Simple roots mod p lift uniquely; a degenerate root either lifts to all
//! `p` residues above it or to none. `t` is formed entirely mod `p^2`.

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::modring::{Modulus, PrimePower, Residue};
use crate::splitfact::{ascending_chain, AscendingFactorization};
use crate::zpoly::{exact_div_by_p, lift_embed, IntPoly, ModPoly};

/// Default bound on `p` for explicit enumeration.
pub const DEFAULT_MAX_ENUM_P: u64 = 1_000_000;
/// Default bound on `p^2` for the brute-force scan.
pub const DEFAULT_MAX_ORACLE_SQ: u64 = 100_000_000;

/// The rings `Z/pZ` and `Z/p^2Z` for one prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeContext {
    base: PrimePower,
    square: PrimePower,
}

impl PrimeContext {
    pub fn new(p: impl Into<BigUint>) -> Result<Self> {
        let base = PrimePower::new(p, 1)?;
        let square = PrimePower::new_unchecked(base.p().clone(), 2)?;
        Ok(PrimeContext { base, square })
    }

    /// Trusts the caller that `p` is prime.
    pub fn new_unchecked(p: impl Into<BigUint>) -> Result<Self> {
        let base = PrimePower::new_unchecked(p, 1)?;
        let square = PrimePower::new_unchecked(base.p().clone(), 2)?;
        Ok(PrimeContext { base, square })
    }

    pub fn p(&self) -> &BigUint {
        self.base.p()
    }

    /// `Z/pZ`.
    pub fn field(&self) -> &Modulus {
        self.base.modulus()
    }

    /// `Z/p^2Z`.
    pub fn square(&self) -> &Modulus {
        self.square.modulus()
    }

    fn p_u64(&self) -> Option<u64> {
        self.p().to_u64()
    }
}

/// How a root modulo `p` behaves modulo `p^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootKind {
    /// `f'(r) != 0 mod p`: exactly one lift.
    Simple,
    /// `f'(r) = 0 mod p` and `f(r) = 0 mod p^2`: all `p` lifts `r + j p`.
    DegenerateLifts,
    /// `f'(r) = 0 mod p` and `f(r) != 0 mod p^2`: no lifts.
    DegenerateDies,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedRoot {
    pub base: BigUint,
    pub kind: RootKind,
    /// Sorted roots modulo `p^2` congruent to `base` modulo `p`.
    pub lifts: Vec<BigUint>,
}

#[derive(Clone, Debug)]
pub struct RootReport {
    pub p: BigUint,
    pub deg_f1: usize,
    pub deg_h2: usize,
    pub ell: usize,
    /// `#V_(p^2)(f) = deg_f1 + p * deg_h2`.
    pub count: BigUint,
    /// Degenerate roots mod `p` with no lift mod `p^2`.
    pub nonlifting: usize,
    /// Present only when enumeration ran; sorted ascending.
    pub roots: Option<Vec<BigUint>>,
    pub t: ModPoly,
    pub h2: ModPoly,
    pub factorization: AscendingFactorization,
    pub size_metric: f64,
}

impl RootReport {
    /// Internal consistency of the report fields.
    pub fn is_consistent(&self) -> bool {
        let formula = BigUint::from(self.deg_f1) + &self.p * self.deg_h2;
        let degenerate = self.factorization.degenerate_degree();
        let bounded = self.deg_h2 <= degenerate
            && self.nonlifting == degenerate - self.deg_h2.min(degenerate)
            && self.deg_f1 + self.deg_h2
                <= self.factorization.reconstruct().degree().finite().unwrap_or(0);
        let roots_ok = self.roots.as_ref().map_or(true, |r| {
            BigUint::from(r.len()) == self.count && r.windows(2).all(|w| w[0] < w[1])
        });
        formula == self.count && bounded && roots_ok
    }
}

/// `t` from the coefficientwise lifts of `g` and each `f_i`.
pub fn compute_t(f: &IntPoly, fact: &AscendingFactorization, ctx: &PrimeContext) -> Result<ModPoly> {
    let sq = ctx.square();
    let g_lift = lift_embed(&fact.g, sq)?;
    let lifts = fact.factors.iter().map(|fi| lift_embed(fi, sq)).collect::<Result<Vec<_>>>()?;
    compute_t_with_lifts(f, &g_lift, &lifts, ctx)
}

/// `t = ((f - g_lift * prod lifts[i-1]^i) / p) mod p`, with every step mod `p^2`.
///
/// The lifts may be any polynomials mod `p^2` whose reductions mod `p`
/// reconstruct `f mod p`; `h2` does not depend on the choice.
pub fn compute_t_with_lifts(
    f: &IntPoly,
    g_lift: &ModPoly,
    lifts: &[ModPoly],
    ctx: &PrimeContext,
) -> Result<ModPoly> {
    let sq = ctx.square();
    let mut product = ModPoly::one(sq);
    for (i, lift) in lifts.iter().enumerate() {
        for _ in 0..=i {
            product = product.mul(lift)?;
        }
    }
    let product = product.mul(g_lift)?;
    let h1 = f.reduce(ctx.field());
    if ModPoly::from_biguints(&product.coeffs(), ctx.field()) != h1 {
        return Err(Error::FactorizationMismatch);
    }
    let e = f.reduce(sq).sub(&product)?;
    exact_div_by_p(&e, ctx.field())
}

/// `h2 = gcd(f_2 ... f_l, t)`, monic; 1 when `l <= 1`.
pub fn compute_h2(fact: &AscendingFactorization, t: &ModPoly) -> Result<ModPoly> {
    fact.degenerate_part().gcd(t)
}

/// Degenerate roots modulo `p` that do not lift: `deg(f_2 ... f_l) - deg h2`.
pub fn count_nonlifting(fact: &AscendingFactorization, h2: &ModPoly) -> usize {
    fact.degenerate_degree().saturating_sub(h2.degree().finite().unwrap_or(0))
}

fn reduce_nonzero(f: &IntPoly, ctx: &PrimeContext) -> Result<ModPoly> {
    let h1 = f.reduce(ctx.field());
    if h1.is_zero() {
        return Err(Error::AllCoefficientsDivisibleByP(ctx.p().clone()));
    }
    Ok(h1)
}

/// Formula count of the roots of `f` modulo `p^2`; no enumeration, any size of `p`.
pub fn count_roots_p2(f: &IntPoly, ctx: &PrimeContext) -> Result<RootReport> {
    let h1 = reduce_nonzero(f, ctx)?;
    let fact = ascending_chain(&h1)?;
    let t = compute_t(f, &fact, ctx)?;
    let h2 = compute_h2(&fact, &t)?;
    let deg_f1 = fact.simple_degree();
    let deg_h2 = h2.degree().finite().expect("gcd of a nonzero polynomial");
    Ok(RootReport {
        p: ctx.p().clone(),
        deg_f1,
        deg_h2,
        ell: fact.ell,
        count: BigUint::from(deg_f1) + ctx.p() * deg_h2,
        nonlifting: count_nonlifting(&fact, &h2),
        roots: None,
        t,
        h2,
        factorization: fact,
        size_metric: f.size_metric(),
    })
}

/// [`count_roots_p2`] plus the explicit sorted root list.
pub fn count_and_enumerate(f: &IntPoly, ctx: &PrimeContext, max_p: u64) -> Result<RootReport> {
    let roots = enumerate_roots_p2(f, ctx, max_p)?;
    let mut report = count_roots_p2(f, ctx)?;
    report.roots = Some(roots);
    Ok(report)
}

/// `f` and `f'` over `Z/p^2Z`, shared by the two lifting routines.
struct SquareImage {
    f: ModPoly,
    df: ModPoly,
}

impl SquareImage {
    fn new(f: &IntPoly, ctx: &PrimeContext) -> Self {
        let f = f.reduce(ctx.square());
        let df = f.derivative();
        SquareImage { f, df }
    }

    /// `(f(r), f'(r))` mod `p^2`, after checking `f(r) = 0 mod p`.
    fn at(&self, r: &BigUint, ctx: &PrimeContext) -> Result<(Residue, Residue)> {
        let x = Residue::new(r.clone(), ctx.square());
        let fr = self.f.eval(&x)?;
        if !(fr.value() % ctx.p()).is_zero() {
            return Err(Error::NotARoot { r: r.clone(), p: ctx.p().clone() });
        }
        Ok((fr, self.df.eval(&x)?))
    }

    fn lift_simple(&self, r: &BigUint, ctx: &PrimeContext) -> Result<BigUint> {
        let (fr, dfr) = self.at(r, ctx)?;
        if (dfr.value() % ctx.p()).is_zero() {
            return Err(Error::DegenerateRoot { r: r.clone(), p: ctx.p().clone() });
        }
        let step = fr.mul(&dfr.inv()?)?;
        Ok(Residue::new(r.clone(), ctx.square()).sub(&step)?.value().clone())
    }

    fn lift_degenerate(&self, r: &BigUint, ctx: &PrimeContext) -> Result<LiftedRoot> {
        let (fr, dfr) = self.at(r, ctx)?;
        if !(dfr.value() % ctx.p()).is_zero() {
            return Err(Error::NotDegenerate { r: r.clone(), p: ctx.p().clone() });
        }
        if fr.is_zero() {
            let p = ctx.p();
            let lifts = num_iter(p).map(|j| r + &j * p).collect();
            Ok(LiftedRoot { base: r.clone(), kind: RootKind::DegenerateLifts, lifts })
        } else {
            Ok(LiftedRoot { base: r.clone(), kind: RootKind::DegenerateDies, lifts: Vec::new() })
        }
    }
}

fn num_iter(n: &BigUint) -> impl Iterator<Item = BigUint> + '_ {
    let mut j = BigUint::zero();
    std::iter::from_fn(move || {
        if &j >= n {
            return None;
        }
        let out = j.clone();
        j += 1u32;
        Some(out)
    })
}

/// Unique lift of a simple root `r` (reduced mod `p` first):
/// `s = r - f(r) / f'(r)` in `Z/p^2Z`.
pub fn hensel_lift_simple(f: &IntPoly, r: &BigUint, ctx: &PrimeContext) -> Result<BigUint> {
    SquareImage::new(f, ctx).lift_simple(&(r % ctx.p()), ctx)
}

/// Lifts of a degenerate root `r` (reduced mod `p` first): all of `r + j p`
/// when `f(r) = 0 mod p^2`, none otherwise. Materializes `p` integers.
pub fn lift_degenerate_root(f: &IntPoly, r: &BigUint, ctx: &PrimeContext) -> Result<LiftedRoot> {
    SquareImage::new(f, ctx).lift_degenerate(&(r % ctx.p()), ctx)
}

/// Every root of `f` mod `p`, classified and lifted. Requires `p <= max_p`.
pub fn lift_roots(f: &IntPoly, ctx: &PrimeContext, max_p: u64) -> Result<Vec<LiftedRoot>> {
    let p = match ctx.p_u64() {
        Some(p) if p <= max_p => p,
        _ => {
            return Err(Error::PrimeTooLargeForEnumeration {
                p: ctx.p().clone(),
                cap: BigUint::from(max_p),
            })
        }
    };
    let h1 = reduce_nonzero(f, ctx)?;
    let dh1 = h1.derivative();
    let (on_h1, on_dh1) = (h1.evaluator(), dh1.evaluator());
    let image = SquareImage::new(f, ctx);
    let mut out = Vec::new();
    for a in (0..p).filter(|&a| on_h1.is_root_u64(a)) {
        let r = BigUint::from(a);
        if on_dh1.is_root_u64(a) {
            out.push(image.lift_degenerate(&r, ctx)?);
        } else {
            let lift = image.lift_simple(&r, ctx)?;
            out.push(LiftedRoot { base: r, kind: RootKind::Simple, lifts: vec![lift] });
        }
    }
    Ok(out)
}

/// All roots of `f` mod `p^2`, sorted, by scanning `[0, p)` and Hensel lifting.
pub fn enumerate_roots_p2(f: &IntPoly, ctx: &PrimeContext, max_p: u64) -> Result<Vec<BigUint>> {
    let mut roots: Vec<BigUint> =
        lift_roots(f, ctx, max_p)?.into_iter().flat_map(|l| l.lifts).collect();
    roots.sort();
    Ok(roots)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub count: BigUint,
    pub roots: Vec<BigUint>,
}

/// Brute force: evaluate `f` at every residue mod `p^2`. Requires `p^2 <= max_sq`.
pub fn oracle_count_p2(f: &IntPoly, ctx: &PrimeContext, max_sq: u64) -> Result<OracleResult> {
    let n = match ctx.square().value().to_u64() {
        Some(n) if n <= max_sq => n,
        _ => {
            return Err(Error::PrimeTooLargeForOracle {
                p: ctx.p().clone(),
                cap: BigUint::from(max_sq),
            })
        }
    };
    let image = f.reduce(ctx.square());
    let eval = image.evaluator();
    let roots: Vec<u64> = scan(n, |a| eval.is_root_u64(a));
    Ok(OracleResult {
        count: BigUint::from(roots.len()),
        roots: roots.into_iter().map(BigUint::from).collect(),
    })
}

#[cfg(feature = "parallel")]
fn scan(n: u64, pred: impl Fn(u64) -> bool + Sync) -> Vec<u64> {
    use rayon::prelude::*;
    (0..n).into_par_iter().filter(|&a| pred(a)).collect()
}

#[cfg(not(feature = "parallel"))]
fn scan(n: u64, pred: impl Fn(u64) -> bool) -> Vec<u64> {
    (0..n).filter(|&a| pred(a)).collect()
}

/// Integer-exact check that `r` is a root of `f` mod `m`, independent of the ring types.
pub fn is_root_mod(f: &IntPoly, r: &BigUint, m: &BigUint) -> bool {
    let value = f.eval(&BigInt::from(r.clone()));
    (value % BigInt::from(m.clone())).is_zero()
}
