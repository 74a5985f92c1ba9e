//! Shared fixtures: the worked example, random corpora, and brute-force oracles
//! that only use machine integers (no library ring or polynomial types).
#![allow(dead_code)]

use num_bigint::BigInt;
use p2count::IntPoly;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `x (x+2)^2 (x+4)^5 (x+3)^14 (x^3+2x+1) + 5 (x+2)(x+4)`, low-to-high.
pub const EXAMPLE_COEFFS: [i64; 26] = [
    40,
    19591041054,
    174686782469,
    716433486336,
    1835957176704,
    3350344836816,
    4688604525204,
    5275209809592,
    4921047219861,
    3879338706288,
    2610867590739,
    1506289490631,
    745101000855,
    315375403239,
    113842103703,
    34894415443,
    9032286149,
    1960388179,
    353428921,
    52256469,
    6225421,
    582597,
    41225,
    2073,
    66,
    1,
];

pub const EXAMPLE_ROOTS: [u64; 11] = [1, 3, 6, 8, 11, 13, 15, 16, 18, 21, 23];

/// Sum of ln(2 + |c|) over the example table, summed independently in f64.
pub const EXAMPLE_SIZE: f64 = 548.8362134855539;

pub fn example_f() -> IntPoly {
    IntPoly::from_i64s(&EXAMPLE_COEFFS)
}

pub const CORPUS_PRIMES: [u64; 7] = [2, 3, 5, 7, 11, 13, 17];

#[derive(Clone, Debug)]
pub struct Instance {
    pub p: u64,
    pub coeffs: Vec<i64>,
}

impl Instance {
    pub fn f(&self) -> IntPoly {
        IntPoly::from_i64s(&self.coeffs)
    }
}

fn not_all_divisible(coeffs: &[i64], p: u64) -> bool {
    coeffs.iter().any(|&c| c.rem_euclid(p as i64) != 0)
}

/// Degree 1..=10, coefficients uniform in [0, p^2), nonzero leading coefficient,
/// and not every coefficient divisible by p.
pub fn uniform_corpus(n: usize, seed: u64) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let p = CORPUS_PRIMES[rng.gen_range(0..CORPUS_PRIMES.len())];
        let sq = (p * p) as i64;
        let d = rng.gen_range(1..=10);
        let mut coeffs: Vec<i64> = (0..d).map(|_| rng.gen_range(0..sq)).collect();
        coeffs.push(rng.gen_range(1..sq));
        if not_all_divisible(&coeffs, p) {
            out.push(Instance { p, coeffs });
        }
    }
    out
}

fn mul_int(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `prod (x - r_j)^(k_j) * u + p * v` with small random pieces, degree <= 10,
/// so that degenerate roots of every kind appear often.
pub fn structured_corpus(n: usize, seed: u64) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let p = CORPUS_PRIMES[rng.gen_range(0..CORPUS_PRIMES.len())];
        let pi = p as i64;
        let mut f = vec![1i64];
        for _ in 0..rng.gen_range(1..=3) {
            let r = rng.gen_range(0..pi);
            for _ in 0..rng.gen_range(1..=4) {
                f = mul_int(&f, &[-r, 1]);
            }
        }
        let u_len = rng.gen_range(1..=3);
        if f.len() + u_len - 1 > 11 {
            continue;
        }
        let mut u: Vec<i64> = (0..u_len).map(|_| rng.gen_range(0..pi)).collect();
        if u.iter().all(|&c| c == 0) {
            u[0] = 1;
        }
        f = mul_int(&f, &u);
        let v_len = rng.gen_range(1..=f.len());
        for c in f.iter_mut().take(v_len) {
            *c += pi * rng.gen_range(-(pi)..=pi);
        }
        while f.last() == Some(&0) {
            f.pop();
        }
        if !f.is_empty() && not_all_divisible(&f, p) {
            out.push(Instance { p, coeffs: f });
        }
    }
    out
}

pub fn eval_mod(coeffs: &[i64], a: u64, m: u64) -> u64 {
    let m = m as i128;
    let a = a as i128;
    let mut acc: i128 = 0;
    for &c in coeffs.iter().rev() {
        acc = (acc * a + c as i128).rem_euclid(m);
    }
    acc as u64
}

pub fn derivative(coeffs: &[i64]) -> Vec<i64> {
    coeffs.iter().enumerate().skip(1).map(|(i, &c)| c * i as i64).collect()
}

/// Every `a in [0, p^2)` with `f(a) = 0 mod p^2`.
pub fn brute_roots(coeffs: &[i64], p: u64) -> Vec<u64> {
    (0..p * p).filter(|&a| eval_mod(coeffs, a, p * p) == 0).collect()
}

/// Roots mod p: (simple ones, degenerate ones), classified by f' mod p.
pub fn roots_mod_p(coeffs: &[i64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let d = derivative(coeffs);
    (0..p)
        .filter(|&a| eval_mod(coeffs, a, p) == 0)
        .partition(|&a| eval_mod(&d, a, p) != 0)
}

/// Degenerate roots mod p that are not roots mod p^2.
pub fn brute_nonlifting(coeffs: &[i64], p: u64) -> usize {
    let (_, degenerate) = roots_mod_p(coeffs, p);
    degenerate.into_iter().filter(|&a| eval_mod(coeffs, a, p * p) != 0).count()
}

pub fn big(v: &[u64]) -> Vec<num_bigint::BigUint> {
    v.iter().map(|&x| x.into()).collect()
}

pub fn bigint(v: i64) -> BigInt {
    BigInt::from(v)
}

use p2count::rootcount::{compute_h2, compute_t_with_lifts, PrimeContext};
use p2count::splitfact::ascending_chain;
use p2count::zpoly::{lift_embed, ModPoly};

fn perturb(lift: &ModPoly, deg: usize, ctx: &PrimeContext, rng: &mut ChaCha8Rng) -> ModPoly {
    let p = ctx.p().clone();
    let delta: Vec<num_bigint::BigUint> =
        (0..deg).map(|_| rng.gen_range(0..u64::MAX) % &p * &p).collect();
    lift.add(&ModPoly::from_biguints(&delta, ctx.square())).unwrap()
}

/// Outcome of one lift-perturbation trial.
pub struct PerturbTrial {
    pub h2: ModPoly,
    pub perturbed_h2: ModPoly,
    pub t_changed: bool,
}

/// Replaces each coefficientwise lift `L` (of `g` and every `f_i`) by
/// `L + p * Delta` with random `deg Delta < deg L`, then recomputes `t` and `h2`.
pub fn perturb_lifts(f: &IntPoly, ctx: &PrimeContext, rng: &mut ChaCha8Rng) -> PerturbTrial {
    let fact = ascending_chain(&f.reduce(ctx.field())).unwrap();
    let sq = ctx.square();
    let g_lift = lift_embed(&fact.g, sq).unwrap();
    let lifts: Vec<ModPoly> = fact.factors.iter().map(|fi| lift_embed(fi, sq).unwrap()).collect();
    let t = compute_t_with_lifts(f, &g_lift, &lifts, ctx).unwrap();
    let h2 = compute_h2(&fact, &t).unwrap();

    let g_pert = perturb(&g_lift, fact.g.degree().finite().unwrap_or(0), ctx, rng);
    let pert: Vec<ModPoly> = lifts
        .iter()
        .zip(&fact.factors)
        .map(|(l, fi)| perturb(l, fi.degree().finite().unwrap_or(0), ctx, rng))
        .collect();
    let t2 = compute_t_with_lifts(f, &g_pert, &pert, ctx).unwrap();
    let perturbed_h2 = compute_h2(&fact, &t2).unwrap();
    PerturbTrial { h2, perturbed_h2, t_changed: t2 != t }
}
