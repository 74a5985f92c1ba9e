//! Residue arithmetic modulo `p` and `p^2`, and the primality screen used to
//! validate user-supplied primes.

use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint, RandBigInt, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::{BigArith, WordArith};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub(crate) enum Arith {
    Word(WordArith),
    Big(BigArith),
}

struct ModulusInner {
    value: BigUint,
    arith: Arith,
    prime: bool,
}

/// A ring modulus `m >= 2`. Cheap to clone.
#[derive(Clone)]
pub struct Modulus(Arc<ModulusInner>);

impl Modulus {
    pub fn new(value: impl Into<BigUint>) -> Result<Self> {
        Self::build(value.into(), false)
    }

    /// A prime modulus, screened with [`is_probable_prime`].
    pub fn prime(value: impl Into<BigUint>) -> Result<Self> {
        let value = value.into();
        if !is_probable_prime(&value, DEFAULT_ROUNDS) {
            return Err(Error::NotPrime(value));
        }
        Self::build(value, true)
    }

    /// A modulus the caller asserts is prime, without screening it.
    pub fn prime_unchecked(value: impl Into<BigUint>) -> Result<Self> {
        Self::build(value.into(), true)
    }

    fn build(value: BigUint, prime: bool) -> Result<Self> {
        if value < BigUint::from(2u32) {
            return Err(Error::InvalidModulus(value));
        }
        let arith = match value.to_u64() {
            Some(m) => Arith::Word(WordArith::new(m)),
            None => Arith::Big(BigArith::new(value.clone())),
        };
        Ok(Modulus(Arc::new(ModulusInner { value, arith, prime })))
    }

    pub fn value(&self) -> &BigUint {
        &self.0.value
    }

    /// Whether the modulus was constructed as a prime (screened or asserted).
    pub fn is_prime(&self) -> bool {
        self.0.prime
    }

    pub(crate) fn arith(&self) -> &Arith {
        &self.0.arith
    }

    pub(crate) fn ensure_same(&self, other: &Modulus) -> Result<()> {
        if Arc::ptr_eq(&self.0, &other.0) || self.0.value == other.0.value {
            Ok(())
        } else {
            Err(Error::ModulusMismatch {
                left: self.0.value.clone(),
                right: other.0.value.clone(),
            })
        }
    }

    pub(crate) fn reduce_int(&self, v: &BigInt) -> BigUint {
        let m = BigInt::from_biguint(Sign::Plus, self.0.value.clone());
        v.mod_floor(&m).to_biguint().expect("mod_floor is nonnegative")
    }
}

impl PartialEq for Modulus {
    fn eq(&self, other: &Self) -> bool {
        self.0.value == other.0.value
    }
}

impl Eq for Modulus {}

impl fmt::Debug for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Modulus({})", self.0.value)
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.value.fmt(f)
    }
}

/// An element of `Z/mZ`, always stored as its least nonnegative representative.
#[derive(Clone, PartialEq, Eq)]
pub struct Residue {
    value: BigUint,
    modulus: Modulus,
}

impl Residue {
    pub fn new(value: impl Into<BigUint>, modulus: &Modulus) -> Self {
        Residue { value: value.into() % modulus.value(), modulus: modulus.clone() }
    }

    pub fn from_int(value: &BigInt, modulus: &Modulus) -> Self {
        Residue { value: modulus.reduce_int(value), modulus: modulus.clone() }
    }

    pub(crate) fn from_canonical(value: BigUint, modulus: &Modulus) -> Self {
        debug_assert!(&value < modulus.value());
        Residue { value, modulus: modulus.clone() }
    }

    pub fn zero(modulus: &Modulus) -> Self {
        Residue { value: BigUint::zero(), modulus: modulus.clone() }
    }

    pub fn one(modulus: &Modulus) -> Self {
        Residue { value: BigUint::one(), modulus: modulus.clone() }
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn add(&self, other: &Residue) -> Result<Residue> {
        self.modulus.ensure_same(&other.modulus)?;
        Ok(Residue::new(&self.value + &other.value, &self.modulus))
    }

    pub fn sub(&self, other: &Residue) -> Result<Residue> {
        self.modulus.ensure_same(&other.modulus)?;
        Ok(Residue::new(&self.value + self.modulus.value() - &other.value, &self.modulus))
    }

    pub fn mul(&self, other: &Residue) -> Result<Residue> {
        self.modulus.ensure_same(&other.modulus)?;
        Ok(Residue::new(&self.value * &other.value, &self.modulus))
    }

    pub fn neg(&self) -> Residue {
        Residue::new(self.modulus.value() - &self.value, &self.modulus)
    }

    pub fn inv(&self) -> Result<Residue> {
        mod_inv(self)
    }

    pub fn pow(&self, e: &BigUint) -> Residue {
        mod_pow(self, e)
    }
}

impl fmt::Debug for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

/// Multiplicative inverse; fails when `gcd(a, m) > 1`.
pub fn mod_inv(a: &Residue) -> Result<Residue> {
    let m = a.modulus.value();
    let not_invertible =
        || Error::NotInvertible { value: a.value.clone(), modulus: m.clone() };
    if a.value.is_zero() {
        return Err(not_invertible());
    }
    a.value
        .modinv(m)
        .map(|v| Residue::from_canonical(v, &a.modulus))
        .ok_or_else(not_invertible)
}

/// `a^e` by left-to-right square and multiply.
pub fn mod_pow(a: &Residue, e: &BigUint) -> Residue {
    let m = a.modulus.value();
    let mut acc = BigUint::one() % m;
    for i in (0..e.bits()).rev() {
        acc = (&acc * &acc) % m;
        if e.bit(i) {
            acc = (&acc * &a.value) % m;
        }
    }
    Residue::from_canonical(acc, &a.modulus)
}

/// Rounds used by [`Modulus::prime`] above the deterministic range.
pub const DEFAULT_ROUNDS: u32 = 32;

/// Witness set that makes Miller-Rabin exact for every `n < 3.3 * 10^24`.
const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

const WITNESS_SEED: u64 = 0x7032_636f_756e_7421;

/// Miller-Rabin. Exact below 2^64; above that, base 2 plus `rounds` witnesses
/// drawn from a fixed-seed generator. `false` always means composite.
pub fn is_probable_prime(n: &BigUint, rounds: u32) -> bool {
    if let Some(w) = n.to_u64() {
        return is_prime_u64(w);
    }
    if WITNESSES.iter().any(|&q| (n % q).is_zero()) {
        return false;
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().expect("n > 1");
    let d = &n_minus_1 >> s;
    let strong_probable = |a: &BigUint| {
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_1 {
            return true;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                return true;
            }
        }
        false
    };
    if !strong_probable(&BigUint::from(2u32)) {
        return false;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(WITNESS_SEED);
    let low = BigUint::from(3u32);
    (0..rounds).all(|_| strong_probable(&rng.gen_biguint_range(&low, &n_minus_1)))
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &WITNESSES {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        r
    };
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// `p^k` for a prime `p` and `k` in {1, 2}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimePower {
    p: BigUint,
    k: u32,
    modulus: Modulus,
}

impl PrimePower {
    pub fn new(p: impl Into<BigUint>, k: u32) -> Result<Self> {
        let p = p.into();
        if !is_probable_prime(&p, DEFAULT_ROUNDS) {
            return Err(Error::NotPrime(p));
        }
        Self::new_unchecked(p, k)
    }

    /// Skips the primality screen; `p` is still required to be at least 2.
    pub fn new_unchecked(p: impl Into<BigUint>, k: u32) -> Result<Self> {
        let p = p.into();
        let modulus = match k {
            1 => Modulus::prime_unchecked(p.clone())?,
            2 => Modulus::new(&p * &p)?,
            other => return Err(Error::UnsupportedExponent(other)),
        };
        Ok(PrimePower { p, k, modulus })
    }

    pub fn p(&self) -> &BigUint {
        &self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }
}
