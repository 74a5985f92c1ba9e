//! Coefficient arithmetic backends shared by every polynomial kernel.
//!
//! Moduli that fit in a machine word use `u64` residues with 128-bit
//! products and delayed reduction; everything else falls back to `BigUint`.

use std::fmt::Debug;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// Dense coefficient storage, low-to-high, in the representation chosen by the modulus.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Coeffs {
    Word(Vec<u64>),
    Big(Vec<BigUint>),
}

impl Coeffs {
    pub(crate) fn len(&self) -> usize {
        match self {
            Coeffs::Word(v) => v.len(),
            Coeffs::Big(v) => v.len(),
        }
    }
}

pub(crate) trait CoeffArith {
    type Elem: Clone + PartialEq + Debug;
    type Acc;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_u64(&self, v: u64) -> Self::Elem;
    fn from_big(&self, v: &BigUint) -> Self::Elem;
    fn to_big(&self, a: &Self::Elem) -> BigUint;

    /// Unreduced sum of products; `finish` performs the single reduction.
    fn new_acc(&self) -> Self::Acc;
    fn mul_acc(&self, acc: &mut Self::Acc, a: &Self::Elem, b: &Self::Elem);
    fn finish(&self, acc: Self::Acc) -> Self::Elem;

    fn view<'a>(&self, c: &'a Coeffs) -> &'a [Self::Elem];
    fn wrap(&self, v: Vec<Self::Elem>) -> Coeffs;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) struct WordArith {
    m: u64,
    /// 2^128 mod m, used to fold the carry word of an accumulator.
    r128: u64,
}

#[inline]
fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

impl WordArith {
    pub(crate) fn new(m: u64) -> Self {
        debug_assert!(m >= 2);
        let r64 = ((1u128 << 64) % m as u128) as u64;
        WordArith { m, r128: mulmod(r64, r64, m) }
    }

    pub(crate) fn modulus(&self) -> u64 {
        self.m
    }
}

/// 192-bit accumulator: `hi * 2^128 + lo`.
#[derive(Clone, Copy, Default)]
pub(crate) struct WideAcc {
    lo: u128,
    hi: u64,
}

impl CoeffArith for WordArith {
    type Elem = u64;
    type Acc = WideAcc;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = *a as u128 + *b as u128;
        if s >= self.m as u128 {
            (s - self.m as u128) as u64
        } else {
            s as u64
        }
    }
    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + (self.m - b)
        }
    }
    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mulmod(*a, *b, self.m)
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        let (mut r0, mut r1) = (self.m as i128, (*a % self.m) as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        if r0 != 1 {
            return None;
        }
        Some(t0.rem_euclid(self.m as i128) as u64)
    }
    fn from_u64(&self, v: u64) -> u64 {
        v % self.m
    }
    fn from_big(&self, v: &BigUint) -> u64 {
        (v % self.m).to_u64().expect("reduced below a u64 modulus")
    }
    fn to_big(&self, a: &u64) -> BigUint {
        BigUint::from(*a)
    }

    #[inline]
    fn new_acc(&self) -> WideAcc {
        WideAcc::default()
    }
    #[inline]
    fn mul_acc(&self, acc: &mut WideAcc, a: &u64, b: &u64) {
        let (lo, carry) = acc.lo.overflowing_add(*a as u128 * *b as u128);
        acc.lo = lo;
        acc.hi += carry as u64;
    }
    #[inline]
    fn finish(&self, acc: WideAcc) -> u64 {
        let lo = (acc.lo % self.m as u128) as u64;
        if acc.hi == 0 {
            return lo;
        }
        let hi = mulmod(acc.hi % self.m, self.r128, self.m);
        self.add(&lo, &hi)
    }

    fn view<'a>(&self, c: &'a Coeffs) -> &'a [u64] {
        match c {
            Coeffs::Word(v) => v,
            Coeffs::Big(_) => unreachable!("word modulus always stores word coefficients"),
        }
    }
    fn wrap(&self, v: Vec<u64>) -> Coeffs {
        Coeffs::Word(v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct BigArith {
    m: BigUint,
}

impl BigArith {
    pub(crate) fn new(m: BigUint) -> Self {
        BigArith { m }
    }
}

impl CoeffArith for BigArith {
    type Elem = BigUint;
    type Acc = BigUint;

    fn zero(&self) -> BigUint {
        BigUint::zero()
    }
    fn one(&self) -> BigUint {
        BigUint::one()
    }
    fn is_zero(&self, a: &BigUint) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigUint, b: &BigUint) -> BigUint {
        let s = a + b;
        if s >= self.m {
            s - &self.m
        } else {
            s
        }
    }
    fn sub(&self, a: &BigUint, b: &BigUint) -> BigUint {
        if a >= b {
            a - b
        } else {
            a + &self.m - b
        }
    }
    fn mul(&self, a: &BigUint, b: &BigUint) -> BigUint {
        (a * b) % &self.m
    }
    fn inv(&self, a: &BigUint) -> Option<BigUint> {
        if a.is_zero() {
            return None;
        }
        a.modinv(&self.m)
    }
    fn from_u64(&self, v: u64) -> BigUint {
        BigUint::from(v) % &self.m
    }
    fn from_big(&self, v: &BigUint) -> BigUint {
        v % &self.m
    }
    fn to_big(&self, a: &BigUint) -> BigUint {
        a.clone()
    }

    fn new_acc(&self) -> BigUint {
        BigUint::zero()
    }
    fn mul_acc(&self, acc: &mut BigUint, a: &BigUint, b: &BigUint) {
        *acc += a * b;
    }
    fn finish(&self, acc: BigUint) -> BigUint {
        acc % &self.m
    }

    fn view<'a>(&self, c: &'a Coeffs) -> &'a [BigUint] {
        match c {
            Coeffs::Big(v) => v,
            Coeffs::Word(_) => unreachable!("big modulus always stores big coefficients"),
        }
    }
    fn wrap(&self, v: Vec<BigUint>) -> Coeffs {
        Coeffs::Big(v)
    }
}
