//! Dense low-to-high polynomial kernels over an arbitrary coefficient backend.
//!
//! Inputs and outputs are always trimmed (no trailing zeros). Every dot product
//! is accumulated unreduced and reduced once.

use num_bigint::BigUint;

use crate::arith::CoeffArith;

pub(crate) fn trim<A: CoeffArith>(ar: &A, v: &mut Vec<A::Elem>) {
    while v.last().is_some_and(|c| ar.is_zero(c)) {
        v.pop();
    }
}

pub(crate) fn add<A: CoeffArith>(ar: &A, a: &[A::Elem], b: &[A::Elem]) -> Vec<A::Elem> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out: Vec<A::Elem> = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o = ar.add(o, s);
    }
    trim(ar, &mut out);
    out
}

pub(crate) fn sub<A: CoeffArith>(ar: &A, a: &[A::Elem], b: &[A::Elem]) -> Vec<A::Elem> {
    let zero = ar.zero();
    let n = a.len().max(b.len());
    let mut out: Vec<A::Elem> = (0..n)
        .map(|i| ar.sub(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
        .collect();
    trim(ar, &mut out);
    out
}

pub(crate) fn scale<A: CoeffArith>(ar: &A, a: &[A::Elem], c: &A::Elem) -> Vec<A::Elem> {
    let mut out: Vec<A::Elem> = a.iter().map(|x| ar.mul(x, c)).collect();
    trim(ar, &mut out);
    out
}

pub(crate) fn mul<A: CoeffArith>(ar: &A, a: &[A::Elem], b: &[A::Elem]) -> Vec<A::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let n = a.len() + b.len() - 1;
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let lo = k.saturating_sub(b.len() - 1);
        let hi = k.min(a.len() - 1);
        let mut acc = ar.new_acc();
        for i in lo..=hi {
            ar.mul_acc(&mut acc, &a[i], &b[k - i]);
        }
        out.push(ar.finish(acc));
    }
    trim(ar, &mut out);
    out
}

/// Quotient and remainder of `a` by `b`, given the inverse of `b`'s leading coefficient.
///
/// Each quotient coefficient is one delayed-reduction dot product against the
/// already-known higher quotient coefficients; the remainder is the low part
/// of `a - q*b`.
pub(crate) fn div_rem<A: CoeffArith>(
    ar: &A,
    a: &[A::Elem],
    b: &[A::Elem],
    lead_inv: &A::Elem,
) -> (Vec<A::Elem>, Vec<A::Elem>) {
    debug_assert!(!b.is_empty());
    if a.len() < b.len() {
        return (Vec::new(), a.to_vec());
    }
    let n = b.len() - 1;
    let dq = a.len() - b.len();
    let mut q = vec![ar.zero(); dq + 1];
    for k in (0..=dq).rev() {
        let mut acc = ar.new_acc();
        for j in 1..=n.min(dq - k) {
            ar.mul_acc(&mut acc, &q[k + j], &b[n - j]);
        }
        let c = ar.sub(&a[k + n], &ar.finish(acc));
        q[k] = ar.mul(&c, lead_inv);
    }
    let mut r = Vec::with_capacity(n);
    for i in 0..n {
        let mut acc = ar.new_acc();
        for k in 0..=i.min(dq) {
            ar.mul_acc(&mut acc, &q[k], &b[i - k]);
        }
        r.push(ar.sub(&a[i], &ar.finish(acc)));
    }
    trim(ar, &mut r);
    trim(ar, &mut q);
    (q, r)
}

/// Scales `a` to leading coefficient 1; `None` if the leading coefficient is not a unit.
pub(crate) fn monic<A: CoeffArith>(ar: &A, a: &[A::Elem]) -> Option<Vec<A::Elem>> {
    match a.last() {
        None => Some(Vec::new()),
        Some(lead) => {
            let inv = ar.inv(lead)?;
            Some(scale(ar, a, &inv))
        }
    }
}

/// Monic gcd by the Euclidean algorithm, normalizing every remainder.
/// The backend must be a field and not both inputs may be zero.
pub(crate) fn gcd_monic<A: CoeffArith>(ar: &A, a: &[A::Elem], b: &[A::Elem]) -> Vec<A::Elem> {
    let field = "gcd requires a field";
    let mut r0 = monic(ar, a).expect(field);
    let mut r1 = monic(ar, b).expect(field);
    let one = ar.one();
    while !r1.is_empty() {
        let (_, r) = div_rem(ar, &r0, &r1, &one);
        r0 = r1;
        r1 = monic(ar, &r).expect(field);
    }
    r0
}

/// Multiplies `r` (reduced modulo the monic `h`) by `x` and reduces again.
fn mul_x_mod<A: CoeffArith>(ar: &A, r: &mut Vec<A::Elem>, h: &[A::Elem]) {
    let n = h.len() - 1;
    r.insert(0, ar.zero());
    if r.len() > n {
        let c = r.pop().expect("len > n >= 1");
        for (ri, hi) in r.iter_mut().zip(h) {
            *ri = ar.sub(ri, &ar.mul(&c, hi));
        }
    }
    trim(ar, r);
}

/// `x^e mod h` for monic `h` of degree >= 1, by the binary method.
pub(crate) fn x_pow_mod<A: CoeffArith>(ar: &A, e: &BigUint, h: &[A::Elem]) -> Vec<A::Elem> {
    debug_assert!(h.len() >= 2 && h.last() == Some(&ar.one()));
    let one = ar.one();
    let mut r = vec![one.clone()];
    trim(ar, &mut r);
    for i in (0..e.bits()).rev() {
        if r.len() > 1 {
            let sq = mul(ar, &r, &r);
            r = div_rem(ar, &sq, h, &one).1;
        } else if let Some(c) = r.first() {
            let c2 = ar.mul(c, c);
            r = vec![c2];
            trim(ar, &mut r);
        }
        if e.bit(i) {
            mul_x_mod(ar, &mut r, h);
        }
    }
    r
}

pub(crate) fn eval<A: CoeffArith>(ar: &A, a: &[A::Elem], x: &A::Elem) -> A::Elem {
    a.iter().rev().fold(ar.zero(), |acc, c| ar.add(&ar.mul(&acc, x), c))
}

pub(crate) fn derivative<A: CoeffArith>(ar: &A, a: &[A::Elem]) -> Vec<A::Elem> {
    let mut out: Vec<A::Elem> =
        a.iter().enumerate().skip(1).map(|(i, c)| ar.mul(&ar.from_u64(i as u64), c)).collect();
    trim(ar, &mut out);
    out
}
