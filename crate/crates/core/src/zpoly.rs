//! Dense univariate polynomials over `Z/mZ` ([`ModPoly`]) and over `Z` ([`IntPoly`]).

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{CoeffArith, Coeffs};
use crate::error::{Error, Result};
use crate::kernel;
use crate::modring::{Arith, Modulus, Residue};

macro_rules! with_arith {
    ($modulus:expr, $ar:ident => $body:expr) => {
        match $modulus.arith() {
            Arith::Word($ar) => $body,
            Arith::Big($ar) => $body,
        }
    };
}

/// Polynomial degree; the zero polynomial has degree `MinusInfinity`,
/// which orders below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    MinusInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::MinusInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::MinusInfinity => f.write_str("-inf"),
            Degree::Finite(d) => d.fmt(f),
        }
    }
}

/// A polynomial over `Z/mZ`, coefficients low-to-high, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq)]
pub struct ModPoly {
    modulus: Modulus,
    coeffs: Coeffs,
}

impl ModPoly {
    fn from_coeffs(modulus: &Modulus, coeffs: Coeffs) -> Self {
        ModPoly { modulus: modulus.clone(), coeffs }
    }

    pub fn zero(modulus: &Modulus) -> Self {
        with_arith!(modulus, ar => Self::from_coeffs(modulus, ar.wrap(Vec::new())))
    }

    pub fn one(modulus: &Modulus) -> Self {
        Self::from_u64s(&[1], modulus)
    }

    pub fn x(modulus: &Modulus) -> Self {
        Self::from_u64s(&[0, 1], modulus)
    }

    /// Coefficients low-to-high, reduced modulo `modulus`.
    pub fn from_u64s(coeffs: &[u64], modulus: &Modulus) -> Self {
        with_arith!(modulus, ar => {
            let mut v: Vec<_> = coeffs.iter().map(|&c| ar.from_u64(c)).collect();
            kernel::trim(ar, &mut v);
            Self::from_coeffs(modulus, ar.wrap(v))
        })
    }

    pub fn from_biguints(coeffs: &[BigUint], modulus: &Modulus) -> Self {
        with_arith!(modulus, ar => {
            let mut v: Vec<_> = coeffs.iter().map(|c| ar.from_big(c)).collect();
            kernel::trim(ar, &mut v);
            Self::from_coeffs(modulus, ar.wrap(v))
        })
    }

    pub fn from_ints(coeffs: &[BigInt], modulus: &Modulus) -> Self {
        let reduced: Vec<BigUint> = coeffs.iter().map(|c| modulus.reduce_int(c)).collect();
        Self::from_biguints(&reduced, modulus)
    }

    pub fn from_residues(coeffs: &[Residue], modulus: &Modulus) -> Result<Self> {
        for c in coeffs {
            modulus.ensure_same(c.modulus())?;
        }
        let values: Vec<BigUint> = coeffs.iter().map(|c| c.value().clone()).collect();
        Ok(Self::from_biguints(&values, modulus))
    }

    /// `c * x^k`.
    pub fn monomial(c: &Residue, k: usize) -> Self {
        let mut v = vec![BigUint::zero(); k];
        v.push(c.value().clone());
        Self::from_biguints(&v, c.modulus())
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::MinusInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    /// Degree, with the zero polynomial mapped to 0. Only use where the
    /// polynomial is known to be nonzero or where 0 is the intended reading.
    pub(crate) fn deg_or_zero(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 0
    }

    pub fn is_one(&self) -> bool {
        with_arith!(self.modulus, ar => ar.view(&self.coeffs) == [ar.one()])
    }

    pub fn is_monic(&self) -> bool {
        with_arith!(self.modulus, ar => ar.view(&self.coeffs).last() == Some(&ar.one()))
    }

    pub fn coeff(&self, i: usize) -> Residue {
        let v = with_arith!(self.modulus, ar => ar.view(&self.coeffs).get(i).map(|c| ar.to_big(c)));
        Residue::from_canonical(v.unwrap_or_default(), &self.modulus)
    }

    pub fn leading(&self) -> Option<Residue> {
        self.degree().finite().map(|d| self.coeff(d))
    }

    /// Canonical coefficient representatives, low-to-high.
    pub fn coeffs(&self) -> Vec<BigUint> {
        with_arith!(self.modulus, ar => ar.view(&self.coeffs).iter().map(|c| ar.to_big(c)).collect())
    }

    pub fn add(&self, other: &ModPoly) -> Result<ModPoly> {
        self.modulus.ensure_same(&other.modulus)?;
        Ok(with_arith!(self.modulus, ar => Self::from_coeffs(
            &self.modulus,
            ar.wrap(kernel::add(ar, ar.view(&self.coeffs), ar.view(&other.coeffs))),
        )))
    }

    pub fn sub(&self, other: &ModPoly) -> Result<ModPoly> {
        self.modulus.ensure_same(&other.modulus)?;
        Ok(with_arith!(self.modulus, ar => Self::from_coeffs(
            &self.modulus,
            ar.wrap(kernel::sub(ar, ar.view(&self.coeffs), ar.view(&other.coeffs))),
        )))
    }

    pub fn mul(&self, other: &ModPoly) -> Result<ModPoly> {
        self.modulus.ensure_same(&other.modulus)?;
        Ok(with_arith!(self.modulus, ar => Self::from_coeffs(
            &self.modulus,
            ar.wrap(kernel::mul(ar, ar.view(&self.coeffs), ar.view(&other.coeffs))),
        )))
    }

    pub fn scale(&self, c: &Residue) -> Result<ModPoly> {
        self.modulus.ensure_same(c.modulus())?;
        Ok(with_arith!(self.modulus, ar => Self::from_coeffs(
            &self.modulus,
            ar.wrap(kernel::scale(ar, ar.view(&self.coeffs), &ar.from_big(c.value()))),
        )))
    }

    pub fn pow(&self, e: u32) -> ModPoly {
        let mut acc = ModPoly::one(&self.modulus);
        for _ in 0..e {
            acc = acc.mul(self).expect("same modulus");
        }
        acc
    }

    fn lead_inverse(&self) -> Result<Residue> {
        let lead = self.leading().ok_or(Error::DivideByZero)?;
        lead.inv().map_err(|_| Error::DivisorNotMonicizable {
            lead: lead.value().clone(),
            modulus: self.modulus.value().clone(),
        })
    }

    /// `(q, r)` with `self = q * divisor + r` and `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &ModPoly) -> Result<(ModPoly, ModPoly)> {
        self.modulus.ensure_same(&divisor.modulus)?;
        let inv = divisor.lead_inverse()?;
        Ok(with_arith!(self.modulus, ar => {
            let (q, r) = kernel::div_rem(
                ar,
                ar.view(&self.coeffs),
                ar.view(&divisor.coeffs),
                &ar.from_big(inv.value()),
            );
            (Self::from_coeffs(&self.modulus, ar.wrap(q)), Self::from_coeffs(&self.modulus, ar.wrap(r)))
        }))
    }

    /// Quotient of a division that is expected to be exact; `None` if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &ModPoly) -> Result<Option<ModPoly>> {
        let (q, r) = self.div_rem(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    pub fn monic(&self) -> Result<ModPoly> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let inv = self.lead_inverse()?;
        self.scale(&inv)
    }

    /// Monic gcd over a prime modulus, with `gcd(u, 0) = monic(u)`.
    pub fn gcd(&self, other: &ModPoly) -> Result<ModPoly> {
        self.modulus.ensure_same(&other.modulus)?;
        if !self.modulus.is_prime() {
            return Err(Error::NonPrimeModulus(self.modulus.value().clone()));
        }
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        Ok(with_arith!(self.modulus, ar => Self::from_coeffs(
            &self.modulus,
            ar.wrap(kernel::gcd_monic(ar, ar.view(&self.coeffs), ar.view(&other.coeffs))),
        )))
    }

    /// `x^e mod self`, by repeated squaring. `self` is monicized first.
    pub fn x_pow_mod(&self, e: &BigUint) -> Result<ModPoly> {
        if self.degree() < Degree::Finite(1) {
            return Err(Error::ConstantModulus);
        }
        let h = self.monic()?;
        Ok(with_arith!(self.modulus, ar => Self::from_coeffs(
            &self.modulus,
            ar.wrap(kernel::x_pow_mod(ar, e, ar.view(&h.coeffs))),
        )))
    }

    pub fn derivative(&self) -> ModPoly {
        with_arith!(self.modulus, ar => Self::from_coeffs(
            &self.modulus,
            ar.wrap(kernel::derivative(ar, ar.view(&self.coeffs))),
        ))
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Residue) -> Result<Residue> {
        self.modulus.ensure_same(x.modulus())?;
        let v = with_arith!(self.modulus, ar => {
            ar.to_big(&kernel::eval(ar, ar.view(&self.coeffs), &ar.from_big(x.value())))
        });
        Ok(Residue::from_canonical(v, &self.modulus))
    }

    /// Evaluator over plain integers, used by the exhaustive scans.
    pub(crate) fn evaluator(&self) -> Evaluator<'_> {
        match (self.modulus.arith(), &self.coeffs) {
            (Arith::Word(ar), Coeffs::Word(c)) => Evaluator::Word(*ar, c),
            _ => Evaluator::Big(self),
        }
    }
}

pub(crate) enum Evaluator<'a> {
    Word(crate::arith::WordArith, &'a [u64]),
    Big(&'a ModPoly),
}

impl Evaluator<'_> {
    /// Whether the polynomial vanishes at `x` (given as an integer below 2^64).
    pub(crate) fn is_root_u64(&self, x: u64) -> bool {
        match self {
            Evaluator::Word(ar, c) => kernel::eval(ar, c, &(x % ar.modulus())) == 0,
            Evaluator::Big(p) => {
                p.eval(&Residue::new(x, p.modulus())).expect("same modulus").is_zero()
            }
        }
    }
}

impl fmt::Debug for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} (mod {})", self.coeffs(), self.modulus)
    }
}

/// High-to-low human form, e.g. `x^2 + x + 3`.
impl fmt::Display for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs = self.coeffs();
        if coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (i, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{c}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// `x^p mod h` over `Z/pZ`.
pub fn frobenius_powmod(h: &ModPoly, p: &BigUint) -> Result<ModPoly> {
    if h.modulus().value() != p {
        return Err(Error::ModulusMismatch { left: h.modulus().value().clone(), right: p.clone() });
    }
    h.x_pow_mod(p)
}

/// Coefficientwise reduction `Z[x] -> (Z/mZ)[x]`.
pub fn reduce_coeffs(a: &IntPoly, m: &Modulus) -> ModPoly {
    ModPoly::from_ints(&a.coeffs, m)
}

/// Reinterprets canonical representatives mod `p` as residues mod `p^2`.
pub fn lift_embed(a: &ModPoly, target: &Modulus) -> Result<ModPoly> {
    let p = a.modulus().value();
    if target.value() != &(p * p) {
        return Err(Error::ModulusMismatch { left: p.clone(), right: target.value().clone() });
    }
    Ok(ModPoly::from_biguints(&a.coeffs(), target))
}

/// `pi_p((1/p) * a)` for `a` over `Z/p^2Z` whose representatives are all multiples of `p`.
pub fn exact_div_by_p(a: &ModPoly, p: &Modulus) -> Result<ModPoly> {
    let pv = p.value();
    if a.modulus().value() != &(pv * pv) {
        return Err(Error::ModulusMismatch { left: a.modulus().value().clone(), right: pv.clone() });
    }
    let mut out = Vec::with_capacity(a.coeffs.len());
    for (index, c) in a.coeffs().into_iter().enumerate() {
        if !(&c % pv).is_zero() {
            return Err(Error::NotDivisible { index, coeff: c, p: pv.clone() });
        }
        out.push(c / pv);
    }
    Ok(ModPoly::from_biguints(&out, p))
}

/// A polynomial over `Z`, coefficients low-to-high, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::MinusInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect(),
        )
    }

    pub fn reduce(&self, m: &Modulus) -> ModPoly {
        reduce_coeffs(self, m)
    }

    /// `sum ln(2 + |c_i|)` over the stored coefficients.
    pub fn size_metric(&self) -> f64 {
        self.coeffs.iter().map(|c| ln_big(&(c.abs() + 2u32))).sum()
    }
}

fn ln_big(v: &BigInt) -> f64 {
    let bits = v.bits();
    if bits <= 1000 {
        return v.to_f64().expect("finite below 2^1000").ln();
    }
    let shift = bits - 64;
    (v >> shift).to_f64().expect("64-bit value").ln() + shift as f64 * std::f64::consts::LN_2
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.sign() == Sign::Minus;
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let mag = c.magnitude();
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl PartialOrd for IntPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for IntPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs.len().cmp(&other.coeffs.len()).then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(v: u64) -> Modulus {
        Modulus::new(v).unwrap()
    }

    fn pm(v: u64) -> Modulus {
        Modulus::prime(v).unwrap()
    }

    fn poly(c: &[u64], modulus: &Modulus) -> ModPoly {
        ModPoly::from_u64s(c, modulus)
    }

    fn big(c: &[u64]) -> Vec<BigUint> {
        c.iter().map(|&v| BigUint::from(v)).collect()
    }

    #[test]
    fn add_examples() {
        let f5 = m(5);
        assert_eq!(poly(&[1, 1], &f5).add(&poly(&[4, 1], &f5)).unwrap(), poly(&[0, 2], &f5));
        let a = poly(&[3, 0, 2], &f5);
        assert_eq!(a.add(&ModPoly::zero(&f5)).unwrap(), a);
        let s = poly(&[0, 0, 2], &f5).add(&poly(&[0, 0, 3], &f5)).unwrap();
        assert!(s.is_zero());
        assert_eq!(s.degree(), Degree::MinusInfinity);
    }

    #[test]
    fn mul_examples() {
        let f5 = m(5);
        // (x - 3)(x - 1) = x^2 + x + 3 mod 5
        let t = poly(&[2, 1], &f5).mul(&poly(&[4, 1], &f5)).unwrap();
        assert_eq!(t.coeffs(), big(&[3, 1, 1]));
        let a = poly(&[1, 2, 3], &f5);
        assert_eq!(a.mul(&ModPoly::one(&f5)).unwrap(), a);
        let m25 = m(25);
        let sq = poly(&[1, 5], &m25).mul(&poly(&[1, 5], &m25)).unwrap();
        assert_eq!(sq.coeffs(), big(&[1, 10]));
        assert!(poly(&[1], &f5).mul(&poly(&[1], &m(7))).is_err());
    }

    #[test]
    fn div_rem_examples() {
        let f5 = m(5);
        let (q, r) = poly(&[2, 3, 1], &f5).div_rem(&poly(&[1, 1], &f5)).unwrap();
        assert_eq!(q.coeffs(), big(&[2, 1]));
        assert!(r.is_zero());
        let (q, r) = poly(&[0, 0, 1], &f5).div_rem(&poly(&[1, 2], &f5)).unwrap();
        assert_eq!(q.coeffs(), big(&[1, 3]));
        assert_eq!(r.coeffs(), big(&[4]));
        let a = poly(&[3, 1, 4, 1], &f5);
        let (q, r) = a.div_rem(&a).unwrap();
        assert!(q.is_one() && r.is_zero());
    }

    #[test]
    fn div_rem_errors() {
        let m25 = m(25);
        assert_eq!(
            poly(&[1, 1], &m25).div_rem(&ModPoly::zero(&m25)).unwrap_err(),
            Error::DivideByZero
        );
        assert!(matches!(
            poly(&[1, 0, 1], &m25).div_rem(&poly(&[1, 5], &m25)),
            Err(Error::DivisorNotMonicizable { .. })
        ));
    }

    #[test]
    fn gcd_examples() {
        let f5 = pm(5);
        let g = poly(&[4, 0, 1], &f5).gcd(&poly(&[4, 1], &f5)).unwrap();
        assert_eq!(g.coeffs(), big(&[4, 1]));
        let f2 = pm(2);
        let g = poly(&[1, 0, 1], &f2).gcd(&poly(&[0, 1, 1], &f2)).unwrap();
        assert_eq!(g.coeffs(), big(&[1, 1]));
        let g = poly(&[0, 1], &f5).gcd(&ModPoly::zero(&f5)).unwrap();
        assert_eq!(g.coeffs(), big(&[0, 1]));
        let g = poly(&[0, 3], &f5).gcd(&ModPoly::zero(&f5)).unwrap();
        assert_eq!(g.coeffs(), big(&[0, 1]));
    }

    #[test]
    fn gcd_errors() {
        let f5 = pm(5);
        assert_eq!(ModPoly::zero(&f5).gcd(&ModPoly::zero(&f5)).unwrap_err(), Error::BothZero);
        let m25 = m(25);
        assert!(matches!(
            poly(&[1, 1], &m25).gcd(&poly(&[1], &m25)),
            Err(Error::NonPrimeModulus(_))
        ));
    }

    #[test]
    fn frobenius_examples() {
        let f5 = pm(5);
        let p5 = BigUint::from(5u32);
        // h = x^2 - x
        let r = frobenius_powmod(&poly(&[0, 4, 1], &f5), &p5).unwrap();
        assert_eq!(r.coeffs(), big(&[0, 1]));
        let f3 = pm(3);
        // h = x^3 - x^2
        let r = frobenius_powmod(&poly(&[0, 0, 2, 1], &f3), &BigUint::from(3u32)).unwrap();
        assert_eq!(r.coeffs(), big(&[0, 0, 1]));
        // h = x - 2: x^5 -> 2^5 = 32 = 2
        let r = frobenius_powmod(&poly(&[3, 1], &f5), &p5).unwrap();
        assert_eq!(r.coeffs(), big(&[2]));
        assert_eq!(
            frobenius_powmod(&poly(&[3], &f5), &p5).unwrap_err(),
            Error::ConstantModulus
        );
        // non-monic h is monicized first
        let r = frobenius_powmod(&poly(&[0, 3, 2], &f5), &p5).unwrap();
        assert_eq!(r, frobenius_powmod(&poly(&[0, 4, 1], &f5), &p5).unwrap());
    }

    #[test]
    fn derivative_examples() {
        let f5 = m(5);
        assert_eq!(poly(&[3, 1, 1], &f5).derivative().coeffs(), big(&[1, 2]));
        assert!(poly(&[0, 0, 0, 0, 0, 1], &f5).derivative().is_zero());
        assert!(poly(&[4], &f5).derivative().is_zero());
    }

    #[test]
    fn eval_examples() {
        let f5 = m(5);
        let three = Residue::new(3u32, &f5);
        assert!(poly(&[1, 0, 1], &f5).eval(&three).unwrap().is_zero());
        assert!(ModPoly::zero(&f5).eval(&three).unwrap().is_zero());
        assert!(poly(&[1], &f5).eval(&Residue::new(1u32, &m(7))).is_err());
    }

    #[test]
    fn reduce_examples() {
        let f = IntPoly::from_i64s(&[10, 3, 5]);
        let r = reduce_coeffs(&f, &m(5));
        assert_eq!(r.coeffs(), big(&[0, 3]));
        assert_eq!(r.degree(), Degree::Finite(1));
        assert!(reduce_coeffs(&IntPoly::default(), &m(5)).is_zero());
        let neg = reduce_coeffs(&IntPoly::from_i64s(&[-5, 0, 1]), &m(25));
        assert_eq!(neg.coeffs(), big(&[20, 0, 1]));
    }

    #[test]
    fn lift_examples() {
        let f5 = m(5);
        let m25 = m(25);
        let l = lift_embed(&poly(&[4, 1], &f5), &m25).unwrap();
        assert_eq!(l.coeffs(), big(&[4, 1]));
        assert_eq!(l.modulus(), &m25);
        assert!(lift_embed(&ModPoly::zero(&f5), &m25).unwrap().is_zero());
        assert!(lift_embed(&poly(&[1], &f5), &m(35)).is_err());
    }

    #[test]
    fn exact_div_examples() {
        let f5 = m(5);
        let m25 = m(25);
        assert_eq!(exact_div_by_p(&poly(&[5, 10], &m25), &f5).unwrap().coeffs(), big(&[1, 2]));
        assert!(exact_div_by_p(&ModPoly::zero(&m25), &f5).unwrap().is_zero());
        assert_eq!(exact_div_by_p(&poly(&[20], &m25), &f5).unwrap().coeffs(), big(&[4]));
        assert!(matches!(
            exact_div_by_p(&poly(&[5, 3], &m25), &f5),
            Err(Error::NotDivisible { index: 1, .. })
        ));
    }

    #[test]
    fn size_metric_examples() {
        assert_eq!(IntPoly::default().size_metric(), 0.0);
        let x = IntPoly::from_i64s(&[0, 1]);
        assert!((x.size_metric() - (2f64.ln() + 3f64.ln())).abs() < 1e-12);
        let neg = IntPoly::from_i64s(&[-5]);
        assert!((neg.size_metric() - 7f64.ln()).abs() < 1e-12);
        // 2^2000 + 2 ~ 2^2000
        let huge = IntPoly::new(vec![BigInt::one() << 2000u32]);
        assert!((huge.size_metric() - 2000.0 * std::f64::consts::LN_2).abs() < 1e-9);
    }

    #[test]
    fn display_forms() {
        assert_eq!(poly(&[3, 1, 1], &m(5)).to_string(), "x^2 + x + 3");
        assert_eq!(IntPoly::from_i64s(&[-5, 0, 1]).to_string(), "x^2 - 5");
        assert_eq!(IntPoly::from_i64s(&[0, -2]).to_string(), "-2x");
    }

    /// x^e mod h by e multiply-by-x steps.
    fn naive_x_pow_mod(h: &ModPoly, e: u64) -> ModPoly {
        let hm = h.monic().unwrap();
        let x = ModPoly::x(h.modulus());
        let mut r = ModPoly::one(h.modulus()).div_rem(&hm).unwrap().1;
        for _ in 0..e {
            r = r.mul(&x).unwrap().div_rem(&hm).unwrap().1;
        }
        r
    }

    const SMALL_PRIMES: [u64; 25] =
        [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97];

    fn poly_strategy(max_len: usize) -> impl Strategy<Value = Vec<u64>> {
        prop::collection::vec(any::<u64>(), 0..=max_len)
    }

    proptest! {
        #[test]
        fn distributive_law(m in 2u64..200, a in poly_strategy(8), b in poly_strategy(8), c in poly_strategy(8)) {
            let md = Modulus::new(m).unwrap();
            let (a, b, c) = (poly(&a, &md), poly(&b, &md), poly(&c, &md));
            let lhs = a.add(&b).unwrap().mul(&c).unwrap();
            let rhs = a.mul(&c).unwrap().add(&b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn div_rem_reconstructs(pi in 0usize..25, a in poly_strategy(14), b in poly_strategy(7)) {
            let md = pm(SMALL_PRIMES[pi]);
            let (a, b) = (poly(&a, &md), poly(&b, &md));
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b).unwrap();
            prop_assert!(r.degree() < b.degree());
            prop_assert_eq!(q.mul(&b).unwrap().add(&r).unwrap(), a);
        }

        #[test]
        fn div_rem_big_modulus(a in poly_strategy(10), b in poly_strategy(5)) {
            // (2^61 - 1)^2 needs the big-integer backend.
            let p = BigUint::from((1u64 << 61) - 1);
            let md = Modulus::new(&p * &p).unwrap();
            let a = ModPoly::from_biguints(&a.iter().map(|&c| BigUint::from(c) * &p + 1u32).collect::<Vec<_>>(), &md);
            let b = ModPoly::from_biguints(&b.iter().map(|&c| BigUint::from(c) * 3u32 + 1u32).collect::<Vec<_>>(), &md);
            prop_assume!(b.leading().is_some_and(|l| l.inv().is_ok()));
            let (q, r) = a.div_rem(&b).unwrap();
            prop_assert!(r.degree() < b.degree());
            prop_assert_eq!(q.mul(&b).unwrap().add(&r).unwrap(), a);
        }

        #[test]
        fn gcd_divides_both_and_is_symmetric(pi in 0usize..25, a in poly_strategy(9), b in poly_strategy(9), c in poly_strategy(4)) {
            let md = pm(SMALL_PRIMES[pi]);
            let c = poly(&c, &md);
            let (a, b) = (poly(&a, &md).mul(&c).unwrap(), poly(&b, &md).mul(&c).unwrap());
            prop_assume!(!(a.is_zero() && b.is_zero()));
            let g = a.gcd(&b).unwrap();
            prop_assert!(g.is_monic());
            prop_assert!(a.div_rem(&g).unwrap().1.is_zero());
            prop_assert!(b.div_rem(&g).unwrap().1.is_zero());
            prop_assert_eq!(&g, &b.gcd(&a).unwrap());
            if !c.is_zero() {
                prop_assert!(g.div_rem(&c).unwrap().1.is_zero());
            }
        }

        #[test]
        fn frobenius_matches_naive(pi in 0usize..25, h in poly_strategy(7)) {
            let p = SMALL_PRIMES[pi];
            let md = pm(p);
            let h = poly(&h, &md);
            prop_assume!(h.degree() >= Degree::Finite(1) && h.degree() <= Degree::Finite(6));
            prop_assert_eq!(frobenius_powmod(&h, &BigUint::from(p)).unwrap(), naive_x_pow_mod(&h, p));
        }

        #[test]
        fn fermat_split_counts_distinct_roots(pi in 0usize..6, h in poly_strategy(9)) {
            let p = SMALL_PRIMES[pi];
            let md = pm(p);
            let h = poly(&h, &md);
            prop_assume!(h.degree() >= Degree::Finite(1));
            let xp = frobenius_powmod(&h, &BigUint::from(p)).unwrap();
            let split = h.gcd(&xp.sub(&ModPoly::x(&md)).unwrap()).unwrap();
            let roots = (0..p).filter(|&r| h.eval(&Residue::new(r, &md)).unwrap().is_zero()).count();
            prop_assert_eq!(split.degree(), Degree::Finite(roots));
            for r in 0..p {
                let at = |q: &ModPoly| q.eval(&Residue::new(r, &md)).unwrap().is_zero();
                prop_assert_eq!(at(&h), at(&split));
            }
        }

        #[test]
        fn lift_then_reduce_is_identity(pi in 0usize..25, a in poly_strategy(10)) {
            let p = SMALL_PRIMES[pi];
            let a = poly(&a, &m(p));
            let lifted = lift_embed(&a, &m(p * p)).unwrap();
            prop_assert_eq!(ModPoly::from_biguints(&lifted.coeffs(), &m(p)), a);
        }

        #[test]
        fn exact_div_inverts_scaling_by_p(pi in 0usize..25, a in poly_strategy(10)) {
            let p = SMALL_PRIMES[pi];
            let a = poly(&a, &m(p));
            let scaled = lift_embed(&a, &m(p * p)).unwrap().scale(&Residue::new(p, &m(p * p))).unwrap();
            prop_assert_eq!(exact_div_by_p(&scaled, &m(p)).unwrap(), a);
        }
    }
}
