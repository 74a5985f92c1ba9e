//! Split part and ascending separable factorization over `Z/pZ`.
//!
//! For `h1` over a prime field, [`ascending_chain`] produces
//! `h1 = f_1 * f_2^2 * ... * f_l^l * g` where `f_i` is the monic product of the
//! distinct linear factors of multiplicity exactly `i` and `g` has no roots.
//! Only gcds and exact divisions are used; no roots are ever located.

use crate::error::{Error, Result};
use crate::zpoly::{frobenius_powmod, Degree, ModPoly};

/// `s1 = gcd(h1, x^p - x)`, the monic product of `x - r` over the distinct roots `r` of `h1`.
pub fn split_linear_part(h1: &ModPoly) -> Result<ModPoly> {
    if h1.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let modulus = h1.modulus();
    if h1.degree() == Degree::Finite(0) {
        return Ok(ModPoly::one(modulus));
    }
    let xp = frobenius_powmod(h1, modulus.value())?;
    h1.gcd(&xp.sub(&ModPoly::x(modulus))?)
}

/// The intermediate polynomials of the gcd chain entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainWitnesses {
    /// `gcd(h1, x^p - x) = f_1 * ... * f_l`.
    pub s1: ModPoly,
    /// `h1 / s1 = g * prod f_i^(i-1)`.
    pub s2: ModPoly,
    /// `gcd(s1, s2) = f_2 * ... * f_l`.
    pub s3: ModPoly,
}

/// `h1 = f_1 f_2^2 ... f_l^l g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AscendingFactorization {
    /// Maximal root multiplicity; 0 when `h1` has no roots.
    pub ell: usize,
    /// `factors[i - 1] = f_i`, monic; entries may be the constant 1.
    pub factors: Vec<ModPoly>,
    /// Rootless cofactor, carrying the leading coefficient of `h1`.
    pub g: ModPoly,
    pub chain: ChainWitnesses,
}

impl AscendingFactorization {
    /// `f_i` for `i >= 1`; the constant 1 past `ell`.
    pub fn factor(&self, i: usize) -> ModPoly {
        assert!(i >= 1, "multiplicities start at 1");
        self.factors.get(i - 1).cloned().unwrap_or_else(|| ModPoly::one(self.g.modulus()))
    }

    /// `f_2 * ... * f_l`: the roots of multiplicity at least 2.
    pub fn degenerate_part(&self) -> ModPoly {
        self.factors
            .iter()
            .skip(1)
            .fold(ModPoly::one(self.g.modulus()), |acc, f| acc.mul(f).expect("same modulus"))
    }

    /// `(prod f_i^i) * g`.
    pub fn reconstruct(&self) -> ModPoly {
        let mut acc = self.g.clone();
        for (i, f) in self.factors.iter().enumerate() {
            acc = acc.mul(&f.pow(i as u32 + 1)).expect("same modulus");
        }
        acc
    }
}

fn exact(a: &ModPoly, b: &ModPoly) -> Result<ModPoly> {
    a.div_exact(b)?.ok_or(Error::InternalInexactDivision)
}

/// Iterated gcd chain: `a_1 = s1`, `c_1 = h1 / a_1`, `a_(i+1) = gcd(c_i, a_i)`,
/// `c_(i+1) = c_i / a_(i+1)`, until `a_(i+1) = 1`; then `f_i = a_i / a_(i+1)`.
///
/// `a_i` is the product of the roots of multiplicity at least `i`, so the chain
/// takes at most `deg h1` gcds.
pub fn ascending_chain(h1: &ModPoly) -> Result<AscendingFactorization> {
    let s1 = split_linear_part(h1)?;
    let one = ModPoly::one(h1.modulus());
    let s2 = exact(h1, &s1)?;
    if s1.is_one() {
        return Ok(AscendingFactorization {
            ell: 0,
            factors: Vec::new(),
            g: h1.clone(),
            chain: ChainWitnesses { s1, s2, s3: one },
        });
    }

    let mut a = vec![s1.clone()];
    let mut c = s2.clone();
    loop {
        let next = c.gcd(a.last().expect("nonempty"))?;
        if next.is_one() {
            break;
        }
        c = exact(&c, &next)?;
        a.push(next);
    }
    a.push(one.clone());

    let factors = a.windows(2).map(|w| exact(&w[0], &w[1])).collect::<Result<Vec<_>>>()?;
    let s3 = a[1].clone();
    Ok(AscendingFactorization {
        ell: factors.len(),
        factors,
        g: c,
        chain: ChainWitnesses { s1, s2, s3 },
    })
}

/// Whether `fact` is a valid ascending separable factorization of `h1`:
/// reconstruction, monic separable pairwise coprime split `f_i`, rootless `g`,
/// maximal `ell`, and the degree identity.
pub fn validate_factorization(fact: &AscendingFactorization, h1: &ModPoly) -> bool {
    validate(fact, h1).unwrap_or(false)
}

fn validate(fact: &AscendingFactorization, h1: &ModPoly) -> Result<bool> {
    let modulus = h1.modulus();
    if !modulus.is_prime() || h1.is_zero() || fact.g.is_zero() {
        return Ok(false);
    }
    if fact.factors.len() != fact.ell {
        return Ok(false);
    }
    if fact.ell >= 1 && fact.factors[fact.ell - 1].is_one() {
        return Ok(false);
    }
    let p = modulus.value();
    let x = ModPoly::x(modulus);
    for f in &fact.factors {
        if f.modulus() != modulus || !f.is_monic() {
            return Ok(false);
        }
        if !f.gcd(&f.derivative())?.is_one() {
            return Ok(false);
        }
        if f.degree() >= Degree::Finite(1) {
            // every root of f lies in Z/pZ: x^p = x mod f
            let xp = frobenius_powmod(f, p)?;
            let reduced_x = x.div_rem(f)?.1;
            if xp != reduced_x {
                return Ok(false);
            }
        }
    }
    for (i, fi) in fact.factors.iter().enumerate() {
        for fj in &fact.factors[i + 1..] {
            if !fi.gcd(fj)?.is_one() {
                return Ok(false);
            }
        }
    }
    if fact.g.modulus() != modulus {
        return Ok(false);
    }
    if fact.g.degree() >= Degree::Finite(1) {
        let xp = frobenius_powmod(&fact.g, p)?;
        if !fact.g.gcd(&xp.sub(&x)?)?.is_one() {
            return Ok(false);
        }
    }
    let degree_sum: usize = fact
        .factors
        .iter()
        .enumerate()
        .map(|(i, f)| (i + 1) * f.deg_or_zero())
        .sum::<usize>()
        + fact.g.deg_or_zero();
    if Degree::Finite(degree_sum) != h1.degree() {
        return Ok(false);
    }
    Ok(fact.reconstruct() == *h1)
}

impl AscendingFactorization {
    /// Sum of `deg f_i` over `i >= 2`.
    pub fn degenerate_degree(&self) -> usize {
        self.factors.iter().skip(1).map(ModPoly::deg_or_zero).sum()
    }

    /// `deg f_1`, 0 when `ell = 0`.
    pub fn simple_degree(&self) -> usize {
        self.factors.first().map_or(0, ModPoly::deg_or_zero)
    }
}
