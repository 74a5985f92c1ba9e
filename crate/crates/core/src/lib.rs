//! Root counting for univariate integer polynomials modulo `p^2`.
//!
//! The count comes from the ascending separable factorization of `f mod p`
//! ([`splitfact`]) and one auxiliary gcd ([`rootcount`]); a brute-force scan
//! and explicit Hensel lifting are provided for small `p`.

mod arith;
pub mod cli;
pub mod error;
mod kernel;
pub mod modring;
pub mod rootcount;
pub mod splitfact;
pub mod zpoly;

pub use error::{Error, Result};
pub use modring::{Modulus, PrimePower, Residue};
pub use rootcount::{count_roots_p2, PrimeContext, RootReport};
pub use zpoly::{Degree, IntPoly, ModPoly};
