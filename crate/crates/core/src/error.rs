use num_bigint::BigUint;
use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(BigUint),
    #[error("{value} is not invertible modulo {modulus}")]
    NotInvertible { value: BigUint, modulus: BigUint },
    #[error("operands live in different rings (mod {left} vs mod {right})")]
    ModulusMismatch { left: BigUint, right: BigUint },
    #[error("{0} is not prime")]
    NotPrime(BigUint),
    #[error("exponent k = {0} is out of scope: only moduli p and p^2 are supported")]
    UnsupportedExponent(u32),
    #[error("operation requires a prime modulus, got {0}")]
    NonPrimeModulus(BigUint),

    #[error("division by the zero polynomial")]
    DivideByZero,
    #[error("leading coefficient {lead} of the divisor is not a unit modulo {modulus}")]
    DivisorNotMonicizable { lead: BigUint, modulus: BigUint },
    #[error("gcd(0, 0) is undefined")]
    BothZero,
    #[error("x^e mod h needs deg h >= 1")]
    ConstantModulus,
    #[error("coefficient {coeff} of x^{index} is not divisible by {p}")]
    NotDivisible { index: usize, coeff: BigUint, p: BigUint },

    #[error("the zero polynomial has no ascending factorization")]
    ZeroPolynomial,
    #[error("internal error: inexact division in the gcd chain")]
    InternalInexactDivision,
    #[error("factorization does not reconstruct the reduction of f modulo p")]
    FactorizationMismatch,

    #[error(
        "every coefficient of f is divisible by p = {0}; write f = p*u and use \
         #V_(p^2)(f) = p * #V_p(u) instead"
    )]
    AllCoefficientsDivisibleByP(BigUint),
    #[error("{r} is not a root of f modulo {p}")]
    NotARoot { r: BigUint, p: BigUint },
    #[error("{r} is a degenerate root modulo {p} (f'(r) = 0); use the degenerate lift")]
    DegenerateRoot { r: BigUint, p: BigUint },
    #[error("{r} is a simple root modulo {p} (f'(r) != 0); use the simple lift")]
    NotDegenerate { r: BigUint, p: BigUint },
    #[error("enumeration needs p <= {cap}, got p = {p}")]
    PrimeTooLargeForEnumeration { p: BigUint, cap: BigUint },
    #[error("brute force needs p^2 <= {cap}, got p = {p}")]
    PrimeTooLargeForOracle { p: BigUint, cap: BigUint },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
