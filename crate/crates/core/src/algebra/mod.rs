//! Exact arithmetic: integers, rationals, prime and extension fields,
//! dense univariate and sparse trivariate polynomials, resultants, and
//! factorization over finite fields.
//!
//! Rings are context values implementing [`Ring`]; elements are plain data.
//! `PolyRing<PrimeField>` is `F_p[x]`, `ExtField<PrimeField>` is `F_{p^k}`,
//! `PolyRing<ExtField<PrimeField>>` is `F_{p^k}[x]`, and so on.

mod factor;
mod integer;
mod multi;
mod poly;
mod prime_field;
mod quotient;
mod resultant;
mod ring;

use thiserror::Error;

pub use factor::{
    degree_pattern, distinct_degree, equal_degree, factor, find_irreducible, is_irreducible, is_squarefree, roots,
    squarefree_decomposition, squarefree_part,
};
pub use integer::{
    certify_irreducible_over_q, clear_denominators, coeff_strings, content, coprime_over_q, gcd_z, pseudo_remainder, degree_pattern_mod_p, display_zpoly,
    eval_z, factor_mod_p, is_squarefree_over_q, parse_rational, primitive_part, qq, reduce_mod,
    squarefree_part_over_q, to_rational, zpoly, zz, IrreducibilityCertificate, PrimePattern, QPoly, ZPoly,
};
pub use multi::{det3, hessian, Exponent, MultiPoly};
pub use poly::{PolyRing, UniPoly};
pub use prime_field::{is_prime, primes_after, PrimeField, PRIME_LIMIT};
pub use quotient::{small_order, ExtField, QuotientRing};
pub use resultant::{determinant, resultant, resultant_euclid, subresultant_coeffs, sylvester_matrix};
pub use ring::{bigint_mod, Field, FiniteField, Integers, Rationals, Ring};

/// `F_{p^k}` as a single-step extension of a prime field.
pub type GaloisField = ExtField<PrimeField>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("constant polynomial not allowed here")]
    ConstantPolynomial,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} exceeds the supported bound 2^62")]
    PrimeTooLarge(u64),
    #[error("modulus is not irreducible")]
    NotIrreducible,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("degree too small for this operation")]
    DegreeTooSmall,
    #[error("polynomial is not homogeneous of degree {0}")]
    NotHomogeneous(u32),
}
