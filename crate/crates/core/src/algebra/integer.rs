//! Integer and rational polynomials: content, reduction mod `p`, and the
//! mod-`p` irreducibility certificate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::factor::{degree_pattern, factor};
use super::poly::{PolyRing, UniPoly};
use super::prime_field::PrimeField;
use super::ring::{bigint_mod, Integers, Rationals, Ring};
use super::AlgebraError;

pub type ZPoly = UniPoly<BigInt>;
pub type QPoly = UniPoly<BigRational>;

pub fn zz() -> PolyRing<Integers> {
    PolyRing::new(Integers)
}

pub fn qq() -> PolyRing<Rationals> {
    PolyRing::new(Rationals)
}

/// Gcd of the coefficients (non-negative; 0 for the zero polynomial).
pub fn content(f: &ZPoly) -> BigInt {
    f.coeffs().iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// `f / content(f)` with a positive leading coefficient.
pub fn primitive_part(f: &ZPoly) -> ZPoly {
    let c = content(f);
    if c.is_zero() {
        return ZPoly::zero();
    }
    let c = if f.lc().is_some_and(|l| l.is_negative()) { -c } else { c };
    zz().from_coeffs(f.coeffs().iter().map(|a| a / &c).collect())
}

pub fn to_rational(f: &ZPoly) -> QPoly {
    qq().from_coeffs(f.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect())
}

/// The primitive integer polynomial with positive leading coefficient
/// proportional to `f`.
pub fn clear_denominators(f: &QPoly) -> ZPoly {
    let l = f
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let z = zz().from_coeffs(f.coeffs().iter().map(|c| (c * &l).to_integer()).collect());
    primitive_part(&z)
}

pub fn reduce_mod(f: &ZPoly, field: &PrimeField) -> UniPoly<u64> {
    PolyRing::new(*field).from_coeffs(f.coeffs().iter().map(|c| bigint_mod(c, field.p())).collect())
}

/// `lc(b)^{deg a − deg b + 1} · a mod b`.
pub fn pseudo_remainder(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let z = zz();
    let db = b.degree().expect("nonzero divisor");
    let lb = b.lc().expect("nonzero divisor").clone();
    let mut r = a.clone();
    while let Some(dr) = r.degree().filter(|&dr| dr >= db) {
        let lead = z.monomial(r.lc().expect("nonzero").clone(), dr - db);
        r = z.sub(&z.scale(&r, &lb), &z.mul(&lead, b));
    }
    r
}

/// Primitive gcd over `ℤ` (positive leading coefficient) by the primitive
/// remainder sequence; `gcd(0, 0) = 0`.
pub fn gcd_z(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let (mut a, mut b) = (primitive_part(a), primitive_part(b));
    if a.deg0() < b.deg0() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = primitive_part(&pseudo_remainder(&a, &b));
        a = b;
        b = r;
    }
    a
}

/// Large primes for modular shortcuts.
fn shortcut_primes() -> impl Iterator<Item = u64> {
    super::prime_field::primes_after((1 << 61) - 1000)
}

/// Whether `a` and `b` have no common factor over `ℚ`. A constant gcd modulo
/// a prime not dividing both leading coefficients settles it; otherwise the
/// integer gcd is computed.
pub fn coprime_over_q(a: &ZPoly, b: &ZPoly) -> bool {
    let (Some(la), Some(lb)) = (a.lc(), b.lc()) else {
        return a.deg0() == 0 && !a.is_zero() || b.deg0() == 0 && !b.is_zero();
    };
    for p in shortcut_primes().take(3) {
        if bigint_mod(la, p) == 0 || bigint_mod(lb, p) == 0 {
            continue;
        }
        let field = PrimeField::new(p).expect("prime");
        let r = PolyRing::new(field);
        if r.gcd(&reduce_mod(a, &field), &reduce_mod(b, &field)).degree() == Some(0) {
            return true;
        }
    }
    gcd_z(a, b).degree() == Some(0)
}

pub fn is_squarefree_over_q(f: &ZPoly) -> bool {
    !f.is_zero() && coprime_over_q(f, &zz().derivative(f))
}

/// Primitive integer squarefree part, `f / gcd(f, f')`.
pub fn squarefree_part_over_q(f: &ZPoly) -> Result<ZPoly, AlgebraError> {
    if f.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    if is_squarefree_over_q(f) {
        return Ok(primitive_part(f));
    }
    let g = gcd_z(f, &zz().derivative(f));
    let q = zz().exact_div(&primitive_part(f), &g).expect("gcd divides f over Z by Gauss's lemma");
    Ok(primitive_part(&q))
}

/// Factorization of `f mod p` into monic irreducibles with multiplicities.
pub fn factor_mod_p(f: &ZPoly, field: &PrimeField, seed: u64) -> Result<Vec<(UniPoly<u64>, usize)>, AlgebraError> {
    let g = reduce_mod(f, field);
    if g.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    factor(&PolyRing::new(*field), &g, seed)
}

/// Degree pattern of `f mod p`; `f mod p` must be squarefree.
pub fn degree_pattern_mod_p(f: &ZPoly, field: &PrimeField) -> Result<Vec<usize>, AlgebraError> {
    degree_pattern(&PolyRing::new(*field), &reduce_mod(f, field))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum IrreducibilityCertificate {
    /// `f mod p` is irreducible of the same degree, so `f` is irreducible over ℚ.
    Irreducible { prime: u64 },
    /// No listed prime certified irreducibility. This is not a claim of reducibility.
    Inconclusive { patterns: Vec<PrimePattern> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimePattern {
    pub prime: u64,
    /// `None` when the prime divides the leading coefficient or the discriminant.
    pub pattern: Option<Vec<usize>>,
}

/// One-sided irreducibility certificate: some listed prime not dividing
/// `lc(f)·disc(f)` under which `f` stays irreducible.
pub fn certify_irreducible_over_q(f: &ZPoly, primes: &[u64]) -> Result<IrreducibilityCertificate, AlgebraError> {
    let n = f.degree().ok_or(AlgebraError::ZeroPolynomial)?;
    if n == 0 {
        return Err(AlgebraError::ConstantPolynomial);
    }
    if !is_squarefree_over_q(f) {
        return Err(AlgebraError::NotSquarefree);
    }
    let mut patterns = Vec::new();
    for &p in primes {
        let field = PrimeField::new(p)?;
        let g = reduce_mod(f, &field);
        let pattern = if g.degree() != Some(n) {
            None
        } else {
            degree_pattern(&PolyRing::new(field), &g).ok()
        };
        if pattern.as_deref() == Some(&[n][..]) {
            return Ok(IrreducibilityCertificate::Irreducible { prime: p });
        }
        patterns.push(PrimePattern { prime: p, pattern });
    }
    Ok(IrreducibilityCertificate::Inconclusive { patterns })
}

/// Coefficients as decimal strings, ascending.
pub fn coeff_strings<E: std::fmt::Display>(f: &UniPoly<E>) -> Vec<String> {
    f.coeffs().iter().map(|c| c.to_string()).collect()
}

/// Human-readable form, highest degree first, e.g. `x^2 - 3*x + 1`.
pub fn display_zpoly(f: &ZPoly, var: &str) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, c) in f.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        if mono.is_empty() {
            s.push_str(&a.to_string());
        } else if a.is_one() {
            s.push_str(&mono);
        } else {
            s.push_str(&format!("{a}*{mono}"));
        }
    }
    s
}

/// Evaluates `f` at an integer.
pub fn eval_z(f: &ZPoly, x: &BigInt) -> BigInt {
    zz().eval(f, x)
}

/// `f` as a `ZPoly` from small coefficients.
pub fn zpoly(coeffs: &[i64]) -> ZPoly {
    zz().from_i64s(coeffs)
}

/// Rational number parsing helpers shared by the curve readers.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(BigRational::new(n, d));
    }
    if let Some((ip, fp)) = s.split_once('.') {
        if fp.is_empty() || !fp.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let neg = ip.trim_start().starts_with('-');
        let ip = if ip.is_empty() || ip == "-" || ip == "+" { "0" } else { ip };
        let i: BigInt = ip.parse().ok()?;
        let scale = BigInt::from(10).pow(fp.len() as u32);
        let f: BigInt = fp.parse().ok()?;
        let mag = i.abs() * &scale + f;
        let num = if neg { -mag } else { mag };
        return Some(BigRational::new(num, scale));
    }
    s.parse::<BigInt>().ok().map(BigRational::from_integer)
}
