//! The residual eliminant: the polynomial whose roots are the x-coordinates,
//! in a working chart, of the points where flex tangents meet the curve again.
//!
//! Over `A = ℚ[x]/(F)` with `F` the flex form, the generic flex is
//! `(x̄ : 1 : z̄)` with `z̄ = −S₁₀/S₁₁`, and the residual x-coordinate is an
//! element `r ∈ A`. The eliminant is `∏ (u − r(α))` over the roots of `F` with
//! multiplicity, i.e. `Res_x(u − r(x), F(x))`. It is computed modulo many large
//! primes, lifted by Chinese remaindering and rational reconstruction, and
//! checked at fresh primes.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::chart::{find_chart_with, inverse_unimodular, Chart, IntMatrix};
use super::curve::CurveSpec;
use super::flexes::{check_prime, flexes_in_chart, good_primes, lift_matrix, residuals};
use super::geometry::{apply_matrix, gradient, residual_vector};
use super::{PlaneCurve, QuarticError};
use crate::algebra::{
    bigint_mod, certify_irreducible_over_q, clear_denominators, coeff_strings, degree_pattern_mod_p, primes_after,
    primitive_part, qq, reduce_mod, resultant_euclid, squarefree_part_over_q, Field, IrreducibilityCertificate,
    PolyRing, PrimeField, QuotientRing, Ring, UniPoly, ZPoly,
};

/// Reconstruction primes lie just above this bound.
const LARGE_PRIME_FLOOR: u64 = 1 << 61;

/// Give up after this many reconstruction primes.
const RECONSTRUCTION_BUDGET: usize = 400;

/// Fresh primes that must agree with a stable reconstruction.
const VERIFICATION_PRIMES: usize = 2;

const BATCH: usize = 8;

/// Primes at which the eliminant is compared with directly computed residuals.
const MATCH_PRIMES: usize = 2;

const CERTIFICATE_PRIMES: usize = 30;

/// `Res_x(u − r(x), F(x))` modulo `p`, monic in `u`; `None` when `p` divides
/// a denominator of `r` or the leading coefficient of `F`.
pub fn eliminant_mod_p(chart: &Chart, p: u64) -> Option<UniPoly<u64>> {
    let fp = PrimeField::new(p).ok()?;
    let px = PolyRing::new(fp);
    let f = reduce_mod(&chart.flex_form, &fp);
    if f.degree() != chart.flex_form.degree() {
        return None;
    }
    let f = px.monic(&f);
    let a = QuotientRing::new(fp, f.clone()).ok()?;
    let s11 = a.reduce(&reduce_mod(&chart.s11, &fp));
    let s10 = a.reduce(&reduce_mod(&chart.s10, &fp));
    let z = a.neg(&a.mul(&s10, &a.try_inv(&s11)?));
    let point = [a.generator(), a.one(), z];
    let form = chart.curve.form().map(&a, |c| a.embed(&bigint_mod(c, p)));
    let l = gradient(&a, &form, &point);
    // second point on the tangent: its meet with z = 0
    let q = [l[1].clone(), a.neg(&l[0]), a.zero()];
    let res = residual_vector(&a, &form, &point, &q);
    let r = a.mul(&res[0], &a.try_inv(&res[1])?);
    let n = f.deg0();
    let mut values = Vec::with_capacity(n + 1);
    for u in 0..=n as u64 {
        let g = px.sub(&px.constant(u % p), &r);
        let v = if g.is_zero() {
            0
        } else {
            resultant_euclid(&px, &g, &f).ok()?
        };
        values.push((u % p, v));
    }
    px.interpolate(&values).ok()
}

/// `x ≡ a (mod m)`, `x ≡ b (mod p)`, with `0 ≤ x < m·p`.
fn crt(a: &BigInt, m: &BigInt, b: u64, p: u64) -> BigInt {
    let fp = PrimeField::new(p).expect("prime");
    let m_inv = fp.inv(&bigint_mod(m, p)).expect("coprime moduli");
    let diff = fp.sub(&b, &bigint_mod(a, p));
    let t = fp.mul(&diff, &m_inv);
    a + m * BigInt::from(t)
}

/// The fraction `n/d` with `|n|, d ≤ √(m/2)` and `n ≡ c·d (mod m)`, if any.
pub fn rational_reconstruction(c: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), c.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(BigRational::new(r1, t1))
}

fn reconstruct(residues: &[BigInt], m: &BigInt) -> Option<Vec<BigRational>> {
    residues.iter().map(|c| rational_reconstruction(c, m)).collect()
}

fn agrees_mod(candidate: &ZPoly, image: &UniPoly<u64>, p: u64) -> bool {
    let fp = PrimeField::new(p).expect("prime");
    let c = reduce_mod(candidate, &fp);
    c.degree() == image.degree() && PolyRing::new(fp).monic(&c) == *image
}

/// Lifts the eliminant from its images modulo large primes.
pub fn reconstruct_eliminant(chart: &Chart) -> Result<(ZPoly, usize), QuarticError> {
    let mut primes = primes_after(LARGE_PRIME_FLOOR);
    let mut residues: Vec<BigInt> = Vec::new();
    let mut modulus = BigInt::one();
    let mut used = 0;
    let mut previous: Option<Vec<BigRational>> = None;
    let mut pending: Option<(ZPoly, usize)> = None;
    while used < RECONSTRUCTION_BUDGET {
        let batch: Vec<u64> = primes.by_ref().take(BATCH).collect();
        let images: Vec<(u64, Option<UniPoly<u64>>)> =
            batch.par_iter().map(|&p| (p, eliminant_mod_p(chart, p))).collect();
        for (p, image) in images {
            let Some(image) = image else { continue };
            used += 1;
            if let Some((candidate, agreed)) = pending.take() {
                if agrees_mod(&candidate, &image, p) {
                    if agreed + 1 >= VERIFICATION_PRIMES {
                        return Ok((candidate, used));
                    }
                    pending = Some((candidate, agreed + 1));
                    continue;
                }
            }
            let coeffs = image.coeffs();
            if residues.is_empty() {
                residues = coeffs.iter().map(|&c| BigInt::from(c)).collect();
            } else {
                residues = residues
                    .iter()
                    .zip(coeffs)
                    .map(|(a, &b)| crt(a, &modulus, b, p))
                    .collect();
            }
            modulus *= BigInt::from(p);
            let current = reconstruct(&residues, &modulus);
            if current.is_some() && current == previous {
                let q = qq().from_coeffs(current.clone().expect("checked"));
                pending = Some((primitive_part(&clear_denominators(&q)), 0));
            }
            previous = current;
        }
    }
    Err(QuarticError::InvariantViolation(format!(
        "eliminant did not stabilize after {RECONSTRUCTION_BUDGET} primes"
    )))
}

/// Whether the residual x-coordinate is a unit in `ℚ[x]/(F)`, witnessed at
/// some large prime.
fn residual_is_unit(chart: &Chart) -> Result<(), String> {
    primes_after(LARGE_PRIME_FLOOR)
        .take(3)
        .find_map(|p| eliminant_mod_p(chart, p))
        .map(|_| ())
        .ok_or_else(|| "a residual point lies on y = 0".into())
}

/// Agreement of the eliminant with residuals computed point by point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidualCheck {
    pub prime: u64,
    pub ext_degree: usize,
    pub matches: bool,
}

/// Compares `E mod p` with `∏ (u − x(R))^{mult}` over the residuals `R` of the
/// flexes found in `F_{p^k}`, mapped into chart coordinates.
pub fn check_against_residuals(
    curve: &PlaneCurve,
    chart: &Chart,
    eliminant: &ZPoly,
    p: u64,
    seed: u64,
) -> Result<ResidualCheck, QuarticError> {
    let set = flexes_in_chart(curve, chart, p, None, seed)?;
    let data = residuals(curve, &set)?;
    let gf = &set.field;
    let ring = PolyRing::new(gf.clone());
    let inv = lift_matrix(gf, &inverse_unimodular(&chart.matrix));
    let mut product = ring.one();
    let mut ok = set.is_complete();
    for d in &data {
        let v = apply_matrix(gf, &inv, d.residual.coords());
        let Some(y_inv) = gf.inv(&v[1]) else {
            ok = false;
            break;
        };
        let x = gf.mul(&v[0], &y_inv);
        let factor = ring.from_coeffs(vec![gf.neg(&x), gf.one()]);
        product = ring.mul(&product, &ring.pow(&factor, d.flex.multiplicity as u64));
    }
    let fp = PrimeField::new(p)?;
    let image = PolyRing::new(fp).monic(&reduce_mod(eliminant, &fp));
    let lifted = ring.from_coeffs(image.coeffs().iter().map(|c| gf.embed(c)).collect());
    Ok(ResidualCheck {
        prime: p,
        ext_degree: gf.degree(),
        matches: ok && image.degree() == eliminant.degree() && lifted == product,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EliminantReport {
    pub curve: CurveSpec,
    pub coordinate_change: IntMatrix,
    pub flex_form: Vec<String>,
    pub eliminant: Vec<String>,
    pub degree: usize,
    pub expected_degree: usize,
    /// Degree beyond the flex count; nonzero would mean spurious factors.
    pub extraneous_degree: isize,
    pub squarefree_degree: usize,
    /// Whether the eliminant and the flex form have the same roots, i.e. the
    /// residual of every flex is again a flex.
    pub residuals_are_flexes: bool,
    /// Factor degrees of the squarefree part modulo good primes; `None` where
    /// it is not squarefree or drops degree.
    pub patterns: BTreeMap<u64, Option<Vec<usize>>>,
    /// Attempted on the squarefree part when it has full degree.
    pub irreducibility: Option<IrreducibilityCertificate>,
    pub reconstruction_primes: usize,
    pub checks: Vec<ResidualCheck>,
}

impl EliminantReport {
    pub fn consistent(&self) -> bool {
        self.extraneous_degree == 0 && !self.checks.is_empty() && self.checks.iter().all(|c| c.matches)
    }
}

/// The residual eliminant with its factor report.
pub fn residual_eliminant(curve: &PlaneCurve, seed: u64) -> Result<(ZPoly, EliminantReport), QuarticError> {
    if curve.degree() != 4 {
        return Err(QuarticError::NotQuartic);
    }
    let (chart, ()) = find_chart_with(curve, seed, residual_is_unit)?;
    let (e, used) = reconstruct_eliminant(&chart)?;
    let e_sq = squarefree_part_over_q(&e)?;
    let expected = chart.flex_form.deg0();
    let lc = e.lc().cloned().unwrap_or_default();
    let primes: Vec<u64> = good_primes(&chart)
        .filter(|&p| bigint_mod(&lc, p) != 0)
        .take(MATCH_PRIMES)
        .collect();
    let checks = primes
        .iter()
        .map(|&p| check_against_residuals(curve, &chart, &e, p, seed))
        .collect::<Result<Vec<_>, _>>()?;
    let mut patterns = BTreeMap::new();
    for &p in &primes {
        check_prime(&chart, p)?;
        let fp = PrimeField::new(p)?;
        let ok = reduce_mod(&e_sq, &fp).degree() == e_sq.degree();
        patterns.insert(p, if ok { degree_pattern_mod_p(&e_sq, &fp).ok() } else { None });
    }
    let irreducibility = if e_sq.deg0() == expected {
        let cp: Vec<u64> = primes_after(3).take(CERTIFICATE_PRIMES).collect();
        Some(certify_irreducible_over_q(&e_sq, &cp)?)
    } else {
        None
    };
    let report = EliminantReport {
        curve: curve.to_spec(),
        coordinate_change: chart.matrix,
        flex_form: coeff_strings(&chart.flex_form),
        eliminant: coeff_strings(&e),
        degree: e.deg0(),
        expected_degree: expected,
        extraneous_degree: e.deg0() as isize - expected as isize,
        squarefree_degree: e_sq.deg0(),
        residuals_are_flexes: e_sq == chart.flex_squarefree,
        patterns,
        irreducibility,
        reconstruction_primes: used,
        checks,
    };
    Ok((e, report))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reconstructs_small_fractions() {
        let m = BigInt::from(1_000_003u64) * BigInt::from(998_244_353u64);
        for (n, d) in [(3i64, 7i64), (-22, 5), (0, 1), (1, 1), (-1, 12345)] {
            let fd = BigInt::from(d).modinv(&m).unwrap();
            let c = (BigInt::from(n) * fd).mod_floor(&m);
            assert_eq!(rational_reconstruction(&c, &m), Some(BigRational::new(n.into(), d.into())));
        }
    }

    #[test]
    fn chinese_remainder() {
        let m = BigInt::from(101);
        let x = crt(&BigInt::from(17), &m, 5, 103);
        assert_eq!(x.mod_floor(&m), BigInt::from(17));
        assert_eq!(bigint_mod(&x, 103), 5);
    }

    #[test]
    fn klein_residuals_permute_flexes() {
        let (e, report) = residual_eliminant(&PlaneCurve::klein_quartic(), 0).unwrap();
        assert_eq!(e.degree(), Some(24));
        assert!(report.residuals_are_flexes);
        assert!(report.consistent(), "{report:?}");
    }

    #[test]
    fn fermat_residuals_are_the_flexes() {
        let (e, report) = residual_eliminant(&PlaneCurve::fermat_quartic(), 0).unwrap();
        assert_eq!(e.degree(), Some(24));
        assert_eq!(report.squarefree_degree, 12);
        assert!(report.residuals_are_flexes);
        assert!(report.consistent(), "{report:?}");
        assert!(report.irreducibility.is_none());
    }
}
