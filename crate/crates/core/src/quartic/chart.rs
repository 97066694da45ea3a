//! Coordinate charts in which the flexes are cut out by a single univariate
//! eliminant, the flex form.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::curve::hessian;
use super::smooth::smoothness_check_mod_p;
use super::{PlaneCurve, QuarticError};
use crate::algebra::{
    coprime_over_q, primes_after, primitive_part, resultant, squarefree_part_over_q, subresultant_coeffs, zz,
    MultiPoly, PolyRing, UniPoly, ZPoly,
};

/// Number of coordinate changes tried before giving up.
pub const RETRY_BUDGET: usize = 20;

pub type IntMatrix = [[i64; 3]; 3];

pub const IDENTITY: IntMatrix = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];

/// The seeded sequence of unimodular matrices; the first is the identity.
pub fn coordinate_changes(seed: u64) -> impl Iterator<Item = IntMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    std::iter::once(IDENTITY).chain(std::iter::repeat_with(move || {
        // lower times upper unitriangular
        let mut l = IDENTITY;
        let mut u = IDENTITY;
        for i in 0..3 {
            for j in 0..i {
                l[i][j] = rng.gen_range(-4..=4);
                u[j][i] = rng.gen_range(-4..=4);
            }
        }
        let mut m = [[0i64; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                m[i][j] = (0..3).map(|k| l[i][k] * u[k][j]).sum();
            }
        }
        m
    }))
}

pub fn det_int(m: &IntMatrix) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Inverse of a determinant-one matrix, by the adjugate.
pub fn inverse_unimodular(m: &IntMatrix) -> IntMatrix {
    let c = |i: usize, j: usize| {
        let (r0, r1) = ((i + 1) % 3, (i + 2) % 3);
        let (c0, c1) = ((j + 1) % 3, (j + 2) % 3);
        m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]
    };
    // transpose of the cofactor matrix
    [0, 1, 2].map(|i| [0, 1, 2].map(|j| c(j, i)))
}

/// A curve in working coordinates `v` with `C'(v) = C(M·v)`, dehomogenized at `y = 1`.
#[derive(Clone, Debug)]
pub struct Chart {
    pub index: usize,
    pub matrix: IntMatrix,
    pub curve: PlaneCurve,
    pub hessian: MultiPoly<BigInt>,
    /// `C'(x, 1, z)` as a polynomial in `z` over `ℤ[x]`.
    pub curve_xz: UniPoly<ZPoly>,
    /// `H'(x, 1, z)`.
    pub hessian_xz: UniPoly<ZPoly>,
    /// `Res_z(C', H')`, primitive with positive leading coefficient.
    pub flex_form: ZPoly,
    /// Primitive squarefree part of the flex form.
    pub flex_squarefree: ZPoly,
    /// First subresultant `S₁₁·z + S₁₀` of `C'` and `H'` in `z`.
    pub s11: ZPoly,
    pub s10: ZPoly,
}

/// Why a coordinate change was rejected.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChartAttempt {
    pub index: usize,
    pub matrix: IntMatrix,
    pub reason: String,
}

fn z_coefficient(f: &MultiPoly<BigInt>, d: u32) -> bool {
    f.coeff(&[0, 0, d]).is_some()
}

/// Builds the chart for one matrix, or explains why it is unusable.
pub fn chart_at(curve: &PlaneCurve, index: usize, matrix: IntMatrix) -> Result<Chart, String> {
    let d = curve.degree();
    let he = 3 * (d - 2);
    let c = curve.transformed(&matrix).map_err(|e| e.to_string())?;
    let h = hessian(&c);
    if !z_coefficient(c.form(), d) {
        return Err(format!("curve has no z^{d} term"));
    }
    if !z_coefficient(&h, he) {
        return Err(format!("Hessian has no z^{he} term"));
    }
    let z = zz();
    let zxz = PolyRing::new(z.clone());
    let a = c.form().to_xz_poly(&z);
    let b = h.to_xz_poly(&z);
    let f = resultant(&zxz, &a, &b).map_err(|e| e.to_string())?;
    let expected = (d * he) as usize;
    if f.degree() != Some(expected) {
        return Err(format!(
            "flex form has degree {:?}, expected {expected} (a flex lies on y = 0)",
            f.degree()
        ));
    }
    let (c0, h0) = (zxz.coeff(&a, 0), zxz.coeff(&b, 0));
    if c0.is_zero() || !coprime_over_q(&c0, &h0) {
        return Err("a flex lies on z = 0".into());
    }
    let (big, small) = if b.deg0() >= a.deg0() { (&b, &a) } else { (&a, &b) };
    let s = subresultant_coeffs(&zxz, big, small, 1).map_err(|e| e.to_string())?;
    let (s10, s11) = (s[0].clone(), s[1].clone());
    let flex_form = primitive_part(&f);
    if s11.is_zero() || !coprime_over_q(&s11, &flex_form) {
        return Err("two flexes share an x-coordinate".into());
    }
    let flex_squarefree = squarefree_part_over_q(&flex_form).map_err(|e| e.to_string())?;
    Ok(Chart {
        index,
        matrix,
        curve: c,
        hessian: h,
        curve_xz: a,
        hessian_xz: b,
        flex_form,
        flex_squarefree,
        s11,
        s10,
    })
}

/// Primes tried when looking for a witness of smoothness.
const SMOOTHNESS_WITNESSES: usize = 40;

/// Smoothness over `Q̄`: a singular point reduces to a singular point mod
/// every prime, so smoothness mod one prime suffices.
pub fn smoothness_witness(curve: &PlaneCurve) -> Result<u64, QuarticError> {
    for p in primes_after(3).take(SMOOTHNESS_WITNESSES) {
        if smoothness_check_mod_p(curve, p)? {
            return Ok(p);
        }
    }
    Err(QuarticError::Singular)
}

/// The first chart in the seeded sequence passing all checks and the extra
/// acceptance test.
pub fn find_chart_with<T>(
    curve: &PlaneCurve,
    seed: u64,
    mut accept: impl FnMut(&Chart) -> Result<T, String>,
) -> Result<(Chart, T), QuarticError> {
    if curve.degree() < 3 {
        return Err(QuarticError::DegreeTooSmall(curve.degree()));
    }
    smoothness_witness(curve)?;
    let mut attempts = Vec::new();
    for (index, matrix) in coordinate_changes(seed).take(RETRY_BUDGET).enumerate() {
        match chart_at(curve, index, matrix).and_then(|c| accept(&c).map(|t| (c, t))) {
            Ok(found) => return Ok(found),
            Err(reason) => attempts.push(ChartAttempt { index, matrix, reason }),
        }
    }
    Err(QuarticError::ChartSearchFailed { attempts })
}

pub fn find_chart(curve: &PlaneCurve, seed: u64) -> Result<Chart, QuarticError> {
    find_chart_with(curve, seed, |_| Ok(())).map(|(c, _)| c)
}

/// The flex form of a smooth plane curve and the coordinate change used.
pub fn flex_form(curve: &PlaneCurve, seed: u64) -> Result<(ZPoly, IntMatrix), QuarticError> {
    let c = find_chart(curve, seed)?;
    Ok((c.flex_form, c.matrix))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Ring;

    #[test]
    fn matrices_are_unimodular_and_seeded() {
        let ms: Vec<_> = coordinate_changes(7).take(30).collect();
        assert_eq!(ms[0], IDENTITY);
        assert!(ms.iter().all(|m| det_int(m) == 1));
        assert_eq!(ms, coordinate_changes(7).take(30).collect::<Vec<_>>());
        assert_ne!(ms[1..], coordinate_changes(8).take(30).collect::<Vec<_>>()[1..]);
    }

    #[test]
    fn adjugate_inverts() {
        for m in coordinate_changes(3).take(10) {
            let inv = inverse_unimodular(&m);
            let prod: IntMatrix = [0, 1, 2].map(|i| [0, 1, 2].map(|j| (0..3).map(|k| m[i][k] * inv[k][j]).sum()));
            assert_eq!(prod, IDENTITY);
        }
    }

    #[test]
    fn identity_chart_rejected_for_standard_models() {
        assert!(chart_at(&PlaneCurve::fermat_quartic(), 0, IDENTITY).unwrap_err().contains("Hessian"));
        assert!(chart_at(&PlaneCurve::klein_quartic(), 0, IDENTITY).unwrap_err().contains("z^4"));
    }

    #[test]
    fn degree_24_flex_forms() {
        for c in [PlaneCurve::fermat_quartic(), PlaneCurve::klein_quartic()] {
            let (f, m) = flex_form(&c, 0).unwrap();
            assert_eq!(f.degree(), Some(24));
            assert_eq!(det_int(&m), 1);
        }
    }

    #[test]
    fn fermat_flex_form_is_a_square() {
        let chart = find_chart(&PlaneCurve::fermat_quartic(), 0).unwrap();
        assert_eq!(chart.flex_squarefree.degree(), Some(12));
        let sq = zz().mul(&chart.flex_squarefree, &chart.flex_squarefree);
        assert_eq!(primitive_part(&sq), chart.flex_form);
    }

    #[test]
    fn singular_curve_rejected() {
        let c = PlaneCurve::from_i64_terms(4, &[([4, 0, 0], 1), ([0, 4, 0], 1)]).unwrap();
        assert!(matches!(flex_form(&c, 0), Err(QuarticError::Singular)));
    }
}
