//! Smoothness of a plane curve modulo a prime.

use crate::algebra::{
    factor, find_irreducible, resultant, ExtField, FiniteField, MultiPoly, PolyRing, PrimeField, Ring, UniPoly,
};

use super::geometry::eval_form;
use super::{PlaneCurve, QuarticError};

/// Whether the curve is smooth over the algebraic closure of `F_p`, i.e. the
/// form and its three partials have no common projective zero.
pub fn smoothness_check_mod_p(curve: &PlaneCurve, p: u64) -> Result<bool, QuarticError> {
    let fp = PrimeField::new(p)?;
    let form = curve.form_over(&fp);
    if form.is_zero() {
        return Err(QuarticError::PrimeDividesContent(p));
    }
    let mut forms = vec![form.clone()];
    forms.extend((0..3).map(|i| form.partial(&fp, i)));
    if let Some(found) = has_common_zero(&fp, &forms) {
        return Ok(!found);
    }
    // every F_p-point is a zero of the anchor form: retry over extensions
    for k in 2.. {
        let gf = ExtField::new(fp, find_irreducible(&fp, k, 0)?)?;
        let lifted: Vec<_> = forms.iter().map(|f| f.map(&gf, |c| gf.embed(c))).collect();
        if let Some(found) = has_common_zero(&gf, &lifted) {
            return Ok(!found);
        }
    }
    unreachable!()
}

fn unit_matrix<R: Ring>(ring: &R) -> [[R::Elem; 3]; 3] {
    [0, 1, 2].map(|i| [0, 1, 2].map(|j| if i == j { ring.one() } else { ring.zero() }))
}

/// Points of `P²(F)` in a fixed order, cut off after `limit`.
fn some_points<F: FiniteField>(field: &F, limit: usize) -> Vec<[F::Elem; 3]> {
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(0);
    let mut out = vec![[field.zero(), field.zero(), field.one()]];
    out.push([field.zero(), field.one(), field.zero()]);
    out.push([field.one(), field.zero(), field.zero()]);
    while out.len() < limit {
        out.push([field.random_elem(&mut rng), field.random_elem(&mut rng), field.one()]);
    }
    out
}

/// Decides whether the nonzero forms have a common zero over the algebraic
/// closure. `None` when no `F`-point avoids the lowest-degree form, in which
/// case the caller must extend the field.
///
/// Conservative when two of the forms share a component: the answer is then
/// `true` even if the remaining forms would rule the common curve out.
pub fn has_common_zero<F: FiniteField>(field: &F, forms: &[MultiPoly<F::Elem>]) -> Option<bool> {
    let mut forms: Vec<&MultiPoly<F::Elem>> = forms.iter().filter(|f| !f.is_zero()).collect();
    if forms.is_empty() {
        return Some(true);
    }
    forms.sort_by_key(|f| f.total_degree());
    if forms[0].total_degree() == Some(0) {
        return Some(false);
    }
    if forms.len() == 1 {
        return Some(true);
    }
    // move a point off the anchor to (0:0:1), making it monic in z
    let anchor = some_points(field, 200)
        .into_iter()
        .find(|v| !field.is_zero(&eval_form(field, forms[0], v)))?;
    let mut m = unit_matrix(field);
    let k = (0..3).rev().find(|&i| !field.is_zero(&anchor[i])).expect("nonzero point");
    // columns: the two unit vectors other than e_k, then the anchor
    let others: Vec<usize> = (0..3).filter(|&i| i != k).collect();
    for i in 0..3 {
        m[i][0] = if i == others[0] { field.one() } else { field.zero() };
        m[i][1] = if i == others[1] { field.one() } else { field.zero() };
        m[i][2] = anchor[i].clone();
    }
    let moved: Vec<MultiPoly<F::Elem>> = forms.iter().map(|f| f.linear_substitution(field, &m)).collect();

    let fx = PolyRing::new(field.clone());
    let fxz = PolyRing::new(fx.clone());
    let sliced: Vec<UniPoly<UniPoly<F::Elem>>> = moved.iter().map(|f| f.to_xz_poly(&fx)).collect();

    // y = 0: points (1 : 0 : z); (0 : 0 : 1) is off the anchor
    let on_y0: Vec<UniPoly<F::Elem>> = moved
        .iter()
        .map(|f| {
            let terms = f.terms().filter(|(e, _)| e[1] == 0).map(|(e, c)| (e[2] as usize, c.clone()));
            let mut coeffs = vec![field.zero(); f.total_degree().unwrap_or(0) as usize + 1];
            for (i, c) in terms {
                coeffs[i] = field.add(&coeffs[i], &c);
            }
            fx.from_coeffs(coeffs)
        })
        .collect();
    let g = on_y0.iter().fold(fx.zero(), |acc, f| fx.gcd(&acc, f));
    if g.degree() != Some(0) {
        return Some(true);
    }

    // y = 1: eliminate z
    let mut elim = fx.zero();
    for s in &sliced[1..] {
        let r = resultant(&fxz, &sliced[0], s).expect("nonzero slices");
        if r.is_zero() {
            return Some(true);
        }
        elim = fx.gcd(&elim, &r);
    }
    if elim.degree() == Some(0) {
        return Some(false);
    }
    for (h, _) in factor(&fx, &elim, 0).expect("nonzero") {
        let ext = ExtField::new(field.clone(), h).expect("irreducible factor");
        let ez = PolyRing::new(ext.clone());
        // a coefficient in F[x] evaluated at the root is its residue mod h
        let at_root: Vec<UniPoly<UniPoly<F::Elem>>> = sliced
            .iter()
            .map(|s| ez.from_coeffs(s.coeffs().iter().map(|c| ext.quotient().reduce(c)).collect()))
            .collect();
        let g = at_root.iter().fold(ez.zero(), |acc, f| ez.gcd(&acc, f));
        if g.degree() != Some(0) {
            return Some(true);
        }
    }
    Some(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fermat() {
        let c = PlaneCurve::fermat_quartic();
        assert!(smoothness_check_mod_p(&c, 5).unwrap());
        assert!(smoothness_check_mod_p(&c, 101).unwrap());
        assert!(!smoothness_check_mod_p(&c, 2).unwrap());
    }

    #[test]
    fn z_free_quartic_is_singular() {
        let c = PlaneCurve::from_i64_terms(4, &[([4, 0, 0], 1), ([0, 4, 0], 1)]).unwrap();
        assert!(!smoothness_check_mod_p(&c, 7).unwrap());
    }

    #[test]
    fn klein() {
        let c = PlaneCurve::klein_quartic();
        // the Klein quartic has bad reduction only at 7
        assert!(!smoothness_check_mod_p(&c, 7).unwrap());
        for p in [3, 5, 11, 13, 29, 101] {
            assert!(smoothness_check_mod_p(&c, p).unwrap(), "p = {p}");
        }
    }

    #[test]
    fn nodal_and_cuspidal() {
        // y²z = x³ + x²z has a node at (0:0:1)
        let node = PlaneCurve::from_i64_terms(3, &[([0, 2, 1], 1), ([3, 0, 0], -1), ([2, 0, 1], -1)]).unwrap();
        assert!(!smoothness_check_mod_p(&node, 11).unwrap());
        // y²z = x³ − z³ is smooth away from 2, 3
        let ell = PlaneCurve::from_i64_terms(3, &[([0, 2, 1], 1), ([3, 0, 0], -1), ([0, 0, 3], 1)]).unwrap();
        assert!(smoothness_check_mod_p(&ell, 11).unwrap());
        assert!(!smoothness_check_mod_p(&ell, 3).unwrap());
    }

    #[test]
    fn singular_point_off_the_axes() {
        // (x − z)²·z² + y⁴ is singular at (1 : 0 : 1)
        let c = PlaneCurve::from_i64_terms(
            4,
            &[([2, 0, 2], 1), ([1, 0, 3], -2), ([0, 0, 4], 1), ([0, 4, 0], 1)],
        )
        .unwrap();
        assert!(!smoothness_check_mod_p(&c, 13).unwrap());
    }
}
