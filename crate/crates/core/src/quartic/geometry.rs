//! Points, tangent lines, contact orders and residual points over any field.

use crate::algebra::{Field, MultiPoly, PolyRing, Ring, UniPoly};

use super::QuarticError;

/// A point of `P²`, normalized so that the last nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjectivePoint<E> {
    coords: [E; 3],
}

impl<E: Clone + PartialEq> ProjectivePoint<E> {
    /// `None` for the zero vector.
    pub fn new<F: Field<Elem = E>>(field: &F, coords: [E; 3]) -> Option<Self> {
        let k = (0..3).rev().find(|&i| !field.is_zero(&coords[i]))?;
        let s = field.inv(&coords[k]).expect("nonzero");
        Some(ProjectivePoint {
            coords: coords.map(|c| field.mul(&c, &s)),
        })
    }

    pub fn coords(&self) -> &[E; 3] {
        &self.coords
    }
}

/// Lines `a·x + b·y + c·z = 0` are stored as `[a, b, c]`.
pub type Line<E> = [E; 3];

pub fn dot<R: Ring>(ring: &R, a: &[R::Elem; 3], b: &[R::Elem; 3]) -> R::Elem {
    (0..3).fold(ring.zero(), |acc, i| ring.add(&acc, &ring.mul(&a[i], &b[i])))
}

pub fn cross<R: Ring>(ring: &R, a: &[R::Elem; 3], b: &[R::Elem; 3]) -> [R::Elem; 3] {
    let c = |i: usize, j: usize| ring.sub(&ring.mul(&a[i], &b[j]), &ring.mul(&a[j], &b[i]));
    [c(1, 2), c(2, 0), c(0, 1)]
}

/// `M·v`.
pub fn apply_matrix<R: Ring>(ring: &R, m: &[[R::Elem; 3]; 3], v: &[R::Elem; 3]) -> [R::Elem; 3] {
    [0, 1, 2].map(|i| dot(ring, &m[i], v))
}

fn proportional<R: Ring>(ring: &R, a: &[R::Elem; 3], b: &[R::Elem; 3]) -> bool {
    cross(ring, a, b).iter().all(|c| ring.is_zero(c))
}

pub fn eval_form<R: Ring>(ring: &R, form: &MultiPoly<R::Elem>, p: &[R::Elem; 3]) -> R::Elem {
    form.eval(ring, |c| c.clone(), p)
}

pub fn gradient<R: Ring>(ring: &R, form: &MultiPoly<R::Elem>, p: &[R::Elem; 3]) -> [R::Elem; 3] {
    [0, 1, 2].map(|i| eval_form(ring, &form.partial(ring, i), p))
}

/// Coefficients `e_0, …, e_d` of `s ↦ C(s·q + p)`.
pub fn line_expansion<R: Ring>(
    ring: &R,
    form: &MultiPoly<R::Elem>,
    p: &[R::Elem; 3],
    q: &[R::Elem; 3],
) -> Vec<R::Elem> {
    let pr = PolyRing::new(ring.clone());
    let lines = [0, 1, 2].map(|i| pr.from_coeffs(vec![p[i].clone(), q[i].clone()]));
    let f: UniPoly<R::Elem> = form.restrict_to_line(&pr, &lines);
    let d = form.total_degree().unwrap_or(0) as usize;
    (0..=d).map(|k| pr.coeff(&f, k)).collect()
}

/// A point on `line` not proportional to `p`.
fn second_point<F: Field>(field: &F, line: &Line<F::Elem>, p: &[F::Elem; 3]) -> Option<[F::Elem; 3]> {
    (0..3).rev().find_map(|j| {
        let mut e = [field.zero(), field.zero(), field.zero()];
        e[j] = field.one();
        let q = cross(field, line, &e);
        (!q.iter().all(|c| field.is_zero(c)) && !proportional(field, &q, p)).then_some(q)
    })
}

/// The tangent line at a smooth point of the curve.
pub fn tangent_line<F: Field>(
    field: &F,
    form: &MultiPoly<F::Elem>,
    p: &ProjectivePoint<F::Elem>,
) -> Result<Line<F::Elem>, QuarticError> {
    if !field.is_zero(&eval_form(field, form, p.coords())) {
        return Err(QuarticError::NotOnCurve);
    }
    let g = gradient(field, form, p.coords());
    if g.iter().all(|c| field.is_zero(c)) {
        return Err(QuarticError::SingularPoint);
    }
    Ok(g)
}

/// Order of contact of `line` with the curve at `p`.
pub fn intersection_multiplicity<F: Field>(
    field: &F,
    form: &MultiPoly<F::Elem>,
    line: &Line<F::Elem>,
    p: &ProjectivePoint<F::Elem>,
) -> Result<usize, QuarticError> {
    if !field.is_zero(&eval_form(field, form, p.coords())) {
        return Err(QuarticError::NotOnCurve);
    }
    if !field.is_zero(&dot(field, line, p.coords())) {
        return Err(QuarticError::LineMissesPoint);
    }
    let q = second_point(field, line, p.coords()).ok_or(QuarticError::DegenerateLine)?;
    let e = line_expansion(field, form, p.coords(), &q);
    e.iter().position(|c| !field.is_zero(c)).ok_or(QuarticError::LineInCurve)
}

/// For a flex `p` of a quartic and a second point `q` on its tangent, the
/// fourth intersection `e₃·q − e₄·p`, where `C(s·q + p) = s³(e₃ + e₄·s)`.
pub fn residual_vector<R: Ring>(
    ring: &R,
    form: &MultiPoly<R::Elem>,
    p: &[R::Elem; 3],
    q: &[R::Elem; 3],
) -> [R::Elem; 3] {
    let e = line_expansion(ring, form, p, q);
    [0, 1, 2].map(|i| ring.sub(&ring.mul(&e[3], &q[i]), &ring.mul(&e[4], &p[i])))
}

/// Where the tangent at the flex `p` meets the quartic again; `p` itself at a hyperflex.
pub fn residual_point<F: Field>(
    field: &F,
    form: &MultiPoly<F::Elem>,
    p: &ProjectivePoint<F::Elem>,
) -> Result<ProjectivePoint<F::Elem>, QuarticError> {
    if form.total_degree() != Some(4) {
        return Err(QuarticError::NotQuartic);
    }
    let line = tangent_line(field, form, p)?;
    if intersection_multiplicity(field, form, &line, p)? < 3 {
        return Err(QuarticError::NotAFlex);
    }
    let q = second_point(field, &line, p.coords()).ok_or(QuarticError::DegenerateLine)?;
    let r = residual_vector(field, form, p.coords(), &q);
    ProjectivePoint::new(field, r).ok_or(QuarticError::LineInCurve)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Integers, PrimeField, Rationals};
    use crate::quartic::PlaneCurve;
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        Rationals.from_i64(n)
    }

    #[test]
    fn conic_tangent() {
        let c = PlaneCurve::from_i64_terms(2, &[([2, 0, 0], 1), ([0, 2, 0], 1), ([0, 0, 2], -1)]).unwrap();
        let f = c.form_over(&Rationals);
        let p = ProjectivePoint::new(&Rationals, [q(1), q(0), q(1)]).unwrap();
        assert_eq!(tangent_line(&Rationals, &f, &p).unwrap(), [q(2), q(0), q(-2)]);
        let l = tangent_line(&Rationals, &f, &p).unwrap();
        assert_eq!(intersection_multiplicity(&Rationals, &f, &l, &p).unwrap(), 2);
        let off = ProjectivePoint::new(&Rationals, [q(1), q(1), q(1)]).unwrap();
        assert_eq!(tangent_line(&Rationals, &f, &off), Err(QuarticError::NotOnCurve));
    }

    #[test]
    fn singular_point_rejected() {
        // nodal cubic y²z − x²(x + z)
        let c = PlaneCurve::from_i64_terms(3, &[([0, 2, 1], 1), ([3, 0, 0], -1), ([2, 0, 1], -1)]).unwrap();
        let f = c.form_over(&Rationals);
        let o = ProjectivePoint::new(&Rationals, [q(0), q(0), q(1)]).unwrap();
        assert_eq!(tangent_line(&Rationals, &f, &o), Err(QuarticError::SingularPoint));
    }

    #[test]
    fn klein_coordinate_flex() {
        let f = PlaneCurve::klein_quartic().form_over(&Rationals);
        let p = ProjectivePoint::new(&Rationals, [q(1), q(0), q(0)]).unwrap();
        let l = tangent_line(&Rationals, &f, &p).unwrap();
        assert_eq!(l, [q(0), q(1), q(0)]);
        assert_eq!(intersection_multiplicity(&Rationals, &f, &l, &p).unwrap(), 3);
        let r = residual_point(&Rationals, &f, &p).unwrap();
        assert_eq!(r.coords(), &[q(0), q(0), q(1)]);
    }

    #[test]
    fn fermat_hyperflex_mod_p() {
        // (ζ : 0 : 1) with ζ⁴ = −1 needs p ≡ 1 mod 8
        let k = PrimeField::new(17).unwrap();
        let f = PlaneCurve::fermat_quartic().form_over(&k);
        let zeta = (1..17).find(|&a| k.pow(&a, 4) == 16).unwrap();
        let p = ProjectivePoint::new(&k, [zeta, 0, 1]).unwrap();
        let l = tangent_line(&k, &f, &p).unwrap();
        assert_eq!(intersection_multiplicity(&k, &f, &l, &p).unwrap(), 4);
        assert_eq!(residual_point(&k, &f, &p).unwrap(), p);
    }

    #[test]
    fn not_a_flex() {
        let k = PrimeField::new(13).unwrap();
        let f = PlaneCurve::fermat_quartic().form_over(&k);
        // find a point (x : y : 1) with xy ≠ 0
        let p = (1..13u64)
            .flat_map(|x| (1..13u64).map(move |y| [x, y, 1]))
            .find(|v| eval_form(&k, &f, v) == 0)
            .unwrap();
        let p = ProjectivePoint::new(&k, p).unwrap();
        assert_eq!(residual_point(&k, &f, &p), Err(QuarticError::NotAFlex));
    }

    #[test]
    fn generic_ring_expansion() {
        let f = PlaneCurve::fermat_quartic().form_over(&Integers);
        let e = line_expansion(&Integers, &f, &[1, 0, 0].map(Into::into), &[0, 1, 0].map(Into::into));
        let expected: Vec<num_bigint::BigInt> = [1, 0, 0, 0, 1].iter().map(|&v| v.into()).collect();
        assert_eq!(e, expected);
    }
}
