use std::collections::BTreeMap;

use super::poly::{PolyRing, UniPoly};
use super::ring::Ring;
use super::AlgebraError;

pub type Exponent = [u32; 3];

/// A sparse polynomial in `x, y, z`. No zero coefficient is stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly<E> {
    terms: BTreeMap<Exponent, E>,
}

impl<E: Clone + PartialEq> MultiPoly<E> {
    pub fn zero() -> Self {
        MultiPoly { terms: BTreeMap::new() }
    }

    /// Collects terms, summing repeated exponents and dropping zeros.
    pub fn from_terms<R: Ring<Elem = E>>(ring: &R, terms: impl IntoIterator<Item = (Exponent, E)>) -> Self {
        let mut out = BTreeMap::new();
        for (e, c) in terms {
            let entry = out.entry(e).or_insert_with(|| ring.zero());
            *entry = ring.add(entry, &c);
        }
        out.retain(|_, c| !ring.is_zero(c));
        MultiPoly { terms: out }
    }

    pub fn monomial<R: Ring<Elem = E>>(ring: &R, c: E, e: Exponent) -> Self {
        Self::from_terms(ring, [(e, c)])
    }

    pub fn var<R: Ring<Elem = E>>(ring: &R, i: usize) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        Self::monomial(ring, ring.one(), e)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &E)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &Exponent) -> Option<&E> {
        self.terms.get(e)
    }

    /// Largest total degree; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// The common total degree when every term has the same one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let d = it.next()?;
        it.all(|x| x == d).then_some(d)
    }

    pub fn add<R: Ring<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        Self::from_terms(ring, self.terms.iter().chain(other.terms.iter()).map(|(e, c)| (*e, c.clone())))
    }

    pub fn neg<R: Ring<Elem = E>>(&self, ring: &R) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, ring.neg(c))).collect(),
        }
    }

    pub fn sub<R: Ring<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        self.add(ring, &other.neg(ring))
    }

    pub fn mul<R: Ring<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        let mut terms = Vec::with_capacity(self.len() * other.len());
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                terms.push(([a[0] + b[0], a[1] + b[1], a[2] + b[2]], ring.mul(x, y)));
            }
        }
        Self::from_terms(ring, terms)
    }

    pub fn scale<R: Ring<Elem = E>>(&self, ring: &R, c: &E) -> Self {
        Self::from_terms(ring, self.terms.iter().map(|(e, x)| (*e, ring.mul(x, c))))
    }

    pub fn pow<R: Ring<Elem = E>>(&self, ring: &R, k: u32) -> Self {
        let mut acc = Self::monomial(ring, ring.one(), [0, 0, 0]);
        for _ in 0..k {
            acc = acc.mul(ring, self);
        }
        acc
    }

    /// `∂/∂(var i)`.
    pub fn partial<R: Ring<Elem = E>>(&self, ring: &R, i: usize) -> Self {
        Self::from_terms(
            ring,
            self.terms.iter().filter(|(e, _)| e[i] > 0).map(|(e, c)| {
                let mut e2 = *e;
                e2[i] -= 1;
                (e2, ring.mul(c, &ring.from_i64(e[i] as i64)))
            }),
        )
    }

    /// Image of the coefficients under a ring map.
    pub fn map<S: Ring>(&self, target: &S, phi: impl Fn(&E) -> S::Elem) -> MultiPoly<S::Elem> {
        MultiPoly::from_terms(target, self.terms.iter().map(|(e, c)| (*e, phi(c))))
    }

    /// Evaluation at a point of some ring `S` receiving the coefficients via `phi`.
    pub fn eval<S: Ring>(&self, target: &S, phi: impl Fn(&E) -> S::Elem, point: &[S::Elem; 3]) -> S::Elem {
        let mut acc = target.zero();
        for (e, c) in &self.terms {
            let mut t = phi(c);
            for i in 0..3 {
                if e[i] > 0 {
                    t = target.mul(&t, &target.pow(&point[i], e[i] as u64));
                }
            }
            acc = target.add(&acc, &t);
        }
        acc
    }

    /// `F(M·v)`: substitutes `x_i ↦ Σ_j M[i][j]·x_j`.
    pub fn linear_substitution<R: Ring<Elem = E>>(&self, ring: &R, m: &[[E; 3]; 3]) -> Self {
        let images: Vec<Self> = (0..3)
            .map(|i| Self::from_terms(ring, (0..3).map(|j| (unit(j), m[i][j].clone()))))
            .collect();
        let mut acc = Self::zero();
        for (e, c) in &self.terms {
            let mut t = Self::monomial(ring, c.clone(), [0, 0, 0]);
            for i in 0..3 {
                t = t.mul(ring, &images[i].pow(ring, e[i]));
            }
            acc = acc.add(ring, &t);
        }
        acc
    }

    /// Specializes `y = 1` and views the result in `(R[x])[z]`.
    pub fn to_xz_poly<R: Ring<Elem = E>>(&self, ring: &PolyRing<R>) -> UniPoly<UniPoly<E>> {
        let outer = PolyRing::new(ring.clone());
        let dz = self.terms.keys().map(|e| e[2]).max().unwrap_or(0) as usize;
        let mut cols: Vec<Vec<E>> = vec![Vec::new(); dz + 1];
        for (e, c) in &self.terms {
            let col = &mut cols[e[2] as usize];
            let dx = e[0] as usize;
            if col.len() <= dx {
                col.resize(dx + 1, ring.base().zero());
            }
            col[dx] = ring.base().add(&col[dx], c);
        }
        outer.from_coeffs(cols.into_iter().map(|c| ring.from_coeffs(c)).collect())
    }

    /// Restriction to a coordinate line: the univariate polynomial in variable
    /// `t` obtained by substituting the given linear forms `x_i = a_i + b_i·t`.
    pub fn restrict_to_line<R: Ring<Elem = E>>(
        &self,
        ring: &PolyRing<R>,
        forms: &[UniPoly<E>; 3],
    ) -> UniPoly<E> {
        let mut acc = ring.zero();
        for (e, c) in &self.terms {
            let mut t = ring.constant(c.clone());
            for i in 0..3 {
                t = ring.mul(&t, &ring.pow(&forms[i], e[i] as u64));
            }
            acc = ring.add(&acc, &t);
        }
        acc
    }

    /// Checks a required homogeneity degree.
    pub fn require_homogeneous(&self, d: u32) -> Result<(), AlgebraError> {
        match self.homogeneous_degree() {
            Some(x) if x == d => Ok(()),
            _ => Err(AlgebraError::NotHomogeneous(d)),
        }
    }
}

fn unit(j: usize) -> Exponent {
    let mut e = [0; 3];
    e[j] = 1;
    e
}

/// `det` of a 3×3 matrix over a ring.
pub fn det3<R: Ring>(ring: &R, m: &[[R::Elem; 3]; 3]) -> R::Elem {
    let t = |a: &R::Elem, b: &R::Elem, c: &R::Elem| ring.mul(&ring.mul(a, b), c);
    let pos = ring.add(
        &ring.add(&t(&m[0][0], &m[1][1], &m[2][2]), &t(&m[0][1], &m[1][2], &m[2][0])),
        &t(&m[0][2], &m[1][0], &m[2][1]),
    );
    let neg = ring.add(
        &ring.add(&t(&m[0][2], &m[1][1], &m[2][0]), &t(&m[0][0], &m[1][2], &m[2][1])),
        &t(&m[0][1], &m[1][0], &m[2][2]),
    );
    ring.sub(&pos, &neg)
}

/// The Hessian determinant `det(∂²F/∂x_i∂x_j)`.
pub fn hessian<R: Ring>(ring: &R, f: &MultiPoly<R::Elem>) -> MultiPoly<R::Elem> {
    let first: Vec<_> = (0..3).map(|i| f.partial(ring, i)).collect();
    let h: Vec<Vec<_>> = (0..3)
        .map(|i| (0..3).map(|j| first[i].partial(ring, j)).collect())
        .collect();
    let t = |a: &MultiPoly<R::Elem>, b: &MultiPoly<R::Elem>, c: &MultiPoly<R::Elem>| a.mul(ring, b).mul(ring, c);
    let pos = t(&h[0][0], &h[1][1], &h[2][2])
        .add(ring, &t(&h[0][1], &h[1][2], &h[2][0]))
        .add(ring, &t(&h[0][2], &h[1][0], &h[2][1]));
    let neg = t(&h[0][2], &h[1][1], &h[2][0])
        .add(ring, &t(&h[0][0], &h[1][2], &h[2][1]))
        .add(ring, &t(&h[0][1], &h[1][0], &h[2][2]));
    pos.sub(ring, &neg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Integers;
    use num_bigint::BigInt;

    fn fermat() -> MultiPoly<BigInt> {
        let z = Integers;
        MultiPoly::from_terms(
            &z,
            [([4, 0, 0], 1), ([0, 4, 0], 1), ([0, 0, 4], 1)].map(|(e, c)| (e, BigInt::from(c))),
        )
    }

    #[test]
    fn fermat_hessian() {
        let h = hessian(&Integers, &fermat());
        // (12x²)(12y²)(12z²)
        let expected = MultiPoly::monomial(&Integers, BigInt::from(1728), [2, 2, 2]);
        assert_eq!(h, expected);
    }

    #[test]
    fn substitution_and_eval() {
        let z = Integers;
        let f = fermat();
        let swap = [[0, 1, 0], [1, 0, 0], [0, 0, 1]].map(|r| r.map(BigInt::from));
        assert_eq!(f.linear_substitution(&z, &swap), f);
        let shear = [[1, 1, 0], [0, 1, 0], [0, 0, 1]].map(|r| r.map(BigInt::from));
        let g = f.linear_substitution(&z, &shear);
        let p = [2, 3, 5].map(BigInt::from);
        let mp = [5, 3, 5].map(BigInt::from);
        assert_eq!(g.eval(&z, |c| c.clone(), &p), f.eval(&z, |c| c.clone(), &mp));
        assert_eq!(g.homogeneous_degree(), Some(4));
    }

    #[test]
    fn partials_and_cancellation() {
        let z = Integers;
        let f = fermat();
        let d = f.partial(&z, 0);
        assert_eq!(d, MultiPoly::monomial(&z, BigInt::from(4), [3, 0, 0]));
        assert!(f.sub(&z, &f).is_zero());
        assert_eq!(f.require_homogeneous(3), Err(AlgebraError::NotHomogeneous(3)));
    }

    #[test]
    fn xz_view() {
        let z = Integers;
        let r = PolyRing::new(z);
        let v = fermat().to_xz_poly(&r);
        assert_eq!(v.deg0(), 4);
        assert_eq!(v.coeffs()[0], r.from_i64s(&[1, 0, 0, 0, 1]));
        assert_eq!(v.coeffs()[4], r.from_i64s(&[1]));
    }

    #[test]
    fn small_determinant() {
        let m = [[2, 0, 1], [1, 3, 0], [0, 1, 1]].map(|r| r.map(BigInt::from));
        assert_eq!(det3(&Integers, &m), BigInt::from(7));
    }
}
