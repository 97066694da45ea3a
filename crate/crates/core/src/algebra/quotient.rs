use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;

use super::factor::is_irreducible;
use super::poly::{PolyRing, UniPoly};
use super::ring::{FiniteField, Field, Ring};
use super::AlgebraError;

/// The residue ring `F[x]/(m)` for a monic `m` of positive degree.
/// Elements are reduced representatives of degree `< deg m`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuotientRing<F: Field> {
    poly: PolyRing<F>,
    modulus: UniPoly<F::Elem>,
}

impl<F: Field> QuotientRing<F> {
    pub fn new(base: F, modulus: UniPoly<F::Elem>) -> Result<Self, AlgebraError> {
        let poly = PolyRing::new(base);
        match modulus.degree() {
            None => return Err(AlgebraError::ZeroPolynomial),
            Some(0) => return Err(AlgebraError::ConstantPolynomial),
            Some(_) => {}
        }
        let modulus = poly.monic(&modulus);
        Ok(QuotientRing { poly, modulus })
    }

    pub fn poly_ring(&self) -> &PolyRing<F> {
        &self.poly
    }

    pub fn base(&self) -> &F {
        self.poly.base()
    }

    pub fn modulus(&self) -> &UniPoly<F::Elem> {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.deg0()
    }

    pub fn reduce(&self, f: &UniPoly<F::Elem>) -> UniPoly<F::Elem> {
        self.poly.rem(f, &self.modulus).expect("nonzero modulus")
    }

    /// The class of `x`.
    pub fn generator(&self) -> UniPoly<F::Elem> {
        self.reduce(&self.poly.x())
    }

    pub fn embed(&self, c: &F::Elem) -> UniPoly<F::Elem> {
        self.poly.constant(c.clone())
    }

    /// Inverse when the representative is coprime to the modulus.
    pub fn try_inv(&self, a: &UniPoly<F::Elem>) -> Option<UniPoly<F::Elem>> {
        if a.is_zero() {
            return None;
        }
        let (g, s, _) = self.poly.xgcd(a, &self.modulus);
        (g.degree() == Some(0)).then(|| self.reduce(&s))
    }
}

impl<F: Field> Ring for QuotientRing<F> {
    type Elem = UniPoly<F::Elem>;

    fn zero(&self) -> Self::Elem {
        UniPoly::zero()
    }
    fn one(&self) -> Self::Elem {
        self.poly.one()
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.poly.add(a, b)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.poly.sub(a, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.poly.neg(a)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.poly.mul_mod(a, b, &self.modulus)
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.poly.from_i64(n)
    }
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.try_inv(b).map(|bi| self.mul(a, &bi))
    }
}

/// A finite field `F_q[x]/(m)` for an irreducible `m`, checked on construction.
/// Towers are obtained by nesting.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtField<F: FiniteField> {
    q: QuotientRing<F>,
    order: BigUint,
}

impl<F: FiniteField> ExtField<F> {
    pub fn new(base: F, modulus: UniPoly<F::Elem>) -> Result<Self, AlgebraError> {
        let q = QuotientRing::new(base, modulus)?;
        if !is_irreducible(q.base(), q.modulus()) {
            return Err(AlgebraError::NotIrreducible);
        }
        let order = q.base().order().pow(q.degree() as u32);
        Ok(ExtField { q, order })
    }

    pub fn quotient(&self) -> &QuotientRing<F> {
        &self.q
    }

    pub fn base(&self) -> &F {
        self.q.base()
    }

    pub fn modulus(&self) -> &UniPoly<F::Elem> {
        self.q.modulus()
    }

    /// Degree over the base field.
    pub fn degree(&self) -> usize {
        self.q.degree()
    }

    pub fn generator(&self) -> UniPoly<F::Elem> {
        self.q.generator()
    }

    pub fn embed(&self, c: &F::Elem) -> UniPoly<F::Elem> {
        self.q.embed(c)
    }

    /// The base-field value of an element lying in the base field.
    pub fn as_base(&self, a: &UniPoly<F::Elem>) -> Option<F::Elem> {
        match a.degree() {
            None => Some(self.base().zero()),
            Some(0) => a.lc().cloned(),
            _ => None,
        }
    }
}

impl<F: FiniteField> Ring for ExtField<F> {
    type Elem = UniPoly<F::Elem>;

    fn zero(&self) -> Self::Elem {
        self.q.zero()
    }
    fn one(&self) -> Self::Elem {
        self.q.one()
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.q.add(a, b)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.q.sub(a, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.q.neg(a)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.q.mul(a, b)
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.q.from_i64(n)
    }
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.q.exact_div(a, b)
    }
}

impl<F: FiniteField> Field for ExtField<F> {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        self.q.try_inv(a)
    }
    fn characteristic(&self) -> u64 {
        self.base().characteristic()
    }
    fn pth_root(&self, a: &Self::Elem) -> Option<Self::Elem> {
        // a^(q/p) inverts Frobenius
        let e = &self.order / BigUint::from(self.characteristic());
        Some(self.pow_big(a, &e))
    }
}

impl<F: FiniteField> FiniteField for ExtField<F> {
    fn order(&self) -> BigUint {
        self.order.clone()
    }
    fn absolute_degree(&self) -> usize {
        self.degree() * self.base().absolute_degree()
    }
    fn random_elem<G: Rng + ?Sized>(&self, rng: &mut G) -> Self::Elem {
        let coeffs = (0..self.degree()).map(|_| self.base().random_elem(rng)).collect();
        self.q.poly_ring().from_coeffs(coeffs)
    }
}

/// `|F|` as `u64` when it fits.
pub fn small_order<F: FiniteField>(field: &F) -> Option<u64> {
    let o = field.order();
    (o < (BigUint::one() << 64u32)).then(|| u64::try_from(o).expect("checked"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PrimeField;

    #[test]
    fn f9_arithmetic() {
        let f3 = PrimeField::new(3).unwrap();
        let r = PolyRing::new(f3);
        let f9 = ExtField::new(f3, r.from_i64s(&[1, 0, 1])).unwrap();
        let i = f9.generator();
        assert_eq!(f9.mul(&i, &i), f9.from_i64(-1));
        let inv = f9.inv(&r.from_i64s(&[1, 1])).unwrap();
        assert_eq!(f9.mul(&inv, &r.from_i64s(&[1, 1])), f9.one());
        assert_eq!(f9.order(), BigUint::from(9u32));
        // Frobenius then its inverse
        let a = r.from_i64s(&[2, 1]);
        assert_eq!(f9.pth_root(&f9.pow(&a, 3)), Some(a));
    }

    #[test]
    fn reducible_modulus_rejected() {
        let f5 = PrimeField::new(5).unwrap();
        let r = PolyRing::new(f5);
        assert_eq!(ExtField::new(f5, r.from_i64s(&[1, 0, 1])), Err(AlgebraError::NotIrreducible));
        assert_eq!(ExtField::new(f5, r.from_i64s(&[3])), Err(AlgebraError::ConstantPolynomial));
    }

    #[test]
    fn tower() {
        let f2 = PrimeField::new(2).unwrap();
        let r = PolyRing::new(f2);
        let f4 = ExtField::new(f2, r.from_i64s(&[1, 1, 1])).unwrap();
        let r4 = PolyRing::new(f4.clone());
        // y^2 + y + w is irreducible over F_4 = F_2(w)
        let w = f4.generator();
        let m = r4.from_coeffs(vec![w, f4.one(), f4.one()]);
        let f16 = ExtField::new(f4, m).unwrap();
        assert_eq!(f16.order(), BigUint::from(16u32));
        assert_eq!(f16.absolute_degree(), 4);
        let y = f16.generator();
        assert_eq!(f16.pow(&y, 15), f16.one());
    }

    #[test]
    fn zero_divisors_in_quotient() {
        let f5 = PrimeField::new(5).unwrap();
        let r = PolyRing::new(f5);
        let q = QuotientRing::new(f5, r.from_i64s(&[-1, 0, 1])).unwrap();
        assert!(q.try_inv(&r.from_i64s(&[-1, 1])).is_none());
        assert!(q.try_inv(&r.from_i64s(&[2, 1])).is_some());
    }
}
