use num_bigint::BigUint;

use super::ring::{Field, Ring};
use super::AlgebraError;

/// A dense univariate polynomial, coefficients in ascending degree.
///
/// The coefficient vector never ends in a zero; the zero polynomial is empty.
/// Elements carry no ring, so normalization happens in [`PolyRing`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPoly<E> {
    coeffs: Vec<E>,
}

impl<E> UniPoly<E> {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial counted as 0.
    pub fn deg0(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lc(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Option<&E> {
        self.coeffs.get(i)
    }
}

/// The polynomial ring `R[x]` over a coefficient ring `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing<R> {
    base: R,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(base: R) -> Self {
        PolyRing { base }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    /// Builds a polynomial from ascending coefficients, trimming zeros.
    pub fn from_coeffs(&self, mut coeffs: Vec<R::Elem>) -> UniPoly<R::Elem> {
        while coeffs.last().is_some_and(|c| self.base.is_zero(c)) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64s(&self, coeffs: &[i64]) -> UniPoly<R::Elem> {
        self.from_coeffs(coeffs.iter().map(|&c| self.base.from_i64(c)).collect())
    }

    pub fn constant(&self, c: R::Elem) -> UniPoly<R::Elem> {
        self.from_coeffs(vec![c])
    }

    pub fn x(&self) -> UniPoly<R::Elem> {
        self.monomial(self.base.one(), 1)
    }

    /// `c·xᵏ`.
    pub fn monomial(&self, c: R::Elem, k: usize) -> UniPoly<R::Elem> {
        let mut coeffs = vec![self.base.zero(); k];
        coeffs.push(c);
        self.from_coeffs(coeffs)
    }

    /// Coefficient of `xⁱ`, zero beyond the degree.
    pub fn coeff(&self, f: &UniPoly<R::Elem>, i: usize) -> R::Elem {
        f.coeffs.get(i).cloned().unwrap_or_else(|| self.base.zero())
    }

    pub fn scale(&self, f: &UniPoly<R::Elem>, c: &R::Elem) -> UniPoly<R::Elem> {
        self.from_coeffs(f.coeffs.iter().map(|a| self.base.mul(a, c)).collect())
    }

    /// `f · xᵏ`.
    pub fn shift(&self, f: &UniPoly<R::Elem>, k: usize) -> UniPoly<R::Elem> {
        if f.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![self.base.zero(); k];
        coeffs.extend(f.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    pub fn eval(&self, f: &UniPoly<R::Elem>, a: &R::Elem) -> R::Elem {
        f.coeffs
            .iter()
            .rev()
            .fold(self.base.zero(), |acc, c| self.base.add(&self.base.mul(&acc, a), c))
    }

    pub fn derivative(&self, f: &UniPoly<R::Elem>) -> UniPoly<R::Elem> {
        self.from_coeffs(
            f.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| self.base.mul(c, &self.base.from_i64(i as i64)))
                .collect(),
        )
    }

    /// `f(g(x))` by Horner's rule.
    pub fn compose(&self, f: &UniPoly<R::Elem>, g: &UniPoly<R::Elem>) -> UniPoly<R::Elem> {
        f.coeffs.iter().rev().fold(UniPoly::zero(), |acc, c| {
            self.add(&self.mul(&acc, g), &self.constant(c.clone()))
        })
    }

    /// Applies a coefficient map into another ring.
    pub fn map<S: Ring>(
        &self,
        target: &PolyRing<S>,
        f: &UniPoly<R::Elem>,
        phi: impl Fn(&R::Elem) -> S::Elem,
    ) -> UniPoly<S::Elem> {
        target.from_coeffs(f.coeffs.iter().map(phi).collect())
    }

    /// Division by a polynomial whose leading coefficient divides every
    /// intermediate leading coefficient; `None` if some step fails or a
    /// remainder is left.
    fn exact_div_poly(&self, a: &UniPoly<R::Elem>, b: &UniPoly<R::Elem>) -> Option<UniPoly<R::Elem>> {
        let db = b.degree()?;
        if a.is_zero() {
            return Some(UniPoly::zero());
        }
        let lb = b.lc()?;
        let mut rem = a.coeffs.clone();
        let da = a.degree()?;
        if da < db {
            return None;
        }
        let mut q = vec![self.base.zero(); da - db + 1];
        for k in (0..=da - db).rev() {
            let top = &rem[k + db];
            if self.base.is_zero(top) {
                continue;
            }
            let c = self.base.exact_div(top, lb)?;
            for (i, bc) in b.coeffs.iter().enumerate() {
                rem[k + i] = self.base.sub(&rem[k + i], &self.base.mul(&c, bc));
            }
            q[k] = c;
        }
        rem.iter().all(|c| self.base.is_zero(c)).then(|| self.from_coeffs(q))
    }
}

impl<R: Ring> Ring for PolyRing<R> {
    type Elem = UniPoly<R::Elem>;

    fn zero(&self) -> Self::Elem {
        UniPoly::zero()
    }
    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let n = a.coeffs.len().max(b.coeffs.len());
        self.from_coeffs(
            (0..n)
                .map(|i| match (a.coeffs.get(i), b.coeffs.get(i)) {
                    (Some(x), Some(y)) => self.base.add(x, y),
                    (Some(x), None) => x.clone(),
                    (None, Some(y)) => y.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        UniPoly {
            coeffs: a.coeffs.iter().map(|c| self.base.neg(c)).collect(),
        }
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_zero() || b.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![self.base.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if self.base.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                out[i + j] = self.base.add(&out[i + j], &self.base.mul(x, y));
            }
        }
        self.from_coeffs(out)
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.constant(self.base.from_i64(n))
    }
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.exact_div_poly(a, b)
    }
}

impl<F: Field> PolyRing<F> {
    /// Quotient and remainder; errors on a zero divisor.
    pub fn divmod(
        &self,
        a: &UniPoly<F::Elem>,
        b: &UniPoly<F::Elem>,
    ) -> Result<(UniPoly<F::Elem>, UniPoly<F::Elem>), AlgebraError> {
        let db = b.degree().ok_or(AlgebraError::DivisionByZero)?;
        let lb_inv = self
            .base
            .inv(b.lc().expect("nonzero"))
            .ok_or(AlgebraError::DivisionByZero)?;
        let da = match a.degree() {
            Some(d) if d >= db => d,
            _ => return Ok((UniPoly::zero(), a.clone())),
        };
        let mut rem = a.coeffs.clone();
        let mut q = vec![self.base.zero(); da - db + 1];
        for k in (0..=da - db).rev() {
            let top = &rem[k + db];
            if self.base.is_zero(top) {
                continue;
            }
            let c = self.base.mul(top, &lb_inv);
            for (i, bc) in b.coeffs.iter().enumerate() {
                rem[k + i] = self.base.sub(&rem[k + i], &self.base.mul(&c, bc));
            }
            q[k] = c;
        }
        rem.truncate(db);
        Ok((self.from_coeffs(q), self.from_coeffs(rem)))
    }

    pub fn rem(&self, a: &UniPoly<F::Elem>, b: &UniPoly<F::Elem>) -> Result<UniPoly<F::Elem>, AlgebraError> {
        Ok(self.divmod(a, b)?.1)
    }

    /// `f / lc(f)`; the zero polynomial is returned unchanged.
    pub fn monic(&self, f: &UniPoly<F::Elem>) -> UniPoly<F::Elem> {
        match f.lc() {
            None => UniPoly::zero(),
            Some(l) => self.scale(f, &self.base.inv(l).expect("nonzero leading coefficient")),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, a: &UniPoly<F::Elem>, b: &UniPoly<F::Elem>) -> UniPoly<F::Elem> {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = self.rem(&a, &b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// `(g, s, t)` with `g = s·a + t·b` monic (or zero when both inputs are zero).
    #[allow(clippy::type_complexity)]
    pub fn xgcd(
        &self,
        a: &UniPoly<F::Elem>,
        b: &UniPoly<F::Elem>,
    ) -> (UniPoly<F::Elem>, UniPoly<F::Elem>, UniPoly<F::Elem>) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.one(), self.zero());
        let (mut t0, mut t1) = (self.zero(), self.one());
        while !r1.is_zero() {
            let (q, r) = self.divmod(&r0, &r1).expect("nonzero divisor");
            let s = self.sub(&s0, &self.mul(&q, &s1));
            let t = self.sub(&t0, &self.mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.lc() {
            None => (r0, s0, t0),
            Some(l) => {
                let li = self.base.inv(l).expect("nonzero");
                (self.scale(&r0, &li), self.scale(&s0, &li), self.scale(&t0, &li))
            }
        }
    }

    pub fn mul_mod(
        &self,
        a: &UniPoly<F::Elem>,
        b: &UniPoly<F::Elem>,
        m: &UniPoly<F::Elem>,
    ) -> UniPoly<F::Elem> {
        self.rem(&self.mul(a, b), m).expect("nonzero modulus")
    }

    /// `aᵉ mod m`.
    pub fn pow_mod(&self, a: &UniPoly<F::Elem>, e: &BigUint, m: &UniPoly<F::Elem>) -> UniPoly<F::Elem> {
        let base = self.rem(a, m).expect("nonzero modulus");
        let mut acc = self.rem(&self.one(), m).expect("nonzero modulus");
        for i in (0..e.bits()).rev() {
            acc = self.mul_mod(&acc, &acc, m);
            if e.bit(i) {
                acc = self.mul_mod(&acc, &base, m);
            }
        }
        acc
    }

    /// The polynomial of degree `< n` through `n` points with distinct abscissae.
    pub fn interpolate(&self, points: &[(F::Elem, F::Elem)]) -> Result<UniPoly<F::Elem>, AlgebraError> {
        // Newton divided differences
        let n = points.len();
        let xs: Vec<&F::Elem> = points.iter().map(|(x, _)| x).collect();
        let mut dd: Vec<F::Elem> = points.iter().map(|(_, y)| y.clone()).collect();
        for level in 1..n {
            for i in (level..n).rev() {
                let num = self.base.sub(&dd[i], &dd[i - 1]);
                let den = self.base.sub(xs[i], xs[i - level]);
                dd[i] = self.base.div(&num, &den).ok_or(AlgebraError::DivisionByZero)?;
            }
        }
        let mut acc = UniPoly::zero();
        for i in (0..n).rev() {
            let lin = self.from_coeffs(vec![self.base.neg(xs[i]), self.base.one()]);
            acc = self.add(&self.mul(&acc, &lin), &self.constant(dd[i].clone()));
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Integers, PrimeField, Rationals};
    use num_rational::BigRational;

    fn q(coeffs: &[i64]) -> UniPoly<BigRational> {
        PolyRing::new(Rationals).from_i64s(coeffs)
    }

    #[test]
    fn small_identities() {
        let r = PolyRing::new(Rationals);
        assert_eq!(r.gcd(&q(&[-1, 0, 1]), &q(&[-1, 1])), q(&[-1, 1]));
        assert_eq!(r.divmod(&q(&[0, 0, 0, 1]), &q(&[0, 0, 1])).unwrap(), (q(&[0, 1]), q(&[])));
        assert_eq!(r.mul(&q(&[1, 1]), &q(&[-1, 1])), q(&[-1, 0, 1]));
        assert_eq!(r.divmod(&q(&[1]), &q(&[])), Err(AlgebraError::DivisionByZero));
    }

    #[test]
    fn trimming_and_degree() {
        let r = PolyRing::new(Integers);
        let f = r.from_i64s(&[1, 2, 0, 0]);
        assert_eq!(f.degree(), Some(1));
        assert_eq!(r.sub(&f, &f).degree(), None);
        assert_eq!(r.derivative(&r.from_i64s(&[5, 0, 3])), r.from_i64s(&[0, 6]));
    }

    #[test]
    fn integer_exact_division() {
        let r = PolyRing::new(Integers);
        let a = r.from_i64s(&[-2, 0, 2]);
        assert_eq!(r.exact_div(&a, &r.from_i64s(&[2, 2])), Some(r.from_i64s(&[-1, 1])));
        assert_eq!(r.exact_div(&a, &r.from_i64s(&[1, 3])), None);
        assert_eq!(r.exact_div(&r.from_i64s(&[1, 2]), &r.from_i64s(&[3])), None);
    }

    #[test]
    fn bezout_mod_p() {
        let f = PrimeField::new(7).unwrap();
        let r = PolyRing::new(f);
        let a = r.from_i64s(&[1, 0, 1, 1]);
        let b = r.from_i64s(&[3, 1, 0, 0, 2]);
        let (g, s, t) = r.xgcd(&a, &b);
        assert_eq!(r.add(&r.mul(&s, &a), &r.mul(&t, &b)), g);
        assert_eq!(g, r.gcd(&a, &b));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let r = PolyRing::new(Rationals);
        let f = q(&[3, -1, 0, 2]);
        let pts: Vec<_> = (0..4)
            .map(|i| {
                let x = Rationals.from_i64(i);
                let y = r.eval(&f, &x);
                (x, y)
            })
            .collect();
        assert_eq!(r.interpolate(&pts).unwrap(), f);
    }

    #[test]
    fn power_mod() {
        let f = PrimeField::new(5).unwrap();
        let r = PolyRing::new(f);
        let m = r.from_i64s(&[2, 0, 1]);
        // x^5 mod (x^2 + 2) = x·(x^2)^2 = x·4
        assert_eq!(r.pow_mod(&r.x(), &BigUint::from(5u32), &m), r.from_i64s(&[0, 4]));
    }
}
