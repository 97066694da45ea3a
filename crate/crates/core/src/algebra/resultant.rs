//! Determinants, resultants and subresultant coefficients.
//!
//! Sign convention: `Res(f, g) = lc(g)^{deg f} · ∏_{g(β)=0} f(β)`, so that
//! `Res(x − a, x − b) = b − a`. This is the determinant of the Sylvester matrix
//! with the shifts of `f` as the first rows and columns in ascending powers.

use super::poly::{PolyRing, UniPoly};
use super::ring::{Field, Ring};
use super::AlgebraError;

/// Determinant by fraction-free Bareiss elimination. Needs an integral domain
/// in which `exact_div` succeeds on exact quotients.
pub fn determinant<R: Ring>(ring: &R, mut m: Vec<Vec<R::Elem>>) -> R::Elem {
    let n = m.len();
    if n == 0 {
        return ring.one();
    }
    let mut sign_flip = false;
    let mut prev = ring.one();
    for k in 0..n - 1 {
        if ring.is_zero(&m[k][k]) {
            match (k + 1..n).find(|&r| !ring.is_zero(&m[r][k])) {
                Some(r) => {
                    m.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return ring.zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = ring.sub(&ring.mul(&m[i][j], &m[k][k]), &ring.mul(&m[i][k], &m[k][j]));
                m[i][j] = ring.exact_div(&t, &prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign_flip {
        ring.neg(&d)
    } else {
        d
    }
}

/// Sylvester matrix: `deg g` rows of shifted `f`, then `deg f` rows of shifted `g`,
/// columns indexed by ascending powers.
pub fn sylvester_matrix<R: Ring>(
    ring: &PolyRing<R>,
    f: &UniPoly<R::Elem>,
    g: &UniPoly<R::Elem>,
) -> Vec<Vec<R::Elem>> {
    let (m, n) = (f.deg0(), g.deg0());
    let size = m + n;
    let base = ring.base();
    let mut rows = Vec::with_capacity(size);
    for (p, shifts) in [(f, n), (g, m)] {
        for s in 0..shifts {
            let mut row = vec![base.zero(); size];
            for (i, c) in p.coeffs().iter().enumerate() {
                row[s + i] = c.clone();
            }
            rows.push(row);
        }
    }
    rows
}

/// `Res(f, g)` as a Sylvester determinant (fraction-free).
pub fn resultant<R: Ring>(
    ring: &PolyRing<R>,
    f: &UniPoly<R::Elem>,
    g: &UniPoly<R::Elem>,
) -> Result<R::Elem, AlgebraError> {
    if f.is_zero() || g.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    Ok(determinant(ring.base(), sylvester_matrix(ring, f, g)))
}

/// `Res(f, g)` by the Euclidean remainder sequence, same convention as [`resultant`].
pub fn resultant_euclid<F: Field>(
    ring: &PolyRing<F>,
    f: &UniPoly<F::Elem>,
    g: &UniPoly<F::Elem>,
) -> Result<F::Elem, AlgebraError> {
    if f.is_zero() || g.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let k = ring.base();
    let (m, n) = (f.deg0(), g.deg0());
    let std = standard_resultant(ring, f.clone(), g.clone());
    Ok(if (m * n) % 2 == 1 { k.neg(&std) } else { std })
}

// lc(a)^{deg b} · ∏_{a(α)=0} b(α)
fn standard_resultant<F: Field>(ring: &PolyRing<F>, mut a: UniPoly<F::Elem>, mut b: UniPoly<F::Elem>) -> F::Elem {
    let k = ring.base();
    let mut acc = k.one();
    loop {
        let (m, n) = (a.deg0(), b.deg0());
        if n == 0 {
            return k.mul(&acc, &k.pow(b.lc().expect("nonzero"), m as u64));
        }
        if m == 0 {
            return k.mul(&acc, &k.pow(a.lc().expect("nonzero"), n as u64));
        }
        if (m * n) % 2 == 1 {
            acc = k.neg(&acc);
        }
        // now Res(b, a) = lc(b)^{m − deg r} Res(b, r) with r = a mod b
        let r = ring.rem(&a, &b).expect("nonzero divisor");
        if r.is_zero() {
            return k.zero();
        }
        acc = k.mul(&acc, &k.pow(b.lc().expect("nonzero"), (m - r.deg0()) as u64));
        a = b;
        b = r;
    }
}

/// Coefficients `s_0, …, s_j` of the `j`-th subresultant of `a` and `b`
/// (`deg a ≥ deg b > j`), from determinants of the descending Sylvester layout.
pub fn subresultant_coeffs<R: Ring>(
    ring: &PolyRing<R>,
    a: &UniPoly<R::Elem>,
    b: &UniPoly<R::Elem>,
    j: usize,
) -> Result<Vec<R::Elem>, AlgebraError> {
    let (m, n) = match (a.degree(), b.degree()) {
        (Some(m), Some(n)) if m >= n && n > j => (m, n),
        (None, _) | (_, None) => return Err(AlgebraError::ZeroPolynomial),
        _ => return Err(AlgebraError::DegreeTooSmall),
    };
    let base = ring.base();
    let width = m + n - j;
    // row for xᵏ·p, columns = powers width−1 … 0
    let row = |p: &UniPoly<R::Elem>, k: usize| -> Vec<R::Elem> {
        (0..width)
            .map(|c| {
                let power = width - 1 - c;
                power
                    .checked_sub(k)
                    .and_then(|e| p.coeff(e).cloned())
                    .unwrap_or_else(|| base.zero())
            })
            .collect()
    };
    let mut rows = Vec::new();
    for k in (0..n - j).rev() {
        rows.push(row(a, k));
    }
    for k in (0..m - j).rev() {
        rows.push(row(b, k));
    }
    let lead = m + n - 2 * j - 1;
    Ok((0..=j)
        .map(|i| {
            let col = width - 1 - i;
            let mat = rows
                .iter()
                .map(|r| {
                    let mut v: Vec<R::Elem> = r[..lead].to_vec();
                    v.push(r[col].clone());
                    v
                })
                .collect();
            determinant(base, mat)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Integers, PrimeField, Rationals};
    use num_bigint::BigInt;

    #[test]
    fn convention_on_linear_factors() {
        let z = PolyRing::new(Integers);
        // Res(x − 2, x − 7) = 7 − 2
        let r = resultant(&z, &z.from_i64s(&[-2, 1]), &z.from_i64s(&[-7, 1])).unwrap();
        assert_eq!(r, BigInt::from(5));
        let q = PolyRing::new(Rationals);
        let r = resultant_euclid(&q, &q.from_i64s(&[-2, 1]), &q.from_i64s(&[-7, 1])).unwrap();
        assert_eq!(r, Rationals.from_i64(5));
    }

    #[test]
    fn known_values() {
        let z = PolyRing::new(Integers);
        assert_eq!(
            resultant(&z, &z.from_i64s(&[1, 0, 1]), &z.from_i64s(&[-2, 0, 1])).unwrap(),
            BigInt::from(9)
        );
        assert_eq!(
            resultant(&z, &z.from_i64s(&[-1, 0, 1]), &z.from_i64s(&[-1, 1])).unwrap(),
            BigInt::from(0)
        );
        assert_eq!(resultant(&z, &z.from_i64s(&[]), &z.from_i64s(&[1])), Err(AlgebraError::ZeroPolynomial));
    }

    #[test]
    fn constants() {
        let z = PolyRing::new(Integers);
        assert_eq!(resultant(&z, &z.from_i64s(&[3]), &z.from_i64s(&[1, 2, 1])).unwrap(), BigInt::from(9));
        assert_eq!(resultant(&z, &z.from_i64s(&[1, 1]), &z.from_i64s(&[5])).unwrap(), BigInt::from(5));
    }

    #[test]
    fn routes_agree_mod_p() {
        let f = PrimeField::new(101).unwrap();
        let r = PolyRing::new(f);
        let a = r.from_i64s(&[3, 0, 5, 1, 7]);
        let b = r.from_i64s(&[1, 9, 2, 4]);
        assert_eq!(resultant(&r, &a, &b).unwrap(), resultant_euclid(&r, &a, &b).unwrap());
        assert_eq!(resultant(&r, &b, &a).unwrap(), resultant_euclid(&r, &b, &a).unwrap());
    }

    #[test]
    fn first_subresultant_gives_common_root() {
        // a = (x − 2)(x² + 1), b = (x − 2)(x + 5): S₁ is proportional to x − 2
        let z = PolyRing::new(Integers);
        let a = z.from_i64s(&[-2, 1, -2, 1]);
        let b = z.from_i64s(&[-10, 3, 1]);
        let s = subresultant_coeffs(&z, &a, &b, 1).unwrap();
        assert!(!s[1].eq(&BigInt::from(0)));
        assert_eq!(&s[0] + &s[1] * BigInt::from(2), BigInt::from(0));
    }

    #[test]
    fn determinant_needs_pivoting() {
        let m = vec![
            vec![BigInt::from(0), BigInt::from(1)],
            vec![BigInt::from(1), BigInt::from(0)],
        ];
        assert_eq!(determinant(&Integers, m), BigInt::from(-1));
    }
}
