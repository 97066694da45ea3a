//! Squarefree decomposition and factorization over finite fields
//! (distinct-degree, then equal-degree splitting).

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::poly::{PolyRing, UniPoly};
use super::prime_field::PrimeField;
use super::ring::{FiniteField, Field, Ring};
use super::AlgebraError;

fn is_unit<E>(f: &UniPoly<E>) -> bool {
    f.degree() == Some(0)
}

fn exact_quo<F: Field>(r: &PolyRing<F>, a: &UniPoly<F::Elem>, b: &UniPoly<F::Elem>) -> UniPoly<F::Elem> {
    let (q, rem) = r.divmod(a, b).expect("nonzero divisor");
    debug_assert!(rem.is_zero());
    q
}

/// `g` with `g(x)^p = f(x)` when `f' = 0` in characteristic `p`.
fn poly_pth_root<F: Field>(r: &PolyRing<F>, f: &UniPoly<F::Elem>) -> Option<UniPoly<F::Elem>> {
    let p = r.base().characteristic() as usize;
    if p == 0 {
        return None;
    }
    let coeffs = f
        .coeffs()
        .iter()
        .step_by(p)
        .map(|c| r.base().pth_root(c))
        .collect::<Option<Vec<_>>>()?;
    Some(r.from_coeffs(coeffs))
}

/// `[(g_i, i)]` with `f = lc · ∏ g_iⁱ`, each `g_i` monic squarefree, pairwise
/// coprime and nonconstant, sorted by multiplicity.
pub fn squarefree_decomposition<F: Field>(
    r: &PolyRing<F>,
    f: &UniPoly<F::Elem>,
) -> Result<Vec<(UniPoly<F::Elem>, usize)>, AlgebraError> {
    if f.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let mut raw = Vec::new();
    sqf_rec(r, &r.monic(f), 1, &mut raw);
    // merge factors sharing a multiplicity
    raw.sort_by_key(|(_, e)| *e);
    let mut out: Vec<(UniPoly<F::Elem>, usize)> = Vec::new();
    for (g, e) in raw {
        match out.last_mut() {
            Some((h, e2)) if *e2 == e => *h = r.mul(h, &g),
            _ => out.push((g, e)),
        }
    }
    Ok(out)
}

fn sqf_rec<F: Field>(r: &PolyRing<F>, f: &UniPoly<F::Elem>, scale: usize, out: &mut Vec<(UniPoly<F::Elem>, usize)>) {
    if f.deg0() == 0 {
        return;
    }
    let d = r.derivative(f);
    if d.is_zero() {
        let g = poly_pth_root(r, f).expect("f' = 0 only in positive characteristic");
        let p = r.base().characteristic() as usize;
        sqf_rec(r, &g, scale * p, out);
        return;
    }
    let mut c = r.gcd(f, &d);
    let mut w = exact_quo(r, f, &c);
    let mut i = 1;
    while w.deg0() > 0 {
        let y = r.gcd(&w, &c);
        let z = exact_quo(r, &w, &y);
        if z.deg0() > 0 {
            out.push((z, i * scale));
        }
        i += 1;
        c = exact_quo(r, &c, &y);
        w = y;
    }
    if c.deg0() > 0 {
        let g = poly_pth_root(r, &c).expect("remaining cofactor is a p-th power");
        let p = r.base().characteristic() as usize;
        sqf_rec(r, &g, scale * p, out);
    }
}

/// Product of the distinct monic irreducible factors of `f`.
pub fn squarefree_part<F: Field>(r: &PolyRing<F>, f: &UniPoly<F::Elem>) -> Result<UniPoly<F::Elem>, AlgebraError> {
    Ok(squarefree_decomposition(r, f)?
        .into_iter()
        .fold(r.one(), |acc, (g, _)| r.mul(&acc, &g)))
}

pub fn is_squarefree<F: Field>(r: &PolyRing<F>, f: &UniPoly<F::Elem>) -> bool {
    !f.is_zero() && r.gcd(f, &r.derivative(f)).deg0() == 0
}

/// Distinct-degree factorization of a monic squarefree `f`:
/// `[(g_d, d)]` where `g_d` is the product of the degree-`d` irreducible factors.
pub fn distinct_degree<F: FiniteField>(
    r: &PolyRing<F>,
    f: &UniPoly<F::Elem>,
) -> Vec<(UniPoly<F::Elem>, usize)> {
    let q = r.base().order();
    let x = r.x();
    let mut rest = r.monic(f);
    let mut h = r.rem(&x, &rest).expect("nonzero");
    let mut out = Vec::new();
    let mut d = 1;
    while rest.deg0() >= 2 * d {
        h = r.pow_mod(&h, &q, &rest);
        let g = r.gcd(&rest, &r.sub(&h, &x));
        if !is_unit(&g) {
            rest = exact_quo(r, &rest, &g);
            h = r.rem(&h, &rest).expect("nonzero");
            out.push((g, d));
        }
        d += 1;
    }
    if rest.deg0() > 0 {
        let d = rest.deg0();
        out.push((rest, d));
    }
    out
}

/// Splits a monic squarefree `f` whose irreducible factors all have degree `d`.
pub fn equal_degree<F: FiniteField>(
    r: &PolyRing<F>,
    f: &UniPoly<F::Elem>,
    d: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<UniPoly<F::Elem>> {
    let n = f.deg0();
    if n == d {
        return vec![r.monic(f)];
    }
    let field = r.base();
    let q = field.order();
    let char2 = field.characteristic() == 2;
    let exponent = if char2 {
        BigUint::zero()
    } else {
        (q.pow(d as u32) - BigUint::one()) >> 1u32
    };
    let trace_len = field.absolute_degree() * d;
    loop {
        let a = r.from_coeffs((0..n).map(|_| field.random_elem(rng)).collect());
        if a.deg0() == 0 {
            continue;
        }
        let b = if char2 {
            let mut t = a.clone();
            let mut s = a.clone();
            for _ in 1..trace_len {
                t = r.mul_mod(&t, &t, f);
                s = r.add(&s, &t);
            }
            s
        } else {
            r.sub(&r.pow_mod(&a, &exponent, f), &r.one())
        };
        let g = r.gcd(f, &b);
        if g.deg0() > 0 && g.deg0() < n {
            let h = exact_quo(r, f, &g);
            let mut out = equal_degree(r, &g, d, rng);
            out.extend(equal_degree(r, &h, d, rng));
            return out;
        }
    }
}

/// Complete factorization into monic irreducibles with multiplicities, sorted
/// by (multiplicity, degree). The leading coefficient is dropped.
pub fn factor<F: FiniteField>(
    r: &PolyRing<F>,
    f: &UniPoly<F::Elem>,
    seed: u64,
) -> Result<Vec<(UniPoly<F::Elem>, usize)>, AlgebraError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for (g, e) in squarefree_decomposition(r, f)? {
        let mut parts: Vec<UniPoly<F::Elem>> = Vec::new();
        for (h, d) in distinct_degree(r, &g) {
            parts.extend(equal_degree(r, &h, d, &mut rng));
        }
        parts.sort_by_key(|p| p.deg0());
        out.extend(parts.into_iter().map(|p| (p, e)));
    }
    Ok(out)
}

/// Degrees of the irreducible factors of a squarefree `f`, ascending.
pub fn degree_pattern<F: FiniteField>(r: &PolyRing<F>, f: &UniPoly<F::Elem>) -> Result<Vec<usize>, AlgebraError> {
    if f.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    if !is_squarefree(r, f) {
        return Err(AlgebraError::NotSquarefree);
    }
    let mut pattern = Vec::new();
    for (g, d) in distinct_degree(r, f) {
        pattern.extend(std::iter::repeat_n(d, g.deg0() / d));
    }
    pattern.sort_unstable();
    Ok(pattern)
}

/// Roots of `f` in the field, with multiplicities.
pub fn roots<F: FiniteField>(
    r: &PolyRing<F>,
    f: &UniPoly<F::Elem>,
    seed: u64,
) -> Result<Vec<(F::Elem, usize)>, AlgebraError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = r.base().order();
    let x = r.x();
    let mut out = Vec::new();
    for (g, e) in squarefree_decomposition(r, f)? {
        let frob = r.pow_mod(&x, &q, &g);
        let linear = r.gcd(&g, &r.sub(&frob, &x));
        if linear.deg0() == 0 {
            continue;
        }
        for l in equal_degree(r, &linear, 1, &mut rng) {
            out.push((r.base().neg(&r.coeff(&l, 0)), e));
        }
    }
    Ok(out)
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's test: `f` of degree `n` is irreducible iff `x^{qⁿ} ≡ x` and
/// `gcd(f, x^{q^{n/r}} − x) = 1` for each prime `r | n`.
pub fn is_irreducible<F: FiniteField>(field: &F, f: &UniPoly<F::Elem>) -> bool {
    let n = match f.degree() {
        Some(n) if n >= 1 => n,
        _ => return false,
    };
    let r = PolyRing::new(field.clone());
    let f = r.monic(f);
    let q = field.order();
    let x = r.rem(&r.x(), &f).expect("nonzero");
    let divisors: Vec<usize> = prime_divisors(n).into_iter().map(|p| n / p).collect();
    let mut h = x.clone();
    for i in 1..=n {
        h = r.pow_mod(&h, &q, &f);
        if divisors.contains(&i) && !is_unit(&r.gcd(&f, &r.sub(&h, &x))) {
            return false;
        }
    }
    h == x
}

/// A monic irreducible of degree `k` over `F_p`, by scanning monic candidates
/// whose lower coefficients are the base-`p` digits of a counter. Seed 0 starts
/// the counter at 0; other seeds start at a seeded random position.
pub fn find_irreducible(field: &PrimeField, k: usize, seed: u64) -> Result<UniPoly<u64>, AlgebraError> {
    if k == 0 {
        return Err(AlgebraError::DegreeTooSmall);
    }
    let p = field.p();
    let r = PolyRing::new(*field);
    let mut digits: Vec<u64> = if seed == 0 {
        vec![0; k]
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..k).map(|_| rng.gen_range(0..p)).collect()
    };
    loop {
        let mut coeffs = digits.clone();
        coeffs.push(1);
        let cand = r.from_coeffs(coeffs);
        if is_irreducible(field, &cand) {
            return Ok(cand);
        }
        // increment the counter, wrapping around
        for d in digits.iter_mut() {
            *d += 1;
            if *d < p {
                break;
            }
            *d = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ExtField, Rationals};

    fn fp(p: u64) -> PolyRing<PrimeField> {
        PolyRing::new(PrimeField::new(p).unwrap())
    }

    #[test]
    fn squarefree_over_q() {
        let r = PolyRing::new(Rationals);
        // (x − 1)²(x + 1)
        let f = r.from_i64s(&[1, -1, -1, 1]);
        assert_eq!(squarefree_part(&r, &f).unwrap(), r.from_i64s(&[-1, 0, 1]));
        let dec = squarefree_decomposition(&r, &f).unwrap();
        assert_eq!(dec, vec![(r.from_i64s(&[1, 1]), 1), (r.from_i64s(&[-1, 1]), 2)]);
        assert_eq!(squarefree_part(&r, &r.from_i64s(&[2, 0, 2])).unwrap(), r.from_i64s(&[1, 0, 1]));
    }

    #[test]
    fn squarefree_pth_power() {
        let r = fp(5);
        // x^5 − 3 = (x − 3)^5 mod 5 since 3^5 ≡ 3
        let f = r.from_i64s(&[-3, 0, 0, 0, 0, 1]);
        assert_eq!(squarefree_decomposition(&r, &f).unwrap(), vec![(r.from_i64s(&[-3, 1]), 5)]);
        // x^10 (x+1)^2 mixes both branches
        let g = r.mul(&r.monomial(1, 10), &r.from_i64s(&[1, 2, 1]));
        let dec = squarefree_decomposition(&r, &g).unwrap();
        assert_eq!(dec, vec![(r.from_i64s(&[1, 1]), 2), (r.x(), 10)]);
    }

    #[test]
    fn small_factorizations() {
        let r = fp(5);
        let f = factor(&r, &r.from_i64s(&[1, 0, 1]), 0).unwrap();
        let mut lin: Vec<_> = f.iter().map(|(g, _)| g.coeffs()[0]).collect();
        lin.sort();
        assert_eq!(lin, vec![2, 3]);
        assert_eq!(degree_pattern(&r, &r.from_i64s(&[1, 0, 0, 0, 1])).unwrap(), vec![2, 2]);
        assert_eq!(degree_pattern(&fp(3), &fp(3).from_i64s(&[1, 0, 1])).unwrap(), vec![2]);
        assert_eq!(factor(&r, &r.from_i64s(&[0, -1, 0, 1]), 3).unwrap().len(), 3);
        assert_eq!(degree_pattern(&r, &r.from_i64s(&[1, 2, 1])), Err(AlgebraError::NotSquarefree));
    }

    #[test]
    fn char_two_splitting() {
        let r = fp(2);
        // x^4 + x = x (x + 1)(x^2 + x + 1)
        let f = factor(&r, &r.from_i64s(&[0, 1, 0, 0, 1]), 1).unwrap();
        let degs: Vec<_> = f.iter().map(|(g, _)| g.deg0()).collect();
        assert_eq!(degs, vec![1, 1, 2]);
        // x^15 − 1 over F_2: 1 + 1 + 2 + 4 + 4 + 4 … pattern {1, 2, 4, 4, 4}
        let mut c = vec![0i64; 16];
        c[0] = 1;
        c[15] = 1;
        assert_eq!(degree_pattern(&r, &r.from_i64s(&c)).unwrap(), vec![1, 2, 4, 4, 4]);
    }

    #[test]
    fn roots_in_f9() {
        let f3 = PrimeField::new(3).unwrap();
        let r3 = fp(3);
        assert!(roots(&r3, &r3.from_i64s(&[1, 0, 1]), 0).unwrap().is_empty());
        let f9 = ExtField::new(f3, find_irreducible(&f3, 2, 0).unwrap()).unwrap();
        let r9 = PolyRing::new(f9.clone());
        let g = r9.from_i64s(&[1, 0, 1]);
        let rts = roots(&r9, &g, 0).unwrap();
        assert_eq!(rts.len(), 2);
        for (a, e) in rts {
            assert_eq!(e, 1);
            assert!(f9.is_zero(&r9.eval(&g, &a)));
        }
        // (x − 2)^3 over F_3 (a p-th power)
        let cube = r3.from_i64s(&[-8, 12, -6, 1]);
        assert_eq!(roots(&r3, &cube, 0).unwrap(), vec![(2, 3)]);
    }

    #[test]
    fn irreducible_search() {
        let f3 = PrimeField::new(3).unwrap();
        assert_eq!(find_irreducible(&f3, 1, 0).unwrap(), fp(3).x());
        assert_eq!(find_irreducible(&f3, 2, 0).unwrap(), fp(3).from_i64s(&[1, 0, 1]));
        let f5 = PrimeField::new(5).unwrap();
        let m = find_irreducible(&f5, 4, 0).unwrap();
        assert_eq!(m.deg0(), 4);
        assert_eq!(degree_pattern(&fp(5), &m).unwrap(), vec![4]);
        assert_eq!(find_irreducible(&f5, 4, 9).unwrap(), find_irreducible(&f5, 4, 9).unwrap());
    }

    #[test]
    fn rabin_rejects_products() {
        let f7 = PrimeField::new(7).unwrap();
        let r = fp(7);
        // (x^2 + 1)(x^2 + x + 3): no roots but reducible
        let f = r.mul(&r.from_i64s(&[1, 0, 1]), &r.from_i64s(&[3, 1, 1]));
        assert!(!is_irreducible(&f7, &f));
        assert!(is_irreducible(&f7, &r.from_i64s(&[1, 0, 1])));
    }
}
