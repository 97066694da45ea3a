//! Factoring over prime fields and their extensions, and one-sided
//! irreducibility certificates over the rationals.

use gql::algebra::{
    certify_irreducible_over_q, factor, find_irreducible, primes_after, roots, zpoly, ExtField, PolyRing,
    PrimeField, Ring,
};

fn main() {
    // x^9 - x over F_3 is the product of all monic irreducibles of degree 1 and 2
    let f3 = PrimeField::new(3).unwrap();
    let r3 = PolyRing::new(f3);
    let f = r3.sub(&r3.monomial(1, 9), &r3.x());
    for (g, e) in factor(&r3, &f, 0).unwrap() {
        println!("F_3: factor {:?} ^ {e}", g.coeffs());
    }

    let fp = PrimeField::new(7).unwrap();

    let gf = ExtField::new(fp, find_irreducible(&fp, 2, 0).unwrap()).unwrap();
    let rx = PolyRing::new(gf.clone());
    // x^2 + 1 splits over F_49
    let g = rx.from_coeffs(vec![gf.one(), gf.zero(), gf.one()]);
    let rs = roots(&rx, &g, 0).unwrap();
    println!("roots of x^2 + 1 in F_49: {:?}", rs.iter().map(|(a, _)| a.coeffs().to_vec()).collect::<Vec<_>>());

    let primes: Vec<u64> = primes_after(2).take(20).collect();
    for coeffs in [&[-2i64, 0, 0, 1][..], &[1, 0, 0, 0, 1], &[-1, 0, 0, 0, 1]] {
        let f = zpoly(coeffs);
        println!("{:?}: {:?}", coeffs, certify_irreducible_over_q(&f, &primes).unwrap());
    }
}
