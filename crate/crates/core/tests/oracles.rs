//! Library results against independent brute-force computations.

mod common;

use std::collections::BTreeSet;

use common::{brute_solvable, brute_transpositions, closure, membership_agrees};
use gql::algebra::{resultant, resultant_euclid, PolyRing, PrimeField, Ring};
use gql::census::bundled_fixtures;
use gql::perm::{parse_generator_list, transpositions, GroupSpec, Permutation, PermGroup};
use gql::quartic::{
    check_prime, find_chart, flexes_in_chart, residuals, splitting_degree, GfPoint, PlaneCurve,
};

fn group(cycles: &str, n: usize) -> (Vec<Permutation>, PermGroup) {
    let gens = parse_generator_list(cycles, n).unwrap();
    (gens.clone(), PermGroup::new(gens).unwrap())
}

#[test]
fn dihedral_group_by_enumeration() {
    let (gens, g) = group("(1 2 3 4),(1 3)", 4);
    let all = closure(4, &gens);
    assert_eq!(all.len(), 8);
    assert_eq!(g.order(), 8);
    assert_eq!(transpositions(&g), brute_transpositions(4, &all));
    assert_eq!(transpositions(&g), vec![(0, 2), (1, 3)]);
}

#[test]
fn cyclic_membership_by_enumeration() {
    let (gens, g) = group("(1 2 3 4)", 4);
    let all = closure(4, &gens);
    let p = Permutation::parse("(1 3)(2 4)", 4).unwrap();
    assert!(all.contains(&p.images()));
    assert!(g.contains(&p).unwrap());
    let (_, c3) = group("(1 2 3)", 3);
    assert!(!c3.contains(&Permutation::parse("(1 2)", 3).unwrap()).unwrap());
}

#[test]
fn fixtures_against_closure() {
    for f in bundled_fixtures() {
        let g = GroupSpec {
            degree: f.degree,
            generators: f.generators.clone(),
        }
        .build()
        .unwrap();
        if g.order() > 5040 {
            continue;
        }
        let all = closure(f.degree, g.generators());
        assert_eq!(all.len() as u64, g.order(), "{}", f.label);
        assert_eq!(transpositions(&g), brute_transpositions(f.degree, &all), "{}", f.label);
        if g.order() <= 1000 {
            assert_eq!(g.is_solvable(), brute_solvable(f.degree, &all), "{}", f.label);
        }
        assert!(membership_agrees(g.generators(), 20, 1), "{}", f.label);
    }
}

#[test]
fn symmetric_groups_solvability() {
    for (n, solvable) in [(3, true), (4, true), (5, false)] {
        let g = PermGroup::symmetric(n);
        let all = closure(n, g.generators());
        assert_eq!(brute_solvable(n, &all), solvable);
        assert_eq!(g.is_solvable(), solvable);
    }
}

/// `lc(g)^{deg f} ∏_{g(β)=0} f(β)` for `g` split with known roots.
#[test]
fn resultant_against_root_products() {
    let k = PrimeField::new(101).unwrap();
    let r = PolyRing::new(k);
    let f = r.from_i64s(&[3, -1, 4, 1, -5, 9]);
    for (lc, betas) in [(1, vec![2u64, 7, 7]), (5, vec![0, 100]), (3, vec![11, 12, 13, 14])] {
        let g = betas
            .iter()
            .fold(r.constant(lc), |acc, &b| r.mul(&acc, &r.from_coeffs(vec![k.neg(&b), 1])));
        let expected = betas
            .iter()
            .fold(k.pow(&lc, f.deg0() as u64), |acc, b| k.mul(&acc, &r.eval(&f, b)));
        assert_eq!(resultant(&r, &f, &g).unwrap(), expected);
        assert_eq!(resultant_euclid(&r, &f, &g).unwrap(), expected);
    }
}

/// Contact order of the line `P + sQ` with the curve, by interpolating
/// `s ↦ C(P + sQ)` from five values.
fn contact_and_poly(k: &PrimeField, form: &gql::algebra::MultiPoly<u64>, p: &[u64; 3], q: &[u64; 3]) -> Vec<u64> {
    let r = PolyRing::new(*k);
    let pts: Vec<(u64, u64)> = (0..5u64)
        .map(|s| {
            let v = [0, 1, 2].map(|i| k.add(&p[i], &k.mul(&s, &q[i])));
            (s, gql::quartic::eval_form(k, form, &v))
        })
        .collect();
    let poly = r.interpolate(&pts).unwrap();
    (0..5).map(|i| r.coeff(&poly, i)).collect()
}

fn normalize(k: &PrimeField, v: [u64; 3]) -> Option<[u64; 3]> {
    let j = (0..3).rev().find(|&i| v[i] != 0)?;
    let inv = gql::algebra::Field::inv(k, &v[j]).unwrap();
    Some(v.map(|c| k.mul(&c, &inv)))
}

/// Flexes over `F_p` and their residuals found by scanning all of `P²(F_p)`.
fn brute_flexes(curve: &PlaneCurve, p: u64) -> BTreeSet<([u64; 3], usize, [u64; 3])> {
    let k = PrimeField::new(p).unwrap();
    let form = curve.form_over(&k);
    let grad: Vec<_> = (0..3).map(|i| form.partial(&k, i)).collect();
    let mut points = Vec::new();
    for a in 0..p {
        for b in 0..p {
            points.push([a, b, 1]);
        }
        points.push([a, 1, 0]);
    }
    points.push([1, 0, 0]);
    let mut out = BTreeSet::new();
    for v in points {
        if gql::quartic::eval_form(&k, &form, &v) != 0 {
            continue;
        }
        let l = [0, 1, 2].map(|i| gql::quartic::eval_form(&k, &grad[i], &v));
        // a second point on the tangent line
        let q = [[l[1], k.neg(&l[0]), 0], [0, l[2], k.neg(&l[1])], [l[2], 0, k.neg(&l[0])]]
            .into_iter()
            .find(|q| normalize(&k, *q).is_some_and(|q| Some(q) != normalize(&k, v)))
            .unwrap();
        let e = contact_and_poly(&k, &form, &v, &q);
        let contact = e.iter().position(|&c| c != 0).unwrap();
        if contact < 3 {
            continue;
        }
        // the other F_p-points of the curve on the tangent line
        let others: Vec<[u64; 3]> = (0..p)
            .map(|s| [0, 1, 2].map(|i| k.add(&v[i], &k.mul(&s, &q[i]))))
            .chain([q])
            .filter(|w| gql::quartic::eval_form(&k, &form, w) == 0)
            .filter_map(|w| normalize(&k, w))
            .filter(|w| *w != v)
            .collect();
        let residual = match others.as_slice() {
            [] => v,
            [w] => *w,
            _ => panic!("a flex tangent meets the quartic in at most one other point"),
        };
        out.insert((v, contact, residual));
    }
    out
}

fn as_base(p: &GfPoint) -> [u64; 3] {
    p.coords().clone().map(|c| c.coeffs().first().copied().unwrap_or(0))
}

fn compare_with_brute_force(curve: &PlaneCurve, p: u64) {
    let chart = find_chart(curve, 0).unwrap();
    check_prime(&chart, p).unwrap();
    let set = flexes_in_chart(curve, &chart, p, Some(1), 0).unwrap();
    assert!(set.is_complete());
    let data = residuals(curve, &set).unwrap();
    let ours: BTreeSet<_> = data
        .iter()
        .map(|d| (as_base(&d.flex.point), d.contact, as_base(&d.residual)))
        .collect();
    assert_eq!(ours, brute_flexes(curve, p));
}

#[test]
fn fermat_flexes_by_scanning_the_plane() {
    // 113 ≡ 1 mod 8: every hyperflex is rational
    compare_with_brute_force(&PlaneCurve::fermat_quartic(), 113);
}

#[test]
fn klein_flexes_by_scanning_the_plane() {
    let c = PlaneCurve::klein_quartic();
    let chart = find_chart(&c, 0).unwrap();
    let p = gql::quartic::good_primes(&chart)
        .take_while(|&p| p < 2000)
        .find(|&p| splitting_degree(&chart, p).unwrap() == 1)
        .expect("a completely split good prime below 2000");
    compare_with_brute_force(&c, p);
}
