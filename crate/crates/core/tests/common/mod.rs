//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use gql::algebra::Field;
use gql::perm::{Permutation, PermGroup};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every element of the group generated by `gens`, by breadth-first closure.
pub fn closure(degree: usize, gens: &[Permutation]) -> HashSet<Vec<usize>> {
    let id: Vec<usize> = (0..degree).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            // (g∘x)(i) = g(x(i))
            let y: Vec<usize> = x.iter().map(|&i| g.apply(i)).collect();
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

pub fn compose_images(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&i| a[i]).collect()
}

fn inverse_images(a: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; a.len()];
    for (i, &j) in a.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

/// Subgroup generated by a set of elements given as image vectors.
fn generated(degree: usize, elems: &HashSet<Vec<usize>>) -> HashSet<Vec<usize>> {
    let gens: Vec<Permutation> = elems.iter().map(|e| Permutation::from_images(e).unwrap()).collect();
    closure(degree, &gens)
}

/// Solvability by brute-force derived series on the enumerated group.
pub fn brute_solvable(degree: usize, elems: &HashSet<Vec<usize>>) -> bool {
    let mut cur = elems.clone();
    loop {
        if cur.len() == 1 {
            return true;
        }
        let mut comms = HashSet::new();
        for a in &cur {
            for b in &cur {
                let c = compose_images(
                    &compose_images(&inverse_images(a), &inverse_images(b)),
                    &compose_images(a, b),
                );
                comms.insert(c);
            }
        }
        let next = generated(degree, &comms);
        if next.len() == cur.len() {
            return false;
        }
        cur = next;
    }
}

/// Transpositions in an enumerated group, 0-based, sorted.
pub fn brute_transpositions(degree: usize, elems: &HashSet<Vec<usize>>) -> Vec<(usize, usize)> {
    let mut out = BTreeSet::new();
    for e in elems {
        let moved: Vec<usize> = (0..degree).filter(|&i| e[i] != i).collect();
        if moved.len() == 2 {
            out.insert((moved[0], moved[1]));
        }
    }
    out.into_iter().collect()
}

pub fn random_perm<R: Rng>(degree: usize, rng: &mut R) -> Permutation {
    let mut v: Vec<usize> = (0..degree).collect();
    for i in (1..degree).rev() {
        v.swap(i, rng.gen_range(0..=i));
    }
    Permutation::from_images(&v).unwrap()
}

/// A product of 1 to 12 random generators.
pub fn random_word<R: Rng>(gens: &[Permutation], rng: &mut R) -> Permutation {
    let mut w = Permutation::identity(gens[0].degree());
    for _ in 0..rng.gen_range(1..=12) {
        w = w.compose(&gens[rng.gen_range(0..gens.len())]).unwrap();
    }
    w
}

/// Whether `contains` agrees with closure on all transpositions and `words` random words.
pub fn membership_agrees(gens: &[Permutation], words: usize, seed: u64) -> bool {
    let n = gens[0].degree();
    let g = PermGroup::new(gens.to_vec()).unwrap();
    let all = closure(n, gens);
    if all.len() as u64 != g.order() {
        return false;
    }
    for i in 0..n {
        for j in i + 1..n {
            let t = Permutation::transposition(n, i, j);
            if g.contains(&t).unwrap() != all.contains(&t.images()) {
                return false;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..words).all(|_| {
        let w = random_word(gens, &mut rng);
        let r = random_perm(n, &mut rng);
        g.contains(&w).unwrap() && all.contains(&w.images()) && g.contains(&r).unwrap() == all.contains(&r.images())
    })
}

/// Evaluates a dense polynomial at every element of a prime field.
pub fn field_roots<F: Field<Elem = u64>>(field: &F, coeffs: &[u64], p: u64) -> Vec<u64> {
    (0..p)
        .filter(|&a| {
            let v = coeffs.iter().rev().fold(field.zero(), |acc, c| field.add(&field.mul(&acc, &a), c));
            field.is_zero(&v)
        })
        .collect()
}
