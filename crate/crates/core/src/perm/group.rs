use std::collections::VecDeque;

use rand::Rng;

use super::{PermError, Permutation};

/// One level of a stabilizer chain: a base point and the transversal of its
/// orbit under the strong generators fixing all earlier base points.
#[derive(Clone, Debug)]
struct Level {
    base_point: usize,
    /// `transversal[b] = Some(u)` with `u(base_point) = b` for each orbit point `b`.
    transversal: Vec<Option<Permutation>>,
    orbit: Vec<usize>,
}

/// Base and strong generating set, built by deterministic Schreier–Sims.
///
/// Base points are the first moved points of the strong generators, in the
/// order they are needed; sifting is plain coset-representative division.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    strong_gens: Vec<Permutation>,
    levels: Vec<Level>,
}

impl StabChain {
    fn empty(degree: usize) -> Self {
        StabChain {
            degree,
            strong_gens: Vec::new(),
            levels: Vec::new(),
        }
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong_gens
    }

    /// Fundamental orbit lengths, one per base point.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    fn fixes_base_prefix(&self, g: &Permutation, upto: usize) -> bool {
        self.levels[..upto]
            .iter()
            .all(|l| g.apply(l.base_point) == l.base_point)
    }

    fn level_generators(&self, level: usize) -> Vec<&Permutation> {
        self.strong_gens
            .iter()
            .filter(|g| self.fixes_base_prefix(g, level))
            .collect()
    }

    fn rebuild_level(&mut self, level: usize) {
        let beta = self.levels[level].base_point;
        let gens: Vec<Permutation> = self.level_generators(level).into_iter().cloned().collect();
        let mut transversal: Vec<Option<Permutation>> = vec![None; self.degree];
        transversal[beta] = Some(Permutation::identity(self.degree));
        let mut orbit = vec![beta];
        let mut queue = VecDeque::from([beta]);
        while let Some(x) = queue.pop_front() {
            let ux = transversal[x].clone().expect("orbit point has a representative");
            for s in &gens {
                let y = s.apply(x);
                if transversal[y].is_none() {
                    transversal[y] = Some(s.then_unchecked(&ux));
                    orbit.push(y);
                    queue.push_back(y);
                }
            }
        }
        let l = &mut self.levels[level];
        l.transversal = transversal;
        l.orbit = orbit;
    }

    /// Sifts `g` starting at `from`; returns the residue and the level where it stopped
    /// (`levels.len()` if it passed every level).
    fn sift_from(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let b = g.apply(level.base_point);
            match &level.transversal[b] {
                Some(u) => g = u.inverse().then_unchecked(&g),
                None => return (g, i),
            }
        }
        (g, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift_from(g.clone(), 0).0.is_identity()
    }

    /// Appends `g` as a strong generator, creating a new base point when `g`
    /// fixes every current one. Returns the index of the deepest level `g` reaches.
    fn push_generator(&mut self, g: Permutation) -> usize {
        let depth = (0..self.levels.len())
            .find(|&i| g.apply(self.levels[i].base_point) != self.levels[i].base_point)
            .unwrap_or(self.levels.len());
        if depth == self.levels.len() {
            let b = g.first_moved_point().expect("non-identity generator");
            self.levels.push(Level {
                base_point: b,
                transversal: Vec::new(),
                orbit: Vec::new(),
            });
        }
        self.strong_gens.push(g);
        depth
    }

    /// Runs the Schreier–Sims completion loop downward from `start`.
    fn complete_from(&mut self, start: usize) {
        let mut i = start as isize;
        while i >= 0 {
            let level = i as usize;
            self.rebuild_level(level);
            let mut restart = None;
            'search: for &x in &self.levels[level].orbit.clone() {
                let ux = self.levels[level].transversal[x].clone().unwrap();
                for s in self.level_generators(level).into_iter().cloned().collect::<Vec<_>>() {
                    let y = s.apply(x);
                    let uy = self.levels[level].transversal[y].as_ref().unwrap();
                    let schreier = uy.inverse().then_unchecked(&s).then_unchecked(&ux);
                    let (residue, stop) = self.sift_from(schreier, level + 1);
                    if !residue.is_identity() {
                        self.push_generator(residue);
                        for j in level + 1..=stop.min(self.levels.len() - 1) {
                            self.rebuild_level(j);
                        }
                        restart = Some(stop.min(self.levels.len() - 1));
                        break 'search;
                    }
                }
            }
            match restart {
                Some(j) => i = j as isize,
                None => i -= 1,
            }
        }
    }

    /// Adds a generator to a complete chain; returns false if it was already a member.
    fn add_generator(&mut self, g: &Permutation) -> bool {
        let (residue, _) = self.sift_from(g.clone(), 0);
        if residue.is_identity() {
            return false;
        }
        self.push_generator(residue);
        let start = self.levels.len() - 1;
        self.complete_from(start);
        true
    }

    fn order(&self) -> u64 {
        self.levels.iter().map(|l| l.orbit.len() as u64).product()
    }
}

/// A permutation group given by generators, with its stabilizer chain.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabChain,
    order: u64,
}

impl PermGroup {
    /// Builds the group generated by `generators` (which must be nonempty and of
    /// one degree).
    pub fn new(generators: Vec<Permutation>) -> Result<Self, PermError> {
        let degree = generators.first().ok_or(PermError::NoGenerators)?.degree();
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(PermError::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
        let mut chain = StabChain::empty(degree);
        for g in &generators {
            chain.add_generator(g);
        }
        let order = chain.order();
        Ok(PermGroup {
            degree,
            generators,
            chain,
            order,
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(vec![Permutation::identity(degree)]).expect("identity generator")
    }

    pub fn symmetric(degree: usize) -> Self {
        let mut gens = vec![Permutation::long_cycle(degree)];
        if degree > 1 {
            gens.push(Permutation::transposition(degree, 0, 1));
        }
        Self::new(gens).expect("valid generators")
    }

    pub fn cyclic(degree: usize) -> Self {
        Self::new(vec![Permutation::long_cycle(degree)]).expect("valid generator")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn chain(&self) -> &StabChain {
        &self.chain
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool, PermError> {
        if p.degree() != self.degree {
            return Err(PermError::DegreeMismatch {
                expected: self.degree,
                found: p.degree(),
            });
        }
        Ok(self.chain.contains(p))
    }

    /// Orbit of `point` under the generators, in discovery order.
    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut orbit = vec![point];
        let mut k = 0;
        while k < orbit.len() {
            let x = orbit[k];
            for g in &self.generators {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
            k += 1;
        }
        orbit
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(0).len() == self.degree
    }

    /// Extends the group by one more generator, returning the larger group.
    pub fn with_generator(&self, g: &Permutation) -> Result<PermGroup, PermError> {
        if g.degree() != self.degree {
            return Err(PermError::DegreeMismatch {
                expected: self.degree,
                found: g.degree(),
            });
        }
        let mut out = self.clone();
        out.generators.push(g.clone());
        out.chain.add_generator(g);
        out.order = out.chain.order();
        Ok(out)
    }

    /// Uniformly random element, as a product of one transversal entry per level.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for level in self.chain.levels.iter().rev() {
            let b = level.orbit[rng.gen_range(0..level.orbit.len())];
            let u = level.transversal[b].as_ref().unwrap();
            g = u.then_unchecked(&g);
        }
        g
    }

    /// Smallest subgroup of `self` containing `seeds` and normalized by `self`.
    pub fn normal_closure(&self, seeds: &[Permutation]) -> PermGroup {
        let mut closure = PermGroup::trivial(self.degree);
        let mut queue: VecDeque<Permutation> = seeds.iter().cloned().collect();
        while let Some(x) = queue.pop_front() {
            if closure.chain.contains(&x) {
                continue;
            }
            closure = closure.with_generator(&x).expect("same degree");
            for g in &self.generators {
                queue.push_back(x.conjugate_by(g));
            }
        }
        closure
    }

    /// Commutator subgroup `[G, G]`.
    pub fn derived_subgroup(&self) -> PermGroup {
        let mut commutators = Vec::new();
        for a in &self.generators {
            for b in &self.generators {
                // a⁻¹ b⁻¹ a b
                let c = a
                    .inverse()
                    .then_unchecked(&b.inverse())
                    .then_unchecked(a)
                    .then_unchecked(b);
                if !c.is_identity() {
                    commutators.push(c);
                }
            }
        }
        self.normal_closure(&commutators)
    }

    /// Orders along the derived series, stopping at the trivial group or at the
    /// first repeat.
    pub fn derived_series_orders(&self) -> Vec<u64> {
        let mut orders = vec![self.order];
        let mut current = self.clone();
        while !current.is_trivial() {
            let next = current.derived_subgroup();
            if next.order == current.order {
                break;
            }
            orders.push(next.order);
            current = next;
        }
        orders
    }

    pub fn is_solvable(&self) -> bool {
        *self.derived_series_orders().last().unwrap() == 1
    }

    /// True when every generator of `sub` lies in `self`.
    pub fn contains_group(&self, sub: &PermGroup) -> bool {
        sub.degree == self.degree && sub.generators.iter().all(|h| self.chain.contains(h))
    }

    /// Whether `sub` is normal in `self`; errors when it is not a subgroup.
    pub fn is_normal(&self, sub: &PermGroup) -> Result<bool, PermError> {
        if sub.degree != self.degree {
            return Err(PermError::DegreeMismatch {
                expected: self.degree,
                found: sub.degree,
            });
        }
        if !self.contains_group(sub) {
            return Err(PermError::NotSubgroup);
        }
        Ok(self
            .generators
            .iter()
            .all(|g| sub.generators.iter().all(|h| sub.chain.contains(&h.conjugate_by(g)))))
    }

    /// Whether every power of `sigma` lies in the group.
    pub fn contains_cyclic(&self, sigma: &Permutation) -> Result<bool, PermError> {
        self.contains(sigma)?;
        let mut power = sigma.clone();
        for _ in 0..sigma.order() {
            if !self.chain.contains(&power) {
                return Ok(false);
            }
            power = power.then_unchecked(sigma);
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(gens: &[&str], n: usize) -> PermGroup {
        PermGroup::new(gens.iter().map(|g| Permutation::parse(g, n).unwrap()).collect()).unwrap()
    }

    #[test]
    fn small_orders() {
        assert_eq!(group(&["(1 2)", "(1 2 3)"], 3).order(), 6);
        assert_eq!(group(&["(1 2 3 4)"], 4).order(), 4);
        assert_eq!(group(&["(1 2 3 4)", "(1 3)"], 4).order(), 8);
        assert_eq!(PermGroup::symmetric(8).order(), 40320);
        assert_eq!(PermGroup::symmetric(16).order(), 20_922_789_888_000);
        assert_eq!(PermGroup::trivial(5).order(), 1);
    }

    #[test]
    fn membership_examples() {
        let c4 = group(&["(1 2 3 4)"], 4);
        assert!(c4.contains(&Permutation::parse("(1 3)(2 4)", 4).unwrap()).unwrap());
        let c3 = group(&["(1 2 3)"], 3);
        assert!(!c3.contains(&Permutation::parse("(1 2)", 3).unwrap()).unwrap());
        assert!(c3.contains(&Permutation::identity(3)).unwrap());
        assert!(c3.contains(&Permutation::identity(4)).is_err());
    }

    #[test]
    fn empty_and_mismatched_generators() {
        assert_eq!(PermGroup::new(vec![]).unwrap_err(), PermError::NoGenerators);
        let e = PermGroup::new(vec![Permutation::identity(3), Permutation::identity(4)]);
        assert!(matches!(e, Err(PermError::DegreeMismatch { .. })));
    }

    #[test]
    fn transitivity() {
        assert!(group(&["(1 2 3 4)"], 4).is_transitive());
        assert!(!group(&["(1 2)"], 3).is_transitive());
        assert!(!group(&["(1 2)", "(3 4)"], 4).is_transitive());
        assert!(PermGroup::trivial(1).is_transitive());
    }

    #[test]
    fn solvability() {
        assert!(PermGroup::symmetric(4).is_solvable());
        assert_eq!(PermGroup::symmetric(4).derived_series_orders(), vec![24, 12, 4, 1]);
        assert!(!PermGroup::symmetric(5).is_solvable());
        assert_eq!(PermGroup::symmetric(5).derived_series_orders(), vec![120, 60]);
        assert!(PermGroup::trivial(3).is_solvable());
    }

    #[test]
    fn normality() {
        let d4 = group(&["(1 2 3 4)", "(1 3)"], 4);
        let h = group(&["(1 3)", "(2 4)"], 4);
        assert!(d4.is_normal(&h).unwrap());
        let s3 = PermGroup::symmetric(3);
        assert!(!s3.is_normal(&group(&["(1 2)"], 3)).unwrap());
        assert!(d4.is_normal(&PermGroup::trivial(4)).unwrap());
        let c4 = group(&["(1 2 3 4)"], 4);
        assert_eq!(c4.is_normal(&h), Err(PermError::NotSubgroup));
    }

    #[test]
    fn cyclic_containment_examples() {
        let d4 = group(&["(1 2 3 4)", "(1 3)"], 4);
        assert!(d4.contains_cyclic(&Permutation::parse("(1 2 3 4)", 4).unwrap()).unwrap());
        let c4 = group(&["(1 2 3 4)"], 4);
        assert!(!c4.contains_cyclic(&Permutation::parse("(1 2)", 4).unwrap()).unwrap());
        assert!(c4.contains_cyclic(&Permutation::identity(4)).unwrap());
    }

    #[test]
    fn chain_invariants_hold() {
        let g = group(&["(1 2 3 4 5 6 7 8)", "(1 3)(2 6)"], 8);
        let product: u64 = g.chain().orbit_lengths().iter().map(|&l| l as u64).product();
        assert_eq!(product, g.order());
        for s in g.generators() {
            assert!(g.chain().contains(s));
        }
        assert_eq!(40320 % g.order(), 0);
    }
}
