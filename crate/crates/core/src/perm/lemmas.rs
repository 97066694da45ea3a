//! Transposition structure of transitive groups.
//!
//! For a transitive `G ≤ S_n`, the relation `i ∼ j ⇔ i = j or (i j) ∈ G` is an
//! equivalence relation whose classes all have size `m + 1`, where `m` is the
//! number of transpositions moving a fixed point. The transpositions generate
//! `H ≅ S_{m+1}^{n/(m+1)}`, normal in `G`, and `G/H` embeds in `S_{n/(m+1)}`
//! through the action on the classes.

use serde::Serialize;

use super::{PermError, PermGroup, Permutation};

/// A set partition of `{0, …, n−1}`; blocks sorted internally and by least element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    /// Builds a partition, checking that blocks are nonempty, disjoint and cover `0..n`.
    pub fn new(degree: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self, PermError> {
        let mut seen = vec![false; degree];
        for b in &mut blocks {
            if b.is_empty() {
                return Err(PermError::InvalidPartition("empty block".into()));
            }
            b.sort_unstable();
            for &p in b.iter() {
                if p >= degree || seen[p] {
                    return Err(PermError::InvalidPartition(format!(
                        "point {} repeated or out of range",
                        p + 1
                    )));
                }
                seen[p] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(PermError::InvalidPartition("blocks do not cover all points".into()));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(Partition { blocks })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Index of the block holding each point.
    pub fn block_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.degree()];
        for (k, b) in self.blocks.iter().enumerate() {
            for &p in b {
                idx[p] = k;
            }
        }
        idx
    }
}

/// All pairs `(i, j)`, `i < j`, with `(i j) ∈ G`, in lexicographic order.
pub fn transpositions(g: &PermGroup) -> Vec<(usize, usize)> {
    let n = g.degree();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if g.chain().contains(&Permutation::transposition(n, i, j)) {
                out.push((i, j));
            }
        }
    }
    out
}

fn require_transitive(g: &PermGroup) -> Result<(), PermError> {
    if g.is_transitive() {
        Ok(())
    } else {
        Err(PermError::NotTransitive)
    }
}

/// Number of transpositions of `G` moving each point, indexed by point.
pub fn transpositions_per_point(g: &PermGroup) -> Vec<usize> {
    let mut counts = vec![0; g.degree()];
    for (i, j) in transpositions(g) {
        counts[i] += 1;
        counts[j] += 1;
    }
    counts
}

/// `m`: the number of transpositions in `G` moving point 0.
///
/// Also checks that every other point is moved by the same number of
/// transpositions, which transitivity forces.
pub fn transposition_count_m(g: &PermGroup) -> Result<usize, PermError> {
    require_transitive(g)?;
    let counts = transpositions_per_point(g);
    let m = counts[0];
    if let Some(p) = counts.iter().position(|&c| c != m) {
        return Err(PermError::InvariantViolation(format!(
            "point 1 lies in {m} transpositions but point {} lies in {}",
            p + 1,
            counts[p]
        )));
    }
    Ok(m)
}

/// Classes of `i ∼ j ⇔ i = j or (i j) ∈ G`, by union–find over the transpositions.
pub fn transposition_partition(g: &PermGroup) -> Result<Partition, PermError> {
    require_transitive(g)?;
    let n = g.degree();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (i, j) in transpositions(g) {
        let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
        if ri != rj {
            parent[ri.max(rj)] = ri.min(rj);
        }
    }
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); n];
    for p in 0..n {
        let r = find(&mut parent, p);
        blocks[r].push(p);
    }
    blocks.retain(|b| !b.is_empty());
    let size = blocks[0].len();
    if blocks.iter().any(|b| b.len() != size) {
        return Err(PermError::InvariantViolation(format!(
            "transposition classes of unequal sizes {:?}",
            blocks.iter().map(Vec::len).collect::<Vec<_>>()
        )));
    }
    Partition::new(n, blocks)
}

/// `H`: the subgroup generated by all transpositions of `G` (trivial if there are none).
pub fn transposition_subgroup(g: &PermGroup) -> Result<PermGroup, PermError> {
    require_transitive(g)?;
    let n = g.degree();
    let gens: Vec<Permutation> = transpositions(g)
        .into_iter()
        .map(|(i, j)| Permutation::transposition(n, i, j))
        .collect();
    if gens.is_empty() {
        Ok(PermGroup::trivial(n))
    } else {
        PermGroup::new(gens)
    }
}

/// Action of `G` on the blocks of a `G`-invariant partition.
#[derive(Clone, Debug)]
pub struct BlockAction {
    /// The image group inside `S_{n′}`, `n′` = number of blocks.
    pub image: PermGroup,
    /// Induced permutation of block indices for each generator of `G`, in order.
    pub generator_images: Vec<Permutation>,
}

/// Induced action of `G` on the blocks of `partition` (blocks indexed by least element).
pub fn quotient_on_blocks(g: &PermGroup, partition: &Partition) -> Result<BlockAction, PermError> {
    if partition.degree() != g.degree() {
        return Err(PermError::DegreeMismatch {
            expected: g.degree(),
            found: partition.degree(),
        });
    }
    let idx = partition.block_index();
    let k = partition.len();
    let mut generator_images = Vec::with_capacity(g.generators().len());
    for (gi, s) in g.generators().iter().enumerate() {
        let mut images = vec![0; k];
        for (b, block) in partition.blocks().iter().enumerate() {
            let target = idx[s.apply(block[0])];
            if block.iter().any(|&p| idx[s.apply(p)] != target) {
                return Err(PermError::PartitionNotInvariant { generator: gi });
            }
            images[b] = target;
        }
        generator_images.push(Permutation::from_images(&images)?);
    }
    let image = PermGroup::new(generator_images.clone())?;
    Ok(BlockAction {
        image,
        generator_images,
    })
}

/// Restriction of `h` to the points of `block`, relabelled `0..block.len()`.
/// `h` must stabilize the block setwise.
pub fn restrict_to_block(h: &PermGroup, block: &[usize]) -> Result<PermGroup, PermError> {
    let mut local = vec![usize::MAX; h.degree()];
    for (k, &p) in block.iter().enumerate() {
        local[p] = k;
    }
    let mut gens = Vec::new();
    for (gi, s) in h.generators().iter().enumerate() {
        let mut images = Vec::with_capacity(block.len());
        for &p in block {
            let q = local[s.apply(p)];
            if q == usize::MAX {
                return Err(PermError::PartitionNotInvariant { generator: gi });
            }
            images.push(q);
        }
        gens.push(Permutation::from_images(&images)?);
    }
    PermGroup::new(gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(gens: &[&str], n: usize) -> PermGroup {
        PermGroup::new(gens.iter().map(|g| Permutation::parse(g, n).unwrap()).collect()).unwrap()
    }

    fn d4() -> PermGroup {
        group(&["(1 2 3 4)", "(1 3)"], 4)
    }

    #[test]
    fn transposition_lists() {
        assert_eq!(transpositions(&d4()), vec![(0, 2), (1, 3)]);
        assert!(transpositions(&group(&["(1 2 3)"], 3)).is_empty());
        assert_eq!(transpositions(&PermGroup::symmetric(4)).len(), 6);
    }

    #[test]
    fn m_values() {
        assert_eq!(transposition_count_m(&PermGroup::symmetric(4)).unwrap(), 3);
        assert_eq!(transposition_count_m(&d4()).unwrap(), 1);
        assert_eq!(transposition_count_m(&PermGroup::cyclic(4)).unwrap(), 0);
        assert_eq!(
            transposition_count_m(&group(&["(1 2)"], 3)),
            Err(PermError::NotTransitive)
        );
    }

    #[test]
    fn partitions() {
        let p = transposition_partition(&d4()).unwrap();
        assert_eq!(p.blocks(), &[vec![0, 2], vec![1, 3]]);
        let p = transposition_partition(&PermGroup::symmetric(4)).unwrap();
        assert_eq!(p.blocks(), &[vec![0, 1, 2, 3]]);
        let p = transposition_partition(&PermGroup::cyclic(4)).unwrap();
        assert_eq!(p.len(), 4);
    }

    #[test]
    fn subgroups_h() {
        let h = transposition_subgroup(&d4()).unwrap();
        assert_eq!(h.order(), 4);
        assert!(h.contains(&Permutation::parse("(1 3)(2 4)", 4).unwrap()).unwrap());
        assert_eq!(transposition_subgroup(&PermGroup::symmetric(4)).unwrap().order(), 24);
        assert!(transposition_subgroup(&PermGroup::cyclic(4)).unwrap().is_trivial());
    }

    #[test]
    fn block_quotients() {
        let g = d4();
        let q = quotient_on_blocks(&g, &transposition_partition(&g).unwrap()).unwrap();
        assert_eq!(q.image.order(), 2);
        assert_eq!(q.generator_images[0].to_string(), "(1 2)");
        assert!(q.generator_images[1].is_identity());

        let s4 = PermGroup::symmetric(4);
        let q = quotient_on_blocks(&s4, &transposition_partition(&s4).unwrap()).unwrap();
        assert_eq!(q.image.order(), 1);

        let c4 = PermGroup::cyclic(4);
        let q = quotient_on_blocks(&c4, &transposition_partition(&c4).unwrap()).unwrap();
        assert_eq!(q.image.order(), 4);
    }

    #[test]
    fn non_invariant_partition_rejected() {
        let p = Partition::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(
            quotient_on_blocks(&d4(), &p).unwrap_err(),
            PermError::PartitionNotInvariant { generator: 0 }
        );
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(3, vec![vec![0, 1]]).is_err());
        assert!(Partition::new(3, vec![vec![0, 1], vec![1, 2]]).is_err());
        assert!(Partition::new(3, vec![vec![2, 0], vec![1]]).is_ok());
    }

    #[test]
    fn block_restriction_is_full_symmetric() {
        let g = d4();
        let h = transposition_subgroup(&g).unwrap();
        for b in transposition_partition(&g).unwrap().blocks() {
            assert_eq!(restrict_to_block(&h, b).unwrap().order(), 2);
        }
    }
}
