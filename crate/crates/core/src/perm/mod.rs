//! Permutations, permutation groups via Schreier–Sims, and the transposition
//! structure of transitive groups.

mod group;
mod lemmas;
mod permutation;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use group::{PermGroup, StabChain};
pub use lemmas::{
    quotient_on_blocks, restrict_to_block, transposition_count_m, transposition_partition,
    transposition_subgroup, transpositions, transpositions_per_point, BlockAction, Partition,
};
pub use permutation::{max_point_mentioned, parse_generator_list, Permutation, MAX_DEGREE};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("point {0} repeated in cycle notation")]
    RepeatedPoint(usize),
    #[error("point {point} exceeds degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("degree {0} exceeds the maximum of {MAX_DEGREE}")]
    DegreeTooLarge(usize),
    #[error("image list is not a bijection")]
    NotBijective,
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("a group needs at least one generator")]
    NoGenerators,
    #[error("group is not transitive")]
    NotTransitive,
    #[error("subgroup is not contained in the group")]
    NotSubgroup,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("generator {generator} does not permute the blocks")]
    PartitionNotInvariant { generator: usize },
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

/// JSON form of a group: `{ "degree": n, "generators": ["(1 2 3)", …] }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub degree: usize,
    pub generators: Vec<String>,
}

impl GroupSpec {
    pub fn build(&self) -> Result<PermGroup, PermError> {
        if self.degree == 0 {
            return Err(PermError::Parse("degree must be at least 1".into()));
        }
        let gens = self
            .generators
            .iter()
            .map(|g| Permutation::parse(g, self.degree))
            .collect::<Result<Vec<_>, _>>()?;
        if gens.is_empty() {
            return Ok(PermGroup::trivial(self.degree));
        }
        PermGroup::new(gens)
    }

    pub fn from_group(g: &PermGroup) -> Self {
        GroupSpec {
            degree: g.degree(),
            generators: g.generators().iter().map(|p| p.to_string()).collect(),
        }
    }
}
