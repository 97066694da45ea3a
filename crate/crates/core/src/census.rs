//! Batch verification of the transposition lemmas over a fixture list of
//! transitive groups.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify::classify_quotient;
use crate::perm::{
    quotient_on_blocks, restrict_to_block, transposition_partition, transposition_subgroup, transpositions_per_point,
    GroupSpec, PermError, PermGroup,
};

/// The bundled fixtures: every transitive group of degree at most 8.
pub const BUNDLED_FIXTURES: &str = include_str!("../data/transitive_groups.json");

/// Genera scanned when checking the classifier threshold.
pub const GENUS_RANGE: std::ops::RangeInclusive<u64> = 0..=12;

#[derive(Debug, Error)]
pub enum CensusError {
    #[error("invalid fixtures: {0}")]
    Parse(#[from] serde_json::Error),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fixture {
    pub label: String,
    #[serde(default)]
    pub name: String,
    pub degree: usize,
    /// Expected order, checked when present.
    #[serde(default)]
    pub order: Option<u64>,
    /// Expected solvability, checked when present.
    #[serde(default)]
    pub solvable: Option<bool>,
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureFile {
    #[serde(default)]
    pub source: Option<String>,
    pub groups: Vec<Fixture>,
}

/// Accepts either `{"groups": [...]}` or a bare list.
pub fn load_fixtures(text: &str) -> Result<Vec<Fixture>, CensusError> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Either {
        File(FixtureFile),
        List(Vec<Fixture>),
    }
    Ok(match serde_json::from_str(text)? {
        Either::File(f) => f.groups,
        Either::List(l) => l,
    })
}

pub fn bundled_fixtures() -> Vec<Fixture> {
    load_fixtures(BUNDLED_FIXTURES).expect("bundled fixtures parse")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaChecks {
    /// `(m + 1) | n`.
    pub divisibility: bool,
    /// Every equivalence block has `m + 1` points.
    pub block_sizes: bool,
    /// Every point is moved by exactly `m` transpositions.
    pub m_point_independent: bool,
    /// `|H| = ((m + 1)!)^{n′}`.
    pub h_order: bool,
    /// `H` restricted to each block is the full symmetric group.
    pub block_restrictions: bool,
    pub normality: bool,
    /// `|G| = |H| · |G/H|`, with `G/H` acting on the blocks.
    pub quotient_order_product: bool,
    /// `m + 1 ≤ 4` when `G` is solvable.
    pub solvable_bound: bool,
    /// Computed order and solvability agree with the fixture's.
    pub fixture_data: bool,
}

impl LemmaChecks {
    pub fn all(&self) -> bool {
        self.divisibility
            && self.block_sizes
            && self.m_point_independent
            && self.h_order
            && self.block_restrictions
            && self.normality
            && self.quotient_order_product
            && self.solvable_bound
            && self.fixture_data
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassifierSummary {
    pub threshold_genus: u64,
    /// `general type ⇔ g > m + 1` for every genus scanned.
    pub threshold_consistent: bool,
    /// Once general type, general type for every larger genus scanned.
    pub monotone: bool,
    pub general_type_at_genus_5: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRecord {
    pub label: String,
    pub name: String,
    pub degree: usize,
    pub order: Option<u64>,
    pub transitive: bool,
    pub solvable: Option<bool>,
    pub m: Option<usize>,
    pub n_prime: Option<usize>,
    pub h_order: Option<u64>,
    pub quotient_order: Option<u64>,
    pub checks: Option<LemmaChecks>,
    pub classifier: Option<ClassifierSummary>,
    pub passed: bool,
    pub error: Option<String>,
}

fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

struct Analysis {
    m: usize,
    n_prime: usize,
    h_order: u64,
    quotient_order: u64,
    checks: LemmaChecks,
    classifier: ClassifierSummary,
}

fn analyze(f: &Fixture, g: &PermGroup) -> Result<Analysis, PermError> {
    let n = g.degree();
    let per_point = transpositions_per_point(g);
    let m = per_point[0];
    let partition = transposition_partition(g)?;
    let h = transposition_subgroup(g)?;
    let action = quotient_on_blocks(g, &partition)?;
    let n_prime = partition.len();
    let mut block_restrictions = true;
    for block in partition.blocks() {
        block_restrictions &= restrict_to_block(&h, block)?.order() == factorial(block.len());
    }
    let solvable = g.is_solvable();
    let checks = LemmaChecks {
        divisibility: n.is_multiple_of(m + 1),
        block_sizes: partition.blocks().iter().all(|b| b.len() == m + 1),
        m_point_independent: per_point.iter().all(|&k| k == m),
        h_order: h.order() == factorial(m + 1).pow(n_prime as u32),
        block_restrictions,
        normality: g.is_normal(&h)?,
        quotient_order_product: g.order() == h.order() * action.image.order(),
        solvable_bound: !solvable || m < 4,
        fixture_data: f.order.is_none_or(|o| o == g.order()) && f.solvable.is_none_or(|s| s == solvable),
    };
    let reports = GENUS_RANGE
        .map(|genus| classify_quotient(g, genus))
        .collect::<Result<Vec<_>, _>>()?;
    let classifier = ClassifierSummary {
        threshold_genus: m as u64 + 2,
        threshold_consistent: reports.iter().all(|r| r.is_general_type == (r.genus > m as u64 + 1)),
        monotone: reports.windows(2).all(|w| !w[0].is_general_type || w[1].is_general_type),
        general_type_at_genus_5: reports[5].is_general_type,
    };
    Ok(Analysis {
        m,
        n_prime,
        h_order: h.order(),
        quotient_order: action.image.order(),
        checks,
        classifier,
    })
}

/// Runs every check on one fixture. Failures are recorded, not raised.
pub fn census_record(f: &Fixture) -> CensusRecord {
    let mut rec = CensusRecord {
        label: f.label.clone(),
        name: f.name.clone(),
        degree: f.degree,
        order: None,
        transitive: false,
        solvable: None,
        m: None,
        n_prime: None,
        h_order: None,
        quotient_order: None,
        checks: None,
        classifier: None,
        passed: false,
        error: None,
    };
    let spec = GroupSpec {
        degree: f.degree,
        generators: f.generators.clone(),
    };
    let g = match spec.build() {
        Ok(g) => g,
        Err(e) => {
            rec.error = Some(e.to_string());
            return rec;
        }
    };
    rec.order = Some(g.order());
    rec.transitive = g.is_transitive();
    rec.solvable = Some(g.is_solvable());
    if !rec.transitive {
        rec.error = Some(PermError::NotTransitive.to_string());
        return rec;
    }
    match analyze(f, &g) {
        Ok(a) => {
            rec.passed = a.checks.all() && a.classifier.threshold_consistent && a.classifier.monotone;
            rec.m = Some(a.m);
            rec.n_prime = Some(a.n_prime);
            rec.h_order = Some(a.h_order);
            rec.quotient_order = Some(a.quotient_order);
            rec.checks = Some(a.checks);
            rec.classifier = Some(a.classifier);
        }
        Err(e) => rec.error = Some(e.to_string()),
    }
    rec
}

/// One record per fixture, in input order.
pub fn census(fixtures: &[Fixture]) -> Vec<CensusRecord> {
    fixtures.par_iter().map(census_record).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_census_passes() {
        let fixtures = bundled_fixtures();
        assert!(fixtures.iter().any(|f| f.degree == 8));
        let records = census(&fixtures);
        let failed: Vec<_> = records.iter().filter(|r| !r.passed).map(|r| &r.label).collect();
        assert!(failed.is_empty(), "{failed:?}");
        let labels: Vec<_> = records.iter().map(|r| &r.label).collect();
        let expected: Vec<_> = fixtures.iter().map(|f| &f.label).collect();
        assert_eq!(labels, expected);
    }

    #[test]
    fn dihedral_record() {
        let f = Fixture {
            label: "4T3".into(),
            name: "D(4)".into(),
            degree: 4,
            order: Some(8),
            solvable: Some(true),
            generators: vec!["(1 2 3 4)".into(), "(1 3)".into()],
        };
        let r = census_record(&f);
        assert!(r.passed);
        assert_eq!((r.m, r.n_prime, r.h_order, r.quotient_order), (Some(1), Some(2), Some(4), Some(2)));
    }

    #[test]
    fn corrupted_fixtures_are_flagged() {
        let text = r#"[{"label": "bad", "degree": 3, "generators": ["(1 2)"]},
                       {"label": "wrong order", "degree": 3, "order": 5, "generators": ["(1 2 3)"]},
                       {"label": "garbled", "degree": 3, "generators": ["(1 2"]}]"#;
        let records = census(&load_fixtures(text).unwrap());
        assert!(records.iter().all(|r| !r.passed));
        assert!(!records[0].transitive);
        assert!(!records[1].checks.as_ref().unwrap().fixture_data);
        assert!(records[2].error.is_some());
    }

    #[test]
    fn empty_list() {
        assert!(census(&load_fixtures("[]").unwrap()).is_empty());
        assert!(census(&load_fixtures(r#"{"groups": []}"#).unwrap()).is_empty());
    }
}
