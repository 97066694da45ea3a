//! Checks the transposition lemmas on every transitive group of degree at most 8.

use gql::census::{bundled_fixtures, census};

fn main() {
    let fixtures = bundled_fixtures();
    let start = std::time::Instant::now();
    let records = census(&fixtures);
    let mut by_m = std::collections::BTreeMap::<usize, usize>::new();
    for r in &records {
        if let Some(m) = r.m {
            *by_m.entry(m).or_default() += 1;
        }
        if !r.passed {
            println!("FAILED {}: {:?}", r.label, r.error);
        }
    }
    let passed = records.iter().filter(|r| r.passed).count();
    println!("{passed}/{} groups pass in {:.2?}", records.len(), start.elapsed());
    for (m, count) in by_m {
        println!("  m = {m}: {count} groups");
    }
    let solvable_max = records.iter().filter(|r| r.solvable == Some(true)).filter_map(|r| r.m).max();
    println!("largest m among solvable groups: {solvable_max:?}");
}
