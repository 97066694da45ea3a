//! Is `Cⁿ/G` of general type? Runs the criterion on a few groups and genera.

use gql::classify::{classify_quotient, sym_power_kind};
use gql::perm::{parse_generator_list, PermGroup};

fn group(cycles: &str, degree: usize) -> PermGroup {
    PermGroup::new(parse_generator_list(cycles, degree).unwrap()).unwrap()
}

fn main() {
    let cases = [
        ("S2", group("(1 2)", 2), 2),
        ("S4", group("(1 2 3 4),(1 2)", 4), 3),
        ("D4", group("(1 2 3 4),(1 3)", 4), 5),
        ("C5", group("(1 2 3 4 5)", 5), 2),
    ];
    for (name, g, genus) in cases {
        let r = classify_quotient(&g, genus).unwrap();
        println!(
            "{name:>3} on C^{}: m = {}, g = {genus}, general type = {} (threshold g >= {})",
            r.n, r.m, r.is_general_type, r.threshold_genus
        );
        for a in &r.advisories {
            println!("      [{}] {}", a.tag, a.text);
        }
    }
    for n in 2..=4 {
        println!("Sym^{n} of a genus-3 curve: {:?}", sym_power_kind(3, n));
    }
}
