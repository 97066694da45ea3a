//! Riemann–Hurwitz arithmetic for covers of the projective line.

use gql::cover::{genus_from_cover, ramification_degree};

fn main() {
    println!("triple cover of P^1 by genus 3: R = {}", ramification_degree(3, 3, 0).unwrap());
    for r in [8, 10] {
        println!("double cover of P^1 branched at {r} points: genus {}", genus_from_cover(2, 0, r).unwrap());
    }
    match genus_from_cover(2, 0, 7) {
        Ok(g) => println!("unexpected genus {g}"),
        Err(e) => println!("R = 7: {e}"),
    }
    println!("\nR for covers of P^1 (rows: degree, columns: source genus 0..=6)");
    for d in 1..=6u64 {
        let row: Vec<String> = (0..=6u64)
            .map(|g| ramification_degree(d, g, 0).map_or("-".into(), |r| r.to_string()))
            .collect();
        println!("d = {d}: {}", row.join("\t"));
    }
}
