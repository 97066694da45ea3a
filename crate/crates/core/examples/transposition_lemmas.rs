//! The transposition structure of a transitive group: blocks, the subgroup H
//! generated by transpositions, and the action of G on the blocks.

use gql::perm::{
    quotient_on_blocks, transposition_count_m, transposition_partition, transposition_subgroup, transpositions,
    parse_generator_list, PermGroup,
};

fn main() {
    // the wreath product S2 ≀ S3 acting on 6 points
    let g = PermGroup::new(parse_generator_list("(1 2),(1 3 5)(2 4 6),(1 3)(2 4)", 6).unwrap()).unwrap();
    println!("|G| = {}, transitive = {}, solvable = {}", g.order(), g.is_transitive(), g.is_solvable());

    let pairs: Vec<String> = transpositions(&g).iter().map(|(i, j)| format!("({} {})", i + 1, j + 1)).collect();
    println!("transpositions: {}", pairs.join(" "));

    let m = transposition_count_m(&g).unwrap();
    let blocks = transposition_partition(&g).unwrap();
    let shown: Vec<Vec<usize>> = blocks.blocks().iter().map(|b| b.iter().map(|p| p + 1).collect()).collect();
    println!("m = {m}, blocks = {shown:?}");

    let h = transposition_subgroup(&g).unwrap();
    println!("|H| = {}, normal = {}", h.order(), g.is_normal(&h).unwrap());

    let q = quotient_on_blocks(&g, &blocks).unwrap();
    println!("|G/H| = {} acting on {} blocks", q.image.order(), blocks.len());
    assert_eq!(g.order(), h.order() * q.image.order());
}
