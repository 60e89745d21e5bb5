//! Adjacency dimension, which needs no distances and accepts
//! disconnected graphs.

use resolvedim::{
    adjacency_representation, all_pairs_distances, gen_cocktail_party, gen_jellyfish,
    min_adjacency_resolving_set, min_resolving_set, Graph,
};

fn main() -> resolvedim::Result<()> {
    for (n, m) in [(3, 2), (4, 2), (3, 3)] {
        let g = gen_jellyfish(n, m)?;
        let r = min_adjacency_resolving_set(&g)?;
        println!("JFG({n},{m}): adjdim = {} with {}", r.value, r.witness);
    }

    // On diameter-2 graphs adjacency and metric dimension agree.
    let cp = gen_cocktail_party(4)?;
    let dm = all_pairs_distances(&cp)?;
    println!(
        "CP(4): adjdim = {}, beta = {}",
        min_adjacency_resolving_set(&cp)?.value,
        min_resolving_set(&cp, &dm)?.value
    );

    let split = Graph::new(6, [(0, 1), (1, 2), (3, 4)])?;
    let r = min_adjacency_resolving_set(&split)?;
    println!("P3 + K2 + K1: adjdim = {} with {}", r.value, r.witness);
    for v in 0..split.vertex_count() {
        println!("  a({v} | W) = {:?}", adjacency_representation(&split, v, &r.witness).0);
    }
    Ok(())
}
