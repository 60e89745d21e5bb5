//! Metric dimension of jellyfish graphs, with the representation vectors
//! of the basis that was found.

use resolvedim::{all_pairs_distances, gen_jellyfish, metric_representation, min_resolving_set};

fn main() -> resolvedim::Result<()> {
    for (n, m) in [(3, 2), (4, 2), (3, 3), (5, 3)] {
        let g = gen_jellyfish(n, m)?;
        let dm = all_pairs_distances(&g)?;
        let r = min_resolving_set(&g, &dm)?;
        println!(
            "JFG({n},{m}): beta = {} (nm - n = {}), basis {}, {} candidates",
            r.value,
            n * m - n,
            r.witness,
            r.nodes_explored
        );
    }

    let g = gen_jellyfish(3, 2)?;
    let dm = all_pairs_distances(&g)?;
    let basis = min_resolving_set(&g, &dm)?.witness;
    for v in 0..g.vertex_count() {
        println!("  r({:>4} | W) = {:?}", g.label(v), metric_representation(&dm, v, &basis).0);
    }
    Ok(())
}
