//! Minimal doubly resolving sets, and a pair that a smaller set fails on.

use resolvedim::{
    all_pairs_distances, doubly_resolves, gen_cayley_zn, gen_jellyfish, is_doubly_resolving_set,
    min_doubly_resolving_set, VertexSet,
};

fn main() -> resolvedim::Result<()> {
    let g = gen_jellyfish(3, 2)?;
    let dm = all_pairs_distances(&g)?;
    let r = min_doubly_resolving_set(&g, &dm)?;
    println!("JFG(3,2): psi = {} with {}", r.value, r.witness);

    // Dropping leaf 8 leaves it indistinguishable from its support 2.
    let short = VertexSet::new(vec![3, 4, 5, 6, 7])?;
    println!("  {short} doubly resolving: {}", is_doubly_resolving_set(&g, &dm, &short)?);
    let fails = (3..8)
        .flat_map(|x| (3..8).map(move |y| (x, y)))
        .all(|(x, y)| !doubly_resolves(&dm, x, y, 2, 8));
    println!("  no pair in it separates 2 and 8: {fails}");

    for n in [8, 10, 12] {
        let g = gen_cayley_zn(n, n / 2 - 1)?;
        let dm = all_pairs_distances(&g)?;
        let r = min_doubly_resolving_set(&g, &dm)?;
        println!("Cay(Z_{n}, S_{}): psi = {} with {}", n / 2 - 1, r.value, r.witness);
    }
    Ok(())
}
