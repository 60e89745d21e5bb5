//! The circulant and dihedral realizations of the cocktail party graph.

use resolvedim::{are_isomorphic, gen_cayley_dihedral, gen_cayley_zn, gen_cocktail_party, iso::find_isomorphism};

fn main() -> resolvedim::Result<()> {
    for n in [8, 10, 12, 14, 16] {
        let zn = gen_cayley_zn(n, n / 2 - 1)?;
        let cp = gen_cocktail_party(n / 2)?;
        println!("Cay(Z_{n}, S_{}) ~ CP({}): {}", n / 2 - 1, n / 2, are_isomorphic(&zn, &cp)?);
    }
    for n in 2..=8 {
        let d = gen_cayley_dihedral(n)?;
        let cp = gen_cocktail_party(n)?;
        println!("Cay(D_{}, Omega) ~ CP({n}): {}", 2 * n, are_isomorphic(&d, &cp)?);
    }

    let d = gen_cayley_dihedral(3)?;
    let cp = gen_cocktail_party(3)?;
    if let Some(map) = find_isomorphism(&d, &cp)? {
        for (v, image) in map.iter().enumerate() {
            println!("  {:>4} -> {image}", d.label(v));
        }
    }
    // Same degree sequence, different graph.
    let c6 = resolvedim::gen_cycle(6)?;
    let two_triangles = resolvedim::Graph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])?;
    println!("C6 ~ 2K3: {}", are_isomorphic(&c6, &two_triangles)?);
    Ok(())
}
