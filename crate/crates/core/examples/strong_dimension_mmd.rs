//! Strong metric dimension two ways: subset search and vertex cover of
//! the mutually maximally distant pairs.

use resolvedim::solvers::mmd_pairs;
use resolvedim::{all_pairs_distances, min_strong_resolving_set, min_strong_resolving_via_mmd, FamilySpec};

fn main() -> resolvedim::Result<()> {
    for text in ["jfg:3,2", "jfg:4,2", "jfg:3,3", "cp:5", "cycle:7", "cayley-zn:10,4"] {
        let g: resolvedim::Graph = text.parse::<FamilySpec>()?.build()?;
        let dm = all_pairs_distances(&g)?;
        let pairs = mmd_pairs(&g, &dm);
        let search = min_strong_resolving_set(&g, &dm)?;
        let cover = min_strong_resolving_via_mmd(&g, &dm)?;
        println!(
            "{text:<15} mmd pairs={:<3} search sdim={} ({} sets)  cover sdim={} ({} nodes) {}",
            pairs.len(),
            search.value,
            search.nodes_explored,
            cover.value,
            cover.nodes_explored,
            cover.witness
        );
        assert_eq!(search.value, cover.value);
    }
    Ok(())
}
