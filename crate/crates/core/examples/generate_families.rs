//! Builds one instance of every family and prints its basic shape.

use resolvedim::{all_pairs_distances, FamilySpec};

fn main() -> resolvedim::Result<()> {
    for text in ["cycle:7", "complete:5", "jfg:4,2", "cp:4", "cayley-zn:8,3", "cayley-d2n:4"] {
        let spec: FamilySpec = text.parse()?;
        let g = spec.build()?;
        let dm = all_pairs_distances(&g)?;
        println!(
            "{:<14} n={:<3} e={:<3} diameter={} degrees={:?}",
            spec.to_string(),
            g.vertex_count(),
            g.edge_count(),
            dm.diameter(),
            g.degree_sequence()
        );
    }

    let jfg = resolvedim::gen_jellyfish(3, 2)?;
    let labels: Vec<String> = (0..jfg.vertex_count()).map(|v| jfg.label(v)).collect();
    println!("jfg:3,2 labels: {}", labels.join(" "));
    Ok(())
}
