//! Round-trips a graph through the edge-list format and solves the
//! parsed copy.

use resolvedim::edgelist::{parse_edge_list, read_edge_list_file, to_edge_list_string, write_edge_list_file};
use resolvedim::{all_pairs_distances, gen_jellyfish, min_resolving_set};

fn main() -> resolvedim::Result<()> {
    let g = gen_jellyfish(3, 2)?;
    let text = to_edge_list_string(&g);
    print!("{text}");

    let path = std::env::temp_dir().join("resolvedim-jfg-3-2.txt");
    write_edge_list_file(&g, &path)?;
    let back = read_edge_list_file(&path)?;
    assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
    let dm = all_pairs_distances(&back)?;
    println!("beta of parsed copy: {}", min_resolving_set(&back, &dm)?.value);
    std::fs::remove_file(&path)?;

    let commented = "# a 4-cycle\n4 4\n0 1\n1 2\n\n2 3\n3 0\n";
    println!("parsed {} edges with comments", parse_edge_list(commented)?.edge_count());
    match parse_edge_list("3 2\n0 1\n1 1\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
