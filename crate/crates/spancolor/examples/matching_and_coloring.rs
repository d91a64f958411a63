//! The substrate: maximum matchings with parity witnesses, the exhaustive
//! deficiency maximum, and exact chromatic indices on multigraphs.
//!
//! ```bash
//! cargo run --example matching_and_coloring
//! ```

use spancolor::coloring::{chromatic_index, enumerate_max_k_ecs, max_k_ecs};
use spancolor::generators::{cycle, shannon_triangle, star};
use spancolor::matching::{has_perfect_matching, maximum_matching, tutte_berge_deficiency, PerfectMatching};
use spancolor::Caps;

fn main() -> spancolor::Result<()> {
    let caps = Caps::default();

    let c5 = cycle(5);
    println!("C5: maximum matching {:?}", maximum_matching(&c5).edges());
    match has_perfect_matching(&c5, &caps)? {
        PerfectMatching::No { violator, odd_components } => println!(
            "C5 has no perfect matching: removing {violator:?} leaves {odd_components} odd components"
        ),
        PerfectMatching::Yes(_) => unreachable!("odd vertex count"),
    }
    let d = tutte_berge_deficiency(&c5, &caps)?;
    println!("C5 deficiency {} attained by {:?}", d.value, d.attaining_set);

    let s3 = star(3);
    let d = tutte_berge_deficiency(&s3, &caps)?;
    println!("K_{{1,3}} deficiency {} attained by {:?}", d.value, d.attaining_set);

    let tri = shannon_triangle();
    let (chi, _) = chromatic_index(&tri, &caps)?;
    println!("doubled triangle: max degree {}, chromatic index {chi}", tri.max_degree());

    let (best, coloring) = max_k_ecs(&c5, 2, &caps)?;
    println!("C5 maximum 2-colorable subgraph: {best:?} with colors {:?}", coloring.colors());
    println!(
        "C5 has {} maximum matchings",
        enumerate_max_k_ecs(&c5, 1, &caps)?.len()
    );
    Ok(())
}
