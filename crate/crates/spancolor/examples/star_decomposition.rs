//! The layered star-forest construction: from any vertex below the
//! maximum degree, peel distance layers pairwise to obtain a star forest
//! that is (max degree - 1)-edge-colorable and covers everything except
//! possibly the start vertex.
//!
//! ```bash
//! cargo run --example star_decomposition
//! ```

use spancolor::generators::graft;
use spancolor::graph::missed_vertices;
use spancolor::trees::{
    classify_degrees, extend_to_spanning_delta, layered_star_decomposition,
};
use spancolor::{format, Caps};

fn main() -> spancolor::Result<()> {
    // a spider: three legs of length 2 from a center
    let mut t = spancolor::generators::star(3);
    for leaf in [1, 2, 3] {
        t = graft(&t, 2, leaf)?.tree;
    }
    println!("tree: {}", format::compact(&t));
    let delta = t.max_degree();
    let classes = classify_degrees(&t)?;
    println!("max degree {delta}; vertices below it: {:?}", classes.below_max);

    for &v in classes.below_max.iter().take(4) {
        let h = layered_star_decomposition(&t, v)?;
        let missed = missed_vertices(&t, &h);
        println!("from v={v}: star forest {h:?}, missed {missed:?}");
        let coloring =
            spancolor::coloring::find_k_edge_coloring(&t, &h, delta - 1, &Caps::default())?
                .expect("star forests below the degree bound always color");
        assert!(coloring.is_proper(&t, &h));
        if missed == vec![v] {
            let spanning = extend_to_spanning_delta(&t, v, &h)?;
            println!("  one edge at {v} completes it to a spanning subgraph: {spanning:?}");
        }
    }
    Ok(())
}
