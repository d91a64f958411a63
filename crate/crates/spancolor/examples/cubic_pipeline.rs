//! Builds a spanning maximum 2-edge-colorable subgraph of a cubic graph
//! constructively: degree split -> [1,2]-factor -> spanning sub-forest ->
//! exchange against a maximum 2-colorable subgraph.
//!
//! The Petersen graph makes a good demo: it is not 3-edge-colorable, and
//! its maximum 2-colorable subgraphs have 9 of the 15 edges.
//!
//! ```bash
//! cargo run --example cubic_pipeline
//! ```

use spancolor::bounds::factor_from_partition;
use spancolor::coloring::max_k_ecs;
use spancolor::graph::is_spanning;
use spancolor::verify::named_cubic_graphs;
use spancolor::{sp, Caps};

fn main() -> spancolor::Result<()> {
    let caps = Caps::default();
    for (name, g) in named_cubic_graphs() {
        let factor = factor_from_partition(&g)?;
        let (guide, _) = sp::spanning_kecs_from_factor(&g, &factor.factor)?;
        let (maximum, _) = max_k_ecs(&g, 2, &caps)?;
        let spanning_max = sp::exchange_to_spanning_max(&g, 2, &guide, &maximum, &caps)?;
        println!(
            "{name}: |V|={} |E|={} nu_2={} -> spanning maximum found, {} edges, spanning={}",
            g.vertex_count(),
            g.edge_count(),
            maximum.len(),
            spanning_max.len(),
            is_spanning(&g, &spanning_max)
        );
        assert!(is_spanning(&g, &spanning_max));
        assert_eq!(spanning_max.len(), maximum.len());
    }
    Ok(())
}
