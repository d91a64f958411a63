//! Two partition tools: the vertex bipartition with bounded induced
//! degrees, and the edge split behind the constructive
//! [1, max degree - min degree + 2]-factor.
//!
//! ```bash
//! cargo run --example degree_partitions
//! ```

use spancolor::bounds::{degree_split, factor_from_partition, lovasz_partition};
use spancolor::generators::{complete, cycle};
use spancolor::graph::subgraph_degrees;

fn main() -> spancolor::Result<()> {
    let k4 = complete(4);
    let p = lovasz_partition(&k4, 2, 2)?;
    println!("K4 vertex partition for (s,t) = (2,2):");
    println!("  side with induced degree <= 2: {:?}", p.s_side);
    println!("  side with induced degree <= 2: {:?}", p.t_side);
    println!("  moves used: {} (potential bound {})", p.moves, 2 * k4.edge_count());

    let (first, second) = degree_split(&k4, 2, 2)?;
    println!("K4 edge split with per-vertex caps (2,2):");
    println!("  first  {:?} degrees {:?}", first, subgraph_degrees(&k4, &first));
    println!("  second {:?} degrees {:?}", second, subgraph_degrees(&k4, &second));

    for (name, g) in [("C5", cycle(5)), ("K4", complete(4))] {
        let out = factor_from_partition(&g)?;
        println!(
            "{name}: [1,{}]-factor {:?} (fallback: {})",
            out.factor.bound, out.factor.edges, out.fallback
        );
        out.factor.validate(&g)?;
    }
    Ok(())
}
