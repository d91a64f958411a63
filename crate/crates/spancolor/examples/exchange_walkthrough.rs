//! Upgrades a non-spanning maximum k-edge-colorable subgraph to a spanning
//! one without losing a single edge, guided by any spanning k-colorable
//! subgraph.
//!
//! The host is the smallest interesting case: a doubled edge u-w plus a
//! pendant w-z. Both parallel edges form a maximum 2-colorable subgraph
//! that misses z; the exchange swaps one of them for the pendant edge.
//!
//! ```bash
//! cargo run --example exchange_walkthrough
//! ```

use spancolor::coloring::enumerate_max_k_ecs;
use spancolor::graph::is_spanning;
use spancolor::{sp, Caps, EdgeSet, Multigraph};

fn main() -> spancolor::Result<()> {
    let caps = Caps::default();
    let g = Multigraph::new(3, vec![(0, 1), (0, 1), (1, 2)])?;
    println!("edges: 0 = (u,w), 1 = (u,w) parallel, 2 = (w,z)");

    let k = 2;
    println!("\nall maximum {k}-edge-colorable subgraphs:");
    for set in enumerate_max_k_ecs(&g, k, &caps)? {
        println!("  {:?} spanning={}", set, is_spanning(&g, &set));
    }

    let guide = EdgeSet::from([0, 2]);
    let stuck = EdgeSet::from([0, 1]);
    println!("\nguide (spanning, 2-colorable): {guide:?}");
    println!("maximum to upgrade (misses z): {stuck:?}");

    let upgraded = sp::exchange_to_spanning_max(&g, k, &guide, &stuck, &caps)?;
    println!("after the exchange:            {upgraded:?}");
    assert!(is_spanning(&g, &upgraded));
    assert_eq!(upgraded.len(), stuck.len());

    // a spanning input is a fixed point
    let unchanged = sp::exchange_to_spanning_max(&g, k, &guide, &guide, &caps)?;
    assert_eq!(unchanged, guide);
    println!("a spanning input comes back unchanged");
    Ok(())
}
