//! Full witness output for one graph: the minimum [1,sp]-factor, the
//! spanning maximum sp-edge-colorable subgraph, and its coloring.
//!
//! ```bash
//! cargo run --example factor_witnesses
//! ```

use spancolor::generators::star;
use spancolor::{format, sp, Caps};

fn main() -> spancolor::Result<()> {
    let g = star(3);
    println!("graph: {}", format::compact(&g));

    let result = sp::sp_factor_search(&g, &Caps::default())?;
    println!("sp = {}", result.sp);

    println!(
        "factor witness: degrees in [1, {}], edges {:?}",
        result.factor.bound, result.factor.edges
    );
    result.factor.validate(&g)?;

    println!(
        "spanning maximum {}-edge-colorable subgraph: edges {:?}",
        result.sp, result.spanning_maximum
    );
    for (&edge, &color) in result.coloring.colors() {
        let (a, b) = g.endpoints(edge);
        println!("  edge {edge} = ({a},{b}) -> color {color}");
    }
    assert!(result.coloring.is_proper(&g, &result.spanning_maximum));
    Ok(())
}
