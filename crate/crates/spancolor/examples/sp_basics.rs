//! Computes the spanning parameter of a few named graphs by all four
//! routes: factor search, spanning-subgraph search, maximum-subgraph scan,
//! and the closed formula.
//!
//! ```bash
//! cargo run --example sp_basics
//! ```

use spancolor::generators::{complete, cycle, path, star};
use spancolor::{sp, Caps, Multigraph};

fn main() -> spancolor::Result<()> {
    let caps = Caps::default();
    let named: Vec<(&str, Multigraph)> = vec![
        ("P4", path(4)),
        ("P5", path(5)),
        ("C5", cycle(5)),
        ("C6", cycle(6)),
        ("K4", complete(4)),
        ("K7", complete(7)),
        ("star K_{1,3}", star(3)),
        ("double edge + pendant", Multigraph::new(3, vec![(0, 1), (0, 1), (1, 2)])?),
    ];
    println!("{:<24} {:>6} {:>6} {:>6} {:>8} {:>6}", "graph", "sp1", "sp2", "sp3", "formula", "max d");
    for (name, g) in named {
        let s1 = sp::sp_factor_value(&g, &caps)?;
        let s2 = sp::sp2_bruteforce(&g, &caps)?;
        let s3 = sp::sp3_bruteforce(&g, &caps)?;
        let sf = sp::sp_formula(&g, &caps)?;
        println!(
            "{:<24} {:>6} {:>6} {:>6} {:>8} {:>6}",
            name,
            s1,
            s2,
            s3,
            sf,
            g.max_degree()
        );
        assert_eq!(s1, s2);
        assert_eq!(s1, s3);
        assert_eq!(s1, sf);
    }
    println!("\nall four routes agree on every graph above");
    Ok(())
}
