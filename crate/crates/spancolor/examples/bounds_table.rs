//! Evaluates every upper bound on the spanning parameter for a handful of
//! graphs and marks which bounds are tight.
//!
//! ```bash
//! cargo run --example bounds_table
//! ```

use spancolor::bounds::bound_values;
use spancolor::generators::{complete, cycle, path, star, tightness_graph};
use spancolor::{Caps, Multigraph};

fn main() -> spancolor::Result<()> {
    let caps = Caps::default();
    let named: Vec<(&str, Multigraph)> = vec![
        ("C5", cycle(5)),
        ("K4", complete(4)),
        ("K_{1,3}", star(3)),
        ("P4", path(4)),
        ("K4 with a matching edge subdivided", tightness_graph(&complete(4), 0)?),
    ];
    for (name, g) in named {
        let report = bound_values(&g, &caps)?;
        println!("{name}: sp = {}", report.sp);
        for r in &report.records {
            println!(
                "  {:<22} {:>3}  {}{}",
                r.kind.name(),
                r.value,
                if r.holds { "holds" } else { "VIOLATED" },
                if r.tight { ", tight" } else { "" }
            );
        }
        assert!(report.all_hold());
    }
    Ok(())
}
