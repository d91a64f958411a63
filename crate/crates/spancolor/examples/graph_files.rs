//! The text format: parsing with diagnostics, canonical serialization,
//! and seeded random multigraphs for reproducible experiments.
//!
//! ```bash
//! cargo run --example graph_files
//! ```

use spancolor::generators::random_multigraph;
use spancolor::{format, Error};

fn main() -> spancolor::Result<()> {
    let text = "# a 4-cycle with a doubled chord\n4 6\n0 1\n1 2\n2 3\n3 0\n0 2\n0 2\n";
    let g = format::parse(text)?;
    println!("parsed {} vertices, {} edges, multiplicity {}", g.vertex_count(), g.edge_count(), g.max_multiplicity());
    print!("canonical form:\n{}", format::serialize(&g));

    match format::parse("3 1\n1 1\n") {
        Err(Error::Parse { line, message }) => println!("rejected line {line}: {message}"),
        other => panic!("loop should be rejected, got {other:?}"),
    }

    let g = random_multigraph(6, 9, 2, 42)?;
    println!("seeded random multigraph (seed 42): {}", format::compact(&g));
    let again = random_multigraph(6, 9, 2, 42)?;
    assert_eq!(g, again);
    println!("same seed, same graph");
    Ok(())
}
