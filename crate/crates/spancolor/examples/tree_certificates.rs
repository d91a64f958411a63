//! Recognizes the trees whose spanning parameter equals their maximum
//! degree and replays the peel certificate that proves it.
//!
//! ```bash
//! cargo run --example tree_certificates
//! ```

use spancolor::generators::{graft, path, star};
use spancolor::trees::{is_sp_delta_tree, trees_isomorphic};
use spancolor::{format, Multigraph};

fn main() -> spancolor::Result<()> {
    // build a certified tree: graft a matching-size star onto a tight host
    let host = star(3);
    let grown = graft(&host, 3, 1)?.tree; // p = 3 = sp = max degree
    let named: Vec<(&str, Multigraph)> = vec![
        ("P4", path(4)),
        ("P5", path(5)),
        ("K_{1,3}", star(3)),
        ("K_{1,3} + K_{1,3} graft", grown),
    ];
    for (name, t) in named {
        let recognition = is_sp_delta_tree(&t)?;
        println!("{name}: sp equals max degree? {}", recognition.certified);
        let Some(cert) = recognition.certificate else {
            continue;
        };
        println!("  base star: {}", format::compact(&cert.base));
        for step in &cert.steps {
            println!(
                "  peel: center {} of star size {}, attached at {}",
                step.center, step.star_size, step.attachment
            );
        }
        let replayed = cert.replay()?;
        assert!(trees_isomorphic(&replayed, &t)?);
        println!("  replaying the certificate rebuilds the tree (up to isomorphism)");
    }
    Ok(())
}
