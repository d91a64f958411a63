//! The two extremal families: trees whose spanning parameter beats any
//! fixed power of |V|/nu, and regular graphs where the degree-ratio bound
//! overshoots an sp of 1 by an arbitrary margin.
//!
//! ```bash
//! cargo run --example extremal_families
//! ```

use spancolor::generators::{complete, ratio_tree, tightness_graph};
use spancolor::{matching, sp, Caps};

fn main() -> spancolor::Result<()> {
    let caps = Caps::default();

    println!("ratio family: trees with sp > a (|V|/nu)^b");
    for (a, b, n) in [(1usize, 1usize, 4usize), (2, 1, 4), (1, 2, 4), (2, 2, 5)] {
        let g = ratio_tree(a, b, n)?;
        let nu = matching::matching_number(&g);
        let sp_value = sp::sp_factor_value(&g, &caps)?;
        let ratio = g.vertex_count() as f64 / nu as f64;
        println!(
            "  a={a} b={b} n={n}: |V|={:>3} nu={:>2} sp={:>2}  a(|V|/nu)^b = {:.2}",
            g.vertex_count(),
            nu,
            sp_value,
            a as f64 * ratio.powi(b as i32)
        );
        assert!(
            (sp_value as u128) * (nu as u128).pow(b as u32)
                > (a as u128) * (g.vertex_count() as u128).pow(b as u32)
        );
    }

    println!("\ngap family: subdividing one matching edge of a complete graph");
    for r in [3usize, 5, 7] {
        let g = tightness_graph(&complete(r + 1), 0)?;
        let sp_value = sp::sp_factor_value(&g, &caps)?;
        let bound = g.max_degree().div_ceil(g.min_degree());
        println!("  r={r}: sp={sp_value}, degree-ratio bound={bound}, gap={}", bound - sp_value);
        assert_eq!(sp_value, 1);
    }
    Ok(())
}
