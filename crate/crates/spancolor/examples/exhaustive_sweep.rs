//! Runs a small in-process verification campaign: every check on every
//! connected graph with at most 5 vertices plus their multigraph variants,
//! printing the rendered report's tail.
//!
//! ```bash
//! cargo run --example exhaustive_sweep
//! ```

use spancolor::verify::{exhaustive_instances, Campaign, ALL_CHECKS};
use spancolor::Caps;

fn main() {
    let campaign = Campaign {
        header: vec![
            ("family".into(), "exhaustive".into()),
            ("max_n".into(), "5".into()),
            ("variant_edges".into(), "8".into()),
        ],
        instances: exhaustive_instances(5, true, 3, 8),
        checks: ALL_CHECKS.to_vec(),
        caps: Caps::default(),
    };
    let report = campaign.run(0);
    let rendered = report.render();
    for line in rendered.lines().take(6) {
        println!("{line}");
    }
    println!("... ({} records) ...", report.summary.records);
    println!("{}", rendered.lines().last().unwrap());
    assert_eq!(report.summary.fail, 0);
}
