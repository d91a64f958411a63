//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line (run with `cargo test --test acceptance -- --nocapture` to see
//! them). Every criterion is exact — zero tolerance throughout.

use spancolor::verify::{
    exhaustive_instances, generated_instances, random_instances, random_instances_any,
    tree_instances, Campaign, Check, Instance, Origin, VerificationReport,
};
use spancolor::{Caps, Multigraph};

fn run(name: &str, instances: Vec<Instance>, checks: Vec<Check>, caps: Caps) -> VerificationReport {
    let campaign = Campaign {
        header: vec![("criterion".into(), name.into())],
        instances,
        checks,
        caps,
    };
    let report = campaign.run(0);
    let s = &report.summary;
    let verdict = if s.fail == 0 { "PASS" } else { "FAIL" };
    println!(
        "criterion {name}: {verdict} (instances={} pass={} fail={} skip={} info={})",
        s.instances, s.pass, s.fail, s.skip, s.info
    );
    for r in report.records.iter().filter(|r| r.status == spancolor::verify::Status::Fail) {
        println!("  failed: instance={} check={} | {}", r.instance, r.check, r.detail);
    }
    report
}

/// The exhaustive suite: every connected simple graph on up to 7 vertices
/// plus their multiplicity-<=3 variants with at most 10 edges.
fn full_suite() -> Vec<Instance> {
    exhaustive_instances(7, true, 3, 10)
}

#[test]
fn criterion_1_three_route_equality() {
    let mut instances = full_suite();
    let simple = instances.iter().filter(|i| i.id.starts_with("exh-")).count();
    let variants = instances.len() - simple;
    assert_eq!(simple, 996, "exhaustive base suite size");
    assert!(variants > 1000, "multigraph variant suite is substantial, got {variants}");
    let randoms = random_instances(8, 12, 3, 2, 1000);
    assert_eq!(randoms.len(), 1000);
    instances.extend(randoms);
    let report = run(
        "1 three-route equality",
        instances,
        vec![Check::ThreeWayEquality],
        Caps::default(),
    );
    assert_eq!(report.summary.fail, 0);
    assert_eq!(report.summary.skip, 0);
    // every instance except the single-vertex graph is checked
    assert_eq!(report.summary.pass, simple + variants - 1 + 1000);
}

#[test]
fn criterion_2_exchange_upgrades_every_nonspanning_maximum() {
    // the exchange sweep covers suite graphs with at most 12 edges
    let caps = Caps { enumeration_edges: 12, ..Caps::default() };
    let report = run(
        "2 exchange upgrades",
        full_suite(),
        vec![Check::Exchange],
        caps,
    );
    assert_eq!(report.summary.fail, 0);
    assert_eq!(report.summary.skip, 0);
    assert!(report.summary.pass > 10_000, "got {}", report.summary.pass);
}

#[test]
fn criterion_3_tree_characterization_and_structure() {
    let trees = run(
        "3a recognizer vs oracle on trees",
        tree_instances(12),
        vec![Check::TreeRecognizer, Check::GraftCases],
        Caps::default(),
    );
    assert_eq!(trees.summary.fail, 0);
    let recognizer_passes = trees
        .records
        .iter()
        .filter(|r| r.check == "tree_recognizer")
        .count();
    assert_eq!(recognizer_passes, 986); // trees on 2..=12 vertices

    let connected = run(
        "3b sp = max degree only for odd cycles and certified trees",
        exhaustive_instances(7, false, 0, 0),
        vec![Check::SpDeltaStructure, Check::EdgeDeletion],
        Caps::default(),
    );
    assert_eq!(connected.summary.fail, 0);
    let structure_passes = connected
        .records
        .iter()
        .filter(|r| r.check == "sp_delta_structure")
        .count();
    assert_eq!(structure_passes, 995); // all connected graphs on 2..=7 vertices
}

#[test]
fn criterion_4_star_decomposition_on_all_trees() {
    let report = run(
        "4 layered star decomposition",
        tree_instances(12),
        vec![Check::StarDecomposition],
        Caps::default(),
    );
    assert_eq!(report.summary.fail, 0);
    assert_eq!(report.summary.pass, 985); // trees on 3..=12 vertices
}

#[test]
fn criterion_5_ratio_tree_family() {
    let instances: Vec<Instance> = generated_instances(0, 0)
        .into_iter()
        .filter(|i| matches!(i.origin, Origin::RatioFamily { .. }))
        .collect();
    assert_eq!(instances.len(), 8); // (a, b) in {1,2}^2, n in {4,5}
    let report = run("5 ratio tree family", instances, vec![Check::RatioFamily], Caps::default());
    assert_eq!(report.summary.fail, 0);
    assert_eq!(report.summary.pass, 8);
}

#[test]
fn criterion_6_bounds_and_tightness() {
    let mut instances = full_suite();
    instances.extend(random_instances(8, 12, 3, 1, 1000));
    let gap: Vec<Instance> = generated_instances(0, 0)
        .into_iter()
        .filter(|i| matches!(i.origin, Origin::PathReplacement { .. }))
        .collect();
    assert_eq!(gap.len(), 5);
    instances.extend(gap);
    let total = instances.len();
    let report = run(
        "6 upper bounds and tightness families",
        instances,
        vec![Check::Bounds, Check::GapFamily],
        Caps::default(),
    );
    assert_eq!(report.summary.fail, 0);
    assert_eq!(report.summary.skip, 0);
    // bounds run on everything spannable, the gap check on its 5 instances
    assert_eq!(report.summary.pass, total - 1 + 5);
}

#[test]
fn criterion_7_partition_postconditions() {
    let mut instances = Vec::new();
    let mut seed = 0u64;
    while instances.len() < 500 {
        for inst in random_instances_any(7, 10, 2, seed, 50) {
            if inst.graph.max_degree() >= 1 && inst.graph.max_degree() <= 6 {
                instances.push(inst);
            }
        }
        seed += 50;
    }
    instances.truncate(500);
    let report = run("7 bounded-degree partition", instances, vec![Check::Partition], Caps::default());
    assert_eq!(report.summary.fail, 0);
    assert_eq!(report.summary.pass, 500);
}

#[test]
fn criterion_8_matching_and_coloring_substrate() {
    let mut instances = full_suite();
    instances.extend(tree_instances(10));
    instances.extend(random_instances_any(9, 11, 2, 3, 150));
    instances.extend(random_instances_any(10, 13, 3, 4, 150));
    instances.push(Instance {
        id: "doubled-triangle".into(),
        graph: spancolor::generators::shannon_triangle(),
        origin: Origin::DoubledTriangle,
    });
    let report = run(
        "8 matching and coloring substrate",
        instances,
        vec![Check::Substrate],
        Caps::default(),
    );
    assert_eq!(report.summary.fail, 0);
    assert_eq!(report.summary.skip, 0);
    let triangle = report
        .records
        .iter()
        .find(|r| r.instance == "doubled-triangle")
        .expect("triangle instance must be checked");
    assert_eq!(triangle.status, spancolor::verify::Status::Pass);
    assert!(triangle.detail.contains("chi=6"));
}

#[test]
fn criterion_9_cubic_pipeline() {
    let instances = generated_instances(50, 5);
    let cubic = instances.iter().filter(|i| i.origin == Origin::Cubic).count();
    assert!(cubic >= 55, "need at least 55 cubic instances, got {cubic}");
    for inst in instances.iter().filter(|i| i.origin == Origin::Cubic) {
        assert!(inst.graph.vertex_count() <= 14);
        assert!(inst.graph.is_connected());
    }
    let report = run(
        "9 constructive spanning maximum 2-colorable subgraphs on cubic graphs",
        instances,
        vec![Check::CubicPipeline],
        Caps::default(),
    );
    assert_eq!(report.summary.fail, 0);
    assert_eq!(report.summary.pass, cubic);
}

/// Single-vertex graphs never enter the check records; everything else in
/// the exhaustive suite does. Pin the accounting the other tests rely on.
#[test]
fn suite_accounting_is_stable() {
    let suite = full_suite();
    assert!(suite.iter().all(|i| i.graph.vertex_count() >= 1));
    let trivial = suite.iter().filter(|i| i.graph.vertex_count() < 2).count();
    assert_eq!(trivial, 1);
    let multigraphs = suite.iter().filter(|i| i.graph.max_multiplicity() >= 2).count();
    assert!(multigraphs > 1000);
    assert!(suite.iter().all(|i| i.graph.max_multiplicity() <= 3));
    assert!(suite
        .iter()
        .filter(|i| i.graph.max_multiplicity() >= 2)
        .all(|i| i.graph.edge_count() <= 10));
    let k7 = Multigraph::new(
        7,
        (0..7).flat_map(|a| (a + 1..7).map(move |b| (a, b))).collect(),
    )
    .unwrap();
    assert!(suite.iter().any(|i| i.graph.edge_count() == k7.edge_count()));
}
