//! Campaign runner: sweeps theorem checks over graph families and renders
//! deterministic structured-text reports.
//!
//! A campaign pairs a list of instances (graphs with stable ids) with a
//! list of checks. Checks return pass/fail/skip per instance; a check that
//! hits a resource cap records a skip rather than aborting the campaign.
//! Instances run in parallel, records are collected in instance order, and
//! the rendered report is byte-identical for identical (family, seed,
//! caps) regardless of the parallelism degree.

use rayon::prelude::*;

use crate::bounds::{self, BoundKind};
use crate::coloring;
use crate::error::{Caps, Error, Result};
use crate::format::compact;
use crate::generators;
use crate::graph::{is_spanning, missed_vertices, subgraph_degree, Multigraph};
use crate::matching::{self, PerfectMatching};
use crate::sp;
use crate::trees;

/// How an instance was produced; some checks only apply to one origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Origin {
    Plain,
    /// tree on 3k+1 vertices with k = a * n^b
    RatioFamily { a: usize, b: usize, n: usize },
    /// r-regular host with one matching edge replaced by a 3-edge path
    PathReplacement { r: usize },
    /// the doubled triangle attaining the 3/2 chromatic-index ceiling
    DoubledTriangle,
    Cubic,
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub id: String,
    pub graph: Multigraph,
    pub origin: Origin,
}

impl Instance {
    fn plain(id: String, graph: Multigraph) -> Self {
        Instance { id, graph, origin: Origin::Plain }
    }
}

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

/// Every connected simple graph with at most `max_n` vertices (one per
/// isomorphism class), optionally followed by their bounded-multiplicity
/// variants with at most `max_total_edges` edges.
pub fn exhaustive_instances(
    max_n: usize,
    variants: bool,
    max_multiplicity: usize,
    max_total_edges: usize,
) -> Vec<Instance> {
    let mut out = Vec::new();
    let bases = crate::enumerate::connected_simple_graphs(max_n);
    for (i, g) in bases.iter().enumerate() {
        out.push(Instance::plain(format!("exh-n{}-{}", g.vertex_count(), i), g.clone()));
    }
    if variants {
        for (i, base) in bases.iter().enumerate() {
            for (j, v) in crate::enumerate::multigraph_variants(base, max_multiplicity, max_total_edges)
                .into_iter()
                .enumerate()
            {
                out.push(Instance::plain(format!("exhm-{i}-{j}"), v));
            }
        }
    }
    out
}

/// Seeded random multigraphs without isolated vertices: seeds are drawn
/// from `base_seed` upward until `count` usable instances exist.
pub fn random_instances(
    n: usize,
    m: usize,
    max_multiplicity: usize,
    base_seed: u64,
    count: usize,
) -> Vec<Instance> {
    let mut out = Vec::new();
    let mut seed = base_seed;
    while out.len() < count {
        if let Ok(g) = generators::random_multigraph(n, m, max_multiplicity, seed) {
            if !g.has_isolated_vertex() {
                out.push(Instance::plain(format!("rand-{seed}"), g));
            }
        } else {
            break;
        }
        seed += 1;
    }
    out
}

/// Seeded random multigraphs with no spannability filter; isolated
/// vertices and disconnected graphs are welcome here (matching and
/// coloring checks handle them).
pub fn random_instances_any(
    n: usize,
    m: usize,
    max_multiplicity: usize,
    base_seed: u64,
    count: usize,
) -> Vec<Instance> {
    (0..count as u64)
        .filter_map(|offset| {
            let seed = base_seed + offset;
            generators::random_multigraph(n, m, max_multiplicity, seed)
                .ok()
                .map(|g| Instance::plain(format!("randany-{seed}"), g))
        })
        .collect()
}

/// Every tree with 2..=max_n vertices up to isomorphism.
pub fn tree_instances(max_n: usize) -> Vec<Instance> {
    crate::enumerate::trees_up_to(max_n)
        .into_iter()
        .filter(|t| t.vertex_count() >= 2)
        .enumerate()
        .map(|(i, t)| Instance::plain(format!("tree-n{}-{}", t.vertex_count(), i), t))
        .collect()
}

/// The generated extremal families: the ratio trees, the path-replacement
/// gap family, the doubled triangle, and connected cubic graphs (named
/// ones plus seeded random instances).
pub fn generated_instances(cubic_count: usize, seed: u64) -> Vec<Instance> {
    let mut out = Vec::new();
    for a in [1usize, 2] {
        for b in [1usize, 2] {
            for n in [4usize, 5] {
                let g = generators::ratio_tree(a, b, n).expect("parameters are valid");
                out.push(Instance {
                    id: format!("ratio-a{a}-b{b}-n{n}"),
                    graph: g,
                    origin: Origin::RatioFamily { a, b, n },
                });
            }
        }
    }
    for r in [1usize, 2, 3, 5, 7] {
        let host = if r == 2 { generators::cycle(4) } else { generators::complete(r + 1) };
        let g = generators::tightness_graph(&host, 0).expect("host is regular with a matching edge");
        out.push(Instance {
            id: format!("gap-r{r}"),
            graph: g,
            origin: Origin::PathReplacement { r },
        });
    }
    out.push(Instance {
        id: "doubled-triangle".into(),
        graph: generators::shannon_triangle(),
        origin: Origin::DoubledTriangle,
    });
    for (name, g) in named_cubic_graphs() {
        out.push(Instance { id: format!("cubic-{name}"), graph: g, origin: Origin::Cubic });
    }
    let sizes = [8usize, 10, 12, 14];
    let mut produced = 0;
    let mut attempt = 0u64;
    while produced < cubic_count {
        let n = sizes[produced % sizes.len()];
        let g = generators::random_cubic(n, seed.wrapping_add(attempt))
            .expect("pairing model produces cubic graphs at this scale");
        out.push(Instance {
            id: format!("cubic-n{n}-s{}", seed.wrapping_add(attempt)),
            graph: g,
            origin: Origin::Cubic,
        });
        produced += 1;
        attempt += 1;
    }
    out
}

pub fn named_cubic_graphs() -> Vec<(&'static str, Multigraph)> {
    let k33 = Multigraph::new(
        6,
        vec![(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
    )
    .unwrap();
    let prism = Multigraph::new(
        6,
        vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
    )
    .unwrap();
    let petersen = Multigraph::new(
        10,
        vec![
            (0, 1), (0, 4), (0, 5), (1, 2), (1, 6), (2, 3), (2, 7),
            (3, 4), (3, 8), (4, 9), (5, 7), (5, 8), (6, 8), (6, 9), (7, 9),
        ],
    )
    .unwrap();
    let triple = Multigraph::new(2, vec![(0, 1), (0, 1), (0, 1)]).unwrap();
    vec![
        ("k4", generators::complete(4)),
        ("k33", k33),
        ("prism", prism),
        ("petersen", petersen),
        ("triple-edge", triple),
    ]
}

// ---------------------------------------------------------------------------
// Checks
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    ThreeWayEquality,
    Exchange,
    TreeRecognizer,
    SpDeltaStructure,
    StarDecomposition,
    GraftCases,
    RatioFamily,
    GapFamily,
    Bounds,
    Partition,
    Substrate,
    CubicPipeline,
    EdgeDeletion,
    HuntNonregular,
}

pub const ALL_CHECKS: [Check; 14] = [
    Check::ThreeWayEquality,
    Check::Exchange,
    Check::TreeRecognizer,
    Check::SpDeltaStructure,
    Check::StarDecomposition,
    Check::GraftCases,
    Check::RatioFamily,
    Check::GapFamily,
    Check::Bounds,
    Check::Partition,
    Check::Substrate,
    Check::CubicPipeline,
    Check::EdgeDeletion,
    Check::HuntNonregular,
];

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::ThreeWayEquality => "three_way_equality",
            Check::Exchange => "exchange",
            Check::TreeRecognizer => "tree_recognizer",
            Check::SpDeltaStructure => "sp_delta_structure",
            Check::StarDecomposition => "star_decomposition",
            Check::GraftCases => "graft_cases",
            Check::RatioFamily => "ratio_family",
            Check::GapFamily => "gap_family",
            Check::Bounds => "bounds",
            Check::Partition => "partition",
            Check::Substrate => "substrate",
            Check::CubicPipeline => "cubic_pipeline",
            Check::EdgeDeletion => "edge_deletion",
            Check::HuntNonregular => "hunt_nonregular",
        }
    }

    pub fn parse(name: &str) -> Option<Check> {
        ALL_CHECKS.iter().copied().find(|c| c.name() == name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
    Info,
}

impl Status {
    fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
            Status::Info => "info",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Record {
    pub instance: String,
    pub check: &'static str,
    pub status: Status,
    pub detail: String,
}

/// Runs one check on one instance. `None` means the check does not apply
/// to this instance; resource-cap errors become skips.
pub fn run_check(check: Check, inst: &Instance, caps: &Caps) -> Option<Record> {
    let outcome = dispatch(check, inst, caps);
    let (status, detail) = match outcome {
        Ok(None) => return None,
        Ok(Some(pair)) => pair,
        Err(Error::ResourceCap { cap, limit, actual }) => {
            (Status::Skip, format!("cap {cap}={limit} below required {actual}"))
        }
        Err(e) => (Status::Fail, format!("error: {e} graph={}", compact(&inst.graph))),
    };
    Some(Record { instance: inst.id.clone(), check: check.name(), status, detail })
}

type CheckOutcome = Result<Option<(Status, String)>>;

fn dispatch(check: Check, inst: &Instance, caps: &Caps) -> CheckOutcome {
    match check {
        Check::ThreeWayEquality => three_way_equality(inst, caps),
        Check::Exchange => exchange_check(inst, caps),
        Check::TreeRecognizer => tree_recognizer(inst, caps),
        Check::SpDeltaStructure => sp_delta_structure(inst, caps),
        Check::StarDecomposition => star_decomposition(inst, caps),
        Check::GraftCases => graft_cases(inst, caps),
        Check::RatioFamily => ratio_family(inst, caps),
        Check::GapFamily => gap_family(inst, caps),
        Check::Bounds => bounds_check(inst, caps),
        Check::Partition => partition_check(inst, caps),
        Check::Substrate => substrate_check(inst, caps),
        Check::CubicPipeline => cubic_pipeline(inst, caps),
        Check::EdgeDeletion => edge_deletion(inst, caps),
        Check::HuntNonregular => hunt_nonregular(inst, caps),
    }
}

fn spannable(g: &Multigraph) -> bool {
    g.vertex_count() >= 2 && !g.has_isolated_vertex()
}

fn fail(detail: String, g: &Multigraph) -> CheckOutcome {
    Ok(Some((Status::Fail, format!("{detail} graph={}", compact(g)))))
}

fn pass(detail: String) -> CheckOutcome {
    Ok(Some((Status::Pass, detail)))
}

fn three_way_equality(inst: &Instance, caps: &Caps) -> CheckOutcome {
    let g = &inst.graph;
    if !spannable(g) {
        return Ok(None);
    }
    let s1 = sp::sp_factor_value(g, caps)?;
    let s2 = sp::sp2_bruteforce(g, caps)?;
    let s3 = sp::sp3_bruteforce(g, caps)?;
    let sf = sp::sp_formula(g, caps)?;
    if s1 != s2 || s1 != s3 || s1 != sf {
        return fail(format!("routes disagree: factor={s1} spanning={s2} maximum={s3} formula={sf}"), g);
    }
    if s1 < 1 || s1 > g.max_degree() {
        return fail(format!("sp={s1} outside [1, {}]", g.max_degree()), g);
    }
    pass(format!("sp={s1}"))
}

fn exchange_check(inst: &Instance, caps: &Caps) -> CheckOutcome {
    let g = &inst.graph;
    if !spannable(g) || g.edge_count() > caps.enumeration_edges {
        return Ok(None);
    }
    let sp_value = sp::sp_factor_value(g, caps)?;
    let mut upgraded = 0usize;
    let mut fixed = 0usize;
    for k in sp_value..=g.max_degree() {
        let (factor_guide, _) = sp::spanning_kecs_witness(g, k, caps)?;
        let nu = sp::nu_k(g, k, caps)?;
        let all = coloring::enumerate_max_k_ecs(g, k, caps)?;
        // a spanning member of the enumeration is itself an admissible guide
        let mut guides = vec![factor_guide];
        if let Some(member) = all.iter().find(|set| is_spanning(g, set)) {
            guides.push(member.clone());
        }
        for h in &all {
            let already_spanning = is_spanning(g, h);
            for guide in &guides {
                let out = sp::exchange_to_spanning_max(g, k, guide, h, caps)?;
                if !is_spanning(g, &out) || out.len() != nu {
                    return fail(format!("exchange output invalid at k={k} from {h:?}"), g);
                }
                if coloring::find_k_edge_coloring(g, &out, k, caps)?.is_none() {
                    return fail(format!("exchange output not {k}-colorable from {h:?}"), g);
                }
                if already_spanning && out != *h {
                    return fail(format!("spanning input not a fixed point at k={k}"), g);
                }
            }
            if already_spanning {
                fixed += 1;
            } else {
                upgraded += 1;
            }
        }
    }
    pass(format!("upgraded={upgraded} fixed={fixed}"))
}

fn tree_recognizer(inst: &Instance, caps: &Caps) -> CheckOutcome {
    let g = &inst.graph;
    if !g.is_tree() || g.vertex_count() < 2 {
        return Ok(None);
    }
    let recognition = trees::is_sp_delta_tree(g)?;
    let oracle = sp::sp_factor_value(g, caps)? == g.max_degree();
    if recognition.certified != oracle {
        return fail(format!("recognizer={} oracle={oracle}", recognition.certified), g);
    }
    if let Some(cert) = &recognition.certificate {
        let replayed = cert.replay()?;
        if !trees::trees_isomorphic(&replayed, g)? {
            return fail("certificate replay is not isomorphic to the input".into(), g);
        }
    }
    if g.vertex_count() <= 10 {
        for z in trees::peel_candidates(g) {
            if trees::is_sp_delta_tree_peeling(g, z)? != recognition.certified {
                return fail(format!("peel at {z} changes the recognizer outcome"), g);
            }
        }
    }
    pass(format!("certified={}", recognition.certified))
}

fn sp_delta_structure(inst: &Instance, caps: &Caps) -> CheckOutcome {
    let g = &inst.graph;
    if !spannable(g) || !g.is_connected() {
        return Ok(None);
    }
    let structural = trees::sp_delta_connected(g)?;
    let oracle = sp::sp_factor_value(g, caps)? == g.max_degree();
    if structural != oracle {
        return fail(format!("structural={structural} oracle={oracle}"), g);
    }
    pass(format!("sp_equals_max_degree={oracle}"))
}

fn star_decomposition(inst: &Instance, caps: &Caps) -> CheckOutcome {
    let t = &inst.graph;
    if !t.is_tree() || t.vertex_count() < 3 {
        return Ok(None);
    }
    let delta = t.max_degree();
    let tight = sp::sp_factor_value(t, caps)? == delta;
    let below = trees::classify_degrees(t)?.below_max;
    let mut checked = 0usize;
    for &v in &below {
        let h = trees::layered_star_decomposition(t, v)?;
        if !trees::is_star_forest_within(t, &h, delta - 1) {
            return fail(format!("output from v={v} is not a bounded star forest"), t);
        }
        if coloring::find_k_edge_coloring(t, &h, delta - 1, caps)?.is_none() {
            return fail(format!("output from v={v} is not ({})-colorable", delta - 1), t);
        }
        let missed = missed_vertices(t, &h);
        let misses_v = missed == vec![v];
        if !(missed.is_empty() || misses_v) {
            return fail(format!("coverage from v={v} misses {missed:?}"), t);
        }
        if tight && !misses_v {
            return fail(format!("tight tree but v={v} is covered"), t);
        }
        if misses_v {
            let ext = trees::extend_to_spanning_delta(t, v, &h)?;
            if !is_spanning(t, &ext)
                || subgraph_degree(t, &ext, v) != 1
                || coloring::find_k_edge_coloring(t, &ext, delta, caps)?.is_none()
            {
                return fail(format!("extension from v={v} fails its contract"), t);
            }
        }
        checked += 1;
    }
    pass(format!("vertices_checked={checked} tight={tight}"))
}

fn graft_cases(inst: &Instance, caps: &Caps) -> CheckOutcome {
    let t = &inst.graph;
    if !t.is_tree() || t.vertex_count() < 3 || t.vertex_count() > 8 {
        return Ok(None);
    }
    let below = trees::classify_degrees(t)?.below_max;
    let mut checked = 0usize;
    for p in 2..=t.max_degree() + 1 {
        for &v in &below {
            let case = trees::graft_case_for(t, p, caps)?;
            if !trees::verify_graft_case(t, p, v, case, caps)? {
                return fail(format!("case {case:?} fails at p={p} v={v}"), t);
            }
            checked += 1;
        }
    }
    pass(format!("grafts_checked={checked}"))
}

fn ratio_family(inst: &Instance, caps: &Caps) -> CheckOutcome {
    let Origin::RatioFamily { a, b, n } = inst.origin else {
        return Ok(None);
    };
    let g = &inst.graph;
    let k = a * n.pow(b as u32);
    if g.vertex_count() != 3 * k + 1 {
        return fail(format!("vertex count {} != {}", g.vertex_count(), 3 * k + 1), g);
    }
    let nu = matching::matching_number(g);
    if nu != k + 1 {
        return fail(format!("matching number {nu} != {}", k + 1), g);
    }
    let sp_value = sp::sp_factor_value(g, caps)?;
    if sp_value != k {
        return fail(format!("sp {sp_value} != {k}"), g);
    }
    // sp > a * (|V| / nu)^b, compared exactly in integers
    let lhs = (sp_value as u128) * (nu as u128).pow(b as u32);
    let rhs = (a as u128) * (g.vertex_count() as u128).pow(b as u32);
    if lhs <= rhs {
        return fail(format!("ratio inequality fails: {lhs} <= {rhs}"), g);
    }
    pass(format!("k={k} sp={sp_value} nu={nu}"))
}

fn gap_family(inst: &Instance, caps: &Caps) -> CheckOutcome {
    let Origin::PathReplacement { r } = inst.origin else {
        return Ok(None);
    };
    let g = &inst.graph;
    let sp_value = sp::sp_factor_value(g, caps)?;
    if sp_value != 1 {
        return fail(format!("sp {sp_value} != 1 despite a perfect matching"), g);
    }
    let (delta, delta_min) = (g.max_degree(), g.min_degree());
    let ratio_bound = if delta == delta_min {
        1 + delta / delta_min
    } else {
        delta.div_ceil(delta_min)
    };
    // hosts of regularity >= 3 leave the two new vertices at minimum
    // degree 2, so the non-regular ratio bound ceil(r/2) applies
    if r >= 3 && ratio_bound != r.div_ceil(2) {
        return fail(format!("ratio bound {ratio_bound} != ceil({r}/2)"), g);
    }
    pass(format!("sp=1 ratio_bound={ratio_bound} gap={}", ratio_bound - 1))
}

fn bounds_check(inst: &Instance, caps: &Caps) -> CheckOutcome {
    let g = &inst.graph;
    if !spannable(g) {
        return Ok(None);
    }
    let report = bounds::bound_values(g, caps)?;
    if !report.all_hold() {
        let broken: Vec<&str> =
            report.records.iter().filter(|r| !r.holds).map(|r| r.kind.name()).collect();
        return fail(format!("violated: {broken:?} sp={}", report.sp), g);
    }
    let nu = matching::matching_number(g);
    let near_perfect = g.vertex_count() - 2 * nu <= 1;
    if near_perfect {
        let expected = g.vertex_count() - 2 * nu + 1;
        if report.sp != expected {
            return fail(format!("matching tightness: sp={} != {expected}", report.sp), g);
        }
    }
    if g.is_regular() {
        if g.is_connected() && 2 * nu < g.vertex_count() {
            let gap_bound = report.record(BoundKind::DegreeGap).unwrap();
            if !(gap_bound.value == 2 && report.sp == 2) {
                return fail(format!("regular tightness: sp={} bound={}", report.sp, gap_bound.value), g);
            }
        }
        if !sp::spanning_max_exists(g, 2, caps)? {
            return fail("regular graph without a spanning maximum 2-colorable subgraph".into(), g);
        }
    }
    if g.max_degree() - g.min_degree() <= 1 && report.sp > 2 {
        return fail(format!("almost regular but sp={}", report.sp), g);
    }
    if g.max_degree() >= 2 && !bounds::yu_liu_check(g, 1, g.max_degree(), caps)?.holds {
        return fail("degree condition fails at the trivial bound".into(), g);
    }
    pass(format!("sp={} bounds={}", report.sp, report.records.len()))
}

fn partition_check(inst: &Instance, _caps: &Caps) -> CheckOutcome {
    let g = &inst.graph;
    let delta = g.max_degree();
    if delta == 0 || delta > 6 {
        return Ok(None);
    }
    let mut pairs = 0usize;
    for s in 1..=delta + 1 {
        for t in 1..=delta + 1 {
            if delta > s + t - 1 {
                continue;
            }
            let p = bounds::lovasz_partition(g, s, t)?;
            for (side, cap) in [(&p.s_side, s), (&p.t_side, t)] {
                for &v in side.iter() {
                    let induced =
                        g.incident(v).iter().filter(|&&(_, u)| side.contains(&u)).count();
                    if induced > cap {
                        return fail(format!("side bound broken at v={v} for (s,t)=({s},{t})"), g);
                    }
                }
            }
            if p.moves > t * g.edge_count() {
                return fail(format!("moves {} exceed potential {}", p.moves, t * g.edge_count()), g);
            }
            pairs += 1;
        }
    }
    pass(format!("pairs_checked={pairs}"))
}

fn substrate_check(inst: &Instance, caps: &Caps) -> CheckOutcome {
    let g = &inst.graph;
    if g.vertex_count() == 0 {
        return Ok(None);
    }
    let nu = matching::matching_number(g);
    let mut parts = Vec::new();
    if g.vertex_count() <= 10.min(caps.subset_vertices) {
        let deficiency = matching::tutte_berge_deficiency(g, caps)?;
        if deficiency.value != g.vertex_count() - 2 * nu {
            return fail(
                format!("deficiency {} != |V| - 2 nu = {}", deficiency.value, g.vertex_count() - 2 * nu),
                g,
            );
        }
        let perfect = matching::has_perfect_matching(g, caps)?;
        if perfect.exists() != (deficiency.value == 0) {
            return fail("perfect matching and zero deficiency disagree".into(), g);
        }
        if let PerfectMatching::No { violator, odd_components } = &perfect {
            let profile = g.delete_vertices(violator)?.graph.component_profile();
            if profile.odd_components != *odd_components || *odd_components <= violator.len() {
                return fail("parity witness does not violate the condition".into(), g);
            }
        }
        parts.push(format!("deficiency={}", deficiency.value));
    }
    if g.edge_count() <= caps.coloring_edges {
        let (chi, witness) = coloring::chromatic_index(g, caps)?;
        let delta = g.max_degree();
        let all: crate::graph::EdgeSet = (0..g.edge_count()).collect();
        if !witness.is_proper(g, &all) {
            return fail("chromatic index witness is not proper".into(), g);
        }
        if chi < delta || chi > (3 * delta / 2).min(delta + g.max_multiplicity()) {
            return fail(format!("chromatic index {chi} outside the classical range"), g);
        }
        if inst.origin == Origin::DoubledTriangle && chi != 6 {
            return fail(format!("doubled triangle needs 6 colors, got {chi}"), g);
        }
        if g.edge_count() <= caps.subset_search_edges {
            let nu_1 = coloring::max_k_ecs_size(g, 1, caps)?;
            if nu_1 != nu {
                return fail(format!("nu_1 {nu_1} != matching number {nu}"), g);
            }
        }
        parts.push(format!("chi={chi}"));
    }
    if parts.is_empty() {
        return Ok(None);
    }
    pass(parts.join(" "))
}

fn cubic_pipeline(inst: &Instance, caps: &Caps) -> CheckOutcome {
    let g = &inst.graph;
    if !g.is_connected() || g.vertex_count() < 2 || !g.degrees().iter().all(|&d| d == 3) {
        return Ok(None);
    }
    let partitioned = bounds::factor_from_partition(g)?;
    if partitioned.fallback || partitioned.factor.bound != 2 {
        return fail("cubic graph did not split into a [1,2]-factor".into(), g);
    }
    let (guide, guide_coloring) = sp::spanning_kecs_from_factor(g, &partitioned.factor)?;
    if !is_spanning(g, &guide) || !guide_coloring.is_proper(g, &guide) {
        return fail("extracted sub-forest is not a proper spanning guide".into(), g);
    }
    let (maximum, _) = coloring::max_k_ecs(g, 2, caps)?;
    let out = sp::exchange_to_spanning_max(g, 2, &guide, &maximum, caps)?;
    let nu_2 = sp::nu_k(g, 2, caps)?;
    if !is_spanning(g, &out) || out.len() != nu_2 {
        return fail("pipeline output is not a spanning maximum 2-colorable subgraph".into(), g);
    }
    if coloring::find_k_edge_coloring(g, &out, 2, caps)?.is_none() {
        return fail("pipeline output is not 2-colorable".into(), g);
    }
    pass(format!("nu_2={nu_2} edges={}", out.len()))
}

fn edge_deletion(inst: &Instance, caps: &Caps) -> CheckOutcome {
    let g = &inst.graph;
    if !spannable(g) {
        return Ok(None);
    }
    let cycle_edges: Vec<usize> = (0..g.edge_count()).filter(|&e| g.on_cycle(e)).collect();
    if cycle_edges.is_empty() {
        return Ok(None);
    }
    let sp_value = sp::sp_factor_value(g, caps)?;
    for e in cycle_edges.iter().copied() {
        let smaller = g.delete_edge(e)?;
        let sp_smaller = sp::sp_factor_value(&smaller, caps)?;
        if sp_value > sp_smaller {
            return fail(format!("sp rose from {sp_smaller} to {sp_value} when edge {e} returned"), g);
        }
    }
    pass(format!("cycle_edges_checked={}", cycle_edges.len()))
}

fn hunt_nonregular(inst: &Instance, caps: &Caps) -> CheckOutcome {
    let g = &inst.graph;
    if !spannable(g) || g.is_regular() {
        return Ok(None);
    }
    let sp_value = sp::sp_factor_value(g, caps)?;
    let sharpened = g.max_degree() - g.min_degree() + 1;
    // the sharpened bound is an open claim: report, never assert
    if sp_value > sharpened {
        return Ok(Some((
            Status::Info,
            format!("sharpened bound exceeded: sp={sp_value} > {sharpened} graph={}", compact(g)),
        )));
    }
    Ok(Some((Status::Info, format!("consistent: sp={sp_value} <= {sharpened}"))))
}

// ---------------------------------------------------------------------------
// Campaign runner and report rendering
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct Campaign {
    /// echoed into the report header, in order
    pub header: Vec<(String, String)>,
    pub instances: Vec<Instance>,
    pub checks: Vec<Check>,
    pub caps: Caps,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Summary {
    pub instances: usize,
    pub records: usize,
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
    pub info: usize,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub header: Vec<(String, String)>,
    pub caps: Caps,
    pub records: Vec<Record>,
    pub summary: Summary,
}

impl Campaign {
    /// Runs every check on every instance. `jobs` = 0 uses the default
    /// parallelism; records always appear in instance order.
    pub fn run(&self, jobs: usize) -> VerificationReport {
        let run_all = || -> Vec<Vec<Record>> {
            self.instances
                .par_iter()
                .map(|inst| {
                    self.checks
                        .iter()
                        .filter_map(|&c| run_check(c, inst, &self.caps))
                        .collect()
                })
                .collect()
        };
        let nested = if jobs == 0 {
            run_all()
        } else {
            rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .expect("thread pool construction")
                .install(run_all)
        };
        let records: Vec<Record> = nested.into_iter().flatten().collect();
        let mut summary = Summary { instances: self.instances.len(), records: records.len(), ..Default::default() };
        for r in &records {
            match r.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skip => summary.skip += 1,
                Status::Info => summary.info += 1,
            }
        }
        VerificationReport { header: self.header.clone(), caps: self.caps, records, summary }
    }
}

impl VerificationReport {
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str("campaign");
        for (k, v) in &self.header {
            out.push_str(&format!(" {k}={v}"));
        }
        out.push('\n');
        out.push_str(&format!(
            "caps coloring={} enumeration={} subset={} vertices={}\n",
            self.caps.coloring_edges,
            self.caps.enumeration_edges,
            self.caps.subset_search_edges,
            self.caps.subset_vertices
        ));
        for r in &self.records {
            out.push_str(&format!(
                "record instance={} check={} status={} | {}\n",
                r.instance,
                r.check,
                r.status.name(),
                r.detail
            ));
        }
        out.push_str(&format!(
            "summary instances={} records={} pass={} fail={} skip={} info={}\n",
            self.summary.instances,
            self.summary.records,
            self.summary.pass,
            self.summary.fail,
            self.summary.skip,
            self.summary.info
        ));
        out
    }

    /// 0 when nothing failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.summary.fail > 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_exhaustive_campaign_is_clean_and_deterministic() {
        let campaign = Campaign {
            header: vec![("family".into(), "exhaustive".into()), ("max_n".into(), "4".into())],
            instances: exhaustive_instances(4, true, 3, 6),
            checks: ALL_CHECKS.to_vec(),
            caps: Caps::default(),
        };
        let a = campaign.run(1);
        let b = campaign.run(2);
        assert_eq!(a.render(), b.render());
        assert_eq!(a.summary.fail, 0, "{}", a.render());
        assert!(a.summary.pass > 0);
        assert_eq!(a.exit_code(), 0);
    }

    #[test]
    fn random_instances_are_deterministic_and_spannable() {
        let a = random_instances(6, 8, 3, 7, 25);
        let b = random_instances(6, 8, 3, 7, 25);
        assert_eq!(a.len(), 25);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.id, y.id);
            assert_eq!(x.graph, y.graph);
            assert!(!x.graph.has_isolated_vertex());
        }
    }

    #[test]
    fn generated_family_has_the_expected_shape() {
        let instances = generated_instances(6, 11);
        let ratio = instances.iter().filter(|i| matches!(i.origin, Origin::RatioFamily { .. }));
        assert_eq!(ratio.count(), 8);
        let cubic: Vec<_> =
            instances.iter().filter(|i| i.origin == Origin::Cubic).collect();
        assert!(cubic.len() >= 11);
        assert!(instances.iter().any(|i| i.origin == Origin::DoubledTriangle));
    }

    #[test]
    fn check_names_round_trip() {
        for c in ALL_CHECKS {
            assert_eq!(Check::parse(c.name()), Some(c));
        }
        assert_eq!(Check::parse("nonsense"), None);
    }
}
