//! Upper bounds on the spanning parameter, the vertex partition with
//! bounded induced degrees, the degree-split factor construction, and the
//! degree-condition criterion for [a,b]-factors.

use crate::error::{Caps, Error, Result};
use crate::graph::{EdgeSet, Multigraph, VertexSet};
use crate::matching;
use crate::sp::{self, FactorWitness};

/// The bound families compared against the exact spanning parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    /// max degree
    TrivialMaxDegree,
    /// max degree - min degree + 2
    DegreeGap,
    /// |V| - 2 nu + 1
    VertexDeficiency,
    /// 1 + floor(max degree / min degree)
    DegreeRatioFloor,
    /// ceil(max degree / min degree); applies to non-regular graphs only
    DegreeRatioCeil,
    /// 2; applies when max degree - min degree <= 1
    AlmostRegular,
}

impl BoundKind {
    pub fn name(self) -> &'static str {
        match self {
            BoundKind::TrivialMaxDegree => "trivial_max_degree",
            BoundKind::DegreeGap => "degree_gap",
            BoundKind::VertexDeficiency => "vertex_deficiency",
            BoundKind::DegreeRatioFloor => "degree_ratio_floor",
            BoundKind::DegreeRatioCeil => "degree_ratio_ceil",
            BoundKind::AlmostRegular => "almost_regular",
        }
    }
}

#[derive(Debug, Clone)]
pub struct BoundRecord {
    pub kind: BoundKind,
    pub value: usize,
    pub holds: bool,
    pub tight: bool,
}

#[derive(Debug, Clone)]
pub struct BoundReport {
    pub sp: usize,
    pub records: Vec<BoundRecord>,
}

impl BoundReport {
    pub fn record(&self, kind: BoundKind) -> Option<&BoundRecord> {
        self.records.iter().find(|r| r.kind == kind)
    }

    pub fn all_hold(&self) -> bool {
        self.records.iter().all(|r| r.holds)
    }
}

/// Evaluates every applicable bound against the exact spanning parameter.
pub fn bound_values(g: &Multigraph, caps: &Caps) -> Result<BoundReport> {
    let sp = sp::sp_factor_value(g, caps)?;
    let delta = g.max_degree();
    let delta_min = g.min_degree();
    let nu = matching::matching_number(g);
    let mut values = vec![
        (BoundKind::TrivialMaxDegree, delta),
        (BoundKind::DegreeGap, delta - delta_min + 2),
        (BoundKind::VertexDeficiency, g.vertex_count() - 2 * nu + 1),
        (BoundKind::DegreeRatioFloor, 1 + delta / delta_min),
    ];
    if delta != delta_min {
        values.push((BoundKind::DegreeRatioCeil, delta.div_ceil(delta_min)));
    }
    if delta - delta_min <= 1 {
        values.push((BoundKind::AlmostRegular, 2));
    }
    let records = values
        .into_iter()
        .map(|(kind, value)| BoundRecord { kind, value, holds: sp <= value, tight: sp == value })
        .collect();
    Ok(BoundReport { sp, records })
}

// ---------------------------------------------------------------------------
// Bounded-degree partitions
// ---------------------------------------------------------------------------

/// Vertex bipartition whose induced subgraphs have max degree at most s
/// and t respectively, for any graph with max degree <= s + t - 1.
#[derive(Debug, Clone)]
pub struct LovaszPartition {
    /// side with induced max degree <= s
    pub s_side: VertexSet,
    /// side with induced max degree <= t
    pub t_side: VertexSet,
    /// vertex moves performed; never exceeds t * |E|, the initial value of
    /// the potential t * e(s side) + s * e(t side)
    pub moves: usize,
}

/// Local search: start with every vertex on the s side and keep moving the
/// lowest-index vertex violating its side's bound. Each move drops the
/// potential t * e(s side) + s * e(t side) by at least one, which bounds
/// the number of moves by its initial value t * |E|.
pub fn lovasz_partition(g: &Multigraph, s: usize, t: usize) -> Result<LovaszPartition> {
    if s == 0 || t == 0 {
        return Err(Error::InvalidInput("side bounds must be positive".into()));
    }
    if g.max_degree() > s + t - 1 {
        return Err(Error::Precondition(format!(
            "max degree {} exceeds s + t - 1 = {}",
            g.max_degree(),
            s + t - 1
        )));
    }
    let n = g.vertex_count();
    // true = s side
    let mut on_s = vec![true; n];
    let mut same_side_degree: Vec<usize> = g.degrees();
    let mut moves = 0usize;
    let move_cap = t * g.edge_count() + 1;
    loop {
        let violator = (0..n).find(|&v| {
            let cap = if on_s[v] { s } else { t };
            same_side_degree[v] > cap
        });
        let Some(v) = violator else { break };
        if moves >= move_cap {
            return Err(Error::Internal("partition search exceeded its move budget".into()));
        }
        for &(_, u) in g.incident(v) {
            if on_s[u] == on_s[v] {
                same_side_degree[u] -= 1;
            } else {
                same_side_degree[u] += 1;
            }
        }
        on_s[v] = !on_s[v];
        same_side_degree[v] = g.incident(v).iter().filter(|&&(_, u)| on_s[u] == on_s[v]).count();
        moves += 1;
    }
    let s_side = (0..n).filter(|&v| on_s[v]).collect();
    let t_side = (0..n).filter(|&v| !on_s[v]).collect();
    Ok(LovaszPartition { s_side, t_side, moves })
}

/// Splits the edge set into two spanning subgraphs with per-vertex degree
/// at most s on the first side and t on the second. Exists whenever the
/// max degree is at most s + t; found by backtracking with cap pruning.
pub fn degree_split(g: &Multigraph, s: usize, t: usize) -> Result<(EdgeSet, EdgeSet)> {
    if g.max_degree() > s + t {
        return Err(Error::Precondition(format!(
            "max degree {} exceeds s + t = {}",
            g.max_degree(),
            s + t
        )));
    }
    let n = g.vertex_count();
    let mut to_first = vec![false; g.edge_count()];
    let mut first_deg = vec![0usize; n];
    let mut second_deg = vec![0usize; n];
    fn go(
        g: &Multigraph,
        s: usize,
        t: usize,
        idx: usize,
        to_first: &mut [bool],
        first_deg: &mut [usize],
        second_deg: &mut [usize],
    ) -> bool {
        if idx == g.edge_count() {
            return true;
        }
        let (a, b) = g.endpoints(idx);
        if first_deg[a] < s && first_deg[b] < s {
            first_deg[a] += 1;
            first_deg[b] += 1;
            to_first[idx] = true;
            if go(g, s, t, idx + 1, to_first, first_deg, second_deg) {
                return true;
            }
            first_deg[a] -= 1;
            first_deg[b] -= 1;
        }
        if second_deg[a] < t && second_deg[b] < t {
            second_deg[a] += 1;
            second_deg[b] += 1;
            to_first[idx] = false;
            if go(g, s, t, idx + 1, to_first, first_deg, second_deg) {
                return true;
            }
            second_deg[a] -= 1;
            second_deg[b] -= 1;
        }
        false
    }
    if !go(g, s, t, 0, &mut to_first, &mut first_deg, &mut second_deg) {
        return Err(Error::Internal("no degree split found below the guaranteed threshold".into()));
    }
    let first: EdgeSet = (0..g.edge_count()).filter(|&e| to_first[e]).collect();
    let second: EdgeSet = (0..g.edge_count()).filter(|&e| !to_first[e]).collect();
    Ok((first, second))
}

#[derive(Debug, Clone)]
pub struct PartitionFactor {
    pub factor: FactorWitness,
    /// true when min degree 1 forced the trivial whole-graph factor
    pub fallback: bool,
}

/// The constructive [1, max degree - min degree + 2]-factor: split the
/// edges with per-vertex caps (max degree - min degree + 2, min degree - 1);
/// the second side absorbs less than the min degree at every vertex, so
/// the first side keeps every vertex covered.
///
/// Min degree 1 makes the second cap zero, so the construction degrades to
/// the whole graph as a [1, max degree]-factor, flagged as a fallback.
pub fn factor_from_partition(g: &Multigraph) -> Result<PartitionFactor> {
    if g.vertex_count() == 0 || g.has_isolated_vertex() {
        return Err(Error::Precondition("graph must have no isolated vertices".into()));
    }
    let delta = g.max_degree();
    let delta_min = g.min_degree();
    if delta_min == 1 {
        let factor =
            FactorWitness { edges: (0..g.edge_count()).collect(), bound: delta };
        factor.validate(g)?;
        return Ok(PartitionFactor { factor, fallback: true });
    }
    let s = delta - delta_min + 2;
    let t = delta_min - 1;
    let (first, _second) = degree_split(g, s, t)?;
    let factor = FactorWitness { edges: first, bound: s };
    factor.validate(g)?;
    Ok(PartitionFactor { factor, fallback: false })
}

// ---------------------------------------------------------------------------
// Degree-condition criterion for [a,b]-factors
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct YuLiuViolation {
    pub set: VertexSet,
    pub weighted_low_degree_sum: usize,
    pub allowance: usize,
}

#[derive(Debug, Clone)]
pub struct YuLiuOutcome {
    pub holds: bool,
    pub violation: Option<YuLiuViolation>,
}

/// For b > a >= 1, an [a,b]-factor exists exactly when every vertex set S
/// satisfies sum over i < a of (a - i) * p_i(G - S) <= b |S|, where p_i
/// counts degree-i vertices of G - S. Checked exhaustively over S.
pub fn yu_liu_check(g: &Multigraph, a: usize, b: usize, caps: &Caps) -> Result<YuLiuOutcome> {
    if a < 1 || b <= a {
        return Err(Error::InvalidInput("the criterion needs b > a >= 1".into()));
    }
    caps.check_subset_vertices(g.vertex_count())?;
    for set in crate::graph::subsets_by_size(g.vertex_count()) {
        let rest = g.delete_vertices(&set)?.graph;
        let lhs: usize = rest
            .degrees()
            .iter()
            .filter(|&&d| d < a)
            .map(|&d| a - d)
            .sum();
        let rhs = b * set.len();
        if lhs > rhs {
            return Ok(YuLiuOutcome {
                holds: false,
                violation: Some(YuLiuViolation {
                    set,
                    weighted_low_degree_sum: lhs,
                    allowance: rhs,
                }),
            });
        }
    }
    Ok(YuLiuOutcome { holds: true, violation: None })
}

// ---------------------------------------------------------------------------
// Empirical sweep for the unproved non-regular sharpening
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct HuntFinding {
    pub graph: String,
    pub sp: usize,
    pub max_degree: usize,
    pub min_degree: usize,
}

/// Outcome of searching for a non-regular graph with sp above
/// max degree - min degree + 1. Findings are reported, never asserted: the
/// sharpened bound is an open claim, not a theorem of this crate.
#[derive(Debug, Clone, Default)]
pub struct HuntReport {
    pub tested: usize,
    pub skipped: usize,
    pub violations: Vec<HuntFinding>,
}

pub fn hunt_nonregular_improvement<I>(graphs: I, budget: usize, caps: &Caps) -> HuntReport
where
    I: IntoIterator<Item = Multigraph>,
{
    let mut report = HuntReport::default();
    for g in graphs {
        if report.tested >= budget {
            break;
        }
        if g.is_regular() || g.vertex_count() == 0 || g.has_isolated_vertex() {
            report.skipped += 1;
            continue;
        }
        let Ok(sp) = sp::sp_factor_value(&g, caps) else {
            report.skipped += 1;
            continue;
        };
        report.tested += 1;
        let (delta, delta_min) = (g.max_degree(), g.min_degree());
        if sp > delta - delta_min + 1 {
            report.violations.push(HuntFinding {
                graph: crate::format::compact(&g),
                sp,
                max_degree: delta,
                min_degree: delta_min,
            });
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path, random_multigraph, star, tightness_graph};
    use crate::graph::subgraph_degrees;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn bound_table_for_c5() {
        let report = bound_values(&cycle(5), &caps()).unwrap();
        assert_eq!(report.sp, 2);
        for kind in [
            BoundKind::TrivialMaxDegree,
            BoundKind::DegreeGap,
            BoundKind::VertexDeficiency,
            BoundKind::DegreeRatioFloor,
            BoundKind::AlmostRegular,
        ] {
            let r = report.record(kind).unwrap();
            assert_eq!(r.value, 2);
            assert!(r.holds && r.tight);
        }
        assert!(report.record(BoundKind::DegreeRatioCeil).is_none());
    }

    #[test]
    fn bound_table_for_the_star() {
        let report = bound_values(&star(3), &caps()).unwrap();
        assert_eq!(report.sp, 3);
        assert_eq!(report.record(BoundKind::DegreeGap).unwrap().value, 4);
        assert!(!report.record(BoundKind::DegreeGap).unwrap().tight);
        let vd = report.record(BoundKind::VertexDeficiency).unwrap();
        assert_eq!(vd.value, 3);
        assert!(vd.tight);
        let ceil = report.record(BoundKind::DegreeRatioCeil).unwrap();
        assert_eq!(ceil.value, 3);
        assert!(ceil.tight);
        assert!(report.record(BoundKind::AlmostRegular).is_none());
        assert!(report.all_hold());
    }

    #[test]
    fn ratio_bound_gap_grows_on_the_path_replacement_family() {
        let mut last_gap = 0;
        for r in [3usize, 5, 7] {
            let g = tightness_graph(&complete(r + 1), 0).unwrap();
            let report = bound_values(&g, &caps()).unwrap();
            assert_eq!(report.sp, 1);
            let bound = report.record(BoundKind::DegreeRatioCeil).unwrap().value;
            assert_eq!(bound, r.div_ceil(2));
            let gap = bound - report.sp;
            assert!(gap > last_gap);
            last_gap = gap;
        }
    }

    #[test]
    fn partition_examples() {
        let p = lovasz_partition(&cycle(4), 1, 2).unwrap();
        assert_eq!(p.s_side, VertexSet::from([1, 3]));
        assert_eq!(p.t_side, VertexSet::from([0, 2]));

        let p = lovasz_partition(&complete(4), 2, 2).unwrap();
        assert_eq!(p.s_side.len() + p.t_side.len(), 4);
        // a 5-vertex graph with max degree 4 cannot split into (2,2)
        assert!(lovasz_partition(&complete(5), 2, 2).is_err());
        assert!(lovasz_partition(&cycle(4), 0, 3).is_err());
    }

    #[test]
    fn partition_postconditions_on_random_graphs() {
        for seed in 0..60 {
            let g = random_multigraph(7, 9, 2, seed).unwrap();
            let delta = g.max_degree();
            for s in 1..=delta + 1 {
                for t in 1..=delta + 1 {
                    if delta > s + t - 1 {
                        continue;
                    }
                    let p = lovasz_partition(&g, s, t).unwrap();
                    let check = |side: &VertexSet, cap: usize| {
                        for &v in side {
                            let d = g
                                .incident(v)
                                .iter()
                                .filter(|&&(_, u)| side.contains(&u))
                                .count();
                            assert!(d <= cap);
                        }
                    };
                    check(&p.s_side, s);
                    check(&p.t_side, t);
                    assert!(p.moves <= t * g.edge_count());
                }
            }
        }
    }

    #[test]
    fn degree_split_respects_both_caps() {
        for seed in 0..40 {
            let g = random_multigraph(6, 9, 2, seed).unwrap();
            let delta = g.max_degree();
            let s = delta.div_ceil(2);
            let t = delta - s;
            if t == 0 {
                continue;
            }
            let (first, second) = degree_split(&g, s, t).unwrap();
            assert_eq!(first.len() + second.len(), g.edge_count());
            assert!(subgraph_degrees(&g, &first).iter().all(|&d| d <= s));
            assert!(subgraph_degrees(&g, &second).iter().all(|&d| d <= t));
        }
    }

    #[test]
    fn partition_factor_examples() {
        let f = factor_from_partition(&cycle(5)).unwrap();
        assert!(!f.fallback);
        assert_eq!(f.factor.bound, 2);
        f.factor.validate(&cycle(5)).unwrap();

        let f = factor_from_partition(&complete(4)).unwrap();
        assert!(!f.fallback);
        assert_eq!(f.factor.bound, 2);
        f.factor.validate(&complete(4)).unwrap();

        let f = factor_from_partition(&path(4)).unwrap();
        assert!(f.fallback);
        assert_eq!(f.factor.bound, 2);
        f.factor.validate(&path(4)).unwrap();
    }

    #[test]
    fn degree_condition_examples() {
        assert!(yu_liu_check(&cycle(5), 1, 2, &caps()).unwrap().holds);

        let out = yu_liu_check(&star(3), 1, 2, &caps()).unwrap();
        assert!(!out.holds);
        let v = out.violation.unwrap();
        assert_eq!(v.set, VertexSet::from([0]));
        assert_eq!((v.weighted_low_degree_sum, v.allowance), (3, 2));

        assert!(yu_liu_check(&cycle(5), 2, 2, &caps()).is_err());
        assert!(yu_liu_check(&cycle(5), 0, 2, &caps()).is_err());
    }

    #[test]
    fn degree_condition_agrees_with_the_trivial_factor() {
        // every graph without isolated vertices has a [1, max degree]-factor
        for seed in 0..30 {
            let g = random_multigraph(6, 8, 2, seed).unwrap();
            if g.has_isolated_vertex() || g.max_degree() < 2 {
                continue;
            }
            assert!(yu_liu_check(&g, 1, g.max_degree(), &caps()).unwrap().holds);
        }
    }

    #[test]
    fn hunt_reports_without_asserting() {
        let graphs = vec![star(3), path(4), cycle(5), complete(4)];
        let report = hunt_nonregular_improvement(graphs, 10, &caps());
        // star and path are non-regular, both consistent with the claim
        assert_eq!(report.tested, 2);
        assert_eq!(report.skipped, 2);
        assert!(report.violations.is_empty());
    }
}
