//! The spanning parameter sp: least k such that the graph has a
//! [1,k]-factor, equivalently a spanning k-edge-colorable subgraph,
//! equivalently a spanning maximum k-edge-colorable subgraph.
//!
//! The three routes are implemented independently so their agreement is a
//! real test, not a tautology:
//!
//! * `sp_factor_value` / `sp_factor_search` look for degree-[1,k] spanning
//!   subgraphs directly (subset search; a degree DP takes over for forests
//!   too large for subset search);
//! * `sp2_bruteforce` searches for a spanning k-edge-colorable subgraph;
//! * `sp3_bruteforce` scans the maximum k-edge-colorable subgraphs for a
//!   spanning member;
//! * `sp_formula` evaluates the closed form: 1 when a perfect matching
//!   exists, otherwise max(2, max over nonempty S of ceil(p0(G-S)/|S|)).
//!
//! `exchange_to_spanning_max` upgrades any maximum k-edge-colorable
//! subgraph to a spanning one, given a spanning k-edge-colorable subgraph
//! as a guide, by coverage and overlap swaps.

use crate::coloring::{self, EdgeColoring};
use crate::error::{Caps, Error, Result};
use crate::graph::{
    covered_count, is_spanning, missed_vertices, spanning_forest, subgraph_degree,
    subgraph_degrees, EdgeSet, Multigraph,
};
use crate::matching;

/// A spanning subgraph whose degrees all lie in [1, bound].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorWitness {
    pub edges: EdgeSet,
    pub bound: usize,
}

impl FactorWitness {
    pub fn validate(&self, g: &Multigraph) -> Result<()> {
        if let Some(&e) = self.edges.iter().find(|&&e| e >= g.edge_count()) {
            return Err(Error::InvalidInput(format!("edge {e} out of range")));
        }
        let deg = subgraph_degrees(g, &self.edges);
        match deg.iter().position(|&d| d == 0 || d > self.bound) {
            None => Ok(()),
            Some(v) => Err(Error::InvalidInput(format!(
                "vertex {v} has degree {} outside [1, {}]",
                deg[v], self.bound
            ))),
        }
    }
}

/// sp together with both witness objects.
#[derive(Debug, Clone)]
pub struct SpResult {
    pub sp: usize,
    pub factor: FactorWitness,
    pub spanning_maximum: EdgeSet,
    pub coloring: EdgeColoring,
}

fn require_spannable(g: &Multigraph) -> Result<()> {
    if g.vertex_count() == 0 {
        return Err(Error::InvalidInput("empty graph has no spanning subgraphs".into()));
    }
    if g.has_isolated_vertex() {
        return Err(Error::Precondition(
            "graph has an isolated vertex; spanning parameters are undefined".into(),
        ));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Closed form
// ---------------------------------------------------------------------------

/// 1 when a perfect matching exists; otherwise the least k >= 2 with
/// p0(G - S) <= k |S| for every nonempty S, i.e.
/// max(2, max over nonempty S of ceil(p0(G-S)/|S|)).
pub fn sp_formula(g: &Multigraph, caps: &Caps) -> Result<usize> {
    require_spannable(g)?;
    if 2 * matching::matching_number(g) == g.vertex_count() {
        return Ok(1);
    }
    caps.check_subset_vertices(g.vertex_count())?;
    let mut best = 2;
    for s in crate::graph::subsets_by_size(g.vertex_count()) {
        if s.is_empty() {
            continue;
        }
        let p0 = g.delete_vertices(&s)?.graph.component_profile().isolated_vertices;
        best = best.max(p0.div_ceil(s.len()));
    }
    Ok(best)
}

// ---------------------------------------------------------------------------
// Route 1: [1,k]-factors
// ---------------------------------------------------------------------------

/// The least k admitting a [1,k]-factor. k = 1 is the perfect matching
/// test; k >= 2 runs a subset search with degree and coverage pruning.
/// Forests beyond the subset cap take the exact degree DP instead.
pub fn sp_factor_value(g: &Multigraph, caps: &Caps) -> Result<usize> {
    require_spannable(g)?;
    if 2 * matching::matching_number(g) == g.vertex_count() {
        return Ok(1);
    }
    let within_cap = g.edge_count() <= caps.subset_search_edges;
    if !within_cap && !g.is_forest() {
        caps.check_subset_search(g.edge_count())?;
    }
    for k in 2..=g.max_degree() {
        let feasible = if within_cap {
            factor_exists(g, k)
        } else {
            forest::min_factor_cost(g, k).is_some()
        };
        if feasible {
            return Ok(k);
        }
    }
    Err(Error::Internal("no [1,max-degree]-factor found".into()))
}

/// sp with explicit witnesses: a minimum-edge [1,sp]-factor, and a spanning
/// maximum sp-edge-colorable subgraph produced through the factor ->
/// sub-forest -> exchange pipeline.
pub fn sp_factor_search(g: &Multigraph, caps: &Caps) -> Result<SpResult> {
    let sp = sp_factor_value(g, caps)?;
    let within_cap = g.edge_count() <= caps.subset_search_edges;
    let factor_edges = if within_cap {
        min_factor(g, sp).ok_or_else(|| Error::Internal("factor vanished between passes".into()))?
    } else {
        forest::min_factor_edges(g, sp)
            .ok_or_else(|| Error::Internal("forest factor vanished between passes".into()))?
    };
    let factor = FactorWitness { edges: factor_edges, bound: sp };
    let (guide, _) = spanning_kecs_from_factor(g, &factor)?;
    let maximum = if within_cap {
        coloring::max_k_ecs(g, sp, caps)?.0
    } else {
        forest::max_degree_bounded_edges(g, sp)
    };
    let spanning_maximum = exchange_to_spanning_max(g, sp, &guide, &maximum, caps)?;
    let coloring = coloring::find_k_edge_coloring(g, &spanning_maximum, sp, caps)?
        .ok_or_else(|| Error::Internal("spanning maximum subgraph lost colorability".into()))?;
    Ok(SpResult { sp, factor, spanning_maximum, coloring })
}

/// Does a spanning subgraph with all degrees in [1,k] exist?
fn factor_exists(g: &Multigraph, k: usize) -> bool {
    let n = g.vertex_count();
    let mut deg_cur = vec![0usize; n];
    let mut deg_rem = vec![0usize; n];
    for &(a, b) in g.edges() {
        deg_rem[a] += 1;
        deg_rem[b] += 1;
    }
    fn go(
        g: &Multigraph,
        k: usize,
        idx: usize,
        covered: usize,
        deg_cur: &mut [usize],
        deg_rem: &mut [usize],
    ) -> bool {
        if covered == g.vertex_count() {
            return true;
        }
        if idx == g.edge_count() {
            return false;
        }
        let (a, b) = g.endpoints(idx);
        deg_rem[a] -= 1;
        deg_rem[b] -= 1;
        let mut hit = false;
        if deg_cur[a] < k && deg_cur[b] < k {
            let newly = (deg_cur[a] == 0) as usize + (deg_cur[b] == 0) as usize;
            deg_cur[a] += 1;
            deg_cur[b] += 1;
            hit = go(g, k, idx + 1, covered + newly, deg_cur, deg_rem);
            deg_cur[a] -= 1;
            deg_cur[b] -= 1;
        }
        if !hit {
            // excluding idx must not strand an uncovered endpoint
            let dead = (deg_cur[a] == 0 && deg_rem[a] == 0) || (deg_cur[b] == 0 && deg_rem[b] == 0);
            if !dead {
                hit = go(g, k, idx + 1, covered, deg_cur, deg_rem);
            }
        }
        deg_rem[a] += 1;
        deg_rem[b] += 1;
        hit
    }
    go(g, k, 0, 0, &mut deg_cur, &mut deg_rem)
}

/// Minimum-edge [1,k]-factor by branch and bound (small witnesses make
/// better fixtures). Exclude-first order with the bound
/// |current| + ceil(uncovered / 2) >= |best|.
fn min_factor(g: &Multigraph, k: usize) -> Option<EdgeSet> {
    struct Search<'a> {
        g: &'a Multigraph,
        k: usize,
        current: Vec<usize>,
        deg_cur: Vec<usize>,
        deg_rem: Vec<usize>,
        covered: usize,
        best: Option<Vec<usize>>,
    }
    impl Search<'_> {
        fn go(&mut self, idx: usize) {
            let n = self.g.vertex_count();
            if let Some(best) = &self.best {
                let lower = self.current.len() + (n - self.covered).div_ceil(2);
                if lower >= best.len() {
                    return;
                }
            }
            if self.covered == n {
                self.best = Some(self.current.clone());
                return;
            }
            if idx == self.g.edge_count() {
                return;
            }
            let (a, b) = self.g.endpoints(idx);
            self.deg_rem[a] -= 1;
            self.deg_rem[b] -= 1;
            let dead = (self.deg_cur[a] == 0 && self.deg_rem[a] == 0)
                || (self.deg_cur[b] == 0 && self.deg_rem[b] == 0);
            if !dead {
                self.go(idx + 1);
            }
            if self.deg_cur[a] < self.k && self.deg_cur[b] < self.k {
                let newly = (self.deg_cur[a] == 0) as usize + (self.deg_cur[b] == 0) as usize;
                self.deg_cur[a] += 1;
                self.deg_cur[b] += 1;
                self.covered += newly;
                self.current.push(idx);
                self.go(idx + 1);
                self.current.pop();
                self.covered -= newly;
                self.deg_cur[a] -= 1;
                self.deg_cur[b] -= 1;
            }
            self.deg_rem[a] += 1;
            self.deg_rem[b] += 1;
        }
    }
    let n = g.vertex_count();
    let mut deg_rem = vec![0usize; n];
    for &(a, b) in g.edges() {
        deg_rem[a] += 1;
        deg_rem[b] += 1;
    }
    let mut search = Search {
        g,
        k,
        current: Vec::new(),
        deg_cur: vec![0; n],
        deg_rem,
        covered: 0,
        best: None,
    };
    search.go(0);
    search.best.map(|edges| edges.into_iter().collect())
}

// ---------------------------------------------------------------------------
// Routes 2 and 3
// ---------------------------------------------------------------------------

/// Least k such that a spanning k-edge-colorable subgraph exists, found by
/// direct search.
pub fn sp2_bruteforce(g: &Multigraph, caps: &Caps) -> Result<usize> {
    require_spannable(g)?;
    caps.check_subset_search(g.edge_count())?;
    for k in 1..=g.max_degree() {
        if exists_spanning_k_colorable(g, k)? {
            return Ok(k);
        }
    }
    Err(Error::Internal("no spanning max-degree-colorable subgraph found".into()))
}

fn exists_spanning_k_colorable(g: &Multigraph, k: usize) -> Result<bool> {
    struct Search<'a> {
        g: &'a Multigraph,
        k: usize,
        state: coloring::ColorState,
        deg_cur: Vec<usize>,
        deg_rem: Vec<usize>,
        covered: usize,
    }
    impl Search<'_> {
        fn go(&mut self, idx: usize) -> bool {
            if self.covered == self.g.vertex_count() {
                return true;
            }
            if idx == self.g.edge_count() {
                return false;
            }
            let (a, b) = self.g.endpoints(idx);
            self.deg_rem[a] -= 1;
            self.deg_rem[b] -= 1;
            let mut hit = false;
            if self.deg_cur[a] < self.k && self.deg_cur[b] < self.k {
                if let Some(token) = self.state.include(self.g, idx) {
                    let newly =
                        (self.deg_cur[a] == 0) as usize + (self.deg_cur[b] == 0) as usize;
                    self.deg_cur[a] += 1;
                    self.deg_cur[b] += 1;
                    self.covered += newly;
                    hit = self.go(idx + 1);
                    self.covered -= newly;
                    self.deg_cur[a] -= 1;
                    self.deg_cur[b] -= 1;
                    self.state.undo(self.g, token);
                }
            }
            if !hit {
                let dead = (self.deg_cur[a] == 0 && self.deg_rem[a] == 0)
                    || (self.deg_cur[b] == 0 && self.deg_rem[b] == 0);
                if !dead {
                    hit = self.go(idx + 1);
                }
            }
            self.deg_rem[a] += 1;
            self.deg_rem[b] += 1;
            hit
        }
    }
    let n = g.vertex_count();
    let mut deg_rem = vec![0usize; n];
    for &(a, b) in g.edges() {
        deg_rem[a] += 1;
        deg_rem[b] += 1;
    }
    let mut search = Search {
        g,
        k,
        state: coloring::ColorState::new(n, k.min(g.edge_count()).max(1)),
        deg_cur: vec![0; n],
        deg_rem,
        covered: 0,
    };
    Ok(search.go(0))
}

/// Least k such that some maximum k-edge-colorable subgraph is spanning,
/// found by scanning the enumeration of maximum k-ECS for each k.
pub fn sp3_bruteforce(g: &Multigraph, caps: &Caps) -> Result<usize> {
    require_spannable(g)?;
    caps.check_subset_search(g.edge_count())?;
    for k in 1.. {
        let nu = coloring::max_k_ecs_size(g, k, caps)?;
        if nu == g.edge_count() {
            // the whole edge set is the unique maximum, and it spans
            return Ok(k);
        }
        let spanning =
            coloring::scan_max_k_ecs(g, k, nu, caps, &mut |set| is_spanning(g, set))?;
        if spanning.is_some() {
            return Ok(k);
        }
    }
    unreachable!("the loop returns at k = chromatic index at the latest")
}

/// Is there a spanning maximum k-edge-colorable subgraph? Agrees with
/// `k >= sp(G)`.
pub fn spanning_max_exists(g: &Multigraph, k: usize, caps: &Caps) -> Result<bool> {
    require_spannable(g)?;
    let nu = nu_k(g, k, caps)?;
    if nu == g.edge_count() {
        return Ok(true);
    }
    Ok(coloring::scan_max_k_ecs(g, k, nu, caps, &mut |set| is_spanning(g, set))?.is_some())
}

/// nu_k through the right exact route: degree DP for forests (uncapped),
/// branch and bound otherwise.
pub(crate) fn nu_k(g: &Multigraph, k: usize, caps: &Caps) -> Result<usize> {
    if g.is_forest() {
        Ok(forest::max_degree_bounded_edges(g, k).len())
    } else {
        coloring::max_k_ecs_size(g, k, caps)
    }
}

// ---------------------------------------------------------------------------
// Factor -> spanning k-ECS extraction
// ---------------------------------------------------------------------------

/// Extracts a spanning forest of a [1,k]-factor and colors it with at most
/// k colors. A sub-forest of the factor has maximum degree at most k, and
/// forests are max-degree-edge-colorable, so this always succeeds.
pub fn spanning_kecs_from_factor(
    g: &Multigraph,
    factor: &FactorWitness,
) -> Result<(EdgeSet, EdgeColoring)> {
    factor.validate(g)?;
    let forest = spanning_forest(g, &factor.edges);
    let coloring = coloring::color_forest_exact(g, &forest, factor.bound);
    Ok((forest, coloring))
}

/// A spanning k-edge-colorable subgraph witness built through the factor
/// machinery; errors when k is below the spanning parameter.
pub fn spanning_kecs_witness(
    g: &Multigraph,
    k: usize,
    caps: &Caps,
) -> Result<(EdgeSet, EdgeColoring)> {
    require_spannable(g)?;
    let edges = if g.edge_count() <= caps.subset_search_edges {
        min_factor(g, k)
    } else if g.is_forest() {
        forest::min_factor_edges(g, k)
    } else {
        return Err(Error::ResourceCap {
            cap: "subset_search_edges",
            limit: caps.subset_search_edges,
            actual: g.edge_count(),
        });
    };
    let edges =
        edges.ok_or_else(|| Error::Precondition(format!("no [1,{k}]-factor exists")))?;
    spanning_kecs_from_factor(g, &FactorWitness { edges, bound: k })
}

// ---------------------------------------------------------------------------
// The exchange procedure
// ---------------------------------------------------------------------------

/// Upgrades the maximum k-edge-colorable subgraph `maximum` to a spanning
/// one, guided by the spanning k-edge-colorable subgraph `guide`.
///
/// While some vertex u is missed: either a coverage swap exists (a
/// neighbor u_i of u has an in-subgraph neighbor v_i of degree >= 2; swap
/// the edge (u_i, v_i) for an edge (u, u_i), covering one more vertex), or
/// every such v_i has degree 1, in which case the guide edge (u, w) at u
/// replaces some non-guide edge at w (keeping coverage, growing the overlap
/// with the guide). The pair (covered vertices, overlap) strictly increases
/// lexicographically, so at most |V| * |E| swaps run.
///
/// Preconditions are validated eagerly: `guide` must be spanning and
/// k-edge-colorable, `maximum` k-edge-colorable of size exactly nu_k.
pub fn exchange_to_spanning_max(
    g: &Multigraph,
    k: usize,
    guide: &EdgeSet,
    maximum: &EdgeSet,
    caps: &Caps,
) -> Result<EdgeSet> {
    require_spannable(g)?;
    if k == 0 {
        return Err(Error::InvalidInput("k must be positive".into()));
    }
    if !is_spanning(g, guide) {
        return Err(Error::Precondition("guide subgraph is not spanning".into()));
    }
    if coloring::find_k_edge_coloring(g, guide, k, caps)?.is_none() {
        return Err(Error::Precondition("guide subgraph is not k-edge-colorable".into()));
    }
    if coloring::find_k_edge_coloring(g, maximum, k, caps)?.is_none() {
        return Err(Error::Precondition("maximum candidate is not k-edge-colorable".into()));
    }
    let is_maximum = if g.is_forest() {
        forest::max_degree_bounded_edges(g, k).len() == maximum.len()
    } else {
        !coloring::exists_k_colorable_of_size(g, k, maximum.len() + 1, caps)?
    };
    if !is_maximum {
        return Err(Error::Precondition(
            "candidate is not a maximum k-edge-colorable subgraph".into(),
        ));
    }

    let mut current = maximum.clone();
    let move_cap = (g.vertex_count() + 1) * (g.edge_count() + 1);
    for _ in 0..move_cap {
        let missed = missed_vertices(g, &current);
        let Some(&u) = missed.first() else {
            // spanning reached; the swaps preserve size and colorability
            if current.len() != maximum.len()
                || coloring::find_k_edge_coloring(g, &current, k, caps)?.is_none()
            {
                return Err(Error::Internal("exchange result lost size or colorability".into()));
            }
            return Ok(current);
        };
        let before = (covered_count(g, &current), overlap(&current, guide));

        if let Some((add, remove)) = coverage_move(g, &current, guide, u) {
            current.remove(&remove);
            current.insert(add);
        } else {
            let (add, remove) = overlap_move(g, &current, guide, u)?;
            current.remove(&remove);
            current.insert(add);
        }

        let after = (covered_count(g, &current), overlap(&current, guide));
        if after <= before {
            return Err(Error::Internal("exchange move made no progress".into()));
        }
    }
    Err(Error::Internal("exchange exceeded its move budget".into()))
}

fn overlap(a: &EdgeSet, b: &EdgeSet) -> usize {
    a.intersection(b).count()
}

/// Coverage swap for the missed vertex `u`: scan its neighbors u_i in
/// ascending vertex order; for the first u_i owning a subgraph edge to a
/// vertex of subgraph degree >= 2, swap that edge (preferring one outside
/// the guide, then lowest index) for the lowest-index edge (u, u_i).
fn coverage_move(
    g: &Multigraph,
    current: &EdgeSet,
    guide: &EdgeSet,
    u: usize,
) -> Option<(usize, usize)> {
    let mut neighbors: Vec<(usize, usize)> = g.incident(u).iter().map(|&(e, v)| (v, e)).collect();
    neighbors.sort_unstable();
    let mut seen = std::collections::BTreeSet::new();
    for (ui, connecting) in neighbors {
        if !seen.insert(ui) {
            continue;
        }
        let removal = g
            .incident(ui)
            .iter()
            .filter(|&&(e, vi)| {
                current.contains(&e) && vi != u && subgraph_degree(g, current, vi) >= 2
            })
            .map(|&(e, _)| (guide.contains(&e), e))
            .min();
        if let Some((_, e)) = removal {
            return Some((connecting, e));
        }
    }
    None
}

/// Overlap swap: take the lowest-index guide edge (u, w) at the missed
/// vertex u and the lowest-index current edge at w outside the guide.
fn overlap_move(
    g: &Multigraph,
    current: &EdgeSet,
    guide: &EdgeSet,
    u: usize,
) -> Result<(usize, usize)> {
    let &add = guide
        .iter()
        .find(|&&e| {
            let (a, b) = g.endpoints(e);
            a == u || b == u
        })
        .ok_or_else(|| Error::Internal("spanning guide misses a vertex".into()))?;
    let (a, b) = g.endpoints(add);
    let w = if a == u { b } else { a };
    let remove = g
        .incident(w)
        .iter()
        .map(|&(e, _)| e)
        .filter(|e| current.contains(e) && !guide.contains(e))
        .min()
        .ok_or_else(|| {
            Error::Internal("every subgraph edge at the guide endpoint lies in the guide".into())
        })?;
    Ok((add, remove))
}

// ---------------------------------------------------------------------------
// Forest DP: exact factors and degree-bounded maxima without subset search
// ---------------------------------------------------------------------------

pub(crate) mod forest {
    use super::*;

    const INF: usize = usize::MAX / 4;

    struct Rooted {
        /// post-order over all vertices, children before parents
        order: Vec<usize>,
        /// parent vertex and connecting edge, None at component roots
        parent: Vec<Option<(usize, usize)>>,
    }

    fn root_forest(g: &Multigraph) -> Rooted {
        let n = g.vertex_count();
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut stack = vec![(root, false)];
            while let Some((v, processed)) = stack.pop() {
                if processed {
                    order.push(v);
                    continue;
                }
                stack.push((v, true));
                for &(e, u) in g.incident(v) {
                    if !seen[u] {
                        seen[u] = true;
                        parent[u] = Some((v, e));
                        stack.push((u, false));
                    }
                }
            }
        }
        Rooted { order, parent }
    }

    fn children(g: &Multigraph, rooted: &Rooted, v: usize) -> Vec<(usize, usize)> {
        g.incident(v)
            .iter()
            .filter(|&&(_, u)| rooted.parent[u].map(|(p, _)| p) == Some(v))
            .map(|&(e, u)| (u, e))
            .collect()
    }

    /// Minimum edge count of a [1,k]-factor of a forest, or None when no
    /// factor exists.
    pub fn min_factor_cost(g: &Multigraph, k: usize) -> Option<usize> {
        costs(g, k).map(|(total, _, _)| total)
    }

    /// A minimum-edge [1,k]-factor of a forest.
    pub fn min_factor_edges(g: &Multigraph, k: usize) -> Option<EdgeSet> {
        let (_, with, without) = costs(g, k)?;
        let rooted = root_forest(g);
        let mut chosen = EdgeSet::new();
        // decide top-down, roots use the without-parent state
        let mut include_parent = vec![false; g.vertex_count()];
        for &v in rooted.order.iter().rev() {
            let has_parent_edge = include_parent[v];
            let budget = if has_parent_edge { k - 1 } else { k };
            let picks = pick_children(g, &rooted, v, budget, !has_parent_edge, &with, &without);
            for (c, e) in picks {
                chosen.insert(e);
                include_parent[c] = true;
            }
        }
        Some(chosen)
    }

    /// (total cost, cost_with, cost_without) for the minimum-edge factor.
    fn costs(g: &Multigraph, k: usize) -> Option<(usize, Vec<usize>, Vec<usize>)> {
        if k == 0 {
            return None;
        }
        let rooted = root_forest(g);
        let n = g.vertex_count();
        let mut with = vec![INF; n];
        let mut without = vec![INF; n];
        for &v in &rooted.order {
            let kids = children(g, &rooted, v);
            let mut musts = 0usize;
            let mut base = 0usize;
            let mut deltas: Vec<(isize, usize)> = Vec::new();
            let mut infeasible = false;
            for &(c, _) in &kids {
                let include = with[c].saturating_add(1);
                let exclude = without[c];
                if include >= INF && exclude >= INF {
                    infeasible = true;
                    break;
                }
                if exclude >= INF {
                    musts += 1;
                    base = base.saturating_add(include);
                } else if include >= INF {
                    base = base.saturating_add(exclude);
                } else {
                    base = base.saturating_add(exclude);
                    deltas.push((include as isize - exclude as isize, c));
                }
            }
            if infeasible {
                continue;
            }
            deltas.sort_unstable();
            with[v] = extend_cost(base, musts, &deltas, k.saturating_sub(1), false);
            without[v] = extend_cost(base, musts, &deltas, k, true);
        }
        let mut total = 0usize;
        for (v, cost) in without.iter().enumerate() {
            if rooted.parent[v].is_none() {
                if *cost >= INF {
                    return None;
                }
                total += cost;
            }
        }
        Some((total, with, without))
    }

    /// Cost after taking the forced children plus any beneficial optional
    /// ones, within `budget` child edges. `need_one` forces at least one
    /// chosen edge (the vertex has no covered parent edge).
    fn extend_cost(
        base: usize,
        musts: usize,
        deltas: &[(isize, usize)],
        budget: usize,
        need_one: bool,
    ) -> usize {
        if musts > budget {
            return INF;
        }
        let mut cost = base as isize;
        let mut taken = musts;
        let mut iter = deltas.iter();
        if need_one && musts == 0 {
            match iter.next() {
                Some(&(d, _)) if budget >= 1 => {
                    cost += d;
                    taken = 1;
                }
                _ => return INF,
            }
        }
        for &(d, _) in iter {
            if d < 0 && taken < budget {
                cost += d;
                taken += 1;
            }
        }
        cost.max(0) as usize
    }

    /// The children whose edges the optimal factor includes at `v`,
    /// mirroring the cost computation's greedy choice.
    fn pick_children(
        g: &Multigraph,
        rooted: &Rooted,
        v: usize,
        budget: usize,
        need_one: bool,
        with: &[usize],
        without: &[usize],
    ) -> Vec<(usize, usize)> {
        let kids = children(g, rooted, v);
        let mut picks = Vec::new();
        let mut deltas: Vec<(isize, usize, usize)> = Vec::new();
        for &(c, e) in &kids {
            let include = with[c].saturating_add(1);
            let exclude = without[c];
            if exclude >= INF {
                picks.push((c, e));
            } else if include < INF {
                deltas.push((include as isize - exclude as isize, c, e));
            }
        }
        deltas.sort_unstable();
        let mut taken = picks.len();
        let mut iter = deltas.iter();
        if need_one && picks.is_empty() {
            if let Some(&(_, c, e)) = iter.next() {
                picks.push((c, e));
                taken = 1;
            }
        }
        for &(d, c, e) in iter {
            if d < 0 && taken < budget {
                picks.push((c, e));
                taken += 1;
            }
        }
        picks
    }

    /// The maximum edge set of the forest inducing degrees <= k: for a
    /// forest this is exactly a maximum k-edge-colorable subgraph.
    pub fn max_degree_bounded_edges(g: &Multigraph, k: usize) -> EdgeSet {
        let rooted = root_forest(g);
        let n = g.vertex_count();
        let mut with = vec![0usize; n];
        let mut without = vec![0usize; n];
        for &v in &rooted.order {
            let mut gains: Vec<(isize, usize)> = children(g, &rooted, v)
                .iter()
                .map(|&(c, _)| (1 + with[c] as isize - without[c] as isize, c))
                .collect();
            gains.sort_unstable_by_key(|&(d, c)| (-d, c));
            let base: usize = children(g, &rooted, v).iter().map(|&(c, _)| without[c]).sum();
            let take = |budget: usize| -> usize {
                let mut total = base as isize;
                for &(d, _) in gains.iter().take(budget) {
                    if d > 0 {
                        total += d;
                    }
                }
                total as usize
            };
            with[v] = take(k.saturating_sub(1));
            without[v] = take(k);
        }
        // reconstruct
        let mut chosen = EdgeSet::new();
        let mut has_parent_edge = vec![false; n];
        for &v in rooted.order.iter().rev() {
            let budget = if has_parent_edge[v] { k.saturating_sub(1) } else { k };
            let mut gains: Vec<(isize, usize, usize)> = children(g, &rooted, v)
                .iter()
                .map(|&(c, e)| (1 + with[c] as isize - without[c] as isize, c, e))
                .collect();
            gains.sort_unstable_by_key(|&(d, c, _)| (-d, c));
            for &(d, c, e) in gains.iter().take(budget) {
                if d > 0 {
                    chosen.insert(e);
                    has_parent_edge[c] = true;
                }
            }
        }
        chosen
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path, ratio_tree, random_multigraph, star};

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn formula_examples() {
        assert_eq!(sp_formula(&path(2), &caps()).unwrap(), 1);
        assert_eq!(sp_formula(&cycle(5), &caps()).unwrap(), 2);
        assert_eq!(sp_formula(&star(3), &caps()).unwrap(), 3);
    }

    #[test]
    fn isolated_vertices_are_rejected() {
        let g = Multigraph::new(3, vec![(0, 1)]).unwrap();
        assert!(matches!(sp_formula(&g, &caps()), Err(Error::Precondition(_))));
        assert!(matches!(sp_factor_value(&g, &caps()), Err(Error::Precondition(_))));
        assert!(sp_formula(&Multigraph::new(0, vec![]).unwrap(), &caps()).is_err());
    }

    #[test]
    fn factor_search_examples() {
        let r = sp_factor_search(&path(4), &caps()).unwrap();
        assert_eq!(r.sp, 1);
        assert_eq!(r.factor.edges.len(), 2);
        r.factor.validate(&path(4)).unwrap();

        let r = sp_factor_search(&star(3), &caps()).unwrap();
        assert_eq!(r.sp, 3);
        assert_eq!(r.factor.edges.len(), 3);

        let g = ratio_tree(1, 1, 4).unwrap();
        assert_eq!(sp_factor_value(&g, &caps()).unwrap(), 4);
    }

    #[test]
    fn bruteforce_routes_match_on_named_graphs() {
        for (g, expected) in [
            (cycle(5), 2),
            (complete(4), 1),
            (star(3), 3),
            (path(5), 2),
            (cycle(6), 1),
        ] {
            assert_eq!(sp_factor_value(&g, &caps()).unwrap(), expected);
            assert_eq!(sp2_bruteforce(&g, &caps()).unwrap(), expected);
            assert_eq!(sp3_bruteforce(&g, &caps()).unwrap(), expected);
            assert_eq!(sp_formula(&g, &caps()).unwrap(), expected);
        }
    }

    #[test]
    fn all_four_routes_agree_on_random_multigraphs() {
        let mut tested = 0;
        for seed in 0..60 {
            let g = random_multigraph(6, 8, 3, seed).unwrap();
            if g.has_isolated_vertex() {
                continue;
            }
            tested += 1;
            let s1 = sp_factor_value(&g, &caps()).unwrap();
            assert_eq!(s1, sp2_bruteforce(&g, &caps()).unwrap(), "{}", crate::format::compact(&g));
            assert_eq!(s1, sp3_bruteforce(&g, &caps()).unwrap(), "{}", crate::format::compact(&g));
            assert_eq!(s1, sp_formula(&g, &caps()).unwrap(), "{}", crate::format::compact(&g));
            assert!(s1 >= 1 && s1 <= g.max_degree());
        }
        assert!(tested >= 40);
    }

    #[test]
    fn factor_witness_degrees_are_in_range() {
        for seed in 0..30 {
            let g = random_multigraph(6, 9, 2, seed).unwrap();
            if g.has_isolated_vertex() {
                continue;
            }
            let r = sp_factor_search(&g, &caps()).unwrap();
            r.factor.validate(&g).unwrap();
            assert!(is_spanning(&g, &r.spanning_maximum));
            assert!(r.coloring.is_proper(&g, &r.spanning_maximum));
            assert_eq!(r.spanning_maximum.len(), nu_k(&g, r.sp, &caps()).unwrap());
        }
    }

    #[test]
    fn forest_dp_agrees_with_subset_search() {
        use crate::enumerate::trees_up_to;
        for t in trees_up_to(9) {
            if t.vertex_count() < 2 {
                continue;
            }
            let via_search = sp_factor_value(&t, &caps()).unwrap();
            let via_dp = (1..=t.max_degree())
                .find(|&k| forest::min_factor_cost(&t, k).is_some())
                .unwrap();
            assert_eq!(via_search, via_dp, "{}", crate::format::compact(&t));
            // witness degrees in range, minimality against subset search
            let edges = forest::min_factor_edges(&t, via_dp).unwrap();
            FactorWitness { edges: edges.clone(), bound: via_dp }.validate(&t).unwrap();
            let min_search = min_factor(&t, via_dp).unwrap();
            assert_eq!(edges.len(), min_search.len());
            // nu_k by DP equals nu_k by branch and bound
            for k in 1..=t.max_degree() {
                assert_eq!(
                    forest::max_degree_bounded_edges(&t, k).len(),
                    coloring::max_k_ecs_size(&t, k, &caps()).unwrap()
                );
            }
        }
    }

    #[test]
    fn factor_to_spanning_kecs_examples() {
        // the whole star as a [1,3]-factor colors itself
        let s3 = star(3);
        let f = FactorWitness { edges: (0..3).collect(), bound: 3 };
        let (forest, col) = spanning_kecs_from_factor(&s3, &f).unwrap();
        assert_eq!(forest.len(), 3);
        assert!(col.is_proper(&s3, &forest));

        // C4 as a [1,2]-factor drops one edge
        let c4 = cycle(4);
        let f = FactorWitness { edges: (0..4).collect(), bound: 2 };
        let (forest, col) = spanning_kecs_from_factor(&c4, &f).unwrap();
        assert_eq!(forest.len(), 3);
        assert!(is_spanning(&c4, &forest));
        assert!(col.is_proper(&c4, &forest));

        // a perfect matching is already a forest
        let k4 = complete(4);
        let f = FactorWitness { edges: EdgeSet::from([0, 5]), bound: 1 };
        let (forest, _) = spanning_kecs_from_factor(&k4, &f).unwrap();
        assert_eq!(forest, EdgeSet::from([0, 5]));

        // invalid factor rejected
        let bad = FactorWitness { edges: EdgeSet::from([0]), bound: 1 };
        assert!(spanning_kecs_from_factor(&k4, &bad).is_err());
    }

    #[test]
    fn exchange_worked_example() {
        // double edge u-w plus pendant w-z
        let g = Multigraph::new(3, vec![(0, 1), (0, 1), (1, 2)]).unwrap();
        let guide = EdgeSet::from([0, 2]);
        let maximum = EdgeSet::from([0, 1]); // non-spanning maximum 2-ECS
        let result = exchange_to_spanning_max(&g, 2, &guide, &maximum, &caps()).unwrap();
        assert_eq!(result, EdgeSet::from([0, 2]));

        // already spanning: fixed point
        let result = exchange_to_spanning_max(&g, 2, &guide, &EdgeSet::from([0, 2]), &caps())
            .unwrap();
        assert_eq!(result, EdgeSet::from([0, 2]));
    }

    #[test]
    fn exchange_validates_preconditions() {
        let c5 = cycle(5);
        // no spanning 1-ECS exists to act as a guide
        let m = crate::matching::maximum_matching(&c5);
        let h = m.edges().clone();
        assert!(matches!(
            exchange_to_spanning_max(&c5, 1, &h, &h, &caps()),
            Err(Error::Precondition(_))
        ));

        // a non-maximum candidate is rejected
        let c6 = cycle(6);
        let guide: EdgeSet = [0, 2, 4].into();
        let small: EdgeSet = [0, 2].into();
        assert!(matches!(
            exchange_to_spanning_max(&c6, 1, &guide, &small, &caps()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn exchange_output_postconditions_on_random_graphs() {
        for seed in 0..40 {
            let g = random_multigraph(6, 9, 2, seed).unwrap();
            if g.has_isolated_vertex() {
                continue;
            }
            let sp = sp_factor_value(&g, &caps()).unwrap();
            for k in sp..=g.max_degree().min(sp + 1) {
                let r = sp_factor_search(&g, &caps()).unwrap();
                let factor = if k == r.sp {
                    r.factor
                } else {
                    FactorWitness { edges: min_factor(&g, k).unwrap(), bound: k }
                };
                let (guide, _) = spanning_kecs_from_factor(&g, &factor).unwrap();
                let (h, _) = coloring::max_k_ecs(&g, k, &caps()).unwrap();
                let out = exchange_to_spanning_max(&g, k, &guide, &h, &caps()).unwrap();
                assert!(is_spanning(&g, &out));
                assert_eq!(out.len(), nu_k(&g, k, &caps()).unwrap());
                assert!(coloring::find_k_edge_coloring(&g, &out, k, &caps()).unwrap().is_some());
            }
        }
    }

    #[test]
    fn spanning_max_existence_examples() {
        for k in 1..=3 {
            assert!(spanning_max_exists(&complete(4), k, &caps()).unwrap());
        }
        assert!(!spanning_max_exists(&cycle(5), 1, &caps()).unwrap());
        assert!(!spanning_max_exists(&star(3), 2, &caps()).unwrap());
        assert!(spanning_max_exists(&star(3), 3, &caps()).unwrap());
    }

    #[test]
    fn spanning_max_existence_matches_sp_threshold() {
        for seed in 0..25 {
            let g = random_multigraph(5, 7, 2, seed).unwrap();
            if g.has_isolated_vertex() {
                continue;
            }
            let sp = sp_factor_value(&g, &caps()).unwrap();
            for k in 1..=g.max_degree() {
                assert_eq!(
                    spanning_max_exists(&g, k, &caps()).unwrap(),
                    k >= sp,
                    "k={k} sp={sp} {}",
                    crate::format::compact(&g)
                );
            }
        }
    }

    #[test]
    fn deleting_a_cycle_edge_never_decreases_sp() {
        for seed in 0..30 {
            let g = random_multigraph(6, 9, 2, seed).unwrap();
            if g.has_isolated_vertex() {
                continue;
            }
            let sp = sp_factor_value(&g, &caps()).unwrap();
            for e in 0..g.edge_count() {
                if g.on_cycle(e) {
                    let smaller = g.delete_edge(e).unwrap();
                    assert!(sp <= sp_factor_value(&smaller, &caps()).unwrap());
                }
            }
        }
    }
}
