//! Exact edge coloring: chromatic index, k-edge-colorability with explicit
//! colorings, and maximum k-edge-colorable subgraphs (nu_k) by branch and
//! bound.
//!
//! Everything here is exact search behind resource caps. Forests take a
//! greedy fast path (a forest is max-degree-edge-colorable); general
//! multigraphs go through backtracking with two cheap infeasibility cuts:
//! a vertex of degree above k, or more edges than k times the matching
//! number.

use std::collections::BTreeMap;

use crate::error::{Caps, Error, Result};
use crate::graph::{subgraph_degrees, subgraph_is_forest, EdgeSet, Multigraph};
use crate::matching;

/// A proper assignment of colors 1..=k to a set of edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    k: usize,
    colors: BTreeMap<usize, usize>,
}

impl EdgeColoring {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn color(&self, edge: usize) -> Option<usize> {
        self.colors.get(&edge).copied()
    }

    pub fn colors(&self) -> &BTreeMap<usize, usize> {
        &self.colors
    }

    /// Independent validator: every edge of `edges` is colored with a color
    /// in 1..=k, nothing else is colored, and edges sharing an endpoint get
    /// distinct colors.
    pub fn is_proper(&self, g: &Multigraph, edges: &EdgeSet) -> bool {
        if self.colors.len() != edges.len() {
            return false;
        }
        for (&e, &c) in &self.colors {
            if !edges.contains(&e) || c < 1 || c > self.k {
                return false;
            }
        }
        for v in 0..g.vertex_count() {
            let mut seen = std::collections::BTreeSet::new();
            for &(e, _) in g.incident(v) {
                if let Some(&c) = self.colors.get(&e) {
                    if !seen.insert(c) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn from_zero_based(pairs: impl IntoIterator<Item = (usize, usize)>, k: usize) -> Self {
        EdgeColoring {
            k,
            colors: pairs.into_iter().map(|(e, c)| (e, c + 1)).collect(),
        }
    }
}

/// Exact chromatic index with a witness coloring. The answer always lies in
/// [max degree, min(floor(3*max_degree/2), max_degree + max_multiplicity)].
pub fn chromatic_index(g: &Multigraph, caps: &Caps) -> Result<(usize, EdgeColoring)> {
    let all: EdgeSet = (0..g.edge_count()).collect();
    chromatic_index_of_subgraph(g, &all, caps)
}

pub fn chromatic_index_of_subgraph(
    g: &Multigraph,
    edges: &EdgeSet,
    caps: &Caps,
) -> Result<(usize, EdgeColoring)> {
    let degrees = subgraph_degrees(g, edges);
    let delta = degrees.iter().copied().max().unwrap_or(0);
    if edges.is_empty() {
        return Ok((0, EdgeColoring { k: 0, colors: BTreeMap::new() }));
    }
    let upper = (3 * delta / 2).min(delta + sub_multiplicity(g, edges));
    for k in delta..=upper {
        if let Some(coloring) = find_k_edge_coloring(g, edges, k, caps)? {
            return Ok((k, coloring));
        }
    }
    Err(Error::Internal(format!(
        "no proper coloring found within the guaranteed range {delta}..={upper}"
    )))
}

fn sub_multiplicity(g: &Multigraph, edges: &EdgeSet) -> usize {
    let mut counts = BTreeMap::new();
    for &e in edges {
        let (a, b) = g.endpoints(e);
        *counts.entry((a.min(b), a.max(b))).or_insert(0usize) += 1;
    }
    counts.values().copied().max().unwrap_or(0)
}

/// A proper k-coloring of the given edge set, or `None` when provably no
/// such coloring exists.
pub fn find_k_edge_coloring(
    g: &Multigraph,
    edges: &EdgeSet,
    k: usize,
    caps: &Caps,
) -> Result<Option<EdgeColoring>> {
    let degrees = subgraph_degrees(g, edges);
    let delta = degrees.iter().copied().max().unwrap_or(0);
    if delta > k {
        return Ok(None);
    }
    if edges.is_empty() {
        return Ok(Some(EdgeColoring { k, colors: BTreeMap::new() }));
    }
    if subgraph_is_forest(g, edges) {
        return Ok(Some(color_forest(g, edges, k)));
    }
    caps.check_coloring(edges.len())?;
    // a color class is a matching, so |E| <= k * nu is necessary
    let sub = subgraph_as_graph(g, edges);
    if edges.len() > k.saturating_mul(matching_number(&sub)) {
        return Ok(None);
    }
    // more colors than edges never help
    let k_search = k.min(edges.len());
    let order: Vec<usize> = edges.iter().copied().collect();
    Ok(backtrack_color(g, &order, k_search)
        .map(|cols| EdgeColoring::from_zero_based(order.iter().copied().zip(cols), k)))
}

fn subgraph_as_graph(g: &Multigraph, edges: &EdgeSet) -> Multigraph {
    let list = edges.iter().map(|&e| g.endpoints(e)).collect();
    Multigraph::new(g.vertex_count(), list).expect("subgraph edges are valid")
}

fn matching_number(g: &Multigraph) -> usize {
    matching::matching_number(g)
}

/// Greedy exact coloring of a forest with `k >= max degree` colors: walk
/// each tree from its lowest vertex, giving the edges at each vertex the
/// lowest colors distinct from the parent edge's color.
fn color_forest(g: &Multigraph, edges: &EdgeSet, k: usize) -> EdgeColoring {
    let mut assigned: BTreeMap<usize, usize> = BTreeMap::new();
    let mut seen = vec![false; g.vertex_count()];
    for root in 0..g.vertex_count() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([(root, usize::MAX)]);
        while let Some((v, parent_color)) = queue.pop_front() {
            let mut next = 0;
            for &(e, u) in g.incident(v) {
                if !edges.contains(&e) || assigned.contains_key(&e) {
                    continue;
                }
                if next == parent_color {
                    next += 1;
                }
                assigned.insert(e, next);
                seen[u] = true;
                queue.push_back((u, next));
                next += 1;
            }
        }
    }
    debug_assert!(assigned.values().all(|&c| c < k));
    EdgeColoring::from_zero_based(assigned, k)
}

/// Exact forest coloring with `k >= max degree of the set` colors, exposed
/// for the factor-to-spanning-subgraph extraction.
pub(crate) fn color_forest_exact(g: &Multigraph, edges: &EdgeSet, k: usize) -> EdgeColoring {
    debug_assert!(subgraph_is_forest(g, edges));
    let mut coloring = color_forest(g, edges, k);
    coloring.k = k;
    coloring
}

/// Plain backtracking over `order` with ascending colors and first-use
/// symmetry breaking. Colors are 0-based here.
fn backtrack_color(g: &Multigraph, order: &[usize], k: usize) -> Option<Vec<usize>> {
    if k > 32 {
        // masks are u32; desk-scale searches never get near this
        return None;
    }
    let full: u32 = if k == 32 { u32::MAX } else { (1u32 << k) - 1 };
    let mut masks = vec![0u32; g.vertex_count()];
    let mut cols = vec![0usize; order.len()];
    fn go(
        g: &Multigraph,
        order: &[usize],
        full: u32,
        masks: &mut [u32],
        cols: &mut [usize],
        idx: usize,
        max_used: usize,
    ) -> bool {
        if idx == order.len() {
            return true;
        }
        let (a, b) = g.endpoints(order[idx]);
        let free = !(masks[a] | masks[b]) & full;
        let cap = (max_used + 1).min(full.count_ones() as usize);
        let mut c = 0;
        while c < cap {
            let bit = 1u32 << c;
            if free & bit != 0 {
                masks[a] |= bit;
                masks[b] |= bit;
                cols[idx] = c;
                if go(g, order, full, masks, cols, idx + 1, max_used.max(c + 1)) {
                    return true;
                }
                masks[a] &= !bit;
                masks[b] &= !bit;
            }
            c += 1;
        }
        false
    }
    if go(g, order, full, &mut masks, &mut cols, 0, 0) {
        Some(cols)
    } else {
        None
    }
}

/// Maximum multiplicity of the whole graph (0 when edgeless).
pub fn max_multiplicity(g: &Multigraph) -> usize {
    g.max_multiplicity()
}

// ---------------------------------------------------------------------------
// Maximum k-edge-colorable subgraphs
// ---------------------------------------------------------------------------

/// Incremental proper-coloring state for the subset searches. The current
/// assignment is always a proper k-coloring of the included edges; adding
/// an edge first tries a greedy extension and falls back to a full recolor
/// before declaring the extended set uncolorable.
pub(crate) struct ColorState {
    k: usize,
    full: u32,
    masks: Vec<u32>,
    assigned: BTreeMap<usize, usize>,
}

pub(crate) enum Undo {
    Extend(usize),
    Recolor(BTreeMap<usize, usize>),
}

impl ColorState {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        let full = if k >= 32 { u32::MAX } else { (1u32 << k) - 1 };
        ColorState { k, full, masks: vec![0; n], assigned: BTreeMap::new() }
    }

    pub(crate) fn include(&mut self, g: &Multigraph, e: usize) -> Option<Undo> {
        let (a, b) = g.endpoints(e);
        let free = !(self.masks[a] | self.masks[b]) & self.full;
        if free != 0 {
            let c = free.trailing_zeros() as usize;
            self.masks[a] |= 1 << c;
            self.masks[b] |= 1 << c;
            self.assigned.insert(e, c);
            return Some(Undo::Extend(e));
        }
        // greedy failed: recolor the whole extended set from scratch
        let mut order: Vec<usize> = self.assigned.keys().copied().collect();
        order.push(e);
        order.sort_unstable();
        let cols = backtrack_color(g, &order, self.k)?;
        let previous = std::mem::take(&mut self.assigned);
        self.assigned = order.into_iter().zip(cols).collect();
        self.rebuild_masks(g);
        Some(Undo::Recolor(previous))
    }

    pub(crate) fn undo(&mut self, g: &Multigraph, token: Undo) {
        match token {
            Undo::Extend(e) => {
                let c = self.assigned.remove(&e).expect("extend token matches an assignment");
                let (a, b) = g.endpoints(e);
                self.masks[a] &= !(1 << c);
                self.masks[b] &= !(1 << c);
            }
            Undo::Recolor(previous) => {
                self.assigned = previous;
                self.rebuild_masks(g);
            }
        }
    }

    fn rebuild_masks(&mut self, g: &Multigraph) {
        self.masks.iter_mut().for_each(|m| *m = 0);
        for (&e, &c) in &self.assigned {
            let (a, b) = g.endpoints(e);
            self.masks[a] |= 1 << c;
            self.masks[b] |= 1 << c;
        }
    }

    fn coloring(&self) -> EdgeColoring {
        EdgeColoring::from_zero_based(self.assigned.iter().map(|(&e, &c)| (e, c)), self.k)
    }
}

struct SubsetSearch<'a> {
    g: &'a Multigraph,
    k: usize,
    state: ColorState,
    current: Vec<usize>,
    deg_current: Vec<usize>,
    deg_remaining: Vec<usize>,
}

impl<'a> SubsetSearch<'a> {
    fn new(g: &'a Multigraph, k: usize) -> Self {
        let mut deg_remaining = vec![0usize; g.vertex_count()];
        for &(a, b) in g.edges() {
            deg_remaining[a] += 1;
            deg_remaining[b] += 1;
        }
        SubsetSearch {
            g,
            k,
            // more colors than edges never help, and masks are u32
            state: ColorState::new(g.vertex_count(), k.min(g.edge_count()).max(1)),
            current: Vec::new(),
            deg_current: vec![0; g.vertex_count()],
            deg_remaining,
        }
    }

    /// Upper bound on how many more edges can still join the current set:
    /// each vertex can absorb at most k - deg_current more endpoints, and
    /// each future edge consumes two endpoints.
    fn capacity_bound(&self, edges_left: usize) -> usize {
        let spare: usize = self
            .deg_current
            .iter()
            .zip(&self.deg_remaining)
            .map(|(&cur, &rem)| (self.k - cur.min(self.k)).min(rem))
            .sum();
        (spare / 2).min(edges_left)
    }

    /// Lexicographically-first maximum: include-first DFS over edge indices.
    /// Records a new optimum only on strict improvement, so the first
    /// optimum found is the lexicographically smallest edge-index set.
    fn maximize(&mut self, idx: usize, best: &mut Option<(usize, Vec<usize>, EdgeColoring)>) {
        let bound = self.current.len() + self.capacity_bound(self.g.edge_count() - idx);
        if let Some((size, _, _)) = best {
            if bound <= *size {
                return;
            }
        }
        if idx == self.g.edge_count() {
            let better = best.as_ref().is_none_or(|(size, _, _)| self.current.len() > *size);
            if better {
                *best = Some((self.current.len(), self.current.clone(), self.state.coloring()));
            }
            return;
        }
        let (a, b) = self.g.endpoints(idx);
        self.deg_remaining[a] -= 1;
        self.deg_remaining[b] -= 1;
        if self.deg_current[a] < self.k && self.deg_current[b] < self.k {
            if let Some(token) = self.state.include(self.g, idx) {
                self.current.push(idx);
                self.deg_current[a] += 1;
                self.deg_current[b] += 1;
                self.maximize(idx + 1, best);
                self.deg_current[a] -= 1;
                self.deg_current[b] -= 1;
                self.current.pop();
                self.state.undo(self.g, token);
            }
        }
        self.maximize(idx + 1, best);
        self.deg_remaining[a] += 1;
        self.deg_remaining[b] += 1;
    }

    /// Visits every k-colorable edge set of exactly `target` edges in
    /// lexicographic order. The callback returns true to stop the scan.
    fn enumerate_exact(
        &mut self,
        idx: usize,
        target: usize,
        visit: &mut dyn FnMut(&[usize], &ColorState) -> bool,
    ) -> bool {
        if self.current.len() == target {
            return visit(&self.current, &self.state);
        }
        if idx == self.g.edge_count() {
            return false;
        }
        let needed = target - self.current.len();
        if self.capacity_bound(self.g.edge_count() - idx) < needed {
            return false;
        }
        let (a, b) = self.g.endpoints(idx);
        self.deg_remaining[a] -= 1;
        self.deg_remaining[b] -= 1;
        let mut stop = false;
        if self.deg_current[a] < self.k && self.deg_current[b] < self.k {
            if let Some(token) = self.state.include(self.g, idx) {
                self.current.push(idx);
                self.deg_current[a] += 1;
                self.deg_current[b] += 1;
                stop = self.enumerate_exact(idx + 1, target, visit);
                self.deg_current[a] -= 1;
                self.deg_current[b] -= 1;
                self.current.pop();
                self.state.undo(self.g, token);
            }
        }
        if !stop {
            stop = self.enumerate_exact(idx + 1, target, visit);
        }
        self.deg_remaining[a] += 1;
        self.deg_remaining[b] += 1;
        stop
    }
}

/// A maximum k-edge-colorable subgraph with a witness coloring. Ties are
/// broken toward the lexicographically smallest edge-index set, so the
/// result is deterministic across runs and platforms.
pub fn max_k_ecs(g: &Multigraph, k: usize, caps: &Caps) -> Result<(EdgeSet, EdgeColoring)> {
    require_positive_k(k)?;
    caps.check_subset_search(g.edge_count())?;
    let mut search = SubsetSearch::new(g, k);
    let mut best = None;
    search.maximize(0, &mut best);
    let (_, edges, coloring) = best.expect("the empty set is always k-colorable");
    Ok((edges.into_iter().collect(), coloring))
}

/// nu_k: the edge count of a maximum k-edge-colorable subgraph.
pub fn max_k_ecs_size(g: &Multigraph, k: usize, caps: &Caps) -> Result<usize> {
    Ok(max_k_ecs(g, k, caps)?.0.len())
}

/// Every edge subset of size nu_k that is k-edge-colorable, each exactly
/// once, in lexicographic order of edge-index sets.
pub fn enumerate_max_k_ecs(g: &Multigraph, k: usize, caps: &Caps) -> Result<Vec<EdgeSet>> {
    require_positive_k(k)?;
    caps.check_enumeration(g.edge_count())?;
    let nu_k = max_k_ecs_size(g, k, caps)?;
    let mut out = Vec::new();
    let mut search = SubsetSearch::new(g, k);
    search.enumerate_exact(0, nu_k, &mut |set, _| {
        out.push(set.iter().copied().collect());
        false
    });
    Ok(out)
}

/// Is there a k-colorable edge subset of exactly `size` edges? Early-exits
/// on the first hit; used to certify claimed nu_k values cheaply.
pub(crate) fn exists_k_colorable_of_size(
    g: &Multigraph,
    k: usize,
    size: usize,
    caps: &Caps,
) -> Result<bool> {
    require_positive_k(k)?;
    caps.check_subset_search(g.edge_count())?;
    let mut search = SubsetSearch::new(g, k);
    Ok(search.enumerate_exact(0, size, &mut |_, _| true))
}

/// Scans the maximum k-edge-colorable subgraphs of size `nu_k` in
/// lexicographic order until the callback accepts one; returns that set.
pub(crate) fn scan_max_k_ecs(
    g: &Multigraph,
    k: usize,
    nu_k: usize,
    caps: &Caps,
    accept: &mut dyn FnMut(&EdgeSet) -> bool,
) -> Result<Option<(EdgeSet, EdgeColoring)>> {
    require_positive_k(k)?;
    caps.check_subset_search(g.edge_count())?;
    let mut search = SubsetSearch::new(g, k);
    let mut found = None;
    search.enumerate_exact(0, nu_k, &mut |set, state| {
        let set: EdgeSet = set.iter().copied().collect();
        if accept(&set) {
            found = Some((set, state.coloring()));
            true
        } else {
            false
        }
    });
    Ok(found)
}

fn require_positive_k(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be positive".into()));
    }
    Ok(())
}
