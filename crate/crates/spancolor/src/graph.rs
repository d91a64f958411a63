//! Loopless multigraphs with stable edge indices, plus the elementary
//! queries every other module builds on.
//!
//! Vertices are contiguous 0-based integers. Parallel edges are first-class
//! and distinguished by edge index; loops are rejected at construction.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Set of vertex indices of a host graph. `BTreeSet` keeps iteration
/// deterministic everywhere.
pub type VertexSet = BTreeSet<usize>;

/// Set of edge indices of a host graph, the working representation of a
/// subgraph. The vertex set of a subgraph is always the host's vertex set:
/// a vertex touching no chosen edge simply has degree 0.
pub type EdgeSet = BTreeSet<usize>;

/// A finite undirected multigraph without loops.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    /// adjacency\[v\] = (edge index, other endpoint), sorted by edge index
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl Multigraph {
    /// Builds a multigraph, rejecting loops and out-of-range endpoints.
    /// Edge indices are the positions in `edges`.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for (i, &(a, b)) in edges.iter().enumerate() {
            if a == b {
                return Err(Error::InvalidInput(format!("edge {i} is a loop at vertex {a}")));
            }
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::InvalidInput(format!(
                    "edge {i} = ({a}, {b}) has an endpoint outside 0..{vertex_count}"
                )));
            }
        }
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (i, &(a, b)) in edges.iter().enumerate() {
            adjacency[a].push((i, b));
            adjacency[b].push((i, a));
        }
        Ok(Multigraph {
            vertex_count,
            edges,
            adjacency,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, edge: usize) -> (usize, usize) {
        self.edges[edge]
    }

    /// Incident edges of `v` as (edge index, other endpoint) pairs in edge
    /// index order.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    /// Degree of `v`; parallel edges each count once per endpoint.
    pub fn degree(&self, v: usize) -> Result<usize> {
        if v >= self.vertex_count {
            return Err(Error::InvalidInput(format!(
                "vertex {v} out of range 0..{}",
                self.vertex_count
            )));
        }
        Ok(self.adjacency[v].len())
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adjacency.iter().any(Vec::is_empty)
    }

    /// Maximum number of parallel edges over all vertex pairs; 0 for an
    /// edgeless graph.
    pub fn max_multiplicity(&self) -> usize {
        let mut counts = std::collections::BTreeMap::new();
        for &(a, b) in &self.edges {
            let key = (a.min(b), a.max(b));
            *counts.entry(key).or_insert(0usize) += 1;
        }
        counts.values().copied().max().unwrap_or(0)
    }

    /// Collapses parallel edges, keeping one edge per vertex pair. Matching
    /// problems are invariant under this reduction: a parallel edge never
    /// helps a matching.
    pub fn simplify(&self) -> Multigraph {
        let mut seen = BTreeSet::new();
        let mut edges = Vec::new();
        for &(a, b) in &self.edges {
            let key = (a.min(b), a.max(b));
            if seen.insert(key) {
                edges.push(key);
            }
        }
        Multigraph::new(self.vertex_count, edges).expect("simplified graph is valid")
    }

    /// Connected components as sorted vertex lists, ordered by smallest
    /// member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.vertex_count];
        let mut out = Vec::new();
        for start in 0..self.vertex_count {
            if seen[start] {
                continue;
            }
            let mut queue = vec![start];
            seen[start] = true;
            let mut comp = Vec::new();
            while let Some(v) = queue.pop() {
                comp.push(v);
                for &(_, u) in &self.adjacency[v] {
                    if !seen[u] {
                        seen[u] = true;
                        queue.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count <= 1 || self.components().len() == 1
    }

    pub fn is_forest(&self) -> bool {
        let comps = self.components();
        self.edge_count() + comps.len() == self.vertex_count
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.vertex_count >= 1 && self.edge_count() + 1 == self.vertex_count
    }

    /// Connected, 2-regular, odd vertex count. Such a multigraph is
    /// necessarily a simple cycle: a parallel pair would close a 2-vertex
    /// component.
    pub fn is_odd_cycle(&self) -> bool {
        self.vertex_count >= 3
            && self.vertex_count % 2 == 1
            && self.edge_count() == self.vertex_count
            && self.adjacency.iter().all(|a| a.len() == 2)
            && self.is_connected()
    }

    pub fn is_regular(&self) -> bool {
        self.vertex_count == 0 || self.max_degree() == self.min_degree()
    }

    /// Components / odd components / isolated vertices, the inputs to the
    /// parity and degree conditions on G - S.
    pub fn component_profile(&self) -> ComponentProfile {
        let components = self.components();
        let odd_components = components.iter().filter(|c| c.len() % 2 == 1).count();
        let isolated_vertices = self.adjacency.iter().filter(|a| a.is_empty()).count();
        ComponentProfile {
            components,
            odd_components,
            isolated_vertices,
        }
    }

    /// Removes the vertices of `remove` and all incident edges. Survivors
    /// are reindexed in ascending original order; the returned map records
    /// the reindexing.
    pub fn delete_vertices(&self, remove: &VertexSet) -> Result<VertexDeletion> {
        if let Some(&v) = remove.iter().find(|&&v| v >= self.vertex_count) {
            return Err(Error::InvalidInput(format!(
                "vertex {v} out of range 0..{}",
                self.vertex_count
            )));
        }
        let mut old_to_new = vec![None; self.vertex_count];
        let mut next = 0;
        for (v, slot) in old_to_new.iter_mut().enumerate() {
            if !remove.contains(&v) {
                *slot = Some(next);
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|&(a, b)| Some((old_to_new[a]?, old_to_new[b]?)))
            .collect();
        let graph = Multigraph::new(next, edges).expect("deletion preserves validity");
        Ok(VertexDeletion { graph, old_to_new })
    }

    /// Vertex layers by distance from `v`: layer 0 is {v}, layer i holds the
    /// vertices at distance exactly i. Errors on disconnected input.
    pub fn bfs_layers(&self, v: usize) -> Result<Vec<VertexSet>> {
        if v >= self.vertex_count {
            return Err(Error::InvalidInput(format!(
                "vertex {v} out of range 0..{}",
                self.vertex_count
            )));
        }
        if !self.is_connected() {
            return Err(Error::InvalidInput("graph is disconnected".into()));
        }
        let mut dist = vec![usize::MAX; self.vertex_count];
        dist[v] = 0;
        let mut frontier = vec![v];
        let mut layers = vec![VertexSet::from([v])];
        while !frontier.is_empty() {
            let mut next_frontier = Vec::new();
            let mut layer = VertexSet::new();
            for &w in &frontier {
                for &(_, u) in &self.adjacency[w] {
                    if dist[u] == usize::MAX {
                        dist[u] = dist[w] + 1;
                        layer.insert(u);
                        next_frontier.push(u);
                    }
                }
            }
            if !layer.is_empty() {
                layers.push(layer);
            }
            frontier = next_frontier;
        }
        Ok(layers)
    }

    /// True when `edge` lies on a cycle, i.e. is not a bridge. Parallel
    /// copies of an edge always lie on a cycle.
    pub fn on_cycle(&self, edge: usize) -> bool {
        let (a, b) = self.edges[edge];
        // Reachability from a to b avoiding `edge`.
        let mut seen = vec![false; self.vertex_count];
        seen[a] = true;
        let mut stack = vec![a];
        while let Some(v) = stack.pop() {
            if v == b {
                return true;
            }
            for &(e, u) in &self.adjacency[v] {
                if e != edge && !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        false
    }

    /// Removes a single edge, keeping all vertices and shifting the indices
    /// of later edges down by one.
    pub fn delete_edge(&self, edge: usize) -> Result<Multigraph> {
        if edge >= self.edges.len() {
            return Err(Error::InvalidInput(format!("edge {edge} out of range")));
        }
        let mut edges = self.edges.clone();
        edges.remove(edge);
        Multigraph::new(self.vertex_count, edges)
    }
}

/// Result of [`Multigraph::delete_vertices`].
#[derive(Debug, Clone)]
pub struct VertexDeletion {
    pub graph: Multigraph,
    /// old vertex index -> new index, `None` for removed vertices
    pub old_to_new: Vec<Option<usize>>,
}

#[derive(Debug, Clone)]
pub struct ComponentProfile {
    pub components: Vec<Vec<usize>>,
    pub odd_components: usize,
    pub isolated_vertices: usize,
}

/// Degree of `v` inside the subgraph given by `edges`.
pub fn subgraph_degree(g: &Multigraph, edges: &EdgeSet, v: usize) -> usize {
    g.incident(v).iter().filter(|(e, _)| edges.contains(e)).count()
}

/// Degrees of all vertices inside the subgraph given by `edges`.
pub fn subgraph_degrees(g: &Multigraph, edges: &EdgeSet) -> Vec<usize> {
    let mut deg = vec![0; g.vertex_count()];
    for &e in edges {
        let (a, b) = g.endpoints(e);
        deg[a] += 1;
        deg[b] += 1;
    }
    deg
}

/// A subgraph is spanning when it covers every vertex of the host.
pub fn is_spanning(g: &Multigraph, edges: &EdgeSet) -> bool {
    subgraph_degrees(g, edges).iter().all(|&d| d >= 1)
}

/// Number of host vertices covered by the subgraph.
pub fn covered_count(g: &Multigraph, edges: &EdgeSet) -> usize {
    subgraph_degrees(g, edges).iter().filter(|&&d| d >= 1).count()
}

/// Vertices missed by the subgraph, ascending.
pub fn missed_vertices(g: &Multigraph, edges: &EdgeSet) -> Vec<usize> {
    subgraph_degrees(g, edges)
        .iter()
        .enumerate()
        .filter(|(_, &d)| d == 0)
        .map(|(v, _)| v)
        .collect()
}

/// True when the chosen edges contain no cycle.
pub fn subgraph_is_forest(g: &Multigraph, edges: &EdgeSet) -> bool {
    let mut parent: Vec<usize> = (0..g.vertex_count()).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for &e in edges {
        let (a, b) = g.endpoints(e);
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return false;
        }
        parent[ra] = rb;
    }
    true
}

/// Spanning forest of the subgraph `edges`: one spanning tree per connected
/// component, built by BFS from the lowest-index vertex taking lowest-index
/// edges first.
pub fn spanning_forest(g: &Multigraph, edges: &EdgeSet) -> EdgeSet {
    let mut seen = vec![false; g.vertex_count()];
    let mut forest = EdgeSet::new();
    for start in 0..g.vertex_count() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &(e, u) in g.incident(v) {
                if edges.contains(&e) && !seen[u] {
                    seen[u] = true;
                    forest.insert(e);
                    queue.push_back(u);
                }
            }
        }
    }
    forest
}

/// All subsets of `0..n` in ascending size, lexicographic within a size.
/// Used by the exhaustive vertex-set conditions; n is capped by callers.
pub fn subsets_by_size(n: usize) -> impl Iterator<Item = VertexSet> {
    (0..=n).flat_map(move |size| SubsetIter::new(n, size))
}

struct SubsetIter {
    n: usize,
    current: Option<Vec<usize>>,
}

impl SubsetIter {
    fn new(n: usize, size: usize) -> Self {
        let current = if size <= n { Some((0..size).collect()) } else { None };
        SubsetIter { n, current }
    }
}

impl Iterator for SubsetIter {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.current.as_mut()?;
        let out: VertexSet = cur.iter().copied().collect();
        // advance to the next combination
        let k = cur.len();
        if k == 0 {
            self.current = None;
            return Some(out);
        }
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if cur[i] + (k - i) < self.n {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path, star};

    #[test]
    fn rejects_loops_and_bad_indices() {
        assert!(Multigraph::new(2, vec![(0, 0)]).is_err());
        assert!(Multigraph::new(2, vec![(0, 2)]).is_err());
        assert!(Multigraph::new(0, vec![]).is_ok());
    }

    #[test]
    fn degree_counts_parallel_edges() {
        assert_eq!(path(2).degree(0).unwrap(), 1);
        assert_eq!(star(3).degree(0).unwrap(), 3);
        let double = Multigraph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert_eq!(double.degree(0).unwrap(), 2);
        assert_eq!(double.max_multiplicity(), 2);
        assert!(double.degree(5).is_err());
    }

    #[test]
    fn delete_vertices_reindexes_in_order() {
        let c5 = cycle(5);
        let del = c5.delete_vertices(&VertexSet::from([0])).unwrap();
        assert_eq!(del.graph.vertex_count(), 4);
        assert_eq!(del.graph.edge_count(), 3);
        assert!(del.graph.is_tree());
        assert_eq!(del.old_to_new, vec![None, Some(0), Some(1), Some(2), Some(3)]);

        let s3 = star(3);
        let del = s3.delete_vertices(&VertexSet::from([0])).unwrap();
        assert_eq!(del.graph.vertex_count(), 3);
        assert_eq!(del.graph.edge_count(), 0);

        let k4 = complete(4);
        let del = k4.delete_vertices(&VertexSet::from([0, 1])).unwrap();
        assert_eq!((del.graph.vertex_count(), del.graph.edge_count()), (2, 1));
    }

    #[test]
    fn component_profile_examples() {
        let p = cycle(5).component_profile();
        assert_eq!((p.components.len(), p.odd_components, p.isolated_vertices), (1, 1, 0));

        let leaves = star(3).delete_vertices(&VertexSet::from([0])).unwrap().graph;
        let p = leaves.component_profile();
        assert_eq!((p.components.len(), p.odd_components, p.isolated_vertices), (3, 3, 3));

        let p = path(4).component_profile();
        assert_eq!((p.components.len(), p.odd_components, p.isolated_vertices), (1, 0, 0));
    }

    #[test]
    fn odd_components_dominate_isolated_vertices() {
        // every isolated vertex is itself an odd component
        for g in [cycle(6), star(4), complete(5), path(7)] {
            for s in subsets_by_size(g.vertex_count()) {
                let p = g.delete_vertices(&s).unwrap().graph.component_profile();
                assert!(p.odd_components >= p.isolated_vertices);
            }
        }
    }

    #[test]
    fn bfs_layers_examples() {
        let layers = path(4).bfs_layers(0).unwrap();
        assert_eq!(layers.len(), 4);
        assert!(layers.iter().all(|l| l.len() == 1));

        let layers = star(3).bfs_layers(0).unwrap();
        assert_eq!(layers, vec![VertexSet::from([0]), VertexSet::from([1, 2, 3])]);

        let layers = cycle(4).bfs_layers(0).unwrap();
        assert_eq!(
            layers,
            vec![VertexSet::from([0]), VertexSet::from([1, 3]), VertexSet::from([2])]
        );

        let two = Multigraph::new(2, vec![]).unwrap();
        assert!(two.bfs_layers(0).is_err());
    }

    #[test]
    fn tree_layers_join_consecutive_levels() {
        for g in [path(6), star(5)] {
            let layers = g.bfs_layers(0).unwrap();
            let level = |v: usize| layers.iter().position(|l| l.contains(&v)).unwrap();
            for &(a, b) in g.edges() {
                assert_eq!(level(a).abs_diff(level(b)), 1);
            }
        }
    }

    #[test]
    fn odd_cycle_recognition() {
        assert!(cycle(5).is_odd_cycle());
        assert!(!cycle(6).is_odd_cycle());
        assert!(!path(5).is_odd_cycle());
        let double = Multigraph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert!(!double.is_odd_cycle());
    }

    #[test]
    fn bridge_detection() {
        let g = path(3);
        assert!(!g.on_cycle(0));
        let c = cycle(4);
        assert!((0..4).all(|e| c.on_cycle(e)));
        let double = Multigraph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert!(double.on_cycle(0));
    }

    #[test]
    fn spanning_forest_covers_components() {
        let c4 = cycle(4);
        let all: EdgeSet = (0..4).collect();
        let forest = spanning_forest(&c4, &all);
        assert_eq!(forest.len(), 3);
        assert!(subgraph_is_forest(&c4, &forest));
        assert!(is_spanning(&c4, &forest));
    }

    #[test]
    fn subset_iteration_is_exhaustive() {
        let all: Vec<VertexSet> = subsets_by_size(4).collect();
        assert_eq!(all.len(), 16);
        let distinct: std::collections::BTreeSet<_> = all.iter().cloned().collect();
        assert_eq!(distinct.len(), 16);
        // ascending size
        for w in all.windows(2) {
            assert!(w[0].len() <= w[1].len());
        }
    }
}
