//! Exact maximum matching for general graphs, perfect-matching detection
//! with parity-condition witnesses, and the exhaustive deficiency maximum.
//!
//! Matching is computed on the simplified graph: parallel edges never help
//! a matching, so collapsing them is a matching-preserving reduction.

use crate::error::{Caps, Error, Result};
use crate::graph::{EdgeSet, Multigraph, VertexSet};

const NONE: usize = usize::MAX;

/// Pairwise non-adjacent edge indices of a host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    edges: EdgeSet,
}

impl Matching {
    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// No two chosen edges share an endpoint.
    pub fn is_valid(&self, g: &Multigraph) -> bool {
        let deg = crate::graph::subgraph_degrees(g, &self.edges);
        deg.iter().all(|&d| d <= 1)
    }
}

/// Maximum-cardinality matching via augmenting-path search with blossom
/// contraction. Exact on every input; the test suite referees it against
/// an exhaustive subset oracle.
pub fn maximum_matching(g: &Multigraph) -> Matching {
    let simple = g.simplify();
    let n = simple.vertex_count();
    let mut state = Blossom::new(&simple);
    for v in 0..n {
        if state.mate[v] == NONE {
            state.augment_from(v);
        }
    }
    // translate matched pairs back to lowest-index edges of the multigraph
    let mut edges = EdgeSet::new();
    for v in 0..n {
        let u = state.mate[v];
        if u != NONE && v < u {
            let e = g
                .incident(v)
                .iter()
                .find(|&&(_, other)| other == u)
                .map(|&(e, _)| e)
                .expect("matched pair is adjacent in the host");
            edges.insert(e);
        }
    }
    Matching { edges }
}

/// Size of a maximum matching.
pub fn matching_number(g: &Multigraph) -> usize {
    maximum_matching(g).len()
}

struct Blossom<'a> {
    g: &'a Multigraph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    blossom: Vec<bool>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Multigraph) -> Self {
        let n = g.vertex_count();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            blossom: vec![false; n],
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let n = self.g.vertex_count();
        let mut marked = vec![false; n];
        loop {
            a = self.base[a];
            marked[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if marked[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn augment_from(&mut self, root: usize) -> bool {
        let n = self.g.vertex_count();
        self.used = vec![false; n];
        self.parent = vec![NONE; n];
        self.base = (0..n).collect();
        self.used[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &(_, u) in self.g.incident(v) {
                if self.base[v] == self.base[u] || self.mate[v] == u {
                    continue;
                }
                if u == root || (self.mate[u] != NONE && self.parent[self.mate[u]] != NONE) {
                    // odd cycle: contract the blossom
                    let cur_base = self.lca(v, u);
                    self.blossom = vec![false; n];
                    self.mark_path(v, cur_base, u);
                    self.mark_path(u, cur_base, v);
                    for i in 0..n {
                        if self.blossom[self.base[i]] {
                            self.base[i] = cur_base;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[u] == NONE {
                    self.parent[u] = v;
                    if self.mate[u] == NONE {
                        // augmenting path found; flip it
                        let mut u = u;
                        while u != NONE {
                            let pv = self.parent[u];
                            let ppv = self.mate[pv];
                            self.mate[u] = pv;
                            self.mate[pv] = u;
                            u = ppv;
                        }
                        return true;
                    }
                    self.used[self.mate[u]] = true;
                    queue.push_back(self.mate[u]);
                }
            }
        }
        false
    }
}

/// Outcome of the perfect-matching test.
#[derive(Debug, Clone)]
pub enum PerfectMatching {
    Yes(Matching),
    /// No perfect matching; `violator` is a vertex set S with more odd
    /// components in G - S than |S|, found by exhaustive search over
    /// subsets in ascending size.
    No {
        violator: VertexSet,
        odd_components: usize,
    },
}

impl PerfectMatching {
    pub fn exists(&self) -> bool {
        matches!(self, PerfectMatching::Yes(_))
    }
}

pub fn has_perfect_matching(g: &Multigraph, caps: &Caps) -> Result<PerfectMatching> {
    let m = maximum_matching(g);
    if 2 * m.len() == g.vertex_count() {
        return Ok(PerfectMatching::Yes(m));
    }
    caps.check_subset_vertices(g.vertex_count())?;
    for s in crate::graph::subsets_by_size(g.vertex_count()) {
        let profile = g.delete_vertices(&s)?.graph.component_profile();
        if profile.odd_components > s.len() {
            return Ok(PerfectMatching::No {
                violator: s,
                odd_components: profile.odd_components,
            });
        }
    }
    Err(Error::Internal(
        "no perfect matching but every vertex set satisfies the parity condition".into(),
    ))
}

/// The exhaustive maximum of o(G - S) - |S| over all vertex subsets S,
/// together with the first attaining set (ascending size, lexicographic).
#[derive(Debug, Clone)]
pub struct Deficiency {
    pub value: usize,
    pub attaining_set: VertexSet,
}

pub fn tutte_berge_deficiency(g: &Multigraph, caps: &Caps) -> Result<Deficiency> {
    caps.check_subset_vertices(g.vertex_count())?;
    let mut best: Option<Deficiency> = None;
    for s in crate::graph::subsets_by_size(g.vertex_count()) {
        let profile = g.delete_vertices(&s)?.graph.component_profile();
        if profile.odd_components < s.len() {
            continue;
        }
        let value = profile.odd_components - s.len();
        if best.as_ref().is_none_or(|b| value > b.value) {
            best = Some(Deficiency { value, attaining_set: s });
        }
    }
    best.ok_or_else(|| Error::Internal("subset enumeration was empty".into()))
}

#[cfg(test)]
pub(crate) fn exhaustive_matching_number(g: &Multigraph) -> usize {
    fn go(g: &Multigraph, idx: usize, used: &mut Vec<bool>, size: usize) -> usize {
        if idx == g.edge_count() {
            return size;
        }
        let (a, b) = g.endpoints(idx);
        let mut best = go(g, idx + 1, used, size);
        if !used[a] && !used[b] {
            used[a] = true;
            used[b] = true;
            best = best.max(go(g, idx + 1, used, size + 1));
            used[a] = false;
            used[b] = false;
        }
        best
    }
    let mut used = vec![false; g.vertex_count()];
    go(g, 0, &mut used, 0)
}
