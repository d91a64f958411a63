//! Trees whose spanning parameter equals their maximum degree: the
//! structural recognizer with peel certificates, the layered star-forest
//! construction, and the star-graft case analysis.

use crate::error::{Caps, Error, Result};
use crate::generators::graft;
use crate::graph::{subgraph_degree, subgraph_degrees, EdgeSet, Multigraph, VertexSet};
use crate::sp;

/// Vertices of maximum degree and the rest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeClassification {
    pub at_max: VertexSet,
    pub below_max: VertexSet,
}

pub fn classify_degrees(t: &Multigraph) -> Result<DegreeClassification> {
    if !t.is_tree() {
        return Err(Error::InvalidInput("degree classification expects a tree".into()));
    }
    let delta = t.max_degree();
    let mut at_max = VertexSet::new();
    let mut below_max = VertexSet::new();
    for (v, &d) in t.degrees().iter().enumerate() {
        if d == delta {
            at_max.insert(v);
        } else {
            below_max.insert(v);
        }
    }
    Ok(DegreeClassification { at_max, below_max })
}

/// The 1 or 2 middle vertices of a tree, by iterated leaf removal.
pub fn tree_centers(t: &Multigraph) -> Result<Vec<usize>> {
    if !t.is_tree() {
        return Err(Error::InvalidInput("centers are defined for trees".into()));
    }
    let n = t.vertex_count();
    if n <= 2 {
        return Ok((0..n).collect());
    }
    let mut deg = t.degrees();
    let mut removed = vec![false; n];
    let mut remaining = n;
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for &(_, u) in t.incident(v) {
                if !removed[u] {
                    deg[u] -= 1;
                    if deg[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    Ok((0..n).filter(|&v| !removed[v]).collect())
}

/// Canonical code of a tree: minimum over its centers of the rooted code
/// with sorted child codes. Two trees are isomorphic exactly when their
/// codes agree.
pub fn canonical_tree_code(t: &Multigraph) -> Result<Vec<u8>> {
    let centers = tree_centers(t)?;
    centers
        .into_iter()
        .map(|c| rooted_code(t, c))
        .min()
        .ok_or_else(|| Error::InvalidInput("empty tree has no code".into()))
}

fn rooted_code(t: &Multigraph, root: usize) -> Vec<u8> {
    fn go(t: &Multigraph, v: usize, parent: usize) -> Vec<u8> {
        let mut kids: Vec<Vec<u8>> = t
            .incident(v)
            .iter()
            .filter(|&&(_, u)| u != parent)
            .map(|&(_, u)| go(t, u, v))
            .collect();
        kids.sort();
        let mut out = vec![b'('];
        for k in kids {
            out.extend(k);
        }
        out.push(b')');
        out
    }
    go(t, root, usize::MAX)
}

pub fn trees_isomorphic(a: &Multigraph, b: &Multigraph) -> Result<bool> {
    Ok(canonical_tree_code(a)? == canonical_tree_code(b)?)
}

/// A star is a tree with at most one vertex of degree two or more.
pub fn is_star(t: &Multigraph) -> bool {
    t.is_tree() && t.degrees().iter().filter(|&&d| d >= 2).count() <= 1
}

// ---------------------------------------------------------------------------
// Layered star decomposition
// ---------------------------------------------------------------------------

/// Builds a star forest that is (max degree - 1)-edge-colorable and covers
/// either every vertex or everything except `v`.
///
/// Rounds: compute the distance layers from `v` over the surviving
/// subtree, add every edge between the two deepest layers, delete the
/// endpoints of the added edges, repeat until nothing or only `v` remains.
/// Star centers stay below the maximum degree: an interior center keeps
/// its unused edge toward `v`, and in the final round the center can only
/// be `v` itself, which sits below the maximum by precondition.
pub fn layered_star_decomposition(t: &Multigraph, v: usize) -> Result<EdgeSet> {
    if !t.is_tree() {
        return Err(Error::InvalidInput("decomposition expects a tree".into()));
    }
    if t.vertex_count() < 3 {
        return Err(Error::Precondition("decomposition needs at least 3 vertices".into()));
    }
    let delta = t.max_degree();
    if t.degree(v)? == delta {
        return Err(Error::Precondition(format!(
            "vertex {v} has maximum degree {delta}; pick one below the maximum"
        )));
    }
    let n = t.vertex_count();
    let mut alive = vec![true; n];
    let mut alive_count = n;
    let mut chosen = EdgeSet::new();
    loop {
        if alive_count == 0 || (alive_count == 1 && alive[v]) {
            break;
        }
        // BFS layers from v over the surviving subtree
        let mut dist = vec![usize::MAX; n];
        dist[v] = 0;
        let mut frontier = vec![v];
        let mut deepest = 0;
        while let Some(w) = frontier.pop() {
            for &(_, u) in t.incident(w) {
                if alive[u] && dist[u] == usize::MAX {
                    dist[u] = dist[w] + 1;
                    deepest = deepest.max(dist[u]);
                    frontier.push(u);
                }
            }
        }
        debug_assert!(deepest >= 1, "surviving subtree always contains v and a neighbor");
        let mut removed = VertexSet::new();
        for (e, &(a, b)) in t.edges().iter().enumerate() {
            if !alive[a] || !alive[b] {
                continue;
            }
            let (lo, hi) = (dist[a].min(dist[b]), dist[a].max(dist[b]));
            if lo + 1 == hi && hi == deepest {
                chosen.insert(e);
                removed.insert(a);
                removed.insert(b);
            }
        }
        for w in removed {
            alive[w] = false;
            alive_count -= 1;
        }
    }
    Ok(chosen)
}

/// Completes a decomposition that misses `v` to a spanning subgraph by
/// adding one edge at `v`; the result is max-degree-edge-colorable and
/// gives `v` degree exactly 1.
pub fn extend_to_spanning_delta(t: &Multigraph, v: usize, h: &EdgeSet) -> Result<EdgeSet> {
    if !t.is_tree() {
        return Err(Error::InvalidInput("extension expects a tree".into()));
    }
    if subgraph_degree(t, h, v) > 0 {
        return Err(Error::Precondition(format!("subgraph already covers vertex {v}")));
    }
    let &(e, _) = t
        .incident(v)
        .first()
        .ok_or_else(|| Error::InvalidInput(format!("vertex {v} is isolated")))?;
    let mut extended = h.clone();
    extended.insert(e);
    Ok(extended)
}

// ---------------------------------------------------------------------------
// Peeling and the recognizer
// ---------------------------------------------------------------------------

/// One peel: a vertex z of degree p >= 2 adjacent to exactly p - 1 leaves,
/// removed together with those leaves.
#[derive(Debug, Clone)]
pub struct Peel {
    /// the tree after removing the star, reindexed
    pub remainder: Multigraph,
    /// p: the size of the removed star
    pub star_size: usize,
    /// the vertex the star was attached to, as an index into `remainder`
    pub attachment: usize,
    /// z in the input tree's indexing
    pub center: usize,
    /// the removed leaves in the input tree's indexing, ascending
    pub removed_leaves: Vec<usize>,
    /// input tree index -> remainder index
    pub old_to_new: Vec<Option<usize>>,
}

/// Finds the lowest-index qualifying vertex and peels its star off.
/// Returns `None` for stars: peeling is complete.
pub fn peel_step(t: &Multigraph) -> Result<Option<Peel>> {
    if !t.is_tree() {
        return Err(Error::InvalidInput("peeling expects a tree".into()));
    }
    if is_star(t) {
        return Ok(None);
    }
    let z = (0..t.vertex_count())
        .find(|&z| qualifies(t, z))
        .ok_or_else(|| Error::Internal("non-star tree without a peelable vertex".into()))?;
    peel_at(t, z).map(Some)
}

fn qualifies(t: &Multigraph, z: usize) -> bool {
    let degrees = t.degrees();
    let p = degrees[z];
    p >= 2 && t.incident(z).iter().filter(|&&(_, u)| degrees[u] == 1).count() == p - 1
}

/// Peels the star at an explicitly chosen qualifying vertex.
pub fn peel_at(t: &Multigraph, z: usize) -> Result<Peel> {
    if !t.is_tree() {
        return Err(Error::InvalidInput("peeling expects a tree".into()));
    }
    if z >= t.vertex_count() || !qualifies(t, z) {
        return Err(Error::Precondition(format!(
            "vertex {z} is not a star center with exactly one non-leaf neighbor"
        )));
    }
    let degrees = t.degrees();
    let p = degrees[z];
    let removed_leaves: Vec<usize> = t
        .incident(z)
        .iter()
        .filter(|&&(_, u)| degrees[u] == 1)
        .map(|&(_, u)| u)
        .collect();
    let attachment_old = t
        .incident(z)
        .iter()
        .find(|&&(_, u)| degrees[u] > 1)
        .map(|&(_, u)| u)
        .ok_or_else(|| Error::Internal("peel center has no interior neighbor".into()))?;
    let mut to_remove = VertexSet::from([z]);
    to_remove.extend(removed_leaves.iter().copied());
    let deletion = t.delete_vertices(&to_remove)?;
    let attachment = deletion.old_to_new[attachment_old]
        .ok_or_else(|| Error::Internal("attachment vertex was removed".into()))?;
    Ok(Peel {
        remainder: deletion.graph,
        star_size: p,
        attachment,
        center: z,
        removed_leaves,
        old_to_new: deletion.old_to_new,
    })
}

/// One certified peel: the removed star and where it was attached.
#[derive(Debug, Clone)]
pub struct PeelStep {
    /// star center in the tree at this stage
    pub center: usize,
    /// star size p; the step is valid because p equals both the spanning
    /// parameter and the maximum degree of the peeled remainder
    pub star_size: usize,
    /// attachment vertex, indexed in the peeled remainder
    pub attachment: usize,
    removed_leaves: Vec<usize>,
    old_to_new: Vec<Option<usize>>,
}

/// Witness that a tree's spanning parameter equals its maximum degree:
/// a sequence of star peels ending in a star, every step satisfying the
/// graft side conditions.
#[derive(Debug, Clone)]
pub struct PeelCertificate {
    /// outermost peel first
    pub steps: Vec<PeelStep>,
    /// the final star
    pub base: Multigraph,
}

impl PeelCertificate {
    /// Rebuilds a tree isomorphic to the certified input by grafting the
    /// recorded stars back in reverse order onto the base star. Vertex
    /// numbering differs from the input; compare by canonical code.
    pub fn replay(&self) -> Result<Multigraph> {
        let mut replayed = self.base.clone();
        // stage index -> replayed index
        let mut iso: Vec<usize> = (0..replayed.vertex_count()).collect();
        for step in self.steps.iter().rev() {
            let grafted = graft(&replayed, step.star_size, iso[step.attachment])?;
            let first_leaf = replayed.vertex_count() + 1;
            let mut next_iso = vec![usize::MAX; step.old_to_new.len()];
            for (old, &new) in step.old_to_new.iter().enumerate() {
                if let Some(new) = new {
                    next_iso[old] = iso[new];
                }
            }
            next_iso[step.center] = grafted.center;
            for (i, &leaf) in step.removed_leaves.iter().enumerate() {
                next_iso[leaf] = first_leaf + i;
            }
            replayed = grafted.tree;
            iso = next_iso;
        }
        Ok(replayed)
    }
}

#[derive(Debug, Clone)]
pub struct TreeRecognition {
    pub certified: bool,
    pub certificate: Option<PeelCertificate>,
}

/// Does the tree satisfy "spanning parameter = maximum degree"? Decided
/// structurally: stars certify immediately; otherwise peel a star off and
/// require the graft side conditions (star size equals the remainder's
/// maximum degree, the attachment vertex sits below it, and the remainder
/// certifies recursively).
pub fn is_sp_delta_tree(t: &Multigraph) -> Result<TreeRecognition> {
    if !t.is_tree() {
        return Err(Error::InvalidInput("recognizer expects a tree".into()));
    }
    if t.vertex_count() < 2 {
        return Err(Error::Precondition("single-vertex tree has no spanning subgraph".into()));
    }
    recognize(t)
}

fn recognize(t: &Multigraph) -> Result<TreeRecognition> {
    let Some(peel) = peel_step(t)? else {
        return Ok(TreeRecognition {
            certified: true,
            certificate: Some(PeelCertificate { steps: Vec::new(), base: t.clone() }),
        });
    };
    let remainder_delta = peel.remainder.max_degree();
    if peel.star_size != remainder_delta
        || peel.remainder.degree(peel.attachment)? == remainder_delta
    {
        return Ok(TreeRecognition { certified: false, certificate: None });
    }
    let inner = recognize(&peel.remainder)?;
    let Some(mut certificate) = inner.certificate else {
        return Ok(TreeRecognition { certified: false, certificate: None });
    };
    certificate.steps.insert(
        0,
        PeelStep {
            center: peel.center,
            star_size: peel.star_size,
            attachment: peel.attachment,
            removed_leaves: peel.removed_leaves,
            old_to_new: peel.old_to_new,
        },
    );
    Ok(TreeRecognition { certified: true, certificate: Some(certificate) })
}

/// Recognizer variant that peels a chosen qualifying vertex at the top
/// level; used to confirm the outcome is peel-order independent.
pub fn is_sp_delta_tree_peeling(t: &Multigraph, z: usize) -> Result<bool> {
    if is_star(t) {
        return Ok(true);
    }
    let peel = peel_at(t, z)?;
    let remainder_delta = peel.remainder.max_degree();
    Ok(peel.star_size == remainder_delta
        && peel.remainder.degree(peel.attachment)? != remainder_delta
        && recognize(&peel.remainder)?.certified)
}

pub fn peel_candidates(t: &Multigraph) -> Vec<usize> {
    (0..t.vertex_count()).filter(|&z| qualifies(t, z)).collect()
}

/// Does a connected graph satisfy "spanning parameter = maximum degree"?
/// Only odd cycles and certified trees do.
pub fn sp_delta_connected(g: &Multigraph) -> Result<bool> {
    if g.vertex_count() == 0 || g.has_isolated_vertex() {
        return Err(Error::Precondition("graph must have no isolated vertices".into()));
    }
    if !g.is_connected() {
        return Err(Error::InvalidInput(
            "connected input required; split into components first".into(),
        ));
    }
    if g.is_odd_cycle() {
        return Ok(true);
    }
    if g.is_tree() {
        return Ok(is_sp_delta_tree(g)?.certified);
    }
    Ok(false)
}

// ---------------------------------------------------------------------------
// Graft case analysis
// ---------------------------------------------------------------------------

/// The four hypotheses on a star graft T = host + K_{1,p}, by how the star
/// size p compares with the host's spanning parameter and maximum degree.
/// Grafting preserves the equality sp = max degree exactly in the
/// `MatchingStarTightHost` case.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraftCase {
    /// p < sp(host) = max degree(host)
    SmallStarTightHost,
    /// p <= sp(host) < max degree(host)
    SlackHost,
    /// sp(host) < p
    LargeStar,
    /// p = sp(host) = max degree(host)
    MatchingStarTightHost,
}

/// Which hypothesis holds for this host and star size. The four cases
/// partition all possibilities.
pub fn graft_case_for(host: &Multigraph, p: usize, caps: &Caps) -> Result<GraftCase> {
    let sp1 = sp::sp_factor_value(host, caps)?;
    let delta1 = host.max_degree();
    Ok(if sp1 < p {
        GraftCase::LargeStar
    } else if sp1 < delta1 {
        GraftCase::SlackHost
    } else if p < sp1 {
        GraftCase::SmallStarTightHost
    } else {
        GraftCase::MatchingStarTightHost
    })
}

/// Builds the graft, computes its spanning parameter and maximum degree by
/// oracle, and reports whether the case's conclusion holds (equality for
/// `MatchingStarTightHost`, strict inequality otherwise). Errors when the
/// case's hypothesis fails for the given host and star size.
pub fn verify_graft_case(
    host: &Multigraph,
    p: usize,
    v: usize,
    case: GraftCase,
    caps: &Caps,
) -> Result<bool> {
    let actual = graft_case_for(host, p, caps)?;
    if actual != case {
        let sp1 = sp::sp_factor_value(host, caps)?;
        let delta1 = host.max_degree();
        return Err(Error::Precondition(format!(
            "case hypothesis fails: p = {p}, sp(host) = {sp1}, max degree(host) = {delta1} \
             put this graft in {actual:?}"
        )));
    }
    let grafted = graft(host, p, v)?;
    let sp_t = sp::sp_factor_value(&grafted.tree, caps)?;
    let delta_t = grafted.tree.max_degree();
    Ok(match case {
        GraftCase::MatchingStarTightHost => sp_t == delta_t,
        _ => sp_t != delta_t,
    })
}

/// Star-forest shape check used by the decomposition tests: every
/// component of the edge set is a star, and no center exceeds the degree
/// bound.
pub fn is_star_forest_within(g: &Multigraph, edges: &EdgeSet, max_center_degree: usize) -> bool {
    let deg = subgraph_degrees(g, edges);
    if deg.iter().any(|&d| d > max_center_degree) {
        return false;
    }
    // in a star forest, every edge has at least one endpoint of degree 1
    edges.iter().all(|&e| {
        let (a, b) = g.endpoints(e);
        deg[a] == 1 || deg[b] == 1
    })
}
