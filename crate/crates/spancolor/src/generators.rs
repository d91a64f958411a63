//! Graph generators: elementary families, seeded random multigraphs, and
//! the extremal constructions used by the verification campaigns.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::matching;

/// Path on `n >= 1` vertices (n-1 edges).
pub fn path(n: usize) -> Multigraph {
    let edges = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Multigraph::new(n, edges).expect("path is valid")
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Multigraph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Multigraph::new(n, edges).expect("cycle is valid")
}

/// Star K_{1,p}: center 0, leaves 1..=p.
pub fn star(p: usize) -> Multigraph {
    let edges = (1..=p).map(|l| (0, l)).collect();
    Multigraph::new(p + 1, edges).expect("star is valid")
}

/// Complete simple graph on `n` vertices.
pub fn complete(n: usize) -> Multigraph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            edges.push((a, b));
        }
    }
    Multigraph::new(n, edges).expect("complete graph is valid")
}

/// Triangle with every edge doubled: 3 vertices, multiplicities (2,2,2).
/// Its chromatic index attains the 3Δ/2 ceiling.
pub fn shannon_triangle() -> Multigraph {
    Multigraph::new(3, vec![(0, 1), (0, 1), (0, 2), (0, 2), (1, 2), (1, 2)])
        .expect("shannon triangle is valid")
}

/// Seeded random multigraph: `m` edges drawn uniformly over the vertex
/// pairs whose current multiplicity is below `max_multiplicity`.
/// Deterministic for a fixed seed.
pub fn random_multigraph(
    n: usize,
    m: usize,
    max_multiplicity: usize,
    seed: u64,
) -> Result<Multigraph> {
    if n < 2 && m > 0 {
        return Err(Error::InvalidInput("need at least 2 vertices to place edges".into()));
    }
    if max_multiplicity == 0 && m > 0 {
        return Err(Error::InvalidInput("max_multiplicity must be positive".into()));
    }
    let pair_count = n * n.saturating_sub(1) / 2;
    if m > pair_count * max_multiplicity {
        return Err(Error::InvalidInput(format!(
            "cannot place {m} edges with multiplicity cap {max_multiplicity} on {n} vertices"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mult = std::collections::BTreeMap::new();
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let admissible: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|p| mult.get(p).copied().unwrap_or(0) < max_multiplicity)
            .collect();
        let &(a, b) = &admissible[rng.gen_range(0..admissible.len())];
        *mult.entry((a, b)).or_insert(0usize) += 1;
        edges.push((a, b));
    }
    Multigraph::new(n, edges)
}

/// Result of grafting a star onto a tree.
#[derive(Debug, Clone)]
pub struct Graft {
    pub tree: Multigraph,
    /// index of the star center in the new tree
    pub center: usize,
    /// the attachment vertex (unchanged index from the input tree)
    pub attachment: usize,
}

/// Attaches a star K_{1,p} to the tree `t1` by identifying one of the
/// star's leaves with vertex `v`. Requires `v` to have degree below the
/// maximum degree of `t1`, and `|V(t1)| >= 3`, `p >= 2`.
///
/// The new tree keeps the indices of `t1`; the star center is `|V(t1)|`
/// and its remaining `p - 1` leaves follow.
pub fn graft(t1: &Multigraph, p: usize, v: usize) -> Result<Graft> {
    if !t1.is_tree() {
        return Err(Error::InvalidInput("graft host must be a tree".into()));
    }
    if t1.vertex_count() < 3 {
        return Err(Error::Precondition("graft host needs at least 3 vertices".into()));
    }
    if p < 2 {
        return Err(Error::Precondition("star size p must be at least 2".into()));
    }
    let dv = t1.degree(v)?;
    if dv >= t1.max_degree() {
        return Err(Error::Precondition(format!(
            "attachment vertex {v} has maximum degree {dv}"
        )));
    }
    let n = t1.vertex_count();
    let center = n;
    let mut edges = t1.edges().to_vec();
    edges.push((v, center));
    for leaf in 0..p - 1 {
        edges.push((center, n + 1 + leaf));
    }
    let tree = Multigraph::new(n + p, edges)?;
    Ok(Graft { tree, center, attachment: v })
}

/// The tree family with a large gap between sp and any power of |V|/nu:
/// a path on 2k vertices joined to the center of a star K_{1,k}, where
/// k = a * n^b. Vertex count is 3k + 1.
pub fn ratio_tree(a: usize, b: usize, n: usize) -> Result<Multigraph> {
    if a < 1 || b < 1 {
        return Err(Error::InvalidInput("parameters a and b must be at least 1".into()));
    }
    if n < 4 {
        return Err(Error::InvalidInput("parameter n must be at least 4".into()));
    }
    let k = a
        .checked_mul(n.checked_pow(b as u32).ok_or_else(overflow)?)
        .ok_or_else(overflow)?;
    // path vertices 0..2k, star center 2k, star leaves 2k+1..=3k
    let mut edges: Vec<(usize, usize)> = (0..2 * k - 1).map(|i| (i, i + 1)).collect();
    let center = 2 * k;
    edges.push((0, center));
    for leaf in 1..=k {
        edges.push((center, center + leaf));
    }
    Multigraph::new(3 * k + 1, edges)
}

fn overflow() -> Error {
    Error::InvalidInput("a * n^b overflows".into())
}

/// Replaces the matching edge `f` = (u, w) of a regular graph by a path
/// u - x - y - w through two new vertices. Requires the host to be regular
/// and `f` to lie in some perfect matching.
pub fn tightness_graph(h: &Multigraph, f: usize) -> Result<Multigraph> {
    if f >= h.edge_count() {
        return Err(Error::InvalidInput(format!("edge {f} out of range")));
    }
    if !h.is_regular() || h.vertex_count() == 0 {
        return Err(Error::Precondition("host must be a regular graph".into()));
    }
    let (u, w) = h.endpoints(f);
    // f extends to a perfect matching iff the rest of the graph has one
    let rest = h
        .delete_vertices(&crate::graph::VertexSet::from([u, w]))?
        .graph;
    let rest_matching = matching::maximum_matching(&rest);
    if 2 * (rest_matching.len() + 1) != h.vertex_count() {
        return Err(Error::Precondition(
            "edge does not lie in any perfect matching of the host".into(),
        ));
    }
    let n = h.vertex_count();
    let (x, y) = (n, n + 1);
    let mut edges: Vec<(usize, usize)> = h
        .edges()
        .iter()
        .enumerate()
        .filter(|&(e, _)| e != f)
        .map(|(_, &ep)| ep)
        .collect();
    edges.push((u, x));
    edges.push((x, y));
    edges.push((y, w));
    Multigraph::new(n + 2, edges)
}

/// Seeded random connected simple cubic graph on `n` (even) vertices via
/// the pairing model with rejection. Returns the accepted graph and the
/// number of attempts consumed.
pub fn random_cubic(n: usize, seed: u64) -> Result<Multigraph> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::InvalidInput("cubic graphs need an even n >= 4".into()));
    }
    for attempt in 0..10_000u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ attempt.wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| [v, v, v]).collect();
        // Fisher-Yates
        for i in (1..stubs.len()).rev() {
            let j = rng.gen_range(0..=i);
            stubs.swap(i, j);
        }
        let edges: Vec<(usize, usize)> =
            stubs.chunks(2).map(|c| (c[0], c[1])).collect();
        if edges.iter().any(|&(a, b)| a == b) {
            continue;
        }
        let mut seen = std::collections::BTreeSet::new();
        if !edges.iter().all(|&(a, b)| seen.insert((a.min(b), a.max(b)))) {
            continue;
        }
        let g = Multigraph::new(n, edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::Internal(format!("pairing model failed to produce a cubic graph on {n} vertices")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;

    #[test]
    fn elementary_families() {
        assert_eq!((path(4).vertex_count(), path(4).edge_count()), (4, 3));
        assert_eq!((cycle(5).vertex_count(), cycle(5).edge_count()), (5, 5));
        assert_eq!((star(3).vertex_count(), star(3).edge_count()), (4, 3));
        assert_eq!(complete(4).edge_count(), 6);
        assert_eq!(shannon_triangle().max_degree(), 4);
        assert_eq!(shannon_triangle().max_multiplicity(), 2);
    }

    #[test]
    fn random_multigraph_is_deterministic_and_capped() {
        let a = random_multigraph(6, 9, 3, 7).unwrap();
        let b = random_multigraph(6, 9, 3, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.edge_count(), 9);
        assert!(a.max_multiplicity() <= 3);
        let c = random_multigraph(6, 9, 3, 8).unwrap();
        assert_ne!(a, c);
        // over-constrained request
        assert!(random_multigraph(3, 10, 1, 0).is_err());
    }

    #[test]
    fn graft_path_onto_path_end_gives_longer_path() {
        let g = graft(&path(3), 2, 0).unwrap();
        assert!(g.tree.is_tree());
        assert_eq!(g.tree.vertex_count(), 5);
        let mut degs = g.tree.degrees();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 2, 2, 2]); // a path
        assert_eq!(g.center, 3);
    }

    #[test]
    fn graft_shapes_and_preconditions() {
        // broom: star of size 3 on an endpoint of P3
        let broom = graft(&path(3), 3, 0).unwrap();
        assert_eq!(broom.tree.vertex_count(), 6);
        assert!(broom.tree.is_tree());
        assert_eq!(broom.tree.degree(broom.center).unwrap(), 3);

        // the middle of P3 has maximum degree: rejected
        assert!(matches!(graft(&path(3), 2, 1), Err(Error::Precondition(_))));
        // non-tree host: rejected
        assert!(graft(&cycle(4), 2, 0).is_err());
        // degree invariant
        let t = graft(&path(4), 3, 0).unwrap();
        assert_eq!(t.tree.max_degree(), 3);
        assert_eq!(t.tree.vertex_count(), path(4).vertex_count() + 3);
    }

    #[test]
    fn ratio_tree_counts() {
        for (a, b, n) in [(1usize, 1usize, 4usize), (1, 1, 5), (2, 1, 4), (1, 2, 4)] {
            let k = a * n.pow(b as u32);
            let g = ratio_tree(a, b, n).unwrap();
            assert_eq!(g.vertex_count(), 3 * k + 1);
            assert!(g.is_tree());
            assert_eq!(g.max_degree(), k + 1);
        }
        assert!(ratio_tree(0, 1, 4).is_err());
        assert!(ratio_tree(1, 1, 3).is_err());
    }

    #[test]
    fn tightness_graph_examples() {
        // K4 with any perfect-matching edge
        let g = tightness_graph(&complete(4), 0).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), complete(4).edge_count() + 2);

        // C4 -> C6
        let g = tightness_graph(&cycle(4), 0).unwrap();
        assert!(!g.is_odd_cycle() && g.edge_count() == 6 && g.is_connected());
        assert!(g.degrees().iter().all(|&d| d == 2));

        // K2 is 1-regular with a perfect matching; result is P4
        let k2 = path(2);
        let g = tightness_graph(&k2, 0).unwrap();
        assert!(g.is_tree());
        assert_eq!(g.vertex_count(), 4);

        // C5 is regular but edge 0 lies in no perfect matching
        assert!(matches!(tightness_graph(&cycle(5), 0), Err(Error::Precondition(_))));
        // star is not regular
        assert!(tightness_graph(&star(3), 0).is_err());
    }

    #[test]
    fn random_cubic_is_cubic_connected_simple() {
        for seed in 0..5 {
            let g = random_cubic(8, seed).unwrap();
            assert!(g.is_connected());
            assert!(g.degrees().iter().all(|&d| d == 3));
            assert_eq!(g.max_multiplicity(), 1);
            assert_eq!(g, random_cubic(8, seed).unwrap());
        }
    }

    #[test]
    fn deleting_any_vertex_subset_keeps_profiles_consistent() {
        let g = random_multigraph(7, 10, 2, 3).unwrap();
        for s in crate::graph::subsets_by_size(7).take(40) {
            let del = g.delete_vertices(&VertexSet::from_iter(s.iter().copied())).unwrap();
            assert_eq!(del.graph.vertex_count(), 7 - s.len());
        }
    }
}
