use thiserror::Error;

/// Errors shared by all operations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input value: out-of-range vertex, non-tree where a tree is
    /// required, invalid witness object, and so on.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A documented operation precondition does not hold for the given
    /// arguments.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An exact search was asked to run past one of the configured caps.
    /// Exceeding a cap is always a clean error, never a silent approximation.
    #[error("resource cap exceeded: {cap} is {limit} but input needs {actual}")]
    ResourceCap {
        cap: &'static str,
        limit: usize,
        actual: usize,
    },

    /// Graph file could not be parsed; `line` is 1-based.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// An internal invariant failed. Reaching this indicates a bug, not bad
    /// input.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Caps for the exact searches. Every capped operation takes these
/// explicitly so that campaigns can widen or narrow them per run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Max edge count for exact edge-coloring searches.
    pub coloring_edges: usize,
    /// Max edge count for full enumeration of maximum k-edge-colorable
    /// subgraphs.
    pub enumeration_edges: usize,
    /// Max edge count for edge-subset searches (factors, spanning
    /// subgraph searches, maximum k-ECS optimization).
    pub subset_search_edges: usize,
    /// Max vertex count for exhaustive enumeration of vertex subsets S
    /// (Tutte deficiency, degree-condition checks).
    pub subset_vertices: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            coloring_edges: 24,
            enumeration_edges: 16,
            subset_search_edges: 24,
            subset_vertices: 20,
        }
    }
}

impl Caps {
    pub(crate) fn check_coloring(&self, edges: usize) -> Result<()> {
        if edges > self.coloring_edges {
            return Err(Error::ResourceCap {
                cap: "coloring_edges",
                limit: self.coloring_edges,
                actual: edges,
            });
        }
        Ok(())
    }

    pub(crate) fn check_enumeration(&self, edges: usize) -> Result<()> {
        if edges > self.enumeration_edges {
            return Err(Error::ResourceCap {
                cap: "enumeration_edges",
                limit: self.enumeration_edges,
                actual: edges,
            });
        }
        Ok(())
    }

    pub(crate) fn check_subset_search(&self, edges: usize) -> Result<()> {
        if edges > self.subset_search_edges {
            return Err(Error::ResourceCap {
                cap: "subset_search_edges",
                limit: self.subset_search_edges,
                actual: edges,
            });
        }
        Ok(())
    }

    pub(crate) fn check_subset_vertices(&self, vertices: usize) -> Result<()> {
        if vertices > self.subset_vertices {
            return Err(Error::ResourceCap {
                cap: "subset_vertices",
                limit: self.subset_vertices,
                actual: vertices,
            });
        }
        Ok(())
    }
}
