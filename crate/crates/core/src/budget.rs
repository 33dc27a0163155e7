use crate::error::{Error, Result};
use crate::graph::Graph;

/// Limits for the exact exponential searches.
///
/// Exceeding any limit is reported as [`Error::SearchBudgetExceeded`]; no
/// search ever falls back to an approximate answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_vertices: usize,
    pub max_edges: usize,
    /// Facet limit for shellability search.
    pub max_facets: usize,
    /// Node limit for a single enumeration or shelling search.
    pub max_nodes: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_vertices: 20,
            max_edges: 60,
            max_facets: 64,
            max_nodes: 500_000_000,
        }
    }
}

impl Budget {
    /// Budget sized for graphs with at most `n` vertices and `3n` edges.
    pub fn for_vertices(n: usize) -> Self {
        Budget {
            max_vertices: n,
            max_edges: 3 * n,
            ..Budget::default()
        }
    }

    pub fn unlimited() -> Self {
        Budget {
            max_vertices: usize::MAX,
            max_edges: usize::MAX,
            max_facets: 64,
            max_nodes: u64::MAX,
        }
    }

    pub fn check_graph(&self, g: &Graph, operation: &'static str) -> Result<()> {
        if g.vertex_count() > self.max_vertices {
            return Err(Error::budget(
                operation,
                format!("{} vertices > limit {}", g.vertex_count(), self.max_vertices),
            ));
        }
        if g.edge_count() > self.max_edges {
            return Err(Error::budget(
                operation,
                format!("{} edges > limit {}", g.edge_count(), self.max_edges),
            ));
        }
        Ok(())
    }
}
