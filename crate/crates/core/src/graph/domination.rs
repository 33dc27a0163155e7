use super::{Graph, VertexSet};
use crate::budget::Budget;
use crate::error::Result;
use crate::par;

/// Minimum size of a dominating set whose induced subgraph has a perfect
/// matching.
///
/// A set has an induced perfect matching exactly when it is the vertex set of
/// some matching, so the search runs over matchings of growing size. The
/// vertex set of a maximum matching always dominates (otherwise the matching
/// could be extended), so the answer is at most `2ν`.
pub fn paired_domination_number(g: &Graph, budget: &Budget) -> Result<usize> {
    budget.check_graph(g, "paired domination search")?;
    let edges = g.edges();
    for size in 1..=g.vertex_count() / 2 {
        let hit = par::map((0..edges.len()).collect(), |first| {
            let (u, v) = edges[first];
            let mut used = VertexSet::EMPTY;
            used.insert(u);
            used.insert(v);
            dominating_extension(g, first + 1, used, size - 1)
        });
        if hit.into_iter().any(|h| h) {
            return Ok(2 * size);
        }
    }
    unreachable!("a maximum matching always dominates a graph without isolated vertices")
}

fn dominating_extension(g: &Graph, from: usize, used: VertexSet, remaining: usize) -> bool {
    if remaining == 0 {
        return g.is_dominating(used);
    }
    let edges = g.edges();
    (from..edges.len()).any(|i| {
        let (u, v) = edges[i];
        if used.contains(u) || used.contains(v) {
            return false;
        }
        let mut next = used;
        next.insert(u);
        next.insert(v);
        dominating_extension(g, i + 1, next, remaining - 1)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_graphs() {
        let b = Budget::default();
        let k2 = Graph::from_labels(&[(1, 2)]).unwrap();
        assert_eq!(paired_domination_number(&k2, &b).unwrap(), 2);
        let c5 = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert_eq!(paired_domination_number(&c5, &b).unwrap(), 4);
        let star = Graph::from_labels(&[(1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(paired_domination_number(&star, &b).unwrap(), 2);
        let p6 = Graph::new(6, (0..5).map(|i| (i, i + 1))).unwrap();
        assert_eq!(paired_domination_number(&p6, &b).unwrap(), 4);
    }
}
