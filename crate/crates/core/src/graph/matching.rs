use serde::Serialize;

use super::{Graph, VertexSet};
use crate::budget::Budget;
use crate::error::Result;
use crate::par;

/// A set of pairwise disjoint edges, stored canonically and sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    /// Returns `None` if two edges share a vertex.
    pub fn new(edges: impl IntoIterator<Item = (usize, usize)>) -> Option<Matching> {
        let mut list: Vec<_> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        list.sort_unstable();
        let mut used = VertexSet::EMPTY;
        for &(u, v) in &list {
            if u == v || used.contains(u) || used.contains(v) {
                return None;
            }
            used.insert(u);
            used.insert(v);
        }
        Some(Matching { edges: list })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertices(&self) -> VertexSet {
        self.edges.iter().flat_map(|&(u, v)| [u, v]).collect()
    }

    pub fn labels(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|&(u, v)| (u + 1, v + 1)).collect()
    }
}

impl Serialize for Matching {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.labels().serialize(s)
    }
}

/// Maximum matching size. Bipartite graphs use augmenting paths, others an
/// exact branch and bound.
pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).len()
}

pub fn maximum_matching(g: &Graph) -> Matching {
    maximum_matching_within(g, g.vertices())
}

/// Maximum matching of the subgraph induced on `allowed`.
pub(crate) fn maximum_matching_within(g: &Graph, allowed: VertexSet) -> Matching {
    match g.bipartition() {
        Some((a, _)) => augmenting_path_matching(g, allowed, a),
        None => {
            let mut search = BranchAndBound {
                g,
                best: Vec::new(),
                current: Vec::new(),
            };
            search.run(allowed);
            Matching::new(search.best).expect("search yields disjoint edges")
        }
    }
}

fn augmenting_path_matching(g: &Graph, allowed: VertexSet, left: VertexSet) -> Matching {
    let n = g.vertex_count();
    let mut mate = vec![usize::MAX; n];
    for u in left.intersection(allowed).iter() {
        let mut visited = VertexSet::EMPTY;
        augment(g, allowed, u, &mut mate, &mut visited);
    }
    Matching::new(
        left.intersection(allowed)
            .iter()
            .filter(|&u| mate[u] != usize::MAX)
            .map(|u| (u, mate[u])),
    )
    .expect("augmenting paths keep the matching disjoint")
}

fn augment(g: &Graph, allowed: VertexSet, u: usize, mate: &mut [usize], visited: &mut VertexSet) -> bool {
    for w in g.neighbors(u).intersection(allowed).iter() {
        if visited.contains(w) {
            continue;
        }
        visited.insert(w);
        if mate[w] == usize::MAX || augment(g, allowed, mate[w], mate, visited) {
            mate[w] = u;
            mate[u] = w;
            return true;
        }
    }
    false
}

struct BranchAndBound<'a> {
    g: &'a Graph,
    best: Vec<(usize, usize)>,
    current: Vec<(usize, usize)>,
}

impl BranchAndBound<'_> {
    fn run(&mut self, free: VertexSet) {
        // Vertices with no free neighbor can never be matched.
        let live: VertexSet = free
            .iter()
            .filter(|&v| !self.g.neighbors(v).intersection(free).is_empty())
            .collect();
        let Some(v) = live.first() else {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return;
        };
        if self.current.len() + live.len() / 2 <= self.best.len() {
            return;
        }
        for w in self.g.neighbors(v).intersection(live).iter() {
            let mut rest = live;
            rest.remove(v);
            rest.remove(w);
            self.current.push((v, w));
            self.run(rest);
            self.current.pop();
        }
        let mut rest = live;
        rest.remove(v);
        self.run(rest);
    }
}

/// All perfect matchings, sorted.
pub fn enumerate_perfect_matchings(g: &Graph, budget: &Budget) -> Result<Vec<Matching>> {
    budget.check_graph(g, "perfect matching enumeration")?;
    Ok(perfect_matchings_of(g, g.vertices(), |_, _| true))
}

/// Perfect matchings of the subgraph on `set` using only edges accepted by `keep`.
pub(crate) fn perfect_matchings_of(
    g: &Graph,
    set: VertexSet,
    keep: impl Fn(usize, usize) -> bool + Sync,
) -> Vec<Matching> {
    if set.len() % 2 == 1 {
        return Vec::new();
    }
    let Some(v) = set.first() else {
        return vec![Matching { edges: Vec::new() }];
    };
    let firsts: Vec<usize> = g
        .neighbors(v)
        .intersection(set)
        .iter()
        .filter(|&w| keep(v, w))
        .collect();
    let keep = &keep;
    let mut out: Vec<Matching> = par::map(firsts, |w| {
        let mut found = Vec::new();
        let mut rest = set;
        rest.remove(v);
        rest.remove(w);
        let mut stack = vec![(v, w)];
        extend_perfect(g, rest, keep, &mut stack, &mut found);
        found
    })
    .into_iter()
    .flatten()
    .collect();
    out.sort();
    out
}

fn extend_perfect(
    g: &Graph,
    rest: VertexSet,
    keep: &(impl Fn(usize, usize) -> bool + Sync),
    stack: &mut Vec<(usize, usize)>,
    found: &mut Vec<Matching>,
) {
    let Some(v) = rest.first() else {
        found.push(Matching::new(stack.iter().copied()).expect("disjoint by construction"));
        return;
    };
    for w in g.neighbors(v).intersection(rest).iter() {
        if !keep(v, w) {
            continue;
        }
        let mut next = rest;
        next.remove(v);
        next.remove(w);
        stack.push((v, w));
        extend_perfect(g, next, keep, stack, found);
        stack.pop();
    }
}

/// Largest set of pairwise disconnected edges: disjoint, and no edge of the
/// graph joins two of them.
pub fn induced_matching_number(g: &Graph, budget: &Budget) -> Result<usize> {
    budget.check_graph(g, "induced matching search")?;
    let edges = g.edges();
    let best = par::map((0..edges.len()).collect(), |first| {
        let (u, v) = edges[first];
        let blocked = g.closed_neighbors(u).union(g.closed_neighbors(v));
        1 + induced_extend(g, first + 1, blocked)
    });
    Ok(best.into_iter().max().unwrap_or(0))
}

fn induced_extend(g: &Graph, from: usize, blocked: VertexSet) -> usize {
    let edges = g.edges();
    let mut best = 0;
    for (i, &(u, v)) in edges.iter().enumerate().skip(from) {
        if blocked.contains(u) || blocked.contains(v) {
            continue;
        }
        let remaining = g.vertices().difference(blocked).len();
        if remaining / 2 <= best {
            break;
        }
        let next = blocked.union(g.closed_neighbors(u)).union(g.closed_neighbors(v));
        best = best.max(1 + induced_extend(g, i + 1, next));
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn matching_numbers() {
        assert_eq!(matching_number(&path(2)), 1);
        assert_eq!(matching_number(&path(6)), 3);
        assert_eq!(matching_number(&cycle(5)), 2);
        assert_eq!(matching_number(&cycle(7)), 3);
    }

    #[test]
    fn maximum_matching_is_a_matching_of_g() {
        let g = cycle(7);
        let m = maximum_matching(&g);
        assert!(m.edges().iter().all(|&(u, v)| g.has_edge(u, v)));
    }

    #[test]
    fn perfect_matchings_small() {
        let b = Budget::default();
        assert_eq!(
            enumerate_perfect_matchings(&path(2), &b).unwrap(),
            vec![Matching::new([(0, 1)]).unwrap()]
        );
        let c4 = enumerate_perfect_matchings(&cycle(4), &b).unwrap();
        assert_eq!(c4.len(), 2);
        assert!(c4.contains(&Matching::new([(0, 1), (2, 3)]).unwrap()));
        assert!(c4.contains(&Matching::new([(1, 2), (3, 0)]).unwrap()));
        assert_eq!(
            enumerate_perfect_matchings(&path(6), &b).unwrap(),
            vec![Matching::new([(0, 1), (2, 3), (4, 5)]).unwrap()]
        );
        assert!(enumerate_perfect_matchings(&cycle(5), &b).unwrap().is_empty());
    }

    #[test]
    fn induced_matchings() {
        let b = Budget::default();
        assert_eq!(induced_matching_number(&path(2), &b).unwrap(), 1);
        assert_eq!(induced_matching_number(&path(6), &b).unwrap(), 2);
        assert_eq!(induced_matching_number(&cycle(4), &b).unwrap(), 1);
        assert_eq!(induced_matching_number(&cycle(6), &b).unwrap(), 2);
    }

    #[test]
    fn matching_rejects_overlap() {
        assert!(Matching::new([(0, 1), (1, 2)]).is_none());
    }

    #[test]
    fn budget_is_enforced() {
        let g = path(30);
        assert!(enumerate_perfect_matchings(&g, &Budget::default())
            .unwrap_err()
            .is_budget());
        assert!(induced_matching_number(&g, &Budget::default()).unwrap_err().is_budget());
    }
}
