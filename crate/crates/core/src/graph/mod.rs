//! Finite simple graphs on at most 64 vertices.
//!
//! Vertices are indexed `0..n` internally. Every textual surface (parsers,
//! reports, error messages) uses 1-based labels, matching the edge-list format.

mod domination;
mod matching;
mod parse;

pub use domination::paired_domination_number;
pub use matching::{enumerate_perfect_matchings, induced_matching_number, matching_number, maximum_matching, Matching};
pub(crate) use matching::{maximum_matching_within, perfect_matchings_of};
pub use parse::parse_graph;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// A set of vertex indices stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    /// 1-based labels in increasing order.
    pub fn labels(self) -> Vec<usize> {
        self.iter().map(|v| v + 1).collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.labels()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.labels().serialize(s)
    }
}

/// Undirected simple graph without isolated vertices.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<u64>,
    names: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from 0-based edges. Edges are canonicalized and sorted.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        if n == 0 {
            return Err(Error::malformed(0, "graph has no vertices"));
        }
        if n > MAX_VERTICES {
            return Err(Error::malformed(
                0,
                format!("{n} vertices exceed the supported maximum of {MAX_VERTICES}"),
            ));
        }
        let mut adj = vec![0u64; n];
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::malformed(
                    0,
                    format!("edge {{{},{}}} outside vertex range 1..={n}", u + 1, v + 1),
                ));
            }
            if u == v {
                return Err(Error::LoopEdge(u + 1));
            }
            let (a, b) = (u.min(v), u.max(v));
            if adj[a] >> b & 1 == 1 {
                return Err(Error::malformed(0, format!("duplicate edge {{{},{}}}", a + 1, b + 1)));
            }
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
            list.push((a, b));
        }
        if let Some(v) = (0..n).find(|&v| adj[v] == 0) {
            return Err(Error::IsolatedVertex(v + 1));
        }
        list.sort_unstable();
        Ok(Graph {
            n,
            edges: list,
            adj,
            names: None,
        })
    }

    /// Builds a graph from 1-based labels; the vertex count is the largest label.
    pub fn from_labels(edges: &[(usize, usize)]) -> Result<Graph> {
        let n = edges.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0);
        if edges.iter().any(|&(a, b)| a == 0 || b == 0) {
            return Err(Error::malformed(0, "labels are 1-based"));
        }
        Graph::new(n, edges.iter().map(|&(a, b)| (a - 1, b - 1)))
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Graph> {
        if names.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: names.len(),
            });
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical 0-based edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1 << v)
    }

    /// Union of the open neighborhoods of `set`.
    pub fn neighborhood(&self, set: VertexSet) -> VertexSet {
        set.iter().fold(VertexSet::EMPTY, |acc, v| acc.union(self.neighbors(v)))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display name of a vertex: its name if one is set, else its 1-based label.
    pub fn label(&self, v: usize) -> String {
        match &self.names {
            Some(names) => names[v].clone(),
            None => (v + 1).to_string(),
        }
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.adj[v] & set.0 == 0)
    }

    /// Every vertex outside `set` has a neighbor in `set`.
    pub fn is_dominating(&self, set: VertexSet) -> bool {
        self.vertices().difference(set).iter().all(|v| self.adj[v] & set.0 != 0)
    }

    pub fn component_of(&self, v: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.neighborhood(frontier).difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        seen
    }

    pub fn components(&self) -> Vec<VertexSet> {
        let mut rest = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.component_of(v);
            rest = rest.difference(c);
            out.push(c);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0) == self.vertices()
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.n
    }

    /// The 2-coloring `(A, B)` with `|A| <= |B|`, or `None` for non-bipartite graphs.
    ///
    /// Each component is colored with its smallest vertex in the first class;
    /// the first classes are collected into `A`. If that makes `A` larger we
    /// swap, and on a tie `A` is the class that contains vertex 1.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut color = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v).iter() {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        stack.push(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        let a: VertexSet = (0..self.n).filter(|&v| color[v] == 0).collect();
        let b = self.vertices().difference(a);
        Some(if a.len() > b.len() { (b, a) } else { (a, b) })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Edge-list text with an `n` header, parseable by [`parse_graph`].
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("n {}\n", self.n);
        for &(u, v) in &self.edges {
            s.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        s
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (u + 1, v + 1)).collect();
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &edges)
            .finish()
    }
}
