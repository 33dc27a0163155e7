//! Free parameter sets and the graphical dimension.
//!
//! A free parameter set is an independent sequence `a_1..a_r` with partners
//! `b_1..b_r` such that `{a_i, b_i}` is an edge and `{a_i, b_j}` is an edge
//! only when `i <= j`. The graphical dimension is the largest `r` plus one,
//! and equals the Krull dimension of the algebra of basic covers.

use std::collections::HashSet;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{matching_number, maximum_matching_within, paired_domination_number, Graph, VertexSet};
use crate::par;

/// Ordered vertex sequences, 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeParameterCertificate {
    pub a_seq: Vec<usize>,
    pub b_seq: Vec<usize>,
}

impl FreeParameterCertificate {
    pub fn from_labels(a: &[usize], b: &[usize]) -> Self {
        FreeParameterCertificate {
            a_seq: a.iter().map(|x| x - 1).collect(),
            b_seq: b.iter().map(|x| x - 1).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.a_seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a_seq.is_empty()
    }

    /// `A: a_1 .. a_r` and `B: b_1 .. b_r`, with 1-based labels.
    pub fn to_lines(&self) -> [String; 2] {
        let fmt = |s: &[usize]| s.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ");
        [format!("A: {}", fmt(&self.a_seq)), format!("B: {}", fmt(&self.b_seq))]
    }
}

impl Serialize for FreeParameterCertificate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("FreeParameterCertificate", 2)?;
        st.serialize_field("a", &self.a_seq.iter().map(|v| v + 1).collect::<Vec<_>>())?;
        st.serialize_field("b", &self.b_seq.iter().map(|v| v + 1).collect::<Vec<_>>())?;
        st.end()
    }
}

/// Checks independence, disjointness, the partner edges and the triangular
/// condition.
pub fn is_free_parameter_set(g: &Graph, cert: &FreeParameterCertificate) -> bool {
    let n = g.vertex_count();
    let (a, b) = (&cert.a_seq, &cert.b_seq);
    if a.is_empty() || a.len() != b.len() || a.iter().chain(b).any(|&v| v >= n) {
        return false;
    }
    let all: VertexSet = a.iter().chain(b).copied().collect();
    if all.len() != 2 * a.len() {
        return false;
    }
    let r = a.len();
    g.is_independent(a.iter().copied().collect())
        && (0..r).all(|i| g.has_edge(a[i], b[i]))
        && (0..r).all(|i| (0..i).all(|j| !g.has_edge(a[i], b[j])))
}

#[derive(Debug, Clone, Serialize)]
pub struct GdimResult {
    pub gdim: usize,
    pub certificate: FreeParameterCertificate,
}

/// Exact graphical dimension with a certificate attaining it.
pub fn graphical_dimension(g: &Graph, budget: &Budget) -> Result<GdimResult> {
    budget.check_graph(g, "graphical dimension")?;
    let nu = matching_number(g);
    let best = AtomicUsize::new(1);
    let nodes = AtomicU64::new(0);
    let firsts: Vec<(usize, usize)> = g.edges().iter().flat_map(|&(u, v)| [(u, v), (v, u)]).collect();
    par::try_map(firsts, |(a, b)| {
        let mut s = Search::new(g, nu, budget, &nodes);
        s.value(pair(a, b), 1, &best)
    })?;
    let target = best.load(Ordering::Relaxed);
    let mut s = Search::new(g, nu, budget, &nodes);
    let mut seq = Vec::new();
    if !s.witness(VertexSet::EMPTY, target, &mut seq)? {
        unreachable!("the value search found a sequence of length {target}");
    }
    let certificate = FreeParameterCertificate {
        a_seq: seq.iter().map(|p| p.0).collect(),
        b_seq: seq.iter().map(|p| p.1).collect(),
    };
    debug_assert!(is_free_parameter_set(g, &certificate));
    Ok(GdimResult {
        gdim: target + 1,
        certificate,
    })
}

fn pair(a: usize, b: usize) -> VertexSet {
    let mut s = VertexSet::singleton(a);
    s.insert(b);
    s
}

struct Search<'a> {
    g: &'a Graph,
    nu: usize,
    limit: u64,
    nodes: &'a AtomicU64,
    /// Chosen sets already explored; the reachable extensions depend only on
    /// the set, and its size fixes the depth.
    visited: HashSet<u64>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, nu: usize, budget: &Budget, nodes: &'a AtomicU64) -> Self {
        Search {
            g,
            nu,
            limit: budget.max_nodes,
            nodes,
            visited: HashSet::new(),
        }
    }

    fn tick(&self) -> Result<()> {
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.limit {
            return Err(Error::budget(
                "graphical dimension",
                format!("more than {} nodes", self.limit),
            ));
        }
        Ok(())
    }

    /// Vertices usable as the next `a`: outside the closed neighborhood of
    /// everything chosen so far.
    fn free(&self, chosen: VertexSet) -> VertexSet {
        self.g.vertices().difference(chosen.union(self.g.neighborhood(chosen)))
    }

    fn bound(&self, chosen: VertexSet, free: VertexSet) -> usize {
        free.len().min(self.g.vertices().difference(chosen).len() / 2)
    }

    fn value(&mut self, chosen: VertexSet, r: usize, best: &AtomicUsize) -> Result<()> {
        best.fetch_max(r, Ordering::Relaxed);
        if r >= self.nu || !self.visited.insert(chosen.0) {
            return Ok(());
        }
        self.tick()?;
        let free = self.free(chosen);
        if free.is_empty() {
            return Ok(());
        }
        let current = best.load(Ordering::Relaxed);
        if r + self.bound(chosen, free) <= current {
            return Ok(());
        }
        let rest = self.g.vertices().difference(chosen);
        if r + maximum_matching_within(self.g, rest).len() <= current {
            return Ok(());
        }
        for a in free.iter() {
            for b in self.g.neighbors(a).difference(chosen).iter() {
                if best.load(Ordering::Relaxed) >= self.nu {
                    return Ok(());
                }
                self.value(chosen.union(pair(a, b)), r + 1, best)?;
            }
        }
        Ok(())
    }

    /// First sequence in canonical order extending `chosen` by `need` pairs.
    fn witness(&mut self, chosen: VertexSet, need: usize, seq: &mut Vec<(usize, usize)>) -> Result<bool> {
        if need == 0 {
            return Ok(true);
        }
        if !self.visited.insert(chosen.0) {
            return Ok(false);
        }
        self.tick()?;
        let free = self.free(chosen);
        if self.bound(chosen, free) < need {
            return Ok(false);
        }
        for a in free.iter() {
            for b in self.g.neighbors(a).difference(chosen).iter() {
                seq.push((a, b));
                if self.witness(chosen.union(pair(a, b)), need - 1, seq)? {
                    return Ok(true);
                }
                seq.pop();
            }
        }
        Ok(false)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GdimBounds {
    /// `γ_P / 2 + 1` for the paired domination number `γ_P`.
    pub lower: usize,
    /// `ν + 1` for the matching number `ν`.
    pub upper: usize,
}

pub fn gdim_bounds(g: &Graph, budget: &Budget) -> Result<GdimBounds> {
    Ok(GdimBounds {
        lower: paired_domination_number(g, budget)? / 2 + 1,
        upper: matching_number(g) + 1,
    })
}

/// `ν + 1`, which is the graphical dimension of a tree.
pub fn tree_gdim(g: &Graph, budget: &Budget) -> Result<usize> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    let value = matching_number(g) + 1;
    match graphical_dimension(g, budget) {
        Ok(r) if r.gdim != value => Err(Error::EquivalenceViolation(format!(
            "tree has matching number + 1 = {value} but graphical dimension {}",
            r.gdim
        ))),
        Err(e) if !e.is_budget() => Err(e),
        _ => Ok(value),
    }
}
