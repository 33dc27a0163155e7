//! Simplicial complexes given by their facets, with shellability and
//! strong connectivity checks.

use std::collections::HashSet;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::par;

/// Facets over a ground set of at most 64 named points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    ground: Vec<String>,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Sorts the facets and rejects nested ones.
    pub fn new(ground: Vec<String>, mut facets: Vec<VertexSet>) -> Result<SimplicialComplex> {
        if ground.len() > 64 {
            return Err(Error::budget(
                "simplicial complex",
                format!("{} ground points", ground.len()),
            ));
        }
        let full = VertexSet::full(ground.len());
        if let Some(f) = facets.iter().find(|f| !f.is_subset(full)) {
            return Err(Error::StructureViolation(format!("facet {f:?} leaves the ground set")));
        }
        facets.sort_by_key(|f| (f.iter().collect::<Vec<_>>(), f.0));
        facets.dedup();
        for (i, f) in facets.iter().enumerate() {
            if facets.iter().enumerate().any(|(j, g)| i != j && f.is_subset(*g)) {
                return Err(Error::StructureViolation(format!(
                    "facet {f:?} lies inside another facet"
                )));
            }
        }
        Ok(SimplicialComplex { ground, facets })
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    /// Facet as names of its points.
    pub fn facet_names(&self, f: VertexSet) -> Vec<&str> {
        f.iter().map(|i| self.ground[i].as_str()).collect()
    }

    /// One line per facet, points separated by spaces.
    pub fn facet_lines(&self) -> Vec<String> {
        self.facets.iter().map(|&f| self.facet_names(f).join(" ")).collect()
    }

    pub fn max_facet_size(&self) -> usize {
        self.facets.iter().map(|f| f.len()).max().unwrap_or(0)
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// The facets can be walked through intersections of size `d − 1`,
    /// where `d` is the largest facet size. A facet of smaller size touches
    /// nothing; this is connectivity in codimension one of the minimal primes
    /// of the Stanley-Reisner ideal.
    pub fn is_connected_in_codim_one(&self) -> bool {
        let d = self.max_facet_size();
        let m = self.facets.len();
        if m <= 1 {
            return true;
        }
        let mut seen = vec![false; m];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for (j, &f) in self.facets.iter().enumerate() {
                if !seen[j]
                    && self.facets[i].len() == d
                    && f.len() == d
                    && self.facets[i].intersection(f).len() + 1 == d
                {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Strong connectivity of a pure complex.
    pub fn is_strongly_connected(&self) -> Result<bool> {
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        Ok(self.is_connected_in_codim_one())
    }

    /// Whether adding `f` after the facets in `earlier` keeps the
    /// intersection pure of codimension one.
    fn admissible(&self, f: VertexSet, earlier: impl Iterator<Item = VertexSet> + Clone) -> bool {
        let d = f.len();
        let meets: Vec<VertexSet> = earlier.map(|g| f.intersection(g)).collect();
        if meets.is_empty() {
            return true;
        }
        let big: Vec<VertexSet> = meets.iter().copied().filter(|m| m.len() + 1 == d).collect();
        meets.iter().all(|m| big.iter().any(|b| m.is_subset(*b)))
    }

    /// Checks a claimed shelling order facet by facet.
    pub fn verify_shelling(&self, order: &[usize]) -> bool {
        let m = self.facets.len();
        let mut seen = vec![false; m];
        if order.len() != m || order.iter().any(|&i| i >= m || std::mem::replace(&mut seen[i], true)) {
            return false;
        }
        if !self.is_pure() {
            return false;
        }
        (1..m).all(|t| {
            let f = self.facets[order[t]];
            let d = f.len();
            let meets: Vec<VertexSet> = order[..t].iter().map(|&g| f.intersection(self.facets[g])).collect();
            // maximal elements among the intersections are the facets of the
            // intersection complex
            meets
                .iter()
                .filter(|a| !meets.iter().any(|b| a != &b && a.is_subset(*b)))
                .all(|a| a.len() + 1 == d)
        })
    }

    /// A shelling order of the facets, or `None` when none exists.
    pub fn find_shelling(&self, budget: &Budget) -> Result<Option<Vec<usize>>> {
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        let m = self.facets.len();
        if m > budget.max_facets.min(64) {
            return Err(Error::budget(
                "shelling search",
                format!("{m} facets > limit {}", budget.max_facets.min(64)),
            ));
        }
        if m <= 1 {
            return Ok(Some((0..m).collect()));
        }
        if !self.is_connected_in_codim_one() {
            return Ok(None);
        }
        let nodes = AtomicU64::new(0);
        // searches starting after the earliest successful first facet give up
        let earliest = AtomicUsize::new(usize::MAX);
        let found = par::try_map((0..m).collect(), |first| {
            let mut search = ShellingSearch {
                complex: self,
                failed: HashSet::new(),
                nodes: &nodes,
                limit: budget.max_nodes,
                order: vec![first],
                first,
                earliest: &earliest,
            };
            let hit = search.extend(1u64 << first)?;
            if hit {
                earliest.fetch_min(first, Ordering::Relaxed);
            }
            Ok(hit.then_some(search.order))
        })?;
        let order = found.into_iter().flatten().next();
        if let Some(o) = &order {
            if !self.verify_shelling(o) {
                return Err(Error::StructureViolation(
                    "shelling search produced an invalid order".into(),
                ));
            }
        }
        Ok(order)
    }

    pub fn is_shellable(&self, budget: &Budget) -> Result<bool> {
        Ok(self.find_shelling(budget)?.is_some())
    }
}

struct ShellingSearch<'a> {
    complex: &'a SimplicialComplex,
    failed: HashSet<u64>,
    nodes: &'a AtomicU64,
    limit: u64,
    order: Vec<usize>,
    first: usize,
    earliest: &'a AtomicUsize,
}

impl ShellingSearch<'_> {
    fn extend(&mut self, used: u64) -> Result<bool> {
        let facets = &self.complex.facets;
        let m = facets.len();
        if used.count_ones() as usize == m {
            return Ok(true);
        }
        if self.failed.contains(&used) || self.earliest.load(Ordering::Relaxed) < self.first {
            return Ok(false);
        }
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.limit {
            return Err(Error::budget(
                "shelling search",
                format!("more than {} nodes", self.limit),
            ));
        }
        let earlier = (0..m).filter(move |&i| used >> i & 1 == 1).map(|i| facets[i]);
        for (next, &f) in facets.iter().enumerate() {
            if used >> next & 1 == 1 || !self.complex.admissible(f, earlier.clone()) {
                continue;
            }
            self.order.push(next);
            if self.extend(used | 1 << next)? {
                return Ok(true);
            }
            self.order.pop();
        }
        self.failed.insert(used);
        Ok(false)
    }
}

/// Facets are the maximal independent sets; points are vertex labels.
pub fn independence_complex(g: &Graph, budget: &Budget) -> Result<SimplicialComplex> {
    budget.check_graph(g, "independence complex")?;
    let mut facets = Vec::new();
    bron_kerbosch(g, VertexSet::EMPTY, g.vertices(), VertexSet::EMPTY, &mut facets);
    let ground = (0..g.vertex_count()).map(|v| g.label(v)).collect();
    SimplicialComplex::new(ground, facets)
}

/// Maximal cliques of the complement graph.
fn bron_kerbosch(g: &Graph, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    let non_adj = |v: usize| g.vertices().difference(g.closed_neighbors(v));
    let pivot = p.union(x).first().expect("nonempty");
    for v in p.difference(non_adj(pivot)).iter() {
        let mut r2 = r;
        r2.insert(v);
        bron_kerbosch(g, r2, p.intersection(non_adj(v)), x.intersection(non_adj(v)), out);
        p.remove(v);
        x.insert(v);
    }
}

/// A summary of a complex for reports.
#[derive(Debug, Clone, Serialize)]
pub struct ComplexSummary {
    pub facets: Vec<String>,
    pub pure: bool,
    pub connected_in_codim_one: bool,
}

impl From<&SimplicialComplex> for ComplexSummary {
    fn from(c: &SimplicialComplex) -> Self {
        ComplexSummary {
            facets: c.facet_lines(),
            pure: c.is_pure(),
            connected_in_codim_one: c.is_connected_in_codim_one(),
        }
    }
}
