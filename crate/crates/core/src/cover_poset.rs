//! The poset of basic 1-covers of a bipartite graph.
//!
//! A basic 1-cover of a bipartite graph is determined by its values on one
//! side `A`: a vertex of `B` gets 1 exactly when some neighbor in `A` gets 0.
//! Elements are ordered by comparing their values on `A` and are named by the
//! bit pattern of those values in increasing vertex order.

use serde::Serialize;

use crate::budget::Budget;
use crate::complex::SimplicialComplex;
use crate::covers::{enumerate_basic_covers, is_basic_values, Cover};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::poset::{birkhoff_poset, BirkhoffPoset, Poset};
use crate::report::Verdict;

#[derive(Debug, Clone)]
pub struct CoverPoset {
    graph: Graph,
    side: VertexSet,
    other: VertexSet,
    elements: Vec<Cover>,
    poset: Poset,
}

/// Builds the poset ordered on the smaller side of the bipartition (the side
/// holding vertex 1 on a tie).
pub fn build_poset(g: &Graph, budget: &Budget) -> Result<CoverPoset> {
    let (a, _) = g.bipartition().ok_or(Error::NotBipartite)?;
    build_poset_on(g, a, budget)
}

/// Builds the poset ordered on `side`, which must be one colour class of a
/// bipartition.
pub fn build_poset_on(g: &Graph, side: VertexSet, budget: &Budget) -> Result<CoverPoset> {
    let other = g.vertices().difference(side);
    let proper = |s: VertexSet| s.iter().all(|v| g.neighbors(v).is_subset(g.vertices().difference(s)));
    if !proper(side) || !proper(other) {
        return Err(Error::NotBipartite);
    }
    let mut elements = enumerate_basic_covers(g, 1, budget)?;
    let key = |c: &Cover| side.iter().map(|v| c.value(v)).collect::<Vec<_>>();
    elements.sort_by_key(key);
    let names: Vec<String> = elements.iter().map(|c| pattern_on(side, c)).collect();
    let poset = Poset::from_relation(names, |i, j| {
        side.iter().all(|v| elements[i].value(v) <= elements[j].value(v))
    })?;
    Ok(CoverPoset {
        graph: g.clone(),
        side,
        other,
        elements,
        poset,
    })
}

fn pattern_on(side: VertexSet, c: &Cover) -> String {
    side.iter().map(|v| char::from(b'0' + c.value(v) as u8)).collect()
}

impl CoverPoset {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn side(&self) -> VertexSet {
        self.side
    }

    pub fn other_side(&self) -> VertexSet {
        self.other
    }

    pub fn elements(&self) -> &[Cover] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Cover {
        &self.elements[i]
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        self.poset.name(i)
    }

    /// Bit pattern of a cover's values on the ordering side.
    pub fn pattern(&self, c: &Cover) -> String {
        pattern_on(self.side, c)
    }

    pub fn index_of(&self, c: &Cover) -> Option<usize> {
        self.elements.iter().position(|e| e == c)
    }

    pub fn index_of_values(&self, values: &[u32]) -> Option<usize> {
        self.elements.iter().position(|e| e.values() == values)
    }

    fn combine(&self, a: &Cover, b: &Cover, low_on_side: bool) -> Vec<u32> {
        (0..self.graph.vertex_count())
            .map(|v| {
                let (x, y) = (a.value(v), b.value(v));
                if self.side.contains(v) == low_on_side {
                    x.min(y)
                } else {
                    x.max(y)
                }
            })
            .collect()
    }

    /// Minimum on the ordering side, maximum on the other; always a 1-cover,
    /// not necessarily basic.
    pub fn meet_values(&self, a: &Cover, b: &Cover) -> Vec<u32> {
        self.combine(a, b, true)
    }

    /// Maximum on the ordering side, minimum on the other.
    pub fn join_values(&self, a: &Cover, b: &Cover) -> Vec<u32> {
        self.combine(a, b, false)
    }

    pub fn meet_candidate(&self, a: &Cover, b: &Cover) -> Option<Cover> {
        let v = self.meet_values(a, b);
        is_basic_values(&self.graph, &v, 1).then(|| Cover::from_parts(v, 1))
    }

    pub fn join_candidate(&self, a: &Cover, b: &Cover) -> Option<Cover> {
        let v = self.join_values(a, b);
        is_basic_values(&self.graph, &v, 1).then(|| Cover::from_parts(v, 1))
    }

    /// Simplicial complex whose facets are the maximal chains.
    pub fn order_complex(&self) -> Result<SimplicialComplex> {
        let facets = self
            .poset
            .maximal_chains()
            .into_iter()
            .map(|c| c.into_iter().collect())
            .collect();
        SimplicialComplex::new(self.poset.names().to_vec(), facets)
    }

    pub fn birkhoff(&self) -> Result<BirkhoffPoset> {
        birkhoff_poset(&self.poset)
    }
}

/// What the poset says about the Cohen-Macaulay property of the algebra of
/// basic covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CmVerdict {
    CohenMacaulay,
    NotCohenMacaulay,
    Undetermined,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrderComplexReport {
    pub side_size: usize,
    pub rank: usize,
    /// `rank == side_size`, under which purity, shellability and the
    /// Cohen-Macaulay property coincide.
    pub hypothesis_holds: bool,
    pub pure: bool,
    pub locally_upper_semimodular: bool,
    pub strongly_connected: Option<bool>,
    pub shellable: Verdict,
    pub verdict: CmVerdict,
    pub basis: String,
}

/// Evaluates the purity, semimodularity, shellability and connectivity
/// conditions of the order complex and the verdict they support.
pub fn order_complex_report(g: &Graph, budget: &Budget) -> Result<OrderComplexReport> {
    let cp = build_poset(g, budget)?;
    order_complex_report_for(&cp, budget)
}

pub fn order_complex_report_for(cp: &CoverPoset, budget: &Budget) -> Result<OrderComplexReport> {
    let p = cp.poset();
    let side_size = cp.side().len();
    let rank = p.rank();
    let pure = p.is_pure();
    let lus = p.is_locally_upper_semimodular();
    let delta = cp.order_complex()?;
    let strongly_connected = delta.is_strongly_connected().ok();
    let shellable = if pure {
        match delta.is_shellable(budget) {
            Ok(b) => Verdict::from(b),
            Err(e) if e.is_budget() => Verdict::Skipped(e.to_string()),
            Err(e) => return Err(e),
        }
    } else {
        Verdict::False
    };
    let hypothesis_holds = rank == side_size;
    if hypothesis_holds {
        if let Verdict::True | Verdict::False = shellable {
            if shellable.as_bool() != Some(pure) {
                return Err(Error::EquivalenceViolation(format!(
                    "rank equals |A| but pure={pure} while shellable={}",
                    !pure
                )));
            }
        }
        if pure && !lus {
            return Err(Error::EquivalenceViolation(
                "rank equals |A| and the poset is pure but not locally upper semimodular".into(),
            ));
        }
    }
    let (verdict, basis) = if !pure {
        (
            CmVerdict::NotCohenMacaulay,
            "poset not pure, so the algebra is not equidimensional",
        )
    } else if shellable == Verdict::True {
        (CmVerdict::CohenMacaulay, "order complex shellable")
    } else if strongly_connected == Some(false) {
        (
            CmVerdict::NotCohenMacaulay,
            "order complex not strongly connected, so the initial ideal is not connected in codimension one",
        )
    } else {
        (CmVerdict::Undetermined, "no combinatorial certificate applies")
    };
    Ok(OrderComplexReport {
        side_size,
        rank,
        hypothesis_holds,
        pure,
        locally_upper_semimodular: lus,
        strongly_connected,
        shellable,
        verdict,
        basis: basis.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e7() -> Graph {
        Graph::from_labels(&[(1, 4), (2, 5), (3, 6), (1, 5), (1, 6), (1, 7), (2, 7), (3, 7)]).unwrap()
    }

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn k2_is_a_chain() {
        let g = Graph::from_labels(&[(1, 2)]).unwrap();
        let cp = build_poset(&g, &b()).unwrap();
        assert_eq!(cp.poset().names(), &["0", "1"]);
        assert_eq!(cp.poset().hasse_lines(), vec!["0 < 1"]);
        assert_eq!(cp.birkhoff().unwrap().elements.len(), 1);
    }

    #[test]
    fn e7_shape() {
        let cp = build_poset(&e7(), &b()).unwrap();
        assert_eq!(cp.poset().names(), &["000", "100", "101", "110", "111"]);
        let mut hasse = cp.poset().hasse_lines();
        hasse.sort();
        assert_eq!(
            hasse,
            vec!["000 < 100", "100 < 101", "100 < 110", "101 < 111", "110 < 111"]
        );
        assert_eq!(cp.poset().rank(), 3);
        let jis: Vec<&str> = cp.birkhoff().unwrap().elements.iter().map(|&i| cp.name(i)).collect();
        assert_eq!(jis, vec!["100", "101", "110"]);
    }

    #[test]
    fn e7_candidates() {
        let cp = build_poset(&e7(), &b()).unwrap();
        let x = cp.element(cp.poset().index_of("110").unwrap());
        let y = cp.element(cp.poset().index_of("101").unwrap());
        assert_eq!(cp.pattern(&cp.meet_candidate(x, y).unwrap()), "100");
        // vertex 7 keeps value 1 with every neighbor at 1
        assert_eq!(cp.join_values(x, y), vec![1, 1, 1, 0, 0, 0, 1]);
        assert!(cp.join_candidate(x, y).is_none());
        assert_eq!(cp.meet_candidate(x, x).as_ref(), Some(x));
    }

    #[test]
    fn rejects_non_bipartite() {
        let c5 = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert!(matches!(build_poset(&c5, &b()), Err(Error::NotBipartite)));
    }

    #[test]
    fn e7_report() {
        let r = order_complex_report(&e7(), &b()).unwrap();
        assert!(r.hypothesis_holds && r.pure && r.locally_upper_semimodular);
        assert_eq!(r.strongly_connected, Some(true));
        assert_eq!(r.shellable, Verdict::True);
        assert_eq!(r.verdict, CmVerdict::CohenMacaulay);
    }
}
