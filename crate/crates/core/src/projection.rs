//! Right edges, the weak square condition, and the projection that collapses
//! complete bipartite blocks of right edges.

use serde::Serialize;

use crate::budget::Budget;
use crate::complex::independence_complex;
use crate::covers::Cover;
use crate::error::{Error, Result};
use crate::gdim::graphical_dimension;
use crate::graph::{
    enumerate_perfect_matchings, induced_matching_number, perfect_matchings_of, Graph, Matching, VertexSet,
};
use crate::poset::Poset;
use crate::report::Verdict;

/// Every neighbor of `u` other than `v` is adjacent to every neighbor of `v`
/// other than `u` (so in particular they share no neighbor).
pub fn is_right_edge(g: &Graph, u: usize, v: usize) -> Result<bool> {
    if u >= g.vertex_count() || v >= g.vertex_count() || !g.has_edge(u, v) {
        return Err(Error::NotAnEdge(u + 1, v + 1));
    }
    Ok(right_edge(g, u, v))
}

fn right_edge(g: &Graph, u: usize, v: usize) -> bool {
    let mut nu = g.neighbors(u);
    nu.remove(v);
    let mut nv = g.neighbors(v);
    nv.remove(u);
    nu.iter().all(|x| nv.is_subset(g.neighbors(x)))
}

pub fn right_edges(g: &Graph) -> Vec<(usize, usize)> {
    g.edges()
        .iter()
        .copied()
        .filter(|&(u, v)| right_edge(g, u, v))
        .collect()
}

/// Every vertex lies on a right edge.
pub fn satisfies_wsc(g: &Graph) -> bool {
    let covered: VertexSet = right_edges(g).into_iter().flat_map(|(u, v)| [u, v]).collect();
    covered == g.vertices()
}

/// A connected component of the right-edge subgraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Block {
    /// Complete bipartite; `small` is the smaller side, or on a tie the side
    /// holding the smallest label.
    Biclique {
        small: VertexSet,
        large: VertexSet,
    },
    Singleton {
        vertex: VertexSet,
    },
}

/// The subgraph of right edges, decomposed into blocks.
#[derive(Debug, Clone, Serialize)]
pub struct ZeroOneGraph {
    #[serde(serialize_with = "serialize_labels")]
    pub right_edges: Vec<(usize, usize)>,
    pub blocks: Vec<Block>,
}

fn serialize_labels<S: serde::Serializer>(edges: &[(usize, usize)], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(edges.iter().map(|&(u, v)| [u + 1, v + 1]))
}

pub fn zero_one_graph(g: &Graph) -> Result<ZeroOneGraph> {
    let right = right_edges(g);
    let n = g.vertex_count();
    let mut adj = vec![VertexSet::EMPTY; n];
    for &(u, v) in &right {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    let mut seen = VertexSet::EMPTY;
    let mut blocks = Vec::new();
    for start in 0..n {
        if seen.contains(start) {
            continue;
        }
        if adj[start].is_empty() {
            seen.insert(start);
            blocks.push(Block::Singleton {
                vertex: VertexSet::singleton(start),
            });
            continue;
        }
        // two-colour the component
        let mut side = [VertexSet::singleton(start), VertexSet::EMPTY];
        let mut stack = vec![(start, 0usize)];
        seen.insert(start);
        while let Some((x, c)) = stack.pop() {
            for y in adj[x].iter() {
                if side[c].contains(y) {
                    return Err(Error::StructureViolation(format!(
                        "right edges contain an odd cycle through {}",
                        y + 1
                    )));
                }
                if !seen.contains(y) {
                    seen.insert(y);
                    side[1 - c].insert(y);
                    stack.push((y, 1 - c));
                }
            }
        }
        let [p, q] = side;
        if p.iter().any(|x| adj[x] != q) || q.iter().any(|y| adj[y] != p) {
            return Err(Error::StructureViolation(format!(
                "right-edge component {:?} is not complete bipartite",
                p.union(q)
            )));
        }
        let (small, large) = if (p.len(), p.first()) <= (q.len(), q.first()) {
            (p, q)
        } else {
            (q, p)
        };
        blocks.push(Block::Biclique { small, large });
    }
    Ok(ZeroOneGraph {
        right_edges: right,
        blocks,
    })
}

/// The projected graph and the correspondence with the original vertices.
#[derive(Debug, Clone, Serialize)]
pub struct ProjectionReport {
    #[serde(skip)]
    pub pi_graph: Graph,
    /// Projected vertex of each original vertex (0-based).
    #[serde(skip)]
    pub block_of: Vec<usize>,
    /// Members of each projected vertex, numbered by smallest member.
    pub blocks: Vec<VertexSet>,
    pub pi_edges: Vec<[usize; 2]>,
    pub is_fixed_point: bool,
}

pub fn project(g: &Graph) -> Result<ProjectionReport> {
    let z = zero_one_graph(g)?;
    let mut blocks: Vec<VertexSet> = z
        .blocks
        .iter()
        .flat_map(|b| match *b {
            Block::Biclique { small, large } => vec![small, large],
            Block::Singleton { vertex } => vec![vertex],
        })
        .collect();
    blocks.sort_by_key(|b| b.first());
    let mut block_of = vec![0; g.vertex_count()];
    for (i, b) in blocks.iter().enumerate() {
        for v in b.iter() {
            block_of[v] = i;
        }
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for &(u, v) in g.edges() {
        let (a, b) = (block_of[u], block_of[v]);
        if a == b {
            return Err(Error::StructureViolation(format!(
                "edge {{{},{}}} lies inside one block",
                u + 1,
                v + 1
            )));
        }
        edges.push((a.min(b), a.max(b)));
    }
    edges.sort_unstable();
    edges.dedup();
    let pi_graph = Graph::new(blocks.len(), edges.iter().copied())?;
    let is_fixed_point = blocks.len() == g.vertex_count() && pi_graph.edges() == g.edges();
    Ok(ProjectionReport {
        pi_edges: pi_graph.edges().iter().map(|&(a, b)| [a + 1, b + 1]).collect(),
        pi_graph,
        block_of,
        blocks,
        is_fixed_point,
    })
}

impl ProjectionReport {
    /// The value on each block; fails if a basic cover is not constant there.
    pub fn project_cover(&self, alpha: &Cover) -> Result<Cover> {
        if alpha.len() != self.block_of.len() {
            return Err(Error::DimensionMismatch {
                expected: self.block_of.len(),
                got: alpha.len(),
            });
        }
        let values = self
            .blocks
            .iter()
            .enumerate()
            .map(|(i, b)| {
                let x = alpha.value(b.first().expect("blocks are nonempty"));
                if b.iter().all(|v| alpha.value(v) == x) {
                    Ok(x)
                } else {
                    Err(Error::NotConstantOnBlock(i + 1))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Cover::from_parts(values, alpha.level()))
    }

    pub fn lift_cover(&self, alpha: &Cover) -> Result<Cover> {
        if alpha.len() != self.blocks.len() {
            return Err(Error::DimensionMismatch {
                expected: self.blocks.len(),
                got: alpha.len(),
            });
        }
        let values = self.block_of.iter().map(|&b| alpha.value(b)).collect();
        Ok(Cover::from_parts(values, alpha.level()))
    }
}

/// The perfect matching `{u_i, v_i}` of right edges of a projected graph with
/// `{v_i}` independent, listed so that `v_i ≺ v_j` implies `i <= j`.
#[derive(Debug, Clone, Serialize)]
pub struct PmLabeling {
    /// `(u_i, v_i)` as 1-based labels.
    pub pairs: Vec<(usize, usize)>,
    /// Cover relations of `≺` as label pairs `(v_i, v_j)`.
    #[serde(skip)]
    pub order: Poset,
    pub order_hasse: Vec<String>,
}

pub fn unique_pm_labeling(g: &Graph) -> Result<PmLabeling> {
    if !satisfies_wsc(g) || !project(g)?.is_fixed_point {
        return Err(Error::NotWscFixedPoint);
    }
    let right = right_edges(g);
    let matching =
        Matching::new(right.iter().copied()).ok_or_else(|| Error::StructureViolation("right edges overlap".into()))?;
    if matching.vertices() != g.vertices() {
        return Err(Error::StructureViolation(
            "right edges do not cover every vertex".into(),
        ));
    }
    // pairs ordered by smaller label, oriented u < v
    let mut pairs: Vec<(usize, usize)> = matching.edges().to_vec();
    for j in 0..pairs.len() {
        let vj = pairs[j].1;
        if pairs[..j].iter().any(|&(_, vi)| g.has_edge(vi, vj)) {
            pairs[j] = (pairs[j].1, pairs[j].0);
        }
    }
    let vs: Vec<usize> = pairs.iter().map(|p| p.1).collect();
    if let Some((a, b)) = vs
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| vs[i + 1..].iter().map(move |&b| (a, b)))
        .find(|&(a, b)| g.has_edge(a, b))
    {
        return Err(Error::OrderViolation(format!("{} and {} stay adjacent", a + 1, b + 1)));
    }
    let r = pairs.len();
    let prec = |i: usize, j: usize| i == j || g.has_edge(pairs[i].0, pairs[j].1);
    let names: Vec<String> = vs.iter().map(|&v| g.label(v)).collect();
    let order = Poset::from_relation(names, prec)?;
    // stable topological order by number of predecessors
    let mut idx: Vec<usize> = (0..r).collect();
    idx.sort_by_key(|&j| ((0..r).filter(|&i| order.leq(i, j)).count(), pairs[j]));
    let pairs: Vec<(usize, usize)> = idx.iter().map(|&i| pairs[i]).collect();
    let order = order.induced(&idx);
    Ok(PmLabeling {
        pairs: pairs.iter().map(|&(u, v)| (u + 1, v + 1)).collect(),
        order_hasse: order.hasse_lines(),
        order,
    })
}

/// The computable conditions of the Cohen-Macaulay characterisation of
/// graphs with the weak square condition.
#[derive(Debug, Clone, Serialize)]
pub struct CmReport {
    pub unique_perfect_matching: Verdict,
    pub perfect_matchings: Vec<Matching>,
    pub unique_right_perfect_matching: Verdict,
    pub right_perfect_matchings: Vec<Matching>,
    pub projection_fixed_point: Verdict,
    pub blocks: Vec<VertexSet>,
    pub independence_complex_shellable: Verdict,
    pub connected_in_codim_one: Verdict,
    /// Not computed; the common value of the computed conditions, each of
    /// which is equivalent to the Cohen-Macaulay property.
    pub cohen_macaulay_implied: Verdict,
    pub consistent: bool,
}

impl CmReport {
    pub fn computed(&self) -> [&Verdict; 5] {
        [
            &self.unique_perfect_matching,
            &self.unique_right_perfect_matching,
            &self.projection_fixed_point,
            &self.independence_complex_shellable,
            &self.connected_in_codim_one,
        ]
    }

    /// Fails with the disagreeing values when the computed conditions differ.
    pub fn check(&self) -> Result<()> {
        if self.consistent {
            Ok(())
        } else {
            Err(Error::EquivalenceViolation(format!(
                "conditions disagree: {:?}",
                self.computed().map(|v| v.as_bool())
            )))
        }
    }
}

fn verdict_of(r: Result<bool>) -> Result<Verdict> {
    match r {
        Ok(b) => Ok(Verdict::from(b)),
        Err(e) if e.is_budget() => Ok(Verdict::Skipped(e.to_string())),
        Err(e) => Err(e),
    }
}

pub fn cm_equivalence_report(g: &Graph, budget: &Budget) -> Result<CmReport> {
    if !satisfies_wsc(g) {
        return Err(Error::NotWsc);
    }
    let right: Vec<(usize, usize)> = right_edges(g);
    let is_right = |u: usize, v: usize| right.contains(&(u.min(v), u.max(v)));
    let (pms, shell) = crate::par::join(
        || enumerate_perfect_matchings(g, budget),
        || -> Result<(bool, bool)> {
            let delta = independence_complex(g, budget)?;
            if !delta.is_pure() {
                return Ok((false, false));
            }
            let codim = delta.is_connected_in_codim_one();
            Ok((delta.is_shellable(budget)?, codim))
        },
    );
    let (perfect_matchings, c1) = match pms {
        Ok(list) => {
            let v = Verdict::from(list.len() == 1);
            (list, v)
        }
        Err(e) if e.is_budget() => (Vec::new(), Verdict::Skipped(e.to_string())),
        Err(e) => return Err(e),
    };
    let right_pms = perfect_matchings_of(g, g.vertices(), is_right);
    let c2 = Verdict::from(right_pms.len() == 1);
    let pr = project(g)?;
    let c3 = Verdict::from(pr.is_fixed_point);
    let (c4, c6) = match shell {
        Ok((s, c)) => (Verdict::from(s), Verdict::from(c)),
        Err(e) if e.is_budget() => {
            // connectivity needs only the facets, which may still fit
            let c6 = verdict_of(independence_complex(g, budget).map(|d| d.is_connected_in_codim_one()))?;
            (Verdict::Skipped(e.to_string()), c6)
        }
        Err(e) => return Err(e),
    };
    let mut report = CmReport {
        unique_perfect_matching: c1,
        perfect_matchings,
        unique_right_perfect_matching: c2,
        right_perfect_matchings: right_pms,
        projection_fixed_point: c3,
        blocks: pr.blocks,
        independence_complex_shellable: c4,
        connected_in_codim_one: c6,
        cohen_macaulay_implied: Verdict::Skipped(String::new()),
        consistent: true,
    };
    let known: Vec<bool> = report.computed().iter().filter_map(|v| v.as_bool()).collect();
    report.consistent = known.windows(2).all(|w| w[0] == w[1]);
    report.cohen_macaulay_implied = match (report.consistent, known.first()) {
        (true, Some(&b)) => Verdict::from(b),
        (false, _) => Verdict::Skipped("computed conditions disagree".into()),
        (true, None) => Verdict::Skipped("no condition computed".into()),
    };
    Ok(report)
}

#[derive(Debug, Clone, Serialize)]
pub struct RegularityReport {
    pub induced_matching: usize,
    pub induced_matching_of_pi: usize,
    pub gdim_minus_1: usize,
    /// Present for bipartite graphs with the weak square condition, where the
    /// regularity equals the induced matching number.
    pub exact_regularity: Option<usize>,
}

/// Lower bound by induced matchings and upper bound by `gdim − 1`.
pub fn regularity_report(g: &Graph, budget: &Budget) -> Result<RegularityReport> {
    let induced_matching = induced_matching_number(g, budget)?;
    let pr = project(g)?;
    let induced_matching_of_pi = induced_matching_number(&pr.pi_graph, budget)?;
    let gdim_minus_1 = graphical_dimension(g, budget)?.gdim - 1;
    let exact_regularity = (g.is_bipartite() && satisfies_wsc(g)).then_some(induced_matching);
    Ok(RegularityReport {
        induced_matching,
        induced_matching_of_pi,
        gdim_minus_1,
        exact_regularity,
    })
}
