//! Full analysis of one graph with a table of cross-checks between
//! independently computed quantities.

use std::fmt::Write as _;

use serde::{Serialize, Serializer};

use crate::asl::{domain_report_for, verify_asl1, verify_sum_identity, DomainReport};
use crate::budget::Budget;
use crate::cover_poset::{build_poset, order_complex_report_for, OrderComplexReport};
use crate::covers::{
    enumerate_basic_covers, hilbert_function, krull_dimension_estimate, low_half, reconstruct_from_low_half,
    HilbertData,
};
use crate::error::{Error, Result};
use crate::gdim::{gdim_bounds, graphical_dimension, GdimBounds, GdimResult};
use crate::graph::{induced_matching_number, matching_number, Graph};
use crate::poset::PosetSummary;
use crate::projection::{cm_equivalence_report, project, right_edges, satisfies_wsc, CmReport, ProjectionReport};

/// A condition that was decided, or skipped with a reason.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    True,
    False,
    Skipped(String),
}

impl Verdict {
    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Verdict::True => Some(true),
            Verdict::False => Some(false),
            Verdict::Skipped(_) => None,
        }
    }
}

impl From<bool> for Verdict {
    fn from(b: bool) -> Self {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::True => f.write_str("true"),
            Verdict::False => f.write_str("false"),
            Verdict::Skipped(r) => write!(f, "skipped ({r})"),
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Verdict::True => s.serialize_bool(true),
            Verdict::False => s.serialize_bool(false),
            Verdict::Skipped(r) => {
                use serde::ser::SerializeMap;
                let mut m = s.serialize_map(Some(1))?;
                m.serialize_entry("skipped", r)?;
                m.end()
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckVerdict {
    Ok,
    Fail,
    Skipped(String),
}

/// One row of the cross-check table.
#[derive(Debug, Clone, Serialize)]
pub struct CrossCheck {
    pub claim: String,
    pub lhs: String,
    pub rhs: String,
    /// `=` or `<=`, how `lhs` relates to `rhs` when the row holds.
    pub relation: &'static str,
    pub verdict: CheckVerdict,
}

impl CrossCheck {
    fn compare(claim: &str, lhs: impl ToString, rhs: impl ToString, ok: bool) -> Self {
        CrossCheck {
            claim: claim.to_string(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            relation: "=",
            verdict: if ok { CheckVerdict::Ok } else { CheckVerdict::Fail },
        }
    }

    fn at_most(claim: &str, lhs: usize, rhs: usize) -> Self {
        CrossCheck {
            relation: "<=",
            ..Self::compare(claim, lhs, rhs, lhs <= rhs)
        }
    }

    fn equal<T: ToString + PartialEq>(claim: &str, lhs: T, rhs: T) -> Self {
        let ok = lhs == rhs;
        Self::compare(claim, lhs, rhs, ok)
    }

    fn skipped(claim: &str, reason: impl Into<String>) -> Self {
        CrossCheck {
            claim: claim.to_string(),
            lhs: "-".into(),
            rhs: "-".into(),
            relation: "=",
            verdict: CheckVerdict::Skipped(reason.into()),
        }
    }

    /// Budget errors skip the row; any other error fails it.
    fn from_error(claim: &str, e: &Error) -> Self {
        if e.is_budget() {
            Self::skipped(claim, e.to_string())
        } else {
            CrossCheck {
                claim: claim.to_string(),
                lhs: "-".into(),
                rhs: e.to_string(),
                relation: "=",
                verdict: CheckVerdict::Fail,
            }
        }
    }

    pub fn to_line(&self) -> String {
        match &self.verdict {
            CheckVerdict::Ok => format!("{}: {} {} {} OK", self.claim, self.lhs, self.relation, self.rhs),
            CheckVerdict::Fail => format!("{}: {} vs {} FAIL", self.claim, self.lhs, self.rhs),
            CheckVerdict::Skipped(r) => format!("{}: skipped ({r})", self.claim),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct AnalysisOptions {
    /// Level of the cover listing.
    pub k: u32,
    pub max_h: u32,
    pub window: usize,
    pub budget: Budget,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            k: 1,
            max_h: 8,
            window: 3,
            budget: Budget::default(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphSummary {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
    pub bipartite: bool,
    pub connected: bool,
    pub tree: bool,
    pub matching_number: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct CoverSection {
    pub level: u32,
    pub covers: Vec<String>,
    pub hilbert: Option<HilbertData>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PosetSection {
    pub summary: PosetSummary,
    pub order_complex: Vec<String>,
    pub cohen_macaulay: Option<OrderComplexReport>,
    pub domain: Option<DomainReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProjectionSection {
    pub right_edges: Vec<[usize; 2]>,
    pub wsc: bool,
    pub projection: ProjectionReport,
    pub cm: Option<CmReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub graph: GraphSummary,
    pub covers: Option<CoverSection>,
    pub poset: Option<PosetSection>,
    pub projection: ProjectionSection,
    pub gdim: Option<GdimResult>,
    pub bounds: Option<GdimBounds>,
    pub checks: Vec<CrossCheck>,
}

impl AnalysisReport {
    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.verdict == CheckVerdict::Fail)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let g = &self.graph;
        let _ = writeln!(s, "graph: {} vertices, {} edges", g.vertices, g.edges.len());
        let _ = writeln!(
            s,
            "bipartite {}, connected {}, tree {}, matching number {}",
            g.bipartite, g.connected, g.tree, g.matching_number
        );
        if let Some(c) = &self.covers {
            let _ = writeln!(s, "basic {}-covers: {}", c.level, c.covers.len());
            for line in &c.covers {
                let _ = writeln!(s, "  {line}");
            }
            if let Some(h) = &c.hilbert {
                let _ = writeln!(s, "basic 2h-cover counts: {:?}", h.counts);
                match h.dimension() {
                    Some(d) => {
                        let _ = writeln!(s, "krull dimension estimate: {d}");
                    }
                    None => {
                        let _ = writeln!(s, "krull dimension estimate: unstable");
                    }
                }
            }
        }
        if let Some(r) = &self.gdim {
            let [a, b] = r.certificate.to_lines();
            let _ = writeln!(s, "gdim {}, {a}, {b}", r.gdim);
        }
        if let Some(b) = &self.bounds {
            let _ = writeln!(s, "gdim bounds: {} <= gdim <= {}", b.lower, b.upper);
        }
        if let Some(p) = &self.poset {
            let _ = writeln!(
                s,
                "cover poset: {} elements, rank {}, pure {}, lattice {}",
                p.summary.elements.len(),
                p.summary.rank,
                p.summary.pure,
                p.summary.lattice
            );
            for line in &p.summary.hasse {
                let _ = writeln!(s, "  {line}");
            }
            if let Some(l) = &p.cohen_macaulay {
                let _ = writeln!(
                    s,
                    "shellable order complex: {}; verdict {:?} ({})",
                    l.shellable, l.verdict, l.basis
                );
            }
            if let Some(d) = &p.domain {
                for line in &d.relations {
                    let _ = writeln!(s, "  {line}");
                }
                if d.lattice_diverges {
                    let _ = writeln!(s, "  note: latticehood differs from the weak square condition");
                }
            }
        }
        let pr = &self.projection;
        let _ = writeln!(s, "right edges: {:?}", pr.right_edges);
        let _ = writeln!(s, "weak square condition: {}", pr.wsc);
        let _ = writeln!(
            s,
            "projection: {} vertices, fixed point {}",
            pr.projection.blocks.len(),
            pr.projection.is_fixed_point
        );
        if let Some(cm) = &pr.cm {
            let _ = writeln!(
                s,
                "cohen-macaulay conditions: unique pm {}, unique right pm {}, fixed point {}, shellable {}, codim-1 connected {}, implied {}",
                cm.unique_perfect_matching,
                cm.unique_right_perfect_matching,
                cm.projection_fixed_point,
                cm.independence_complex_shellable,
                cm.connected_in_codim_one,
                cm.cohen_macaulay_implied
            );
        }
        let _ = writeln!(s, "cross-checks:");
        for c in &self.checks {
            let _ = writeln!(s, "  {}", c.to_line());
        }
        s
    }
}

fn labels(edges: &[(usize, usize)]) -> Vec<[usize; 2]> {
    edges.iter().map(|&(u, v)| [u + 1, v + 1]).collect()
}

/// Runs every module on `g`. Budget exhaustion skips the affected rows.
pub fn analyze(g: &Graph, opts: &AnalysisOptions) -> Result<AnalysisReport> {
    let budget = &opts.budget;
    let mut checks = Vec::new();
    let graph = GraphSummary {
        vertices: g.vertex_count(),
        edges: labels(g.edges()),
        bipartite: g.is_bipartite(),
        connected: g.is_connected(),
        tree: g.is_tree(),
        matching_number: matching_number(g),
    };

    let listing = enumerate_basic_covers(g, opts.k, budget);
    let hilbert = if graph.connected {
        Some(krull_dimension_estimate(g, opts.max_h, opts.window, budget))
    } else {
        None
    };
    let gdim = graphical_dimension(g, budget);
    let bounds = gdim_bounds(g, budget);

    const DIM: &str = "krull dimension = gdim";
    match (&hilbert, &gdim) {
        (None, _) => checks.push(CrossCheck::skipped(DIM, "graph not connected")),
        (Some(Err(e)), _) | (_, Err(e)) => checks.push(CrossCheck::from_error(DIM, e)),
        (Some(Ok(h)), Ok(r)) => match h.dimension() {
            Some(d) => checks.push(CrossCheck::equal(DIM, d, r.gdim)),
            None => checks.push(CrossCheck::compare(DIM, "unstable fit", r.gdim, false)),
        },
    }
    const LOWER: &str = "paired domination / 2 + 1 <= gdim";
    const UPPER: &str = "gdim <= matching number + 1";
    match (&bounds, &gdim) {
        (Err(e), _) | (_, Err(e)) => {
            checks.push(CrossCheck::from_error(LOWER, e));
            checks.push(CrossCheck::from_error(UPPER, e));
        }
        (Ok(b), Ok(r)) => {
            checks.push(CrossCheck::at_most(LOWER, b.lower, r.gdim));
            checks.push(CrossCheck::at_most(UPPER, r.gdim, b.upper));
        }
    }
    if graph.tree {
        const TREE: &str = "tree gdim = matching number + 1";
        match &gdim {
            Ok(r) => checks.push(CrossCheck::equal(TREE, r.gdim, graph.matching_number + 1)),
            Err(e) => checks.push(CrossCheck::from_error(TREE, e)),
        }
    }

    const RECON: &str = "low-half reconstruction of basic k-covers, k <= 4";
    match reconstruction_check(g, budget) {
        Ok((ok, total)) => checks.push(CrossCheck::compare(RECON, ok, total, ok == total)),
        Err(e) => checks.push(CrossCheck::from_error(RECON, &e)),
    }

    let rights = right_edges(g);
    let wsc = satisfies_wsc(g);
    let projection = project(g)?;
    const ISOM: &str = "projection preserves basic k-cover counts, k <= 4";
    match (1..=4)
        .map(|k| {
            Ok((
                hilbert_function(g, k, budget)?,
                hilbert_function(&projection.pi_graph, k, budget)?,
            ))
        })
        .collect::<Result<Vec<_>>>()
    {
        Ok(pairs) => {
            let (l, r): (Vec<u64>, Vec<u64>) = pairs.into_iter().unzip();
            checks.push(CrossCheck::equal(ISOM, format!("{l:?}"), format!("{r:?}")));
        }
        Err(e) => checks.push(CrossCheck::from_error(ISOM, &e)),
    }
    const IND: &str = "projection preserves induced matching number";
    match (
        induced_matching_number(g, budget),
        induced_matching_number(&projection.pi_graph, budget),
    ) {
        (Ok(a), Ok(b)) => checks.push(CrossCheck::equal(IND, a, b)),
        (Err(e), _) | (_, Err(e)) => checks.push(CrossCheck::from_error(IND, &e)),
    }
    let cm = if wsc {
        const CM: &str = "cohen-macaulay conditions agree";
        match cm_equivalence_report(g, budget) {
            Ok(r) => {
                let known = r.computed().iter().filter(|v| v.as_bool().is_some()).count();
                checks.push(CrossCheck::compare(
                    CM,
                    format!("{known} computed"),
                    "all equal",
                    r.consistent,
                ));
                Some(r)
            }
            Err(e) => {
                checks.push(CrossCheck::from_error(CM, &e));
                None
            }
        }
    } else {
        None
    };

    let poset = if graph.bipartite {
        poset_section(g, opts, gdim.as_ref().ok(), wsc, &mut checks)
    } else {
        None
    };

    Ok(AnalysisReport {
        graph,
        covers: listing.ok().map(|covers| CoverSection {
            level: opts.k,
            covers: covers.iter().map(|c| c.to_line()).collect(),
            hilbert: hilbert.and_then(|h| h.ok()),
        }),
        poset,
        projection: ProjectionSection {
            right_edges: labels(&rights),
            wsc,
            projection,
            cm,
        },
        gdim: gdim.ok(),
        bounds: bounds.ok(),
        checks,
    })
}

fn reconstruction_check(g: &Graph, budget: &Budget) -> Result<(usize, usize)> {
    let mut ok = 0;
    let mut total = 0;
    for k in 1..=4 {
        for alpha in enumerate_basic_covers(g, k, budget)? {
            total += 1;
            if reconstruct_from_low_half(g, k, &low_half(&alpha)).is_ok_and(|b| b == alpha) {
                ok += 1;
            }
        }
    }
    Ok((ok, total))
}

fn poset_section(
    g: &Graph,
    opts: &AnalysisOptions,
    gdim: Option<&GdimResult>,
    wsc: bool,
    checks: &mut Vec<CrossCheck>,
) -> Option<PosetSection> {
    let budget = &opts.budget;
    let cp = match build_poset(g, budget) {
        Ok(cp) => cp,
        Err(e) => {
            checks.push(CrossCheck::from_error("cover poset", &e));
            return None;
        }
    };
    let p = cp.poset();
    const RANK: &str = "cover poset rank + 1 = gdim";
    match gdim {
        Some(r) => checks.push(CrossCheck::equal(RANK, p.rank() + 1, r.gdim)),
        None => checks.push(CrossCheck::skipped(RANK, "gdim not computed")),
    }
    const ASL1: &str = "d-multichains = basic d-covers, d <= 4";
    match (1..=4)
        .map(|d| verify_asl1(&cp, d, budget))
        .collect::<Result<Vec<bool>>>()
    {
        Ok(v) => checks.push(CrossCheck::compare(
            ASL1,
            format!("{v:?}"),
            "all true",
            v.iter().all(|&b| b),
        )),
        Err(e) => checks.push(CrossCheck::from_error(ASL1, &e)),
    }
    const SUM: &str = "a + b = meet + join on basic 1-covers";
    let pairs = cp.len() * cp.len();
    let good = cp
        .elements()
        .iter()
        .flat_map(|a| cp.elements().iter().map(move |b| (a, b)))
        .filter(|(a, b)| verify_sum_identity(&cp, a, b).unwrap_or(false))
        .count();
    checks.push(CrossCheck::equal(SUM, good, pairs));

    let domain = match domain_report_for(&cp) {
        Ok(d) => {
            checks.push(CrossCheck::equal(
                "weak square condition <=> no zero straightening",
                wsc,
                d.all_straightenings_nonzero,
            ));
            Some(d)
        }
        Err(e) => {
            checks.push(CrossCheck::from_error(
                "weak square condition <=> no zero straightening",
                &e,
            ));
            None
        }
    };
    const PURE_SHELLABLE: &str = "rank = |A| implies pure <=> shellable";
    let order_report = match order_complex_report_for(&cp, budget) {
        Ok(l) => {
            if l.hypothesis_holds {
                checks.push(CrossCheck::compare(PURE_SHELLABLE, l.pure, &l.shellable, true));
            } else {
                checks.push(CrossCheck::skipped(
                    PURE_SHELLABLE,
                    format!("rank {} differs from |A| = {}", l.rank, l.side_size),
                ));
            }
            Some(l)
        }
        Err(e) => {
            checks.push(CrossCheck::from_error(PURE_SHELLABLE, &e));
            None
        }
    };
    let order_complex = cp.order_complex().map(|c| c.facet_lines()).unwrap_or_default();
    Some(PosetSection {
        summary: PosetSummary::from(p),
        order_complex,
        cohen_macaulay: order_report,
        domain,
    })
}
