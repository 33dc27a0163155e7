//! Straightening relations on the cover poset and the multichain basis of
//! the algebra of basic covers.

use serde::Serialize;

use crate::budget::Budget;
use crate::cover_poset::{build_poset, CoverPoset};
use crate::covers::{hilbert_function, is_basic_values, Cover};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::projection::satisfies_wsc;

/// `αβ = (α⊓β)(α⊔β)` for an incomparable pair, or `αβ = 0` when either side
/// is not basic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StraighteningRelation {
    pub left: (usize, usize),
    /// `(meet, join)` as poset indices; `None` is the zero product.
    pub right: Option<(usize, usize)>,
}

impl StraighteningRelation {
    pub fn is_zero(&self) -> bool {
        self.right.is_none()
    }

    pub fn to_line(&self, cp: &CoverPoset) -> String {
        let (a, b) = self.left;
        match self.right {
            Some((m, j)) => format!("({})({}) = ({})({})", cp.name(a), cp.name(b), cp.name(m), cp.name(j)),
            None => format!("({})({}) = 0", cp.name(a), cp.name(b)),
        }
    }
}

/// One relation per unordered incomparable pair, in index order.
pub fn straightening_relations(cp: &CoverPoset) -> Result<Vec<StraighteningRelation>> {
    let p = cp.poset();
    let mut out = Vec::new();
    for a in 0..cp.len() {
        for b in a + 1..cp.len() {
            if p.comparable(a, b) {
                continue;
            }
            let (x, y) = (cp.element(a), cp.element(b));
            let right = match (cp.meet_candidate(x, y), cp.join_candidate(x, y)) {
                (Some(m), Some(j)) => {
                    let mi = cp.index_of(&m).expect("basic 1-covers are poset elements");
                    let ji = cp.index_of(&j).expect("basic 1-covers are poset elements");
                    if !(p.leq(mi, ji) && p.lt(mi, a) && p.lt(mi, b)) {
                        return Err(Error::OrderViolation(format!(
                            "({})({}) straightens to ({})({}) out of order",
                            cp.name(a),
                            cp.name(b),
                            cp.name(mi),
                            cp.name(ji)
                        )));
                    }
                    Some((mi, ji))
                }
                _ => None,
            };
            out.push(StraighteningRelation { left: (a, b), right });
        }
    }
    Ok(out)
}

/// `α + β = (α⊓β) + (α⊔β)` on the raw value sequences.
pub fn verify_sum_identity(cp: &CoverPoset, a: &Cover, b: &Cover) -> Result<bool> {
    let n = cp.graph().vertex_count();
    for c in [a, b] {
        if c.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: c.len(),
            });
        }
    }
    let meet = cp.meet_values(a, b);
    let join = cp.join_values(a, b);
    Ok((0..n).all(|v| a.value(v) + b.value(v) == meet[v] + join[v]))
}

/// Sum of a weakly increasing chain of `d` basic 1-covers: a basic d-cover.
pub fn multichain_to_cover(cp: &CoverPoset, chain: &[usize]) -> Result<Cover> {
    if chain.is_empty() || !cp.poset().is_multichain(chain) {
        return Err(Error::NotAMultichain);
    }
    let n = cp.graph().vertex_count();
    let values: Vec<u32> = (0..n)
        .map(|v| chain.iter().map(|&i| cp.element(i).value(v)).sum())
        .collect();
    let d = chain.len() as u32;
    if !is_basic_values(cp.graph(), &values, d) {
        return Err(Error::SumNotBasic);
    }
    Ok(Cover::from_parts(values, d))
}

/// Largest multichain count for which the sums are listed explicitly to check
/// injectivity, beyond the count comparison.
const EXPLICIT_LIMIT: u128 = 200_000;

/// Whether d-multichains of the poset are in bijection with basic d-covers.
pub fn verify_asl1(cp: &CoverPoset, d: usize, budget: &Budget) -> Result<bool> {
    let chains = cp.poset().count_multichains(d);
    let covers = hilbert_function(cp.graph(), d as u32, budget)? as u128;
    if chains != covers {
        return Ok(false);
    }
    if d == 0 || chains > EXPLICIT_LIMIT {
        return Ok(true);
    }
    let mut sums = cp
        .poset()
        .multichains(d)
        .iter()
        .map(|c| multichain_to_cover(cp, c))
        .collect::<Result<Vec<_>>>()?;
    sums.sort();
    sums.dedup();
    Ok(sums.len() as u128 == chains)
}

#[derive(Debug, Clone, Serialize)]
pub struct DomainReport {
    pub wsc: bool,
    pub lattice: bool,
    pub all_straightenings_nonzero: bool,
    /// Latticehood disagrees with the weak square condition.
    pub lattice_diverges: bool,
    pub relations: Vec<String>,
    pub verdict: bool,
}

/// Compares the weak square condition with the absence of zero
/// straightenings; they must agree, while latticehood is only reported.
pub fn is_domain_report(g: &Graph, budget: &Budget) -> Result<DomainReport> {
    let cp = build_poset(g, budget)?;
    domain_report_for(&cp)
}

pub fn domain_report_for(cp: &CoverPoset) -> Result<DomainReport> {
    let wsc = satisfies_wsc(cp.graph());
    let lattice = cp.poset().is_lattice();
    let rels = straightening_relations(cp)?;
    let nonzero = rels.iter().all(|r| !r.is_zero());
    if wsc != nonzero {
        return Err(Error::EquivalenceViolation(format!(
            "weak square condition is {wsc} but all straightenings nonzero is {nonzero}"
        )));
    }
    Ok(DomainReport {
        wsc,
        lattice,
        all_straightenings_nonzero: nonzero,
        lattice_diverges: lattice != wsc,
        relations: rels.iter().map(|r| r.to_line(cp)).collect(),
        verdict: wsc,
    })
}
