//! k-covers, basic k-covers, and the Hilbert function that counts them.
//!
//! A k-cover assigns a natural number to every vertex so that each edge sums
//! to at least `k`. It is basic when no pointwise smaller function is still a
//! k-cover. For a graph without isolated vertices this is the same as the
//! fixed-point equation `α(v) = max(0, k − min_{w ~ v} α(w))` at every vertex,
//! which is what the enumerator below prunes against.

use std::sync::atomic::{AtomicU64, Ordering};

use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par;

/// A k-cover of a graph, i.e. a generator `x^α t^k` of the k-th symbolic power
/// of the cover ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Cover {
    values: Vec<u32>,
    level: u32,
}

impl Cover {
    /// Validates that `values` is a nonzero `level`-cover of `g`.
    pub fn new(g: &Graph, values: Vec<u32>, level: u32) -> Result<Cover> {
        if !is_k_cover(g, &values, level)? {
            return Err(Error::NotACover(level));
        }
        Ok(Cover { values, level })
    }

    pub(crate) fn from_parts(values: Vec<u32>, level: u32) -> Cover {
        Cover { values, level }
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn value(&self, v: usize) -> u32 {
        self.values[v]
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `k=<level> v1 v2 ...`
    pub fn to_line(&self) -> String {
        let mut s = format!("k={}", self.level);
        for v in &self.values {
            s.push(' ');
            s.push_str(&v.to_string());
        }
        s
    }
}

fn check_len(g: &Graph, values: &[u32]) -> Result<()> {
    if values.len() != g.vertex_count() {
        return Err(Error::DimensionMismatch {
            expected: g.vertex_count(),
            got: values.len(),
        });
    }
    Ok(())
}

/// Every edge sums to at least `k` and the function is not identically zero.
pub fn is_k_cover(g: &Graph, values: &[u32], k: u32) -> Result<bool> {
    check_len(g, values)?;
    Ok(values.iter().any(|&x| x > 0)
        && g.edges()
            .iter()
            .all(|&(u, v)| values[u] as u64 + values[v] as u64 >= k as u64))
}

/// Tightness test on a k-cover: every positive vertex lies on an edge whose
/// values sum to exactly `k`.
pub(crate) fn has_tight_edges(g: &Graph, values: &[u32], k: u32) -> bool {
    (0..g.vertex_count()).all(|v| {
        values[v] == 0
            || g.neighbors(v)
                .iter()
                .any(|w| values[v] as u64 + values[w] as u64 == k as u64)
    })
}

pub(crate) fn is_basic_values(g: &Graph, values: &[u32], k: u32) -> bool {
    matches!(is_k_cover(g, values, k), Ok(true)) && has_tight_edges(g, values, k)
}

/// Whether the cover is basic (not a 0-cover plus a k-cover).
pub fn is_basic(g: &Graph, alpha: &Cover) -> Result<bool> {
    if !is_k_cover(g, &alpha.values, alpha.level)? {
        return Err(Error::NotACover(alpha.level));
    }
    Ok(has_tight_edges(g, &alpha.values, alpha.level))
}

/// Whether `α = β + γ` for an h-cover `β` and a (k−h)-cover `γ`, `1 <= h < k`.
pub fn is_decomposable(g: &Graph, alpha: &Cover, budget: &Budget) -> Result<bool> {
    let k = alpha.level;
    if !is_k_cover(g, &alpha.values, k)? {
        return Err(Error::NotACover(k));
    }
    let mut nodes = 0u64;
    for h in 1..k {
        let mut beta = vec![u32::MAX; g.vertex_count()];
        if split_search(g, alpha, h, 0, &mut beta, &mut nodes, budget)? {
            return Ok(true);
        }
    }
    Ok(false)
}

fn split_search(
    g: &Graph,
    alpha: &Cover,
    h: u32,
    v: usize,
    beta: &mut [u32],
    nodes: &mut u64,
    budget: &Budget,
) -> Result<bool> {
    if v == g.vertex_count() {
        return Ok(true);
    }
    *nodes += 1;
    if *nodes > budget.max_nodes {
        return Err(Error::budget(
            "decomposition search",
            format!("more than {} nodes", budget.max_nodes),
        ));
    }
    let k = alpha.level;
    for b in 0..=alpha.values[v] {
        let ok = g
            .neighbors(v)
            .iter()
            .filter(|&w| w < v)
            .all(|w| b + beta[w] >= h && (alpha.values[v] - b) + (alpha.values[w] - beta[w]) >= k - h);
        if ok {
            beta[v] = b;
            if split_search(g, alpha, h, v + 1, beta, nodes, budget)? {
                return Ok(true);
            }
        }
    }
    beta[v] = u32::MAX;
    Ok(false)
}

const UNSET: u32 = u32::MAX;

/// Depth-first enumerator of basic k-covers.
struct Enumerator<'g> {
    g: &'g Graph,
    k: u32,
    order: Vec<usize>,
    /// `forced[i]`: every neighbor of `order[i]` is assigned before step `i`.
    forced: Vec<bool>,
    /// Vertices whose closed neighborhood becomes fully assigned at step `i`.
    complete_at: Vec<Vec<usize>>,
}

impl<'g> Enumerator<'g> {
    fn new(g: &'g Graph, k: u32) -> Self {
        let n = g.vertex_count();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let forced = order
            .iter()
            .enumerate()
            .map(|(i, &v)| g.neighbors(v).iter().all(|w| pos[w] < i))
            .collect();
        let mut complete_at = vec![Vec::new(); n];
        for v in 0..n {
            let last = g.neighbors(v).iter().map(|w| pos[w]).fold(pos[v], usize::max);
            complete_at[last].push(v);
        }
        Enumerator {
            g,
            k,
            order,
            forced,
            complete_at,
        }
    }

    /// Lower bound `k − min(assigned neighbors)` (or 0), and whether any
    /// neighbor is still unassigned.
    fn lower_bound(&self, v: usize, vals: &[u32]) -> u32 {
        self.g
            .neighbors(v)
            .iter()
            .filter(|&w| vals[w] != UNSET)
            .map(|w| self.k.saturating_sub(vals[w]))
            .max()
            .unwrap_or(0)
    }

    fn fixed_point_holds(&self, v: usize, vals: &[u32]) -> bool {
        let min = self
            .g
            .neighbors(v)
            .iter()
            .map(|w| vals[w])
            .min()
            .expect("no isolated vertices");
        vals[v] == self.k.saturating_sub(min)
    }

    /// A positive vertex that is not yet tight must still be able to become
    /// tight through some unassigned neighbor.
    fn tight_reachable(&self, w: usize, vals: &[u32]) -> bool {
        let a = vals[w];
        if a == 0 {
            return true;
        }
        let need = self.k - a;
        let mut open = false;
        for u in self.g.neighbors(w).iter() {
            if vals[u] == UNSET {
                if self.lower_bound(u, vals) <= need {
                    open = true;
                }
            } else if vals[u] == need {
                return true;
            }
        }
        open
    }

    fn step_ok(&self, i: usize, vals: &[u32]) -> bool {
        let v = self.order[i];
        if !self.complete_at[i].iter().all(|&w| self.fixed_point_holds(w, vals)) {
            return false;
        }
        std::iter::once(v)
            .chain(self.g.neighbors(v).iter().filter(|&w| vals[w] != UNSET))
            .all(|w| self.tight_reachable(w, vals))
    }

    fn candidates(&self, i: usize, vals: &[u32]) -> std::ops::RangeInclusive<u32> {
        let v = self.order[i];
        let lb = self.lower_bound(v, vals);
        if self.forced[i] {
            lb..=lb
        } else {
            lb..=self.k
        }
    }

    /// Partial assignments of the first `depth` vertices that pass pruning.
    fn prefixes(&self, depth: usize) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut vals = vec![UNSET; self.g.vertex_count()];
        self.collect_prefixes(0, depth, &mut vals, &mut out);
        out
    }

    fn collect_prefixes(&self, i: usize, depth: usize, vals: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == depth {
            out.push(vals.clone());
            return;
        }
        let v = self.order[i];
        for x in self.candidates(i, vals) {
            vals[v] = x;
            if self.step_ok(i, vals) {
                self.collect_prefixes(i + 1, depth, vals, out);
            }
        }
        vals[v] = UNSET;
    }

    fn run(
        &self,
        i: usize,
        vals: &mut [u32],
        nodes: &mut u64,
        shared: &AtomicU64,
        limit: u64,
        visit: &mut dyn FnMut(&[u32]),
    ) -> Result<()> {
        if i == self.order.len() {
            if is_basic_values(self.g, vals, self.k) {
                visit(vals);
            }
            return Ok(());
        }
        *nodes += 1;
        if *nodes & 0xFFF == 0 && shared.fetch_add(0x1000, Ordering::Relaxed) + 0x1000 > limit {
            return Err(Error::budget(
                "basic cover enumeration",
                format!("more than {limit} search nodes"),
            ));
        }
        let v = self.order[i];
        for x in self.candidates(i, vals) {
            vals[v] = x;
            if self.step_ok(i, vals) {
                self.run(i + 1, vals, nodes, shared, limit, visit)?;
            }
        }
        vals[v] = UNSET;
        Ok(())
    }

    /// Runs the search split into independent subtrees; `seed` turns each
    /// subtree into a per-task accumulator which `visit` feeds.
    fn search<A, S, V>(&self, budget: &Budget, seed: S, visit: V) -> Result<Vec<A>>
    where
        A: Send,
        S: Fn() -> A + Sync,
        V: Fn(&mut A, &[u32]) + Sync,
    {
        let depth = self.order.len().min(2);
        let shared = AtomicU64::new(0);
        let limit = budget.max_nodes;
        par::try_map(self.prefixes(depth), |mut vals| {
            let mut acc = seed();
            let mut nodes = 0;
            self.run(depth, &mut vals, &mut nodes, &shared, limit, &mut |a| {
                visit(&mut acc, a)
            })?;
            let rest = nodes & 0xFFF;
            if shared.fetch_add(rest, Ordering::Relaxed) + rest > limit {
                return Err(Error::budget(
                    "basic cover enumeration",
                    format!("more than {limit} search nodes"),
                ));
            }
            Ok(acc)
        })
    }
}

/// All basic k-covers, sorted lexicographically by value sequence.
pub fn enumerate_basic_covers(g: &Graph, k: u32, budget: &Budget) -> Result<Vec<Cover>> {
    if k == 0 {
        return Ok(Vec::new());
    }
    let parts = Enumerator::new(g, k).search(budget, Vec::new, |acc: &mut Vec<Vec<u32>>, vals| {
        acc.push(vals.to_vec())
    })?;
    let mut covers: Vec<Cover> = parts
        .into_iter()
        .flatten()
        .map(|values| Cover::from_parts(values, k))
        .collect();
    covers.sort();
    Ok(covers)
}

/// Number of basic k-covers, i.e. the Hilbert function of the algebra of
/// basic covers in degree `k`. Degree 0 counts the unit.
pub fn hilbert_function(g: &Graph, k: u32, budget: &Budget) -> Result<u64> {
    if k == 0 {
        return Ok(1);
    }
    let parts = Enumerator::new(g, k).search(budget, || 0u64, |acc, _| *acc += 1)?;
    Ok(parts.into_iter().sum())
}

/// The set `A_{k/2} = {v : α(v) <= k/2}`, as a partial assignment.
pub fn low_half(alpha: &Cover) -> Vec<Option<u32>> {
    alpha
        .values
        .iter()
        .map(|&x| (2 * x <= alpha.level).then_some(x))
        .collect()
}

/// Completes values given on a dominating set `A` (all at most `k/2`) to the
/// unique basic k-cover: `α(w) = max{k − α(v) : v ∈ A, v ~ w}` off `A`.
pub fn reconstruct_from_low_half(g: &Graph, k: u32, partial: &[Option<u32>]) -> Result<Cover> {
    if partial.len() != g.vertex_count() {
        return Err(Error::DimensionMismatch {
            expected: g.vertex_count(),
            got: partial.len(),
        });
    }
    if let Some((v, &value)) = partial
        .iter()
        .enumerate()
        .find_map(|(v, p)| p.as_ref().filter(|&&x| 2 * x > k).map(|x| (v, x)))
    {
        return Err(Error::PartialOutOfRange {
            vertex: v + 1,
            value,
            level: k,
        });
    }
    let mut values = vec![0u32; g.vertex_count()];
    for (w, p) in partial.iter().enumerate() {
        values[w] = match p {
            Some(x) => *x,
            None => g
                .neighbors(w)
                .iter()
                .filter_map(|v| partial[v].map(|x| k - x))
                .max()
                .ok_or(Error::NotDominating(w + 1))?,
        };
    }
    if !is_basic_values(g, &values, k) {
        return Err(Error::CompletionNotBasic);
    }
    Ok(Cover::from_parts(values, k))
}

/// Counts of basic 2h-covers and the degree fitted to their tail.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertData {
    /// `counts[h]` = number of basic 2h-covers; `counts[0] = 1`.
    pub counts: Vec<u64>,
    pub fitted_degree: usize,
    pub stable: bool,
}

impl HilbertData {
    /// Krull dimension estimate, present only when the fit is stable.
    pub fn dimension(&self) -> Option<usize> {
        self.stable.then_some(self.fitted_degree + 1)
    }
}

/// The `order`-th forward differences of `seq`.
pub fn finite_differences(seq: &[i128], order: usize) -> Vec<i128> {
    let mut cur = seq.to_vec();
    for _ in 0..order {
        cur = cur.windows(2).map(|w| w[1] - w[0]).collect();
    }
    cur
}

fn constant_tail(seq: &[i128], window: usize) -> Option<i128> {
    if seq.len() < window || window == 0 {
        return None;
    }
    let tail = &seq[seq.len() - window..];
    tail.iter().all(|&x| x == tail[0]).then_some(tail[0])
}

/// Fits the least degree `d` such that the d-th differences of the counts are
/// constant and nonzero over the last `window` entries, while the (d−1)-th
/// are not constant there.
pub fn fit_degree(counts: &[u64], window: usize) -> (usize, bool) {
    let seq: Vec<i128> = counts.iter().map(|&c| c as i128).collect();
    for d in 0..seq.len() {
        let diffs = finite_differences(&seq, d);
        match constant_tail(&diffs, window) {
            None if diffs.len() < window => break,
            None => continue,
            Some(0) => break,
            Some(_) => {
                let lower_constant = d > 0 && constant_tail(&finite_differences(&seq, d - 1), window).is_some();
                return (d, !lower_constant);
            }
        }
    }
    (0, false)
}

/// Estimates `dim` of the algebra of basic covers from the growth of the
/// number of basic 2h-covers, `h = 1..=max_h`.
pub fn krull_dimension_estimate(g: &Graph, max_h: u32, window: usize, budget: &Budget) -> Result<HilbertData> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let mut counts = vec![1u64];
    for h in 1..=max_h {
        counts.push(hilbert_function(g, 2 * h, budget)?);
    }
    let (fitted_degree, stable) = fit_degree(&counts, window);
    Ok(HilbertData {
        counts,
        fitted_degree,
        stable,
    })
}
