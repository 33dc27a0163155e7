//! Brute-force oracles and graph generators shared by the integration tests.
//! Each oracle works straight from a definition and shares no code with the
//! library's search routines.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use cover_algebra::{fixtures, Graph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn fixture(name: &str) -> Graph {
    fixtures::load(name).unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub const FIXTURES: [&str; 9] = ["K2", "P6", "STAR3", "C4", "C5", "C6", "K23", "E7", "E8"];

pub fn bipartite_fixtures() -> Vec<(&'static str, Graph)> {
    fixtures::all()
        .unwrap()
        .into_iter()
        .filter(|(_, g)| g.is_bipartite())
        .collect()
}

// ---------------------------------------------------------------- oracles

fn is_k_cover(g: &Graph, a: &[u32], k: u32) -> bool {
    g.edges().iter().all(|&(u, v)| a[u] + a[v] >= k) && a.iter().any(|&x| x > 0)
}

/// Basic = no single decrement keeps a k-cover (a pointwise smaller cover
/// exists iff one obtained by one decrement does).
pub fn brute_basic_covers(g: &Graph, k: u32) -> Vec<Vec<u32>> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    let mut a = vec![0u32; n];
    loop {
        if is_k_cover(g, &a, k)
            && (0..n).all(|v| {
                if a[v] == 0 {
                    return true;
                }
                let mut b = a.clone();
                b[v] -= 1;
                !is_k_cover(g, &b, k)
            })
        {
            out.push(a.clone());
        }
        // odometer over {0..k}^n
        let mut i = 0;
        loop {
            if i == n {
                out.sort();
                return out;
            }
            if a[i] < k {
                a[i] += 1;
                break;
            }
            a[i] = 0;
            i += 1;
        }
    }
}

type Edges = [(usize, usize)];

fn disjoint_edge_sets(g: &Graph, pred: &mut dyn FnMut(&Edges)) {
    fn go(g: &Graph, i: usize, used: u64, cur: &mut Vec<(usize, usize)>, pred: &mut dyn FnMut(&Edges)) {
        pred(cur);
        for j in i..g.edge_count() {
            let (u, v) = g.edges()[j];
            if used >> u & 1 == 0 && used >> v & 1 == 0 {
                cur.push((u, v));
                go(g, j + 1, used | 1 << u | 1 << v, cur, pred);
                cur.pop();
            }
        }
    }
    go(g, 0, 0, &mut Vec::new(), pred);
}

pub fn brute_matching_number(g: &Graph) -> usize {
    let mut best = 0;
    disjoint_edge_sets(g, &mut |m| best = best.max(m.len()));
    best
}

pub fn brute_perfect_matchings(g: &Graph) -> usize {
    let mut count = 0;
    disjoint_edge_sets(g, &mut |m| {
        if 2 * m.len() == g.vertex_count() {
            count += 1
        }
    });
    count
}

pub fn brute_induced_matching(g: &Graph) -> usize {
    let mut best = 0;
    disjoint_edge_sets(g, &mut |m| {
        let ok = m.iter().enumerate().all(|(i, &(a, b))| {
            m[i + 1..]
                .iter()
                .all(|&(c, d)| !g.has_edge(a, c) && !g.has_edge(a, d) && !g.has_edge(b, c) && !g.has_edge(b, d))
        });
        if ok {
            best = best.max(m.len());
        }
    });
    best
}

/// Smallest dominating vertex set of some matching.
pub fn brute_paired_domination(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut best = usize::MAX;
    disjoint_edge_sets(g, &mut |m| {
        if m.is_empty() {
            return;
        }
        let s: u64 = m.iter().fold(0, |acc, &(u, v)| acc | 1 << u | 1 << v);
        let dominated = (0..n).all(|v| s >> v & 1 == 1 || g.neighbors(v).iter().any(|w| s >> w & 1 == 1));
        if dominated {
            best = best.min(2 * m.len());
        }
    });
    best
}

/// Largest matching with an orientation whose tails are independent and
/// whose "tail of i adjacent to head of j" relation is acyclic, plus one.
pub fn brute_gdim(g: &Graph) -> usize {
    let mut best = 0;
    disjoint_edge_sets(g, &mut |m| {
        let r = m.len();
        if r <= best {
            return;
        }
        for mask in 0..1u32 << r {
            let pairs: Vec<(usize, usize)> = m
                .iter()
                .enumerate()
                .map(|(i, &(u, v))| if mask >> i & 1 == 1 { (v, u) } else { (u, v) })
                .collect();
            let independent = (0..r).all(|i| (0..r).all(|j| i == j || !g.has_edge(pairs[i].0, pairs[j].0)));
            if independent && acyclic(r, |i, j| g.has_edge(pairs[i].0, pairs[j].1)) {
                best = r;
                return;
            }
        }
    });
    best + 1
}

fn acyclic(r: usize, arc: impl Fn(usize, usize) -> bool) -> bool {
    let mut removed = vec![false; r];
    for _ in 0..r {
        // a pair with no incoming arc from a remaining pair can go first
        let Some(i) = (0..r).find(|&i| !removed[i] && (0..r).all(|j| j == i || removed[j] || !arc(j, i))) else {
            return false;
        };
        removed[i] = true;
    }
    true
}

/// Maximal independent sets as sorted label lists.
pub fn brute_independence_facets(g: &Graph) -> BTreeSet<Vec<usize>> {
    let n = g.vertex_count();
    let indep = |s: u64| g.edges().iter().all(|&(u, v)| s >> u & 1 == 0 || s >> v & 1 == 0);
    (0u64..1 << n)
        .filter(|&s| indep(s) && (0..n).all(|v| s >> v & 1 == 1 || !indep(s | 1 << v)))
        .map(|s| (0..n).filter(|&v| s >> v & 1 == 1).map(|v| v + 1).collect())
        .collect()
}

/// Shellability by trying every facet order; facets as bitmasks.
pub fn brute_shellable(facets: &[u64]) -> bool {
    fn go(facets: &[u64], order: &mut Vec<usize>) -> bool {
        if order.len() == facets.len() {
            return true;
        }
        for f in 0..facets.len() {
            if order.contains(&f) {
                continue;
            }
            let d = facets[f].count_ones();
            let meets: Vec<u64> = order.iter().map(|&g| facets[f] & facets[g]).collect();
            let ok = meets
                .iter()
                .filter(|&&a| !meets.iter().any(|&b| a != b && a & !b == 0))
                .all(|&a| a.count_ones() + 1 == d);
            if ok {
                order.push(f);
                if go(facets, order) {
                    return true;
                }
                order.pop();
            }
        }
        false
    }
    go(facets, &mut Vec::new())
}

/// Whether all maximal chains of minimal vertex covers, ordered
/// componentwise on the first bipartition side, have the same length.
pub fn brute_poset_is_pure(g: &Graph) -> bool {
    let (side, _) = g.bipartition().unwrap();
    let elems: Vec<Vec<u32>> = brute_basic_covers(g, 1)
        .iter()
        .map(|c| side.iter().map(|v| c[v]).collect())
        .collect();
    let lt = |a: &[u32], b: &[u32]| a != b && a.iter().zip(b).all(|(x, y)| x <= y);
    let covers = |i: usize, j: usize| {
        lt(&elems[i], &elems[j]) && !(0..elems.len()).any(|k| lt(&elems[i], &elems[k]) && lt(&elems[k], &elems[j]))
    };
    let m = elems.len();
    let mut lengths = BTreeSet::new();
    let mut stack: Vec<(usize, usize)> = (0..m)
        .filter(|&i| !(0..m).any(|j| lt(&elems[j], &elems[i])))
        .map(|i| (i, 0))
        .collect();
    while let Some((i, len)) = stack.pop() {
        let up: Vec<usize> = (0..m).filter(|&j| covers(i, j)).collect();
        if up.is_empty() {
            lengths.insert(len);
        }
        stack.extend(up.into_iter().map(|j| (j, len + 1)));
    }
    lengths.len() == 1
}

// ------------------------------------------------------------- generators

/// Connected graph on `n` vertices: a random spanning tree plus extra edges
/// with probability `p`.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = HashSet::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.insert((u, v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.insert((u, v));
            }
        }
    }
    let mut list: Vec<_> = edges.into_iter().collect();
    list.sort();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    Graph::new(n, list.into_iter().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}

/// Bipartite graph without isolated vertices on sides of size `a` and `b`;
/// every vertex gets at least one edge, and the result may be disconnected.
pub fn random_bipartite(rng: &mut ChaCha8Rng, a: usize, b: usize, p: f64) -> Graph {
    let mut edges = HashSet::new();
    for u in 0..a {
        for v in 0..b {
            if rng.gen_bool(p) {
                edges.insert((u, a + v));
            }
        }
    }
    for u in 0..a {
        if !edges.iter().any(|&(x, _)| x == u) {
            edges.insert((u, a + rng.gen_range(0..b)));
        }
    }
    for v in 0..b {
        if !edges.iter().any(|&(_, y)| y == a + v) {
            edges.insert((rng.gen_range(0..a), a + v));
        }
    }
    let mut list: Vec<_> = edges.into_iter().collect();
    list.sort();
    let n = a + b;
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    Graph::new(n, list.into_iter().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}

pub fn random_connected_bipartite(rng: &mut ChaCha8Rng, a: usize, b: usize, p: f64) -> Graph {
    loop {
        let g = random_bipartite(rng, a, b, p);
        if g.is_connected() {
            return g;
        }
    }
}

pub fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let code: Vec<usize> = (0..n.saturating_sub(2)).map(|_| rng.gen_range(0..n)).collect();
    prufer_tree(n, &code)
}

pub fn prufer_tree(n: usize, code: &[usize]) -> Graph {
    if n == 2 {
        return Graph::new(2, [(0, 1)]).unwrap();
    }
    let mut degree = vec![1; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::new();
    for &c in code {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges).unwrap()
}

/// Every labelled tree on `n >= 2` vertices.
pub fn all_trees(n: usize) -> Vec<Graph> {
    let len = n - 2;
    let total = n.pow(len as u32);
    (0..total)
        .map(|mut x| {
            let code: Vec<usize> = (0..len)
                .map(|_| {
                    let d = x % n;
                    x /= n;
                    d
                })
                .collect();
            prufer_tree(n, &code)
        })
        .collect()
}

/// Graphs satisfying the weak square condition: a random bipartite core with
/// a pendant vertex on every core vertex, then optionally some open twins
/// (a new vertex copying the neighborhood of an existing one).
pub fn random_wsc(rng: &mut ChaCha8Rng, core_a: usize, core_b: usize, twins: usize) -> Graph {
    let core = random_connected_bipartite(rng, core_a, core_b, 0.5);
    let c = core.vertex_count();
    let mut edges: Vec<(usize, usize)> = core.edges().to_vec();
    for v in 0..c {
        edges.push((v, c + v));
    }
    let mut n = 2 * c;
    for _ in 0..twins {
        let x = rng.gen_range(0..n);
        let nbrs: Vec<usize> = edges
            .iter()
            .filter_map(|&(u, v)| {
                if u == x {
                    Some(v)
                } else if v == x {
                    Some(u)
                } else {
                    None
                }
            })
            .collect();
        for w in nbrs {
            edges.push((n, w));
        }
        n += 1;
    }
    Graph::new(n, edges).unwrap()
}

/// All graphs on exactly `n` vertices without isolated vertices, one per
/// isomorphism class.
pub fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    // all graphs on `m` vertices up to isomorphism (isolated vertices allowed),
    // grown one vertex at a time
    let mut level: Vec<u64> = vec![0];
    for m in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for &g in &level {
            for nbrs in 0u64..1 << (m - 1) {
                let mut mask = g;
                for u in 0..m - 1 {
                    if nbrs >> u & 1 == 1 {
                        mask |= 1 << pair_index(u, m - 1);
                    }
                }
                let c = canonical(m, mask);
                if seen.insert(c) {
                    next.push(c);
                }
            }
        }
        level = next;
    }
    level
        .into_iter()
        .filter_map(|mask| {
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|v| (0..v).map(move |u| (u, v)))
                .filter(|&(u, v)| mask >> pair_index(u, v) & 1 == 1)
                .collect();
            let touched: std::collections::BTreeSet<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
            (touched.len() == n).then(|| Graph::new(n, edges).unwrap())
        })
        .collect()
}

/// Index of pair `u < v` in colexicographic order.
fn pair_index(u: usize, v: usize) -> usize {
    v * (v - 1) / 2 + u
}

/// Minimal edge mask over relabelings that keep vertices sorted by degree.
fn canonical(m: usize, mask: u64) -> u64 {
    let adj = |u: usize, v: usize| u != v && mask >> pair_index(u.min(v), u.max(v)) & 1 == 1;
    let deg: Vec<usize> = (0..m).map(|v| (0..m).filter(|&w| adj(v, w)).count()).collect();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&v| deg[v]);
    // perm[pos] is the original vertex placed at position pos
    let mut best = u64::MAX;
    let mut perm: Vec<usize> = Vec::with_capacity(m);
    let mut stack: Vec<usize> = vec![0];
    while let Some(next) = stack.pop() {
        let pos = perm.len();
        if pos == m {
            let mut out = 0u64;
            for v in 1..m {
                for u in 0..v {
                    if adj(perm[u], perm[v]) {
                        out |= 1 << pair_index(u, v);
                    }
                }
            }
            best = best.min(out);
            perm.pop();
            continue;
        }
        match (next..m).find(|&x| !perm.contains(&x) && deg[x] == deg[order[pos]]) {
            Some(x) => {
                stack.push(x + 1);
                perm.push(x);
                stack.push(0);
            }
            None => {
                perm.pop();
            }
        }
    }
    best
}
