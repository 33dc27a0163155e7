//! Finite posets given by an explicit order relation.

use serde::Serialize;

use crate::error::{Error, Result};

/// A finite partial order on elements `0..len`, each carrying a display name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    leq: Vec<Vec<bool>>,
}

impl Poset {
    /// Builds the relation from `leq(i, j)` and validates the partial order axioms.
    pub fn from_relation(names: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<Poset> {
        let m = names.len();
        let rel: Vec<Vec<bool>> = (0..m).map(|i| (0..m).map(|j| leq(i, j)).collect()).collect();
        let p = Poset { names, leq: rel };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<()> {
        let m = self.len();
        for i in 0..m {
            if !self.leq[i][i] {
                return Err(Error::OrderViolation(format!(
                    "{} is not comparable to itself",
                    self.names[i]
                )));
            }
            for j in 0..m {
                if i != j && self.leq[i][j] && self.leq[j][i] {
                    return Err(Error::OrderViolation(format!(
                        "{} and {} are mutually below each other",
                        self.names[i], self.names[j]
                    )));
                }
                if !self.leq[i][j] {
                    continue;
                }
                if let Some(k) = (0..m).find(|&k| self.leq[j][k] && !self.leq[i][k]) {
                    return Err(Error::OrderViolation(format!(
                        "{} <= {} <= {} but not {} <= {}",
                        self.names[i], self.names[j], self.names[k], self.names[i], self.names[k]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq[i][j]
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq[i][j] || self.leq[j][i]
    }

    /// `j` covers `i`: `i < j` with nothing strictly between.
    pub fn covers(&self, i: usize, j: usize) -> bool {
        self.lt(i, j) && !(0..self.len()).any(|k| self.lt(i, k) && self.lt(k, j))
    }

    /// Cover relations `(lower, upper)` in index order.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let m = self.len();
        (0..m)
            .flat_map(|i| (0..m).map(move |j| (i, j)))
            .filter(|&(i, j)| self.covers(i, j))
            .collect()
    }

    /// Hasse diagram as `x < y` lines.
    pub fn hasse_lines(&self) -> Vec<String> {
        self.hasse_edges()
            .into_iter()
            .map(|(i, j)| format!("{} < {}", self.names[i], self.names[j]))
            .collect()
    }

    pub fn upper_covers(&self, i: usize) -> Vec<usize> {
        (0..self.len()).filter(|&j| self.covers(i, j)).collect()
    }

    pub fn lower_covers(&self, j: usize) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.covers(i, j)).collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&j| !(0..self.len()).any(|i| self.lt(i, j)))
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| !(0..self.len()).any(|j| self.lt(i, j)))
            .collect()
    }

    pub fn minimum(&self) -> Option<usize> {
        (0..self.len()).find(|&i| (0..self.len()).all(|j| self.leq[i][j]))
    }

    pub fn maximum(&self) -> Option<usize> {
        (0..self.len()).find(|&j| (0..self.len()).all(|i| self.leq[i][j]))
    }

    pub fn is_bounded(&self) -> bool {
        self.minimum().is_some() && self.maximum().is_some()
    }

    /// Length in edges of the longest chain ending at each element.
    pub fn heights(&self) -> Vec<usize> {
        let order = self.topological_order();
        let mut h = vec![0; self.len()];
        for &j in &order {
            h[j] = self.lower_covers(j).iter().map(|&i| h[i] + 1).max().unwrap_or(0);
        }
        h
    }

    fn topological_order(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.len()).collect();
        // the number of elements below is strictly monotone along <
        let below: Vec<usize> = (0..self.len())
            .map(|j| (0..self.len()).filter(|&i| self.leq[i][j]).count())
            .collect();
        idx.sort_by_key(|&i| (below[i], i));
        idx
    }

    /// Length in edges of the longest chain.
    pub fn rank(&self) -> usize {
        self.heights().into_iter().max().unwrap_or(0)
    }

    /// Every maximal chain, listed bottom to top.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for start in self.minimal_elements() {
            let mut chain = vec![start];
            self.extend_chains(&mut chain, &mut out);
        }
        out
    }

    fn extend_chains(&self, chain: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let top = *chain.last().expect("chain is never empty");
        let ups = self.upper_covers(top);
        if ups.is_empty() {
            out.push(chain.clone());
            return;
        }
        for u in ups {
            chain.push(u);
            self.extend_chains(chain, out);
            chain.pop();
        }
    }

    /// All maximal chains have the same length.
    pub fn is_pure(&self) -> bool {
        let chains = self.maximal_chains();
        chains.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Sorted by (height, name).
    pub fn linear_extension(&self) -> Vec<usize> {
        let h = self.heights();
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_by(|&a, &b| (h[a], &self.names[a]).cmp(&(h[b], &self.names[b])));
        idx
    }

    pub fn meet(&self, i: usize, j: usize) -> Option<usize> {
        let lower: Vec<usize> = (0..self.len()).filter(|&k| self.leq[k][i] && self.leq[k][j]).collect();
        lower.iter().copied().find(|&k| lower.iter().all(|&l| self.leq[l][k]))
    }

    pub fn join(&self, i: usize, j: usize) -> Option<usize> {
        let upper: Vec<usize> = (0..self.len()).filter(|&k| self.leq[i][k] && self.leq[j][k]).collect();
        upper.iter().copied().find(|&k| upper.iter().all(|&l| self.leq[k][l]))
    }

    pub fn is_lattice(&self) -> bool {
        !self.is_empty()
            && (0..self.len())
                .all(|i| (i + 1..self.len()).all(|j| self.meet(i, j).is_some() && self.join(i, j).is_some()))
    }

    /// Checks `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)` on all triples.
    pub fn is_distributive(&self) -> Result<bool> {
        if !self.is_lattice() {
            return Err(Error::NotALattice);
        }
        let m = self.len();
        let meet = |a, b| self.meet(a, b).expect("lattice");
        let join = |a, b| self.join(a, b).expect("lattice");
        Ok((0..m).all(|x| (0..m).all(|y| (0..m).all(|z| meet(x, join(y, z)) == join(meet(x, y), meet(x, z))))))
    }

    /// Elements covering exactly one element.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.len()).filter(|&j| self.lower_covers(j).len() == 1).collect()
    }

    /// Whenever `v1, v2` cover `u` and lie below some `v`, some `t <= v`
    /// covers both.
    pub fn is_locally_upper_semimodular(&self) -> bool {
        let m = self.len();
        (0..m).all(|u| {
            let ups = self.upper_covers(u);
            ups.iter().enumerate().all(|(a, &v1)| {
                ups[a + 1..].iter().all(|&v2| {
                    (0..m)
                        .filter(|&v| self.lt(v1, v) && self.lt(v2, v))
                        .all(|v| (0..m).any(|t| self.leq[t][v] && self.covers(v1, t) && self.covers(v2, t)))
                })
            })
        })
    }

    /// Number of weakly increasing sequences `x1 <= .. <= xd`.
    pub fn count_multichains(&self, d: usize) -> u128 {
        if d == 0 {
            return 1;
        }
        let order = self.linear_extension();
        let mut ways = vec![1u128; self.len()];
        for _ in 1..d {
            let mut next = vec![0u128; self.len()];
            for &y in &order {
                next[y] = order.iter().filter(|&&x| self.leq[x][y]).map(|&x| ways[x]).sum();
            }
            ways = next;
        }
        ways.into_iter().sum()
    }

    /// Every weakly increasing d-sequence, in lexicographic order of indices
    /// along the linear extension.
    pub fn multichains(&self, d: usize) -> Vec<Vec<usize>> {
        let order = self.linear_extension();
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(d);
        self.extend_multichains(&order, d, &mut cur, &mut out);
        out
    }

    fn extend_multichains(&self, order: &[usize], d: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for &x in order {
            if cur.last().is_none_or(|&last| self.leq[last][x]) {
                cur.push(x);
                self.extend_multichains(order, d, cur, out);
                cur.pop();
            }
        }
    }

    /// Whether a sequence of elements is weakly increasing.
    pub fn is_multichain(&self, seq: &[usize]) -> bool {
        seq.iter().all(|&x| x < self.len()) && seq.windows(2).all(|w| self.leq[w[0]][w[1]])
    }

    pub fn dual(&self) -> Poset {
        let m = self.len();
        Poset {
            names: self.names.clone(),
            leq: (0..m).map(|i| (0..m).map(|j| self.leq[j][i]).collect()).collect(),
        }
    }

    /// The subposet on `elements`, named as in the source.
    pub fn induced(&self, elements: &[usize]) -> Poset {
        Poset {
            names: elements.iter().map(|&i| self.names[i].clone()).collect(),
            leq: elements
                .iter()
                .map(|&i| elements.iter().map(|&j| self.leq[i][j]).collect())
                .collect(),
        }
    }

    /// Whether `map` is a bijection onto `other` with `i <= j ⇔ map(i) <= map(j)`.
    pub fn is_isomorphism(&self, other: &Poset, map: &[usize]) -> bool {
        let m = self.len();
        if other.len() != m || map.len() != m {
            return false;
        }
        let mut seen = vec![false; m];
        for &x in map {
            if x >= m || seen[x] {
                return false;
            }
            seen[x] = true;
        }
        (0..m).all(|i| (0..m).all(|j| self.leq[i][j] == other.leq[map[i]][map[j]]))
    }
}

/// Summary of a poset for reports: elements, Hasse diagram and shape.
#[derive(Debug, Clone, Serialize)]
pub struct PosetSummary {
    pub elements: Vec<String>,
    pub hasse: Vec<String>,
    pub rank: usize,
    pub pure: bool,
    pub lattice: bool,
    pub distributive: Option<bool>,
}

impl From<&Poset> for PosetSummary {
    fn from(p: &Poset) -> Self {
        PosetSummary {
            elements: p.names.clone(),
            hasse: p.hasse_lines(),
            rank: p.rank(),
            pure: p.is_pure(),
            lattice: p.is_lattice(),
            distributive: p.is_distributive().ok(),
        }
    }
}

/// The poset of join-irreducibles of a finite distributive lattice; its order
/// ideals, ordered by inclusion, recover the lattice.
#[derive(Debug, Clone)]
pub struct BirkhoffPoset {
    /// Indices of the join-irreducibles in the source lattice.
    pub elements: Vec<usize>,
    pub poset: Poset,
}

pub fn birkhoff_poset(lattice: &Poset) -> Result<BirkhoffPoset> {
    if !matches!(lattice.is_distributive(), Ok(true)) {
        return Err(Error::NotDistributive);
    }
    let elements = lattice.join_irreducibles();
    let poset = lattice.induced(&elements);
    Ok(BirkhoffPoset { elements, poset })
}

impl BirkhoffPoset {
    pub fn is_pure(&self) -> bool {
        self.poset.is_empty() || self.poset.is_pure()
    }

    /// The down-set of join-irreducibles below `x`, as a bitmask over
    /// `self.elements`.
    pub fn ideal_below(&self, lattice: &Poset, x: usize) -> u128 {
        self.elements
            .iter()
            .enumerate()
            .filter(|&(_, &j)| lattice.leq(j, x))
            .fold(0, |acc, (b, _)| acc | 1 << b)
    }

    /// All order ideals of the join-irreducible poset, as sorted bitmasks.
    pub fn order_ideals(&self) -> Result<Vec<u128>> {
        let m = self.elements.len();
        if m > 24 {
            return Err(Error::budget(
                "order ideal enumeration",
                format!("{m} join-irreducibles"),
            ));
        }
        let down: Vec<u128> = (0..m)
            .map(|i| (0..m).filter(|&j| self.poset.leq(j, i)).fold(0, |acc, j| acc | 1 << j))
            .collect();
        let ideals = (0u128..1 << m)
            .filter(|&s| (0..m).filter(|&i| s >> i & 1 == 1).all(|i| down[i] & !s == 0))
            .collect();
        Ok(ideals)
    }

    /// Checks that `x ↦ {join-irreducibles <= x}` is an order isomorphism from
    /// the lattice onto the inclusion order of ideals.
    pub fn round_trip_holds(&self, lattice: &Poset) -> Result<bool> {
        let ideals = self.order_ideals()?;
        let names = ideals.iter().map(|s| format!("{s:b}")).collect();
        let inclusion = Poset::from_relation(names, |i, j| ideals[i] & !ideals[j] == 0)?;
        let map: Option<Vec<usize>> = (0..lattice.len())
            .map(|x| {
                let s = self.ideal_below(lattice, x);
                ideals.iter().position(|&t| t == s)
            })
            .collect();
        Ok(map.is_some_and(|map| lattice.is_isomorphism(&inclusion, &map)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(m: usize) -> Poset {
        Poset::from_relation((0..m).map(|i| i.to_string()).collect(), |i, j| i <= j).unwrap()
    }

    /// Subsets of a `bits`-element set ordered by inclusion.
    fn boolean(bits: u32) -> Poset {
        Poset::from_relation(
            (0..1usize << bits)
                .map(|i| format!("{i:0w$b}", w = bits as usize))
                .collect(),
            |i, j| i & !j == 0,
        )
        .unwrap()
    }

    /// Bottom, two chains of length two, top.
    fn hexagon() -> Poset {
        let names = ["0", "a1", "a2", "b1", "b2", "1"];
        let below = [(0, 1), (1, 2), (0, 3), (3, 4), (2, 5), (4, 5)];
        let mut rel = [[false; 6]; 6];
        for (i, row) in rel.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(i, j) in &below {
            rel[i][j] = true;
        }
        for _ in 0..6 {
            for i in 0..6 {
                for j in 0..6 {
                    for k in 0..6 {
                        if rel[i][j] && rel[j][k] {
                            rel[i][k] = true;
                        }
                    }
                }
            }
        }
        Poset::from_relation(names.iter().map(|s| s.to_string()).collect(), |i, j| rel[i][j]).unwrap()
    }

    #[test]
    fn validation() {
        let names = vec!["a".to_string(), "b".to_string()];
        assert!(matches!(
            Poset::from_relation(names.clone(), |_, _| true),
            Err(Error::OrderViolation(_))
        ));
        assert!(matches!(
            Poset::from_relation(names, |i, j| i < j),
            Err(Error::OrderViolation(_))
        ));
    }

    #[test]
    fn chains_are_distributive_lattices() {
        let c = chain(4);
        assert!(c.is_lattice());
        assert_eq!(c.is_distributive(), Ok(true));
        assert_eq!(c.rank(), 3);
        assert!(c.is_pure());
        assert_eq!(c.maximal_chains(), vec![vec![0, 1, 2, 3]]);
        assert!(c.is_locally_upper_semimodular());
        assert_eq!(c.count_multichains(1), 4);
    }

    #[test]
    fn multichain_counts() {
        assert_eq!(chain(2).count_multichains(3), 4);
        let b2 = boolean(2);
        for d in 0..5 {
            assert_eq!(b2.count_multichains(d), b2.multichains(d).len() as u128);
        }
        assert_eq!(b2.count_multichains(0), 1);
    }

    #[test]
    fn hexagon_shape() {
        let h = hexagon();
        assert!(h.is_lattice());
        assert_eq!(h.is_distributive(), Ok(false));
        assert!(h.is_pure());
        assert!(!h.is_locally_upper_semimodular());
        assert_eq!(h.maximal_chains().len(), 2);
        assert!(matches!(birkhoff_poset(&h), Err(Error::NotDistributive)));
    }

    #[test]
    fn non_lattice() {
        // two minimal and two maximal elements, every minimal below every maximal
        let names = ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect();
        let p = Poset::from_relation(names, |i, j| i == j || (i < 2 && j >= 2)).unwrap();
        assert!(!p.is_lattice());
        assert_eq!(p.is_distributive(), Err(Error::NotALattice));
    }

    #[test]
    fn birkhoff_round_trip() {
        for l in [chain(1), chain(4), boolean(2), boolean(3)] {
            let b = birkhoff_poset(&l).unwrap();
            assert!(b.round_trip_holds(&l).unwrap());
        }
        let b = birkhoff_poset(&boolean(3)).unwrap();
        assert_eq!(b.elements.len(), 3);
        assert!(b.is_pure());
        assert_eq!(birkhoff_poset(&chain(4)).unwrap().elements.len(), 3);
    }

    #[test]
    fn purity_of_small_posets() {
        // a 3-element chain plus an incomparable point
        let names = ["a", "b", "c", "x"].iter().map(|s| s.to_string()).collect();
        let p = Poset::from_relation(names, |i, j| i == j || (i < j && j < 3)).unwrap();
        assert!(!p.is_pure());
    }

    #[test]
    fn dual_and_isomorphism() {
        let c = chain(3);
        let d = c.dual();
        assert!(c.is_isomorphism(&d, &[2, 1, 0]));
        assert!(!c.is_isomorphism(&d, &[0, 1, 2]));
    }
}
