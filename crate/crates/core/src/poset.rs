//! Finite posets given by their cover relations, order-ideal enumeration and
//! the brute-force Whitney oracle.

use std::collections::{HashMap, HashSet};

use fixedbitset::FixedBitSet;
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::table::WhitneyTable;

/// Wire format for posets: `{"elements": [...], "covers": [[lower, upper], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetDescription {
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
}

/// A validated finite poset.
///
/// Elements are opaque strings, indexed internally by their position in the
/// element list. The stored covers are always irredundant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    index: HashMap<String, usize>,
    covers: Vec<(usize, usize)>,
    lower_covers: Vec<Vec<usize>>,
    upper_covers: Vec<Vec<usize>>,
    /// Strict down-set of each element.
    below: Vec<FixedBitSet>,
}

impl Poset {
    /// Builds a poset from names and cover pairs. Redundant (transitively
    /// implied) pairs are dropped; cycles are rejected with a witness.
    pub fn from_covers<S, C>(elements: &[S], covers: &[(C, C)]) -> Result<Self>
    where
        S: AsRef<str>,
        C: AsRef<str>,
    {
        let names: Vec<String> = elements.iter().map(|s| s.as_ref().to_owned()).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateElement(name.clone()));
            }
        }
        let lookup = |name: &str| {
            index
                .get(name)
                .copied()
                .ok_or_else(|| Error::UnknownElement(name.to_owned()))
        };
        let mut edges = Vec::with_capacity(covers.len());
        for (lo, hi) in covers {
            edges.push((lookup(lo.as_ref())?, lookup(hi.as_ref())?));
        }
        Self::from_relation(names, index, edges)
    }

    pub fn from_description(desc: &PosetDescription) -> Result<Self> {
        Self::from_covers(&desc.elements, &desc.covers)
    }

    /// Builds from indexed pairs that generate the order (not necessarily covers).
    fn from_relation(
        names: Vec<String>,
        index: HashMap<String, usize>,
        mut edges: Vec<(usize, usize)>,
    ) -> Result<Self> {
        let n = names.len();
        edges.sort_unstable();
        edges.dedup();

        let mut succ = vec![Vec::new(); n];
        for &(a, b) in &edges {
            succ[a].push(b);
        }
        let order = topological_order(&succ)
            .map_err(|cycle| Error::Cycle(cycle.into_iter().map(|i| names[i].clone()).collect()))?;

        let mut pred = vec![Vec::new(); n];
        for &(a, b) in &edges {
            pred[b].push(a);
        }
        let mut below = vec![FixedBitSet::with_capacity(n); n];
        for &v in &order {
            let mut set = FixedBitSet::with_capacity(n);
            for &p in &pred[v] {
                set.union_with(&below[p]);
                set.insert(p);
            }
            below[v] = set;
        }

        // (a, b) is a cover unless some other generator (c, b) has a < c.
        let covers: Vec<(usize, usize)> = edges
            .iter()
            .copied()
            .filter(|&(a, b)| !pred[b].iter().any(|&c| c != a && below[c].contains(a)))
            .collect();

        let mut lower_covers = vec![Vec::new(); n];
        let mut upper_covers = vec![Vec::new(); n];
        for &(a, b) in &covers {
            upper_covers[a].push(b);
            lower_covers[b].push(a);
        }
        Ok(Self {
            names,
            index,
            covers,
            lower_covers,
            upper_covers,
            below,
        })
    }

    pub fn empty() -> Self {
        Self::from_relation(Vec::new(), HashMap::new(), Vec::new()).expect("empty poset")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownElement(name.to_owned()))
    }

    /// Cover pairs `(lower, upper)` by index, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn cover_names(&self) -> Vec<(&str, &str)> {
        self.covers
            .iter()
            .map(|&(a, b)| (self.name(a), self.name(b)))
            .collect()
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower_covers[i]
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper_covers[i]
    }

    /// `a < b` in the order.
    pub fn less_than(&self, a: usize, b: usize) -> bool {
        self.below[b].contains(a)
    }

    /// Indices strictly below `i`.
    pub fn strictly_below(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.below[i].ones()
    }

    pub fn is_minimal(&self, i: usize) -> bool {
        self.lower_covers[i].is_empty()
    }

    pub fn minimal_elements(&self) -> Vec<&str> {
        (0..self.len())
            .filter(|&i| self.is_minimal(i))
            .map(|i| self.name(i))
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<&str> {
        (0..self.len())
            .filter(|&i| self.upper_covers[i].is_empty())
            .map(|i| self.name(i))
            .collect()
    }

    /// Length of the longest chain ending at each element (minimal elements
    /// have rank 0).
    pub fn heights(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| self.below[i].count_ones(..));
        let mut height = vec![0; self.len()];
        for i in order {
            height[i] = self.lower_covers[i]
                .iter()
                .map(|&l| height[l] + 1)
                .max()
                .unwrap_or(0);
        }
        height
    }

    /// Induced subposet on the given indices, keeping their relative order.
    pub fn induced(&self, keep: &[usize]) -> Self {
        let names: Vec<String> = keep.iter().map(|&i| self.names[i].clone()).collect();
        let index = names
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        let mut relation = Vec::new();
        for (new_b, &b) in keep.iter().enumerate() {
            for (new_a, &a) in keep.iter().enumerate() {
                if self.less_than(a, b) {
                    relation.push((new_a, new_b));
                }
            }
        }
        Self::from_relation(names, index, relation).expect("restriction of an order is an order")
    }

    /// Induced subposet on the named elements.
    pub fn induced_by_names<S: AsRef<str>>(&self, keep: &[S]) -> Result<Self> {
        let keep = keep
            .iter()
            .map(|s| self.require(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.induced(&keep))
    }

    /// `P ∖ {x}` as an induced subposet.
    pub fn delete_element(&self, x: &str) -> Result<Self> {
        let x = self.require(x)?;
        let keep: Vec<usize> = (0..self.len()).filter(|&i| i != x).collect();
        Ok(self.induced(&keep))
    }

    pub fn to_description(&self) -> PosetDescription {
        PosetDescription {
            elements: self.names.clone(),
            covers: self
                .covers
                .iter()
                .map(|&(a, b)| (self.names[a].clone(), self.names[b].clone()))
                .collect(),
        }
    }

    /// Whether `elements` is downward closed.
    pub fn is_order_ideal(&self, ideal: &OrderIdeal) -> bool {
        ideal
            .iter()
            .all(|y| self.lower_covers[y].iter().all(|&z| ideal.contains(z)))
    }
}

/// Kahn's algorithm; on failure returns one directed cycle, closed by
/// repeating its first vertex.
fn topological_order(succ: &[Vec<usize>]) -> std::result::Result<Vec<usize>, Vec<usize>> {
    let n = succ.len();
    let mut indegree = vec![0usize; n];
    for targets in succ {
        for &t in targets {
            indegree[t] += 1;
        }
    }
    let mut stack: Vec<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = stack.pop() {
        order.push(v);
        for &t in &succ[v] {
            indegree[t] -= 1;
            if indegree[t] == 0 {
                stack.push(t);
            }
        }
    }
    if order.len() == n {
        return Ok(order);
    }
    // Every leftover vertex has a leftover successor, so walking forward
    // must revisit a vertex.
    let start = (0..n).find(|&i| indegree[i] > 0).expect("leftover vertex");
    let mut position = vec![usize::MAX; n];
    let mut walk = Vec::new();
    let mut v = start;
    while position[v] == usize::MAX {
        position[v] = walk.len();
        walk.push(v);
        v = *succ[v]
            .iter()
            .find(|&&t| indegree[t] > 0)
            .expect("leftover vertex has a leftover successor");
    }
    let mut cycle = walk.split_off(position[v]);
    cycle.push(v);
    Err(cycle)
}

/// Largest poset the bitset-backed oracle can handle.
pub const ORACLE_MAX_SUPPORTED: usize = 128;

/// Size limits for brute-force enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_elements: usize,
    pub max_ideals: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        Self {
            max_elements: 30,
            max_ideals: 5_000_000,
        }
    }
}

impl OracleLimits {
    pub fn with_max_elements(self, max_elements: usize) -> Self {
        Self {
            max_elements,
            ..self
        }
    }
}

/// A downward-closed subset, stored as a bitset over element indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderIdeal(u128);

impl OrderIdeal {
    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < ORACLE_MAX_SUPPORTED && self.0 >> i & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..ORACLE_MAX_SUPPORTED).filter(move |&i| self.contains(i))
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        Self(indices.into_iter().fold(0, |acc, i| acc | 1 << i))
    }
}

/// Breadth-first walk of the ideal lattice, one cardinality level at a time.
/// Each level is generated from the previous one by adding a minimal element
/// of the complement, and deduplicated.
pub struct IdealEnumerator {
    down: Vec<u128>,
    level: Vec<u128>,
    position: usize,
    produced: usize,
    max_ideals: usize,
    finished: bool,
}

impl IdealEnumerator {
    fn advance_level(&mut self) {
        let mut next = HashSet::new();
        for &ideal in &self.level {
            for (x, &down) in self.down.iter().enumerate() {
                let bit = 1u128 << x;
                if ideal & bit == 0 && down & !ideal == 0 {
                    next.insert(ideal | bit);
                }
            }
        }
        let mut next: Vec<u128> = next.into_iter().collect();
        next.sort_unstable();
        self.level = next;
        self.position = 0;
    }
}

impl Iterator for IdealEnumerator {
    type Item = Result<OrderIdeal>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.finished {
            return None;
        }
        if self.position == self.level.len() {
            self.advance_level();
            if self.level.is_empty() {
                self.finished = true;
                return None;
            }
        }
        if self.produced == self.max_ideals {
            self.finished = true;
            return Some(Err(Error::TooManyIdeals {
                bound: self.max_ideals,
            }));
        }
        let ideal = self.level[self.position];
        self.position += 1;
        self.produced += 1;
        Some(Ok(OrderIdeal(ideal)))
    }
}

/// Streams every order ideal of `poset` exactly once, in order of increasing
/// cardinality.
pub fn enumerate_ideals(poset: &Poset, limits: &OracleLimits) -> Result<IdealEnumerator> {
    let bound = limits.max_elements.min(ORACLE_MAX_SUPPORTED);
    if poset.len() > bound {
        return Err(Error::TooManyElements {
            elements: poset.len(),
            bound,
        });
    }
    let down = (0..poset.len())
        .map(|i| poset.strictly_below(i).fold(0u128, |acc, j| acc | 1 << j))
        .collect();
    Ok(IdealEnumerator {
        down,
        level: vec![0],
        position: 0,
        produced: 0,
        max_ideals: limits.max_ideals,
        finished: false,
    })
}

/// Whitney numbers of `J(P)` by exhaustive enumeration.
pub fn whitney_oracle(poset: &Poset, limits: &OracleLimits) -> Result<WhitneyTable> {
    let mut counts = vec![0u64; poset.len() + 1];
    for ideal in enumerate_ideals(poset, limits)? {
        counts[ideal?.len()] += 1;
    }
    Ok(WhitneyTable::new(
        counts.into_iter().map(BigUint::from).collect(),
    ))
}

/// [`whitney_oracle`] with the default limits.
pub fn whitney_oracle_default(poset: &Poset) -> Result<WhitneyTable> {
    whitney_oracle(poset, &OracleLimits::default())
}
