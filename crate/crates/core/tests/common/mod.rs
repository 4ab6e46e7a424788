#![allow(dead_code)]

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use petgraph::graph::DiGraph;
use rand::Rng;
use whitney::poset::{enumerate_ideals, OracleLimits};
use whitney::Poset;

/// Isomorphism of the Hasse diagrams, which is isomorphism of the posets.
pub fn isomorphic(a: &Poset, b: &Poset) -> bool {
    fn graph(p: &Poset) -> DiGraph<(), ()> {
        let mut g = DiGraph::new();
        let nodes: Vec<_> = (0..p.len()).map(|_| g.add_node(())).collect();
        for &(lo, hi) in p.covers() {
            g.add_edge(nodes[lo], nodes[hi], ());
        }
        g
    }
    a.len() == b.len()
        && a.covers().len() == b.covers().len()
        && petgraph::algo::is_isomorphic(&graph(a), &graph(b))
}

/// F_1 = F_2 = 1.
pub fn fibonacci(n: usize) -> BigUint {
    let (mut a, mut b) = (BigUint::zero(), BigUint::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// L_0 = 2, L_1 = 1.
pub fn lucas(n: usize) -> BigUint {
    let (mut a, mut b) = (BigUint::from(2u32), BigUint::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// Counts size-k ideals of Z_{2v+1} by how many peaks (z2, z4, ...) they
/// contain: `result[(k, j)]`.
pub fn peak_class_counts_by_enumeration(v: u64) -> HashMap<(usize, usize), u64> {
    let fence = whitney::families::fence(2 * v + 1);
    let peaks: Vec<usize> = (0..fence.len()).filter(|i| i % 2 == 1).collect();
    let mut counts = HashMap::new();
    for ideal in enumerate_ideals(&fence, &OracleLimits::default()).unwrap() {
        let ideal = ideal.unwrap();
        let j = peaks.iter().filter(|&&p| ideal.contains(p)).count();
        *counts.entry((ideal.len(), j)).or_insert(0) += 1;
    }
    counts
}

/// Random poset on up to `max_len` elements: each pair (i, j), i < j, is
/// related with probability `density`. Redundant pairs get reduced away.
pub fn random_poset(rng: &mut impl Rng, max_len: usize, density: f64) -> Poset {
    let len = rng.gen_range(1..=max_len);
    let names: Vec<String> = (0..len).map(|i| format!("e{i}")).collect();
    let mut pairs = Vec::new();
    for i in 0..len {
        for j in i + 1..len {
            if rng.gen_bool(density) {
                pairs.push((names[i].clone(), names[j].clone()));
            }
        }
    }
    Poset::from_covers(&names, &pairs).unwrap()
}

pub fn random_minimal(rng: &mut impl Rng, p: &Poset) -> String {
    let mins = p.minimal_elements();
    mins[rng.gen_range(0..mins.len())].to_owned()
}
