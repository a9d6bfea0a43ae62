//! Brute-force axiom checkers.
//!
//! These are reference oracles: they work straight from definitions (basis
//! exchange, rank axioms, DFS acyclicity) and deliberately avoid the
//! optimized code paths they are used to validate.

use crate::graph::Multigraph;
use crate::rng::SplitMix64;
use crate::set::ElementSet;
use crate::{Error, Matroid};

fn exchange_partner_exists(masks: &[u32], b1: u32, b2: u32, e: u32) -> bool {
    let candidates = b2 & !b1;
    let without = b1 & !(1 << e);
    let mut bits = candidates;
    while bits != 0 {
        let f = bits.trailing_zeros();
        bits &= bits - 1;
        if masks.binary_search(&(without | 1 << f)).is_ok() {
            return true;
        }
    }
    false
}

fn exchange_failure(b1: u32, b2: u32, e: u32) -> Error {
    Error::ExchangeFailure {
        b1: ElementSet::from_bits(b1).to_vec(),
        b2: ElementSet::from_bits(b2).to_vec(),
        e: e as usize,
    }
}

/// Full basis-exchange check over all (B1, B2, e) triples.
/// `masks` must be sorted.
pub fn check_exchange_exhaustive(masks: &[u32]) -> Result<(), Error> {
    for &b1 in masks {
        for &b2 in masks {
            let mut bits = b1 & !b2;
            while bits != 0 {
                let e = bits.trailing_zeros();
                bits &= bits - 1;
                if !exchange_partner_exists(masks, b1, b2, e) {
                    return Err(exchange_failure(b1, b2, e));
                }
            }
        }
    }
    Ok(())
}

/// Seeded spot check on `samples` random (B1, B2, e) triples.
pub fn check_exchange_sampled(masks: &[u32], samples: usize) -> Result<(), Error> {
    let mut rng = SplitMix64::derived(0, "basis-exchange");
    let n = masks.len() as u64;
    for _ in 0..samples {
        let b1 = masks[rng.below(n) as usize];
        let b2 = masks[rng.below(n) as usize];
        let diff = b1 & !b2;
        if diff == 0 {
            continue;
        }
        let pick = rng.below(diff.count_ones() as u64) as u32;
        let mut bits = diff;
        for _ in 0..pick {
            bits &= bits - 1;
        }
        let e = bits.trailing_zeros();
        if !exchange_partner_exists(masks, b1, b2, e) {
            return Err(exchange_failure(b1, b2, e));
        }
    }
    Ok(())
}

/// Rank axioms checked on every subset: r(∅)=0, 0 ≤ r(A) ≤ |A|, monotone,
/// submodular. Exhaustive over pairs, so for small ground sets only.
pub fn rank_axioms_hold(m: &Matroid) -> bool {
    let size = m.size();
    assert!(size <= 12, "exhaustive pair sweep");
    let n = 1u32 << size;
    let table: Vec<usize> = (0..n)
        .map(|bits| m.rank(ElementSet::from_bits(bits)))
        .collect();
    if table[0] != 0 {
        return false;
    }
    for a in 0..n {
        let ra = table[a as usize];
        if ra > a.count_ones() as usize {
            return false;
        }
        for b in 0..n {
            let rb = table[b as usize];
            if a & b == a && ra > rb {
                return false; // monotonicity, A ⊆ B
            }
            if ra + rb < table[(a | b) as usize] + table[(a & b) as usize] {
                return false; // submodularity
            }
        }
    }
    true
}

/// Closure operator laws: extensive, monotone, idempotent. Exhaustive.
pub fn closure_operator_sane(m: &Matroid) -> bool {
    let size = m.size();
    assert!(size <= 10, "exhaustive pair sweep");
    let n = 1u32 << size;
    let cl: Vec<u32> = (0..n)
        .map(|bits| m.closure(ElementSet::from_bits(bits)).bits())
        .collect();
    for a in 0..n {
        if a & cl[a as usize] != a {
            return false;
        }
        if cl[cl[a as usize] as usize] != cl[a as usize] {
            return false;
        }
        for b in 0..n {
            if a & b == a && cl[a as usize] & !cl[b as usize] != 0 {
                return false;
            }
        }
    }
    true
}

/// Spanning forests of a graph found by DFS cycle detection only — no
/// union-find, no component counting. Reference oracle for the graph-backed
/// rank function.
pub fn bases_by_acyclicity(g: &Multigraph) -> Vec<ElementSet> {
    fn acyclic(g: &Multigraph, mask: ElementSet) -> bool {
        let n = g.vertex_count();
        let mut visited = vec![false; n];
        // iterative DFS over (vertex, incoming edge id)
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut stack = vec![(start, usize::MAX)];
            visited[start] = true;
            while let Some((v, via)) = stack.pop() {
                for e in mask.iter() {
                    if e == via {
                        continue;
                    }
                    let (a, b) = g.edges()[e];
                    let w = if a == v {
                        b
                    } else if b == v {
                        a
                    } else {
                        continue;
                    };
                    if a == b {
                        return false; // loop edge
                    }
                    if visited[w] {
                        // reached an already-seen vertex through a fresh edge
                        // only acyclic if this is the tree edge we came in on,
                        // which `via` already excluded — but parallel edges
                        // between v and w also land here
                        return false;
                    }
                    visited[w] = true;
                    stack.push((w, e));
                }
            }
        }
        true
    }

    let m = g.edge_count();
    let mut best = 0usize;
    let mut acyclic_sets: Vec<ElementSet> = Vec::new();
    for bits in 0..1u32 << m {
        let mask = ElementSet::from_bits(bits);
        if acyclic(g, mask) {
            if mask.len() > best {
                best = mask.len();
            }
            acyclic_sets.push(mask);
        }
    }
    acyclic_sets.retain(|s| s.len() == best);
    acyclic_sets
}
