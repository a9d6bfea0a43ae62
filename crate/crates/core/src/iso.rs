//! Matroid isomorphism and minor containment.
//!
//! Isomorphism testing is circuit-driven: an invariant fingerprint filters
//! obvious non-pairs, then a backtracking search assigns elements rarest
//! refinement class first, pruning whenever a completed circuit image (or
//! preimage) is not a circuit on the other side. A found bijection is
//! certified by rank agreement — on every subset up to 10 elements, on
//! circuit preservation plus seeded random subsets above that.

use crate::matroid::Matroid;
use crate::rng::SplitMix64;
use crate::set::{subsets_of_size, ElementSet};
use crate::Error;

/// Isomorphism-invariant summary of a matroid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    pub size: usize,
    pub rank: usize,
    /// (circuit size, count), ascending by size.
    pub circuit_sizes: Vec<(usize, usize)>,
    /// Sorted multiset of per-element signatures; each signature is the
    /// (circuit size, count through the element) list.
    pub element_degrees: Vec<Vec<(usize, usize)>>,
}

pub fn fingerprint(m: &Matroid) -> Fingerprint {
    fingerprint_from_circuits(m, &m.circuits())
}

fn fingerprint_from_circuits(m: &Matroid, circuits: &[ElementSet]) -> Fingerprint {
    let mut by_size: Vec<(usize, usize)> = Vec::new();
    for c in circuits {
        match by_size.binary_search_by_key(&c.len(), |p| p.0) {
            Ok(i) => by_size[i].1 += 1,
            Err(i) => by_size.insert(i, (c.len(), 1)),
        }
    }
    let mut degrees: Vec<Vec<(usize, usize)>> = (0..m.size())
        .map(|e| {
            let mut per: Vec<(usize, usize)> = Vec::new();
            for c in circuits.iter().filter(|c| c.contains(e)) {
                match per.binary_search_by_key(&c.len(), |p| p.0) {
                    Ok(i) => per[i].1 += 1,
                    Err(i) => per.insert(i, (c.len(), 1)),
                }
            }
            per
        })
        .collect();
    degrees.sort_unstable();
    Fingerprint {
        size: m.size(),
        rank: m.full_rank(),
        circuit_sizes: by_size,
        element_degrees: degrees,
    }
}

/// Per-element refinement labels, iterated until stable: start from the
/// element signature, then fold in the sorted labels seen across shared
/// circuits.
fn refine_labels(size: usize, circuits: &[ElementSet]) -> Vec<u64> {
    let mut label: Vec<u64> = (0..size)
        .map(|e| {
            let mut h = 0xcbf2_9ce4_8422_2325u64;
            let mut sizes: Vec<usize> = circuits
                .iter()
                .filter(|c| c.contains(e))
                .map(|c| c.len())
                .collect();
            sizes.sort_unstable();
            for s in sizes {
                h ^= s as u64 + 1;
                h = h.wrapping_mul(0x1000_0000_01b3);
            }
            h
        })
        .collect();
    for _ in 0..3 {
        let mut next = vec![0u64; size];
        for (e, slot) in next.iter_mut().enumerate() {
            let mut neighborhood: Vec<u64> = Vec::new();
            for c in circuits.iter().filter(|c| c.contains(e)) {
                let mut others: Vec<u64> = c.iter().filter(|&f| f != e).map(|f| label[f]).collect();
                others.sort_unstable();
                let mut h = c.len() as u64;
                for o in others {
                    h = h.wrapping_mul(0x100_0193).wrapping_add(o);
                }
                neighborhood.push(h);
            }
            neighborhood.sort_unstable();
            let mut h = label[e];
            for v in neighborhood {
                h = h.wrapping_mul(0x1000_0000_01b3) ^ v;
            }
            *slot = h;
        }
        if next == label {
            break;
        }
        label = next;
    }
    label
}

struct IsoSearch<'a> {
    m1: &'a Matroid,
    m2: &'a Matroid,
    size: usize,
    circuits1: Vec<ElementSet>,
    circuits2: Vec<ElementSet>,
    circuits2_sorted: Vec<u32>,
    circuits1_sorted: Vec<u32>,
    through1: Vec<Vec<usize>>,
    through2: Vec<Vec<usize>>,
    class1: Vec<u64>,
    class2: Vec<u64>,
    order: Vec<usize>,
    forward: Vec<usize>,
    backward: Vec<usize>,
    assigned1: Vec<usize>,
    covered2: Vec<usize>,
    used2: ElementSet,
}

const UNSET: usize = usize::MAX;

impl<'a> IsoSearch<'a> {
    fn run(mut self) -> Option<Vec<usize>> {
        if self.search(0) {
            Some(self.forward)
        } else {
            None
        }
    }

    fn search(&mut self, depth: usize) -> bool {
        if depth == self.size {
            return self.certify();
        }
        let e = self.order[depth];
        for f in 0..self.size {
            if self.used2.contains(f) || self.class1[e] != self.class2[f] {
                continue;
            }
            if self.try_assign(e, f) {
                if self.search(depth + 1) {
                    return true;
                }
                self.unassign(e, f);
            }
        }
        false
    }

    fn try_assign(&mut self, e: usize, f: usize) -> bool {
        self.forward[e] = f;
        self.backward[f] = e;
        self.used2 = self.used2.with(f);
        let mut ok = true;
        for &ci in &self.through1[e] {
            self.assigned1[ci] += 1;
            if ok && self.assigned1[ci] == self.circuits1[ci].len() {
                let image: u32 = self.circuits1[ci]
                    .iter()
                    .map(|x| 1u32 << self.forward[x])
                    .sum();
                if self.circuits2_sorted.binary_search(&image).is_err() {
                    ok = false;
                }
            }
        }
        for &cj in &self.through2[f] {
            self.covered2[cj] += 1;
            if ok && self.covered2[cj] == self.circuits2[cj].len() {
                let preimage: u32 = self.circuits2[cj]
                    .iter()
                    .map(|y| 1u32 << self.backward[y])
                    .sum();
                if self.circuits1_sorted.binary_search(&preimage).is_err() {
                    ok = false;
                }
            }
        }
        if !ok {
            self.unassign(e, f);
        }
        ok
    }

    fn unassign(&mut self, e: usize, f: usize) {
        for &ci in &self.through1[e] {
            self.assigned1[ci] -= 1;
        }
        for &cj in &self.through2[f] {
            self.covered2[cj] -= 1;
        }
        self.forward[e] = UNSET;
        self.backward[f] = UNSET;
        self.used2 = self.used2.without(f);
    }

    fn certify(&self) -> bool {
        if self.size <= 10 {
            for bits in 0..1u32 << self.size {
                let a = ElementSet::from_bits(bits);
                let image: ElementSet = a.iter().map(|e| self.forward[e]).collect();
                if self.m1.rank(a) != self.m2.rank(image) {
                    return false;
                }
            }
            true
        } else {
            // circuits already preserved bijectively; sample ranks on top
            let mut rng = SplitMix64::derived(0, "iso-certify");
            for _ in 0..1000 {
                let a = ElementSet::from_bits(rng.mask(self.size));
                let image: ElementSet = a.iter().map(|e| self.forward[e]).collect();
                if self.m1.rank(a) != self.m2.rank(image) {
                    return false;
                }
            }
            true
        }
    }
}

/// A bijection `m1 -> m2` preserving rank, or None. The returned vector maps
/// each element of `m1` to its image in `m2`.
pub fn is_isomorphic(m1: &Matroid, m2: &Matroid) -> Option<Vec<usize>> {
    if m1.size() != m2.size() || m1.full_rank() != m2.full_rank() {
        return None;
    }
    let size = m1.size();
    let circuits1 = m1.circuits();
    let circuits2 = m2.circuits();
    if fingerprint_from_circuits(m1, &circuits1) != fingerprint_from_circuits(m2, &circuits2) {
        return None;
    }
    let class1 = refine_labels(size, &circuits1);
    let class2 = refine_labels(size, &circuits2);
    {
        let mut s1 = class1.clone();
        let mut s2 = class2.clone();
        s1.sort_unstable();
        s2.sort_unstable();
        if s1 != s2 {
            return None;
        }
    }
    let through = |circuits: &[ElementSet]| -> Vec<Vec<usize>> {
        let mut t = vec![Vec::new(); size];
        for (i, c) in circuits.iter().enumerate() {
            for e in c.iter() {
                t[e].push(i);
            }
        }
        t
    };

    // rarest class first, then grow a chain in which each element completes
    // or nearly completes small circuits with the prefix, so the circuit
    // pruning bites as early as possible
    let class_count = |label: u64| class1.iter().filter(|&&l| l == label).count();
    let through1_for_order = through(&circuits1);
    let mut order: Vec<usize> = Vec::with_capacity(size);
    let mut chosen = vec![false; size];
    for _ in 0..size {
        // maximize (completing, advancing) over small circuits, then prefer
        // rare classes and low ids for determinism
        let pick = (0..size)
            .filter(|&e| !chosen[e])
            .min_by_key(|&e| {
                let mut completing = 0usize;
                let mut advancing = 0usize;
                for &ci in &through1_for_order[e] {
                    let c = circuits1[ci];
                    if c.len() > 5 {
                        continue;
                    }
                    let missing = c.iter().filter(|&f| f != e && !chosen[f]).count();
                    match missing {
                        0 => completing += 1,
                        1 => advancing += 1,
                        _ => {}
                    }
                }
                (
                    usize::MAX - completing,
                    usize::MAX - advancing,
                    class_count(class1[e]),
                    e,
                )
            })
            .expect("unchosen element remains");
        chosen[pick] = true;
        order.push(pick);
    }
    let mut circuits1_sorted: Vec<u32> = circuits1.iter().map(|c| c.bits()).collect();
    let mut circuits2_sorted: Vec<u32> = circuits2.iter().map(|c| c.bits()).collect();
    circuits1_sorted.sort_unstable();
    circuits2_sorted.sort_unstable();
    let search = IsoSearch {
        through1: through(&circuits1),
        through2: through(&circuits2),
        assigned1: vec![0; circuits1.len()],
        covered2: vec![0; circuits2.len()],
        m1,
        m2,
        size,
        circuits1,
        circuits2,
        circuits1_sorted,
        circuits2_sorted,
        class1,
        class2,
        order,
        forward: vec![UNSET; size],
        backward: vec![UNSET; size],
        used2: ElementSet::EMPTY,
    };
    search.run()
}

/// Whether some minor M/C\D of `m` is isomorphic to `target`.
///
/// C ranges over independent sets of the right size, D over coindependent
/// complements, which loses no minors and prunes the search by rank and
/// corank feasibility.
pub fn has_minor(m: &Matroid, target: &Matroid) -> Result<bool, Error> {
    if target.size() > 10 {
        return Err(Error::TargetTooLarge(target.size()));
    }
    if target.size() > m.size()
        || target.full_rank() > m.full_rank()
        || target.size() - target.full_rank() > m.size() - m.full_rank()
    {
        return Ok(false);
    }
    let contract_size = m.full_rank() - target.full_rank();
    let delete_size = m.size() - target.size() - contract_size;
    let full = m.ground_set();
    let target_rank = target.full_rank();
    for c in subsets_of_size(full, contract_size) {
        if !m.is_independent(c) {
            continue;
        }
        let (after_contract, _) = m.contract(c)?;
        debug_assert_eq!(after_contract.full_rank(), target_rank);
        let rest = ElementSet::full(after_contract.size());
        for d in subsets_of_size(rest, delete_size) {
            if after_contract.rank(d.complement(after_contract.size())) != target_rank {
                continue; // deletion would drop rank
            }
            let (minor, _) = after_contract.delete(d)?;
            if is_isomorphic(&minor, target).is_some() {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph;

    fn mk4() -> Matroid {
        Matroid::cycle_matroid(graph::complete(4)).unwrap()
    }

    #[test]
    fn identity_and_relabel_orbits() {
        let m = mk4();
        let perm = [3usize, 5, 0, 2, 4, 1];
        let relabeled = m.relabeled(&perm);
        // the found bijection is the relabeling up to an automorphism of M(K4)
        let bij = is_isomorphic(&m, &relabeled).expect("relabeled copy is isomorphic");
        for bits in 0..1u32 << 6 {
            let s = ElementSet::from_bits(bits);
            let image: ElementSet = s.iter().map(|e| bij[e]).collect();
            assert_eq!(m.rank(s), relabeled.rank(image));
        }
    }

    #[test]
    fn brute_force_oracle_agrees_on_small_pairs() {
        // independent oracle: try all 720 permutations, compare all ranks
        fn brute_iso(a: &Matroid, b: &Matroid) -> bool {
            fn perms(n: usize) -> Vec<Vec<usize>> {
                if n == 1 {
                    return vec![vec![0]];
                }
                let mut out = Vec::new();
                for p in perms(n - 1) {
                    for i in 0..n {
                        let mut q: Vec<usize> = p.iter().map(|&x| x + (x >= i) as usize).collect();
                        q.push(i);
                        q.rotate_right(1);
                        out.push(q);
                    }
                }
                out
            }
            if a.size() != b.size() {
                return false;
            }
            perms(a.size())
                .into_iter()
                .any(|p| a.relabeled(&p).rank_identical(b))
        }

        let pairs = [
            (mk4(), mk4().dual(), true),
            (mk4(), Matroid::uniform(3, 6), false),
            (Matroid::uniform(2, 4), Matroid::uniform(2, 4).dual(), true),
        ];
        for (a, b, expect) in pairs {
            assert_eq!(is_isomorphic(&a, &b).is_some(), expect);
            assert_eq!(brute_iso(&a, &b), expect);
        }
    }

    #[test]
    fn bijections_preserve_rank_everywhere() {
        let a = Matroid::bond_matroid(graph::complete_bipartite(2, 3)).unwrap();
        let perm = [4usize, 2, 0, 5, 3, 1];
        let b = a.relabeled(&perm);
        let bij = is_isomorphic(&a, &b).unwrap();
        for bits in 0..1u32 << a.size() {
            let s = ElementSet::from_bits(bits);
            let image: ElementSet = s.iter().map(|e| bij[e]).collect();
            assert_eq!(a.rank(s), b.rank(image));
        }
    }

    #[test]
    fn minor_containment() {
        let u24 = Matroid::uniform(2, 4);
        assert!(has_minor(&u24, &u24).unwrap());
        let k5 = Matroid::cycle_matroid(graph::complete(5)).unwrap();
        assert!(has_minor(&k5, &mk4()).unwrap());
        assert!(!has_minor(&k5, &u24).unwrap()); // graphic excludes U2,4
        assert!(matches!(
            has_minor(&k5, &Matroid::uniform(5, 11)),
            Err(Error::TargetTooLarge(11))
        ));
    }
}

#[cfg(test)]
mod fingerprint_tests {
    use super::*;
    use crate::graph;

    #[test]
    fn fingerprints_are_relabeling_invariant() {
        let m = Matroid::bond_matroid(graph::complete_bipartite(3, 3)).unwrap();
        let perm = [8usize, 0, 3, 6, 1, 7, 2, 5, 4];
        assert_eq!(fingerprint(&m), fingerprint(&m.relabeled(&perm)));
    }

    #[test]
    fn fingerprint_mismatch_short_circuits() {
        // same size and rank, different circuit spectrum
        let a = Matroid::cycle_matroid(graph::complete(4)).unwrap();
        let b = Matroid::uniform(3, 6);
        assert_ne!(fingerprint(&a), fingerprint(&b));
        assert!(is_isomorphic(&a, &b).is_none());
    }
}
