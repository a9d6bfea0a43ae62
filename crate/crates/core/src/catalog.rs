//! The test universe: named matroids, 3-connected simple graphs up to
//! isomorphism, uniform matroids, and the cographic family members.

use crate::families;
use crate::graph::{self, Multigraph};
use crate::matroid::Matroid;
use crate::set::ElementSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Named,
    Graphic { graph: usize },
    Cographic { graph: usize },
    Uniform { r: usize, m: usize },
    Family { n: usize },
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub matroid: Matroid,
    pub provenance: Provenance,
}

/// The Fano plane F7: rank 3 on 7 elements, bases are the 28 non-lines.
fn fano() -> Matroid {
    let lines: [[usize; 3]; 7] = [
        [0, 1, 2],
        [0, 3, 4],
        [0, 5, 6],
        [1, 3, 5],
        [1, 4, 6],
        [2, 3, 6],
        [2, 4, 5],
    ];
    let line_masks: Vec<ElementSet> = lines.iter().map(|l| l.iter().copied().collect()).collect();
    let bases: Vec<ElementSet> = crate::set::subsets_of_size(ElementSet::full(7), 3)
        .filter(|s| !line_masks.contains(s))
        .collect();
    debug_assert_eq!(bases.len(), 28);
    Matroid::from_bases(7, &bases).expect("Fano bases satisfy exchange")
}

/// The rank-3 whirl: relax the rim triangle of the wheel M(K4).
/// With edges of K4 ordered (0,1),(0,2),(0,3),(1,2),(1,3),(2,3) and hub 0,
/// the rim is {3,4,5}; the whirl's bases are the wheel's plus the rim.
fn whirl3() -> Matroid {
    let wheel = Matroid::cycle_matroid(graph::complete(4)).expect("K4");
    let mut bases = wheel.bases();
    bases.push(ElementSet::from_elements([3, 4, 5]));
    Matroid::from_bases(6, &bases).expect("whirl bases satisfy exchange")
}

/// The twelve named matroids used throughout the checks.
pub fn named_matroids() -> Vec<CatalogEntry> {
    let entry = |name: &str, matroid: Matroid| CatalogEntry {
        name: name.to_string(),
        matroid,
        provenance: Provenance::Named,
    };
    let k4 = Matroid::cycle_matroid(graph::complete(4)).expect("K4");
    let k5 = Matroid::cycle_matroid(graph::complete(5)).expect("K5");
    let k33 = Matroid::cycle_matroid(graph::complete_bipartite(3, 3)).expect("K33");
    let f7 = fano();
    let (f7d, k5d, k33d) = (f7.dual(), k5.dual(), k33.dual());
    vec![
        entry("U_2_4", Matroid::uniform(2, 4)),
        entry("U_2_5", Matroid::uniform(2, 5)),
        entry("U_3_5", Matroid::uniform(3, 5)),
        entry("U_3_6", Matroid::uniform(3, 6)),
        entry("M_K4", k4),
        entry("W3_whirl", whirl3()),
        entry("F7", f7),
        entry("F7_dual", f7d),
        entry("M_K5", k5),
        entry("M_K5_dual", k5d),
        entry("M_K33", k33),
        entry("M_K33_dual", k33d),
    ]
}

// ---------------------------------------------------------------------------
// graph enumeration
// ---------------------------------------------------------------------------

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    // pairs in lexicographic (i, j) order
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    fn heap(k: usize, arr: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(arr.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, arr, out);
            if k.is_multiple_of(2) {
                arr.swap(i, k - 1);
            } else {
                arr.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut current, &mut out);
    out
}

/// Minimum edge encoding over all vertex permutations; the canonical key
/// identifies the isomorphism class.
fn canonical_key(n: usize, edges: &[(usize, usize)], perms: &[Vec<usize>]) -> u32 {
    let mut best = u32::MAX;
    for perm in perms {
        let mut enc = 0u32;
        for &(u, v) in edges {
            let (a, b) = (perm[u], perm[v]);
            enc |= 1 << pair_index(n, a.min(b), a.max(b));
        }
        if enc < best {
            best = enc;
        }
    }
    best
}

fn decode_key(n: usize, key: u32) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if key >> pair_index(n, i, j) & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    edges
}

/// All simple graphs on exactly `n` vertices up to isomorphism, as sorted
/// canonical keys. Built level by level: every (k+1)-vertex graph arises from
/// some k-vertex graph by attaching one fresh vertex.
fn all_graph_keys(n: usize) -> Vec<u32> {
    let mut level: Vec<u32> = vec![0]; // the 1-vertex graph
    for k in 1..n {
        let perms = permutations(k + 1);
        let mut next: Vec<u32> = Vec::new();
        for &key in &level {
            let base = decode_key(k, key);
            for attach in 0..1u32 << k {
                let mut edges = base.clone();
                for v in 0..k {
                    if attach >> v & 1 == 1 {
                        edges.push((v, k));
                    }
                }
                let canon = canonical_key(k + 1, &edges, &perms);
                if let Err(pos) = next.binary_search(&canon) {
                    next.insert(pos, canon);
                }
            }
        }
        level = next;
    }
    level
}

fn is_3_connected_graph(g: &Multigraph) -> bool {
    let n = g.vertex_count();
    if n < 4 {
        return false;
    }
    let mut adj = vec![0u32; n];
    for &(u, v) in g.edges() {
        if u != v {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    if adj.iter().any(|a| (a.count_ones() as usize) < 3) {
        return false;
    }
    let full = (1u32 << n) - 1;
    let connected_without = |removed: u32| -> bool {
        let alive = full & !removed;
        if alive == 0 {
            return false;
        }
        let start = alive.trailing_zeros() as usize;
        let mut seen = 1u32 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u32;
            let mut bits = frontier;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                next |= adj[v] & alive;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == alive
    };
    if !connected_without(0) {
        return false;
    }
    for a in 0..n {
        if !connected_without(1 << a) {
            return false;
        }
        for b in a + 1..n {
            if !connected_without(1 << a | 1 << b) {
                return false;
            }
        }
    }
    true
}

/// All simple 3-connected graphs (vertex connectivity >= 3) with between 4
/// and `max_vertices` vertices, one per isomorphism class, in deterministic
/// (vertex count, canonical key) order.
pub fn enumerate_3connected_graphs(max_vertices: usize) -> Vec<Multigraph> {
    assert!(
        (4..=7).contains(&max_vertices),
        "supported range is 4..=7 vertices"
    );
    let mut out = Vec::new();
    for n in 4..=max_vertices {
        for key in all_graph_keys(n) {
            let g = Multigraph::new(n, decode_key(n, key)).expect("decoded graph is valid");
            if is_3_connected_graph(&g) {
                out.push(g);
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// the full catalog
// ---------------------------------------------------------------------------

/// The sweep universe: named matroids, cycle and bond matroids of all
/// 3-connected simple graphs on up to 6 vertices, uniform matroids U_{r,m}
/// for 4 <= m <= 10 and 1 <= r <= m-1 (skipping the named ones), and the
/// family members for n = 3, 4.
pub fn full_catalog() -> Vec<CatalogEntry> {
    let mut out = named_matroids();
    let graphs = enumerate_3connected_graphs(6);
    // group indices per vertex count for readable names
    let mut counters = [0usize; 8];
    for (idx, g) in graphs.iter().enumerate() {
        let n = g.vertex_count();
        let tag = format!("g{n}_{}", counters[n]);
        counters[n] += 1;
        out.push(CatalogEntry {
            name: format!("cycle_{tag}"),
            matroid: Matroid::cycle_matroid(g.clone()).expect("enumerated graphs have edges"),
            provenance: Provenance::Graphic { graph: idx },
        });
        out.push(CatalogEntry {
            name: format!("bond_{tag}"),
            matroid: Matroid::bond_matroid(g.clone()).expect("enumerated graphs have edges"),
            provenance: Provenance::Cographic { graph: idx },
        });
    }
    let named_uniforms = [(2, 4), (2, 5), (3, 5), (3, 6)];
    for m in 4..=10 {
        for r in 1..m {
            if named_uniforms.contains(&(r, m)) {
                continue;
            }
            out.push(CatalogEntry {
                name: format!("U_{r}_{m}"),
                matroid: Matroid::uniform(r, m),
                provenance: Provenance::Uniform { r, m },
            });
        }
    }
    for n in 3..=4 {
        out.push(CatalogEntry {
            name: format!("family_{n}"),
            matroid: families::family_member(n).expect("n >= 3"),
            provenance: Provenance::Family { n },
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms;

    #[test]
    fn named_matroids_shapes() {
        let named = named_matroids();
        assert_eq!(named.len(), 12);
        let names: Vec<&str> = named.iter().map(|e| e.name.as_str()).collect();
        assert!(names.contains(&"F7") && names.contains(&"M_K33_dual"));
        for e in &named {
            assert!(e.matroid.size() <= 10);
        }
        let by_name = |n: &str| {
            named
                .iter()
                .find(|e| e.name == n)
                .map(|e| &e.matroid)
                .unwrap()
        };
        assert_eq!(by_name("U_2_4").bases().len(), 6);
        assert_eq!(by_name("M_K5").size(), 10);
        assert_eq!(by_name("M_K5").full_rank(), 4);
        let f7 = by_name("F7");
        assert_eq!(f7.full_rank(), 3);
        assert_eq!(f7.bases().len(), 28);
        let lines: Vec<_> = f7.circuits().into_iter().filter(|c| c.len() == 3).collect();
        assert_eq!(lines.len(), 7);
        assert!(axioms::rank_axioms_hold(f7));
        assert!(axioms::rank_axioms_hold(by_name("W3_whirl")));
    }

    #[test]
    fn whirl_is_not_the_wheel() {
        let whirl = whirl3();
        let wheel = Matroid::cycle_matroid(graph::complete(4)).unwrap();
        assert!(crate::iso::is_isomorphic(&whirl, &wheel).is_none());
        assert_eq!(whirl.bases().len(), 17);
    }

    #[test]
    fn graph_enumeration_small_counts() {
        let four = enumerate_3connected_graphs(4);
        assert_eq!(four.len(), 1); // K4 alone
        assert_eq!(four[0].edge_count(), 6);

        let five: Vec<_> = enumerate_3connected_graphs(5)
            .into_iter()
            .filter(|g| g.vertex_count() == 5)
            .collect();
        // K5, K5 minus an edge, and the wheel W4 (= K5 minus a matching)
        assert_eq!(five.len(), 3);
        let mut sizes: Vec<usize> = five.iter().map(|g| g.edge_count()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![8, 9, 10]);
    }

    #[test]
    fn golden_graph_counts() {
        // recorded from the first cross-verified run
        let graphs = enumerate_3connected_graphs(7);
        let mut per = [0usize; 8];
        for g in &graphs {
            per[g.vertex_count()] += 1;
        }
        assert_eq!(per[4..8], [1, 3, 17, 136]);
    }

    #[test]
    fn six_vertex_count_cross_checked_by_direct_enumeration() {
        // independent route: all 2^15 labeled graphs on 6 vertices, deduped
        // by canonical key, then filtered
        let perms = permutations(6);
        let mut keys = std::collections::HashSet::new();
        for bits in 0..1u32 << 15 {
            let edges = decode_key(6, bits);
            let g = Multigraph::new(6, edges.clone()).unwrap();
            if is_3_connected_graph(&g) {
                keys.insert(canonical_key(6, &edges, &perms));
            }
        }
        assert_eq!(keys.len(), 17);
    }

    #[test]
    fn enumerated_graphs_really_are_3_connected() {
        for g in enumerate_3connected_graphs(6) {
            assert!(is_3_connected_graph(&g));
            // simple: no loops, no parallel edges
            let mut seen = std::collections::HashSet::new();
            for &(u, v) in g.edges() {
                assert_ne!(u, v);
                assert!(seen.insert((u.min(v), u.max(v))));
            }
        }
    }

    #[test]
    fn catalog_names_unique() {
        let catalog = full_catalog();
        let mut names: Vec<&String> = catalog.iter().map(|e| &e.name).collect();
        let before = names.len();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), before);
        assert!(catalog.iter().any(|e| e.name == "family_3"));
        assert!(catalog.iter().any(|e| e.name == "U_5_10"));
    }
}
