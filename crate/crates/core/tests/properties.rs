//! Cross-cutting invariants: rank axioms, closure laws, duality, minors and
//! backend agreement, over random multigraphs and the built-in catalog.

use proptest::prelude::*;

use matroid_core::axioms;
use matroid_core::catalog;
use matroid_core::connectivity::{self, lambda};
use matroid_core::format;
use matroid_core::rng::SplitMix64;
use matroid_core::set::ElementSet;
use matroid_core::{Matroid, Multigraph};

fn arb_multigraph() -> impl Strategy<Value = Multigraph> {
    (2usize..=6).prop_flat_map(|v| {
        prop::collection::vec((0..v, 0..v), 1..=9)
            .prop_map(move |edges| Multigraph::new(v, edges).expect("endpoints in range"))
    })
}

proptest! {
    #[test]
    fn cycle_matroid_satisfies_rank_axioms(g in arb_multigraph()) {
        let m = Matroid::cycle_matroid(g).unwrap();
        prop_assert!(axioms::rank_axioms_hold(&m));
    }

    #[test]
    fn dual_is_involution_on_random_graphs(g in arb_multigraph()) {
        let m = Matroid::cycle_matroid(g).unwrap();
        prop_assert!(m.dual().dual().rank_identical(&m));
    }

    #[test]
    fn lambda_is_symmetric(g in arb_multigraph(), bits in any::<u32>()) {
        let m = Matroid::cycle_matroid(g).unwrap();
        let a = ElementSet::from_bits(bits & m.ground_set().bits());
        prop_assert_eq!(lambda(&m, a), lambda(&m, a.complement(m.size())));
    }

    #[test]
    fn minor_rank_formulas_hold(g in arb_multigraph(), abits in any::<u32>(), sbits in any::<u32>()) {
        let m = Matroid::cycle_matroid(g).unwrap();
        let full = m.ground_set();
        let a = ElementSet::from_bits(abits & full.bits());
        prop_assume!(a != full);
        let (deleted, dmap) = m.delete(a).unwrap();
        let (contracted, cmap) = m.contract(a).unwrap();
        let s_new = ElementSet::from_bits(sbits) .intersect(ElementSet::full(deleted.size()));
        let s_old = dmap.unmap_set(s_new);
        prop_assert_eq!(deleted.rank(s_new), m.rank(s_old));
        let s_old_c = cmap.unmap_set(s_new);
        prop_assert_eq!(
            contracted.rank(s_new),
            m.rank(s_old_c.union(a)) - m.rank(a)
        );
    }

    #[test]
    fn id_maps_are_order_preserving(g in arb_multigraph(), abits in any::<u32>()) {
        let m = Matroid::cycle_matroid(g).unwrap();
        let a = ElementSet::from_bits(abits & m.ground_set().bits());
        prop_assume!(a != m.ground_set());
        let (minor, map) = m.delete(a).unwrap();
        prop_assert_eq!(map.len(), minor.size());
        for new in 0..map.len() {
            prop_assert_eq!(map.new_id(map.old_id(new)), Some(new));
            if new > 0 {
                prop_assert!(map.old_id(new - 1) < map.old_id(new));
            }
        }
    }

    #[test]
    fn coclosure_is_closure_in_the_dual(g in arb_multigraph(), bits in any::<u32>()) {
        let m = Matroid::cycle_matroid(g).unwrap();
        let a = ElementSet::from_bits(bits & m.ground_set().bits());
        prop_assert_eq!(m.coclosure(a), m.dual().closure(a));
    }

    #[test]
    fn matroid_files_round_trip(g in arb_multigraph()) {
        let m = Matroid::cycle_matroid(g).unwrap();
        let back = format::parse_matroid(&format::write_matroid(&m)).unwrap();
        prop_assert!(back.rank_identical(&m));
    }
}

#[test]
fn closure_laws_exhaustive_small_and_sampled_medium() {
    for e in catalog::full_catalog() {
        if e.matroid.size() <= 8 {
            assert!(axioms::closure_operator_sane(&e.matroid), "{}", e.name);
        }
    }
    // seeded spot checks on a 12-element subject
    let m = matroid_core::families::family_member(3).unwrap();
    let mut rng = SplitMix64::derived(0, "closure-laws-12");
    for _ in 0..1000 {
        let a = ElementSet::from_bits(rng.mask(12));
        let b = ElementSet::from_bits(rng.mask(12)).union(a);
        let cl_a = m.closure(a);
        assert!(a.is_subset_of(cl_a));
        assert_eq!(m.closure(cl_a), cl_a);
        assert!(cl_a.is_subset_of(m.closure(b)));
    }
}

#[test]
fn submodularity_exhaustive_on_small_catalog_entries() {
    for e in catalog::full_catalog() {
        if e.matroid.size() <= 8 {
            assert!(axioms::rank_axioms_hold(&e.matroid), "{}", e.name);
        }
    }
}

#[test]
fn vertical_partitions_match_blocked_contractions() {
    for e in catalog::full_catalog() {
        let m = &e.matroid;
        if !connectivity::is_k_connected(m, 3) {
            continue;
        }
        for z in 0..m.size() {
            let has = !connectivity::vertical_3_partitions_through(m, z).is_empty();
            assert_eq!(
                has,
                connectivity::contraction_blocked(m, z),
                "{} element {z}",
                e.name
            );
        }
    }
}

#[test]
fn series_class_circuits_across_catalog() {
    // every series class of a connected entry absorbs its closure points
    // into circuits
    let mut nonvacuous = 0;
    for e in catalog::full_catalog() {
        let m = &e.matroid;
        if !connectivity::is_k_connected(m, 2) {
            continue;
        }
        for class in m.series_classes() {
            for y in m.closure(class).minus(class).iter() {
                let candidate = class.with(y);
                let r = m.rank(candidate);
                assert_eq!(
                    r,
                    candidate.len() - 1,
                    "{}: {candidate} not a circuit",
                    e.name
                );
                for f in candidate.iter() {
                    assert_eq!(m.rank(candidate.without(f)), r, "{}", e.name);
                }
                nonvacuous += 1;
            }
        }
    }
    assert!(nonvacuous > 0, "catalog gave no series-class instances");
}

#[test]
fn seeded_coclosure_cross_check() {
    // 1000 seeded random (matroid, subset) pairs
    let entries = catalog::full_catalog();
    let mut rng = SplitMix64::derived(0, "coclosure-pairs");
    for _ in 0..1000 {
        let e = &entries[rng.below(entries.len() as u64) as usize];
        let a = ElementSet::from_bits(rng.mask(e.matroid.size()));
        assert_eq!(
            e.matroid.coclosure(a),
            e.matroid.dual().closure(a),
            "{}",
            e.name
        );
    }
}

proptest! {
    #[test]
    fn parsers_reject_garbage_without_panicking(text in "[ -~\n]{0,200}") {
        let _ = format::parse_any(&text);
        let _ = format::parse_graph(&text);
        let _ = format::parse_matroid(&text);
    }

    #[test]
    fn parsed_headers_never_lie(m in 1usize..=6, r in 0usize..=6) {
        // header/body mismatches must be rejected, not silently adjusted
        let text = format!("matroid v1\nelements {m}\nrank {r}\nbases\n0\nend\n");
        if let Ok(parsed) = format::parse_matroid(&text) {
            prop_assert_eq!(parsed.size(), m);
            prop_assert_eq!(parsed.full_rank(), r);
        }
    }
}
