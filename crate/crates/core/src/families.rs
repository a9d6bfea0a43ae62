//! The graphs K̃₃,ₙ and their bond matroids.
//!
//! K̃₃,ₙ is K₃,ₙ with a triangle added on the size-3 part. Elements 0..3n-1
//! are the K₃,ₙ edges, ordered part-3 vertex major and part-n vertex minor;
//! elements 3n..3n+2 are the triangle edges. Keeping that order fixed means
//! the distinguished hyperplane of the bond matroid is always the mask
//! {0, .., 3n-1}.

use crate::graph::Multigraph;
use crate::iso;
use crate::matroid::Matroid;
use crate::rng::SplitMix64;
use crate::set::ElementSet;
use crate::Error;

/// Members of the cographic family exist for n >= this. The n = 2 member is
/// M*(K5 minus an edge): K̃₃,₂ is exactly K₅−e, and exhaustive sweeps show
/// the hyperplane-contraction property already holds there, so membership
/// starts at 2 rather than 3.
pub const MIN_FAMILY_N: usize = 2;

/// Build K̃₃,ₙ. Vertices 0..2 are the size-3 part, 3..n+2 the size-n part.
pub fn build_ktilde_graph(n: usize) -> Result<Multigraph, Error> {
    if n < 2 {
        return Err(Error::NTooSmall { n, min: 2 });
    }
    let mut edges = Vec::with_capacity(3 * n + 3);
    for v in 0..3 {
        for u in 0..n {
            edges.push((v, 3 + u));
        }
    }
    edges.push((0, 1));
    edges.push((0, 2));
    edges.push((1, 2));
    Multigraph::new(n + 3, edges)
}

/// The bond matroid M*(K̃₃,ₙ), graph-backed with the dual flag; rank 2n+1.
pub fn family_member(n: usize) -> Result<Matroid, Error> {
    if n < MIN_FAMILY_N {
        return Err(Error::NTooSmall {
            n,
            min: MIN_FAMILY_N,
        });
    }
    Matroid::bond_matroid(build_ktilde_graph(n)?)
}

/// The K₃,ₙ-edge hyperplane {0, .., 3n-1} of `family_member(n)`.
pub fn canonical_hyperplane(n: usize) -> ElementSet {
    ElementSet::full(3 * n)
}

/// Membership witness for the cographic family.
#[derive(Clone, Debug)]
pub struct FamilyWitness {
    pub n: usize,
    /// Candidate element id -> canonical `family_member(n)` element id.
    pub element_bijection: Vec<usize>,
    /// Image of the K₃,ₙ edges in the candidate's labeling.
    pub hyperplane: ElementSet,
}

impl FamilyWitness {
    /// Re-verify the witness against the candidate: the bijection preserves
    /// all circuits up to size 4 and ranks on 1000 seeded random subsets,
    /// and the hyperplane is closed with size 3n and rank r(M)-1.
    pub fn verify(&self, candidate: &Matroid) -> bool {
        let canonical = match family_member(self.n) {
            Ok(m) => m,
            Err(_) => return false,
        };
        if candidate.size() != canonical.size() {
            return false;
        }
        let small_circuits = |m: &Matroid| -> Vec<ElementSet> {
            m.circuits().into_iter().filter(|c| c.len() <= 4).collect()
        };
        let mut mapped: Vec<ElementSet> = small_circuits(candidate)
            .iter()
            .map(|c| c.iter().map(|e| self.element_bijection[e]).collect())
            .collect();
        mapped.sort_unstable();
        if mapped != small_circuits(&canonical) {
            return false;
        }
        let mut rng = SplitMix64::derived(0, "family-witness");
        for _ in 0..1000 {
            let a = ElementSet::from_bits(rng.mask(candidate.size()));
            let image: ElementSet = a.iter().map(|e| self.element_bijection[e]).collect();
            if candidate.rank(a) != canonical.rank(image) {
                return false;
            }
        }
        if self.hyperplane.len() != 3 * self.n {
            return false;
        }
        candidate.rank(self.hyperplane) + 1 == candidate.full_rank()
            && candidate.is_closed(self.hyperplane)
    }
}

/// Decide membership in the cographic family: present exactly when
/// |E| = 3n+3 for some n >= 2 and the matroid is isomorphic to
/// `family_member(n)`.
pub fn is_in_p_star(m: &Matroid) -> Option<FamilyWitness> {
    let size = m.size();
    if size < 3 * MIN_FAMILY_N + 3 || !size.is_multiple_of(3) {
        return None;
    }
    let n = size / 3 - 1;
    let canonical = family_member(n).ok()?;
    let bijection = iso::is_isomorphic(m, &canonical)?;
    let hyperplane: ElementSet = (0..size).filter(|&e| bijection[e] < 3 * n).collect();
    let witness = FamilyWitness {
        n,
        element_bijection: bijection,
        hyperplane,
    };
    debug_assert!(witness.verify(m));
    Some(witness)
}

/// The dual description: true when the ground set splits into a triangle
/// {c1,c2,c3} and n >= 2 triads T_i with each restriction to the triangle
/// plus one triad isomorphic to M(K4). Agrees with `is_in_p_star` applied to
/// the dual on every input.
pub fn p_description_check(m: &Matroid) -> bool {
    let size = m.size();
    if size < 3 * MIN_FAMILY_N + 3 || !size.is_multiple_of(3) {
        return false;
    }
    let mk4 = Matroid::cycle_matroid(crate::graph::complete(4)).expect("K4");
    let triangles: Vec<ElementSet> = m.circuits().into_iter().filter(|c| c.len() == 3).collect();
    let triads: Vec<ElementSet> = m
        .cocircuits()
        .into_iter()
        .filter(|c| c.len() == 3)
        .collect();
    if triangles.is_empty() {
        return false;
    }

    fn cover(
        m: &Matroid,
        mk4: &Matroid,
        triangle: ElementSet,
        triads: &[ElementSet],
        assigned: ElementSet,
    ) -> bool {
        let remaining = assigned.complement(m.size());
        let seed = match remaining.min_element() {
            None => return true,
            Some(e) => e,
        };
        for t in triads.iter().filter(|t| t.contains(seed)) {
            if !t.is_subset_of(remaining) {
                continue;
            }
            let (block, _) = m
                .restriction(triangle.union(*t))
                .expect("restriction to six elements");
            if iso::is_isomorphic(&block, mk4).is_none() {
                continue;
            }
            if cover(m, mk4, triangle, triads, assigned.union(*t)) {
                return true;
            }
        }
        false
    }

    triangles.iter().any(|&c| cover(m, &mk4, c, &triads, c))
}
