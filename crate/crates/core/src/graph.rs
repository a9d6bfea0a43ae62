//! Multigraphs backing graphic and cographic matroids.

use crate::set::ElementSet;
use crate::Error;

/// A multigraph on vertices `0..vertex_count`. Edge `i` is element `i` of the
/// cycle matroid; parallel edges and loops are allowed. Edge order is part of
/// the identity of the graph and survives serialization round-trips.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

/// Vertex limit for the stack-allocated union-find used by rank queries.
pub const MAX_VERTICES: usize = 32;

impl Multigraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self, Error> {
        if vertex_count > MAX_VERTICES {
            return Err(Error::TooManyVertices(vertex_count));
        }
        if edges.len() > crate::MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge(edges.len()));
        }
        for &(u, v) in &edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::ElementOutOfRange {
                    element: u.max(v),
                    size: vertex_count,
                });
            }
        }
        Ok(Multigraph {
            vertex_count,
            edges,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Rank of an edge subset in the cycle matroid: touched vertices minus
    /// connected components of the induced subgraph.
    pub fn rank_of(&self, mask: ElementSet) -> usize {
        let mut parent = [u8::MAX; MAX_VERTICES];
        let mut touched = 0usize;
        let mut components = 0usize;
        let mut bits = mask.bits();
        while bits != 0 {
            let e = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let (u, v) = self.edges[e];
            for w in [u, v] {
                if parent[w] == u8::MAX {
                    parent[w] = w as u8;
                    touched += 1;
                    components += 1;
                }
            }
            let ru = find(&mut parent, u);
            let rv = find(&mut parent, v);
            if ru != rv {
                parent[ru as usize] = rv;
                components -= 1;
            }
        }
        touched - components
    }

    pub fn full_rank(&self) -> usize {
        self.rank_of(ElementSet::full(self.edges.len()))
    }

    /// Remove the edges in `mask`; vertices are kept. Surviving edges are
    /// re-indexed densely in their original order.
    pub fn delete_edges(&self, mask: ElementSet) -> Multigraph {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| !mask.contains(*i))
            .map(|(_, &e)| e)
            .collect();
        Multigraph {
            vertex_count: self.vertex_count,
            edges,
        }
    }

    /// Contract the edges in `mask`: identified endpoints merge, the
    /// contracted edges disappear, and the remaining vertices are renumbered
    /// densely by ascending old root id. Contracting a loop just removes it.
    pub fn contract_edges(&self, mask: ElementSet) -> Multigraph {
        let mut parent: Vec<usize> = (0..self.vertex_count).collect();
        fn root(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in mask.iter() {
            let (u, v) = self.edges[e];
            let (ru, rv) = (root(&mut parent, u), root(&mut parent, v));
            if ru != rv {
                parent[ru.max(rv)] = ru.min(rv);
            }
        }
        let mut new_id = vec![usize::MAX; self.vertex_count];
        let mut next = 0;
        #[allow(clippy::needless_range_loop)] // root() needs &mut parent
        for v in 0..self.vertex_count {
            if root(&mut parent, v) == v {
                new_id[v] = next;
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| !mask.contains(*i))
            .map(|(_, &(u, v))| (new_id[root(&mut parent, u)], new_id[root(&mut parent, v)]))
            .collect();
        Multigraph {
            vertex_count: next,
            edges,
        }
    }

    /// Adjacency as vertex bit masks (parallel edges collapsed, loops ignored).
    fn adjacency(&self) -> Vec<u32> {
        let mut adj = vec![0u32; self.vertex_count];
        for &(u, v) in &self.edges {
            if u != v {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        adj
    }

    fn connected_within(adj: &[u32], vertex_mask: u32) -> bool {
        let start = vertex_mask.trailing_zeros() as usize;
        if vertex_mask == 0 {
            return true;
        }
        let mut seen = 1u32 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u32;
            let mut bits = frontier;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                next |= adj[v] & vertex_mask;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen & vertex_mask == vertex_mask
    }

    /// Minimal edge cuts (bonds). These are the cocircuits of the cycle
    /// matroid. Each bond is the edge set δ(S) for a vertex split (S, T) of a
    /// connected component with both sides inducing connected subgraphs.
    pub fn bonds(&self) -> Vec<ElementSet> {
        let adj = self.adjacency();
        // components over vertices that touch at least one edge
        let mut touched = 0u32;
        for &(u, v) in &self.edges {
            touched |= 1 << u | 1 << v;
        }
        let mut component_of = vec![usize::MAX; self.vertex_count];
        let mut components: Vec<u32> = Vec::new();
        for v in 0..self.vertex_count {
            if touched >> v & 1 == 0 || component_of[v] != usize::MAX {
                continue;
            }
            let mut comp = 1u32 << v;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u32;
                let mut bits = frontier;
                while bits != 0 {
                    let w = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    next |= adj[w];
                }
                frontier = next & !comp;
                comp |= next;
            }
            let idx = components.len();
            let mut bits = comp;
            while bits != 0 {
                let w = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                component_of[w] = idx;
            }
            components.push(comp);
        }

        let mut out = Vec::new();
        for comp in components {
            let verts: Vec<usize> = (0..self.vertex_count)
                .filter(|&v| comp >> v & 1 == 1)
                .collect();
            let k = verts.len();
            if k < 2 {
                continue;
            }
            // fix verts[0] on side S; enumerate the rest
            for pick in 0..(1u32 << (k - 1)) {
                let mut side = 1u32 << verts[0];
                for (i, &v) in verts.iter().enumerate().skip(1) {
                    if pick >> (i - 1) & 1 == 1 {
                        side |= 1 << v;
                    }
                }
                let other = comp & !side;
                if other == 0 {
                    continue;
                }
                if !Self::connected_within(&adj, side) || !Self::connected_within(&adj, other) {
                    continue;
                }
                let mut cut = 0u32;
                for (i, &(u, v)) in self.edges.iter().enumerate() {
                    if u != v && (side >> u & 1) != (side >> v & 1) {
                        cut |= 1 << i;
                    }
                }
                if cut != 0 {
                    out.push(ElementSet::from_bits(cut));
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

#[inline]
fn find(parent: &mut [u8; MAX_VERTICES], x: usize) -> u8 {
    let mut x = x as u8;
    while parent[x as usize] != x {
        parent[x as usize] = parent[parent[x as usize] as usize];
        x = parent[x as usize];
    }
    x
}

/// The complete graph on `n` vertices, edges in ascending (u, v) order.
pub fn complete(n: usize) -> Multigraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Multigraph::new(n, edges).expect("complete graph within limits")
}

/// The complete bipartite graph K_{a,b}, parts {0..a} and {a..a+b}, edges in
/// (left-major, right-minor) order.
pub fn complete_bipartite(a: usize, b: usize) -> Multigraph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    Multigraph::new(a + b, edges).expect("bipartite graph within limits")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_rank_is_three() {
        let g = complete(4);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.full_rank(), 3);
    }

    #[test]
    fn loops_and_parallels_count_correctly() {
        // triangle with one doubled edge and a loop
        let g = Multigraph::new(3, vec![(0, 1), (0, 1), (1, 2), (2, 0), (2, 2)]).unwrap();
        assert_eq!(g.full_rank(), 2);
        assert_eq!(g.rank_of(ElementSet::from_elements([4])), 0); // loop
        assert_eq!(g.rank_of(ElementSet::from_elements([0, 1])), 1); // parallel pair
    }

    #[test]
    fn contraction_merges_endpoints() {
        let g = complete(4);
        let c = g.contract_edges(ElementSet::singleton(0)); // contract (0,1)
        assert_eq!(c.vertex_count(), 3);
        assert_eq!(c.edge_count(), 5);
        assert_eq!(c.full_rank(), 2);
        // edges (0,2) and (1,2) become parallel after merging 0 and 1
        let parallels = c
            .edges()
            .iter()
            .filter(|&&(u, v)| (u.min(v), u.max(v)) == (0, 1))
            .count();
        assert_eq!(parallels, 2);
    }

    #[test]
    fn bonds_of_k4_are_vertex_stars_and_nothing_smaller() {
        let g = complete(4);
        let bonds = g.bonds();
        // K4: 4 vertex stars (size 3) and 3 "two/two" splits (size 4)
        assert_eq!(bonds.len(), 7);
        assert_eq!(bonds.iter().filter(|b| b.len() == 3).count(), 4);
        assert_eq!(bonds.iter().filter(|b| b.len() == 4).count(), 3);
    }

    #[test]
    fn bridge_is_a_singleton_bond() {
        // path 0-1-2
        let g = Multigraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let bonds = g.bonds();
        assert_eq!(bonds.len(), 2);
        assert!(bonds.iter().all(|b| b.len() == 1));
    }
}
