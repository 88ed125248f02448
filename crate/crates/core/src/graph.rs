//! Labeled simple graphs with bitset neighborhoods.
//!
//! Vertices are `0..n` in memory. External formats (circuit files, JSON
//! reports) are 1-indexed and convert at the boundary.

use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

use crate::error::SimError;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
    /// XOR of `edge_key` over all edges, kept in step with every toggle so
    /// hashing costs O(1) instead of O(n²).
    fingerprint: u64,
}

/// splitmix64 of the unordered pair.
fn edge_key(a: usize, b: usize) -> u64 {
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    let mut z = ((hi as u64) << 32 | lo as u64).wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.adj.len().hash(state);
        self.fingerprint.hash(state);
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self { adj: vec![FixedBitSet::with_capacity(n); n], fingerprint: 0 }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, SimError> {
        let mut g = Self::empty(n);
        for &(a, b) in edges {
            if g.has_edge(a, b) {
                continue;
            }
            g.toggle_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    fn check(&self, v: usize) -> Result<(), SimError> {
        if v >= self.n() {
            return Err(SimError::VertexOutOfRange { vertex: v, n: self.n() });
        }
        Ok(())
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n() && self.adj[a].contains(b)
    }

    pub fn neighbors(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.count_ones(..)).sum::<usize>() / 2
    }

    pub fn average_degree(&self) -> f64 {
        if self.n() == 0 {
            return 0.0;
        }
        2.0 * self.edge_count() as f64 / self.n() as f64
    }

    /// Sorted edge list `(a, b)` with `a < b`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, row) in self.adj.iter().enumerate() {
            out.extend(row.ones().filter(|&b| b > a).map(|b| (a, b)));
        }
        out
    }

    /// A fresh empty vertex set sized for this graph.
    pub fn vertex_set(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.n())
    }

    pub fn toggle_edge(&mut self, a: usize, b: usize) -> Result<(), SimError> {
        self.check(a)?;
        self.check(b)?;
        if a == b {
            return Err(SimError::SelfLoop(a));
        }
        self.adj[a].toggle(b);
        self.adj[b].toggle(a);
        self.fingerprint ^= edge_key(a, b);
        Ok(())
    }

    /// Complements the subgraph induced on `nbhd(v)`.
    pub fn local_complement(&mut self, v: usize) -> Result<(), SimError> {
        self.check(v)?;
        let nb = self.adj[v].clone();
        self.toggle_clique(&nb);
        Ok(())
    }

    /// Toggles every edge `{x, y}` with `x ≠ y` both in `set`.
    pub(crate) fn toggle_clique(&mut self, set: &FixedBitSet) {
        for x in set.ones() {
            self.adj[x].symmetric_difference_with(set);
            self.adj[x].toggle(x);
            for y in set.ones().take_while(|&y| y < x) {
                self.fingerprint ^= edge_key(x, y);
            }
        }
        self.debug_check();
    }

    /// Toggles `{x, y}` once per ordered pair `(x ∈ left, y ∈ right)` with
    /// `x ≠ y`; pairs reached from both sides cancel.
    pub(crate) fn toggle_bipartite(&mut self, left: &FixedBitSet, right: &FixedBitSet) {
        for x in left.ones() {
            self.adj[x].symmetric_difference_with(right);
        }
        for y in right.ones() {
            for x in left.ones() {
                self.adj[y].toggle(x);
                if x != y {
                    self.fingerprint ^= edge_key(x, y);
                }
            }
        }
        // x ∈ left ∩ right toggled its own bit once from each loop
        self.debug_check();
    }

    fn debug_check(&self) {
        if cfg!(debug_assertions) {
            let fp = self.edges().into_iter().fold(0, |acc, (a, b)| acc ^ edge_key(a, b));
            debug_assert_eq!(fp, self.fingerprint, "stale fingerprint");
            for (a, row) in self.adj.iter().enumerate() {
                debug_assert!(!row.contains(a), "self-loop at {a}");
                for b in row.ones() {
                    debug_assert!(self.adj[b].contains(a), "asymmetric edge {a}-{b}");
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn toggle_edge_examples() {
        let mut g = Graph::empty(2);
        g.toggle_edge(0, 1).unwrap();
        assert_eq!(g.edges(), vec![(0, 1)]);
        g.toggle_edge(0, 1).unwrap();
        assert_eq!(g, Graph::empty(2));
        assert!(matches!(g.toggle_edge(0, 0), Err(SimError::SelfLoop(0))));
        assert!(g.toggle_edge(0, 2).is_err());
    }

    #[test]
    fn local_complement_examples() {
        // path 2–1–3 in 1-indexed labels
        let mut g = Graph::from_edges(3, &[(0, 1), (0, 2)]).unwrap();
        g.local_complement(0).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 2)]);

        let mut iso = Graph::from_edges(3, &[(1, 2)]).unwrap();
        let before = iso.clone();
        iso.local_complement(0).unwrap();
        assert_eq!(iso, before);

        let mut tri = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        tri.local_complement(0).unwrap();
        assert_eq!(tri.edges(), vec![(0, 1), (0, 2)]);

        assert!(tri.local_complement(3).is_err());
    }

    #[test]
    fn bipartite_toggle_counts_parity() {
        let mut g = Graph::empty(4);
        let mut a = g.vertex_set();
        let mut b = g.vertex_set();
        a.extend([0, 1]);
        b.extend([1, 2]);
        g.toggle_bipartite(&a, &b);
        // ordered pairs (0,1),(0,2),(1,2); (1,1) skipped; {0,1} once, {0,2} once, {1,2} once
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 2)]);
        let mut g = Graph::empty(3);
        let mut ab = g.vertex_set();
        ab.extend([0, 1]);
        g.toggle_bipartite(&ab, &ab);
        // (0,1) and (1,0) cancel
        assert_eq!(g.edges(), vec![]);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..9).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
                let mut g = Graph::empty(n);
                for a in 0..n {
                    for b in a + 1..n {
                        if bits[a * n + b] {
                            g.toggle_edge(a, b).unwrap();
                        }
                    }
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn local_complement_is_an_involution(g in arb_graph(), v in 0usize..8) {
            let v = v % g.n();
            let mut h = g.clone();
            h.local_complement(v).unwrap();
            h.local_complement(v).unwrap();
            prop_assert_eq!(h, g);
        }

        #[test]
        fn local_complement_preserves_edges_at_v(g in arb_graph(), v in 0usize..8) {
            let v = v % g.n();
            let mut h = g.clone();
            h.local_complement(v).unwrap();
            prop_assert_eq!(h.neighbors(v), g.neighbors(v));
            for a in 0..g.n() {
                for b in 0..g.n() {
                    let inside = g.has_edge(v, a) && g.has_edge(v, b) && a != b;
                    prop_assert_eq!(h.has_edge(a, b), g.has_edge(a, b) ^ inside);
                }
            }
        }

        #[test]
        fn fingerprint_tracks_edges(
            g in arb_graph(),
            ops in proptest::collection::vec((0usize..4, 0usize..8, 0usize..8, any::<u8>(), any::<u8>()), 0..12),
        ) {
            let mut g = g;
            let n = g.n();
            let set = |bits: u8| {
                let mut s = FixedBitSet::with_capacity(n);
                s.extend((0..n).filter(|&i| bits >> i & 1 == 1));
                s
            };
            for (kind, a, b, l, r) in ops {
                let (a, b) = (a % n, b % n);
                match kind {
                    0 if a != b => g.toggle_edge(a, b).unwrap(),
                    1 => g.local_complement(a).unwrap(),
                    2 => g.toggle_clique(&set(l)),
                    _ => g.toggle_bipartite(&set(l), &set(r)),
                }
            }
            let rebuilt = Graph::from_edges(n, &g.edges()).unwrap();
            prop_assert_eq!(&rebuilt, &g);
            prop_assert_eq!(rebuilt.fingerprint, g.fingerprint);
        }
    }
}
