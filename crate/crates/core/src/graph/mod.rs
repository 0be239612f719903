//! Immutable simple undirected graphs with bitset adjacency rows, the named
//! graph families, and elementary statistics.

mod bits;
pub mod dimacs;
pub mod family;
pub mod graph6;
mod matching;

pub use bits::{Bits, MAX_VERTICES};
pub use dimacs::{read_dimacs, write_dimacs};
pub use family::{build, GraphFamilySpec};
pub use graph6::{read_graph6, write_graph6};
pub use matching::{max_matching, Matching};

use crate::error::{Error, Result};

/// Simple undirected graph on `n` vertices, `1 <= n <= 512`.
///
/// Row `v` of `adj` holds the neighbors of `v`. Symmetry and irreflexivity
/// are maintained by construction; `debug_check` re-asserts them.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Bits>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Graph> {
        if n < 1 || n > MAX_VERTICES {
            return Err(Error::ParamOutOfRange {
                what: "n",
                got: n,
                bound: "1 <= n <= 512",
            });
        }
        Ok(Graph {
            n,
            adj: vec![Bits::EMPTY; n],
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    #[inline]
    pub fn row(&self, v: usize) -> &Bits {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count()).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Component labels, 0-based, in order of first appearance.
    pub fn components(&self) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = next;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for v in self.adj[u].iter() {
                    if label[v] == usize::MAX {
                        label[v] = next;
                        stack.push(v);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn is_connected(&self) -> bool {
        self.components().iter().all(|&c| c == 0)
    }

    /// Order-preserving relabeled induced subgraph.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        for &v in vertices {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { v, n: self.n });
            }
        }
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut sub = Graph::empty(sorted.len())?;
        for (i, &u) in sorted.iter().enumerate() {
            for (j, &v) in sorted.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    sub.add_edge(i, j);
                }
            }
        }
        sub.debug_check();
        Ok(sub)
    }

    /// Deleting an edge that is not present is an error, not a no-op.
    pub fn delete_edges(&self, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = self.clone();
        for &(u, v) in edges {
            if u >= self.n || v >= self.n {
                let bad = if u >= self.n { u } else { v };
                return Err(Error::VertexOutOfRange { v: bad, n: self.n });
            }
            if !g.has_edge(u, v) {
                return Err(Error::EdgeNotPresent { u, v });
            }
            g.remove_edge(u, v);
        }
        g.debug_check();
        Ok(g)
    }

    /// Vertex deletion; remaining vertices are relabeled by closing the gap.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }

    /// Asserts the symmetry and irreflexivity invariants.
    pub fn debug_check(&self) {
        if cfg!(debug_assertions) {
            for u in 0..self.n {
                debug_assert!(!self.adj[u].contains(u), "loop at {u}");
                for v in self.adj[u].iter() {
                    debug_assert!(v < self.n);
                    debug_assert!(self.adj[v].contains(u), "asymmetric pair {u},{v}");
                }
            }
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, e={}, edges={:?})", self.n, self.edge_count(), self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_count_is_half_popcount_sum() {
        let mut g = Graph::empty(5).unwrap();
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(3, 4);
        let popsum: usize = (0..5).map(|v| g.degree(v)).sum();
        assert_eq!(g.edge_count(), popsum / 2);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn k1_has_no_edges() {
        let g = Graph::empty(1).unwrap();
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn induced_subgraph_of_k5_is_k3() {
        let g = build(&GraphFamilySpec::Turan { n: 5, r: 5 }).unwrap();
        let sub = g.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(sub.n(), 3);
        assert_eq!(sub.edge_count(), 3);
    }

    #[test]
    fn single_vertex_induced_subgraph_is_k1() {
        let g = build(&GraphFamilySpec::Cycle { len: 5 }).unwrap();
        let sub = g.induced_subgraph(&[2]).unwrap();
        assert_eq!(sub.n(), 1);
        assert_eq!(sub.edge_count(), 0);
    }

    #[test]
    fn induced_subgraph_rejects_bad_vertex() {
        let g = Graph::empty(3).unwrap();
        assert!(matches!(
            g.induced_subgraph(&[0, 7]),
            Err(Error::VertexOutOfRange { v: 7, .. })
        ));
    }

    #[test]
    fn k3_minus_edge_is_p3() {
        let k3 = build(&GraphFamilySpec::Cycle { len: 3 }).unwrap();
        let p3 = k3.delete_edges(&[(0, 2)]).unwrap();
        assert_eq!(p3.edge_count(), 2);
        assert_eq!(p3.degree(1), 2);
    }

    #[test]
    fn deleting_missing_edge_is_an_error() {
        let g = Graph::empty(4).unwrap();
        assert!(matches!(
            g.delete_edges(&[(0, 1)]),
            Err(Error::EdgeNotPresent { u: 0, v: 1 })
        ));
    }

    #[test]
    fn delete_vertex_relabels() {
        let mut g = Graph::empty(4).unwrap();
        g.add_edge(0, 3);
        g.add_edge(1, 2);
        let h = g.delete_vertex(1).unwrap();
        assert_eq!(h.n(), 3);
        // old 3 becomes 2, old 2 becomes 1
        assert!(h.has_edge(0, 2));
        assert!(!h.has_edge(0, 1));
    }

    #[test]
    fn delete_then_readd_roundtrips() {
        let g = build(&GraphFamilySpec::Gn { n: 12 }).unwrap();
        let mut h = g.delete_edges(&[(0, 5)]).unwrap();
        h.add_edge(0, 5);
        assert_eq!(g, h);
    }
}
