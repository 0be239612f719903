//! Maximum matching in general graphs via Edmonds' blossom algorithm.

use super::Graph;

#[derive(Clone, Debug)]
pub struct Matching {
    pub edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.edges.len()
    }
}

const NONE: usize = usize::MAX;

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    blossom: Vec<bool>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            blossom: vec![false; n],
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut on_path = vec![false; self.g.n()];
        a = self.base[a];
        loop {
            on_path[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.base[self.parent[self.mate[a]]];
        }
        b = self.base[b];
        while !on_path[b] {
            b = self.base[self.parent[self.mate[b]]];
        }
        b
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS for an augmenting path from `root`; returns its exposed endpoint.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used = vec![false; n];
        self.parent = vec![NONE; n];
        self.base = (0..n).collect();
        self.used[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let neighbors: Vec<usize> = self.g.neighbors(v).collect();
            for to in neighbors {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // odd cycle: contract the blossom
                    let curbase = self.lca(v, to);
                    self.blossom = vec![false; n];
                    self.mark_path(v, curbase, to);
                    self.mark_path(to, curbase, v);
                    for i in 0..n {
                        if self.blossom[self.base[i]] {
                            self.base[i] = curbase;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    self.used[self.mate[to]] = true;
                    queue.push_back(self.mate[to]);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }
}

/// Exact maximum matching.
pub fn max_matching(g: &Graph) -> Matching {
    let mut state = Blossom::new(g);
    for v in 0..g.n() {
        if state.mate[v] == NONE {
            if let Some(end) = state.find_path(v) {
                state.augment(end);
            }
        }
    }
    let mut edges = Vec::new();
    for v in 0..g.n() {
        if state.mate[v] != NONE && v < state.mate[v] {
            edges.push((v, state.mate[v]));
        }
    }
    // sanity: matched pairs are real, disjoint edges
    debug_assert!(edges.iter().all(|&(u, w)| g.has_edge(u, w)));
    Matching { edges }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::family;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    /// Brute-force oracle: maximum matching by recursion over edges.
    fn brute_nu(g: &Graph) -> usize {
        fn rec(edges: &[(usize, usize)], used: u64) -> usize {
            match edges.split_first() {
                None => 0,
                Some((&(u, v), rest)) => {
                    let skip = rec(rest, used);
                    if used & (1 << u) == 0 && used & (1 << v) == 0 {
                        skip.max(1 + rec(rest, used | 1 << u | 1 << v))
                    } else {
                        skip
                    }
                }
            }
        }
        rec(&g.edges(), 0)
    }

    #[test]
    fn squared_c8_has_perfect_matching() {
        let g = family::squared_cycle(8).unwrap();
        let m = max_matching(&g);
        assert_eq!(m.size(), 4);
        assert_eq!(brute_nu(&g), 4);
    }

    #[test]
    fn edgeless_and_complete() {
        assert_eq!(max_matching(&Graph::empty(5).unwrap()).size(), 0);
        assert_eq!(max_matching(&family::turan(4, 4).unwrap()).size(), 2);
    }

    #[test]
    fn odd_cycle_needs_blossoms() {
        // C_5: nu = 2; a chain of two triangles sharing structure
        assert_eq!(max_matching(&family::cycle(5).unwrap()).size(), 2);
        assert_eq!(max_matching(&family::cycle(9).unwrap()).size(), 4);
    }

    #[test]
    fn agrees_with_brute_force_on_random_graphs() {
        let mut rng = StdRng::seed_from_u64(0x1157);
        for _ in 0..500 {
            let n = rng.gen_range(2..=8);
            let mut g = Graph::empty(n).unwrap();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        g.add_edge(u, v);
                    }
                }
            }
            assert_eq!(max_matching(&g).size(), brute_nu(&g), "graph {g:?}");
        }
    }
}
