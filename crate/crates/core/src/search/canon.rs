//! Canonical forms for small graphs: the lexicographically minimum
//! upper-triangle adjacency bit string over all vertex orderings, found by
//! backtracking with prefix pruning.

use crate::error::{Error, Result};

pub const MAX_CANON_VERTICES: usize = 12;

/// Adjacency rows packed one `u16` per vertex; supports up to 16 vertices,
/// canonization restricted to 12.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    pub n: usize,
    pub rows: [u16; 16],
}

impl SmallGraph {
    pub fn empty(n: usize) -> Result<SmallGraph> {
        if n > 16 {
            return Err(Error::ParamOutOfRange {
                what: "n",
                got: n,
                bound: "n <= 16 for SmallGraph",
            });
        }
        Ok(SmallGraph { n, rows: [0; 16] })
    }

    pub fn from_graph(g: &crate::graph::Graph) -> Result<SmallGraph> {
        let mut s = SmallGraph::empty(g.n())?;
        for (u, v) in g.edges() {
            s.add_edge(u, v);
        }
        Ok(s)
    }

    pub fn to_graph(&self) -> crate::graph::Graph {
        let mut g = crate::graph::Graph::empty(self.n).unwrap();
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            ((u + 1)..self.n).filter_map(move |v| self.has_edge(u, v).then_some((u, v)))
        })
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Removes the last vertex.
    pub fn without_last(&self) -> SmallGraph {
        debug_assert!(self.n > 0);
        let n = self.n - 1;
        let mask = (1u16 << n) - 1;
        let mut rows = [0u16; 16];
        for (i, r) in rows.iter_mut().enumerate().take(n) {
            *r = self.rows[i] & mask;
        }
        SmallGraph { n, rows }
    }

    /// Relabels via `perm` where `perm[i]` is the old vertex placed at
    /// position `i`.
    pub fn relabeled(&self, perm: &[usize]) -> SmallGraph {
        let mut out = SmallGraph { n: self.n, rows: [0; 16] };
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.has_edge(perm[i], perm[j]) {
                    out.add_edge(i, j);
                }
            }
        }
        out
    }
}

/// Order plus the minimum upper-triangle bit string, packed most significant
/// pair first: bit for `(0,1)`, `(0,2)`, `(1,2)`, `(0,3)`, ... column-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub n: usize,
    pub code: u128,
}

fn column_code(g: &SmallGraph, perm: &[usize], col: usize) -> (u128, u32) {
    // bits (0,col), (1,col), .., (col-1,col) under the permutation
    let mut code = 0u128;
    for row in 0..col {
        code = code << 1 | g.has_edge(perm[row], perm[col]) as u128;
    }
    (code, col as u32)
}

struct CanonSearch<'a> {
    g: &'a SmallGraph,
    best: u128,
    best_perm: Vec<usize>,
    perm: Vec<usize>,
    used: u16,
}

impl CanonSearch<'_> {
    /// `prefix` is the code over columns `1..depth`; `bits` its length.
    fn descend(&mut self, depth: usize, prefix: u128, bits: u32) {
        let n = self.g.n;
        if depth == n {
            if prefix < self.best {
                self.best = prefix;
                self.best_perm.clone_from(&self.perm);
            }
            return;
        }
        for v in 0..n {
            if self.used >> v & 1 == 1 {
                continue;
            }
            self.perm[depth] = v;
            let (col, width) = {
                let mut code = 0u128;
                for row in 0..depth {
                    code = code << 1 | self.g.has_edge(self.perm[row], v) as u128;
                }
                (code, depth as u32)
            };
            let next = prefix << width | col;
            let next_bits = bits + width;
            // the best full code restricted to this many bits
            let total_bits = (n * (n - 1) / 2) as u32;
            let best_prefix = self.best >> (total_bits - next_bits);
            if next > best_prefix {
                continue;
            }
            self.used |= 1 << v;
            self.descend(depth + 1, next, next_bits);
            self.used &= !(1 << v);
        }
    }
}

pub fn canonical_form(g: &SmallGraph) -> Result<CanonicalForm> {
    let (form, _) = canonical_form_with_perm(g)?;
    Ok(form)
}

/// Also returns the ordering achieving the minimum (`perm[i]` = old vertex at
/// position `i`).
pub fn canonical_form_with_perm(g: &SmallGraph) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = g.n;
    if n > MAX_CANON_VERTICES {
        return Err(Error::ParamOutOfRange {
            what: "n",
            got: n,
            bound: "n <= 12 for canonical forms",
        });
    }
    if n <= 1 {
        return Ok((CanonicalForm { n, code: 0 }, (0..n).collect()));
    }
    let mut search = CanonSearch {
        g,
        best: u128::MAX >> (128 - n * (n - 1) / 2),
        best_perm: (0..n).collect(),
        perm: vec![0; n],
        used: 0,
    };
    // seed best with the identity so pruning has a real bound immediately
    let ident: Vec<usize> = (0..n).collect();
    let mut seed = 0u128;
    for col in 1..n {
        let (c, w) = column_code(g, &ident, col);
        seed = seed << w | c;
    }
    search.best = seed;
    search.descend(0, 0, 0);
    let code = search.best;
    let perm = search.best_perm.clone();
    debug_assert!({
        let relabeled = g.relabeled(&perm);
        let mut check = 0u128;
        for col in 1..n {
            let id: Vec<usize> = (0..n).collect();
            let (c, w) = column_code(&relabeled, &id, col);
            check = check << w | c;
        }
        check == code
    });
    Ok((CanonicalForm { n, code }, perm))
}

/// The canonical relabeling of `g` itself.
pub fn canonical_copy(g: &SmallGraph) -> Result<SmallGraph> {
    let (_, perm) = canonical_form_with_perm(g)?;
    Ok(g.relabeled(&perm))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use std::collections::HashSet;

    fn cycle5() -> SmallGraph {
        let mut g = SmallGraph::empty(5).unwrap();
        for v in 0..5 {
            g.add_edge(v, (v + 1) % 5);
        }
        g
    }

    #[test]
    fn relabelings_share_a_form() {
        let g = cycle5();
        let base = canonical_form(&g).unwrap();
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..50 {
            let mut perm: Vec<usize> = (0..5).collect();
            perm.shuffle(&mut rng);
            assert_eq!(canonical_form(&g.relabeled(&perm)).unwrap(), base);
        }
    }

    #[test]
    fn distinguishes_same_degree_sequences() {
        // K_3 + isolated vertex vs P_4: different graphs, canonizer must split them
        let mut a = SmallGraph::empty(4).unwrap();
        a.add_edge(0, 1);
        a.add_edge(1, 2);
        a.add_edge(0, 2);
        let mut b = SmallGraph::empty(4).unwrap();
        b.add_edge(0, 1);
        b.add_edge(1, 2);
        b.add_edge(2, 3);
        assert_ne!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
    }

    #[test]
    fn counts_forms_on_four_vertices() {
        // 11 graphs on 4 vertices up to isomorphism
        let mut forms = HashSet::new();
        for mask in 0u32..64 {
            let mut g = SmallGraph::empty(4).unwrap();
            let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    g.add_edge(u, v);
                }
            }
            forms.insert(canonical_form(&g).unwrap());
        }
        assert_eq!(forms.len(), 11);
    }

    #[test]
    fn canonical_copy_is_idempotent() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..60 {
            let n = rng.gen_range(1..=8);
            let mut g = SmallGraph::empty(n).unwrap();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        g.add_edge(u, v);
                    }
                }
            }
            let c = canonical_copy(&g).unwrap();
            assert_eq!(canonical_form(&c).unwrap(), canonical_form(&g).unwrap());
            assert_eq!(canonical_copy(&c).unwrap(), c);
        }
    }
}
