//! Squared-cycle containment: specialized backtracking search, embedding
//! verification, and a generic subgraph-monomorphism oracle used to
//! cross-check the specialized search.

use crate::error::{Error, Result};
use crate::graph::{Bits, Graph};

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// A cyclic ordering `u_0 .. u_{ell-1}` of host vertices such that every pair
/// at cyclic distance at most two is adjacent in the host.
#[derive(Clone, Debug)]
pub struct SquaredCycleEmbedding {
    pub ell: usize,
    pub ordering: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EmbeddingCheck {
    Valid,
    /// First required host adjacency that is missing.
    MissingEdge { u: usize, v: usize },
}

/// True iff positions `i`, `j` of an `ell`-cycle are at cyclic distance <= 2.
fn positions_required(ell: usize, i: usize, j: usize) -> bool {
    let d = (i as isize - j as isize).unsigned_abs() % ell;
    d.min(ell - d) <= 2 && d != 0
}

/// Checks all required adjacencies of the ordering.
pub fn verify_embedding(g: &Graph, emb: &SquaredCycleEmbedding) -> Result<EmbeddingCheck> {
    let ell = emb.ell;
    if emb.ordering.len() != ell {
        return Err(Error::ParamOutOfRange {
            what: "ordering length",
            got: emb.ordering.len(),
            bound: "must equal ell",
        });
    }
    let mut seen = vec![false; g.n()];
    for &v in &emb.ordering {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { v, n: g.n() });
        }
        if seen[v] {
            return Err(Error::RepeatedVertex { v });
        }
        seen[v] = true;
    }
    for i in 0..ell {
        for j in i + 1..ell {
            if positions_required(ell, i, j) && !g.has_edge(emb.ordering[i], emb.ordering[j]) {
                return Ok(EmbeddingCheck::MissingEdge {
                    u: emb.ordering[i],
                    v: emb.ordering[j],
                });
            }
        }
    }
    Ok(EmbeddingCheck::Valid)
}

/// Decides whether `g` contains the squared `ell`-cycle as a subgraph
/// (not necessarily induced). `None` means exhaustively verified free.
///
/// The cyclic ordering is extended position by position; the dihedral
/// symmetry of the pattern is quotiented out by forcing `u_0` to carry the
/// minimum vertex id of the embedding and `u_1 < u_{ell-1}`.
pub fn contains_squared_cycle(
    g: &Graph,
    ell: usize,
    node_budget: Option<u64>,
) -> Result<Option<SquaredCycleEmbedding>> {
    if ell < 3 {
        return Err(Error::ParamOutOfRange {
            what: "ell",
            got: ell,
            bound: "ell >= 3",
        });
    }
    if ell > g.n() {
        return Ok(None);
    }
    let budget = node_budget.unwrap_or(DEFAULT_NODE_BUDGET);
    // every pattern vertex has degree min(4, ell-1)
    let needed_degree = 4.min(ell - 1);
    let mut candidates = Bits::EMPTY;
    for v in 0..g.n() {
        if g.degree(v) >= needed_degree {
            candidates.insert(v);
        }
    }
    let mut search = CycleSearch {
        g,
        ell,
        nodes: 0,
        budget,
        ordering: vec![0; ell],
        used: Bits::EMPTY,
    };
    for u0 in candidates.iter() {
        let mut allowed = candidates;
        allowed.keep_above(u0);
        search.ordering[0] = u0;
        search.used.insert(u0);
        let found = search.extend(1, &allowed)?;
        search.used.remove(u0);
        if found {
            let emb = SquaredCycleEmbedding {
                ell,
                ordering: search.ordering.clone(),
            };
            debug_assert_eq!(verify_embedding(g, &emb)?, EmbeddingCheck::Valid);
            return Ok(Some(emb));
        }
    }
    Ok(None)
}

struct CycleSearch<'a> {
    g: &'a Graph,
    ell: usize,
    nodes: u64,
    budget: u64,
    ordering: Vec<usize>,
    used: Bits,
}

impl CycleSearch<'_> {
    /// Union of neighborhoods over a candidate set.
    fn neighborhood_union(&self, d: &Bits) -> Bits {
        let mut u = Bits::EMPTY;
        for v in d.iter() {
            u.or_assign(self.g.row(v));
        }
        u
    }

    fn extend(&mut self, pos: usize, allowed: &Bits) -> Result<bool> {
        if pos == self.ell {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded { nodes: self.nodes });
        }
        // forward sweep of candidate domains for every open position: each
        // domain is cut by the rows of placed constraint positions and by the
        // neighborhood unions of earlier open domains. This is a sound
        // relaxation (it ignores injectivity between open positions), but an
        // empty domain proves the whole subtree is dead -- which prunes
        // part-pattern conflicts in multipartite-like hosts near the root
        // instead of at the final closure edge.
        let mut doms: Vec<Bits> = Vec::with_capacity(self.ell - pos);
        for i in pos..self.ell {
            let mut d = *allowed;
            d.andnot_assign(&self.used);
            for j in 0..i {
                if !positions_required(self.ell, i, j) {
                    continue;
                }
                if j < pos {
                    d.and_assign(self.g.row(self.ordering[j]));
                } else {
                    d.and_assign(&self.neighborhood_union(&doms[j - pos]));
                }
            }
            // cyclic constraints wrapping past the end: j > i with j placed
            // never happens (placed positions are a prefix), but position 0
            // and 1 constrain the tail and are always placed
            if d.is_empty() {
                return Ok(false);
            }
            doms.push(d);
        }
        let mut cand = doms[0];
        if pos == self.ell - 1 {
            // direction tie-break: u_1 < u_{ell-1}
            cand.keep_above(self.ordering[1]);
        }
        for v in cand.iter() {
            self.ordering[pos] = v;
            self.used.insert(v);
            let found = self.extend(pos + 1, allowed)?;
            self.used.remove(v);
            if found {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Generic subgraph-monomorphism decision by VF2-style backtracking over an
/// adjacency-guided pattern order. Cross-check oracle for the specialized
/// search; exhaustive for hosts of order at most 16.
pub fn generic_subgraph_oracle(host: &Graph, pattern: &Graph, node_budget: Option<u64>) -> Result<bool> {
    if pattern.n() > host.n() {
        return Ok(false);
    }
    if host.n() > 16 {
        return Err(Error::ParamOutOfRange {
            what: "host n",
            got: host.n(),
            bound: "host n <= 16 for exhaustive oracle",
        });
    }
    let budget = node_budget.unwrap_or(DEFAULT_NODE_BUDGET);
    // order pattern vertices so each (after the first) touches a prior one
    // when possible, highest degree first
    let pn = pattern.n();
    let mut order: Vec<usize> = Vec::with_capacity(pn);
    let mut placed = vec![false; pn];
    while order.len() < pn {
        let v = (0..pn)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let attached = pattern.neighbors(v).filter(|&u| placed[u]).count();
                (attached, pattern.degree(v))
            })
            .unwrap();
        placed[v] = true;
        order.push(v);
    }
    let mut map = vec![usize::MAX; pn];
    let mut used = vec![false; host.n()];
    let mut nodes = 0u64;
    let found = vf2_extend(host, pattern, &order, 0, &mut map, &mut used, &mut nodes, budget)?;
    Ok(found)
}

#[allow(clippy::too_many_arguments)]
fn vf2_extend(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    depth: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    nodes: &mut u64,
    budget: u64,
) -> Result<bool> {
    if depth == order.len() {
        return Ok(true);
    }
    *nodes += 1;
    if *nodes > budget {
        return Err(Error::BudgetExceeded { nodes: *nodes });
    }
    let p = order[depth];
    let pdeg = pattern.degree(p);
    'host: for h in 0..host.n() {
        if used[h] || host.degree(h) < pdeg {
            continue;
        }
        for q in pattern.neighbors(p) {
            if map[q] != usize::MAX && !host.has_edge(h, map[q]) {
                continue 'host;
            }
        }
        map[p] = h;
        used[h] = true;
        let ok = vf2_extend(host, pattern, order, depth + 1, map, used, nodes, budget)?;
        used[h] = false;
        map[p] = usize::MAX;
        if ok {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::family;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn complete_host_contains_squared_cycle() {
        let k8 = family::turan(8, 8).unwrap();
        let emb = contains_squared_cycle(&k8, 8, None).unwrap().unwrap();
        assert_eq!(verify_embedding(&k8, &emb).unwrap(), EmbeddingCheck::Valid);
    }

    #[test]
    fn gn_is_squared_c8_free() {
        let g = family::gn(20).unwrap();
        assert!(contains_squared_cycle(&g, 8, None).unwrap().is_none());
    }

    #[test]
    fn balanced_4_partite_contains_squared_c8() {
        let g = family::complete_multipartite(&[2, 2, 2, 2]).unwrap();
        let emb = contains_squared_cycle(&g, 8, None).unwrap().unwrap();
        assert_eq!(verify_embedding(&g, &emb).unwrap(), EmbeddingCheck::Valid);
    }

    #[test]
    fn identity_ordering_on_squared_cycle() {
        let g = family::squared_cycle(8).unwrap();
        let emb = SquaredCycleEmbedding {
            ell: 8,
            ordering: (0..8).collect(),
        };
        assert_eq!(verify_embedding(&g, &emb).unwrap(), EmbeddingCheck::Valid);
    }

    #[test]
    fn verify_reports_missing_pair_and_repeats() {
        let g = family::cycle(8).unwrap(); // plain cycle lacks distance-2 chords
        let emb = SquaredCycleEmbedding {
            ell: 8,
            ordering: (0..8).collect(),
        };
        assert!(matches!(
            verify_embedding(&g, &emb).unwrap(),
            EmbeddingCheck::MissingEdge { .. }
        ));
        let emb = SquaredCycleEmbedding {
            ell: 8,
            ordering: vec![0, 1, 2, 3, 4, 5, 6, 0],
        };
        assert!(matches!(
            verify_embedding(&g, &emb),
            Err(Error::RepeatedVertex { v: 0 })
        ));
    }

    #[test]
    fn oracle_basic_cases() {
        let c9sq = family::squared_cycle(9).unwrap();
        assert!(generic_subgraph_oracle(&c9sq, &c9sq, None).unwrap());
        let t12 = family::turan(12, 3).unwrap();
        let c8sq = family::squared_cycle(8).unwrap();
        assert!(!generic_subgraph_oracle(&t12, &c8sq, None).unwrap());
        let k7 = family::turan(7, 7).unwrap();
        assert!(!generic_subgraph_oracle(&k7, &c8sq, None).unwrap());
    }

    #[test]
    fn detector_agrees_with_oracle_on_random_graphs() {
        let mut rng = StdRng::seed_from_u64(0xde7ec7);
        for trial in 0..120 {
            let n = rng.gen_range(6..=11);
            let mut g = Graph::empty(n).unwrap();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.55) {
                        g.add_edge(u, v);
                    }
                }
            }
            for ell in [6, 7, 8] {
                let fast = contains_squared_cycle(&g, ell, None).unwrap();
                let slow =
                    generic_subgraph_oracle(&g, &family::squared_cycle(ell).unwrap(), None).unwrap();
                assert_eq!(fast.is_some(), slow, "trial {trial} ell {ell} {g:?}");
                if let Some(emb) = fast {
                    assert_eq!(verify_embedding(&g, &emb).unwrap(), EmbeddingCheck::Valid);
                }
            }
        }
    }

    #[test]
    fn chromatic_obstruction() {
        // 3-chromatic hosts cannot contain the 4-chromatic squared cycles
        for ell in [7, 8, 10, 11] {
            let host = family::turan(14, 3).unwrap();
            assert!(contains_squared_cycle(&host, ell, None).unwrap().is_none());
        }
    }

    #[test]
    fn budget_exhaustion_is_not_freeness() {
        let g = family::turan(16, 8).unwrap();
        assert!(matches!(
            contains_squared_cycle(&g, 8, Some(3)),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
