//! Constructors for the named graph families.
//!
//! Labeling conventions are fixed so tests can refer to vertices by name:
//! cycles and paths use vertices `0..len-1` in order (vertex `i` is the
//! textbook `v_{i+1}` convention), Turan parts are ordered by decreasing size and
//! numbered part by part, and a join places the left operand's vertices first.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub enum GraphFamilySpec {
    Cycle { len: usize },
    Path { len: usize },
    Power { base: Box<GraphFamilySpec>, k: usize },
    Turan { n: usize, r: usize },
    CompleteMultipartite { parts: Vec<usize> },
    Join { a: Box<GraphFamilySpec>, b: Box<GraphFamilySpec> },
    /// `G(n) = K_1 + T_{n-1,3}`, the dominating vertex labeled 0.
    Gn { n: usize },
}

pub fn build(spec: &GraphFamilySpec) -> Result<Graph> {
    let g = match spec {
        GraphFamilySpec::Cycle { len } => cycle(*len)?,
        GraphFamilySpec::Path { len } => path(*len)?,
        GraphFamilySpec::Power { base, k } => power(&build(base)?, *k)?,
        GraphFamilySpec::Turan { n, r } => turan(*n, *r)?,
        GraphFamilySpec::CompleteMultipartite { parts } => complete_multipartite(parts)?,
        GraphFamilySpec::Join { a, b } => join(&build(a)?, &build(b)?)?,
        GraphFamilySpec::Gn { n } => gn(*n)?,
    };
    g.debug_check();
    Ok(g)
}

pub fn cycle(len: usize) -> Result<Graph> {
    if len < 3 {
        return Err(Error::ParamOutOfRange {
            what: "cycle length",
            got: len,
            bound: "len >= 3",
        });
    }
    let mut g = Graph::empty(len)?;
    for i in 0..len {
        g.add_edge(i, (i + 1) % len);
    }
    Ok(g)
}

pub fn path(len: usize) -> Result<Graph> {
    if len < 1 {
        return Err(Error::ParamOutOfRange {
            what: "path length",
            got: len,
            bound: "len >= 1",
        });
    }
    let mut g = Graph::empty(len)?;
    for i in 1..len {
        g.add_edge(i - 1, i);
    }
    Ok(g)
}

/// `k`-th power: joins all pairs at distance at most `k` in `base`.
pub fn power(base: &Graph, k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::ParamOutOfRange {
            what: "power k",
            got: k,
            bound: "k >= 1",
        });
    }
    let n = base.n();
    let mut g = base.clone();
    // BFS from every vertex up to depth k
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if dist[u] == k {
                continue;
            }
            for v in base.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        for v in 0..n {
            if v != s && dist[v] <= k {
                g.add_edge(s, v);
            }
        }
    }
    Ok(g)
}

/// The squared cycle on `len` vertices in cyclic order.
pub fn squared_cycle(len: usize) -> Result<Graph> {
    power(&cycle(len)?, 2)
}

pub fn squared_path(len: usize) -> Result<Graph> {
    power(&path(len)?, 2)
}

/// Turan graph: complete `r`-partite, part sizes as equal as possible,
/// larger parts first.
pub fn turan(n: usize, r: usize) -> Result<Graph> {
    if r < 1 {
        return Err(Error::ParamOutOfRange {
            what: "turan r",
            got: r,
            bound: "r >= 1",
        });
    }
    if n < r {
        return Err(Error::ParamOutOfRange {
            what: "turan n",
            got: n,
            bound: "n >= r (no empty parts)",
        });
    }
    complete_multipartite(&turan_part_sizes(n, r))
}

pub fn turan_part_sizes(n: usize, r: usize) -> Vec<usize> {
    let big = n % r;
    let mut sizes = vec![n / r + 1; big];
    sizes.extend(std::iter::repeat(n / r).take(r - big));
    sizes
}

/// Complete multipartite graph with the given part sizes, in the given order,
/// vertices numbered part by part.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.iter().any(|&p| p == 0) {
        return Err(Error::ParamOutOfRange {
            what: "part size",
            got: 0,
            bound: "every part >= 1",
        });
    }
    let n: usize = parts.iter().sum();
    let mut g = Graph::empty(n)?;
    let mut offsets = vec![0];
    for &p in parts {
        offsets.push(offsets.last().unwrap() + p);
    }
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            for u in offsets[i]..offsets[i + 1] {
                for v in offsets[j]..offsets[j + 1] {
                    g.add_edge(u, v);
                }
            }
        }
    }
    Ok(g)
}

/// Join: disjoint union plus all edges in between; `a`'s vertices come first.
pub fn join(a: &Graph, b: &Graph) -> Result<Graph> {
    let n = a.n() + b.n();
    if n > MAX_VERTICES {
        return Err(Error::ParamOutOfRange {
            what: "join order",
            got: n,
            bound: "n <= 512",
        });
    }
    let mut g = Graph::empty(n)?;
    for (u, v) in a.edges() {
        g.add_edge(u, v);
    }
    for (u, v) in b.edges() {
        g.add_edge(a.n() + u, a.n() + v);
    }
    for u in 0..a.n() {
        for v in a.n()..n {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// `G(n) = K_1 + T_{n-1,3}` with the dominating vertex labeled 0.
pub fn gn(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(Error::ParamOutOfRange {
            what: "gn n",
            got: n,
            bound: "n >= 4",
        });
    }
    join(&Graph::empty(1)?, &turan(n - 1, 3)?)
}

/// Closed form `e(T_{n,r})` for balanced parts.
pub fn turan_edge_count(n: usize, r: usize) -> usize {
    let sizes = turan_part_sizes(n, r);
    let mut e = 0;
    for i in 0..sizes.len() {
        for j in i + 1..sizes.len() {
            e += sizes[i] * sizes[j];
        }
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: pairwise cycle distances computed directly.
    fn cycle_dist(len: usize, i: usize, j: usize) -> usize {
        let d = (i as isize - j as isize).unsigned_abs();
        d.min(len - d)
    }

    #[test]
    fn squared_c5_is_k5() {
        let g = squared_cycle(5).unwrap();
        assert_eq!(g.edge_count(), 10);
        assert!(g.vertices().all(|v| g.degree(v) == 4));
    }

    #[test]
    fn first_power_is_identity() {
        let c6 = cycle(6).unwrap();
        assert_eq!(power(&c6, 1).unwrap(), c6);
    }

    #[test]
    fn squared_c6_misses_antipodal_pairs() {
        let g = squared_cycle(6).unwrap();
        for i in 0..6 {
            for j in i + 1..6 {
                assert_eq!(g.has_edge(i, j), cycle_dist(6, i, j) <= 2, "pair {i},{j}");
            }
        }
        assert!(g.vertices().all(|v| g.degree(v) == 4));
        assert_eq!(g.edge_count(), 12);
    }

    #[test]
    fn turan_edge_counts_match_closed_form() {
        assert_eq!(turan(9, 3).unwrap().edge_count(), 27);
        for r in 3..=5 {
            for n in r..=64 {
                assert_eq!(
                    turan(n, r).unwrap().edge_count(),
                    turan_edge_count(n, r),
                    "T_{{{n},{r}}}"
                );
            }
        }
    }

    #[test]
    fn gn_edge_count() {
        // e(G(n)) = floor((n-1)^2/3) + (n-1)
        let g = gn(10).unwrap();
        assert_eq!(g.edge_count(), 36);
        assert_eq!(g.degree(0), 9);
    }

    #[test]
    fn squared_path_spans_squared_cycle() {
        for len in 3..=64 {
            let p2 = squared_path(len).unwrap();
            let c2 = squared_cycle(len).unwrap();
            for (u, v) in p2.edges() {
                assert!(c2.has_edge(u, v), "len {len}: edge {u},{v}");
            }
        }
    }

    #[test]
    fn consecutive_squared_cycle_vertices_form_diamond() {
        // 0..4 on the squared 8-cycle: all pairs adjacent except (0,3)
        let g = squared_cycle(8).unwrap();
        let sub = g.induced_subgraph(&[0, 1, 2, 3]).unwrap();
        assert_eq!(sub.edge_count(), 5);
        assert!(!sub.has_edge(0, 3));
    }

    #[test]
    fn parameter_errors_name_the_bound() {
        assert!(cycle(2).is_err());
        assert!(turan(2, 3).is_err());
        assert!(power(&cycle(5).unwrap(), 0).is_err());
        assert!(complete_multipartite(&[2, 0, 2]).is_err());
    }
}
