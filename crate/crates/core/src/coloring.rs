//! Exact chromatic numbers for small graphs and the explicit constructive
//! colorings of squared paths, squared cycles and their deleted variants.

use crate::error::{Error, Result};
use crate::graph::{family, Graph};

pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Claim {
    EqualsChi,
    UpperBound,
}

/// A proper coloring plus the claim it witnesses.
#[derive(Clone, Debug)]
pub struct ColoringCertificate {
    pub colors: Vec<usize>,
    pub num_colors: usize,
    pub claim: Claim,
}

impl ColoringCertificate {
    /// Proper, and every color id below `num_colors` is used.
    pub fn is_valid(&self, g: &Graph) -> bool {
        if self.colors.len() != g.n() {
            return false;
        }
        let mut seen = vec![false; self.num_colors];
        for (v, &c) in self.colors.iter().enumerate() {
            if c >= self.num_colors {
                return false;
            }
            seen[c] = true;
            for u in g.neighbors(v) {
                if self.colors[u] == c {
                    return false;
                }
            }
        }
        seen.iter().all(|&s| s)
    }
}

/// An ordered partition of the vertices into independent sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodPartition {
    pub parts: Vec<Vec<usize>>,
}

impl GoodPartition {
    /// Deterministic representative: parts sorted internally and by minimum
    /// vertex id, quotienting out color-label permutations.
    pub fn normalized(mut self) -> GoodPartition {
        for p in &mut self.parts {
            p.sort_unstable();
        }
        self.parts.sort_by_key(|p| p.first().copied().unwrap_or(usize::MAX));
        self
    }

    /// Each part independent in `g`, parts disjoint, union all of `V(g)`.
    pub fn is_proper(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.n()];
        for part in &self.parts {
            for (i, &u) in part.iter().enumerate() {
                if u >= g.n() || seen[u] {
                    return false;
                }
                seen[u] = true;
                for &v in &part[i + 1..] {
                    if g.has_edge(u, v) {
                        return false;
                    }
                }
            }
        }
        seen.iter().all(|&s| s)
    }
}

/// Exact chromatic number by DSATUR-ordered branch and bound with a greedy
/// clique lower bound. `n <= 64`.
pub fn chromatic_number(g: &Graph, node_budget: Option<u64>) -> Result<(usize, ColoringCertificate)> {
    if g.n() > 64 {
        return Err(Error::ParamOutOfRange {
            what: "n",
            got: g.n(),
            bound: "n <= 64 for exact chromatic number",
        });
    }
    let budget = node_budget.unwrap_or(DEFAULT_NODE_BUDGET);
    let rows: Vec<u64> = (0..g.n())
        .map(|v| g.neighbors(v).fold(0u64, |m, u| m | 1 << u))
        .collect();
    let lb = greedy_clique(g, &rows);
    let (ub, greedy_colors) = dsatur_greedy(g.n(), &rows);

    let mut search = ChiSearch {
        n: g.n(),
        rows: &rows,
        best: ub,
        best_colors: greedy_colors,
        lb,
        nodes: 0,
        budget,
    };
    if lb < ub {
        let mut colors = vec![usize::MAX; g.n()];
        let mut nc = vec![0u64; g.n()];
        search.dfs(0, 0, &mut colors, &mut nc)?;
    }
    let cert = ColoringCertificate {
        colors: search.best_colors,
        num_colors: search.best,
        claim: Claim::EqualsChi,
    };
    debug_assert!(cert.is_valid(g));
    Ok((search.best, cert))
}

struct ChiSearch<'a> {
    n: usize,
    rows: &'a [u64],
    best: usize,
    best_colors: Vec<usize>,
    lb: usize,
    nodes: u64,
    budget: u64,
}

impl ChiSearch<'_> {
    fn dfs(
        &mut self,
        colored: usize,
        used: usize,
        colors: &mut Vec<usize>,
        nc: &mut Vec<u64>,
    ) -> Result<()> {
        if self.best == self.lb {
            return Ok(()); // clique bound reached: certified optimal
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded { nodes: self.nodes });
        }
        if colored == self.n {
            if used < self.best {
                self.best = used;
                self.best_colors = colors.clone();
            }
            return Ok(());
        }
        if used >= self.best {
            return Ok(());
        }
        // DSATUR order: max saturation, then max degree among uncolored
        let v = (0..self.n)
            .filter(|&v| colors[v] == usize::MAX)
            .max_by_key(|&v| (nc[v].count_ones(), self.rows[v].count_ones()))
            .unwrap();
        let cap = (used + 1).min(self.best - 1);
        for c in 0..cap {
            if nc[v] >> c & 1 != 0 {
                continue;
            }
            colors[v] = c;
            let mut touched = 0u64;
            let mut nbrs = self.rows[v];
            while nbrs != 0 {
                let u = nbrs.trailing_zeros() as usize;
                nbrs &= nbrs - 1;
                if nc[u] >> c & 1 == 0 {
                    nc[u] |= 1 << c;
                    touched |= 1 << u;
                }
            }
            self.dfs(colored + 1, used.max(c + 1), colors, nc)?;
            while touched != 0 {
                let u = touched.trailing_zeros() as usize;
                touched &= touched - 1;
                nc[u] &= !(1 << c);
            }
            colors[v] = usize::MAX;
            if self.best == self.lb {
                return Ok(());
            }
        }
        Ok(())
    }
}

fn greedy_clique(g: &Graph, rows: &[u64]) -> usize {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(rows[v].count_ones()));
    let mut best = if g.n() > 0 { 1 } else { 0 };
    for &start in order.iter().take(g.n().min(16)) {
        let mut clique_mask = 1u64 << start;
        let mut size = 1;
        for &v in &order {
            if clique_mask >> v & 1 == 0 && clique_mask & !rows[v] == 0 {
                clique_mask |= 1 << v;
                size += 1;
            }
        }
        best = best.max(size);
    }
    best
}

fn dsatur_greedy(n: usize, rows: &[u64]) -> (usize, Vec<usize>) {
    let mut colors = vec![usize::MAX; n];
    let mut nc = vec![0u64; n];
    let mut used = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == usize::MAX)
            .max_by_key(|&v| (nc[v].count_ones(), rows[v].count_ones()))
            .unwrap();
        let c = (!nc[v]).trailing_zeros() as usize;
        colors[v] = c;
        used = used.max(c + 1);
        let mut nbrs = rows[v];
        while nbrs != 0 {
            let u = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            nc[u] |= 1 << c;
        }
    }
    (used, colors)
}

/// The 3-part residue partition of the squared path: part `i` holds the
/// vertices whose 0-based index is congruent to `i` mod 3.
pub fn residue_coloring_path(len: usize) -> Result<GoodPartition> {
    if len < 3 {
        return Err(Error::ParamOutOfRange {
            what: "len",
            got: len,
            bound: "len >= 3",
        });
    }
    let mut parts = vec![Vec::new(), Vec::new(), Vec::new()];
    for v in 0..len {
        parts[v % 3].push(v);
    }
    let gp = GoodPartition { parts };
    assert!(gp.is_proper(&family::squared_path(len)?));
    Ok(gp)
}

/// The explicit proper partition of the squared cycle: the residue 3-partition
/// when `len` is divisible by 3, otherwise the explicit 4-partition obtained
/// by reshuffling the boundary vertices.
pub fn residue_coloring_cycle(len: usize) -> Result<GoodPartition> {
    if len < 6 {
        return Err(Error::ParamOutOfRange {
            what: "len",
            got: len,
            bound: "len >= 6",
        });
    }
    let residue = residue_coloring_path(len)?.parts;
    let last = len - 1; // v_len
    let parts = match len % 3 {
        0 => residue,
        1 => {
            // V1' = V1 \ {v_len}, V4' = {v_len}
            let mut v1 = residue[0].clone();
            v1.retain(|&x| x != last);
            vec![v1, residue[1].clone(), residue[2].clone(), vec![last]]
        }
        _ => {
            // V1' = (V1 \ {v1, v4}) u {v3}, V2' = (V2 \ {v2, v_len}) u {v1},
            // V3' = (V3 \ {v3}) u {v2}, V4' = {v4, v_len}
            let mut v1: Vec<usize> = residue[0].iter().copied().filter(|&x| x != 0 && x != 3).collect();
            v1.push(2);
            let mut v2: Vec<usize> = residue[1].iter().copied().filter(|&x| x != 1 && x != last).collect();
            v2.push(0);
            let mut v3: Vec<usize> = residue[2].iter().copied().filter(|&x| x != 2).collect();
            v3.push(1);
            vec![v1, v2, v3, vec![3, last]]
        }
    };
    let gp = GoodPartition { parts };
    assert!(gp.is_proper(&family::squared_cycle(len)?));
    Ok(gp)
}

/// True iff every proper 3-coloring of the squared path induces the residue
/// partition up to permutation of the part labels, by exhaustive enumeration.
pub fn good_partition_uniqueness_check(len: usize, node_budget: Option<u64>) -> Result<bool> {
    if !(4..=20).contains(&len) {
        return Err(Error::ParamOutOfRange {
            what: "len",
            got: len,
            bound: "4 <= len <= 20",
        });
    }
    let budget = node_budget.unwrap_or(DEFAULT_NODE_BUDGET);
    let g = family::squared_path(len)?;
    let target = residue_coloring_path(len)?.normalized();
    let rows: Vec<u64> = (0..len)
        .map(|v| g.neighbors(v).fold(0u64, |m, u| m | 1 << u))
        .collect();
    let mut colors = vec![usize::MAX; len];
    let mut nodes = 0u64;
    let mut all_match = true;
    enumerate_3colorings(&rows, 0, &mut colors, &mut nodes, budget, &mut |cols| {
        let mut parts = vec![Vec::new(), Vec::new(), Vec::new()];
        for (v, &c) in cols.iter().enumerate() {
            parts[c].push(v);
        }
        let gp = GoodPartition { parts }.normalized();
        if gp != target {
            all_match = false;
        }
    })?;
    Ok(all_match)
}

fn enumerate_3colorings(
    rows: &[u64],
    v: usize,
    colors: &mut Vec<usize>,
    nodes: &mut u64,
    budget: u64,
    visit: &mut impl FnMut(&[usize]),
) -> Result<()> {
    *nodes += 1;
    if *nodes > budget {
        return Err(Error::BudgetExceeded { nodes: *nodes });
    }
    if v == rows.len() {
        visit(colors);
        return Ok(());
    }
    'color: for c in 0..3 {
        let mut nbrs = rows[v] & ((1u64 << v) - 1);
        while nbrs != 0 {
            let u = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            if colors[u] == c {
                continue 'color;
            }
        }
        colors[v] = c;
        enumerate_3colorings(rows, v + 1, colors, nodes, budget, visit)?;
        colors[v] = usize::MAX;
    }
    Ok(())
}
