//! Per-graph statistics used by the extremal argument: the maximum-cross-edge
//! tripartition, the low-degree set, the high-internal-degree sets, trimmed
//! parts, part-wise matching numbers, and predicate reports over them.

use crate::error::{Error, Result};
use crate::graph::{max_matching, Graph};
use crate::spectral;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub const DEFAULT_ETA: f64 = 1e-4;

#[derive(Clone, Debug)]
pub struct TriPartition {
    pub parts: [Vec<usize>; 3],
    pub cross_edges: usize,
    pub internal_edges: usize,
}

impl TriPartition {
    fn from_assignment(g: &Graph, assign: &[usize]) -> TriPartition {
        let mut parts: [Vec<usize>; 3] = Default::default();
        for (v, &p) in assign.iter().enumerate() {
            parts[p].push(v);
        }
        let internal: usize = (0..3)
            .map(|p| {
                let mut e = 0;
                for (i, &u) in parts[p].iter().enumerate() {
                    for &v in &parts[p][i + 1..] {
                        e += g.has_edge(u, v) as usize;
                    }
                }
                e
            })
            .sum();
        TriPartition {
            parts,
            cross_edges: g.edge_count() - internal,
            internal_edges: internal,
        }
    }

    pub fn assignment(&self, n: usize) -> Vec<usize> {
        let mut assign = vec![0; n];
        for (p, part) in self.parts.iter().enumerate() {
            for &v in part {
                assign[v] = p;
            }
        }
        assign
    }

    /// `d_{V_i}(u) <= d_{V_j}(u)` for `u` in `V_i` and every other `j`:
    /// no single-vertex move increases the cross edge count.
    pub fn is_move_optimal(&self, g: &Graph) -> bool {
        let assign = self.assignment(g.n());
        for v in 0..g.n() {
            let mut d = [0usize; 3];
            for u in g.neighbors(v) {
                d[assign[u]] += 1;
            }
            let home = d[assign[v]];
            if (0..3).any(|j| d[j] < home) {
                return false;
            }
        }
        true
    }
}

#[derive(Clone, Copy, Debug)]
pub enum CutMode {
    /// Global maximizer by assignment enumeration; `n <= 15`.
    Exact,
    /// Seeded multi-restart single-vertex-move local search.
    Local { restarts: u32, seed: u64 },
}

pub const DEFAULT_LOCAL: CutMode = CutMode::Local {
    restarts: 8,
    seed: 1,
};

pub fn max_cross_tripartition(g: &Graph, mode: CutMode) -> Result<TriPartition> {
    match mode {
        CutMode::Exact => exact_cut(g),
        CutMode::Local { restarts, seed } => Ok(local_cut(g, restarts, seed)),
    }
}

fn exact_cut(g: &Graph) -> Result<TriPartition> {
    let n = g.n();
    if n > 15 {
        return Err(Error::ParamOutOfRange {
            what: "n",
            got: n,
            bound: "n <= 15 for exact tripartition",
        });
    }
    let mut assign = vec![0usize; n];
    let mut best_internal = usize::MAX;
    let mut best_assign = assign.clone();
    // vertex 0 pinned to part 0; a new part index may be opened only in order
    fn rec(
        g: &Graph,
        v: usize,
        used_parts: usize,
        internal: usize,
        assign: &mut Vec<usize>,
        best_internal: &mut usize,
        best_assign: &mut Vec<usize>,
    ) {
        if internal >= *best_internal {
            return;
        }
        if v == g.n() {
            *best_internal = internal;
            best_assign.clone_from(assign);
            return;
        }
        for p in 0..=used_parts.min(2) {
            let added = g.neighbors(v).filter(|&u| u < v && assign[u] == p).count();
            assign[v] = p;
            rec(
                g,
                v + 1,
                used_parts.max(p + 1),
                internal + added,
                assign,
                best_internal,
                best_assign,
            );
        }
    }
    rec(g, 1, 1, 0, &mut assign, &mut best_internal, &mut best_assign);
    Ok(TriPartition::from_assignment(g, &best_assign))
}

fn local_cut(g: &Graph, restarts: u32, seed: u64) -> TriPartition {
    let runs: Vec<TriPartition> = (0..restarts.max(1))
        .into_par_iter()
        .map(|r| {
            let mut order: Vec<usize> = (0..g.n()).collect();
            if r > 0 {
                let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(r as u64));
                order.shuffle(&mut rng);
            }
            let mut assign = vec![0usize; g.n()];
            for (i, &v) in order.iter().enumerate() {
                assign[v] = i % 3;
            }
            local_sweep(g, &mut assign);
            TriPartition::from_assignment(g, &assign)
        })
        .collect();
    // merge by best cross edges, then lowest restart index
    let best = runs
        .into_iter()
        .enumerate()
        .max_by(|(i, a), (j, b)| (a.cross_edges, std::cmp::Reverse(*i)).cmp(&(b.cross_edges, std::cmp::Reverse(*j))))
        .map(|(_, t)| t)
        .unwrap();
    debug_assert!(best.is_move_optimal(g));
    best
}

/// Moves a vertex only on strict improvement, scanning by vertex id, until a
/// full sweep makes no move.
fn local_sweep(g: &Graph, assign: &mut [usize]) {
    let mut part_deg = vec![[0usize; 3]; g.n()];
    for v in 0..g.n() {
        for u in g.neighbors(v) {
            part_deg[v][assign[u]] += 1;
        }
    }
    loop {
        let mut moved = false;
        for v in 0..g.n() {
            let home = assign[v];
            let mut target = home;
            for j in 0..3 {
                if part_deg[v][j] < part_deg[v][target] {
                    target = j;
                }
            }
            if part_deg[v][target] < part_deg[v][home] {
                assign[v] = target;
                for u in g.neighbors(v) {
                    part_deg[u][home] -= 1;
                    part_deg[u][target] += 1;
                }
                moved = true;
            }
        }
        if !moved {
            return;
        }
    }
}

/// True iff every part size lies within `eta * n` of `n / 3`.
pub fn partition_size_check(parts: &TriPartition, eta: f64) -> bool {
    let n: usize = parts.parts.iter().map(|p| p.len()).sum();
    let third = n as f64 / 3.0;
    parts
        .parts
        .iter()
        .all(|p| (p.len() as f64 - third).abs() <= eta * n as f64)
}

#[derive(Clone, Debug)]
pub struct LambdaSets {
    pub lambda: u32,
    /// `W_i = { v in V_i : d_{V_i}(v) >= 2^lambda * eta * n }`.
    pub w_parts: [Vec<usize>; 3],
    pub w_union: Vec<usize>,
    /// `V_i \ (W u S)`.
    pub trimmed: [Vec<usize>; 3],
}

#[derive(Clone, Debug)]
pub struct ProofSets {
    pub eta: f64,
    /// `S = { v : d_G(v) <= (2/3 - 6 eta) n }`; boundary ties resolve into S.
    pub low_degree: Vec<usize>,
    pub lambda_sets: [LambdaSets; 2],
}

pub fn compute_proof_sets(g: &Graph, parts: &TriPartition, eta: f64) -> Result<ProofSets> {
    if !(eta > 0.0 && eta < 1.0 / 6.0) {
        return Err(Error::ParamOutOfRange {
            what: "eta (x 1e6)",
            got: (eta * 1e6) as usize,
            bound: "0 < eta < 1/6",
        });
    }
    let n = g.n() as f64;
    let s_threshold = (2.0 / 3.0 - 6.0 * eta) * n;
    let low_degree: Vec<usize> = (0..g.n())
        .filter(|&v| g.degree(v) as f64 <= s_threshold)
        .collect();
    let assign = parts.assignment(g.n());
    let internal_degree = |v: usize| g.neighbors(v).filter(|&u| assign[u] == assign[v]).count();
    let lambda_sets = [1u32, 5u32].map(|lambda| {
        let threshold = 2f64.powi(lambda as i32) * eta * n;
        let mut w_parts: [Vec<usize>; 3] = Default::default();
        for (i, part) in parts.parts.iter().enumerate() {
            for &v in part {
                if internal_degree(v) as f64 >= threshold {
                    w_parts[i].push(v);
                }
            }
        }
        let mut w_union: Vec<usize> = w_parts.iter().flatten().copied().collect();
        w_union.sort_unstable();
        let trimmed = [0, 1, 2].map(|i: usize| {
            parts.parts[i]
                .iter()
                .copied()
                .filter(|v| !w_union.contains(v) && !low_degree.contains(v))
                .collect()
        });
        LambdaSets {
            lambda,
            w_parts,
            w_union,
            trimmed,
        }
    });
    Ok(ProofSets {
        eta,
        low_degree,
        lambda_sets,
    })
}

#[derive(Clone, Debug)]
pub struct LemmaReport {
    pub lemma: String,
    pub holds: bool,
    pub quantities: Vec<(String, f64)>,
}

/// Evaluates each structural conclusion as a predicate on `g`. These are
/// claims about extremal graphs; on other inputs the report simply records
/// the measured truth values.
pub fn lemma_audit(g: &Graph, eta: f64, mode: CutMode) -> Result<Vec<LemmaReport>> {
    let parts = max_cross_tripartition(g, mode)?;
    let sets = compute_proof_sets(g, &parts, eta)?;
    let mut reports = Vec::new();

    reports.push(LemmaReport {
        lemma: "balanced-parts".into(),
        holds: partition_size_check(&parts, eta),
        quantities: (0..3)
            .map(|i| (format!("size_{}", i + 1), parts.parts[i].len() as f64))
            .chain([("cross_edges".into(), parts.cross_edges as f64)])
            .collect(),
    });

    let mut trimmed_nu_ok = true;
    let mut trimmed_quantities = Vec::new();
    for ls in &sets.lambda_sets {
        for i in 0..3 {
            let nu = if ls.trimmed[i].is_empty() {
                0
            } else {
                max_matching(&g.induced_subgraph(&ls.trimmed[i])?).size()
            };
            trimmed_quantities.push((format!("nu_{}_lambda{}", i + 1, ls.lambda), nu as f64));
            if nu > 1 {
                trimmed_nu_ok = false;
            }
        }
    }
    reports.push(LemmaReport {
        lemma: "trimmed-matching-bound".into(),
        holds: trimmed_nu_ok,
        quantities: trimmed_quantities,
    });

    reports.push(LemmaReport {
        lemma: "low-degree-set-empty".into(),
        holds: sets.low_degree.is_empty(),
        quantities: vec![("S_size".into(), sets.low_degree.len() as f64)],
    });

    let w5 = &sets.lambda_sets[1].w_union;
    reports.push(LemmaReport {
        lemma: "heavy-set-at-most-one".into(),
        holds: w5.len() <= 1,
        quantities: vec![("W5_size".into(), w5.len() as f64)],
    });

    let spec = spectral::spectral_radius(g, spectral::DEFAULT_TOL)?;
    let floor = spec.profile().ratio_floor;
    reports.push(LemmaReport {
        lemma: "eigenvector-floor".into(),
        holds: floor > 0.6,
        quantities: vec![("ratio_floor".into(), floor), ("rho".into(), spec.rho)],
    });

    let nus: Vec<usize> = (0..3)
        .map(|i| {
            if parts.parts[i].is_empty() {
                Ok(0)
            } else {
                Ok(max_matching(&g.induced_subgraph(&parts.parts[i])?).size())
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let nu_sum: usize = nus.iter().sum();
    reports.push(LemmaReport {
        lemma: "extremal-characterization".into(),
        holds: w5.len() == 1 && nu_sum == 1,
        quantities: nus
            .iter()
            .enumerate()
            .map(|(i, &nu)| (format!("nu_{}", i + 1), nu as f64))
            .chain([
                ("nu_sum".into(), nu_sum as f64),
                ("W5_size".into(), w5.len() as f64),
            ])
            .collect(),
    });

    Ok(reports)
}
