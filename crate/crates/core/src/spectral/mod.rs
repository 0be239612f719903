//! Dominant adjacency eigenvalue and Perron vector computation, plus checks
//! of the spectral identities stated for the candidate extremal graphs.

pub mod jacobi;

use crate::error::{Error, Result};
use crate::graph::{family, Graph};

pub const DEFAULT_TOL: f64 = 1e-10;
pub const ITERATION_CAP: u64 = 1_000_000;

#[derive(Clone, Debug)]
pub struct SpectralResult {
    /// Dominant eigenvalue estimate.
    pub rho: f64,
    /// Unit eigenvector estimate; supported on the dominant component when
    /// the graph is disconnected.
    pub vector: Vec<f64>,
    /// `||A x - rho x||_2` at termination.
    pub residual: f64,
    pub iterations: u64,
    pub connected: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct EigenvectorProfile {
    pub max_entry_vertex: usize,
    /// `min_v x_v / x_{max}`.
    pub ratio_floor: f64,
}

impl SpectralResult {
    pub fn profile(&self) -> EigenvectorProfile {
        let mut max_v = 0;
        for (v, &x) in self.vector.iter().enumerate() {
            if x > self.vector[max_v] {
                max_v = v;
            }
        }
        let min = self.vector.iter().cloned().fold(f64::INFINITY, f64::min);
        EigenvectorProfile {
            max_entry_vertex: max_v,
            ratio_floor: min / self.vector[max_v],
        }
    }
}

/// Power iteration on `A + I` from the all-ones vector, with Rayleigh-quotient
/// estimates; the unit diagonal shift suppresses the `+-rho` oscillation on
/// bipartite graphs and is subtracted from the reported value.
///
/// Disconnected graphs are handled per component, taking the maximum and
/// flagging the result.
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<SpectralResult> {
    let comps = g.components();
    let ncomp = comps.iter().copied().max().unwrap_or(0) + 1;
    if ncomp == 1 {
        return power_iterate(g, tol).map(|mut r| {
            r.connected = true;
            r
        });
    }
    let mut best: Option<(SpectralResult, Vec<usize>)> = None;
    for c in 0..ncomp {
        let verts: Vec<usize> = (0..g.n()).filter(|&v| comps[v] == c).collect();
        let sub = g.induced_subgraph(&verts)?;
        let r = power_iterate(&sub, tol)?;
        if best.as_ref().map_or(true, |(b, _)| r.rho > b.rho) {
            best = Some((r, verts));
        }
    }
    let (r, verts) = best.unwrap();
    let mut vector = vec![0.0; g.n()];
    for (i, &v) in verts.iter().enumerate() {
        vector[v] = r.vector[i];
    }
    Ok(SpectralResult {
        rho: r.rho,
        vector,
        residual: r.residual,
        iterations: r.iterations,
        connected: false,
    })
}

fn power_iterate(g: &Graph, tol: f64) -> Result<SpectralResult> {
    let n = g.n();
    let norm0 = (n as f64).sqrt();
    let mut x = vec![1.0 / norm0; n];
    let mut y = vec![0.0; n];
    let mut iterations = 0u64;
    loop {
        iterations += 1;
        // y = (A + I) x, fixed summation order within each row
        for v in 0..n {
            let mut acc = x[v];
            for u in g.neighbors(v) {
                acc += x[u];
            }
            y[v] = acc;
        }
        let mu: f64 = x.iter().zip(y.iter()).map(|(a, b)| a * b).sum();
        let residual: f64 = x
            .iter()
            .zip(y.iter())
            .map(|(a, b)| (b - mu * a) * (b - mu * a))
            .sum::<f64>()
            .sqrt();
        if residual <= tol {
            return Ok(SpectralResult {
                rho: mu - 1.0,
                vector: x,
                residual,
                iterations,
                connected: true,
            });
        }
        if iterations >= ITERATION_CAP {
            return Err(Error::NonConvergence {
                iterations,
                residual,
            });
        }
        let norm = y.iter().map(|a| a * a).sum::<f64>().sqrt();
        for (xv, yv) in x.iter_mut().zip(y.iter()) {
            *xv = yv / norm;
        }
    }
}

/// The Rayleigh quotient of the all-ones vector: `2 e(G) / n`.
pub fn rayleigh_lower_bound(g: &Graph) -> f64 {
    2.0 * g.edge_count() as f64 / g.n() as f64
}

/// Checks of the Perron vector structure of `K_1 + K_3(n1, n2, n3)`:
/// within-part equality, the per-part closed form
/// `x_i = (rho + 1) / (rho + n_i) * x_hub`, and the defining linear system.
#[derive(Clone, Debug)]
pub struct BalanceReport {
    pub part_sizes: [usize; 3],
    pub rho: f64,
    pub hub_entry: f64,
    /// Mean Perron entry of each part.
    pub part_entries: [f64; 3],
    /// Largest within-part deviation from the part mean.
    pub within_part_spread: f64,
    /// Largest deviation from the closed form, over the three parts.
    pub closed_form_error: f64,
    /// Largest residual of the four defining linear equations.
    pub linear_system_error: f64,
    /// `(n1 - n3 - 1) * rho - n3`, positive whenever `n1 >= n3 + 2`.
    pub imbalance_sign: f64,
}

pub fn eigenvector_balance_check(n1: usize, n2: usize, n3: usize, tol: f64) -> Result<BalanceReport> {
    let g = family::build(&family::GraphFamilySpec::Join {
        a: Box::new(family::GraphFamilySpec::Turan { n: 1, r: 1 }),
        b: Box::new(family::GraphFamilySpec::CompleteMultipartite {
            parts: vec![n1, n2, n3],
        }),
    })?;
    let res = spectral_radius(&g, tol)?;
    let rho = res.rho;
    let hub = res.vector[0];
    let sizes = [n1, n2, n3];
    let mut offsets = [1usize; 3];
    offsets[1] = 1 + n1;
    offsets[2] = 1 + n1 + n2;
    let mut part_entries = [0.0; 3];
    let mut spread: f64 = 0.0;
    for i in 0..3 {
        let slice = &res.vector[offsets[i]..offsets[i] + sizes[i]];
        let mean = slice.iter().sum::<f64>() / sizes[i] as f64;
        part_entries[i] = mean;
        for &x in slice {
            spread = spread.max((x - mean).abs());
        }
    }
    let mut closed_form_error: f64 = 0.0;
    for i in 0..3 {
        let predicted = (rho + 1.0) / (rho + sizes[i] as f64) * hub;
        closed_form_error = closed_form_error.max((part_entries[i] - predicted).abs());
    }
    let [x1, x2, x3] = part_entries;
    let (f1, f2, f3) = (n1 as f64, n2 as f64, n3 as f64);
    let eqs = [
        rho * x1 - (f2 * x2 + f3 * x3 + hub),
        rho * x2 - (f1 * x1 + f3 * x3 + hub),
        rho * x3 - (f1 * x1 + f2 * x2 + hub),
        rho * hub - (f1 * x1 + f2 * x2 + f3 * x3),
    ];
    let linear_system_error = eqs.iter().fold(0.0f64, |m, e| m.max(e.abs()));
    Ok(BalanceReport {
        part_sizes: sizes,
        rho,
        hub_entry: hub,
        part_entries,
        within_part_spread: spread,
        closed_form_error,
        linear_system_error,
        imbalance_sign: (f1 - f3 - 1.0) * rho - f3,
    })
}

/// Spectral radii of the comparison graphs at order `n`.
#[derive(Clone, Debug)]
pub struct ComparisonReport {
    pub n: usize,
    pub rho_turan2: f64,
    pub rho_turan3: f64,
    pub rho_gn: f64,
    pub rayleigh_gn: f64,
}

impl ComparisonReport {
    pub fn ordering_holds(&self) -> bool {
        self.rho_turan2 < self.rho_turan3 && self.rho_turan3 < self.rho_gn
    }
}

pub fn spectral_comparisons(n: usize, tol: f64) -> Result<ComparisonReport> {
    if !(6..=512).contains(&n) {
        return Err(Error::ParamOutOfRange {
            what: "n",
            got: n,
            bound: "6 <= n <= 512",
        });
    }
    let gn = family::gn(n)?;
    Ok(ComparisonReport {
        n,
        rho_turan2: spectral_radius(&family::turan(n, 2)?, tol)?.rho,
        rho_turan3: spectral_radius(&family::turan(n, 3)?, tol)?.rho,
        rho_gn: spectral_radius(&gn, tol)?.rho,
        rayleigh_gn: rayleigh_lower_bound(&gn),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn complete_graph_rho() {
        let k4 = family::turan(4, 4).unwrap();
        let r = spectral_radius(&k4, DEFAULT_TOL).unwrap();
        assert!((r.rho - 3.0).abs() <= 1e-9);
        assert!(r.residual <= DEFAULT_TOL);
        assert!(r.connected);
        // the all-ones start vector is already the Perron vector here
        assert_eq!(r.iterations, 1);
    }

    #[test]
    fn squared_c5_is_k5() {
        let g = family::squared_cycle(5).unwrap();
        let r = spectral_radius(&g, DEFAULT_TOL).unwrap();
        assert!((r.rho - 4.0).abs() <= 1e-9);
    }

    #[test]
    fn gn_rho_exceeds_two_thirds_n() {
        let r = spectral_radius(&family::gn(12).unwrap(), DEFAULT_TOL).unwrap();
        assert!(r.rho >= 8.0);
    }

    #[test]
    fn bipartite_graphs_converge() {
        // plain power iteration would oscillate on stars; the shift fixes it
        let star = family::complete_multipartite(&[1, 4]).unwrap();
        let r = spectral_radius(&star, DEFAULT_TOL).unwrap();
        assert!((r.rho - 2.0).abs() <= 1e-8);
        assert!((rayleigh_lower_bound(&star) - 1.6).abs() < 1e-12);
    }

    #[test]
    fn rayleigh_bound_is_a_lower_bound() {
        assert!((rayleigh_lower_bound(&family::turan(4, 4).unwrap()) - 3.0).abs() < 1e-12);
        let g = family::gn(10).unwrap();
        assert!((rayleigh_lower_bound(&g) - 7.2).abs() < 1e-12);
        let rho = spectral_radius(&g, DEFAULT_TOL).unwrap().rho;
        assert!(rayleigh_lower_bound(&g) <= rho + 1e-9);
    }

    #[test]
    fn disconnected_input_is_flagged() {
        let mut g = Graph::empty(5).unwrap();
        g.add_edge(0, 1);
        g.add_edge(2, 3);
        g.add_edge(3, 4);
        g.add_edge(2, 4); // triangle dominates the single edge
        let r = spectral_radius(&g, DEFAULT_TOL).unwrap();
        assert!(!r.connected);
        assert!((r.rho - 2.0).abs() <= 1e-8);
        assert_eq!(r.vector[0], 0.0);
        assert!(r.vector[2] > 0.0);
    }

    #[test]
    fn perron_positivity_and_unit_norm() {
        let mut rng = StdRng::seed_from_u64(0x9e11);
        for _ in 0..50 {
            let n = rng.gen_range(2..=20);
            let mut g = Graph::empty(n).unwrap();
            // random connected graph: spanning path plus noise
            for v in 1..n {
                g.add_edge(v - 1, v);
            }
            for u in 0..n {
                for v in u + 2..n {
                    if rng.gen_bool(0.3) {
                        g.add_edge(u, v);
                    }
                }
            }
            let r = spectral_radius(&g, DEFAULT_TOL).unwrap();
            assert!(r.vector.iter().all(|&x| x > 0.0));
            let norm: f64 = r.vector.iter().map(|x| x * x).sum::<f64>().sqrt();
            assert!((norm - 1.0).abs() < 1e-9);
            let sandwich_lo = rayleigh_lower_bound(&g);
            assert!(sandwich_lo <= r.rho + 1e-9);
            assert!(r.rho <= g.max_degree() as f64 + 1e-9);
        }
    }

    #[test]
    fn balance_check_symmetric_and_skewed() {
        let r = eigenvector_balance_check(3, 3, 3, DEFAULT_TOL).unwrap();
        assert!(r.within_part_spread < 1e-8);
        assert!((r.part_entries[0] - r.part_entries[2]).abs() < 1e-8);
        assert!(r.closed_form_error < 1e-8);

        let r = eigenvector_balance_check(4, 3, 3, DEFAULT_TOL).unwrap();
        assert!(r.part_entries[0] < r.part_entries[2]);
        assert!(r.closed_form_error < 1e-8);
        assert!(r.linear_system_error < 1e-7);

        let r = eigenvector_balance_check(5, 3, 3, DEFAULT_TOL).unwrap();
        assert!(r.imbalance_sign > 0.0);
    }

    #[test]
    fn comparison_ordering_at_small_n() {
        for n in [9, 12, 20] {
            let rep = spectral_comparisons(n, DEFAULT_TOL).unwrap();
            assert!(rep.ordering_holds(), "n={n}: {rep:?}");
            assert!(rep.rho_gn >= rep.rayleigh_gn - 1e-9);
        }
    }
}
