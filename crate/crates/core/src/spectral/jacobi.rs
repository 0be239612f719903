//! Dense symmetric eigensolver by cyclic Jacobi rotations.
//!
//! This is the reference oracle for the power-iteration path and is kept
//! independent of it: it works on an explicit dense matrix and touches none
//! of the iteration code.

use crate::graph::Graph;

/// All eigenvalues of a symmetric matrix, ascending.
pub fn symmetric_eigenvalues(mut a: Vec<Vec<f64>>) -> Vec<f64> {
    let n = a.len();
    if n == 0 {
        return Vec::new();
    }
    let scale: f64 = a
        .iter()
        .flat_map(|r| r.iter())
        .fold(0.0f64, |m, &x| m.max(x.abs()))
        .max(1.0);
    let target = 1e-14 * scale;
    for _sweep in 0..100 {
        let mut off: f64 = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                off = off.max(a[p][q].abs());
            }
        }
        if off <= target {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() <= target * 1e-2 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let apq = a[p][q];
                let app = a[p][p];
                let aqq = a[q][q];
                a[p][p] = app - t * apq;
                a[q][q] = aqq + t * apq;
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for k in 0..n {
                    if k != p && k != q {
                        let akp = a[k][p];
                        let akq = a[k][q];
                        a[k][p] = c * akp - s * akq;
                        a[p][k] = a[k][p];
                        a[k][q] = s * akp + c * akq;
                        a[q][k] = a[k][q];
                    }
                }
            }
        }
    }
    let mut eigs: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    eigs.sort_by(|x, y| x.partial_cmp(y).unwrap());
    eigs
}

pub fn adjacency_matrix(g: &Graph) -> Vec<Vec<f64>> {
    let n = g.n();
    let mut a = vec![vec![0.0; n]; n];
    for (u, v) in g.edges() {
        a[u][v] = 1.0;
        a[v][u] = 1.0;
    }
    a
}

/// Largest adjacency eigenvalue via the dense solver.
pub fn spectral_radius_dense(g: &Graph) -> f64 {
    *symmetric_eigenvalues(adjacency_matrix(g))
        .last()
        .expect("nonempty graph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{family, Graph};
    use crate::spectral::{spectral_radius, DEFAULT_TOL};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn known_spectra() {
        // K_4: eigenvalues -1, -1, -1, 3
        let eigs = symmetric_eigenvalues(adjacency_matrix(&family::turan(4, 4).unwrap()));
        assert!((eigs[3] - 3.0).abs() < 1e-10);
        assert!((eigs[0] + 1.0).abs() < 1e-10);
        // star K_{1,4}: rho = 2
        assert!((spectral_radius_dense(&family::complete_multipartite(&[1, 4]).unwrap()) - 2.0).abs() < 1e-10);
        // P_3: rho = sqrt(2)
        assert!((spectral_radius_dense(&family::path(3).unwrap()) - 2f64.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn agrees_with_power_iteration_on_random_connected_graphs() {
        let mut rng = StdRng::seed_from_u64(0x0c1e);
        for _ in 0..200 {
            let n = rng.gen_range(2..=64);
            let mut g = Graph::empty(n).unwrap();
            for v in 1..n {
                g.add_edge(rng.gen_range(0..v), v);
            }
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.2) {
                        g.add_edge(u, v);
                    }
                }
            }
            let fast = spectral_radius(&g, DEFAULT_TOL).unwrap().rho;
            let dense = spectral_radius_dense(&g);
            assert!((fast - dense).abs() <= 1e-8, "n={n}: {fast} vs {dense}");
        }
    }

    #[test]
    fn edge_addition_strictly_increases_rho() {
        let mut rng = StdRng::seed_from_u64(0x0add);
        for _ in 0..100 {
            let n = rng.gen_range(3..=16);
            let mut g = Graph::empty(n).unwrap();
            for v in 1..n {
                g.add_edge(rng.gen_range(0..v), v);
            }
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.3) {
                        g.add_edge(u, v);
                    }
                }
            }
            let missing: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .filter(|&(u, v)| !g.has_edge(u, v))
                .collect();
            if missing.is_empty() {
                continue;
            }
            let &(u, v) = &missing[rng.gen_range(0..missing.len())];
            let before = spectral_radius(&g, DEFAULT_TOL).unwrap().rho;
            let mut h = g.clone();
            h.add_edge(u, v);
            let after = spectral_radius(&h, DEFAULT_TOL).unwrap().rho;
            assert!(after > before + 1e-9, "adding ({u},{v}) to {g:?}");
        }
    }
}
