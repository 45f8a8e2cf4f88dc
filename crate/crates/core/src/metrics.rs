//! Distances, eccentricities and the eccentricity matrix.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{self, IntMatrix, Spectrum, SquareMatrix};

/// Below this order the BFS rows are computed serially.
const PARALLEL_MIN_ORDER: usize = 64;

#[derive(Clone, Debug, PartialEq)]
pub struct EccentricityProfile {
    pub distances: IntMatrix,
    pub ecc: Vec<usize>,
    pub radius: usize,
    pub diameter: usize,
    pub eps_matrix: IntMatrix,
    pub eccentric_graph: Graph,
}

impl EccentricityProfile {
    pub fn eps_real(&self) -> SquareMatrix {
        self.eps_matrix.to_real()
    }

    pub fn order(&self) -> usize {
        self.ecc.len()
    }

    /// Grouped ε-spectrum under the default tolerance.
    pub fn spectrum(&self) -> Result<Spectrum> {
        linalg::spectrum(&self.eps_real())
    }
}

fn distance_row(g: &Graph, source: usize) -> Result<Vec<i64>> {
    g.bfs_distances(source)
        .into_iter()
        .map(|d| d.map(|d| d as i64).ok_or(Error::Disconnected))
        .collect()
}

pub fn profile(g: &Graph) -> Result<EccentricityProfile> {
    let n = g.order();
    if n == 0 {
        return Err(Error::Input(
            "the null graph has no eccentricity matrix".to_string(),
        ));
    }
    let rows: Vec<Vec<i64>> = if n >= PARALLEL_MIN_ORDER {
        (0..n)
            .into_par_iter()
            .map(|s| distance_row(g, s))
            .collect::<Result<_>>()?
    } else {
        (0..n).map(|s| distance_row(g, s)).collect::<Result<_>>()?
    };
    let distances = IntMatrix::from_fn(n, |i, j| rows[i][j]);
    let ecc: Vec<usize> = rows
        .iter()
        .map(|r| r.iter().copied().max().unwrap_or(0) as usize)
        .collect();
    let radius = ecc.iter().copied().min().unwrap_or(0);
    let diameter = ecc.iter().copied().max().unwrap_or(0);
    let eps_matrix = IntMatrix::from_fn(n, |i, j| {
        let d = rows[i][j];
        if i != j && d as usize == ecc[i].min(ecc[j]) {
            d
        } else {
            0
        }
    });
    let eccentric_graph = Graph::from_edges(
        n,
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| eps_matrix.get(i, j) != 0),
    )?;
    Ok(EccentricityProfile {
        distances,
        ecc,
        radius,
        diameter,
        eps_matrix,
        eccentric_graph,
    })
}

/// Grouped spectrum of the eccentricity matrix.
pub fn epsilon_spectrum(g: &Graph) -> Result<Spectrum> {
    profile(g)?.spectrum()
}

pub fn is_self_centered(g: &Graph) -> Result<bool> {
    let p = profile(g)?;
    Ok(p.radius == p.diameter)
}

/// True when the eccentric graph is connected. A single vertex counts as
/// irreducible.
pub fn is_epsilon_irreducible(g: &Graph) -> Result<bool> {
    Ok(profile(g)?.eccentric_graph.is_connected())
}

/// Half the sum of all entries of the eccentricity matrix. The matrix is
/// symmetric with zero diagonal, so the result is an integer.
pub fn epsilon_wiener(g: &Graph) -> Result<i64> {
    Ok(profile(g)?.eps_matrix.total() / 2)
}

pub fn is_epsilon_regular(g: &Graph) -> Result<bool> {
    let p = profile(g)?;
    let first = p.eps_matrix.row_sum(0);
    Ok((1..p.order()).all(|i| p.eps_matrix.row_sum(i) == first))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RadiusBound {
    #[serde(serialize_with = "crate::linalg::rounded::scalar")]
    pub rho: f64,
    #[serde(serialize_with = "crate::linalg::rounded::scalar")]
    pub bound: f64,
    pub equality: bool,
}

const EQUALITY_TOL: f64 = 1e-6;

/// Largest ε-eigenvalue against the lower bound `2 W_ε / n`.
pub fn check_radius_bound(g: &Graph) -> Result<RadiusBound> {
    let p = profile(g)?;
    radius_bound_from(&p)
}

pub(crate) fn radius_bound_from(p: &EccentricityProfile) -> Result<RadiusBound> {
    let eig = linalg::sym_eigenvalues(&p.eps_real())?;
    let rho = eig.first().copied().unwrap_or(0.0);
    let bound = p.eps_matrix.total() as f64 / p.order() as f64;
    Ok(RadiusBound {
        rho,
        bound,
        equality: (rho - bound).abs() < EQUALITY_TOL,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{family, join, subdivision_edge_join, Family};

    fn g(kind: Family, params: &[usize]) -> Graph {
        family(kind, params).unwrap()
    }

    fn rows(m: &IntMatrix) -> Vec<Vec<i64>> {
        m.rows().map(<[i64]>::to_vec).collect()
    }

    #[test]
    fn complete_graph_gives_j_minus_i() {
        let p = profile(&g(Family::Complete, &[4])).unwrap();
        assert_eq!(
            p.eps_matrix,
            IntMatrix::from_fn(4, |i, j| i64::from(i != j))
        );
        assert_eq!((p.radius, p.diameter), (1, 1));
    }

    #[test]
    fn path_on_three() {
        let p = profile(&g(Family::Path, &[3])).unwrap();
        assert_eq!(p.ecc, vec![2, 1, 2]);
        assert_eq!(
            rows(&p.eps_matrix),
            vec![vec![0, 1, 2], vec![1, 0, 1], vec![2, 1, 0]]
        );
    }

    #[test]
    fn four_cycle_keeps_antipodes() {
        let p = profile(&g(Family::Cycle, &[4])).unwrap();
        let nonzero: Vec<(usize, usize)> = (0..4)
            .flat_map(|i| (0..4).map(move |j| (i, j)))
            .filter(|&(i, j)| p.eps_matrix.get(i, j) != 0)
            .collect();
        assert_eq!(nonzero, vec![(0, 2), (1, 3), (2, 0), (3, 1)]);
        assert!(nonzero.iter().all(|&(i, j)| p.eps_matrix.get(i, j) == 2));
    }

    #[test]
    fn single_vertex_convention() {
        let p = profile(&g(Family::Path, &[1])).unwrap();
        assert_eq!(p.eps_matrix.get(0, 0), 0);
        assert_eq!(p.eccentric_graph.order(), 1);
        assert!(is_epsilon_irreducible(&g(Family::Path, &[1])).unwrap());
    }

    #[test]
    fn disconnected_and_null_inputs() {
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(profile(&two_k2), Err(Error::Disconnected));
        assert!(matches!(profile(&Graph::empty(0)), Err(Error::Input(_))));
    }

    #[test]
    fn centre_and_irreducibility() {
        assert!(is_self_centered(&g(Family::Cycle, &[5])).unwrap());
        assert!(!is_self_centered(&g(Family::Path, &[3])).unwrap());
        assert!(is_self_centered(&g(Family::Prism, &[])).unwrap());
        assert!(!is_epsilon_irreducible(&g(Family::CompleteBipartite, &[2, 3])).unwrap());
        assert!(is_epsilon_irreducible(&g(Family::Path, &[5])).unwrap());
        let c3 = g(Family::Cycle, &[3]);
        let k2 = g(Family::Complete, &[2]);
        assert!(is_epsilon_irreducible(&subdivision_edge_join(&c3, &k2).unwrap()).unwrap());
    }

    #[test]
    fn wiener_values() {
        assert_eq!(epsilon_wiener(&g(Family::Complete, &[4])).unwrap(), 6);
        assert_eq!(epsilon_wiener(&g(Family::Cycle, &[4])).unwrap(), 4);
        // Each prism vertex has two non-neighbours, both at distance 2.
        assert_eq!(epsilon_wiener(&g(Family::Prism, &[])).unwrap(), 12);
    }

    #[test]
    fn regularity_and_bound() {
        assert!(is_epsilon_regular(&g(Family::Cycle, &[6])).unwrap());
        assert!(!is_epsilon_regular(&g(Family::Path, &[4])).unwrap());
        assert!(is_epsilon_regular(&g(Family::Complete, &[5])).unwrap());

        assert!(
            check_radius_bound(&g(Family::Cycle, &[6]))
                .unwrap()
                .equality
        );
        let p4 = check_radius_bound(&g(Family::Path, &[4])).unwrap();
        assert!(p4.rho > p4.bound + 1e-6 && !p4.equality);
        let k3 = check_radius_bound(&g(Family::Complete, &[3])).unwrap();
        assert!((k3.rho - 2.0).abs() < 1e-12 && (k3.bound - 2.0).abs() < 1e-12);
    }

    #[test]
    fn prism_spectrum() {
        let s = epsilon_spectrum(&g(Family::Prism, &[])).unwrap();
        let want = [(4.0, 1), (2.0, 2), (-2.0, 2), (-4.0, 1)];
        assert_eq!(s.pairs().len(), want.len());
        for (&(v, m), (w, k)) in s.pairs().iter().zip(want) {
            assert!((v - w).abs() < 1e-9 && m == k, "{s:?}");
        }
    }

    #[test]
    fn cone_over_prism_quotient() {
        let cone = join(&g(Family::Prism, &[]), &g(Family::Complete, &[1]));
        let p = profile(&cone).unwrap();
        let part = linalg::Partition::from_sizes(&[6, 1]).unwrap();
        let f = linalg::quotient(&p.eps_real(), &part).unwrap();
        assert_eq!(
            f,
            SquareMatrix::from_rows(&[[4.0, 1.0], [6.0, 0.0]]).unwrap()
        );
    }
}
