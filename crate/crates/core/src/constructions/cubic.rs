//! Connected cubic graphs by breadth-first backtracking.
//!
//! Vertices are labelled in BFS order: vertex 0 is processed first, and a
//! vertex's missing neighbours are either already discovered vertices with
//! larger labels or fresh vertices that take the next free labels. Every
//! connected cubic graph has such a labelling, so the search is complete.
//! Labelled results are collapsed by adjacency spectrum, compared exactly
//! through the power traces `tr(A^k)`, `k = 2..n`, which determine the
//! characteristic polynomial.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MIN_ORDER: usize = 4;
pub const MAX_ORDER: usize = 14;

struct Search {
    n: usize,
    adj: Vec<u16>,
    deg: Vec<u8>,
    next: usize,
    found: HashMap<Vec<i64>, (String, Graph)>,
}

impl Search {
    fn connect(&mut self, a: usize, b: usize) {
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
        self.deg[a] += 1;
        self.deg[b] += 1;
    }

    fn disconnect(&mut self, a: usize, b: usize) {
        self.adj[a] &= !(1 << b);
        self.adj[b] &= !(1 << a);
        self.deg[a] -= 1;
        self.deg[b] -= 1;
    }

    fn run(&mut self, v: usize) {
        if v == self.n {
            self.record();
            return;
        }
        if v == self.next {
            // Nothing left to discover: the graph would be disconnected.
            return;
        }
        let need = 3 - self.deg[v] as usize;
        let candidates: Vec<usize> = (v + 1..self.next)
            .filter(|&u| self.deg[u] < 3 && self.adj[v] & (1 << u) == 0)
            .collect();
        for mask in 0u32..1 << candidates.len() {
            let chosen = mask.count_ones() as usize;
            if chosen > need {
                continue;
            }
            let fresh = need - chosen;
            if self.next + fresh > self.n {
                continue;
            }
            let picked: Vec<usize> = candidates
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask & (1 << i) != 0)
                .map(|(_, &u)| u)
                .collect();
            let start = self.next;
            for &u in &picked {
                self.connect(v, u);
            }
            for u in start..start + fresh {
                self.connect(v, u);
            }
            self.next += fresh;
            self.run(v + 1);
            self.next = start;
            for u in start..start + fresh {
                self.disconnect(v, u);
            }
            for &u in &picked {
                self.disconnect(v, u);
            }
        }
    }

    fn power_traces(&self) -> Vec<i64> {
        let n = self.n;
        let mut traces = vec![0i64; n - 1];
        for i in 0..n {
            let mut x = vec![0i64; n];
            x[i] = 1;
            for k in 1..=n {
                x = (0..n)
                    .map(|a| {
                        (0..n)
                            .filter(|&b| self.adj[a] & (1 << b) != 0)
                            .map(|b| x[b])
                            .sum()
                    })
                    .collect();
                if k >= 2 {
                    traces[k - 2] += x[i];
                }
            }
        }
        traces
    }

    fn record(&mut self) {
        let edges: Vec<(usize, usize)> = (0..self.n)
            .flat_map(|a| (a + 1..self.n).map(move |b| (a, b)))
            .filter(|&(a, b)| self.adj[a] & (1 << b) != 0)
            .collect();
        let g = Graph::from_edges(self.n, edges).expect("generated edges are valid");
        let code = g.to_graph6();
        let key = self.power_traces();
        match self.found.get(&key) {
            Some((best, _)) if *best <= code => {}
            _ => {
                self.found.insert(key, (code, g));
            }
        }
    }
}

/// Connected cubic graphs on `n` vertices, one per adjacency spectrum,
/// sorted by graph6. Each representative is the smallest graph6 among the
/// BFS labellings of its spectral class.
pub fn enumerate_cubic(n: usize) -> Result<Vec<Graph>> {
    if !n.is_multiple_of(2) || !(MIN_ORDER..=MAX_ORDER).contains(&n) {
        return Err(Error::Parameter(format!(
            "cubic enumeration needs an even order in {MIN_ORDER}..={MAX_ORDER}, got {n}"
        )));
    }
    let mut search = Search {
        n,
        adj: vec![0; n],
        deg: vec![0; n],
        next: 1,
        found: HashMap::new(),
    };
    search.run(0);
    let mut graphs: Vec<(String, Graph)> = search.found.into_values().collect();
    graphs.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(graphs
        .into_iter()
        .map(|(code, g)| g.with_label(format!("cubic:{code}")))
        .collect())
}

/// The two smallest (by graph6) spectrally distinct connected cubic graphs
/// on `2t` vertices.
pub fn noncospectral_cubic_pair(t: usize) -> Result<(Graph, Graph)> {
    if t < 3 {
        return Err(Error::Hypothesis(format!(
            "a non-cospectral cubic pair on 2t vertices needs t >= 3, got t = {t}"
        )));
    }
    if 2 * t > MAX_ORDER {
        return Err(Error::Parameter(format!(
            "t = {t} exceeds the enumeration limit t <= {}",
            MAX_ORDER / 2
        )));
    }
    let mut graphs = enumerate_cubic(2 * t)?.into_iter();
    match (graphs.next(), graphs.next()) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => Err(Error::Structure(format!(
            "fewer than two cubic spectra on {} vertices",
            2 * t
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{family, Family};

    #[test]
    fn small_orders() {
        let four = enumerate_cubic(4).unwrap();
        assert_eq!(four, vec![family(Family::Complete, &[4]).unwrap()]);

        let six = enumerate_cubic(6).unwrap();
        assert_eq!(six.len(), 2);
        assert!(six
            .iter()
            .all(|g| g.regularity() == Some(3) && g.is_connected()));

        // Five connected cubic graphs on 8 vertices, all with distinct spectra.
        assert_eq!(enumerate_cubic(8).unwrap().len(), 5);
    }

    #[test]
    fn bad_orders() {
        for n in [2, 5, 16] {
            assert!(matches!(enumerate_cubic(n), Err(Error::Parameter(_))));
        }
        assert!(matches!(
            noncospectral_cubic_pair(2),
            Err(Error::Hypothesis(_))
        ));
        assert!(matches!(
            noncospectral_cubic_pair(8),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn six_vertex_pair_is_prism_and_k33() {
        use crate::linalg::{spectra_equal, spectrum};
        let (a, b) = noncospectral_cubic_pair(3).unwrap();
        let prism = family(Family::Prism, &[]).unwrap();
        let k33 = family(Family::CompleteBipartite, &[3, 3]).unwrap();
        let sa = spectrum(&a.adjacency_matrix()).unwrap();
        let sb = spectrum(&b.adjacency_matrix()).unwrap();
        let sp = spectrum(&prism.adjacency_matrix()).unwrap();
        let sk = spectrum(&k33.adjacency_matrix()).unwrap();
        assert!(!spectra_equal(&sa, &sb, 1e-6));
        assert!(
            (spectra_equal(&sa, &sp, 1e-9) && spectra_equal(&sb, &sk, 1e-9))
                || (spectra_equal(&sa, &sk, 1e-9) && spectra_equal(&sb, &sp, 1e-9))
        );
    }
}
