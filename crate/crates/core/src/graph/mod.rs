//! Simple undirected graphs with a fixed vertex order.
//!
//! A [`Graph`] is an immutable value. Every operation returns a new graph
//! whose vertex order is part of its contract: composite graphs list the
//! vertices of their operands in a documented order so that block-structured
//! matrices built from them are reproducible bit for bit.

mod family;
mod io;
mod ops;

pub use family::{family, Family};
pub use io::{parse_edge_list, parse_graph, parse_graph6, to_edge_list_json, to_graph6};
pub use ops::{
    complement, disjoint_union, join, line_graph, subdivision, subdivision_edge_join,
    subdivision_vertex_join,
};

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{IntMatrix, SquareMatrix};

/// Undirected simple graph on the vertices `0..n`.
///
/// Adjacency is stored densely alongside sorted neighbor lists. The null
/// graph (`n == 0`) only arises as the line graph of an edgeless graph.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
    nbrs: Vec<Vec<usize>>,
    label: Option<String>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse into one; self-loops and out-of-range indices
    /// are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![false; n * n];
        for (i, j) in edges {
            if i >= n || j >= n {
                return Err(Error::Input(format!(
                    "edge ({i}, {j}) out of range for {n} vertices"
                )));
            }
            if i == j {
                return Err(Error::Input(format!("self-loop at vertex {i}")));
            }
            adj[i * n + j] = true;
            adj[j * n + i] = true;
        }
        Ok(Graph::from_dense(n, adj))
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        Graph::from_dense(n, vec![false; n * n])
    }

    pub(crate) fn from_dense(n: usize, adj: Vec<bool>) -> Graph {
        debug_assert_eq!(adj.len(), n * n);
        let nbrs = (0..n)
            .map(|i| (0..n).filter(|&j| adj[i * n + j]).collect())
            .collect();
        Graph {
            n,
            adj,
            nbrs,
            label: None,
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Graph {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.nbrs.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.n + j]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.nbrs[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.nbrs[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.nbrs.iter().map(Vec::len).collect()
    }

    /// Edges as `(i, j)` with `i < j`, sorted lexicographically.
    pub fn edges(&self) -> EdgeOrder {
        let mut edges = Vec::with_capacity(self.size());
        for i in 0..self.n {
            for &j in &self.nbrs[i] {
                if i < j {
                    edges.push((i, j));
                }
            }
        }
        EdgeOrder(edges)
    }

    /// Common degree when the graph is regular.
    pub fn regularity(&self) -> Option<usize> {
        let first = self.nbrs.first()?.len();
        self.nbrs
            .iter()
            .all(|row| row.len() == first)
            .then_some(first)
    }

    pub fn is_complete(&self) -> bool {
        self.n > 0 && self.regularity() == Some(self.n - 1)
    }

    /// True when a single BFS from vertex 0 reaches every vertex. The null
    /// graph is not connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// Connected components, each sorted, listed by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([s]);
            seen[s] = true;
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &w in &self.nbrs[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Hop distances from `source`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap_or_default();
            for &w in &self.nbrs[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn adjacency_matrix(&self) -> SquareMatrix {
        SquareMatrix::from_fn(self.n, |i, j| if self.has_edge(i, j) { 1.0 } else { 0.0 })
    }

    pub fn adjacency_int(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, |i, j| i64::from(self.has_edge(i, j)))
    }

    /// Vertex-edge incidence matrix with columns in [`EdgeOrder`].
    pub fn incidence_matrix(&self) -> IncidenceMatrix {
        let edges = self.edges();
        let cols = edges.len();
        let mut entries = vec![0u8; self.n * cols];
        for (k, &(i, j)) in edges.iter().enumerate() {
            entries[i * cols + k] = 1;
            entries[j * cols + k] = 1;
        }
        IncidenceMatrix {
            rows: self.n,
            cols,
            entries,
        }
    }

    pub fn to_graph6(&self) -> String {
        to_graph6(self)
    }
}

impl PartialEq for Graph {
    /// Structural equality under the fixed vertex order; labels are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().0)
            .field("label", &self.label)
            .finish()
    }
}

/// Edge list `(i, j)`, `i < j`, in ascending lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeOrder(Vec<(usize, usize)>);

impl EdgeOrder {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, (usize, usize)> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[(usize, usize)] {
        &self.0
    }

    /// Index of the edge `{i, j}` in this order.
    pub fn position(&self, i: usize, j: usize) -> Option<usize> {
        let key = if i < j { (i, j) } else { (j, i) };
        self.0.binary_search(&key).ok()
    }
}

impl<'a> IntoIterator for &'a EdgeOrder {
    type Item = &'a (usize, usize);
    type IntoIter = std::slice::Iter<'a, (usize, usize)>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// `n × q` 0/1 vertex-edge incidence matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<u8>,
}

impl IncidenceMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, vertex: usize, edge: usize) -> u8 {
        self.entries[vertex * self.cols + edge]
    }

    /// `R·Rᵀ`, a `rows × rows` integer matrix.
    pub fn times_transpose(&self) -> IntMatrix {
        IntMatrix::from_fn(self.rows, |a, b| {
            (0..self.cols)
                .map(|k| i64::from(self.get(a, k) * self.get(b, k)))
                .sum()
        })
    }

    /// `Rᵀ·R`, a `cols × cols` integer matrix.
    pub fn transpose_times(&self) -> IntMatrix {
        IntMatrix::from_fn(self.cols, |a, b| {
            (0..self.rows)
                .map(|v| i64::from(self.get(v, a) * self.get(v, b)))
                .sum()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_collapses_duplicates_and_rejects_loops() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.size(), 1);
        assert!(matches!(
            Graph::from_edges(2, [(0, 0)]),
            Err(Error::Input(_))
        ));
        assert!(matches!(
            Graph::from_edges(2, [(0, 2)]),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn regularity_and_connectivity() {
        let k4 = family(Family::Complete, &[4]).unwrap();
        assert_eq!(k4.regularity(), Some(3));
        let p3 = family(Family::Path, &[3]).unwrap();
        assert_eq!(p3.regularity(), None);
        assert_eq!(family(Family::Petersen, &[]).unwrap().regularity(), Some(3));

        assert!(family(Family::Complete, &[1]).unwrap().is_connected());
        let k2 = family(Family::Complete, &[2]).unwrap();
        assert!(!disjoint_union([&k2, &k2]).unwrap().is_connected());
        let prism = family(Family::Prism, &[]).unwrap();
        assert!(subdivision(&prism).is_connected());
    }

    #[test]
    fn incidence_of_small_graphs() {
        let k2 = family(Family::Complete, &[2]).unwrap();
        let r = k2.incidence_matrix();
        assert_eq!((r.rows(), r.cols()), (2, 1));
        assert_eq!((r.get(0, 0), r.get(1, 0)), (1, 1));

        let c3 = family(Family::Cycle, &[3]).unwrap();
        let r = c3.incidence_matrix();
        for v in 0..3 {
            assert_eq!((0..3).map(|k| r.get(v, k)).sum::<u8>(), 2);
        }
        for k in 0..3 {
            assert_eq!((0..3).map(|v| r.get(v, k)).sum::<u8>(), 2);
        }
    }

    #[test]
    fn incidence_identities_on_regular_graphs() {
        for g in [
            family(Family::Prism, &[]).unwrap(),
            family(Family::Petersen, &[]).unwrap(),
            family(Family::CompleteBipartite, &[3, 3]).unwrap(),
            family(Family::Cycle, &[7]).unwrap(),
            family(Family::Complete, &[5]).unwrap(),
        ] {
            let r = g.regularity().unwrap() as i64;
            let inc = g.incidence_matrix();
            let a = g.adjacency_int();
            let rrt = inc.times_transpose();
            let b = line_graph(&g).adjacency_int();
            let rtr = inc.transpose_times();
            for i in 0..g.order() {
                for j in 0..g.order() {
                    let expect = a.get(i, j) + if i == j { r } else { 0 };
                    assert_eq!(rrt.get(i, j), expect);
                }
            }
            for i in 0..g.size() {
                for j in 0..g.size() {
                    let expect = b.get(i, j) + if i == j { 2 } else { 0 };
                    assert_eq!(rtr.get(i, j), expect);
                }
            }
        }
    }

    #[test]
    fn edge_order_position() {
        let c4 = family(Family::Cycle, &[4]).unwrap();
        let e = c4.edges();
        assert_eq!(e.as_slice(), &[(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(e.position(3, 0), Some(1));
        assert_eq!(e.position(0, 2), None);
    }
}
