use super::Graph;
use crate::error::{Error, Result};

struct Dense {
    n: usize,
    adj: Vec<bool>,
}

impl Dense {
    fn new(n: usize) -> Self {
        Dense {
            n,
            adj: vec![false; n * n],
        }
    }

    fn connect(&mut self, i: usize, j: usize) {
        self.adj[i * self.n + j] = true;
        self.adj[j * self.n + i] = true;
    }

    fn copy_in(&mut self, g: &Graph, offset: usize) {
        for (i, j) in g.edges().iter().copied() {
            self.connect(offset + i, offset + j);
        }
    }

    fn finish(self) -> Graph {
        Graph::from_dense(self.n, self.adj)
    }
}

/// Complement: off-diagonal adjacency flipped.
pub fn complement(g: &Graph) -> Graph {
    let n = g.order();
    let adj = (0..n * n).map(|k| k / n != k % n && !g.adj[k]).collect();
    Graph::from_dense(n, adj)
}

/// Disjoint union; vertices are numbered in the order the operands are given.
pub fn disjoint_union<'a, I>(graphs: I) -> Result<Graph>
where
    I: IntoIterator<Item = &'a Graph>,
{
    let graphs: Vec<&Graph> = graphs.into_iter().collect();
    if graphs.is_empty() {
        return Err(Error::Parameter("disjoint union of no graphs".to_string()));
    }
    let mut out = Dense::new(graphs.iter().map(|g| g.order()).sum());
    let mut offset = 0;
    for g in graphs {
        out.copy_in(g, offset);
        offset += g.order();
    }
    Ok(out.finish())
}

/// `G₁ ∨ G₂`: the union plus every edge between the two vertex sets.
/// Vertices of `g1` come first.
pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    let (p1, p2) = (g1.order(), g2.order());
    let mut out = Dense::new(p1 + p2);
    out.copy_in(g1, 0);
    out.copy_in(g2, p1);
    for i in 0..p1 {
        for j in 0..p2 {
            out.connect(i, p1 + j);
        }
    }
    out.finish()
}

/// Line graph. Vertex `k` is the `k`-th edge of `g` in edge order; two
/// vertices are adjacent when their edges share an endpoint. An edgeless
/// input yields the null graph.
pub fn line_graph(g: &Graph) -> Graph {
    let edges = g.edges();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.order()];
    for (k, &(i, j)) in edges.iter().enumerate() {
        incident[i].push(k);
        incident[j].push(k);
    }
    let mut out = Dense::new(edges.len());
    for around in &incident {
        for (a, &e) in around.iter().enumerate() {
            for &f in &around[a + 1..] {
                out.connect(e, f);
            }
        }
    }
    out.finish()
}

/// Subdivision graph `S(G)`: vertices `0..p` are the original vertices and
/// `p..p+q` the subdivision vertices, one per edge in edge order.
pub fn subdivision(g: &Graph) -> Graph {
    let p = g.order();
    let edges = g.edges();
    let mut out = Dense::new(p + edges.len());
    for (k, &(i, j)) in edges.iter().enumerate() {
        out.connect(i, p + k);
        out.connect(j, p + k);
    }
    out.finish()
}

#[derive(Clone, Copy)]
enum JoinSide {
    Original,
    Subdivision,
}

fn subdivision_join(g1: &Graph, g2: &Graph, side: JoinSide) -> Result<Graph> {
    let edges = g1.edges();
    if edges.is_empty() {
        return Err(Error::Structure(
            "first operand of a subdivision join needs at least one edge".to_string(),
        ));
    }
    let (p1, q1, p2) = (g1.order(), edges.len(), g2.order());
    let mut out = Dense::new(p1 + q1 + p2);
    for (k, &(i, j)) in edges.iter().enumerate() {
        out.connect(i, p1 + k);
        out.connect(j, p1 + k);
    }
    out.copy_in(g2, p1 + q1);
    let joined = match side {
        JoinSide::Original => 0..p1,
        JoinSide::Subdivision => p1..p1 + q1,
    };
    for a in joined {
        for w in 0..p2 {
            out.connect(a, p1 + q1 + w);
        }
    }
    Ok(out.finish())
}

/// Subdivision-vertex join `G₁ ⋁̇ G₂`: `S(G₁)` and `G₂` with every original
/// vertex of `G₁` joined to every vertex of `G₂`.
///
/// Vertex order is `V(G₁)`, then the subdivision vertices in edge order,
/// then `V(G₂)`.
pub fn subdivision_vertex_join(g1: &Graph, g2: &Graph) -> Result<Graph> {
    subdivision_join(g1, g2, JoinSide::Original)
}

/// Subdivision-edge join `G₁ ⋁̄ G₂`: `S(G₁)` and `G₂` with every subdivision
/// vertex joined to every vertex of `G₂`. Same vertex order as
/// [`subdivision_vertex_join`].
pub fn subdivision_edge_join(g1: &Graph, g2: &Graph) -> Result<Graph> {
    subdivision_join(g1, g2, JoinSide::Subdivision)
}
