//! Independent reference computations shared by the integration tests.
#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::{BTreeSet, VecDeque};

use eccx::graph::{family, Family};
use eccx::Graph;

pub fn named(kind: Family, params: &[usize], label: &str) -> Graph {
    family(kind, params).unwrap().with_label(label)
}

/// First operands used across the theorem checks.
pub fn corpus_left() -> Vec<Graph> {
    vec![
        named(Family::Cycle, &[3], "C3"),
        named(Family::Cycle, &[4], "C4"),
        named(Family::Cycle, &[5], "C5"),
        named(Family::Cycle, &[6], "C6"),
        named(Family::Complete, &[4], "K4"),
        named(Family::Complete, &[5], "K5"),
        named(Family::Prism, &[], "prism"),
        named(Family::CompleteBipartite, &[3, 3], "K3,3"),
        named(Family::Petersen, &[], "petersen"),
    ]
}

/// Second operands used across the theorem checks.
pub fn corpus_right() -> Vec<Graph> {
    vec![
        named(Family::Complete, &[1], "K1"),
        named(Family::Complete, &[2], "K2"),
        named(Family::Cycle, &[3], "C3"),
        named(Family::Cycle, &[4], "C4"),
        named(Family::Complete, &[4], "K4"),
    ]
}

fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.order()];
    for &(i, j) in g.edges().iter() {
        adj[i].push(j);
        adj[j].push(i);
    }
    adj
}

/// All-pairs distances by plain BFS; `None` when disconnected.
pub fn distances(g: &Graph) -> Option<Vec<Vec<i64>>> {
    let adj = adjacency(g);
    let n = adj.len();
    let mut out = vec![vec![-1i64; n]; n];
    for s in 0..n {
        let row = &mut out[s];
        row[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if row[v] < 0 {
                    row[v] = row[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        if row.iter().any(|&d| d < 0) {
            return None;
        }
    }
    Some(out)
}

/// Eccentricity matrix straight from the definition.
pub fn eps_oracle(g: &Graph) -> Vec<Vec<i64>> {
    let d = distances(g).expect("connected");
    let ecc: Vec<i64> = d
        .iter()
        .map(|row| *row.iter().max().unwrap_or(&0))
        .collect();
    let n = d.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if d[i][j] == ecc[i].min(ecc[j]) {
                        d[i][j]
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect()
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut root = x;
    while parent[root] != root {
        root = parent[root];
    }
    let mut x = x;
    while parent[x] != root {
        let next = parent[x];
        parent[x] = root;
        x = next;
    }
    root
}

/// Whether the nonzero pattern of `m` is connected, by union-find.
pub fn support_connected(m: &[Vec<i64>]) -> bool {
    let n = m.len();
    let mut parent: Vec<usize> = (0..n).collect();
    for i in 0..n {
        for j in i + 1..n {
            if m[i][j] != 0 {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    (0..n)
        .map(|v| find(&mut parent, v))
        .collect::<BTreeSet<_>>()
        .len()
        <= 1
}

/// The graph on `n` vertices whose edges are the set bits of `mask` over
/// pairs `(i, j)`, `i < j`, in lexicographic order.
pub fn labeled_graph(n: usize, mask: u64) -> Graph {
    let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    let edges: Vec<(usize, usize)> = pairs
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::from_edges(n, edges).unwrap()
}

fn ahu(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut children: Vec<String> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| ahu(adj, w, v))
        .collect();
    children.sort();
    format!("({})", children.concat())
}

fn tree_centers(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer
}

/// Canonical string of an unlabeled tree: the smaller AHU code over its centers.
pub fn tree_code(edges: &[(usize, usize)], n: usize) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    if n == 1 {
        return "()".to_string();
    }
    tree_centers(&adj)
        .into_iter()
        .map(|c| ahu(&adj, c, usize::MAX))
        .min()
        .unwrap()
}

/// One representative per isomorphism class of trees on `n` vertices.
pub fn trees(n: usize) -> Vec<Graph> {
    let mut level: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    for size in 2..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for t in &level {
            for attach in 0..size - 1 {
                let mut grown = t.clone();
                grown.push((attach, size - 1));
                if seen.insert(tree_code(&grown, size)) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    level
        .into_iter()
        .map(|edges| Graph::from_edges(n, edges).unwrap())
        .collect()
}
