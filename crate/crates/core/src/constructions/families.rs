use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::cubic::noncospectral_cubic_pair;
use super::report::ConstructionReport;
use crate::error::{Error, Result};
use crate::graph::{self, Graph};

type JoinOp = fn(&Graph, &Graph) -> Result<Graph>;

fn l2(g: &Graph) -> Graph {
    graph::line_graph(&graph::line_graph(g))
}

fn cubic_l2_pair(t: usize) -> Result<(Graph, Graph, String)> {
    let (a, b) = noncospectral_cubic_pair(t)?;
    let notes = format!(
        "cubic pair on {} vertices: {} and {}",
        2 * t,
        a.to_graph6(),
        b.to_graph6()
    );
    Ok((l2(&a), l2(&b), notes))
}

/// `L²(G₁) ∨ L²(G₁)` and `L²(G₂) ∨ L²(G₂)` for a non-cospectral cubic pair
/// on `2t` vertices; both have ε-energy `72t - 56`.
pub fn equienergetic_pair_12t(t: usize) -> Result<ConstructionReport> {
    let (h1, h2, notes) = cubic_l2_pair(t)?;
    ConstructionReport::build(
        vec![
            ("L2(G1) v L2(G1)".to_string(), graph::join(&h1, &h1)),
            ("L2(G2) v L2(G2)".to_string(), graph::join(&h2, &h2)),
        ],
        Some(72.0 * t as f64 - 56.0),
        notes,
    )
}

/// `L²(Gᵢ) ∨ K₁` for a non-cospectral cubic pair on `2t` vertices; both have
/// ε-energy `24t - 14 + 2√((6t-7)² + 6t)`.
pub fn equienergetic_pair_6t1(t: usize) -> Result<ConstructionReport> {
    let (h1, h2, notes) = cubic_l2_pair(t)?;
    let k1 = Graph::empty(1);
    let tf = t as f64;
    let expected = 24.0 * tf - 14.0 + 2.0 * ((6.0 * tf - 7.0).powi(2) + 6.0 * tf).sqrt();
    ConstructionReport::build(
        vec![
            ("L2(G1) v K1".to_string(), graph::join(&h1, &k1)),
            ("L2(G2) v K1".to_string(), graph::join(&h2, &k1)),
        ],
        Some(expected),
        notes,
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum JoinFamily {
    SvPair,
    SePair,
    SvTriplet,
    SeTriplet,
}

impl JoinFamily {
    pub const ALL: [JoinFamily; 4] = [
        JoinFamily::SvPair,
        JoinFamily::SePair,
        JoinFamily::SvTriplet,
        JoinFamily::SeTriplet,
    ];

    pub fn name(self) -> &'static str {
        match self {
            JoinFamily::SvPair => "sv_pair",
            JoinFamily::SePair => "se_pair",
            JoinFamily::SvTriplet => "sv_triplet",
            JoinFamily::SeTriplet => "se_triplet",
        }
    }
}

impl fmt::Display for JoinFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for JoinFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        JoinFamily::ALL
            .into_iter()
            .find(|v| v.name() == s || v.name().replace('_', "-") == s)
            .ok_or_else(|| Error::Parameter(format!("unknown join family {s:?}")))
    }
}

/// Subdivision joins of a regular graph `g` (degree at least 2) with the
/// second line graphs `H₁, H₂` of a non-cospectral cubic pair: the pairs
/// `g ⋁ Hᵢ`, or the triplets `g ⋁ (H₁∪H₁)`, `g ⋁ (H₂∪H₂)`, `g ⋁ (H₁∪H₂)`.
pub fn subdivision_join_family(
    g: &Graph,
    t: usize,
    variant: JoinFamily,
) -> Result<ConstructionReport> {
    match g.regularity() {
        Some(r) if r >= 2 && g.is_connected() => {}
        _ => {
            return Err(Error::Hypothesis(
                "the base graph must be connected and r-regular with r >= 2".to_string(),
            ))
        }
    }
    let (h1, h2, notes) = cubic_l2_pair(t)?;
    let (op, symbol): (JoinOp, &str) = match variant {
        JoinFamily::SvPair | JoinFamily::SvTriplet => (graph::subdivision_vertex_join, "sv"),
        JoinFamily::SePair | JoinFamily::SeTriplet => (graph::subdivision_edge_join, "se"),
    };
    let operands: Vec<(String, Graph)> = match variant {
        JoinFamily::SvPair | JoinFamily::SePair => {
            vec![("L2(G1)".to_string(), h1), ("L2(G2)".to_string(), h2)]
        }
        JoinFamily::SvTriplet | JoinFamily::SeTriplet => {
            let union = |a: &Graph, b: &Graph| graph::disjoint_union([a, b]);
            vec![
                ("L2(G1) u L2(G1)".to_string(), union(&h1, &h1)?),
                ("L2(G2) u L2(G2)".to_string(), union(&h2, &h2)?),
                ("L2(G1) u L2(G2)".to_string(), union(&h1, &h2)?),
            ]
        }
    };
    let base = g.label().map_or_else(|| g.to_graph6(), str::to_string);
    let graphs = operands
        .into_iter()
        .map(|(label, h)| Ok((format!("{base} {symbol} ({label})"), op(g, &h)?)))
        .collect::<Result<Vec<_>>>()?;
    ConstructionReport::build(graphs, None, notes)
}
