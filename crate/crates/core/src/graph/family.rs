use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

/// Named graph families used as fixtures and CLI operands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `K_p`, params `[p]`.
    Complete,
    /// `K_{a,b}`, params `[a, b]`.
    CompleteBipartite,
    /// `C_p`, params `[p]` with `p >= 3`.
    Cycle,
    /// `P_p` on `p` vertices, params `[p]`.
    Path,
    /// `K_{1,p-1}` on `p` vertices, params `[p]` with `p >= 2`; vertex 0 is the center.
    Star,
    Petersen,
    /// `C_k □ K_2`, params `[]` (the 3-prism) or `[k]`.
    Prism,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "complete" => Family::Complete,
            "complete_bipartite" | "complete-bipartite" => Family::CompleteBipartite,
            "cycle" => Family::Cycle,
            "path" => Family::Path,
            "star" => Family::Star,
            "petersen" => Family::Petersen,
            "prism" => Family::Prism,
            other => return Err(Error::Parameter(format!("unknown family `{other}`"))),
        })
    }
}

fn expect_params(name: &str, params: &[usize], count: usize) -> Result<()> {
    if params.len() != count {
        return Err(Error::Parameter(format!(
            "{name} takes {count} parameter(s), got {}",
            params.len()
        )));
    }
    Ok(())
}

fn at_least(name: &str, value: usize, min: usize) -> Result<()> {
    if value < min {
        return Err(Error::Parameter(format!(
            "{name} needs at least {min}, got {value}"
        )));
    }
    Ok(())
}

/// Builds a member of a named family.
pub fn family(kind: Family, params: &[usize]) -> Result<Graph> {
    let g = match kind {
        Family::Complete => {
            expect_params("complete", params, 1)?;
            let p = params[0];
            at_least("complete", p, 1)?;
            Graph::from_edges(p, (0..p).flat_map(|i| (i + 1..p).map(move |j| (i, j))))?
                .with_label(format!("K{p}"))
        }
        Family::CompleteBipartite => {
            expect_params("complete_bipartite", params, 2)?;
            let (a, b) = (params[0], params[1]);
            at_least("complete_bipartite", a, 1)?;
            at_least("complete_bipartite", b, 1)?;
            Graph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))?
                .with_label(format!("K{a},{b}"))
        }
        Family::Cycle => {
            expect_params("cycle", params, 1)?;
            let p = params[0];
            at_least("cycle", p, 3)?;
            Graph::from_edges(p, (0..p).map(|i| (i, (i + 1) % p)))?.with_label(format!("C{p}"))
        }
        Family::Path => {
            expect_params("path", params, 1)?;
            let p = params[0];
            at_least("path", p, 1)?;
            Graph::from_edges(p, (1..p).map(|i| (i - 1, i)))?.with_label(format!("P{p}"))
        }
        Family::Star => {
            expect_params("star", params, 1)?;
            let p = params[0];
            at_least("star", p, 2)?;
            Graph::from_edges(p, (1..p).map(|i| (0, i)))?.with_label(format!("K1,{}", p - 1))
        }
        Family::Petersen => {
            expect_params("petersen", params, 0)?;
            let outer = (0..5).map(|i| (i, (i + 1) % 5));
            let spokes = (0..5).map(|i| (i, i + 5));
            let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
            Graph::from_edges(10, outer.chain(spokes).chain(inner))?.with_label("petersen")
        }
        Family::Prism => {
            let k = match params {
                [] => 3,
                [k] => *k,
                _ => {
                    return Err(Error::Parameter(
                        "prism takes zero or one parameter".to_string(),
                    ))
                }
            };
            at_least("prism", k, 3)?;
            let top = (0..k).map(|i| (i, (i + 1) % k));
            let bottom = (0..k).map(|i| (k + i, k + (i + 1) % k));
            let rungs = (0..k).map(|i| (i, i + k));
            let label = if k == 3 {
                "prism".to_string()
            } else {
                format!("prism{k}")
            };
            Graph::from_edges(2 * k, top.chain(bottom).chain(rungs))?.with_label(label)
        }
    };
    Ok(g)
}
