//! Compact graph specifications used on the command line.
//!
//! ```text
//! K5  C6  P4  S4  K3,3  prism  prism4  petersen
//! L(spec)  L2(spec)  g6:<graph6>  @<path>
//! ```

use std::fs;

use crate::error::{Error, Result};
use crate::graph::{self, family, Family, Graph};

fn number(spec: &str, digits: &str) -> Result<usize> {
    digits
        .parse()
        .map_err(|_| Error::Parameter(format!("bad number in operand {spec:?}")))
}

fn unwrap_call<'a>(spec: &'a str, name: &str) -> Option<&'a str> {
    spec.strip_prefix(name)?
        .strip_prefix('(')?
        .strip_suffix(')')
}

pub fn parse_operand(spec: &str) -> Result<Graph> {
    let spec = spec.trim();
    if let Some(inner) = unwrap_call(spec, "L2") {
        let g = parse_operand(inner)?;
        return Ok(graph::line_graph(&graph::line_graph(&g)).with_label(spec));
    }
    if let Some(inner) = unwrap_call(spec, "L") {
        let g = parse_operand(inner)?;
        return Ok(graph::line_graph(&g).with_label(spec));
    }
    if let Some(code) = spec.strip_prefix("g6:") {
        return Ok(graph::parse_graph6(code)?.with_label(spec));
    }
    if let Some(path) = spec.strip_prefix('@') {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("cannot read {path}: {e}")))?;
        let mut graphs = read_graphs(&text)?;
        if graphs.len() != 1 {
            return Err(Error::Input(format!(
                "{path} holds {} graphs; an operand needs exactly one",
                graphs.len()
            )));
        }
        return Ok(graphs.remove(0).with_label(spec));
    }
    match spec {
        "prism" => return family(Family::Prism, &[]),
        "petersen" => return family(Family::Petersen, &[]),
        _ => {}
    }
    if let Some(k) = spec.strip_prefix("prism") {
        return Ok(family(Family::Prism, &[number(spec, k)?])?.with_label(spec));
    }
    let (head, rest) = spec.split_at(spec.chars().next().map_or(0, char::len_utf8));
    let g = match head {
        "K" => match rest.split_once(',') {
            Some((a, b)) => family(
                Family::CompleteBipartite,
                &[number(spec, a)?, number(spec, b)?],
            )?,
            None => family(Family::Complete, &[number(spec, rest)?])?,
        },
        "C" => family(Family::Cycle, &[number(spec, rest)?])?,
        "P" => family(Family::Path, &[number(spec, rest)?])?,
        "S" => family(Family::Star, &[number(spec, rest)?])?,
        _ => return Err(Error::Parameter(format!("unrecognised operand {spec:?}"))),
    };
    Ok(g.with_label(spec))
}

/// Graphs in a text file: one graph6 string or JSON edge list per line, or
/// a single (possibly multi-line) JSON edge list. Blank lines and lines
/// starting with `#` are skipped.
pub fn read_graphs(text: &str) -> Result<Vec<Graph>> {
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        if let Ok(g) = graph::parse_edge_list(trimmed) {
            return Ok(vec![g]);
        }
    }
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(graph::parse_graph)
        .collect()
}
