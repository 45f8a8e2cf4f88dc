//! graph6 and JSON edge-list encodings.
//!
//! graph6 follows McKay's layout: a size prefix, then the upper triangle of
//! the adjacency matrix read column by column (`x(0,1), x(0,2), x(1,2),
//! x(0,3), …`), packed big-endian into 6-bit groups with 63 added to each.

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

/// Decodes one graph6 line. A leading `>>graph6<<` header and trailing
/// whitespace are accepted. Padding bits in the last byte are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let (body, base) = match text.strip_prefix(HEADER) {
        Some(rest) => (rest, HEADER.len()),
        None => (text, 0),
    };
    let bytes = body.trim_end().as_bytes();
    if bytes.is_empty() {
        return Err(Error::parse(base, "empty graph6 string"));
    }
    for (k, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(base + k, format!("byte {b} outside 63..=126")));
        }
    }

    let (n, start) = decode_size(bytes).map_err(|(k, msg)| Error::parse(base + k, msg))?;
    let pairs = n * n.saturating_sub(1) / 2;
    let needed = pairs.div_ceil(6);
    let payload = &bytes[start..];
    if payload.len() < needed {
        return Err(Error::parse(
            base + bytes.len(),
            format!(
                "payload too short: {n} vertices need {needed} bytes, found {}",
                payload.len()
            ),
        ));
    }
    if payload.len() > needed {
        return Err(Error::parse(
            base + start + needed,
            format!("{} trailing bytes after payload", payload.len() - needed),
        ));
    }

    let mut adj = vec![false; n * n];
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let group = payload[bit / 6] - 63;
            if group >> (5 - bit % 6) & 1 == 1 {
                adj[i * n + j] = true;
                adj[j * n + i] = true;
            }
            bit += 1;
        }
    }
    Ok(Graph::from_dense(n, adj))
}

fn decode_size(bytes: &[u8]) -> std::result::Result<(usize, usize), (usize, String)> {
    let six = |range: std::ops::Range<usize>| -> std::result::Result<usize, (usize, String)> {
        if bytes.len() < range.end {
            return Err((bytes.len(), "truncated size prefix".to_string()));
        }
        Ok(bytes[range]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63)))
    };
    if bytes[0] != 126 {
        return Ok((usize::from(bytes[0] - 63), 1));
    }
    if bytes.get(1) != Some(&126) {
        let n = six(1..4)?;
        if n < 63 {
            return Err((0, format!("non-canonical size prefix for n = {n}")));
        }
        return Ok((n, 4));
    }
    let n = six(2..8)?;
    if n < 258_048 {
        return Err((0, format!("non-canonical size prefix for n = {n}")));
    }
    Ok((n, 8))
}

/// Encodes a graph as graph6 (no header, no newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    }
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

#[derive(Serialize, Deserialize)]
struct EdgeList {
    n: usize,
    edges: Vec<[usize; 2]>,
}

/// Parses `{"n": int, "edges": [[i, j], ...]}`.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let list: EdgeList = serde_json::from_str(text).map_err(|e| Error::Parse {
        offset: json_offset(text, e.line(), e.column()),
        message: e.to_string(),
    })?;
    Graph::from_edges(list.n, list.edges.iter().map(|&[i, j]| (i, j)))
}

fn json_offset(text: &str, line: usize, column: usize) -> usize {
    let before: usize = text
        .split_inclusive('\n')
        .take(line.saturating_sub(1))
        .map(str::len)
        .sum();
    before + column.saturating_sub(1)
}

/// Serializes to the JSON edge-list format with edges in edge order.
pub fn to_edge_list_json(g: &Graph) -> String {
    let list = EdgeList {
        n: g.order(),
        edges: g.edges().iter().map(|&(i, j)| [i, j]).collect(),
    };
    serde_json::to_string(&list).expect("edge list serializes")
}

/// Parses either format: a JSON edge list when the first non-blank byte is
/// `{`, graph6 otherwise.
pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        parse_edge_list(text)
    } else {
        parse_graph6(text.trim())
    }
}
