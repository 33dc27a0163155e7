use serde::Deserialize;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    n: Option<usize>,
    edges: Vec<[usize; 2]>,
    #[serde(default)]
    names: Option<Vec<String>>,
}

/// Parses an edge list or a JSON document into a [`Graph`].
///
/// Edge-list text has one edge per line as two 1-based labels, `#` comments
/// and an optional `n <count>` header. Input whose first significant character
/// is `{` is read as a document `{"n": .., "edges": [[u, v], ..], "names": [..]}`.
pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        return parse_document(text);
    }
    let mut declared = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields[0] == "n" {
            if declared.is_some() || !edges.is_empty() {
                return Err(Error::malformed(line_no, "header must precede all edges"));
            }
            if fields.len() != 2 {
                return Err(Error::malformed(line_no, "expected `n <count>`"));
            }
            declared = Some(parse_label(fields[1], line_no)?);
            continue;
        }
        if fields.len() != 2 {
            return Err(Error::malformed(
                line_no,
                format!("expected two labels, found {}", fields.len()),
            ));
        }
        let u = parse_label(fields[0], line_no)?;
        let v = parse_label(fields[1], line_no)?;
        edges.push((line_no, u, v));
    }
    build(declared, &edges, None)
}

fn parse_document(text: &str) -> Result<Graph> {
    let doc: Document = serde_json::from_str(text).map_err(|e| Error::malformed(e.line(), e.to_string()))?;
    let edges: Vec<(usize, usize, usize)> = doc.edges.iter().map(|&[u, v]| (0, u, v)).collect();
    if edges.iter().any(|&(_, u, v)| u == 0 || v == 0) {
        return Err(Error::malformed(0, "labels are 1-based"));
    }
    build(doc.n, &edges, doc.names)
}

fn parse_label(field: &str, line: usize) -> Result<usize> {
    let v: usize = field
        .parse()
        .map_err(|_| Error::malformed(line, format!("`{field}` is not a positive integer")))?;
    if v == 0 {
        return Err(Error::malformed(line, "labels are 1-based"));
    }
    Ok(v)
}

fn build(declared: Option<usize>, edges: &[(usize, usize, usize)], names: Option<Vec<String>>) -> Result<Graph> {
    if edges.is_empty() {
        return Err(Error::malformed(0, "no edges"));
    }
    let max_label = edges.iter().map(|&(_, u, v)| u.max(v)).max().unwrap_or(0);
    let n = match declared {
        Some(n) if n < max_label => {
            return Err(Error::malformed(
                0,
                format!("label {max_label} exceeds declared vertex count {n}"),
            ))
        }
        Some(n) => n,
        None => max_label,
    };
    let mut seen = std::collections::HashSet::new();
    for &(line, u, v) in edges {
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::malformed(line, format!("duplicate edge {{{u},{v}}}")));
        }
    }
    let g = Graph::new(n, edges.iter().map(|&(_, u, v)| (u - 1, v - 1)))?;
    match names {
        Some(names) => g.with_names(names),
        None => Ok(g),
    }
}
