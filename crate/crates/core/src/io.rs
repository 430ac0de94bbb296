//! Graph serialization: DIMACS edge format and a JSON adjacency-list form.
//!
//! Both writers are canonical (sorted edge lists, fixed key order) so that
//! generate → parse → re-serialize is byte-identical.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Dimacs,
    Json,
}

impl GraphFormat {
    pub fn from_name(name: &str) -> Option<GraphFormat> {
        match name {
            "dimacs" => Some(GraphFormat::Dimacs),
            "json" => Some(GraphFormat::Json),
            _ => None,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

pub fn write_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Dimacs => write_dimacs(g),
        GraphFormat::Json => write_json(g),
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph, IoError> {
    match format {
        GraphFormat::Dimacs => parse_dimacs(text),
        GraphFormat::Json => parse_json(text),
    }
}

/// Sniffs the format: JSON input starts with '{'.
pub fn parse_graph_auto(text: &str) -> Result<Graph, IoError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_dimacs(text)
    }
}

/// DIMACS edge format, 1-indexed. Labels, when present, are carried in
/// `c l <vertex> <label>` comment lines.
pub fn write_dimacs(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("p edge {} {}\n", g.n(), edges.len());
    if let Some(labels) = g.labels() {
        for (i, l) in labels.iter().enumerate() {
            out.push_str(&format!("c l {} {}\n", i + 1, l));
        }
    }
    for (u, v) in edges {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

pub fn parse_dimacs(text: &str) -> Result<Graph, IoError> {
    let mut n: Option<usize> = None;
    let mut declared_m = 0usize;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut labels: Vec<(usize, String)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let l = raw.trim();
        if l.is_empty() {
            continue;
        }
        let err = |msg: &str| IoError::Parse {
            line,
            msg: msg.to_string(),
        };
        let mut parts = l.split_whitespace();
        match parts.next() {
            Some("c") => {
                let rest: Vec<&str> = parts.collect();
                if rest.len() >= 3 && rest[0] == "l" {
                    let v: usize = rest[1]
                        .parse()
                        .map_err(|_| err("bad label vertex index"))?;
                    if v == 0 {
                        return Err(err("label vertex indices are 1-based"));
                    }
                    labels.push((v - 1, rest[2..].join(" ")));
                }
            }
            Some("p") => {
                if parts.next() != Some("edge") {
                    return Err(err("expected 'p edge <n> <m>'"));
                }
                let nv: usize = parts
                    .next()
                    .ok_or_else(|| err("missing vertex count"))?
                    .parse()
                    .map_err(|_| err("bad vertex count"))?;
                declared_m = parts
                    .next()
                    .ok_or_else(|| err("missing edge count"))?
                    .parse()
                    .map_err(|_| err("bad edge count"))?;
                n = Some(nv);
            }
            Some("e") => {
                let u: usize = parts
                    .next()
                    .ok_or_else(|| err("missing endpoint"))?
                    .parse()
                    .map_err(|_| err("bad endpoint"))?;
                let v: usize = parts
                    .next()
                    .ok_or_else(|| err("missing endpoint"))?
                    .parse()
                    .map_err(|_| err("bad endpoint"))?;
                if u == 0 || v == 0 {
                    return Err(err("DIMACS vertices are 1-based"));
                }
                edges.push((u - 1, v - 1));
            }
            _ => return Err(err("unrecognized line")),
        }
    }

    let n = n.ok_or(IoError::Parse {
        line: 0,
        msg: "missing 'p edge' header".to_string(),
    })?;
    if edges.len() != declared_m {
        return Err(IoError::Parse {
            line: 0,
            msg: format!("header declares {declared_m} edges, found {}", edges.len()),
        });
    }
    let mut g = Graph::new(n, &edges)?;
    if !labels.is_empty() {
        let mut full = vec![String::new(); n];
        for (v, l) in labels {
            if v >= n {
                return Err(IoError::Parse {
                    line: 0,
                    msg: format!("label for out-of-range vertex {}", v + 1),
                });
            }
            full[v] = l;
        }
        g = g.with_labels(full)?;
    }
    Ok(g)
}

pub fn write_json(g: &Graph) -> String {
    let doc = GraphJson {
        n: g.n(),
        edges: g.edges(),
        labels: g.labels().map(|l| l.to_vec()),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("graph serialization cannot fail");
    s.push('\n');
    s
}

pub fn parse_json(text: &str) -> Result<Graph, IoError> {
    let doc: GraphJson = serde_json::from_str(text)?;
    let mut g = Graph::new(doc.n, &doc.edges)?;
    if let Some(labels) = doc.labels {
        g = g.with_labels(labels)?;
    }
    Ok(g)
}
