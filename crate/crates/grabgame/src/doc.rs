//! Line-oriented weighted graph documents.
//!
//! ```text
//! # path with a heavy middle vertex
//! name path on three vertices
//! n 3
//! e 0 1
//! e 1 2
//! w 0 1 0
//! ```
//!
//! An `integer` line allows weights outside {0,1}.

use std::fmt::Write as _;

use grabgame_core::{Graph, WeightFn};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraphDoc {
    pub graph: Graph,
    pub weights: WeightFn,
    pub name: Option<String>,
    pub integer: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DocError {
    #[error("missing `n` line")]
    MissingN,
    #[error("missing `w` line")]
    MissingW,
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] grabgame_core::Error),
}

fn at(line: usize, msg: impl Into<String>) -> DocError {
    DocError::Line { line, msg: msg.into() }
}

impl WeightedGraphDoc {
    pub fn new(graph: Graph, weights: WeightFn) -> Result<Self, DocError> {
        weights.check_against(&graph)?;
        let integer = !weights.is_binary();
        Ok(Self { graph, weights, name: None, integer })
    }
}

pub fn parse_weighted_doc(text: &str) -> Result<WeightedGraphDoc, DocError> {
    let mut n: Option<(usize, usize)> = None;
    let mut name = None;
    let mut integer = false;
    let mut edges = Vec::new();
    let mut weights: Option<(usize, Vec<i64>)> = None;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
        let rest = rest.trim();
        let ints = |rest: &str| -> Result<Vec<i64>, DocError> {
            rest.split_whitespace()
                .map(|t| t.parse::<i64>().map_err(|_| at(line, format!("`{t}` is not an integer"))))
                .collect()
        };
        match key {
            "name" => name = Some(rest.to_string()),
            "integer" if rest.is_empty() => integer = true,
            "n" => {
                if n.is_some() {
                    return Err(at(line, "duplicate `n` line"));
                }
                let v = rest.parse::<usize>().map_err(|_| at(line, format!("bad vertex count `{rest}`")))?;
                n = Some((line, v));
            }
            "e" => match ints(rest)?.as_slice() {
                &[u, v] if u >= 0 && v >= 0 => edges.push((line, u as usize, v as usize)),
                _ => return Err(at(line, "expected `e <u> <v>` with two vertex ids")),
            },
            "w" => {
                if weights.is_some() {
                    return Err(at(line, "duplicate `w` line"));
                }
                weights = Some((line, ints(rest)?));
            }
            _ => return Err(at(line, format!("unknown directive `{key}`"))),
        }
    }

    let (n_line, n) = n.ok_or(DocError::MissingN)?;
    let (w_line, w) = weights.ok_or(DocError::MissingW)?;
    if n == 0 || n > grabgame_core::MAX_VERTICES {
        return Err(at(n_line, format!("vertex count {n} outside 1..={}", grabgame_core::MAX_VERTICES)));
    }
    let mut pairs = Vec::with_capacity(edges.len());
    for (line, u, v) in edges {
        if u >= n || v >= n {
            return Err(at(line, format!("vertex {} out of range for n = {n}", u.max(v))));
        }
        if u == v {
            return Err(at(line, format!("self-loop at vertex {u}")));
        }
        pairs.push((u, v));
    }
    if w.len() != n {
        return Err(at(w_line, format!("expected {n} weights, found {}", w.len())));
    }
    if !integer {
        if let Some(v) = w.iter().position(|&x| x != 0 && x != 1) {
            return Err(at(w_line, format!("weight {} of vertex {v} is not 0 or 1 (add an `integer` line)", w[v])));
        }
    }
    Ok(WeightedGraphDoc { graph: Graph::new(n, &pairs)?, weights: WeightFn::integer(w), name, integer })
}

pub fn emit_weighted_doc(doc: &WeightedGraphDoc) -> String {
    let mut out = String::new();
    if let Some(name) = &doc.name {
        writeln!(out, "name {name}").unwrap();
    }
    if doc.integer {
        out.push_str("integer\n");
    }
    writeln!(out, "n {}", doc.graph.n()).unwrap();
    for (u, v) in doc.graph.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    let w: Vec<String> = doc.weights.as_slice().iter().map(i64::to_string).collect();
    writeln!(out, "w {}", w.join(" ")).unwrap();
    out
}
