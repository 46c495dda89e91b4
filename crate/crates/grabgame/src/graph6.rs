//! Short-form graph6 (at most 62 vertices).
//!
//! The first byte is `n + 63`. The upper adjacency triangle follows in
//! column order x(0,1), x(0,2), x(1,2), x(0,3), …, packed big-endian into
//! 6-bit groups, each offset by 63, with zero padding at the end.

use grabgame_core::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte} at offset {offset} is outside 63..=126")]
    ByteOutOfRange { offset: usize, byte: u8 },
    #[error("long-form graph6 (more than 62 vertices) is not supported")]
    LongForm,
    #[error("graph6 for {n} vertices needs {expected} bytes, found {got}")]
    Length { n: usize, expected: usize, got: usize },
    #[error("graph on 0 vertices")]
    NoVertices,
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let s = line.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s).as_bytes();
    let (&first, body) = s.split_first().ok_or(Graph6Error::Empty)?;
    for (offset, &byte) in s.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::ByteOutOfRange { offset, byte });
        }
    }
    if first == 126 {
        return Err(Graph6Error::LongForm);
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(Graph6Error::NoVertices);
    }
    let expected = body_len(n);
    if body.len() != expected {
        return Err(Graph6Error::Length { n, expected: expected + 1, got: s.len() });
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::new(n, &edges).expect("graph6 decodes to a simple graph"))
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    debug_assert!(n <= MAX_VERTICES);
    let mut out = String::with_capacity(1 + body_len(n));
    out.push((n as u8 + 63) as char);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((group + 63) as char);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((group << (6 - filled)) + 63) as char);
    }
    out
}
