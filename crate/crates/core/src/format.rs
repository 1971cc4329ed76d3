//! graph6 and plain edge-list encodings.
//!
//! graph6 support is limited to the one-byte size field (`n <= 62`).
//! Bits of the upper triangle are taken column by column:
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed six per byte, most
//! significant first, each byte offset by 63.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{edge, Graph};

pub const GRAPH6_HEADER: &str = ">>graph6<<";
pub const GRAPH6_MAX_N: usize = 62;

fn g6_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Error::InvalidParameters(format!(
            "graph6 output supports at most {GRAPH6_MAX_N} vertices, got {n}"
        )));
    }
    let mut out = String::with_capacity(2 + n * n / 12);
    out.push((63 + n as u8) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((63 + acc) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((63 + (acc << (6 - filled))) as char);
    }
    Ok(out)
}

/// Parses one graph6 record. An optional `>>graph6<<` header and trailing
/// line terminator are accepted; byte offsets in errors count from the
/// start of `text`.
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let mut pos = 0;
    if text.starts_with(GRAPH6_HEADER.as_bytes()) {
        pos = GRAPH6_HEADER.len();
    }
    let mut end = text.len();
    while end > pos && matches!(text[end - 1], b'\n' | b'\r') {
        end -= 1;
    }
    let body = &text[..end];
    if pos >= body.len() {
        return Err(g6_err(pos, "missing size field"));
    }
    let size_byte = body[pos];
    if !(63..=126).contains(&size_byte) {
        return Err(g6_err(pos, format!("byte {size_byte} outside 63..=126")));
    }
    if size_byte == 126 {
        return Err(g6_err(
            pos,
            format!("size overflow: only n <= {GRAPH6_MAX_N} is supported"),
        ));
    }
    let n = (size_byte - 63) as usize;
    pos += 1;

    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    let payload = &body[pos..];
    if payload.len() < needed {
        return Err(g6_err(
            body.len(),
            format!(
                "truncated payload: need {needed} bytes, found {}",
                payload.len()
            ),
        ));
    }
    if payload.len() > needed {
        return Err(g6_err(pos + needed, "trailing bytes after payload"));
    }
    for (k, &b) in payload.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(g6_err(pos + k, format!("byte {b} outside 63..=126")));
        }
    }

    let bit = |k: usize| -> bool {
        let byte = payload[k / 6] - 63;
        (byte >> (5 - k % 6)) & 1 == 1
    };
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
    for k in bits..needed * 6 {
        if bit(k) {
            return Err(g6_err(pos + k / 6, "nonzero padding bits"));
        }
    }
    Graph::new(n, edges)
}

/// Writes `n <count>` followed by one `u v` line per edge, sorted.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", g.n()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Parses `u v` lines with 0-based ids. An optional first line `n <count>`
/// declares the vertex count; otherwise it is one past the largest id.
/// Blank lines and `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let err = |line: usize, message: String| Error::EdgeList { line, message };
    let parse_id = |line: usize, tok: &str| -> Result<usize> {
        if let Ok(x) = tok.parse::<i64>() {
            if x < 0 {
                return Err(err(line, format!("negative vertex id {x}")));
            }
        }
        tok.parse::<usize>()
            .map_err(|_| err(line, format!("invalid vertex id {tok:?}")))
    };

    let mut declared: Option<usize> = None;
    let mut seen_edge = false;
    let mut set = BTreeSet::new();
    let mut max_id: Option<usize> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        if toks[0] == "n" {
            if seen_edge || declared.is_some() {
                return Err(err(line, "vertex count must come first".into()));
            }
            if toks.len() != 2 {
                return Err(err(line, "expected `n <count>`".into()));
            }
            declared = Some(parse_id(line, toks[1])?);
            continue;
        }
        if toks.len() != 2 {
            return Err(err(
                line,
                format!("expected two vertex ids, found {}", toks.len()),
            ));
        }
        let u = parse_id(line, toks[0])?;
        let v = parse_id(line, toks[1])?;
        if u == v {
            return Err(err(line, format!("loop at vertex {u}")));
        }
        if let Some(n) = declared {
            if u.max(v) >= n {
                return Err(err(
                    line,
                    format!("vertex {} exceeds declared count {n}", u.max(v)),
                ));
            }
        }
        if !set.insert(edge(u, v)) {
            return Err(err(line, format!("duplicate edge {u} {v}")));
        }
        seen_edge = true;
        max_id = Some(max_id.map_or(u.max(v), |m| m.max(u).max(v)));
    }
    let n = declared.unwrap_or_else(|| max_id.map_or(0, |m| m + 1));
    Ok(Graph::from_sorted(n, set.into_iter().collect()))
}
