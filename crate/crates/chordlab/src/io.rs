//! graph6 and edge-list text formats, and line-numbered corpus streaming.

use std::fs;
use std::io::BufRead;
use std::path::Path;

use chordlab_core::{Error as CoreError, Graph};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list: {0}")]
    EdgeList(String),
    #[error("line {line}: {source}")]
    Line {
        line: usize,
        #[source]
        source: Box<IoError>,
    },
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, IoError>;

const HEADER: &str = ">>graph6<<";

fn g6err(msg: impl Into<String>) -> IoError {
    IoError::Graph6(msg.into())
}

/// Decodes one graph6 line. An optional `>>graph6<<` header is skipped.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(g6err("empty record"));
    }
    if let Some(i) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(g6err(format!("byte {} at offset {i} is outside 63..126", bytes[i])));
    }
    let (n, body) = if bytes[0] == 126 {
        // long form: 126 then three 6-bit digits
        if bytes.get(1) == Some(&126) {
            return Err(g6err("orders above 258047 are not supported"));
        }
        if bytes.len() < 4 {
            return Err(g6err("truncated long-form size prefix"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63));
        if n < 63 {
            return Err(g6err(format!("long-form size prefix encodes {n}, which needs the short form")));
        }
        (n, &bytes[4..])
    } else {
        (usize::from(bytes[0] - 63), &bytes[1..])
    };
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() != need {
        return Err(g6err(format!(
            "order {n} needs {need} payload bytes, found {}",
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..need * 6).any(bit) {
        return Err(g6err("nonzero padding bits"));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                g.add_edge(u, v)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Encodes `g` as a short-form graph6 line, without a newline.
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n >= 63 {
        return Err(g6err(format!("order {n} needs the long form, which is not written")));
    }
    if !g.is_simple() {
        return Err(g6err("multigraphs have no graph6 encoding"));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut payload = vec![0u8; bits.div_ceil(6)];
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(u, v) {
                payload[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    let mut out = String::with_capacity(payload.len() + 1);
    out.push(char::from(n as u8 + 63));
    out.extend(payload.into_iter().map(|b| char::from(b + 63)));
    Ok(out)
}

/// Lazily decodes a graph6 corpus, one record per line, yielding 1-based line
/// numbers with each graph. Blank lines are skipped.
pub fn stream_corpus<R: BufRead>(reader: R) -> impl Iterator<Item = Result<(usize, Graph)>> {
    reader.lines().enumerate().filter_map(|(i, line)| {
        let line = match line {
            Ok(l) => l,
            Err(e) => return Some(Err(e.into())),
        };
        let rec = line.trim();
        if rec.is_empty() {
            return None;
        }
        Some(parse_graph6(rec).map(|g| (i + 1, g)).map_err(|e| IoError::Line {
            line: i + 1,
            source: Box::new(e),
        }))
    })
}

fn numbers(line: &str) -> std::result::Result<Vec<usize>, String> {
    line.split_whitespace()
        .map(|t| t.parse().map_err(|_| format!("`{t}` is not a vertex number")))
        .collect()
}

/// Parses the edge-list format: a header `n m`, then `m` lines `u v`.
/// Blank lines and lines starting with `#` are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let at = |line: usize, msg: String| IoError::Line {
        line,
        source: Box::new(IoError::EdgeList(msg)),
    };
    let (hl, header) = lines.next().ok_or_else(|| IoError::EdgeList("missing header".into()))?;
    let (n, m) = match numbers(header).map_err(|e| at(hl, e))?.as_slice() {
        &[n, m] => (n, m),
        _ => return Err(at(hl, "header must be `n m`".into())),
    };
    let mut g = Graph::empty(n)?;
    let mut seen = 0;
    for (ln, l) in lines {
        match numbers(l).map_err(|e| at(ln, e))?.as_slice() {
            &[u, v] => {
                g.add_edge(u, v).map_err(|e| IoError::Line {
                    line: ln,
                    source: Box::new(e.into()),
                })?;
            }
            _ => return Err(at(ln, "expected `u v`".into())),
        }
        seen += 1;
    }
    if seen != m {
        return Err(IoError::EdgeList(format!("header promises {m} edges, found {seen}")));
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Reads a single graph from a file holding either an edge list or one
/// graph6 record. A first line of two integers marks the edge-list format.
pub fn read_graph_file(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path)?;
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        None => Err(g6err("empty file")),
        Some(l) if numbers(l).is_ok() => parse_edge_list(&text),
        Some(l) => parse_graph6(l),
    }
}
