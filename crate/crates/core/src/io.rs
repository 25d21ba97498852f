//! Text formats: the `n m` edge-list format and the graph6 format.
//!
//! graph6 follows the published standard bit-exactly: `N(n)` header (one
//! character `n + 63` for `n <= 62`, else `'~'` plus three characters
//! carrying 18 bits), then the upper triangle in column order
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed big-endian into 6-bit
//! groups, each group offset by 63.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, VertexLabel};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: malformed line {content:?}")]
    MalformedLine { line: usize, content: String },
    #[error("line {line}: vertex {vertex} out of range for order {order}")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        order: usize,
    },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("missing header line")]
    MissingHeader,
    #[error("graph6: bad header: {0}")]
    BadHeader(String),
    #[error("graph6: truncated bit stream")]
    TruncatedBits,
    #[error("graph6: trailing data after bit stream")]
    TrailingData,
}

/// Result of [`parse_edge_list`]: the graph plus a duplicate-edge warning flag.
#[derive(Debug, Clone)]
pub struct EdgeListGraph {
    pub graph: Graph,
    /// Number of input edges that repeated an earlier one (collapsed, not an error).
    pub duplicate_edges: usize,
}

impl EdgeListGraph {
    pub fn had_duplicates(&self) -> bool {
        self.duplicate_edges > 0
    }
}

/// Parses the edge-list format: a header line `n m`, then `m` lines `u v`
/// with `0 <= u, v < n` and `u != v`. Lines starting with `#` and blank
/// lines are skipped, so files written with a label-mapping header round-trip.
pub fn parse_edge_list(text: &str) -> Result<EdgeListGraph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_no, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let parse_pair = |line: usize, content: &str| -> Result<(usize, usize), ParseError> {
        let malformed = || ParseError::MalformedLine {
            line,
            content: content.to_string(),
        };
        let mut it = content.split_whitespace();
        let a = it
            .next()
            .ok_or_else(malformed)?
            .parse()
            .map_err(|_| malformed())?;
        let b = it
            .next()
            .ok_or_else(malformed)?
            .parse()
            .map_err(|_| malformed())?;
        if it.next().is_some() {
            return Err(malformed());
        }
        Ok((a, b))
    };

    let (n, m) = parse_pair(header_no, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::BTreeSet::new();
    let mut duplicate_edges = 0;
    for k in 0..m {
        let (line_no, line) = lines.next().ok_or_else(|| ParseError::MalformedLine {
            line: header_no,
            content: format!("header promises {m} edges, found {k}"),
        })?;
        let (u, v) = parse_pair(line_no, line)?;
        for w in [u, v] {
            if w >= n {
                return Err(ParseError::VertexOutOfRange {
                    line: line_no,
                    vertex: w,
                    order: n,
                });
            }
        }
        if u == v {
            return Err(ParseError::SelfLoop {
                line: line_no,
                vertex: u,
            });
        }
        if seen.insert((u.min(v), u.max(v))) {
            edges.push((u, v));
        } else {
            duplicate_edges += 1;
        }
    }
    if let Some((line_no, line)) = lines.next() {
        return Err(ParseError::MalformedLine {
            line: line_no,
            content: line.to_string(),
        });
    }
    let graph = Graph::from_atom_edges(n, edges).map_err(|_| ParseError::MalformedLine {
        line: header_no,
        content: header.to_string(),
    })?;
    Ok(EdgeListGraph {
        graph,
        duplicate_edges,
    })
}

/// Writes the edge-list format. When the labels are not the canonical atoms
/// `0..n-1`, a `# i = label` mapping header records the original labels.
pub fn write_edge_list(g: &Graph) -> String {
    let canonical = g
        .labels()
        .iter()
        .enumerate()
        .all(|(i, l)| *l == VertexLabel::Atom(i));
    write_edge_list_impl(g, !canonical)
}

/// Like [`write_edge_list`] but the `# i = label` mapping header is always
/// present, identity mappings included.
pub fn write_edge_list_with_header(g: &Graph) -> String {
    write_edge_list_impl(g, true)
}

fn write_edge_list_impl(g: &Graph, header: bool) -> String {
    let mut out = String::new();
    if header {
        for (i, label) in g.labels().iter().enumerate() {
            writeln!(out, "# {i} = {label}").unwrap();
        }
    }
    writeln!(out, "{} {}", g.order(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

const G6_MAX_SHORT: usize = 62;
const G6_MAX_LONG: usize = 258047;

/// Decodes one graph6 line into a graph with atom labels.
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let line = text.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::BadHeader("empty input".to_string()));
    }
    if let Some(&bad) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(ParseError::BadHeader(format!(
            "byte {bad} outside the graph6 alphabet 63..=126"
        )));
    }

    let (n, mut pos) = if bytes[0] == b'~' {
        if bytes.len() >= 2 && bytes[1] == b'~' {
            return Err(ParseError::BadHeader(
                "orders above 258047 are not supported".to_string(),
            ));
        }
        if bytes.len() < 4 {
            return Err(ParseError::BadHeader(
                "truncated long-form order".to_string(),
            ));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b as usize - 63));
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };

    let bits_needed = n * n.saturating_sub(1) / 2;
    let chars_needed = bits_needed.div_ceil(6);
    if bytes.len() - pos < chars_needed {
        return Err(ParseError::TruncatedBits);
    }
    if bytes.len() - pos > chars_needed {
        return Err(ParseError::TrailingData);
    }

    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let group = bytes[pos + bit_index / 6] as usize - 63;
            let bit = (group >> (5 - bit_index % 6)) & 1;
            if bit == 1 {
                edges.push((i, j));
            }
            bit_index += 1;
            if bit_index == bits_needed {
                break 'outer;
            }
        }
    }
    pos += chars_needed;
    let _ = pos;
    Graph::from_atom_edges(n, edges).map_err(|e| ParseError::BadHeader(e.to_string()))
}

/// Encodes a graph as one graph6 line (labels are dropped; graph6 carries
/// only the adjacency structure).
pub fn encode_graph6(g: &Graph) -> Result<String, ParseError> {
    let n = g.order();
    if n > G6_MAX_LONG {
        return Err(ParseError::BadHeader(format!(
            "order {n} exceeds the supported graph6 maximum {G6_MAX_LONG}"
        )));
    }
    let mut out = String::new();
    if n <= G6_MAX_SHORT {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push((group + 63) as char);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        group <<= 6 - filled;
        out.push((group + 63) as char);
    }
    Ok(out)
}
