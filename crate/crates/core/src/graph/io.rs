//! graph6 and plain edge-list encodings.

use super::Graph;
use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

const GRAPH6_HEADER: &str = ">>graph6<<";

fn g6_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

/// Decodes one graph6 record. A leading `>>graph6<<` header and trailing
/// whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let body = text.trim_end();
    let (base, body) = match body.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (GRAPH6_HEADER.len(), rest),
        None => (0, body),
    };
    let bytes = body.as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(g6_err(
            base + pos,
            format!("byte {:#04x} outside the graph6 alphabet", bytes[pos]),
        ));
    }
    let (n, mut pos) = decode_size(bytes).map_err(|(off, msg)| g6_err(base + off, msg))?;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }

    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    let available = bytes.len() - pos;
    if available < needed {
        return Err(g6_err(
            base + bytes.len(),
            format!("truncated bit vector: expected {needed} bytes, found {available}"),
        ));
    }
    if available > needed {
        return Err(g6_err(base + pos + needed, "trailing bytes after bit vector"));
    }

    let mut adj = vec![VertexSet::new(); n];
    let mut k = 0usize;
    let mut chunk = 0u8;
    let mut remaining_in_chunk = 0;
    for j in 1..n {
        for i in 0..j {
            if remaining_in_chunk == 0 {
                chunk = bytes[pos] - 63;
                pos += 1;
                remaining_in_chunk = 6;
            }
            remaining_in_chunk -= 1;
            if chunk >> remaining_in_chunk & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    debug_assert_eq!(k, n * n.saturating_sub(1) / 2);
    if remaining_in_chunk > 0 && chunk & ((1 << remaining_in_chunk) - 1) != 0 {
        return Err(g6_err(base + pos - 1, "nonzero padding bits"));
    }
    Graph::from_adjacency(adj)
}

fn decode_size(bytes: &[u8]) -> std::result::Result<(usize, usize), (usize, &'static str)> {
    let field = |range: std::ops::Range<usize>| -> std::result::Result<usize, (usize, &'static str)> {
        if bytes.len() < range.end {
            return Err((bytes.len(), "truncated size field"));
        }
        Ok(bytes[range].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize))
    };
    match bytes {
        [] => Err((0, "empty graph6 record")),
        [126, 126, ..] => Ok((field(2..8)?, 8)),
        [126, ..] => Ok((field(1..4)?, 4)),
        [b, ..] => Ok(((b - 63) as usize, 1)),
    }
}

/// Encodes `g` as a graph6 record (no header, no newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::with_capacity(4 + n * n / 12);
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        // MAX_VERTICES keeps n well inside the 18-bit form.
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + (n >> shift & 0x3f) as u8);
        }
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + chunk);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (chunk << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses the `n <count>` / `u v` edge-list format (0-based vertices).
/// Blank lines and lines starting with `#` are skipped; duplicate edges are merged.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let err = |line: usize, message: String| Error::EdgeList { line, message };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line_no, header) = lines
        .next()
        .ok_or_else(|| err(1, "missing `n <count>` header".into()))?;
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", count] => count
            .parse::<usize>()
            .map_err(|_| err(line_no, format!("invalid vertex count `{count}`")))?,
        _ => return Err(err(line_no, format!("expected `n <count>`, found `{header}`"))),
    };
    let mut g = Graph::empty(n)?;
    for (line_no, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = fields[..] else {
            return Err(err(line_no, format!("expected `u v`, found `{line}`")));
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| err(line_no, format!("invalid vertex `{s}`")))
        };
        let (u, v) = (parse(u)?, parse(v)?);
        if u >= n || v >= n {
            return Err(err(line_no, format!("vertex {} out of range 0..{n}", u.max(v))));
        }
        if u == v {
            return Err(err(line_no, format!("self-loop at vertex {u}")));
        }
        g.insert_edge(u, v)?;
    }
    Ok(g)
}

/// Writes `g` in the edge-list format accepted by [`parse_edge_list`].
pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}
