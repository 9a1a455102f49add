//! graph6 interchange format, short form only (order <= 62).
//!
//! One graph per line: a size byte `n + 63`, then the upper triangle of the
//! adjacency matrix in column order, packed big-endian into 6-bit groups,
//! each group offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order representable in the short form.
pub const GRAPH6_MAX_N: usize = 62;

const OFFSET: u8 = 63;

/// Decodes a single short-form graph6 line. Leading `>>graph6<<` headers and
/// surrounding whitespace are tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line).trim();
    if line.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    let bytes = line.as_bytes();
    if bytes[0] == b'~' {
        return Err(Error::UnsupportedSize {
            n: GRAPH6_MAX_N + 1,
            limit: GRAPH6_MAX_N,
            what: "short-form graph6",
        });
    }
    if !(OFFSET..=OFFSET + 62).contains(&bytes[0]) {
        return Err(Error::Graph6(format!("invalid size byte 0x{:02x}", bytes[0])));
    }
    let n = (bytes[0] - OFFSET) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let ngroups = nbits.div_ceil(6);
    let body = &bytes[1..];
    if body.len() != ngroups {
        return Err(Error::Graph6(format!(
            "expected {} data bytes for order {}, found {}",
            ngroups,
            n,
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for col in 1..n {
        for row in 0..col {
            let byte = body[bit / 6];
            if !(OFFSET..=OFFSET + 63).contains(&byte) {
                return Err(Error::Graph6(format!("invalid data byte 0x{byte:02x}")));
            }
            let group = byte - OFFSET;
            if (group >> (5 - bit % 6)) & 1 == 1 {
                edges.push((row, col));
            }
            bit += 1;
        }
    }
    Graph::new(n, &edges)
}

/// Encodes a graph in canonical short form. Fails for order > 62.
pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Error::UnsupportedSize {
            n,
            limit: GRAPH6_MAX_N,
            what: "short-form graph6",
        });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let mut out = vec![n as u8 + OFFSET];
    out.resize(1 + nbits.div_ceil(6), OFFSET);
    let mut bit = 0usize;
    for col in 1..n {
        for row in 0..col {
            if g.has_edge(row, col) {
                out[1 + bit / 6] += 1 << (5 - bit % 6);
            }
            bit += 1;
        }
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}
