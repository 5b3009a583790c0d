//! graph6 encoding: a size prefix, then the upper triangle of the adjacency
//! matrix in column order (`(0,1), (0,2), (1,2), (0,3), ...`), six bits per
//! byte, each byte offset by 63.

use balance_core::graph::MAX_VERTICES;
use balance_core::SmallGraph;

use super::FormatError;

const HEADER: &str = ">>graph6<<";

pub fn encode(g: &SmallGraph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("printable ASCII")
}

pub fn decode(s: &str) -> Result<SmallGraph, FormatError> {
    let s = s.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bad = |why: String| FormatError::Graph6(s.to_string(), why);
    let bytes = s.as_bytes();
    if let Some(&b) = bytes.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(bad(format!("byte {b} outside 63..=126")));
    }
    let (n, body) = match bytes {
        [] => return Err(bad("empty".into())),
        [126, 126, ..] => return Err(bad("vertex counts above 258047 are not supported".into())),
        [126, rest @ ..] if rest.len() >= 3 => {
            let n = rest[..3].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, &rest[3..])
        }
        [126, ..] => return Err(bad("truncated size".into())),
        [b, rest @ ..] => ((b - 63) as usize, rest),
    };
    if n > MAX_VERTICES {
        return Err(bad(format!("{n} vertices exceed the cap of {MAX_VERTICES}")));
    }
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(bad(format!(
            "expected {} data bytes, found {}",
            bits.div_ceil(6),
            body.len()
        )));
    }
    let bit = |i: usize| (body[i / 6] - 63) >> (5 - i % 6) & 1 == 1;
    if (bits..body.len() * 6).any(bit) {
        return Err(bad("nonzero padding".into()));
    }
    let mut edges = Vec::new();
    let mut i = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(i) {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    SmallGraph::from_edges(n, &edges).map_err(|e| bad(e.to_string()))
}
