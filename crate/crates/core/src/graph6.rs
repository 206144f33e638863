//! The graph6 text format.
//!
//! A graph6 string is a size header followed by the upper triangle of the
//! adjacency matrix in column order `(0,1), (0,2), (1,2), (0,3), ...`,
//! packed six bits per byte with each byte offset by 63.

use thiserror::Error;

use crate::graph::{Graph, MAX_ORDER};

const BIAS: u8 = 63;
/// Optional prefix emitted by some tools.
pub const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range")]
    BadByte { offset: usize, byte: u8 },
    #[error("truncated size header at offset {offset}")]
    TruncatedHeader { offset: usize },
    #[error("size header at offset 0 is not in shortest form")]
    NonCanonicalHeader,
    #[error("graph of order {0} exceeds the supported maximum of {MAX_ORDER}")]
    TooLarge(u64),
    #[error("expected {expected} adjacency bytes starting at offset {offset}, found {found}")]
    BadLength {
        offset: usize,
        expected: usize,
        found: usize,
    },
    #[error("nonzero padding bits in the final byte at offset {offset}")]
    NonzeroPadding { offset: usize },
}

fn encode_order(n: u64, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    } else {
        out.extend_from_slice(b"~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    }
}

/// Returns the order and the offset where the adjacency bytes start.
fn decode_order(s: &[u8]) -> Result<(u64, usize), Graph6Error> {
    let word = |from: usize, len: usize| -> Result<u64, Graph6Error> {
        if s.len() < from + len {
            return Err(Graph6Error::TruncatedHeader { offset: s.len() });
        }
        Ok(s[from..from + len]
            .iter()
            .fold(0u64, |acc, &b| (acc << 6) | u64::from(b - BIAS)))
    };
    let (n, start) = if s[0] != b'~' {
        (u64::from(s[0] - BIAS), 1)
    } else if s.get(1) != Some(&b'~') {
        (word(1, 3)?, 4)
    } else {
        (word(2, 6)?, 8)
    };
    let canonical = match start {
        1 => true,
        4 => n > 62,
        _ => n > 258_047,
    };
    if !canonical {
        return Err(Graph6Error::NonCanonicalHeader);
    }
    Ok((n, start))
}

pub fn parse_graph6(input: &str) -> Result<Graph, Graph6Error> {
    let text = input.strip_prefix(HEADER).unwrap_or(input);
    let skip = input.len() - text.len();
    let s = text.trim_end_matches(['\n', '\r']).as_bytes();
    if s.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some(i) = s.iter().position(|b| !(BIAS..=126).contains(b)) {
        return Err(Graph6Error::BadByte {
            offset: skip + i,
            byte: s[i],
        });
    }
    let (n, start) = decode_order(s)?;
    if n > MAX_ORDER as u64 {
        return Err(Graph6Error::TooLarge(n));
    }
    let n = n as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    let body = &s[start..];
    if body.len() != expected {
        return Err(Graph6Error::BadLength {
            offset: skip + start,
            expected,
            found: body.len(),
        });
    }
    let bit = |k: usize| (body[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1;
    if let Some(&last) = body.last() {
        let used = nbits - (expected - 1) * 6;
        let pad_mask = (1u8 << (6 - used)) - 1;
        if (last - BIAS) & pad_mask != 0 {
            return Err(Graph6Error::NonzeroPadding {
                offset: skip + s.len() - 1,
            });
        }
    }
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
    Ok(Graph::from_edges(n, &edges).expect("decoded edges are in range"))
}

/// Encode the labeled graph (no relabeling).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    encode_order(n as u64, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}
