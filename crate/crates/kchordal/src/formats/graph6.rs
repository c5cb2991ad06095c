//! graph6 codec.
//!
//! The size `n` is written as one byte `n + 63` when `n <= 62`, as `126`
//! followed by three 6-bit groups when `n <= 258047`, and as `126 126`
//! followed by six groups otherwise. The upper triangle of the adjacency
//! matrix follows in column order `(0,1), (0,2), (1,2), (0,3), ...`, packed
//! big-endian six bits per byte, zero-padded, each byte offset by 63.

use kchordal_core::graph::pair_count;
use kchordal_core::Graph;
use thiserror::Error;

pub const HEADER: &str = ">>graph6<<";

const BIAS: u8 = 63;
const MAX_SMALL: usize = 62;
const MAX_MEDIUM: usize = 258_047;
const MAX_LARGE: usize = 68_719_476_735;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 input")]
    Empty,
    #[error("byte {offset}: {byte:#04x} is outside the graph6 range 63..=126")]
    ByteOutOfRange { offset: usize, byte: u8 },
    #[error("byte {offset}: malformed size prefix")]
    BadSizePrefix { offset: usize },
    #[error("byte {offset}: input ends early; {expected} adjacency bytes required")]
    Truncated { offset: usize, expected: usize },
    #[error("byte {offset}: trailing bytes after the adjacency data")]
    TrailingBytes { offset: usize },
    #[error("byte {offset}: non-zero padding bits")]
    NonZeroPadding { offset: usize },
}

fn push_size(out: &mut String, n: usize) {
    let groups: &[u32] = if n <= MAX_SMALL {
        &[0]
    } else if n <= MAX_MEDIUM {
        out.push('~');
        &[12, 6, 0]
    } else {
        assert!(n <= MAX_LARGE, "graph too large for graph6");
        out.push_str("~~");
        &[30, 24, 18, 12, 6, 0]
    };
    for &shift in groups {
        out.push(char::from(((n >> shift) & 0x3f) as u8 + BIAS));
    }
}

/// Encodes `g` as a header-less graph6 line (no trailing newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.adjacent(i, j));
            bits += 1;
            if bits == 6 {
                out.push(char::from(acc + BIAS));
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push(char::from((acc << (6 - bits)) + BIAS));
    }
    out
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and a trailing
/// line terminator are accepted. Error offsets count bytes of `text`.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let line = text.trim_end_matches(['\n', '\r']);
    let start = if line.starts_with(HEADER) { HEADER.len() } else { 0 };
    let bytes = &line.as_bytes()[start..];
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let mut values = Vec::with_capacity(bytes.len());
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::ByteOutOfRange {
                offset: start + i,
                byte: b,
            });
        }
        values.push(b - BIAS);
    }

    let read_groups = |from: usize, count: usize| -> Result<usize, Graph6Error> {
        let groups = values.get(from..from + count).ok_or(Graph6Error::BadSizePrefix {
            offset: start + values.len(),
        })?;
        Ok(groups.iter().fold(0usize, |acc, &g| acc << 6 | usize::from(g)))
    };
    let (n, body_at) = if values[0] != 63 {
        (usize::from(values[0]), 1)
    } else if values.get(1) != Some(&63) {
        let n = read_groups(1, 3)?;
        if n <= MAX_SMALL {
            return Err(Graph6Error::BadSizePrefix { offset: start });
        }
        (n, 4)
    } else {
        let n = read_groups(2, 6)?;
        if n <= MAX_MEDIUM {
            return Err(Graph6Error::BadSizePrefix { offset: start });
        }
        (n, 8)
    };

    let bit_count = pair_count(n);
    let expected = bit_count.div_ceil(6);
    let body = &values[body_at..];
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            offset: start + values.len(),
            expected,
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingBytes {
            offset: start + body_at + expected,
        });
    }
    let pad = expected * 6 - bit_count;
    if pad > 0 && body[expected - 1] & ((1 << pad) - 1) != 0 {
        return Err(Graph6Error::NonZeroPadding {
            offset: start + body_at + expected - 1,
        });
    }

    let bit = |k: usize| body[k / 6] >> (5 - k % 6) & 1 == 1;
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
    Ok(Graph::from_edges(n, edges).expect("decoded pairs are valid"))
}
