//! The graph6 text encoding: a size header followed by the upper triangle of
//! the adjacency matrix in column order, packed six bits per printable byte.

use super::{Graph, GraphError};

const HEADER: &str = ">>graph6<<";

fn err(offset: usize, reason: impl Into<String>) -> GraphError {
    GraphError::Graph6 {
        offset,
        reason: reason.into(),
    }
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u32, GraphError> {
    let b = *bytes
        .get(offset)
        .ok_or_else(|| err(offset, "unexpected end of input"))?;
    if !(63..=126).contains(&b) {
        return Err(err(offset, format!("byte {b:#04x} outside 63..=126")));
    }
    Ok(u32::from(b - 63))
}

/// Decodes a single graph6 line. A leading `>>graph6<<` header and trailing
/// whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let start = if text.starts_with(HEADER) {
        HEADER.len()
    } else {
        0
    };
    let bytes = text[start..].trim_end().as_bytes();
    let at = |i: usize| start + i;

    let (n, mut pos) = match bytes.first() {
        None => return Err(err(at(0), "empty input")),
        Some(b'~') if bytes.get(1) == Some(&b'~') => {
            let mut n = 0usize;
            for i in 2..8 {
                n = (n << 6) | sextet(bytes, i).map_err(|e| relocate(e, start))? as usize;
            }
            (n, 8)
        }
        Some(b'~') => {
            let mut n = 0usize;
            for i in 1..4 {
                n = (n << 6) | sextet(bytes, i).map_err(|e| relocate(e, start))? as usize;
            }
            (n, 4)
        }
        Some(_) => (
            sextet(bytes, 0).map_err(|e| relocate(e, start))? as usize,
            1,
        ),
    };
    if n == 0 {
        return Err(err(at(0), "graph6 encodes zero vertices"));
    }

    let bits = n * (n - 1) / 2;
    let expected = pos + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(err(
            at(bytes.len().min(expected)),
            format!(
                "expected {expected} bytes for {n} vertices, found {}",
                bytes.len()
            ),
        ));
    }

    let mut edges = Vec::new();
    let mut k = 0;
    let mut chunk = 0;
    for j in 1..n {
        for i in 0..j {
            if k % 6 == 0 {
                chunk = sextet(bytes, pos).map_err(|e| relocate(e, start))?;
                pos += 1;
            }
            if chunk & (1 << (5 - k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    // Padding bits in the final byte must be zero.
    if k % 6 != 0 && chunk & ((1 << (6 - k % 6)) - 1) != 0 {
        return Err(err(at(pos - 1), "non-zero padding bits"));
    }
    Graph::from_edge_list(n, edges)
}

fn relocate(e: GraphError, shift: usize) -> GraphError {
    match e {
        GraphError::Graph6 { offset, reason } => GraphError::Graph6 {
            offset: offset + shift,
            reason,
        },
        other => other,
    }
}

/// Encodes `g` as graph6 without header or trailing newline.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend_from_slice(b"~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }

    let mut chunk = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            chunk <<= 1;
            if g.has_edge(i, j) {
                chunk |= 1;
            }
            k += 1;
            if k % 6 == 0 {
                out.push(chunk + 63);
                chunk = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((chunk << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}
