//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix in column order (`x(0,1), x(0,2), x(1,2), x(0,3), ...`),
//! six bits per byte, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

fn parse_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

fn sixbits(bytes: &[u8], at: usize) -> Result<u64> {
    let b = *bytes
        .get(at)
        .ok_or_else(|| parse_err(at, "unexpected end of input"))?;
    if !(63..=126).contains(&b) {
        return Err(parse_err(at, format!("byte {b} outside 63..=126")));
    }
    Ok((b - 63) as u64)
}

/// Parse one graph6 line. Surrounding whitespace is ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let lead = text.len() - text.trim_start().len();
    let body = text.trim();
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(parse_err(lead, "empty input"));
    }
    let (n, mut pos) = if bytes[0] != 126 {
        (sixbits(bytes, 0).map_err(|e| shift(e, lead))? as usize, 1)
    } else if bytes.get(1) != Some(&126) {
        let mut n = 0u64;
        for i in 1..4 {
            n = n << 6 | sixbits(bytes, i).map_err(|e| shift(e, lead))?;
        }
        (n as usize, 4)
    } else {
        let mut n = 0u64;
        for i in 2..8 {
            n = n << 6 | sixbits(bytes, i).map_err(|e| shift(e, lead))?;
        }
        (n as usize, 8)
    };
    if n > MAX_VERTICES {
        return Err(parse_err(lead, format!("{n} vertices exceeds limit {MAX_VERTICES}")));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() < pos + nbytes {
        return Err(parse_err(
            lead + bytes.len(),
            format!("expected {} data bytes, found {}", nbytes, bytes.len() - pos),
        ));
    }
    if bytes.len() > pos + nbytes {
        return Err(parse_err(lead + pos + nbytes, "trailing bytes after graph data"));
    }
    let mut adj = vec![0u64; n];
    let mut k = 0usize;
    let mut chunk = 0u64;
    for j in 1..n {
        for i in 0..j {
            if k.is_multiple_of(6) {
                chunk = sixbits(bytes, pos).map_err(|e| shift(e, lead))?;
                pos += 1;
            }
            if chunk >> (5 - k % 6) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if !k.is_multiple_of(6) && chunk & ((1 << (6 - k % 6)) - 1) != 0 {
        return Err(parse_err(lead + pos - 1, "nonzero padding bits"));
    }
    Ok(Graph::from_adjacency(adj))
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Graph6 { offset, reason } => Error::Graph6 {
            offset: offset + by,
            reason,
        },
        other => other,
    }
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut chunk = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k.is_multiple_of(6) {
                out.push(chunk + 63);
                chunk = 0;
            }
        }
    }
    if !k.is_multiple_of(6) {
        out.push((chunk << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4() {
        let g = parse_graph6("C~").unwrap();
        assert_eq!((g.n(), g.m()), (4, 6));
        assert!(g.is_complete());
        assert_eq!(emit_graph6(&g), "C~");
    }

    #[test]
    fn empty_on_five() {
        let g = parse_graph6("D??").unwrap();
        assert_eq!((g.n(), g.m()), (5, 0));
    }

    #[test]
    fn known_string() {
        // A->C, A->E, B->D, D->E with A..E = 0..4.
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(emit_graph6(&g), "DQc");
        assert_eq!(parse_graph6("DQc\n").unwrap(), g);
    }

    #[test]
    fn errors_carry_offsets() {
        match parse_graph6("C~~") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("{other:?}"),
        }
        match parse_graph6("D?") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("{other:?}"),
        }
        match parse_graph6("C\x7f") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        assert!(parse_graph6("").is_err());
        // n = 3 has 3 data bits; padding must be zero.
        assert!(parse_graph6("B@").is_err());
    }
}
