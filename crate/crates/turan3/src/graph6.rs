//! graph6 encoding: compact printable ASCII for undirected graphs.
//!
//! Layout: a size header (one byte n+63 for n <= 62, or '~' plus three bytes
//! holding 18 bits big-endian for larger n), then the upper triangle of the
//! adjacency matrix in column-major order, packed 6 bits per byte, each byte
//! offset by 63. Bit order within a byte is big-endian.

use crate::error::{Error, Result};
use crate::graph::Graph;

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        assert!(n <= 258047, "graph6 size over format limit");
        out.push(b'~');
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
}

fn decode_size(bytes: &[u8]) -> Result<(usize, usize)> {
    match bytes.first() {
        None => Err(Error::Graph6("empty input".into())),
        Some(&b'~') => {
            if bytes.len() < 4 {
                return Err(Error::Graph6("truncated size header".into()));
            }
            if bytes[1] == b'~' {
                return Err(Error::Graph6("graph too large for this reader".into()));
            }
            let mut n = 0usize;
            for &b in &bytes[1..4] {
                if !(63..=126).contains(&b) {
                    return Err(Error::Graph6(format!("bad size byte {b}")));
                }
                n = n << 6 | (b - 63) as usize;
            }
            Ok((n, 4))
        }
        Some(&b) => {
            if !(63..=126).contains(&b) {
                return Err(Error::Graph6(format!("bad size byte {b}")));
            }
            Ok(((b - 63) as usize, 1))
        }
    }
}

/// Serialize one graph to a graph6 line (no trailing newline).
pub fn to_graph6<const W: usize>(g: &Graph<W>) -> String {
    let n = g.n();
    let mut out = Vec::new();
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parse one graph6 line.
pub fn from_graph6<const W: usize>(line: &str) -> Result<Graph<W>> {
    let bytes = line.trim_end().as_bytes();
    let (n, header) = decode_size(bytes)?;
    if n > crate::bitset::Bits::<W>::CAPACITY {
        return Err(Error::Graph6(format!(
            "graph on {n} vertices exceeds configured capacity {}",
            crate::bitset::Bits::<W>::CAPACITY
        )));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let body = &bytes[header..];
    let expect = nbits.div_ceil(6);
    if body.len() != expect {
        return Err(Error::Graph6(format!(
            "expected {expect} body bytes for n={n}, found {}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut bit_idx = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = body[bit_idx / 6];
            if !(63..=126).contains(&byte) {
                return Err(Error::Graph6(format!("bad body byte {byte}")));
            }
            let bit = (byte - 63) >> (5 - bit_idx % 6) & 1;
            if bit == 1 {
                edges.push((i, j));
            }
            bit_idx += 1;
            if bit_idx >= nbits {
                break 'outer;
            }
        }
    }
    // trailing pad bits must be zero
    for extra in nbits..body.len() * 6 {
        let byte = body[extra / 6];
        if (byte - 63) >> (5 - extra % 6) & 1 == 1 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(Graph::from_edges(n, edges))
}

/// Read every graph in a file, one graph6 line per graph. Blank lines are skipped.
pub fn read_graph6_file<const W: usize>(path: &std::path::Path) -> Result<Vec<Graph<W>>> {
    let text = std::fs::read_to_string(path)?;
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        out.push(from_graph6(line).map_err(|e| match e {
            Error::Graph6(msg) => Error::Graph6(format!("line {}: {msg}", idx + 1)),
            other => other,
        })?);
    }
    Ok(out)
}

/// Write graphs to a file, one graph6 line each.
pub fn write_graph6_file<const W: usize>(path: &std::path::Path, graphs: &[Graph<W>]) -> Result<()> {
    let mut text = String::new();
    for g in graphs {
        text.push_str(&to_graph6(g));
        text.push('\n');
    }
    std::fs::write(path, text)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, Graph64};

    #[test]
    fn known_encoding() {
        // 5 vertices, edges 02 04 13 34
        let g = Graph64::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert_eq!(to_graph6(&g), "DQc");
        let back: Graph64 = from_graph6("DQc").unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn roundtrip_various() {
        for g in [complete(1), complete(2), complete(7), crate::graph::cycle(6), Graph64::empty(0)] {
            let s = to_graph6(&g);
            let back: Graph64 = from_graph6(&s).unwrap();
            assert_eq!(back, g);
        }
    }

    #[test]
    fn large_header() {
        let g: crate::graph::BigGraph = Graph::from_edges(70, [(0, 69), (5, 6)]);
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        let back: crate::graph::BigGraph = from_graph6(&s).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn reject_malformed() {
        assert!(from_graph6::<1>("").is_err());
        assert!(from_graph6::<1>("D").is_err()); // missing body
        assert!(from_graph6::<1>("DQcX").is_err()); // extra body
        let oversized = to_graph6(&crate::graph::BigGraph::empty(100));
        assert!(from_graph6::<1>(&oversized).is_err()); // over the 64-vertex cap
    }
}
