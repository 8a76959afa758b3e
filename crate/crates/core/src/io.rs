//! graph6 and plain edge-list text formats.
//!
//! The edge-list format is a header line `p q` followed by `q` lines `u v`
//! with 0-based vertices. Parsing tolerates arbitrary whitespace; writing is
//! canonical (edges in lexicographic order, one per line, trailing newline).

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

/// Encodes a graph as a graph6 string (no header, no newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Decodes one graph6 string. An optional `>>graph6<<` header and surrounding
/// whitespace are accepted. Non-zero padding bits are rejected so that
/// decoding followed by encoding reproduces the input exactly.
pub fn from_graph6(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse("empty graph6 string".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse(format!("invalid graph6 byte {b:#04x}")));
    }
    let six = |b: u8| (b - 63) as usize;
    let (n, body) = if bytes[0] != 126 {
        (six(bytes[0]), &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(Error::Parse("truncated graph6 size field".into()));
        }
        let n = (six(bytes[1]) << 12) | (six(bytes[2]) << 6) | six(bytes[3]);
        (n, &bytes[4..])
    } else {
        if bytes.len() < 8 {
            return Err(Error::Parse("truncated graph6 size field".into()));
        }
        let n = bytes[2..8].iter().fold(0usize, |acc, &b| (acc << 6) | six(b));
        (n, &bytes[8..])
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Parse(format!(
            "graph6 body has {} bytes, expected {expected} for {n} vertices",
            body.len()
        )));
    }
    let bit = |k: usize| (six(body[k / 6]) >> (5 - k % 6)) & 1 == 1;
    for k in nbits..expected * 6 {
        if bit(k) {
            return Err(Error::Parse("non-zero graph6 padding bits".into()));
        }
    }
    let mut pairs = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                pairs.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edge_list(n, &pairs)
}

/// Canonical edge-list text.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u(), e.v()));
    }
    out
}

/// Parses the edge-list format. The declared edge count must match the
/// number of pairs that follow.
pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut tokens = text.split_whitespace().map(|t| {
        t.parse::<usize>()
            .map_err(|_| Error::Parse(format!("expected a non-negative integer, found {t:?}")))
    });
    let mut next = |what: &str| -> Result<usize> {
        tokens
            .next()
            .unwrap_or_else(|| Err(Error::Parse(format!("missing {what}"))))
    };
    let p = next("vertex count")?;
    let q = next("edge count")?;
    let mut pairs = Vec::with_capacity(q);
    for _ in 0..q {
        let u = next("edge endpoint")?;
        let v = next("edge endpoint")?;
        pairs.push((u, v));
    }
    if tokens.next().is_some() {
        return Err(Error::Parse(format!("more than the declared {q} edges")));
    }
    Graph::from_edge_list(p, &pairs)
}

/// Text format of a graph file or string.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
}

/// A leading line of two integers means edge list; anything else is graph6.
pub fn detect_format(text: &str) -> Format {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty());
    match first {
        Some(line) => {
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() == 2 && toks.iter().all(|t| t.parse::<usize>().is_ok()) {
                Format::EdgeList
            } else {
                Format::Graph6
            }
        }
        None => Format::Graph6,
    }
}

pub fn parse_graph(text: &str, format: Option<Format>) -> Result<Graph> {
    match format.unwrap_or_else(|| detect_format(text)) {
        Format::EdgeList => from_edge_list(text),
        Format::Graph6 => {
            let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
            let first = lines
                .next()
                .ok_or_else(|| Error::Parse("no graph found in input".into()))?;
            if lines.next().is_some() {
                return Err(Error::Parse(
                    "expected exactly one graph6 line in the input".into(),
                ));
            }
            from_graph6(first)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn known_graph6_strings() {
        // K1, K2, C4 and the Petersen graph as printed by standard tools.
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
        assert_eq!(to_graph6(&Family::Complete(2).build().unwrap()), "A_");
        assert_eq!(to_graph6(&Family::Cycle(4).build().unwrap()), "Cl");
        assert_eq!(to_graph6(&Family::Petersen.build().unwrap()), "IheA@GUAo");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
    }

    #[test]
    fn graph6_header_and_errors() {
        let g = from_graph6(">>graph6<<Cl\n").unwrap();
        assert_eq!(g, Family::Cycle(4).build().unwrap());
        assert!(from_graph6("").is_err());
        assert!(from_graph6("C").is_err());
        // 'A' + 'a' sets a padding bit for K2.
        assert!(from_graph6("Aa").is_err());
        assert!(from_graph6("C\u{7f}").is_err());
    }

    #[test]
    fn large_order_size_field() {
        let g = Family::Path(70).build().unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip_and_whitespace() {
        let g = from_edge_list("4 4\n0 1\n  1 2\n2 3 3 0\n").unwrap();
        assert_eq!(g, Family::Cycle(4).build().unwrap());
        assert_eq!(to_edge_list(&g), "4 4\n0 1\n0 3\n1 2\n2 3\n");
        assert!(from_edge_list("3 2\n0 1\n").is_err());
        assert!(from_edge_list("3 1\n0 1\n1 2\n").is_err());
        assert!(from_edge_list("3 1\n0 3\n").is_err());
    }

    #[test]
    fn format_detection() {
        assert_eq!(detect_format("4 4\n0 1"), Format::EdgeList);
        assert_eq!(detect_format("Cr"), Format::Graph6);
        assert_eq!(detect_format("1 0\n"), Format::EdgeList);
    }
}
