use super::Graph;
use crate::error::{Error, Result};

fn bad(offset: usize, msg: &str) -> Error {
    Error::parse(offset, msg)
}

/// Decodes a graph6 string (an optional `>>graph6<<` header is accepted).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let (skip, bytes) = match text.strip_prefix(">>graph6<<") {
        Some(rest) => (10, rest.as_bytes()),
        None => (0, text.as_bytes()),
    };
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(bad(skip + i, "character outside 63..126"));
        }
    }
    if bytes.is_empty() {
        return Err(bad(skip, "missing size byte"));
    }
    let (n, start) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(bad(skip + bytes.len(), "truncated size prefix"));
        }
        (sextets(&bytes[1..4]), 4)
    } else {
        if bytes.len() < 8 {
            return Err(bad(skip + bytes.len(), "truncated size prefix"));
        }
        (sextets(&bytes[2..8]), 8)
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let nchars = nbits.div_ceil(6);
    let body = &bytes[start..];
    if body.len() != nchars {
        let at = skip + start + body.len().min(nchars);
        return Err(bad(at, &format!("expected {nchars} edge bytes for {n} vertices, found {}", body.len())));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let c = body[k / 6] - 63;
            if c >> (5 - k % 6) & 1 == 1 {
                g.set(i, j);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = body[nchars - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(bad(skip + start + nchars - 1, "nonzero padding bits"));
        }
    }
    g.finish();
    Ok(g)
}

fn sextets(b: &[u8]) -> usize {
    b.iter().fold(0, |acc, &c| (acc << 6) | (c - 63) as usize)
}

/// Encodes a graph in graph6 (multi-byte size prefix above 62 vertices).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        for s in [12, 6, 0] {
            out.push(63 + ((n >> s) & 63) as u8);
        }
    } else {
        out.extend([126, 126]);
        for s in [30, 24, 18, 12, 6, 0] {
            out.push(63 + ((n >> s) & 63) as u8);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(63 + acc);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push(63 + (acc << (6 - k % 6)));
    }
    String::from_utf8(out).expect("graph6 output is ascii")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decodes_known_codes() {
        assert_eq!(parse_graph6("A_").unwrap(), Graph::from_edges(2, &[(0, 1)]).unwrap());
        assert_eq!(parse_graph6("Bw").unwrap(), Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap());
        assert_eq!(parse_graph6("CR").unwrap(), Graph::from_edges(4, &[(0, 2), (1, 3), (2, 3)]).unwrap());
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1));
        assert_eq!(parse_graph6("?").unwrap(), Graph::empty(0));
    }

    #[test]
    fn encodes_known_codes() {
        assert_eq!(encode_graph6(&Graph::from_edges(2, &[(0, 1)]).unwrap()), "A_");
        assert_eq!(encode_graph6(&Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap()), "Bw");
        assert_eq!(encode_graph6(&Graph::empty(1)), "@");
    }

    #[test]
    fn errors_name_offsets() {
        match parse_graph6("B x") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        // 3 vertices use 3 bits; low padding bits must be clear
        match parse_graph6("Bx") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        assert!(parse_graph6("Bww").is_err());
        assert!(parse_graph6("").is_err());
    }

    #[test]
    fn large_sizes_round_trip() {
        let mut edges = Vec::new();
        for v in 1..100 {
            edges.push((v - 1, v));
        }
        let g = Graph::from_edges(100, &edges).unwrap();
        let s = encode_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }
}
