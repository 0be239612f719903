//! graph6 encoding, bit-exact per the standard format.

use super::Graph;
use crate::error::{Error, Result};

/// Encode as a graph6 line (no trailing newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        // n <= 512 always fits the 18-bit form
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).unwrap()
}

/// Decode a single graph6 line (the optional `>>graph6<<` header is accepted).
pub fn read_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty line".into()));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("byte {b} out of range")));
        }
    }
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() >= 4 && bytes[1] == 126 {
            return Err(Error::Graph6("order beyond 258047 not supported".into()));
        }
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated order field".into()));
        }
        let n = ((bytes[1] as usize - 63) << 12)
            | ((bytes[2] as usize - 63) << 6)
            | (bytes[3] as usize - 63);
        (n, 4)
    } else {
        (bytes[0] as usize - 63, 1)
    };
    let mut g = Graph::empty(n)?;
    let needed = (n * (n - 1) / 2 + 5) / 6;
    if bytes.len() - pos != needed {
        return Err(Error::Graph6(format!(
            "expected {} data bytes for n={}, got {}",
            needed,
            n,
            bytes.len() - pos
        )));
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            if nbits == 0 {
                acc = bytes[pos] - 63;
                pos += 1;
                nbits = 6;
            }
            if acc & 0b100000 != 0 {
                g.add_edge(i, j);
            }
            acc <<= 1;
            nbits -= 1;
        }
    }
    g.debug_check();
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::family;

    #[test]
    fn known_encodings() {
        // K_3 is "Bw", the 5-cycle is "Dhc"
        assert_eq!(write_graph6(&family::turan(3, 3).unwrap()), "Bw");
        assert_eq!(write_graph6(&family::cycle(5).unwrap()), "Dhc");
        assert_eq!(read_graph6("Dhc").unwrap(), family::cycle(5).unwrap());
    }

    #[test]
    fn roundtrip_large_order() {
        let g = family::gn(100).unwrap();
        let s = write_graph6(&g);
        assert_eq!(read_graph6(&s).unwrap(), g);
    }

    #[test]
    fn rejects_garbage() {
        assert!(read_graph6("").is_err());
        assert!(read_graph6("D\u{1}").is_err());
        assert!(read_graph6("Dhcc").is_err());
    }
}

#[cfg(test)]
mod prop_tests {
    use super::*;
    use crate::graph::Graph;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn roundtrip_random_graphs(n in 1usize..80, edges in proptest::collection::vec((0usize..80, 0usize..80), 0..200)) {
            let mut g = Graph::empty(n).unwrap();
            for (a, b) in edges {
                let (u, v) = (a % n, b % n);
                if u != v {
                    g.add_edge(u, v);
                }
            }
            let s = write_graph6(&g);
            prop_assert_eq!(read_graph6(&s).unwrap(), g);
        }
    }
}
