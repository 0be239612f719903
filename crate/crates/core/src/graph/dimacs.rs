//! DIMACS edge-list format (1-indexed) for human-authored inputs.

use super::Graph;
use crate::error::{Error, Result};

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

pub fn read_dimacs(text: &str) -> Result<Graph> {
    let mut g: Option<Graph> = None;
    let mut declared_edges = 0usize;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut fields = line.split_whitespace();
        match fields.next() {
            Some("p") => {
                if fields.next() != Some("edge") {
                    return Err(Error::Dimacs(format!("line {}: expected 'p edge'", lineno + 1)));
                }
                let n: usize = parse_field(fields.next(), lineno)?;
                declared_edges = parse_field(fields.next(), lineno)?;
                g = Some(Graph::empty(n)?);
            }
            Some("e") => {
                let g = g
                    .as_mut()
                    .ok_or_else(|| Error::Dimacs(format!("line {}: edge before problem line", lineno + 1)))?;
                let u: usize = parse_field(fields.next(), lineno)?;
                let v: usize = parse_field(fields.next(), lineno)?;
                if u == 0 || v == 0 || u > g.n() || v > g.n() || u == v {
                    return Err(Error::Dimacs(format!("line {}: bad edge {u} {v}", lineno + 1)));
                }
                g.add_edge(u - 1, v - 1);
            }
            Some(other) => {
                return Err(Error::Dimacs(format!("line {}: unknown record '{other}'", lineno + 1)));
            }
            None => {}
        }
    }
    let g = g.ok_or_else(|| Error::Dimacs("missing problem line".into()))?;
    if g.edge_count() != declared_edges {
        return Err(Error::Dimacs(format!(
            "declared {} edges, found {}",
            declared_edges,
            g.edge_count()
        )));
    }
    g.debug_check();
    Ok(g)
}

fn parse_field(field: Option<&str>, lineno: usize) -> Result<usize> {
    field
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Dimacs(format!("line {}: missing or bad number", lineno + 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::family;

    #[test]
    fn roundtrip() {
        let g = family::squared_cycle(8).unwrap();
        assert_eq!(read_dimacs(&write_dimacs(&g)).unwrap(), g);
    }

    #[test]
    fn rejects_edge_count_mismatch() {
        assert!(read_dimacs("p edge 3 2\ne 1 2\n").is_err());
    }
}
