use crate::{Graph, GraphError};

/// Result of parsing a DIMACS `.col` stream: the graph plus non-fatal
/// warnings (currently only an edge-count mismatch against the header).
#[derive(Debug, Clone)]
pub struct ParsedDimacs {
    pub graph: Graph,
    pub warnings: Vec<String>,
}

/// Parses DIMACS `.col` text: optional `c` comment lines, one
/// `p edge <n> <m>` header, then `e <i> <j>` lines with 1-based indices.
/// Duplicate edge lines (in either orientation) collapse to one edge;
/// a declared edge count that disagrees with the distinct edges found
/// is a warning, not an error.
pub fn parse_dimacs(text: &str) -> Result<ParsedDimacs, GraphError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        let err = |message: String| GraphError::Dimacs { line: lineno, message };
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(err("duplicate problem line".into()));
                }
                if tokens.next() != Some("edge") {
                    return Err(err("expected 'p edge <n> <m>'".into()));
                }
                let n = tokens
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| err("bad vertex count".into()))?;
                let m = tokens
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| err("bad edge count".into()))?;
                if n == 0 {
                    return Err(err("vertex count must be positive".into()));
                }
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| err("edge line before 'p edge' header".into()))?;
                let i = tokens
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| err("bad edge endpoint".into()))?;
                let j = tokens
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| err("bad edge endpoint".into()))?;
                if i == j {
                    return Err(err(format!("self-loop at vertex {i}")));
                }
                for v in [i, j] {
                    if v < 1 || v > n {
                        return Err(err(format!("vertex {v} out of range 1..={n}")));
                    }
                }
                edges.push((i, j));
            }
            Some(other) => return Err(err(format!("unknown line type '{other}'"))),
            None => unreachable!("empty lines are skipped"),
        }
    }

    let (n, declared_m) = header.ok_or(GraphError::Dimacs {
        line: text.lines().count().max(1),
        message: "missing 'p edge' header".into(),
    })?;
    let graph = Graph::new(n, edges)?;
    let mut warnings = Vec::new();
    if graph.edge_count() != declared_m {
        warnings.push(format!(
            "header declares {declared_m} edges but {} distinct edges were read",
            graph.edge_count()
        ));
    }
    Ok(ParsedDimacs { graph, warnings })
}

/// Canonical DIMACS serialization: one `p edge` line, then edges in
/// ascending order. Inverse of `parse_dimacs` up to comments.
pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (i, j) in g.edges() {
        out.push_str(&format!("e {i} {j}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_example_graph() {
        // adjacency: 1-3, 2-3
        let parsed = parse_dimacs("p edge 3 2\ne 1 3\ne 2 3").unwrap();
        assert_eq!(parsed.graph.n(), 3);
        assert_eq!(parsed.graph.edges().collect::<Vec<_>>(), vec![(1, 3), (2, 3)]);
        assert!(parsed.warnings.is_empty());
    }

    #[test]
    fn empty_graph_and_comments() {
        let parsed = parse_dimacs("c empty graph\np edge 2 0\n").unwrap();
        assert_eq!((parsed.graph.n(), parsed.graph.edge_count()), (2, 0));
    }

    #[test]
    fn edge_before_header_is_an_error() {
        let e = parse_dimacs("e 1 2\np edge 2 1").unwrap_err();
        assert!(matches!(e, GraphError::Dimacs { line: 1, .. }));
    }

    #[test]
    fn duplicates_collapse_with_warning() {
        let parsed = parse_dimacs("p edge 3 3\ne 1 2\ne 2 1\ne 1 2").unwrap();
        assert_eq!(parsed.graph.edge_count(), 1);
        assert_eq!(parsed.warnings.len(), 1);
    }

    #[test]
    fn rejects_self_loops_and_range() {
        assert!(parse_dimacs("p edge 3 1\ne 2 2").is_err());
        assert!(parse_dimacs("p edge 3 1\ne 1 4").is_err());
        assert!(parse_dimacs("").is_err());
    }
}
