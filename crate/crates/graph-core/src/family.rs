use std::fmt;
use std::str::FromStr;

use crate::{Graph, GraphError};

/// Named graph families.
///
/// `CliqueUnion([n1, …, nk])` is the disjoint union `K_{n1} ∪ … ∪ K_{nk}`;
/// `CliquePlusIsolated(n1, m)` is `K_{n1} ∪ m·K_1`. Circulant offsets must
/// lie in `1..=n/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    Empty(usize),
    Cycle(usize),
    Circulant(usize, Vec<usize>),
    Petersen,
    CliqueUnion(Vec<usize>),
    CliquePlusIsolated(usize, usize),
    Path(usize),
}

impl Family {
    pub fn generate(&self) -> Result<Graph, GraphError> {
        match self {
            Family::Complete(n) => {
                let n = positive(*n, "complete")?;
                let mut edges = Vec::new();
                for i in 1..=n {
                    for j in (i + 1)..=n {
                        edges.push((i, j));
                    }
                }
                Ok(Graph::new(n, edges)?.with_hint(true))
            }
            Family::Empty(n) => {
                let n = positive(*n, "empty")?;
                Ok(Graph::new(n, [])?.with_hint(true))
            }
            Family::Cycle(n) => {
                let n = positive(*n, "cycle")?;
                let mut edges = Vec::new();
                if n >= 3 {
                    for i in 1..=n {
                        edges.push((i, i % n + 1));
                    }
                } else if n == 2 {
                    edges.push((1, 2));
                }
                Ok(Graph::new(n, edges)?.with_hint(true))
            }
            Family::Circulant(n, offsets) => {
                let n = positive(*n, "circulant")?;
                for &s in offsets {
                    if s == 0 || s > n / 2 {
                        return Err(GraphError::BadFamily(format!(
                            "circulant offset {s} outside 1..={}",
                            n / 2
                        )));
                    }
                }
                let mut edges = Vec::new();
                for i in 0..n {
                    for &s in offsets {
                        let j = (i + s) % n;
                        if i != j {
                            edges.push((i + 1, j + 1));
                        }
                    }
                }
                Ok(Graph::new(n, edges)?.with_hint(true))
            }
            Family::Petersen => {
                let outer = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)];
                let spokes = [(1, 6), (2, 7), (3, 8), (4, 9), (5, 10)];
                let inner = [(6, 8), (8, 10), (10, 7), (7, 9), (9, 6)];
                let edges = outer.into_iter().chain(spokes).chain(inner);
                Ok(Graph::new(10, edges)?.with_hint(true))
            }
            Family::CliqueUnion(parts) => {
                if parts.is_empty() {
                    return Err(GraphError::BadFamily("clique union needs at least one part".into()));
                }
                for &p in parts {
                    positive(p, "clique_union part")?;
                }
                let n: usize = parts.iter().sum();
                let mut edges = Vec::new();
                let mut base = 0;
                for &p in parts {
                    for i in 1..=p {
                        for j in (i + 1)..=p {
                            edges.push((base + i, base + j));
                        }
                    }
                    base += p;
                }
                let all_equal = parts.iter().all(|&p| p == parts[0]);
                Ok(Graph::new(n, edges)?.with_hint(all_equal))
            }
            Family::CliquePlusIsolated(n1, m) => {
                let mut parts = vec![positive(*n1, "clique_plus_isolated")?];
                parts.extend(std::iter::repeat_n(1, *m));
                Family::CliqueUnion(parts).generate().map(|g| {
                    let hint = *m == 0 || *n1 == 1;
                    g.with_hint(hint)
                })
            }
            Family::Path(n) => {
                let n = positive(*n, "path")?;
                let edges = (1..n).map(|i| (i, i + 1));
                Ok(Graph::new(n, edges)?.with_hint(n <= 2))
            }
        }
    }
}

fn positive(n: usize, what: &str) -> Result<usize, GraphError> {
    if n == 0 {
        Err(GraphError::BadFamily(format!("{what} size must be positive")))
    } else {
        Ok(n)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list(xs: &[usize]) -> String {
            xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        }
        match self {
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Empty(n) => write!(f, "empty:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Circulant(n, s) => write!(f, "circulant:{n},{}", list(s)),
            Family::Petersen => write!(f, "petersen"),
            Family::CliqueUnion(p) => write!(f, "clique_union:{}", list(p)),
            Family::CliquePlusIsolated(n1, m) => write!(f, "clique_plus_isolated:{n1},{m}"),
            Family::Path(n) => write!(f, "path:{n}"),
        }
    }
}

impl FromStr for Family {
    type Err = GraphError;

    /// Parses the `family:params` spec syntax, e.g. `clique_union:4,3,2`,
    /// `circulant:8,1,2` (first number is n, the rest are offsets),
    /// `petersen`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |m: &str| GraphError::BadFamily(m.to_string());
        let (name, params) = match s.split_once(':') {
            Some((n, p)) => (n.trim(), Some(p.trim())),
            None => (s.trim(), None),
        };
        let nums = |p: Option<&str>| -> Result<Vec<usize>, GraphError> {
            let p = p.ok_or_else(|| bad(&format!("family '{name}' needs parameters")))?;
            p.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad(&format!("bad number '{t}'"))))
                .collect()
        };
        let one = |p: Option<&str>| -> Result<usize, GraphError> {
            let v = nums(p)?;
            if v.len() != 1 {
                return Err(bad(&format!("family '{name}' takes exactly one parameter")));
            }
            Ok(v[0])
        };
        match name {
            "complete" => Ok(Family::Complete(one(params)?)),
            "empty" => Ok(Family::Empty(one(params)?)),
            "cycle" => Ok(Family::Cycle(one(params)?)),
            "path" => Ok(Family::Path(one(params)?)),
            "petersen" => {
                if params.is_some() {
                    return Err(bad("petersen takes no parameters"));
                }
                Ok(Family::Petersen)
            }
            "circulant" => {
                let v = nums(params)?;
                if v.len() < 2 {
                    return Err(bad("circulant:n,s1[,s2,...] needs n and at least one offset"));
                }
                Ok(Family::Circulant(v[0], v[1..].to_vec()))
            }
            "clique_union" => Ok(Family::CliqueUnion(nums(params)?)),
            "clique_plus_isolated" => {
                let v = nums(params)?;
                if v.len() != 2 {
                    return Err(bad("clique_plus_isolated takes n1,m"));
                }
                Ok(Family::CliquePlusIsolated(v[0], v[1]))
            }
            other => Err(bad(&format!("unknown family '{other}'"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clique_union_counts() {
        let g = Family::CliqueUnion(vec![4, 3, 2]).generate().unwrap();
        assert_eq!(g.n(), 9);
        assert_eq!(g.edge_count(), 6 + 3 + 1);
        assert_eq!(g.connected_components(), 3);
        assert!(!g.vertex_transitive_hint());
    }

    #[test]
    fn circulant_5_1_is_c5() {
        let g = Family::Circulant(5, vec![1]).generate().unwrap();
        let c5 = Family::Cycle(5).generate().unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), c5.edges().collect::<Vec<_>>());
    }

    #[test]
    fn clique_plus_isolated_counts() {
        let g = Family::CliquePlusIsolated(8, 1).generate().unwrap();
        assert_eq!((g.n(), g.edge_count()), (9, 28));
    }

    #[test]
    fn petersen_is_cubic() {
        let g = Family::Petersen.generate().unwrap();
        assert_eq!((g.n(), g.edge_count()), (10, 15));
        assert!(g.degrees().iter().all(|&d| d == 3));
        assert!(g.vertex_transitive_hint());
    }

    #[test]
    fn circulant_offset_validation() {
        assert!(Family::Circulant(8, vec![5]).generate().is_err());
        assert!(Family::Circulant(8, vec![0]).generate().is_err());
        let g = Family::Circulant(8, vec![4]).generate().unwrap();
        assert_eq!(g.edge_count(), 4);
    }

    #[test]
    fn sizes_must_be_positive() {
        assert!(Family::Complete(0).generate().is_err());
        assert!(Family::CliqueUnion(vec![3, 0]).generate().is_err());
    }

    #[test]
    fn transitivity_hints() {
        assert!(Family::CliqueUnion(vec![3, 3, 3]).generate().unwrap().vertex_transitive_hint());
        assert!(!Family::Path(4).generate().unwrap().vertex_transitive_hint());
        // hint survives complementation
        let g = Family::CliqueUnion(vec![3, 3, 3]).generate().unwrap().complement();
        assert!(g.vertex_transitive_hint());
    }

    #[test]
    fn family_spec_roundtrip() {
        for s in [
            "complete:5",
            "empty:3",
            "cycle:7",
            "circulant:8,1,2",
            "petersen",
            "clique_union:4,3,2",
            "clique_plus_isolated:2,7",
            "path:4",
        ] {
            let f: Family = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
            f.generate().unwrap();
        }
        assert!("clique_union".parse::<Family>().is_err());
        assert!("frobnicate:3".parse::<Family>().is_err());
    }
}
