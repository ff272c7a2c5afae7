use std::collections::BTreeSet;
use std::fmt;

use rand::Rng;
use sha2::{Digest, Sha256};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    EmptyVertexSet,
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("induced subgraph needs a nonempty vertex subset")]
    EmptyInducedSet,
    #[error("invalid family parameters: {0}")]
    BadFamily(String),
    #[error("DIMACS parse error at line {line}: {message}")]
    Dimacs { line: usize, message: String },
}

/// Simple undirected graph on vertices `1..=n`.
///
/// Edges are stored as unordered pairs `(i, j)` with `i < j`; there are
/// no self-loops and no duplicates. The `vertex_transitive_hint` flag
/// is set by generators for families that are vertex-transitive by
/// construction and is preserved under complementation (a graph and
/// its complement have the same automorphism group).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    vertex_transitive_hint: bool,
}

impl Graph {
    /// Builds a graph from an edge list; pairs may come in either order
    /// and duplicates collapse.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyVertexSet);
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            for v in [a, b] {
                if v < 1 || v > n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(Graph {
            n,
            edges: set,
            vertex_transitive_hint: false,
        })
    }

    pub(crate) fn with_hint(mut self, hint: bool) -> Self {
        self.vertex_transitive_hint = hint;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as ordered pairs `(i, j)`, `i < j`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    /// Non-adjacent unordered pairs, ascending.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in (i + 1)..=self.n {
                if !self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && self.edges.contains(&(i.min(j), i.max(j)))
    }

    /// True when a generator guaranteed vertex-transitivity by construction.
    pub fn vertex_transitive_hint(&self) -> bool {
        self.vertex_transitive_hint
    }

    /// Neighbour bitmasks (bit `v-1` set when `v` adjacent), for the
    /// enumeration code. Only supported up to 64 vertices.
    pub fn neighbor_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "bitmask adjacency supports n <= 64");
        let mut masks = vec![0u64; self.n];
        for &(i, j) in &self.edges {
            masks[i - 1] |= 1 << (j - 1);
            masks[j - 1] |= 1 << (i - 1);
        }
        masks
    }

    /// Degree sequence indexed by vertex (1-based offset 0 unused).
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n + 1];
        for &(i, j) in &self.edges {
            deg[i] += 1;
            deg[j] += 1;
        }
        deg.remove(0);
        deg
    }

    /// Complement graph: same vertices, pair adjacent iff not adjacent here.
    pub fn complement(&self) -> Graph {
        let mut edges = BTreeSet::new();
        for i in 1..=self.n {
            for j in (i + 1)..=self.n {
                if !self.has_edge(i, j) {
                    edges.insert((i, j));
                }
            }
        }
        Graph {
            n: self.n,
            edges,
            vertex_transitive_hint: self.vertex_transitive_hint,
        }
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        for &(i, j) in &other.edges {
            edges.insert((i + shift, j + shift));
        }
        Graph {
            n: self.n + other.n,
            edges,
            vertex_transitive_hint: false,
        }
    }

    /// Induced subgraph on `keep`, relabelled `1..=|keep|` in ascending
    /// original order.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<Graph, GraphError> {
        if keep.is_empty() {
            return Err(GraphError::EmptyInducedSet);
        }
        let mut sorted: Vec<usize> = keep.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for &v in &sorted {
            if v < 1 || v > self.n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        let index_of = |v: usize| sorted.binary_search(&v).unwrap() + 1;
        let mut edges = BTreeSet::new();
        for a in 0..sorted.len() {
            for b in (a + 1)..sorted.len() {
                if self.has_edge(sorted[a], sorted[b]) {
                    edges.insert((index_of(sorted[a]), index_of(sorted[b])));
                }
            }
        }
        Ok(Graph {
            n: sorted.len(),
            edges,
            vertex_transitive_hint: false,
        })
    }

    /// Whether the graph is connected (singleton graphs are connected).
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n + 1];
        let mut stack = vec![1usize];
        seen[1] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for u in 1..=self.n {
                if !seen[u] && self.has_edge(v, u) {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.n
    }

    pub fn connected_components(&self) -> usize {
        let mut seen = vec![false; self.n + 1];
        let mut components = 0;
        for start in 1..=self.n {
            if seen[start] {
                continue;
            }
            components += 1;
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                for u in 1..=self.n {
                    if !seen[u] && self.has_edge(v, u) {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
        }
        components
    }

    /// SHA-256 of the canonical DIMACS serialization, hex-encoded.
    /// Stable across runs; identifies the labelled graph.
    pub fn fingerprint(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(crate::write_dimacs(self).as_bytes());
        let digest = hasher.finalize();
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edges.len())
    }
}

/// Erdős–Rényi G(n, p) sample; each pair is an edge independently with
/// probability `p`. Used for the seeded random test suites.
pub fn random_gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            if rng.random_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges).expect("generated pairs are valid")
}
