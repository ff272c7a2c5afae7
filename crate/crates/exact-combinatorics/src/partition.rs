use crate::ExactError;

/// Partition of the vertex set `[n]` into disjoint nonempty parts.
/// Parts are sorted internally and ordered by their minimum element,
/// so equal partitions compare equal structurally.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    n: usize,
    parts: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(n: usize, parts: Vec<Vec<usize>>) -> Result<Self, ExactError> {
        let bad = |m: String| ExactError::BadPartition(m);
        let mut seen = vec![false; n + 1];
        let mut normalized: Vec<Vec<usize>> = Vec::with_capacity(parts.len());
        for part in parts {
            if part.is_empty() {
                return Err(bad("empty part".into()));
            }
            let mut p = part;
            p.sort_unstable();
            for &v in &p {
                if v < 1 || v > n {
                    return Err(bad(format!("vertex {v} out of range 1..={n}")));
                }
                if seen[v] {
                    return Err(bad(format!("vertex {v} appears twice")));
                }
                seen[v] = true;
            }
            normalized.push(p);
        }
        if let Some(v) = (1..=n).find(|&v| !seen[v]) {
            return Err(bad(format!("vertex {v} is not covered")));
        }
        normalized.sort_by_key(|p| p[0]);
        Ok(Partition { n, parts: normalized })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of parts.
    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    /// 0-based part index of each vertex, indexed by vertex-1.
    pub fn part_of(&self) -> Vec<usize> {
        let mut out = vec![0usize; self.n];
        for (c, part) in self.parts.iter().enumerate() {
            for &v in part {
                out[v - 1] = c;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_order() {
        let p = Partition::new(3, vec![vec![3], vec![2, 1]]).unwrap();
        assert_eq!(p.parts(), &[vec![1, 2], vec![3]]);
        assert_eq!(p.k(), 2);
    }

    #[test]
    fn rejects_bad_partitions() {
        assert!(Partition::new(3, vec![vec![1, 2]]).is_err()); // 3 uncovered
        assert!(Partition::new(3, vec![vec![1, 2], vec![2, 3]]).is_err()); // overlap
        assert!(Partition::new(3, vec![vec![1, 2, 3], vec![]]).is_err()); // empty part
        assert!(Partition::new(3, vec![vec![1, 2, 4]]).is_err()); // range
    }
}
