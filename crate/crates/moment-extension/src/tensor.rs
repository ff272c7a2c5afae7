/// Number of free entries of a fully symmetric third-order tensor of
/// side n: the number of size-3 multisets, C(n+2, 3).
pub fn tensor_len(n: usize) -> usize {
    n * (n + 1) * (n + 2) / 6
}

/// Dense offset of the multiset {i, j, l} (1-based indices, any
/// order). Offsets enumerate non-decreasing triples lexicographically,
/// so every permutation of the same indices maps to the same slot.
pub fn canonical_index(n: usize, i: usize, j: usize, l: usize) -> usize {
    assert!(
        (1..=n).contains(&i) && (1..=n).contains(&j) && (1..=n).contains(&l),
        "indices ({i},{j},{l}) outside 1..={n}"
    );
    let mut t = [i, j, l];
    t.sort_unstable();
    let [a, b, c] = t;
    let mut idx = 0;
    for x in 1..a {
        let m = n - x + 1;
        idx += m * (m + 1) / 2;
    }
    for y in a..b {
        idx += n - y + 1;
    }
    idx + (c - b)
}

/// Fully symmetric third-order tensor backed by canonical-multiset
/// storage; reading T_{ijl} in any index order returns the same value.
#[derive(Clone, Debug, PartialEq)]
pub struct SymTensor3 {
    n: usize,
    values: Vec<f64>,
}

impl SymTensor3 {
    pub fn zeros(n: usize) -> Self {
        SymTensor3 {
            n,
            values: vec![0.0; tensor_len(n)],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize, l: usize) -> f64 {
        self.values[canonical_index(self.n, i, j, l)]
    }

    pub fn set(&mut self, i: usize, j: usize, l: usize, v: f64) {
        self.values[canonical_index(self.n, i, j, l)] = v;
    }

    /// Slice i as an n×n matrix: (T_{ijl})_{jl}.
    pub fn slice(&self, i: usize) -> nalgebra::DMatrix<f64> {
        nalgebra::DMatrix::from_fn(self.n, self.n, |r, c| self.get(i, r + 1, c + 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_invariance() {
        let n = 5;
        assert_eq!(canonical_index(n, 3, 1, 2), canonical_index(n, 1, 2, 3));
        assert_eq!(canonical_index(n, 2, 2, 1), canonical_index(n, 1, 2, 2));
        assert_eq!(canonical_index(n, 5, 5, 5), canonical_index(n, 5, 5, 5));
    }

    #[test]
    fn offsets_are_dense_and_distinct() {
        for n in 1..=9 {
            let mut seen = vec![false; tensor_len(n)];
            for a in 1..=n {
                for b in a..=n {
                    for c in b..=n {
                        let idx = canonical_index(n, a, b, c);
                        assert!(!seen[idx], "duplicate offset for ({a},{b},{c})");
                        seen[idx] = true;
                    }
                }
            }
            assert!(seen.iter().all(|&s| s), "offsets not dense for n={n}");
        }
        assert_eq!(tensor_len(9), 165);
    }

    #[test]
    fn slices_are_symmetric() {
        let mut t = SymTensor3::zeros(4);
        t.set(1, 2, 3, 0.25);
        t.set(2, 2, 4, 0.5);
        for i in 1..=4 {
            let s = t.slice(i);
            assert_eq!(s, s.transpose());
        }
        assert_eq!(t.slice(1)[(1, 2)], 0.25);
        assert_eq!(t.slice(2)[(0, 2)], 0.25); // same stored value
        assert_eq!(t.slice(3)[(0, 1)], 0.25);
    }
}
