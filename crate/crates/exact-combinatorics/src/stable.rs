use graph_core::Graph;

use crate::{ExactError, Guards};

/// All stable sets of `g`, including the empty set, as sorted vertex
/// lists in increasing-bitmask order (vertex 1 is the lowest bit).
pub fn enumerate_stable_sets(g: &Graph, guards: &Guards) -> Result<Vec<Vec<usize>>, ExactError> {
    let n = g.n();
    if n > guards.stable_sets {
        return Err(ExactError::GuardExceeded {
            op: "enumerate_stable_sets",
            n,
            limit: guards.stable_sets,
        });
    }
    let masks = g.neighbor_masks();
    let mut out = Vec::new();
    for subset in 0u64..(1u64 << n) {
        if is_stable_mask(subset, &masks) {
            out.push(mask_to_vertices(subset, n));
        }
    }
    Ok(out)
}

pub(crate) fn is_stable_mask(subset: u64, neighbor_masks: &[u64]) -> bool {
    let mut rest = subset;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if neighbor_masks[v] & subset != 0 {
            return false;
        }
    }
    true
}

pub(crate) fn mask_to_vertices(mut mask: u64, _n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    while mask != 0 {
        let v = mask.trailing_zeros() as usize;
        out.push(v + 1);
        mask &= mask - 1;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaResult {
    pub alpha: usize,
    /// One maximum stable set (sorted).
    pub witness: Vec<usize>,
}

/// Maximum stable set size by subset enumeration.
pub fn alpha_exact(g: &Graph, guards: &Guards) -> Result<AlphaResult, ExactError> {
    let n = g.n();
    if n > guards.stable_sets {
        return Err(ExactError::GuardExceeded {
            op: "alpha_exact",
            n,
            limit: guards.stable_sets,
        });
    }
    let masks = g.neighbor_masks();
    let mut best = 0u64;
    let mut best_size = 0;
    for subset in 0u64..(1u64 << n) {
        let size = subset.count_ones() as usize;
        if size > best_size && is_stable_mask(subset, &masks) {
            best = subset;
            best_size = size;
        }
    }
    Ok(AlphaResult {
        alpha: best_size,
        witness: mask_to_vertices(best, n),
    })
}

/// Clique number: α of the complement.
pub fn omega_exact(g: &Graph, guards: &Guards) -> Result<AlphaResult, ExactError> {
    alpha_exact(&g.complement(), guards)
}

#[cfg(test)]
mod tests {
    use super::*;
    use graph_core::Family;

    fn guards() -> Guards {
        Guards::default()
    }

    #[test]
    fn stable_sets_of_small_graphs() {
        let e2 = Family::Empty(2).generate().unwrap();
        assert_eq!(
            enumerate_stable_sets(&e2, &guards()).unwrap(),
            vec![vec![], vec![1], vec![2], vec![1, 2]]
        );

        let k3 = Family::Complete(3).generate().unwrap();
        assert_eq!(
            enumerate_stable_sets(&k3, &guards()).unwrap(),
            vec![vec![], vec![1], vec![2], vec![3]]
        );

        let p3 = Family::Path(3).generate().unwrap();
        assert_eq!(
            enumerate_stable_sets(&p3, &guards()).unwrap(),
            vec![vec![], vec![1], vec![2], vec![3], vec![1, 3]]
        );
    }

    #[test]
    fn alpha_values() {
        for n in 1..=6 {
            let kn = Family::Complete(n).generate().unwrap();
            assert_eq!(alpha_exact(&kn, &guards()).unwrap().alpha, 1);
        }
        let c5 = Family::Cycle(5).generate().unwrap();
        assert_eq!(alpha_exact(&c5, &guards()).unwrap().alpha, 2);
        let petersen = Family::Petersen.generate().unwrap();
        let r = alpha_exact(&petersen, &guards()).unwrap();
        assert_eq!(r.alpha, 4);
        assert_eq!(r.witness.len(), 4);
    }

    #[test]
    fn guard_is_enforced() {
        let g = Family::Empty(21).generate().unwrap();
        assert!(matches!(
            enumerate_stable_sets(&g, &guards()),
            Err(ExactError::GuardExceeded { .. })
        ));
    }
}
