use graph_core::Graph;

use crate::{ExactError, Guards};

/// Brute-force vertex-transitivity: for every target vertex w, search
/// for an automorphism mapping vertex 1 to w by backtracking over
/// adjacency-preserving partial permutations. Degree-regularity is
/// checked first as a cheap filter.
pub fn is_vertex_transitive_small(g: &Graph, guards: &Guards) -> Result<bool, ExactError> {
    let n = g.n();
    if n > guards.transitivity {
        return Err(ExactError::GuardExceeded {
            op: "is_vertex_transitive_small",
            n,
            limit: guards.transitivity,
        });
    }
    let degrees = g.degrees();
    if degrees.iter().any(|&d| d != degrees[0]) {
        return Ok(false);
    }
    let masks = g.neighbor_masks();
    for w in 1..n {
        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; n];
        image[0] = w;
        used[w] = true;
        if !extend(&masks, 1, &mut image, &mut used) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn extend(masks: &[u64], v: usize, image: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
    let n = masks.len();
    if v == n {
        return true;
    }
    for target in 0..n {
        if used[target] {
            continue;
        }
        let consistent = (0..v).all(|u| {
            let adjacent = masks[v] & (1 << u) != 0;
            let images_adjacent = masks[target] & (1 << image[u]) != 0;
            adjacent == images_adjacent
        });
        if consistent {
            image[v] = target;
            used[target] = true;
            if extend(masks, v + 1, image, used) {
                return true;
            }
            image[v] = usize::MAX;
            used[target] = false;
        }
    }
    false
}
