use graph_core::Graph;

use crate::{ExactError, Guards, Partition};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiResult {
    pub chi: usize,
    /// One optimal colouring.
    pub witness: Partition,
}

/// Exact chromatic number by iterative deepening over k with
/// backtracking. Vertices are tried in descending-degree order and a
/// new colour class may only be opened when all previously used ones
/// conflict, which breaks the colour-permutation symmetry.
pub fn chi_exact(g: &Graph, guards: &Guards) -> Result<ChiResult, ExactError> {
    let n = g.n();
    if n > guards.chromatic {
        return Err(ExactError::GuardExceeded {
            op: "chi_exact",
            n,
            limit: guards.chromatic,
        });
    }
    let masks = g.neighbor_masks();
    let mut order: Vec<usize> = (0..n).collect();
    let degrees = g.degrees();
    order.sort_by_key(|&v| std::cmp::Reverse(degrees[v]));

    for k in 1..=n {
        let mut colour = vec![usize::MAX; n];
        if colour_rec(&masks, &order, k, 0, 0, &mut colour) {
            let mut parts = vec![Vec::new(); k];
            for (v, &c) in colour.iter().enumerate() {
                parts[c].push(v + 1);
            }
            parts.retain(|p| !p.is_empty());
            let witness = Partition::new(n, parts).expect("colouring covers all vertices");
            return Ok(ChiResult { chi: witness.k(), witness });
        }
    }
    unreachable!("n colours always suffice")
}

fn colour_rec(
    masks: &[u64],
    order: &[usize],
    k: usize,
    pos: usize,
    used: usize,
    colour: &mut Vec<usize>,
) -> bool {
    if pos == order.len() {
        return true;
    }
    let v = order[pos];
    let limit = k.min(used + 1);
    for c in 0..limit {
        let conflict = order[..pos]
            .iter()
            .any(|&u| colour[u] == c && masks[v] & (1 << u) != 0);
        if conflict {
            continue;
        }
        colour[v] = c;
        if colour_rec(masks, order, k, pos + 1, used.max(c + 1), colour) {
            return true;
        }
        colour[v] = usize::MAX;
    }
    false
}
