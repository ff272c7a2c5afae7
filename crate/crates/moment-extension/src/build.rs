use std::collections::BTreeMap;

use nalgebra::{DMatrix, DVector};
use thiserror::Error;

use conic_solver::{ConeSpec, ConicProgram, ProgramBuilder, Sense, SolverConfig};
use graph_core::Graph;
use theta_models::{certify, BoundError, BoundKind, BoundValue};

use crate::tensor::SymTensor3;

/// How entries killed by the orthogonality constraint are handled:
/// eliminated from storage at build time (the default), or kept as
/// variables with the per-slice constraint row ⟨slice, A_ḡ⟩ = 0 stated
/// explicitly. Both yield the same optimum; the explicit form exists to
/// assert that equivalence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ZeroHandling {
    #[default]
    Eliminate,
    ExplicitRows,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct MomentOptions {
    pub zero_handling: ZeroHandling,
    /// Also emit the (redundant) row-sum equalities R·1 = 1; presolve
    /// must detect and drop n dependent rows.
    pub explicit_row_sums: bool,
}

#[derive(Debug, Error)]
pub enum MomentError {
    #[error("n = {n} exceeds the moment-model guard {limit}")]
    GuardExceeded { n: usize, limit: usize },
    #[error(transparent)]
    Bound(#[from] BoundError),
}

const SIZE_GUARD: usize = 30;

/// The assembled θ̂′ model plus the bookkeeping needed to read slices
/// and tensor entries back out of a solution vector.
#[derive(Clone, Debug)]
pub struct MomentModel {
    pub program: ConicProgram,
    n: usize,
    /// Per slice: the global (0-based) vertices carried by its PSD
    /// block. With elimination this is the closed neighbourhood N[i].
    supports: Vec<Vec<usize>>,
    /// Index-set classes (sorted, distinct, 0-based, sizes 1..=3) that
    /// own an orthant variable, in deterministic order.
    class_vars: BTreeMap<Vec<usize>, usize>,
}

impl MomentModel {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Re-inflates slice i (1-based) from a solution vector to a full
    /// n×n matrix, zeros on eliminated rows and columns.
    pub fn slice_from_solution(&self, x: &DVector<f64>, i: usize) -> DMatrix<f64> {
        let layout = self.program.layout();
        let block = layout.extract_block(x, i - 1);
        let support = &self.supports[i - 1];
        let mut full = DMatrix::zeros(self.n, self.n);
        for (p, &u) in support.iter().enumerate() {
            for (q, &v) in support.iter().enumerate() {
                full[(u, v)] = block[(p, q)];
            }
        }
        full
    }

    pub fn slices_from_solution(&self, x: &DVector<f64>) -> Vec<DMatrix<f64>> {
        (1..=self.n).map(|i| self.slice_from_solution(x, i)).collect()
    }

    /// The tensor behind a solution vector, read off the orthant
    /// variables (eliminated classes stay zero).
    pub fn tensor_from_solution(&self, x: &DVector<f64>) -> SymTensor3 {
        let layout = self.program.layout();
        let mut t = SymTensor3::zeros(self.n);
        for i in 1..=self.n {
            for j in i..=self.n {
                for l in j..=self.n {
                    let mut class: Vec<usize> = vec![i - 1, j - 1, l - 1];
                    class.dedup();
                    if let Some(&k) = self.class_vars.get(&class) {
                        t.set(i, j, l, x[layout.nonneg_coord(k)]);
                    }
                }
            }
        }
        t
    }
}

fn is_clique_class(class: &[usize], g: &Graph) -> bool {
    for (a, &u) in class.iter().enumerate() {
        for &v in &class[a + 1..] {
            if !g.has_edge(u + 1, v + 1) {
                return false;
            }
        }
    }
    true
}

/// Builds the θ̂′ program for `g` with default options: eliminated zero
/// pattern, no redundant row sums.
pub fn build_hat_theta_prime(g: &Graph) -> MomentModel {
    build_hat_theta_prime_with(g, &MomentOptions::default())
}

pub fn build_hat_theta_prime_with(g: &Graph, options: &MomentOptions) -> MomentModel {
    let n = g.n();
    let eliminate = options.zero_handling == ZeroHandling::Eliminate;

    // slice supports: closed neighbourhoods under elimination (entries
    // outside vanish identically), full otherwise
    let supports: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            if eliminate {
                let mut s: Vec<usize> = (0..n)
                    .filter(|&j| j == i || g.has_edge(i + 1, j + 1))
                    .collect();
                s.sort_unstable();
                s
            } else {
                (0..n).collect()
            }
        })
        .collect();

    // orthant variable per index-set class, deterministic order:
    // singletons, then pairs, then triples, each lexicographic
    let mut class_vars: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let push = |class: Vec<usize>, vars: &mut BTreeMap<Vec<usize>, usize>| {
        let next = vars.len();
        vars.entry(class).or_insert(next);
    };
    for a in 0..n {
        push(vec![a], &mut class_vars);
    }
    for a in 0..n {
        for b in (a + 1)..n {
            if !eliminate || g.has_edge(a + 1, b + 1) {
                push(vec![a, b], &mut class_vars);
            }
        }
    }
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                let class = vec![a, b, c];
                if !eliminate || is_clique_class(&class, g) {
                    push(class, &mut class_vars);
                }
            }
        }
    }

    let sizes: Vec<usize> = supports.iter().map(|s| s.len()).collect();
    let cone = ConeSpec::new(sizes, class_vars.len());
    let mut b = ProgramBuilder::new(cone, Sense::Minimize);

    for (i, support) in supports.iter().enumerate() {
        for p in 0..support.len() {
            b.objective_entry(i, p, p, 1.0);
        }
    }

    for (i, support) in supports.iter().enumerate() {
        for p in 0..support.len() {
            for q in p..support.len() {
                let (u, v) = (support[p], support[q]);
                let mut class: Vec<usize> = vec![i, u, v];
                class.sort_unstable();
                class.dedup();
                match class_vars.get(&class) {
                    Some(&k) => {
                        b.begin_row(format!("tie_{}_{}_{}", i + 1, u + 1, v + 1), 0.0);
                        b.row_entry(i, p, q, 1.0);
                        b.row_nonneg(k, -1.0);
                    }
                    None => {
                        b.begin_row(format!("zero_{}_{}_{}", i + 1, u + 1, v + 1), 0.0);
                        b.row_entry(i, p, q, 1.0);
                    }
                }
            }
        }
        b.begin_row(format!("norm_{}", i + 1), 1.0);
        for p in 0..support.len() {
            b.row_entry(i, p, p, 1.0);
            for q in (p + 1)..support.len() {
                b.row_entry(i, p, q, 2.0);
            }
        }
        if !eliminate {
            // paper-literal orthogonality ⟨slice, A_ḡ⟩ = 0
            let non_edges = g.non_edges();
            if !non_edges.is_empty() {
                b.begin_row(format!("orth_{}", i + 1), 0.0);
                for &(u, v) in &non_edges {
                    b.row_entry(i, u - 1, v - 1, 2.0);
                }
            }
        }
    }

    if options.explicit_row_sums {
        for j in 0..n {
            b.begin_row(format!("rowsum_{}", j + 1), 1.0);
            for (i, support) in supports.iter().enumerate() {
                let Some(local_j) = support.iter().position(|&u| u == j) else {
                    continue;
                };
                for l in 0..support.len() {
                    b.row_entry(i, local_j.min(l), local_j.max(l), 1.0);
                }
            }
        }
    }

    MomentModel {
        program: b.build(),
        n,
        supports,
        class_vars,
    }
}

/// Builds, solves, and certifies θ̂′(g).
pub fn hat_theta_prime(g: &Graph, cfg: &SolverConfig) -> Result<BoundValue, MomentError> {
    let n = g.n();
    if n > SIZE_GUARD {
        return Err(MomentError::GuardExceeded { n, limit: SIZE_GUARD });
    }
    let model = build_hat_theta_prime(g);
    Ok(certify(BoundKind::ThetaHatPrime, g, &model.program, cfg)?)
}
