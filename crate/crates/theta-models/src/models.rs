use conic_solver::{ConeSpec, ConicProgram, ProgramBuilder, Sense};
use graph_core::Graph;

/// θ(g) primal: max ⟨X, J⟩ s.t. tr(X) = 1, X_ij = 0 on every edge of
/// g, X ⪰ 0. One PSD block of size n.
pub fn build_theta_primal(g: &Graph) -> ConicProgram {
    let n = g.n();
    let mut b = ProgramBuilder::new(ConeSpec::new(vec![n], 0), Sense::Maximize);
    for i in 0..n {
        b.objective_entry(0, i, i, 1.0);
        for j in (i + 1)..n {
            b.objective_entry(0, i, j, 2.0);
        }
    }
    b.begin_row("trace", 1.0);
    for i in 0..n {
        b.row_entry(0, i, i, 1.0);
    }
    for (i, j) in g.edges() {
        b.begin_row(format!("edge_{i}_{j}"), 0.0);
        b.row_entry(0, i - 1, j - 1, 1.0);
    }
    b.build()
}

/// θ(g) dual: min k s.t. diag(Y) = 1, Y_ij = 0 on every edge of the
/// complement, [[k, 1ᵀ], [1, Y]] ⪰ 0. One PSD block of size n+1 with
/// the border at index 0; its optimum matches `build_theta_primal`.
pub fn build_theta_dual(g: &Graph) -> ConicProgram {
    let n = g.n();
    let mut b = ProgramBuilder::new(ConeSpec::new(vec![n + 1], 0), Sense::Minimize);
    b.objective_entry(0, 0, 0, 1.0);
    for i in 1..=n {
        b.begin_row(format!("diag_{i}"), 1.0);
        b.row_entry(0, i, i, 1.0);
        b.begin_row(format!("border_{i}"), 1.0);
        b.row_entry(0, 0, i, 1.0);
    }
    for (i, j) in g.complement().edges() {
        b.begin_row(format!("nonedge_{i}_{j}"), 0.0);
        b.row_entry(0, i, j, 1.0);
    }
    b.build()
}

/// θ⁻(g), the Schrijver number: the θ primal with X ≥ 0. Edge entries
/// are pinned to zero directly; the remaining off-diagonal entries are
/// tied to orthant variables, one per non-edge in ascending pair order.
pub fn build_theta_minus(g: &Graph) -> ConicProgram {
    let n = g.n();
    let non_edges = g.non_edges();
    let mut b = ProgramBuilder::new(ConeSpec::new(vec![n], non_edges.len()), Sense::Maximize);
    for i in 0..n {
        b.objective_entry(0, i, i, 1.0);
        for j in (i + 1)..n {
            b.objective_entry(0, i, j, 2.0);
        }
    }
    b.begin_row("trace", 1.0);
    for i in 0..n {
        b.row_entry(0, i, i, 1.0);
    }
    for (i, j) in g.edges() {
        b.begin_row(format!("edge_{i}_{j}"), 0.0);
        b.row_entry(0, i - 1, j - 1, 1.0);
    }
    for (k, &(i, j)) in non_edges.iter().enumerate() {
        b.begin_row(format!("nn_{i}_{j}"), 0.0);
        b.row_entry(0, i - 1, j - 1, 1.0);
        b.row_nonneg(k, -1.0);
    }
    b.build()
}

/// θ⁺(g), the Szegedy number: min x₀ s.t. [[x₀, 1ᵀ], [1, X]] ⪰ 0,
/// diag(X) = 1, X_ij = 0 on the complement's edges, X ≥ 0. The free
/// off-diagonal entries (edges of g) are tied to orthant variables in
/// ascending pair order.
pub fn build_theta_plus(g: &Graph) -> ConicProgram {
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut b = ProgramBuilder::new(ConeSpec::new(vec![n + 1], edges.len()), Sense::Minimize);
    b.objective_entry(0, 0, 0, 1.0);
    for i in 1..=n {
        b.begin_row(format!("diag_{i}"), 1.0);
        b.row_entry(0, i, i, 1.0);
        b.begin_row(format!("border_{i}"), 1.0);
        b.row_entry(0, 0, i, 1.0);
    }
    for (i, j) in g.complement().edges() {
        b.begin_row(format!("nonedge_{i}_{j}"), 0.0);
        b.row_entry(0, i, j, 1.0);
    }
    for (k, &(i, j)) in edges.iter().enumerate() {
        b.begin_row(format!("nn_{i}_{j}"), 0.0);
        b.row_entry(0, i, j, 1.0);
        b.row_nonneg(k, -1.0);
    }
    b.build()
}

/// θ̂(g), the projection theta number: min tr(R) s.t. R ⪰ 0, R·1 = 1,
/// R_ij = 0 whenever {i,j} is a non-adjacent pair of g, R ≥ 0. Free
/// off-diagonal entries (edges of g) are tied to orthant variables in
/// ascending pair order; diagonal nonnegativity is implied by PSD.
///
/// The chromatic lower bound for a graph H is `build_hat_theta` of the
/// complement of H.
pub fn build_hat_theta(g: &Graph) -> ConicProgram {
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut b = ProgramBuilder::new(ConeSpec::new(vec![n], edges.len()), Sense::Minimize);
    for i in 0..n {
        b.objective_entry(0, i, i, 1.0);
    }
    for i in 0..n {
        b.begin_row(format!("rowsum_{}", i + 1), 1.0);
        for j in 0..n {
            b.row_entry(0, i.min(j), i.max(j), 1.0);
        }
    }
    for (i, j) in g.non_edges() {
        b.begin_row(format!("zero_{i}_{j}"), 0.0);
        b.row_entry(0, i - 1, j - 1, 1.0);
    }
    for (k, &(i, j)) in edges.iter().enumerate() {
        b.begin_row(format!("nn_{i}_{j}"), 0.0);
        b.row_entry(0, i - 1, j - 1, 1.0);
        b.row_nonneg(k, -1.0);
    }
    b.build()
}
