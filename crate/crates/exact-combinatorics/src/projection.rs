use num::{BigRational, One, Signed, Zero};

use graph_core::Graph;

use crate::stable::is_stable_mask;
use crate::{ExactError, Guards, Partition, RationalMatrix};

/// Binary n×k matrix with unit row sums and no all-zero column:
/// vertex `v` is assigned to the colour class `assign[v-1]` (0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssignmentMatrix {
    n: usize,
    k: usize,
    assign: Vec<usize>,
}

impl AssignmentMatrix {
    pub fn new(n: usize, k: usize, assign: Vec<usize>) -> Result<Self, ExactError> {
        assert_eq!(assign.len(), n, "one column index per vertex");
        let mut used = vec![false; k];
        for &c in &assign {
            assert!(c < k, "column index out of range");
            used[c] = true;
        }
        if let Some(col) = used.iter().position(|&u| !u) {
            return Err(ExactError::ZeroColumn(col));
        }
        Ok(AssignmentMatrix { n, k, assign })
    }

    /// Assignment matrix of a partition, columns ordered by the
    /// partition's part order (ascending minimum element).
    pub fn from_partition(p: &Partition) -> Self {
        AssignmentMatrix {
            n: p.n(),
            k: p.k(),
            assign: p.part_of(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn entry(&self, row: usize, col: usize) -> bool {
        self.assign[row] == col
    }

    /// Sizes of the colour classes (the diagonal of UᵀU).
    pub fn column_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0usize; self.k];
        for &c in &self.assign {
            sizes[c] += 1;
        }
        sizes
    }

    /// The column partition {supp(u_1), …, supp(u_k)}.
    pub fn column_partition(&self) -> Partition {
        let mut parts = vec![Vec::new(); self.k];
        for (v, &c) in self.assign.iter().enumerate() {
            parts[c].push(v + 1);
        }
        Partition::new(self.n, parts).expect("assignment covers all vertices")
    }
}

/// The projection matrix ρ(U) = U(UᵀU)⁻¹Uᵀ, exactly. Since UᵀU is the
/// diagonal matrix of class sizes, entry (i, j) is 1/|class| when rows
/// i and j share a class, else 0.
pub fn rho(u: &AssignmentMatrix) -> RationalMatrix {
    let sizes = u.column_sizes();
    let n = u.n();
    let mut r = RationalMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            if u.assign[i] == u.assign[j] {
                r.set(i, j, RationalMatrix::fraction(1, sizes[u.assign[i]] as i64));
            }
        }
    }
    r
}

/// Outcome of the combinatorial-projection validation; the first
/// violated condition is named, in the order: columns in the
/// stable-set-constrained simplex, block-inducing equations, symmetry,
/// integral trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProjectionDiagnostic {
    Valid { trace: usize },
    ColumnNotInSimplex { col: usize },
    ColumnSupportNotStable { col: usize },
    BlockInducingViolated { i: usize, j: usize, row: usize },
    NotSymmetric { i: usize, j: usize },
    TraceNotIntegral,
}

impl ProjectionDiagnostic {
    pub fn is_valid(&self) -> bool {
        matches!(self, ProjectionDiagnostic::Valid { .. })
    }
}

/// Checks all conditions defining a combinatorial projection matrix for
/// `g`, exactly: every column lies in the simplex and has stable
/// support, the block-inducing equations r_ij·(r_i − r_j) = 0 hold, the
/// matrix is symmetric, and the trace is a (positive) integer.
pub fn is_combinatorial_projection(
    r: &RationalMatrix,
    g: &Graph,
) -> Result<ProjectionDiagnostic, ExactError> {
    let n = g.n();
    if r.rows() != n || r.cols() != n {
        return Err(ExactError::DimensionMismatch {
            rows: r.rows(),
            cols: r.cols(),
            n,
        });
    }
    let masks = g.neighbor_masks();

    for col in 0..n {
        if !r.has_nonnegative_column(col) || !r.column_sum(col).is_one() {
            return Ok(ProjectionDiagnostic::ColumnNotInSimplex { col });
        }
        let support_mask = r
            .column_support(col)
            .iter()
            .fold(0u64, |m, &i| m | (1 << i));
        if !is_stable_mask(support_mask, &masks) {
            return Ok(ProjectionDiagnostic::ColumnSupportNotStable { col });
        }
    }

    for i in 0..n {
        for j in 0..n {
            let rij = r.get(i, j);
            if rij.is_zero() {
                continue;
            }
            for row in 0..n {
                if rij * (r.get(row, i) - r.get(row, j)) != BigRational::zero() {
                    return Ok(ProjectionDiagnostic::BlockInducingViolated { i, j, row });
                }
            }
        }
    }

    for i in 0..n {
        for j in 0..i {
            if r.get(i, j) != r.get(j, i) {
                return Ok(ProjectionDiagnostic::NotSymmetric { i, j });
            }
        }
    }

    let trace = r.trace();
    if !trace.is_integer() || !trace.is_positive() {
        return Ok(ProjectionDiagnostic::TraceNotIntegral);
    }
    let k = trace.to_integer().to_string().parse::<usize>().expect("trace fits usize");
    Ok(ProjectionDiagnostic::Valid { trace: k })
}

/// Reconstructs the colouring from a combinatorial projection matrix:
/// the parts are the distinct column supports. Validates first; by the
/// support law, ρ(ψ(R)) = R exactly.
pub fn psi(r: &RationalMatrix, g: &Graph) -> Result<Partition, ExactError> {
    match is_combinatorial_projection(r, g)? {
        ProjectionDiagnostic::Valid { .. } => {}
        other => return Err(ExactError::NotAProjection(format!("{other:?}"))),
    }
    let n = g.n();
    let mut supports: Vec<Vec<usize>> = Vec::new();
    for col in 0..n {
        let support: Vec<usize> = r.column_support(col).iter().map(|&i| i + 1).collect();
        if !supports.contains(&support) {
            supports.push(support);
        }
    }
    Partition::new(n, supports)
}

/// All n×k binary matrices with unit row sums, no zero column, and
/// every column support stable in `g`, in lexicographic order of the
/// row-assignment vector.
pub fn enumerate_assignment_matrices(
    g: &Graph,
    k: usize,
    guards: &Guards,
) -> Result<Vec<AssignmentMatrix>, ExactError> {
    let n = g.n();
    if n > guards.partitions {
        return Err(ExactError::GuardExceeded {
            op: "enumerate_assignment_matrices",
            n,
            limit: guards.partitions,
        });
    }
    if k < 1 || k > n {
        return Err(ExactError::BadColourCount { k, n });
    }
    let masks = g.neighbor_masks();
    let mut out = Vec::new();
    let mut assign = vec![0usize; n];
    let mut class_masks = vec![0u64; k];
    enumerate_rec(&masks, k, 0, &mut assign, &mut class_masks, &mut out);
    Ok(out
        .into_iter()
        .filter_map(|assign| AssignmentMatrix::new(n, k, assign).ok())
        .collect())
}

fn enumerate_rec(
    masks: &[u64],
    k: usize,
    v: usize,
    assign: &mut Vec<usize>,
    class_masks: &mut Vec<u64>,
    out: &mut Vec<Vec<usize>>,
) {
    if v == masks.len() {
        out.push(assign.clone());
        return;
    }
    for c in 0..k {
        if masks[v] & class_masks[c] != 0 {
            continue; // adjacent to something already in the class
        }
        assign[v] = c;
        class_masks[c] |= 1 << v;
        enumerate_rec(masks, k, v + 1, assign, class_masks, out);
        class_masks[c] &= !(1 << v);
    }
}

/// All partitions of [n] into stable sets of `g`, via restricted-growth
/// strings with stability pruning.
pub fn enumerate_stable_partitions(g: &Graph, guards: &Guards) -> Result<Vec<Partition>, ExactError> {
    let n = g.n();
    if n > guards.partitions {
        return Err(ExactError::GuardExceeded {
            op: "enumerate_stable_partitions",
            n,
            limit: guards.partitions,
        });
    }
    let masks = g.neighbor_masks();
    let mut out = Vec::new();
    let mut class_masks: Vec<u64> = Vec::new();
    partitions_rec(&masks, 0, &mut class_masks, &mut out);
    let partitions = out
        .into_iter()
        .map(|classes| {
            let parts = classes
                .iter()
                .map(|&m| crate::stable::mask_to_vertices(m, n))
                .collect();
            Partition::new(n, parts).expect("enumeration yields valid partitions")
        })
        .collect();
    Ok(partitions)
}

fn partitions_rec(masks: &[u64], v: usize, class_masks: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if v == masks.len() {
        out.push(class_masks.clone());
        return;
    }
    for c in 0..class_masks.len() {
        if masks[v] & class_masks[c] == 0 {
            class_masks[c] |= 1 << v;
            partitions_rec(masks, v + 1, class_masks, out);
            class_masks[c] &= !(1 << v);
        }
    }
    class_masks.push(1 << v);
    partitions_rec(masks, v + 1, class_masks, out);
    class_masks.pop();
}

#[derive(Clone, Debug)]
pub struct ChiProjectionResult {
    pub chi: usize,
    pub witness: Partition,
}

/// Chromatic number through the projection-matrix characterization:
/// minimum trace over all combinatorial projection matrices, obtained
/// by enumerating stable partitions, mapping through ρ, and validating
/// each image. Must agree with `chi_exact`.
pub fn chi_via_projection(g: &Graph, guards: &Guards) -> Result<ChiProjectionResult, ExactError> {
    let mut best: Option<(usize, Partition)> = None;
    for partition in enumerate_stable_partitions(g, guards)? {
        let u = AssignmentMatrix::from_partition(&partition);
        let r = rho(&u);
        let diag = is_combinatorial_projection(&r, g)?;
        let ProjectionDiagnostic::Valid { trace } = diag else {
            debug_assert!(false, "stable-partition image failed validation: {diag:?}");
            continue;
        };
        if best.as_ref().is_none_or(|(k, _)| trace < *k) {
            best = Some((trace, partition));
        }
    }
    let (chi, witness) = best.expect("the singleton partition is always stable");
    Ok(ChiProjectionResult { chi, witness })
}
