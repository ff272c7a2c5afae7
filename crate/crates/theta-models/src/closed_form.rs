use nalgebra::DVector;
use num::rational::Ratio;
use num::ToPrimitive;

use conic_solver::ConicProgram;
use graph_core::{Family, Graph};

type Rational = Ratio<i64>;

/// Exact optimal solution of the θ̂ model for the complement of
/// K_{n1} ∪ K_{n2}: the feasible matrix is
///
/// ```text
/// R = [[α·I_{n1}, β·J], [β·J, γ·I_{n2}]]
/// ```
///
/// with (α, β, γ) = (n1, 1, n2)/(n1+n2), trace (n1² + n2²)/(n1 + n2),
/// and the Schur condition α·γ = β²·n1·n2 tight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCliqueCertificate {
    pub n1: usize,
    pub n2: usize,
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
    pub value: Rational,
}

pub fn two_clique_closed_form(n1: usize, n2: usize) -> TwoCliqueCertificate {
    assert!(n1 >= 1 && n2 >= 1, "clique sizes must be positive");
    let (a, b) = (n1 as i64, n2 as i64);
    let total = a + b;
    TwoCliqueCertificate {
        n1,
        n2,
        alpha: Rational::new(a, total),
        beta: Rational::new(1, total),
        gamma: Rational::new(b, total),
        value: Rational::new(a * a + b * b, total),
    }
}

impl TwoCliqueCertificate {
    pub fn value_f64(&self) -> f64 {
        self.value.to_f64().expect("small rational")
    }

    /// The evaluation graph: complement of K_{n1} ∪ K_{n2}.
    pub fn graph(&self) -> Graph {
        Family::CliqueUnion(vec![self.n1, self.n2])
            .generate()
            .expect("positive sizes")
            .complement()
    }

    /// The certificate as a full variable vector of
    /// `build_hat_theta(self.graph())`: block entries plus the matching
    /// orthant values (β on every cross pair, in the builder's
    /// ascending edge order).
    pub fn primal_vector(&self, program: &ConicProgram) -> DVector<f64> {
        let layout = program.layout();
        let n = self.n1 + self.n2;
        assert_eq!(program.cone.psd_block_sizes, vec![n]);
        let alpha = self.alpha.to_f64().unwrap();
        let beta = self.beta.to_f64().unwrap();
        let gamma = self.gamma.to_f64().unwrap();
        let entry = |i: usize, j: usize| -> f64 {
            let first = |v: usize| v < self.n1;
            if i == j {
                if first(i) {
                    alpha
                } else {
                    gamma
                }
            } else if first(i) != first(j) {
                beta
            } else {
                0.0
            }
        };
        let mut x = DVector::zeros(program.num_vars());
        for i in 0..n {
            for j in i..n {
                let scale = if i == j { 1.0 } else { std::f64::consts::SQRT_2 };
                x[layout.psd_coord(0, i, j)] = scale * entry(i, j);
            }
        }
        for (k, (i, j)) in self.graph().edges().enumerate() {
            x[layout.nonneg_coord(k)] = entry(i - 1, j - 1);
        }
        x
    }
}

/// Worst-case gap Δ(n1, n2) = max(n1, n2) − (n1² + n2²)/(n1 + n2)
/// between θ⁺ and θ̂ on complements of two-clique unions, exactly.
pub fn worst_case_gap(n1: usize, n2: usize) -> Rational {
    assert!(n1 >= 1 && n2 >= 1);
    let cert = two_clique_closed_form(n1, n2);
    Rational::from_integer(n1.max(n2) as i64) - cert.value
}

/// Asymptotics of the gap for n2 = μ·n1.
#[derive(Clone, Copy, Debug)]
pub struct GapAsymptotics {
    /// Maximizing ratio μ = √2 − 1.
    pub optimal_ratio: f64,
    /// lim Δ(m, μm)/m at the optimal ratio: 3 − 2√2.
    pub gap_per_clique_size: f64,
    /// lim Δ / (graph size): (3 − 2√2)/√2.
    pub relative_limit: f64,
}

pub fn gap_asymptotics() -> GapAsymptotics {
    let sqrt2 = std::f64::consts::SQRT_2;
    GapAsymptotics {
        optimal_ratio: sqrt2 - 1.0,
        gap_per_clique_size: 3.0 - 2.0 * sqrt2,
        relative_limit: (3.0 - 2.0 * sqrt2) / sqrt2,
    }
}
