//! Inequality structure on a seeded random graph sample (the full
//! 50-graph suite runs in the acceptance tests).

use conic_solver::{solve_conic, SolveStatus, SolverConfig};
use exact_combinatorics::{alpha_exact, chi_exact, Guards};
use graph_core::{random_gnp, Family, Graph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use theta_models::{build_theta_dual, eval_bound, sinkhorn_feasible_point, BoundKind};

fn cfg() -> SolverConfig {
    SolverConfig::default()
}

fn sample(count: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    (0..count).map(|i| random_gnp(5 + i % 4, 0.5, &mut rng)).collect()
}

#[test]
fn sandwich_chain_on_random_graphs() {
    let guards = Guards::default();
    for g in sample(8) {
        let comp = g.complement();
        let omega = alpha_exact(&comp, &guards).unwrap().alpha as f64; // ω(g) = α(ḡ)
        let chi = chi_exact(&g, &guards).unwrap().chi as f64;
        let minus = eval_bound(BoundKind::ThetaMinus, &comp, &cfg()).unwrap().value;
        let theta = eval_bound(BoundKind::Theta, &comp, &cfg()).unwrap().value;
        let plus = eval_bound(BoundKind::ThetaPlus, &comp, &cfg()).unwrap().value;
        assert!(omega <= minus + 1e-5, "{g}: ω {omega} vs θ⁻ {minus}");
        assert!(minus <= theta + 1e-5, "{g}: θ⁻ {minus} vs θ {theta}");
        assert!(theta <= plus + 1e-5, "{g}: θ {theta} vs θ⁺ {plus}");
        assert!(plus <= chi + 1e-5, "{g}: θ⁺ {plus} vs χ {chi}");
    }
}

#[test]
fn projection_bound_is_below_szegedy() {
    for g in sample(8) {
        let hat = eval_bound(BoundKind::ThetaHat, &g, &cfg()).unwrap().value;
        let plus = eval_bound(BoundKind::ThetaPlus, &g, &cfg()).unwrap().value;
        assert!(plus >= hat - 1e-5, "{g}: θ⁺ {plus} < θ̂ {hat}");
    }
}

#[test]
fn product_inequality() {
    for g in sample(8) {
        let n = g.n() as f64;
        let hat = eval_bound(BoundKind::ThetaHat, &g, &cfg()).unwrap().value;
        let minus_comp = eval_bound(BoundKind::ThetaMinus, &g.complement(), &cfg()).unwrap().value;
        assert!(hat * minus_comp >= n - 1e-4, "{g}: {hat} · {minus_comp} < {n}");
    }
}

#[test]
fn primal_and_dual_theta_agree() {
    for g in sample(6) {
        let primal = eval_bound(BoundKind::Theta, &g, &cfg()).unwrap().value;
        let dual = solve_conic(&build_theta_dual(&g), &cfg()).unwrap();
        assert_eq!(dual.status, SolveStatus::Optimal);
        assert!(
            (primal - dual.primal_objective).abs() <= 1e-7,
            "{g}: primal {primal} dual {}",
            dual.primal_objective
        );
    }
}

/// Constructive route of the θ⁺ ≥ θ̂ proof: Sinkhorn-scale the optimal
/// θ⁺ block into a θ̂-feasible point whose trace is at most θ⁺.
#[test]
fn sinkhorn_turns_szegedy_blocks_into_feasible_points() {
    let mut graphs = sample(5);
    graphs.push(Family::Petersen.generate().unwrap());
    for g in graphs {
        let n = g.n();
        let plus = eval_bound(BoundKind::ThetaPlus, &g, &cfg()).unwrap();
        let bordered = conic_solver::ConeSpec::new(vec![n + 1], 0)
            .layout()
            .extract_block(&plus.solution.x, 0);
        let x_block = bordered.view((1, 1), (n, n)).into_owned();
        let (_, r) = sinkhorn_feasible_point(&x_block).unwrap();

        for i in 0..n {
            let row_sum: f64 = (0..n).map(|j| r[(i, j)]).sum();
            assert!((row_sum - 1.0).abs() <= 1e-10);
        }
        // zero pattern: non-adjacent pairs stay zero
        for (i, j) in g.non_edges() {
            assert!(r[(i - 1, j - 1)].abs() <= 1e-7, "{g}: entry ({i},{j})");
        }
        let hat = eval_bound(BoundKind::ThetaHat, &g, &cfg()).unwrap().value;
        let trace = r.trace();
        assert!(trace <= plus.value + 1e-6, "{g}: tr {trace} vs θ⁺ {}", plus.value);
        assert!(trace >= hat - 1e-6, "{g}: tr {trace} vs θ̂ {hat}");
    }
}
