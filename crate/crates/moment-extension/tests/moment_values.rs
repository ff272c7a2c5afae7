use approx::assert_abs_diff_eq;
use conic_solver::{solve_conic, SolveStatus, SolverConfig};
use graph_core::{random_gnp, Family, Graph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use moment_extension::{
    build_hat_theta_prime, build_hat_theta_prime_with, hat_theta_prime, MomentOptions,
    ZeroHandling,
};
use theta_models::{eval_bound, BoundKind};

fn cfg() -> SolverConfig {
    SolverConfig::default()
}

fn value(g: &Graph) -> f64 {
    hat_theta_prime(g, &cfg()).unwrap().value
}

#[test]
fn complete_and_empty_extremes() {
    for n in [1, 3, 5] {
        assert_abs_diff_eq!(value(&Family::Complete(n).generate().unwrap()), 1.0, epsilon = 1e-6);
        assert_abs_diff_eq!(
            value(&Family::Empty(n).generate().unwrap()),
            n as f64,
            epsilon = 1e-6
        );
    }
}

#[test]
fn published_table_spot_values() {
    let g = Family::CliqueUnion(vec![4, 3, 2]).generate().unwrap().complement();
    assert_abs_diff_eq!(value(&g), 3.968, epsilon = 2e-3);

    let g = Family::CliqueUnion(vec![3, 3, 3]).generate().unwrap().complement();
    assert_abs_diff_eq!(value(&g), 3.0, epsilon = 1e-5);

    let g = Family::CliquePlusIsolated(8, 1).generate().unwrap().complement();
    assert_abs_diff_eq!(value(&g), 8.0, epsilon = 1e-5);

    let g = Family::CliquePlusIsolated(5, 4).generate().unwrap().complement();
    assert_abs_diff_eq!(value(&g), 4.905, epsilon = 2e-3);
}

#[test]
fn strengthens_hat_theta_and_respects_chi() {
    let guards = exact_combinatorics::Guards::default();
    let mut rng = ChaCha8Rng::seed_from_u64(97);
    for i in 0..6 {
        let g = random_gnp(5 + i % 3, 0.5, &mut rng);
        let hat = eval_bound(BoundKind::ThetaHat, &g, &cfg()).unwrap().value;
        let prime = value(&g);
        assert!(hat <= prime + 1e-5, "{g}: θ̂ {hat} > θ̂′ {prime}");
        let chi = exact_combinatorics::chi_exact(&g.complement(), &guards).unwrap().chi as f64;
        assert!(prime <= chi + 1e-5, "{g}: θ̂′ {prime} > χ(ḡ) {chi}");
    }
}

#[test]
fn exact_on_two_clique_unions() {
    for n1 in 1..=8usize {
        for n2 in n1..=(9 - n1) {
            let g = Family::CliqueUnion(vec![n1, n2]).generate().unwrap().complement();
            assert_abs_diff_eq!(value(&g), n1.max(n2) as f64, epsilon = 1e-4);
        }
    }
}

#[test]
fn size_guard_is_enforced() {
    let g = Family::Empty(31).generate().unwrap();
    assert!(matches!(
        hat_theta_prime(&g, &cfg()),
        Err(moment_extension::MomentError::GuardExceeded { n: 31, limit: 30 })
    ));
}

/// The explicit R·1 = 1 rows are implied by the slice normalizations
/// and the shared tensor storage: presolve must drop exactly n
/// dependent rows and the optimum must not move.
#[test]
fn row_sums_are_redundant() {
    let g = Family::CliqueUnion(vec![3, 2]).generate().unwrap().complement();
    let plain = build_hat_theta_prime(&g);
    let with_rows = build_hat_theta_prime_with(
        &g,
        &MomentOptions {
            zero_handling: ZeroHandling::Eliminate,
            explicit_row_sums: true,
        },
    );
    assert_eq!(with_rows.program.num_rows(), plain.program.num_rows() + g.n());

    let sol_plain = solve_conic(&plain.program, &cfg()).unwrap();
    let sol_rows = solve_conic(&with_rows.program, &cfg()).unwrap();
    assert_eq!(sol_plain.status, SolveStatus::Optimal);
    assert_eq!(sol_rows.status, SolveStatus::Optimal);
    assert_eq!(sol_plain.dropped_rows.len(), 0);
    assert_eq!(sol_rows.dropped_rows.len(), g.n(), "rank deficiency is exactly n");
    assert!((sol_plain.primal_objective - sol_rows.primal_objective).abs() <= 1e-7);
}

/// Variable elimination of the zero pattern is equivalent to stating
/// ⟨slice, A_ḡ⟩ = 0 with nonnegative entries, graph by graph.
#[test]
fn elimination_matches_explicit_orthogonality() {
    let mut graphs: Vec<Graph> = vec![
        Family::CliqueUnion(vec![3, 2]).generate().unwrap().complement(),
        Family::Cycle(5).generate().unwrap(),
        Family::Path(4).generate().unwrap(),
        Family::CliquePlusIsolated(3, 2).generate().unwrap().complement(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..3 {
        graphs.push(random_gnp(6, 0.5, &mut rng));
    }
    for g in graphs {
        let eliminated = build_hat_theta_prime(&g);
        let explicit = build_hat_theta_prime_with(
            &g,
            &MomentOptions {
                zero_handling: ZeroHandling::ExplicitRows,
                explicit_row_sums: false,
            },
        );
        let v1 = solve_conic(&eliminated.program, &cfg()).unwrap();
        let v2 = solve_conic(&explicit.program, &cfg()).unwrap();
        assert_eq!(v1.status, SolveStatus::Optimal, "{g} eliminated");
        assert_eq!(v2.status, SolveStatus::Optimal, "{g} explicit");
        assert!(
            (v1.primal_objective - v2.primal_objective).abs() <= 1e-6,
            "{g}: {} vs {}",
            v1.primal_objective,
            v2.primal_objective
        );
    }
}

/// Feasible-point recovery: r_i = slice_i·1 and R = Σ slice_i satisfy
/// R·eᵢ = r_i and R·1 = 1.
#[test]
fn slice_recovery_identities() {
    let g = Family::CliqueUnion(vec![4, 3, 2]).generate().unwrap().complement();
    let model = build_hat_theta_prime(&g);
    // the identities below aggregate ~n² individual residuals, so solve
    // an order tighter than the 1e-8 they are checked at
    let tight = SolverConfig {
        feas_tol: 1e-10,
        gap_tol: 1e-10,
        ..SolverConfig::default()
    };
    let sol = solve_conic(&model.program, &tight).unwrap();
    assert_eq!(sol.status, SolveStatus::Optimal);
    let slices = model.slices_from_solution(&sol.x);
    let n = g.n();
    let mut r = nalgebra::DMatrix::zeros(n, n);
    for s in &slices {
        r += s;
    }
    let ones = nalgebra::DVector::from_element(n, 1.0);
    let row_sums = &r * &ones;
    for i in 0..n {
        assert_abs_diff_eq!(row_sums[i], 1.0, epsilon = 1e-8);
        let r_i = &slices[i] * &ones;
        let col_i = r.column(i);
        for j in 0..n {
            assert_abs_diff_eq!(col_i[j], r_i[j], epsilon = 1e-8);
        }
    }

    // tensor readback (orthant copies) agrees with the slices (PSD
    // copies) up to the tie-row residuals
    let tensor = model.tensor_from_solution(&sol.x);
    for i in 1..=n {
        let slice = tensor.slice(i);
        for j in 0..n {
            for l in 0..n {
                assert_abs_diff_eq!(slice[(j, l)], slices[i - 1][(j, l)], epsilon = 1e-8);
            }
        }
    }
}
