use approx::assert_abs_diff_eq;
use conic_solver::{solve_conic, SolveStatus, SolverConfig};
use graph_core::{Family, Graph};
use theta_models::{
    build_theta_dual, build_theta_primal, eval_bound, two_clique_closed_form, BoundKind,
};

fn cfg() -> SolverConfig {
    SolverConfig::default()
}

fn theta(g: &Graph) -> f64 {
    eval_bound(BoundKind::Theta, g, &cfg()).unwrap().value
}

fn theta_dual_value(g: &Graph) -> f64 {
    let sol = solve_conic(&build_theta_dual(g), &cfg()).unwrap();
    assert_eq!(sol.status, SolveStatus::Optimal);
    sol.primal_objective
}

fn hat_theta(g: &Graph) -> f64 {
    eval_bound(BoundKind::ThetaHat, g, &cfg()).unwrap().value
}

#[test]
fn theta_of_complete_and_empty_graphs() {
    for n in [1, 2, 5, 8] {
        let kn = Family::Complete(n).generate().unwrap();
        let en = Family::Empty(n).generate().unwrap();
        assert_abs_diff_eq!(theta(&kn), 1.0, epsilon = 1e-6);
        assert_abs_diff_eq!(theta(&en), n as f64, epsilon = 1e-6);
        assert_abs_diff_eq!(theta_dual_value(&kn), 1.0, epsilon = 1e-6);
        assert_abs_diff_eq!(theta_dual_value(&en), n as f64, epsilon = 1e-6);
    }
}

#[test]
fn theta_of_c5_is_sqrt5() {
    let c5 = Family::Cycle(5).generate().unwrap();
    let primal = theta(&c5);
    let dual = theta_dual_value(&c5);
    assert_abs_diff_eq!(primal, 5f64.sqrt(), epsilon = 1e-6);
    assert!((primal - dual).abs() <= 1e-7, "strong duality: {primal} vs {dual}");
}

#[test]
fn schrijver_number_values() {
    for n in [2, 4, 6] {
        let kn = Family::Complete(n).generate().unwrap();
        let en = Family::Empty(n).generate().unwrap();
        assert_abs_diff_eq!(
            eval_bound(BoundKind::ThetaMinus, &kn, &cfg()).unwrap().value,
            1.0,
            epsilon = 1e-6
        );
        assert_abs_diff_eq!(
            eval_bound(BoundKind::ThetaMinus, &en, &cfg()).unwrap().value,
            n as f64,
            epsilon = 1e-6
        );
    }
    // K_{3,3,3} is perfect with ω = χ = 3, pinning θ⁻ between them
    let k333 = Family::CliqueUnion(vec![3, 3, 3]).generate().unwrap().complement();
    assert_abs_diff_eq!(
        eval_bound(BoundKind::ThetaMinus, &k333, &cfg()).unwrap().value,
        3.0,
        epsilon = 1e-5
    );
}

#[test]
fn szegedy_number_values() {
    let k333 = Family::CliqueUnion(vec![3, 3, 3]).generate().unwrap().complement();
    assert_abs_diff_eq!(
        eval_bound(BoundKind::ThetaPlus, &k333, &cfg()).unwrap().value,
        3.0,
        epsilon = 1e-5
    );
    for n in [2, 4, 6] {
        let kn = Family::Complete(n).generate().unwrap();
        let en = Family::Empty(n).generate().unwrap();
        assert_abs_diff_eq!(
            eval_bound(BoundKind::ThetaPlus, &kn, &cfg()).unwrap().value,
            1.0,
            epsilon = 1e-6
        );
        assert_abs_diff_eq!(
            eval_bound(BoundKind::ThetaPlus, &en, &cfg()).unwrap().value,
            n as f64,
            epsilon = 1e-6
        );
    }
}

#[test]
fn hat_theta_known_values() {
    for n in [1, 3, 6] {
        let kn = Family::Complete(n).generate().unwrap();
        let en = Family::Empty(n).generate().unwrap();
        assert_abs_diff_eq!(hat_theta(&kn), 1.0, epsilon = 1e-6);
        assert_abs_diff_eq!(hat_theta(&en), n as f64, epsilon = 1e-6);
    }
    // K_{4,5}: the two-clique closed form 41/9
    let k45 = Family::CliqueUnion(vec![4, 5]).generate().unwrap().complement();
    assert_abs_diff_eq!(hat_theta(&k45), 41.0 / 9.0, epsilon = 1e-6);
}

#[test]
fn hat_theta_table_spot_values() {
    let g432 = Family::CliqueUnion(vec![4, 3, 2]).generate().unwrap().complement();
    let v = eval_bound(BoundKind::ThetaHat, &g432, &cfg()).unwrap();
    assert_abs_diff_eq!(v.value, 29.0 / 9.0, epsilon = 1e-6);

    let g27 = Family::CliquePlusIsolated(2, 7).generate().unwrap().complement();
    assert_abs_diff_eq!(hat_theta(&g27), 11.0 / 9.0, epsilon = 1e-6);

    // vertex-transitive: θ⁺ and θ̂ agree on C_5
    let c5 = Family::Cycle(5).generate().unwrap();
    let plus = eval_bound(BoundKind::ThetaPlus, &c5, &cfg()).unwrap().value;
    assert!((plus - hat_theta(&c5)).abs() <= 1e-5);
}

/// The closed-form certificate point is feasible for the θ̂ program to
/// near machine precision and matches the solved optimum.
#[test]
fn two_clique_certificate_is_primal_feasible() {
    for (n1, n2) in [(4, 5), (2, 7), (3, 3), (1, 4)] {
        let cert = two_clique_closed_form(n1, n2);
        let g = cert.graph();
        let program = theta_models::build_hat_theta(&g);
        let x = cert.primal_vector(&program);
        let residual = (&program.a * &x - &program.b).norm() / (1.0 + program.b.norm());
        assert!(residual <= 1e-10, "({n1},{n2}): residual {residual}");

        let m = program.layout().extract_block(&x, 0);
        let min_eig = m.symmetric_eigen().eigenvalues.iter().cloned().fold(f64::MAX, f64::min);
        assert!(min_eig >= -1e-10, "({n1},{n2}): min eigenvalue {min_eig}");

        let solved = hat_theta(&g);
        assert_abs_diff_eq!(solved, cert.value_f64(), epsilon = 1e-6);
    }
}

/// A hand-built exact feasible point (R = J/3 for the θ̂ model of K_3)
/// has zero primal residual up to machine precision.
#[test]
fn exact_feasible_point_has_machine_zero_residual() {
    let k3 = Family::Complete(3).generate().unwrap();
    let program = theta_models::build_hat_theta(&k3);
    let layout = program.layout();
    let mut x = nalgebra::DVector::zeros(program.num_vars());
    for i in 0..3 {
        for j in i..3 {
            let scale = if i == j { 1.0 } else { std::f64::consts::SQRT_2 };
            x[layout.psd_coord(0, i, j)] = scale / 3.0;
        }
    }
    for k in 0..3 {
        x[layout.nonneg_coord(k)] = 1.0 / 3.0;
    }
    let residual = (&program.a * &x - &program.b).norm() / (1.0 + program.b.norm());
    assert!(residual <= 1e-15, "residual {residual}");
}

/// θ̂ is not monotone under induced subgraphs: K_3 − e inside K_9 − e
/// has the larger value (5/3 > 11/9).
#[test]
fn non_monotonicity_witness() {
    let big = Family::CliquePlusIsolated(2, 7).generate().unwrap().complement();
    let small = big.induced_subgraph(&[1, 2, 3]).unwrap();
    let v_big = hat_theta(&big);
    let v_small = hat_theta(&small);
    assert_abs_diff_eq!(v_big, 11.0 / 9.0, epsilon = 1e-5);
    assert_abs_diff_eq!(v_small, 5.0 / 3.0, epsilon = 1e-5);
    assert!(v_small > v_big + 1e-4);
}
