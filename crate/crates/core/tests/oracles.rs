mod common;

use atiyah_lab::atiyah_core::{build_matrix, log_determinant};
use atiyah_lab::closed_forms::{case_a_det, case_b_det, case_lambda};
use atiyah_lab::generators::{case_a_config, collinear_vertical, random_ascending, seeded_rng};
use atiyah_lab::OrientationPolicy;
use common::*;
use rand::Rng;

#[test]
fn printed_matrices() {
    assert_eq!(case_a_proof_matrix(&[1.0, 2.0]), vec![vec![1.0, -1.0, 0.0], vec![0.0, 1.0, -2.0], vec![2.0, 3.0, 1.0]]);
    assert!((det_real(case_a_proof_matrix(&[1.0, 2.0])) - 11.0).abs() < 1e-12);
    assert_eq!(case_b_proof_matrix(&[2.0]), vec![vec![1.0, 0.0, -4.0], vec![2.0, 3.0, 1.0], vec![2.0, -3.0, 1.0]]);
    assert!((det_real(case_b_proof_matrix(&[2.0])) - 54.0).abs() < 1e-12);
}

#[test]
fn case_a_against_proof_matrix() {
    let mut rng = seeded_rng(11);
    for m in 1..=10 {
        for _ in 0..20 {
            let lam: Vec<f64> = random_ascending(&mut rng, m, -2.0, 2.0).iter().map(|&a| case_lambda(a, -1.0)).collect();
            let closed = case_a_det(&lam).unwrap();
            let oracle = det_real(case_a_proof_matrix(&lam)).abs();
            assert!(rel(closed, oracle) <= 1e-10, "m={m} {closed} vs {oracle}");
        }
    }
}

#[test]
fn case_b_against_proof_matrix() {
    let mut rng = seeded_rng(12);
    for m in 1..=10 {
        for _ in 0..20 {
            let lam: Vec<f64> = random_ascending(&mut rng, m, -2.0, 2.0).iter().map(|&a| case_lambda(a, -1.0)).collect();
            let closed = case_b_det(&lam).unwrap().det;
            let oracle = det_real(case_b_proof_matrix(&lam)).abs();
            assert!(rel(closed, oracle) <= 1e-10, "m={m} {closed} vs {oracle}");
        }
    }
}

/// With a general `b < 0` the lambdas scale by `|b|`:
/// `|det P| = S * |b|^{2m} * case_a_det(lambda / |b|)`.
#[test]
fn case_a_general_b_scaling() {
    let mut rng = seeded_rng(13);
    for m in 1..=6 {
        let a = random_ascending(&mut rng, m, -2.0, 2.0);
        let b = -rng.random_range(0.2..3.0);
        let beta: f64 = -b;
        let (c, pol) = case_a_config(&a, b).unwrap();
        let got = log_determinant(&build_matrix(&c, &pol).unwrap()).log_abs;
        let scaled: Vec<f64> = a.iter().map(|&x| case_lambda(x, b) / beta).collect();
        let want = log_pair_scalar(&a) + 2.0 * m as f64 * beta.ln() + case_a_det(&scaled).unwrap().ln();
        assert!((got - want).exp_m1().abs() <= 1e-9, "m={m} b={b}: {got} vs {want}");
    }
}

#[test]
fn collinear_monomial_structure() {
    let c = collinear_vertical(&[0.0, 1.0, 2.0, 3.0, 4.0]).unwrap();
    let p = build_matrix(&c, &OrientationPolicy::Canonical).unwrap();
    for i in 0..5 {
        for j in 0..5 {
            assert_eq!(p[(i, j)].norm() != 0.0, j == i, "entry ({i},{j})");
        }
    }
    let got = log_determinant(&p).log_abs;
    assert!((got - log_pair_scalar(&[0.0, 1.0, 2.0, 3.0, 4.0])).abs() < 1e-12);
}
