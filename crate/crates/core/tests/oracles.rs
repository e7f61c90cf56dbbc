//! Worked examples checked against dense reference computations.

mod common;

use jacobi_spectra::{
    extract_three_spectra, g_product_form, measure_to_jacobi, spectral_measure, Anchor,
    DiscreteMeasure, ForwardOptions, JacobiMatrix, SignedEigenvalue, ThreeSpectra, DEFAULT_EIG_TOL,
};

const SQRT2: f64 = std::f64::consts::SQRT_2;

fn path3(a2: f64) -> JacobiMatrix {
    JacobiMatrix::new(vec![0.0; 3], vec![1.0, a2]).unwrap()
}

#[test]
fn product_form_two_by_two_against_inverse() {
    let h = JacobiMatrix::new(vec![0.0, 0.0], vec![1.0]).unwrap();
    let want = common::resolvent_entry(&h, 2.0, 0);
    assert!((want + 2.0 / 3.0).abs() < 1e-15);
    let data = ThreeSpectra::new(2, 1, vec![-1.0, 1.0], vec![SignedEigenvalue::new(0.0, 1.0)]);
    assert!((g_product_form(&data, 2.0).unwrap() - want).abs() < 1e-15);
}

#[test]
fn product_form_doubled_against_inverse() {
    let want = common::resolvent_entry(&path3(1.0), 1.0, 1);
    assert!((want - 1.0).abs() < 1e-14);
    let data = ThreeSpectra::new(
        3,
        2,
        vec![-SQRT2, 0.0, SQRT2],
        vec![SignedEigenvalue::new(0.0, 0.0); 2],
    );
    assert!((g_product_form(&data, 1.0).unwrap() - want).abs() < 1e-14);
}

#[test]
fn forward_examples_against_dense() {
    for (a2, sigma) in [(1.0, 0.0), (2.0, 0.6)] {
        let h = path3(a2);
        let data = extract_three_spectra(&h, 2, &ForwardOptions::default()).unwrap();
        let dense = common::dense_eigenvalues(&h);
        assert!(common::max_abs_diff(&data.lambda, &dense) < 1e-13);
        assert!((data.lambda[1]).abs() < 1e-13);
        assert_eq!(data.doubled_pairs(), vec![0]);
        assert!((data.mu[0].sigma - sigma).abs() < 1e-13);
    }
}

#[test]
fn measure_example_against_dense_eigenvectors() {
    let h = path3(1.0);
    let (nodes, weights) = common::dense_measure(&h, false);
    assert!(common::max_abs_diff(&weights, &[0.25, 0.5, 0.25]) < 1e-14);
    let m = spectral_measure(&h, Anchor::First, DEFAULT_EIG_TOL).unwrap();
    assert!(common::max_abs_diff(m.nodes(), &nodes) < 1e-14);
    assert!(common::max_abs_diff(m.weights(), &weights) < 1e-14);
}

#[test]
fn moment_example_verified_by_forward_eigendecomposition() {
    let m = DiscreteMeasure::new(vec![-SQRT2, 0.0, SQRT2], vec![0.25, 0.5, 0.25]).unwrap();
    let j = measure_to_jacobi(&m, Anchor::First).unwrap();
    let (nodes, weights) = common::dense_measure(&j, false);
    assert!(common::max_abs_diff(&nodes, m.nodes()) < 1e-14);
    assert!(common::max_abs_diff(&weights, m.weights()) < 1e-14);
}
