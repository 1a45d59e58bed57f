mod common;

use common::*;
use rand::Rng;
use tensor_eigen::catalog;
use tensor_eigen::exact::{self, ExactTensor};
use tensor_eigen::spectra::{self, CharPolyOutcome, ProbeKind};
use tensor_eigen::tensor::{dot, equivalent, form_from_tensor};
use tensor_eigen::{PolyForm, Tensor, C64};

#[test]
fn random_diagonal_tensors_match_closed_form() {
    let mut r = rng(31);
    for (m, n) in [(3, 3), (4, 3), (5, 2)] {
        let d: Vec<C64> = (0..n).map(|_| c(r.random_range(0.5..2.0), r.random_range(-1.0..1.0))).collect();
        let rep = spectra::eigenclasses(&Tensor::diagonal(m, &d), &cfg()).unwrap();
        let want = spectra::diagonal_classes(&d, m).unwrap();
        assert_eq!(want.len() as u128, spectra::expected_count(m, n).unwrap());
        assert_eq!(rep.classes.len(), want.len(), "({m},{n})");
        for w in &want {
            assert!(rep.classes.iter().any(|c| equivalent(&c.representative, &w.representative, m, 1e-8)));
        }
    }
}

#[test]
fn normalized_pairs_are_normalized_eigenpairs() {
    let mut r = rng(32);
    for (m, n) in [(3, 2), (4, 2), (3, 3)] {
        let a = catalog::random_complex(m, n, &mut r);
        let rep = spectra::eigenclasses(&a, &cfg()).unwrap();
        let pairs = spectra::normalized_pairs(&rep);
        let live = rep.classes.iter().filter(|c| !c.isotropic).count();
        assert_eq!(pairs.len(), if m % 2 == 1 { 2 * live } else { live });
        for p in pairs {
            assert!((dot(&p.x, &p.x) - c(1.0, 0.0)).norm() < 1e-10);
            assert!(p.residual_for(&a) < 1e-8 * (1.0 + p.lambda.norm()));
        }
    }
}

#[test]
fn numeric_charpoly_matches_exact_one_for_diagonal() {
    let a = catalog::diagonal_unit(3, 2);
    let CharPolyOutcome::Polynomial(p) = spectra::characteristic_polynomial_numeric(&a, &cfg()).unwrap() else {
        panic!("indeterminate");
    };
    assert!(p.in_lambda_squared);
    let e = exact::charpoly_exact_2_3(&ExactTensor::from_tensor(&a).unwrap()).unwrap();
    let lead = e.c2.to_c64();
    let want: Vec<C64> = [e.c8, e.c6, e.c4, e.c2].iter().map(|g| g.to_c64() / lead).collect();
    assert!(p.coefficients.iter().zip(&want).all(|(x, y)| (x - y).norm() < 1e-10), "{:?}", p.coefficients);
}

#[test]
fn charpoly_is_indeterminate_for_degenerate_spectra() {
    for a in [catalog::fineprint(), catalog::line_family()] {
        let out = spectra::characteristic_polynomial_numeric(&a, &cfg()).unwrap();
        assert!(matches!(out, CharPolyOutcome::Indeterminate(_)));
    }
}

#[test]
fn probe_on_a_finite_spectrum() {
    let r = spectra::singular_probe(&catalog::circle_row(), 5, &cfg()).unwrap();
    match r.kind {
        ProbeKind::FiniteValues(v) => assert!(same_set(&v, &[c(1.0, 0.0), c(-1.0, 0.0)], 1e-8)),
        k => panic!("{k:?}"),
    }
    assert_eq!(r.hits, 0);
    assert!(spectra::singular_probe(&catalog::circle_row(), 2, &cfg()).is_err());
}

#[test]
fn fixed_lambda_solvability() {
    let a = catalog::diagonal_unit(3, 2);
    assert_eq!(spectra::has_normalized_solution(&a, c(1.0, 0.0), &cfg()), Some(true));
    assert_eq!(spectra::has_normalized_solution(&a, c(0.3, 0.4), &cfg()), Some(false));
    assert_eq!(spectra::has_normalized_solution(&catalog::fineprint(), c(0.3, 0.4), &cfg()), Some(true));
}

#[test]
fn more_psd_verdicts() {
    let f = |t: &[(&[u32], f64)]| PolyForm::real(4, 2, t).unwrap();
    let cases = [
        (f(&[(&[4, 0], 1.0), (&[0, 4], -1.0)]), false),
        (f(&[(&[2, 2], 1.0)]), true),
        (f(&[(&[4, 0], -1.0), (&[2, 2], -2.0), (&[0, 4], -1.0)]), false),
        (f(&[(&[4, 0], 1.0), (&[3, 1], 1.0), (&[0, 4], 1.0)]), true),
    ];
    for (form, want) in cases {
        assert_eq!(spectra::is_positive_semidefinite(&form, &cfg(), 1e-8).unwrap(), want, "{form:?}");
    }
    assert!(spectra::is_positive_semidefinite(&PolyForm::real(3, 2, &[(&[3, 0], 1.0)]).unwrap(), &cfg(), 1e-8).is_err());
}

#[test]
fn motzkin_zeros_are_its_real_zeros() {
    let z = spectra::zero_eigenvectors(&catalog::motzkin_form(), &cfg()).unwrap();
    let key = |x: &[f64]| spectra::projective_key(&x.iter().map(|&v| c(v, 0.0)).collect::<Vec<_>>(), 6).unwrap();
    let mut want = vec![key(&[1.0, 0.0, 0.0]), key(&[0.0, 1.0, 0.0])];
    for (s, t) in [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)] {
        want.push(key(&[1.0, s, t]));
    }
    assert_eq!(z.points.len(), want.len());
    for p in &z.points {
        let k = spectra::projective_key(p, 6).unwrap();
        assert!(want.iter().any(|w| w.iter().zip(&k).all(|(a, b)| (a - b).norm() < 1e-6)), "{k:?}");
    }
}

#[test]
fn singular_point_check_separates_eigenvalues() {
    let a = catalog::random_symmetric(4, 2, true, &mut rng(33));
    let f = form_from_tensor(&a).unwrap();
    let rep = spectra::eigenclasses(&a, &cfg()).unwrap();
    for p in spectra::normalized_pairs(&rep) {
        assert!(spectra::shifted_singularity_check(&f, p.lambda, &p.x));
        assert!(!spectra::shifted_singularity_check(&f, p.lambda + 1e-3, &p.x));
    }
}

#[test]
fn real_classes_of_real_tensors_are_real() {
    let mut r = rng(34);
    let a = catalog::random_real(3, 3, &mut r);
    let rep = spectra::eigenclasses(&a, &cfg()).unwrap();
    let real = spectra::real_classes(&rep, 1e-8);
    assert!(!real.is_empty());
    for cl in real {
        assert!(cl.representative.x.iter().all(|z| z.im == 0.0) && cl.lambda().im == 0.0);
        assert!(cl.representative.residual_for(&a) < 1e-8);
    }
}

#[test]
fn format_errors() {
    assert!(spectra::expected_count(1, 3).is_err());
    assert!(spectra::expected_count(3, 0).is_err());
    assert!(spectra::eigenclasses(&catalog::random_complex(2, 9, &mut rng(1)), &cfg()).is_err());
}
