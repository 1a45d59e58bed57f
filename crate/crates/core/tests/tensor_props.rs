mod common;

use common::c;
use num_traits::{One, Zero};
use proptest::prelude::*;
use tensor_eigen::exact::GR;
use tensor_eigen::spectra::expected_count;
use tensor_eigen::tensor::{
    apply_power, canonicalize, dot, form_from_tensor, scalar_form, tensor_from_form, EigenPair,
};
use tensor_eigen::{PolyForm, Tensor, C64};

fn complex() -> impl Strategy<Value = C64> {
    (-2.0f64..2.0, -2.0f64..2.0).prop_map(|(re, im)| c(re, im))
}

fn tensor(m: usize, n: usize) -> impl Strategy<Value = Tensor> {
    prop::collection::vec(complex(), n.pow(m as u32)).prop_map(move |e| Tensor::new(m, n, e).unwrap())
}

fn shaped() -> impl Strategy<Value = (Tensor, Vec<C64>)> {
    (2usize..=4, 1usize..=3).prop_flat_map(|(m, n)| (tensor(m, n), prop::collection::vec(complex(), n)))
}

fn gaussian() -> impl Strategy<Value = GR> {
    (-20i64..20, 1i64..9, -20i64..20, 1i64..9)
        .prop_map(|(a, b, p, q)| &GR::ratio(a, b) + &(&GR::ratio(p, q) * &GR::i()))
}

fn close(a: &[C64], b: &[C64], tol: f64) -> bool {
    a.iter().zip(b).all(|(x, y)| (x - y).norm() <= tol * (1.0 + y.norm()))
}

proptest! {
    #[test]
    fn contraction_is_homogeneous((a, x) in shaped(), t in complex()) {
        let m = a.order() as u32;
        let tx: Vec<C64> = x.iter().map(|z| z * t).collect();
        let lhs = apply_power(&a, &tx).unwrap();
        let rhs: Vec<C64> = apply_power(&a, &x).unwrap().iter().map(|z| z * t.powu(m - 1)).collect();
        prop_assert!(close(&lhs, &rhs, 1e-9));
    }

    #[test]
    fn euler_identity_for_forms(coeffs in prop::collection::vec(-3.0f64..3.0, 4), x in prop::collection::vec(complex(), 2)) {
        let terms: Vec<(Vec<u32>, C64)> = (0..4).map(|k| (vec![3 - k as u32, k as u32], c(coeffs[k], 0.0))).collect();
        let f = PolyForm::new(3, 2, terms).unwrap();
        let lhs = dot(&x, &f.gradient(&x));
        prop_assert!((lhs - f.eval(&x) * 3.0).norm() <= 1e-9 * (1.0 + lhs.norm()));
    }

    #[test]
    fn scalar_form_is_dot_with_contraction((a, x) in shaped()) {
        let s = scalar_form(&a, &x).unwrap();
        let d = dot(&x, &apply_power(&a, &x).unwrap());
        prop_assert!((s - d).norm() <= 1e-9 * (1.0 + d.norm()));
    }

    #[test]
    fn canonical_form_ignores_rescaling((a, x) in shaped(), t in complex()) {
        prop_assume!(x.iter().any(|z| z.norm() > 1e-3) && t.norm() > 1e-2);
        let m = a.order();
        let p = EigenPair::new(c(0.7, -0.2), x);
        let q = p.rescaled(t, m);
        let (cp, cq) = (canonicalize(&p, m).unwrap(), canonicalize(&q, m).unwrap());
        prop_assert!(close(&cp.x, &cq.x, 1e-9));
        prop_assert!((cp.lambda - cq.lambda).norm() <= 1e-8 * (1.0 + cp.lambda.norm()));
    }

    #[test]
    fn form_round_trip(coeffs in prop::collection::vec(-3i32..=3, 10)) {
        let exps = [[3, 0, 0], [0, 3, 0], [0, 0, 3], [2, 1, 0], [2, 0, 1], [1, 2, 0], [0, 2, 1], [1, 0, 2], [0, 1, 2], [1, 1, 1]];
        let terms: Vec<(Vec<u32>, C64)> = exps.iter().zip(&coeffs)
            .filter(|(_, &k)| k != 0)
            .map(|(e, &k)| (e.to_vec(), c(f64::from(k), 0.0)))
            .collect();
        let f = PolyForm::new(3, 3, terms).unwrap();
        let a = tensor_from_form(&f).unwrap();
        prop_assert!(a.is_symmetric());
        prop_assert_eq!(form_from_tensor(&a).unwrap(), f);
    }

    #[test]
    fn contraction_is_gradient(coeffs in prop::collection::vec(-3.0f64..3.0, 5), x in prop::collection::vec(complex(), 2)) {
        let terms: Vec<(Vec<u32>, C64)> = (0..5).map(|k| (vec![4 - k as u32, k as u32], c(coeffs[k], 0.0))).collect();
        let f = PolyForm::new(4, 2, terms).unwrap();
        let g: Vec<C64> = apply_power(&tensor_from_form(&f).unwrap(), &x).unwrap();
        prop_assert!(close(&f.gradient(&x), &g, 1e-9));
    }

    #[test]
    fn count_is_geometric_sum(m in 2usize..9, n in 1usize..8) {
        let sum: u128 = (0..n as u32).map(|k| ((m - 1) as u128).pow(k)).sum();
        prop_assert_eq!(expected_count(m, n).unwrap(), sum);
    }

    #[test]
    fn gaussian_field_laws(a in gaussian(), b in gaussian(), d in gaussian()) {
        prop_assert_eq!(&(&a + &b) * &d, &(&a * &d) + &(&b * &d));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
        prop_assert_eq!(&a * &a.conj(), GR::new(a.norm_sqr(), Zero::zero()));
        prop_assert_eq!(a.to_string().parse::<GR>().unwrap(), a);
    }

    #[test]
    fn dyadic_conversion_is_exact(re in -1e6f64..1e6, im in -1e6f64..1e6) {
        let z = c(re, im);
        prop_assert_eq!(GR::from_c64(z).unwrap().to_c64(), z);
    }
}
