#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tensor_eigen::exact::{ExactTensor, GR};
use tensor_eigen::polysolve::TrackerConfig;
use tensor_eigen::C64;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn cfg() -> TrackerConfig {
    TrackerConfig::default()
}

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Entries `p/q` with `|p| <= 9`, `1 <= q <= 5`.
pub fn random_rational_222(rng: &mut impl Rng) -> ExactTensor {
    ExactTensor::from_fn(3, 2, |_| GR::ratio(rng.random_range(-9..=9), rng.random_range(1..=5)))
}

/// Largest error of a greedy nearest matching of two multisets, or `None`
/// when the sizes differ.
pub fn match_multisets(a: &[C64], b: &[C64]) -> Option<f64> {
    if a.len() != b.len() {
        return None;
    }
    let mut left: Vec<C64> = b.to_vec();
    let mut worst = 0.0f64;
    for &z in a {
        let (k, d) = left
            .iter()
            .enumerate()
            .map(|(k, w)| (k, (w - z).norm() / (1.0 + z.norm())))
            .min_by(|p, q| p.1.total_cmp(&q.1))?;
        worst = worst.max(d);
        left.swap_remove(k);
    }
    Some(worst)
}

/// Whether every value of `a` is within `tol` of one of `b` and vice versa.
pub fn same_set(a: &[C64], b: &[C64], tol: f64) -> bool {
    let near = |z: &C64, s: &[C64]| s.iter().any(|w| (w - z).norm() <= tol);
    a.iter().all(|z| near(z, b)) && b.iter().all(|z| near(z, a))
}

/// Characteristic polynomial of a square matrix by the Faddeev-LeVerrier
/// recursion, lowest degree first and monic.
pub fn faddeev_leverrier(n: usize, rows: &[C64]) -> Vec<C64> {
    let mul = |x: &[C64], y: &[C64]| {
        let mut out = vec![C64::new(0.0, 0.0); n * n];
        for i in 0..n {
            for k in 0..n {
                for j in 0..n {
                    out[i * n + j] += x[i * n + k] * y[k * n + j];
                }
            }
        }
        out
    };
    let mut coeffs = vec![C64::new(0.0, 0.0); n + 1];
    coeffs[n] = C64::new(1.0, 0.0);
    let mut m = vec![C64::new(0.0, 0.0); n * n];
    for k in 1..=n {
        let mut next = mul(rows, &m);
        for i in 0..n {
            next[i * n + i] += coeffs[n - k + 1];
        }
        m = next;
        let am = mul(rows, &m);
        let tr: C64 = (0..n).map(|i| am[i * n + i]).sum();
        coeffs[n - k] = -tr / k as f64;
    }
    coeffs
}

/// Eigenvalues of the companion matrix of a monic polynomial.
pub fn companion_roots(coeffs: &[C64]) -> Vec<C64> {
    let deg = coeffs.len() - 1;
    let mut comp = nalgebra::DMatrix::<C64>::zeros(deg, deg);
    for i in 1..deg {
        comp[(i, i - 1)] = C64::new(1.0, 0.0);
    }
    for i in 0..deg {
        comp[(i, deg - 1)] = -coeffs[i];
    }
    comp.schur().eigenvalues().expect("complex schur").iter().copied().collect()
}
