//! Named tensors with known spectral behavior.

use crate::tensor::{tensor_from_form, PolyForm, Tensor, C64};

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// `a_{i...i} = 1`, zero elsewhere.
pub fn diagonal_unit(m: usize, n: usize) -> Tensor {
    Tensor::diagonal(m, &vec![c(1., 0.); n])
}

/// `A x^2 = (x1 + i x2) x`: every vector is an eigenvector.
pub fn fineprint() -> Tensor {
    Tensor::zeros(3, 2)
        .with(&[0, 0, 0], c(1., 0.))
        .with(&[1, 1, 0], c(1., 0.))
        .with(&[0, 0, 1], c(0., 1.))
        .with(&[1, 1, 1], c(0., 1.))
}

/// `A x^2 = (x1 x2, x1 x3, 2 x2 x3)`, whose map is a Cremona transformation.
pub fn cremona() -> Tensor {
    Tensor::zeros(3, 3)
        .with(&[0, 0, 1], c(1., 0.))
        .with(&[1, 0, 2], c(1., 0.))
        .with(&[2, 1, 2], c(2., 0.))
}

/// `A x^2 = (x1^2, x1^2 + x1 x2)`: translation on the affine line.
pub fn translation() -> Tensor {
    Tensor::zeros(3, 2)
        .with(&[0, 0, 0], c(1., 0.))
        .with(&[1, 0, 0], c(1., 0.))
        .with(&[1, 0, 1], c(1., 0.))
}

/// `z^6 + x^4 y^2 + x^2 y^4 - 3 x^2 y^2 z^2`.
pub fn motzkin_form() -> PolyForm {
    PolyForm::real(6, 3, &[(&[0, 0, 6], 1.0), (&[4, 2, 0], 1.0), (&[2, 4, 0], 1.0), (&[2, 2, 2], -3.0)])
        .expect("valid form")
}

pub fn motzkin() -> Tensor {
    tensor_from_form(&motzkin_form()).expect("degree 6")
}

/// Symmetric 2x2x2 tensor with one simple class and one isotropic double class.
pub fn symmetric_isotropic() -> Tensor {
    Tensor::zeros(3, 2)
        .with(&[0, 0, 0], c(0., -2.))
        .with(&[0, 0, 1], c(1., 0.))
        .with(&[0, 1, 0], c(1., 0.))
        .with(&[1, 0, 0], c(1., 0.))
        .with(&[1, 1, 1], c(1., 0.))
}

/// Symmetric 3x3x3 tensor of `(2 x1^3 + 3 x1 x2^2 + 3 x1 x3^2) / 3` whose
/// eigenvectors form two lines.
pub fn line_family() -> Tensor {
    let mut a = Tensor::zeros(3, 3).with(&[0, 0, 0], c(2., 0.));
    for p in [[0, 1, 1], [1, 0, 1], [1, 1, 0], [0, 2, 2], [2, 0, 2], [2, 2, 0]] {
        a = a.with(&p, c(1., 0.));
    }
    a
}

/// Even order, `n = 2`: `a_{12...2} = 1`, `a_{21...1} = -1`; no real eigenpairs.
pub fn no_real(m: usize) -> Tensor {
    let mut hi = vec![1usize; m];
    hi[0] = 0;
    let mut lo = vec![0usize; m];
    lo[0] = 1;
    Tensor::zeros(m, 2).with(&hi, c(1., 0.)).with(&lo, c(-1., 0.))
}

/// Block-diagonal copies of [`no_real`] in dimension `2 * blocks`.
pub fn no_real_blocks(m: usize, blocks: usize) -> Tensor {
    let mut a = Tensor::zeros(m, 2 * blocks);
    for b in 0..blocks {
        let mut hi = vec![2 * b + 1; m];
        hi[0] = 2 * b;
        let mut lo = vec![2 * b; m];
        lo[0] = 2 * b + 1;
        a = a.with(&hi, c(1., 0.)).with(&lo, c(-1., 0.));
    }
    a
}

/// `A x^2 = (x1^2 + x2^2, 0)`.
pub fn circle_row() -> Tensor {
    Tensor::zeros(3, 2).with(&[0, 0, 0], c(1., 0.)).with(&[0, 1, 1], c(1., 0.))
}

/// All entries equal to one.
pub fn all_ones(m: usize, n: usize) -> Tensor {
    Tensor::from_fn(m, n, |_| c(1., 0.))
}

/// A singular 2x2x2 tensor with hyperdeterminant -1.
pub fn singular_nonzero_det() -> Tensor {
    Tensor::zeros(3, 2)
        .with(&[0, 0, 0], c(-1., 0.))
        .with(&[0, 1, 1], c(-1., 0.))
        .with(&[1, 0, 0], c(1., 0.))
        .with(&[1, 0, 1], c(-1., 0.))
        .with(&[1, 1, 1], c(1., -1.))
}

/// Random tensor with standard complex Gaussian entries.
pub fn random_complex(m: usize, n: usize, rng: &mut impl rand::Rng) -> Tensor {
    Tensor::from_fn(m, n, |_| crate::polysolve::normal_c64(rng))
}

/// Random tensor with standard real Gaussian entries.
pub fn random_real(m: usize, n: usize, rng: &mut impl rand::Rng) -> Tensor {
    use rand_distr::{Distribution, StandardNormal};
    Tensor::from_fn(m, n, |_| C64::new(StandardNormal.sample(rng), 0.0))
}

/// Random symmetric tensor from a random form with Gaussian coefficients.
pub fn random_symmetric(m: usize, n: usize, real: bool, rng: &mut impl rand::Rng) -> Tensor {
    use rand_distr::{Distribution, StandardNormal};
    let mut terms = Vec::new();
    let mut e = vec![0u32; n];
    exponents(m as u32, 0, &mut e, &mut |e| {
        let z = if real {
            C64::new(StandardNormal.sample(rng), 0.0)
        } else {
            crate::polysolve::normal_c64(rng)
        };
        terms.push((e.to_vec(), z));
    });
    tensor_from_form(&PolyForm::new(m as u32, n, terms).expect("valid form")).expect("degree >= 2")
}

pub(crate) fn exponents(left: u32, pos: usize, e: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    if pos + 1 == e.len() {
        e[pos] = left;
        f(e);
        return;
    }
    for k in (0..=left).rev() {
        e[pos] = k;
        exponents(left - k, pos + 1, e, f);
    }
    e[pos] = 0;
}
