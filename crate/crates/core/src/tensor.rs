//! Dense tensors, homogeneous forms and eigenpair canonicalization.
//!
//! A tensor of order `m` and dimension `n` stores `n^m` complex entries in
//! lexicographic index order with the first index varying slowest. The
//! contraction `A x^{m-1}` sums the last `m - 1` indices against `x`.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

/// Absolute tolerance used when checking entry symmetry.
pub const SYMMETRY_TOL: f64 = 1e-12;
/// `|x.x|` threshold (with `||x||_2 = 1`) below which an eigenvector is isotropic.
pub const ISOTROPY_TOL: f64 = 1e-8;

// canonicalization guards
const TIE_REL: f64 = 1e-8;
const NONZERO_REL: f64 = 1e-8;
const ANGLE_TOL: f64 = 1e-7;

#[derive(Clone, Debug, PartialEq)]
pub struct Tensor {
    order: usize,
    dim: usize,
    entries: Vec<C64>,
}

impl Tensor {
    pub fn new(order: usize, dim: usize, entries: Vec<C64>) -> Result<Self> {
        if order < 2 {
            return Err(Error::InvalidTensor(format!("order must be >= 2, got {order}")));
        }
        if dim < 1 {
            return Err(Error::InvalidTensor("dimension must be >= 1".into()));
        }
        let expected = dim
            .checked_pow(order as u32)
            .ok_or_else(|| Error::InvalidTensor("n^m overflows".into()))?;
        if entries.len() != expected {
            return Err(Error::DimensionMismatch { expected, got: entries.len() });
        }
        Ok(Tensor { order, dim, entries })
    }

    pub fn zeros(order: usize, dim: usize) -> Self {
        Tensor::new(order, dim, vec![C64::new(0.0, 0.0); dim.pow(order as u32)])
            .expect("valid zero tensor")
    }

    /// Builds a tensor by evaluating `f` at every multi-index.
    pub fn from_fn(order: usize, dim: usize, mut f: impl FnMut(&[usize]) -> C64) -> Self {
        let mut t = Tensor::zeros(order, dim);
        let mut idx = vec![0usize; order];
        for flat in 0..t.entries.len() {
            t.unflatten_into(flat, &mut idx);
            t.entries[flat] = f(&idx);
        }
        t
    }

    /// Diagonal tensor with `a_{i...i} = diag[i]`.
    pub fn diagonal(order: usize, diag: &[C64]) -> Self {
        Tensor::from_fn(order, diag.len(), |idx| {
            if idx.iter().all(|&i| i == idx[0]) {
                diag[idx[0]]
            } else {
                C64::new(0.0, 0.0)
            }
        })
    }

    /// Order-2 tensor from a row-major square matrix.
    pub fn from_matrix(dim: usize, rows: &[C64]) -> Result<Self> {
        Tensor::new(2, dim, rows.to_vec())
    }

    /// Returns a copy with one entry replaced (zero-based indices).
    pub fn with(mut self, idx: &[usize], value: C64) -> Self {
        let f = self.flat_index(idx);
        self.entries[f] = value;
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[C64] {
        &self.entries
    }

    pub fn get(&self, idx: &[usize]) -> C64 {
        self.entries[self.flat_index(idx)]
    }

    pub fn flat_index(&self, idx: &[usize]) -> usize {
        assert_eq!(idx.len(), self.order, "index arity");
        idx.iter().fold(0, |acc, &i| {
            assert!(i < self.dim, "index out of range");
            acc * self.dim + i
        })
    }

    fn unflatten_into(&self, mut flat: usize, idx: &mut [usize]) {
        for slot in idx.iter_mut().rev() {
            *slot = flat % self.dim;
            flat /= self.dim;
        }
    }

    pub fn multi_index(&self, flat: usize) -> Vec<usize> {
        let mut idx = vec![0; self.order];
        self.unflatten_into(flat, &mut idx);
        idx
    }

    pub fn scale(&self, s: C64) -> Tensor {
        Tensor { order: self.order, dim: self.dim, entries: self.entries.iter().map(|&a| a * s).collect() }
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|a| a.norm()).fold(0.0, f64::max)
    }

    pub fn is_real(&self) -> bool {
        self.entries.iter().all(|a| a.im == 0.0)
    }

    /// True when every entry equals the entry at its sorted index.
    ///
    /// Comparing each entry to its sorted-index representative is the same as
    /// checking invariance under all index permutations, and costs one pass.
    pub fn is_symmetric(&self) -> bool {
        let mut idx = vec![0usize; self.order];
        for flat in 0..self.entries.len() {
            self.unflatten_into(flat, &mut idx);
            idx.sort_unstable();
            let rep = self.flat_index(&idx);
            if (self.entries[flat] - self.entries[rep]).norm() > SYMMETRY_TOL {
                return false;
            }
        }
        true
    }

    /// Sparse expansion of each coordinate polynomial `(A x^{m-1})_j` as
    /// `(exponent vector over x, coefficient)` pairs with zero terms removed.
    pub fn contraction_terms(&self) -> Vec<Vec<(Vec<u32>, C64)>> {
        let n = self.dim;
        let block = n.pow(self.order as u32 - 1);
        let mut idx = vec![0usize; self.order];
        (0..n)
            .map(|j| {
                let mut acc: BTreeMap<Vec<u32>, C64> = BTreeMap::new();
                for k in 0..block {
                    let flat = j * block + k;
                    let a = self.entries[flat];
                    if a == C64::new(0.0, 0.0) {
                        continue;
                    }
                    self.unflatten_into(flat, &mut idx);
                    let mut e = vec![0u32; n];
                    for &i in &idx[1..] {
                        e[i] += 1;
                    }
                    *acc.entry(e).or_insert(C64::new(0.0, 0.0)) += a;
                }
                acc.into_iter().filter(|(_, c)| *c != C64::new(0.0, 0.0)).collect()
            })
            .collect()
    }
}

/// The vector `A x^{m-1}`.
pub fn apply_power(a: &Tensor, x: &[C64]) -> Result<Vec<C64>> {
    if x.len() != a.dim {
        return Err(Error::DimensionMismatch { expected: a.dim, got: x.len() });
    }
    // contract the trailing index repeatedly
    let n = a.dim;
    let mut cur = a.entries.clone();
    for _ in 1..a.order {
        let next: Vec<C64> = cur
            .chunks_exact(n)
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect();
        cur = next;
    }
    Ok(cur)
}

/// `A x^m = x . A x^{m-1}` (bilinear dot, no conjugation).
pub fn scalar_form(a: &Tensor, x: &[C64]) -> Result<C64> {
    let y = apply_power(a, x)?;
    Ok(dot(x, &y))
}

pub fn dot(x: &[C64], y: &[C64]) -> C64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

pub fn norm_inf(x: &[C64]) -> f64 {
    x.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn norm2(x: &[C64]) -> f64 {
    x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn factorial(k: u32) -> f64 {
    (1..=k).map(f64::from).product()
}

/// Multinomial `m! / alpha!` for an exponent vector summing to `m`.
pub fn multinomial(alpha: &[u32]) -> f64 {
    let m: u32 = alpha.iter().sum();
    factorial(m) / alpha.iter().map(|&a| factorial(a)).product::<f64>()
}

/// Homogeneous polynomial of fixed degree with complex coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyForm {
    degree: u32,
    nvars: usize,
    terms: BTreeMap<Vec<u32>, C64>,
}

impl PolyForm {
    pub fn new(degree: u32, nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, C64)>) -> Result<Self> {
        if nvars == 0 {
            return Err(Error::InvalidForm("form needs at least one variable".into()));
        }
        let mut map: BTreeMap<Vec<u32>, C64> = BTreeMap::new();
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::InvalidForm(format!("exponent {e:?} has wrong arity")));
            }
            if e.iter().sum::<u32>() != degree {
                return Err(Error::InvalidForm(format!("exponent {e:?} does not sum to {degree}")));
            }
            *map.entry(e).or_insert(C64::new(0.0, 0.0)) += c;
        }
        map.retain(|_, c| *c != C64::new(0.0, 0.0));
        Ok(PolyForm { degree, nvars, terms: map })
    }

    /// Convenience constructor for real coefficients.
    pub fn real(degree: u32, nvars: usize, terms: &[(&[u32], f64)]) -> Result<Self> {
        PolyForm::new(degree, nvars, terms.iter().map(|(e, c)| (e.to_vec(), C64::new(*c, 0.0))))
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, C64> {
        &self.terms
    }

    pub fn coeff(&self, e: &[u32]) -> C64 {
        self.terms.get(e).copied().unwrap_or(C64::new(0.0, 0.0))
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(|c| c.im == 0.0)
    }

    pub fn eval(&self, x: &[C64]) -> C64 {
        self.terms.iter().map(|(e, &c)| c * monomial(x, e)).sum()
    }

    pub fn gradient(&self, x: &[C64]) -> Vec<C64> {
        let mut g = vec![C64::new(0.0, 0.0); self.nvars];
        for (e, &c) in &self.terms {
            for (i, gi) in g.iter_mut().enumerate() {
                if e[i] == 0 {
                    continue;
                }
                let mut d = e.clone();
                d[i] -= 1;
                *gi += c * e[i] as f64 * monomial(x, &d);
            }
        }
        g
    }
}

pub(crate) fn monomial(x: &[C64], e: &[u32]) -> C64 {
    x.iter().zip(e).fold(C64::new(1.0, 0.0), |acc, (xi, &k)| acc * xi.powu(k))
}

fn exponent_of(idx: &[usize], n: usize) -> Vec<u32> {
    let mut e = vec![0u32; n];
    for &i in idx {
        e[i] += 1;
    }
    e
}

/// The symmetric tensor whose contraction is the gradient of `f`.
pub fn tensor_from_form(f: &PolyForm) -> Result<Tensor> {
    let m = f.degree as usize;
    if m < 2 {
        return Err(Error::InvalidForm("degree must be >= 2".into()));
    }
    let n = f.nvars;
    let mf = factorial(f.degree);
    Ok(Tensor::from_fn(m, n, |idx| {
        let alpha = exponent_of(idx, n);
        let c = f.coeff(&alpha);
        if c == C64::new(0.0, 0.0) {
            return c;
        }
        let alpha_fact: f64 = alpha.iter().map(|&a| factorial(a)).product();
        c * (m as f64 * alpha_fact / mf)
    }))
}

/// The form `f = A x^m / m` of a symmetric tensor.
pub fn form_from_tensor(a: &Tensor) -> Result<PolyForm> {
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let m = a.order;
    let n = a.dim;
    let mut terms = Vec::new();
    let mut idx = vec![0usize; m];
    sorted_tuples(n, m, 0, 0, &mut idx, &mut |idx| {
        let v = a.get(idx);
        if v != C64::new(0.0, 0.0) {
            let alpha = exponent_of(idx, n);
            let w = multinomial(&alpha) / m as f64;
            terms.push((alpha, v * w));
        }
    });
    PolyForm::new(m as u32, n, terms)
}

fn sorted_tuples(n: usize, m: usize, pos: usize, lo: usize, idx: &mut [usize], f: &mut impl FnMut(&[usize])) {
    if pos == m {
        f(idx);
        return;
    }
    for i in lo..n {
        idx[pos] = i;
        sorted_tuples(n, m, pos + 1, i, idx, f);
    }
}

/// One eigenpair `A x^{m-1} = lambda x`.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenPair {
    pub x: Vec<C64>,
    pub lambda: C64,
    pub residual: f64,
}

impl EigenPair {
    pub fn new(lambda: C64, x: Vec<C64>) -> Self {
        EigenPair { x, lambda, residual: 0.0 }
    }

    /// The equivalent pair `(t^{m-2} lambda, t x)`.
    pub fn rescaled(&self, t: C64, m: usize) -> EigenPair {
        EigenPair {
            x: self.x.iter().map(|&v| v * t).collect(),
            lambda: self.lambda * t.powi(m as i32 - 2),
            residual: self.residual,
        }
    }

    /// Max-norm of `A x^{m-1} - lambda x` after scaling to `||x||_inf = 1`.
    pub fn residual_for(&self, a: &Tensor) -> f64 {
        let s = norm_inf(&self.x);
        if s == 0.0 {
            return f64::INFINITY;
        }
        let p = self.rescaled(C64::new(1.0 / s, 0.0), a.order);
        let y = apply_power(a, &p.x).expect("dimension checked by caller");
        y.iter().zip(&p.x).map(|(yi, xi)| (yi - p.lambda * xi).norm()).fold(0.0, f64::max)
    }
}

/// Index of the largest-modulus coordinate, lowest index on (near) ties.
pub(crate) fn dominant_index(x: &[C64]) -> usize {
    let mx = norm_inf(x);
    x.iter().position(|z| z.norm() >= mx * (1.0 - TIE_REL)).unwrap_or(0)
}

/// Deterministic representative of the equivalence class of `p`.
///
/// For `m >= 3` and `lambda != 0` the class is scaled to `lambda = 1`; the
/// remaining `(m-2)`-th roots of unity are fixed by requiring the first
/// non-negligible coordinate to have argument in `[0, 2 pi / (m-2))`.
/// Otherwise the dominant coordinate is scaled to one.
pub fn canonicalize(p: &EigenPair, m: usize) -> Result<EigenPair> {
    let mx = norm_inf(&p.x);
    if mx == 0.0 || !mx.is_finite() {
        return Err(Error::ZeroVector);
    }
    let zero = C64::new(0.0, 0.0);
    if m == 2 || p.lambda == zero {
        let k = dominant_index(&p.x);
        let s = C64::new(1.0, 0.0) / p.x[k];
        let mut x: Vec<C64> = p.x.iter().map(|&v| v * s).collect();
        x[k] = C64::new(1.0, 0.0);
        return Ok(EigenPair { x, lambda: p.lambda, residual: p.residual });
    }
    let k = m - 2;
    let t0 = (C64::new(1.0, 0.0) / p.lambda).powf(1.0 / k as f64);
    let y: Vec<C64> = p.x.iter().map(|&v| v * t0).collect();
    let ymax = norm_inf(&y);
    let first = y.iter().position(|z| z.norm() > NONZERO_REL * ymax).unwrap_or(0);
    let w = 2.0 * PI / k as f64;
    let phi = y[first].arg();
    let j = ((-ANGLE_TOL - phi) / w).ceil();
    let rot = C64::from_polar(1.0, j * w);
    Ok(EigenPair {
        x: y.iter().map(|&v| v * rot).collect(),
        lambda: C64::new(1.0, 0.0),
        residual: p.residual,
    })
}

/// Whether two pairs lie in the same class (canonical forms within `tol`).
pub fn equivalent(p: &EigenPair, q: &EigenPair, m: usize, tol: f64) -> bool {
    match (canonicalize(p, m), canonicalize(q, m)) {
        (Ok(a), Ok(b)) => canonical_distance(&a, &b) <= tol,
        _ => false,
    }
}

/// Max coordinate distance between canonical forms (including lambda).
pub fn canonical_distance(a: &EigenPair, b: &EigenPair) -> f64 {
    if a.x.len() != b.x.len() {
        return f64::INFINITY;
    }
    a.x.iter()
        .zip(&b.x)
        .map(|(u, v)| (u - v).norm())
        .fold((a.lambda - b.lambda).norm(), f64::max)
}

/// An equivalence class of eigenpairs with its multiplicity.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenClass {
    pub representative: EigenPair,
    pub multiplicity: usize,
    pub isotropic: bool,
    pub normalized_lambdas: Vec<C64>,
}

impl EigenClass {
    /// Builds a class from any member; the representative is canonicalized.
    pub fn from_pair(p: &EigenPair, m: usize, multiplicity: usize) -> Result<Self> {
        let rep = canonicalize(p, m)?;
        let nrm = norm2(&rep.x);
        let xx = dot(&rep.x, &rep.x);
        let isotropic = (xx / (nrm * nrm)).norm() <= ISOTROPY_TOL;
        let normalized_lambdas = if isotropic { Vec::new() } else { normalized_values(&rep, xx, m) };
        Ok(EigenClass { representative: rep, multiplicity, isotropic, normalized_lambdas })
    }

    pub fn lambda(&self) -> C64 {
        self.representative.lambda
    }

    pub fn is_zero_lambda(&self) -> bool {
        self.representative.lambda == C64::new(0.0, 0.0)
    }
}

fn normalized_values(rep: &EigenPair, xx: C64, m: usize) -> Vec<C64> {
    let inv = C64::new(1.0, 0.0) / xx;
    if m == 2 {
        return vec![rep.lambda];
    }
    if m.is_multiple_of(2) {
        vec![rep.lambda * inv.powi((m as i32 - 2) / 2)]
    } else {
        let v = rep.lambda * inv.sqrt().powi(m as i32 - 2);
        vec![v, -v]
    }
}

/// Rescales a non-isotropic pair so that `x . x = 1` (principal root).
pub fn normalize_pair(p: &EigenPair, m: usize) -> Option<EigenPair> {
    let xx = dot(&p.x, &p.x);
    let nrm = norm2(&p.x);
    if nrm == 0.0 || (xx / (nrm * nrm)).norm() <= ISOTROPY_TOL {
        return None;
    }
    let t = (C64::new(1.0, 0.0) / xx).sqrt();
    Some(p.rescaled(t, m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn close(a: &[C64], b: &[C64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(u, v)| (u - v).norm() <= tol)
    }

    #[test]
    fn identity_matrix_contraction() {
        let i2 = Tensor::from_matrix(2, &[c(1., 0.), c(0., 0.), c(0., 0.), c(1., 0.)]).unwrap();
        let y = apply_power(&i2, &[c(3., 0.), c(4., 0.)]).unwrap();
        assert!(close(&y, &[c(3., 0.), c(4., 0.)], 0.0));
        assert_eq!(scalar_form(&i2, &[c(1., 0.), c(2., 0.)]).unwrap(), c(5., 0.));
    }

    #[test]
    fn fineprint_contraction() {
        let a = Tensor::zeros(3, 2)
            .with(&[0, 0, 0], c(1., 0.))
            .with(&[1, 1, 0], c(1., 0.))
            .with(&[0, 0, 1], c(0., 1.))
            .with(&[1, 1, 1], c(0., 1.));
        let y = apply_power(&a, &[c(1., 0.), c(0., 0.)]).unwrap();
        assert!(close(&y, &[c(1., 0.), c(0., 0.)], 0.0));
    }

    #[test]
    fn diagonal_contraction_and_form() {
        let a = Tensor::diagonal(3, &[c(1., 0.), c(1., 0.)]);
        let y = apply_power(&a, &[c(1., 0.), c(1., 0.)]).unwrap();
        assert!(close(&y, &[c(1., 0.), c(1., 0.)], 0.0));
        let b = Tensor::diagonal(3, &[c(2., 0.), c(3., 0.)]);
        assert_eq!(scalar_form(&b, &[c(1., 0.), c(1., 0.)]).unwrap(), c(5., 0.));
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let a = Tensor::zeros(3, 2);
        assert!(matches!(apply_power(&a, &[c(1., 0.)]), Err(Error::DimensionMismatch { .. })));
        assert!(Tensor::new(3, 2, vec![c(0., 0.); 7]).is_err());
        assert!(Tensor::new(1, 2, vec![c(0., 0.); 2]).is_err());
    }

    #[test]
    fn cube_form_to_tensor() {
        let f = PolyForm::real(3, 2, &[(&[3, 0], 1.0)]).unwrap();
        let a = tensor_from_form(&f).unwrap();
        assert_eq!(a.get(&[0, 0, 0]), c(3., 0.));
        assert_eq!(a.entries().iter().filter(|z| z.norm() > 0.0).count(), 1);
        assert_eq!(form_from_tensor(&a).unwrap(), f);
    }

    #[test]
    fn product_form_entries_are_half() {
        let f = PolyForm::real(3, 3, &[(&[1, 1, 1], 1.0)]).unwrap();
        let a = tensor_from_form(&f).unwrap();
        for p in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            assert!((a.get(&p) - c(0.5, 0.)).norm() < 1e-15);
        }
        assert!(a.is_symmetric());
    }

    #[test]
    fn identity_matrix_form() {
        let i2 = Tensor::from_matrix(2, &[c(1., 0.), c(0., 0.), c(0., 0.), c(1., 0.)]).unwrap();
        let f = form_from_tensor(&i2).unwrap();
        assert_eq!(f.coeff(&[2, 0]), c(0.5, 0.));
        assert_eq!(f.coeff(&[0, 2]), c(0.5, 0.));
        assert_eq!(f.terms().len(), 2);
    }

    #[test]
    fn non_symmetric_form_rejected() {
        let a = Tensor::zeros(3, 2).with(&[0, 0, 1], c(1., 0.));
        assert_eq!(form_from_tensor(&a), Err(Error::NotSymmetric));
    }

    #[test]
    fn bad_form_exponents_rejected() {
        assert!(PolyForm::real(3, 2, &[(&[2, 0], 1.0)]).is_err());
        assert!(PolyForm::real(3, 2, &[(&[3, 0, 0], 1.0)]).is_err());
    }

    #[test]
    fn canonicalize_examples() {
        let p = canonicalize(&EigenPair::new(c(4., 0.), vec![c(2., 0.), c(0., 0.)]), 3).unwrap();
        assert!((p.lambda - c(1., 0.)).norm() < 1e-15);
        assert!(close(&p.x, &[c(0.5, 0.), c(0., 0.)], 1e-15));

        let p = canonicalize(&EigenPair::new(c(-1., 0.), vec![c(0., 0.), c(1., 0.)]), 4).unwrap();
        assert!((p.lambda - c(1., 0.)).norm() < 1e-15);
        assert!(close(&p.x, &[c(0., 0.), c(0., 1.)], 1e-15));

        let p = canonicalize(&EigenPair::new(c(0., 0.), vec![c(0., 0.), c(0., 5.)]), 3).unwrap();
        assert_eq!(p.lambda, c(0., 0.));
        assert!(close(&p.x, &[c(0., 0.), c(1., 0.)], 1e-15));

        assert_eq!(canonicalize(&EigenPair::new(c(1., 0.), vec![c(0., 0.); 2]), 3), Err(Error::ZeroVector));
    }

    #[test]
    fn real_vectors_stay_real_near_window_edge() {
        // sign noise around arg = 0 must not flip the representative
        let a = canonicalize(&EigenPair::new(c(1., 0.), vec![c(1., -1e-13), c(1., 0.)]), 4).unwrap();
        let b = canonicalize(&EigenPair::new(c(1., 0.), vec![c(-1., -1e-13), c(-1., 0.)]), 4).unwrap();
        assert!(canonical_distance(&a, &b) < 1e-12);
        assert!(a.x[0].re > 0.0);
    }

    #[test]
    fn equivalence_examples() {
        let p = EigenPair::new(c(1., 0.), vec![c(1., 0.), c(1., 0.)]);
        let q = EigenPair::new(c(2., 0.), vec![c(2., 0.), c(2., 0.)]);
        assert!(equivalent(&p, &q, 3, 1e-12));
        let p = EigenPair::new(c(1., 0.), vec![c(1., 0.), c(0., 0.)]);
        let q = EigenPair::new(c(1., 0.), vec![c(-1., 0.), c(0., 0.)]);
        assert!(equivalent(&p, &q, 4, 1e-12));
        let q = EigenPair::new(c(1., 0.), vec![c(0., 0.), c(1., 0.)]);
        assert!(!equivalent(&p, &q, 3, 1e-12));
    }

    #[test]
    fn class_normalized_values() {
        let cls = EigenClass::from_pair(&EigenPair::new(c(1., 0.), vec![c(1., 0.), c(1., 0.)]), 3, 1).unwrap();
        assert!(!cls.isotropic);
        let h = 1.0 / 2f64.sqrt();
        assert_eq!(cls.normalized_lambdas.len(), 2);
        assert!((cls.normalized_lambdas[0] - c(h, 0.)).norm() < 1e-15);
        assert!((cls.normalized_lambdas[1] + c(h, 0.)).norm() < 1e-15);

        let iso = EigenClass::from_pair(&EigenPair::new(c(0., 0.), vec![c(1., 0.), c(0., 1.)]), 3, 2).unwrap();
        assert!(iso.isotropic);
        assert!(iso.normalized_lambdas.is_empty());

        let even = EigenClass::from_pair(&EigenPair::new(c(3., 0.), vec![c(1., 0.), c(1., 0.)]), 4, 1).unwrap();
        assert_eq!(even.normalized_lambdas.len(), 1);
        assert!((even.normalized_lambdas[0] - c(1.5, 0.)).norm() < 1e-14);
    }
}
