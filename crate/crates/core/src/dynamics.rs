//! The self-map `x -> A x^{m-1}` of projective space.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exact::{ExactPoly, ExactTensor};
use crate::polysolve::TrackerConfig;
use crate::spectra::{self, ZeroLocus};
use crate::tensor::{apply_power, dominant_index, norm2, EigenClass, Tensor, C64};

/// Below this norm of `A x^{m-1}` at a unit `x` the map is undefined.
pub const BASE_LOCUS_TOL: f64 = 1e-12;
/// Successive orbit points closer than this count as a fixed point.
pub const FIXED_TOL: f64 = 1e-10;
pub const SYMBOLIC_TERM_CAP: u128 = 1_000_000;

/// A point of projective space: unit 2-norm, dominant coordinate real positive.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjPoint(Vec<C64>);

impl ProjPoint {
    pub fn new(x: &[C64]) -> Result<Self> {
        let nrm = norm2(x);
        if nrm == 0.0 || !nrm.is_finite() {
            return Err(Error::ZeroVector);
        }
        let k = dominant_index(x);
        let s = x[k].conj() / (x[k].norm() * nrm);
        let mut v: Vec<C64> = x.iter().map(|&z| z * s).collect();
        v[k] = C64::new(v[k].re, 0.0);
        Ok(ProjPoint(v))
    }

    pub fn real(x: &[f64]) -> Result<Self> {
        ProjPoint::new(&x.iter().map(|&v| C64::new(v, 0.0)).collect::<Vec<_>>())
    }

    pub fn coords(&self) -> &[C64] {
        &self.0
    }

    /// Distance between the normalized representatives.
    pub fn distance(&self, o: &ProjPoint) -> f64 {
        self.0.iter().zip(&o.0).map(|(a, b)| (a - b).norm_sqr()).sum::<f64>().sqrt()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum PsiResult {
    Point(ProjPoint),
    BaseLocusHit,
}

pub fn psi(a: &Tensor, p: &ProjPoint) -> Result<PsiResult> {
    let y = apply_power(a, p.coords())?;
    if norm2(&y) <= BASE_LOCUS_TOL {
        return Ok(PsiResult::BaseLocusHit);
    }
    Ok(PsiResult::Point(ProjPoint::new(&y)?))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Orbit {
    /// Starting point first.
    pub points: Vec<ProjPoint>,
    /// `distances[k]` is the distance from `points[k]` to `points[k + 1]`.
    pub distances: Vec<f64>,
    pub hit_base_locus: bool,
    /// Set when two successive points agree; the flag records whether the
    /// point is an eigenvector with nonzero eigenvalue.
    pub fixed_point: Option<(ProjPoint, bool)>,
}

/// Forward orbit of `p0` for at most `kmax` steps.
pub fn orbit(a: &Tensor, p0: &ProjPoint, kmax: usize) -> Result<Orbit> {
    if kmax == 0 {
        return Err(Error::Invalid("kmax must be at least 1".into()));
    }
    let mut o = Orbit { points: vec![p0.clone()], distances: Vec::new(), hit_base_locus: false, fixed_point: None };
    for _ in 0..kmax {
        let cur = o.points.last().expect("nonempty").clone();
        match psi(a, &cur)? {
            PsiResult::BaseLocusHit => {
                o.hit_base_locus = true;
                break;
            }
            PsiResult::Point(q) => {
                let d = cur.distance(&q);
                o.distances.push(d);
                o.points.push(q.clone());
                if d <= FIXED_TOL {
                    o.fixed_point = Some((q.clone(), is_nonzero_eigenvector(a, &q)?));
                    break;
                }
            }
        }
    }
    Ok(o)
}

fn is_nonzero_eigenvector(a: &Tensor, p: &ProjPoint) -> Result<bool> {
    let x = p.coords();
    let y = apply_power(a, x)?;
    let lambda: C64 = x.iter().zip(&y).map(|(xi, yi)| xi.conj() * yi).sum();
    let res = x.iter().zip(&y).map(|(xi, yi)| (yi - lambda * xi).norm()).fold(0.0, f64::max);
    Ok(lambda.norm() > BASE_LOCUS_TOL && res <= 1e-8 * (1.0 + lambda.norm()))
}

/// The eigenvalue-zero classes as projective points.
pub fn base_locus(a: &Tensor, cfg: &TrackerConfig) -> Result<ZeroLocus> {
    let report = spectra::eigenclasses(a, cfg)?;
    let points = report
        .classes
        .iter()
        .filter(|c| c.is_zero_lambda())
        .map(|c| c.representative.x.clone())
        .collect();
    Ok(ZeroLocus { points, positive_dimensional: report.positive_dimensional })
}

fn components(a: &ExactTensor, vars: &[&str]) -> Vec<ExactPoly> {
    let n = a.dim();
    let m = a.order();
    let mut out = vec![ExactPoly::zero(vars); n];
    let shape = Tensor::zeros(m, n);
    for (k, c) in a.entries().iter().enumerate() {
        let idx = shape.multi_index(k);
        let mut e = vec![0u32; n];
        for &i in &idx[1..] {
            e[i] += 1;
        }
        out[idx[0]].add_term(e, c.clone());
    }
    out
}

fn var_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// The `k`-fold composition of `x -> A x^{m-1}`, expanded with exact
/// coefficients (every double entry is converted exactly).
pub fn iterate_symbolic(a: &Tensor, k: usize) -> Result<Vec<ExactPoly>> {
    iterate_symbolic_capped(a, k, SYMBOLIC_TERM_CAP)
}

pub fn iterate_symbolic_capped(a: &Tensor, k: usize, cap: u128) -> Result<Vec<ExactPoly>> {
    if k == 0 {
        return Err(Error::Invalid("iterate index must be at least 1".into()));
    }
    let (m, n) = (a.order(), a.dim());
    let needed = ((m - 1) as u128).checked_pow(k as u32).and_then(|d| d.checked_mul(n as u128)).unwrap_or(u128::MAX);
    if needed > cap {
        return Err(Error::BudgetExceeded { needed, cap });
    }
    let names = var_names(n);
    let vars: Vec<&str> = names.iter().map(String::as_str).collect();
    let base = components(&ExactTensor::from_tensor(a)?, &vars);
    let mut cur = base.clone();
    for _ in 1..k {
        cur = compose(&base, &cur, cap)?;
    }
    Ok(cur)
}

/// `outer(inner(x))`.
fn compose(outer: &[ExactPoly], inner: &[ExactPoly], cap: u128) -> Result<Vec<ExactPoly>> {
    let mut powers: HashMap<(usize, u32), ExactPoly> = HashMap::new();
    let mut out = Vec::with_capacity(outer.len());
    let mut total = 0u128;
    for p in outer {
        let mut acc = p.zero_like();
        for (e, c) in p.terms() {
            let mut t = p.constant_like(c.clone());
            for (i, &d) in e.iter().enumerate().filter(|(_, d)| **d > 0) {
                let pw = powers.entry((i, d)).or_insert_with(|| inner[i].pow(d));
                t = t.mul(pw);
            }
            acc = acc.add(&t);
        }
        total += acc.terms().len() as u128;
        if total > cap {
            return Err(Error::BudgetExceeded { needed: total, cap });
        }
        out.push(acc);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub enum NilpotencyVerdict {
    /// The `k`-th iterate is identically zero.
    Nilpotent(usize),
    /// A class with nonzero eigenvalue, a fixed point of every iterate.
    NotNilpotent(EigenClass),
    /// Neither certificate was found up to this iterate.
    Undetermined(usize),
}

/// Bounded nilpotency decision. For matrices `kmax` is raised to `n`.
pub fn nilpotency(a: &Tensor, kmax: usize, cfg: &TrackerConfig) -> Result<NilpotencyVerdict> {
    if kmax == 0 {
        return Err(Error::Invalid("kmax must be at least 1".into()));
    }
    let kmax = if a.order() == 2 { kmax.max(a.dim()) } else { kmax };
    let mut reached = 0;
    for k in 1..=kmax {
        match iterate_symbolic(a, k) {
            Ok(it) => {
                if it.iter().all(ExactPoly::is_zero) {
                    return Ok(NilpotencyVerdict::Nilpotent(k));
                }
                reached = k;
            }
            Err(Error::BudgetExceeded { .. }) => break,
            Err(e) => return Err(e),
        }
    }
    let report = spectra::eigenclasses(a, cfg)?;
    if let Some(w) = report.classes.iter().find(|c| !c.is_zero_lambda()) {
        return Ok(NilpotencyVerdict::NotNilpotent(w.clone()));
    }
    Ok(NilpotencyVerdict::Undetermined(reached.max(1)))
}

/// Whether every entry is exactly zero, used as `A^k = 0` for matrices.
pub fn is_zero_tuple(p: &[ExactPoly]) -> bool {
    p.iter().all(ExactPoly::is_zero)
}
