//! Spectral pipeline on top of the homotopy solver.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::catalog::exponents;
use crate::error::{Error, Result};
use crate::linalg::{self, CMat};
use crate::poly::{PolySystem, Term};
use crate::polysolve::{self, max_norm, track_with, Diagnostics, PathStatus, TrackerConfig};
use crate::tensor::{
    canonicalize, dot, norm2, norm_inf, normalize_pair, tensor_from_form, EigenClass, EigenPair, PolyForm, Tensor,
    C64,
};

/// Distinct normalized values closer than this (relative) are merged.
pub const VALUE_TOL: f64 = 1e-6;
/// A fixed-eigenvalue solution hits the unit quadric when `|x.x - 1|` is below this.
pub const QUADRIC_TOL: f64 = 1e-6;

/// Number of eigenclasses of a generic order-`m`, dimension-`n` tensor,
/// counted with multiplicity.
pub fn expected_count(m: usize, n: usize) -> Result<u128> {
    if m < 2 || n < 1 {
        return Err(Error::Invalid(format!("expected m >= 2 and n >= 1, got m = {m}, n = {n}")));
    }
    if m == 2 {
        return Ok(n as u128);
    }
    let p = ((m - 1) as u128)
        .checked_pow(n as u32)
        .ok_or_else(|| Error::Invalid(format!("count overflows for m = {m}, n = {n}")))?;
    Ok((p - 1) / (m as u128 - 2))
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectralReport {
    pub m: usize,
    pub n: usize,
    pub classes: Vec<EigenClass>,
    pub expected_count: u128,
    pub total_multiplicity: usize,
    pub positive_dimensional: bool,
    pub normalized_values: Vec<C64>,
    /// Each distinct normalized value with the summed multiplicity of the
    /// classes contributing it.
    pub value_multiplicities: Vec<(C64, usize)>,
    pub isotropic_count: usize,
    pub failed_paths: usize,
    pub diagnostics: Diagnostics,
}

impl SpectralReport {
    /// Clean run with a finite spectrum.
    pub fn is_complete(&self) -> bool {
        !self.positive_dimensional && self.failed_paths == 0
    }
}

fn value_key(z: &C64) -> (i64, i64) {
    ((z.re * 1e8).round() as i64, (z.im * 1e8).round() as i64)
}

fn merge_values(classes: &[EigenClass]) -> Vec<(C64, usize)> {
    let mut out: Vec<(C64, usize)> = Vec::new();
    for c in classes {
        for &v in &c.normalized_lambdas {
            match out.iter_mut().find(|(w, _)| (w - v).norm() <= VALUE_TOL * (1.0 + v.norm())) {
                Some(entry) => entry.1 += c.multiplicity,
                None => out.push((v, c.multiplicity)),
            }
        }
    }
    for (v, _) in out.iter_mut() {
        if v.norm() <= 1e-12 {
            *v = C64::new(0.0, 0.0);
        }
    }
    out.sort_by_key(|(v, _)| value_key(v));
    out
}

/// Solves the eigenproblem of `a` and summarizes the classes.
pub fn eigenclasses(a: &Tensor, cfg: &TrackerConfig) -> Result<SpectralReport> {
    cfg.validate()?;
    let (m, n) = (a.order(), a.dim());
    if m == 2 && n > 8 {
        return Err(Error::Invalid("the matrix case is limited to n <= 8".into()));
    }
    let g = polysolve::solve_eigen(a, cfg);
    let value_multiplicities = merge_values(&g.classes);
    Ok(SpectralReport {
        m,
        n,
        expected_count: expected_count(m, n)?,
        total_multiplicity: g.classes.iter().map(|c| c.multiplicity).sum(),
        positive_dimensional: g.diagnostics.positive_dimensional,
        normalized_values: value_multiplicities.iter().map(|(v, _)| *v).collect(),
        value_multiplicities,
        isotropic_count: g.classes.iter().filter(|c| c.isotropic).count(),
        failed_paths: g.diagnostics.failed_paths,
        diagnostics: g.diagnostics,
        classes: g.classes,
    })
}

/// Every normalized eigenpair `(lambda, x)` with `x . x = 1` carried by the
/// report; for odd `m` both signs `(lambda, x)` and `(-lambda, -x)`.
pub fn normalized_pairs(report: &SpectralReport) -> Vec<EigenPair> {
    let mut out = Vec::new();
    for c in &report.classes {
        let Some(p) = normalize_pair(&c.representative, report.m) else { continue };
        if report.m % 2 == 1 {
            out.push(p.rescaled(C64::new(-1.0, 0.0), report.m));
        }
        out.push(p);
    }
    out
}

/// Closed-form classes of the diagonal tensor with entries `a`: `lambda = 1`
/// and `x_i = a_i^{-1/(m-2)} zeta^{s_i}` or `0`, one class per orbit of
/// the strings `s` under a common shift.
pub fn diagonal_classes(a: &[C64], m: usize) -> Result<Vec<EigenClass>> {
    if m < 3 {
        return Err(Error::Invalid("diagonal closed form needs m >= 3".into()));
    }
    if a.is_empty() || a.iter().any(|z| z.norm() == 0.0) {
        return Err(Error::Invalid("diagonal entries must be nonzero".into()));
    }
    let k = m - 2;
    let n = a.len();
    let zeta = C64::from_polar(1.0, 2.0 * std::f64::consts::PI / k as f64);
    let roots: Vec<C64> = a.iter().map(|&ai| (C64::new(1.0, 0.0) / ai).powf(1.0 / k as f64)).collect();
    let mut classes = Vec::new();
    // the first nonzero coordinate carries shift 0, the rest range over k roots or zero
    for first in 0..n {
        let tail = n - first - 1;
        let total = (k + 1).pow(tail as u32);
        for code in 0..total {
            let mut x = vec![C64::new(0.0, 0.0); n];
            x[first] = roots[first];
            let mut c = code;
            for i in first + 1..n {
                let s = c % (k + 1);
                c /= k + 1;
                if s < k {
                    x[i] = roots[i] * zeta.powu(s as u32);
                }
            }
            classes.push(EigenClass::from_pair(&EigenPair::new(C64::new(1.0, 0.0), x), m, 1)?);
        }
    }
    polysolve::sort_classes(&mut classes);
    Ok(classes)
}

/// Classes that admit a real representative, returned with that real
/// representative scaled to `||x||_inf = 1`.
pub fn real_classes(report: &SpectralReport, tol: f64) -> Vec<EigenClass> {
    let m = report.m;
    let mut out = Vec::new();
    for c in &report.classes {
        if let Some(p) = real_representative(&c.representative, m, tol) {
            out.push(EigenClass { representative: p, ..c.clone() });
        }
    }
    out
}

fn real_representative(p: &EigenPair, m: usize, tol: f64) -> Option<EigenPair> {
    let k = crate::tensor::dominant_index(&p.x);
    let xk = p.x[k];
    let t = xk.conj() / (xk.norm() * xk.norm());
    let q = p.rescaled(t, m);
    let im = q.x.iter().map(|z| z.im * z.im).sum::<f64>().sqrt();
    if im > tol * norm2(&q.x) || q.lambda.im.abs() > tol * (1.0 + q.lambda.norm()) {
        return None;
    }
    let x = q.x.iter().map(|z| C64::new(z.re, 0.0)).collect();
    Some(EigenPair { x, lambda: C64::new(q.lambda.re, 0.0), residual: q.residual })
}

/// Normalized eigenvalue of a real pair, `lambda / (x . x)^{(m-2)/2}`.
pub fn real_normalized_value(p: &EigenPair, m: usize) -> f64 {
    let xx: f64 = p.x.iter().map(|z| z.re * z.re).sum();
    p.lambda.re / xx.powf((m as f64 - 2.0) / 2.0)
}

/// PSD verdict for a real form of even degree: the smallest real
/// normalized eigenvalue is `m` times the minimum of `f` on the unit sphere.
///
/// A positive-dimensional or incomplete spectrum is resolved on `f + eps g`
/// for a random real form `g`, whose sphere minimum moves by at most
/// `eps sum |g_a|`; `eps` grows until the perturbed run is clean.
pub fn is_positive_semidefinite(f: &PolyForm, cfg: &TrackerConfig, tol: f64) -> Result<bool> {
    let m = f.degree() as usize;
    if m % 2 == 1 || m < 2 {
        return Err(Error::Invalid("PSD test needs an even degree".into()));
    }
    if !f.is_real() {
        return Err(Error::Invalid("PSD test needs real coefficients".into()));
    }
    let report = eigenclasses(&tensor_from_form(f)?, cfg)?;
    if !report.positive_dimensional && report.failed_paths == 0 {
        if let Some(v) = min_real_value(&report, tol) {
            return Ok(v >= -tol);
        }
    }
    let scale = f.terms().values().map(|c| c.norm()).fold(0.0, f64::max).max(1.0);
    let g = random_real_form(m as u32, f.nvars(), &mut ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x5053_4400));
    let bound: f64 = g.terms().values().map(|c| c.norm()).sum();
    for (k, rel) in [1e-4, 1e-3, 1e-2].into_iter().enumerate() {
        let eps = rel * scale;
        let mut t = f.terms().clone();
        for (e, c) in g.terms() {
            *t.entry(e.clone()).or_insert(C64::new(0.0, 0.0)) += c * eps;
        }
        let fe = PolyForm::new(m as u32, f.nvars(), t)?;
        let report = eigenclasses(&tensor_from_form(&fe)?, &cfg.reseeded(3 + k as u64))?;
        if report.positive_dimensional || report.failed_paths > 0 {
            continue;
        }
        if let Some(v) = min_real_value(&report, tol) {
            return Ok(v >= -(tol + m as f64 * eps * bound));
        }
    }
    Err(Error::Inconclusive("no clean spectrum for the form or its perturbations".into()))
}

fn min_real_value(report: &SpectralReport, tol: f64) -> Option<f64> {
    real_classes(report, tol.max(1e-8).sqrt())
        .iter()
        .map(|c| real_normalized_value(&c.representative, report.m))
        .min_by(f64::total_cmp)
}

fn random_real_form(m: u32, n: usize, rng: &mut impl Rng) -> PolyForm {
    use rand_distr::{Distribution, StandardNormal};
    let mut terms = Vec::new();
    exponents(m, 0, &mut vec![0; n], &mut |e| {
        let v: f64 = StandardNormal.sample(rng);
        terms.push((e.to_vec(), C64::new(v, 0.0)));
    });
    PolyForm::new(m, n, terms).expect("valid form")
}

/// Monic characteristic polynomial from the numeric spectrum, in `lambda`
/// for even `m` and in `mu = lambda^2` for odd `m`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CharPolyNumeric {
    pub in_lambda_squared: bool,
    /// Lowest degree first; the last entry is one.
    pub coefficients: Vec<C64>,
    pub degree: usize,
}

impl CharPolyNumeric {
    pub fn roots(&self) -> Vec<C64> {
        linalg::poly_roots(&self.coefficients)
    }

    pub fn eval(&self, z: C64) -> C64 {
        self.coefficients.iter().rev().fold(C64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum CharPolyOutcome {
    Polynomial(CharPolyNumeric),
    Indeterminate(String),
}

/// Interpolates the characteristic polynomial through the normalized
/// eigenvalues with their class multiplicities.
///
/// Isotropic classes carry no root. The result is indeterminate when
/// the spectrum is positive-dimensional or some paths failed.
pub fn characteristic_polynomial_numeric(a: &Tensor, cfg: &TrackerConfig) -> Result<CharPolyOutcome> {
    let report = eigenclasses(a, cfg)?;
    Ok(charpoly_from_report(&report))
}

pub fn charpoly_from_report(report: &SpectralReport) -> CharPolyOutcome {
    if report.positive_dimensional {
        return CharPolyOutcome::Indeterminate("positive-dimensional spectrum".into());
    }
    if report.failed_paths > 0 || report.diagnostics.degenerate_clusters > 0 {
        return CharPolyOutcome::Indeterminate("incomplete path data".into());
    }
    let odd = report.m % 2 == 1;
    let mut roots = Vec::new();
    for c in report.classes.iter().filter(|c| !c.isotropic) {
        let v = c.normalized_lambdas[0];
        let r = if odd { v * v } else { v };
        roots.extend(std::iter::repeat_n(r, c.multiplicity));
    }
    let coefficients = linalg::poly_from_roots(&roots);
    CharPolyOutcome::Polynomial(CharPolyNumeric { in_lambda_squared: odd, degree: roots.len(), coefficients })
}

#[derive(Clone, Debug, PartialEq)]
pub enum ProbeKind {
    /// Finitely many normalized eigenvalues.
    FiniteValues(Vec<C64>),
    /// Every value except an estimated finite exception set is a
    /// normalized eigenvalue.
    CofiniteComplement(Vec<C64>),
    /// Trials disagreed.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProbeResult {
    pub kind: ProbeKind,
    pub trials: usize,
    pub hits: usize,
    /// Trials whose tracking failed and were left out.
    pub failed_trials: usize,
}

/// The square system `A x^{m-1} - lambda x` in `x` for a fixed `lambda`.
pub fn fixed_lambda_system(a: &Tensor, lambda: C64) -> PolySystem {
    let n = a.dim();
    let eqs = a
        .contraction_terms()
        .into_iter()
        .enumerate()
        .map(|(j, terms)| {
            let mut eq: Vec<Term> = terms.into_iter().map(|(e, c)| Term::new(e, c)).collect();
            let mut e = vec![0u32; n];
            e[j] = 1;
            eq.push(Term::new(e, -lambda));
            eq
        })
        .collect();
    PolySystem::new(n, eqs, vec![(a.order() - 1) as u32; n]).expect("fixed-lambda system is well formed")
}

/// Whether `lambda` is a normalized eigenvalue: some solution of the
/// fixed-`lambda` system lies on `x . x = 1`. `None` when tracking failed.
pub fn has_normalized_solution(a: &Tensor, lambda: C64, cfg: &TrackerConfig) -> Option<bool> {
    let sys = fixed_lambda_system(a, lambda);
    let draws = cfg.draws(sys.nvars(), sys.neqs());
    let out = track_with(&sys, cfg, &draws);
    if out.iter().any(|o| o.status == PathStatus::StepUnderflow) {
        return None;
    }
    let hit = out.iter().filter(|o| o.converged()).any(|o| {
        let x = &o.endpoint;
        if (dot(x, x) - 1.0).norm() <= QUADRIC_TOL {
            return true;
        }
        o.cond > cfg.singular_cond && on_quadric_nearby(&sys, x)
    });
    Some(hit)
}

/// Gauss-Newton on `{F(x) = 0, x . x = 1}` from a point of a solution
/// component of `F`.
fn on_quadric_nearby(sys: &PolySystem, x0: &[C64]) -> bool {
    let n = x0.len();
    let mut x = x0.to_vec();
    let eval = |x: &[C64]| {
        let (f, j) = sys.eval_jac(x);
        let mut r = f;
        r.push(dot(x, x) - 1.0);
        let mut jj = CMat::zeros(n + 1, n);
        jj.view_mut((0, 0), (n, n)).copy_from(&j);
        for i in 0..n {
            jj[(n, i)] = x[i] * 2.0;
        }
        (r, jj)
    };
    for _ in 0..50 {
        let (r, j) = eval(&x);
        if max_norm(&r) <= 1e-10 * (1.0 + max_norm(&x)) {
            return true;
        }
        let Some(d) = linalg::lstsq(&j, &r, 1e-12) else { return false };
        x.iter_mut().zip(&d).for_each(|(a, b)| *a -= b);
        if !max_norm(&x).is_finite() || max_norm(&x) > 1e8 {
            return false;
        }
    }
    let (r, _) = eval(&x);
    max_norm(&r) <= 1e-10 * (1.0 + max_norm(&x))
}

fn annulus_sample(rng: &mut impl Rng) -> C64 {
    let r2: f64 = rng.random_range(0.25..4.0);
    C64::from_polar(r2.sqrt(), rng.random_range(0.0..std::f64::consts::TAU))
}

/// Tests whether every generic value is a normalized eigenvalue by solving
/// the fixed-eigenvalue system at `trials` random values in `0.5 <= |lambda| <= 2`.
pub fn singular_probe(a: &Tensor, trials: usize, cfg: &TrackerConfig) -> Result<ProbeResult> {
    if trials < 3 {
        return Err(Error::Invalid("singular probe needs at least 3 trials".into()));
    }
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x7072_6f62);
    let (mut hits, mut failed) = (0, 0);
    for t in 0..trials {
        let lambda = annulus_sample(&mut rng);
        match has_normalized_solution(a, lambda, &cfg.reseeded(100 + t as u64)) {
            Some(true) => hits += 1,
            Some(false) => {}
            None => failed += 1,
        }
    }
    let used = trials - failed;
    let report = eigenclasses(a, cfg)?;
    let kind = if used == 0 || (hits != 0 && hits != used) {
        ProbeKind::Inconclusive
    } else if hits == 0 {
        ProbeKind::FiniteValues(report.normalized_values.clone())
    } else {
        let mut cands = vec![C64::new(0.0, 0.0)];
        for &v in &report.normalized_values {
            if !cands.iter().any(|w| (w - v).norm() <= VALUE_TOL * (1.0 + v.norm())) {
                cands.push(v);
            }
        }
        let cfgx = cfg.reseeded(99);
        let exceptions = cands
            .into_iter()
            .filter(|&v| has_normalized_solution(a, v, &cfgx) == Some(false))
            .collect();
        ProbeKind::CofiniteComplement(exceptions)
    };
    Ok(ProbeResult { kind, trials, hits, failed_trials: failed })
}

/// Projective points where the gradient of `f` vanishes, from the
/// eigenvalue-zero classes of the associated tensor.
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroLocus {
    pub points: Vec<Vec<C64>>,
    pub positive_dimensional: bool,
}

pub fn zero_eigenvectors(f: &PolyForm, cfg: &TrackerConfig) -> Result<ZeroLocus> {
    let report = eigenclasses(&tensor_from_form(f)?, cfg)?;
    let points = report
        .classes
        .iter()
        .filter(|c| c.is_zero_lambda())
        .map(|c| c.representative.x.clone())
        .collect();
    Ok(ZeroLocus { points, positive_dimensional: report.positive_dimensional })
}

/// Whether `x` is a singular point of `f - (lambda/2)(x . x) - (1/m - 1/2) lambda = 0`,
/// i.e. whether `(lambda, x)` is a normalized eigenpair of the tensor of `f`.
pub fn shifted_singularity_check(f: &PolyForm, lambda: C64, x: &[C64]) -> bool {
    let m = f.degree() as f64;
    if x.len() != f.nvars() {
        return false;
    }
    let xx = dot(x, x);
    let g = f.eval(x) - lambda * 0.5 * xx - (1.0 / m - 0.5) * lambda;
    let tol = 1e-8 * (1.0 + lambda.norm()) * (1.0 + norm_inf(x)).powf(m);
    let grad_ok = f.gradient(x).iter().zip(x).all(|(gi, xi)| (gi - lambda * xi).norm() <= tol);
    g.norm() <= tol && grad_ok
}

/// Canonical projective representative used for comparing point sets.
pub fn projective_key(x: &[C64], m: usize) -> Result<Vec<C64>> {
    Ok(canonicalize(&EigenPair::new(C64::new(0.0, 0.0), x.to_vec()), m)?.x)
}
