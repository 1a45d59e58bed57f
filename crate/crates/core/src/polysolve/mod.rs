//! Homotopy solver for the homogenized eigenproblem.
//!
//! The eigen-equations `A x^{m-1} = lambda x` become homogeneous of degree
//! `m - 1` in `(x, l)` after substituting `lambda = l^{m-2}`, so the
//! solutions live in projective `n`-space and a total-degree homotopy with
//! `(m-1)^n` paths reaches all of them.

mod config;
mod tracker;

pub use config::{Draws, TrackerConfig, DEFAULT_SEED};
pub use tracker::{newton_refine, track_all, PathOutcome, PathStatus, Refined};

use crate::linalg::{self, CMat};
use crate::poly::{PolySystem, Term};
use crate::tensor::{canonical_distance, canonicalize, norm_inf, EigenClass, EigenPair, Tensor, C64};

pub(crate) use config::normal_c64;
pub(crate) use tracker::{max_norm, track_with};

/// Relative size of `x` inside the endpoint below which it is the trivial solution.
pub const TRIVIAL_TOL: f64 = 1e-8;
/// `|l| <= ZERO_LAMBDA_TOL ||x||_inf` is read as eigenvalue zero.
pub const ZERO_LAMBDA_TOL: f64 = 1e-6;
/// Endpoints with a residual above this are not turned into eigenpairs.
pub const ACCEPT_RESIDUAL: f64 = 1e-8;

/// The system `F_j = (A x^{m-1})_j - l^{m-2} x_j` in the variables
/// `(x_1, ..., x_n, l)`. For `m = 2` this is the bilinear system
/// `(A x)_j - lambda x_j`.
pub fn build_eigen_system(a: &Tensor) -> PolySystem {
    let m = a.order();
    let n = a.dim();
    let lam_exp = if m == 2 { 1 } else { (m - 2) as u32 };
    let deg = if m == 2 { 2 } else { (m - 1) as u32 };
    let eqs = a
        .contraction_terms()
        .into_iter()
        .enumerate()
        .map(|(j, terms)| {
            let mut eq: Vec<Term> = terms
                .into_iter()
                .map(|(mut e, c)| {
                    e.push(0);
                    Term::new(e, c)
                })
                .collect();
            let mut e = vec![0u32; n + 1];
            e[j] = 1;
            e[n] = lam_exp;
            eq.push(Term::new(e, C64::new(-1.0, 0.0)));
            eq
        })
        .collect();
    PolySystem::new(n + 1, eqs, vec![deg; n]).expect("eigen system is well formed")
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Diagnostics {
    pub paths: usize,
    pub converged: usize,
    pub diverged: usize,
    pub step_underflow: usize,
    /// Converged paths whose endpoint residual was too large to use.
    pub inaccurate: usize,
    pub failed_paths: usize,
    pub trivial: usize,
    /// For `m = 2`: diverging paths of the bilinear system, expected at infinity.
    pub at_infinity: usize,
    pub degenerate_clusters: usize,
    pub suspicious_clusters: usize,
    pub positive_dimensional: bool,
    pub max_residual: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Grouping {
    pub classes: Vec<EigenClass>,
    pub diagnostics: Diagnostics,
}

struct Endpoint {
    pair: EigenPair,
    canon: EigenPair,
    cond: f64,
}

fn endpoint_pairs(outcomes: &[PathOutcome], a: &Tensor, diag: &mut Diagnostics) -> Vec<Endpoint> {
    let m = a.order();
    let n = a.dim();
    let entry_scale = a.entries().iter().fold(0.0f64, |s, z| s.max(z.norm()));
    let mut out = Vec::new();
    for o in outcomes {
        if !o.converged() {
            continue;
        }
        let u = &o.endpoint;
        if o.residual > ACCEPT_RESIDUAL * (1.0 + max_norm(u)) {
            diag.inaccurate += 1;
            continue;
        }
        let x = u[..n].to_vec();
        let xn = norm_inf(&x);
        if xn <= TRIVIAL_TOL * max_norm(u) {
            diag.trivial += 1;
            continue;
        }
        let l = u[n];
        let lambda = if m == 2 {
            if l.norm() <= 1e-10 * entry_scale { C64::new(0.0, 0.0) } else { l }
        } else if l.norm() <= ZERO_LAMBDA_TOL * xn {
            C64::new(0.0, 0.0)
        } else {
            l.powu(m as u32 - 2)
        };
        let mut pair = EigenPair::new(lambda, x);
        pair.residual = pair.residual_for(a);
        diag.max_residual = diag.max_residual.max(pair.residual);
        let canon = canonicalize(&pair, m).expect("nonzero x");
        out.push(Endpoint { pair, canon, cond: o.cond });
    }
    out
}

fn close_canon(a: &EigenPair, b: &EigenPair, radius: f64) -> bool {
    canonical_distance(a, b) <= radius * (1.0 + norm_inf(&a.x).max(norm_inf(&b.x)))
}

struct Cluster {
    members: Vec<usize>,
    cond: f64,
}

fn cluster(eps: &[Endpoint], radius: f64) -> Vec<Cluster> {
    let mut cl: Vec<Cluster> = Vec::new();
    for (i, e) in eps.iter().enumerate() {
        match cl.iter_mut().find(|c| close_canon(&eps[c.members[0]].canon, &e.canon, radius)) {
            Some(c) => {
                c.members.push(i);
                c.cond = c.cond.min(e.cond);
            }
            None => cl.push(Cluster { members: vec![i], cond: e.cond }),
        }
    }
    cl
}

fn best_member<'a>(eps: &'a [Endpoint], c: &Cluster) -> &'a Endpoint {
    c.members
        .iter()
        .map(|&i| &eps[i])
        .min_by(|a, b| a.pair.residual.total_cmp(&b.pair.residual))
        .expect("nonempty cluster")
}

fn round_key(z: f64) -> f64 {
    (z * 1e8).round()
}

pub(crate) fn sort_classes(classes: &mut [EigenClass]) {
    let key = |c: &EigenClass| {
        let r = &c.representative;
        let mut k = vec![round_key(r.lambda.re), round_key(r.lambda.im)];
        for z in &r.x {
            k.push(round_key(-z.norm()));
            k.push(round_key(z.re));
            k.push(round_key(z.im));
        }
        k
    };
    classes.sort_by(|a, b| {
        let (ka, kb) = (key(a), key(b));
        ka.iter().zip(&kb).map(|(x, y)| x.total_cmp(y)).find(|o| o.is_ne()).unwrap_or(std::cmp::Ordering::Equal)
    });
}

fn tally(outcomes: &[PathOutcome], m: usize, diag: &mut Diagnostics) {
    diag.paths = outcomes.len();
    for o in outcomes {
        match o.status {
            PathStatus::Converged => diag.converged += 1,
            PathStatus::Diverged => diag.diverged += 1,
            PathStatus::StepUnderflow => diag.step_underflow += 1,
        }
    }
    if m == 2 {
        diag.at_infinity = diag.diverged;
        diag.failed_paths = diag.step_underflow + diag.inaccurate;
    } else {
        diag.failed_paths = diag.diverged + diag.step_underflow + diag.inaccurate;
    }
}

/// Turns tracked endpoints into eigenclasses with multiplicities.
///
/// Clusters whose Jacobian is rank-deficient trigger a second run with
/// fresh randomness; a representative that the second run does not
/// reproduce marks the spectrum as positive-dimensional.
pub fn group_into_classes(outcomes: &[PathOutcome], a: &Tensor, cfg: &TrackerConfig) -> Grouping {
    let m = a.order();
    let mut diag = Diagnostics::default();
    let eps = endpoint_pairs(outcomes, a, &mut diag);
    tally(outcomes, m, &mut diag);
    if m == 2 {
        let classes = group_matrix(&eps, a, cfg.cluster_radius, &mut diag);
        return Grouping { classes, diagnostics: diag };
    }
    let k = m - 2;
    let clusters = cluster(&eps, cfg.cluster_radius);
    let mut classes = Vec::new();
    let mut suspicious = Vec::new();
    for c in &clusters {
        let size = c.members.len();
        if size % k != 0 {
            diag.degenerate_clusters += 1;
        }
        let best = best_member(&eps, c);
        let cls = EigenClass::from_pair(&best.pair, m, size.div_ceil(k)).expect("nonzero x");
        if c.cond > cfg.singular_cond {
            suspicious.push(cls.representative.clone());
        }
        classes.push(cls);
    }
    diag.suspicious_clusters = suspicious.len();
    if !suspicious.is_empty() {
        let cfg2 = cfg.reseeded(1);
        let rerun = track_all(&build_eigen_system(a), &cfg2);
        let mut d2 = Diagnostics::default();
        let eps2 = endpoint_pairs(&rerun, a, &mut d2);
        diag.positive_dimensional = suspicious
            .iter()
            .any(|rep| !eps2.iter().any(|e| close_canon(rep, &e.canon, 1e-4)));
    }
    sort_classes(&mut classes);
    Grouping { classes, diagnostics: diag }
}

/// Matrix case: group by eigenvalue; eigenvalues with several distinct
/// eigen-directions get a null-space basis of `A - lambda I`.
fn group_matrix(eps: &[Endpoint], a: &Tensor, radius: f64, diag: &mut Diagnostics) -> Vec<EigenClass> {
    let n = a.dim();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (i, e) in eps.iter().enumerate() {
        let l = e.pair.lambda;
        match groups.iter_mut().find(|g| (eps[g[0]].pair.lambda - l).norm() <= radius * (1.0 + l.norm())) {
            Some(g) => g.push(i),
            None => groups.push(vec![i]),
        }
    }
    let mut classes = Vec::new();
    for g in groups {
        let sub: Vec<Endpoint> = g
            .iter()
            .map(|&i| Endpoint { pair: eps[i].pair.clone(), canon: eps[i].canon.clone(), cond: eps[i].cond })
            .collect();
        let cl = cluster(&sub, radius);
        if cl.len() == 1 {
            let best = best_member(&sub, &cl[0]);
            classes.push(EigenClass::from_pair(&best.pair, 2, sub.len()).expect("nonzero x"));
            continue;
        }
        let mut lambda = sub.iter().map(|e| e.pair.lambda).sum::<C64>() / sub.len() as f64;
        if a.is_real() && lambda.im.abs() <= 1e-9 * (1.0 + lambda.norm()) {
            lambda.im = 0.0;
        }
        let mut shifted = CMat::from_row_slice(n, n, a.entries());
        for i in 0..n {
            shifted[(i, i)] -= lambda;
        }
        let basis = linalg::nullspace(&shifted, 1e-6);
        if basis.len() < 2 {
            diag.degenerate_clusters += 1;
            let best = best_member(&sub, &cl[0]);
            classes.push(EigenClass::from_pair(&best.pair, 2, sub.len()).expect("nonzero x"));
            continue;
        }
        for v in basis {
            let mut p = EigenPair::new(lambda, v);
            p.residual = p.residual_for(a);
            classes.push(EigenClass::from_pair(&p, 2, 1).expect("nonzero x"));
        }
    }
    sort_classes(&mut classes);
    classes
}

/// Builds, tracks and groups in one call.
pub fn solve_eigen(a: &Tensor, cfg: &TrackerConfig) -> Grouping {
    let sys = build_eigen_system(a);
    let out = track_all(&sys, cfg);
    group_into_classes(&out, a, cfg)
}
