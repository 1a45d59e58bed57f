//! Predictor-corrector path tracking with a Cauchy endgame.

use std::f64::consts::TAU;

use rayon::prelude::*;

use super::config::{Draws, TrackerConfig};
use crate::linalg::{self, CMat};
use crate::poly::PolySystem;
use crate::tensor::C64;

/// Consecutive endgame circles with growing spread and equal winding that
/// mark a path as diverging.
const DIVERGENCE_WINDOW: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PathStatus {
    Converged,
    Diverged,
    StepUnderflow,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PathOutcome {
    pub index: usize,
    pub status: PathStatus,
    /// Endpoint for converged paths, last tracked point otherwise.
    pub endpoint: Vec<C64>,
    pub residual: f64,
    pub cond: f64,
    /// Winding number found by the endgame.
    pub cycle: usize,
}

impl PathOutcome {
    pub fn converged(&self) -> bool {
        self.status == PathStatus::Converged
    }
}

/// Result of [`newton_refine`].
#[derive(Clone, Debug, PartialEq)]
pub struct Refined {
    pub point: Vec<C64>,
    pub residual: f64,
    pub iterations: usize,
    pub singular: bool,
}

pub(crate) fn max_norm(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn dist(a: &[C64], b: &[C64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// Target system with the optional patch row appended.
pub(crate) fn target_eval(sys: &PolySystem, patch: Option<&[C64]>, u: &[C64]) -> (Vec<C64>, CMat) {
    let (mut f, jf) = sys.eval_jac(u);
    match patch {
        None => (f, jf),
        Some(c) => {
            let k = sys.neqs();
            let mut j = jf.resize_vertically(k + 1, C64::new(0.0, 0.0));
            for (v, &cv) in c.iter().enumerate() {
                j[(k, v)] = cv;
            }
            f.push(c.iter().zip(u).map(|(a, b)| a * b).sum::<C64>() - 1.0);
            (f, j)
        }
    }
}

/// Newton's method on the target system (plus patch when given).
pub fn newton_refine(sys: &PolySystem, patch: Option<&[C64]>, point: &[C64], max_iter: usize) -> Refined {
    let mut u = point.to_vec();
    let (f0, _) = target_eval(sys, patch, &u);
    let mut res = max_norm(&f0);
    let mut it = 0;
    while it < max_iter && res > 1e-12 * (1.0 + max_norm(&u)) {
        let (f, j) = target_eval(sys, patch, &u);
        let delta = if j.is_square() { linalg::solve(&j, &f) } else { linalg::lstsq(&j, &f, 1e-14) };
        let Some(delta) = delta else {
            return Refined { point: point.to_vec(), residual: max_norm(&f0), iterations: it, singular: true };
        };
        let cand: Vec<C64> = u.iter().zip(&delta).map(|(a, d)| a - d).collect();
        let r = max_norm(&target_eval(sys, patch, &cand).0);
        it += 1;
        if r >= res {
            break;
        }
        u = cand;
        res = r;
    }
    Refined { point: u, residual: res, iterations: it, singular: false }
}

#[derive(Clone, Copy, Debug)]
enum Seg {
    Line(C64, C64),
    /// `t = 1 - r e^{i theta}`, theta from `th0` to `th0 + dth`.
    Arc { r: f64, th0: f64, dth: f64 },
}

impl Seg {
    fn at(&self, tau: f64) -> (C64, C64) {
        match *self {
            Seg::Line(a, b) => (a + (b - a) * tau, b - a),
            Seg::Arc { r, th0, dth } => {
                let e = C64::from_polar(r, th0 + dth * tau);
                (C64::new(1.0, 0.0) - e, -C64::i() * e * dth)
            }
        }
    }

    fn len(&self) -> f64 {
        match *self {
            Seg::Line(a, b) => (b - a).norm(),
            Seg::Arc { r, dth, .. } => r * dth.abs(),
        }
    }
}

pub(crate) struct Homotopy<'a> {
    target: &'a PolySystem,
    draws: &'a Draws,
    patch: bool,
    cfg: &'a TrackerConfig,
}

struct PathState {
    u: Vec<C64>,
    h: f64,
    steps: usize,
}

impl<'a> Homotopy<'a> {
    pub(crate) fn new(target: &'a PolySystem, draws: &'a Draws, cfg: &'a TrackerConfig) -> Self {
        let patch = target.nvars() == target.neqs() + 1;
        Homotopy { target, draws, patch, cfg }
    }

    fn patch(&self) -> Option<&[C64]> {
        self.patch.then_some(self.draws.patch.as_slice())
    }

    /// `H`, `dH/du`, `dH/dt` at `(u, t)`.
    fn eval(&self, u: &[C64], t: C64) -> (Vec<C64>, CMat, Vec<C64>) {
        let (f, jf) = self.target.eval_jac(u);
        let k = f.len();
        let nv = u.len();
        let gamma = self.draws.gamma;
        let gs = gamma * (C64::new(1.0, 0.0) - t);
        let mut h = vec![C64::new(0.0, 0.0); nv];
        let mut ht = vec![C64::new(0.0, 0.0); nv];
        let mut j = CMat::zeros(nv, nv);
        for r in 0..k {
            for c in 0..nv {
                j[(r, c)] = jf[(r, c)] * t;
            }
            let d = self.target.degrees()[r];
            let ud1 = u[r].powu(d - 1);
            let g = ud1 * u[r] - self.draws.b[r];
            h[r] = gs * g + t * f[r];
            j[(r, r)] += gs * (d as f64) * ud1;
            ht[r] = f[r] - gamma * g;
        }
        if self.patch {
            let c = &self.draws.patch;
            h[k] = c.iter().zip(u).map(|(a, b)| a * b).sum::<C64>() - 1.0;
            for v in 0..nv {
                j[(k, v)] = c[v];
            }
        }
        (h, j, ht)
    }

    pub(crate) fn start_point(&self, index: usize) -> Vec<C64> {
        let k = self.target.neqs();
        let mut u = Vec::with_capacity(self.target.nvars());
        let mut rest = index;
        for r in 0..k {
            let d = self.target.degrees()[r] as usize;
            let digit = rest % d;
            rest /= d;
            let root = self.draws.b[r].powf(1.0 / d as f64);
            u.push(root * C64::from_polar(1.0, TAU * digit as f64 / d as f64));
        }
        if self.patch {
            let c = &self.draws.patch;
            let s: C64 = c.iter().zip(&u).map(|(a, b)| a * b).sum();
            u.push((C64::new(1.0, 0.0) - s) / c[k]);
        }
        u
    }

    #[cfg(test)]
    pub(crate) fn start_residual(&self, u: &[C64]) -> f64 {
        max_norm(&self.eval(u, C64::new(0.0, 0.0)).0)
    }

    fn velocity(&self, u: &[C64], t: C64, dt: C64) -> Option<Vec<C64>> {
        let (_, j, ht) = self.eval(u, t);
        let v = linalg::solve(&j, &ht)?;
        Some(v.into_iter().map(|z| -z * dt).collect())
    }

    fn correct(&self, u: &mut [C64], t: C64) -> bool {
        let tol = self.cfg.corrector_tol;
        let mut prev = f64::INFINITY;
        for _ in 0..self.cfg.max_corrector_iter {
            let (h, j, _) = self.eval(u, t);
            let Some(d) = linalg::solve(&j, &h) else { return false };
            let nd = max_norm(&d);
            if !nd.is_finite() || nd > 0.5 * prev {
                return false;
            }
            for (a, b) in u.iter_mut().zip(&d) {
                *a -= b;
            }
            if nd <= tol * (1.0 + max_norm(u)) {
                return true;
            }
            prev = nd;
        }
        false
    }

    fn try_step(&self, u: &[C64], seg: &Seg, tau: f64, dtau: f64) -> Option<Vec<C64>> {
        let axpy = |k: &[C64], s: f64| -> Vec<C64> { u.iter().zip(k).map(|(a, b)| a + b * s).collect() };
        let (t1, d1) = seg.at(tau);
        let k1 = self.velocity(u, t1, d1)?;
        let (t2, d2) = seg.at(tau + 0.5 * dtau);
        let k2 = self.velocity(&axpy(&k1, 0.5 * dtau), t2, d2)?;
        let k3 = self.velocity(&axpy(&k2, 0.5 * dtau), t2, d2)?;
        let (t4, d4) = seg.at(tau + dtau);
        let k4 = self.velocity(&axpy(&k3, dtau), t4, d4)?;
        let mut p: Vec<C64> = (0..u.len())
            .map(|i| u[i] + (k1[i] + k2[i] * 2.0 + k3[i] * 2.0 + k4[i]) * (dtau / 6.0))
            .collect();
        self.correct(&mut p, t4).then_some(p)
    }

    fn track_seg(&self, st: &mut PathState, seg: Seg) -> Result<(), PathStatus> {
        let len = seg.len();
        if len == 0.0 {
            return Ok(());
        }
        let mut tau = 0.0;
        let mut ok_run = 0;
        while tau < 1.0 {
            st.steps += 1;
            if st.steps > self.cfg.max_steps {
                return Err(PathStatus::StepUnderflow);
            }
            let last = st.h / len >= 1.0 - tau;
            let dtau = if last { 1.0 - tau } else { st.h / len };
            match self.try_step(&st.u, &seg, tau, dtau) {
                Some(p) => {
                    st.u = p;
                    tau = if last { 1.0 } else { tau + dtau };
                    if max_norm(&st.u) > self.cfg.divergence_bound {
                        return Err(PathStatus::Diverged);
                    }
                    ok_run += 1;
                    if ok_run >= 4 {
                        st.h = (st.h * 2.0).min(self.cfg.max_step);
                        ok_run = 0;
                    }
                }
                None => {
                    st.h *= 0.5;
                    ok_run = 0;
                    if st.h < self.cfg.min_step {
                        return Err(PathStatus::StepUnderflow);
                    }
                }
            }
        }
        Ok(())
    }

    /// Loops around `t = 1` at radius `r` until the path closes up.
    /// Returns the mean of the samples, their spread and the loop count, or
    /// `None` (with the state restored) when the loop does not close.
    fn circle(&self, st: &mut PathState, r: f64) -> Result<Option<(Vec<C64>, f64, usize)>, PathStatus> {
        let n = self.cfg.endgame_samples;
        let (u0, h0, s0) = (st.u.clone(), st.h, st.steps);
        let mut samples: Vec<Vec<C64>> = Vec::new();
        let dth = TAU / n as f64;
        for c in 1..=self.cfg.max_cycle {
            for k in 0..n {
                samples.push(st.u.clone());
                match self.track_seg(st, Seg::Arc { r, th0: dth * k as f64, dth }) {
                    Ok(()) => {}
                    Err(PathStatus::StepUnderflow) if st.steps < self.cfg.max_steps => {
                        st.u = u0;
                        st.h = h0;
                        return Ok(None);
                    }
                    Err(e) => return Err(e),
                }
            }
            if dist(&st.u, &u0) <= 1e-8 * (1.0 + max_norm(&u0)) {
                st.u = u0;
                let m = samples.len() as f64;
                let est: Vec<C64> =
                    (0..st.u.len()).map(|i| samples.iter().map(|s| s[i]).sum::<C64>() / m).collect();
                let spread = samples.iter().map(|s| dist(s, &est)).fold(0.0, f64::max);
                return Ok(Some((est, spread, c)));
            }
        }
        st.u = u0;
        st.h = h0;
        st.steps = st.steps.max(s0);
        Ok(None)
    }

    fn endgame(&self, st: &mut PathState) -> Result<(Vec<C64>, usize), PathStatus> {
        let mut r = self.cfg.endgame_radius;
        let mut prev: Option<(Vec<C64>, usize)> = None;
        let mut spreads: Vec<(f64, usize)> = Vec::new();
        loop {
            let r2 = r * 0.25;
            let cr = self.circle(st, r)?;
            if let Some((est, spread, cycle)) = cr {
                let scale = 1.0 + max_norm(&est);
                spreads.push((spread, cycle));
                if let Some((p, pc)) = &prev {
                    if *pc == cycle && dist(&est, p) <= self.cfg.endgame_tol * scale {
                        // a sheet jump on the circle can close early with a stable but wrong mean
                        let res = max_norm(&target_eval(self.target, self.patch(), &est).0);
                        if res <= 1e-8 * scale {
                            return Ok((est, cycle));
                        }
                    }
                }
                // a pole-like branch averages to a finite value but its spread keeps growing
                let w = &spreads[spreads.len().saturating_sub(DIVERGENCE_WINDOW)..];
                if w.len() == DIVERGENCE_WINDOW
                    && w.windows(2).all(|p| p[1].0 > p[0].0 && p[1].1 == p[0].1)
                    && w[w.len() - 1].0 > 1e-6 * scale
                {
                    return Err(PathStatus::Diverged);
                }
                if max_norm(&est) > self.cfg.divergence_bound {
                    return Err(PathStatus::Diverged);
                }
                if r2 < self.cfg.endgame_min_radius {
                    return Ok((est, cycle));
                }
                prev = Some((est, cycle));
            } else if r2 < self.cfg.endgame_min_radius {
                return Err(PathStatus::StepUnderflow);
            }
            self.track_seg(st, Seg::Line(C64::new(1.0 - r, 0.0), C64::new(1.0 - r2, 0.0)))?;
            r = r2;
        }
    }

    pub(crate) fn track(&self, index: usize) -> PathOutcome {
        let mut st = PathState { u: self.start_point(index), h: self.cfg.initial_step, steps: 0 };
        let t_end = 1.0 - self.cfg.endgame_radius;
        let run = self
            .track_seg(&mut st, Seg::Line(C64::new(0.0, 0.0), C64::new(t_end, 0.0)))
            .and_then(|_| self.endgame(&mut st));
        let patch = self.patch();
        match run {
            Ok((est, cycle)) => {
                let (f, j) = target_eval(self.target, patch, &est);
                let cond = linalg::condition_number(&j);
                let mut point = est;
                let mut residual = max_norm(&f);
                if cond < 1e12 {
                    let r = newton_refine(self.target, patch, &point, 5);
                    if !r.singular && r.residual <= residual && dist(&r.point, &point) <= 1e-6 * (1.0 + max_norm(&point)) {
                        point = r.point;
                        residual = r.residual;
                    }
                }
                PathOutcome { index, status: PathStatus::Converged, endpoint: point, residual, cond, cycle }
            }
            Err(status) => {
                let residual = max_norm(&target_eval(self.target, patch, &st.u).0);
                PathOutcome { index, status, endpoint: st.u, residual, cond: f64::INFINITY, cycle: 0 }
            }
        }
    }
}

/// Tracks every start solution of the total-degree start system.
///
/// A system with one more variable than equations is tracked in the
/// projective patch `<c, u> = 1`; a square system is tracked affinely.
pub fn track_all(system: &PolySystem, cfg: &TrackerConfig) -> Vec<PathOutcome> {
    let draws = cfg.draws(system.nvars(), system.neqs());
    track_with(system, cfg, &draws)
}

pub(crate) fn track_with(system: &PolySystem, cfg: &TrackerConfig, draws: &Draws) -> Vec<PathOutcome> {
    let hom = Homotopy::new(system, draws, cfg);
    let count = system.bezout_number() as usize;
    if cfg.parallel {
        (0..count).into_par_iter().map(|i| hom.track(i)).collect()
    } else {
        (0..count).map(|i| hom.track(i)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Term;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    // x^2 - 2 = 0, y^3 - y = 0 affinely
    fn toy() -> PolySystem {
        PolySystem::new(
            2,
            vec![
                vec![Term::new(vec![2, 0], c(1.)), Term::new(vec![0, 0], c(-2.))],
                vec![Term::new(vec![0, 3], c(1.)), Term::new(vec![0, 1], c(-1.))],
            ],
            vec![2, 3],
        )
        .unwrap()
    }

    #[test]
    fn affine_toy_system() {
        let out = track_all(&toy(), &TrackerConfig::default());
        assert_eq!(out.len(), 6);
        let mut ys: Vec<f64> = Vec::new();
        for o in &out {
            assert!(o.converged(), "{o:?}");
            assert!(o.residual < 1e-12);
            assert!((o.endpoint[0].norm() - 2f64.sqrt()).abs() < 1e-10);
            ys.push(o.endpoint[1].re);
        }
        ys.sort_by(f64::total_cmp);
        for (y, e) in ys.iter().zip([-1., -1., 0., 0., 1., 1.]) {
            assert!((y - e).abs() < 1e-10);
        }
    }

    #[test]
    fn double_root_found_by_endgame() {
        // x^2 = 0 has one double root
        let sys = PolySystem::new(1, vec![vec![Term::new(vec![2], c(1.))]], vec![2]).unwrap();
        let out = track_all(&sys, &TrackerConfig::default());
        for o in &out {
            assert!(o.converged());
            assert_eq!(o.cycle, 2);
            assert!(o.endpoint[0].norm() < 1e-9, "{o:?}");
        }
    }

    #[test]
    fn root_at_infinity_diverges() {
        // degree 2 with one finite root: x^0 coefficient only in the linear part
        let sys = PolySystem::new(
            1,
            vec![vec![Term::new(vec![1], c(1.)), Term::new(vec![0], c(-3.))]],
            vec![2],
        )
        .unwrap();
        let out = track_all(&sys, &TrackerConfig::default());
        let conv: Vec<_> = out.iter().filter(|o| o.converged()).collect();
        assert_eq!(conv.len(), 1);
        assert!((conv[0].endpoint[0] - c(3.)).norm() < 1e-10);
        assert!(out.iter().any(|o| o.status == PathStatus::Diverged));
    }

    #[test]
    fn start_points_solve_start_system() {
        let sys = toy();
        let cfg = TrackerConfig::default();
        let d = cfg.draws(2, 2);
        let hom = Homotopy::new(&sys, &d, &cfg);
        for i in 0..6 {
            assert!(hom.start_residual(&hom.start_point(i)) < 1e-14);
        }
    }

    #[test]
    fn newton_fixed_point_and_recovery() {
        let sys = toy();
        let exact = [c(2f64.sqrt()), c(1.)];
        let r = newton_refine(&sys, None, &exact, 5);
        assert!(dist(&r.point, &exact) < 1e-15);
        let pert = [c(2f64.sqrt() + 1e-4), c(1. - 1e-4)];
        let r = newton_refine(&sys, None, &pert, 10);
        assert!(r.residual < 1e-12);
        assert!(dist(&r.point, &exact) < 1e-12);
    }
}
