use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::tensor::C64;

pub const DEFAULT_SEED: u64 = 20100306;

/// Path-tracker parameters. `gamma` and `patch` are drawn from `seed`
/// unless given explicitly.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct TrackerConfig {
    pub seed: u64,
    pub gamma: Option<C64>,
    pub patch: Option<Vec<C64>>,
    pub initial_step: f64,
    pub min_step: f64,
    pub max_step: f64,
    pub corrector_tol: f64,
    pub max_corrector_iter: usize,
    pub cluster_radius: f64,
    pub divergence_bound: f64,
    /// Distance `1 - t` at which the Cauchy endgame takes over.
    pub endgame_radius: f64,
    pub endgame_samples: usize,
    pub endgame_tol: f64,
    pub endgame_min_radius: f64,
    pub max_cycle: usize,
    pub max_steps: usize,
    /// Jacobian condition above which a cluster is treated as rank-deficient.
    pub singular_cond: f64,
    pub parallel: bool,
}

impl Default for TrackerConfig {
    fn default() -> Self {
        TrackerConfig {
            seed: DEFAULT_SEED,
            gamma: None,
            patch: None,
            initial_step: 0.05,
            min_step: 1e-7,
            max_step: 0.1,
            corrector_tol: 1e-11,
            max_corrector_iter: 3,
            cluster_radius: 1e-6,
            divergence_bound: 1e8,
            endgame_radius: 0.1,
            endgame_samples: 16,
            endgame_tol: 1e-9,
            endgame_min_radius: 1e-6,
            max_cycle: 32,
            max_steps: 200_000,
            singular_cond: 1e10,
            parallel: true,
        }
    }
}

/// The random data of one homotopy run.
#[derive(Clone, Debug, PartialEq)]
pub struct Draws {
    pub gamma: C64,
    pub patch: Vec<C64>,
    pub b: Vec<C64>,
}

impl TrackerConfig {
    pub fn with_seed(seed: u64) -> Self {
        TrackerConfig { seed, ..Default::default() }
    }

    /// Same tolerances, independent randomness.
    pub fn reseeded(&self, salt: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15));
        TrackerConfig { seed: rng.random(), gamma: None, patch: None, ..self.clone() }
    }

    pub fn validate(&self) -> crate::Result<()> {
        let pos = [
            self.initial_step,
            self.min_step,
            self.max_step,
            self.corrector_tol,
            self.cluster_radius,
            self.divergence_bound,
            self.endgame_radius,
            self.endgame_tol,
            self.endgame_min_radius,
            self.singular_cond,
        ];
        if pos.iter().any(|&v| !(v > 0.0 && v.is_finite())) {
            return Err(crate::Error::Invalid("tracker tolerances must be positive".into()));
        }
        if !(self.min_step <= self.initial_step && self.initial_step <= self.max_step) {
            return Err(crate::Error::Invalid("need min_step <= initial_step <= max_step".into()));
        }
        if self.max_corrector_iter == 0 || self.endgame_samples < 4 || self.max_cycle == 0 {
            return Err(crate::Error::Invalid("tracker iteration counts too small".into()));
        }
        if let Some(g) = self.gamma {
            if (g.norm() - 1.0).abs() > 1e-12 {
                return Err(crate::Error::Invalid("gamma must have unit modulus".into()));
            }
        }
        Ok(())
    }

    /// Draws gamma, the patch vector (length `nvars`) and the start
    /// constants (length `neqs`) from one generator.
    pub fn draws(&self, nvars: usize, neqs: usize) -> Draws {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let theta: f64 = rng.random_range(0.0..std::f64::consts::TAU);
        let gamma = self.gamma.unwrap_or_else(|| C64::from_polar(1.0, theta));
        let mut patch: Vec<C64> = (0..nvars).map(|_| normal_c64(&mut rng)).collect();
        while patch.last().is_some_and(|c| c.norm() < 0.25) {
            *patch.last_mut().unwrap() = normal_c64(&mut rng);
        }
        if let Some(p) = &self.patch {
            if p.len() == nvars && p.last().is_some_and(|c| c.norm() > 0.0) {
                patch = p.clone();
            }
        }
        let b = (0..neqs)
            .map(|_| C64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU)))
            .collect();
        Draws { gamma, patch, b }
    }
}

pub(crate) fn normal_c64(rng: &mut impl Rng) -> C64 {
    let re: f64 = StandardNormal.sample(rng);
    let im: f64 = StandardNormal.sample(rng);
    C64::new(re, im) / std::f64::consts::SQRT_2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn draws_are_reproducible() {
        let cfg = TrackerConfig::default();
        assert_eq!(cfg.draws(3, 2), cfg.draws(3, 2));
        assert_ne!(cfg.draws(3, 2), cfg.reseeded(1).draws(3, 2));
        let d = cfg.draws(3, 2);
        assert!((d.gamma.norm() - 1.0).abs() < 1e-15);
        assert!(d.patch[2].norm() >= 0.25);
    }

    #[test]
    fn config_round_trips_through_json() {
        let cfg = TrackerConfig { seed: 7, ..Default::default() };
        let s = serde_json::to_string(&cfg).unwrap();
        let back: TrackerConfig = serde_json::from_str(&s).unwrap();
        assert_eq!(back, cfg);
        let partial: TrackerConfig = serde_json::from_str(r#"{"seed": 9}"#).unwrap();
        assert_eq!(partial.initial_step, 0.05);
        assert_eq!(partial.seed, 9);
    }

    #[test]
    fn bad_tolerances_rejected() {
        let cfg = TrackerConfig { min_step: 0.0, ..Default::default() };
        assert!(cfg.validate().is_err());
        assert!(TrackerConfig::default().validate().is_ok());
    }
}
