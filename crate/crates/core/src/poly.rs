//! Sparse multivariate polynomial systems over complex floats.

use crate::error::{Error, Result};
use crate::linalg::CMat;
use crate::tensor::C64;

#[derive(Clone, Debug, PartialEq)]
pub struct Term {
    pub exps: Vec<u32>,
    pub coeff: C64,
}

impl Term {
    pub fn new(exps: Vec<u32>, coeff: C64) -> Self {
        Term { exps, coeff }
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }
}

/// A square-or-not system of sparse polynomials with declared degrees.
#[derive(Clone, Debug, PartialEq)]
pub struct PolySystem {
    nvars: usize,
    equations: Vec<Vec<Term>>,
    degrees: Vec<u32>,
    max_exp: u32,
}

impl PolySystem {
    pub fn new(nvars: usize, equations: Vec<Vec<Term>>, degrees: Vec<u32>) -> Result<Self> {
        if equations.len() != degrees.len() {
            return Err(Error::DimensionMismatch { expected: equations.len(), got: degrees.len() });
        }
        let mut max_exp = 0;
        for (eq, &d) in equations.iter().zip(&degrees) {
            for t in eq {
                if t.exps.len() != nvars {
                    return Err(Error::DimensionMismatch { expected: nvars, got: t.exps.len() });
                }
                if t.degree() > d {
                    return Err(Error::Invalid(format!("term degree {} exceeds declared {d}", t.degree())));
                }
                max_exp = max_exp.max(t.exps.iter().copied().max().unwrap_or(0));
            }
        }
        let equations = equations
            .into_iter()
            .map(|eq| eq.into_iter().filter(|t| t.coeff != C64::new(0.0, 0.0)).collect())
            .collect();
        Ok(PolySystem { nvars, equations, degrees, max_exp })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn neqs(&self) -> usize {
        self.equations.len()
    }

    pub fn equations(&self) -> &[Vec<Term>] {
        &self.equations
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// Product of the declared degrees.
    pub fn bezout_number(&self) -> u128 {
        self.degrees.iter().map(|&d| d as u128).product()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.equations.iter().zip(&self.degrees).all(|(eq, &d)| eq.iter().all(|t| t.degree() == d))
    }

    fn powers(&self, u: &[C64]) -> Vec<Vec<C64>> {
        u.iter()
            .map(|&z| {
                let mut p = Vec::with_capacity(self.max_exp as usize + 1);
                let mut acc = C64::new(1.0, 0.0);
                for _ in 0..=self.max_exp {
                    p.push(acc);
                    acc *= z;
                }
                p
            })
            .collect()
    }

    pub fn eval(&self, u: &[C64]) -> Vec<C64> {
        let pw = self.powers(u);
        self.equations
            .iter()
            .map(|eq| {
                eq.iter()
                    .map(|t| t.exps.iter().enumerate().fold(t.coeff, |acc, (v, &e)| acc * pw[v][e as usize]))
                    .sum()
            })
            .collect()
    }

    /// Values and Jacobian (`neqs x nvars`).
    pub fn eval_jac(&self, u: &[C64]) -> (Vec<C64>, CMat) {
        let pw = self.powers(u);
        let mut vals = vec![C64::new(0.0, 0.0); self.neqs()];
        let mut jac = CMat::zeros(self.neqs(), self.nvars);
        for (i, eq) in self.equations.iter().enumerate() {
            for t in eq {
                let mono = t.exps.iter().enumerate().fold(t.coeff, |acc, (v, &e)| acc * pw[v][e as usize]);
                vals[i] += mono;
                for (v, &e) in t.exps.iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    let d = t.exps.iter().enumerate().fold(t.coeff * e as f64, |acc, (w, &f)| {
                        let k = if w == v { f - 1 } else { f };
                        acc * pw[w][k as usize]
                    });
                    jac[(i, v)] += d;
                }
            }
        }
        (vals, jac)
    }
}
