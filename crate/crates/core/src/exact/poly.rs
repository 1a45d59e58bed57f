use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::gaussian::GR;
use crate::error::{Error, Result};
use crate::tensor::C64;

/// Multivariate polynomial with Gaussian-rational coefficients.
///
/// Terms are kept in lexicographic exponent order and zero coefficients
/// are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, GR>,
}

impl ExactPoly {
    pub fn zero(vars: &[&str]) -> Self {
        ExactPoly { vars: vars.iter().map(|s| s.to_string()).collect(), terms: BTreeMap::new() }
    }

    pub fn zero_like(&self) -> Self {
        ExactPoly { vars: self.vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant_like(&self, c: GR) -> Self {
        let mut p = self.zero_like();
        p.add_term(vec![0; self.nvars()], c);
        p
    }

    pub fn constant(vars: &[&str], c: GR) -> Self {
        ExactPoly::zero(vars).constant_like(c)
    }

    /// The variable `vars[k]`.
    pub fn var(vars: &[&str], k: usize) -> Self {
        let mut p = ExactPoly::zero(vars);
        let mut e = vec![0; vars.len()];
        e[k] = 1;
        p.add_term(e, GR::one());
        p
    }

    pub fn from_terms(vars: &[&str], terms: impl IntoIterator<Item = (Vec<u32>, GR)>) -> Result<Self> {
        let mut p = ExactPoly::zero(vars);
        for (e, c) in terms {
            if e.len() != vars.len() {
                return Err(Error::DimensionMismatch { expected: vars.len(), got: e.len() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn add_term(&mut self, e: Vec<u32>, c: GR) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, GR> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree_in(&self, k: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[k]).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_constant(&self) -> bool {
        self.total_degree().is_none_or(|d| d == 0)
    }

    /// Coefficient of `v_k^d`, as a polynomial in the other variables.
    pub fn coeff_in(&self, k: usize, d: u32) -> ExactPoly {
        let mut p = self.zero_like();
        for (e, c) in &self.terms {
            if e[k] == d {
                let mut e = e.clone();
                e[k] = 0;
                p.add_term(e, c.clone());
            }
        }
        p
    }

    /// Value at a constant-only polynomial, `None` otherwise.
    pub fn constant_value(&self) -> Option<GR> {
        if !self.is_constant() {
            return None;
        }
        Some(self.terms.values().next().cloned().unwrap_or_else(GR::zero))
    }

    pub fn add(&self, o: &ExactPoly) -> ExactPoly {
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }

    pub fn neg(&self) -> ExactPoly {
        ExactPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn sub(&self, o: &ExactPoly) -> ExactPoly {
        self.add(&o.neg())
    }

    pub fn scale(&self, s: &GR) -> ExactPoly {
        let mut p = self.zero_like();
        for (e, c) in &self.terms {
            p.add_term(e.clone(), c * s);
        }
        p
    }

    pub fn mul(&self, o: &ExactPoly) -> ExactPoly {
        let mut acc: BTreeMap<Vec<u32>, GR> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_insert_with(GR::zero) += &(c1 * c2);
            }
        }
        acc.retain(|_, v| !v.is_zero());
        ExactPoly { vars: self.vars.clone(), terms: acc }
    }

    pub fn pow(&self, k: u32) -> ExactPoly {
        let mut acc = self.constant_like(GR::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: &[GR]) -> GR {
        let mut s = GR::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &k) in x.iter().zip(e) {
                t = &t * &xi.pow(k);
            }
            s += &t;
        }
        s
    }

    /// Floating-point evaluation.
    pub fn eval_c64(&self, x: &[C64]) -> C64 {
        self.terms
            .iter()
            .map(|(e, c)| x.iter().zip(e).fold(c.to_c64(), |t, (xi, &k)| t * xi.powu(k)))
            .sum()
    }

    /// Replaces `v_k` by the constant `v`.
    pub fn substitute(&self, k: usize, v: &GR) -> ExactPoly {
        let mut p = self.zero_like();
        for (e, c) in &self.terms {
            let mut e = e.clone();
            let d = std::mem::take(&mut e[k]);
            p.add_term(e, c * &v.pow(d));
        }
        p
    }

    /// Quotient of an exact division, by repeated leading-term division.
    pub fn div_exact(&self, d: &ExactPoly) -> Result<ExactPoly> {
        let (de, dc) = d.terms.iter().next_back().ok_or_else(|| Error::InexactDivision("divisor is zero".into()))?;
        let mut rem = self.clone();
        let mut q = self.zero_like();
        while let Some((re, rc)) = rem.terms.iter().next_back() {
            if re.iter().zip(de).any(|(a, b)| a < b) {
                return Err(Error::InexactDivision("leading term not divisible".into()));
            }
            let e: Vec<u32> = re.iter().zip(de).map(|(a, b)| a - b).collect();
            let c = rc.div(dc)?;
            let mut t = self.zero_like();
            t.add_term(e.clone(), c.clone());
            rem = rem.sub(&t.mul(d));
            q.add_term(e, c);
        }
        Ok(q)
    }

    /// Coefficients in `v_k`, lowest degree first; every other variable must be absent.
    pub fn to_univariate(&self, k: usize) -> Result<Vec<GR>> {
        let mut out = vec![GR::zero(); self.degree_in(k).map_or(0, |d| d as usize + 1)];
        for (e, c) in &self.terms {
            if e.iter().enumerate().any(|(i, &p)| i != k && p > 0) {
                return Err(Error::Invalid(format!("polynomial is not univariate in {}", self.vars[k])));
            }
            out[e[k] as usize] = c.clone();
        }
        Ok(out)
    }

    /// Canonical sorted term list with rational-string coefficients.
    pub fn term_list(&self) -> Vec<(Vec<u32>, String)> {
        self.terms.iter().map(|(e, c)| (e.clone(), c.to_string())).collect()
    }
}

impl fmt::Display for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .zip(&self.vars)
                    .filter(|(k, _)| **k > 0)
                    .map(|(k, v)| if *k == 1 { v.clone() } else { format!("{v}^{k}") })
                    .collect();
                if mono.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c})*{}", mono.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> (ExactPoly, ExactPoly) {
        (ExactPoly::var(&["x", "y"], 0), ExactPoly::var(&["x", "y"], 1))
    }

    #[test]
    fn ring_operations() {
        let (x, y) = xy();
        let s = x.add(&y);
        let d = x.sub(&y);
        let prod = s.mul(&d);
        assert_eq!(prod, x.pow(2).sub(&y.pow(2)));
        assert_eq!(prod.div_exact(&d).unwrap(), s);
        assert!(prod.div_exact(&x).is_err());
        assert_eq!(prod.degree_in(1), Some(2));
        assert_eq!(s.sub(&s), ExactPoly::zero(&["x", "y"]));
    }

    #[test]
    fn evaluation_and_substitution() {
        let (x, y) = xy();
        let p = x.mul(&x).add(&y.scale(&GR::from_ints(0, 2)));
        let v = [GR::from_ints(3, 0), GR::ratio(1, 2)];
        assert_eq!(p.eval(&v), GR::from_ints(9, 1));
        let q = p.substitute(0, &v[0]);
        assert_eq!(q.eval(&v), GR::from_ints(9, 1));
        assert_eq!(q.degree_in(0), Some(0));
        assert_eq!(p.coeff_in(0, 2), ExactPoly::constant(&["x", "y"], GR::one()));
    }

    #[test]
    fn univariate_and_terms() {
        let (x, y) = xy();
        let p = x.pow(2).add(&x.scale(&GR::ratio(-1, 3)));
        assert_eq!(p.to_univariate(0).unwrap(), vec![GR::zero(), GR::ratio(-1, 3), GR::one()]);
        assert!(p.add(&y).to_univariate(0).is_err());
        assert_eq!(p.term_list(), vec![(vec![1, 0], "-1/3".to_string()), (vec![2, 0], "1".to_string())]);
    }
}
