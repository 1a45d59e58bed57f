use num_traits::Zero;

use super::gaussian::GR;
use super::poly::ExactPoly;
use crate::error::{Error, Result};

/// Integral domain with exact division, enough for fraction-free elimination.
pub trait ExactRing: Clone {
    fn is_zero_elem(&self) -> bool;
    fn mul_elem(&self, o: &Self) -> Self;
    fn sub_elem(&self, o: &Self) -> Self;
    fn neg_elem(&self) -> Self;
    fn div_exact_elem(&self, o: &Self) -> Result<Self>;
}

impl ExactRing for GR {
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn mul_elem(&self, o: &Self) -> Self {
        self * o
    }
    fn sub_elem(&self, o: &Self) -> Self {
        self - o
    }
    fn neg_elem(&self) -> Self {
        -self
    }
    fn div_exact_elem(&self, o: &Self) -> Result<Self> {
        self.div(o)
    }
}

impl ExactRing for ExactPoly {
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn mul_elem(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn sub_elem(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn neg_elem(&self) -> Self {
        self.neg()
    }
    fn div_exact_elem(&self, o: &Self) -> Result<Self> {
        self.div_exact(o)
    }
}

/// Determinant by Bareiss fraction-free elimination; `zero` is returned
/// for a singular matrix.
pub fn bareiss_det<R: ExactRing>(mut a: Vec<Vec<R>>, zero: R) -> Result<R> {
    let n = a.len();
    if a.iter().any(|row| row.len() != n) {
        return Err(Error::Invalid("determinant of a non-square matrix".into()));
    }
    if n == 0 {
        return Err(Error::Invalid("determinant of an empty matrix".into()));
    }
    let mut negate = false;
    let mut prev: Option<R> = None;
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero_elem()) else { return Ok(zero) };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[i][j].mul_elem(&a[k][k]).sub_elem(&a[i][k].mul_elem(&a[k][j]));
                a[i][j] = match &prev {
                    Some(d) => t.div_exact_elem(d)?,
                    None => t,
                };
            }
        }
        prev = Some(a[k][k].clone());
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { d.neg_elem() } else { d })
}

/// Sylvester matrix of `p` and `q` in the variable `v_k`; entries are
/// coefficient polynomials in the other variables.
pub fn sylvester_matrix(p: &ExactPoly, q: &ExactPoly, k: usize) -> Result<Vec<Vec<ExactPoly>>> {
    let (Some(dp), Some(dq)) = (p.degree_in(k), q.degree_in(k)) else {
        return Err(Error::ZeroLeadingCoefficient);
    };
    if dp == 0 || dq == 0 {
        return Err(Error::Invalid("resultant inputs need positive degree".into()));
    }
    let (dp, dq) = (dp as usize, dq as usize);
    let size = dp + dq;
    let zero = p.zero_like();
    let pc: Vec<ExactPoly> = (0..=dp).rev().map(|d| p.coeff_in(k, d as u32)).collect();
    let qc: Vec<ExactPoly> = (0..=dq).rev().map(|d| q.coeff_in(k, d as u32)).collect();
    let mut rows = Vec::with_capacity(size);
    for s in 0..dq {
        let mut row = vec![zero.clone(); size];
        row[s..s + dp + 1].clone_from_slice(&pc);
        rows.push(row);
    }
    for s in 0..dp {
        let mut row = vec![zero.clone(); size];
        row[s..s + dq + 1].clone_from_slice(&qc);
        rows.push(row);
    }
    Ok(rows)
}

/// `Res_{v_k}(p, q)`, with the degrees read off the terms.
pub fn sylvester_resultant(p: &ExactPoly, q: &ExactPoly, k: usize) -> Result<ExactPoly> {
    if p.vars() != q.vars() {
        return Err(Error::Invalid("resultant inputs use different variables".into()));
    }
    let zero = p.zero_like();
    bareiss_det(sylvester_matrix(p, q, k)?, zero)
}

/// Determinant of a matrix of Gaussian rationals.
pub fn det_gr(a: Vec<Vec<GR>>) -> Result<GR> {
    bareiss_det(a, GR::zero())
}
