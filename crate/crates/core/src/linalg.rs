//! Small dense complex linear algebra on top of `nalgebra`.

use nalgebra::{DMatrix, DVector};

use crate::tensor::C64;

pub type CMat = DMatrix<C64>;
pub type CVec = DVector<C64>;

/// Solves `a x = b` by LU with partial pivoting; `None` if singular.
pub fn solve(a: &CMat, b: &[C64]) -> Option<Vec<C64>> {
    let lu = a.clone().lu();
    let x = lu.solve(&CVec::from_column_slice(b))?;
    if x.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
        Some(x.iter().copied().collect())
    } else {
        None
    }
}

/// 2-norm condition number from singular values; infinite when singular.
pub fn condition_number(a: &CMat) -> f64 {
    let sv = a.clone().singular_values();
    let smax = sv.iter().copied().fold(0.0, f64::max);
    let smin = sv.iter().copied().fold(f64::INFINITY, f64::min);
    if smin == 0.0 || !smin.is_finite() {
        f64::INFINITY
    } else {
        smax / smin
    }
}

/// Minimum-norm least-squares solution of `a x = b` via SVD.
pub fn lstsq(a: &CMat, b: &[C64], rcond: f64) -> Option<Vec<C64>> {
    let svd = a.clone().svd(true, true);
    let smax = svd.singular_values.iter().copied().fold(0.0, f64::max);
    let x = svd.solve(&CVec::from_column_slice(b), rcond * smax).ok()?;
    Some(x.iter().copied().collect())
}

/// Basis of the null space of `a` from its reduced row echelon form.
///
/// Entries with modulus below `tol * max|a|` count as zero. A real input
/// produces a real basis.
pub fn nullspace(a: &CMat, tol: f64) -> Vec<Vec<C64>> {
    let (rows, cols) = a.shape();
    let mut r = a.clone();
    let scale = r.iter().map(|z| z.norm()).fold(0.0, f64::max).max(1e-300);
    let eps = tol * scale;
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let (p, best) = (row..rows)
            .map(|i| (i, r[(i, col)].norm()))
            .fold((row, -1.0), |acc, v| if v.1 > acc.1 { v } else { acc });
        if best <= eps {
            for i in row..rows {
                r[(i, col)] = C64::new(0.0, 0.0);
            }
            continue;
        }
        r.swap_rows(row, p);
        let piv = r[(row, col)];
        for j in 0..cols {
            r[(row, j)] /= piv;
        }
        for i in 0..rows {
            if i != row {
                let f = r[(i, col)];
                if f != C64::new(0.0, 0.0) {
                    for j in 0..cols {
                        let v = r[(row, j)];
                        r[(i, j)] -= f * v;
                    }
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![C64::new(0.0, 0.0); cols];
            v[fc] = C64::new(1.0, 0.0);
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -r[(i, fc)];
            }
            v
        })
        .collect()
}

/// Roots of `sum coeffs[k] z^k` from the companion matrix, Newton-polished.
pub fn poly_roots(coeffs: &[C64]) -> Vec<C64> {
    let mut c: Vec<C64> = coeffs.to_vec();
    while c.last().is_some_and(|z| z.norm() == 0.0) {
        c.pop();
    }
    let deg = c.len().saturating_sub(1);
    if deg == 0 {
        return Vec::new();
    }
    let lead = c[deg];
    let mut comp = CMat::zeros(deg, deg);
    for i in 1..deg {
        comp[(i, i - 1)] = C64::new(1.0, 0.0);
    }
    for i in 0..deg {
        comp[(i, deg - 1)] = -c[i] / lead;
    }
    let mut roots: Vec<C64> = comp.schur().eigenvalues().map(|v| v.iter().copied().collect()).unwrap_or_default();
    for r in roots.iter_mut() {
        *r = polish_root(&c, *r);
    }
    roots
}

fn polish_root(c: &[C64], mut z: C64) -> C64 {
    for _ in 0..8 {
        let (mut p, mut dp) = (C64::new(0.0, 0.0), C64::new(0.0, 0.0));
        for &a in c.iter().rev() {
            dp = dp * z + p;
            p = p * z + a;
        }
        if dp.norm() == 0.0 {
            break;
        }
        let step = p / dp;
        if !step.re.is_finite() || step.norm() > 1e-3 * (1.0 + z.norm()) {
            break;
        }
        z -= step;
        if step.norm() <= 1e-16 * (1.0 + z.norm()) {
            break;
        }
    }
    z
}

/// Expands `prod (z - r)` into coefficients, lowest degree first.
pub fn poly_from_roots(roots: &[C64]) -> Vec<C64> {
    let mut c = vec![C64::new(1.0, 0.0)];
    for &r in roots {
        let mut next = vec![C64::new(0.0, 0.0); c.len() + 1];
        for (k, &a) in c.iter().enumerate() {
            next[k + 1] += a;
            next[k] -= a * r;
        }
        c = next;
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    #[test]
    fn nullspace_of_zero_matrix_is_standard_basis() {
        let ns = nullspace(&CMat::zeros(3, 3), 1e-10);
        assert_eq!(ns.len(), 3);
        assert_eq!(ns[1], vec![c(0.), c(1.), c(0.)]);
    }

    #[test]
    fn nullspace_rank_one() {
        let a = CMat::from_row_slice(2, 2, &[c(1.), c(2.), c(2.), c(4.)]);
        let ns = nullspace(&a, 1e-10);
        assert_eq!(ns.len(), 1);
        assert!((ns[0][0] + c(2.)).norm() < 1e-14);
    }

    #[test]
    fn roots_round_trip() {
        let r = [c(1.), c(-2.), C64::new(0.5, 3.0)];
        let mut got = poly_roots(&poly_from_roots(&r));
        got.sort_by(|a, b| a.re.total_cmp(&b.re));
        assert!((got[0] - c(-2.)).norm() < 1e-12);
        assert!((got[1] - C64::new(0.5, 3.0)).norm() < 1e-12);
        assert!((got[2] - c(1.)).norm() < 1e-12);
    }

    #[test]
    fn singular_system_has_no_solution() {
        let a = CMat::from_row_slice(2, 2, &[c(1.), c(2.), c(2.), c(4.)]);
        assert!(solve(&a, &[c(1.), c(0.)]).is_none());
        assert!(condition_number(&a) > 1e15);
    }
}
