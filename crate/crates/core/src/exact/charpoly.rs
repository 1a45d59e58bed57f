use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::gaussian::GR;
use super::poly::ExactPoly;
use super::resultant::{det_gr, sylvester_resultant};
use super::ExactTensor;
use crate::error::{Error, Result};

/// `phi(lambda^2) = c2 lambda^6 + c4 lambda^4 + c6 lambda^2 + c8`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactCharPoly {
    pub c2: GR,
    pub c4: GR,
    pub c6: GR,
    pub c8: GR,
    pub method: CharPolyMethod,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CharPolyMethod {
    /// Iterated resultants of the tensor itself.
    Elimination,
    /// Exact interpolation of the coefficients along `A + eps B` at the
    /// given number of rational `eps`, read off at `eps = 0`.
    Interpolation { samples: usize },
}

impl ExactCharPoly {
    /// `[c2, c4, c6, c8]`.
    pub fn coefficients(&self) -> [GR; 4] {
        [self.c2.clone(), self.c4.clone(), self.c6.clone(), self.c8.clone()]
    }

    /// Coefficients in `lambda`, lowest degree first (degree 6).
    pub fn in_lambda(&self) -> Vec<GR> {
        let z = GR::zero;
        vec![self.c8.clone(), z(), self.c6.clone(), z(), self.c4.clone(), z(), self.c2.clone()]
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients().iter().all(Zero::is_zero)
    }
}

/// The six coefficients `(a, b, c, d, e, f)` of
/// `(A x^2)_1 = a x1^2 + b x1 x2 + c x2^2`, `(A x^2)_2 = d x1^2 + e x1 x2 + f x2^2`.
fn quadric_coeffs(a: &ExactTensor) -> [GR; 6] {
    let g = |i, j, k| a.get(&[i, j, k]).clone();
    [g(0, 0, 0), g(0, 0, 1) + g(0, 1, 0), g(0, 1, 1), g(1, 0, 0), g(1, 0, 1) + g(1, 1, 0), g(1, 1, 1)]
}

/// `(-a111 + a122 + a212 + a221)^2 + (a112 + a121 + a211 - a222)^2`.
pub fn sum_of_squares_222(a: &ExactTensor) -> Result<GR> {
    a.require_222()?;
    let [a1, b, c, d, e, f] = quadric_coeffs(a);
    let u = &(&c + &e) - &a1;
    let v = &(&b + &d) - &f;
    Ok(&(&u * &u) + &(&v * &v))
}

/// Resultant of the two binary quadrics of `A x^2`, the determinant of
/// `[a b c 0; 0 a b c; d e f 0; 0 d e f]`.
pub fn res_x_222(a: &ExactTensor) -> Result<GR> {
    a.require_222()?;
    let [a1, b, c, d, e, f] = quadric_coeffs(a);
    let z = GR::zero;
    det_gr(vec![
        vec![a1.clone(), b.clone(), c.clone(), z()],
        vec![z(), a1, b, c],
        vec![d.clone(), e.clone(), f.clone(), z()],
        vec![z(), d, e, f],
    ])
}

/// Degree-4 hyperdeterminant of a 2x2x2 tensor.
pub fn hyperdeterminant_222(a: &ExactTensor) -> Result<GR> {
    a.require_222()?;
    let g = |i: usize, j: usize, k: usize| a.get(&[i - 1, j - 1, k - 1]).clone();
    let p = |xs: &[GR]| xs.iter().fold(GR::one(), |acc, x| &acc * x);
    let sq = |x: GR, y: GR| p(&[x.clone(), x, y.clone(), y]);
    let mut s = sq(g(1, 2, 2), g(2, 1, 1)) + sq(g(1, 2, 1), g(2, 1, 2)) + sq(g(1, 1, 2), g(2, 2, 1)) + sq(g(1, 1, 1), g(2, 2, 2));
    let twos = [
        p(&[g(1, 2, 1), g(1, 2, 2), g(2, 1, 1), g(2, 1, 2)]),
        p(&[g(1, 1, 2), g(1, 2, 2), g(2, 1, 1), g(2, 2, 1)]),
        p(&[g(1, 1, 2), g(1, 2, 1), g(2, 1, 2), g(2, 2, 1)]),
        p(&[g(1, 1, 1), g(1, 2, 2), g(2, 1, 1), g(2, 2, 2)]),
        p(&[g(1, 1, 1), g(1, 2, 1), g(2, 1, 2), g(2, 2, 2)]),
        p(&[g(1, 1, 1), g(1, 1, 2), g(2, 2, 1), g(2, 2, 2)]),
    ];
    let fours = [p(&[g(1, 1, 1), g(1, 2, 2), g(2, 1, 2), g(2, 2, 1)]), p(&[g(1, 1, 2), g(1, 2, 1), g(2, 1, 1), g(2, 2, 2)])];
    let two = GR::from_ints(2, 0);
    let four = GR::from_ints(4, 0);
    for t in twos {
        s = &s - &(&two * &t);
    }
    for t in fours {
        s = &s + &(&four * &t);
    }
    Ok(s)
}

/// Whether the characteristic polynomial vanishes identically.
pub fn is_singular_222(a: &ExactTensor) -> Result<bool> {
    Ok(charpoly_exact_2_3(a)?.is_zero())
}

const VARS: [&str; 3] = ["x1", "x2", "l"];

fn equations(a: &ExactTensor) -> [ExactPoly; 3] {
    let [a1, b, c, d, e, f] = quadric_coeffs(a);
    let v = |k| ExactPoly::var(&VARS, k);
    let (x1, x2, l) = (v(0), v(1), v(2));
    let quad = |p: &GR, q: &GR, r: &GR| x1.pow(2).scale(p).add(&x1.mul(&x2).scale(q)).add(&x2.pow(2).scale(r));
    let g1 = quad(&a1, &b, &c).sub(&l.mul(&x1));
    let g2 = quad(&d, &e, &f).sub(&l.mul(&x2));
    let g3 = x1.pow(2).add(&x2.pow(2)).sub(&ExactPoly::constant(&VARS, GR::one()));
    [g1, g2, g3]
}

/// `Res_{second}(Res_{first}(g1, g3), Res_{first}(g2, g3))` as a polynomial in `l`.
fn eliminate(g: &[ExactPoly; 3], first: usize, second: usize) -> Result<Vec<GR>> {
    let r1 = sylvester_resultant(&g[0], &g[2], first)?;
    let r2 = sylvester_resultant(&g[1], &g[2], first)?;
    sylvester_resultant(&r1, &r2, second)?.to_univariate(2)
}

fn trim(mut p: Vec<GR>) -> Vec<GR> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn monic(p: Vec<GR>) -> Result<Vec<GR>> {
    let p = trim(p);
    let Some(lead) = p.last().cloned() else { return Ok(p) };
    let inv = lead.inv()?;
    Ok(p.iter().map(|c| c * &inv).collect())
}

fn rem(a: &[GR], b: &[GR]) -> Result<Vec<GR>> {
    let b = trim(b.to_vec());
    let db = b.len().checked_sub(1).ok_or_else(|| Error::InexactDivision("remainder by zero".into()))?;
    let inv = b[db].inv()?;
    let mut r = trim(a.to_vec());
    while r.len() > db {
        let k = r.len() - 1;
        let q = &r[k] * &inv;
        for j in 0..=db {
            let t = &q * &b[j];
            r[k - db + j] = &r[k - db + j] - &t;
        }
        r = trim(r);
    }
    Ok(r)
}

/// Monic greatest common divisor over the Gaussian rationals.
fn gcd(a: Vec<GR>, b: Vec<GR>) -> Result<Vec<GR>> {
    let (mut a, mut b) = (trim(a), trim(b));
    while !b.is_empty() {
        let r = rem(&a, &b)?;
        a = b;
        b = r;
    }
    monic(a)
}

/// Elimination for one tensor; `None` when degeneracy hides the degree-6 factor.
fn by_elimination(a: &ExactTensor) -> Result<Option<[GR; 4]>> {
    let sos = sum_of_squares_222(a)?;
    if sos.is_zero() {
        return Ok(None);
    }
    let g = equations(a);
    let (Ok(r), Ok(r2)) = (eliminate(&g, 0, 1), eliminate(&g, 1, 0)) else { return Ok(None) };
    if trim(r.clone()).is_empty() || trim(r2.clone()).is_empty() {
        return Ok(None);
    }
    let common = gcd(r, r2)?;
    if common.len() != 7 || common.iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
        return Ok(None);
    }
    Ok(Some([sos.clone(), &sos * &common[4], &sos * &common[2], &sos * &common[0]]))
}

/// Lagrange value at `z` of the polynomial through `(xs[k], ys[k])`.
fn lagrange_at(xs: &[GR], ys: &[GR], z: &GR) -> Result<GR> {
    let mut acc = GR::zero();
    for (k, (xk, yk)) in xs.iter().zip(ys).enumerate() {
        let mut w = yk.clone();
        for (j, xj) in xs.iter().enumerate() {
            if j != k {
                w = &w * &(z - xj).div(&(xk - xj))?;
            }
        }
        acc += &w;
    }
    Ok(acc)
}

fn random_direction(rng: &mut ChaCha8Rng) -> ExactTensor {
    ExactTensor::from_fn(3, 2, |_| GR::from_ints(rng.random_range(-4..=4), rng.random_range(-4..=4)))
}

/// `C_i(A + eps B)` is a polynomial of degree at most 8 in `eps`; nine
/// generic samples fix it and a tenth checks it.
fn by_interpolation(a: &ExactTensor) -> Result<ExactCharPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0c8a_7222);
    for _ in 0..4 {
        let b = random_direction(&mut rng);
        let mut xs = Vec::new();
        let mut ys: Vec<[GR; 4]> = Vec::new();
        for k in 1..=40i64 {
            if xs.len() == 10 {
                break;
            }
            let eps = GR::ratio(k, 3);
            if let Some(c) = by_elimination(&a.add_scaled(&b, &eps)?)? {
                xs.push(eps);
                ys.push(c);
            }
        }
        if xs.len() < 10 {
            continue;
        }
        let zero = GR::zero();
        let mut out = Vec::with_capacity(4);
        let mut ok = true;
        for i in 0..4 {
            let col: Vec<GR> = ys.iter().map(|c| c[i].clone()).collect();
            if lagrange_at(&xs[..9], &col[..9], &xs[9])? != col[9] {
                ok = false;
                break;
            }
            out.push(lagrange_at(&xs[..9], &col[..9], &zero)?);
        }
        if ok {
            let [c2, c4, c6, c8]: [GR; 4] = out.try_into().expect("four coefficients");
            return Ok(ExactCharPoly { c2, c4, c6, c8, method: CharPolyMethod::Interpolation { samples: 10 } });
        }
    }
    Err(Error::Invalid("characteristic polynomial interpolation did not stabilize".into()))
}

/// Exact `phi_A(lambda^2)` of a 2x2x2 tensor, scaled so that `c2` is the
/// sum-of-squares leading form.
pub fn charpoly_exact_2_3(a: &ExactTensor) -> Result<ExactCharPoly> {
    a.require_222()?;
    match by_elimination(a)? {
        Some([c2, c4, c6, c8]) => Ok(ExactCharPoly { c2, c4, c6, c8, method: CharPolyMethod::Elimination }),
        None => by_interpolation(a),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn exact(t: &crate::Tensor) -> ExactTensor {
        ExactTensor::from_tensor(t).unwrap()
    }

    fn small_random(rng: &mut ChaCha8Rng) -> ExactTensor {
        ExactTensor::from_fn(3, 2, |_| GR::ratio(rng.random_range(-9..=9), rng.random_range(1..=4)))
    }

    #[test]
    fn hyperdeterminant_examples() {
        assert_eq!(hyperdeterminant_222(&exact(&catalog::all_ones(3, 2))).unwrap(), GR::zero());
        assert_eq!(hyperdeterminant_222(&exact(&catalog::singular_nonzero_det())).unwrap(), GR::from_ints(-1, 0));
        assert_eq!(hyperdeterminant_222(&exact(&crate::Tensor::zeros(3, 2))).unwrap(), GR::zero());
        assert!(hyperdeterminant_222(&exact(&crate::Tensor::zeros(3, 3))).is_err());
    }

    #[test]
    fn diagonal_charpoly() {
        let p = charpoly_exact_2_3(&exact(&catalog::diagonal_unit(3, 2))).unwrap();
        // roots mu = 1, 1, 1/2 and leading form 2
        assert_eq!(p.c2, GR::from_ints(2, 0));
        assert_eq!(p.c4, GR::from_ints(-5, 0));
        assert_eq!(p.c6, GR::from_ints(4, 0));
        assert_eq!(p.c8, GR::from_ints(-1, 0));
    }

    #[test]
    fn generic_elimination_matches_interpolation() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let a = small_random(&mut rng);
        let e = charpoly_exact_2_3(&a).unwrap();
        assert_eq!(e.method, CharPolyMethod::Elimination);
        let i = by_interpolation(&a).unwrap();
        assert_eq!(e.coefficients(), i.coefficients());
    }

    #[test]
    fn singular_examples() {
        assert!(is_singular_222(&exact(&catalog::fineprint())).unwrap());
        let t = ExactTensor::from_fn(3, 2, |i| match i {
            [0, 0, 0] | [0, 1, 1] => GR::one(),
            [0, 0, 1] => GR::from_ints(2, 0),
            [0, 1, 0] => GR::from_ints(-2, 0),
            [1, 0, 1] => GR::from_ints(3, 0),
            [1, 1, 0] => GR::from_ints(-3, 0),
            _ => GR::zero(),
        });
        assert!(is_singular_222(&t).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        assert!(!is_singular_222(&small_random(&mut rng)).unwrap());
    }

    #[test]
    fn gcd_of_products() {
        let p = |v: &[i64]| v.iter().map(|&k| GR::from_ints(k, 0)).collect::<Vec<_>>();
        // (z - 1)(z + 2) and (z - 1)(z - 3)
        let g = gcd(p(&[-2, 1, 1]), p(&[3, -4, 1])).unwrap();
        assert_eq!(g, p(&[-1, 1]));
    }
}
