//! Resultants for algebraic-number arithmetic.
//!
//! `Res_y(p(y), q(x-y))` annihilates sums and `Res_y(p(y), y^m q(x/y))`
//! annihilates products. Both are computed by evaluating x at integer
//! sample points (integer Sylvester determinants via Bareiss) and
//! interpolating, which keeps all arithmetic in `BigInt`.

use crate::poly::{IntPoly, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Determinant by fraction-free (Bareiss) elimination.
fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&i| !m[i][k].is_zero());
            match swap {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = &t / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Sylvester resultant of two integer polynomials (nonzero, as polys in one var).
pub fn resultant_int(f: &IntPoly, g: &IntPoly) -> BigInt {
    assert!(!f.is_zero() && !g.is_zero());
    let n = f.deg();
    let m = g.deg();
    if n == 0 {
        return pow_big(f.leading(), m);
    }
    if m == 0 {
        return pow_big(g.leading(), n);
    }
    let size = n + m;
    let mut mat = vec![vec![BigInt::zero(); size]; size];
    // m rows of f's coefficients (highest first), then n rows of g's.
    for r in 0..m {
        for (k, c) in f.coeffs().iter().rev().enumerate() {
            mat[r][r + k] = c.clone();
        }
    }
    for r in 0..n {
        for (k, c) in g.coeffs().iter().rev().enumerate() {
            mat[m + r][r + k] = c.clone();
        }
    }
    bareiss_det(mat)
}

fn pow_big(b: &BigInt, e: usize) -> BigInt {
    let mut acc = BigInt::one();
    for _ in 0..e {
        acc *= b;
    }
    acc
}

/// q(s - y) as a polynomial in y, for integer s.
fn shift_sub_y(q: &IntPoly, s: &BigInt) -> IntPoly {
    // Horner: acc(y) = acc(y) * (s - y) + q_j
    let lin = IntPoly::new(vec![s.clone(), BigInt::from(-1)]);
    let mut acc = IntPoly::zero();
    for c in q.coeffs().iter().rev() {
        acc = &(&acc * &lin) + &IntPoly::constant(c.clone());
    }
    acc
}

/// y^m q(s / y) as a polynomial in y, for integer s (q must have q(0) != 0).
fn homogenize_at(q: &IntPoly, s: &BigInt) -> IntPoly {
    let m = q.deg();
    let mut v = vec![BigInt::zero(); m + 1];
    let mut spow = BigInt::one();
    for (j, c) in q.coeffs().iter().enumerate() {
        v[m - j] = c * &spow;
        spow *= s;
    }
    IntPoly::new(v)
}

/// Interpolate an integer polynomial of degree <= deg_bound from samples.
fn interpolate(samples: &[(BigInt, BigInt)]) -> IntPoly {
    // Newton's divided differences over rationals, then clear (must be integral).
    let n = samples.len();
    let xs: Vec<Rational> = samples.iter().map(|(x, _)| Rational::from(x.clone())).collect();
    let mut coef: Vec<Rational> = samples
        .iter()
        .map(|(_, y)| Rational::from(y.clone()))
        .collect();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = &coef[i] - &coef[i - 1];
            let den = &xs[i] - &xs[i - j];
            coef[i] = num / den;
        }
    }
    // Expand Newton form.
    let mut poly: Vec<Rational> = vec![];
    for i in (0..n).rev() {
        // poly = poly * (x - xs[i]) + coef[i]
        let mut next = vec![Rational::zero(); poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            next[k + 1] += c;
            let t = c * &xs[i];
            next[k] -= t;
        }
        if next.is_empty() {
            next.push(Rational::zero());
        }
        next[0] += &coef[i];
        poly = next;
    }
    IntPoly::new(
        poly.iter()
            .map(|c| {
                assert!(c.is_integer(), "resultant interpolation not integral");
                c.to_integer()
            })
            .collect(),
    )
}

fn sample_points(n: usize) -> impl Iterator<Item = BigInt> {
    (0..).map(|k| {
        let half = (k + 1) / 2;
        let v = BigInt::from(half);
        if k % 2 == 1 {
            -v
        } else {
            v
        }
        .clone()
    })
    .take(n)
}

/// Polynomial with the sums a+b of roots of p and q among its roots.
pub fn resultant_add(p: &IntPoly, q: &IntPoly) -> IntPoly {
    let bound = p.deg() * q.deg();
    let mut samples = Vec::with_capacity(bound + 1);
    for s in sample_points(bound + 1) {
        let qy = shift_sub_y(q, &s);
        samples.push((s.clone(), resultant_int(p, &qy)));
    }
    interpolate(&samples)
}

/// Annihilator of N(alpha)/c over the roots alpha of q:
/// Res_y(q(y), c*x - N(y)), degree deg(q) in x.
pub fn resultant_poly_of_root(q: &IntPoly, c: &BigInt, n: &IntPoly) -> IntPoly {
    assert!(!q.is_zero() && !c.is_zero());
    let bound = q.deg();
    let mut samples = Vec::with_capacity(bound + 1);
    for s in sample_points(bound + 1) {
        // c*x0 - N(y) as a polynomial in y
        let shifted = &IntPoly::constant(c * &s) - n;
        let r = if shifted.is_zero() {
            BigInt::zero()
        } else {
            resultant_int(q, &shifted)
        };
        samples.push((s, r));
    }
    interpolate(&samples)
}

/// Polynomial with the products a*b of roots of p and q among its roots.
/// `q` must have a nonzero constant term.
pub fn resultant_mul(p: &IntPoly, q: &IntPoly) -> IntPoly {
    assert!(!q.constant_term().is_zero());
    let bound = p.deg() * q.deg();
    let mut samples = Vec::with_capacity(bound + 1);
    for s in sample_points(bound + 1) {
        let qy = homogenize_at(q, &s);
        samples.push((s.clone(), resultant_int(p, &qy)));
    }
    interpolate(&samples)
}
