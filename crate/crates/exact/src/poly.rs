//! Dense univariate polynomials over `BigInt`.
//!
//! Coefficients are stored lowest degree first with no trailing zeros.
//! Everything downstream (Sturm chains, resultants, algebraic numbers)
//! reduces to arithmetic in this ring.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub type Int = BigInt;
pub type Rational = BigRational;

/// Integer polynomial, coefficients lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<Int>,
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({})", self)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if i == 0 {
                write!(f, "{}", a)?;
            } else {
                if !a.is_one() {
                    write!(f, "{}*", a)?;
                }
                if i == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{}", i)?;
                }
            }
        }
        Ok(())
    }
}

impl IntPoly {
    pub fn new(coeffs: Vec<Int>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPoly::constant(Int::one())
    }

    pub fn constant(c: Int) -> Self {
        IntPoly::new(vec![c])
    }

    /// The monomial x.
    pub fn x() -> Self {
        IntPoly::new(vec![Int::zero(), Int::one()])
    }

    /// q*x - p, the canonical degree-1 annihilator of p/q.
    pub fn linear_for_rational(r: &Rational) -> Self {
        IntPoly::new(vec![-r.numer().clone(), r.denom().clone()])
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Int {
        self.coeffs.get(i).cloned().unwrap_or_else(Int::zero)
    }

    pub fn leading(&self) -> &Int {
        self.coeffs.last().expect("leading coefficient of zero")
    }

    pub fn constant_term(&self) -> Int {
        self.coeff(0)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval_int(&self, x: &Int) -> Int {
        let mut acc = Int::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rational::from(c.clone());
        }
        acc
    }

    /// Sign of the value at a rational point.
    pub fn sign_at(&self, x: &Rational) -> i32 {
        // p(n/d) * d^deg is integral; same sign.
        if self.is_zero() {
            return 0;
        }
        let n = x.numer();
        let d = x.denom();
        let mut acc = Int::zero();
        let mut dpow = Int::one();
        // Horner from the top: acc = acc*n + c_i*d^(deg-i)
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            let _ = i;
            acc = acc * n + c * &dpow;
            dpow *= d;
        }
        // One extra multiplication happened on dpow; acc is sum c_i n^i d^(deg-i).
        sign_of(&acc)
    }

    /// Sign at +infinity (sign of leading coefficient); 0 for zero poly.
    pub fn sign_at_pos_inf(&self) -> i32 {
        if self.is_zero() {
            0
        } else {
            sign_of(self.leading())
        }
    }

    /// Sign at -infinity.
    pub fn sign_at_neg_inf(&self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let s = sign_of(self.leading());
        if self.deg() % 2 == 0 {
            s
        } else {
            -s
        }
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Int::from(i))
                .collect(),
        )
    }

    /// gcd of all coefficients, nonnegative. 0 for the zero polynomial.
    pub fn content(&self) -> Int {
        let mut g = Int::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide out the content and make the leading coefficient positive.
    pub fn primitive_normalized(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Divide out the (positive) content only; every value keeps its sign.
    pub fn primitive_keep_sign(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let g = self.content();
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn scale(&self, k: &Int) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// p(-x)
    pub fn reflect(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// x^deg * p(1/x) (coefficient reversal).
    pub fn reverse(&self) -> IntPoly {
        let mut v = self.coeffs.clone();
        v.reverse();
        IntPoly::new(v)
    }

    /// p(x^2)
    pub fn compose_square(&self) -> IntPoly {
        let mut v = vec![Int::zero(); self.coeffs.len() * 2];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[2 * i] = c.clone();
        }
        IntPoly::new(v)
    }

    /// If p(x) = q(x^2), return q.
    pub fn try_decompose_square(&self) -> Option<IntPoly> {
        if self.coeffs.iter().enumerate().any(|(i, c)| i % 2 == 1 && !c.is_zero()) {
            return None;
        }
        Some(IntPoly::new(
            self.coeffs.iter().step_by(2).cloned().collect(),
        ))
    }

    /// Primitive integer form of p(a*x + b) for rational a, b.
    pub fn compose_linear(&self, a: &Rational, b: &Rational) -> IntPoly {
        // Work over rationals, then clear denominators.
        let mut acc: Vec<Rational> = vec![];
        for c in self.coeffs.iter().rev() {
            // acc = acc * (a x + b) + c
            let mut next = vec![Rational::zero(); acc.len() + 1];
            for (i, q) in acc.iter().enumerate() {
                next[i + 1] += q * a;
                next[i] += q * b;
            }
            if next.is_empty() {
                next.push(Rational::zero());
            }
            next[0] += Rational::from(c.clone());
            acc = next;
        }
        rational_coeffs_to_primitive(&acc)
    }

    /// Multiply by x^k.
    pub fn shift_up(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![Int::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        IntPoly::new(v)
    }

    /// Remove the largest x^k factor, returning (k, p / x^k).
    pub fn strip_zero_roots(&self) -> (usize, IntPoly) {
        if self.is_zero() {
            return (0, IntPoly::zero());
        }
        let k = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0);
        (k, IntPoly::new(self.coeffs[k..].to_vec()))
    }

    /// Exact division; panics if not divisible (internal use only).
    pub fn div_exact(&self, d: &IntPoly) -> IntPoly {
        let (q, r) = self.div_rem_rational(d);
        assert!(r.iter().all(|c| c.is_zero()), "inexact polynomial division");
        rational_coeffs_to_int(&q)
    }

    /// Remainder of this polynomial modulo `d`, with rational coefficients.
    pub fn rem_rational(&self, d: &IntPoly) -> Vec<Rational> {
        self.div_rem_rational(d).1
    }

    /// Rational-coefficient long division; returns (quotient, remainder).
    fn div_rem_rational(&self, d: &IntPoly) -> (Vec<Rational>, Vec<Rational>) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem: Vec<Rational> = self
            .coeffs
            .iter()
            .map(|c| Rational::from(c.clone()))
            .collect();
        let dd = d.deg();
        let dlead = Rational::from(d.leading().clone());
        if self.is_zero() || self.deg() < dd {
            return (vec![], rem);
        }
        let mut quot = vec![Rational::zero(); self.deg() - dd + 1];
        for i in (dd..rem.len()).rev() {
            let c = rem[i].clone();
            if c.is_zero() {
                continue;
            }
            let q = c / &dlead;
            quot[i - dd] = q.clone();
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = &q * Rational::from(dc.clone());
                rem[i - dd + j] -= t;
            }
        }
        rem.truncate(dd);
        (quot, rem)
    }

    /// Primitive positive gcd via rational Euclid (degrees here are modest).
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive_normalized();
        let mut b = other.primitive_normalized();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            if b.is_zero() {
                return a.primitive_normalized();
            }
            let (_, r) = a.div_rem_rational(&b);
            let r = rational_coeffs_to_primitive(&r);
            a = b;
            b = r;
        }
    }

    /// Square-free part: p / gcd(p, p'), primitive with positive leading coefficient.
    pub fn squarefree_part(&self) -> IntPoly {
        assert!(!self.is_zero());
        let p = self.primitive_normalized();
        if p.deg() == 0 {
            return IntPoly::one();
        }
        let g = p.gcd(&p.derivative());
        if g.is_constant() {
            return p;
        }
        p.div_exact(&g).primitive_normalized()
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).is_constant()
    }

    /// Cauchy root bound: all real roots lie in (-B, B).
    pub fn root_bound(&self) -> Rational {
        assert!(!self.is_zero());
        let lead = self.leading().abs();
        let mut m = Int::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let a = c.abs();
            if a > m {
                m = a;
            }
        }
        Rational::one() + Rational::new(m, lead)
    }

    /// Synthetic substitution value list for building Sylvester matrices etc.
    pub fn to_rationals(&self) -> Vec<Rational> {
        self.coeffs
            .iter()
            .map(|c| Rational::from(c.clone()))
            .collect()
    }
}

pub fn sign_of(x: &Int) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

pub fn sign_of_rational(x: &Rational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Clear denominators and normalize content to 1 keeping the sign.
pub fn rational_coeffs_to_primitive(coeffs: &[Rational]) -> IntPoly {
    let mut lcm = Int::one();
    for c in coeffs {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<Int> = coeffs
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let p = IntPoly::new(ints);
    if p.is_zero() {
        return p;
    }
    let g = p.content();
    IntPoly::new(p.coeffs.iter().map(|c| c / &g).collect())
}

fn rational_coeffs_to_int(coeffs: &[Rational]) -> IntPoly {
    IntPoly::new(
        coeffs
            .iter()
            .map(|c| {
                assert!(c.is_integer(), "expected integral coefficient");
                c.to_integer()
            })
            .collect(),
    )
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) + rhs.coeff(i));
        }
        IntPoly::new(v)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) - rhs.coeff(i));
        }
        IntPoly::new(v)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![Int::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        IntPoly::new(v)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> IntPoly {
        IntPoly::from_i64(v)
    }

    #[test]
    fn arithmetic_and_normal_forms() {
        let a = p(&[1, 2, 3]);
        let b = p(&[0, 1]);
        assert_eq!(&a * &b, p(&[0, 1, 2, 3]));
        assert_eq!(&a + &(-&a), IntPoly::zero());
        assert_eq!(p(&[2, 4, 6]).primitive_normalized(), p(&[1, 2, 3]));
        assert_eq!(p(&[-2, 0, -4]).primitive_normalized(), p(&[1, 0, 2]));
    }

    #[test]
    fn gcd_and_squarefree() {
        // (x-1)^2 (x+2)
        let q = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[2, 1]);
        assert_eq!(q.squarefree_part(), &p(&[-1, 1]) * &p(&[2, 1]));
        assert!(p(&[-2, 0, 1]).is_squarefree());
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])), p(&[-1, 1]));
    }

    #[test]
    fn composition() {
        // p = x^2 - 2, p(x/2) cleared -> x^2 - 8
        let q = p(&[-2, 0, 1]).compose_linear(&Rational::new(Int::one(), Int::from(2)), &Rational::zero());
        assert_eq!(q, p(&[-8, 0, 1]));
        // p(x - 1) for x^2 - x - 1 -> golden ratio shifted: (x-1)^2 - (x-1) - 1 = x^2 - 3x + 1
        let q = p(&[-1, -1, 1]).compose_linear(&Rational::one(), &(-Rational::one()));
        assert_eq!(q, p(&[1, -3, 1]));
        assert_eq!(p(&[-2, 0, 1]).compose_square(), p(&[-2, 0, 0, 0, 1]));
        assert_eq!(
            p(&[-2, 0, 0, 0, 1]).try_decompose_square().unwrap(),
            p(&[-2, 0, 1])
        );
    }

    #[test]
    fn signs_and_bounds() {
        let q = p(&[-2, 0, 1]);
        assert_eq!(q.sign_at(&Rational::from(Int::from(1))), -1);
        assert_eq!(q.sign_at(&Rational::from(Int::from(2))), 1);
        assert_eq!(q.sign_at_neg_inf(), 1);
        assert_eq!(p(&[0, 1]).sign_at_neg_inf(), -1);
        assert!(q.root_bound() >= Rational::from(Int::from(2)));
    }
}
