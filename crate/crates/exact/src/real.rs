//! Exact real algebraic numbers.
//!
//! A value is a square-free primitive integer polynomial together with an
//! open rational interval containing exactly one of its real roots.
//! Rational values are normalized to a degree-1 polynomial. All arithmetic
//! is exact: sums/products go through resultants followed by square-free
//! reduction and isolating-interval selection; signs are decided by
//! interval refinement with an exact zero test, never floating point.

use crate::poly::{sign_of_rational, Int, IntPoly, Rational};
use crate::resultant::{resultant_add, resultant_mul};
use crate::sturm::{count_open_interval, isolate_real_roots, RootLoc};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RealError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("square root of a negative value")]
    NegativeSqrt,
    #[error("interval ({0}, {1}) does not isolate exactly one root")]
    NotIsolating(Rational, Rational),
}

/// An exact real algebraic number.
#[derive(Clone)]
pub struct AlgebraicReal {
    poly: IntPoly,
    lo: Rational,
    hi: Rational,
}

impl AlgebraicReal {
    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        let poly = IntPoly::linear_for_rational(&r);
        let lo = &r - Rational::one();
        let hi = &r + Rational::one();
        AlgebraicReal { poly, lo, hi }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from(Int::from(n)))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(Rational::new(Int::from(n), Int::from(d)))
    }

    /// The root of `poly` isolated by the open interval (lo, hi).
    pub fn from_root(poly: IntPoly, lo: Rational, hi: Rational) -> Result<Self, RealError> {
        if poly.is_zero() || poly.is_constant() {
            return Err(RealError::NotIsolating(lo, hi));
        }
        let sf = poly.squarefree_part();
        if sf.sign_at(&lo) == 0 || sf.sign_at(&hi) == 0 || count_open_interval(&sf, &lo, &hi) != 1
        {
            return Err(RealError::NotIsolating(lo, hi));
        }
        Ok(AlgebraicReal { poly: sf, lo, hi }.reduced())
    }

    fn from_rootloc(poly: &IntPoly, loc: &RootLoc) -> Self {
        match loc {
            RootLoc::Exact(r) => Self::from_rational(r.clone()),
            RootLoc::Interval(a, b) => AlgebraicReal {
                poly: poly.clone(),
                lo: a.clone(),
                hi: b.clone(),
            }
            .reduced(),
        }
    }

    pub fn minpoly(&self) -> &IntPoly {
        &self.poly
    }

    /// Rational value if this is stored in degree-1 form.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.poly.deg() == 1 {
            let c0 = self.poly.coeff(0);
            let c1 = self.poly.coeff(1);
            Some(Rational::new(-c0, c1))
        } else {
            None
        }
    }

    pub fn is_rational(&self) -> bool {
        self.poly.deg() == 1
    }

    /// Current bounds; exact point for rational values.
    pub fn bounds(&self) -> (Rational, Rational) {
        match self.as_rational() {
            Some(r) => (r.clone(), r),
            None => (self.lo.clone(), self.hi.clone()),
        }
    }

    fn refine_step(&mut self) {
        if self.is_rational() {
            return;
        }
        let two = Rational::from(Int::from(2));
        let mid = (&self.lo + &self.hi) / two;
        match self.poly.sign_at(&mid) {
            0 => {
                *self = Self::from_rational(mid);
            }
            s => {
                if self.poly.sign_at(&self.lo) * s < 0 {
                    self.hi = mid;
                } else {
                    self.lo = mid;
                }
            }
        }
    }

    /// Shrink the isolating interval to length <= width (spec: `refine`).
    pub fn refine(&self, width: &Rational) -> (Rational, Rational) {
        assert!(width.is_positive(), "refine width must be positive");
        if let Some(r) = self.as_rational() {
            return (r.clone(), r);
        }
        let mut v = self.clone();
        while !v.is_rational() && &(&v.hi - &v.lo) > width {
            v.refine_step();
        }
        v.bounds()
    }

    /// Exact sign: -1, 0, or 1.
    pub fn sign(&self) -> i32 {
        if let Some(r) = self.as_rational() {
            return sign_of_rational(&r);
        }
        // The value is zero iff 0 is a root of the minpoly lying in the isolator.
        if self.poly.constant_term().is_zero()
            && self.lo.is_negative()
            && self.hi.is_positive()
        {
            return 0;
        }
        let mut v = self.clone();
        loop {
            if v.lo >= Rational::zero() {
                return 1;
            }
            if v.hi <= Rational::zero() {
                return -1;
            }
            if let Some(r) = v.as_rational() {
                return sign_of_rational(&r);
            }
            v.refine_step();
        }
    }

    pub fn is_zero_value(&self) -> bool {
        self.sign() == 0
    }

    pub fn is_one_value(&self) -> bool {
        self.as_rational().map_or(false, |r| r.is_one())
    }

    /// Square-free reduction bookkeeping plus rational-root collapse.
    fn reduced(mut self) -> Self {
        if self.poly.deg() == 1 {
            let r = self.as_rational().unwrap();
            return Self::from_rational(r);
        }
        if let Some(r) = self.detect_rational() {
            return Self::from_rational(r);
        }
        // Keep isolators at unit width or less.
        while !self.is_rational() && &self.hi - &self.lo > Rational::one() {
            self.refine_step();
        }
        self
    }

    /// Bounded rational-root detection: find whether the isolated root is
    /// p/q with q dividing the leading coefficient.
    fn detect_rational(&self) -> Option<Rational> {
        let lead = self.poly.leading().abs();
        let denoms = small_divisors(&lead, 24)?;
        let mut v = self.clone();
        for _ in 0..8 {
            v.refine_step();
            if let Some(r) = v.as_rational() {
                return Some(r);
            }
        }
        for q in &denoms {
            let qb = Rational::from(q.clone());
            let mut w = v.clone();
            // Shrink until at most two integer candidates for p remain.
            loop {
                let span = (&w.hi - &w.lo) * &qb;
                if span <= Rational::from(Int::from(2)) {
                    break;
                }
                w.refine_step();
                if let Some(r) = w.as_rational() {
                    return Some(r);
                }
            }
            let lo_scaled = &w.lo * &qb;
            let hi_scaled = &w.hi * &qb;
            let mut p = lo_scaled.ceil().to_integer();
            let p_hi = hi_scaled.floor().to_integer();
            while p <= p_hi {
                let cand = Rational::new(p.clone(), q.clone());
                if cand > w.lo && cand < w.hi && self.poly.sign_at(&cand) == 0 {
                    return Some(cand);
                }
                p += 1;
            }
        }
        None
    }

    pub fn neg(&self) -> Self {
        if let Some(r) = self.as_rational() {
            return Self::from_rational(-r);
        }
        AlgebraicReal {
            poly: self.poly.reflect().primitive_normalized(),
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }

    pub fn add_rational(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return self.clone();
        }
        if let Some(s) = self.as_rational() {
            return Self::from_rational(s + r);
        }
        AlgebraicReal {
            poly: self.poly.compose_linear(&Rational::one(), &(-r)),
            lo: &self.lo + r,
            hi: &self.hi + r,
        }
    }

    pub fn mul_rational(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        if r.is_one() {
            return self.clone();
        }
        if let Some(s) = self.as_rational() {
            return Self::from_rational(s * r);
        }
        let inv = Rational::one() / r;
        let poly = self
            .poly
            .compose_linear(&inv, &Rational::zero())
            .primitive_normalized();
        let (a, b) = (&self.lo * r, &self.hi * r);
        let (lo, hi) = if r.is_positive() { (a, b) } else { (b, a) };
        AlgebraicReal { poly, lo, hi }
    }

    pub fn add(&self, other: &Self) -> Self {
        match (self.as_rational(), other.as_rational()) {
            (Some(a), Some(b)) => Self::from_rational(a + b),
            (Some(a), None) => other.add_rational(&a),
            (None, Some(b)) => self.add_rational(&b),
            (None, None) => {
                let res = resultant_add(&self.poly, &other.poly).squarefree_part();
                let cands = isolate_real_roots(&res);
                let mut a = self.clone();
                let mut b = other.clone();
                loop {
                    let jlo = &a.lo + &b.lo;
                    let jhi = &a.hi + &b.hi;
                    if let Some(v) = select_candidate(&res, &cands, &jlo, &jhi) {
                        return v;
                    }
                    a.refine_step();
                    b.refine_step();
                    if let (Some(ra), Some(rb)) = (a.as_rational(), b.as_rational()) {
                        return Self::from_rational(ra + rb);
                    }
                    if let Some(ra) = a.as_rational() {
                        return b.add_rational(&ra);
                    }
                    if let Some(rb) = b.as_rational() {
                        return a.add_rational(&rb);
                    }
                }
            }
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        match (self.as_rational(), other.as_rational()) {
            (Some(a), Some(b)) => Self::from_rational(a * b),
            (Some(a), None) => other.mul_rational(&a),
            (None, Some(b)) => self.mul_rational(&b),
            (None, None) => {
                let (_, q) = other.poly.strip_zero_roots();
                let res = resultant_mul(&self.poly, &q).squarefree_part();
                let cands = isolate_real_roots(&res);
                let mut a = self.clone();
                let mut b = other.clone();
                loop {
                    let prods = [
                        &a.lo * &b.lo,
                        &a.lo * &b.hi,
                        &a.hi * &b.lo,
                        &a.hi * &b.hi,
                    ];
                    let jlo = prods.iter().min().unwrap().clone();
                    let jhi = prods.iter().max().unwrap().clone();
                    if let Some(v) = select_candidate(&res, &cands, &jlo, &jhi) {
                        return v;
                    }
                    a.refine_step();
                    b.refine_step();
                    if let Some(ra) = a.as_rational() {
                        return b.mul_rational(&ra);
                    }
                    if let Some(rb) = b.as_rational() {
                        return a.mul_rational(&rb);
                    }
                }
            }
        }
    }

    pub fn inv(&self) -> Result<Self, RealError> {
        if let Some(r) = self.as_rational() {
            if r.is_zero() {
                return Err(RealError::DivisionByZero);
            }
            return Ok(Self::from_rational(Rational::one() / r));
        }
        let mut v = self.clone();
        // Value is irrational, hence nonzero; push 0 strictly out of the interval.
        while !(v.lo.is_positive() || v.hi.is_negative()) {
            if v.is_rational() {
                break;
            }
            v.refine_step();
        }
        if let Some(r) = v.as_rational() {
            return Ok(Self::from_rational(Rational::one() / r));
        }
        let (_, stripped) = v.poly.strip_zero_roots();
        let poly = stripped.reverse().primitive_normalized();
        let lo = Rational::one() / &v.hi;
        let hi = Rational::one() / &v.lo;
        Ok(AlgebraicReal { poly, lo, hi }.reduced())
    }

    pub fn div(&self, other: &Self) -> Result<Self, RealError> {
        if other.sign() == 0 {
            return Err(RealError::DivisionByZero);
        }
        if let Some(b) = other.as_rational() {
            return Ok(self.mul_rational(&(Rational::one() / b)));
        }
        Ok(self.mul(&other.inv()?))
    }

    pub fn sqrt(&self) -> Result<Self, RealError> {
        match self.sign() {
            -1 => Err(RealError::NegativeSqrt),
            0 => Ok(Self::zero()),
            _ => {
                if let Some(r) = self.as_rational() {
                    let n = r.numer().clone();
                    let d = r.denom().clone();
                    let sn = n.sqrt();
                    let sd = d.sqrt();
                    if &sn * &sn == n && &sd * &sd == d {
                        return Ok(Self::from_rational(Rational::new(sn, sd)));
                    }
                }
                let (k, stripped) = self.poly.strip_zero_roots();
                let _ = k;
                let squared = stripped.compose_square().squarefree_part();
                let cands = isolate_real_roots(&squared);
                let mut v = self.clone();
                while v.lo <= Rational::zero() {
                    if v.as_rational().is_some() {
                        break;
                    }
                    v.refine_step();
                }
                loop {
                    let (vlo, vhi) = v.bounds();
                    let jlo = rat_sqrt_below(&vlo);
                    let jhi = rat_sqrt_above(&vhi);
                    if let Some(r) = select_candidate(&squared, &cands, &jlo, &jhi) {
                        return Ok(r);
                    }
                    v.refine_step();
                }
            }
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        // x^e as an eval_poly keeps the result's degree bounded by self's.
        match e {
            0 => Self::one(),
            1 => self.clone(),
            2 => self.square(),
            _ => {
                let mut coeffs = vec![Int::zero(); e as usize + 1];
                coeffs[e as usize] = Int::one();
                self.eval_poly(&IntPoly::new(coeffs))
            }
        }
    }

    /// v^2 without degree blowup: p(x) p(-x) is even, say E(x^2), and E
    /// annihilates v^2 with the same degree as p.
    pub fn square(&self) -> Self {
        if let Some(r) = self.as_rational() {
            return Self::from_rational(&r * &r);
        }
        let even = &self.poly * &self.poly.reflect();
        let e = even
            .try_decompose_square()
            .expect("p(x) p(-x) is an even polynomial");
        let sf = e.squarefree_part();
        let cands = isolate_real_roots(&sf);
        let mut v = self.clone();
        loop {
            let (lo, hi) = v.bounds();
            let (l2, h2) = (&lo * &lo, &hi * &hi);
            let (jlo, jhi) = if !lo.is_negative() {
                (l2, h2)
            } else if !hi.is_positive() {
                (h2, l2)
            } else {
                let m = if l2 > h2 { l2 } else { h2 };
                (Rational::zero(), m)
            };
            if let Some(r) = select_candidate(&sf, &cands, &jlo, &jhi) {
                return r;
            }
            v.refine_step();
            if let Some(r) = v.as_rational() {
                return Self::from_rational(&r * &r);
            }
        }
    }

    /// Exact three-way comparison: quick interval separation, then an exact
    /// equality decision by locating both values among the common roots of
    /// gcd(minpoly_a, minpoly_b), then separation by refinement.
    pub fn compare(&self, other: &Self) -> Ordering {
        let mut a = self.clone();
        let mut b = other.clone();
        for _ in 0..4 {
            if let (Some(ra), Some(rb)) = (a.as_rational(), b.as_rational()) {
                return ra.cmp(&rb);
            }
            if let Some(ord) = interval_separated(&a, &b) {
                return ord;
            }
            a.refine_step();
            b.refine_step();
        }
        if let (Some(ra), Some(rb)) = (a.as_rational(), b.as_rational()) {
            return ra.cmp(&rb);
        }
        // Equality is possible only at a common root of the two annihilators.
        let g = a.poly.gcd(&b.poly);
        if !g.is_constant() {
            let cands = isolate_real_roots(&g);
            if let (Some(i), Some(j)) = (locate_among(&a, &g, &cands), locate_among(&b, &g, &cands))
            {
                if i == j {
                    return Ordering::Equal;
                }
            }
        }
        // Distinct values: refinement separates.
        loop {
            if let Some(ord) = interval_separated(&a, &b) {
                return ord;
            }
            a.refine_step();
            b.refine_step();
            if let (Some(ra), Some(rb)) = (a.as_rational(), b.as_rational()) {
                return ra.cmp(&rb);
            }
        }
    }

    pub fn eq_value(&self, other: &Self) -> bool {
        self.compare(other) == Ordering::Equal
    }

    pub fn min_value(a: Self, b: Self) -> Self {
        if a.compare(&b) == Ordering::Greater {
            b
        } else {
            a
        }
    }

    pub fn max_value(a: Self, b: Self) -> Self {
        if a.compare(&b) == Ordering::Less {
            b
        } else {
            a
        }
    }

    /// Correctly rounded decimal rendering with `digits` fractional digits.
    pub fn to_decimal(&self, digits: u32) -> String {
        if let Some(r) = self.as_rational() {
            return format_rational_decimal(&r, digits);
        }
        let mut v = self.clone();
        loop {
            let (lo, hi) = v.bounds();
            let slo = format_rational_decimal(&lo, digits);
            let shi = format_rational_decimal(&hi, digits);
            if slo == shi {
                return slo;
            }
            v.refine_step();
            if v.is_rational() {
                return format_rational_decimal(&v.as_rational().unwrap(), digits);
            }
        }
    }

    /// Evaluate an integer polynomial at this value, exactly.
    ///
    /// The polynomial is reduced modulo the stored annihilator first, so the
    /// result's annihilator never exceeds this value's degree.
    pub fn eval_poly(&self, p: &IntPoly) -> Self {
        if let Some(r) = self.as_rational() {
            return Self::from_rational(p.eval_rational(&r));
        }
        let rem = p.rem_rational(&self.poly);
        if rem.iter().all(|c| c.is_zero()) {
            return Self::zero();
        }
        if rem.len() == 1 || rem.iter().skip(1).all(|c| c.is_zero()) {
            return Self::from_rational(rem[0].clone());
        }
        // Clear denominators: rem = N(y)/c.
        let mut den = Int::one();
        for q in &rem {
            den = den.lcm(q.denom());
        }
        let n = IntPoly::new(
            rem.iter()
                .map(|q| q.numer() * (&den / q.denom()))
                .collect(),
        );
        let res = crate::resultant::resultant_poly_of_root(&self.poly, &den, &n);
        let sf = res.squarefree_part();
        let cands = isolate_real_roots(&sf);
        let mut v = self.clone();
        loop {
            let (lo, hi) = v.bounds();
            let (jlo, jhi) = interval_eval(&rem, &lo, &hi);
            if let Some(r) = select_candidate(&sf, &cands, &jlo, &jhi) {
                return r;
            }
            v.refine_step();
            if let Some(r) = v.as_rational() {
                let mut acc = Rational::zero();
                for c in rem.iter().rev() {
                    acc = acc * &r + c;
                }
                return Self::from_rational(acc);
            }
        }
    }
}

/// Interval Horner evaluation of a rational-coefficient polynomial.
fn interval_eval(coeffs: &[Rational], lo: &Rational, hi: &Rational) -> (Rational, Rational) {
    let mut alo = Rational::zero();
    let mut ahi = Rational::zero();
    for c in coeffs.iter().rev() {
        // [alo, ahi] * [lo, hi]
        let prods = [&alo * lo, &alo * hi, &ahi * lo, &ahi * hi];
        let mut nlo = prods[0].clone();
        let mut nhi = prods[0].clone();
        for p in &prods[1..] {
            if p < &nlo {
                nlo = p.clone();
            }
            if p > &nhi {
                nhi = p.clone();
            }
        }
        alo = nlo + c;
        ahi = nhi + c;
    }
    (alo, ahi)
}

/// Strict interval separation (values inside open isolators; exact points
/// for rationals).
fn interval_separated(a: &AlgebraicReal, b: &AlgebraicReal) -> Option<Ordering> {
    let (alo, ahi) = a.bounds();
    let (blo, bhi) = b.bounds();
    let both_rational = a.is_rational() && b.is_rational();
    if ahi < blo || (ahi == blo && !both_rational) {
        return Some(Ordering::Less);
    }
    if bhi < alo || (bhi == alo && !both_rational) {
        return Some(Ordering::Greater);
    }
    None
}

/// If v is a root of g (g divides v's annihilator here), return the index of
/// the isolated g-root equal to v; None when g(v) != 0.
fn locate_among(v: &AlgebraicReal, g: &IntPoly, cands: &[RootLoc]) -> Option<usize> {
    if let Some(r) = v.as_rational() {
        if g.sign_at(&r) != 0 {
            return None;
        }
        return cands.iter().position(|c| match c {
            RootLoc::Exact(x) => x == &r,
            RootLoc::Interval(lo, hi) => lo < &r && &r < hi,
        });
    }
    // The only root of v's annihilator inside the isolator is v itself, and
    // g divides that annihilator, so a g-root inside the isolator must be v.
    let (lo, hi) = v.bounds();
    if count_open_interval(g, &lo, &hi) != 1 {
        return None;
    }
    let mut vv = v.clone();
    loop {
        let (lo, hi) = vv.bounds();
        let hits: Vec<usize> = cands
            .iter()
            .enumerate()
            .filter(|(_, c)| c.high() >= lo && c.low() <= hi)
            .map(|(i, _)| i)
            .collect();
        match hits.len() {
            0 => return None,
            1 => return Some(hits[0]),
            _ => {
                vv.refine_step();
                if let Some(r) = vv.as_rational() {
                    return cands.iter().position(|c| match c {
                        RootLoc::Exact(x) => x == &r,
                        RootLoc::Interval(clo, chi) => clo < &r && &r < chi,
                    });
                }
            }
        }
    }
}

/// Pick the unique isolated root compatible with the bracket (jlo, jhi).
fn select_candidate(
    poly: &IntPoly,
    cands: &[RootLoc],
    jlo: &Rational,
    jhi: &Rational,
) -> Option<AlgebraicReal> {
    let mut hit = None;
    for c in cands {
        let (clo, chi) = (c.low(), c.high());
        if &chi >= jlo && &clo <= jhi {
            if hit.is_some() {
                return None;
            }
            hit = Some(c);
        }
    }
    hit.map(|c| AlgebraicReal::from_rootloc(poly, c))
}

/// Largest integer-ish rational u with u^2 <= r (r >= 0).
fn rat_sqrt_below(r: &Rational) -> Rational {
    if !r.is_positive() {
        return Rational::zero();
    }
    // sqrt(n/d) = sqrt(n d)/d
    let nd = r.numer() * r.denom();
    let s = nd.sqrt();
    Rational::new(s, r.denom().clone())
}

/// Some rational v with v^2 >= r.
fn rat_sqrt_above(r: &Rational) -> Rational {
    if !r.is_positive() {
        return Rational::zero();
    }
    let nd = r.numer() * r.denom();
    let s = nd.sqrt() + 1;
    Rational::new(s, r.denom().clone())
}

/// All positive divisors if the factorization is small; None when it is not
/// worth enumerating. Trial division is kept short: this feeds a heuristic
/// rational-root collapse, not a completeness requirement.
fn small_divisors(n: &Int, cap: usize) -> Option<Vec<Int>> {
    if n.is_zero() {
        return None;
    }
    let mut m = n.abs();
    let mut primes: Vec<(Int, u32)> = vec![];
    let mut d = Int::from(2);
    let trial_limit = Int::from(1_000);
    while &d * &d <= m && d <= trial_limit {
        if (&m % &d).is_zero() {
            let mut e = 0;
            while (&m % &d).is_zero() {
                m /= &d;
                e += 1;
            }
            primes.push((d.clone(), e));
        }
        d += 1;
        if primes.len() > 6 {
            return None;
        }
    }
    if m > Int::one() {
        if m > Int::from(1_000_000) {
            return None;
        }
        primes.push((m, 1));
    }
    let mut divs = vec![Int::one()];
    for (p, e) in primes {
        let mut next = Vec::new();
        for d0 in &divs {
            let mut pw = Int::one();
            for _ in 0..=e {
                next.push(d0 * &pw);
                pw *= &p;
                if next.len() > cap {
                    return None;
                }
            }
        }
        divs = next;
    }
    divs.sort();
    divs.dedup();
    Some(divs)
}

fn format_rational_decimal(r: &Rational, digits: u32) -> String {
    let neg = r.is_negative();
    let a = r.abs();
    let scale = Int::from(10).pow(digits);
    // round half away from zero
    let scaled = a * Rational::from(scale.clone());
    let (q, rem) = scaled.numer().div_rem(scaled.denom());
    let q = if &rem * 2 >= *scaled.denom() { q + 1 } else { q };
    let (int_part, frac_part) = q.div_rem(&scale);
    let mut s = String::new();
    if neg && !(int_part.is_zero() && frac_part.is_zero()) {
        s.push('-');
    }
    s.push_str(&int_part.to_string());
    if digits > 0 {
        let f = frac_part.to_string();
        s.push('.');
        for _ in 0..(digits as usize - f.len()) {
            s.push('0');
        }
        s.push_str(&f);
    }
    s
}

impl PartialEq for AlgebraicReal {
    fn eq(&self, other: &Self) -> bool {
        self.eq_value(other)
    }
}

impl Eq for AlgebraicReal {}

impl PartialOrd for AlgebraicReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.compare(other))
    }
}

impl Ord for AlgebraicReal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl fmt::Debug for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(r) => write!(f, "AlgebraicReal({})", r),
            None => write!(
                f,
                "AlgebraicReal({} in ({}, {}))",
                self.poly, self.lo, self.hi
            ),
        }
    }
}

impl fmt::Display for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(r) => write!(f, "{}", r),
            None => write!(f, "≈{}", self.to_decimal(9)),
        }
    }
}

/// Open interval endpoint for root isolation domains.
#[derive(Clone, Debug)]
pub enum Endpoint {
    NegInf,
    PosInf,
    Value(AlgebraicReal),
}

impl Endpoint {
    pub fn value(v: AlgebraicReal) -> Self {
        Endpoint::Value(v)
    }
}

/// Distinct real roots of `p` inside the open interval (lo, hi), ascending.
pub fn isolate_roots_in(p: &IntPoly, lo: &Endpoint, hi: &Endpoint) -> Vec<AlgebraicReal> {
    if p.is_zero() {
        panic!("cannot isolate roots of the zero polynomial");
    }
    if p.is_constant() {
        return vec![];
    }
    let sf = p.squarefree_part();
    if sf.is_constant() {
        return vec![];
    }
    isolate_real_roots(&sf)
        .iter()
        .map(|loc| AlgebraicReal::from_rootloc(&sf, loc))
        .filter(|r| match lo {
            Endpoint::NegInf => true,
            Endpoint::PosInf => false,
            Endpoint::Value(v) => r.compare(v) == Ordering::Greater,
        })
        .filter(|r| match hi {
            Endpoint::PosInf => true,
            Endpoint::NegInf => false,
            Endpoint::Value(v) => r.compare(v) == Ordering::Less,
        })
        .collect()
}

/// Isolating rational intervals (pairwise disjoint) for roots in a domain.
pub fn isolating_intervals(
    p: &IntPoly,
    lo: &Endpoint,
    hi: &Endpoint,
) -> Vec<(Rational, Rational)> {
    let mut roots = isolate_roots_in(p, lo, hi);
    let two = Rational::from(Int::from(2));
    let mut out: Vec<(Rational, Rational)> = Vec::with_capacity(roots.len());
    let mut prev_hi: Option<Rational> = None;
    for i in 0..roots.len() {
        let emitted = if let Some(r) = roots[i].as_rational() {
            // Bring the next root's lower bound strictly above r first.
            if let Some(next) = roots.get_mut(i + 1) {
                while next.bounds().0 <= r {
                    next.refine_step();
                }
            }
            let mut eps = Rational::one();
            if let Some(ph) = &prev_hi {
                let gap = (&r - ph) / &two;
                if gap < eps {
                    eps = gap;
                }
            }
            if let Some(next) = roots.get(i + 1) {
                let gap = (&next.bounds().0 - &r) / &two;
                if gap < eps {
                    eps = gap;
                }
            }
            (&r - &eps, &r + &eps)
        } else {
            // Its open isolator excludes every other root; only the previous
            // emitted interval can overlap, so push the lower bound past it.
            if let Some(ph) = prev_hi.clone() {
                while !roots[i].is_rational() && roots[i].bounds().0 <= ph {
                    roots[i].refine_step();
                }
            }
            roots[i].bounds()
        };
        prev_hi = Some(emitted.1.clone());
        out.push(emitted);
    }
    out
}
