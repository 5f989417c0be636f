//! Sturm chains and real root isolation over rational intervals.
//!
//! The chain uses sign-faithful integer pseudo-remainders (positive
//! multipliers, content trimmed each step), so sign variation counts are
//! those of the exact rational Sturm sequence.

use crate::poly::{IntPoly, Rational};
use num_bigint::BigInt;
use num_traits::Signed;

/// Sign-faithful Sturm chain of `p`.
pub fn sturm_chain(p: &IntPoly) -> Vec<IntPoly> {
    let mut chain = Vec::new();
    let p0 = p.primitive_normalized();
    if p0.is_zero() {
        return chain;
    }
    chain.push(p0.clone());
    let p1 = p0.derivative();
    if p1.is_zero() {
        return chain;
    }
    chain.push(p1.primitive_keep_sign());
    loop {
        let n = chain.len();
        let r = neg_prem_sign_faithful(&chain[n - 2], &chain[n - 1]);
        if r.is_zero() {
            return chain;
        }
        chain.push(r);
        if chain.last().unwrap().is_constant() {
            return chain;
        }
    }
}

/// -prem(a, b) scaled so the total multiplier is positive, content trimmed.
fn neg_prem_sign_faithful(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.deg();
    let lead = b.leading().clone();
    let mut rem = a.clone();
    let mut steps = 0usize;
    while !rem.is_zero() && rem.deg() >= db {
        let k = rem.deg() - db;
        // rem = rem * lead - lc(rem) * x^k * b  (kills the leading term)
        let lc = rem.leading().clone();
        rem = &rem.scale(&lead) - &b.shift_up(k).scale(&lc);
        steps += 1;
    }
    // Multiplier applied so far is lead^steps; flip once more if it was negative.
    let mut r: IntPoly = IntPoly::new(rem.coeffs().iter().map(|c| -c).collect());
    if lead.is_negative() && steps % 2 == 1 {
        r = IntPoly::new(r.coeffs().iter().map(|c| -c).collect());
    }
    r.primitive_keep_sign()
}

fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut count = 0;
    let mut last = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

pub fn variations_at(chain: &[IntPoly], x: &Rational) -> usize {
    variations(chain.iter().map(|q| q.sign_at(x)))
}

pub fn variations_at_pos_inf(chain: &[IntPoly]) -> usize {
    variations(chain.iter().map(|q| q.sign_at_pos_inf()))
}

pub fn variations_at_neg_inf(chain: &[IntPoly]) -> usize {
    variations(chain.iter().map(|q| q.sign_at_neg_inf()))
}

/// Number of distinct real roots of the chain's polynomial in (a, b].
pub fn count_half_open(chain: &[IntPoly], a: &Rational, b: &Rational) -> usize {
    let va = variations_at(chain, a);
    let vb = variations_at(chain, b);
    va.saturating_sub(vb)
}

/// Number of distinct real roots on the whole line.
pub fn count_distinct_real_roots(p: &IntPoly) -> usize {
    if p.is_constant() {
        return 0;
    }
    let chain = sturm_chain(p);
    variations_at_neg_inf(&chain) - variations_at_pos_inf(&chain)
}

/// Location of one distinct real root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootLoc {
    Exact(Rational),
    /// Open interval with non-root endpoints containing exactly one root.
    Interval(Rational, Rational),
}

impl RootLoc {
    pub fn low(&self) -> Rational {
        match self {
            RootLoc::Exact(r) => r.clone(),
            RootLoc::Interval(a, _) => a.clone(),
        }
    }
    pub fn high(&self) -> Rational {
        match self {
            RootLoc::Exact(r) => r.clone(),
            RootLoc::Interval(_, b) => b.clone(),
        }
    }
}

/// Isolate all distinct real roots of a nonzero polynomial, in increasing order.
///
/// The polynomial need not be square-free; isolation runs on its square-free
/// part. Returned intervals are open, pairwise disjoint, and have non-root
/// endpoints.
pub fn isolate_real_roots(p: &IntPoly) -> Vec<RootLoc> {
    assert!(!p.is_zero(), "cannot isolate roots of the zero polynomial");
    if p.is_constant() {
        return vec![];
    }
    let sf = p.squarefree_part();
    if sf.is_constant() {
        return vec![];
    }
    let chain = sturm_chain(&sf);
    let bound = sf.root_bound();
    let lo = -&bound;
    let hi = bound.clone();
    let total = count_half_open(&chain, &lo, &hi);
    let mut out = Vec::new();
    let mut stack = vec![(lo, hi, total)];
    while let Some((a, b, n)) = stack.pop() {
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push(RootLoc::Interval(a, b));
            continue;
        }
        let mid = (&a + &b) / Rational::from(BigInt::from(2));
        if sf.sign_at(&mid) == 0 {
            out.push(RootLoc::Exact(mid.clone()));
            // Shrink away from the exact root so pushed endpoints are non-roots.
            let mut delta = (&b - &a) / Rational::from(BigInt::from(4));
            loop {
                let l = &mid - &delta;
                let r = &mid + &delta;
                let left_gap = count_half_open(&chain, &l, &mid); // (l, mid], contains mid
                let right_gap = count_half_open(&chain, &mid, &r); // (mid, r]
                if sf.sign_at(&l) != 0 && sf.sign_at(&r) != 0 && left_gap == 1 && right_gap == 0 {
                    let left_n = count_half_open(&chain, &a, &l);
                    let right_n = count_half_open(&chain, &r, &b);
                    stack.push((a, l, left_n));
                    stack.push((r, b, right_n));
                    break;
                }
                delta /= Rational::from(BigInt::from(2));
            }
        } else {
            let left_n = count_half_open(&chain, &a, &mid);
            let right_n = n - left_n;
            stack.push((a, mid.clone(), left_n));
            stack.push((mid, b, right_n));
        }
    }
    out.sort_by(|x, y| x.low().cmp(&y.low()).then(x.high().cmp(&y.high())));
    out
}

/// Exact count of distinct roots in the open rational interval (a, b).
pub fn count_open_interval(p: &IntPoly, a: &Rational, b: &Rational) -> usize {
    if a >= b {
        return 0;
    }
    let sf = p.squarefree_part();
    if sf.is_constant() {
        return 0;
    }
    let chain = sturm_chain(&sf);
    let mut n = count_half_open(&chain, a, b);
    if sf.sign_at(b) == 0 {
        n -= 1;
    }
    n
}
