//! One-variable symbolic expressions (A + B*sqrt(R)) / (C + D*sqrt(R)) over
//! integer polynomials, with exact sign determination and equation solving
//! on open domains with algebraic endpoints.
//!
//! This is the engine behind the symbolic branches of the case analysis:
//! the free variable is the branch's alpha or the unknown spectrum value
//! lambda, and the radicand R is either absent, the constant 2, or
//! alpha^2 - 4. Division never rationalizes (that would plant removable
//! singularities); zeros of A + B*sqrt(R) are located inside A^2 - B^2 R
//! and confirmed by sign conditions, so nothing is ever decided numerically.

use hopfq_exact::{isolate_roots_in, AlgebraicReal, Endpoint, IntPoly, Rational};
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymError {
    #[error("radicand mismatch between operands")]
    RadicandMismatch,
    #[error("division by an identically zero expression")]
    DivisionByZero,
    #[error("expression is identically zero on the domain")]
    IdenticallyZero,
    #[error("expression has a zero inside the domain at {0}")]
    HasZero(String),
    #[error("denominator vanishes inside the domain at {0}")]
    Undefined(String),
    #[error("radicand is not positive on the domain")]
    RadicandNotPositive,
    #[error("empty domain")]
    EmptyDomain,
    #[error("evaluation error: {0}")]
    Eval(String),
}

/// Open interval endpoint.
#[derive(Clone, Debug)]
pub enum DomEnd {
    NegInf,
    PosInf,
    At(AlgebraicReal),
}

impl DomEnd {
    fn to_exact(&self) -> Endpoint {
        match self {
            DomEnd::NegInf => Endpoint::NegInf,
            DomEnd::PosInf => Endpoint::PosInf,
            DomEnd::At(v) => Endpoint::Value(v.clone()),
        }
    }
}

/// Open interval domain for the free variable.
#[derive(Clone, Debug)]
pub struct Domain {
    pub lo: DomEnd,
    pub hi: DomEnd,
}

impl Domain {
    pub fn open(lo: AlgebraicReal, hi: AlgebraicReal) -> Self {
        Domain {
            lo: DomEnd::At(lo),
            hi: DomEnd::At(hi),
        }
    }

    pub fn above(lo: AlgebraicReal) -> Self {
        Domain {
            lo: DomEnd::At(lo),
            hi: DomEnd::PosInf,
        }
    }

    pub fn below(hi: AlgebraicReal) -> Self {
        Domain {
            lo: DomEnd::NegInf,
            hi: DomEnd::At(hi),
        }
    }

    pub fn all() -> Self {
        Domain {
            lo: DomEnd::NegInf,
            hi: DomEnd::PosInf,
        }
    }

    pub fn contains(&self, x: &AlgebraicReal) -> bool {
        let lo_ok = match &self.lo {
            DomEnd::NegInf => true,
            DomEnd::PosInf => false,
            DomEnd::At(v) => x.compare(v) == Ordering::Greater,
        };
        let hi_ok = match &self.hi {
            DomEnd::PosInf => true,
            DomEnd::NegInf => false,
            DomEnd::At(v) => x.compare(v) == Ordering::Less,
        };
        lo_ok && hi_ok
    }

    /// A rational point strictly inside the (nonempty) domain.
    pub fn sample(&self) -> Result<Rational, SymError> {
        let width = hopfq_exact::rat(1, 16);
        match (&self.lo, &self.hi) {
            (DomEnd::NegInf, DomEnd::PosInf) => Ok(Rational::zero()),
            (DomEnd::NegInf, DomEnd::At(v)) => {
                let (l, _) = v.refine(&width);
                Ok(l - Rational::one())
            }
            (DomEnd::At(v), DomEnd::PosInf) => {
                let (_, h) = v.refine(&width);
                Ok(h + Rational::one())
            }
            (DomEnd::At(a), DomEnd::At(b)) => {
                if a.compare(b) != Ordering::Less {
                    return Err(SymError::EmptyDomain);
                }
                let mut w = width;
                loop {
                    let (_, ah) = a.refine(&w);
                    let (bl, _) = b.refine(&w);
                    if ah < bl {
                        return Ok((ah + bl) / hopfq_exact::rat(2, 1));
                    }
                    w /= hopfq_exact::rat(4, 1);
                }
            }
            _ => Err(SymError::EmptyDomain),
        }
    }

    pub fn describe(&self) -> String {
        let lo = match &self.lo {
            DomEnd::NegInf => "-inf".to_string(),
            DomEnd::PosInf => "+inf".to_string(),
            DomEnd::At(v) => v.to_string(),
        };
        let hi = match &self.hi {
            DomEnd::NegInf => "-inf".to_string(),
            DomEnd::PosInf => "+inf".to_string(),
            DomEnd::At(v) => v.to_string(),
        };
        format!("({}, {})", lo, hi)
    }
}

/// a + b * sqrt(rad) with integer-polynomial components.
#[derive(Clone, PartialEq, Eq)]
struct QPair {
    a: IntPoly,
    b: IntPoly,
}

impl QPair {
    fn from_poly(p: IntPoly) -> QPair {
        QPair {
            a: p,
            b: IntPoly::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn neg(&self) -> QPair {
        QPair {
            a: -&self.a,
            b: -&self.b,
        }
    }

    fn add(&self, o: &QPair) -> QPair {
        QPair {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
        }
    }

    fn mul(&self, o: &QPair, rad: &IntPoly) -> QPair {
        QPair {
            a: &(&self.a * &o.a) + &(&(&self.b * &o.b) * rad),
            b: &(&self.a * &o.b) + &(&o.a * &self.b),
        }
    }

    /// a^2 - b^2 rad: vanishes wherever a + b sqrt(rad) does.
    fn cleared(&self, rad: &IntPoly) -> IntPoly {
        if self.b.is_zero() {
            return self.a.primitive_normalized();
        }
        let z = &(&self.a * &self.a) - &(&(&self.b * &self.b) * rad);
        z.primitive_normalized()
    }

    fn uses_radical(&self) -> bool {
        !self.b.is_zero()
    }
}

/// (num.a + num.b W) / (den.a + den.b W) with W = sqrt(rad); rad = 1 encodes
/// a rational expression (sqrt(1) folds into the polynomial parts).
#[derive(Clone, PartialEq, Eq)]
pub struct Sym {
    num: QPair,
    den: QPair,
    rad: IntPoly,
}

impl fmt::Debug for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |p: &QPair| {
            if p.b.is_zero() {
                format!("{}", p.a)
            } else {
                format!("{} + ({}) * sqrt({})", p.a, p.b, self.rad)
            }
        };
        if self.den.b.is_zero() && self.den.a == IntPoly::one() {
            write!(f, "({})", part(&self.num))
        } else {
            write!(f, "({}) / ({})", part(&self.num), part(&self.den))
        }
    }
}

impl Sym {
    fn make(num: QPair, den: QPair, rad: IntPoly) -> Sym {
        assert!(!den.is_zero(), "zero denominator in symbolic expression");
        let mut s = Sym { num, den, rad };
        s.normalize();
        s
    }

    pub fn var() -> Self {
        Sym::make(
            QPair::from_poly(IntPoly::x()),
            QPair::from_poly(IntPoly::one()),
            IntPoly::one(),
        )
    }

    pub fn from_int(n: i64) -> Self {
        Sym::from_poly(IntPoly::from_i64(&[n]))
    }

    pub fn from_rat(r: &Rational) -> Self {
        Sym::make(
            QPair::from_poly(IntPoly::constant(r.numer().clone())),
            QPair::from_poly(IntPoly::constant(r.denom().clone())),
            IntPoly::one(),
        )
    }

    pub fn from_poly(p: IntPoly) -> Self {
        Sym::make(
            QPair::from_poly(p),
            QPair::from_poly(IntPoly::one()),
            IntPoly::one(),
        )
    }

    /// sqrt(rad) itself.
    pub fn radical(rad: IntPoly) -> Self {
        Sym::make(
            QPair {
                a: IntPoly::zero(),
                b: IntPoly::one(),
            },
            QPair::from_poly(IntPoly::one()),
            rad,
        )
    }

    pub fn is_identically_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn normalize(&mut self) {
        if !self.num.uses_radical() && !self.den.uses_radical() {
            self.rad = IntPoly::one();
        }
        if self.rad == IntPoly::one() {
            // sqrt(1) = 1: fold radical parts into the polynomial parts.
            if self.num.uses_radical() {
                self.num = QPair::from_poly(&self.num.a + &self.num.b);
            }
            if self.den.uses_radical() {
                self.den = QPair::from_poly(&self.den.a + &self.den.b);
            }
        }
        if self.num.is_zero() {
            self.den = QPair::from_poly(IntPoly::one());
            if !self.rad_in_use() {
                self.rad = IntPoly::one();
            }
            return;
        }
        self.trim_common();
        // For a constant radicand d the coefficients live in the field
        // Q(sqrt(d)) and num/den can be reduced by their polynomial gcd,
        // which keeps cleared numerators minimal.
        if self.rad.is_constant() && self.rad != IntPoly::one() {
            let d = Rational::from(self.rad.constant_term());
            if d.is_positive() {
                quadext::reduce_fraction(&mut self.num, &mut self.den, &d);
                self.trim_common();
            }
        }
    }

    fn trim_common(&mut self) {
        // Common integer content of all four components.
        let mut g = self.num.a.content();
        for p in [&self.num.b, &self.den.a, &self.den.b] {
            g = num_integer::Integer::gcd(&g, &p.content());
        }
        if !g.is_zero() && !g.is_one() {
            self.num.a = self.num.a.div_exact(&IntPoly::constant(g.clone()));
            self.num.b = self.num.b.div_exact(&IntPoly::constant(g.clone()));
            self.den.a = self.den.a.div_exact(&IntPoly::constant(g.clone()));
            self.den.b = self.den.b.div_exact(&IntPoly::constant(g));
        }
        // Common polynomial factor of all four components.
        let mut pg = self.num.a.gcd(&self.num.b);
        pg = pg.gcd(&self.den.a);
        pg = pg.gcd(&self.den.b);
        if !pg.is_zero() && !pg.is_constant() {
            self.num.a = self.num.a.div_exact(&pg);
            self.num.b = self.num.b.div_exact(&pg);
            self.den.a = self.den.a.div_exact(&pg);
            self.den.b = self.den.b.div_exact(&pg);
        }
    }

    fn rad_in_use(&self) -> bool {
        self.num.uses_radical() || self.den.uses_radical()
    }

    fn unify(x: &Sym, y: &Sym) -> Result<(Sym, Sym), SymError> {
        if x.rad == y.rad {
            return Ok((x.clone(), y.clone()));
        }
        if !x.rad_in_use() {
            let mut xx = x.clone();
            xx.rad = y.rad.clone();
            return Ok((xx, y.clone()));
        }
        if !y.rad_in_use() {
            let mut yy = y.clone();
            yy.rad = x.rad.clone();
            return Ok((x.clone(), yy));
        }
        Err(SymError::RadicandMismatch)
    }

    pub fn add(&self, other: &Sym) -> Result<Sym, SymError> {
        let (x, y) = Sym::unify(self, other)?;
        let num = x
            .num
            .mul(&y.den, &x.rad)
            .add(&y.num.mul(&x.den, &x.rad));
        let den = x.den.mul(&y.den, &x.rad);
        Ok(Sym::make(num, den, x.rad))
    }

    pub fn sub(&self, other: &Sym) -> Result<Sym, SymError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Sym {
        Sym::make(self.num.neg(), self.den.clone(), self.rad.clone())
    }

    pub fn mul(&self, other: &Sym) -> Result<Sym, SymError> {
        let (x, y) = Sym::unify(self, other)?;
        Ok(Sym::make(
            x.num.mul(&y.num, &x.rad),
            x.den.mul(&y.den, &x.rad),
            x.rad,
        ))
    }

    pub fn div(&self, other: &Sym) -> Result<Sym, SymError> {
        if other.is_identically_zero() {
            return Err(SymError::DivisionByZero);
        }
        let (x, y) = Sym::unify(self, other)?;
        Ok(Sym::make(
            x.num.mul(&y.den, &x.rad),
            x.den.mul(&y.num, &x.rad),
            x.rad,
        ))
    }

    pub fn mul_int(&self, k: i64) -> Sym {
        let kk = IntPoly::from_i64(&[k]);
        Sym::make(
            QPair {
                a: &self.num.a * &kk,
                b: &self.num.b * &kk,
            },
            self.den.clone(),
            self.rad.clone(),
        )
    }

    /// The cleared numerator polynomial: num.a itself when no radical is
    /// present, otherwise num.a^2 - num.b^2 * rad; every zero of the
    /// expression is a root of it. Primitive, positive leading coefficient.
    pub fn cleared_numerator(&self) -> IntPoly {
        self.num.cleared(&self.rad)
    }

    /// Exact evaluation at a point (the radicand must be nonnegative there).
    pub fn eval(&self, x: &AlgebraicReal) -> Result<AlgebraicReal, SymError> {
        let den = self.eval_pair(&self.den, x)?;
        if den.sign() == 0 {
            return Err(SymError::Undefined(x.to_string()));
        }
        let num = self.eval_pair(&self.num, x)?;
        Ok(num.div(&den).expect("nonzero denominator"))
    }

    fn eval_pair(&self, p: &QPair, x: &AlgebraicReal) -> Result<AlgebraicReal, SymError> {
        let a = x.eval_poly(&p.a);
        if p.b.is_zero() {
            return Ok(a);
        }
        let r = x.eval_poly(&self.rad);
        let w = r
            .sqrt()
            .map_err(|_| SymError::Eval("negative radicand".into()))?;
        Ok(a.add(&x.eval_poly(&p.b).mul(&w)))
    }

    fn pair_sign_at(&self, p: &QPair, x: &AlgebraicReal) -> Result<i32, SymError> {
        let sa = x.eval_poly(&p.a).sign();
        if p.b.is_zero() {
            return Ok(sa);
        }
        let sr = x.eval_poly(&self.rad).sign();
        if sr < 0 {
            return Err(SymError::Eval("negative radicand".into()));
        }
        if sr == 0 {
            return Ok(sa);
        }
        let sb = x.eval_poly(&p.b).sign();
        Ok(match (sa, sb) {
            (0, s) | (s, 0) => s,
            (s, t) if s == t => s,
            (s, _) => {
                // opposite signs: compare a^2 against b^2 rad
                let diff = &(&p.a * &p.a) - &(&(&p.b * &p.b) * &self.rad);
                let sd = x.eval_poly(&diff).sign();
                if sd == 0 {
                    0
                } else if sd > 0 {
                    s
                } else {
                    -s
                }
            }
        })
    }

    /// Exact sign at a point via bounded-degree evaluations only.
    pub fn sign_at_point(&self, x: &AlgebraicReal) -> Result<i32, SymError> {
        let sd = self.pair_sign_at(&self.den, x)?;
        if sd == 0 {
            return Err(SymError::Undefined(x.to_string()));
        }
        Ok(self.pair_sign_at(&self.num, x)? * sd)
    }

    /// Exact zero test at a point.
    pub fn is_zero_at(&self, x: &AlgebraicReal) -> Result<bool, SymError> {
        Ok(self.sign_at_point(x)? == 0)
    }

    /// Genuine zeros of a pair inside the domain.
    fn pair_zeros_in(&self, p: &QPair, dom: &Domain) -> Result<Vec<AlgebraicReal>, SymError> {
        if p.is_zero() {
            return Err(SymError::IdenticallyZero);
        }
        let z = p.cleared(&self.rad);
        if z.is_constant() {
            return Ok(vec![]);
        }
        let cands = isolate_roots_in(&z, &dom.lo.to_exact(), &dom.hi.to_exact());
        let mut out = Vec::new();
        for r in cands {
            if self.pair_sign_at(p, &r)? == 0 {
                out.push(r);
            }
        }
        Ok(out)
    }

    /// Genuine zeros of the denominator inside the domain.
    pub fn denominator_zeros_in(&self, dom: &Domain) -> Result<Vec<AlgebraicReal>, SymError> {
        self.pair_zeros_in(&self.den, dom)
    }

    /// Genuine zeros of the expression inside the domain. Errors if the
    /// denominator vanishes somewhere in the domain.
    pub fn zeros_in(&self, dom: &Domain) -> Result<Vec<AlgebraicReal>, SymError> {
        if self.is_identically_zero() {
            return Err(SymError::IdenticallyZero);
        }
        if let Some(z) = self.denominator_zeros_in(dom)?.first() {
            return Err(SymError::Undefined(z.to_string()));
        }
        self.pair_zeros_in(&self.num, dom)
    }

    /// Constant exact sign on the whole domain, or the reason there is none.
    pub fn sign_in(&self, dom: &Domain) -> Result<i32, SymError> {
        if self.is_identically_zero() {
            return Err(SymError::IdenticallyZero);
        }
        // Radicand must stay positive where a radical is actually present.
        if self.rad_in_use() {
            let rad_roots =
                isolate_roots_in(&self.rad, &dom.lo.to_exact(), &dom.hi.to_exact());
            if !rad_roots.is_empty() {
                return Err(SymError::RadicandNotPositive);
            }
            let s = dom.sample()?;
            if self.rad.sign_at(&s) <= 0 {
                return Err(SymError::RadicandNotPositive);
            }
        }
        if let Some(z) = self.denominator_zeros_in(dom)?.first() {
            return Err(SymError::Undefined(z.to_string()));
        }
        let zeros = self.pair_zeros_in(&self.num, dom)?;
        if let Some(z) = zeros.first() {
            return Err(SymError::HasZero(z.to_string()));
        }
        let s = AlgebraicReal::from_rational(dom.sample()?);
        self.sign_at_point(&s)
    }
}

/// Polynomial gcd reduction over Q(sqrt(d)) for constant radicands.
mod quadext {
    use super::QPair;
    use hopfq_exact::{IntPoly, Rational};
    use num_traits::Zero;

    /// p + q sqrt(d)
    #[derive(Clone, PartialEq)]
    struct QE {
        p: Rational,
        q: Rational,
    }

    impl QE {
        fn zero() -> QE {
            QE {
                p: Rational::zero(),
                q: Rational::zero(),
            }
        }

        fn is_zero(&self) -> bool {
            self.p.is_zero() && self.q.is_zero()
        }

        fn sub_mul(&self, other: &QE, k: &QE, d: &Rational) -> QE {
            // self - other * k
            QE {
                p: &self.p - (&other.p * &k.p + &other.q * &k.q * d),
                q: &self.q - (&other.p * &k.q + &other.q * &k.p),
            }
        }

        fn div(&self, other: &QE, d: &Rational) -> QE {
            // (p + q w)/(r + s w) = (p + q w)(r - s w)/(r^2 - s^2 d)
            let norm = &other.p * &other.p - &other.q * &other.q * d;
            assert!(!norm.is_zero(), "nonzero Q(sqrt d) element has nonzero norm");
            QE {
                p: (&self.p * &other.p - &self.q * &other.q * d) / &norm,
                q: (&self.q * &other.p - &self.p * &other.q) / &norm,
            }
        }
    }

    type QEPoly = Vec<QE>;

    fn trim(v: &mut QEPoly) {
        while matches!(v.last(), Some(c) if c.is_zero()) {
            v.pop();
        }
    }

    fn from_pair(p: &QPair) -> QEPoly {
        let n = p.a.coeffs().len().max(p.b.coeffs().len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(QE {
                p: Rational::from(p.a.coeff(i)),
                q: Rational::from(p.b.coeff(i)),
            });
        }
        trim(&mut out);
        out
    }

    fn divrem(a: &QEPoly, b: &QEPoly, d: &Rational) -> (QEPoly, QEPoly) {
        assert!(!b.is_empty());
        let mut rem = a.clone();
        let mut quot = vec![QE::zero(); a.len().saturating_sub(b.len()) + 1];
        let blead = b.last().unwrap();
        while rem.len() >= b.len() && !rem.is_empty() {
            let k = rem.len() - b.len();
            let c = rem.last().unwrap().div(blead, d);
            quot[k] = c.clone();
            for (i, bc) in b.iter().enumerate() {
                rem[k + i] = rem[k + i].sub_mul(bc, &c, d);
            }
            // the leading term cancels exactly
            rem.pop();
            trim(&mut rem);
        }
        trim(&mut quot);
        (quot, rem)
    }

    fn gcd(a: &QEPoly, b: &QEPoly, d: &Rational) -> QEPoly {
        let mut x = a.clone();
        let mut y = b.clone();
        while !y.is_empty() {
            let (_, r) = divrem(&x, &y, d);
            x = y;
            y = r;
        }
        x
    }

    /// Integer pair equal to lcm * v, returning the lcm used.
    fn to_pair_scaled(v: &QEPoly) -> (QPair, num_bigint::BigInt) {
        let ps: Vec<Rational> = v.iter().map(|c| c.p.clone()).collect();
        let qs: Vec<Rational> = v.iter().map(|c| c.q.clone()).collect();
        let mut lcm = num_bigint::BigInt::from(1);
        for c in ps.iter().chain(qs.iter()) {
            lcm = num_integer::Integer::lcm(&lcm, c.denom());
        }
        let a = IntPoly::new(ps.iter().map(|c| c.numer() * (&lcm / c.denom())).collect());
        let b = IntPoly::new(qs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect());
        (QPair { a, b }, lcm)
    }

    /// Divide num and den by their gcd over Q(sqrt(d))[x], preserving the
    /// value of the fraction exactly.
    pub(super) fn reduce_fraction(num: &mut QPair, den: &mut QPair, d: &Rational) {
        if num.is_zero() {
            return;
        }
        let na = from_pair(num);
        let da = from_pair(den);
        if na.is_empty() || da.is_empty() {
            return;
        }
        let g = gcd(&na, &da, d);
        if g.len() <= 1 {
            return;
        }
        let (nq, nr) = divrem(&na, &g, d);
        let (dq, dr) = divrem(&da, &g, d);
        assert!(nr.is_empty() && dr.is_empty(), "gcd divides exactly");
        let (np, nl) = to_pair_scaled(&nq);
        let (dp, dl) = to_pair_scaled(&dq);
        // np = nl*nq and dp = dl*dq; cross-scaling keeps np'/dp' = nq/dq.
        *num = QPair {
            a: np.a.scale(&dl),
            b: np.b.scale(&dl),
        };
        *den = QPair {
            a: dp.a.scale(&nl),
            b: dp.b.scale(&nl),
        };
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hopfq_exact::{int, parse_scalar};

    fn x() -> Sym {
        Sym::var()
    }

    #[test]
    fn rational_function_arithmetic() {
        // (x^2 - 2)/x evaluated at 2 -> 1
        let e = x()
            .mul(&x())
            .unwrap()
            .sub(&Sym::from_int(2))
            .unwrap()
            .div(&x())
            .unwrap();
        assert_eq!(e.eval(&int(2)).unwrap(), int(1));
        // sign on (sqrt2, 2): x^2 - 2 > 0
        let s2 = int(2).sqrt().unwrap();
        let num = x().mul(&x()).unwrap().sub(&Sym::from_int(2)).unwrap();
        assert_eq!(num.sign_in(&Domain::open(s2.clone(), int(2))).unwrap(), 1);
        assert!(matches!(
            num.sign_in(&Domain::open(int(1), int(2))),
            Err(SymError::HasZero(_))
        ));
    }

    #[test]
    fn radical_expressions() {
        // w = sqrt(x^2 - 4) on (2, inf); x - w > 0 there
        let rad = IntPoly::from_i64(&[-4, 0, 1]);
        let w = Sym::radical(rad);
        let e = x().sub(&w).unwrap();
        let dom = Domain::above(int(2));
        assert_eq!(e.sign_in(&dom).unwrap(), 1);
        // (x - w)/2 evaluated at 5/2 -> (5/2 - 3/2)/2 = 1/2
        let half = e.div(&Sym::from_int(2)).unwrap();
        let v = half.eval(&AlgebraicReal::from_ratio(5, 2)).unwrap();
        assert_eq!(v, AlgebraicReal::from_ratio(1, 2));
    }

    #[test]
    fn zero_location_with_radical_filtering() {
        // x - sqrt(2) has cleared numerator x^2 - 2 with roots +-sqrt2,
        // but only +sqrt2 is a genuine zero.
        let e = x().sub(&Sym::radical(IntPoly::from_i64(&[2]))).unwrap();
        let zeros = e.zeros_in(&Domain::all()).unwrap();
        assert_eq!(zeros.len(), 1);
        assert_eq!(zeros[0], parse_scalar("sqrt(2)").unwrap());
        assert_eq!(e.cleared_numerator(), IntPoly::from_i64(&[-2, 0, 1]));
    }

    #[test]
    fn division_keeps_true_poles_only() {
        // mu = (sqrt2 x - 2)/(2x - sqrt2) is defined everywhere except
        // x = 1/sqrt2; in particular at x = -1/sqrt2.
        let s2 = Sym::radical(IntPoly::from_i64(&[2]));
        let num = s2.mul(&x()).unwrap().sub(&Sym::from_int(2)).unwrap();
        let den = x().mul_int(2).sub(&s2).unwrap();
        let mu = num.div(&den).unwrap();
        let neg_inv_s2 = parse_scalar("-1/sqrt(2)").unwrap();
        let v = mu.eval(&neg_inv_s2).unwrap();
        // (-1 - 2)/(-sqrt2 - sqrt2) = 3/(2 sqrt2)
        let expect = parse_scalar("3/(2*sqrt(2))").unwrap();
        assert_eq!(v, expect);
        // sign on (-inf, 0): positive, no spurious pole at -1/sqrt2
        assert_eq!(mu.sign_in(&Domain::below(int(0))).unwrap(), 1);
        // true pole detected
        assert!(matches!(
            mu.sign_in(&Domain::open(int(0), int(1))),
            Err(SymError::Undefined(_))
        ));
    }

    #[test]
    fn domain_sampling() {
        let s2 = int(2).sqrt().unwrap();
        let d = Domain::open(s2, int(2));
        let s = d.sample().unwrap();
        assert!(s > hopfq_exact::rat(14, 10) && s < hopfq_exact::rat(2, 1));
    }
}
