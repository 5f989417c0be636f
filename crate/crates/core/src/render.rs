//! Exact scalar <-> JSON bridging.
//!
//! Values that are rational, quadratic, or biquadratic render as
//! scalar-expression strings (re-parsed and compared before emission, so a
//! rendered string always round-trips to the same value). Anything else is
//! emitted as an exact {minpoly, lo, hi} object; both forms are accepted on
//! input.

use hopfq_exact::{parse_scalar, AlgebraicReal, Int, IntPoly};
use hopfq_exact::Rational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::str::FromStr;

/// Wire form of an exact scalar.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum ScalarRepr {
    Expr(String),
    Exact {
        minpoly: Vec<String>,
        lo: String,
        hi: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarReprError {
    #[error("bad scalar expression: {0}")]
    Expr(String),
    #[error("bad exact scalar object: {0}")]
    Exact(String),
}

impl ScalarRepr {
    pub fn to_value(&self) -> Result<AlgebraicReal, ScalarReprError> {
        match self {
            ScalarRepr::Expr(s) => {
                parse_scalar(s).map_err(|e| ScalarReprError::Expr(e.to_string()))
            }
            ScalarRepr::Exact { minpoly, lo, hi } => {
                let coeffs: Result<Vec<Int>, _> = minpoly.iter().map(|c| Int::from_str(c)).collect();
                let coeffs = coeffs.map_err(|e| ScalarReprError::Exact(e.to_string()))?;
                let lo = parse_rational(lo).ok_or_else(|| ScalarReprError::Exact(lo.clone()))?;
                let hi = parse_rational(hi).ok_or_else(|| ScalarReprError::Exact(hi.clone()))?;
                AlgebraicReal::from_root(IntPoly::new(coeffs), lo, hi)
                    .map_err(|e| ScalarReprError::Exact(e.to_string()))
            }
        }
    }

    pub fn of(v: &AlgebraicReal) -> ScalarRepr {
        match render_expr(v) {
            Some(s) => ScalarRepr::Expr(s),
            None => {
                let width = hopfq_exact::rat(1, 1 << 20);
                let (lo, hi) = v.refine(&width);
                let (lo, hi) = if lo == hi {
                    // never happens for irrational values; keep an open interval
                    (lo.clone() - hopfq_exact::rat(1, 1), hi + hopfq_exact::rat(1, 1))
                } else {
                    (lo, hi)
                };
                ScalarRepr::Exact {
                    minpoly: v.minpoly().coeffs().iter().map(|c| c.to_string()).collect(),
                    lo: format_rational(&lo),
                    hi: format_rational(&hi),
                }
            }
        }
    }
}

fn parse_rational(s: &str) -> Option<Rational> {
    if let Some((n, d)) = s.split_once('/') {
        let n = Int::from_str(n.trim()).ok()?;
        let d = Int::from_str(d.trim()).ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rational::new(n, d))
    } else {
        Int::from_str(s.trim()).ok().map(Rational::from)
    }
}

pub fn format_rational(r: &Rational) -> String {
    if r.denom() == &Int::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Scalar-expression rendering for rational / quadratic / biquadratic values.
/// The candidate string is re-parsed and compared exactly before returning.
pub fn render_expr(v: &AlgebraicReal) -> Option<String> {
    if let Some(r) = v.as_rational() {
        return Some(format_rational(&r));
    }
    let p = v.minpoly();
    let candidate = match p.degree() {
        Some(2) => quadratic_expr(p, v)?,
        Some(4) => {
            // biquadratic a x^4 + c x^2 + e
            if !p.coeff(1).is_zero() || !p.coeff(3).is_zero() {
                return None;
            }
            let sq = v.square();
            let inner = render_expr(&sq)?;
            if v.sign() >= 0 {
                format!("sqrt({})", inner)
            } else {
                format!("-sqrt({})", inner)
            }
        }
        _ => return None,
    };
    let back = parse_scalar(&candidate).ok()?;
    if back.compare(v) == Ordering::Equal {
        Some(candidate)
    } else {
        None
    }
}

fn quadratic_expr(p: &IntPoly, v: &AlgebraicReal) -> Option<String> {
    let a = p.coeff(2);
    let b = p.coeff(1);
    let c = p.coeff(0);
    let disc = &b * &b - Int::from(4) * &a * &c;
    if !disc.is_positive() {
        return None;
    }
    let neg_b = -&b;
    let two_a = Int::from(2) * &a;
    for sign in ["+", "-"] {
        let num = if neg_b.is_zero() {
            if sign == "+" {
                format!("sqrt({})", disc)
            } else {
                format!("-sqrt({})", disc)
            }
        } else {
            format!("({}{}sqrt({}))", neg_b, sign, disc)
        };
        let cand = if two_a == Int::from(1) {
            num.clone()
        } else {
            format!("{}/({})", num, two_a)
        };
        if let Ok(back) = parse_scalar(&cand) {
            if back.compare(v) == Ordering::Equal {
                return Some(cand);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use hopfq_exact::int;

    fn roundtrip(v: &AlgebraicReal) {
        let repr = ScalarRepr::of(v);
        let back = repr.to_value().unwrap();
        assert_eq!(back.compare(v), Ordering::Equal, "{:?}", repr);
    }

    #[test]
    fn renders_rationals_and_quadratics() {
        assert_eq!(render_expr(&int(2)), Some("2".into()));
        assert_eq!(
            render_expr(&AlgebraicReal::from_ratio(-3, 4)),
            Some("-3/4".into())
        );
        let s2 = int(2).sqrt().unwrap();
        let r = render_expr(&s2).unwrap();
        assert_eq!(parse_scalar(&r).unwrap(), s2);
        let phi = parse_scalar("(1+sqrt(5))/2").unwrap();
        let r = render_expr(&phi).unwrap();
        assert_eq!(parse_scalar(&r).unwrap(), phi);
        roundtrip(&phi.neg());
    }

    #[test]
    fn renders_biquadratics() {
        let alpha = parse_scalar("sqrt((sqrt(13)+1)/3)").unwrap();
        let r = render_expr(&alpha).unwrap();
        assert_eq!(parse_scalar(&r).unwrap(), alpha);
        roundtrip(&alpha.neg());
        roundtrip(&parse_scalar("sqrt(7/2+sqrt(13))").unwrap());
    }

    #[test]
    fn falls_back_to_exact_object() {
        // sqrt2 + sqrt3 has degree 4 with odd-degree coefficients absent but
        // minpoly x^4 - 10x^2 + 1: biquadratic, renders fine.
        let v = parse_scalar("sqrt(2)+sqrt(3)").unwrap();
        roundtrip(&v);
        // sqrt2 + sqrt3 + sqrt5: degree 8, falls back to the exact object.
        let w = parse_scalar("sqrt(2)+sqrt(3)+sqrt(5)").unwrap();
        let repr = ScalarRepr::of(&w);
        assert!(matches!(repr, ScalarRepr::Exact { .. }));
        roundtrip(&w);
    }
}
