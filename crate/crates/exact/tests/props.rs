//! Property tests for the scalar layer: field axioms on random small
//! algebraic values, sqrt/square cancellation, order consistency against
//! an interval-refinement oracle, and isolation-count cross-checks.

use hopfq_exact::sturm::count_distinct_real_roots;
use hopfq_exact::{int, isolate_roots_in, rat, AlgebraicReal, Endpoint, IntPoly, Rational};
use proptest::prelude::*;
use std::cmp::Ordering;

/// Small algebraic values: rationals plus a few quadratic irrationals.
fn small_value() -> impl Strategy<Value = AlgebraicReal> {
    prop_oneof![
        (-20i64..=20, 1i64..=6).prop_map(|(n, d)| AlgebraicReal::from_rational(rat(n, d))),
        (1i64..=12).prop_map(|n| int(n).sqrt().unwrap()),
        (1i64..=6, 1i64..=4).prop_map(|(n, d)| AlgebraicReal::from_rational(rat(n, d))
            .sqrt()
            .unwrap()),
        ((-6i64..=6), (1i64..=10)).prop_map(|(a, n)| int(a).add(&int(n).sqrt().unwrap())),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn add_then_subtract_cancels(x in small_value(), y in small_value()) {
        let back = x.add(&y).sub(&y);
        prop_assert_eq!(back.compare(&x), Ordering::Equal);
    }

    #[test]
    fn mul_then_divide_cancels(x in small_value(), y in small_value()) {
        prop_assume!(y.sign() != 0);
        let back = x.mul(&y).div(&y).unwrap();
        prop_assert_eq!(back.compare(&x), Ordering::Equal);
    }

    #[test]
    fn sqrt_squares_back(x in small_value()) {
        prop_assume!(x.sign() >= 0);
        let s = x.sqrt().unwrap();
        prop_assert_eq!(s.square().compare(&x), Ordering::Equal);
        prop_assert!(s.sign() >= 0);
    }

    #[test]
    fn compare_matches_refinement_oracle(x in small_value(), y in small_value()) {
        // 50-digit interval oracle
        let width = Rational::new(1.into(), num_bigint::BigInt::from(10u8).pow(50));
        let (xl, xh) = x.refine(&width);
        let (yl, yh) = y.refine(&width);
        match x.compare(&y) {
            Ordering::Less => prop_assert!(xh <= yl || xl < yl),
            Ordering::Greater => prop_assert!(yh <= xl || yl < xl),
            Ordering::Equal => {
                // equal values keep overlapping bounds and a zero difference
                prop_assert!(xl <= yh && yl <= xh);
                prop_assert_eq!(x.sub(&y).sign(), 0);
            }
        }
        // antisymmetry
        prop_assert_eq!(x.compare(&y), y.compare(&x).reverse());
    }

    #[test]
    fn results_satisfy_type_invariants(x in small_value(), y in small_value()) {
        for v in [x.add(&y), x.mul(&y), x.sub(&y)] {
            let p = v.minpoly();
            prop_assert!(p.is_squarefree());
            // re-constructing from the stored data must succeed (isolation holds)
            let (lo, hi) = v.bounds();
            if !v.is_rational() {
                let rebuilt = AlgebraicReal::from_root(p.clone(), lo, hi);
                prop_assert!(rebuilt.is_ok());
            }
        }
    }

    #[test]
    fn isolation_count_matches_sturm(coeffs in proptest::collection::vec(-9i64..=9, 2..6)) {
        let p = IntPoly::from_i64(&coeffs);
        prop_assume!(!p.is_zero() && p.degree().unwrap_or(0) >= 1);
        let roots = isolate_roots_in(&p, &Endpoint::NegInf, &Endpoint::PosInf);
        prop_assert_eq!(roots.len(), count_distinct_real_roots(&p));
        for w in roots.windows(2) {
            prop_assert_eq!(w[0].compare(&w[1]), Ordering::Less);
        }
    }

    #[test]
    fn total_order_transitive(x in small_value(), y in small_value(), z in small_value()) {
        let mut v = [x, y, z];
        v.sort();
        prop_assert!(v[0].compare(&v[1]) != Ordering::Greater);
        prop_assert!(v[1].compare(&v[2]) != Ordering::Greater);
        prop_assert!(v[0].compare(&v[2]) != Ordering::Greater);
    }
}
