//! Flow/focal operation checks. Expected values come from the printed
//! curvature tables or from hand computations with the tanh/coth addition
//! laws (noted inline).

use hopfq_core::catalog::{instantiate, ExampleId};
use hopfq_core::config::{HopfConfig, PrincipalMultiset};
use hopfq_core::flow::{
    austere, det_factors, focal_multiset, focal_parameters, mean_curvature, parallel_config,
    phi_closure_check, reeb_pair, DetFactorSource, FlowError, FocalBranch, FocalReport, ReebPair,
    Side,
};
use hopfq_core::{MDim, Mult};
use hopfq_exact::{int, parse_scalar, rat, AlgebraicReal};

fn v(s: &str) -> AlgebraicReal {
    parse_scalar(s).unwrap()
}

fn sym(alpha: &str, spec: &[(&str, Mult)]) -> HopfConfig {
    HopfConfig::new(
        MDim::Symbolic,
        v(alpha),
        spec.iter().map(|(s, k)| (v(s), *k)).collect(),
    )
    .unwrap()
}

fn ex35_halves() -> HopfConfig {
    // Example 3.5 at t0 = 1/2, k = 2 (m = 4): alpha = 5/2, sigma = {1/2, 2}
    instantiate(ExampleId::E3_5, &rat(1, 2), MDim::Concrete(4)).unwrap()
}

#[test]
fn reeb_pair_examples() {
    // alpha = 0: mu = -1/lambda
    let p = reeb_pair(&int(0), &v("3/2")).unwrap();
    assert_eq!(p, ReebPair::Value(v("-2/3")));
    // alpha = lambda = sqrt2: mu = 0
    let s2 = v("sqrt(2)");
    assert_eq!(reeb_pair(&s2, &s2).unwrap(), ReebPair::Value(int(0)));
    // alpha = 5/2: tanh r = 1/2 and coth r = 2 are the fixed points
    let a = v("5/2");
    assert_eq!(reeb_pair(&a, &v("1/2")).unwrap(), ReebPair::Value(v("1/2")));
    assert_eq!(reeb_pair(&a, &int(2)).unwrap(), ReebPair::Value(int(2)));
    // involution
    let three = int(3);
    if let ReebPair::Value(mu) = reeb_pair(&three, &int(5)).unwrap() {
        assert_eq!(reeb_pair(&three, &mu).unwrap(), ReebPair::Value(int(5)));
    } else {
        panic!("nondegenerate");
    }
    // degenerate locus
    assert_eq!(reeb_pair(&int(2), &int(1)).unwrap(), ReebPair::Degenerate);
    assert!(reeb_pair(&int(-1), &int(1)).is_err());
}

#[test]
fn reeb_pair_fixed_points_iff_alpha_above_2() {
    // fixed points are (alpha +- sqrt(alpha^2-4))/2 when alpha > 2
    let a = v("5/2");
    let disc = a.square().sub(&int(4)).sqrt().unwrap();
    let plus = a.add(&disc).mul_rational(&rat(1, 2));
    let minus = a.sub(&disc).mul_rational(&rat(1, 2));
    for fp in [plus, minus] {
        assert_eq!(reeb_pair(&a, &fp).unwrap(), ReebPair::Value(fp.clone()));
    }
    // no real fixed point for alpha < 2: lambda^2 - alpha lambda + 1 > 0
    let roots = hopfq_exact::isolate_roots_in(
        &hopfq_exact::IntPoly::from_i64(&[1, -1, 1]),
        &hopfq_exact::Endpoint::NegInf,
        &hopfq_exact::Endpoint::PosInf,
    );
    assert!(roots.is_empty());
}

#[test]
fn phi_closure_examples() {
    // Example 3.5 at t0 = 1/2: both sigma(Q) values self-paired
    assert!(phi_closure_check(&ex35_halves()).pass());
    // Example 3.7: alpha = 1 pairs 1 <-> -1 with equal multiplicities
    let c = sym("1", &[("1", Mult::new(1, -2)), ("-1", Mult::new(1, -2))]);
    assert!(phi_closure_check(&c).pass());
    // alpha = 0 closure under -1/lambda
    let c = sym(
        "0",
        &[
            ("2", Mult::ONE),
            ("-1/2", Mult::ONE),
            ("1", Mult::new(1, -3)),
            ("-1", Mult::new(1, -3)),
        ],
    );
    assert!(phi_closure_check(&c).pass());
    // violation: mismatched multiplicities
    let c = sym("0", &[("2", Mult::new(1, -3)), ("-1/2", Mult::new(1, -1))]);
    assert!(!phi_closure_check(&c).pass());
    // violation: alpha = 2 without 1 in the spectrum
    let c = sym("2", &[("3", Mult::new(2, -4))]);
    assert!(!phi_closure_check(&c).pass());
}

#[test]
fn parallel_config_examples() {
    // Example 3.4 is a fixed point at any admissible t
    let c34 = sym("2", &[("1", Mult::new(2, -4))]);
    for t in ["1/4", "-1/4", "1/2", "-1/2"] {
        assert_eq!(parallel_config(&c34, &v(t)).unwrap(), c34);
    }
    // Example 3.5 at t0=1/2 flowed by -1/3: tanh addition gives t' = 5/7,
    // alpha' = 2coth(2r') = (1+(5/7)^2)/(5/7) = 74/35.
    let c = ex35_halves();
    let flowed = parallel_config(&c, &v("-1/3")).unwrap();
    let expected = instantiate(ExampleId::E3_5, &rat(5, 7), MDim::Concrete(4)).unwrap();
    assert_eq!(flowed, expected);
    assert_eq!(flowed.alpha().as_rational(), Some(rat(74, 35)));
    // t = 0 is the identity
    assert_eq!(parallel_config(&c, &int(0)).unwrap(), c);
    // |t| >= 1 rejected
    assert!(matches!(
        parallel_config(&c, &int(1)),
        Err(FlowError::ParamOutOfRange)
    ));
    // flowing into the focal collapse errors
    assert!(matches!(
        parallel_config(&c, &v("1/2")),
        Err(FlowError::FocalCollapse { .. })
    ));
    assert!(matches!(
        parallel_config(&c, &v("3/4")),
        Err(FlowError::FocalCollapse { .. })
    ));
}

#[test]
fn mean_curvature_examples() {
    let c34 = sym("2", &[("1", Mult::new(2, -4))]);
    for m in [3u32, 4, 7] {
        // 2 + (2m-4): trace at t = 0 is 2m - 2
        assert_eq!(
            mean_curvature(&c34, &int(0), m).unwrap(),
            int(2 * m as i64 - 2)
        );
    }
    let c36 = sym("0", &[("1", Mult::new(1, -2)), ("-1", Mult::new(1, -2))]);
    assert_eq!(mean_curvature(&c36, &int(0), 5).unwrap(), int(0));
    assert_eq!(mean_curvature(&ex35_halves(), &int(0), 4).unwrap(), v("15/2"));
}

#[test]
fn mean_curvature_agrees_with_full_multiset_trace() {
    // two independent routes: the H(t) formula vs the trace of the flowed
    // full multiset (the 0-block contributes 0)
    let configs = [
        ex35_halves(),
        instantiate(ExampleId::E3_9, &rat(1, 3), MDim::Concrete(5)).unwrap(),
        instantiate(ExampleId::E3_6, &rat(1, 2), MDim::Concrete(3)).unwrap(),
    ];
    for c in &configs {
        let m = c.m().concrete().unwrap();
        for t in ["0", "1/5", "-1/5", "1/4"] {
            let t = v(t);
            let h = mean_curvature(c, &t, m).unwrap();
            let flowed = parallel_config(c, &t).unwrap();
            let trace = flowed.full_multiset().weighted_trace(m);
            assert_eq!(h, trace, "config {:?} t {}", c, t);
        }
    }
}

#[test]
fn det_factors_examples() {
    // Example 3.4: no factor ever vanishes
    let c34 = sym("2", &[("1", Mult::new(2, -4))]);
    assert!(det_factors(&c34).iter().all(|f| f.zero_t.is_none()));
    // Example 3.5 at t0 = 1/2: sigma value 2 collapses at t = 1/2 and the
    // Reeb factor at (5/2 - 3/2)/2 = 1/2 simultaneously
    let fs = det_factors(&ex35_halves());
    let mut zeros = vec![];
    for f in fs {
        if let Some(z) = f.zero_t {
            zeros.push((f.source, z));
        }
    }
    assert_eq!(zeros.len(), 2);
    assert!(zeros.iter().all(|(_, z)| z.as_rational() == Some(rat(1, 2))));
    assert!(zeros
        .iter()
        .any(|(s, _)| matches!(s, DetFactorSource::Reeb)));
    // 1/lambda rule
    let c = sym(
        "0",
        &[
            ("-3", Mult::ONE),
            ("1/3", Mult::ONE),
            ("1", Mult::new(1, -3)),
            ("-1", Mult::new(1, -3)),
        ],
    );
    let fs = det_factors(&c);
    let zero: Vec<_> = fs.iter().filter_map(|f| f.zero_t.clone()).collect();
    assert_eq!(zero, vec![v("-1/3")]);
}

#[test]
fn focal_parameter_examples() {
    // Example 3.5 at t0=1/2: degenerate plus side, lambda_+ = 2, dim 2k
    match focal_parameters(&ex35_halves(), Side::Plus) {
        FocalReport::Present {
            lambda_star,
            t_star,
            branch,
            focal_dim,
            ..
        } => {
            assert_eq!(lambda_star, int(2));
            assert_eq!(t_star, v("1/2"));
            assert_eq!(branch, FocalBranch::Degenerate);
            assert_eq!(focal_dim.eval(4), 4); // 2k with k=2
        }
        _ => panic!("plus side exists"),
    }
    // Example 3.9 shape at t0=1/2 (alpha = 5/2): lambda_+ = 2 not in sigma(Q)
    let c39 = sym("5/2", &[("1", Mult::new(1, -2)), ("-1", Mult::new(1, -2))]);
    match focal_parameters(&c39, Side::Plus) {
        FocalReport::Present {
            lambda_star,
            branch,
            focal_dim,
            ..
        } => {
            assert_eq!(lambda_star, int(2));
            assert_eq!(branch, FocalBranch::Degenerate);
            assert_eq!(focal_dim, Mult::new(2, -2));
        }
        _ => panic!("plus side exists"),
    }
    // Example 3.6: no focal side at all
    let c36 = sym("0", &[("1", Mult::new(1, -2)), ("-1", Mult::new(1, -2))]);
    assert!(!focal_parameters(&c36, Side::Plus).exists());
    assert!(!focal_parameters(&c36, Side::Minus).exists());
    // minus side via a negative value < -1
    let c = sym(
        "0",
        &[
            ("-3", Mult::ONE),
            ("1/3", Mult::ONE),
            ("1", Mult::new(1, -3)),
            ("-1", Mult::new(1, -3)),
        ],
    );
    match focal_parameters(&c, Side::Minus) {
        FocalReport::Present {
            lambda_star,
            t_star,
            branch,
            ..
        } => {
            assert_eq!(lambda_star, int(-3));
            assert_eq!(t_star, v("-1/3"));
            assert_eq!(branch, FocalBranch::Minus);
        }
        _ => panic!("minus side exists"),
    }
}

#[test]
fn focal_multiset_examples() {
    // Example 3.5 at t0=1/2: totally geodesic CH^k, all entries 0, total 2k
    let (ms, dim) = focal_multiset(&ex35_halves(), Side::Plus).unwrap();
    assert_eq!(ms.len(), 1);
    assert_eq!(ms.get(&int(0)), Some(Mult::new(1, 0)));
    assert_eq!(dim.eval(4), 4);
    assert!(austere(&ms));

    // Example 3.9 shape: {0:2, 1:m-2, -1:m-2}, austere
    let c39 = sym("5/2", &[("1", Mult::new(1, -2)), ("-1", Mult::new(1, -2))]);
    let (ms, dim) = focal_multiset(&c39, Side::Plus).unwrap();
    assert_eq!(ms.get(&int(0)), Some(Mult::constant(2)));
    assert_eq!(ms.get(&int(1)), Some(Mult::new(1, -2)));
    assert_eq!(ms.get(&int(-1)), Some(Mult::new(1, -2)));
    assert_eq!(dim, Mult::new(2, -2));
    assert!(austere(&ms));

    // the g=4 Case-i-1 alpha=2, lambda=-1 candidate: distinct focal values
    // exactly {2, 0, 1, -1}, not austere
    let cand = HopfConfig::new(
        MDim::Concrete(4),
        int(2),
        vec![
            (int(2), Mult::ONE),
            (int(1), Mult::constant(2)),
            (int(-1), Mult::ONE),
        ],
    )
    .unwrap();
    let (ms, _) = focal_multiset(&cand, Side::Plus).unwrap();
    let values: Vec<AlgebraicReal> = ms.values().cloned().collect();
    assert_eq!(values, vec![int(-1), int(0), int(1), int(2)]);
    assert!(!austere(&ms));

    // side-absent error
    let c36 = sym("0", &[("1", Mult::new(1, -2)), ("-1", Mult::new(1, -2))]);
    assert!(matches!(
        focal_multiset(&c36, Side::Plus),
        Err(FlowError::SideAbsent)
    ));
}

#[test]
fn focal_value_map_is_monotone() {
    // Prop 4.3/4.4 ordering: (L li - 1)/(L - li) strictly increasing in li
    // on both sides; checked on a grid of exact inputs.
    let l_plus = v("5/2");
    let mut last: Option<AlgebraicReal> = None;
    for li in ["-2", "-1", "-1/2", "0", "1/2", "1", "2", "12/5"] {
        let li = v(li);
        let f = l_plus
            .mul(&li)
            .sub(&int(1))
            .div(&l_plus.sub(&li))
            .unwrap();
        if let Some(prev) = last {
            assert_eq!(prev.compare(&f), std::cmp::Ordering::Less);
        }
        last = Some(f);
    }
    let l_minus = v("-5/2");
    let mut last: Option<AlgebraicReal> = None;
    for li in ["-12/5", "-2", "-1", "0", "1", "2"] {
        let li = v(li);
        let f = l_minus
            .mul(&li)
            .sub(&int(1))
            .div(&l_minus.sub(&li))
            .unwrap();
        if let Some(prev) = last {
            assert_eq!(prev.compare(&f), std::cmp::Ordering::Less);
        }
        last = Some(f);
    }
}

#[test]
fn focal_dimension_bookkeeping() {
    // total multiplicity of the focal multiset equals focal_dim
    let configs = [
        ex35_halves(),
        instantiate(ExampleId::E3_9, &rat(1, 3), MDim::Concrete(3)).unwrap(),
        instantiate(ExampleId::E3_9, &rat(2, 5), MDim::Concrete(6)).unwrap(),
    ];
    for c in &configs {
        let (ms, dim) = focal_multiset(c, Side::Plus).unwrap();
        assert_eq!(ms.total(), dim);
    }
}
