//! Classifier checks: theorem reproduction, rule examples, the austere-sum
//! equations, catalog matching, soundness against the catalog, determinism,
//! and trace replay.

use hopfq_core::cartan::Scenario;
use hopfq_core::catalog::{instantiate, ExampleId};
use hopfq_core::classify::{
    apply_rule, austere_sum_equation, classify, match_example, outcome, rules::LambdaDesc,
    rules::RuleApp, soundness_findings, trace_forest_json, AustereBranch, Containment, Finding,
    Terminal,
};
use hopfq_core::config::{HopfConfig, PrincipalMultiset};
use hopfq_core::sym::Domain;
use hopfq_core::{MDim, Mult};
use hopfq_exact::{int, parse_scalar, rat, IntPoly};

#[test]
fn classify_g1_is_empty() {
    let r = classify(1);
    assert!(r.outcomes.is_empty());
    assert!(r
        .traces
        .iter()
        .all(|t| matches!(t.terminal, Terminal::Eliminated { .. })));
}

#[test]
fn classify_g2_gives_example_3_1() {
    let r = classify(2);
    assert_eq!(r.outcomes.len(), 1);
    let o = &r.outcomes[0];
    assert_eq!(o.id, "thm-1.1a");
    assert_eq!(
        o.matched,
        vec![(ExampleId::E3_1, Containment::OpenPartOf)]
    );
    assert_eq!(o.mult_pattern(), vec![Mult::new(1, 0), Mult::new(1, -1)]);
}

#[test]
fn classify_g3_gives_theorem_1_1b() {
    let r = classify(3);
    let ids: Vec<&str> = r.outcomes.iter().map(|o| o.id.as_str()).collect();
    assert_eq!(
        ids,
        vec![
            "thm-1.1b-1-principal",
            "thm-1.1b-1-reeb",
            "thm-1.1b-2",
            "thm-1.1b-3"
        ]
    );
    // the three multiplicity patterns printed in the theorem
    let patterns: Vec<Vec<Mult>> = r.outcomes.iter().map(|o| o.mult_pattern()).collect();
    assert!(patterns.contains(&vec![Mult::ONE, Mult::new(1, -1), Mult::new(1, -1)]));
    assert!(patterns.contains(&vec![
        Mult::constant(3),
        Mult::new(1, -2),
        Mult::new(1, -2)
    ]));
    assert!(patterns.contains(&vec![
        Mult::constant(2),
        Mult::new(1, -1),
        Mult::new(1, -2)
    ]));
    // matched examples
    let matched: Vec<ExampleId> = r
        .outcomes
        .iter()
        .flat_map(|o| o.matched.iter().map(|(id, _)| *id))
        .collect();
    assert_eq!(
        matched,
        vec![
            ExampleId::E3_2,
            ExampleId::E3_3,
            ExampleId::E3_4,
            ExampleId::E3_6,
            ExampleId::E3_7
        ]
    );
}

#[test]
fn classify_g4_gives_theorem_1_1c() {
    let r = classify(4);
    let ids: Vec<&str> = r.outcomes.iter().map(|o| o.id.as_str()).collect();
    assert_eq!(
        ids,
        vec!["thm-1.1c-1", "thm-1.1c-2", "thm-1.1c-3", "thm-1.1c-4"]
    );
    // cases (2)-(4) all have multiplicities 1, 2, m-2, m-2
    for o in &r.outcomes[1..] {
        assert_eq!(
            o.mult_pattern(),
            vec![
                Mult::ONE,
                Mult::constant(2),
                Mult::new(1, -2),
                Mult::new(1, -2)
            ]
        );
    }
    // alpha ranges: (0,2) excluding 1; (2, inf); point 2
    match &r.outcomes[1].alpha {
        hopfq_core::classify::AlphaRange::Open { lo, hi, excluded, .. } => {
            assert_eq!(lo, &int(0));
            assert_eq!(hi.as_ref().unwrap(), &int(2));
            assert_eq!(excluded, &vec![int(1)]);
        }
        other => panic!("unexpected alpha range {:?}", other),
    }
    match &r.outcomes[2].alpha {
        hopfq_core::classify::AlphaRange::Open { lo, hi, .. } => {
            assert_eq!(lo, &int(2));
            assert!(hi.is_none());
        }
        other => panic!("unexpected alpha range {:?}", other),
    }
    assert!(matches!(
        &r.outcomes[3].alpha,
        hopfq_core::classify::AlphaRange::Point(p) if p == &int(2)
    ));
    assert_eq!(r.outcomes[0].m_note.as_deref(), Some("m = 2k, k >= 2"));
}

#[test]
fn traces_replay_and_serialize_deterministically() {
    for g in 1..=4u8 {
        let r1 = classify(g);
        r1.replay().unwrap();
        let r2 = classify(g);
        let j1 = serde_json::to_string(&trace_forest_json(&r1)).unwrap();
        let j2 = serde_json::to_string(&trace_forest_json(&r2)).unwrap();
        assert_eq!(j1, j2, "trace forest for g = {} is not deterministic", g);
    }
}

#[test]
fn apply_rule_examples() {
    // R4 on the two-eigenvalue branch with lambda = alpha (eliminates).
    let out = apply_rule(&RuleApp::AOrthogonality {
        lambda: LambdaDesc::SymOn(
            hopfq_core::sym::Sym::var(),
            Domain::open(parse_scalar("sqrt(2)").unwrap(), int(2)),
        ),
        pair: "sigma(Q) = {alpha, (alpha^2-2)/alpha}".into(),
    });
    assert!(matches!(out.finding, Finding::Contradiction { .. }));

    // R6 on the sqrt2 < alpha < 2 branch: 3u^3-15u^2+18u+4 has no root in (2,4).
    let eq = austere_sum_equation(AustereBranch::MidAlpha);
    assert_eq!(
        eq.poly_in_u.as_ref().unwrap(),
        &IntPoly::from_i64(&[4, 18, -15, 3])
    );
    assert!(eq.roots.is_empty());

    // R8 on the 0 < alpha < sqrt2 branch: unique root, then the concrete
    // focal multiset at that root is not austere.
    let eq = austere_sum_equation(AustereBranch::LowAlpha);
    assert_eq!(eq.poly, IntPoly::from_i64(&[-4, 0, -2, 0, 3]));
    assert_eq!(eq.roots.len(), 1);
    let alpha_star = parse_scalar("sqrt((sqrt(13)+1)/3)").unwrap();
    assert_eq!(eq.roots[0], alpha_star);

    // the full elimination rule runs to a contradiction on both branches
    let (values, domain) = (
        hopfq_core::classify::AustereBranch::LowAlpha,
        hopfq_core::classify::AustereBranch::MidAlpha,
    );
    let _ = (values, domain);
}

#[test]
fn austere_sum_equation_sqrt2_branch() {
    // cleared (radical-free) polynomial of the alpha = sqrt2 lambda-equation:
    // zero genuine roots in (sqrt2, inf).
    let eq = austere_sum_equation(AustereBranch::Sqrt2Lambda);
    assert!(eq.roots.is_empty());
    assert_eq!(eq.var, "lambda");
    // the cleared polynomial is even of degree 8: 25u^4-108u^3+185u^2-6u+4
    let u = eq.poly_in_u.as_ref().expect("even polynomial");
    assert_eq!(u, &IntPoly::from_i64(&[4, -6, 185, -108, 25]));
}

#[test]
fn match_example_op() {
    let table = PrincipalMultiset::from_entries(vec![
        (parse_scalar("sqrt(2)").unwrap(), Mult::new(1, 0)),
        (int(0), Mult::new(1, -1)),
    ]);
    assert_eq!(
        match_example(&table),
        Some((ExampleId::E3_1, Containment::OpenPartOf))
    );

    let table = PrincipalMultiset::from_entries(vec![
        (int(2), Mult::ONE),
        (int(0), Mult::constant(2)),
        (int(1), Mult::new(2, -4)),
    ]);
    assert_eq!(
        match_example(&table),
        Some((ExampleId::E3_4, Containment::OpenPartOf))
    );

    let table = PrincipalMultiset::from_entries(vec![
        (int(0), Mult::constant(3)),
        (int(1), Mult::new(1, -2)),
        (int(-1), Mult::new(1, -2)),
    ]);
    assert_eq!(
        match_example(&table),
        Some((ExampleId::E3_6, Containment::ContainedInCase))
    );

    let table = PrincipalMultiset::from_entries(vec![(int(7), Mult::new(2, -1))]);
    assert_eq!(match_example(&table), None);
}

#[test]
fn soundness_no_rule_eliminates_catalog_examples() {
    for m in [3u32, 4, 5, 6] {
        for t in [rat(1, 4), rat(1, 3), rat(1, 2)] {
            for id in ExampleId::all() {
                let config = match instantiate(id, &t, MDim::Concrete(m)) {
                    Ok(c) => c,
                    Err(_) => continue, // A-principal or m-constraint
                };
                let findings = soundness_findings(&config);
                assert!(
                    findings.is_empty(),
                    "example {} at (t={}, m={}): {:?}",
                    id,
                    t,
                    m,
                    findings
                );
            }
        }
    }
}

#[test]
fn outcome_tables_validate() {
    for g in 2..=4u8 {
        for o in classify(g).outcomes {
            o.validate().unwrap();
            assert_eq!(o.total(), Mult::new(2, -1));
        }
    }
}

#[test]
fn cartan_rule_concrete_spec_values() {
    // scenario (lambda=2, mu=1, Y=JX, A-orthogonal): rhs exactly 3, two-value
    let out = apply_rule(&RuleApp::CartanConcrete {
        lambda: int(2),
        mu: int(1),
        spectrum: vec![int(2), int(1)],
        scenario: Scenario::YEqJxOrthA,
    });
    assert!(matches!(out.finding, Finding::Contradiction { .. }));
    assert!(out
        .facts
        .iter()
        .any(|f| f.label == "rhs" && f.value == "3"));

    // (lambda=0, mu=1, spectrum {0,1,2}): NonNeg certificate vs rhs -3
    let out = apply_rule(&RuleApp::CartanConcrete {
        lambda: int(0),
        mu: int(1),
        spectrum: vec![int(0), int(1), int(2)],
        scenario: Scenario::YEqJxOrthA,
    });
    assert!(matches!(out.finding, Finding::Contradiction { .. }));
    assert!(out
        .facts
        .iter()
        .any(|f| f.label == "rhs" && f.value == "-3"));
    assert!(out
        .facts
        .iter()
        .any(|f| f.label == "lhs-certificate" && f.value == "NonNeg"));

    // (lambda=-1, mu=1, a_xx=1): rhs exactly 0, consistent
    let out = apply_rule(&RuleApp::CartanConcrete {
        lambda: int(-1),
        mu: int(1),
        spectrum: vec![int(-1), int(1)],
        scenario: Scenario::AxEqX,
    });
    assert!(matches!(out.finding, Finding::Established));
    assert!(out
        .facts
        .iter()
        .any(|f| f.label == "rhs" && f.value == "0"));
}

#[test]
fn focal_candidate_rule_matches_paper_values() {
    // the g=4 Case-i-1 alpha=2, lambda=-1 candidate: distinct focal values
    // {2, 0, 1, -1}, not austere
    let config = HopfConfig::new(
        MDim::Concrete(4),
        int(2),
        vec![
            (int(2), Mult::ONE),
            (int(1), Mult::constant(2)),
            (int(-1), Mult::ONE),
        ],
    )
    .unwrap();
    let out = apply_rule(&RuleApp::FocalAustereConcrete { config });
    assert!(matches!(out.finding, Finding::Contradiction { .. }));
    let ms_fact = out
        .facts
        .iter()
        .find(|f| f.label == "focal multiset")
        .unwrap();
    assert_eq!(ms_fact.value, "{-1: 1, 0: 2, 1: 2, 2: 1}");
}

#[test]
fn branch_count_and_order_stability() {
    let r = classify(4);
    assert_eq!(r.traces.len(), 46);
    let ids: Vec<&str> = r.traces.iter().map(|t| t.id.as_str()).collect();
    // spot checks on the scripted order
    assert_eq!(ids[0], "g4.principal");
    assert!(ids.contains(&"g4.i-3.sqrt2.lambda-gt-sqrt2"));
    assert!(ids.contains(&"g4.ii.alpha=0"));
    // admissible branches map to the four outcomes
    let admissible: Vec<&str> = r
        .traces
        .iter()
        .filter_map(|t| match &t.terminal {
            Terminal::Admissible { outcome_id } => Some(outcome_id.as_str()),
            _ => None,
        })
        .collect();
    assert_eq!(
        admissible,
        vec!["thm-1.1c-2", "thm-1.1c-3", "thm-1.1c-1", "thm-1.1c-4"]
    );
}

#[test]
fn outcome_displays() {
    let o = outcome::outcome_1_1b_3();
    assert_eq!(
        o.display_table(),
        "values 0, 1, -1; multiplicities 2, m-1, m-2"
    );
    assert!(outcome::outcome_1_1c_2().alpha.display().contains("arctanh(1/2)/2"));
}
