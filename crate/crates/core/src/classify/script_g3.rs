//! Branch scripts for three distinct constant principal curvatures.

use super::rules::{AlphaDesc, LambdaDesc, PairStructure, RuleApp};
use super::{Branch, BranchTrace};
use crate::cartan::Scenario;
use crate::classify::script_util::*;
use crate::sym::Domain;

pub(crate) fn branches() -> Vec<BranchTrace> {
    let mut out = Vec::new();

    // A-principal normal: lookup gives the two tube families.
    let mut b = Branch::new("g3.principal", "A-principal unit normal: tube families");
    b.fact(RuleApp::APrincipalLookup { g: 3 });
    out.push(b.admissible("thm-1.1b-1-principal"));

    out.extend(case_i_1());
    out.extend(case_i_2());
    out.extend(case_i_3());
    out.push(case_i_4());
    out.extend(case_ii());
    out
}

/// alpha-domain pieces avoiding the special values 1, sqrt2, 2.
fn generic_alpha_pieces() -> Vec<(&'static str, Domain)> {
    vec![
        ("0<a<1", Domain::open(int(0), int(1))),
        ("1<a<sqrt2", Domain::open(int(1), sqrt2())),
        ("sqrt2<a<2", Domain::open(sqrt2(), int(2))),
        ("a>2", Domain::above(int(2))),
    ]
}

/// Case-i-1: alpha in sigma(Q), 0 not in sigma(Q).
fn case_i_1() -> Vec<BranchTrace> {
    let mut out = Vec::new();
    for (tag, dom) in generic_alpha_pieces() {
        let mut b = Branch::new(
            &format!("g3.i-1.generic[{}]", tag),
            "Case-i-1 with alpha not in {1, sqrt2, 2}: sigma(Q) = {alpha, pair(alpha)}",
        );
        b.fact(RuleApp::Structural {
            alpha: "alpha".into(),
        });
        b.fact(RuleApp::PairSym {
            alpha: var(),
            lambda: var(),
            domain: dom.clone(),
            label: "alpha".into(),
        });
        b.fact(RuleApp::SignFact {
            label: "pair(alpha) - alpha".into(),
            expr: pair_alpha().sub(&var()).unwrap(),
            domain: dom.clone(),
            expect: -1,
        });
        let pair_sign = if matches!(tag, "0<a<1" | "1<a<sqrt2") { -1 } else { 1 };
        b.fact(RuleApp::SignFact {
            label: "pair(alpha) != 0".into(),
            expr: pair_alpha(),
            domain: dom.clone(),
            expect: pair_sign,
        });
        out.push(b.eliminate(RuleApp::AOrthogonality {
            lambda: LambdaDesc::SymOn(var(), dom),
            pair: "sigma(Q) = {alpha, (alpha^2-2)/alpha} spans Q; J V_alpha = V_pair".into(),
        }));
    }

    // alpha = 1: admissible (Theorem 1.1b case (3)).
    let mut b = Branch::new(
        "g3.i-1.alpha=1",
        "Case-i-1 with alpha = 1: sigma(Q) = {1, -1}",
    );
    b.fact(RuleApp::Structural { alpha: "1".into() });
    b.fact(RuleApp::PairValue {
        alpha: int(1),
        lambda: int(1),
    });
    b.fact(RuleApp::MultiplicityForcing {
        structure: PairStructure::MirrorPair("1".into(), "-1".into()),
    });
    let mut out2 = vec![b.admissible("thm-1.1b-3")];
    out.append(&mut out2);

    // alpha = sqrt2: pair(alpha) = 0 contradicts the membership flag.
    let b = Branch::new(
        "g3.i-1.alpha=sqrt2",
        "Case-i-1 with alpha = sqrt2: pair(alpha) = 0 forced into sigma(Q)",
    );
    out.push(b.eliminate(RuleApp::ForcedMembership {
        alpha: sqrt2(),
        lambda: sqrt2(),
        forced: int(0),
        conflicts_with: "0 not in sigma(Q) (Case-i-1)".into(),
    }));

    // alpha = 2: Cartan contradiction with two sigma(Q) values.
    let mut b = Branch::new(
        "g3.i-1.alpha=2",
        "Case-i-1 with alpha = 2: sigma(Q) = {2, 1}",
    );
    b.fact(RuleApp::PairValue {
        alpha: int(2),
        lambda: int(2),
    });
    b.fact(RuleApp::OrthogonalityFact {
        lambda: LambdaDesc::Concrete(int(2)),
    });
    out.push(b.eliminate(RuleApp::CartanConcrete {
        lambda: int(2),
        mu: int(1),
        spectrum: vec![int(2), int(1)],
        scenario: Scenario::YEqJxOrthA,
    }));

    out
}

/// Case-i-2: alpha not in sigma(Q), 0 in sigma(Q).
fn case_i_2() -> Vec<BranchTrace> {
    let mut out = Vec::new();
    let pieces = vec![
        ("0<a<sqrt2", Domain::open(int(0), sqrt2()), 1),
        ("sqrt2<a<2", Domain::open(sqrt2(), int(2)), -1),
        ("a>2", Domain::above(int(2)), -1),
    ];
    for (tag, dom, diff_sign) in pieces {
        let mut b = Branch::new(
            &format!("g3.i-2.generic[{}]", tag),
            "Case-i-2 with alpha not in {sqrt2, 2}: sigma(Q) = {0, 2/alpha}",
        );
        b.fact(RuleApp::Structural {
            alpha: "alpha".into(),
        });
        b.fact(RuleApp::PairSym {
            alpha: var(),
            lambda: zero(),
            domain: dom.clone(),
            label: "0".into(),
        });
        b.fact(RuleApp::SignFact {
            label: "pair(0) - alpha".into(),
            expr: pair_zero().sub(&var()).unwrap(),
            domain: dom.clone(),
            expect: diff_sign,
        });
        out.push(b.eliminate(RuleApp::AOrthogonality {
            lambda: LambdaDesc::Concrete(int(0)),
            pair: "sigma(Q) = {0, 2/alpha} spans Q; J V_0 = V_{2/alpha}".into(),
        }));
    }

    let b = Branch::new(
        "g3.i-2.alpha=sqrt2",
        "Case-i-2 with alpha = sqrt2: pair(0) = sqrt2 = alpha forced into sigma(Q)",
    );
    out.push(b.eliminate(RuleApp::ForcedMembership {
        alpha: sqrt2(),
        lambda: int(0),
        forced: sqrt2(),
        conflicts_with: "alpha not in sigma(Q) (Case-i-2)".into(),
    }));

    let mut b = Branch::new(
        "g3.i-2.alpha=2",
        "Case-i-2 with alpha = 2: sigma(Q) = {0, 1}",
    );
    b.fact(RuleApp::PairValue {
        alpha: int(2),
        lambda: int(0),
    });
    b.fact(RuleApp::OrthogonalityFact {
        lambda: LambdaDesc::Concrete(int(0)),
    });
    out.push(b.eliminate(RuleApp::CartanConcrete {
        lambda: int(0),
        mu: int(1),
        spectrum: vec![int(0), int(1)],
        scenario: Scenario::YEqJxOrthA,
    }));

    out
}

/// Case-i-3: both alpha and 0 in sigma(Q).
fn case_i_3() -> Vec<BranchTrace> {
    let mut out = Vec::new();
    let pieces = vec![
        ("0<a<sqrt2", Domain::open(int(0), sqrt2())),
        ("sqrt2<a<2", Domain::open(sqrt2(), int(2))),
        ("a>2", Domain::above(int(2))),
    ];
    for (tag, dom) in pieces {
        let mut b = Branch::new(
            &format!("g3.i-3.generic[{}]", tag),
            "Case-i-3 with alpha not in {sqrt2, 2}: four distinct values appear",
        );
        b.fact(RuleApp::Structural {
            alpha: "alpha".into(),
        });
        b.fact(RuleApp::PairSym {
            alpha: var(),
            lambda: var(),
            domain: dom.clone(),
            label: "alpha".into(),
        });
        b.fact(RuleApp::PairSym {
            alpha: var(),
            lambda: zero(),
            domain: dom.clone(),
            label: "0".into(),
        });
        out.push(b.eliminate(RuleApp::DistinctExceedsG {
            values: vec![
                ("alpha".into(), var()),
                ("0".into(), zero()),
                ("pair(alpha)".into(), pair_alpha()),
                ("pair(0)".into(), pair_zero()),
            ],
            domain: dom,
            g: 3,
        }));
    }

    // alpha = sqrt2: a third eigenvalue lambda and its pair make four values.
    let lambda_pieces = vec![
        ("l<0", Domain::below(int(0))),
        ("0<l<1/sqrt2", Domain::open(int(0), inv_sqrt2())),
        ("1/sqrt2<l<sqrt2", Domain::open(inv_sqrt2(), sqrt2())),
        ("l>sqrt2", Domain::above(sqrt2())),
    ];
    for (tag, dom) in lambda_pieces {
        let mut b = Branch::new(
            &format!("g3.i-3.alpha=sqrt2[{}]", tag),
            "Case-i-3 with alpha = sqrt2: a third sigma(Q) value lambda and pair(lambda)",
        );
        let pair = super::rules::sym_reeb_pair(&s2(), &var());
        b.fact(RuleApp::PairSym {
            alpha: s2(),
            lambda: var(),
            domain: dom.clone(),
            label: "lambda".into(),
        });
        out.push(b.eliminate(RuleApp::DistinctExceedsG {
            values: vec![
                ("sqrt2".into(), s2()),
                ("0".into(), zero()),
                ("lambda".into(), var()),
                ("pair(lambda)".into(), pair),
            ],
            domain: dom,
            g: 3,
        }));
    }
    let b = Branch::new(
        "g3.i-3.alpha=sqrt2[l=1/sqrt2]",
        "Case-i-3 with alpha = sqrt2 and 2 lambda = alpha",
    );
    out.push(b.eliminate(RuleApp::DegeneratePairingContradiction {
        alpha: sqrt2(),
        lambda: inv_sqrt2(),
    }));

    // alpha = 2: sigma(Q) = {2, 0, 1} and the Cartan identity contradicts.
    let mut b = Branch::new(
        "g3.i-3.alpha=2",
        "Case-i-3 with alpha = 2: sigma(Q) = {2, 0, 1}",
    );
    b.fact(RuleApp::PairValue {
        alpha: int(2),
        lambda: int(2),
    });
    b.fact(RuleApp::PairValue {
        alpha: int(2),
        lambda: int(0),
    });
    b.fact(RuleApp::OrthogonalityFact {
        lambda: LambdaDesc::Concrete(int(0)),
    });
    out.push(b.eliminate(RuleApp::CartanConcrete {
        lambda: int(0),
        mu: int(1),
        spectrum: vec![int(0), int(1), int(2)],
        scenario: Scenario::YEqJxOrthA,
    }));

    out
}

/// Case-i-4: neither alpha nor 0 in sigma(Q): isometric Reeb flow.
fn case_i_4() -> BranchTrace {
    let mut b = Branch::new(
        "g3.i-4",
        "Case-i-4: sigma(Q) is a single eigenvalue, so S phi = phi S",
    );
    b.fact(RuleApp::Structural {
        alpha: "alpha".into(),
    });
    b.fact(RuleApp::MultiplicityForcing {
        structure: PairStructure::SingleFull("lambda".into()),
    });
    b.fact(RuleApp::ReebFlowLookup {
        g: 3,
        alpha: AlphaDesc::Open(Domain::above(int(0))),
    });
    b.admissible("thm-1.1b-1-reeb")
}

/// Case-ii: alpha = 0.
fn case_ii() -> Vec<BranchTrace> {
    let mut out = Vec::new();
    let pieces = vec![
        ("l<-1", Domain::below(int(-1))),
        ("-1<l<0", Domain::open(int(-1), int(0))),
        ("0<l<1", Domain::open(int(0), int(1))),
        ("l>1", Domain::above(int(1))),
    ];
    for (tag, dom) in pieces {
        let mut b = Branch::new(
            &format!("g3.ii.generic[{}]", tag),
            "alpha = 0 with sigma(Q) = {lambda, -1/lambda}, lambda != +-1",
        );
        b.fact(RuleApp::Structural { alpha: "0".into() });
        b.fact(RuleApp::AlphaZeroNoZeroInSpectrum);
        b.fact(RuleApp::PairSym {
            alpha: zero(),
            lambda: var(),
            domain: dom.clone(),
            label: "lambda".into(),
        });
        out.push(b.eliminate(RuleApp::AOrthogonality {
            lambda: LambdaDesc::SymOn(var(), dom),
            pair: "sigma(Q) = {lambda, -1/lambda} spans Q; J V_lambda = V_pair".into(),
        }));
    }

    let mut b = Branch::new(
        "g3.ii.lambda=pm1",
        "alpha = 0 with sigma(Q) = {1, -1} (Theorem 1.1b case (2))",
    );
    b.fact(RuleApp::Structural { alpha: "0".into() });
    b.fact(RuleApp::AlphaZeroNoZeroInSpectrum);
    b.fact(RuleApp::PairValue {
        alpha: int(0),
        lambda: int(-1),
    });
    b.fact(RuleApp::MultiplicityForcing {
        structure: PairStructure::MirrorPair("1".into(), "-1".into()),
    });
    out.push(b.admissible("thm-1.1b-2"));

    out
}
