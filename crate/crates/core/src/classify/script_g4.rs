//! Branch scripts for four distinct constant principal curvatures.

use super::rules::{sym_reeb_pair, AlphaDesc, LambdaDesc, PairStructure, RuleApp};
use super::{Branch, BranchTrace};
use crate::cartan::Scenario;
use crate::classify::script_util::*;
use crate::config::HopfConfig;
use crate::mult::{MDim, Mult};
use crate::sym::{Domain, Sym};

pub(crate) fn branches() -> Vec<BranchTrace> {
    let mut out = Vec::new();

    // No A-principal example has four distinct curvatures.
    let b = Branch::new("g4.principal", "A-principal unit normal");
    out.push(b.eliminate(RuleApp::APrincipalLookup { g: 4 }));

    out.extend(case_i_1());
    out.extend(case_i_2());
    out.extend(case_i_3());
    out.extend(case_i_4());
    out.push(case_ii());
    out
}

// ---------------------------------------------------------------------
// Case-i-1: alpha in sigma(Q), 0 not in sigma(Q).
// ---------------------------------------------------------------------

fn case_i_1() -> Vec<BranchTrace> {
    let mut out = Vec::new();

    // alpha in (0,2) away from sqrt2: the fourth eigenvalue would have to be
    // self-paired (its pair cannot be alpha or pair(alpha) by the involution),
    // but lambda^2 - alpha lambda + 1 has no real root below alpha = 2.
    for (tag, dom, pair_sign) in [
        ("0<a<sqrt2", Domain::open(int(0), sqrt2()), -1),
        ("sqrt2<a<2", Domain::open(sqrt2(), int(2)), 1),
    ] {
        let mut b = Branch::new(
            &format!("g4.i-1.no-fourth[{}]", tag),
            "Case-i-1, alpha below 2: values alpha, 0, pair(alpha); the fourth eigenvalue must be self-paired",
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
            label: "pair(alpha) != 0".into(),
            expr: pair_alpha(),
            domain: dom.clone(),
            expect: pair_sign,
        });
        out.push(b.eliminate(RuleApp::NoRealSelfPair {
            domain: dom,
            terminal: true,
        }));
    }

    // alpha > 2, fourth value lambda_- = (alpha - sqrt(alpha^2-4))/2:
    // the focal submanifold at lambda_+ = alpha has three distinct positive
    // curvatures and no negative ones, so it cannot be austere.
    {
        let dom = Domain::above(int(2));
        let mut b = Branch::new(
            "g4.i-1.lambda-minus",
            "Case-i-1, alpha > 2, sigma(Q) = {alpha, (alpha^2-2)/alpha, lambda_-}",
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
        b.fact(RuleApp::SelfPairedRoots { domain: dom.clone() });
        for (label, expr, expect) in [
            ("lambda_- > 0", lambda_minus(), 1),
            (
                "lambda_- < pair(alpha)",
                lambda_minus().sub(&pair_alpha()).unwrap(),
                -1,
            ),
            ("lambda_- < alpha", lambda_minus().sub(&var()).unwrap(), -1),
        ] {
            b.fact(RuleApp::SignFact {
                label: label.into(),
                expr,
                domain: dom.clone(),
                expect,
            });
        }
        let (values, _) = focal_values_i1_lambda_minus();
        b.fact(RuleApp::FocalValuesSym {
            alpha: var(),
            spectrum: vec![
                ("alpha".into(), var()),
                ("pair(alpha)".into(), pair_alpha()),
                ("lambda_-".into(), lambda_minus()),
            ],
            lambda_star: var(),
            degenerate: false,
            domain: dom.clone(),
            claimed: values.clone(),
        });
        out.push(b.eliminate(RuleApp::SignCountElim {
            values,
            domain: dom,
        }));
    }

    // alpha > 2, fourth value lambda_+: Cartan identity with Y = AX.
    {
        let dom = Domain::above(int(2));
        let mut b = Branch::new(
            "g4.i-1.lambda-plus",
            "Case-i-1, alpha > 2, sigma(Q) = {alpha, (alpha^2-2)/alpha, lambda_+}",
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
        b.fact(RuleApp::SelfPairedRoots { domain: dom.clone() });
        b.fact(RuleApp::OrthogonalityFact {
            lambda: LambdaDesc::SymOn(var(), dom.clone()),
        });
        b.fact(RuleApp::SignFact {
            label: "lambda_+ > pair(alpha)".into(),
            expr: lambda_plus().sub(&pair_alpha()).unwrap(),
            domain: dom.clone(),
            expect: 1,
        });
        out.push(b.eliminate(RuleApp::CartanSym {
            lambda: var(),
            mu: lambda_plus(),
            others: vec![pair_alpha()],
            scenario: Scenario::YEqAxOrthA,
            domain: dom,
        }));
    }

    // alpha = sqrt2: pair(alpha) = 0 contradicts 0 not in sigma(Q).
    let b = Branch::new("g4.i-1.alpha=sqrt2", "Case-i-1 with alpha = sqrt2");
    out.push(b.eliminate(RuleApp::ForcedMembership {
        alpha: sqrt2(),
        lambda: sqrt2(),
        forced: int(0),
        conflicts_with: "0 not in sigma(Q) (Case-i-1)".into(),
    }));

    // alpha = 2: sigma(Q) contains {2, 1} and a fourth value lambda.
    for (tag, dom) in [
        ("l<-1", Domain::below(int(-1))),
        ("-1<l<0", Domain::open(int(-1), int(0))),
        ("0<l<1", Domain::open(int(0), int(1))),
    ] {
        let mut b = Branch::new(
            &format!("g4.i-1.alpha=2[{}]", tag),
            "Case-i-1 with alpha = 2 and a fourth eigenvalue lambda < 1",
        );
        b.fact(RuleApp::PairValue {
            alpha: int(2),
            lambda: int(2),
        });
        b.fact(RuleApp::AlphaTwoForcesOne);
        b.fact(RuleApp::OrthogonalityFact {
            lambda: LambdaDesc::SymOn(var(), dom.clone()),
        });
        out.push(b.eliminate(RuleApp::CartanSym {
            lambda: var(),
            mu: c(1),
            others: vec![c(2)],
            scenario: Scenario::YEqJxOrthA,
            domain: dom,
        }));
    }
    {
        // lambda = -1: the focal submanifold has curvatures {2, 0, 1, -1}.
        let mut b = Branch::new(
            "g4.i-1.alpha=2[l=-1]",
            "Case-i-1 with alpha = 2 and lambda = -1: focal obstruction",
        );
        b.fact(RuleApp::PairValue {
            alpha: int(2),
            lambda: int(2),
        });
        b.fact(RuleApp::AlphaTwoForcesOne);
        let config = HopfConfig::new(
            MDim::Concrete(4),
            int(2),
            vec![
                (int(2), Mult::ONE),
                (int(1), Mult::constant(2)),
                (int(-1), Mult::ONE),
            ],
        )
        .expect("candidate config");
        out.push(b.eliminate(RuleApp::FocalAustereConcrete { config }));
    }
    for (tag, dom, x_in_v2) in [
        ("1<l<2", Domain::open(int(1), int(2)), true),
        ("l>2", Domain::above(int(2)), false),
    ] {
        let mut b = Branch::new(
            &format!("g4.i-1.alpha=2[{}]", tag),
            "Case-i-1 with alpha = 2 and a fourth eigenvalue lambda > 1",
        );
        b.fact(RuleApp::PairValue {
            alpha: int(2),
            lambda: int(2),
        });
        b.fact(RuleApp::AlphaTwoForcesOne);
        let (lam, others, orth): (Sym, Vec<Sym>, LambdaDesc) = if x_in_v2 {
            (c(2), vec![var()], LambdaDesc::Concrete(int(2)))
        } else {
            (var(), vec![c(2)], LambdaDesc::SymOn(var(), dom.clone()))
        };
        b.fact(RuleApp::OrthogonalityFact { lambda: orth });
        out.push(b.eliminate(RuleApp::CartanSym {
            lambda: lam,
            mu: c(1),
            others,
            scenario: Scenario::YEqJxOrthA,
            domain: dom,
        }));
    }

    out
}

// ---------------------------------------------------------------------
// Case-i-2: alpha not in sigma(Q), 0 in sigma(Q).
// ---------------------------------------------------------------------

fn case_i_2() -> Vec<BranchTrace> {
    let mut out = Vec::new();

    for (tag, dom, diff_sign) in [
        ("0<a<sqrt2", Domain::open(int(0), sqrt2()), 1),
        ("sqrt2<a<2", Domain::open(sqrt2(), int(2)), -1),
    ] {
        let mut b = Branch::new(
            &format!("g4.i-2.no-fourth[{}]", tag),
            "Case-i-2, alpha below 2: values alpha, 0, 2/alpha; the fourth eigenvalue must be self-paired",
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
        out.push(b.eliminate(RuleApp::NoRealSelfPair {
            domain: dom,
            terminal: true,
        }));
    }

    let b = Branch::new("g4.i-2.alpha=sqrt2", "Case-i-2 with alpha = sqrt2");
    out.push(b.eliminate(RuleApp::ForcedMembership {
        alpha: sqrt2(),
        lambda: int(0),
        forced: sqrt2(),
        conflicts_with: "alpha not in sigma(Q) (Case-i-2)".into(),
    }));

    // alpha > 2, lambda = lambda_-, dim V_0 >= 2: orthogonal-pair scenario.
    {
        let dom = Domain::above(int(2));
        let mut b = Branch::new(
            "g4.i-2.lambda-minus.dimv0-ge2",
            "Case-i-2, alpha > 2, lambda = lambda_-, dim V_0 >= 2",
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
        b.fact(RuleApp::SelfPairedRoots { domain: dom.clone() });
        b.fact(RuleApp::SignFact {
            label: "0 < lambda_-".into(),
            expr: lambda_minus(),
            domain: dom.clone(),
            expect: 1,
        });
        b.fact(RuleApp::SignFact {
            label: "lambda_- < 2/alpha".into(),
            expr: lambda_minus().sub(&pair_zero()).unwrap(),
            domain: dom.clone(),
            expect: -1,
        });
        b.fact(RuleApp::OrthogonalityFact {
            lambda: LambdaDesc::Concrete(int(0)),
        });
        out.push(b.eliminate(RuleApp::CartanSym {
            lambda: zero(),
            mu: lambda_minus(),
            others: vec![pair_zero()],
            scenario: Scenario::OrthPair,
            domain: dom,
        }));
    }

    // alpha > 2, lambda = lambda_-, dim V_0 = 1: dedicated frame computation.
    {
        let dom = Domain::above(int(2));
        let mut b = Branch::new(
            "g4.i-2.lambda-minus.dimv0-eq1",
            "Case-i-2, alpha > 2, lambda = lambda_-, dim V_0 = 1",
        );
        b.fact(RuleApp::SelfPairedRoots { domain: dom.clone() });
        out.push(b.eliminate(RuleApp::DimV0One { domain: dom }));
    }

    // alpha > 2, lambda = lambda_+: Y = AX scenario.
    {
        let dom = Domain::above(int(2));
        let mut b = Branch::new(
            "g4.i-2.lambda-plus",
            "Case-i-2, alpha > 2, lambda = lambda_+",
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
        b.fact(RuleApp::SelfPairedRoots { domain: dom.clone() });
        b.fact(RuleApp::OrthogonalityFact {
            lambda: LambdaDesc::Concrete(int(0)),
        });
        b.fact(RuleApp::SignFact {
            label: "lambda_+ > 2/alpha".into(),
            expr: lambda_plus().sub(&pair_zero()).unwrap(),
            domain: dom.clone(),
            expect: 1,
        });
        out.push(b.eliminate(RuleApp::CartanSym {
            lambda: zero(),
            mu: lambda_plus(),
            others: vec![pair_zero()],
            scenario: Scenario::YEqAxOrthA,
            domain: dom,
        }));
    }

    // alpha = 2: sigma(Q) = {0, 1, lambda}.
    for (tag, dom, x_in_v0) in [
        ("l<0", Domain::below(int(0)), true),
        ("0<l<1", Domain::open(int(0), int(1)), false),
        ("1<l<2", Domain::open(int(1), int(2)), true),
        ("l>2", Domain::above(int(2)), true),
    ] {
        let mut b = Branch::new(
            &format!("g4.i-2.alpha=2[{}]", tag),
            "Case-i-2 with alpha = 2: sigma(Q) = {0, 1, lambda}",
        );
        b.fact(RuleApp::PairValue {
            alpha: int(2),
            lambda: int(0),
        });
        b.fact(RuleApp::AlphaTwoForcesOne);
        let (lam, others, orth): (Sym, Vec<Sym>, LambdaDesc) = if x_in_v0 {
            (zero(), vec![var()], LambdaDesc::Concrete(int(0)))
        } else {
            (var(), vec![zero()], LambdaDesc::SymOn(var(), dom.clone()))
        };
        b.fact(RuleApp::OrthogonalityFact { lambda: orth });
        out.push(b.eliminate(RuleApp::CartanSym {
            lambda: lam,
            mu: c(1),
            others,
            scenario: Scenario::YEqJxOrthA,
            domain: dom,
        }));
    }

    out
}

// ---------------------------------------------------------------------
// Case-i-3: both alpha and 0 in sigma(Q).
// ---------------------------------------------------------------------

/// Focal curvature expressions for 0 < alpha < sqrt2 (lambda_+ = 2/alpha).
pub(crate) fn focal_values_low_alpha() -> (Vec<(String, Sym)>, Domain) {
    let reeb = var().neg();
    let entry_alpha = sym_focal_entry_expr(&pair_zero(), &var());
    let entry_zero = sym_focal_entry_expr(&pair_zero(), &zero());
    let entry_pair_alpha = sym_focal_entry_expr(&pair_zero(), &pair_alpha());
    (
        vec![
            ("reeb".into(), reeb),
            ("entry(alpha)".into(), entry_alpha),
            ("entry(0)".into(), entry_zero),
            ("entry(pair(alpha))".into(), entry_pair_alpha),
        ],
        Domain::open(int(0), sqrt2()),
    )
}

/// Focal curvature expressions for sqrt2 < alpha < 2 (lambda_+ = alpha).
pub(crate) fn focal_values_mid_alpha() -> (Vec<(String, Sym)>, Domain) {
    let reeb = super::rules::sym_focal_reeb_entry(&var(), &var());
    let entry_zero = sym_focal_entry_expr(&var(), &zero());
    let entry_pair_alpha = sym_focal_entry_expr(&var(), &pair_alpha());
    let entry_pair_zero = sym_focal_entry_expr(&var(), &pair_zero());
    (
        vec![
            ("reeb".into(), reeb),
            ("entry(0)".into(), entry_zero),
            ("entry(pair(alpha))".into(), entry_pair_alpha),
            ("entry(pair(0))".into(), entry_pair_zero),
        ],
        Domain::open(sqrt2(), int(2)),
    )
}

/// Focal curvature expressions for alpha = sqrt2, unknown lambda > sqrt2.
pub(crate) fn focal_values_sqrt2_lambda() -> (Vec<(String, Sym)>, Domain) {
    let mu = sym_reeb_pair(&s2(), &var());
    let reeb = super::rules::sym_focal_reeb_entry(&s2(), &var());
    let entry_sqrt2 = sym_focal_entry_expr(&var(), &s2());
    let entry_zero = sym_focal_entry_expr(&var(), &zero());
    let entry_mu = sym_focal_entry_expr(&var(), &mu);
    (
        vec![
            ("reeb".into(), reeb),
            ("entry(sqrt2)".into(), entry_sqrt2),
            ("entry(0)".into(), entry_zero),
            ("entry(mu)".into(), entry_mu),
        ],
        Domain::above(sqrt2()),
    )
}

fn sym_focal_entry_expr(lambda_star: &Sym, li: &Sym) -> Sym {
    super::rules::sym_focal_entry(lambda_star, li)
}

fn case_i_3() -> Vec<BranchTrace> {
    let mut out = Vec::new();

    // alpha > 2: Cartan contradiction with X in V_0, Y = JX in V_{2/alpha}.
    {
        let dom = Domain::above(int(2));
        let mut b = Branch::new(
            "g4.i-3.alpha-gt-2",
            "Case-i-3, alpha > 2: sigma(Q) = {alpha, 0, pair(alpha), 2/alpha}",
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
        b.fact(RuleApp::OrthogonalityFact {
            lambda: LambdaDesc::Concrete(int(0)),
        });
        out.push(b.eliminate(RuleApp::CartanSym {
            lambda: zero(),
            mu: pair_zero(),
            others: vec![var(), pair_alpha()],
            scenario: Scenario::YEqJxOrthA,
            domain: dom,
        }));
    }

    // sqrt2 < alpha < 2: the austere-sum elimination at lambda_+ = alpha.
    {
        let (values, dom) = focal_values_mid_alpha();
        let mut b = Branch::new(
            "g4.i-3.mid",
            "Case-i-3, sqrt2 < alpha < 2: focal submanifold at lambda_+ = alpha",
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
        b.fact(RuleApp::FocalValuesSym {
            alpha: var(),
            spectrum: vec![
                ("alpha".into(), var()),
                ("0".into(), zero()),
                ("pair(alpha)".into(), pair_alpha()),
                ("pair(0)".into(), pair_zero()),
            ],
            lambda_star: var(),
            degenerate: false,
            domain: dom.clone(),
            claimed: values.clone(),
        });
        out.push(b.eliminate(RuleApp::AustereSumElim {
            values,
            domain: dom,
        }));
    }

    // 0 < alpha < sqrt2: the austere-sum elimination at lambda_+ = 2/alpha.
    {
        let (values, dom) = focal_values_low_alpha();
        let mut b = Branch::new(
            "g4.i-3.low",
            "Case-i-3, 0 < alpha < sqrt2: focal submanifold at lambda_+ = 2/alpha",
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
        b.fact(RuleApp::FocalValuesSym {
            alpha: var(),
            spectrum: vec![
                ("alpha".into(), var()),
                ("0".into(), zero()),
                ("pair(alpha)".into(), pair_alpha()),
                ("pair(0)".into(), pair_zero()),
            ],
            lambda_star: pair_zero(),
            degenerate: false,
            domain: dom.clone(),
            claimed: values.clone(),
        });
        out.push(b.eliminate(RuleApp::AustereSumElim {
            values,
            domain: dom,
        }));
    }

    out.extend(case_i_3_sqrt2());
    out.extend(case_i_3_alpha_2());
    out
}

/// Case-i-3 with alpha = sqrt2: sigma(Q) = {sqrt2, 0, lambda, mu}.
fn case_i_3_sqrt2() -> Vec<BranchTrace> {
    let mut out = Vec::new();
    let mu = sym_reeb_pair(&s2(), &var());

    // lambda > sqrt2 (so 0 < mu < 1/sqrt2): austere-sum elimination.
    {
        let (values, dom) = focal_values_sqrt2_lambda();
        let mut b = Branch::new(
            "g4.i-3.sqrt2.lambda-gt-sqrt2",
            "Case-i-3, alpha = sqrt2, lambda > sqrt2: focal submanifold at lambda_+ = lambda",
        );
        b.fact(RuleApp::Structural {
            alpha: "sqrt(2)".into(),
        });
        b.fact(RuleApp::PairSym {
            alpha: s2(),
            lambda: var(),
            domain: dom.clone(),
            label: "lambda".into(),
        });
        b.fact(RuleApp::SignFact {
            label: "mu > 0".into(),
            expr: mu.clone(),
            domain: dom.clone(),
            expect: 1,
        });
        b.fact(RuleApp::SignFact {
            label: "mu < sqrt2".into(),
            expr: mu.sub(&s2()).unwrap(),
            domain: dom.clone(),
            expect: -1,
        });
        b.fact(RuleApp::FocalValuesSym {
            alpha: s2(),
            spectrum: vec![
                ("sqrt2".into(), s2()),
                ("0".into(), zero()),
                ("lambda".into(), var()),
                ("mu".into(), mu.clone()),
            ],
            lambda_star: var(),
            degenerate: false,
            domain: dom.clone(),
            claimed: values.clone(),
        });
        out.push(b.eliminate(RuleApp::AustereSumElim {
            values,
            domain: dom,
        }));
    }

    // lambda < 0 (so 1/sqrt2 < mu < sqrt2): lambda_+ = sqrt2, sign count.
    {
        let dom = Domain::below(int(0));
        let mut b = Branch::new(
            "g4.i-3.sqrt2.lambda-neg",
            "Case-i-3, alpha = sqrt2, lambda < 0: focal submanifold at lambda_+ = sqrt2",
        );
        b.fact(RuleApp::Structural {
            alpha: "sqrt(2)".into(),
        });
        b.fact(RuleApp::PairSym {
            alpha: s2(),
            lambda: var(),
            domain: dom.clone(),
            label: "lambda".into(),
        });
        b.fact(RuleApp::SignFact {
            label: "mu > 0".into(),
            expr: mu.clone(),
            domain: dom.clone(),
            expect: 1,
        });
        b.fact(RuleApp::SignFact {
            label: "mu < sqrt2".into(),
            expr: mu.sub(&s2()).unwrap(),
            domain: dom.clone(),
            expect: -1,
        });
        let values = vec![
            ("reeb".into(), super::rules::sym_focal_reeb_entry(&s2(), &s2())),
            ("entry(0)".into(), sym_focal_entry_expr(&s2(), &zero())),
            ("entry(lambda)".into(), sym_focal_entry_expr(&s2(), &var())),
            ("entry(mu)".into(), sym_focal_entry_expr(&s2(), &mu)),
        ];
        b.fact(RuleApp::FocalValuesSym {
            alpha: s2(),
            spectrum: vec![
                ("sqrt2".into(), s2()),
                ("0".into(), zero()),
                ("lambda".into(), var()),
                ("mu".into(), mu.clone()),
            ],
            lambda_star: s2(),
            degenerate: false,
            domain: dom.clone(),
            claimed: values.clone(),
        });
        out.push(b.eliminate(RuleApp::SignCountElim {
            values,
            domain: dom,
        }));
    }

    // 0 < lambda < 1/sqrt2: the pair lies above sqrt2; handled there.
    {
        let dom = Domain::open(int(0), inv_sqrt2());
        let mut b = Branch::new(
            "g4.i-3.sqrt2.lambda-small",
            "Case-i-3, alpha = sqrt2, 0 < lambda < 1/sqrt2",
        );
        b.fact(RuleApp::PairSym {
            alpha: s2(),
            lambda: var(),
            domain: dom.clone(),
            label: "lambda".into(),
        });
        out.push(b.eliminate(RuleApp::PairSwapReduction {
            pair: mu.clone(),
            domain: dom,
            target: "g4.i-3.sqrt2.lambda-gt-sqrt2".into(),
            target_domain_sign: (mu.sub(&s2()).unwrap(), 1),
        }));
    }

    // 1/sqrt2 < lambda < sqrt2: the pair is negative; handled there.
    {
        let dom = Domain::open(inv_sqrt2(), sqrt2());
        let mut b = Branch::new(
            "g4.i-3.sqrt2.lambda-mid",
            "Case-i-3, alpha = sqrt2, 1/sqrt2 < lambda < sqrt2",
        );
        b.fact(RuleApp::PairSym {
            alpha: s2(),
            lambda: var(),
            domain: dom.clone(),
            label: "lambda".into(),
        });
        out.push(b.eliminate(RuleApp::PairSwapReduction {
            pair: mu.clone(),
            domain: dom,
            target: "g4.i-3.sqrt2.lambda-neg".into(),
            target_domain_sign: (mu.clone(), -1),
        }));
    }

    // lambda = 1/sqrt2: the degenerate pairing forces alpha = 2.
    let b = Branch::new(
        "g4.i-3.sqrt2.lambda=1/sqrt2",
        "Case-i-3, alpha = sqrt2, 2 lambda = alpha",
    );
    out.push(b.eliminate(RuleApp::DegeneratePairingContradiction {
        alpha: sqrt2(),
        lambda: inv_sqrt2(),
    }));

    out
}

/// Case-i-3 with alpha = 2: sigma(Q) = {2, 0, 1, lambda}.
fn case_i_3_alpha_2() -> Vec<BranchTrace> {
    let mut out = Vec::new();
    for (tag, dom, x_in_v0) in [
        ("l<0", Domain::below(int(0)), true),
        ("0<l<1", Domain::open(int(0), int(1)), false),
        ("1<l<2", Domain::open(int(1), int(2)), true),
        ("l>2", Domain::above(int(2)), true),
    ] {
        let mut b = Branch::new(
            &format!("g4.i-3.alpha=2[{}]", tag),
            "Case-i-3 with alpha = 2: sigma(Q) = {2, 0, 1, lambda}",
        );
        b.fact(RuleApp::PairValue {
            alpha: int(2),
            lambda: int(2),
        });
        b.fact(RuleApp::PairValue {
            alpha: int(2),
            lambda: int(0),
        });
        let (lam, others, orth): (Sym, Vec<Sym>, LambdaDesc) = if x_in_v0 {
            (zero(), vec![c(2), var()], LambdaDesc::Concrete(int(0)))
        } else {
            (var(), vec![c(2), zero()], LambdaDesc::SymOn(var(), dom.clone()))
        };
        b.fact(RuleApp::OrthogonalityFact { lambda: orth });
        out.push(b.eliminate(RuleApp::CartanSym {
            lambda: lam,
            mu: c(1),
            others,
            scenario: Scenario::YEqJxOrthA,
            domain: dom,
        }));
    }
    out
}

// ---------------------------------------------------------------------
// Case-i-4: neither alpha nor 0 in sigma(Q).
// ---------------------------------------------------------------------

fn case_i_4() -> Vec<BranchTrace> {
    let mut out = Vec::new();

    // 0 < alpha < 2, lambda != +-1: A-orthogonality eliminates.
    {
        let dom = Domain::open(int(0), int(2));
        let mut b = Branch::new(
            "g4.i-4.low.lambda-generic",
            "Case-i-4, 0 < alpha < 2, fourth eigenvalue lambda != +-1",
        );
        b.fact(RuleApp::Structural {
            alpha: "alpha".into(),
        });
        b.fact(RuleApp::NoRealSelfPair {
            domain: dom,
            terminal: false,
        });
        out.push(b.eliminate(RuleApp::AOrthogonality {
            lambda: LambdaDesc::Hypothesis(
                "branch hypothesis: lambda differs from +-1".into(),
            ),
            pair: "sigma(Q) = {lambda, pair(lambda)} spans Q; J V_lambda = V_pair".into(),
        }));
    }

    // 0 < alpha < 2, lambda = +-1: admissible away from alpha = 1.
    {
        let dom = Domain::open(int(0), int(2));
        let mut b = Branch::new(
            "g4.i-4.low.lambda=pm1",
            "Case-i-4, 0 < alpha < 2, sigma(Q) = {1, -1} (Theorem 1.1c case (2))",
        );
        b.fact(RuleApp::Structural {
            alpha: "alpha".into(),
        });
        b.fact(RuleApp::IdentityFact {
            label: "pair(1) for alpha != 2".into(),
            lhs: sym_reeb_pair(&var(), &c(1)),
            rhs: c(-1),
        });
        b.fact(RuleApp::MultiplicityForcing {
            structure: PairStructure::MirrorPair("1".into(), "-1".into()),
        });
        b.fact(RuleApp::SolveInDomain {
            label: "alpha = 1 (where the table collapses to three values)".into(),
            expr: var().sub(&c(1)).unwrap(),
            domain: dom,
            narrowing: false,
        });
        b.subcase_eliminated(RuleApp::PointCollapse {
            values: vec![
                ("alpha".into(), int(1)),
                ("0".into(), int(0)),
                ("1".into(), int(1)),
                ("-1".into(), int(-1)),
            ],
            g: 4,
        });
        out.push(b.admissible("thm-1.1c-2"));
    }

    // alpha > 2, lambda != +-1 and not self-paired: A-orthogonality.
    {
        let mut b = Branch::new(
            "g4.i-4.high.lambda-generic",
            "Case-i-4, alpha > 2, fourth eigenvalue lambda != +-1 with pair(lambda) != lambda",
        );
        b.fact(RuleApp::Structural {
            alpha: "alpha".into(),
        });
        out.push(b.eliminate(RuleApp::AOrthogonality {
            lambda: LambdaDesc::Hypothesis(
                "branch hypothesis: lambda differs from +-1 and from pair(lambda)".into(),
            ),
            pair: "sigma(Q) = {lambda, pair(lambda)} spans Q; J V_lambda = V_pair".into(),
        }));
    }

    // alpha > 2, lambda = +-1: admissible (Theorem 1.1c case (3)).
    {
        let dom = Domain::above(int(2));
        let mut b = Branch::new(
            "g4.i-4.high.lambda=pm1",
            "Case-i-4, alpha > 2, sigma(Q) = {1, -1} (Theorem 1.1c case (3))",
        );
        b.fact(RuleApp::Structural {
            alpha: "alpha".into(),
        });
        b.fact(RuleApp::IdentityFact {
            label: "pair(1) for alpha != 2".into(),
            lhs: sym_reeb_pair(&var(), &c(1)),
            rhs: c(-1),
        });
        b.fact(RuleApp::SignFact {
            label: "alpha - 1 (four distinct values)".into(),
            expr: var().sub(&c(1)).unwrap(),
            domain: dom,
            expect: 1,
        });
        b.fact(RuleApp::MultiplicityForcing {
            structure: PairStructure::MirrorPair("1".into(), "-1".into()),
        });
        out.push(b.admissible("thm-1.1c-3"));
    }

    // alpha > 2, self-paired spectrum: isometric Reeb flow, Example 3.5.
    {
        let dom = Domain::above(int(2));
        let mut b = Branch::new(
            "g4.i-4.high.self-paired",
            "Case-i-4, alpha > 2, sigma(Q) = {lambda_-, lambda_+} both self-paired (Theorem 1.1c case (1))",
        );
        b.fact(RuleApp::Structural {
            alpha: "alpha".into(),
        });
        b.fact(RuleApp::SelfPairedRoots { domain: dom.clone() });
        b.fact(RuleApp::SignFact {
            label: "lambda_- > 0".into(),
            expr: lambda_minus(),
            domain: dom.clone(),
            expect: 1,
        });
        b.fact(RuleApp::SignFact {
            label: "lambda_+ - lambda_- > 0".into(),
            expr: lambda_plus().sub(&lambda_minus()).unwrap(),
            domain: dom.clone(),
            expect: 1,
        });
        b.fact(RuleApp::ReebFlowLookup {
            g: 4,
            alpha: AlphaDesc::Open(dom),
        });
        out.push(b.admissible("thm-1.1c-1"));
    }

    // alpha = 2, lambda = -1: admissible (Theorem 1.1c case (4)).
    {
        let mut b = Branch::new(
            "g4.i-4.alpha=2.lambda=-1",
            "Case-i-4, alpha = 2, sigma(Q) = {-1, 1} (Theorem 1.1c case (4))",
        );
        b.fact(RuleApp::AlphaTwoForcesOne);
        b.fact(RuleApp::TwoValueForcedNorm {
            lambda: int(-1),
            mu: int(1),
        });
        b.fact(RuleApp::AlignedFrameDims);
        b.fact(RuleApp::MultiplicityForcing {
            structure: PairStructure::EqualByFrame("1".into(), "-1".into()),
        });
        out.push(b.admissible("thm-1.1c-4"));
    }

    // alpha = 2, lambda outside {2, 0, 1, -1}: two-value Cartan identity.
    for (tag, dom) in [
        ("l<-1", Domain::below(int(-1))),
        ("-1<l<0", Domain::open(int(-1), int(0))),
        ("0<l<1", Domain::open(int(0), int(1))),
        ("1<l<2", Domain::open(int(1), int(2))),
        ("l>2", Domain::above(int(2))),
    ] {
        let mut b = Branch::new(
            &format!("g4.i-4.alpha=2[{}]", tag),
            "Case-i-4, alpha = 2, sigma(Q) = {lambda, 1} with lambda != -1",
        );
        b.fact(RuleApp::AlphaTwoForcesOne);
        b.fact(RuleApp::OrthogonalityFact {
            lambda: LambdaDesc::SymOn(var(), dom.clone()),
        });
        out.push(b.eliminate(RuleApp::CartanSym {
            lambda: var(),
            mu: c(1),
            others: vec![],
            scenario: Scenario::YEqJxOrthA,
            domain: dom,
        }));
    }

    out
}

// ---------------------------------------------------------------------
// Case-ii: alpha = 0.
// ---------------------------------------------------------------------

fn case_ii() -> BranchTrace {
    let mut b = Branch::new(
        "g4.ii.alpha=0",
        "alpha = 0: sigma(Q) must hold three distinct values paired by lambda -> -1/lambda",
    );
    b.fact(RuleApp::Structural { alpha: "0".into() });
    b.fact(RuleApp::AlphaZeroNoZeroInSpectrum);
    b.eliminate(RuleApp::FixedPointFreeParity { count: 3 })
}

/// Focal values for g4.i-1.lambda-minus (lambda_+ = alpha, alpha > 2).
fn focal_values_i1_lambda_minus() -> (Vec<(String, Sym)>, Domain) {
    let reeb = super::rules::sym_focal_reeb_entry(&var(), &var());
    let entry_pair = sym_focal_entry_expr(&var(), &pair_alpha());
    let entry_lminus = sym_focal_entry_expr(&var(), &lambda_minus());
    (
        vec![
            ("reeb".into(), reeb),
            ("entry(pair(alpha))".into(), entry_pair),
            ("entry(lambda_-)".into(), entry_lminus),
        ],
        Domain::above(int(2)),
    )
}
