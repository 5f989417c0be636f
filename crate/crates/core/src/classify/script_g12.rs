//! Branch scripts for at most two distinct constant principal curvatures.

use super::rules::{AlphaDesc, LambdaDesc, PairStructure, RuleApp};
use super::{Branch, BranchTrace};
use crate::classify::script_util::*;
use crate::sym::Domain;

pub(crate) fn branches_g1() -> Vec<BranchTrace> {
    // One curvature: S = lambda Id commutes with phi, so M has isometric
    // Reeb flow; no catalog example is umbilical.
    let b = Branch::new(
        "g1.umbilical",
        "totally umbilical: S = lambda Id gives S phi = phi S (isometric Reeb flow)",
    );
    vec![b.eliminate(RuleApp::ReebFlowLookup {
        g: 1,
        alpha: AlphaDesc::NonNegative,
    })]
}

pub(crate) fn branches_g2() -> Vec<BranchTrace> {
    let mut out = Vec::new();

    // A-principal normal: lookup.
    let mut b = Branch::new(
        "g2.principal",
        "A-principal unit normal: classified by lookup",
    );
    b.fact(RuleApp::APrincipalLookup { g: 2 });
    out.push(b.admissible("thm-1.1a"));

    // Case-2-i, alpha in sigma(Q): pair(alpha) must be 0, forcing alpha = sqrt2,
    // then the A-orthogonality obstruction for lambda = sqrt2 eliminates.
    let mut b = Branch::new(
        "g2.iso.i.alpha-in-sigma",
        "A-isotropic, alpha > 0, alpha in sigma(Q): the two curvatures are alpha and 0",
    );
    b.fact(RuleApp::Structural {
        alpha: "alpha".into(),
    });
    b.fact(RuleApp::PairSym {
        alpha: var(),
        lambda: var(),
        domain: Domain::above(int(0)),
        label: "alpha".into(),
    });
    b.fact(RuleApp::SignFact {
        label: "pair(alpha) - alpha".into(),
        expr: pair_alpha().sub(&var()).unwrap(),
        domain: Domain::above(int(0)),
        expect: -1,
    });
    b.fact(RuleApp::SolveInDomain {
        label: "pair(alpha) = 0 (the only remaining curvature value)".into(),
        expr: pair_alpha(),
        domain: Domain::above(int(0)),
        narrowing: true,
    });
    b.fact(RuleApp::PairValue {
        alpha: sqrt2(),
        lambda: sqrt2(),
    });
    out.push(b.eliminate(RuleApp::AOrthogonality {
        lambda: LambdaDesc::Concrete(sqrt2()),
        pair: "sigma(Q) = {sqrt(2), 0} spans Q; J V_sqrt2 = V_0".into(),
    }));

    // Case-2-i, 0 in sigma(Q): pair(0) = 2/alpha must equal alpha.
    let mut b = Branch::new(
        "g2.iso.i.zero-in-sigma",
        "A-isotropic, alpha > 0, 0 in sigma(Q)",
    );
    b.fact(RuleApp::Structural {
        alpha: "alpha".into(),
    });
    b.fact(RuleApp::PairSym {
        alpha: var(),
        lambda: zero(),
        domain: Domain::above(int(0)),
        label: "0".into(),
    });
    b.fact(RuleApp::SignFact {
        label: "pair(0) = 2/alpha".into(),
        expr: pair_zero(),
        domain: Domain::above(int(0)),
        expect: 1,
    });
    b.fact(RuleApp::SolveInDomain {
        label: "pair(0) = alpha (the only remaining curvature value)".into(),
        expr: pair_zero().sub(&var()).unwrap(),
        domain: Domain::above(int(0)),
        narrowing: true,
    });
    b.fact(RuleApp::PairValue {
        alpha: sqrt2(),
        lambda: int(0),
    });
    out.push(b.eliminate(RuleApp::AOrthogonality {
        lambda: LambdaDesc::Concrete(int(0)),
        pair: "sigma(Q) = {0, sqrt(2)} spans Q; J V_0 = V_sqrt2".into(),
    }));

    // Case-2-ii, alpha = 0: sigma(Q) is a single eigenvalue, so S phi = phi S.
    let mut b = Branch::new(
        "g2.iso.ii.alpha-zero",
        "A-isotropic, alpha = 0: sigma(Q) = {lambda} forces isometric Reeb flow",
    );
    b.fact(RuleApp::Structural { alpha: "0".into() });
    b.fact(RuleApp::AlphaZeroNoZeroInSpectrum);
    b.fact(RuleApp::MultiplicityForcing {
        structure: PairStructure::SingleFull("lambda".into()),
    });
    out.push(b.eliminate(RuleApp::ReebFlowLookup {
        g: 2,
        alpha: AlphaDesc::Point(int(0)),
    }));

    out
}
