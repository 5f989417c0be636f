//! The rule vocabulary of the case-elimination engine.
//!
//! Every rule application carries its exact inputs and recomputes its
//! outputs on demand, so recorded traces can be re-executed step by step
//! and compared. A rule panics if a scripted identity fails to verify:
//! the scripts transcribe the case analysis, and a mismatch there is a bug,
//! not a branch verdict.

use crate::cartan::{self, Scenario};
use crate::config::PrincipalMultiset;
use crate::flow::{reeb_pair, ReebPair};
use crate::mult::Mult;
use crate::render::render_expr;
use crate::sym::{DomEnd, Domain, Sym, SymError};
use hopfq_exact::{AlgebraicReal, IntPoly};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fact {
    pub label: String,
    pub value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decimal: Option<String>,
}

impl Fact {
    pub fn text(label: &str, value: impl Into<String>) -> Fact {
        Fact {
            label: label.to_string(),
            value: value.into(),
            decimal: None,
        }
    }

    pub fn scalar(label: &str, v: &AlgebraicReal) -> Fact {
        Fact {
            label: label.to_string(),
            value: scalar_string(v),
            decimal: Some(v.to_decimal(12)),
        }
    }
}

pub fn scalar_string(v: &AlgebraicReal) -> String {
    match render_expr(v) {
        Some(s) => s,
        None => format!("root of {} near {}", v.minpoly(), v.to_decimal(9)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Finding {
    /// Informational facts; the branch continues.
    Established,
    /// The branch is impossible.
    Contradiction { reason: String },
    /// The branch narrows (e.g. alpha pinned to a point).
    Narrowed { to: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepOutput {
    pub facts: Vec<Fact>,
    pub finding: Finding,
}

impl StepOutput {
    fn established(facts: Vec<Fact>) -> StepOutput {
        StepOutput {
            facts,
            finding: Finding::Established,
        }
    }

    fn contradiction(facts: Vec<Fact>, reason: impl Into<String>) -> StepOutput {
        StepOutput {
            facts,
            finding: Finding::Contradiction {
                reason: reason.into(),
            },
        }
    }
}

/// Description of the branch's alpha for catalog lookups.
#[derive(Debug, Clone)]
pub enum AlphaDesc {
    Point(AlgebraicReal),
    Open(Domain),
    /// The wlog normalization alpha >= 0.
    NonNegative,
}

impl AlphaDesc {
    fn admits(&self, v: &AlgebraicReal) -> bool {
        match self {
            AlphaDesc::Point(p) => p.compare(v) == Ordering::Equal,
            AlphaDesc::Open(d) => d.contains(v),
            AlphaDesc::NonNegative => v.sign() >= 0,
        }
    }

    fn admits_above(&self, bound: &AlgebraicReal) -> bool {
        match self {
            AlphaDesc::Point(p) => p.compare(bound) == Ordering::Greater,
            AlphaDesc::Open(d) => match &d.hi {
                DomEnd::PosInf => true,
                DomEnd::NegInf => false,
                DomEnd::At(h) => h.compare(bound) == Ordering::Greater,
            },
            AlphaDesc::NonNegative => true,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            AlphaDesc::Point(p) => format!("alpha = {}", scalar_string(p)),
            AlphaDesc::Open(d) => format!("alpha in {}", d.describe()),
            AlphaDesc::NonNegative => "alpha >= 0".to_string(),
        }
    }
}

/// Where the unknown eigenvalue lives in a rule that needs lambda != +-1.
#[derive(Debug, Clone)]
pub enum LambdaDesc {
    Concrete(AlgebraicReal),
    SymOn(Sym, Domain),
    /// Unconstrained unknown; distinctness from +-1 is the branch hypothesis.
    Hypothesis(String),
}

#[derive(Debug, Clone)]
pub enum RuleApp {
    /// Lemma 2.6: the structural entries (alpha, 1) and (0, 2).
    Structural { alpha: String },
    /// Reeb pairing of two concrete values.
    PairValue {
        alpha: AlgebraicReal,
        lambda: AlgebraicReal,
    },
    /// Reeb pairing with symbolic entries over a domain.
    PairSym {
        alpha: Sym,
        lambda: Sym,
        domain: Domain,
        label: String,
    },
    /// 2 lambda = alpha with alpha*lambda != 2: phi X = 0, impossible.
    DegeneratePairingContradiction {
        alpha: AlgebraicReal,
        lambda: AlgebraicReal,
    },
    /// alpha = 0 excludes 0 from sigma(Q).
    AlphaZeroNoZeroInSpectrum,
    /// alpha = 2: the pairing sends every lambda != 1 to 1.
    AlphaTwoForcesOne,
    /// lambda^2 - alpha*lambda + 1 has no real root on the alpha-domain.
    NoRealSelfPair { domain: Domain, terminal: bool },
    /// alpha > 2: the two self-paired values exist and are distinct.
    SelfPairedRoots { domain: Domain },
    /// A derived spectrum membership contradicts a branch flag.
    ForcedMembership {
        alpha: AlgebraicReal,
        lambda: AlgebraicReal,
        forced: AlgebraicReal,
        conflicts_with: String,
    },
    /// Solve expr = 0 on a domain; roots become recorded facts.
    SolveInDomain {
        label: String,
        expr: Sym,
        domain: Domain,
        narrowing: bool,
    },
    /// Verify a constant sign of an expression on a domain.
    SignFact {
        label: String,
        expr: Sym,
        domain: Domain,
        expect: i32,
    },
    /// Pairwise-distinct values exceed the branch's g.
    DistinctExceedsG {
        values: Vec<(String, Sym)>,
        domain: Domain,
        g: u8,
    },
    /// At a concrete point the values collapse below g distinct.
    PointCollapse {
        values: Vec<(String, AlgebraicReal)>,
        g: u8,
    },
    /// Lemma 5.1(3) obstruction: sigma(Q) = {lambda, pair(lambda)} spans Q
    /// and lambda != +-1, so A V_lambda is orthogonal to Q yet inside it.
    AOrthogonality { lambda: LambdaDesc, pair: String },
    /// Lemma 5.1(3) as a frame fact only: A V_lambda is orthogonal to
    /// span{V_lambda, J V_lambda} (no contradiction; feeds a scenario).
    OrthogonalityFact { lambda: LambdaDesc },
    /// Cartan identity on concrete values.
    CartanConcrete {
        lambda: AlgebraicReal,
        mu: AlgebraicReal,
        spectrum: Vec<AlgebraicReal>,
        scenario: Scenario,
    },
    /// Cartan identity with symbolic entries over a domain.
    CartanSym {
        lambda: Sym,
        mu: Sym,
        others: Vec<Sym>,
        scenario: Scenario,
        domain: Domain,
    },
    /// Two-value Cartan identity forces g(AX,X)^2 + g(AX,JX)^2 = 1.
    TwoValueForcedNorm {
        lambda: AlgebraicReal,
        mu: AlgebraicReal,
    },
    /// The aligned-frame computation: assuming dim V_1 > dim V_{-1} forces
    /// g(AX1,X1) = -1 and g(AX1,X1) = +1 simultaneously.
    AlignedFrameDims,
    /// Multiplicity bookkeeping from the pairing structure.
    MultiplicityForcing { structure: PairStructure },
    /// Lookup against the isometric-Reeb-flow classification.
    ReebFlowLookup { g: u8, alpha: AlphaDesc },
    /// Lookup against the A-principal classification.
    APrincipalLookup { g: u8 },
    /// Verify the focal side and the claimed focal curvature expressions.
    FocalValuesSym {
        alpha: Sym,
        spectrum: Vec<(String, Sym)>,
        lambda_star: Sym,
        degenerate: bool,
        domain: Domain,
        claimed: Vec<(String, Sym)>,
    },
    /// Distinct positive vs negative focal values cannot balance.
    SignCountElim {
        values: Vec<(String, Sym)>,
        domain: Domain,
    },
    /// The austere-sum pipeline: coincidence points, cleared polynomial,
    /// roots, and per-point concrete austere checks.
    AustereSumElim {
        values: Vec<(String, Sym)>,
        domain: Domain,
    },
    /// dim V_0 = 1 frame computation: 2/(alpha - sqrt(alpha^2-4)) = 0 is
    /// forced but the value is positive.
    DimV0One { domain: Domain },
    /// Exchanging lambda and pair(lambda) maps this branch into another,
    /// already-eliminated one.
    PairSwapReduction {
        pair: Sym,
        domain: Domain,
        target: String,
        target_domain_sign: (Sym, i32),
    },
    /// Concrete focal multiset + austere verdict for a pinned config.
    FocalAustereConcrete {
        config: crate::config::HopfConfig,
    },
    /// lhs - rhs vanishes identically (an exact symbolic identity).
    IdentityFact {
        label: String,
        lhs: Sym,
        rhs: Sym,
    },
    /// alpha = 0: the pairing lambda -> -1/lambda is a fixed-point-free
    /// involution, so the number of distinct sigma(Q) values must be even.
    FixedPointFreeParity { count: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairStructure {
    /// {v, pair(v)} with phi V_v = V_pair: equal dimensions m-2 each.
    MirrorPair(String, String),
    /// sigma(Q) is a single eigenvalue of dimension 2m-4.
    SingleFull(String),
    /// Equal dimensions m-2 forced by the aligned-frame computation.
    EqualByFrame(String, String),
}

fn sign_word(s: i32) -> &'static str {
    match s.cmp(&0) {
        Ordering::Less => "negative",
        Ordering::Equal => "zero",
        Ordering::Greater => "positive",
    }
}

fn expect_sign(label: &str, expr: &Sym, domain: &Domain, expect: i32) -> Fact {
    let got = expr
        .sign_in(domain)
        .unwrap_or_else(|e| panic!("sign of {} on {}: {}", label, domain.describe(), e));
    assert_eq!(
        got,
        expect,
        "scripted sign of {} on {} expected {}",
        label,
        domain.describe(),
        expect
    );
    Fact::text(
        &format!("sign({})", label),
        format!("{} on {}", sign_word(got), domain.describe()),
    )
}

fn lambda_not_pm1_facts(lambda: &LambdaDesc) -> Vec<Fact> {
    let mut facts = Vec::new();
    match lambda {
        LambdaDesc::Concrete(v) => {
            let one = AlgebraicReal::one();
            assert_ne!(v.compare(&one), Ordering::Equal, "lambda != 1");
            assert_ne!(v.compare(&one.neg()), Ordering::Equal, "lambda != -1");
            facts.push(Fact::scalar("lambda", v));
        }
        LambdaDesc::SymOn(expr, dom) => {
            let m1 = expr.sub(&Sym::from_int(1)).unwrap();
            let p1 = expr.add(&Sym::from_int(1)).unwrap();
            facts.push(no_zeros("lambda != 1", &m1, dom));
            facts.push(no_zeros("lambda != -1", &p1, dom));
        }
        LambdaDesc::Hypothesis(h) => {
            facts.push(Fact::text("lambda != +-1", h.clone()));
        }
    }
    facts
}

fn no_zeros(label: &str, expr: &Sym, domain: &Domain) -> Fact {
    let zs = expr
        .zeros_in(domain)
        .unwrap_or_else(|e| panic!("zeros of {}: {}", label, e));
    assert!(
        zs.is_empty(),
        "scripted distinctness of {} fails at {:?}",
        label,
        zs
    );
    Fact::text(label, format!("no zero on {}", domain.describe()))
}

pub fn sym_reeb_pair(alpha: &Sym, lambda: &Sym) -> Sym {
    let num = alpha
        .mul(lambda)
        .unwrap()
        .sub(&Sym::from_int(2))
        .unwrap();
    let den = lambda.mul_int(2).sub(alpha).unwrap();
    num.div(&den).unwrap()
}

pub fn sym_focal_entry(lambda_star: &Sym, li: &Sym) -> Sym {
    let num = lambda_star
        .mul(li)
        .unwrap()
        .sub(&Sym::from_int(1))
        .unwrap();
    let den = lambda_star.sub(li).unwrap();
    num.div(&den).unwrap()
}

pub fn sym_focal_reeb_entry(alpha: &Sym, lambda_star: &Sym) -> Sym {
    let disc = alpha
        .mul(alpha)
        .unwrap()
        .sub(&Sym::from_int(4))
        .unwrap();
    let num = disc.mul(lambda_star).unwrap();
    let den = lambda_star
        .mul(lambda_star)
        .unwrap()
        .sub(&alpha.mul(lambda_star).unwrap())
        .unwrap()
        .add(&Sym::from_int(1))
        .unwrap();
    alpha.add(&num.div(&den).unwrap()).unwrap()
}

/// lambda^2 - alpha*lambda + 1 viewed as a polynomial in alpha? No: in the
/// classifier the free variable is alpha, and the self-pair equation for an
/// unknown lambda has real roots iff alpha^2 - 4 >= 0.
fn discriminant_poly() -> IntPoly {
    IntPoly::from_i64(&[-4, 0, 1])
}

impl RuleApp {
    pub fn id(&self) -> &'static str {
        match self {
            RuleApp::Structural { .. } => "R2-structural",
            RuleApp::PairValue { .. } => "R3-pair",
            RuleApp::PairSym { .. } => "R3-pair-sym",
            RuleApp::DegeneratePairingContradiction { .. } => "R3-degenerate-pairing",
            RuleApp::AlphaZeroNoZeroInSpectrum => "R3-alpha0-no-zero",
            RuleApp::AlphaTwoForcesOne => "R3-alpha2-forces-one",
            RuleApp::NoRealSelfPair { .. } => "R3-no-self-pair",
            RuleApp::SelfPairedRoots { .. } => "R3-self-paired-roots",
            RuleApp::ForcedMembership { .. } => "R3-membership",
            RuleApp::SolveInDomain { .. } => "R8-solve",
            RuleApp::SignFact { .. } => "sign-fact",
            RuleApp::DistinctExceedsG { .. } => "g-budget",
            RuleApp::PointCollapse { .. } => "g-collapse",
            RuleApp::AOrthogonality { .. } => "R4-a-orthogonality",
            RuleApp::OrthogonalityFact { .. } => "orthogonality-fact",
            RuleApp::CartanConcrete { .. } => "R5-cartan",
            RuleApp::CartanSym { .. } => "R5-cartan-sym",
            RuleApp::TwoValueForcedNorm { .. } => "R5-two-value-norm",
            RuleApp::AlignedFrameDims => "R5-aligned-frame",
            RuleApp::MultiplicityForcing { .. } => "mult-forcing",
            RuleApp::ReebFlowLookup { .. } => "R7-reeb-flow-lookup",
            RuleApp::APrincipalLookup { .. } => "R1-a-principal-lookup",
            RuleApp::FocalValuesSym { .. } => "R6-focal-values",
            RuleApp::SignCountElim { .. } => "R6-sign-count",
            RuleApp::AustereSumElim { .. } => "R6-austere-sum",
            RuleApp::DimV0One { .. } => "dim-v0-one",
            RuleApp::PairSwapReduction { .. } => "pair-swap-reduction",
            RuleApp::FocalAustereConcrete { .. } => "R6-focal-austere",
            RuleApp::IdentityFact { .. } => "identity",
            RuleApp::FixedPointFreeParity { .. } => "R3-parity",
        }
    }

    pub fn run(&self) -> StepOutput {
        match self {
            RuleApp::Structural { alpha } => StepOutput::established(vec![
                Fact::text("Reeb entry", format!("({}, 1)", alpha)),
                Fact::text("0-block (AN, Axi)", "(0, 2)"),
            ]),

            RuleApp::PairValue { alpha, lambda } => {
                let facts;
                match reeb_pair(alpha, lambda).expect("alpha >= 0 in scripts") {
                    ReebPair::Value(mu) => {
                        facts = vec![
                            Fact::scalar("lambda", lambda),
                            Fact::scalar("pair(lambda)", &mu),
                        ];
                    }
                    ReebPair::Degenerate => {
                        facts = vec![
                            Fact::scalar("lambda", lambda),
                            Fact::text("pair(lambda)", "degenerate (2 lambda = alpha)"),
                        ];
                    }
                }
                StepOutput::established(facts)
            }

            RuleApp::PairSym {
                alpha,
                lambda,
                domain,
                label,
            } => {
                let den = lambda.mul_int(2).sub(alpha).unwrap();
                let f1 = no_zeros(
                    &format!("2*{} - alpha nonvanishing", label),
                    &den,
                    domain,
                );
                let pair = sym_reeb_pair(alpha, lambda);
                StepOutput::established(vec![
                    f1,
                    Fact::text(&format!("pair({})", label), format!("{}", pair)),
                ])
            }

            RuleApp::DegeneratePairingContradiction { alpha, lambda } => {
                let den = lambda.mul_rational(&hopfq_exact::rat(2, 1)).sub(alpha);
                let num = alpha.mul(lambda).sub(&AlgebraicReal::from_int(2));
                assert_eq!(den.sign(), 0, "scripted degenerate pairing");
                assert_ne!(num.sign(), 0, "scripted degenerate pairing numerator");
                StepOutput::contradiction(
                    vec![
                        Fact::scalar("2*lambda - alpha", &den),
                        Fact::scalar("alpha*lambda - 2", &num),
                    ],
                    "(2 lambda - alpha) S phi X = (alpha lambda - 2) phi X forces phi X = 0",
                )
            }

            RuleApp::AlphaZeroNoZeroInSpectrum => StepOutput::established(vec![
                Fact::text("2*lambda - alpha at (0, 0)", "0"),
                Fact::text("alpha*lambda - 2 at (0, 0)", "-2"),
                Fact::text("conclusion", "0 in sigma(Q) would force phi X = 0; so 0 not in sigma(Q)"),
            ]),

            RuleApp::AlphaTwoForcesOne => {
                // (2 lambda - 2)/(2 lambda - 2) = 1 identically for lambda != 1.
                let alpha = Sym::from_int(2);
                let lambda = Sym::var();
                let pair = sym_reeb_pair(&alpha, &lambda);
                let diff = pair.sub(&Sym::from_int(1)).unwrap();
                assert!(diff.is_identically_zero(), "pair at alpha=2 is 1");
                StepOutput::established(vec![Fact::text(
                    "pair(lambda) at alpha = 2",
                    "1 for every lambda != 1; hence 1 in sigma(Q)",
                )])
            }

            RuleApp::NoRealSelfPair { domain, terminal } => {
                let disc = Sym::from_poly(discriminant_poly());
                let f = expect_sign("alpha^2 - 4", &disc, domain, -1);
                let facts = vec![
                    f,
                    Fact::text(
                        "lambda^2 - alpha*lambda + 1",
                        "negative discriminant: no real self-paired lambda",
                    ),
                ];
                if *terminal {
                    StepOutput::contradiction(
                        facts,
                        "the branch requires a self-paired fourth eigenvalue, none exists",
                    )
                } else {
                    StepOutput::established(facts)
                }
            }

            RuleApp::SelfPairedRoots { domain } => {
                let disc = Sym::from_poly(discriminant_poly());
                let f = expect_sign("alpha^2 - 4", &disc, domain, 1);
                StepOutput::established(vec![
                    f,
                    Fact::text(
                        "self-paired eigenvalues",
                        "lambda_- = (alpha - sqrt(alpha^2-4))/2, lambda_+ = (alpha + sqrt(alpha^2-4))/2, distinct",
                    ),
                ])
            }

            RuleApp::ForcedMembership {
                alpha,
                lambda,
                forced,
                conflicts_with,
            } => {
                match reeb_pair(alpha, lambda).expect("alpha >= 0") {
                    ReebPair::Value(mu) => {
                        assert_eq!(mu.compare(forced), Ordering::Equal, "scripted pair value");
                    }
                    ReebPair::Degenerate => panic!("scripted pair is degenerate"),
                }
                StepOutput::contradiction(
                    vec![
                        Fact::scalar("pair input", lambda),
                        Fact::scalar("forced member of sigma(Q)", forced),
                    ],
                    format!("forced membership contradicts {}", conflicts_with),
                )
            }

            RuleApp::SolveInDomain {
                label,
                expr,
                domain,
                narrowing,
            } => {
                let roots = expr
                    .zeros_in(domain)
                    .unwrap_or_else(|e| panic!("solve {}: {}", label, e));
                let mut facts = vec![Fact::text(
                    &format!("equation {}", label),
                    format!(
                        "cleared polynomial {} on {}",
                        expr.cleared_numerator(),
                        domain.describe()
                    ),
                )];
                if roots.is_empty() {
                    facts.push(Fact::text("roots", "none"));
                } else {
                    for (i, r) in roots.iter().enumerate() {
                        facts.push(Fact::scalar(&format!("root[{}]", i), r));
                    }
                }
                let finding = if *narrowing && !roots.is_empty() {
                    Finding::Narrowed {
                        to: roots
                            .iter()
                            .map(scalar_string)
                            .collect::<Vec<_>>()
                            .join(", "),
                    }
                } else {
                    Finding::Established
                };
                StepOutput {
                    facts,
                    finding,
                }
            }

            RuleApp::SignFact {
                label,
                expr,
                domain,
                expect,
            } => StepOutput::established(vec![expect_sign(label, expr, domain, *expect)]),

            RuleApp::DistinctExceedsG { values, domain, g } => {
                let mut facts = Vec::new();
                for i in 0..values.len() {
                    for j in i + 1..values.len() {
                        let d = values[i].1.sub(&values[j].1).unwrap();
                        facts.push(no_zeros(
                            &format!("{} != {}", values[i].0, values[j].0),
                            &d,
                            domain,
                        ));
                    }
                }
                StepOutput::contradiction(
                    facts,
                    format!(
                        "{} pairwise distinct principal curvatures exceed g = {}",
                        values.len(),
                        g
                    ),
                )
            }

            RuleApp::PointCollapse { values, g } => {
                let mut distinct: Vec<&AlgebraicReal> = Vec::new();
                for (_, v) in values {
                    if !distinct.iter().any(|w| w.compare(v) == Ordering::Equal) {
                        distinct.push(v);
                    }
                }
                let facts: Vec<Fact> = values
                    .iter()
                    .map(|(n, v)| Fact::scalar(n, v))
                    .collect();
                assert!(
                    distinct.len() < *g as usize,
                    "scripted collapse did not occur"
                );
                StepOutput::contradiction(
                    facts,
                    format!(
                        "only {} distinct principal curvatures, branch requires g = {}",
                        distinct.len(),
                        g
                    ),
                )
            }

            RuleApp::AOrthogonality { lambda, pair } => {
                let mut facts = lambda_not_pm1_facts(lambda);
                facts.push(Fact::text("pairing", pair.clone()));
                StepOutput::contradiction(
                    facts,
                    "A V_lambda is orthogonal to span{V_lambda, J V_lambda} = Q yet A V_lambda lies in Q",
                )
            }

            RuleApp::OrthogonalityFact { lambda } => {
                let mut facts = lambda_not_pm1_facts(lambda);
                facts.push(Fact::text(
                    "conclusion",
                    "A V_lambda is orthogonal to span{V_lambda, J V_lambda}: g(AX,X) = g(AX,JX) = 0",
                ));
                StepOutput::established(facts)
            }

            RuleApp::CartanConcrete {
                lambda,
                mu,
                spectrum,
                scenario,
            } => {
                let geom = scenario.geometry().expect("scripted scenario valid");
                let ms = PrincipalMultiset::from_entries(
                    spectrum.iter().map(|v| (v.clone(), Mult::ONE)).collect(),
                );
                let rhs = cartan::cartan_rhs(lambda, mu, &geom).expect("lambda != mu");
                let cert = cartan::lhs_sign(lambda, mu, &ms).expect("values in spectrum");
                let verdict =
                    cartan::contradiction_check(lambda, mu, &ms, &geom).expect("valid inputs");
                let mut facts = vec![
                    Fact::text("scenario", scenario.name()),
                    Fact::scalar("rhs", &rhs),
                    Fact::text("lhs-certificate", format!("{:?}", cert.verdict)),
                ];
                for (mu_i, s) in &cert.witnesses {
                    facts.push(Fact::text(
                        &format!("(lambda - {mu_i})(mu - {mu_i})", mu_i = scalar_string(mu_i)),
                        sign_word(*s),
                    ));
                }
                match verdict {
                    cartan::Verdict::Contradiction(reason) => {
                        StepOutput::contradiction(facts, reason)
                    }
                    cartan::Verdict::Consistent => StepOutput::established(facts),
                }
            }

            RuleApp::CartanSym {
                lambda,
                mu,
                others,
                scenario,
                domain,
            } => {
                let geom = scenario.geometry().expect("scripted scenario valid");
                let bracket = geom.bracket();
                let bracket_rat = bracket
                    .as_rational()
                    .expect("scenario brackets are rational");
                let mut facts = vec![
                    Fact::text("scenario", scenario.name()),
                    Fact::scalar("bracket", &bracket),
                ];
                // rhs = (lambda mu - 1) * bracket
                let factor = lambda
                    .mul(mu)
                    .unwrap()
                    .sub(&Sym::from_int(1))
                    .unwrap();
                let rhs = factor.mul(&Sym::from_rat(&bracket_rat)).unwrap();
                let rhs_sign = rhs
                    .sign_in(domain)
                    .unwrap_or_else(|e| panic!("rhs sign: {}", e));
                facts.push(Fact::text(
                    "sign(rhs)",
                    format!("{} on {}", sign_word(rhs_sign), domain.describe()),
                ));
                let mut prods = Vec::new();
                for (i, o) in others.iter().enumerate() {
                    let p = lambda
                        .sub(o)
                        .unwrap()
                        .mul(&mu.sub(o).unwrap())
                        .unwrap();
                    let s = p
                        .sign_in(domain)
                        .unwrap_or_else(|e| panic!("product sign: {}", e));
                    facts.push(Fact::text(
                        &format!("(lambda - mu_{i})(mu - mu_{i})", i = i),
                        sign_word(s),
                    ));
                    prods.push(s);
                }
                let verdict = if prods.is_empty() {
                    if rhs_sign != 0 {
                        Some("two spectrum values force 0 on the left, right side nonzero")
                    } else {
                        None
                    }
                } else if prods.iter().all(|s| *s > 0) && rhs_sign < 0 {
                    Some("left side nonnegative, right side negative")
                } else if prods.iter().all(|s| *s < 0) && rhs_sign > 0 {
                    Some("left side nonpositive, right side positive")
                } else {
                    None
                };
                match verdict {
                    Some(reason) => StepOutput::contradiction(facts, reason),
                    None => StepOutput::established(facts),
                }
            }

            RuleApp::TwoValueForcedNorm { lambda, mu } => {
                let factor = lambda.mul(mu).sub(&AlgebraicReal::one());
                assert_ne!(factor.sign(), 0, "lambda mu != 1 in the scripted case");
                StepOutput::established(vec![
                    Fact::scalar("lambda*mu - 1", &factor),
                    Fact::text(
                        "forced",
                        "0 = (lambda mu - 1)(3 - 3(g(AX,X)^2 + g(AX,JX)^2)) so g(AX,X)^2 + g(AX,JX)^2 = 1",
                    ),
                ])
            }

            RuleApp::AlignedFrameDims => {
                // bracket with Y1 (A Y1 = Y1): 1 + u; with J Y1 (A J Y1 = -J Y1): 1 - u.
                // 0 = -2(1 + u) forces u = -1; 0 = -2(1 - u) forces u = 1.
                let u1 = AlgebraicReal::from_int(-1);
                let u2 = AlgebraicReal::from_int(1);
                assert_ne!(u1.compare(&u2), Ordering::Equal);
                StepOutput::established(vec![
                    Fact::text("0 = -2(1 + g(AX1,X1))", "g(AX1,X1) = -1"),
                    Fact::text("0 = -2(1 - g(AX1,X1))", "g(AX1,X1) = +1"),
                    Fact::text(
                        "conclusion",
                        "dim V_1 > dim V_{-1} is impossible; dim V_1 = dim V_{-1}",
                    ),
                ])
            }

            RuleApp::MultiplicityForcing { structure } => {
                let facts = match structure {
                    PairStructure::MirrorPair(a, b) => {
                        // dim V_a = dim V_b and the total is 2m-4.
                        let each = Mult::new(1, -2);
                        let total = each + each;
                        assert_eq!(total, Mult::new(2, -4));
                        vec![
                            Fact::text(
                                "phi-isomorphism",
                                format!("phi V_{} = V_{} forces equal dimensions", a, b),
                            ),
                            Fact::text(
                                "multiplicities",
                                format!("dim V_{} = dim V_{} = m-2", a, b),
                            ),
                        ]
                    }
                    PairStructure::SingleFull(v) => vec![Fact::text(
                        "multiplicities",
                        format!("sigma(Q) = {{{}}} with dim V_{} = 2m-4", v, v),
                    )],
                    PairStructure::EqualByFrame(a, b) => {
                        let each = Mult::new(1, -2);
                        assert_eq!(each + each, Mult::new(2, -4));
                        vec![Fact::text(
                            "multiplicities",
                            format!(
                                "the aligned-frame computation forces dim V_{} = dim V_{} = m-2",
                                a, b
                            ),
                        )]
                    }
                };
                StepOutput::established(facts)
            }

            RuleApp::ReebFlowLookup { g, alpha } => {
                let mut matches = Vec::new();
                let two = AlgebraicReal::from_int(2);
                if *g == 3 && alpha.admits(&two) {
                    matches.push("3.4");
                }
                if *g == 4 && alpha.admits_above(&two) {
                    matches.push("3.5");
                }
                let mut facts = vec![Fact::text("constraint", alpha.describe())];
                if matches.is_empty() {
                    facts.push(Fact::text("isometric-Reeb-flow catalog", "no match"));
                    StepOutput::contradiction(
                        facts,
                        format!(
                            "S phi = phi S forces an isometric-Reeb-flow example; none has g = {} under {}",
                            g,
                            alpha.describe()
                        ),
                    )
                } else {
                    facts.push(Fact::text(
                        "isometric-Reeb-flow catalog",
                        matches.join(", "),
                    ));
                    StepOutput::established(facts)
                }
            }

            RuleApp::APrincipalLookup { g } => {
                let matches: Vec<&str> = match g {
                    2 => vec!["3.1"],
                    3 => vec!["3.2", "3.3"],
                    _ => vec![],
                };
                if matches.is_empty() {
                    StepOutput::contradiction(
                        vec![Fact::text("A-principal catalog", "no match")],
                        format!("no A-principal example has g = {}", g),
                    )
                } else {
                    StepOutput::established(vec![Fact::text(
                        "A-principal catalog",
                        matches.join(", "),
                    )])
                }
            }

            RuleApp::FocalValuesSym {
                alpha,
                spectrum,
                lambda_star,
                degenerate,
                domain,
                claimed,
            } => {
                let mut facts = Vec::new();
                // lambda_* dominates: > 1 and > every other spectrum value.
                facts.push(expect_sign(
                    "lambda_* - 1",
                    &lambda_star.sub(&Sym::from_int(1)).unwrap(),
                    domain,
                    1,
                ));
                for (name, v) in spectrum {
                    let d = lambda_star.sub(v).unwrap();
                    if d.is_identically_zero() {
                        continue;
                    }
                    facts.push(expect_sign(
                        &format!("lambda_* - {}", name),
                        &d,
                        domain,
                        1,
                    ));
                }
                // For alpha > 2 the Reeb factor collapses first unless
                // lambda_* is at least the threshold (alpha + sqrt(alpha^2-4))/2.
                let disc = alpha
                    .mul(alpha)
                    .unwrap()
                    .sub(&Sym::from_int(4))
                    .unwrap();
                if disc.sign_in(domain) == Ok(1) {
                    assert_eq!(
                        alpha,
                        &Sym::var(),
                        "threshold check expects alpha as the free variable"
                    );
                    let threshold = Sym::var()
                        .add(&Sym::radical(discriminant_poly()))
                        .unwrap()
                        .div(&Sym::from_int(2))
                        .unwrap();
                    facts.push(expect_sign(
                        "lambda_* - (alpha + sqrt(alpha^2-4))/2",
                        &lambda_star.sub(&threshold).unwrap(),
                        domain,
                        1,
                    ));
                }
                // degenerate branch: the Jacobi factor vanishes identically.
                let jacobi = lambda_star
                    .mul(lambda_star)
                    .unwrap()
                    .sub(&alpha.mul(lambda_star).unwrap())
                    .unwrap()
                    .add(&Sym::from_int(1))
                    .unwrap();
                if *degenerate {
                    assert!(
                        jacobi.is_identically_zero(),
                        "scripted degenerate focal branch"
                    );
                    facts.push(Fact::text(
                        "Jacobi factor lambda_*^2 - alpha lambda_* + 1",
                        "identically zero: Reeb entry drops",
                    ));
                } else {
                    facts.push(no_zeros(
                        "Jacobi factor lambda_*^2 - alpha lambda_* + 1",
                        &jacobi,
                        domain,
                    ));
                }
                // Recompute the claimed focal expressions from the formulas.
                let mut expected: Vec<(String, Sym)> = Vec::new();
                if !*degenerate {
                    expected.push((
                        "reeb".to_string(),
                        sym_focal_reeb_entry(alpha, lambda_star),
                    ));
                }
                for (name, v) in spectrum {
                    if lambda_star.sub(v).unwrap().is_identically_zero() {
                        continue;
                    }
                    expected.push((format!("entry({})", name), sym_focal_entry(lambda_star, v)));
                }
                assert_eq!(
                    expected.len(),
                    claimed.len(),
                    "scripted focal value count"
                );
                for ((en, ev), (cn, cv)) in expected.iter().zip(claimed.iter()) {
                    let diff = ev.sub(cv).unwrap();
                    assert!(
                        diff.is_identically_zero(),
                        "claimed focal value {} ({}) differs from formula {}",
                        cn,
                        cv,
                        en
                    );
                    facts.push(Fact::text(
                        &format!("focal value {}", cn),
                        format!("{}", cv),
                    ));
                }
                facts.push(Fact::text("block entry", "0 with multiplicity 2"));
                StepOutput::established(facts)
            }

            RuleApp::SignCountElim { values, domain } => {
                let mut facts = Vec::new();
                let mut pos: Vec<&(String, Sym)> = Vec::new();
                let mut neg: Vec<&(String, Sym)> = Vec::new();
                for pair in values {
                    let (name, v) = pair;
                    let s = v
                        .sign_in(domain)
                        .unwrap_or_else(|e| panic!("focal sign of {}: {}", name, e));
                    facts.push(Fact::text(
                        &format!("sign({})", name),
                        sign_word(s).to_string(),
                    ));
                    if s > 0 {
                        pos.push(pair);
                    } else if s < 0 {
                        neg.push(pair);
                    }
                }
                for group in [&pos, &neg] {
                    for i in 0..group.len() {
                        for j in i + 1..group.len() {
                            let d = group[i].1.sub(&group[j].1).unwrap();
                            facts.push(no_zeros(
                                &format!("{} != {}", group[i].0, group[j].0),
                                &d,
                                domain,
                            ));
                        }
                    }
                }
                assert_ne!(
                    pos.len(),
                    neg.len(),
                    "scripted sign-count elimination needs unbalanced groups"
                );
                StepOutput::contradiction(
                    facts,
                    format!(
                        "{} distinct positive vs {} distinct negative focal curvatures: the multiset cannot be sign-symmetric, so the focal submanifold is not austere",
                        pos.len(),
                        neg.len()
                    ),
                )
            }

            RuleApp::AustereSumElim { values, domain } => {
                run_austere_sum_elim(values, domain)
            }

            RuleApp::DimV0One { domain } => {
                let w = Sym::radical(discriminant_poly());
                let den = Sym::var().sub(&w).unwrap();
                let e = Sym::from_int(2).div(&den).unwrap();
                let f = expect_sign("2/(alpha - sqrt(alpha^2-4))", &e, domain, 1);
                StepOutput::contradiction(
                    vec![
                        Fact::text(
                            "frame computation (dim V_0 = 1)",
                            "g(nabla_{e5} e1, e3) must equal both 2/(alpha - sqrt(alpha^2-4)) and 0",
                        ),
                        f,
                    ],
                    "2/(alpha - sqrt(alpha^2-4)) is positive, never 0",
                )
            }

            RuleApp::PairSwapReduction {
                pair,
                domain,
                target,
                target_domain_sign,
            } => {
                let (expr, expect) = target_domain_sign;
                let f = expect_sign("pair position", expr, domain, *expect);
                StepOutput::contradiction(
                    vec![
                        Fact::text("pair(lambda)", format!("{}", pair)),
                        f,
                    ],
                    format!(
                        "exchanging lambda with pair(lambda) re-parameterizes this case as branch {}, eliminated there",
                        target
                    ),
                )
            }

            RuleApp::IdentityFact { label, lhs, rhs } => {
                let diff = lhs.sub(rhs).unwrap();
                assert!(
                    diff.is_identically_zero(),
                    "scripted identity {} fails: {} vs {}",
                    label,
                    lhs,
                    rhs
                );
                StepOutput::established(vec![Fact::text(label, format!("{} = {}", lhs, rhs))])
            }

            RuleApp::FixedPointFreeParity { count } => {
                // lambda = -1/lambda would need lambda^2 + 1 = 0.
                let fixed = hopfq_exact::isolate_roots_in(
                    &IntPoly::from_i64(&[1, 0, 1]),
                    &hopfq_exact::Endpoint::NegInf,
                    &hopfq_exact::Endpoint::PosInf,
                );
                assert!(fixed.is_empty(), "lambda^2 + 1 has no real roots");
                assert!(count % 2 == 1, "scripted parity rule needs an odd count");
                StepOutput::contradiction(
                    vec![
                        Fact::text("fixed points of lambda -> -1/lambda", "none (lambda^2 + 1 has no real root)"),
                        Fact::text("distinct sigma(Q) values", format!("{}", count)),
                    ],
                    "a fixed-point-free involution pairs the distinct values, so their number must be even",
                )
            }

            RuleApp::FocalAustereConcrete { config } => {
                let (ms, dim) = crate::flow::focal_multiset(config, crate::flow::Side::Plus)
                    .expect("scripted focal side exists");
                let aust = ms.is_austere();
                let facts = vec![
                    Fact::text("focal multiset", format!("{}", ms)),
                    Fact::text("focal dimension", format!("{}", dim)),
                    Fact::text("austere", format!("{}", aust)),
                ];
                if aust {
                    StepOutput::established(facts)
                } else {
                    StepOutput::contradiction(
                        facts,
                        "the focal submanifold must be austere; this multiset is not",
                    )
                }
            }
        }
    }
}

/// Shared pipeline: distinctness/zero sub-cases, the cleared sum equation,
/// and concrete austere checks at every special point.
fn run_austere_sum_elim(values: &[(String, Sym)], domain: &Domain) -> StepOutput {
    let mut facts = Vec::new();
    // The focal expressions must be defined on the whole domain.
    for (name, v) in values {
        let dz = v
            .denominator_zeros_in(domain)
            .unwrap_or_else(|e| panic!("denominator of {}: {}", name, e));
        assert!(
            dz.is_empty(),
            "denominator of {} vanishes in the domain at {:?}",
            name,
            dz
        );
        facts.push(Fact::text(
            &format!("denominator of {}", name),
            format!("nonvanishing on {}", domain.describe()),
        ));
    }
    let mut points: Vec<AlgebraicReal> = Vec::new();
    let add_point = |p: AlgebraicReal, points: &mut Vec<AlgebraicReal>| {
        if !points.iter().any(|q| q.compare(&p) == Ordering::Equal) {
            points.push(p);
        }
    };
    // Zero sub-cases.
    for (name, v) in values {
        let zs = v.zeros_in(domain).unwrap_or_else(|e| panic!("{}: {}", name, e));
        for z in zs {
            facts.push(Fact::scalar(&format!("{} = 0 at", name), &z));
            add_point(z, &mut points);
        }
    }
    // Coincidence sub-cases.
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            let d = values[i].1.sub(&values[j].1).unwrap();
            if d.is_identically_zero() {
                panic!(
                    "scripted focal values {} and {} coincide identically",
                    values[i].0, values[j].0
                );
            }
            let zs = d
                .zeros_in(domain)
                .unwrap_or_else(|e| panic!("coincidence: {}", e));
            for z in zs {
                facts.push(Fact::scalar(
                    &format!("{} = {} at", values[i].0, values[j].0),
                    &z,
                ));
                add_point(z, &mut points);
            }
        }
    }
    // The austere sum over the (generically distinct, nonzero) values.
    let mut sum = Sym::from_int(0);
    for (_, v) in values {
        sum = sum.add(v).unwrap();
    }
    let cleared = sum.cleared_numerator();
    facts.push(Fact::text("sum cleared polynomial", format!("{}", cleared)));
    if let Some(u) = cleared.try_decompose_square() {
        facts.push(Fact::text("in u = var^2", format!("{}", u)));
    }
    let sum_roots = sum
        .zeros_in(domain)
        .unwrap_or_else(|e| panic!("austere sum roots: {}", e));
    if sum_roots.is_empty() {
        facts.push(Fact::text("sum roots in domain", "none"));
    }
    for z in sum_roots {
        facts.push(Fact::scalar("sum vanishes at", &z));
        add_point(z, &mut points);
    }
    points.sort();
    // Concrete check at every special point: some nonzero focal value has
    // no negation partner, so the value set is not sign-symmetric.
    for p in &points {
        let mut witness: Option<&str> = None;
        for (name, v) in values {
            if v.is_zero_at(p).expect("defined at the special point") {
                continue;
            }
            let mut has_partner = false;
            for (_, w) in values {
                let s = v.add(w).expect("same radicand");
                if s.is_identically_zero() || s.is_zero_at(p).expect("defined") {
                    has_partner = true;
                    break;
                }
            }
            if !has_partner {
                witness = Some(name);
                break;
            }
        }
        let witness = witness.unwrap_or_else(|| {
            panic!(
                "scripted austere-sum elimination found a sign-symmetric point at {:?}",
                p
            )
        });
        facts.push(Fact {
            label: format!("at {}", scalar_string(p)),
            value: format!(
                "not austere: {} is nonzero and no focal value equals its negative",
                witness
            ),
            decimal: Some(p.to_decimal(9)),
        });
    }
    StepOutput::contradiction(
        facts,
        "no parameter in the domain yields an austere focal multiset: away from the special points the sign-symmetric sum would vanish but the cleared equation has no root there; each special point fails the concrete austere check",
    )
}

impl From<SymError> for String {
    fn from(e: SymError) -> String {
        e.to_string()
    }
}
