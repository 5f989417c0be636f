//! The case-elimination engine: a scripted decision tree over the number g
//! of distinct constant principal curvatures, with every step's algebra
//! computed exactly and recorded in a replayable trace.

pub mod outcome;
pub mod rules;
mod script_g12;
pub(crate) mod script_util;
mod script_g3;
mod script_g4;

pub use outcome::{match_example, AlphaRange, ClassificationOutcome, Containment, TableValue};
pub use rules::{Fact, Finding, RuleApp, StepOutput};

use crate::config::PrincipalMultiset;
use crate::flow::{self, ReebPair, Side};
use crate::mult::Mult;
use crate::sym::{Domain, Sym};
use hopfq_exact::IntPoly;
use serde_json::{json, Value};
use std::cmp::Ordering;

#[derive(Debug, Clone)]
pub struct TraceStep {
    pub rule_id: String,
    pub rule: RuleApp,
    pub output: StepOutput,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Terminal {
    Eliminated { reason: String },
    Admissible { outcome_id: String },
}

#[derive(Debug, Clone)]
pub struct BranchTrace {
    pub id: String,
    pub description: String,
    pub steps: Vec<TraceStep>,
    pub terminal: Terminal,
}

impl BranchTrace {
    /// Re-execute every recorded rule application and compare outputs.
    pub fn replay(&self) -> Result<(), String> {
        for (i, step) in self.steps.iter().enumerate() {
            let rerun = step.rule.run();
            if rerun != step.output {
                return Err(format!(
                    "branch {} step {} ({}) diverged on replay",
                    self.id, i, step.rule_id
                ));
            }
        }
        Ok(())
    }
}

/// Script-side builder: applies rules, records steps, and closes branches.
pub(crate) struct Branch {
    id: String,
    description: String,
    steps: Vec<TraceStep>,
}

impl Branch {
    pub fn new(id: &str, description: &str) -> Branch {
        if std::env::var_os("HOPFQ_TRACE_BRANCHES").is_some() {
            eprintln!("[branch] {}", id);
        }
        Branch {
            id: id.to_string(),
            description: description.to_string(),
            steps: Vec::new(),
        }
    }

    /// Apply a rule expected to keep the branch alive.
    pub fn fact(&mut self, rule: RuleApp) -> StepOutput {
        let t0 = std::time::Instant::now();
        let output = rule.run();
        if std::env::var_os("HOPFQ_TRACE_BRANCHES").is_some() {
            eprintln!("  [rule] {} {:?}", rule.id(), t0.elapsed());
        }
        assert!(
            !matches!(output.finding, Finding::Contradiction { .. }),
            "branch {}: rule {} unexpectedly contradicted: {:?}",
            self.id,
            rule.id(),
            output
        );
        self.steps.push(TraceStep {
            rule_id: rule.id().to_string(),
            rule,
            output: output.clone(),
        });
        output
    }

    /// Record a contradiction that disposes of a sub-locus (for instance a
    /// single excluded parameter value) while the branch itself continues.
    pub fn subcase_eliminated(&mut self, rule: RuleApp) -> StepOutput {
        let output = rule.run();
        assert!(
            matches!(output.finding, Finding::Contradiction { .. }),
            "branch {}: rule {} was scripted as a sub-case elimination",
            self.id,
            rule.id()
        );
        self.steps.push(TraceStep {
            rule_id: rule.id().to_string(),
            rule,
            output: output.clone(),
        });
        output
    }

    /// Apply the branch's closing contradiction rule.
    pub fn eliminate(mut self, rule: RuleApp) -> BranchTrace {
        let t0 = std::time::Instant::now();
        let output = rule.run();
        if std::env::var_os("HOPFQ_TRACE_BRANCHES").is_some() {
            eprintln!("  [rule*] {} {:?}", rule.id(), t0.elapsed());
        }
        let reason = match &output.finding {
            Finding::Contradiction { reason } => reason.clone(),
            other => panic!(
                "branch {}: rule {} was scripted as the elimination but returned {:?}",
                self.id,
                rule.id(),
                other
            ),
        };
        self.steps.push(TraceStep {
            rule_id: rule.id().to_string(),
            rule,
            output,
        });
        BranchTrace {
            id: self.id,
            description: self.description,
            steps: self.steps,
            terminal: Terminal::Eliminated { reason },
        }
    }

    /// Close the branch as admissible with the given outcome.
    pub fn admissible(self, outcome_id: &str) -> BranchTrace {
        BranchTrace {
            id: self.id,
            description: self.description,
            steps: self.steps,
            terminal: Terminal::Admissible {
                outcome_id: outcome_id.to_string(),
            },
        }
    }
}

#[derive(Debug, Clone)]
pub struct ClassifyResult {
    pub g: u8,
    pub outcomes: Vec<ClassificationOutcome>,
    pub traces: Vec<BranchTrace>,
}

impl ClassifyResult {
    pub fn replay(&self) -> Result<(), String> {
        for t in &self.traces {
            t.replay()?;
        }
        Ok(())
    }
}

/// Run the scripted case analysis for g distinct principal curvatures.
pub fn classify(g: u8) -> ClassifyResult {
    assert!((1..=4).contains(&g), "classification covers g in 1..=4");
    let traces = match g {
        1 => script_g12::branches_g1(),
        2 => script_g12::branches_g2(),
        3 => script_g3::branches(),
        4 => script_g4::branches(),
        _ => unreachable!(),
    };
    let mut outcome_ids: Vec<String> = Vec::new();
    for t in &traces {
        if let Terminal::Admissible { outcome_id } = &t.terminal {
            if !outcome_ids.iter().any(|o| o == outcome_id) {
                outcome_ids.push(outcome_id.clone());
            }
        }
    }
    let mut outcomes: Vec<ClassificationOutcome> = outcome_ids
        .iter()
        .map(|id| outcome_by_id(id))
        .collect();
    outcomes.sort_by(|a, b| a.id.cmp(&b.id));
    for o in &outcomes {
        o.validate().expect("outcome invariants hold");
    }
    ClassifyResult { g, outcomes, traces }
}

fn outcome_by_id(id: &str) -> ClassificationOutcome {
    match id {
        "thm-1.1a" => outcome::outcome_1_1a(),
        "thm-1.1b-1-principal" => outcome::outcome_1_1b_principal(),
        "thm-1.1b-1-reeb" => outcome::outcome_1_1b_reeb(),
        "thm-1.1b-2" => outcome::outcome_1_1b_2(),
        "thm-1.1b-3" => outcome::outcome_1_1b_3(),
        "thm-1.1c-1" => outcome::outcome_1_1c_1(),
        "thm-1.1c-2" => outcome::outcome_1_1c_2(),
        "thm-1.1c-3" => outcome::outcome_1_1c_3(),
        "thm-1.1c-4" => outcome::outcome_1_1c_4(),
        other => panic!("unknown outcome id {}", other),
    }
}

/// Public rule surface: run one rule application and return its record.
pub fn apply_rule(rule: &RuleApp) -> StepOutput {
    rule.run()
}

/// The cleared austere-sum equations of the symbolic focal branches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AustereBranch {
    /// 0 < alpha < sqrt2 (Case-i-3 of g = 4).
    LowAlpha,
    /// sqrt2 < alpha < 2 (Case-i-3 of g = 4).
    MidAlpha,
    /// alpha = sqrt2, unknown lambda > sqrt2 (Case-i-3 of g = 4).
    Sqrt2Lambda,
}

#[derive(Debug, Clone)]
pub struct AustereSumEquation {
    /// Cleared integer polynomial in the branch variable.
    pub poly: IntPoly,
    /// Even polynomials compress to u = var^2.
    pub poly_in_u: Option<IntPoly>,
    pub domain: Domain,
    pub var: &'static str,
    /// Genuine roots of the sum inside the domain.
    pub roots: Vec<hopfq_exact::AlgebraicReal>,
}

/// Build the austere-sum equation of a symbolic branch: the sum of the
/// nonzero focal curvature expressions, cleared of denominators (and of the
/// radical, for the sqrt2-lambda branch).
pub fn austere_sum_equation(branch: AustereBranch) -> AustereSumEquation {
    let (values, domain, var) = match branch {
        AustereBranch::LowAlpha => {
            let (v, d) = script_g4::focal_values_low_alpha();
            (v, d, "alpha")
        }
        AustereBranch::MidAlpha => {
            let (v, d) = script_g4::focal_values_mid_alpha();
            (v, d, "alpha")
        }
        AustereBranch::Sqrt2Lambda => {
            let (v, d) = script_g4::focal_values_sqrt2_lambda();
            (v, d, "lambda")
        }
    };
    let mut sum = Sym::from_int(0);
    for (_, v) in &values {
        sum = sum.add(v).unwrap();
    }
    let poly = sum.cleared_numerator();
    let poly_in_u = poly.try_decompose_square();
    let roots = sum.zeros_in(&domain).expect("sum is well-defined");
    AustereSumEquation {
        poly,
        poly_in_u,
        domain,
        var,
        roots,
    }
}

/// Soundness sweep: run the concrete obstruction rules against a genuine
/// configuration; any finding is a false elimination.
pub fn soundness_findings(config: &crate::config::HopfConfig) -> Vec<String> {
    let mut findings = Vec::new();
    // phi-closure must hold.
    let closure = flow::phi_closure_check(config);
    if !closure.pass() {
        findings.push(format!("phi-closure violated: {:?}", closure.violations));
    }
    // The A-orthogonality obstruction precondition must never arise:
    // sigma(Q) = {lambda, pair(lambda)} spanning Q with lambda != +-1.
    let one = hopfq_exact::int(1);
    for (lambda, _) in config.spectrum() {
        if lambda.compare(&one) == Ordering::Equal
            || lambda.compare(&one.neg()) == Ordering::Equal
        {
            continue;
        }
        if let Ok(ReebPair::Value(mu)) = flow::reeb_pair(config.alpha(), lambda) {
            if mu.compare(lambda) == Ordering::Equal {
                continue;
            }
            let pair_set = PrincipalMultiset::from_entries(vec![
                (lambda.clone(), Mult::ONE),
                (mu.clone(), Mult::ONE),
            ]);
            let spectrum_values =
                PrincipalMultiset::from_entries(
                    config
                        .spectrum()
                        .iter()
                        .map(|(v, _)| (v.clone(), Mult::ONE))
                        .collect(),
                );
            let same_values = pair_set.len() == spectrum_values.len()
                && pair_set
                    .values()
                    .all(|v| spectrum_values.contains(v));
            if same_values {
                findings.push(format!(
                    "A-orthogonality obstruction would eliminate a genuine config at lambda = {}",
                    lambda
                ));
            }
        }
    }
    // Existing focal sides must be austere (Ge-Tang).
    for side in [Side::Plus, Side::Minus] {
        if flow::focal_parameters(config, side).exists() {
            match flow::focal_multiset(config, side) {
                Ok((ms, _)) => {
                    if !ms.is_austere() {
                        findings.push(format!(
                            "focal side {} is not austere: {}",
                            side, ms
                        ));
                    }
                }
                Err(e) => findings.push(format!("focal side {}: {}", side, e)),
            }
        }
    }
    // Isometric-Reeb-flow configurations must match the catalog tables.
    let all_self_paired = config.spectrum().iter().all(|(v, _)| {
        matches!(
            flow::reeb_pair(config.alpha(), v),
            Ok(ReebPair::Value(mu)) if mu.compare(v) == Ordering::Equal
        ) || matches!(flow::reeb_pair(config.alpha(), v), Ok(ReebPair::Degenerate))
    });
    if all_self_paired {
        let g = config.distinct_count();
        let two = hopfq_exact::int(2);
        let ok = match g {
            3 => config.alpha().compare(&two) == Ordering::Equal,
            4 => config.alpha().compare(&two) == Ordering::Greater,
            _ => false,
        };
        if !ok {
            findings.push(format!(
                "isometric Reeb flow with g = {} and alpha = {} matches no catalog example",
                g,
                config.alpha()
            ));
        }
    }
    findings
}

fn fact_json(f: &Fact) -> Value {
    match &f.decimal {
        Some(d) => json!({ "label": f.label, "value": f.value, "decimal": d }),
        None => json!({ "label": f.label, "value": f.value }),
    }
}

fn step_json(s: &TraceStep) -> Value {
    let finding = match &s.output.finding {
        Finding::Established => json!({ "kind": "established" }),
        Finding::Contradiction { reason } => {
            json!({ "kind": "contradiction", "reason": reason })
        }
        Finding::Narrowed { to } => json!({ "kind": "narrowed", "to": to }),
    };
    json!({
        "rule": s.rule_id,
        "facts": s.output.facts.iter().map(fact_json).collect::<Vec<_>>(),
        "finding": finding,
    })
}

/// Serialize the full trace forest (deterministic field order).
pub fn trace_forest_json(result: &ClassifyResult) -> Value {
    json!({
        "g": result.g,
        "outcomes": result.outcomes.iter().map(|o| json!({
            "id": o.id,
            "theorem": o.theorem,
            "case": o.case,
            "table": o.table.iter().map(|(v, k)| json!({
                "value": v.display(),
                "mult": k.to_string(),
            })).collect::<Vec<_>>(),
            "alpha": o.alpha.display(),
            "matched_examples": o.matched.iter().map(|(id, c)| json!({
                "example": id.to_string(),
                "relation": match c {
                    Containment::OpenPartOf => "open part of",
                    Containment::ContainedInCase => "contained in this case",
                },
            })).collect::<Vec<_>>(),
            "m_note": o.m_note,
        })).collect::<Vec<_>>(),
        "branches": result.traces.iter().map(|t| json!({
            "id": t.id,
            "description": t.description,
            "steps": t.steps.iter().map(step_json).collect::<Vec<_>>(),
            "terminal": match &t.terminal {
                Terminal::Eliminated { reason } => json!({ "eliminated": reason }),
                Terminal::Admissible { outcome_id } => json!({ "admissible": outcome_id }),
            },
        })).collect::<Vec<_>>(),
    })
}

/// Human-readable per-theorem summary.
pub fn summary_text(result: &ClassifyResult) -> String {
    let mut s = String::new();
    s.push_str(&format!(
        "g = {}: {} admissible outcome(s), {} branches examined\n",
        result.g,
        result.outcomes.len(),
        result.traces.len()
    ));
    for o in &result.outcomes {
        s.push_str(&format!(
            "  [{} {}] {}\n    alpha: {}\n",
            o.theorem,
            o.case,
            o.display_table(),
            o.alpha.display()
        ));
        for (id, c) in &o.matched {
            s.push_str(&format!(
                "    example {}: {}\n",
                id,
                match c {
                    Containment::OpenPartOf => "open part of",
                    Containment::ContainedInCase => "contained in this case",
                }
            ));
        }
        if let Some(note) = &o.m_note {
            s.push_str(&format!("    dimension: {}\n", note));
        }
    }
    let eliminated = result
        .traces
        .iter()
        .filter(|t| matches!(t.terminal, Terminal::Eliminated { .. }))
        .count();
    s.push_str(&format!("  eliminated branches: {}\n", eliminated));
    s
}
