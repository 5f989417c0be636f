//! Classification outcomes: admissible curvature tables with their
//! alpha-constraints, matched catalog examples, and self-validation.

use crate::catalog::{self, ExampleId, NormalType};
use crate::config::{HopfConfig, PrincipalMultiset};
use crate::flow::{self, Side};
use crate::mult::{MDim, Mult};
use crate::render::render_expr;
use hopfq_exact::{rat, AlgebraicReal, Rational};
use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Containment {
    /// The classification identifies M as an open part of the example.
    OpenPartOf,
    /// The example is contained in the case (table-level identification).
    ContainedInCase,
}

#[derive(Debug, Clone)]
pub enum TableValue {
    /// The family parameter alpha itself (display form, e.g. "2tanh(2r)").
    Alpha(String),
    Exact(AlgebraicReal),
    /// Symbolic partner value of the A-principal families.
    Symbolic(String),
}

impl TableValue {
    pub fn display(&self) -> String {
        match self {
            TableValue::Alpha(s) | TableValue::Symbolic(s) => s.clone(),
            TableValue::Exact(v) => {
                render_expr(v).unwrap_or_else(|| format!("~{}", v.to_decimal(9)))
            }
        }
    }
}

#[derive(Debug, Clone)]
pub enum AlphaRange {
    Point(AlgebraicReal),
    Open {
        lo: AlgebraicReal,
        hi: Option<AlgebraicReal>,
        excluded: Vec<AlgebraicReal>,
        display: String,
    },
    /// A-principal families (sqrt(2)-frequency parameterization).
    Family { display: String },
}

impl AlphaRange {
    pub fn display(&self) -> String {
        match self {
            AlphaRange::Point(v) => format!(
                "alpha = {}",
                render_expr(v).unwrap_or_else(|| v.to_decimal(9))
            ),
            AlphaRange::Open { display, .. } => display.clone(),
            AlphaRange::Family { display } => display.clone(),
        }
    }

    /// A rational sample inside the range, for validation.
    pub fn sample(&self) -> Option<AlgebraicReal> {
        match self {
            AlphaRange::Point(v) => Some(v.clone()),
            AlphaRange::Open { lo, hi, excluded, .. } => {
                let lo_bounds = lo.refine(&rat(1, 64));
                let mut cand = &lo_bounds.1 + rat(1, 4);
                if let Some(h) = hi {
                    let hi_bounds = h.refine(&rat(1, 64));
                    cand = (&lo_bounds.1 + &hi_bounds.0) / rat(2, 1);
                }
                let mut v = AlgebraicReal::from_rational(cand.clone());
                let mut tries = 0;
                while excluded.iter().any(|e| e.compare(&v) == Ordering::Equal) {
                    tries += 1;
                    let shifted = &cand + rat(1, 64 + tries);
                    v = AlgebraicReal::from_rational(shifted);
                }
                Some(v)
            }
            AlphaRange::Family { .. } => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ClassificationOutcome {
    pub id: String,
    pub theorem: String,
    pub case: String,
    pub table: Vec<(TableValue, Mult)>,
    pub alpha: AlphaRange,
    pub matched: Vec<(ExampleId, Containment)>,
    pub m_note: Option<String>,
}

impl ClassificationOutcome {
    pub fn mult_pattern(&self) -> Vec<Mult> {
        self.table.iter().map(|(_, k)| *k).collect()
    }

    pub fn total(&self) -> Mult {
        self.table
            .iter()
            .fold(Mult::ZERO, |acc, (_, k)| acc + *k)
    }

    /// Exact config at a sample alpha (None for A-principal families).
    pub fn sample_config(&self) -> Option<HopfConfig> {
        let alpha = self.alpha.sample()?;
        let mut ms = PrincipalMultiset::empty();
        for (v, k) in &self.table {
            let value = match v {
                TableValue::Alpha(_) => alpha.clone(),
                TableValue::Exact(x) => x.clone(),
                TableValue::Symbolic(_) => return None,
            };
            ms.push(value, *k);
        }
        ms.push(alpha.clone(), -Mult::ONE);
        ms.push(AlgebraicReal::zero(), -Mult::constant(2));
        let spectrum: Vec<(AlgebraicReal, Mult)> = ms
            .entries()
            .iter()
            .filter(|(_, k)| !k.is_zero())
            .cloned()
            .collect();
        HopfConfig::new(MDim::Symbolic, alpha, spectrum).ok()
    }

    /// Outcome invariants: multiplicity sum 2m-1; for A-isotropic tables a
    /// sampled config passes phi-closure and has austere focal sides.
    pub fn validate(&self) -> Result<(), String> {
        if self.total() != Mult::new(2, -1) {
            return Err(format!(
                "outcome {} multiplicities sum to {}, not 2m-1",
                self.id,
                self.total()
            ));
        }
        // A-isotropic structure (the 0-block, phi-closure, focal machinery)
        // does not apply to the A-principal outcomes.
        let a_principal = !self.matched.is_empty()
            && self
                .matched
                .iter()
                .all(|(id, _)| catalog::record(*id).normal == NormalType::APrincipal);
        if a_principal || matches!(self.alpha, AlphaRange::Family { .. }) {
            return Ok(());
        }
        let config = match self.sample_config() {
            Some(c) => c,
            None => {
                // Symbolic table values (the 3.5 family): validate through a
                // catalog instantiation instead.
                let flowable = self
                    .matched
                    .iter()
                    .find(|(id, _)| catalog::record(*id).flow_applicable);
                match flowable {
                    Some((id, _)) => {
                        let m = if catalog::record(*id).m_constraint
                            == catalog::MConstraint::EvenAtLeast4
                        {
                            4
                        } else {
                            3
                        };
                        catalog::instantiate(*id, &rat(1, 3), MDim::Concrete(m))
                            .map_err(|e| format!("outcome {}: {}", self.id, e))?
                    }
                    None => return Ok(()),
                }
            }
        };
        let closure = flow::phi_closure_check(&config);
        if !closure.pass() {
            return Err(format!(
                "outcome {} fails phi-closure: {:?}",
                self.id, closure.violations
            ));
        }
        for side in [Side::Plus, Side::Minus] {
            if flow::focal_parameters(&config, side).exists() {
                let (ms, _) = flow::focal_multiset(&config, side)
                    .map_err(|e| format!("outcome {}: {}", self.id, e))?;
                if !ms.is_austere() {
                    return Err(format!(
                        "outcome {} has a non-austere focal multiset {}",
                        self.id, ms
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn display_table(&self) -> String {
        let values: Vec<String> = self.table.iter().map(|(v, _)| v.display()).collect();
        let mults: Vec<String> = self.table.iter().map(|(_, k)| k.to_string()).collect();
        format!(
            "values {}; multiplicities {}",
            values.join(", "),
            mults.join(", ")
        )
    }
}

/// Match a concrete table against the constant-valued catalog records.
/// Parameterized families are matched by the classifier's own scripts.
pub fn match_example(table: &PrincipalMultiset) -> Option<(ExampleId, Containment)> {
    let t_dummy: Rational = rat(1, 2);
    for rec in catalog::catalog() {
        if rec.parameterized {
            continue;
        }
        let Some(entries) = catalog::instantiate_table(&rec, &t_dummy) else {
            continue;
        };
        let rec_table = PrincipalMultiset::from_entries(entries);
        if &rec_table == table {
            let containment = match rec.normal {
                NormalType::APrincipal => Containment::OpenPartOf,
                NormalType::AIsotropic => match rec.id {
                    ExampleId::E3_4 => Containment::OpenPartOf,
                    _ => Containment::ContainedInCase,
                },
            };
            return Some((rec.id, containment));
        }
    }
    None
}

fn exact(v: AlgebraicReal) -> TableValue {
    TableValue::Exact(v)
}

fn int(n: i64) -> AlgebraicReal {
    AlgebraicReal::from_int(n)
}

/// Theorem 1.1a: the A-principal horosphere.
pub fn outcome_1_1a() -> ClassificationOutcome {
    let sqrt2 = hopfq_exact::parse_scalar("sqrt(2)").unwrap();
    ClassificationOutcome {
        id: "thm-1.1a".into(),
        theorem: "Theorem 1.1a".into(),
        case: "".into(),
        table: vec![
            (exact(sqrt2.clone()), Mult::new(1, 0)),
            (exact(int(0)), Mult::new(1, -1)),
        ],
        alpha: AlphaRange::Point(sqrt2),
        matched: vec![(ExampleId::E3_1, Containment::OpenPartOf)],
        m_note: None,
    }
}

/// Theorem 1.1b case (1), A-principal tube families (Examples 3.2/3.3).
pub fn outcome_1_1b_principal() -> ClassificationOutcome {
    ClassificationOutcome {
        id: "thm-1.1b-1-principal".into(),
        theorem: "Theorem 1.1b".into(),
        case: "(1)".into(),
        table: vec![
            (TableValue::Alpha("alpha".into()), Mult::ONE),
            (exact(int(0)), Mult::new(1, -1)),
            (
                TableValue::Symbolic("2/alpha (= sqrt(2)tanh or sqrt(2)coth of sqrt(2)r)".into()),
                Mult::new(1, -1),
            ),
        ],
        alpha: AlphaRange::Family {
            display: "alpha = sqrt(2)coth(sqrt(2)r) or sqrt(2)tanh(sqrt(2)r), r > 0".into(),
        },
        matched: vec![
            (ExampleId::E3_2, Containment::OpenPartOf),
            (ExampleId::E3_3, Containment::OpenPartOf),
        ],
        m_note: None,
    }
}

/// Theorem 1.1b case (1), the isometric-Reeb-flow horosphere (Example 3.4).
pub fn outcome_1_1b_reeb() -> ClassificationOutcome {
    ClassificationOutcome {
        id: "thm-1.1b-1-reeb".into(),
        theorem: "Theorem 1.1b".into(),
        case: "(1)".into(),
        table: vec![
            (exact(int(2)), Mult::ONE),
            (exact(int(0)), Mult::constant(2)),
            (exact(int(1)), Mult::new(2, -4)),
        ],
        alpha: AlphaRange::Point(int(2)),
        matched: vec![(ExampleId::E3_4, Containment::OpenPartOf)],
        m_note: None,
    }
}

/// Theorem 1.1b case (2): curvatures 0, 1, -1 with multiplicities 3, m-2, m-2.
pub fn outcome_1_1b_2() -> ClassificationOutcome {
    ClassificationOutcome {
        id: "thm-1.1b-2".into(),
        theorem: "Theorem 1.1b".into(),
        case: "(2)".into(),
        table: vec![
            (exact(int(0)), Mult::constant(3)),
            (exact(int(1)), Mult::new(1, -2)),
            (exact(int(-1)), Mult::new(1, -2)),
        ],
        alpha: AlphaRange::Point(int(0)),
        matched: vec![(ExampleId::E3_6, Containment::ContainedInCase)],
        m_note: None,
    }
}

/// Theorem 1.1b case (3): curvatures 0, 1, -1 with multiplicities 2, m-1, m-2.
pub fn outcome_1_1b_3() -> ClassificationOutcome {
    ClassificationOutcome {
        id: "thm-1.1b-3".into(),
        theorem: "Theorem 1.1b".into(),
        case: "(3)".into(),
        table: vec![
            (exact(int(0)), Mult::constant(2)),
            (exact(int(1)), Mult::new(1, -1)),
            (exact(int(-1)), Mult::new(1, -2)),
        ],
        alpha: AlphaRange::Point(int(1)),
        matched: vec![(ExampleId::E3_7, Containment::ContainedInCase)],
        m_note: None,
    }
}

/// Theorem 1.1c case (1): the tube family around CH^k (Example 3.5).
pub fn outcome_1_1c_1() -> ClassificationOutcome {
    ClassificationOutcome {
        id: "thm-1.1c-1".into(),
        theorem: "Theorem 1.1c".into(),
        case: "(1)".into(),
        table: vec![
            (TableValue::Alpha("2coth(2r)".into()), Mult::ONE),
            (exact(int(0)), Mult::constant(2)),
            (TableValue::Symbolic("tanh(r)".into()), Mult::new(1, -2)),
            (TableValue::Symbolic("coth(r)".into()), Mult::new(1, -2)),
        ],
        alpha: AlphaRange::Open {
            lo: int(2),
            hi: None,
            excluded: vec![],
            display: "alpha = 2coth(2r), r > 0 (alpha > 2)".into(),
        },
        matched: vec![(ExampleId::E3_5, Containment::OpenPartOf)],
        m_note: Some("m = 2k, k >= 2".into()),
    }
}

/// Theorem 1.1c case (2): 2tanh(2r), 0, 1, -1 with the arctanh(1/2)/2 exclusion.
pub fn outcome_1_1c_2() -> ClassificationOutcome {
    ClassificationOutcome {
        id: "thm-1.1c-2".into(),
        theorem: "Theorem 1.1c".into(),
        case: "(2)".into(),
        table: vec![
            (TableValue::Alpha("2tanh(2r)".into()), Mult::ONE),
            (exact(int(0)), Mult::constant(2)),
            (exact(int(1)), Mult::new(1, -2)),
            (exact(int(-1)), Mult::new(1, -2)),
        ],
        alpha: AlphaRange::Open {
            lo: int(0),
            hi: Some(int(2)),
            excluded: vec![int(1)],
            display:
                "alpha = 2tanh(2r), r > 0, r != arctanh(1/2)/2 (0 < alpha < 2, alpha != 1)".into(),
        },
        matched: vec![(ExampleId::E3_8, Containment::ContainedInCase)],
        m_note: None,
    }
}

/// Theorem 1.1c case (3): 2coth(2r), 0, 1, -1.
pub fn outcome_1_1c_3() -> ClassificationOutcome {
    ClassificationOutcome {
        id: "thm-1.1c-3".into(),
        theorem: "Theorem 1.1c".into(),
        case: "(3)".into(),
        table: vec![
            (TableValue::Alpha("2coth(2r)".into()), Mult::ONE),
            (exact(int(0)), Mult::constant(2)),
            (exact(int(1)), Mult::new(1, -2)),
            (exact(int(-1)), Mult::new(1, -2)),
        ],
        alpha: AlphaRange::Open {
            lo: int(2),
            hi: None,
            excluded: vec![],
            display: "alpha = 2coth(2r), r > 0 (alpha > 2)".into(),
        },
        matched: vec![(ExampleId::E3_9, Containment::ContainedInCase)],
        m_note: None,
    }
}

/// Theorem 1.1c case (4): 2, 0, 1, -1.
pub fn outcome_1_1c_4() -> ClassificationOutcome {
    ClassificationOutcome {
        id: "thm-1.1c-4".into(),
        theorem: "Theorem 1.1c".into(),
        case: "(4)".into(),
        table: vec![
            (exact(int(2)), Mult::ONE),
            (exact(int(0)), Mult::constant(2)),
            (exact(int(1)), Mult::new(1, -2)),
            (exact(int(-1)), Mult::new(1, -2)),
        ],
        alpha: AlphaRange::Point(int(2)),
        matched: vec![(ExampleId::E3_10, Containment::ContainedInCase)],
        m_note: None,
    }
}
