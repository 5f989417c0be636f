//! The ten homogeneous examples: canonical data, instantiation into
//! curvature configurations, and self-verification against the flow and
//! focal machinery.
//!
//! Tube/equidistant radii are parameterized by t = tanh(r), rational in
//! (0, 1), which keeps every A-isotropic record inside exact arithmetic.
//! The two A-principal tube families have sqrt(2)-frequency curvatures and
//! are catalog data only.

use crate::config::{HopfConfig, PrincipalMultiset};
use crate::flow::{
    self, det_factors, focal_multiset, focal_parameters, parallel_config, FocalReport, Side,
};
use crate::mult::{MDim, Mult};
use hopfq_exact::{parse_scalar, rat, AlgebraicReal, Rational};
use num_traits::One;
use std::cmp::Ordering;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExampleId {
    E3_1,
    E3_2,
    E3_3,
    E3_4,
    E3_5,
    E3_6,
    E3_7,
    E3_8,
    E3_9,
    E3_10,
}

impl ExampleId {
    pub fn all() -> [ExampleId; 10] {
        use ExampleId::*;
        [E3_1, E3_2, E3_3, E3_4, E3_5, E3_6, E3_7, E3_8, E3_9, E3_10]
    }

    pub fn parse(s: &str) -> Option<ExampleId> {
        use ExampleId::*;
        match s {
            "3.1" => Some(E3_1),
            "3.2" => Some(E3_2),
            "3.3" => Some(E3_3),
            "3.4" => Some(E3_4),
            "3.5" => Some(E3_5),
            "3.6" => Some(E3_6),
            "3.7" => Some(E3_7),
            "3.8" => Some(E3_8),
            "3.9" => Some(E3_9),
            "3.10" => Some(E3_10),
            _ => None,
        }
    }
}

impl fmt::Display for ExampleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ExampleId::*;
        let s = match self {
            E3_1 => "3.1",
            E3_2 => "3.2",
            E3_3 => "3.3",
            E3_4 => "3.4",
            E3_5 => "3.5",
            E3_6 => "3.6",
            E3_7 => "3.7",
            E3_8 => "3.8",
            E3_9 => "3.9",
            E3_10 => "3.10",
        };
        write!(f, "{}", s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalType {
    APrincipal,
    AIsotropic,
}

impl fmt::Display for NormalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormalType::APrincipal => write!(f, "A-principal"),
            NormalType::AIsotropic => write!(f, "A-isotropic"),
        }
    }
}

/// Curvature value expression in the radius parameter t = tanh(r).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TValue {
    Const(&'static str),
    /// tanh(r) = t
    TanhR,
    /// coth(r) = 1/t
    CothR,
    /// 2 tanh(2r) = 4t/(1+t^2)
    TwoTanh2R,
    /// 2 coth(2r) = (1+t^2)/t
    TwoCoth2R,
    /// sqrt(2) tanh(sqrt(2) r): not rational in t (A-principal records only)
    Sqrt2TanhSqrt2R,
    /// sqrt(2) coth(sqrt(2) r)
    Sqrt2CothSqrt2R,
}

impl TValue {
    pub fn eval(&self, t: &Rational) -> Option<AlgebraicReal> {
        let tv = AlgebraicReal::from_rational(t.clone());
        match self {
            TValue::Const(s) => Some(parse_scalar(s).expect("catalog constant parses")),
            TValue::TanhR => Some(tv),
            TValue::CothR => Some(tv.inv().expect("t != 0")),
            TValue::TwoTanh2R => {
                let num = tv.mul_rational(&rat(4, 1));
                let den = AlgebraicReal::one().add(&tv.square());
                Some(num.div(&den).expect("1+t^2 > 0"))
            }
            TValue::TwoCoth2R => {
                let num = AlgebraicReal::one().add(&tv.square());
                Some(num.div(&tv).expect("t != 0"))
            }
            TValue::Sqrt2TanhSqrt2R | TValue::Sqrt2CothSqrt2R => None,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            TValue::Const(s) => s.to_string(),
            TValue::TanhR => "tanh(r)".into(),
            TValue::CothR => "coth(r)".into(),
            TValue::TwoTanh2R => "2tanh(2r)".into(),
            TValue::TwoCoth2R => "2coth(2r)".into(),
            TValue::Sqrt2TanhSqrt2R => "sqrt(2)tanh(sqrt(2)r)".into(),
            TValue::Sqrt2CothSqrt2R => "sqrt(2)coth(sqrt(2)r)".into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MConstraint {
    AnyM,
    /// m = 2k with k >= 2 (Example 3.5 lives in Q^{2k*}).
    EvenAtLeast4,
}

impl MConstraint {
    pub fn admits(&self, m: u32) -> bool {
        match self {
            MConstraint::AnyM => m >= 3,
            MConstraint::EvenAtLeast4 => m >= 4 && m % 2 == 0,
        }
    }
}

/// Expected focal structure used by `verify_example`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FocalExpectation {
    /// Not tracked (A-principal records).
    NotTracked,
    /// No focal submanifold on either side.
    NoneEither,
    /// Plus side exists, totally geodesic: all-zero multiset, t_star = t.
    TotallyGeodesicPlus,
    /// Plus side exists with multiset {0:2, 1:m-2, -1:m-2}, t_star = t.
    AusterePlusPattern,
}

#[derive(Debug, Clone)]
pub struct ExampleRecord {
    pub id: ExampleId,
    pub normal: NormalType,
    pub parameterized: bool,
    pub alpha: TValue,
    /// Full principal-curvature table exactly as printed (value, multiplicity).
    pub table: Vec<(TValue, Mult)>,
    pub m_constraint: MConstraint,
    /// S phi + phi S = 0 holds (the integrable-C family 3.6 - 3.10).
    pub sphi_antisymmetric: bool,
    pub focal: FocalExpectation,
    /// Excluded parameter: the alpha value that this family must avoid.
    pub excluded_alpha: Option<&'static str>,
    pub flow_applicable: bool,
    pub description: &'static str,
}

/// The ten records, in order.
pub fn catalog() -> Vec<ExampleRecord> {
    use ExampleId::*;
    use TValue::*;
    let m1 = Mult::new(1, -1); // m-1
    let m2 = Mult::new(1, -2); // m-2
    vec![
        ExampleRecord {
            id: E3_1,
            normal: NormalType::APrincipal,
            parameterized: false,
            alpha: Const("sqrt(2)"),
            table: vec![(Const("sqrt(2)"), Mult::new(1, 0)), (Const("0"), m1)],
            m_constraint: MConstraint::AnyM,
            sphi_antisymmetric: false,
            focal: FocalExpectation::NotTracked,
            excluded_alpha: None,
            flow_applicable: false,
            description: "horosphere with A-principal center at infinity",
        },
        ExampleRecord {
            id: E3_2,
            normal: NormalType::APrincipal,
            parameterized: true,
            alpha: Sqrt2CothSqrt2R,
            table: vec![
                (Sqrt2CothSqrt2R, Mult::ONE),
                (Const("0"), m1),
                (Sqrt2TanhSqrt2R, m1),
            ],
            m_constraint: MConstraint::AnyM,
            sphi_antisymmetric: false,
            focal: FocalExpectation::NotTracked,
            excluded_alpha: None,
            flow_applicable: false,
            description: "tube around the totally geodesic Q^{(m-1)*}",
        },
        ExampleRecord {
            id: E3_3,
            normal: NormalType::APrincipal,
            parameterized: true,
            alpha: Sqrt2TanhSqrt2R,
            table: vec![
                (Sqrt2TanhSqrt2R, Mult::ONE),
                (Const("0"), m1),
                (Sqrt2CothSqrt2R, m1),
            ],
            m_constraint: MConstraint::AnyM,
            sphi_antisymmetric: false,
            focal: FocalExpectation::NotTracked,
            excluded_alpha: None,
            flow_applicable: false,
            description: "tube around the totally geodesic RH^m",
        },
        ExampleRecord {
            id: E3_4,
            normal: NormalType::AIsotropic,
            parameterized: false,
            alpha: Const("2"),
            table: vec![
                (Const("2"), Mult::ONE),
                (Const("0"), Mult::constant(2)),
                (Const("1"), Mult::new(2, -4)),
            ],
            m_constraint: MConstraint::AnyM,
            sphi_antisymmetric: false,
            focal: FocalExpectation::NoneEither,
            excluded_alpha: None,
            flow_applicable: true,
            description: "horosphere with A-isotropic center at infinity",
        },
        ExampleRecord {
            id: E3_5,
            normal: NormalType::AIsotropic,
            parameterized: true,
            alpha: TwoCoth2R,
            table: vec![
                (TwoCoth2R, Mult::ONE),
                (Const("0"), Mult::constant(2)),
                (TanhR, m2),
                (CothR, m2),
            ],
            m_constraint: MConstraint::EvenAtLeast4,
            sphi_antisymmetric: false,
            focal: FocalExpectation::TotallyGeodesicPlus,
            excluded_alpha: None,
            flow_applicable: true,
            description: "tube around the totally geodesic CH^k in Q^{2k*}",
        },
        ExampleRecord {
            id: E3_6,
            normal: NormalType::AIsotropic,
            parameterized: false,
            alpha: Const("0"),
            table: vec![
                (Const("0"), Mult::constant(3)),
                (Const("-1"), m2),
                (Const("1"), m2),
            ],
            m_constraint: MConstraint::AnyM,
            sphi_antisymmetric: true,
            focal: FocalExpectation::NoneEither,
            excluded_alpha: None,
            flow_applicable: true,
            description: "canonical extension of the H_{alpha_1} geodesic (alpha = 0)",
        },
        ExampleRecord {
            id: E3_7,
            normal: NormalType::AIsotropic,
            parameterized: false,
            alpha: Const("1"),
            table: vec![
                (Const("1"), m1),
                (Const("0"), Mult::constant(2)),
                (Const("-1"), m2),
            ],
            m_constraint: MConstraint::AnyM,
            sphi_antisymmetric: true,
            focal: FocalExpectation::NoneEither,
            excluded_alpha: None,
            flow_applicable: true,
            description: "equidistant at oriented distance arctanh(1/2)/2 (alpha = 1)",
        },
        ExampleRecord {
            id: E3_8,
            normal: NormalType::AIsotropic,
            parameterized: true,
            alpha: TwoTanh2R,
            table: vec![
                (TwoTanh2R, Mult::ONE),
                (Const("0"), Mult::constant(2)),
                (Const("-1"), m2),
                (Const("1"), m2),
            ],
            m_constraint: MConstraint::AnyM,
            sphi_antisymmetric: true,
            focal: FocalExpectation::NoneEither,
            excluded_alpha: Some("1"),
            flow_applicable: true,
            description: "equidistants of the alpha = 0 extension (alpha = 2tanh(2r) != 1)",
        },
        ExampleRecord {
            id: E3_9,
            normal: NormalType::AIsotropic,
            parameterized: true,
            alpha: TwoCoth2R,
            table: vec![
                (TwoCoth2R, Mult::ONE),
                (Const("0"), Mult::constant(2)),
                (Const("-1"), m2),
                (Const("1"), m2),
            ],
            m_constraint: MConstraint::AnyM,
            sphi_antisymmetric: true,
            focal: FocalExpectation::AusterePlusPattern,
            excluded_alpha: None,
            flow_applicable: true,
            description: "tube around the homogeneous complex hypersurface P^{m-1}",
        },
        ExampleRecord {
            id: E3_10,
            normal: NormalType::AIsotropic,
            parameterized: false,
            alpha: Const("2"),
            table: vec![
                (Const("2"), Mult::ONE),
                (Const("0"), Mult::constant(2)),
                (Const("-1"), m2),
                (Const("1"), m2),
            ],
            m_constraint: MConstraint::AnyM,
            sphi_antisymmetric: true,
            focal: FocalExpectation::NoneEither,
            excluded_alpha: None,
            flow_applicable: true,
            description: "canonical extension of a horocycle (alpha = 2)",
        },
    ]
}

pub fn record(id: ExampleId) -> ExampleRecord {
    catalog()
        .into_iter()
        .find(|r| r.id == id)
        .expect("catalog covers all ids")
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("record {0} is A-principal: catalog data only")]
    CatalogOnly(String),
    #[error("m = {m} violates the record's constraint")]
    MConstraint { m: u32 },
    #[error("parameter t must be a rational in (0, 1)")]
    ParamRange,
    #[error("excluded parameter: alpha would be {0}")]
    ExcludedParameter(String),
    #[error("config error: {0}")]
    Config(#[from] crate::config::ConfigError),
}

/// Evaluate the printed table at (t, m-symbolic).
pub fn instantiate_table(
    rec: &ExampleRecord,
    t: &Rational,
) -> Option<Vec<(AlgebraicReal, Mult)>> {
    let mut out = Vec::new();
    for (v, k) in &rec.table {
        out.push((v.eval(t)?, *k));
    }
    Some(out)
}

/// Exact HopfConfig for an A-isotropic record at rational t in (0,1).
pub fn instantiate(id: ExampleId, t: &Rational, m: MDim) -> Result<HopfConfig, CatalogError> {
    let rec = record(id);
    if rec.normal == NormalType::APrincipal {
        return Err(CatalogError::CatalogOnly(id.to_string()));
    }
    if let MDim::Concrete(mm) = m {
        if !rec.m_constraint.admits(mm) {
            return Err(CatalogError::MConstraint { m: mm });
        }
    }
    if rec.parameterized && !(t > &rat(0, 1) && t < &rat(1, 1)) {
        return Err(CatalogError::ParamRange);
    }
    let alpha = rec.alpha.eval(t).expect("A-isotropic alpha is rational in t");
    if let Some(excl) = rec.excluded_alpha {
        let e = parse_scalar(excl).expect("excluded alpha parses");
        if alpha.compare(&e) == Ordering::Equal {
            return Err(CatalogError::ExcludedParameter(excl.to_string()));
        }
    }
    // sigma(Q) = printed table minus the structural entries (alpha, 1), (0, 2).
    let table = instantiate_table(&rec, t).expect("A-isotropic table is rational in t");
    let mut ms = PrincipalMultiset::from_entries(table);
    ms.push(alpha.clone(), -Mult::ONE);
    ms.push(AlgebraicReal::zero(), -Mult::constant(2));
    let spectrum: Vec<(AlgebraicReal, Mult)> = ms
        .entries()
        .iter()
        .filter(|(_, k)| !k.is_zero())
        .cloned()
        .collect();
    Ok(HopfConfig::new(m, alpha, spectrum)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyStatus {
    /// All checks ran (A-isotropic record).
    Verified,
    /// Table-sum checks only (A-principal record).
    CatalogOnly,
    /// The record's m-constraint excludes this m.
    SkippedMConstraint,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub id: ExampleId,
    pub status: VerifyStatus,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn check(name: &str, pass: bool, detail: String) -> CheckResult {
    CheckResult {
        name: name.to_string(),
        pass,
        detail,
    }
}

/// Verify one record at rational t and concrete m:
/// (i) multiplicity sum 2m-1 and exact table match,
/// (ii) phi-closure,
/// (iii) parallel-family self-consistency at two shift parameters,
/// (iv) focal metadata.
pub fn verify_example(id: ExampleId, t: &Rational, m: u32) -> VerifyReport {
    let rec = record(id);
    let mut checks = Vec::new();

    if rec.normal == NormalType::APrincipal {
        // Table sum only: the printed multiplicities must add to 2m-1.
        let total = rec.table.iter().fold(Mult::ZERO, |acc, (_, k)| acc + *k);
        checks.push(check(
            "table-sum",
            total == Mult::new(2, -1),
            format!("sum = {}", total),
        ));
        return VerifyReport {
            id,
            status: VerifyStatus::CatalogOnly,
            checks,
        };
    }
    if !rec.m_constraint.admits(m) {
        return VerifyReport {
            id,
            status: VerifyStatus::SkippedMConstraint,
            checks,
        };
    }

    let config = match instantiate(id, t, MDim::Concrete(m)) {
        Ok(c) => c,
        Err(e) => {
            checks.push(check("instantiate", false, e.to_string()));
            return VerifyReport {
                id,
                status: VerifyStatus::Verified,
                checks,
            };
        }
    };

    // (i) table fidelity: full multiset == printed table, total 2m-1.
    let full = config.full_multiset();
    let table = PrincipalMultiset::from_entries(
        instantiate_table(&rec, t).expect("rational table"),
    );
    let total = full.total();
    checks.push(check(
        "multiplicity-sum",
        total.eval(m) == 2 * m as i64 - 1,
        format!("total = {}", total),
    ));
    checks.push(check(
        "table-exact",
        full == table,
        format!("full = {}, table = {}", full, table),
    ));

    // (ii) phi-closure.
    let closure = flow::phi_closure_check(&config);
    checks.push(check(
        "phi-closure",
        closure.pass(),
        format!("{:?}", closure.violations),
    ));

    // (iii) parallel-family self-consistency at two shifts.
    checks.extend(parallel_checks(&rec, &config, t, m));

    // (iv) focal metadata.
    checks.extend(focal_checks(&rec, &config, t, m));

    VerifyReport {
        id,
        status: VerifyStatus::Verified,
        checks,
    }
}

fn config_eq(a: &HopfConfig, b: &HopfConfig) -> bool {
    a == b
}

fn parallel_checks(
    rec: &ExampleRecord,
    config: &HopfConfig,
    t: &Rational,
    m: u32,
) -> Vec<CheckResult> {
    let mut checks = Vec::new();
    let tv = |n: i64, d: i64| AlgebraicReal::from_ratio(n, d);
    match rec.id {
        ExampleId::E3_4 | ExampleId::E3_10 => {
            // Horosphere-type records are flow fixed points.
            for tau in [tv(1, 4), tv(-1, 4)] {
                match parallel_config(config, &tau) {
                    Ok(flowed) => checks.push(check(
                        "parallel-fixed-point",
                        config_eq(&flowed, config),
                        format!("tau = {}", tau),
                    )),
                    Err(e) => checks.push(check("parallel-fixed-point", false, e.to_string())),
                }
            }
        }
        ExampleId::E3_5 | ExampleId::E3_9 => {
            // Tube families shift in-family: t' = (t - tau)/(1 - t tau).
            for tau in [rat(1, 8), rat(-1, 8)] {
                let shifted = (t - &tau) / (Rational::one() - t * &tau);
                let tau_v = AlgebraicReal::from_rational(tau.clone());
                let got = parallel_config(config, &tau_v);
                let want = instantiate(rec.id, &shifted, MDim::Concrete(m));
                let pass = match (&got, &want) {
                    (Ok(g), Ok(w)) => config_eq(g, w),
                    _ => false,
                };
                checks.push(check(
                    "parallel-in-family",
                    pass,
                    format!("tau = {}, t' = {}", tau, shifted),
                ));
            }
        }
        ExampleId::E3_6 => {
            // Flowing by -t along +N is the alpha = 2tanh(2r) equidistant.
            let tau = AlgebraicReal::from_rational(-t.clone());
            let got = parallel_config(config, &tau);
            let want = instantiate(ExampleId::E3_8, t, MDim::Concrete(m));
            let pass = match (&got, &want) {
                (Ok(g), Ok(w)) => config_eq(g, w),
                _ => false,
            };
            checks.push(check(
                "parallel-family-3.8",
                pass,
                format!("flow by {}", tau),
            ));
            // At tanh(2r) = 1/2 (t* = 2 - sqrt3) the equidistant is 3.7.
            let t_star = parse_scalar("2-sqrt(3)").unwrap();
            let got = parallel_config(config, &t_star.neg());
            let want = instantiate(ExampleId::E3_7, t, MDim::Concrete(m));
            let pass = match (&got, &want) {
                (Ok(g), Ok(w)) => config_eq(g, w),
                _ => false,
            };
            checks.push(check(
                "parallel-family-3.7",
                pass,
                "flow by -(2-sqrt(3))".to_string(),
            ));
        }
        ExampleId::E3_7 => {
            // Composition through the family: flowing 3.7 by tau equals
            // flowing 3.6 by the hyperbolic sum of -(2-sqrt3) and tau.
            let base = instantiate(ExampleId::E3_6, t, MDim::Concrete(m)).expect("3.6");
            let t_star = parse_scalar("2-sqrt(3)").unwrap().neg();
            for tau in [tv(1, 8), tv(-1, 8)] {
                let lhs = parallel_config(config, &tau);
                let composed = t_star
                    .add(&tau)
                    .div(&AlgebraicReal::one().add(&t_star.mul(&tau)))
                    .unwrap();
                let rhs = parallel_config(&base, &composed);
                let pass = match (&lhs, &rhs) {
                    (Ok(a), Ok(b)) => config_eq(a, b),
                    _ => false,
                };
                checks.push(check(
                    "parallel-composition-3.6",
                    pass,
                    format!("tau = {}", tau),
                ));
            }
        }
        ExampleId::E3_8 => {
            for tau in [rat(-1, 8)] {
                let shifted = (t - &tau) / (Rational::one() - t * &tau);
                let tau_v = AlgebraicReal::from_rational(tau.clone());
                let got = parallel_config(config, &tau_v);
                let want = instantiate(rec.id, &shifted, MDim::Concrete(m));
                let pass = match (&got, &want) {
                    (Ok(g), Ok(w)) => config_eq(g, w),
                    _ => false,
                };
                checks.push(check(
                    "parallel-in-family",
                    pass,
                    format!("tau = {}, t' = {}", tau, shifted),
                ));
            }
            // And flowing forward by t returns to the alpha = 0 extension.
            let tau_v = AlgebraicReal::from_rational(t.clone());
            let got = parallel_config(config, &tau_v);
            let want = instantiate(ExampleId::E3_6, t, MDim::Concrete(m));
            let pass = match (&got, &want) {
                (Ok(g), Ok(w)) => config_eq(g, w),
                _ => false,
            };
            checks.push(check("parallel-family-3.6", pass, format!("flow by {}", t)));
        }
        _ => {}
    }
    checks
}

fn focal_checks(
    rec: &ExampleRecord,
    config: &HopfConfig,
    t: &Rational,
    m: u32,
) -> Vec<CheckResult> {
    let mut checks = Vec::new();
    let plus = focal_parameters(config, Side::Plus);
    let minus = focal_parameters(config, Side::Minus);
    match rec.focal {
        FocalExpectation::NotTracked => {}
        FocalExpectation::NoneEither => {
            checks.push(check(
                "no-focal",
                !plus.exists() && !minus.exists(),
                format!("plus = {:?}, minus = {:?}", plus, minus),
            ));
            let none_zero = det_factors(config).iter().all(|f| f.zero_t.is_none());
            checks.push(check(
                "det-factors-no-zero",
                none_zero,
                "all determinant factors nonvanishing for |t| < 1".into(),
            ));
        }
        FocalExpectation::TotallyGeodesicPlus => {
            match focal_multiset(config, Side::Plus) {
                Err(e) => checks.push(check("focal-plus", false, e.to_string())),
                Ok((ms, dim)) => {
                    let all_zero = ms.len() == 1 && ms.get(&AlgebraicReal::zero()).is_some();
                    checks.push(check(
                        "focal-totally-geodesic",
                        all_zero && dim.eval(m) == m as i64,
                        format!("multiset = {}, dim = {}", ms, dim),
                    ));
                    checks.push(check("focal-austere", ms.is_austere(), format!("{}", ms)));
                }
            }
            if let FocalReport::Present { t_star, .. } = &plus {
                checks.push(check(
                    "focal-distance",
                    t_star.as_rational() == Some(t.clone()),
                    format!("t* = {}", t_star),
                ));
            }
            checks.push(check("no-minus-focal", !minus.exists(), String::new()));
        }
        FocalExpectation::AusterePlusPattern => {
            match focal_multiset(config, Side::Plus) {
                Err(e) => checks.push(check("focal-plus", false, e.to_string())),
                Ok((ms, dim)) => {
                    let expected = PrincipalMultiset::from_entries(vec![
                        (AlgebraicReal::zero(), Mult::constant(2)),
                        (AlgebraicReal::one(), Mult::new(1, -2)),
                        (AlgebraicReal::one().neg(), Mult::new(1, -2)),
                    ]);
                    checks.push(check(
                        "focal-pattern",
                        ms == expected && dim == Mult::new(2, -2),
                        format!("multiset = {}, dim = {}", ms, dim),
                    ));
                    checks.push(check("focal-austere", ms.is_austere(), format!("{}", ms)));
                }
            }
            if let FocalReport::Present { t_star, .. } = &plus {
                checks.push(check(
                    "focal-distance",
                    t_star.as_rational() == Some(t.clone()),
                    format!("t* = {}", t_star),
                ));
            }
            checks.push(check("no-minus-focal", !minus.exists(), String::new()));
        }
    }
    checks
}
