//! JSON schemas for configurations, catalog exports, and verification
//! reports.
//!
//! Config schema: {"m": int | "symbolic", "alpha": <scalar>,
//! "spectrum": [{"value": <scalar>, "mult": {"a": int, "b": int}}]}
//! where <scalar> is a scalar-expression string or an exact
//! {minpoly, lo, hi} object.

use crate::catalog::{self, ExampleId, NormalType, VerifyReport, VerifyStatus};
use crate::config::HopfConfig;
use crate::mult::{MDim, Mult};
use crate::render::ScalarRepr;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MDimRepr {
    Symbolic(String),
    Concrete(u32),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpectrumEntryRepr {
    pub value: ScalarRepr,
    pub mult: Mult,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConfigRepr {
    pub m: MDimRepr,
    pub alpha: ScalarRepr,
    pub spectrum: Vec<SpectrumEntryRepr>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReportError {
    #[error("bad m field: {0}")]
    BadM(String),
    #[error("{0}")]
    Scalar(String),
    #[error("config error: {0}")]
    Config(#[from] crate::config::ConfigError),
    #[error("json error: {0}")]
    Json(String),
}

impl ConfigRepr {
    pub fn of(config: &HopfConfig) -> ConfigRepr {
        ConfigRepr {
            m: match config.m() {
                MDim::Symbolic => MDimRepr::Symbolic("symbolic".into()),
                MDim::Concrete(m) => MDimRepr::Concrete(m),
            },
            alpha: ScalarRepr::of(config.alpha()),
            spectrum: config
                .spectrum()
                .iter()
                .map(|(v, k)| SpectrumEntryRepr {
                    value: ScalarRepr::of(v),
                    mult: *k,
                })
                .collect(),
        }
    }

    pub fn to_config(&self) -> Result<HopfConfig, ReportError> {
        let m = match &self.m {
            MDimRepr::Concrete(m) => MDim::Concrete(*m),
            MDimRepr::Symbolic(s) if s == "symbolic" => MDim::Symbolic,
            MDimRepr::Symbolic(s) => return Err(ReportError::BadM(s.clone())),
        };
        let alpha = self
            .alpha
            .to_value()
            .map_err(|e| ReportError::Scalar(e.to_string()))?;
        let mut spectrum = Vec::new();
        for e in &self.spectrum {
            let v = e
                .value
                .to_value()
                .map_err(|er| ReportError::Scalar(er.to_string()))?;
            spectrum.push((v, e.mult));
        }
        Ok(HopfConfig::new_any_orientation(m, alpha, spectrum)?)
    }
}

/// Parse a config from JSON text.
pub fn config_from_json(text: &str) -> Result<HopfConfig, ReportError> {
    let repr: ConfigRepr =
        serde_json::from_str(text).map_err(|e| ReportError::Json(e.to_string()))?;
    repr.to_config()
}

/// Config JSON with decimal renderings of the scalars appended.
pub fn config_report(config: &HopfConfig, digits: u32) -> Value {
    let repr = ConfigRepr::of(config);
    let mut v = serde_json::to_value(&repr).expect("config serializes");
    v["alpha_decimal"] = json!(config.alpha().to_decimal(digits));
    let decs: Vec<String> = config
        .spectrum()
        .iter()
        .map(|(val, _)| val.to_decimal(digits))
        .collect();
    v["spectrum_decimals"] = json!(decs);
    v
}

/// Catalog export: records with tables and metadata.
pub fn catalog_json() -> Value {
    let records: Vec<Value> = catalog::catalog()
        .iter()
        .map(|r| {
            json!({
                "id": r.id.to_string(),
                "normal_type": r.normal.to_string(),
                "parameterized": r.parameterized,
                "alpha": r.alpha.describe(),
                "table": r.table.iter().map(|(v, k)| json!({
                    "value": v.describe(),
                    "mult": k,
                })).collect::<Vec<_>>(),
                "m_constraint": match r.m_constraint {
                    catalog::MConstraint::AnyM => "m >= 3",
                    catalog::MConstraint::EvenAtLeast4 => "m = 2k, k >= 2",
                },
                "s-phi-antisymmetric": r.sphi_antisymmetric,
                "excluded_alpha": r.excluded_alpha,
                "flow_applicable": r.flow_applicable,
                "description": r.description,
                "catalog_only": r.normal == NormalType::APrincipal,
            })
        })
        .collect();
    json!({ "examples": records })
}

pub fn verify_report_json(reports: &[VerifyReport], m: u32, t: &str) -> Value {
    let rows: Vec<Value> = reports
        .iter()
        .map(|r| {
            json!({
                "example": r.id.to_string(),
                "status": match r.status {
                    VerifyStatus::Verified => "verified",
                    VerifyStatus::CatalogOnly => "catalog-only",
                    VerifyStatus::SkippedMConstraint => "skipped (m constraint)",
                },
                "pass": r.pass(),
                "checks": r.checks.iter().map(|c| json!({
                    "name": c.name,
                    "pass": c.pass,
                    "detail": c.detail,
                })).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "m": m,
        "t": t,
        "all_pass": reports.iter().all(|r| r.pass()),
        "examples": rows,
    })
}

/// Run verify_example over the whole catalog.
pub fn verify_all(t: &hopfq_exact::Rational, m: u32) -> Vec<VerifyReport> {
    ExampleId::all()
        .iter()
        .map(|id| catalog::verify_example(*id, t, m))
        .collect()
}
