//! Parallel-hypersurface curvature flow, focal machinery, and the Reeb
//! pairing, in the t = tanh(r) coordinate.
//!
//! In that coordinate every sigma(Q) value flows by the Moebius map
//! lambda -> (lambda - t)/(1 - lambda t), the Reeb entry by the double-angle
//! variant with s = 2t/(1+t^2), and the 0-block stays 0. Focal data comes
//! from the zeros of the tangent-map determinant factors.

use crate::config::{HopfConfig, PrincipalMultiset};
use crate::mult::{MDim, Mult};
use hopfq_exact::{rat, AlgebraicReal};
use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FlowError {
    #[error("flow parameter must satisfy |t| < 1")]
    ParamOutOfRange,
    #[error("negative Reeb value outside the alpha >= 0 normalization")]
    NegativeAlpha,
    #[error("focal collapse at t = {at} ({factor})")]
    FocalCollapse { at: String, factor: String },
    #[error("requested focal side does not exist")]
    SideAbsent,
    #[error("config error: {0}")]
    Config(#[from] crate::config::ConfigError),
}

/// Result of the Reeb pairing lambda -> (alpha*lambda - 2)/(2*lambda - alpha).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReebPair {
    Value(AlgebraicReal),
    /// 2*lambda = alpha, which forces alpha = 2 and lambda = 1.
    Degenerate,
}

/// The pairing mu = (alpha*lambda - 2) / (2*lambda - alpha); an involution
/// away from its degenerate locus.
pub fn reeb_pair(alpha: &AlgebraicReal, lambda: &AlgebraicReal) -> Result<ReebPair, FlowError> {
    if alpha.sign() < 0 {
        return Err(FlowError::NegativeAlpha);
    }
    let two_lambda = lambda.mul_rational(&rat(2, 1));
    let den = two_lambda.sub(alpha);
    if den.sign() == 0 {
        return Ok(ReebPair::Degenerate);
    }
    let num = alpha.mul(lambda).sub(&AlgebraicReal::from_int(2));
    Ok(ReebPair::Value(num.div(&den).expect("nonzero denominator")))
}

/// One failed condition of the phi-closure check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosureViolation {
    /// pair(lambda) is not in sigma(Q).
    NotClosed { lambda: AlgebraicReal, pair: AlgebraicReal },
    /// paired eigenvalues have different multiplicities.
    MultMismatch { lambda: AlgebraicReal, pair: AlgebraicReal },
    /// alpha = 2 but 1 is not in sigma(Q).
    MissingOne,
    /// alpha = 2 and mult(1) < sum of the other multiplicities.
    OneTooSmall,
    /// alpha = 0 but 0 is in sigma(Q).
    ZeroInSpectrum,
    /// the degenerate pairing (2*lambda = alpha) occurred away from alpha=2.
    DegeneratePairing { lambda: AlgebraicReal },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureReport {
    pub violations: Vec<ClosureViolation>,
}

impl ClosureReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Verify that sigma(Q) is compatible with the Reeb pairing:
/// closed with matching multiplicities for alpha != 2; for alpha = 2 the
/// eigenvalue 1 must be present with dominating multiplicity; for alpha = 0
/// additionally 0 must not lie in sigma(Q).
pub fn phi_closure_check(config: &HopfConfig) -> ClosureReport {
    let alpha = config.alpha();
    let mut violations = Vec::new();
    let two = AlgebraicReal::from_int(2);
    let one = AlgebraicReal::one();
    if alpha.compare(&two) == Ordering::Equal {
        match config.spectrum_mult_of(&one) {
            None => violations.push(ClosureViolation::MissingOne),
            Some(m1) => {
                let others = config
                    .spectrum()
                    .iter()
                    .filter(|(v, _)| v.compare(&one) != Ordering::Equal)
                    .fold(Mult::ZERO, |acc, (_, k)| acc + *k);
                let diff = m1 - others;
                let ok = match config.m() {
                    MDim::Symbolic => diff.ge_for_all_m(0),
                    MDim::Concrete(m) => diff.eval(m) >= 0,
                };
                if !ok {
                    violations.push(ClosureViolation::OneTooSmall);
                }
            }
        }
        return ClosureReport { violations };
    }
    if alpha.sign() == 0 {
        if config.spectrum_mult_of(&AlgebraicReal::zero()).is_some() {
            violations.push(ClosureViolation::ZeroInSpectrum);
        }
    }
    for (lambda, mult) in config.spectrum() {
        match reeb_pair(alpha, lambda) {
            Err(_) => unreachable!("alpha validated nonnegative"),
            Ok(ReebPair::Degenerate) => {
                violations.push(ClosureViolation::DegeneratePairing {
                    lambda: lambda.clone(),
                });
            }
            Ok(ReebPair::Value(mu)) => match config.spectrum_mult_of(&mu) {
                None => violations.push(ClosureViolation::NotClosed {
                    lambda: lambda.clone(),
                    pair: mu,
                }),
                Some(pm) => {
                    if pm != *mult {
                        violations.push(ClosureViolation::MultMismatch {
                            lambda: lambda.clone(),
                            pair: mu,
                        });
                    }
                }
            },
        }
    }
    ClosureReport { violations }
}

fn mobius(lambda: &AlgebraicReal, t: &AlgebraicReal) -> AlgebraicReal {
    // (lambda - t) / (1 - lambda t)
    let num = lambda.sub(t);
    let den = AlgebraicReal::one().sub(&lambda.mul(t));
    num.div(&den).expect("collapse excluded by admissibility")
}

fn double_angle(t: &AlgebraicReal) -> AlgebraicReal {
    // s = 2t / (1 + t^2)
    let num = t.mul_rational(&rat(2, 1));
    let den = AlgebraicReal::one().add(&t.square());
    num.div(&den).expect("1 + t^2 > 0")
}

fn reeb_flow_value(alpha: &AlgebraicReal, t: &AlgebraicReal) -> AlgebraicReal {
    // (alpha - 2s) / (1 - (alpha/2) s)
    let s = double_angle(t);
    let num = alpha.sub(&s.mul_rational(&rat(2, 1)));
    let den = AlgebraicReal::one().sub(&alpha.mul_rational(&rat(1, 2)).mul(&s));
    num.div(&den).expect("collapse excluded by admissibility")
}

/// Collapse parameters of the determinant factors, if any, per source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DetFactorSource {
    QValue(AlgebraicReal),
    Reeb,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetFactor {
    pub source: DetFactorSource,
    /// Zero of the factor inside t in (-1, 1), when it exists.
    pub zero_t: Option<AlgebraicReal>,
}

/// Zeros of the factors of Det(B_ij) in the t coordinate: a sigma(Q) value
/// lambda collapses at t = 1/lambda when |lambda| > 1; the Reeb factor
/// collapses at t = (alpha - sqrt(alpha^2 - 4))/2 when alpha > 2.
pub fn det_factors(config: &HopfConfig) -> Vec<DetFactor> {
    let one = AlgebraicReal::one();
    let mut out = Vec::new();
    for (lambda, _) in config.spectrum() {
        let abs_gt_one = lambda.square().compare(&one) == Ordering::Greater;
        let zero_t = if abs_gt_one {
            Some(lambda.inv().expect("|lambda| > 1"))
        } else {
            None
        };
        out.push(DetFactor {
            source: DetFactorSource::QValue(lambda.clone()),
            zero_t,
        });
    }
    let alpha = config.alpha();
    let two = AlgebraicReal::from_int(2);
    let zero_t = if alpha.compare(&two) == Ordering::Greater {
        let disc = alpha.square().sub(&AlgebraicReal::from_int(4));
        let root = disc.sqrt().expect("alpha > 2");
        Some(alpha.sub(&root).mul_rational(&rat(1, 2)))
    } else {
        None
    };
    out.push(DetFactor {
        source: DetFactorSource::Reeb,
        zero_t,
    });
    out
}

fn admissible(config: &HopfConfig, t: &AlgebraicReal) -> Result<(), FlowError> {
    let one = AlgebraicReal::one();
    if t.square().compare(&one) != Ordering::Less {
        return Err(FlowError::ParamOutOfRange);
    }
    let zero = AlgebraicReal::zero();
    let forward = t.sign() >= 0;
    for f in det_factors(config) {
        if let Some(c) = f.zero_t {
            let hit = if forward {
                c.compare(&zero) == Ordering::Greater && c.compare(t) != Ordering::Greater
            } else {
                c.compare(&zero) == Ordering::Less && c.compare(t) != Ordering::Less
            };
            if hit {
                let factor = match f.source {
                    DetFactorSource::QValue(v) => format!("sigma(Q) value {}", v),
                    DetFactorSource::Reeb => "Reeb factor".to_string(),
                };
                return Err(FlowError::FocalCollapse {
                    at: c.to_decimal(6),
                    factor,
                });
            }
        }
    }
    Ok(())
}

/// Curvature configuration of the parallel hypersurface at parameter t.
pub fn parallel_config(config: &HopfConfig, t: &AlgebraicReal) -> Result<HopfConfig, FlowError> {
    admissible(config, t)?;
    let spectrum = config
        .spectrum()
        .iter()
        .map(|(v, k)| (mobius(v, t), *k))
        .collect();
    let alpha = reeb_flow_value(config.alpha(), t);
    Ok(HopfConfig::new_any_orientation(config.m(), alpha, spectrum)?)
}

/// Mean curvature of the parallel hypersurface at parameter t, concrete m.
pub fn mean_curvature(
    config: &HopfConfig,
    t: &AlgebraicReal,
    m: u32,
) -> Result<AlgebraicReal, FlowError> {
    admissible(config, t)?;
    let mut acc = reeb_flow_value(config.alpha(), t);
    for (v, k) in config.spectrum() {
        let term = mobius(v, t).mul_rational(&rat(k.eval(m), 1));
        acc = acc.add(&term);
    }
    Ok(acc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Plus,
    Minus,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::Plus => write!(f, "+"),
            Side::Minus => write!(f, "-"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FocalBranch {
    /// lambda_+ above the Reeb threshold (or 0 <= alpha <= 2).
    Generic,
    /// alpha > 2 and lambda_+ equals (alpha + sqrt(alpha^2-4))/2 exactly.
    Degenerate,
    /// the minus side (always carries the Reeb entry).
    Minus,
}

/// Focal data for one side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FocalReport {
    Absent {
        side: Side,
    },
    Present {
        side: Side,
        lambda_star: AlgebraicReal,
        t_star: AlgebraicReal,
        branch: FocalBranch,
        focal_dim: Mult,
    },
}

impl FocalReport {
    pub fn exists(&self) -> bool {
        matches!(self, FocalReport::Present { .. })
    }
}

/// lambda_+ / lambda_- and the focal dimension bookkeeping.
pub fn focal_parameters(config: &HopfConfig, side: Side) -> FocalReport {
    let alpha = config.alpha();
    let one = AlgebraicReal::one();
    let two = AlgebraicReal::from_int(2);
    let alpha_gt_2 = alpha.compare(&two) == Ordering::Greater;
    match side {
        Side::Plus => {
            let threshold = if alpha_gt_2 {
                let disc = alpha.square().sub(&AlgebraicReal::from_int(4));
                alpha
                    .add(&disc.sqrt().expect("alpha > 2"))
                    .mul_rational(&rat(1, 2))
            } else {
                one.clone()
            };
            let mut lambda_plus = threshold.clone();
            for (v, _) in config.spectrum() {
                if v.sign() > 0 && v.compare(&lambda_plus) == Ordering::Greater {
                    lambda_plus = v.clone();
                }
            }
            if lambda_plus.compare(&one) != Ordering::Greater {
                return FocalReport::Absent { side };
            }
            // Degenerate exactly when lambda_+^2 - alpha lambda_+ + 1 = 0
            // (equivalently alpha > 2 and lambda_+ is the Reeb threshold).
            let jacobi = lambda_plus
                .square()
                .sub(&alpha.mul(&lambda_plus))
                .add(&one);
            let degenerate = alpha_gt_2 && jacobi.sign() == 0;
            let dim_v = config
                .spectrum_mult_of(&lambda_plus)
                .unwrap_or(Mult::ZERO);
            let deficit = if degenerate { 2 } else { 1 };
            let focal_dim = Mult::new(2, -deficit) - dim_v;
            FocalReport::Present {
                side,
                t_star: lambda_plus.inv().expect("lambda_+ > 1"),
                lambda_star: lambda_plus,
                branch: if degenerate {
                    FocalBranch::Degenerate
                } else {
                    FocalBranch::Generic
                },
                focal_dim,
            }
        }
        Side::Minus => {
            let mut lambda_minus = one.neg();
            for (v, _) in config.spectrum() {
                if v.sign() < 0 && v.compare(&lambda_minus) == Ordering::Less {
                    lambda_minus = v.clone();
                }
            }
            if lambda_minus.compare(&one.neg()) != Ordering::Less {
                return FocalReport::Absent { side };
            }
            let dim_v = config
                .spectrum_mult_of(&lambda_minus)
                .unwrap_or(Mult::ZERO);
            let focal_dim = Mult::new(2, -1) - dim_v;
            FocalReport::Present {
                side,
                t_star: lambda_minus.inv().expect("lambda_- < -1"),
                lambda_star: lambda_minus,
                branch: FocalBranch::Minus,
                focal_dim,
            }
        }
    }
}

/// Principal-curvature multiset of the focal submanifold on one side.
///
/// Entries: (0, 2) from the AN/A-xi block; the Reeb entry
/// alpha + (alpha^2-4) L / (L^2 - alpha L + 1) of multiplicity 1 except in
/// the degenerate branch (where that Jacobi factor collapses); and
/// (L*lambda_i - 1)/(L - lambda_i) with lambda_i's multiplicity for every
/// sigma(Q) value lambda_i != L.
pub fn focal_multiset(
    config: &HopfConfig,
    side: Side,
) -> Result<(PrincipalMultiset, Mult), FlowError> {
    let report = focal_parameters(config, side);
    let (lambda_star, branch, focal_dim) = match &report {
        FocalReport::Absent { .. } => return Err(FlowError::SideAbsent),
        FocalReport::Present {
            lambda_star,
            branch,
            focal_dim,
            ..
        } => (lambda_star, *branch, *focal_dim),
    };
    let one = AlgebraicReal::one();
    let mut entries = vec![(AlgebraicReal::zero(), Mult::constant(2))];
    if branch != FocalBranch::Degenerate {
        let alpha = config.alpha();
        let num = alpha
            .square()
            .sub(&AlgebraicReal::from_int(4))
            .mul(lambda_star);
        let den = lambda_star
            .square()
            .sub(&alpha.mul(lambda_star))
            .add(&one);
        let reeb_entry = alpha.add(&num.div(&den).expect("nondegenerate Jacobi factor"));
        entries.push((reeb_entry, Mult::ONE));
    }
    for (v, k) in config.spectrum() {
        if v.compare(lambda_star) == Ordering::Equal {
            continue;
        }
        let num = lambda_star.mul(v).sub(&one);
        let den = lambda_star.sub(v);
        entries.push((num.div(&den).expect("lambda_i != lambda_*"), *k));
    }
    let ms = PrincipalMultiset::from_entries(entries);
    match config.m() {
        MDim::Symbolic => debug_assert_eq!(ms.total(), focal_dim),
        MDim::Concrete(m) => debug_assert_eq!(ms.total().eval(m), focal_dim.eval(m)),
    }
    Ok((ms, focal_dim))
}

/// True when the multiset of principal curvatures is invariant under sign
/// change (with matching multiplicities).
pub fn austere(ms: &PrincipalMultiset) -> bool {
    ms.is_austere()
}
