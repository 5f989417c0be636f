//! Cartan-type identities for A-isotropic Hopf hypersurfaces with constant
//! principal curvatures: the bracket of structure-tensor inner products,
//! the right-hand side (lambda*mu - 1) * bracket, and sign certificates for
//! the covariant-derivative sum on the left.

use crate::config::PrincipalMultiset;
use hopfq_exact::{rat, AlgebraicReal};
use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CartanError {
    #[error("lambda and mu must be distinct")]
    EqualCurvatures,
    #[error("{0} is not a spectrum value")]
    NotInSpectrum(String),
    #[error("geometry violates frame invariants: {0}")]
    InvalidGeometry(String),
    #[error("basis entry with mu_i = lambda is not allowed")]
    BasisContainsLambda,
}

/// The seven structure-tensor inner products entering the Cartan bracket:
/// g(phiX,Y), g(AX,Y), g(AX,JY), g(AX,X), g(AX,JX), g(AY,Y), g(AY,JY).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameGeometry {
    pub c_phi: AlgebraicReal,
    pub c_a1: AlgebraicReal,
    pub c_a2: AlgebraicReal,
    pub a_xx: AlgebraicReal,
    pub a_xjx: AlgebraicReal,
    pub a_yy: AlgebraicReal,
    pub a_yjy: AlgebraicReal,
}

impl FrameGeometry {
    pub fn zero() -> Self {
        let z = AlgebraicReal::zero;
        FrameGeometry {
            c_phi: z(),
            c_a1: z(),
            c_a2: z(),
            a_xx: z(),
            a_xjx: z(),
            a_yy: z(),
            a_yjy: z(),
        }
    }

    pub fn validate(&self) -> Result<(), CartanError> {
        let one = AlgebraicReal::one();
        for (name, v) in [
            ("g(phiX,Y)", &self.c_phi),
            ("g(AX,Y)", &self.c_a1),
            ("g(AX,JY)", &self.c_a2),
            ("g(AX,X)", &self.a_xx),
            ("g(AX,JX)", &self.a_xjx),
            ("g(AY,Y)", &self.a_yy),
            ("g(AY,JY)", &self.a_yjy),
        ] {
            if v.square().compare(&one) == Ordering::Greater {
                return Err(CartanError::InvalidGeometry(format!(
                    "|{}| > 1",
                    name
                )));
            }
        }
        let x_norm = self.a_xx.square().add(&self.a_xjx.square());
        let y_norm = self.a_yy.square().add(&self.a_yjy.square());
        if x_norm.compare(&one) == Ordering::Greater {
            return Err(CartanError::InvalidGeometry(
                "g(AX,X)^2 + g(AX,JX)^2 > 1".into(),
            ));
        }
        if y_norm.compare(&one) == Ordering::Greater {
            return Err(CartanError::InvalidGeometry(
                "g(AY,Y)^2 + g(AY,JY)^2 > 1".into(),
            ));
        }
        Ok(())
    }

    /// 1 + 2 g(phiX,Y)^2 - 2 g(AX,Y)^2 - 2 g(AX,JY)^2
    ///   + g(AX,X) g(AY,Y) + g(AX,JX) g(AY,JY)
    pub fn bracket(&self) -> AlgebraicReal {
        let two = rat(2, 1);
        AlgebraicReal::one()
            .add(&self.c_phi.square().mul_rational(&two))
            .sub(&self.c_a1.square().mul_rational(&two))
            .sub(&self.c_a2.square().mul_rational(&two))
            .add(&self.a_xx.mul(&self.a_yy))
            .add(&self.a_xjx.mul(&self.a_yjy))
    }

    /// Transcription under exchanging the roles of X and Y.
    pub fn swapped(&self) -> Self {
        FrameGeometry {
            c_phi: self.c_phi.neg(),
            c_a1: self.c_a1.clone(),
            c_a2: self.c_a2.clone(),
            a_xx: self.a_yy.clone(),
            a_xjx: self.a_yjy.clone(),
            a_yy: self.a_xx.clone(),
            a_yjy: self.a_xjx.clone(),
        }
    }
}

/// Geometry induced by the frame choice Y = JX under AJ = -JA.
pub fn specialize_y_equals_jx(
    a_xx: &AlgebraicReal,
    a_xjx: &AlgebraicReal,
) -> Result<FrameGeometry, CartanError> {
    let g = FrameGeometry {
        c_phi: AlgebraicReal::one(),
        c_a1: a_xjx.clone(),
        c_a2: a_xx.neg(),
        a_xx: a_xx.clone(),
        a_xjx: a_xjx.clone(),
        a_yy: a_xx.neg(),
        a_yjy: a_xjx.neg(),
    };
    g.validate()?;
    Ok(g)
}

/// Named frame scenarios used in the eliminations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scenario {
    /// Y = JX with AV orthogonal to span{V, JV}: g(AX,X) = g(AX,JX) = 0.
    YEqJxOrthA,
    /// Y = JX with explicit g(AX,X), g(AX,JX).
    YEqJx {
        a_xx: AlgebraicReal,
        a_xjx: AlgebraicReal,
    },
    /// Y = JX with AX = X.
    AxEqX,
    /// Y = AX with AV_X orthogonal to span{V_X, JV_X}.
    YEqAxOrthA,
    /// X, Y in different eigenspaces with AX orthogonal to {Y, JY} and
    /// AV_X orthogonal to span{V_X, JV_X}; phiX also orthogonal to Y.
    OrthPair,
}

impl Scenario {
    pub fn name(&self) -> String {
        match self {
            Scenario::YEqJxOrthA => "y-eq-jx-orthA".into(),
            Scenario::YEqJx { .. } => "y-eq-jx".into(),
            Scenario::AxEqX => "ax-eq-x".into(),
            Scenario::YEqAxOrthA => "y-eq-ax-orthA".into(),
            Scenario::OrthPair => "orth-pair".into(),
        }
    }

    pub fn geometry(&self) -> Result<FrameGeometry, CartanError> {
        match self {
            Scenario::YEqJxOrthA => {
                specialize_y_equals_jx(&AlgebraicReal::zero(), &AlgebraicReal::zero())
            }
            Scenario::YEqJx { a_xx, a_xjx } => specialize_y_equals_jx(a_xx, a_xjx),
            Scenario::AxEqX => specialize_y_equals_jx(&AlgebraicReal::one(), &AlgebraicReal::zero()),
            Scenario::YEqAxOrthA => {
                let g = FrameGeometry {
                    c_phi: AlgebraicReal::zero(),
                    c_a1: AlgebraicReal::one(),
                    c_a2: AlgebraicReal::zero(),
                    a_xx: AlgebraicReal::zero(),
                    a_xjx: AlgebraicReal::zero(),
                    a_yy: AlgebraicReal::zero(),
                    a_yjy: AlgebraicReal::zero(),
                };
                g.validate()?;
                Ok(g)
            }
            Scenario::OrthPair => Ok(FrameGeometry::zero()),
        }
    }
}

/// (lambda*mu - 1) * bracket(geometry).
pub fn cartan_rhs(
    lambda: &AlgebraicReal,
    mu: &AlgebraicReal,
    geom: &FrameGeometry,
) -> Result<AlgebraicReal, CartanError> {
    if lambda.compare(mu) == Ordering::Equal {
        return Err(CartanError::EqualCurvatures);
    }
    let factor = lambda.mul(mu).sub(&AlgebraicReal::one());
    Ok(factor.mul(&geom.bracket()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignVerdict {
    /// No terms at all: the sum is exactly 0.
    EmptyZero,
    NonNeg,
    NonPos,
    Indeterminate,
}

/// Sign certificate for 2 * sum over mu_i not in {lambda, mu} of
/// g((nabla_{e_i} S)X, Y)^2 / ((lambda - mu_i)(mu - mu_i)): the numerators
/// are squares, so the sign is decided by the denominators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignCertificate {
    pub verdict: SignVerdict,
    /// (mu_i, sign of (lambda - mu_i)(mu - mu_i))
    pub witnesses: Vec<(AlgebraicReal, i32)>,
}

pub fn lhs_sign(
    lambda: &AlgebraicReal,
    mu: &AlgebraicReal,
    spectrum: &PrincipalMultiset,
) -> Result<SignCertificate, CartanError> {
    if lambda.compare(mu) == Ordering::Equal {
        return Err(CartanError::EqualCurvatures);
    }
    for (name, v) in [("lambda", lambda), ("mu", mu)] {
        if !spectrum.contains(v) {
            return Err(CartanError::NotInSpectrum(format!("{} = {}", name, v)));
        }
    }
    let mut witnesses = Vec::new();
    for v in spectrum.values() {
        if v.compare(lambda) == Ordering::Equal || v.compare(mu) == Ordering::Equal {
            continue;
        }
        let prod = lambda.sub(v).mul(&mu.sub(v));
        witnesses.push((v.clone(), prod.sign()));
    }
    let verdict = if witnesses.is_empty() {
        SignVerdict::EmptyZero
    } else if witnesses.iter().all(|(_, s)| *s > 0) {
        SignVerdict::NonNeg
    } else if witnesses.iter().all(|(_, s)| *s < 0) {
        SignVerdict::NonPos
    } else {
        SignVerdict::Indeterminate
    };
    Ok(SignCertificate { verdict, witnesses })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Contradiction(String),
    Consistent,
}

/// Check one Cartan identity instance for a contradiction.
///
/// With exactly two distinct sigma(Q) values the sum on the left is empty,
/// so any nonzero right side contradicts. Otherwise a sign certificate on
/// the left against a strict opposite sign on the right contradicts.
pub fn contradiction_check(
    lambda: &AlgebraicReal,
    mu: &AlgebraicReal,
    spectrum: &PrincipalMultiset,
    geom: &FrameGeometry,
) -> Result<Verdict, CartanError> {
    let rhs = cartan_rhs(lambda, mu, geom)?;
    let cert = lhs_sign(lambda, mu, spectrum)?;
    let rhs_sign = rhs.sign();
    let verdict = match cert.verdict {
        SignVerdict::EmptyZero => {
            if rhs_sign != 0 {
                Verdict::Contradiction(format!(
                    "two spectrum values force 0 on the left, right side = {}",
                    rhs
                ))
            } else {
                Verdict::Consistent
            }
        }
        SignVerdict::NonNeg if rhs_sign < 0 => Verdict::Contradiction(format!(
            "left side nonnegative, right side = {} < 0",
            rhs
        )),
        SignVerdict::NonPos if rhs_sign > 0 => Verdict::Contradiction(format!(
            "left side nonpositive, right side = {} > 0",
            rhs
        )),
        _ => Verdict::Consistent,
    };
    Ok(verdict)
}

/// Sum over a supplied principal basis (Lemma-style orthonormal frame data):
/// sum of ((lambda*mu_i - 1)/(lambda - mu_i)) * bracket(geom_i).
pub fn basis_sum(
    lambda: &AlgebraicReal,
    basis: &[(AlgebraicReal, FrameGeometry)],
) -> Result<AlgebraicReal, CartanError> {
    let mut acc = AlgebraicReal::zero();
    let one = AlgebraicReal::one();
    for (mu_i, geom) in basis {
        if mu_i.compare(lambda) == Ordering::Equal {
            return Err(CartanError::BasisContainsLambda);
        }
        let coeff = lambda
            .mul(mu_i)
            .sub(&one)
            .div(&lambda.sub(mu_i))
            .expect("mu_i != lambda");
        acc = acc.add(&coeff.mul(&geom.bracket()));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mult::Mult;
    use hopfq_exact::int;

    fn spectrum(vals: &[i64]) -> PrincipalMultiset {
        PrincipalMultiset::from_entries(
            vals.iter().map(|&v| (int(v), Mult::ONE)).collect(),
        )
    }

    #[test]
    fn bracket_examples() {
        // Y = JX with A-orthogonality: bracket 3
        let g = Scenario::YEqJxOrthA.geometry().unwrap();
        assert_eq!(g.bracket(), int(3));
        // AX = X: bracket 0
        let g = Scenario::AxEqX.geometry().unwrap();
        assert_eq!(g.bracket(), int(0));
        // all-zero geometry: bracket 1
        assert_eq!(FrameGeometry::zero().bracket(), int(1));
        // Y = AX orthogonal scenario: bracket -1
        let g = Scenario::YEqAxOrthA.geometry().unwrap();
        assert_eq!(g.bracket(), int(-1));
    }

    #[test]
    fn specialize_formula() {
        // bracket simplifies to 3 - 3 a_xx^2 - 3 a_xjx^2
        let half = AlgebraicReal::from_ratio(1, 2);
        let g = specialize_y_equals_jx(&half, &half).unwrap();
        assert_eq!(g.bracket(), AlgebraicReal::from_ratio(3, 2));
        assert!(specialize_y_equals_jx(&int(1), &int(1)).is_err());
    }

    #[test]
    fn rhs_examples() {
        let g = Scenario::YEqJxOrthA.geometry().unwrap();
        assert_eq!(cartan_rhs(&int(2), &int(1), &g).unwrap(), int(3));
        assert_eq!(cartan_rhs(&int(0), &int(1), &g).unwrap(), int(-3));
        assert!(matches!(
            cartan_rhs(&int(1), &int(1), &g),
            Err(CartanError::EqualCurvatures)
        ));
    }

    #[test]
    fn lhs_sign_examples() {
        let s = spectrum(&[0, 1, 2]);
        let c = lhs_sign(&int(0), &int(1), &s).unwrap();
        assert_eq!(c.verdict, SignVerdict::NonNeg);
        assert_eq!(c.witnesses.len(), 1);
        assert_eq!(c.witnesses[0].1, 1);

        let c = lhs_sign(&int(0), &int(2), &s).unwrap();
        assert_eq!(c.verdict, SignVerdict::NonPos);

        let s4 = spectrum(&[0, 1, 2, -5]);
        let c = lhs_sign(&int(0), &int(1), &s4).unwrap();
        assert_eq!(c.verdict, SignVerdict::NonNeg);

        assert!(matches!(
            lhs_sign(&int(0), &int(7), &s),
            Err(CartanError::NotInSpectrum(_))
        ));
    }

    #[test]
    fn contradiction_examples() {
        let g = Scenario::YEqJxOrthA.geometry().unwrap();
        // two-value spectrum, rhs 3 != 0
        let v = contradiction_check(&int(2), &int(1), &spectrum(&[2, 1]), &g).unwrap();
        assert!(matches!(v, Verdict::Contradiction(_)));
        // NonNeg vs rhs -3
        let v = contradiction_check(&int(0), &int(1), &spectrum(&[0, 1, 2]), &g).unwrap();
        assert!(matches!(v, Verdict::Contradiction(_)));
        // lambda=-1, mu=1 with a_xx = 1: rhs = -2 * (3-3) = 0, consistent
        let g = specialize_y_equals_jx(&int(1), &int(0)).unwrap();
        let v = contradiction_check(&int(-1), &int(1), &spectrum(&[-1, 1]), &g).unwrap();
        assert_eq!(v, Verdict::Consistent);
    }

    #[test]
    fn basis_sum_examples() {
        assert_eq!(basis_sum(&int(1), &[]).unwrap(), int(0));
        // micro-model: single basis vector with AX = X geometry, bracket 0
        let g = Scenario::AxEqX.geometry().unwrap();
        assert_eq!(basis_sum(&int(1), &[(int(-1), g)]).unwrap(), int(0));
        // lambda=2 against (1, orth-A Y=JX): (2*1-1)/(2-1) * 3 = 3
        let g = Scenario::YEqJxOrthA.geometry().unwrap();
        assert_eq!(basis_sum(&int(2), &[(int(1), g)]).unwrap(), int(3));
        // rejection
        let g = Scenario::YEqJxOrthA.geometry().unwrap();
        assert!(basis_sum(&int(1), &[(int(1), g)]).is_err());
    }

    #[test]
    fn swap_symmetry() {
        let g = specialize_y_equals_jx(
            &AlgebraicReal::from_ratio(1, 3),
            &AlgebraicReal::from_ratio(1, 2),
        )
        .unwrap();
        assert_eq!(g.swapped().bracket(), g.bracket());
        assert_eq!(
            cartan_rhs(&int(2), &int(3), &g).unwrap(),
            cartan_rhs(&int(3), &int(2), &g.swapped()).unwrap()
        );
    }
}
