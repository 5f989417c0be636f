//! Shared scalar/expression builders for the branch scripts.

use super::rules::sym_reeb_pair;
use crate::sym::Sym;
use hopfq_exact::{parse_scalar, AlgebraicReal, Int, IntPoly};

pub(crate) fn int(n: i64) -> AlgebraicReal {
    AlgebraicReal::from_int(n)
}

pub(crate) fn sqrt2() -> AlgebraicReal {
    parse_scalar("sqrt(2)").unwrap()
}

pub(crate) fn inv_sqrt2() -> AlgebraicReal {
    parse_scalar("1/sqrt(2)").unwrap()
}

pub(crate) fn var() -> Sym {
    Sym::var()
}

pub(crate) fn zero() -> Sym {
    Sym::from_int(0)
}

pub(crate) fn c(n: i64) -> Sym {
    Sym::from_int(n)
}

/// sqrt(2) as a constant symbolic expression.
pub(crate) fn s2() -> Sym {
    Sym::radical(IntPoly::constant(Int::from(2)))
}

/// sqrt(x^2 - 4), the self-paired-eigenvalue radical.
pub(crate) fn w4() -> Sym {
    Sym::radical(IntPoly::from_i64(&[-4, 0, 1]))
}

/// (x^2 - 2)/x: the pair of the Reeb value alpha (as a function of alpha).
pub(crate) fn pair_alpha() -> Sym {
    sym_reeb_pair(&var(), &var())
}

/// 2/x: the pair of the eigenvalue 0 (as a function of alpha).
pub(crate) fn pair_zero() -> Sym {
    sym_reeb_pair(&var(), &zero())
}

/// (x - sqrt(x^2-4))/2 and (x + sqrt(x^2-4))/2.
pub(crate) fn lambda_minus() -> Sym {
    var().sub(&w4()).unwrap().div(&c(2)).unwrap()
}

pub(crate) fn lambda_plus() -> Sym {
    var().add(&w4()).unwrap().div(&c(2)).unwrap()
}
