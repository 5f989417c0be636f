//! Multiplicities affine in the dimension parameter m.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// A multiplicity of the form a*m + b, valid for all m >= 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Mult {
    pub a: i64,
    pub b: i64,
}

impl Mult {
    pub const fn new(a: i64, b: i64) -> Self {
        Mult { a, b }
    }

    pub const fn constant(b: i64) -> Self {
        Mult { a: 0, b }
    }

    pub const ZERO: Mult = Mult { a: 0, b: 0 };
    pub const ONE: Mult = Mult { a: 0, b: 1 };

    pub fn eval(&self, m: u32) -> i64 {
        self.a * m as i64 + self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// a*m + b >= k for every m >= 3.
    pub fn ge_for_all_m(&self, k: i64) -> bool {
        self.a >= 0 && self.eval(3) >= k
    }

    pub fn is_positive_for_all_m(&self) -> bool {
        self.ge_for_all_m(1)
    }
}

impl Add for Mult {
    type Output = Mult;
    fn add(self, rhs: Mult) -> Mult {
        Mult::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for Mult {
    type Output = Mult;
    fn sub(self, rhs: Mult) -> Mult {
        Mult::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for Mult {
    type Output = Mult;
    fn neg(self) -> Mult {
        Mult::new(-self.a, -self.b)
    }
}

impl fmt::Display for Mult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (0, b) => write!(f, "{}", b),
            (a, 0) => {
                if a == 1 {
                    write!(f, "m")
                } else {
                    write!(f, "{}m", a)
                }
            }
            (a, b) => {
                if a == 1 {
                    write!(f, "m")?;
                } else {
                    write!(f, "{}m", a)?;
                }
                if b > 0 {
                    write!(f, "+{}", b)
                } else {
                    write!(f, "{}", b)
                }
            }
        }
    }
}

/// Dimension parameter: a concrete m >= 3 or the symbolic family level.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MDim {
    Symbolic,
    Concrete(u32),
}

impl MDim {
    pub fn concrete(&self) -> Option<u32> {
        match self {
            MDim::Concrete(m) => Some(*m),
            MDim::Symbolic => None,
        }
    }
}

impl fmt::Display for MDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MDim::Symbolic => write!(f, "m"),
            MDim::Concrete(m) => write!(f, "{}", m),
        }
    }
}
