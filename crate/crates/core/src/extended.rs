//! Nonnegative rationals extended by `+inf`.
//!
//! Arithmetic follows the usual conventions for this codomain:
//! `x + inf = inf`, `inf + inf = inf` and `0 * inf = 0`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use num_traits::Zero;

use crate::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtendedValue {
    Finite(Rat),
    Infinite,
}

impl ExtendedValue {
    pub fn zero() -> Self {
        ExtendedValue::Finite(Rat::zero())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtendedValue::Finite(_))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedValue::Infinite)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExtendedValue::Finite(v) if v.is_zero())
    }

    pub fn as_finite(&self) -> Option<&Rat> {
        match self {
            ExtendedValue::Finite(v) => Some(v),
            ExtendedValue::Infinite => None,
        }
    }

    /// Multiplication by a nonnegative rational scalar, with `0 * inf = 0`.
    pub fn scaled(&self, factor: &Rat) -> ExtendedValue {
        if factor.is_zero() {
            return ExtendedValue::zero();
        }
        match self {
            ExtendedValue::Finite(v) => ExtendedValue::Finite(v * factor),
            ExtendedValue::Infinite => ExtendedValue::Infinite,
        }
    }
}

impl From<Rat> for ExtendedValue {
    fn from(v: Rat) -> Self {
        ExtendedValue::Finite(v)
    }
}

impl Add for ExtendedValue {
    type Output = ExtendedValue;

    fn add(self, rhs: ExtendedValue) -> ExtendedValue {
        match (self, rhs) {
            (ExtendedValue::Finite(a), ExtendedValue::Finite(b)) => ExtendedValue::Finite(a + b),
            _ => ExtendedValue::Infinite,
        }
    }
}

impl AddAssign for ExtendedValue {
    fn add_assign(&mut self, rhs: ExtendedValue) {
        let lhs = std::mem::replace(self, ExtendedValue::Infinite);
        *self = lhs + rhs;
    }
}

impl Mul for ExtendedValue {
    type Output = ExtendedValue;

    fn mul(self, rhs: ExtendedValue) -> ExtendedValue {
        match (self, rhs) {
            (ExtendedValue::Finite(a), ExtendedValue::Finite(b)) => ExtendedValue::Finite(a * b),
            (ExtendedValue::Finite(a), ExtendedValue::Infinite)
            | (ExtendedValue::Infinite, ExtendedValue::Finite(a)) => {
                if a.is_zero() {
                    ExtendedValue::zero()
                } else {
                    ExtendedValue::Infinite
                }
            }
            (ExtendedValue::Infinite, ExtendedValue::Infinite) => ExtendedValue::Infinite,
        }
    }
}

impl std::iter::Sum for ExtendedValue {
    fn sum<I: Iterator<Item = ExtendedValue>>(iter: I) -> ExtendedValue {
        iter.fold(ExtendedValue::zero(), |acc, v| acc + v)
    }
}

impl fmt::Display for ExtendedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedValue::Finite(v) => write!(f, "{v}"),
            ExtendedValue::Infinite => write!(f, "inf"),
        }
    }
}
