//! Verification reports shared by the harmonicity checkers.

use crate::extended::ExtendedValue;

/// One failed vertex: the harmonic identity did not hold there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Parts of the failing vertex (a composition, or a partition for the
    /// Kingman checker).
    pub vertex: Vec<u32>,
    /// The function value at the vertex.
    pub lhs: ExtendedValue,
    /// The multiplicity-weighted sum over the upper neighbors.
    pub rhs: ExtendedValue,
}

/// Outcome of sweeping the harmonic identity over all vertices up to a
/// level bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    /// Highest level whose vertices were checked.
    pub levels: u32,
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}
