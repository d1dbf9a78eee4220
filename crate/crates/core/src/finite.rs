//! Finite boundary patterns and their harmonic functions.
//!
//! A finite pattern is an ordered list of intervals of two kinds, `h` and
//! `v`, with positive rational lengths summing to 1 and no two `v`
//! intervals adjacent. Each pattern `u` determines a finite harmonic
//! function on the graph: split the composition into one consecutive block
//! per interval, score an `h` block that is empty or a single row of length
//! `q` as `w^q`, a `v` block that is a column of `t` ones as `w^t / t!`,
//! and sum over all splits. Only splits where every block has the right
//! shape contribute.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::composition::{enumerate_level, up_neighbors, Composition};
use crate::qsym::{deconcat_splits, psi_eval, Sign};
use crate::report::{CheckReport, Violation};
use crate::{rat_pow, Rat};

/// Highest level the harmonicity checkers accept.
pub const MAX_CHECK_LEVEL: u32 = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntervalKind {
    H,
    V,
}

impl IntervalKind {
    pub fn sign(self) -> Sign {
        match self {
            IntervalKind::H => Sign::Plus,
            IntervalKind::V => Sign::Minus,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub kind: IntervalKind,
    pub length: Rat,
}

impl Interval {
    pub fn new(kind: IntervalKind, length: Rat) -> Self {
        Interval { kind, length }
    }
}

/// Why a pattern failed validation. Block indices count intervals for
/// finite patterns and alternating blocks (composition, interval,
/// composition, ...) for semifinite ones.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum PatternError {
    #[error("interval lengths sum to {sum}, expected 1")]
    SumNotOne { sum: Rat },
    #[error("adjacent v-intervals starting at interval {index}")]
    AdjacentVV { index: usize },
    #[error("pattern has no intervals")]
    EmptyPattern,
    #[error("interval {index} has nonpositive length")]
    NonpositiveLength { index: usize },
    #[error("every separating composition is empty")]
    AllCompsEmpty,
    #[error("empty composition between adjacent v-intervals (block {index})")]
    EmptyCompBetweenVV { index: usize },
    #[error("composition at block {index} touches a v-interval with a part equal to 1")]
    OnesTouchingV { index: usize },
    #[error("pattern has no intervals between its compositions")]
    NoIntervals,
}

/// A validated finite boundary pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePattern {
    intervals: Vec<Interval>,
}

impl FinitePattern {
    /// Validates the interval list: nonempty, positive lengths summing to
    /// 1, and no two `v` intervals adjacent.
    pub fn new(intervals: Vec<Interval>) -> Result<Self, PatternError> {
        if intervals.is_empty() {
            return Err(PatternError::EmptyPattern);
        }
        for (index, iv) in intervals.iter().enumerate() {
            if iv.length <= Rat::zero() {
                return Err(PatternError::NonpositiveLength { index });
            }
        }
        let sum: Rat = intervals.iter().map(|iv| iv.length.clone()).sum();
        if !sum.is_one() {
            return Err(PatternError::SumNotOne { sum });
        }
        if let Some(index) = (1..intervals.len()).find(|&i| {
            intervals[i - 1].kind == IntervalKind::V && intervals[i].kind == IntervalKind::V
        }) {
            return Err(PatternError::AdjacentVV { index: index - 1 });
        }
        Ok(FinitePattern { intervals })
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    /// Number of intervals.
    pub fn m(&self) -> usize {
        self.intervals.len()
    }

    /// Value of the harmonic function at `lambda`, by the block dynamic
    /// program. Always a nonnegative rational; 1 at the empty composition.
    pub fn eval(&self, lambda: &Composition) -> Rat {
        let blocks: Vec<(IntervalKind, Rat)> = self
            .intervals
            .iter()
            .map(|iv| (iv.kind, iv.length.clone()))
            .collect();
        eval_blocks(lambda.parts(), &blocks)
    }

    /// Value of the harmonic function at `lambda` through the literal
    /// composition of coproduct, scaling and evaluation homomorphisms.
    /// Exponential in the number of intervals; kept as the reference route
    /// for [`FinitePattern::eval`].
    pub fn eval_via_coproduct(&self, lambda: &Composition) -> Rat {
        let mut total = Rat::zero();
        for split in deconcat_splits(lambda, self.m()) {
            let mut term = Rat::one();
            for (block, iv) in split.iter().zip(&self.intervals) {
                let psi = psi_eval(iv.kind.sign(), block);
                if psi.is_zero() {
                    term = Rat::zero();
                    break;
                }
                term *= rat_pow(&iv.length, block.weight()) * psi;
            }
            total += term;
        }
        total
    }

    /// Whether `lambda` splits into consecutive blocks matching the
    /// interval kinds, i.e. whether the harmonic function is positive there.
    pub fn supports(&self, lambda: &Composition) -> bool {
        let parts = lambda.parts();
        let mut reach = vec![false; parts.len() + 1];
        reach[0] = true;
        for iv in &self.intervals {
            reach = advance_support(parts, &reach, iv.kind);
        }
        reach[parts.len()]
    }

    /// Sweeps the harmonic identity over every vertex of weight at most
    /// `max_level`. Panics when `max_level` exceeds [`MAX_CHECK_LEVEL`].
    pub fn check_harmonicity(&self, max_level: u32) -> CheckReport {
        assert!(
            max_level <= MAX_CHECK_LEVEL,
            "harmonicity checks are capped at level {MAX_CHECK_LEVEL}"
        );
        let mut violations = Vec::new();
        for n in 0..=max_level {
            for lambda in enumerate_level(n).expect("level within bound") {
                let lhs = self.eval(&lambda);
                let rhs: Rat = up_neighbors(&lambda)
                    .iter()
                    .map(|(mu, k)| self.eval(mu) * Rat::from_integer(k.into()))
                    .sum();
                if lhs != rhs {
                    violations.push(Violation {
                        vertex: lambda.parts().to_vec(),
                        lhs: lhs.into(),
                        rhs: rhs.into(),
                    });
                }
            }
        }
        CheckReport {
            levels: max_level,
            violations,
        }
    }
}

/// Block dynamic program shared with the epsilon specialization: state is
/// the number of consumed parts, advanced one interval at a time.
pub(crate) fn eval_blocks(parts: &[u32], blocks: &[(IntervalKind, Rat)]) -> Rat {
    let len = parts.len();
    let mut dp = vec![Rat::zero(); len + 1];
    dp[0] = Rat::one();
    for (kind, length) in blocks {
        let mut next = vec![Rat::zero(); len + 1];
        for i in 0..=len {
            if dp[i].is_zero() {
                continue;
            }
            match kind {
                IntervalKind::H => {
                    next[i] += &dp[i];
                    if i < len {
                        next[i + 1] += &dp[i] * rat_pow(length, u64::from(parts[i]));
                    }
                }
                IntervalKind::V => {
                    let mut factor = Rat::one();
                    next[i] += &dp[i];
                    let mut t = 0u64;
                    while i + (t as usize) < len && parts[i + t as usize] == 1 {
                        t += 1;
                        factor *= length / Rat::from_integer(t.into());
                        next[i + t as usize] += &dp[i] * &factor;
                    }
                }
            }
        }
        dp = next;
    }
    dp[len].clone()
}

fn advance_support(parts: &[u32], reach: &[bool], kind: IntervalKind) -> Vec<bool> {
    let len = parts.len();
    let mut next = vec![false; len + 1];
    for i in 0..=len {
        if !reach[i] {
            continue;
        }
        next[i] = true;
        match kind {
            IntervalKind::H => {
                if i < len {
                    next[i + 1] = true;
                }
            }
            IntervalKind::V => {
                let mut j = i;
                while j < len && parts[j] == 1 {
                    j += 1;
                    next[j] = true;
                }
            }
        }
    }
    next
}
