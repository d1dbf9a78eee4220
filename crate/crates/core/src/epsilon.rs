//! Independent evaluation oracle through a formal shrinking interval.
//!
//! Replacing every part of every separating composition by an `h` interval
//! of symbolic length `eps` turns a semifinite pattern into a pattern whose
//! values are polynomials in `eps` with nonnegative rational coefficients.
//! Dividing by `eps` to the total weight of the separating compositions and
//! letting `eps -> 0+` recovers the harmonic function on the vertices that
//! dominate the base composition; combined with the membership and
//! domination case split it reproduces the full three-way evaluation, which
//! makes it an oracle independent of the outgrowth-coordinate route.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::composition::{graph_leq, Composition};
use crate::extended::ExtendedValue;
use crate::finite::IntervalKind;
use crate::semifinite::SemifinitePattern;
use crate::{rat_pow, Rat};

/// A polynomial in the formal symbol `eps` with nonnegative rational
/// coefficients; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EpsPolynomial {
    coeffs: BTreeMap<u64, Rat>,
}

impl EpsPolynomial {
    pub fn zero() -> Self {
        EpsPolynomial::default()
    }

    pub fn one() -> Self {
        EpsPolynomial::monomial(0, Rat::one())
    }

    pub fn monomial(degree: u64, coeff: Rat) -> Self {
        let mut out = EpsPolynomial::zero();
        out.add_term(degree, coeff);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient at `degree`, zero when absent.
    pub fn coefficient(&self, degree: u64) -> Rat {
        self.coeffs.get(&degree).cloned().unwrap_or_else(Rat::zero)
    }

    /// Terms in increasing degree order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &Rat)> {
        self.coeffs.iter().map(|(&d, c)| (d, c))
    }

    pub fn add_term(&mut self, degree: u64, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(degree) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// The polynomial times `coeff * eps^degree`.
    fn shifted_scaled(&self, degree: u64, coeff: &Rat) -> EpsPolynomial {
        if coeff.is_zero() {
            return EpsPolynomial::zero();
        }
        EpsPolynomial {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&d, c)| (d + degree, c * coeff))
                .collect(),
        }
    }

    fn accumulate(&mut self, other: &EpsPolynomial) {
        for (d, c) in other.terms() {
            self.add_term(d, c.clone());
        }
    }

    /// Substitutes a concrete rational for `eps`.
    pub fn eval_at(&self, eps: &Rat) -> Rat {
        self.coeffs
            .iter()
            .map(|(&d, c)| c * rat_pow(eps, d))
            .sum()
    }

    /// The one-sided limit of `self(eps) / eps^degree` as `eps -> 0+`.
    ///
    /// Because every coefficient is nonnegative, any nonzero coefficient
    /// below `degree` forces divergence; otherwise the limit is the
    /// coefficient at `degree`.
    pub fn limit_quotient(&self, degree: u64) -> ExtendedValue {
        if self.coeffs.keys().any(|&d| d < degree) {
            ExtendedValue::Infinite
        } else {
            ExtendedValue::Finite(self.coefficient(degree))
        }
    }
}

impl fmt::Display for EpsPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match d {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*eps")?,
                _ => write!(f, "{c}*eps^{d}")?,
            }
        }
        Ok(())
    }
}

/// One block of the substituted pattern: an ordinary interval, or a row
/// slot of symbolic length `eps`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EpsBlock {
    Interval(IntervalKind, Rat),
    Eps,
}

/// A semifinite pattern with every separating-composition part replaced, in
/// place, by one `eps` row slot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsPattern {
    blocks: Vec<EpsBlock>,
    comp_weight: u64,
}

impl EpsPattern {
    pub fn from_pattern(pattern: &SemifinitePattern) -> EpsPattern {
        let comps = pattern.comps();
        let mut blocks = Vec::new();
        let mut push_comp = |blocks: &mut Vec<EpsBlock>, comp: &Composition| {
            for _ in 0..comp.len() {
                blocks.push(EpsBlock::Eps);
            }
        };
        push_comp(&mut blocks, &comps[0]);
        for (iv, comp) in pattern.intervals().iter().zip(&comps[1..]) {
            blocks.push(EpsBlock::Interval(iv.kind, iv.length.clone()));
            push_comp(&mut blocks, comp);
        }
        EpsPattern {
            blocks,
            comp_weight: pattern.comp_weight(),
        }
    }

    pub fn blocks(&self) -> &[EpsBlock] {
        &self.blocks
    }

    /// Total weight of the replaced separating compositions: the
    /// normalizing power of `eps` in the limit.
    pub fn normalizing_degree(&self) -> u64 {
        self.comp_weight
    }

    /// The pattern value at `lambda` as a polynomial in `eps`: the block
    /// dynamic program with an `eps` slot scoring a row of length `q` as
    /// `eps^q`. Every monomial has degree at most the weight of `lambda`.
    pub fn evaluate(&self, lambda: &Composition) -> EpsPolynomial {
        let parts = lambda.parts();
        let len = parts.len();
        let mut dp: Vec<EpsPolynomial> = vec![EpsPolynomial::zero(); len + 1];
        dp[0] = EpsPolynomial::one();
        for block in &self.blocks {
            let mut next: Vec<EpsPolynomial> = vec![EpsPolynomial::zero(); len + 1];
            for i in 0..=len {
                if dp[i].is_zero() {
                    continue;
                }
                next[i].accumulate(&dp[i]);
                match block {
                    EpsBlock::Eps => {
                        if i < len {
                            let grown = dp[i].shifted_scaled(u64::from(parts[i]), &Rat::one());
                            next[i + 1].accumulate(&grown);
                        }
                    }
                    EpsBlock::Interval(IntervalKind::H, length) => {
                        if i < len {
                            let grown = dp[i]
                                .shifted_scaled(0, &rat_pow(length, u64::from(parts[i])));
                            next[i + 1].accumulate(&grown);
                        }
                    }
                    EpsBlock::Interval(IntervalKind::V, length) => {
                        let mut factor = Rat::one();
                        let mut t = 0u64;
                        while i + (t as usize) < len && parts[i + t as usize] == 1 {
                            t += 1;
                            factor = &factor * length / Rat::from_integer(t.into());
                            let grown = dp[i].shifted_scaled(0, &factor);
                            next[i + t as usize].accumulate(&grown);
                        }
                    }
                }
            }
            dp = next;
        }
        dp[len].clone()
    }

    /// Interval view with a concrete rational substituted for `eps`; the
    /// result is generally not a unit-length pattern, only a block list.
    pub(crate) fn substitute(&self, eps: &Rat) -> Vec<(IntervalKind, Rat)> {
        self.blocks
            .iter()
            .map(|b| match b {
                EpsBlock::Eps => (IntervalKind::H, eps.clone()),
                EpsBlock::Interval(kind, length) => (*kind, length.clone()),
            })
            .collect()
    }
}

/// The limit of the normalized pattern value as `eps -> 0+`, with no case
/// split. Meaningful on its own only for vertices dominating the base
/// composition; [`oracle_eval`] supplies the case split.
pub fn eps_limit(lambda: &Composition, pattern: &SemifinitePattern) -> ExtendedValue {
    let eps = EpsPattern::from_pattern(pattern);
    eps.evaluate(lambda).limit_quotient(eps.normalizing_degree())
}

/// Full oracle evaluation: 0 outside the pattern set, the `eps` limit on
/// vertices dominating the base composition, `+inf` otherwise. Agrees with
/// [`SemifinitePattern::eval`] everywhere.
pub fn oracle_eval(lambda: &Composition, pattern: &SemifinitePattern) -> ExtendedValue {
    if !pattern.contains(lambda) {
        ExtendedValue::zero()
    } else if graph_leq(&pattern.base_composition(), lambda) {
        eps_limit(lambda, pattern)
    } else {
        ExtendedValue::Infinite
    }
}

/// Reference evaluator for the substituted block list, used to cross-check
/// [`EpsPattern::evaluate`] against a concrete specialization.
pub fn eval_blocks_at(
    lambda: &Composition,
    blocks: &[(IntervalKind, Rat)],
) -> Rat {
    crate::finite::eval_blocks(lambda.parts(), blocks)
}
