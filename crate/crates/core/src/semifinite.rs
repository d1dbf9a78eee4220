//! Semifinite boundary patterns and their harmonic functions.
//!
//! A semifinite pattern alternates separating compositions with intervals:
//! `comp_0, int_1, comp_1, ..., int_m, comp_m`. The interval lengths sum
//! to 1, at least one separating composition is nonempty, the composition
//! between two adjacent `v` intervals is nonempty, and a composition next
//! to a `v` interval must face it with a part of at least 2.
//!
//! The pattern determines a harmonic function valued in the nonnegative
//! rationals extended by `+inf`:
//!
//! * 0 outside the set of compositions that fit inside the pattern
//!   (each separating composition may shrink in the graph order, `h`
//!   intervals carry a row, `v` intervals a column);
//! * a product of interval-length powers on the cone of compositions that
//!   fit the pattern exactly and dominate its base composition;
//! * `+inf` on the rest of the fitting set.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::composition::{enumerate_level, graph_leq, up_neighbors, Composition};
use crate::extended::ExtendedValue;
use crate::finite::{FinitePattern, Interval, IntervalKind, PatternError, MAX_CHECK_LEVEL};
use crate::qsym::QSymElement;
use crate::report::{CheckReport, Violation};
use crate::{factorial, rat_pow, Rat};

/// One block of the alternating pattern layout, used when building a
/// pattern from a serialized block list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Block {
    Comp(Composition),
    Interval(Interval),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BlockLayoutError {
    #[error("block {index} breaks the composition/interval alternation")]
    NotAlternating { index: usize },
    #[error("the block list must start and end with a composition block")]
    MissingBoundaryComp,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("coefficient of M{0} is negative: the element is outside the cone")]
    NegativeCoefficient(Composition),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MultiplicativityError {
    #[error("{0} lies in the pattern set but below the base composition")]
    PreconditionViolated(Composition),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WitnessError {
    #[error("the function is finite at {0}; no witness sequence exists")]
    NotInfiniteAt(Composition),
}

/// Outgrowth coordinates of a cone composition: how far each interval's
/// row or column extends beyond the base composition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PascalCoords {
    /// Row outgrowths, one entry per `h` interval in pattern order.
    pub h_outgrowths: Vec<u32>,
    /// Column lengths, one entry per `v` interval in pattern order.
    pub v_outgrowths: Vec<u32>,
}

/// A validated semifinite boundary pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemifinitePattern {
    comps: Vec<Composition>,
    intervals: Vec<Interval>,
}

impl SemifinitePattern {
    /// Validates the alternating layout `comps[0], intervals[0], comps[1],
    /// ..., intervals[m-1], comps[m]`.
    pub fn new(
        comps: Vec<Composition>,
        intervals: Vec<Interval>,
    ) -> Result<Self, PatternError> {
        if intervals.is_empty() {
            return Err(PatternError::NoIntervals);
        }
        assert_eq!(
            comps.len(),
            intervals.len() + 1,
            "one separating composition around every interval"
        );
        for (index, iv) in intervals.iter().enumerate() {
            if iv.length <= Rat::zero() {
                // Block index in the alternating layout.
                return Err(PatternError::NonpositiveLength { index: 2 * index + 1 });
            }
        }
        let sum: Rat = intervals.iter().map(|iv| iv.length.clone()).sum();
        if !sum.is_one() {
            return Err(PatternError::SumNotOne { sum });
        }
        if comps.iter().all(|c| c.is_empty()) {
            return Err(PatternError::AllCompsEmpty);
        }
        for i in 1..intervals.len() {
            if intervals[i - 1].kind == IntervalKind::V
                && intervals[i].kind == IntervalKind::V
                && comps[i].is_empty()
            {
                return Err(PatternError::EmptyCompBetweenVV { index: 2 * i });
            }
        }
        for (i, comp) in comps.iter().enumerate() {
            if comp.is_empty() {
                continue;
            }
            let parts = comp.parts();
            if i > 0 && intervals[i - 1].kind == IntervalKind::V && parts[0] < 2 {
                return Err(PatternError::OnesTouchingV { index: 2 * i });
            }
            if i < intervals.len()
                && intervals[i].kind == IntervalKind::V
                && parts[parts.len() - 1] < 2
            {
                return Err(PatternError::OnesTouchingV { index: 2 * i });
            }
        }
        Ok(SemifinitePattern { comps, intervals })
    }

    /// Builds a pattern from an alternating block list, as stored in
    /// pattern files.
    pub fn from_blocks(blocks: Vec<Block>) -> Result<Self, SemifinitePatternError> {
        if blocks.is_empty() || blocks.len() % 2 == 0 {
            return Err(BlockLayoutError::MissingBoundaryComp.into());
        }
        let mut comps = Vec::with_capacity(blocks.len() / 2 + 1);
        let mut intervals = Vec::with_capacity(blocks.len() / 2);
        for (index, block) in blocks.into_iter().enumerate() {
            match (index % 2 == 0, block) {
                (true, Block::Comp(c)) => comps.push(c),
                (false, Block::Interval(iv)) => intervals.push(iv),
                _ => return Err(BlockLayoutError::NotAlternating { index }.into()),
            }
        }
        Ok(SemifinitePattern::new(comps, intervals)?)
    }

    /// The separating compositions, one more than there are intervals.
    pub fn comps(&self) -> &[Composition] {
        &self.comps
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    /// Number of intervals.
    pub fn m(&self) -> usize {
        self.intervals.len()
    }

    /// Total weight of the separating compositions.
    pub fn comp_weight(&self) -> u64 {
        self.comps.iter().map(Composition::weight).sum()
    }

    /// Alternating block view, inverse of [`SemifinitePattern::from_blocks`].
    pub fn blocks(&self) -> Vec<Block> {
        let mut out = Vec::with_capacity(2 * self.m() + 1);
        out.push(Block::Comp(self.comps[0].clone()));
        for (iv, comp) in self.intervals.iter().zip(&self.comps[1..]) {
            out.push(Block::Interval(iv.clone()));
            out.push(Block::Comp(comp.clone()));
        }
        out
    }

    /// Whether the `h` interval at `index` (in interval order) sits next to
    /// a `v` interval with only an empty composition in between.
    fn h_neighbors_v(&self, index: usize) -> bool {
        let left = index > 0
            && self.intervals[index - 1].kind == IntervalKind::V
            && self.comps[index].is_empty();
        let right = index + 1 < self.intervals.len()
            && self.intervals[index + 1].kind == IntervalKind::V
            && self.comps[index + 1].is_empty();
        left || right
    }

    /// Minimal row length of each `h` interval inside the cone: 2 when the
    /// interval neighbors a `v` interval, 1 otherwise.
    fn h_baselines(&self) -> Vec<u32> {
        (0..self.intervals.len())
            .filter(|&i| self.intervals[i].kind == IntervalKind::H)
            .map(|i| if self.h_neighbors_v(i) { 2 } else { 1 })
            .collect()
    }

    /// The base composition: separating compositions unchanged, a 1 (or a 2
    /// when it neighbors a `v` interval) for each `h` interval, nothing for
    /// `v` intervals, read in block order.
    pub fn base_composition(&self) -> Composition {
        let mut parts: Vec<u32> = self.comps[0].parts().to_vec();
        for (i, iv) in self.intervals.iter().enumerate() {
            if iv.kind == IntervalKind::H {
                parts.push(if self.h_neighbors_v(i) { 2 } else { 1 });
            }
            parts.extend_from_slice(self.comps[i + 1].parts());
        }
        Composition::new(parts).expect("parts are positive")
    }

    /// Whether `lambda` fits inside the pattern: it splits into consecutive
    /// segments where each separating composition bounds its segment in the
    /// graph order, `h` intervals take at most one part, and `v` intervals
    /// take a run of ones.
    pub fn contains(&self, lambda: &Composition) -> bool {
        let parts = lambda.parts();
        let mut reach = vec![false; parts.len() + 1];
        reach[0] = true;
        reach = advance_comp(parts, &reach, &self.comps[0]);
        for (i, iv) in self.intervals.iter().enumerate() {
            reach = advance_interval(parts, &reach, iv.kind);
            reach = advance_comp(parts, &reach, &self.comps[i + 1]);
        }
        reach[parts.len()]
    }

    /// Outgrowth coordinates of `lambda` when it admits an exact block
    /// decomposition: every separating composition matched verbatim, every
    /// `h` interval exactly one part at least its baseline, every `v`
    /// interval a run of zero or more ones. `None` otherwise.
    pub fn pascal_coords(&self, lambda: &Composition) -> Option<PascalCoords> {
        self.exact_decompositions(lambda, true).into_iter().next()
    }

    /// Number of distinct exact block decompositions of `lambda`. The cone
    /// parametrization relies on this being exactly 1 whenever coordinates
    /// exist, which the test suite asserts.
    pub fn exact_decomposition_count(&self, lambda: &Composition) -> usize {
        self.exact_decompositions(lambda, false).len()
    }

    fn exact_decompositions(&self, lambda: &Composition, first_only: bool) -> Vec<PascalCoords> {
        struct Search<'a> {
            pattern: &'a SemifinitePattern,
            parts: &'a [u32],
            baselines: Vec<u32>,
            first_only: bool,
            found: Vec<PascalCoords>,
        }
        impl Search<'_> {
            fn matches_comp(&self, pos: usize, comp: &Composition) -> bool {
                let want = comp.parts();
                self.parts.len() - pos >= want.len()
                    && &self.parts[pos..pos + want.len()] == want
            }
            fn step(
                &mut self,
                pos: usize,
                interval: usize,
                h_seen: usize,
                h: &mut Vec<u32>,
                v: &mut Vec<u32>,
            ) {
                if self.first_only && !self.found.is_empty() {
                    return;
                }
                if interval == self.pattern.intervals.len() {
                    if pos == self.parts.len() {
                        self.found.push(PascalCoords {
                            h_outgrowths: h.clone(),
                            v_outgrowths: v.clone(),
                        });
                    }
                    return;
                }
                match self.pattern.intervals[interval].kind {
                    IntervalKind::H => {
                        let baseline = self.baselines[h_seen];
                        if pos < self.parts.len() && self.parts[pos] >= baseline {
                            let row = self.parts[pos];
                            if self.matches_comp(pos + 1, &self.pattern.comps[interval + 1]) {
                                let next = pos + 1 + self.pattern.comps[interval + 1].len();
                                h.push(row - baseline);
                                self.step(next, interval + 1, h_seen + 1, h, v);
                                h.pop();
                            }
                        }
                    }
                    IntervalKind::V => {
                        let mut t = 0usize;
                        loop {
                            if self.matches_comp(pos + t, &self.pattern.comps[interval + 1]) {
                                let next = pos + t + self.pattern.comps[interval + 1].len();
                                v.push(t as u32);
                                self.step(next, interval + 1, h_seen, h, v);
                                v.pop();
                            }
                            if pos + t < self.parts.len() && self.parts[pos + t] == 1 {
                                t += 1;
                            } else {
                                break;
                            }
                        }
                    }
                }
            }
        }
        let parts = lambda.parts();
        if !self.matches_comp_at_start(parts) {
            return Vec::new();
        }
        let mut search = Search {
            pattern: self,
            parts,
            baselines: self.h_baselines(),
            first_only,
            found: Vec::new(),
        };
        let mut h = Vec::new();
        let mut v = Vec::new();
        search.step(self.comps[0].len(), 0, 0, &mut h, &mut v);
        search.found
    }

    fn matches_comp_at_start(&self, parts: &[u32]) -> bool {
        let want = self.comps[0].parts();
        parts.len() >= want.len() && &parts[..want.len()] == want
    }

    /// Value of the harmonic function at `lambda`: 0 outside the pattern
    /// set, the interval-length product on the cone, `+inf` in between.
    pub fn eval(&self, lambda: &Composition) -> ExtendedValue {
        if !self.contains(lambda) {
            return ExtendedValue::zero();
        }
        match self.pascal_coords(lambda) {
            Some(coords) => ExtendedValue::Finite(self.cone_value(&coords)),
            None => ExtendedValue::Infinite,
        }
    }

    fn cone_value(&self, coords: &PascalCoords) -> Rat {
        let mut value = Rat::one();
        let mut h_iter = coords.h_outgrowths.iter();
        let mut v_iter = coords.v_outgrowths.iter();
        for iv in &self.intervals {
            match iv.kind {
                IntervalKind::H => {
                    let &growth = h_iter.next().expect("one entry per h interval");
                    value *= rat_pow(&iv.length, u64::from(growth));
                }
                IntervalKind::V => {
                    let &height = v_iter.next().expect("one entry per v interval");
                    value *= rat_pow(&iv.length, u64::from(height))
                        / Rat::from_integer(factorial(u64::from(height)));
                }
            }
        }
        value
    }

    /// The finite pattern left after discarding every separating
    /// composition; adjacent `v` intervals merge into one, `h` intervals
    /// never merge.
    pub fn reduce(&self) -> FinitePattern {
        let mut intervals: Vec<Interval> = Vec::with_capacity(self.m());
        for iv in &self.intervals {
            match intervals.last_mut() {
                Some(last)
                    if last.kind == IntervalKind::V && iv.kind == IntervalKind::V =>
                {
                    last.length += &iv.length;
                }
                _ => intervals.push(iv.clone()),
            }
        }
        FinitePattern::new(intervals).expect("reduction preserves validity")
    }

    /// Extends the harmonic function additively to a cone element: the sum
    /// of `coeff * eval` over the terms, in extended arithmetic. Fails when
    /// some coefficient is negative.
    pub fn eval_qsym(&self, x: &QSymElement) -> Result<ExtendedValue, EvalError> {
        use num_traits::Signed;
        if let Some((c, _)) = x.terms().find(|(_, v)| v.is_negative()) {
            return Err(EvalError::NegativeCoefficient(c.clone()));
        }
        Ok(x.terms()
            .map(|(c, coeff)| self.eval(c).scaled(coeff))
            .sum())
    }

    /// Checks the factorization of `eval` over a product: the value of
    /// `M_lambda * M_mu` must equal the reduced finite pattern's value at
    /// `mu` times the value at `lambda`. Only valid when `lambda` dominates
    /// the base composition or lies outside the pattern set.
    pub fn check_multiplicativity(
        &self,
        lambda: &Composition,
        mu: &Composition,
    ) -> Result<bool, MultiplicativityError> {
        let admissible =
            graph_leq(&self.base_composition(), lambda) || !self.contains(lambda);
        if !admissible {
            return Err(MultiplicativityError::PreconditionViolated(lambda.clone()));
        }
        let product = crate::qsym::quasi_shuffle(lambda, mu);
        let lhs = self.eval_qsym(&product).expect("positive coefficients");
        let multiplier = self.reduce().eval(mu);
        let rhs = self.eval(lambda).scaled(&multiplier);
        Ok(lhs == rhs)
    }

    /// Sweeps the harmonic identity in extended arithmetic over every
    /// vertex of weight at most `max_level`. Panics when `max_level`
    /// exceeds [`MAX_CHECK_LEVEL`].
    pub fn check_harmonicity(&self, max_level: u32) -> CheckReport {
        assert!(
            max_level <= MAX_CHECK_LEVEL,
            "harmonicity checks are capped at level {MAX_CHECK_LEVEL}"
        );
        let mut violations = Vec::new();
        for n in 0..=max_level {
            for lambda in enumerate_level(n).expect("level within bound") {
                let lhs = self.eval(&lambda);
                let rhs: ExtendedValue = up_neighbors(&lambda)
                    .iter()
                    .map(|(mu, k)| self.eval(mu).scaled(&Rat::from_integer(k.into())))
                    .sum();
                if lhs != rhs {
                    violations.push(Violation {
                        vertex: lambda.parts().to_vec(),
                        lhs,
                        rhs,
                    });
                }
            }
        }
        CheckReport {
            levels: max_level,
            violations,
        }
    }

    /// Witness sums for semifiniteness at a vertex where the function is
    /// infinite: `S_n` is the sum of `eval(mu)` over the finite-valued
    /// vertices `mu` exactly `n` levels above `lambda`, weighted by the
    /// multiplicity-weighted count of length-`n` paths from `lambda` to
    /// `mu`. Each sum is finite by construction, and harmonicity makes the
    /// sequence nondecreasing.
    pub fn witness_sums(
        &self,
        lambda: &Composition,
        steps: u32,
    ) -> Result<Vec<Rat>, WitnessError> {
        assert!(steps <= MAX_CHECK_LEVEL, "witness sweeps are capped");
        if !self.eval(lambda).is_infinite() {
            return Err(WitnessError::NotInfiniteAt(lambda.clone()));
        }
        use num_bigint::BigInt;
        use std::collections::BTreeMap;
        let mut counts: BTreeMap<Composition, BigInt> = BTreeMap::new();
        counts.insert(lambda.clone(), BigInt::from(1u32));
        let mut sums = Vec::with_capacity(steps as usize);
        for _ in 0..steps {
            let mut next: BTreeMap<Composition, BigInt> = BTreeMap::new();
            for (vertex, count) in &counts {
                for (mu, k) in up_neighbors(vertex).iter() {
                    *next.entry(mu.clone()).or_insert_with(|| BigInt::from(0u32)) +=
                        count * BigInt::from(k);
                }
            }
            counts = next;
            let mut sum = Rat::zero();
            for (vertex, count) in &counts {
                if let ExtendedValue::Finite(value) = self.eval(vertex) {
                    sum += Rat::from_integer(count.clone()) * value;
                }
            }
            sums.push(sum);
        }
        Ok(sums)
    }
}

/// Composite error for building a pattern from serialized blocks.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SemifinitePatternError {
    #[error(transparent)]
    Layout(#[from] BlockLayoutError),
    #[error(transparent)]
    Invalid(#[from] PatternError),
}

fn advance_interval(parts: &[u32], reach: &[bool], kind: IntervalKind) -> Vec<bool> {
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

/// A separating composition absorbs any consecutive segment that it
/// dominates in the graph order, including the empty one.
fn advance_comp(parts: &[u32], reach: &[bool], comp: &Composition) -> Vec<bool> {
    let len = parts.len();
    let mut next = vec![false; len + 1];
    for i in 0..=len {
        if !reach[i] {
            continue;
        }
        for j in i..=len {
            let segment = Composition::from_parts_unchecked(parts[i..j].to_vec());
            if graph_leq(&segment, comp) {
                next[j] = true;
            }
        }
    }
    next
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{comp, rat};
    use IntervalKind::{H, V};

    fn iv(kind: IntervalKind, n: i64, d: i64) -> Interval {
        Interval::new(kind, rat(n, d))
    }

    fn pattern(comps: Vec<Composition>, intervals: Vec<Interval>) -> SemifinitePattern {
        SemifinitePattern::new(comps, intervals).unwrap()
    }

    /// `[(3,1) | h(1) | empty]`, the single-row pattern with a leading
    /// composition.
    fn row_after_comp() -> SemifinitePattern {
        pattern(vec![comp![3, 1], comp![]], vec![iv(H, 1, 1)])
    }

    /// `[(2) | v(1) | empty]`, the single-column pattern with a leading
    /// composition.
    fn column_after_comp() -> SemifinitePattern {
        pattern(vec![comp![2], comp![]], vec![iv(V, 1, 1)])
    }

    /// `[empty | h(a) | empty | v(1-a) | (2)]`, a row neighboring a column
    /// with a trailing composition.
    fn row_touching_column(a: (i64, i64)) -> SemifinitePattern {
        pattern(
            vec![comp![], comp![], comp![2]],
            vec![iv(H, a.0, a.1), iv(V, a.1 - a.0, a.1)],
        )
    }

    #[test]
    fn validation_examples() {
        assert!(SemifinitePattern::new(vec![comp![2], comp![]], vec![iv(V, 1, 1)]).is_ok());
        assert_eq!(
            SemifinitePattern::new(vec![comp![2, 1], comp![]], vec![iv(V, 1, 1)]).unwrap_err(),
            PatternError::OnesTouchingV { index: 0 }
        );
        assert_eq!(
            SemifinitePattern::new(
                vec![comp![], comp![], comp![]],
                vec![iv(V, 1, 2), iv(V, 1, 2)]
            )
            .unwrap_err(),
            PatternError::EmptyCompBetweenVV { index: 2 }
        );
        assert_eq!(
            SemifinitePattern::new(
                vec![comp![], comp![]],
                vec![iv(H, 1, 1)]
            )
            .unwrap_err(),
            PatternError::AllCompsEmpty
        );
        assert_eq!(
            SemifinitePattern::new(
                vec![comp![2], comp![], comp![]],
                vec![iv(H, 1, 3), iv(H, 1, 3)]
            )
            .unwrap_err(),
            PatternError::SumNotOne { sum: rat(2, 3) }
        );
        // A 1 may touch an h interval.
        assert!(SemifinitePattern::new(
            vec![comp![1, 2], comp![]],
            vec![iv(H, 1, 1)]
        )
        .is_ok());
        // The rule applies on both sides of a composition.
        assert_eq!(
            SemifinitePattern::new(
                vec![comp![], comp![1, 2], comp![]],
                vec![iv(V, 1, 2), iv(H, 1, 2)]
            )
            .unwrap_err(),
            PatternError::OnesTouchingV { index: 2 }
        );
    }

    #[test]
    fn base_composition_examples() {
        assert_eq!(row_after_comp().base_composition(), comp![3, 1, 1]);
        assert_eq!(row_touching_column((1, 3)).base_composition(), comp![2, 2]);
        assert_eq!(column_after_comp().base_composition(), comp![2]);
    }

    #[test]
    fn containment_examples() {
        let appendix = row_touching_column((1, 3));
        assert!(appendix.contains(&comp![1, 2]));
        assert!(!row_after_comp().contains(&comp![4, 2]));
        assert!(row_after_comp().contains(&comp![]));
        assert!(row_after_comp().contains(&comp![3, 1, 5]));
        assert!(row_after_comp().contains(&comp![2, 1]));
        assert!(!row_after_comp().contains(&comp![3, 1, 1, 1]));
    }

    #[test]
    fn pascal_coords_examples() {
        let p = row_after_comp();
        assert_eq!(
            p.pascal_coords(&comp![3, 1, 5]),
            Some(PascalCoords {
                h_outgrowths: vec![4],
                v_outgrowths: vec![],
            })
        );
        assert_eq!(
            p.pascal_coords(&comp![3, 1, 1]),
            Some(PascalCoords {
                h_outgrowths: vec![0],
                v_outgrowths: vec![],
            })
        );
        assert_eq!(p.pascal_coords(&comp![3, 1]), None);
        let q = column_after_comp();
        assert_eq!(
            q.pascal_coords(&comp![2, 1, 1, 1]),
            Some(PascalCoords {
                h_outgrowths: vec![],
                v_outgrowths: vec![3],
            })
        );
        assert_eq!(q.exact_decomposition_count(&comp![2, 1, 1, 1]), 1);
    }

    #[test]
    fn eval_examples() {
        let p = row_after_comp();
        for k in 1..=4u32 {
            assert_eq!(
                p.eval(&Composition::new(vec![3, 1, k]).unwrap()),
                ExtendedValue::Finite(rat(1, 1)),
            );
        }
        assert_eq!(
            row_touching_column((1, 3)).eval(&comp![1, 2]),
            ExtendedValue::Infinite
        );
        assert_eq!(
            column_after_comp().eval(&comp![2, 1, 1]),
            ExtendedValue::Finite(rat(1, 2))
        );
        assert_eq!(p.eval(&comp![4, 2]), ExtendedValue::zero());
        assert_eq!(p.eval(&comp![]), ExtendedValue::Infinite);
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(
            column_after_comp().reduce(),
            FinitePattern::new(vec![iv(V, 1, 1)]).unwrap()
        );
        let vv = pattern(
            vec![comp![], comp![3, 1, 5], comp![]],
            vec![iv(V, 1, 3), iv(V, 2, 3)],
        );
        assert_eq!(vv.reduce(), FinitePattern::new(vec![iv(V, 1, 1)]).unwrap());
        let hh = pattern(
            vec![comp![], comp![2], comp![]],
            vec![iv(H, 1, 2), iv(H, 1, 2)],
        );
        assert_eq!(
            hh.reduce(),
            FinitePattern::new(vec![iv(H, 1, 2), iv(H, 1, 2)]).unwrap()
        );
    }

    #[test]
    fn eval_qsym_examples() {
        let p = column_after_comp();
        let product = crate::qsym::quasi_shuffle(&comp![2], &comp![1]);
        assert_eq!(
            p.eval_qsym(&product).unwrap(),
            ExtendedValue::Finite(rat(1, 1))
        );
        assert_eq!(
            p.eval_qsym(&QSymElement::zero()).unwrap(),
            ExtendedValue::zero()
        );
        assert_eq!(
            p.eval_qsym(&QSymElement::monomial(comp![1, 1])).unwrap(),
            ExtendedValue::Infinite
        );
        let negative = QSymElement::from_terms([(comp![1], rat(-1, 1))]);
        assert_eq!(
            p.eval_qsym(&negative).unwrap_err(),
            EvalError::NegativeCoefficient(comp![1])
        );
    }

    #[test]
    fn multiplicativity_examples() {
        let p = column_after_comp();
        assert_eq!(p.check_multiplicativity(&comp![2], &comp![1]), Ok(true));
        let q = row_after_comp();
        assert_eq!(
            q.check_multiplicativity(&comp![3, 1, 1], &comp![2]),
            Ok(true)
        );
        assert_eq!(q.check_multiplicativity(&comp![3, 1, 1], &comp![]), Ok(true));
        // (1) fits the pattern but sits below the base composition.
        assert_eq!(
            p.check_multiplicativity(&comp![1], &comp![1]),
            Err(MultiplicativityError::PreconditionViolated(comp![1]))
        );
    }

    #[test]
    fn harmonicity_examples() {
        assert!(column_after_comp().check_harmonicity(8).ok());
        assert!(row_after_comp().check_harmonicity(8).ok());
        let mixed = pattern(
            vec![comp![], comp![], comp![2]],
            vec![iv(H, 1, 3), iv(V, 2, 3)],
        );
        assert!(mixed.check_harmonicity(7).ok());
    }

    #[test]
    fn witness_examples() {
        let p = column_after_comp();
        let sums = p.witness_sums(&comp![1], 3).unwrap();
        assert_eq!(sums, vec![rat(1, 1), rat(3, 1), rat(6, 1)]);
        let sums = p.witness_sums(&comp![1, 1], 8).unwrap();
        assert!(sums[0] >= rat(1, 1));
        for i in 1..sums.len() {
            assert!(sums[i] >= sums[i - 1]);
        }
        assert_eq!(
            p.witness_sums(&comp![2], 3).unwrap_err(),
            WitnessError::NotInfiniteAt(comp![2])
        );
    }

    #[test]
    fn block_layout_round_trip() {
        let p = row_touching_column((1, 3));
        let rebuilt = SemifinitePattern::from_blocks(p.blocks()).unwrap();
        assert_eq!(rebuilt, p);
        assert_eq!(
            SemifinitePattern::from_blocks(vec![Block::Comp(comp![2])]).unwrap_err(),
            SemifinitePatternError::Layout(BlockLayoutError::MissingBoundaryComp)
        );
        assert_eq!(
            SemifinitePattern::from_blocks(vec![
                Block::Comp(comp![2]),
                Block::Comp(comp![2]),
                Block::Comp(comp![2]),
            ])
            .unwrap_err(),
            SemifinitePatternError::Layout(BlockLayoutError::NotAlternating { index: 1 })
        );
    }
}
