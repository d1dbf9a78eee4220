//! The Kingman graph and the projection of semifinite harmonic functions.
//!
//! Vertices are partitions; edge multiplicities come from Pieri's rule for
//! the monomial basis of the symmetric functions. Rather than hard-coding
//! that rule, edges are derived by expanding `m_(1) * m_pi` into monomial
//! quasisymmetric functions and collecting terms by sorted parts, which
//! removes any transcription risk; the direct combinatorial rule exists as
//! a cross-check in the test suite.
//!
//! Restricting a semifinite harmonic function along the inclusion of
//! symmetric into quasisymmetric functions gives a harmonic function on
//! this graph. Whether the result is again semifinite is decided by a
//! dichotomy on the pattern: it fails exactly when the pattern has a `v`
//! interval and some separating composition contains a part equal to 1, in
//! which case the projected values are all 0 or `+inf`.

use num_traits::Zero;

use crate::composition::{distinct_rearrangements, Composition, EdgeList, Partition};
use crate::extended::ExtendedValue;
use crate::finite::IntervalKind;
use crate::qsym::{quasi_shuffle, QSymElement};
use crate::report::Violation;
use crate::semifinite::SemifinitePattern;
use crate::Rat;

/// Highest level the Kingman harmonicity checker accepts.
pub const MAX_KINGMAN_CHECK_LEVEL: u32 = 9;

/// The monomial symmetric function `m_pi` as a quasisymmetric element: the
/// sum of the distinct rearrangements of `pi`, all with coefficient 1.
pub fn monomial_expansion(pi: &Partition) -> QSymElement {
    QSymElement::from_terms(
        distinct_rearrangements(pi)
            .into_iter()
            .map(|c| (c, Rat::from_integer(1.into()))),
    )
}

/// Up-neighbors of `pi` in the Kingman graph with multiplicities, derived
/// from the quasisymmetric expansion of `m_(1) * m_pi`.
pub fn up_neighbors(pi: &Partition) -> EdgeList<Partition> {
    let mut expansion = QSymElement::zero();
    for alpha in distinct_rearrangements(pi) {
        expansion += &quasi_shuffle(&Composition::new(vec![1]).unwrap(), &alpha);
    }
    let mut edges = EdgeList::new();
    for (comp, coeff) in expansion.terms() {
        let sigma = comp.sorted();
        if comp == &sigma.as_composition() {
            let k = coeff
                .to_integer()
                .try_into()
                .expect("small positive multiplicity");
            edges.insert(sigma, k);
        }
    }
    edges
}

/// Value of the projected harmonic function at `pi`.
pub fn project(pattern: &SemifinitePattern, pi: &Partition) -> ExtendedValue {
    pattern
        .eval_qsym(&monomial_expansion(pi))
        .expect("rearrangement coefficients are positive")
}

/// Which branch of the projection dichotomy a pattern falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProjectionCase {
    /// No `v` intervals, or no separating composition contains a part equal
    /// to 1: the projection is again a semifinite harmonic function.
    First,
    /// Otherwise: the projection only takes the values 0 and `+inf`.
    Second,
}

pub fn classify(pattern: &SemifinitePattern) -> ProjectionCase {
    let has_v = pattern
        .intervals()
        .iter()
        .any(|iv| iv.kind == IntervalKind::V);
    let has_unit_part = pattern
        .comps()
        .iter()
        .any(|c| c.parts().contains(&1));
    if !has_v || !has_unit_part {
        ProjectionCase::First
    } else {
        ProjectionCase::Second
    }
}

/// All partitions of `n` in lexicographically decreasing order of their
/// part sequences.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fn rec(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::new(prefix.clone()).expect("sorted positive parts"));
            return;
        }
        let bound = remaining.min(max_part);
        for part in (1..=bound).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    rec(n, n.max(1), &mut prefix, &mut out);
    out
}

/// Outcome of sweeping the projected harmonic identity over all partitions
/// up to a level bound, together with the dichotomy findings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KingmanReport {
    pub levels: u32,
    pub case: ProjectionCase,
    /// Vertices where the harmonic identity failed.
    pub violations: Vec<Violation>,
    /// Second-case vertices carrying a finite nonzero value, which the
    /// dichotomy forbids.
    pub impure_vertices: Vec<(Partition, ExtendedValue)>,
    /// Whether some checked vertex carried a finite nonzero value. In the
    /// first case such vertices exist, but may sit above the checked
    /// levels when `levels` is small.
    pub finite_positive_seen: bool,
}

impl KingmanReport {
    /// No harmonic violations and, in the second case, no impure vertices.
    pub fn ok(&self) -> bool {
        self.violations.is_empty() && self.impure_vertices.is_empty()
    }
}

/// Sweeps the projected harmonic identity and the case dichotomy over every
/// partition of weight at most `max_level`. Panics when `max_level` exceeds
/// [`MAX_KINGMAN_CHECK_LEVEL`].
pub fn check_harmonicity(pattern: &SemifinitePattern, max_level: u32) -> KingmanReport {
    assert!(
        max_level <= MAX_KINGMAN_CHECK_LEVEL,
        "Kingman harmonicity checks are capped at level {MAX_KINGMAN_CHECK_LEVEL}"
    );
    let case = classify(pattern);
    let mut violations = Vec::new();
    let mut impure_vertices = Vec::new();
    let mut finite_positive_seen = false;
    for n in 0..=max_level {
        for pi in enumerate_partitions(n) {
            let lhs = project(pattern, &pi);
            let rhs: ExtendedValue = up_neighbors(&pi)
                .iter()
                .map(|(sigma, k)| {
                    project(pattern, sigma).scaled(&Rat::from_integer(k.into()))
                })
                .sum();
            if lhs != rhs {
                violations.push(Violation {
                    vertex: pi.parts().to_vec(),
                    lhs: lhs.clone(),
                    rhs,
                });
            }
            let finite_positive = matches!(&lhs, ExtendedValue::Finite(v) if !v.is_zero());
            if finite_positive {
                finite_positive_seen = true;
                if case == ProjectionCase::Second {
                    impure_vertices.push((pi, lhs));
                }
            }
        }
    }
    KingmanReport {
        levels: max_level,
        case,
        violations,
        impure_vertices,
        finite_positive_seen,
    }
}

/// The projection parameters read off the pattern: `h` interval lengths in
/// decreasing order, the total `v` length, and the separating compositions
/// merged into a single partition.
pub fn projection_data(pattern: &SemifinitePattern) -> (Vec<Rat>, Rat, Partition) {
    let mut alpha: Vec<Rat> = pattern
        .intervals()
        .iter()
        .filter(|iv| iv.kind == IntervalKind::H)
        .map(|iv| iv.length.clone())
        .collect();
    alpha.sort_by(|a, b| b.cmp(a));
    let gamma: Rat = pattern
        .intervals()
        .iter()
        .filter(|iv| iv.kind == IntervalKind::V)
        .map(|iv| iv.length.clone())
        .sum();
    let mut merged = Composition::empty();
    for comp in pattern.comps() {
        merged = merged.concat(comp);
    }
    (alpha, gamma, merged.sorted())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::Interval;
    use crate::{comp, rat};
    use IntervalKind::{H, V};

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn edges(pairs: &[(&[u32], u64)]) -> EdgeList<Partition> {
        pairs.iter().map(|(p, m)| (part(p), *m)).collect()
    }

    fn column_after_comp() -> SemifinitePattern {
        SemifinitePattern::new(
            vec![comp![2], comp![]],
            vec![Interval::new(V, rat(1, 1))],
        )
        .unwrap()
    }

    #[test]
    fn up_neighbors_examples() {
        assert_eq!(
            up_neighbors(&part(&[1])),
            edges(&[(&[2], 1), (&[1, 1], 2)])
        );
        assert_eq!(
            up_neighbors(&part(&[2])),
            edges(&[(&[3], 1), (&[2, 1], 1)])
        );
        assert_eq!(
            up_neighbors(&part(&[1, 1])),
            edges(&[(&[2, 1], 1), (&[1, 1, 1], 3)])
        );
        assert_eq!(up_neighbors(&Partition::empty()), edges(&[(&[1], 1)]));
    }

    #[test]
    fn rearrangements_share_coefficients() {
        // The expansion of m_(1) * m_pi is symmetric: every rearrangement
        // of a partition carries the same coefficient.
        for n in 0..=6u32 {
            for pi in enumerate_partitions(n) {
                let mut expansion = QSymElement::zero();
                for alpha in distinct_rearrangements(&pi) {
                    expansion += &quasi_shuffle(&comp![1], &alpha);
                }
                for (sigma, k) in up_neighbors(&pi).iter() {
                    for rearr in distinct_rearrangements(sigma) {
                        assert_eq!(
                            expansion.coefficient(&rearr),
                            rat(k as i64, 1),
                            "pi={pi} sigma={sigma}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn monomial_expansion_examples() {
        let m = monomial_expansion(&part(&[2, 1]));
        assert_eq!(m.len(), 2);
        assert_eq!(m.coefficient(&comp![2, 1]), rat(1, 1));
        assert_eq!(m.coefficient(&comp![1, 2]), rat(1, 1));
        assert_eq!(
            monomial_expansion(&part(&[1, 1, 1])),
            QSymElement::monomial(comp![1, 1, 1])
        );
        assert_eq!(monomial_expansion(&part(&[2, 1, 1])).len(), 3);
    }

    #[test]
    fn project_examples() {
        let p = column_after_comp();
        assert_eq!(
            project(&p, &part(&[2, 1, 1])),
            ExtendedValue::Finite(rat(1, 2))
        );
        assert_eq!(project(&p, &part(&[1, 1])), ExtendedValue::Infinite);
        assert_eq!(project(&p, &Partition::empty()), ExtendedValue::Infinite);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&column_after_comp()), ProjectionCase::First);
        let second = SemifinitePattern::new(
            vec![comp![1, 2], comp![]],
            vec![Interval::new(V, rat(1, 1))],
        )
        .unwrap();
        assert_eq!(classify(&second), ProjectionCase::Second);
        let no_v = SemifinitePattern::new(
            vec![comp![1, 1, 1], comp![]],
            vec![Interval::new(H, rat(1, 1))],
        )
        .unwrap();
        assert_eq!(classify(&no_v), ProjectionCase::First);
    }

    #[test]
    fn enumerate_partitions_examples() {
        assert_eq!(
            enumerate_partitions(4),
            vec![
                part(&[4]),
                part(&[3, 1]),
                part(&[2, 2]),
                part(&[2, 1, 1]),
                part(&[1, 1, 1, 1]),
            ]
        );
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(7).len(), 15);
    }

    #[test]
    fn harmonicity_examples() {
        let report = check_harmonicity(&column_after_comp(), 7);
        assert!(report.ok(), "violations: {:?}", report.violations);
        assert!(report.finite_positive_seen);
        assert_eq!(report.case, ProjectionCase::First);

        let second = SemifinitePattern::new(
            vec![comp![1, 2], comp![]],
            vec![Interval::new(V, rat(1, 1))],
        )
        .unwrap();
        let report = check_harmonicity(&second, 6);
        assert!(report.ok(), "impure: {:?}", report.impure_vertices);
        assert_eq!(report.case, ProjectionCase::Second);
        assert!(!report.finite_positive_seen);
    }

    #[test]
    fn projection_data_examples() {
        let p = SemifinitePattern::new(
            vec![comp![2], comp![3, 1, 5], comp![]],
            vec![
                Interval::new(H, rat(1, 4)),
                Interval::new(H, rat(3, 4)),
            ],
        )
        .unwrap();
        let (alpha, gamma, nu) = projection_data(&p);
        assert_eq!(alpha, vec![rat(3, 4), rat(1, 4)]);
        assert_eq!(gamma, rat(0, 1));
        assert_eq!(nu, part(&[5, 3, 2, 1]));
    }
}
