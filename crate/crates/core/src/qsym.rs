//! Monomial-basis calculus of quasisymmetric functions.
//!
//! Elements are finite rational linear combinations of monomial basis
//! elements `M_lambda`, indexed by compositions. The product is the
//! quasi-shuffle (overlapping shuffle) expansion, the coproduct is
//! deconcatenation, and [`psi_eval`] provides the two evaluation
//! homomorphisms used by the boundary constructions: `psi+` kills
//! everything but single rows and `psi-` everything but columns.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use num_traits::{One, Zero};

use crate::composition::Composition;
use crate::{factorial, Rat};

/// A finite formal sum of compositions with exact rational coefficients.
///
/// Zero coefficients are never stored; the unit is the empty composition
/// with coefficient 1.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QSymElement {
    terms: BTreeMap<Composition, Rat>,
}

impl QSymElement {
    pub fn zero() -> Self {
        QSymElement::default()
    }

    /// The multiplicative unit `M_empty`.
    pub fn one() -> Self {
        QSymElement::monomial(Composition::empty())
    }

    /// The basis element `M_lambda`.
    pub fn monomial(lambda: Composition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, Rat::one());
        QSymElement { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Composition, Rat)>>(iter: I) -> Self {
        let mut out = QSymElement::zero();
        for (c, coeff) in iter {
            out.add_term(c, coeff);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `M_lambda`, zero when absent.
    pub fn coefficient(&self, lambda: &Composition) -> Rat {
        self.terms.get(lambda).cloned().unwrap_or_else(Rat::zero)
    }

    /// Terms in lexicographic order on compositions.
    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &Rat)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, lambda: Composition, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(lambda) {
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

    pub fn scale(&self, factor: &Rat) -> QSymElement {
        if factor.is_zero() {
            return QSymElement::zero();
        }
        QSymElement {
            terms: self
                .terms
                .iter()
                .map(|(c, v)| (c.clone(), v * factor))
                .collect(),
        }
    }

    /// Whether every coefficient is nonnegative (membership in the positive
    /// cone spanned by the monomial basis).
    pub fn all_coefficients_nonnegative(&self) -> bool {
        use num_traits::Signed;
        self.terms.values().all(|v| !v.is_negative())
    }
}

impl Add<&QSymElement> for &QSymElement {
    type Output = QSymElement;

    fn add(self, rhs: &QSymElement) -> QSymElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&QSymElement> for QSymElement {
    fn add_assign(&mut self, rhs: &QSymElement) {
        for (c, v) in rhs.terms() {
            self.add_term(c.clone(), v.clone());
        }
    }
}

/// Bilinear extension of [`quasi_shuffle`]; commutative, associative and
/// unital.
impl Mul<&QSymElement> for &QSymElement {
    type Output = QSymElement;

    fn mul(self, rhs: &QSymElement) -> QSymElement {
        let mut out = QSymElement::zero();
        for (a, av) in self.terms() {
            for (b, bv) in rhs.terms() {
                let factor = av * bv;
                for (c, m) in quasi_shuffle(a, b).terms() {
                    out.add_term(c.clone(), m * &factor);
                }
            }
        }
        out
    }
}

impl fmt::Display for QSymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (c, v)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{v}*M{c}")?;
        }
        Ok(())
    }
}

/// The quasi-shuffle expansion of `M_alpha * M_beta`: interleave the two
/// part sequences, optionally merging one part from each side by addition.
/// Coefficients count the ways each composition arises.
pub fn quasi_shuffle(alpha: &Composition, beta: &Composition) -> QSymElement {
    fn rec(
        a: &[u32],
        b: &[u32],
        prefix: &mut Vec<u32>,
        out: &mut BTreeMap<Composition, u64>,
    ) {
        if a.is_empty() || b.is_empty() {
            let mut parts = prefix.clone();
            parts.extend_from_slice(if a.is_empty() { b } else { a });
            *out.entry(Composition::new(parts).expect("positive parts"))
                .or_insert(0) += 1;
            return;
        }
        prefix.push(a[0]);
        rec(&a[1..], b, prefix, out);
        prefix.pop();
        prefix.push(b[0]);
        rec(a, &b[1..], prefix, out);
        prefix.pop();
        prefix.push(a[0] + b[0]);
        rec(&a[1..], &b[1..], prefix, out);
        prefix.pop();
    }
    let mut counts = BTreeMap::new();
    let mut prefix = Vec::with_capacity(alpha.len() + beta.len());
    rec(
        alpha.parts(),
        beta.parts(),
        &mut prefix,
        &mut counts,
    );
    QSymElement {
        terms: counts
            .into_iter()
            .map(|(c, n)| (c, Rat::from_integer(n.into())))
            .collect(),
    }
}

/// All ordered splits of `lambda` into `m` consecutive, possibly empty
/// blocks: the iterated deconcatenation coproduct on the monomial basis.
/// There are `C(len + m - 1, m - 1)` splits, each listed exactly once.
pub fn deconcat_splits(lambda: &Composition, m: usize) -> Vec<Vec<Composition>> {
    assert!(m >= 1, "at least one block");
    let parts = lambda.parts();
    let mut out = Vec::new();
    let mut blocks: Vec<Composition> = Vec::with_capacity(m);
    fn rec(
        parts: &[u32],
        from: usize,
        remaining: usize,
        blocks: &mut Vec<Composition>,
        out: &mut Vec<Vec<Composition>>,
    ) {
        if remaining == 1 {
            blocks.push(Composition::from_parts_unchecked(parts[from..].to_vec()));
            out.push(blocks.clone());
            blocks.pop();
            return;
        }
        for to in from..=parts.len() {
            blocks.push(Composition::from_parts_unchecked(parts[from..to].to_vec()));
            rec(parts, to, remaining - 1, blocks, out);
            blocks.pop();
        }
    }
    rec(parts, 0, m, &mut blocks, &mut out);
    out
}

/// The two evaluation homomorphisms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    /// `psi+`: 1 on rows (at most one part), 0 otherwise.
    Plus,
    /// `psi-`: `1/n!` on columns (all parts equal 1), 0 otherwise.
    Minus,
}

/// Value of `psi+` or `psi-` on the basis element `M_lambda`. Both send the
/// unit `M_empty` to 1.
pub fn psi_eval(sign: Sign, lambda: &Composition) -> Rat {
    match sign {
        Sign::Plus => {
            if lambda.len() <= 1 {
                Rat::one()
            } else {
                Rat::zero()
            }
        }
        Sign::Minus => {
            if lambda.parts().iter().all(|&p| p == 1) {
                Rat::new(1.into(), factorial(lambda.len() as u64))
            } else {
                Rat::zero()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::{enumerate_level, up_neighbors};
    use crate::{comp, rat};

    fn elem(terms: &[(&[u32], i64)]) -> QSymElement {
        QSymElement::from_terms(terms.iter().map(|(parts, n)| {
            (
                Composition::new(parts.to_vec()).unwrap(),
                Rat::from_integer((*n).into()),
            )
        }))
    }

    #[test]
    fn quasi_shuffle_examples() {
        assert_eq!(
            quasi_shuffle(&comp![1], &comp![1]),
            elem(&[(&[1, 1], 2), (&[2], 1)])
        );
        assert_eq!(
            quasi_shuffle(&comp![1], &comp![1, 1]),
            elem(&[(&[1, 1, 1], 3), (&[2, 1], 1), (&[1, 2], 1)])
        );
        assert_eq!(
            quasi_shuffle(&comp![], &comp![3, 1]),
            QSymElement::monomial(comp![3, 1])
        );
    }

    #[test]
    fn product_examples() {
        let m1 = QSymElement::monomial(comp![1]);
        let m2 = QSymElement::monomial(comp![2]);
        assert_eq!(
            &m1 * &m2,
            elem(&[(&[1, 2], 1), (&[2, 1], 1), (&[3], 1)])
        );
        let two_m1 = m1.scale(&rat(2, 1));
        let three_one = QSymElement::one().scale(&rat(3, 1));
        assert_eq!(&two_m1 * &three_one, m1.scale(&rat(6, 1)));
        let sum = &m1 + &m2;
        assert_eq!(
            &sum * &m1,
            elem(&[(&[1, 1], 2), (&[2], 1), (&[1, 2], 1), (&[2, 1], 1), (&[3], 1)])
        );
    }

    #[test]
    fn product_grading() {
        for (a, b) in [
            (comp![2, 1], comp![1, 3]),
            (comp![1, 1], comp![2]),
            (comp![3], comp![1, 1, 1]),
        ] {
            let total = a.weight() + b.weight();
            for (c, _) in quasi_shuffle(&a, &b).terms() {
                assert_eq!(c.weight(), total);
            }
        }
    }

    #[test]
    fn pieri_consistency_small() {
        // Coefficients of M_(1) * M_nu are the up-edge multiplicities.
        for n in 0..=6u32 {
            for nu in enumerate_level(n).unwrap() {
                let product = quasi_shuffle(&comp![1], &nu);
                let edges = up_neighbors(&nu);
                assert_eq!(product.len(), edges.len());
                for (mu, m) in edges.iter() {
                    assert_eq!(product.coefficient(mu), rat(m as i64, 1), "nu={nu} mu={mu}");
                }
            }
        }
    }

    #[test]
    fn deconcat_examples() {
        let splits = deconcat_splits(&comp![2, 1], 2);
        assert_eq!(
            splits,
            vec![
                vec![comp![], comp![2, 1]],
                vec![comp![2], comp![1]],
                vec![comp![2, 1], comp![]],
            ]
        );
        assert_eq!(
            deconcat_splits(&comp![], 3),
            vec![vec![comp![], comp![], comp![]]]
        );
        assert_eq!(deconcat_splits(&comp![1, 1], 3).len(), 6);
        // Counit: one block returns the composition itself.
        assert_eq!(deconcat_splits(&comp![3, 1], 1), vec![vec![comp![3, 1]]]);
    }

    #[test]
    fn deconcat_coassociativity_small() {
        use std::collections::BTreeMap;
        for n in 0..=6u32 {
            for lambda in enumerate_level(n).unwrap() {
                let direct = deconcat_splits(&lambda, 3);
                // Split in two, then split the left block again.
                let mut left_first: BTreeMap<Vec<Composition>, usize> = BTreeMap::new();
                for pair in deconcat_splits(&lambda, 2) {
                    for sub in deconcat_splits(&pair[0], 2) {
                        *left_first
                            .entry(vec![sub[0].clone(), sub[1].clone(), pair[1].clone()])
                            .or_insert(0) += 1;
                    }
                }
                // ... and the same splitting the right block.
                let mut right_first: BTreeMap<Vec<Composition>, usize> = BTreeMap::new();
                for pair in deconcat_splits(&lambda, 2) {
                    for sub in deconcat_splits(&pair[1], 2) {
                        *right_first
                            .entry(vec![pair[0].clone(), sub[0].clone(), sub[1].clone()])
                            .or_insert(0) += 1;
                    }
                }
                let mut expected: BTreeMap<Vec<Composition>, usize> = BTreeMap::new();
                for t in direct {
                    *expected.entry(t).or_insert(0) += 1;
                }
                assert_eq!(left_first, expected, "lambda={lambda}");
                assert_eq!(right_first, expected, "lambda={lambda}");
            }
        }
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi_eval(Sign::Plus, &comp![3]), rat(1, 1));
        assert_eq!(psi_eval(Sign::Minus, &comp![1, 1, 1]), rat(1, 6));
        assert_eq!(psi_eval(Sign::Plus, &comp![2, 1]), rat(0, 1));
        assert_eq!(psi_eval(Sign::Minus, &comp![2]), rat(0, 1));
        assert_eq!(psi_eval(Sign::Plus, &comp![]), rat(1, 1));
        assert_eq!(psi_eval(Sign::Minus, &comp![]), rat(1, 1));
    }

    #[test]
    fn psi_is_multiplicative() {
        for n in 0..=4u32 {
            for a in enumerate_level(n).unwrap() {
                for k in 0..=4u32 {
                    for b in enumerate_level(k).unwrap() {
                        let product = quasi_shuffle(&a, &b);
                        for sign in [Sign::Plus, Sign::Minus] {
                            let lhs: Rat = product
                                .terms()
                                .map(|(c, v)| v * psi_eval(sign, c))
                                .sum();
                            let rhs = psi_eval(sign, &a) * psi_eval(sign, &b);
                            assert_eq!(lhs, rhs, "sign={sign:?} a={a} b={b}");
                        }
                    }
                }
            }
        }
    }
}
