//! Compositions, the Gnedin-Kingman graph and its reachability order.
//!
//! A composition is a finite sequence of positive integers; the empty
//! composition is the single vertex of weight 0. Vertices on adjacent
//! levels are connected by moving down from `mu`:
//!
//! * decrease a part `>= 2` by one (edge multiplicity 1), or
//! * delete a `1` from a maximal run of `j` ones (one edge for the whole
//!   run, multiplicity `j`).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

use crate::factorial;

/// Levels above this are refused by [`enumerate_level`]; the level sets grow
/// as `2^(n-1)`.
pub const DEFAULT_LEVEL_BOUND: u32 = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CompositionError {
    #[error("composition parts must be positive (part {index} is zero)")]
    ZeroPart { index: usize },
    #[error("partition parts must be weakly decreasing (position {index})")]
    NotSorted { index: usize },
    #[error("level {level} exceeds the enumeration bound {bound}")]
    LevelBoundExceeded { level: u32, bound: u32 },
}

/// A composition: an ordered sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self, CompositionError> {
        if let Some(index) = parts.iter().position(|&p| p == 0) {
            return Err(CompositionError::ZeroPart { index });
        }
        Ok(Composition { parts })
    }

    pub fn empty() -> Self {
        Composition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts, i.e. the level of the vertex.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Concatenation of the two part sequences.
    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Composition { parts }
    }

    /// The parts sorted weakly decreasing, as a partition.
    pub fn sorted(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Composition {
        debug_assert!(parts.iter().all(|&p| p > 0));
        Composition { parts }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A partition: a weakly decreasing composition, a vertex of the Kingman
/// graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, CompositionError> {
        if let Some(index) = parts.iter().position(|&p| p == 0) {
            return Err(CompositionError::ZeroPart { index });
        }
        if let Some(index) = (1..parts.len()).find(|&i| parts[i] > parts[i - 1]) {
            return Err(CompositionError::NotSorted { index });
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The same parts read as a composition.
    pub fn as_composition(&self) -> Composition {
        Composition {
            parts: self.parts.clone(),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.as_composition().fmt(f)
    }
}

/// Neighbors of a vertex one level away, with edge multiplicities.
///
/// Entries are keyed by the neighbor, so duplicates collapse and iteration
/// order is the lexicographic order on part sequences.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EdgeList<V: Ord = Composition> {
    entries: BTreeMap<V, u64>,
}

impl<V: Ord> EdgeList<V> {
    pub fn new() -> Self {
        EdgeList {
            entries: BTreeMap::new(),
        }
    }

    pub(crate) fn insert(&mut self, neighbor: V, multiplicity: u64) {
        debug_assert!(multiplicity >= 1);
        let slot = self.entries.entry(neighbor).or_insert(multiplicity);
        debug_assert_eq!(*slot, multiplicity, "conflicting multiplicities");
        *slot = multiplicity;
    }

    /// Multiplicity of the edge to `neighbor`, 0 when there is none.
    pub fn multiplicity(&self, neighbor: &V) -> u64 {
        self.entries.get(neighbor).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&V, u64)> {
        self.entries.iter().map(|(v, &m)| (v, m))
    }
}

impl<V: Ord> FromIterator<(V, u64)> for EdgeList<V> {
    fn from_iter<T: IntoIterator<Item = (V, u64)>>(iter: T) -> Self {
        let mut edges = EdgeList::new();
        for (v, m) in iter {
            edges.insert(v, m);
        }
        edges
    }
}

impl<V: Ord> IntoIterator for EdgeList<V> {
    type Item = (V, u64);
    type IntoIter = std::collections::btree_map::IntoIter<V, u64>;

    fn into_iter(self) -> Self::IntoIter {
        self.entries.into_iter()
    }
}

/// All vertices one level below `lambda`, with multiplicities.
///
/// Decreasing a part `>= 2` contributes multiplicity 1; a maximal run of
/// `j` ones contributes a single entry of multiplicity `j` (not one entry
/// per deleted position).
pub fn down_neighbors(lambda: &Composition) -> EdgeList {
    let parts = lambda.parts();
    let mut edges = EdgeList::new();
    for (i, &p) in parts.iter().enumerate() {
        if p >= 2 {
            let mut next = parts.to_vec();
            next[i] = p - 1;
            edges.insert(Composition::from_parts_unchecked(next), 1);
        }
    }
    let mut i = 0;
    while i < parts.len() {
        if parts[i] == 1 {
            let mut j = i;
            while j < parts.len() && parts[j] == 1 {
                j += 1;
            }
            let run = (j - i) as u64;
            let mut next = parts.to_vec();
            next.remove(i);
            edges.insert(Composition::from_parts_unchecked(next), run);
            i = j;
        } else {
            i += 1;
        }
    }
    edges
}

/// All vertices one level above `nu`, with multiplicities.
///
/// Either some part grows by one (multiplicity 1), or a new `1` is inserted;
/// insertions that land in the same maximal run of ones produce the same
/// composition, whose multiplicity is the length of that run. This is the
/// transpose of [`down_neighbors`] and matches the coefficients of the
/// quasi-shuffle `M_(1) * M_nu`.
pub fn up_neighbors(nu: &Composition) -> EdgeList {
    let parts = nu.parts();
    let mut edges = EdgeList::new();
    for i in 0..parts.len() {
        let mut next = parts.to_vec();
        next[i] += 1;
        edges.insert(Composition::from_parts_unchecked(next), 1);
    }
    for at in 0..=parts.len() {
        let mut next = parts.to_vec();
        next.insert(at, 1);
        let mut lo = at;
        while lo > 0 && next[lo - 1] == 1 {
            lo -= 1;
        }
        let mut hi = at;
        while hi + 1 < next.len() && next[hi + 1] == 1 {
            hi += 1;
        }
        let run = (hi - lo + 1) as u64;
        edges.insert(Composition::from_parts_unchecked(next), run);
    }
    edges
}

/// Whether `upper` lies above `lower` in the graph order (`lower <= upper`),
/// i.e. there is a path from `upper` down to `lower`.
///
/// Equivalent to an order-preserving injection of `lower`'s parts into
/// `upper`'s parts that never increases a part; the greedy left-to-right
/// matching decides this in linear time.
pub fn graph_leq(lower: &Composition, upper: &Composition) -> bool {
    let up = upper.parts();
    let mut j = 0;
    for &p in lower.parts() {
        while j < up.len() && up[j] < p {
            j += 1;
        }
        if j == up.len() {
            return false;
        }
        j += 1;
    }
    true
}

/// All `2^(n-1)` compositions of `n` (one for `n = 0`), in lexicographic
/// order on part sequences.
pub fn enumerate_level(n: u32) -> Result<Vec<Composition>, CompositionError> {
    enumerate_level_bounded(n, DEFAULT_LEVEL_BOUND)
}

/// [`enumerate_level`] with an explicit bound.
pub fn enumerate_level_bounded(n: u32, bound: u32) -> Result<Vec<Composition>, CompositionError> {
    if n > bound {
        return Err(CompositionError::LevelBoundExceeded { level: n, bound });
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fn rec(remaining: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if remaining == 0 {
            out.push(Composition::from_parts_unchecked(prefix.clone()));
            return;
        }
        for first in 1..=remaining {
            prefix.push(first);
            rec(remaining - first, prefix, out);
            prefix.pop();
        }
    }
    rec(n, &mut prefix, &mut out);
    Ok(out)
}

/// Weighted count of paths from the empty composition up to `lambda`:
/// `dim(empty) = 1`, `dim(lambda) = sum over mu below of k(mu, lambda) * dim(mu)`.
/// Closed form `|lambda|! / prod(lambda_i!)`, cross-checked against the
/// recursion by the test suite.
pub fn dimension(lambda: &Composition) -> BigUint {
    let numer = factorial(lambda.weight());
    let mut denom = BigUint::from(1u32);
    for &p in lambda.parts() {
        denom *= factorial(u64::from(p)).to_biguint().expect("nonnegative");
    }
    (numer.to_biguint().expect("nonnegative")) / denom
}

/// All distinct compositions whose multiset of parts equals `pi`, in
/// lexicographic order.
pub fn distinct_rearrangements(pi: &Partition) -> Vec<Composition> {
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for &p in pi.parts() {
        *counts.entry(p).or_insert(0) += 1;
    }
    let total = pi.len();
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(total);
    fn rec(
        counts: &mut BTreeMap<u32, usize>,
        prefix: &mut Vec<u32>,
        total: usize,
        out: &mut Vec<Composition>,
    ) {
        if prefix.len() == total {
            out.push(Composition::from_parts_unchecked(prefix.clone()));
            return;
        }
        let values: Vec<u32> = counts
            .iter()
            .filter(|&(_, &c)| c > 0)
            .map(|(&v, _)| v)
            .collect();
        for v in values {
            *counts.get_mut(&v).unwrap() -= 1;
            prefix.push(v);
            rec(counts, prefix, total, out);
            prefix.pop();
            *counts.get_mut(&v).unwrap() += 1;
        }
    }
    rec(&mut counts, &mut prefix, total, &mut out);
    out
}
