//! Exact combinatorics of the Gnedin-Kingman branching graph.
//!
//! The Gnedin-Kingman graph is the graded graph whose level-`n` vertices are
//! the compositions of `n` and whose edge multiplicities come from Pieri's
//! rule for the monomial basis of the quasisymmetric functions. This crate
//! implements:
//!
//! * the graph itself ([`composition`]): neighbors, multiplicities, the
//!   reachability order, enumeration and path counting;
//! * the monomial-basis calculus of quasisymmetric functions ([`qsym`]):
//!   quasi-shuffle products, deconcatenation splits and the two evaluation
//!   homomorphisms;
//! * finite boundary harmonic functions parametrized by interval patterns
//!   ([`finite`]), with two independent evaluation routes;
//! * semifinite harmonic functions parametrized by interval patterns with
//!   separating compositions ([`semifinite`]), valued in the nonnegative
//!   rationals extended by `+inf`;
//! * an independent evaluation oracle via polynomials in a formal shrinking
//!   interval length ([`epsilon`]);
//! * the projection to the Kingman graph of partitions ([`kingman`]);
//! * JSON pattern files and serialization ([`json`]).
//!
//! All arithmetic is exact: coefficients and interval lengths are
//! arbitrary-precision rationals, and every identity checked by the
//! verification routines is an exact equality. There is no floating point
//! anywhere in the crate.
//!
//! Everything here is a pure function of immutable values, so all types can
//! be shared freely across threads.

pub mod composition;
pub mod epsilon;
pub mod extended;
pub mod finite;
pub mod json;
pub mod kingman;
pub mod qsym;
pub mod report;
pub mod semifinite;

pub use composition::{Composition, EdgeList, Partition};
pub use extended::ExtendedValue;
pub use finite::{FinitePattern, Interval, IntervalKind, PatternError};
pub use qsym::QSymElement;
pub use report::{CheckReport, Violation};
pub use semifinite::SemifinitePattern;

use num_bigint::BigInt;

/// Exact rational scalar used throughout the crate.
pub type Rat = num_rational::BigRational;

/// Shorthand rational constructor, mostly for tests and fixtures.
///
/// Panics when `denom` is zero.
pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

pub(crate) fn rat_pow(base: &Rat, exp: u64) -> Rat {
    num_traits::pow(base.clone(), exp as usize)
}

pub(crate) fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::from(1u32);
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Builds a [`Composition`] from a list of parts: `comp![2, 1]`, `comp![]`.
///
/// Panics on a zero part, so it is only suitable for literals.
#[macro_export]
macro_rules! comp {
    () => { $crate::Composition::empty() };
    ($($part:expr),+ $(,)?) => {
        $crate::Composition::new(vec![$($part),+]).expect("composition literal")
    };
}
