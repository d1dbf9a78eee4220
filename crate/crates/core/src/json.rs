//! Pattern files and JSON serialization.
//!
//! Compositions serialize as arrays of positive integers (`[3,1,5]`, the
//! empty composition as `[]`). Rational lengths and coefficients are
//! written as `"p/q"` strings and read back from either a string or a JSON
//! integer. Pattern files carry a `type` tag:
//!
//! ```json
//! {"type":"finite","blocks":[{"kind":"h","length":"1/2"},{"kind":"v","length":"1/2"}]}
//! {"type":"semifinite","blocks":[{"kind":"comp","parts":[2]},{"kind":"v","length":"1"},{"kind":"comp","parts":[]}]}
//! ```
//!
//! Semifinite block lists must start and end with a `comp` block and
//! strictly alternate compositions with intervals.

use serde::de::{self, Deserializer, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::composition::{Composition, CompositionError};
use crate::finite::{FinitePattern, Interval, IntervalKind, PatternError};
use crate::qsym::QSymElement;
use crate::semifinite::{Block, SemifinitePattern, SemifinitePatternError};
use crate::Rat;

/// Serde adapter for exact rationals: written as `"p/q"` (or the bare
/// integer text when the denominator is 1), read from a string or integer.
pub mod rational_text {
    use super::*;

    pub fn serialize<S: Serializer>(value: &Rat, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Rat, D::Error> {
        struct RatVisitor;

        impl Visitor<'_> for RatVisitor {
            type Value = Rat;

            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                write!(f, "a rational as a \"p/q\" string or an integer")
            }

            fn visit_str<E: de::Error>(self, text: &str) -> Result<Rat, E> {
                text.trim()
                    .parse::<Rat>()
                    .map_err(|e| E::custom(format!("invalid rational {text:?}: {e}")))
            }

            fn visit_u64<E: de::Error>(self, value: u64) -> Result<Rat, E> {
                Ok(Rat::from_integer(value.into()))
            }

            fn visit_i64<E: de::Error>(self, value: i64) -> Result<Rat, E> {
                Ok(Rat::from_integer(value.into()))
            }
        }

        deserializer.deserialize_any(RatVisitor)
    }
}

/// Interval tag used by pattern files.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KindTag {
    H,
    V,
}

impl From<KindTag> for IntervalKind {
    fn from(tag: KindTag) -> IntervalKind {
        match tag {
            KindTag::H => IntervalKind::H,
            KindTag::V => IntervalKind::V,
        }
    }
}

impl From<IntervalKind> for KindTag {
    fn from(kind: IntervalKind) -> KindTag {
        match kind {
            IntervalKind::H => KindTag::H,
            IntervalKind::V => KindTag::V,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FiniteBlock {
    pub kind: KindTag,
    #[serde(with = "rational_text")]
    pub length: Rat,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SemifiniteBlock {
    Comp {
        parts: Vec<u32>,
    },
    H {
        #[serde(with = "rational_text")]
        length: Rat,
    },
    V {
        #[serde(with = "rational_text")]
        length: Rat,
    },
}

/// The on-disk shape of a pattern file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum PatternFile {
    Finite { blocks: Vec<FiniteBlock> },
    Semifinite { blocks: Vec<SemifiniteBlock> },
}

/// A validated pattern of either kind.
#[derive(Debug, Clone, PartialEq)]
pub enum Pattern {
    Finite(FinitePattern),
    Semifinite(SemifinitePattern),
}

#[derive(Debug, Error)]
pub enum PatternFileError {
    #[error("block {index}: {source}")]
    BadComposition {
        index: usize,
        source: CompositionError,
    },
    #[error(transparent)]
    Invalid(#[from] PatternError),
    #[error(transparent)]
    Semifinite(#[from] SemifinitePatternError),
}

#[derive(Debug, Error)]
pub enum PatternParseError {
    #[error("invalid pattern JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    File(#[from] PatternFileError),
}

impl TryFrom<PatternFile> for Pattern {
    type Error = PatternFileError;

    fn try_from(file: PatternFile) -> Result<Pattern, PatternFileError> {
        match file {
            PatternFile::Finite { blocks } => {
                let intervals = blocks
                    .into_iter()
                    .map(|b| Interval::new(b.kind.into(), b.length))
                    .collect();
                Ok(Pattern::Finite(FinitePattern::new(intervals)?))
            }
            PatternFile::Semifinite { blocks } => {
                let blocks = blocks
                    .into_iter()
                    .enumerate()
                    .map(|(index, block)| match block {
                        SemifiniteBlock::Comp { parts } => Composition::new(parts)
                            .map(Block::Comp)
                            .map_err(|source| PatternFileError::BadComposition { index, source }),
                        SemifiniteBlock::H { length } => {
                            Ok(Block::Interval(Interval::new(IntervalKind::H, length)))
                        }
                        SemifiniteBlock::V { length } => {
                            Ok(Block::Interval(Interval::new(IntervalKind::V, length)))
                        }
                    })
                    .collect::<Result<Vec<Block>, _>>()?;
                Ok(Pattern::Semifinite(SemifinitePattern::from_blocks(blocks)?))
            }
        }
    }
}

impl From<&FinitePattern> for PatternFile {
    fn from(pattern: &FinitePattern) -> PatternFile {
        PatternFile::Finite {
            blocks: pattern
                .intervals()
                .iter()
                .map(|iv| FiniteBlock {
                    kind: iv.kind.into(),
                    length: iv.length.clone(),
                })
                .collect(),
        }
    }
}

impl From<&SemifinitePattern> for PatternFile {
    fn from(pattern: &SemifinitePattern) -> PatternFile {
        let blocks = pattern
            .blocks()
            .into_iter()
            .map(|block| match block {
                Block::Comp(c) => SemifiniteBlock::Comp {
                    parts: c.parts().to_vec(),
                },
                Block::Interval(iv) => match iv.kind {
                    IntervalKind::H => SemifiniteBlock::H { length: iv.length },
                    IntervalKind::V => SemifiniteBlock::V { length: iv.length },
                },
            })
            .collect();
        PatternFile::Semifinite { blocks }
    }
}

impl From<&Pattern> for PatternFile {
    fn from(pattern: &Pattern) -> PatternFile {
        match pattern {
            Pattern::Finite(p) => p.into(),
            Pattern::Semifinite(p) => p.into(),
        }
    }
}

/// Parses and validates a pattern file from JSON text.
pub fn parse_pattern(text: &str) -> Result<Pattern, PatternParseError> {
    let file: PatternFile = serde_json::from_str(text)?;
    Ok(Pattern::try_from(file)?)
}

/// Serializes a pattern back to its file form.
pub fn pattern_to_json(pattern: &Pattern) -> String {
    serde_json::to_string(&PatternFile::from(pattern)).expect("pattern files serialize")
}

#[derive(Serialize, Deserialize)]
struct QSymTerm {
    comp: Vec<u32>,
    #[serde(with = "rational_text")]
    coeff: Rat,
}

impl Serialize for QSymElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for (comp, coeff) in self.terms() {
            seq.serialize_element(&QSymTerm {
                comp: comp.parts().to_vec(),
                coeff: coeff.clone(),
            })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for QSymElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<QSymElement, D::Error> {
        let terms = Vec::<QSymTerm>::deserialize(deserializer)?;
        let mut out = QSymElement::zero();
        for term in terms {
            let comp = Composition::new(term.comp).map_err(de::Error::custom)?;
            out.add_term(comp, term.coeff);
        }
        Ok(out)
    }
}
