//! Sign sequences.
//!
//! A tiling of the family studied here is coded, up to isometry, by an
//! infinite sequence of sign vectors: letter `j` records which facet of the
//! layer-`j` tile the distinguished tail passes through. This module stores
//! such sequences either exactly (eventually periodic, one word per
//! coordinate) or as a finite prefix, and answers the purely combinatorial
//! questions about them: letters, per-coordinate tail behaviour, minimal
//! period, essential period.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{hyperoctahedral, SignedPermutation};

/// One sign, `-1` or `+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn from_i8(v: i8) -> Option<Sign> {
        match v {
            -1 => Some(Sign::Minus),
            1 => Some(Sign::Plus),
            _ => None,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Minus => -1,
            Sign::Plus => 1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }

    /// The half of the parent cell a child with this step letter occupies:
    /// `+1` is the low half (`false`), `-1` the high half (`true`).
    pub fn to_half(self) -> bool {
        self == Sign::Minus
    }

    pub fn from_half(high: bool) -> Sign {
        if high {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:+}", self.as_i8())
    }
}

impl Serialize for Sign {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_i8(self.as_i8())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let v = i8::deserialize(deserializer)?;
        Sign::from_i8(v)
            .ok_or_else(|| serde::de::Error::custom(format!("sign must be -1 or 1, got {v}")))
    }
}

/// One letter of a `d`-dimensional sequence: a vector of `d` signs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Symbol {
    pub signs: Vec<Sign>,
}

impl Symbol {
    pub fn new(signs: Vec<Sign>) -> Symbol {
        Symbol { signs }
    }

    pub fn dim(&self) -> usize {
        self.signs.len()
    }

    pub fn get(&self, i: usize) -> Sign {
        self.signs[i]
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.signs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

/// An eventually periodic sign sequence for one coordinate, stored in normal
/// form: the period word is a primitive root (not a repetition of a shorter
/// word) and the preperiod is minimal (its last letter differs from the last
/// period letter).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoordinateWord {
    preperiod: Vec<Sign>,
    period: Vec<Sign>,
}

impl CoordinateWord {
    /// Normalizes on construction. Fails on an empty period.
    pub fn new(preperiod: Vec<Sign>, period: Vec<Sign>) -> Result<CoordinateWord> {
        if period.is_empty() {
            return Err(Error::ValidationError("empty period".into()));
        }
        let mut w = CoordinateWord { preperiod, period };
        w.reduce_period();
        w.merge_preperiod();
        Ok(w)
    }

    fn reduce_period(&mut self) {
        let n = self.period.len();
        for p in 1..n {
            if n.is_multiple_of(p)
                && self.period.iter().zip(self.period.iter().cycle().skip(p)).take(n).all(|(a, b)| a == b)
            {
                self.period.truncate(p);
                return;
            }
        }
    }

    fn merge_preperiod(&mut self) {
        while let (Some(&last), Some(&plast)) = (self.preperiod.last(), self.period.last()) {
            if last != plast {
                break;
            }
            self.preperiod.pop();
            self.period.rotate_right(1);
        }
    }

    pub fn preperiod(&self) -> &[Sign] {
        &self.preperiod
    }

    pub fn period(&self) -> &[Sign] {
        &self.period
    }

    /// Letter at 1-based index `j`.
    pub fn letter(&self, j: usize) -> Sign {
        assert!(j >= 1, "letter indices start at 1");
        let p = self.preperiod.len();
        if j <= p {
            self.preperiod[j - 1]
        } else {
            self.period[(j - 1 - p) % self.period.len()]
        }
    }

    /// Flips every letter.
    pub fn negated(&self) -> CoordinateWord {
        CoordinateWord {
            preperiod: self.preperiod.iter().map(|s| s.flip()).collect(),
            period: self.period.iter().map(|s| s.flip()).collect(),
        }
    }

    /// Drops the first letter, keeping normal form.
    pub fn dropped_first(&self) -> CoordinateWord {
        let mut pre = self.preperiod.clone();
        let mut per = self.period.clone();
        if pre.is_empty() {
            per.rotate_left(1);
        } else {
            pre.remove(0);
        }
        CoordinateWord::new(pre, per).expect("period stays nonempty")
    }
}

/// How one coordinate of the sequence behaves in the long run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TailBehavior {
    /// The sign settles to `value` from letter `onset` on (1-based), never
    /// changing afterwards, and `onset` is minimal with that property.
    EventuallyConstant { value: Sign, onset: usize },
    /// Both signs occur infinitely often.
    BothSignsInfinitely,
}

/// A full sequence spec: either exact (eventually periodic per coordinate) or
/// a finite word of symbols that only supports bounded queries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecKind {
    EventuallyPeriodic(Vec<CoordinateWord>),
    FiniteWord(Vec<Symbol>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceSpec {
    dim: usize,
    kind: SpecKind,
}

impl SequenceSpec {
    pub fn eventually_periodic(coords: Vec<CoordinateWord>) -> Result<SequenceSpec> {
        if coords.is_empty() {
            return Err(Error::ValidationError("dim must be at least 1".into()));
        }
        Ok(SequenceSpec { dim: coords.len(), kind: SpecKind::EventuallyPeriodic(coords) })
    }

    pub fn finite_word(dim: usize, word: Vec<Symbol>) -> Result<SequenceSpec> {
        if dim == 0 {
            return Err(Error::ValidationError("dim must be at least 1".into()));
        }
        if word.is_empty() {
            return Err(Error::ValidationError("finite word must be nonempty".into()));
        }
        if let Some(sym) = word.iter().find(|s| s.dim() != dim) {
            return Err(Error::ValidationError(format!(
                "word symbol has {} coordinates, spec has dim {}",
                sym.dim(),
                dim
            )));
        }
        Ok(SequenceSpec { dim, kind: SpecKind::FiniteWord(word) })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> &SpecKind {
        &self.kind
    }

    pub fn is_eventually_periodic(&self) -> bool {
        matches!(self.kind, SpecKind::EventuallyPeriodic(_))
    }

    /// Largest queryable letter index, `None` when unbounded.
    pub fn queryable_len(&self) -> Option<usize> {
        match &self.kind {
            SpecKind::EventuallyPeriodic(_) => None,
            SpecKind::FiniteWord(w) => Some(w.len()),
        }
    }

    /// Letter at 1-based index `j`.
    pub fn letter(&self, j: usize) -> Result<Symbol> {
        assert!(j >= 1, "letter indices start at 1");
        match &self.kind {
            SpecKind::EventuallyPeriodic(coords) => {
                Ok(Symbol::new(coords.iter().map(|c| c.letter(j)).collect()))
            }
            SpecKind::FiniteWord(w) => {
                w.get(j - 1).cloned().ok_or(Error::IndexBeyondWord { index: j, len: w.len() })
            }
        }
    }

    /// Long-run behaviour of coordinate `i` (0-based).
    pub fn coordinate_tail_behavior(&self, i: usize) -> Result<TailBehavior> {
        let SpecKind::EventuallyPeriodic(coords) = &self.kind else {
            return Err(Error::FiniteWordMode);
        };
        let c = &coords[i];
        if c.period().len() == 1 {
            // Normal form guarantees the preperiod ends in the other sign, so
            // the constant run starts right after it.
            Ok(TailBehavior::EventuallyConstant {
                value: c.period()[0],
                onset: c.preperiod().len() + 1,
            })
        } else {
            Ok(TailBehavior::BothSignsInfinitely)
        }
    }

    /// Minimal cofinal period of the whole sequence, as
    /// `(preperiod length, period length)`.
    pub fn minimal_period(&self) -> Result<(usize, usize)> {
        let SpecKind::EventuallyPeriodic(coords) = &self.kind else {
            return Err(Error::FiniteWordMode);
        };
        let pre = coords.iter().map(|c| c.preperiod().len()).max().unwrap_or(0);
        let period = coords
            .iter()
            .map(|c| c.period().len())
            .fold(1usize, num_integer::lcm);
        Ok((pre, period))
    }

    /// Minimal `q >= 1` such that some signed permutation `g` satisfies
    /// `g . sigma(j) = sigma(j + q)` for every large enough `j`, together
    /// with the least such witness. The returned witness is the identity
    /// exactly when `q` equals the minimal period length.
    pub fn essential_period(&self) -> Result<(usize, SignedPermutation)> {
        let (pre, period) = self.minimal_period()?;
        let group = hyperoctahedral(self.dim);
        let mut divisors: Vec<usize> = (1..=period).filter(|q| period % q == 0).collect();
        divisors.sort_unstable();
        for q in divisors {
            for g in &group {
                let ok = (pre + 1..=pre + period).all(|j| {
                    let lhs = g.apply_symbol(&self.letter(j).expect("periodic"));
                    let rhs = self.letter(j + q).expect("periodic");
                    lhs == rhs
                });
                if ok {
                    return Ok((q, g.clone()));
                }
            }
        }
        unreachable!("the identity always witnesses the minimal period")
    }

    /// Applies `g` to every letter. Preserves the spec mode.
    pub fn transformed(&self, g: &SignedPermutation) -> SequenceSpec {
        assert_eq!(g.dim(), self.dim);
        match &self.kind {
            SpecKind::EventuallyPeriodic(coords) => {
                // Output coordinate i reads from source sigma^{-1}(i) and
                // carries that source's sign factor.
                let new_coords: Vec<CoordinateWord> = (0..self.dim)
                    .map(|i| {
                        let (src, sign) = g.source_of(i);
                        let w = &coords[src];
                        if sign == Sign::Minus {
                            w.negated()
                        } else {
                            w.clone()
                        }
                    })
                    .collect();
                SequenceSpec { dim: self.dim, kind: SpecKind::EventuallyPeriodic(new_coords) }
            }
            SpecKind::FiniteWord(word) => SequenceSpec {
                dim: self.dim,
                kind: SpecKind::FiniteWord(word.iter().map(|s| g.apply_symbol(s)).collect()),
            },
        }
    }

    /// Drops the first letter (a cofinal change).
    pub fn dropped_first(&self) -> Result<SequenceSpec> {
        match &self.kind {
            SpecKind::EventuallyPeriodic(coords) => {
                let coords = coords.iter().map(|c| c.dropped_first()).collect();
                SequenceSpec::eventually_periodic(coords)
            }
            SpecKind::FiniteWord(w) => {
                if w.len() <= 1 {
                    return Err(Error::ValidationError(
                        "cannot drop the only letter of a finite word".into(),
                    ));
                }
                SequenceSpec::finite_word(self.dim, w[1..].to_vec())
            }
        }
    }
}

/// On-disk / on-wire form of a spec. Exactly one of `coords` and `word` must
/// be present.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpecDoc {
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coords: Option<Vec<CoordDoc>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub word: Option<Vec<Vec<i8>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoordDoc {
    #[serde(default)]
    pub pre: Vec<i8>,
    pub period: Vec<i8>,
}

fn signs_from_raw(raw: &[i8], what: &str) -> Result<Vec<Sign>> {
    raw.iter()
        .map(|&v| {
            Sign::from_i8(v)
                .ok_or_else(|| Error::ValidationError(format!("{what}: letter {v} is not -1 or +1")))
        })
        .collect()
}

impl SequenceSpec {
    pub fn from_doc(doc: &SpecDoc) -> Result<SequenceSpec> {
        if doc.dim == 0 {
            return Err(Error::ValidationError("dim must be at least 1".into()));
        }
        match (&doc.coords, &doc.word) {
            (Some(coords), None) => {
                if coords.len() != doc.dim {
                    return Err(Error::ValidationError(format!(
                        "dim is {} but {} coordinate words given",
                        doc.dim,
                        coords.len()
                    )));
                }
                let words = coords
                    .iter()
                    .enumerate()
                    .map(|(i, c)| {
                        let what = format!("coordinate {}", i + 1);
                        if c.period.is_empty() {
                            return Err(Error::ValidationError(format!("{what}: empty period")));
                        }
                        CoordinateWord::new(
                            signs_from_raw(&c.pre, &what)?,
                            signs_from_raw(&c.period, &what)?,
                        )
                    })
                    .collect::<Result<Vec<_>>>()?;
                SequenceSpec::eventually_periodic(words)
            }
            (None, Some(word)) => {
                let symbols = word
                    .iter()
                    .enumerate()
                    .map(|(j, letter)| {
                        if letter.len() != doc.dim {
                            return Err(Error::ValidationError(format!(
                                "word letter {} has {} coordinates, expected {}",
                                j + 1,
                                letter.len(),
                                doc.dim
                            )));
                        }
                        Ok(Symbol::new(signs_from_raw(letter, &format!("word letter {}", j + 1))?))
                    })
                    .collect::<Result<Vec<_>>>()?;
                SequenceSpec::finite_word(doc.dim, symbols)
            }
            (Some(_), Some(_)) => {
                Err(Error::ValidationError("give either coords or word, not both".into()))
            }
            (None, None) => Err(Error::ValidationError("missing coords or word".into())),
        }
    }

    /// Canonical document for the normalized spec.
    pub fn to_doc(&self) -> SpecDoc {
        match &self.kind {
            SpecKind::EventuallyPeriodic(coords) => SpecDoc {
                dim: self.dim,
                coords: Some(
                    coords
                        .iter()
                        .map(|c| CoordDoc {
                            pre: c.preperiod().iter().map(|s| s.as_i8()).collect(),
                            period: c.period().iter().map(|s| s.as_i8()).collect(),
                        })
                        .collect(),
                ),
                word: None,
            },
            SpecKind::FiniteWord(word) => SpecDoc {
                dim: self.dim,
                coords: None,
                word: Some(
                    word.iter().map(|s| s.signs.iter().map(|x| x.as_i8()).collect()).collect(),
                ),
            },
        }
    }
}

impl Serialize for SequenceSpec {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_doc().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SequenceSpec {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let doc = SpecDoc::deserialize(deserializer)?;
        SequenceSpec::from_doc(&doc).map_err(serde::de::Error::custom)
    }
}

/// Convenience constructor used all over the tests: signs from `+1/-1`
/// integer slices.
pub fn signs(raw: &[i8]) -> Vec<Sign> {
    raw.iter().map(|&v| Sign::from_i8(v).expect("sign must be -1 or +1")).collect()
}

/// Eventually periodic spec from raw integer words, one `(pre, period)` pair
/// per coordinate.
pub fn ep_spec(coords: &[(&[i8], &[i8])]) -> SequenceSpec {
    let words = coords
        .iter()
        .map(|(pre, per)| CoordinateWord::new(signs(pre), signs(per)).expect("valid word"))
        .collect();
    SequenceSpec::eventually_periodic(words).expect("valid spec")
}

/// Finite-word spec from raw integer letters.
pub fn word_spec(dim: usize, letters: &[&[i8]]) -> SequenceSpec {
    let word = letters.iter().map(|l| Symbol::new(signs(l))).collect();
    SequenceSpec::finite_word(dim, word).expect("valid spec")
}
