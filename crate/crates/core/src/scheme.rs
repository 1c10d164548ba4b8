//! Labeling schemes: words of signed letters read around a polygon boundary.
//!
//! A scheme is stored as a linear sequence of [`Side`]s. Cyclic semantics
//! (rotations and reflections of the polygon) live in [`crate::symmetry`];
//! equality of two `Scheme` values is positional.
//!
//! Positions are 0-based everywhere in this module. The CLI converts from the
//! 1-based indices users type.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Errors produced while building or manipulating a scheme.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchemeError {
    #[error("empty scheme")]
    Empty,
    #[error("malformed token `{0}`")]
    MalformedToken(String),
    #[error("letter `{0}` appears more than twice")]
    TooManyOccurrences(String),
    #[error("position {position} out of range for a scheme of length {len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("rotation {rotation} out of range for a scheme of length {len}")]
    RotationOutOfRange { rotation: usize, len: usize },
    #[error("cannot glue a side to itself (position {0})")]
    SamePosition(usize),
    #[error("side at position {0} is already glued")]
    AlreadyGlued(usize),
    #[error("scheme has length {scheme} but the symmetry group acts on {group} sides")]
    SizeMismatch { scheme: usize, group: usize },
}

/// Letter identity. Index 0 renders as `a`, 25 as `z`, 26 as `a1`, 27 as `b1`, ...
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u32);

impl Letter {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = (b'a' + (self.0 % 26) as u8) as char;
        match self.0 / 26 {
            0 => write!(f, "{c}"),
            round => write!(f, "{c}{round}"),
        }
    }
}

/// Orientation of a side relative to the reading direction.
///
/// `Plus` orders before `Minus`, which is the tie-break used by canonical forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Exponent {
    Plus,
    Minus,
}

impl Exponent {
    pub fn inverse(self) -> Self {
        match self {
            Exponent::Plus => Exponent::Minus,
            Exponent::Minus => Exponent::Plus,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Exponent::Plus => 1,
            Exponent::Minus => -1,
        }
    }
}

/// One edge occurrence on the polygon boundary.
///
/// The derived ordering compares the letter first, then the exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Side {
    pub letter: Letter,
    pub exponent: Exponent,
}

impl Side {
    pub fn new(letter: u32, exponent: Exponent) -> Self {
        Side {
            letter: Letter(letter),
            exponent,
        }
    }

    pub fn plus(letter: u32) -> Self {
        Side::new(letter, Exponent::Plus)
    }

    pub fn minus(letter: u32) -> Self {
        Side::new(letter, Exponent::Minus)
    }

    pub fn inverse(self) -> Self {
        Side {
            letter: self.letter,
            exponent: self.exponent.inverse(),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exponent {
            Exponent::Plus => write!(f, "{}", self.letter),
            Exponent::Minus => write!(f, "{}^-1", self.letter),
        }
    }
}

/// A labeling scheme. Non-empty, and no letter occurs more than twice.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scheme {
    sides: Vec<Side>,
}

impl Scheme {
    pub fn new(sides: Vec<Side>) -> Result<Self, SchemeError> {
        if sides.is_empty() {
            return Err(SchemeError::Empty);
        }
        let mut seen: HashMap<Letter, u8> = HashMap::new();
        for side in &sides {
            let count = seen.entry(side.letter).or_default();
            *count += 1;
            if *count > 2 {
                return Err(SchemeError::TooManyOccurrences(side.letter.to_string()));
            }
        }
        Ok(Scheme { sides })
    }

    /// The polygon with `len` distinct free sides `a b c ...`.
    pub fn free(len: usize) -> Result<Self, SchemeError> {
        Scheme::new((0..len as u32).map(Side::plus).collect())
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    pub fn len(&self) -> usize {
        self.sides.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sides.is_empty()
    }

    pub fn into_sides(self) -> Vec<Side> {
        self.sides
    }

    /// Position of the other occurrence of the letter at `position`, if glued.
    pub fn partner(&self, position: usize) -> Option<usize> {
        let letter = self.sides[position].letter;
        self.sides
            .iter()
            .enumerate()
            .position(|(i, s)| i != position && s.letter == letter)
    }

    /// For every position, the position of its glued partner.
    pub fn partners(&self) -> Vec<Option<usize>> {
        let mut out = vec![None; self.len()];
        for (i, side) in self.sides.iter().enumerate() {
            if out[i].is_some() {
                continue;
            }
            if let Some(j) = self.sides[i + 1..].iter().position(|s| s.letter == side.letter) {
                out[i] = Some(i + 1 + j);
                out[i + 1 + j] = Some(i);
            }
        }
        out
    }

    /// Wraps sides already known to form a valid scheme.
    pub(crate) fn from_valid_sides(sides: Vec<Side>) -> Scheme {
        debug_assert!(Scheme::new(sides.clone()).is_ok());
        Scheme { sides }
    }

    pub fn is_free(&self, position: usize) -> bool {
        self.partner(position).is_none()
    }

    pub fn free_count(&self) -> usize {
        self.partners().iter().filter(|p| p.is_none()).count()
    }

    pub fn glued_pair_count(&self) -> usize {
        (self.len() - self.free_count()) / 2
    }

    /// Number of distinct letters, i.e. edges of the polygon after gluing.
    pub fn letter_count(&self) -> usize {
        self.glued_pair_count() + self.free_count()
    }

    /// Standard labeling: letters renamed `a, b, c, ...` in order of first
    /// appearance, first occurrences positive. A second occurrence keeps its
    /// exponent relative to the first one.
    pub fn relabel(&self) -> Scheme {
        let partners = self.partners();
        let mut out: Vec<Option<Side>> = vec![None; self.len()];
        let mut next = 0u32;
        for i in 0..self.len() {
            if out[i].is_some() {
                continue;
            }
            let fresh = Side::plus(next);
            next += 1;
            out[i] = Some(fresh);
            if let Some(j) = partners[i] {
                out[j] = Some(if self.sides[i].exponent == self.sides[j].exponent {
                    fresh
                } else {
                    fresh.inverse()
                });
            }
        }
        Scheme {
            sides: out.into_iter().map(|s| s.expect("every side assigned")).collect(),
        }
    }

    /// Cyclic rotation to the left by `k` positions.
    pub fn permute(&self, k: usize) -> Result<Scheme, SchemeError> {
        if k >= self.len() {
            return Err(SchemeError::RotationOutOfRange {
                rotation: k,
                len: self.len(),
            });
        }
        let mut sides = self.sides.clone();
        sides.rotate_left(k);
        Ok(Scheme { sides })
    }

    /// Reverse the word and invert every exponent.
    pub fn flip(&self) -> Scheme {
        Scheme {
            sides: self.sides.iter().rev().map(|s| s.inverse()).collect(),
        }
    }

    /// Glue the free sides at `first` and `second`.
    ///
    /// The side at `second` takes the letter of `first`, inverted when
    /// `orientable` is set (the orientation-reversing relation) and unchanged
    /// otherwise. The result is relabeled.
    pub fn glue(&self, first: usize, second: usize, orientable: bool) -> Result<Scheme, SchemeError> {
        let len = self.len();
        for position in [first, second] {
            if position >= len {
                return Err(SchemeError::PositionOutOfRange { position, len });
            }
        }
        if first == second {
            return Err(SchemeError::SamePosition(first));
        }
        for position in [first, second] {
            if !self.is_free(position) {
                return Err(SchemeError::AlreadyGlued(position));
            }
        }
        let mut sides = self.sides.clone();
        let side = sides[first];
        sides[second] = if orientable { side.inverse() } else { side };
        Ok(Scheme { sides }.relabel())
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, side) in self.sides.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{side}")?;
        }
        Ok(())
    }
}

fn is_letter_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some('a'..='z')) && chars.all(|c| c.is_ascii_digit())
}

impl FromStr for Scheme {
    type Err = SchemeError;

    /// Parse whitespace-separated tokens such as `a b^-1 c'`.
    ///
    /// Letter identities are assigned by first appearance, so `b a` parses to
    /// the same value as `a b`.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut names: HashMap<&str, (u32, u8)> = HashMap::new();
        let mut sides = Vec::new();
        for token in text.split_whitespace() {
            let (name, exponent) = if let Some(name) = token.strip_suffix("^-1") {
                (name, Exponent::Minus)
            } else if let Some(name) = token.strip_suffix('\'') {
                (name, Exponent::Minus)
            } else {
                (token, Exponent::Plus)
            };
            if !is_letter_name(name) {
                return Err(SchemeError::MalformedToken(token.to_string()));
            }
            let next = names.len() as u32;
            let (letter, count) = names.entry(name).or_insert((next, 0));
            *count += 1;
            if *count > 2 {
                return Err(SchemeError::TooManyOccurrences(name.to_string()));
            }
            sides.push(Side::new(*letter, exponent));
        }
        Scheme::new(sides)
    }
}

pub fn parse_scheme(text: &str) -> Result<Scheme, SchemeError> {
    text.parse()
}

pub fn format_scheme(scheme: &Scheme) -> String {
    scheme.to_string()
}
