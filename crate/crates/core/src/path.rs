//! Lattice paths over the step set {N, E, D}.
//!
//! A [`LatticePath`] is a start vertex together with a word of steps. The
//! vertex sequence is the start followed by the prefix sums of the step
//! displacements. Patterns are always matched as consecutive factors of the
//! step word.

use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use crate::error::PathError;

/// A single lattice step.
///
/// The derived ordering `E < N < D` is the canonical enumeration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    /// East, `(1, 0)`.
    E,
    /// North, `(0, 1)`.
    N,
    /// Diagonal, `(1, 1)`.
    D,
}

impl Step {
    /// All steps in canonical order.
    pub const ALL: [Step; 3] = [Step::E, Step::N, Step::D];

    pub fn displacement(self) -> Point {
        match self {
            Step::E => Point::new(1, 0),
            Step::N => Point::new(0, 1),
            Step::D => Point::new(1, 1),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Step::E => 'E',
            Step::N => 'N',
            Step::D => 'D',
        }
    }

    pub fn from_char(c: char) -> Option<Step> {
        match c {
            'E' => Some(Step::E),
            'N' => Some(Step::N),
            'D' => Some(Step::D),
            _ => None,
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl FromStr for Step {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut chars = s.chars();
        match (chars.next().and_then(Step::from_char), chars.next()) {
            (Some(step), None) => Ok(step),
            _ => Err(PathError::InvalidStep(s.to_string())),
        }
    }
}

/// An integer lattice point.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    /// Whether the point lies in the region `y >= k x`.
    pub fn in_region(self, k: u32) -> bool {
        self.y >= i64::from(k) * self.x
    }
}

impl Add for Point {
    type Output = Point;

    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Renders a step word as a string over `{N, E, D}`.
pub fn word_to_string(word: &[Step]) -> String {
    word.iter().map(|s| s.as_char()).collect()
}

/// Parses a string over `{N, E, D}` into a step word.
pub fn parse_word(text: &str) -> Result<Vec<Step>, PathError> {
    text.chars()
        .enumerate()
        .map(|(position, c)| {
            Step::from_char(c).ok_or(PathError::InvalidCharacter {
                position,
                character: c,
            })
        })
        .collect()
}

/// A nonempty step word matched as a consecutive factor.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pattern(Vec<Step>);

impl Pattern {
    pub fn new(word: Vec<Step>) -> Result<Self, PathError> {
        if word.is_empty() {
            return Err(PathError::EmptyPattern);
        }
        Ok(Pattern(word))
    }

    /// `NE`.
    pub fn peak() -> Self {
        Pattern(vec![Step::N, Step::E])
    }

    /// `EN`.
    pub fn valley() -> Self {
        Pattern(vec![Step::E, Step::N])
    }

    /// `EENN`.
    pub fn deep_valley() -> Self {
        Pattern(vec![Step::E, Step::E, Step::N, Step::N])
    }

    /// The single diagonal step `D`.
    pub fn diagonal() -> Self {
        Pattern(vec![Step::D])
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Whether the pattern occurs as a consecutive factor of `word`.
    pub fn occurs_in(&self, word: &[Step]) -> bool {
        word.windows(self.0.len()).any(|w| w == self.0.as_slice())
    }

    /// Whether `word` ends with this pattern.
    pub fn is_suffix_of(&self, word: &[Step]) -> bool {
        word.ends_with(&self.0)
    }

    /// Parses a comma-separated list such as `NE,EN`. An empty string gives
    /// an empty list.
    pub fn parse_list(text: &str) -> Result<Vec<Pattern>, PathError> {
        if text.trim().is_empty() {
            return Ok(Vec::new());
        }
        text.split(',').map(|p| p.trim().parse()).collect()
    }
}

impl FromStr for Pattern {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Pattern::new(parse_word(s)?)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&word_to_string(&self.0))
    }
}

/// A lattice path: a start vertex and a word of steps.
///
/// Equality compares both the start and the word.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePath {
    start: Point,
    word: Vec<Step>,
}

impl LatticePath {
    pub fn new(start: Point, word: Vec<Step>) -> Self {
        LatticePath { start, word }
    }

    /// A path from the origin.
    pub fn from_word(word: Vec<Step>) -> Self {
        LatticePath::new(Point::ORIGIN, word)
    }

    /// Parses a word over `{N, E, D}` starting at `start`.
    pub fn parse(text: &str, start: Point) -> Result<Self, PathError> {
        Ok(LatticePath::new(start, parse_word(text)?))
    }

    pub fn start(&self) -> Point {
        self.start
    }

    pub fn word(&self) -> &[Step] {
        &self.word
    }

    pub fn into_word(self) -> Vec<Step> {
        self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn end(&self) -> Point {
        self.word
            .iter()
            .fold(self.start, |p, s| p + s.displacement())
    }

    /// The vertex sequence, starting with the start point.
    pub fn vertices(&self) -> impl Iterator<Item = Point> + '_ {
        std::iter::once(self.start).chain(self.word.iter().scan(self.start, |p, s| {
            *p = *p + s.displacement();
            Some(*p)
        }))
    }

    pub fn contains(&self, pattern: &Pattern) -> bool {
        pattern.occurs_in(&self.word)
    }

    pub fn count_step(&self, step: Step) -> usize {
        self.word.iter().filter(|&&s| s == step).count()
    }

    /// Number of occurrences of a pattern, overlapping occurrences included.
    pub fn count_pattern(&self, pattern: &Pattern) -> usize {
        self.word
            .windows(pattern.len())
            .filter(|w| *w == pattern.steps())
            .count()
    }

    /// Prepends an `E` and appends an `N`; the start moves one unit west.
    pub fn augment(&self) -> LatticePath {
        let mut word = Vec::with_capacity(self.word.len() + 2);
        word.push(Step::E);
        word.extend_from_slice(&self.word);
        word.push(Step::N);
        LatticePath::new(self.start + Point::new(-1, 0), word)
    }

    /// Removes the first and last steps; the start advances by the first step.
    pub fn diminish(&self) -> Result<LatticePath, PathError> {
        if self.word.len() < 2 {
            return Err(PathError::TooShortToDiminish(self.word.len()));
        }
        let start = self.start + self.word[0].displacement();
        Ok(LatticePath::new(
            start,
            self.word[1..self.word.len() - 1].to_vec(),
        ))
    }

    /// Whether every vertex satisfies `y >= k x`.
    pub fn in_region(&self, k: u32) -> bool {
        self.vertices().all(|p| p.in_region(k))
    }

    pub fn first_step(&self) -> Option<Step> {
        self.word.first().copied()
    }

    pub fn last_step(&self) -> Option<Step> {
        self.word.last().copied()
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&word_to_string(&self.word))
    }
}

impl FromStr for LatticePath {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LatticePath::parse(s, Point::ORIGIN)
    }
}
