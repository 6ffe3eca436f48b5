//! Families of Delannoy paths from the origin and the exhaustive search that
//! enumerates and counts them.
//!
//! A [`PathFamily`] names a target, path-level and augmented-level forbidden
//! factors, an optional region `y >= k x`, and optional first/last-step
//! filters. Enumeration is a depth-first search in lexicographic order of
//! words under `E < N < D`. A prefix is abandoned as soon as it overshoots the
//! target, leaves the region, or ends with a forbidden path-level factor.
//! Augmented-level factors are checked when a path is complete.

use std::collections::HashMap;

use num_bigint::BigUint;

use crate::error::PathError;
use crate::path::{LatticePath, Pattern, Point, Step};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathFamily {
    pub target: Point,
    pub forbidden: Vec<Pattern>,
    pub forbidden_aug: Vec<Pattern>,
    pub region_k: Option<u32>,
    pub first_step: Option<Step>,
    pub last_step: Option<Step>,
}

impl PathFamily {
    /// All Delannoy paths from the origin to `(n, m)`.
    pub fn new(n: i64, m: i64) -> Self {
        PathFamily {
            target: Point::new(n, m),
            forbidden: Vec::new(),
            forbidden_aug: Vec::new(),
            region_k: None,
            first_step: None,
            last_step: None,
        }
    }

    pub fn avoiding(mut self, patterns: impl IntoIterator<Item = Pattern>) -> Self {
        self.forbidden.extend(patterns);
        self
    }

    pub fn avoiding_aug(mut self, patterns: impl IntoIterator<Item = Pattern>) -> Self {
        self.forbidden_aug.extend(patterns);
        self
    }

    pub fn in_region(mut self, k: u32) -> Self {
        self.region_k = Some(k);
        self
    }

    pub fn first(mut self, step: Step) -> Self {
        self.first_step = Some(step);
        self
    }

    pub fn last(mut self, step: Step) -> Self {
        self.last_step = Some(step);
        self
    }

    /// Paths avoiding peaks and valleys, counted by `h(n, m)`.
    pub fn peak_valley_free(n: i64, m: i64) -> Self {
        PathFamily::new(n, m).avoiding([Pattern::peak(), Pattern::valley()])
    }

    /// North-East paths avoiding deep valleys, counted by `b(n, m)`.
    pub fn deep_valley_free(n: i64, m: i64) -> Self {
        PathFamily::new(n, m).avoiding([Pattern::diagonal(), Pattern::deep_valley()])
    }

    /// Paths whose augmented path avoids `D` and `EENN`, counted by `a(n, m)`.
    pub fn augmented_deep_valley_free(n: i64, m: i64) -> Self {
        PathFamily::new(n, m).avoiding_aug([Pattern::diagonal(), Pattern::deep_valley()])
    }

    /// k-Schröder paths of size `n`.
    pub fn schroeder(n: i64, k: u32) -> Self {
        PathFamily::new(n, i64::from(k) * n).in_region(k)
    }

    /// Whether `path` belongs to this family.
    pub fn contains(&self, path: &LatticePath) -> bool {
        if path.start() != Point::ORIGIN || path.end() != self.target {
            return false;
        }
        if self.forbidden.iter().any(|p| path.contains(p)) {
            return false;
        }
        if !self.forbidden_aug.is_empty() {
            let aug = path.augment();
            if self.forbidden_aug.iter().any(|p| aug.contains(p)) {
                return false;
            }
        }
        if let Some(k) = self.region_k {
            if !path.in_region(k) {
                return false;
            }
        }
        if self.first_step.is_some() && path.first_step() != self.first_step {
            return false;
        }
        if self.last_step.is_some() && path.last_step() != self.last_step {
            return false;
        }
        true
    }

    fn validate(&self) -> Result<(), PathError> {
        if self.target.x < 0 || self.target.y < 0 {
            return Err(PathError::NegativeTarget(self.target.x, self.target.y));
        }
        if self.region_k == Some(0) {
            return Err(PathError::ZeroRegion);
        }
        Ok(())
    }

    /// Tries to extend a prefix ending at `at` by `step`. Returns the new
    /// vertex when the extension survives the incremental pruning; `word`
    /// must already contain `step` as its last element.
    fn admits(&self, at: Point, word: &[Step]) -> Option<Point> {
        let step = *word.last()?;
        let next = at + step.displacement();
        if next.x > self.target.x || next.y > self.target.y {
            return None;
        }
        if let Some(k) = self.region_k {
            if !next.in_region(k) {
                return None;
            }
        }
        if word.len() == 1 && self.first_step.is_some_and(|f| f != step) {
            return None;
        }
        if self.forbidden.iter().any(|p| p.is_suffix_of(word)) {
            return None;
        }
        Some(next)
    }

    /// Checks that remain once a word reaches the target.
    fn completes(&self, word: &[Step]) -> bool {
        if self.last_step.is_some() && word.last().copied() != self.last_step {
            return false;
        }
        if self.first_step.is_some() && word.first().copied() != self.first_step {
            return false;
        }
        if self.forbidden_aug.is_empty() {
            return true;
        }
        let mut aug = Vec::with_capacity(word.len() + 2);
        aug.push(Step::E);
        aug.extend_from_slice(word);
        aug.push(Step::N);
        !self.forbidden_aug.iter().any(|p| p.occurs_in(&aug))
    }

    /// Streams every member in canonical order.
    pub fn paths(&self) -> Result<PathIter<'_>, PathError> {
        PathIter::new(self, None)
    }

    /// Streams members, stopping with an error once more than `budget`
    /// prefixes have been visited.
    pub fn paths_with_budget(&self, budget: u64) -> Result<PathIter<'_>, PathError> {
        PathIter::new(self, Some(budget))
    }
}

/// Depth-first enumerator over a [`PathFamily`].
#[derive(Debug)]
pub struct PathIter<'a> {
    family: &'a PathFamily,
    word: Vec<Step>,
    vertices: Vec<Point>,
    next: Vec<usize>,
    visited: u64,
    budget: Option<u64>,
    exceeded: bool,
    pending_root: bool,
}

impl<'a> PathIter<'a> {
    fn new(family: &'a PathFamily, budget: Option<u64>) -> Result<Self, PathError> {
        family.validate()?;
        let root_done = family.target == Point::ORIGIN;
        Ok(PathIter {
            family,
            word: Vec::new(),
            vertices: vec![Point::ORIGIN],
            next: if root_done { Vec::new() } else { vec![0] },
            visited: 0,
            budget,
            exceeded: false,
            pending_root: root_done,
        })
    }

    /// Number of prefixes visited so far.
    pub fn visited(&self) -> u64 {
        self.visited
    }

    /// Whether the stream ended early because the budget ran out.
    pub fn budget_exceeded(&self) -> bool {
        self.exceeded
    }

    /// Collects the remaining stream, failing if the budget runs out.
    pub fn try_collect(mut self) -> Result<Vec<LatticePath>, PathError> {
        let out: Vec<_> = self.by_ref().collect();
        match (self.exceeded, self.budget) {
            (true, Some(b)) => Err(PathError::BudgetExceeded(b)),
            _ => Ok(out),
        }
    }
}

impl Iterator for PathIter<'_> {
    type Item = LatticePath;

    fn next(&mut self) -> Option<LatticePath> {
        if self.pending_root {
            self.pending_root = false;
            return self
                .family
                .completes(&[])
                .then(|| LatticePath::from_word(Vec::new()));
        }
        if self.exceeded {
            return None;
        }
        loop {
            let slot = self.next.last_mut()?;
            if *slot == Step::ALL.len() {
                self.next.pop();
                self.vertices.pop();
                self.word.pop();
                continue;
            }
            let step = Step::ALL[*slot];
            *slot += 1;
            let at = *self.vertices.last().expect("vertex stack tracks the word");
            self.word.push(step);
            let Some(vertex) = self.family.admits(at, &self.word) else {
                self.word.pop();
                continue;
            };
            self.visited += 1;
            if self.budget.is_some_and(|b| self.visited > b) {
                self.exceeded = true;
                return None;
            }
            if vertex == self.family.target {
                let hit = self
                    .family
                    .completes(&self.word)
                    .then(|| LatticePath::from_word(self.word.clone()));
                self.word.pop();
                if hit.is_some() {
                    return hit;
                }
            } else {
                self.vertices.push(vertex);
                self.next.push(0);
            }
        }
    }
}

/// Every member of `family` in canonical order.
pub fn enumerate_paths(family: &PathFamily) -> Result<Vec<LatticePath>, PathError> {
    Ok(family.paths()?.collect())
}

/// Number of members, found by exhaustive search without materialising paths.
pub fn count_bruteforce(family: &PathFamily) -> Result<BigUint, PathError> {
    count_with_budget(family, None)
}

/// As [`count_bruteforce`], failing once more than `budget` prefixes are visited.
pub fn count_bruteforce_with_budget(
    family: &PathFamily,
    budget: u64,
) -> Result<BigUint, PathError> {
    count_with_budget(family, Some(budget))
}

fn count_with_budget(family: &PathFamily, budget: Option<u64>) -> Result<BigUint, PathError> {
    family.validate()?;
    let mut search = CountSearch {
        family,
        word: Vec::new(),
        visited: 0,
        budget,
        found: 0,
    };
    search.run(Point::ORIGIN)?;
    Ok(BigUint::from(search.found))
}

struct CountSearch<'a> {
    family: &'a PathFamily,
    word: Vec<Step>,
    visited: u64,
    budget: Option<u64>,
    found: u64,
}

impl CountSearch<'_> {
    fn run(&mut self, at: Point) -> Result<(), PathError> {
        if at == self.family.target {
            if self.family.completes(&self.word) {
                self.found += 1;
            }
            return Ok(());
        }
        for step in Step::ALL {
            self.word.push(step);
            if let Some(next) = self.family.admits(at, &self.word) {
                self.visited += 1;
                if let Some(b) = self.budget.filter(|&b| self.visited > b) {
                    return Err(PathError::BudgetExceeded(b));
                }
                self.run(next)?;
            }
            self.word.pop();
        }
        Ok(())
    }
}

/// Number of members, found by a depth-first search that memoises the
/// completion count of each state `(vertex, last few steps)`.
///
/// Augmented-level factors are pruned incrementally here, so the count from
/// a state depends only on its vertex and the trailing window of steps once
/// the prefix is at least as long as the longest pattern. This reaches sizes
/// the plain search cannot while staying independent of any formula.
pub fn count_memoized(family: &PathFamily) -> Result<BigUint, PathError> {
    family.validate()?;
    let longest = family
        .forbidden
        .iter()
        .chain(&family.forbidden_aug)
        .map(Pattern::len)
        .max()
        .unwrap_or(1);
    let mut search = MemoSearch {
        family,
        longest,
        word: Vec::new(),
        memo: HashMap::new(),
    };
    Ok(search.run(Point::ORIGIN))
}

struct MemoSearch<'a> {
    family: &'a PathFamily,
    longest: usize,
    word: Vec<Step>,
    memo: HashMap<(Point, Vec<Step>), BigUint>,
}

impl MemoSearch<'_> {
    fn aug_prefix_ok(&self) -> bool {
        let depth = self.word.len();
        self.family.forbidden_aug.iter().all(|p| {
            let steps = p.steps();
            if depth + 1 != steps.len() || steps[0] != Step::E {
                return true;
            }
            steps[1..] != self.word[..]
        })
    }

    fn run(&mut self, at: Point) -> BigUint {
        if at == self.family.target {
            return BigUint::from(u8::from(self.family.completes(&self.word)));
        }
        let key = (self.word.len() >= self.longest).then(|| {
            let window = self.word[self.word.len() + 1 - self.longest..].to_vec();
            (at, window)
        });
        if let Some(hit) = key.as_ref().and_then(|k| self.memo.get(k)) {
            return hit.clone();
        }
        let mut total = BigUint::default();
        for step in Step::ALL {
            self.word.push(step);
            if let Some(next) = self.family.admits(at, &self.word) {
                let inner_ok = !self
                    .family
                    .forbidden_aug
                    .iter()
                    .any(|p| p.is_suffix_of(&self.word));
                if inner_ok && self.aug_prefix_ok() {
                    total += self.run(next);
                }
            }
            self.word.pop();
        }
        if let Some(k) = key {
            self.memo.insert(k, total.clone());
        }
        total
    }
}
