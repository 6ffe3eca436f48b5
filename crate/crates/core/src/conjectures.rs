//! Numerical checks that two families of k-Schröder paths are equinumerous
//! with Dyck paths avoiding symmetric peaks and with inversion sequences
//! avoiding the pattern 102.

use num_bigint::BigUint;

use crate::error::{ConjectureError, PathError};
use crate::family::{count_bruteforce, count_bruteforce_with_budget, PathFamily};
use crate::path::{Pattern, Step};

/// A word `e_1 .. e_n` with `0 <= e_i < i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InversionSequence(Vec<usize>);

impl InversionSequence {
    pub fn new(entries: Vec<usize>) -> Result<Self, ConjectureError> {
        for (i, &value) in entries.iter().enumerate() {
            if value > i {
                return Err(ConjectureError::EntryOutOfRange {
                    index: i + 1,
                    value,
                });
            }
        }
        Ok(InversionSequence(entries))
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// Whether some `i < j < k` has `e_j < e_i < e_k`, by direct search.
    pub fn contains_102(&self) -> bool {
        let e = &self.0;
        let n = e.len();
        (0..n).any(|i| (i + 1..n).any(|j| e[j] < e[i] && (j + 1..n).any(|k| e[i] < e[k])))
    }
}

/// Number of inversion sequences of length `n` avoiding 102.
///
/// The search keeps, for the current prefix, the smallest entry that already
/// has a smaller entry after it; a new entry completes an occurrence exactly
/// when it exceeds that value.
pub fn count_inversion_102(n: usize) -> Result<BigUint, ConjectureError> {
    if n < 1 {
        return Err(ConjectureError::NonPositive(n));
    }
    let mut prefix = Vec::with_capacity(n);
    Ok(BigUint::from(avoid_102(&mut prefix, usize::MAX, n)))
}

fn avoid_102(prefix: &mut Vec<usize>, threshold: usize, n: usize) -> u64 {
    if prefix.len() == n {
        return 1;
    }
    let mut total = 0;
    for v in 0..=prefix.len() {
        if v > threshold {
            break;
        }
        let lowered = prefix
            .iter()
            .copied()
            .filter(|&e| e > v)
            .min()
            .map_or(threshold, |e| e.min(threshold));
        prefix.push(v);
        total += avoid_102(prefix, lowered, n);
        prefix.pop();
    }
    total
}

/// Whether a North-East word has a peak whose maximal mountain `N^i E^j`
/// has `i == j`.
pub fn has_symmetric_peak(word: &[Step]) -> bool {
    word.windows(2).enumerate().any(|(i, w)| {
        if w != [Step::N, Step::E] {
            return false;
        }
        let ups = word[..=i]
            .iter()
            .rev()
            .take_while(|&&s| s == Step::N)
            .count();
        let downs = word[i + 1..].iter().take_while(|&&s| s == Step::E).count();
        ups == downs
    })
}

/// Dyck paths of semilength `n` (North-East paths to `(n, n)` weakly above
/// the diagonal) without symmetric peaks.
pub fn count_catalan_no_symmetric_peak(n: usize) -> Result<BigUint, ConjectureError> {
    if n < 1 {
        return Err(ConjectureError::NonPositive(n));
    }
    let dyck = PathFamily::new(n as i64, n as i64)
        .avoiding([Pattern::diagonal()])
        .in_region(1);
    let count = dyck
        .paths()?
        .filter(|p| !has_symmetric_peak(p.word()))
        .count();
    Ok(BigUint::from(count))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureRow {
    pub n: usize,
    /// The path-family count.
    pub lhs: BigUint,
    /// The count of the other family.
    pub rhs: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport {
    pub n_max: usize,
    pub rows: Vec<ConjectureRow>,
    pub verdict: bool,
}

impl ConjectureReport {
    fn from_rows(n_max: usize, rows: Vec<ConjectureRow>) -> Self {
        let verdict = rows.iter().all(|r| r.lhs == r.rhs);
        ConjectureReport {
            n_max,
            rows,
            verdict,
        }
    }
}

fn count(family: &PathFamily, budget: Option<u64>) -> Result<BigUint, PathError> {
    match budget {
        Some(b) => count_bruteforce_with_budget(family, b),
        None => count_bruteforce(family),
    }
}

/// Peak- and valley-free paths to `(n, n)` above `y = x` ending with `E`,
/// against Dyck paths of semilength `n + 1` without symmetric peaks.
pub fn check_conjecture1(n_max: usize) -> Result<ConjectureReport, ConjectureError> {
    check_conjecture1_with_budget(n_max, None)
}

pub fn check_conjecture1_with_budget(
    n_max: usize,
    budget: Option<u64>,
) -> Result<ConjectureReport, ConjectureError> {
    let rows = (1..=n_max)
        .map(|n| {
            let fam = PathFamily::peak_valley_free(n as i64, n as i64)
                .in_region(1)
                .last(Step::E);
            Ok(ConjectureRow {
                n,
                lhs: count(&fam, budget)?,
                rhs: count_catalan_no_symmetric_peak(n + 1)?,
            })
        })
        .collect::<Result<_, ConjectureError>>()?;
    Ok(ConjectureReport::from_rows(n_max, rows))
}

/// Peak- and valley-free paths to `(n, 2n)` above `y = 2x` ending with `D`,
/// against inversion sequences of length `n` avoiding 102.
pub fn check_conjecture2(n_max: usize) -> Result<ConjectureReport, ConjectureError> {
    check_conjecture2_with_budget(n_max, None)
}

pub fn check_conjecture2_with_budget(
    n_max: usize,
    budget: Option<u64>,
) -> Result<ConjectureReport, ConjectureError> {
    let rows = (1..=n_max)
        .map(|n| {
            let fam = PathFamily::peak_valley_free(n as i64, 2 * n as i64)
                .in_region(2)
                .last(Step::D);
            Ok(ConjectureRow {
                n,
                lhs: count(&fam, budget)?,
                rhs: count_inversion_102(n)?,
            })
        })
        .collect::<Result<_, ConjectureError>>()?;
    Ok(ConjectureReport::from_rows(n_max, rows))
}
