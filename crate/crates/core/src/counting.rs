//! Exact counts for the path families.
//!
//! Every count has at least two independent routes: an automaton DP over the
//! lattice and a closed-form sum. The recurrences quoted alongside the
//! formulas are only checked as invariants, never used to compute, because
//! the one for `h` is only valid for `n, m >= 2`.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::binomial as binomial_generic;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::CountError;

/// Binomial coefficient, zero when `k < 0` or `k > n` or `n < 0`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    binomial_generic(BigUint::from(n as u64), BigUint::from(k as u64))
}

/// Multinomial `(a + b + c)! / (a! b! c!)`, zero if any lower index is negative.
pub fn multinomial(top: i64, a: i64, b: i64, c: i64) -> Result<BigUint, CountError> {
    if a < 0 || b < 0 || c < 0 {
        return Ok(BigUint::zero());
    }
    if top != a + b + c {
        return Err(CountError::MultinomialMismatch { top, a, b, c });
    }
    Ok(binomial(top, a) * binomial(b + c, b))
}

/// Zero-convention multinomial for sums whose top is implied by the parts.
fn trinomial(a: i64, b: i64, c: i64) -> BigUint {
    multinomial(a + b + c, a, b, c).expect("top is the sum of the parts")
}

fn non_negative(name: &'static str, value: i64) -> Result<usize, CountError> {
    usize::try_from(value).map_err(|_| CountError::NegativeArgument { name, value })
}

fn at_least(name: &'static str, value: i64, min: i64) -> Result<(), CountError> {
    if value < min {
        return Err(CountError::OutOfRange { name, value, min });
    }
    Ok(())
}

fn to_natural(formula: &'static str, value: BigInt) -> Result<BigUint, CountError> {
    value.to_biguint().ok_or_else(|| {
        CountError::Inconsistent(format!("{formula} evaluated to the negative value {value}"))
    })
}

fn rational_to_natural(formula: &'static str, value: BigRational) -> Result<BigUint, CountError> {
    if !value.is_integer() {
        return Err(CountError::NonIntegral {
            formula,
            value: value.to_string(),
        });
    }
    to_natural(formula, value.to_integer())
}

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Which count a [`CountTable`] holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountKind {
    /// Paths avoiding `NE` and `EN`.
    H,
    /// North-East paths avoiding `EENN`.
    B,
    /// Paths whose augmented path avoids `D` and `EENN`.
    A,
    /// All Delannoy paths.
    Delannoy,
    /// Delannoy paths in the region `y >= k x`.
    Region(u32),
}

/// A rectangular table of counts indexed by the endpoint `(n, m)`.
///
/// Lookups outside the table's nonnegative quadrant return zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    kind: CountKind,
    rows: Vec<Vec<BigUint>>,
}

impl CountTable {
    pub fn kind(&self) -> CountKind {
        self.kind
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn max_m(&self) -> usize {
        self.rows[0].len() - 1
    }

    /// The stored value, zero for negative indices. Panics past the table's bounds.
    pub fn get(&self, n: i64, m: i64) -> BigUint {
        if n < 0 || m < 0 {
            return BigUint::zero();
        }
        self.rows[n as usize][m as usize].clone()
    }

    /// `h(n, m)` for the whole rectangle, by a DP over `(x, y, last step)`
    /// that forbids the transitions `N -> E` and `E -> N`.
    pub fn h(max_n: usize, max_m: usize) -> Self {
        // states: 0 = start, 1 = last E, 2 = last N, 3 = last D
        let mut t = vec![vec![[(); 4].map(|_| BigUint::zero()); max_m + 1]; max_n + 1];
        t[0][0][0] = BigUint::one();
        for x in 0..=max_n {
            for y in 0..=max_m {
                if x > 0 {
                    // arrive by E: previous step must not be N
                    let v = &t[x - 1][y];
                    let s = &v[0] + &v[1] + &v[3];
                    t[x][y][1] = s;
                }
                if y > 0 {
                    let v = &t[x][y - 1];
                    let s = &v[0] + &v[2] + &v[3];
                    t[x][y][2] = s;
                }
                if x > 0 && y > 0 {
                    let v = &t[x - 1][y - 1];
                    let s = v.iter().sum::<BigUint>();
                    t[x][y][3] = s;
                }
            }
        }
        let rows = t
            .into_iter()
            .map(|row| row.into_iter().map(|c| c.into_iter().sum()).collect())
            .collect();
        CountTable {
            kind: CountKind::H,
            rows,
        }
    }

    /// `b(n, m)` for the whole rectangle, by a DP over North-East words that
    /// tracks progress into the factor `EENN`.
    pub fn b(max_n: usize, max_m: usize) -> Self {
        // progress: 0 = none, 1 = "E", 2 = "EE", 3 = "EEN"
        let mut t = vec![vec![[(); 4].map(|_| BigUint::zero()); max_m + 1]; max_n + 1];
        t[0][0][0] = BigUint::one();
        for x in 0..=max_n {
            for y in 0..=max_m {
                if x > 0 {
                    let v = t[x - 1][y].clone();
                    t[x][y][1] = &v[0] + &v[3];
                    t[x][y][2] = &v[1] + &v[2];
                }
                if y > 0 {
                    let v = t[x][y - 1].clone();
                    t[x][y][0] = &v[0] + &v[1];
                    t[x][y][3] = v[2].clone();
                }
            }
        }
        let rows = t
            .into_iter()
            .map(|row| row.into_iter().map(|c| c.into_iter().sum()).collect())
            .collect();
        CountTable {
            kind: CountKind::B,
            rows,
        }
    }

    /// `a(n, m) = b(n, m) - b(n - 1, m - 1)` over the rectangle.
    pub fn a(max_n: usize, max_m: usize) -> Self {
        let b = CountTable::b(max_n, max_m);
        let rows = (0..=max_n as i64)
            .map(|n| {
                (0..=max_m as i64)
                    .map(|m| b.get(n, m) - b.get(n - 1, m - 1))
                    .collect()
            })
            .collect();
        CountTable {
            kind: CountKind::A,
            rows,
        }
    }

    /// Delannoy numbers by `D(n, m) = D(n-1, m) + D(n, m-1) + D(n-1, m-1)`.
    pub fn delannoy(max_n: usize, max_m: usize) -> Self {
        let mut rows = vec![vec![BigUint::zero(); max_m + 1]; max_n + 1];
        for x in 0..=max_n {
            for y in 0..=max_m {
                rows[x][y] = if x == 0 || y == 0 {
                    BigUint::one()
                } else {
                    &rows[x - 1][y] + &rows[x][y - 1] + &rows[x - 1][y - 1]
                };
            }
        }
        CountTable {
            kind: CountKind::Delannoy,
            rows,
        }
    }

    /// Delannoy paths whose vertices all satisfy `y >= k x`, by a lattice DP
    /// that zeroes every vertex outside the region.
    pub fn region(max_n: usize, max_m: usize, k: u32) -> Self {
        let mut rows = vec![vec![BigUint::zero(); max_m + 1]; max_n + 1];
        for x in 0..=max_n {
            for y in 0..=max_m {
                if (y as u64) < u64::from(k) * x as u64 {
                    continue;
                }
                rows[x][y] = if x == 0 && y == 0 {
                    BigUint::one()
                } else {
                    let mut s = BigUint::zero();
                    if x > 0 {
                        s += &rows[x - 1][y];
                    }
                    if y > 0 {
                        s += &rows[x][y - 1];
                    }
                    if x > 0 && y > 0 {
                        s += &rows[x - 1][y - 1];
                    }
                    s
                };
            }
        }
        CountTable {
            kind: CountKind::Region(k),
            rows,
        }
    }
}

/// Delannoy number, evaluated as both the multinomial sum and the
/// binomial-power sum. Disagreement is reported as an error.
pub fn delannoy_count(n: i64, m: i64) -> Result<BigUint, CountError> {
    non_negative("n", n)?;
    non_negative("m", m)?;
    let by_multinomial: BigUint = (0..=n).map(|d| trinomial(n - d, m - d, d)).sum();
    let by_binomial: BigUint = (0..=n)
        .map(|j| binomial(n, j) * binomial(m, j) * (BigUint::one() << j as usize))
        .sum();
    if by_multinomial != by_binomial {
        return Err(CountError::Inconsistent(format!(
            "Delannoy({n}, {m}): multinomial sum {by_multinomial} != binomial sum {by_binomial}"
        )));
    }
    Ok(by_multinomial)
}

/// Delannoy number via the three-term lattice recurrence.
pub fn delannoy_dp(n: i64, m: i64) -> Result<BigUint, CountError> {
    let (nu, mu) = (non_negative("n", n)?, non_negative("m", m)?);
    Ok(CountTable::delannoy(nu, mu).get(n, m))
}

/// `h(n, m)`: paths avoiding peaks and valleys, by the last-step automaton DP.
pub fn h_dp(n: i64, m: i64) -> Result<BigUint, CountError> {
    let (nu, mu) = (non_negative("n", n)?, non_negative("m", m)?);
    Ok(CountTable::h(nu, mu).get(n, m))
}

/// `h(n, m)` by the alternating sum of multinomial differences.
pub fn h_closed(n: i64, m: i64) -> Result<BigUint, CountError> {
    non_negative("n", n)?;
    non_negative("m", m)?;
    let mut total = BigInt::zero();
    let mut i = 0;
    // the zero convention makes every term vanish once n - 2i < 0
    while n - 2 * i >= 0 {
        let lead = trinomial(n - 2 * i, m - 2 * i, i);
        let tail = trinomial(n - 1 - 2 * i, m - 1 - 2 * i, i);
        let term = BigInt::from(lead) - BigInt::from(tail);
        if i % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
        i += 1;
    }
    to_natural("h closed form", total)
}

/// `b(n, m)`: North-East paths avoiding deep valleys, by the automaton DP.
pub fn b_dp(n: i64, m: i64) -> Result<BigUint, CountError> {
    let (nu, mu) = (non_negative("n", n)?, non_negative("m", m)?);
    Ok(CountTable::b(nu, mu).get(n, m))
}

/// `b(n, m)` by inclusion-exclusion over the number of deep valleys.
pub fn b_closed(n: i64, m: i64) -> Result<BigUint, CountError> {
    non_negative("n", n)?;
    non_negative("m", m)?;
    to_natural("b closed form", b_signed(n, m))
}

fn b_signed(n: i64, m: i64) -> BigInt {
    let mut total = BigInt::zero();
    let mut i = 0;
    while n - 2 * i >= 0 && m - 2 * i >= 0 {
        let term = BigInt::from(trinomial(n - 2 * i, m - 2 * i, i));
        if i % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
        i += 1;
    }
    total
}

/// `a(n, m) = b(n, m) - b(n - 1, m - 1)` with `b = 0` off the quadrant.
pub fn a_count(n: i64, m: i64) -> Result<BigUint, CountError> {
    non_negative("n", n)?;
    non_negative("m", m)?;
    to_natural("a difference", b_signed(n, m) - b_signed(n - 1, m - 1))
}

/// Number of k-Schröder paths of size `n`, evaluated as both stated sums in
/// exact rational arithmetic.
pub fn schroeder_count(n: i64, k: i64) -> Result<BigUint, CountError> {
    non_negative("n", n)?;
    at_least("k", k, 1)?;
    let kn = k * n;
    let first: BigRational = (0..=n)
        .map(|d| {
            ratio(1, kn - d + 1) * BigRational::from_integer(trinomial(kn - d, n - d, d).into())
        })
        .sum();
    let first = rational_to_natural("k-Schröder multinomial sum", first)?;
    if n >= 1 {
        let second: BigRational = (1..=n)
            .map(|j| {
                let t = binomial(kn, j - 1) * binomial(n, j) * (BigUint::one() << j as usize);
                BigRational::from_integer(t.into())
            })
            .sum::<BigRational>()
            * ratio(1, n);
        let second = rational_to_natural("k-Schröder binomial sum", second)?;
        if first != second {
            return Err(CountError::Inconsistent(format!(
                "k-Schröder({n}, k={k}): {first} != {second}"
            )));
        }
    }
    Ok(first)
}

/// Number of Delannoy paths from the origin to `(n, m)` in the region
/// `y >= k x`, evaluated as both stated sums; zero when `m < k n`.
pub fn schroeder_rect_count(n: i64, m: i64, k: i64) -> Result<BigUint, CountError> {
    non_negative("n", n)?;
    non_negative("m", m)?;
    at_least("k", k, 1)?;
    if m < k * n {
        return Ok(BigUint::zero());
    }
    let lead = m - k * n + 1;
    let first: BigRational = (0..=n)
        .map(|d| {
            ratio(lead, m - d + 1) * BigRational::from_integer(trinomial(m - d, n - d, d).into())
        })
        .sum();
    let first = rational_to_natural("rectangle multinomial sum", first)?;
    if n >= 1 {
        let second: BigRational = (1..=n)
            .map(|j| {
                let t = binomial(m, j - 1) * binomial(n, j) * (BigUint::one() << j as usize);
                BigRational::from_integer(t.into())
            })
            .sum::<BigRational>()
            * ratio(lead, n);
        let second = rational_to_natural("rectangle binomial sum", second)?;
        if first != second {
            return Err(CountError::Inconsistent(format!(
                "region count({n}, {m}, k={k}): {first} != {second}"
            )));
        }
    }
    Ok(first)
}

/// A polynomial in `x` and `y` with integer coefficients, keyed by `(i, j)`
/// for the monomial `x^i y^j`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BivariatePoly {
    terms: BTreeMap<(usize, usize), BigInt>,
}

impl BivariatePoly {
    pub fn one() -> Self {
        BivariatePoly::default().with_term(0, 0, 1)
    }

    /// `1 - x y`.
    pub fn one_minus_xy() -> Self {
        BivariatePoly::one().with_term(1, 1, -1)
    }

    pub fn with_term(mut self, i: usize, j: usize, coeff: impl Into<BigInt>) -> Self {
        *self.terms.entry((i, j)).or_default() += coeff.into();
        self
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }
}

/// Coefficients `c(n, m)` for `0 <= n, m <= order` of
/// `numerator / (1 - x - y + x^2 y^2)`, from the recurrence the denominator
/// implies.
pub fn expand_bivariate(numerator: &BivariatePoly, order: usize) -> Vec<Vec<BigInt>> {
    let mut c = vec![vec![BigInt::zero(); order + 1]; order + 1];
    for n in 0..=order {
        for m in 0..=order {
            let mut v = numerator.coeff(n, m);
            if n > 0 {
                v += &c[n - 1][m];
            }
            if m > 0 {
                v += &c[n][m - 1];
            }
            if n > 1 && m > 1 {
                v -= &c[n - 2][m - 2];
            }
            c[n][m] = v;
        }
    }
    c
}
