//! Truncated formal power series over the integers and the generating
//! functions of k-Schröder paths avoiding peaks and valleys.
//!
//! For a fixed `k`, `F` counts the paths by size, `F_D` those ending with a
//! diagonal step and `F_E` those ending with an east step. `F_D` is the
//! unique series without constant term satisfying
//!
//! ```text
//! F_D = x (1 + F_D)^(k+1) - x^2 (1 + F_D)^(2k-1)
//! ```
//!
//! and both `F` and `F_E` are polynomials in `x` and `F_D`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::counting::binomial;
use crate::error::SeriesError;

/// A power series known modulo `x^(order + 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<BigInt>,
}

impl PowerSeries {
    /// Builds a series from its first coefficients; the truncation order is
    /// `coeffs.len() - 1`.
    ///
    /// # Panics
    ///
    /// If `coeffs` is empty.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least one coefficient"
        );
        PowerSeries { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        PowerSeries::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn constant(c: impl Into<BigInt>, order: usize) -> Self {
        let mut s = PowerSeries::zero(order);
        s.coeffs[0] = c.into();
        s
    }

    pub fn one(order: usize) -> Self {
        PowerSeries::constant(1, order)
    }

    /// `c x^power`, which is zero when `power > order`.
    pub fn monomial(c: impl Into<BigInt>, power: usize, order: usize) -> Self {
        let mut s = PowerSeries::zero(order);
        if power <= order {
            s.coeffs[power] = c.into();
        }
        s
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        PowerSeries::monomial(1, 1, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// The coefficient of `x^n`. Panics when `n` exceeds the order.
    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        PowerSeries {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    /// Multiplies by `x^s`, keeping the order.
    pub fn shift(&self, s: usize) -> Self {
        let mut out = PowerSeries::zero(self.order());
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + s > self.order() {
                break;
            }
            out.coeffs[i + s] = c.clone();
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = PowerSeries::one(self.order());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self(inner(x))` for `inner` without constant term, by Horner's rule.
    pub fn compose(&self, inner: &PowerSeries) -> Result<Self, SeriesError> {
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::InnerConstantTerm);
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = PowerSeries::zero(order);
        for c in self.coeffs[..=order].iter().rev() {
            acc = &(&acc * &inner) + &PowerSeries::constant(c.clone(), order);
        }
        Ok(acc)
    }

    /// Index of the first coefficient where two series differ, up to the
    /// smaller order.
    pub fn first_difference(&self, other: &PowerSeries) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
    }

    /// Solves `s = step(s)` from `s = 0`, assuming `step` raises the valuation
    /// of differences by one, as it does when the right side carries a factor
    /// `x`. After `order + 1` rounds every coefficient is fixed; one more round
    /// confirms it.
    pub fn fixed_point(
        order: usize,
        step: impl Fn(&PowerSeries) -> PowerSeries,
    ) -> Result<Self, SeriesError> {
        let mut s = PowerSeries::zero(order);
        for _ in 0..=order {
            s = step(&s);
        }
        if step(&s) != s {
            return Err(SeriesError::NotConverged { order });
        }
        Ok(s)
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

fn zip_with(
    a: &PowerSeries,
    b: &PowerSeries,
    op: impl Fn(&BigInt, &BigInt) -> BigInt,
) -> PowerSeries {
    PowerSeries {
        coeffs: a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| op(x, y))
            .collect(),
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;

    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        zip_with(self, rhs, |a, b| a + b)
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;

    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        zip_with(self, rhs, |a, b| a - b)
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;

    fn neg(self) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;

    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        let mut out = PowerSeries::zero(order);
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }
}

/// `F_D` for the region `y >= k x`, to the given order.
pub fn solve_fd(k: u32, order: usize) -> Result<PowerSeries, SeriesError> {
    if k == 0 {
        return Err(SeriesError::ZeroK);
    }
    let one = PowerSeries::one(order);
    PowerSeries::fixed_point(order, |fd| {
        let base = &one + fd;
        &base.pow(k + 1).shift(1) - &base.pow(2 * k - 1).shift(2)
    })
}

/// The three generating functions for one `k`, sharing a truncation order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTriple {
    pub k: u32,
    /// All paths, `F`.
    pub f: PowerSeries,
    /// Paths ending with `D`, `F_D`.
    pub fd: PowerSeries,
    /// Paths ending with `E`, `F_E`.
    pub fe: PowerSeries,
}

impl SeriesTriple {
    pub fn order(&self) -> usize {
        self.f.order()
    }

    /// Checks the decomposition identities
    /// `F_D = x (1 + F_D)^(k-1) F`, `F_E = x (1 + F_D)^k (F - 1)` and
    /// `F = 1 + F_D + F_E`.
    pub fn check_identities(&self) -> Result<(), SeriesError> {
        let order = self.order();
        let one = PowerSeries::one(order);
        let base = &one + &self.fd;
        let checks = [
            (
                "F_D = x (1 + F_D)^(k-1) F",
                &base.pow(self.k - 1) * &self.f,
                &self.fd,
            ),
            (
                "F_E = x (1 + F_D)^k (F - 1)",
                &base.pow(self.k) * &(&self.f - &one),
                &self.fe,
            ),
        ];
        for (identity, rhs, lhs) in checks {
            if let Some(index) = lhs.first_difference(&rhs.shift(1)) {
                return Err(SeriesError::IdentityViolated { identity, index });
            }
        }
        let sum = &(&one + &self.fd) + &self.fe;
        if let Some(index) = self.f.first_difference(&sum) {
            return Err(SeriesError::IdentityViolated {
                identity: "F = 1 + F_D + F_E",
                index,
            });
        }
        let constants = [(&self.f, 1), (&self.fd, 0), (&self.fe, 0)];
        if constants
            .iter()
            .any(|(s, c)| *s.coeff(0) != BigInt::from(*c))
        {
            return Err(SeriesError::IdentityViolated {
                identity: "constant terms 1, 0, 0",
                index: 0,
            });
        }
        Ok(())
    }
}

/// Solves for `F_D` and derives `F = (1 + F_D)^2 - x (1 + F_D)^k` and
/// `F_E = (1 + F_D) F_D - x (1 + F_D)^k`, checking the decomposition
/// identities.
pub fn assemble_triple(k: u32, order: usize) -> Result<SeriesTriple, SeriesError> {
    let fd = solve_fd(k, order)?;
    let one = PowerSeries::one(order);
    let base = &one + &fd;
    let tail = base.pow(k).shift(1);
    let f = &base.pow(2) - &tail;
    let fe = &(&base * &fd) - &tail;
    let triple = SeriesTriple { k, f, fd, fe };
    triple.check_identities()?;
    Ok(triple)
}

/// The Catalan number `C(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> BigInt {
    let n = n as i64;
    BigInt::from(binomial(2 * n, n)) / BigInt::from(n + 1)
}

/// Coefficients of `x^n` in `F`, `F_D`, `F_E` for `k = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedK1 {
    pub f: BigInt,
    pub fd: BigInt,
    pub fe: BigInt,
}

/// Evaluates the Catalan-weighted binomial sums for `k = 1`.
pub fn closed_k1(n: u64) -> ClosedK1 {
    let n = n as i64;
    let mut out = ClosedK1 {
        f: BigInt::zero(),
        fd: BigInt::zero(),
        fe: BigInt::zero(),
    };
    // every binomial below vanishes once 2m > n
    for m in 0..=n / 2 + 1 {
        let c = catalan(m as u64);
        out.f += &c * BigInt::from(binomial(n + m, 3 * m));
        out.fd += &c * BigInt::from(binomial(n + m - 1, 3 * m));
        if m >= 1 {
            out.fe += &c * BigInt::from(binomial(n + m - 1, 3 * m - 1));
        }
    }
    out
}

/// Coefficients of `x^n` in `F` and `F_D` for `k = 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedK2 {
    pub f: BigInt,
    pub fd: BigInt,
}

fn signed(parity: i64, v: BigRational) -> BigRational {
    if parity.rem_euclid(2) == 0 {
        v
    } else {
        -v
    }
}

fn integral(formula: &'static str, v: BigRational) -> Result<BigInt, SeriesError> {
    if !v.is_integer() {
        return Err(SeriesError::NonIntegral {
            formula,
            value: v.to_string(),
        });
    }
    Ok(v.to_integer())
}

/// Evaluates the alternating sums for `k = 2` in exact rational arithmetic.
pub fn closed_k2(n: u64) -> Result<ClosedK2, SeriesError> {
    let n = n as i64;
    let mut f = BigRational::zero();
    let mut fd = BigRational::zero();
    // terms vanish unless 0 <= n - m <= m + 1
    for m in 0..=n {
        let rf = BigRational::new(
            BigInt::from(binomial(3 * m + 1, m) * binomial(m + 1, n - m)),
            BigInt::from(m + 1),
        );
        f += signed(n - m, rf);
        if m >= 1 {
            let rd = BigRational::new(
                BigInt::from(binomial(3 * m, m - 1) * binomial(m, n - m)),
                BigInt::from(m),
            );
            fd += signed(n - m, rd);
        }
    }
    Ok(ClosedK2 {
        f: integral("k = 2 sum for F", f)?,
        fd: integral("k = 2 sum for F_D", fd)?,
    })
}

/// Outcome of [`radical_identity_check_k1`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalCheck {
    pub holds: bool,
    /// First coefficient index where an identity fails.
    pub first_failure: Option<usize>,
}

/// Checks, for `k = 1` and up to `order`, the quadratic identity
/// `((1 - x)^2 - 2 x^2 F)^2 = (1 - x)^4 - 4 x^2 (1 - x)` that characterises
/// the radical expression for `F`, together with `F_D = x F` and
/// `F_E = (1 - x) F - 1`.
pub fn radical_identity_check_k1(order: usize) -> Result<RadicalCheck, SeriesError> {
    Ok(check_radical_identity(&assemble_triple(1, order)?))
}

/// The check behind [`radical_identity_check_k1`], applied to a given triple.
pub fn check_radical_identity(triple: &SeriesTriple) -> RadicalCheck {
    let order = triple.order();
    let one = PowerSeries::one(order);
    let one_minus_x = PowerSeries::from_coeffs(
        (0..=order)
            .map(|i| match i {
                0 => BigInt::one(),
                1 => -BigInt::one(),
                _ => BigInt::zero(),
            })
            .collect(),
    );
    let sq = one_minus_x.pow(2);
    let lhs = (&sq - &triple.f.shift(2).scale(&BigInt::from(2))).pow(2);
    let rhs = &one_minus_x.pow(4) - &one_minus_x.shift(2).scale(&BigInt::from(4));
    let fd = triple.f.shift(1);
    let fe = &(&one_minus_x * &triple.f) - &one;
    let first_failure = [
        lhs.first_difference(&rhs),
        triple.fd.first_difference(&fd),
        triple.fe.first_difference(&fe),
    ]
    .into_iter()
    .flatten()
    .min();
    RadicalCheck {
        holds: first_failure.is_none(),
        first_failure,
    }
}
