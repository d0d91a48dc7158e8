//! Truncated formal power series over arbitrary-precision integers, plus the
//! standard q-series constructors: Pochhammer products, theta sums, eta
//! quotients, power substitution and arithmetic-progression slicing.
//!
//! Every value carries an explicit truncation order `N`: coefficients of
//! `q^k` for `k < N` are known exactly, everything above is unknown. Binary
//! operations meet at the minimum of the two orders.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Errors from series construction and inversion.
#[derive(Debug, Clone, PartialEq)]
pub enum QSeriesError {
    /// Inversion requires a constant term of +1 or -1.
    NonUnitConstant(BigInt),
    /// Theta sum `a n^2 + b n` would produce negative exponents (`|b| > a`).
    ThetaExponent { a: u32, b: i64 },
}

impl fmt::Display for QSeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QSeriesError::NonUnitConstant(c) => {
                write!(
                    f,
                    "cannot invert series with constant term {c} (must be +1 or -1)"
                )
            }
            QSeriesError::ThetaExponent { a, b } => {
                write!(
                    f,
                    "theta sum with a = {a}, b = {b} has negative exponents (|b| > a)"
                )
            }
        }
    }
}

impl std::error::Error for QSeriesError {}

/// A univariate formal power series with integer coefficients, truncated at
/// an explicit order.
///
/// `coeffs[k]` is the coefficient of `q^k`; the order is `coeffs.len()`.
/// Comparison (`==`) is coefficient-wise up to the *common* order, matching
/// how identities are certified: both sides are built at a declared order and
/// compared there.
#[derive(Clone, Debug)]
pub struct IntSeries {
    coeffs: Vec<BigInt>,
}

impl PartialEq for IntSeries {
    fn eq(&self, other: &Self) -> bool {
        self.first_mismatch(other).is_none()
    }
}

impl IntSeries {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        IntSeries { coeffs }
    }

    /// The zero series of the given order.
    pub fn zero(order: usize) -> Self {
        IntSeries {
            coeffs: vec![BigInt::zero(); order],
        }
    }

    /// The constant series 1.
    pub fn one(order: usize) -> Self {
        Self::constant(1, order)
    }

    pub fn constant(c: i64, order: usize) -> Self {
        Self::monomial(c, 0, order)
    }

    /// `c * q^power`, or zero if the power is at or above the order.
    pub fn monomial(c: i64, power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power < order {
            s.coeffs[power] = BigInt::from(c);
        }
        s
    }

    /// Number of known coefficients.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^k`; panics if `k` is at or above the order.
    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    pub fn set_coeff(&mut self, k: usize, value: BigInt) {
        self.coeffs[k] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Drop coefficients at or above `order`. Never extends: unknown
    /// coefficients cannot be invented.
    pub fn truncate(mut self, order: usize) -> Self {
        assert!(
            order <= self.coeffs.len(),
            "cannot extend a series from order {} to {}",
            self.coeffs.len(),
            order
        );
        self.coeffs.truncate(order);
        self
    }

    /// First exponent (below the common order) where coefficients differ.
    pub fn first_mismatch(&self, other: &Self) -> Option<(usize, BigInt, BigInt)> {
        let n = self.order().min(other.order());
        (0..n)
            .find(|&k| self.coeffs[k] != other.coeffs[k])
            .map(|k| (k, self.coeffs[k].clone(), other.coeffs[k].clone()))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        IntSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by `q^t`. The result has order `N + t`: all of its
    /// coefficients below that are determined by the input.
    pub fn shift_up(&self, t: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); self.order() + t];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k + t] = c.clone();
        }
        IntSeries { coeffs }
    }

    /// Multiply in place by the binomial `1 + sign * q^m` (m >= 1).
    fn mul_binomial(&mut self, m: usize, sign: i8) {
        let n = self.coeffs.len();
        for k in (m..n).rev() {
            let lower = self.coeffs[k - m].clone();
            if sign > 0 {
                self.coeffs[k] += lower;
            } else {
                self.coeffs[k] -= lower;
            }
        }
    }

    /// Multiplicative inverse to the truncation order. The constant term must
    /// be +1 or -1 so that all result coefficients stay integral.
    pub fn invert(&self) -> Result<Self, QSeriesError> {
        let u = self.coeffs.first().cloned().unwrap_or_else(BigInt::zero);
        if !u.is_one() && u != -BigInt::one() {
            return Err(QSeriesError::NonUnitConstant(u));
        }
        let n = self.order();
        let mut inv = vec![BigInt::zero(); n];
        // u * u = 1, so 1/u = u.
        inv[0] = u.clone();
        for k in 1..n {
            let mut acc = BigInt::zero();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &inv[k - i];
                }
            }
            inv[k] = -&u * acc;
        }
        Ok(IntSeries { coeffs: inv })
    }

    /// Integer power; negative exponents go through [`IntSeries::invert`].
    pub fn pow(&self, e: i32) -> Result<Self, QSeriesError> {
        if e < 0 {
            return self.pow(-e)?.invert();
        }
        let mut result = IntSeries::one(self.order());
        let mut base = self.clone();
        let mut e = e as u32;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }
}

impl Add for &IntSeries {
    type Output = IntSeries;
    fn add(self, rhs: &IntSeries) -> IntSeries {
        let n = self.order().min(rhs.order());
        IntSeries {
            coeffs: (0..n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        }
    }
}

impl Sub for &IntSeries {
    type Output = IntSeries;
    fn sub(self, rhs: &IntSeries) -> IntSeries {
        let n = self.order().min(rhs.order());
        IntSeries {
            coeffs: (0..n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        }
    }
}

impl Neg for &IntSeries {
    type Output = IntSeries;
    fn neg(self) -> IntSeries {
        IntSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntSeries {
    type Output = IntSeries;
    fn mul(self, rhs: &IntSeries) -> IntSeries {
        let n = self.order().min(rhs.order());
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        IntSeries { coeffs }
    }
}

impl fmt::Display for IntSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if k == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order())
    }
}

/// Sign of the argument in an infinite Pochhammer product.
///
/// `Minus` builds `(q^c; q^c)_inf` (factors `1 - q^{ck}`), `Plus` builds
/// `(-q^c; q^c)_inf` (factors `1 + q^{ck}`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// `(±q^c; q^c)_inf^exponent` truncated at `order`, as a finite product over
/// the factors `1 ± q^{ck}` with `ck < order`.
pub fn pochhammer_inf(c: u32, sign: Sign, exponent: i32, order: usize) -> IntSeries {
    assert!(c >= 1, "pochhammer step must be positive");
    let mut base = IntSeries::one(order);
    let s = if sign == Sign::Plus { 1 } else { -1 };
    let mut m = c as usize;
    while m < order {
        base.mul_binomial(m, s);
        m += c as usize;
    }
    match exponent {
        1 => base,
        // Unit constant term, so pow/invert cannot fail.
        e => base
            .pow(e)
            .expect("pochhammer product has unit constant term"),
    }
}

/// Finite Pochhammer product `(q^c; q^c)_m = prod_{k=1..m} (1 - q^{ck})`.
pub fn pochhammer_fin(c: u32, m: u32, order: usize) -> IntSeries {
    assert!(c >= 1, "pochhammer step must be positive");
    let mut s = IntSeries::one(order);
    for k in 1..=m as usize {
        let p = k * c as usize;
        if p >= order {
            break;
        }
        s.mul_binomial(p, -1);
    }
    s
}

/// Lattice theta sum `sum_{n in Z} s(n) q^{a n^2 + b n}` with
/// `s(n) = (-1)^n` when `alternating`, else 1. Requires `|b| <= a` so that
/// every exponent is non-negative.
pub fn theta_sum(
    a: u32,
    b: i64,
    alternating: bool,
    order: usize,
) -> Result<IntSeries, QSeriesError> {
    if b.abs() > a as i64 {
        return Err(QSeriesError::ThetaExponent { a, b });
    }
    let mut s = IntSeries::zero(order);
    let mut accumulate = |n: i64| -> bool {
        let e = a as i64 * n * n + b * n;
        debug_assert!(e >= 0);
        if (e as usize) < order {
            let sgn = if alternating && n.rem_euclid(2) == 1 {
                -1
            } else {
                1
            };
            s.coeffs[e as usize] += sgn;
            true
        } else {
            false
        }
    };
    let mut n = 0i64;
    while accumulate(n) {
        n += 1;
    }
    let mut n = -1i64;
    while accumulate(n) {
        n -= 1;
    }
    Ok(s)
}

/// Substitute `q -> q^k`: coefficient of `q^j` moves to `q^{jk}`. The result
/// order is `k * order(a)`, every gap coefficient being exactly zero.
pub fn substitute_power(a: &IntSeries, k: usize) -> IntSeries {
    assert!(k >= 1, "substitution power must be positive");
    let mut coeffs = vec![BigInt::zero(); a.order() * k];
    for (j, c) in a.coeffs().iter().enumerate() {
        coeffs[j * k] = c.clone();
    }
    IntSeries::from_coeffs(coeffs)
}

/// Extract the arithmetic progression `r n + s`: the result has
/// `b[n] = a[r n + s]` and order `ceil((N - s) / r)`.
pub fn slice(a: &IntSeries, r: usize, s: usize) -> IntSeries {
    assert!(r >= 1 && s < r, "slice requires r >= 1 and 0 <= s < r");
    let n = a.order();
    let out = if n > s { (n - s).div_ceil(r) } else { 0 };
    IntSeries::from_coeffs((0..out).map(|k| a.coeffs[r * k + s].clone()).collect())
}

/// A symbolic product `constant * q^shift * prod (q^c; q^c)_inf^e`.
///
/// Each factor has constant term 1, so any integer exponent (negative
/// included) evaluates to an integer series.
#[derive(Clone, Debug, PartialEq)]
pub struct EtaQuotient {
    pub constant: BigInt,
    pub q_shift: usize,
    pub factors: Vec<(u32, i32)>,
}

impl EtaQuotient {
    pub fn new(constant: i64, factors: &[(u32, i32)]) -> Self {
        Self::shifted(constant, 0, factors)
    }

    pub fn shifted(constant: i64, q_shift: usize, factors: &[(u32, i32)]) -> Self {
        assert!(
            factors.iter().all(|&(c, _)| c >= 1),
            "eta factor steps must be positive"
        );
        assert!(
            !factors.is_empty() || constant != 0,
            "an eta quotient needs factors or a nonzero constant"
        );
        EtaQuotient {
            constant: BigInt::from(constant),
            q_shift,
            factors: factors.to_vec(),
        }
    }

    /// Expand to an [`IntSeries`] of exactly the requested order.
    pub fn eval(&self, order: usize) -> IntSeries {
        let mut s = IntSeries::constant(1, order);
        for &(c, e) in &self.factors {
            if e != 0 {
                s = &s * &pochhammer_inf(c, Sign::Minus, e, order);
            }
        }
        s = s.scale(&self.constant);
        if self.q_shift > 0 {
            s = s.shift_up(self.q_shift).truncate(order);
        }
        s
    }
}

/// `1 / (q; q)_inf`: coefficients are the partition numbers `p(n)`.
pub fn partition_gf(order: usize) -> IntSeries {
    pochhammer_inf(1, Sign::Minus, -1, order)
}

/// `(-q; q)_inf`: coefficients count partitions into distinct parts, `d(n)`.
pub fn distinct_gf(order: usize) -> IntSeries {
    pochhammer_inf(1, Sign::Plus, 1, order)
}

/// `(-q; q)_inf / (q; q)_inf`: coefficients count jagged 01-partitions, `j(n)`.
pub fn jagged_gf(order: usize) -> IntSeries {
    &distinct_gf(order) * &partition_gf(order)
}

/// `theta4(q) = sum_{n in Z} (-1)^n q^{n^2}`; its reciprocal is [`jagged_gf`].
pub fn theta4(order: usize) -> IntSeries {
    theta_sum(1, 0, true, order).expect("theta4 parameters are valid")
}

/// `theta3(q) = sum_{n in Z} q^{n^2}`.
pub fn theta3(order: usize) -> IntSeries {
    theta_sum(1, 0, false, order).expect("theta3 parameters are valid")
}

/// Convenience for tests and small tables: coefficient as i64.
pub fn coeff_i64(s: &IntSeries, k: usize) -> i64 {
    s.coeff(k).to_i64().expect("coefficient fits in i64")
}
