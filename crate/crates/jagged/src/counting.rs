//! Scalar counting for 01-partitions: the square recurrence, the
//! partition/distinct-parts convolution, the signed sum-of-squares expansion,
//! length-graded tables, the hyperbolic estimate, and power-of-two
//! congruence prediction and verification.

use crate::qseries;
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use std::fmt;

/// Window of progression terms inspected when predicting congruences.
pub const PREDICTION_WINDOW: u64 = 64;

#[derive(Debug, Clone, PartialEq)]
pub enum CountingError {
    /// `congruence_predict` requires `1 <= s < r`.
    InvalidProgression { r: u64, s: u64 },
}

impl fmt::Display for CountingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CountingError::InvalidProgression { r, s } => {
                write!(
                    f,
                    "progression offset must satisfy 1 <= s < r (got r = {r}, s = {s})"
                )
            }
        }
    }
}

impl std::error::Error for CountingError {}

/// `j(0..=n_max)` from the recurrence `j(n) = 2 sum_{m>=1} (-1)^{m+1} j(n - m^2)`.
pub fn j_by_recurrence(n_max: usize) -> Vec<BigInt> {
    let mut j = Vec::with_capacity(n_max + 1);
    j.push(BigInt::one());
    for n in 1..=n_max {
        let mut acc = BigInt::zero();
        let mut m = 1usize;
        while m * m <= n {
            if m % 2 == 1 {
                acc += &j[n - m * m];
            } else {
                acc -= &j[n - m * m];
            }
            m += 1;
        }
        j.push(acc * 2);
    }
    j
}

/// Partition numbers `p(0..=n_max)`, read off the expansion of `1/(q;q)_inf`.
pub fn partition_numbers(n_max: usize) -> Vec<BigInt> {
    qseries::partition_gf(n_max + 1).coeffs().to_vec()
}

/// Distinct-part partition counts `d(0..=n_max)`, from `(-q;q)_inf`.
pub fn distinct_part_numbers(n_max: usize) -> Vec<BigInt> {
    qseries::distinct_gf(n_max + 1).coeffs().to_vec()
}

/// `j(0..=n_max)` as the Cauchy product `j(n) = sum_m p(n-m) d(m)`.
pub fn j_by_convolution(n_max: usize) -> Vec<BigInt> {
    let p = partition_numbers(n_max);
    let d = distinct_part_numbers(n_max);
    (0..=n_max)
        .map(|n| (0..=n).map(|m| &p[n - m] * &d[m]).sum())
        .collect()
}

/// `j(0..=n_max)` by direct expansion of `(-q;q)_inf / (q;q)_inf`.
pub fn j_by_series(n_max: usize) -> Vec<BigInt> {
    qseries::jagged_gf(n_max + 1).coeffs().to_vec()
}

/// One level of the signed square expansion: `p` squares contribute
/// `2^p * signed_count` to `j(n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareTerm {
    pub squares: u32,
    /// Signed count of ordered tuples `(n_1, ..., n_p)` of positive integers
    /// with `sum n_i^2 = n`, each weighted by `(-1)^{sum (n_i + 1)}`.
    pub signed_count: BigInt,
}

impl SquareTerm {
    pub fn contribution(&self) -> BigInt {
        &self.signed_count * (BigInt::one() << self.squares)
    }
}

/// Per-`p` breakdown of `j(n) = sum_p 2^p T_p(n)` over ordered tuples of
/// positive squares; only the non-vanishing levels are listed.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareBreakdown {
    pub n: usize,
    pub terms: Vec<SquareTerm>,
    pub total: BigInt,
}

pub fn j_by_squares(n: usize) -> SquareBreakdown {
    // prev[w] = signed count of ordered (p-1)-tuples of positive squares summing to w.
    let mut prev = vec![BigInt::zero(); n + 1];
    prev[0] = BigInt::one();
    let mut terms = Vec::new();
    let mut total = if n == 0 {
        BigInt::one()
    } else {
        BigInt::zero()
    };
    for p in 1..=n.max(1) as u32 {
        let mut cur = vec![BigInt::zero(); n + 1];
        for w in 1..=n {
            let mut acc = BigInt::zero();
            let mut k = 1usize;
            while k * k <= w {
                if !prev[w - k * k].is_zero() {
                    if k % 2 == 1 {
                        acc += &prev[w - k * k];
                    } else {
                        acc -= &prev[w - k * k];
                    }
                }
                k += 1;
            }
            cur[w] = acc;
        }
        if !cur[n].is_zero() {
            let term = SquareTerm {
                squares: p,
                signed_count: cur[n].clone(),
            };
            total += term.contribution();
            terms.push(term);
        }
        prev = cur;
    }
    SquareBreakdown { n, terms, total }
}

/// Table of `p(m, n)`: partitions of `n` into exactly `m` parts, by
/// `p(m, n) = p(m-1, n-1) + p(m, n-m)`.
pub fn partitions_exact_parts(m_max: usize, n_max: usize) -> Vec<Vec<BigInt>> {
    let mut t = vec![vec![BigInt::zero(); n_max + 1]; m_max + 1];
    t[0][0] = BigInt::one();
    for m in 1..=m_max {
        for n in 1..=n_max {
            let mut v = t[m - 1][n - 1].clone();
            if n >= m {
                v += &t[m][n - m];
            }
            t[m][n] = v;
        }
    }
    t
}

/// Coupled tables of `j(m, n)` (01-partitions of `n` with exactly `m` parts)
/// and `k(m, n)` (same, with no zero part):
/// `j(m, n) = j(m-2, n-1) + k(m, n)` and `k(m, n) = k(m-1, n-1) + j(m, n-m)`.
///
/// Base cases: `j(0, 0) = k(0, 0) = 1`, zero elsewhere on the borders, and
/// every negative index counts zero.
#[derive(Debug, Clone)]
pub struct JkTables {
    m_max: usize,
    n_max: usize,
    j: Vec<Vec<BigInt>>,
    k: Vec<Vec<BigInt>>,
}

impl JkTables {
    pub fn build(m_max: usize, n_max: usize) -> Self {
        let mut j = vec![vec![BigInt::zero(); n_max + 1]; m_max + 1];
        let mut k = vec![vec![BigInt::zero(); n_max + 1]; m_max + 1];
        j[0][0] = BigInt::one();
        k[0][0] = BigInt::one();
        for n in 1..=n_max {
            for m in 1..=m_max {
                let mut kv = k[m - 1][n - 1].clone();
                if n >= m {
                    kv += &j[m][n - m];
                }
                k[m][n] = kv;
                let mut jv = k[m][n].clone();
                if m >= 2 {
                    jv += &j[m - 2][n - 1];
                }
                j[m][n] = jv;
            }
        }
        JkTables { m_max, n_max, j, k }
    }

    pub fn m_max(&self) -> usize {
        self.m_max
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn j(&self, m: usize, n: usize) -> &BigInt {
        &self.j[m][n]
    }

    pub fn k(&self, m: usize, n: usize) -> &BigInt {
        &self.k[m][n]
    }

    /// Number of 01-partitions of `n` with at most `m` parts, as `k(m, n+m)`.
    /// The equivalent form `j(m, n+m) - j(m-2, n+m-1)` is checked in tests.
    pub fn j_at_most(&self, m: usize, n: usize) -> BigInt {
        assert!(m <= self.m_max && n + m <= self.n_max, "table too small");
        self.k[m][n + m].clone()
    }
}

/// The hyperbolic estimate `(cosh(pi sqrt n) - sinh(pi sqrt n)/(pi sqrt n)) / (4n)`
/// for `j(n)`. An approximation only, never used in exact pipelines.
pub fn ramanujan_estimate(n: u64) -> f64 {
    assert!(n >= 1);
    let x = std::f64::consts::PI * (n as f64).sqrt();
    (x.cosh() - x.sinh() / x) / (4.0 * n as f64)
}

/// Least numbers of positive squares summing to each of `0..=n_max`
/// (`table[0] = 0`; every positive entry is between 1 and 4).
pub fn min_squares_upto(n_max: usize) -> Vec<u32> {
    let mut t = vec![0u32; n_max + 1];
    for n in 1..=n_max {
        let mut best = u32::MAX;
        let mut k = 1usize;
        while k * k <= n {
            best = best.min(t[n - k * k] + 1);
            k += 1;
        }
        t[n] = best;
    }
    t
}

/// Least number of positive squares summing to `n` (1 to 4, by Lagrange).
pub fn min_squares(n: usize) -> u32 {
    assert!(n >= 1);
    min_squares_upto(n)[n]
}

/// A predicted power-of-two divisor for `j(rn + s)`.
///
/// The nominal analysis reads the signed square expansion levelwise:
/// `p_prime` is the least number of positive squares summing to `s` itself,
/// and `c` counts ordered compositions of `s` into `p_prime` parts drawn from
/// the nonzero square residues mod `r`. When `s` admits no composition into
/// `p_prime + 1` such parts, the lowest contributing level cannot be polluted
/// from above and the multiplier strengthens from `min(c, 2)` to `min(c, 4)`.
///
/// `window_min_squares` records the empirical minimum of `min_squares` over
/// the first [`PREDICTION_WINDOW`] progression members. When it is smaller
/// than `p_prime`, some member of the progression needs fewer squares than
/// `s` does, the nominal analysis does not cover the whole progression, and
/// the predicted modulus may fail verification (`congruence_verify` is the
/// ground truth).
#[derive(Debug, Clone, PartialEq)]
pub struct CongruencePrediction {
    pub r: u64,
    pub s: u64,
    pub p_prime: u32,
    pub c: u64,
    /// True when no (p_prime + 1)-part residue composition of `s` exists.
    pub strengthened: bool,
    pub modulus: u64,
    pub window_min_squares: u32,
}

impl CongruencePrediction {
    /// Whether the square-count premise holds across the inspected window.
    pub fn premise_holds(&self) -> bool {
        self.window_min_squares >= self.p_prime
    }
}

fn nonzero_square_residues(r: u64) -> Vec<u64> {
    let mut seen = vec![false; r as usize];
    for m in 1..=r {
        seen[((m * m) % r) as usize] = true;
    }
    (1..r).filter(|&v| seen[v as usize]).collect()
}

/// Ordered compositions of `target` into exactly `parts` summands from `allowed`.
fn compositions_into(parts: u32, target: u64, allowed: &[u64]) -> u64 {
    let t = target as usize;
    let mut ways = vec![0u64; t + 1];
    ways[0] = 1;
    for _ in 0..parts {
        let mut next = vec![0u64; t + 1];
        for w in 0..=t {
            if ways[w] > 0 {
                for &a in allowed {
                    if w + (a as usize) <= t {
                        next[w + a as usize] += ways[w];
                    }
                }
            }
        }
        ways = next;
    }
    ways[t]
}

pub fn congruence_predict(r: u64, s: u64) -> Result<CongruencePrediction, CountingError> {
    if s < 1 || s >= r {
        return Err(CountingError::InvalidProgression { r, s });
    }
    let window_max = (r * (PREDICTION_WINDOW - 1) + s) as usize;
    let ms = min_squares_upto(window_max);
    let p_prime = ms[s as usize];
    let window_min_squares = (0..PREDICTION_WINDOW)
        .map(|n| ms[(r * n + s) as usize])
        .min()
        .expect("window is non-empty");
    let residues = nonzero_square_residues(r);
    let c = compositions_into(p_prime, s, &residues);
    let strengthened = compositions_into(p_prime + 1, s, &residues) == 0;
    let a = if c == 0 {
        1
    } else if strengthened {
        c.min(4)
    } else {
        c.min(2)
    };
    Ok(CongruencePrediction {
        r,
        s,
        p_prime,
        c,
        strengthened,
        modulus: a << p_prime,
        window_min_squares,
    })
}

/// Outcome of scanning `modulus | j(rn + s)` over a progression.
#[derive(Debug, Clone, PartialEq)]
pub struct CongruenceReport {
    pub r: u64,
    pub s: u64,
    pub modulus: u64,
    pub upto: u64,
    pub checked: usize,
    /// First failing index `rn + s` with its `j` value, if any.
    pub counterexample: Option<(u64, BigInt)>,
}

impl CongruenceReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Check `modulus | j(rn + s)` for every progression member
/// `min_value <= rn + s <= upto`, against an exact `j` table
/// (`j_table[i] = j(i)`, which must extend past `upto`).
pub fn congruence_verify(
    j_table: &[BigInt],
    r: u64,
    s: u64,
    modulus: u64,
    upto: u64,
    min_value: u64,
) -> CongruenceReport {
    assert!(r >= 1 && s < r, "progression requires r >= 1 and s < r");
    assert!(
        (j_table.len() as u64) > upto,
        "j table too short for requested range"
    );
    let m = BigInt::from(modulus);
    let mut checked = 0;
    let mut counterexample = None;
    let mut v = s;
    while v <= upto {
        if v >= min_value {
            checked += 1;
            if !(&j_table[v as usize] % &m).is_zero() {
                counterexample = Some((v, j_table[v as usize].clone()));
                break;
            }
        }
        v += r;
    }
    CongruenceReport {
        r,
        s,
        modulus,
        upto,
        checked,
        counterexample,
    }
}

/// Relative error of the hyperbolic estimate against an exact value.
pub fn relative_error(estimate: f64, exact: &BigInt) -> f64 {
    let exact = exact.to_f64().expect("j(n) fits in f64 at desk scale");
    (estimate / exact - 1.0).abs()
}
