//! Bivariate generating functions graded by length (`z`) and weight (`q`):
//! closed-form infinite products, nested multi-sum expansions, the staircase
//! weight-shift transform, and a fixed-point solver for first-order
//! q-difference systems.

use crate::qseries::{pochhammer_fin, IntSeries};
use num_bigint::BigInt;
use num_traits::Zero;
use std::fmt;
use std::ops::{Add, Mul};

#[derive(Debug, Clone, PartialEq)]
pub enum GenFunError {
    /// The system fails the structural conditions for fixed-point iteration.
    IllPosed(String),
    /// The iteration did not reach a fixed point within the allowed steps.
    NonConvergent {
        iterations: usize,
    },
    /// A negative staircase shift would push a nonzero coefficient below q^0.
    ShiftBelowZero {
        row: usize,
        shift: i64,
    },
    UnknownFamily(String),
}

impl fmt::Display for GenFunError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenFunError::IllPosed(msg) => write!(f, "ill-posed q-difference system: {msg}"),
            GenFunError::NonConvergent { iterations } => {
                write!(
                    f,
                    "no fixed point after {iterations} iterations (ill-posed system)"
                )
            }
            GenFunError::ShiftBelowZero { row, shift } => {
                write!(f, "staircase shift {shift} pushes row {row} below q^0")
            }
            GenFunError::UnknownFamily(name) => {
                write!(f, "no closed-form product registered for family `{name}`")
            }
        }
    }
}

impl std::error::Error for GenFunError {}

/// A series in `z` and `q`, truncated in both variables: row `m` holds the
/// coefficient series of `z^m`, all rows sharing one q-order. Comparison is
/// coefficient-wise over the common truncation.
#[derive(Debug, Clone)]
pub struct BiSeries {
    rows: Vec<IntSeries>,
}

impl PartialEq for BiSeries {
    fn eq(&self, other: &Self) -> bool {
        let m = self.z_max().min(other.z_max());
        (0..=m).all(|i| self.rows[i] == other.rows[i])
    }
}

impl BiSeries {
    pub fn zero(z_max: usize, q_order: usize) -> Self {
        BiSeries {
            rows: vec![IntSeries::zero(q_order); z_max + 1],
        }
    }

    pub fn one(z_max: usize, q_order: usize) -> Self {
        let mut s = Self::zero(z_max, q_order);
        s.rows[0] = IntSeries::one(q_order);
        s
    }

    fn from_rows(rows: Vec<IntSeries>) -> Self {
        debug_assert!(!rows.is_empty());
        debug_assert!(rows.windows(2).all(|w| w[0].order() == w[1].order()));
        BiSeries { rows }
    }

    pub fn z_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn q_order(&self) -> usize {
        self.rows[0].order()
    }

    pub fn row(&self, m: usize) -> &IntSeries {
        &self.rows[m]
    }

    pub fn coeff(&self, m: usize, n: usize) -> &BigInt {
        self.rows[m].coeff(n)
    }

    /// The polynomial in `z` sitting at `q^n`, as coefficients by z-degree.
    pub fn q_column(&self, n: usize) -> Vec<BigInt> {
        self.rows.iter().map(|r| r.coeff(n).clone()).collect()
    }

    pub fn truncate(&self, z_max: usize, q_order: usize) -> Self {
        assert!(z_max <= self.z_max() && q_order <= self.q_order());
        BiSeries {
            rows: self.rows[..=z_max]
                .iter()
                .map(|r| r.clone().truncate(q_order))
                .collect(),
        }
    }

    /// Multiply by `coeff * z^a q^b`, truncating in both variables.
    pub fn scale_monomial(&self, coeff: i64, z_pow: usize, q_pow: usize) -> Self {
        let mut out = Self::zero(self.z_max(), self.q_order());
        out.add_shifted(self, &BigInt::from(coeff), z_pow, q_pow);
        out
    }

    /// `out += coeff * z^a q^b * src`, in place.
    fn add_shifted(&mut self, src: &BiSeries, coeff: &BigInt, z_pow: usize, q_pow: usize) {
        let n = self.q_order();
        for m in 0..=src.z_max() {
            if m + z_pow > self.z_max() {
                break;
            }
            let dst = m + z_pow;
            let src_row = src.rows[m].coeffs();
            let take = n.saturating_sub(q_pow).min(src_row.len());
            for (k, c) in src_row.iter().take(take).enumerate() {
                if !c.is_zero() {
                    let add = coeff * c;
                    let row = &mut self.rows[dst];
                    let cell = k + q_pow;
                    let updated = row.coeff(cell) + add;
                    row.set_coeff(cell, updated);
                }
            }
        }
    }

    /// Substitute `z -> z q^k`: row `m` picks up a factor `q^{k m}`.
    pub fn dilate(&self, k: usize) -> Self {
        let n = self.q_order();
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(m, row)| {
                if k * m == 0 {
                    row.clone()
                } else {
                    row.shift_up(k * m).truncate(n)
                }
            })
            .collect();
        BiSeries::from_rows(rows)
    }

    /// Multiply by a sparse polynomial given as `(coeff, z_pow, q_pow)` terms.
    fn mul_sparse(&self, terms: &[(i64, usize, usize)]) -> Self {
        let mut out = Self::zero(self.z_max(), self.q_order());
        for &(c, z, q) in terms {
            out.add_shifted(self, &BigInt::from(c), z, q);
        }
        out
    }
}

impl Add for &BiSeries {
    type Output = BiSeries;
    fn add(self, rhs: &BiSeries) -> BiSeries {
        let m = self.z_max().min(rhs.z_max());
        BiSeries::from_rows((0..=m).map(|i| &self.rows[i] + &rhs.rows[i]).collect())
    }
}

impl Mul for &BiSeries {
    type Output = BiSeries;
    fn mul(self, rhs: &BiSeries) -> BiSeries {
        let m = self.z_max().min(rhs.z_max());
        let n = self.q_order().min(rhs.q_order());
        let mut rows = vec![IntSeries::zero(n); m + 1];
        for i in 0..=m {
            if self.rows[i].is_zero() {
                continue;
            }
            let a = self.rows[i].clone().truncate(n);
            for j in 0..=(m - i) {
                if !rhs.rows[j].is_zero() {
                    let b = rhs.rows[j].clone().truncate(n);
                    rows[i + j] = &rows[i + j] + &(&a * &b);
                }
            }
        }
        BiSeries::from_rows(rows)
    }
}

/// Multiply `acc` by the product over `b = q_start, q_start + q_step, ...`
/// (while `b < q_order`) of `(1 + sign z^{z_pow} q^b)^{e}` with `e = +1`, or
/// its reciprocal with `invert`.
fn apply_product(
    acc: BiSeries,
    sign: i64,
    invert: bool,
    z_pow: usize,
    q_start: usize,
    q_step: usize,
) -> BiSeries {
    let z_max = acc.z_max();
    let q_order = acc.q_order();
    let mut acc = acc;
    let mut b = q_start;
    while b < q_order {
        if invert {
            // (1 - y)^{-1} = sum y^j, (1 + y)^{-1} = sum (-y)^j with y = z^a q^b.
            let mut terms = Vec::new();
            let mut j = 0usize;
            while j * z_pow <= z_max && j * b < q_order {
                let c = if sign > 0 && j % 2 == 1 { -1 } else { 1 };
                terms.push((c, j * z_pow, j * b));
                j += 1;
                if z_pow == 0 && b == 0 {
                    break;
                }
            }
            acc = acc.mul_sparse(&terms);
        } else {
            acc = acc.mul_sparse(&[(1, 0, 0), (sign, z_pow, b)]);
        }
        b += q_step;
    }
    acc
}

/// The closed-form length-graded product for a built-in family name
/// (`01`, `02`, `012`, `001`), expanded at truncation `(z_max, q_order)`.
///
/// - `01`: `(-zq; q)_inf / (z^2 q; q)_inf`
/// - `02`: `(z^3 q^6; q^3)_inf / ((z q^2; q)_inf (z^2 q^2; q)_inf)`
/// - `012`: `(-z q^2; q)_inf (-z^2 q^3; q)_inf / (z^3 q^3; q)_inf`
/// - `001`: `(-z^2 q; q^2)_inf / ((z q; q)_inf (z^3 q; q^3)_inf (z^3 q^2; q^3)_inf)`
pub fn closed_form(family: &str, z_max: usize, q_order: usize) -> Result<BiSeries, GenFunError> {
    let acc = BiSeries::one(z_max, q_order);
    let s = match family {
        "01" => {
            let a = apply_product(acc, 1, false, 1, 1, 1);
            apply_product(a, -1, true, 2, 1, 1)
        }
        "02" => {
            let a = apply_product(acc, -1, false, 3, 6, 3);
            let a = apply_product(a, -1, true, 1, 2, 1);
            apply_product(a, -1, true, 2, 2, 1)
        }
        "012" => {
            let a = apply_product(acc, 1, false, 1, 2, 1);
            let a = apply_product(a, 1, false, 2, 3, 1);
            apply_product(a, -1, true, 3, 3, 1)
        }
        "001" => {
            let a = apply_product(acc, 1, false, 2, 1, 2);
            let a = apply_product(a, -1, true, 1, 1, 1);
            let a = apply_product(a, -1, true, 3, 1, 3);
            apply_product(a, -1, true, 3, 2, 3)
        }
        other => return Err(GenFunError::UnknownFamily(other.to_string())),
    };
    Ok(s)
}

/// `(-zq; q)_inf / (z^2 q^2; q)_inf`: the 01 members with no zero part
/// (the `k(m, n)` grading).
pub fn closed_form_01_positive(z_max: usize, q_order: usize) -> BiSeries {
    let a = apply_product(BiSeries::one(z_max, q_order), 1, false, 1, 1, 1);
    apply_product(a, -1, true, 2, 2, 1)
}

/// One summand of a q-difference equation:
/// `coeff * z^{z_pow} * q^{q_pow} * unknown(z q^{dilation})`.
#[derive(Debug, Clone, Copy)]
pub struct Term {
    pub coeff: i64,
    pub z_pow: usize,
    pub q_pow: usize,
    pub unknown: usize,
    pub dilation: usize,
}

/// A finite system `X_u = sum of terms`, solved by fixed-point iteration at a
/// given truncation.
#[derive(Debug, Clone)]
pub struct QDiffSystem {
    names: Vec<String>,
    equations: Vec<Vec<Term>>,
}

impl QDiffSystem {
    /// Validates that plain copy terms (no z/q power, no dilation) form no
    /// cycle: such a cycle would leave the iteration without progress.
    pub fn new(names: &[&str], equations: Vec<Vec<Term>>) -> Result<Self, GenFunError> {
        let n = names.len();
        if equations.len() != n {
            return Err(GenFunError::IllPosed(
                "one equation per unknown required".into(),
            ));
        }
        for eq in &equations {
            for t in eq {
                if t.unknown >= n {
                    return Err(GenFunError::IllPosed(format!(
                        "term references unknown #{} of {n}",
                        t.unknown
                    )));
                }
            }
        }
        // Copy edges u -> t.unknown; DFS for a cycle.
        let copy_targets: Vec<Vec<usize>> = equations
            .iter()
            .map(|eq| {
                eq.iter()
                    .filter(|t| t.z_pow == 0 && t.q_pow == 0 && t.dilation == 0)
                    .map(|t| t.unknown)
                    .collect()
            })
            .collect();
        let mut state = vec![0u8; n]; // 0 unseen, 1 on stack, 2 done
        fn dfs(u: usize, targets: &[Vec<usize>], state: &mut [u8]) -> bool {
            state[u] = 1;
            for &v in &targets[u] {
                if state[v] == 1 || (state[v] == 0 && dfs(v, targets, state)) {
                    return true;
                }
            }
            state[u] = 2;
            false
        }
        for u in 0..n {
            if state[u] == 0 && dfs(u, &copy_targets, &mut state) {
                return Err(GenFunError::IllPosed(
                    "undilated weight-zero terms form a cycle".into(),
                ));
            }
        }
        Ok(QDiffSystem {
            names: names.iter().map(|s| s.to_string()).collect(),
            equations,
        })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Iterate from the empty-partition seed (every unknown starts as the
    /// constant series 1, its z^0 row) until two successive iterates agree.
    /// Divergence within `(z_max+1)(q_order+1)+1` steps is reported.
    pub fn solve(&self, z_max: usize, q_order: usize) -> Result<Vec<BiSeries>, GenFunError> {
        let n = self.names.len();
        let mut cur: Vec<BiSeries> = vec![BiSeries::one(z_max, q_order); n];
        let cap = (z_max + 1) * (q_order + 1) + 1;
        for _ in 0..cap {
            let next: Vec<BiSeries> = self
                .equations
                .iter()
                .map(|eq| {
                    let mut acc = BiSeries::zero(z_max, q_order);
                    for t in eq {
                        let arg = cur[t.unknown].dilate(t.dilation);
                        acc.add_shifted(&arg, &BigInt::from(t.coeff), t.z_pow, t.q_pow);
                    }
                    acc
                })
                .collect();
            if next == cur {
                return Ok(next);
            }
            cur = next;
        }
        Err(GenFunError::NonConvergent { iterations: cap })
    }
}

fn term(coeff: i64, z_pow: usize, q_pow: usize, unknown: usize, dilation: usize) -> Term {
    Term {
        coeff,
        z_pow,
        q_pow,
        unknown,
        dilation,
    }
}

/// First-order system for the 01 family (unknowns: all members `J`, members
/// with no zero part `K`):
/// `J = z^2 q J + K`, `K = z q K + J(zq)`.
pub fn system_01() -> QDiffSystem {
    QDiffSystem::new(
        &["J", "K"],
        vec![
            vec![term(1, 2, 1, 0, 0), term(1, 0, 0, 1, 0)],
            vec![term(1, 1, 1, 1, 0), term(1, 0, 0, 0, 1)],
        ],
    )
    .expect("built-in system is well-posed")
}

/// First-order system for the 02 family (members / no zeros / neither zeros
/// nor ones).
pub fn system_02() -> QDiffSystem {
    QDiffSystem::new(
        &["J", "K", "L"],
        vec![
            vec![term(1, 2, 2, 0, 0), term(1, 0, 0, 1, 0)],
            vec![
                term(1, 2, 3, 1, 0),
                term(1, 0, 0, 2, 0),
                term(1, 2, 4, 0, 1),
            ],
            vec![term(1, 1, 2, 2, 0), term(1, 0, 0, 1, 1)],
        ],
    )
    .expect("built-in system is well-posed")
}

/// First-order system for the 012 family (five boundary classes).
pub fn system_012() -> QDiffSystem {
    QDiffSystem::new(
        &["J", "K", "L", "M", "N"],
        vec![
            vec![term(1, 3, 3, 0, 0), term(1, 0, 0, 1, 0)],
            vec![
                term(1, 3, 4, 1, 0),
                term(1, 2, 3, 2, 0),
                term(1, 0, 0, 2, 0),
            ],
            vec![term(1, 1, 2, 3, 0), term(1, 0, 0, 0, 1)],
            vec![term(1, 2, 3, 2, 0), term(1, 0, 0, 4, 0)],
            vec![term(1, 1, 2, 4, 0), term(1, 0, 0, 1, 1)],
        ],
    )
    .expect("built-in system is well-posed")
}

/// First-order system for the 001 family, derived from its tail recurrences
/// (members / members built on the 011 boundary / members with no zero part):
/// `J = z^3 q J + z^2 q L + L`, `L = z^3 q^2 L + M`, `M = z q M + J(zq)`.
pub fn system_001() -> QDiffSystem {
    QDiffSystem::new(
        &["J", "L", "M"],
        vec![
            vec![
                term(1, 3, 1, 0, 0),
                term(1, 2, 1, 1, 0),
                term(1, 0, 0, 1, 0),
            ],
            vec![term(1, 3, 2, 1, 0), term(1, 0, 0, 2, 0)],
            vec![term(1, 1, 1, 2, 0), term(1, 0, 0, 0, 1)],
        ],
    )
    .expect("built-in system is well-posed")
}

/// Third-order reformulation directly at the level of ordinary partitions
/// with `lambda_i >= lambda_{i+2} + 2` (three boundary classes):
/// `A = A(zq) + zq B`, `B = zq A(zq^2) + C`, `C = A(zq^2) + zq^2 C(zq)`.
pub fn system_distance2() -> QDiffSystem {
    QDiffSystem::new(
        &["A", "B", "C"],
        vec![
            vec![term(1, 0, 0, 0, 1), term(1, 1, 1, 1, 0)],
            vec![term(1, 1, 1, 0, 2), term(1, 0, 0, 2, 0)],
            vec![term(1, 0, 0, 0, 2), term(1, 1, 2, 2, 1)],
        ],
    )
    .expect("built-in system is well-posed")
}

/// Shift row `m` by `q^{sigma(m)}`. Negative shifts are allowed as long as no
/// nonzero coefficient would cross below `q^0`; rows shifted down lose their
/// top coefficients, so the result is truncated to the common known order.
pub fn staircase_transform(
    a: &BiSeries,
    sigma: impl Fn(usize) -> i64,
) -> Result<BiSeries, GenFunError> {
    let n = a.q_order();
    let mut rows = Vec::with_capacity(a.z_max() + 1);
    let mut min_order = n;
    for m in 0..=a.z_max() {
        let shift = sigma(m);
        let row = a.row(m);
        if shift >= 0 {
            rows.push(row.shift_up(shift as usize).truncate(n));
        } else {
            let down = (-shift) as usize;
            if row.coeffs().iter().take(down.min(n)).any(|c| !c.is_zero()) {
                return Err(GenFunError::ShiftBelowZero { row: m, shift });
            }
            let kept: Vec<BigInt> = row.coeffs().iter().skip(down).cloned().collect();
            min_order = min_order.min(kept.len());
            rows.push(IntSeries::from_coeffs(kept));
        }
    }
    Ok(BiSeries::from_rows(
        rows.into_iter().map(|r| r.truncate(min_order)).collect(),
    ))
}

/// The named nested multi-sum expansions. Each identifier is the anchor used
/// throughout the verification suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MultiSum {
    /// Two-index sum for 01-partitions with the staircase already applied:
    /// `sum q^{(m0+m1)^2 + m1^2} z^{m0 + 2 m1} / ((q)_{m0} (q)_{m1})`.
    Eq63,
    /// Three-index alternating sum equal to the 02 closed form.
    Eq75,
    /// Eq75 with the staircase weight `Z(Z-2)` folded in.
    Eq78,
    /// Three-index sum equal to the 012 closed form.
    Eq89,
    /// Eq89 with the staircase weight `Z(Z-3)/2` folded in.
    Eq88,
    /// Four-index sum for the 001 family with staircase weight `Z(Z-1)/2`.
    Eq94,
}

impl MultiSum {
    pub const ALL: [MultiSum; 6] = [
        MultiSum::Eq63,
        MultiSum::Eq75,
        MultiSum::Eq78,
        MultiSum::Eq89,
        MultiSum::Eq88,
        MultiSum::Eq94,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MultiSum::Eq63 => "eq63",
            MultiSum::Eq75 => "eq75",
            MultiSum::Eq78 => "eq78",
            MultiSum::Eq89 => "eq89",
            MultiSum::Eq88 => "eq88",
            MultiSum::Eq94 => "eq94",
        }
    }
}

/// Evaluate a multi-sum at truncation `(z_max, q_order)`. Summation indices
/// are cut once the z-degree exceeds `z_max` or the explicit q-exponent
/// reaches `q_order` (both monotone in every index).
pub fn multisum(id: MultiSum, z_max: usize, q_order: usize) -> BiSeries {
    let mut acc = BiSeries::zero(z_max, q_order);
    let mut add_term = |sign: i64, z_deg: usize, q_exp: i64, denoms: &[(u32, u32)]| {
        debug_assert!(q_exp >= 0, "staircase exponents stay non-negative");
        let q_exp = q_exp as usize;
        if z_deg > z_max || q_exp >= q_order {
            return;
        }
        let mut den = IntSeries::one(q_order);
        for &(c, m) in denoms {
            den = &den * &pochhammer_fin(c, m, q_order);
        }
        let inv = den.invert().expect("finite pochhammer has unit constant");
        let shifted = inv.shift_up(q_exp).truncate(q_order);
        let signed = if sign < 0 { -&shifted } else { shifted };
        let row = &acc.rows[z_deg] + &signed;
        acc.rows[z_deg] = row;
    };
    match id {
        MultiSum::Eq63 => {
            for m0 in 0..=z_max {
                for m1 in 0..=(z_max - m0) / 2 {
                    let z = m0 + 2 * m1;
                    let e = ((m0 + m1) * (m0 + m1) + m1 * m1) as i64;
                    add_term(1, z, e, &[(1, m0 as u32), (1, m1 as u32)]);
                }
            }
        }
        MultiSum::Eq75 | MultiSum::Eq78 => {
            for m3 in 0..=z_max / 3 {
                for m2 in 0..=(z_max - 3 * m3) / 2 {
                    for m1 in 0..=z_max - 3 * m3 - 2 * m2 {
                        let z = m1 + 2 * m2 + 3 * m3;
                        let mut e = (2 * m1 + 2 * m2) as i64 + 3 * m3 as i64 * (m3 as i64 + 3) / 2;
                        if id == MultiSum::Eq78 {
                            e += z as i64 * (z as i64 - 2);
                        }
                        let sign = if m3 % 2 == 1 { -1 } else { 1 };
                        add_term(
                            sign,
                            z,
                            e,
                            &[(1, m1 as u32), (1, m2 as u32), (3, m3 as u32)],
                        );
                    }
                }
            }
        }
        MultiSum::Eq89 | MultiSum::Eq88 => {
            for m3 in 0..=z_max / 3 {
                for m2 in 0..=(z_max - 3 * m3) / 2 {
                    for m1 in 0..=z_max - 3 * m3 - 2 * m2 {
                        let z = m1 + 2 * m2 + 3 * m3;
                        let (a, b) = (m1 as i64, m2 as i64);
                        let mut e = a * (a + 3) / 2 + b * (b + 5) / 2 + 3 * m3 as i64;
                        if id == MultiSum::Eq88 {
                            e += z as i64 * (z as i64 - 3) / 2;
                        }
                        add_term(1, z, e, &[(1, m1 as u32), (1, m2 as u32), (1, m3 as u32)]);
                    }
                }
            }
        }
        MultiSum::Eq94 => {
            for m0 in 0..=z_max / 2 {
                for m3 in 0..=(z_max - 2 * m0) / 3 {
                    for m2 in 0..=(z_max - 2 * m0 - 3 * m3) / 3 {
                        for m1 in 0..=z_max - 2 * m0 - 3 * m3 - 3 * m2 {
                            let z = 2 * m0 + m1 + 3 * m2 + 3 * m3;
                            let zi = z as i64;
                            let e = (m0 * m0 + m1 + m2 + 2 * m3) as i64 + zi * (zi - 1) / 2;
                            add_term(
                                1,
                                z,
                                e,
                                &[
                                    (2, m0 as u32),
                                    (1, m1 as u32),
                                    (3, m2 as u32),
                                    (3, m3 as u32),
                                ],
                            );
                        }
                    }
                }
            }
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting;
    use crate::families::FamilySpec;
    use num_traits::{One, ToPrimitive};

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn bi_mul_basics() {
        let one = BiSeries::one(4, 6);
        let a = one.mul_sparse(&[(1, 0, 0), (1, 1, 1)]); // 1 + zq
        let b = one.mul_sparse(&[(1, 0, 0), (-1, 1, 1)]); // 1 - zq
        let prod = &a * &b;
        assert_eq!(*prod.coeff(0, 0), big(1));
        assert_eq!(*prod.coeff(1, 1), big(0));
        assert_eq!(*prod.coeff(2, 2), big(-1));
        assert_eq!(&a * &one, a);
    }

    #[test]
    fn closed_form_01_as_product_of_halves() {
        let numerator = apply_product(BiSeries::one(8, 12), 1, false, 1, 1, 1);
        let denominator_inv = apply_product(BiSeries::one(8, 12), -1, true, 2, 1, 1);
        let assembled = &numerator * &denominator_inv;
        assert_eq!(assembled, closed_form("01", 8, 12).unwrap());
    }

    #[test]
    fn dilate_basics() {
        let one = BiSeries::one(4, 8);
        let z = one.scale_monomial(1, 1, 0);
        let zq = one.scale_monomial(1, 1, 1);
        assert_eq!(z.dilate(1), zq);
        let j = closed_form("01", 4, 8).unwrap();
        assert_eq!(j.dilate(0), j);
    }

    #[test]
    fn functional_equation_for_01() {
        // J(z) * (1 - zq)(1 - z^2 q) = J(zq)
        let j = closed_form("01", 8, 12).unwrap();
        let lhs = j
            .mul_sparse(&[(1, 0, 0), (-1, 1, 1)])
            .mul_sparse(&[(1, 0, 0), (-1, 2, 1)]);
        assert_eq!(lhs, j.dilate(1));
    }

    #[test]
    fn golden_coefficients() {
        let j = closed_form("01", 8, 8).unwrap();
        let poly: Vec<i64> = j.q_column(3).iter().map(|c| c.to_i64().unwrap()).collect();
        assert_eq!(poly, vec![0, 1, 2, 2, 1, 1, 1, 0, 0]);
        assert_eq!(*j.coeff(4, 2), big(1)); // the 01-partition (0101)

        let t = closed_form("02", 8, 10).unwrap();
        let row5: Vec<i64> = t
            .row(5)
            .coeffs()
            .iter()
            .map(|c| c.to_i64().unwrap())
            .collect();
        assert_eq!(&row5[6..10], &[1, 2, 4, 7]);
    }

    #[test]
    fn closed_forms_match_enumeration() {
        for name in ["01", "02", "012", "001"] {
            let family = FamilySpec::by_name(name).unwrap();
            let n_max = 10u32;
            let m_max = (1..=n_max).map(|w| family.max_length(w)).max().unwrap();
            let gf = closed_form(name, m_max, n_max as usize + 1).unwrap();
            assert_eq!(*gf.coeff(0, 0), BigInt::one(), "row 0 of {name}");
            for n in 0..=n_max {
                for m in 0..=m_max {
                    let count = if m == 0 {
                        usize::from(n == 0)
                    } else {
                        family.enumerate(n, Some(m)).len()
                    };
                    assert_eq!(
                        *gf.coeff(m, n as usize),
                        big(count as i64),
                        "{name}: z^{m} q^{n}"
                    );
                }
            }
        }
    }

    #[test]
    fn positive_closed_form_matches_k_counts() {
        let f01 = FamilySpec::f01();
        let gf = closed_form_01_positive(8, 10);
        for n in 1..=9u32 {
            for m in 1..=8usize {
                assert_eq!(
                    *gf.coeff(m, n as usize),
                    big(f01.enumerate_positive(n, m).len() as i64),
                    "k({m},{n})"
                );
            }
        }
    }

    #[test]
    fn systems_solve_to_closed_forms() {
        let sol = system_01().solve(8, 12).unwrap();
        assert_eq!(sol[0], closed_form("01", 8, 12).unwrap());
        assert_eq!(sol[1], closed_form_01_positive(8, 12));

        let sol = system_02().solve(8, 14).unwrap();
        assert_eq!(sol[0], closed_form("02", 8, 14).unwrap());

        let sol = system_012().solve(8, 14).unwrap();
        assert_eq!(sol[0], closed_form("012", 8, 14).unwrap());

        let sol = system_001().solve(8, 14).unwrap();
        assert_eq!(sol[0], closed_form("001", 8, 14).unwrap());
    }

    #[test]
    fn distance2_system_matches_staircase_and_multisum() {
        let sol = system_distance2().solve(6, 20).unwrap();
        let a = &sol[0];
        let j = closed_form("01", 6, 21).unwrap();
        let shifted = staircase_transform(&j, |m| (m * m.saturating_sub(1) / 2) as i64).unwrap();
        assert_eq!(*a, shifted.truncate(6, 20));
        assert_eq!(*a, multisum(MultiSum::Eq63, 6, 20));
    }

    #[test]
    fn third_order_relation_for_distance2() {
        // A(z) = (1 + zq) A(zq) + z^2 q^2 A(zq^2) - z^3 q^5 A(zq^3)
        let sol = system_distance2().solve(6, 18).unwrap();
        let a = &sol[0];
        let a1 = a.dilate(1);
        let mut rhs = a1.mul_sparse(&[(1, 0, 0), (1, 1, 1)]);
        rhs = &rhs + &a.dilate(2).scale_monomial(1, 2, 2);
        rhs = &rhs + &a.dilate(3).scale_monomial(-1, 3, 5);
        assert_eq!(*a, rhs);
    }

    #[test]
    fn staircase_transform_basics() {
        let j = closed_form("01", 6, 12).unwrap();
        let same = staircase_transform(&j, |_| 0).unwrap();
        assert_eq!(same, j);
        // Row 2 after the 01 staircase counts plain two-part partitions.
        let shifted = staircase_transform(&j, |m| (m * m.saturating_sub(1) / 2) as i64).unwrap();
        let p = counting::partitions_exact_parts(2, 11);
        for (n, expected) in p[2].iter().enumerate() {
            assert_eq!(*shifted.coeff(2, n), *expected, "n = {n}");
        }
    }

    #[test]
    fn staircase_transform_02_counts_gapped_partitions() {
        // Weight shift m(m-2) = 15 at five parts: the seven members of
        // weight 9 land at q^24.
        let t = closed_form("02", 5, 26).unwrap();
        let shifted = staircase_transform(&t, |m| m as i64 * (m as i64 - 2)).unwrap();
        assert_eq!(*shifted.coeff(5, 24), big(7));
    }

    #[test]
    fn staircase_transform_rejects_underflow() {
        let j = closed_form("01", 4, 8).unwrap();
        // Row 1 starts at q^1, so shifting it down by 2 hits q^{-1}.
        let err = staircase_transform(&j, |m| if m == 1 { -2 } else { 0 }).unwrap_err();
        assert_eq!(err, GenFunError::ShiftBelowZero { row: 1, shift: -2 });
    }

    #[test]
    fn multisum_02_matches_closed_form() {
        let lhs = multisum(MultiSum::Eq75, 6, 16);
        let rhs = closed_form("02", 6, 16).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn multisum_012_matches_closed_form() {
        let lhs = multisum(MultiSum::Eq89, 6, 16);
        let rhs = closed_form("012", 6, 16).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn multisums_have_non_negative_coefficients() {
        for id in MultiSum::ALL {
            let s = multisum(id, 6, 16);
            for m in 0..=s.z_max() {
                for n in 0..s.q_order() {
                    assert!(
                        *s.coeff(m, n) >= BigInt::zero(),
                        "{} at ({m},{n})",
                        id.name()
                    );
                }
            }
        }
    }

    #[test]
    fn ill_posed_systems_are_rejected() {
        // u = v, v = u: a pure copy cycle.
        let err = QDiffSystem::new(
            &["u", "v"],
            vec![vec![term(1, 0, 0, 1, 0)], vec![term(1, 0, 0, 0, 0)]],
        )
        .unwrap_err();
        assert!(matches!(err, GenFunError::IllPosed(_)));
    }

    #[test]
    fn divergent_iteration_is_reported() {
        // u = 2 u(zq): the constant row doubles forever.
        let sys = QDiffSystem::new(&["u"], vec![vec![term(2, 0, 0, 0, 1)]]).unwrap();
        let err = sys.solve(3, 5).unwrap_err();
        assert!(matches!(err, GenFunError::NonConvergent { .. }));
    }
}
