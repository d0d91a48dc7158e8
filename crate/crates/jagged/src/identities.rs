//! A registry of named, machine-checkable series identities. Each entry
//! builds both sides as exact integer-coefficient series at a requested order
//! and compares them coefficient-by-coefficient; entries touching fractional
//! powers are normalized beforehand by the substitution `q = t^r`, so the
//! whole registry lives in integer exponents.

use crate::qseries::{
    jagged_gf, partition_gf, pochhammer_inf, slice, substitute_power, theta4, theta_sum,
    EtaQuotient, IntSeries, Sign,
};
use num_bigint::BigInt;
use std::fmt;
use std::sync::OnceLock;

#[derive(Debug, Clone, PartialEq)]
pub enum IdentityError {
    UnknownName(String),
}

impl fmt::Display for IdentityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdentityError::UnknownName(name) => write!(f, "no identity named `{name}`"),
        }
    }
}

impl std::error::Error for IdentityError {}

type Builder = Box<dyn Fn(usize) -> IntSeries + Send + Sync>;

/// One equality to certify: a labelled pair of series builders.
struct Check {
    label: &'static str,
    lhs: Builder,
    rhs: Builder,
}

/// A named identity: one or more checks sharing a default order and a
/// reference anchor.
pub struct IdentityCase {
    pub name: &'static str,
    pub paper_ref: &'static str,
    pub default_order: usize,
    checks: Vec<Check>,
}

/// Location and values of the first coefficient disagreement.
#[derive(Debug, Clone, PartialEq)]
pub struct Mismatch {
    pub check: &'static str,
    pub exponent: usize,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub name: String,
    pub paper_ref: String,
    pub order: usize,
    pub mismatch: Option<Mismatch>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

impl IdentityCase {
    fn single<L, R>(
        name: &'static str,
        paper_ref: &'static str,
        default_order: usize,
        lhs: L,
        rhs: R,
    ) -> Self
    where
        L: Fn(usize) -> IntSeries + Send + Sync + 'static,
        R: Fn(usize) -> IntSeries + Send + Sync + 'static,
    {
        IdentityCase {
            name,
            paper_ref,
            default_order,
            checks: vec![Check {
                label: "",
                lhs: Box::new(lhs),
                rhs: Box::new(rhs),
            }],
        }
    }

    pub fn verify(&self, order: usize) -> VerifyReport {
        let mut mismatch = None;
        for check in &self.checks {
            let lhs = (check.lhs)(order);
            let rhs = (check.rhs)(order);
            if let Some((exponent, l, r)) = lhs.first_mismatch(&rhs) {
                mismatch = Some(Mismatch {
                    check: check.label,
                    exponent,
                    lhs: l,
                    rhs: r,
                });
                break;
            }
        }
        VerifyReport {
            name: self.name.to_string(),
            paper_ref: self.paper_ref.to_string(),
            order,
            mismatch,
        }
    }
}

fn eta(constant: i64, factors: &'static [(u32, i32)]) -> impl Fn(usize) -> IntSeries {
    move |order| EtaQuotient::new(constant, factors).eval(order)
}

/// `sum_{n >= 1} (-1)^{n+1} q^{n^2}` (the one-sided alternating square sum).
fn alt_squares_one_sided(order: usize) -> IntSeries {
    let mut s = IntSeries::zero(order);
    let mut n = 1usize;
    while n * n < order {
        let sign = if n % 2 == 1 { 1 } else { -1 };
        s.set_coeff(n * n, BigInt::from(sign));
        n += 1;
    }
    s
}

/// `sum_n j(rn + s) q^n` to the requested order, read off the full expansion.
fn jagged_slice(r: usize, s: usize) -> impl Fn(usize) -> IntSeries {
    move |order| slice(&jagged_gf(r * order + s + 1), r, s).truncate(order)
}

// Eta-quotient forms of the length-8 progression pieces (in q).
fn zeta0(order: usize) -> IntSeries {
    EtaQuotient::new(1, &[(4, 5), (16, 1), (2, -2), (8, -4)]).eval(order)
}

fn zeta1(order: usize) -> IntSeries {
    EtaQuotient::new(1, &[(2, 2), (16, 1), (1, -1), (8, -2)]).eval(order)
}

fn zeta4(order: usize) -> IntSeries {
    EtaQuotient::new(1, &[(16, 1), (4, -1)]).eval(order)
}

/// `zeta1^7 - the combination it must equal (left side of the appendix chain)`.
fn zeta_combination(order: usize) -> IntSeries {
    let z0 = zeta0(order);
    let z1 = zeta1(order);
    let z4 = zeta4(order);
    let z1c = z1.pow(3).unwrap();
    let a = &(&z0.pow(3).unwrap() * &z1c) * &z4;
    let b = &(&z0 * &z1c) * &z4.pow(3).unwrap();
    &a + &b.scale(&BigInt::from(4)).shift_up(1).truncate(order)
}

fn slice_eta_case(
    name: &'static str,
    paper_ref: &'static str,
    r: usize,
    s: usize,
    constant: i64,
    factors: &'static [(u32, i32)],
) -> IdentityCase {
    IdentityCase::single(
        name,
        paper_ref,
        100,
        jagged_slice(r, s),
        eta(constant, factors),
    )
}

fn build_registry() -> Vec<IdentityCase> {
    let mut reg = Vec::new();

    reg.push(IdentityCase::single(
        "eq6",
        "Eq. 6",
        100,
        |order| &jagged_gf(order) * &theta4(order),
        IntSeries::one,
    ));

    reg.push(IdentityCase::single(
        "eq14",
        "Eq. 14",
        100,
        jagged_gf,
        |order| {
            let j = jagged_gf(order);
            let sum = alt_squares_one_sided(order);
            let two_js = (&j * &sum).scale(&BigInt::from(2));
            &IntSeries::one(order) + &two_js
        },
    ));

    reg.push(IdentityCase::single(
        "eq17",
        "Eq. 17",
        100,
        |order| slice(&partition_gf(5 * order + 5), 5, 4).truncate(order),
        eta(5, &[(5, 5), (1, -6)]),
    ));

    reg.push(slice_eta_case(
        "eq18_20",
        "Prop. 11 (Eq. 18), r=2 s=0",
        2,
        0,
        1,
        &[(4, 5), (1, -4), (8, -2)],
    ));
    reg.push(slice_eta_case(
        "eq18_21",
        "Prop. 11 (Eq. 18), r=2 s=1",
        2,
        1,
        2,
        &[(2, 2), (8, 2), (1, -4), (4, -1)],
    ));
    reg.push(slice_eta_case(
        "eq18_30",
        "Prop. 11 (Eq. 18), r=3 s=0",
        3,
        0,
        1,
        &[(2, 4), (3, 6), (1, -8), (6, -3)],
    ));
    reg.push(slice_eta_case(
        "eq18_31",
        "Prop. 11 (Eq. 18), r=3 s=1",
        3,
        1,
        2,
        &[(2, 3), (3, 3), (1, -7)],
    ));
    reg.push(slice_eta_case(
        "eq18_32",
        "Prop. 11 (Eq. 18), r=3 s=2",
        3,
        2,
        4,
        &[(2, 2), (6, 3), (1, -6)],
    ));
    reg.push(slice_eta_case(
        "eq18_40",
        "Prop. 11 (Eq. 18), r=4 s=0",
        4,
        0,
        1,
        &[(2, 19), (1, -14), (4, -6)],
    ));
    reg.push(slice_eta_case(
        "eq18_41",
        "Prop. 11 (Eq. 18), r=4 s=1",
        4,
        1,
        2,
        &[(2, 13), (1, -12), (4, -2)],
    ));
    reg.push(slice_eta_case(
        "eq18_42",
        "Prop. 11 (Eq. 18), r=4 s=2",
        4,
        2,
        4,
        &[(2, 7), (4, 2), (1, -10)],
    ));
    reg.push(slice_eta_case(
        "eq18_43",
        "Prop. 11 (Eq. 18), r=4 s=3",
        4,
        3,
        8,
        &[(2, 1), (4, 6), (1, -8)],
    ));

    reg.push(IdentityCase::single(
        "eq19",
        "Eq. 19",
        100,
        jagged_gf,
        |order| {
            let even = EtaQuotient::new(1, &[(8, 5), (2, -4), (16, -2)]).eval(order);
            let odd = EtaQuotient::new(2, &[(4, 2), (16, 2), (2, -4), (8, -1)]).eval(order);
            &even + &odd.shift_up(1).truncate(order)
        },
    ));

    reg.push(slice_eta_case(
        "eq20",
        "Prop. 12 (Eq. 20)",
        8,
        7,
        64,
        &[(2, 22), (1, -23)],
    ));

    reg.push(IdentityCase {
        name: "eq28",
        paper_ref: "Eq. 28",
        default_order: 100,
        checks: (1..=8u32)
            .map(|c| Check {
                label: ["c=1", "c=2", "c=3", "c=4", "c=5", "c=6", "c=7", "c=8"][c as usize - 1],
                lhs: Box::new(move |order| pochhammer_inf(c, Sign::Plus, 1, order)),
                rhs: Box::new(move |order| {
                    &pochhammer_inf(2 * c, Sign::Minus, 1, order)
                        * &pochhammer_inf(c, Sign::Minus, -1, order)
                }),
            })
            .collect(),
    });

    reg.push(IdentityCase {
        name: "eq29",
        paper_ref: "Eq. 29 (q = t^3)",
        default_order: 120,
        checks: vec![
            Check {
                label: "triple products",
                lhs: Box::new(theta4),
                rhs: Box::new(|order| {
                    let a = EtaQuotient::new(1, &[(9, 2), (18, -1)]).eval(order);
                    let b = EtaQuotient::new(2, &[(3, 1), (18, 2), (6, -1), (9, -1)]).eval(order);
                    &a - &b.shift_up(1).truncate(order)
                }),
            },
            Check {
                label: "theta split",
                lhs: Box::new(theta4),
                rhs: Box::new(|order| {
                    let a = theta_sum(9, 0, true, order).unwrap();
                    let b = theta_sum(9, 6, true, order).unwrap();
                    &a - &b.scale(&BigInt::from(2)).shift_up(1).truncate(order)
                }),
            },
        ],
    });

    reg.push(IdentityCase::single(
        "eq30_31",
        "Eq. 30 with Eq. 31 (q = t^3)",
        120,
        |order| {
            let zeta1_cubed_arg =
                EtaQuotient::new(1, &[(3, 1), (18, 3), (6, -1), (9, -3)]).eval(order);
            let factor = &IntSeries::one(order)
                - &zeta1_cubed_arg
                    .scale(&BigInt::from(2))
                    .shift_up(1)
                    .truncate(order);
            &jagged_gf(order) * &factor
        },
        |order| substitute_power(&jagged_gf(order.div_ceil(9)), 9).truncate(order),
    ));

    reg.push(IdentityCase::single(
        "eq32_33",
        "Eq. 32 with Eq. 33",
        100,
        |order| {
            let zeta = EtaQuotient::new(1, &[(1, 1), (6, 3), (2, -1), (3, -3)]).eval(order);
            let cubed = zeta
                .pow(3)
                .unwrap()
                .scale(&BigInt::from(8))
                .shift_up(1)
                .truncate(order);
            let omega = &IntSeries::one(order) - &cubed;
            let inv = EtaQuotient::new(1, &[(2, 4), (3, 8), (1, -8), (6, -4)]).eval(order);
            &omega * &inv
        },
        IntSeries::one,
    ));

    reg.push(IdentityCase::single(
        "eq41",
        "Eq. 41 (q = t^4)",
        120,
        theta4,
        |order| {
            let a = EtaQuotient::new(1, &[(32, 5), (16, -2), (64, -2)]).eval(order);
            let b = EtaQuotient::new(2, &[(16, 2), (8, -1)]).eval(order);
            let c = EtaQuotient::new(2, &[(64, 2), (32, -1)]).eval(order);
            let s = &a - &b.shift_up(1).truncate(order);
            &s + &c.shift_up(4).truncate(order)
        },
    ));

    reg.push(IdentityCase::single(
        "eq42_43",
        "Eq. 42 with Eq. 43 (q = t^8)",
        120,
        |order| {
            // zeta_i(t^8), written directly with all steps scaled by 8.
            let z0 = EtaQuotient::new(1, &[(32, 5), (128, 1), (16, -2), (64, -4)]).eval(order);
            let z1 = EtaQuotient::new(2, &[(16, 2), (128, 1), (8, -1), (64, -2)]).eval(order);
            let z4 = EtaQuotient::new(2, &[(128, 1), (32, -1)]).eval(order);
            let comb = &(&z0 - &z1.shift_up(1).truncate(order)) + &z4.shift_up(4).truncate(order);
            &jagged_gf(order) * &comb
        },
        |order| substitute_power(&jagged_gf(order.div_ceil(64)), 64).truncate(order),
    ));

    reg.push(IdentityCase::single(
        "eq47",
        "Eq. 47 (with Eq. 45, 46)",
        100,
        |order| {
            let prefactor = EtaQuotient::new(1, &[(8, 2), (16, -1)]).eval(order);
            &prefactor * &jagged_slice(8, 7)(order)
        },
        |order| {
            let z0 = zeta0(order);
            let z1 = zeta1(order);
            let z4 = zeta4(order);
            let z1c = z1.pow(3).unwrap();
            let t1 = z1.pow(7).unwrap().scale(&BigInt::from(2));
            let t2 = &(&z0.pow(3).unwrap() * &z1c) * &z4;
            let t3 = (&(&z0 * &z1c) * &z4.pow(3).unwrap())
                .scale(&BigInt::from(4))
                .shift_up(1)
                .truncate(order);
            let alpha = &(&t1 - &t2) - &t3;
            let omega_inv = EtaQuotient::new(1, &[(2, 8), (8, 16), (1, -16), (16, -8)]).eval(order);
            (&alpha * &omega_inv).scale(&BigInt::from(64))
        },
    ));

    reg.push(IdentityCase::single(
        "eq48",
        "Eq. 48",
        100,
        zeta_combination,
        |order| zeta1(order).pow(7).unwrap(),
    ));

    reg.push(IdentityCase {
        name: "eq96_bracket",
        paper_ref: "Eq. 96 (triple-product brackets)",
        default_order: 100,
        checks: vec![
            Check {
                label: "even square sum",
                lhs: Box::new(eta(1, &[(4, 5), (2, -2), (8, -2)])),
                rhs: Box::new(|order| theta_sum(2, 0, false, order).unwrap()),
            },
            Check {
                label: "near-square sum",
                lhs: Box::new(eta(2, &[(8, 2), (4, -1)])),
                rhs: Box::new(|order| theta_sum(2, 2, false, order).unwrap()),
            },
        ],
    });

    reg.push(IdentityCase::single(
        "eq97",
        "Eq. 97 / Eq. 99",
        200,
        |order| {
            let even = theta_sum(2, 0, false, order).unwrap();
            let near = theta_sum(2, 2, false, order).unwrap();
            let sq = (&near * &near).shift_up(1).truncate(order);
            &(&even * &even) + &sq
        },
        |order| {
            let t3 = theta_sum(1, 0, false, order).unwrap();
            &t3 * &t3
        },
    ));

    reg.push(IdentityCase {
        name: "eq100",
        paper_ref: "Eq. 100",
        default_order: 100,
        checks: vec![
            Check {
                label: "eta form",
                lhs: Box::new(zeta_combination),
                rhs: Box::new(eta(1, &[(2, 14), (16, 7), (1, -7), (8, -14)])),
            },
            Check {
                label: "seventh power",
                lhs: Box::new(eta(1, &[(2, 14), (16, 7), (1, -7), (8, -14)])),
                rhs: Box::new(|order| zeta1(order).pow(7).unwrap()),
            },
        ],
    });

    reg
}

/// The immutable identity registry.
pub fn registry() -> &'static [IdentityCase] {
    static REGISTRY: OnceLock<Vec<IdentityCase>> = OnceLock::new();
    REGISTRY.get_or_init(build_registry)
}

pub fn find(name: &str) -> Option<&'static IdentityCase> {
    registry().iter().find(|c| c.name == name)
}

/// Verify one identity at the requested order.
pub fn verify(name: &str, order: usize) -> Result<VerifyReport, IdentityError> {
    find(name)
        .map(|case| case.verify(order))
        .ok_or_else(|| IdentityError::UnknownName(name.to_string()))
}

/// Verify every registered identity at `max(default_order, order)`.
pub fn verify_all(order: usize) -> Vec<VerifyReport> {
    registry()
        .iter()
        .map(|case| case.verify(case.default_order.max(order)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting;
    use num_traits::Zero;

    #[test]
    fn slice_identities_have_the_right_constants() {
        let report = verify("eq20", 20).unwrap();
        assert!(report.passed());
        assert_eq!(*eta(64, &[(2, 22), (1, -23)])(4).coeff(0), BigInt::from(64));

        let report = verify("eq18_31", 30).unwrap();
        assert!(report.passed());
        assert_eq!(*jagged_slice(3, 1)(4).coeff(0), BigInt::from(2)); // j(1) = 2
    }

    #[test]
    fn full_registry_passes_at_small_order() {
        for report in verify_all(1) {
            assert!(report.passed(), "{}: {:?}", report.name, report.mismatch);
        }
    }

    #[test]
    fn theta_square_identity_passes_at_200() {
        assert!(verify("eq97", 200).unwrap().passed());
    }

    #[test]
    fn substituted_identities_hold_to_effective_order_60() {
        // Each runs in t with q = t^r; check them out to t^(60 r).
        for (name, r) in [("eq29", 3), ("eq30_31", 3), ("eq41", 4), ("eq42_43", 8)] {
            let report = verify(name, 60 * r).unwrap();
            assert!(report.passed(), "{name}: {:?}", report.mismatch);
        }
    }

    #[test]
    fn unknown_name_is_rejected() {
        assert!(verify("eq0", 10).is_err());
    }

    #[test]
    fn corrupted_entry_reports_mismatch_location() {
        let bogus = IdentityCase::single(
            "bogus",
            "none",
            10,
            |order| {
                let mut s = IntSeries::one(order);
                s.set_coeff(1, BigInt::from(1));
                s
            },
            |order| {
                let mut s = IntSeries::one(order);
                s.set_coeff(1, BigInt::from(-1));
                s
            },
        );
        let report = bogus.verify(10);
        let mm = report.mismatch.expect("must fail");
        assert_eq!(mm.exponent, 1);
        assert_eq!(mm.lhs, BigInt::from(1));
        assert_eq!(mm.rhs, BigInt::from(-1));
    }

    #[test]
    fn eq17_forces_the_mod_5_congruence() {
        let p = counting::partition_numbers(100);
        let five = BigInt::from(5);
        for n in 0..20usize {
            assert!((&p[5 * n + 4] % &five).is_zero(), "5 | p({})", 5 * n + 4);
        }
    }

    #[test]
    fn eq97_counts_two_square_representations() {
        // Coefficient of q^p on the right is the number of lattice points on
        // x^2 + y^2 = p; for even p it equals the count for p/2.
        let rhs = {
            let t3 = theta_sum(1, 0, false, 41).unwrap();
            &t3 * &t3
        };
        let two_squares = |p: i64| -> i64 {
            let mut count = 0;
            for a in -7..=7i64 {
                for b in -7..=7i64 {
                    if a * a + b * b == p {
                        count += 1;
                    }
                }
            }
            count
        };
        for p in (0..=40usize).step_by(2) {
            assert_eq!(
                *rhs.coeff(p),
                BigInt::from(two_squares(p as i64 / 2)),
                "p = {p}"
            );
            assert_eq!(
                *rhs.coeff(p),
                BigInt::from(two_squares(p as i64)),
                "p = {p}"
            );
        }
    }
}
