//! The end-to-end verification suite: eleven named criteria covering golden
//! enumerations, cross-validated counting, congruences, slice identities, the
//! identity registry, length-graded equivalences, multi-sums, the
//! q-difference solver, and the hyperbolic estimate. `run_all` is the single
//! entry point used by both the CLI and the acceptance tests.

use crate::counting::{self, JkTables};
use crate::families::{enumerate_restricted, FamilySpec};
use crate::genfun::{self, closed_form, multisum, staircase_transform, BiSeries, MultiSum};
use crate::identities;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Result of one acceptance criterion.
#[derive(Debug, Clone)]
pub struct CriterionOutcome {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CriterionOutcome {
    fn from_result(id: usize, name: &'static str, result: Result<String, String>) -> Self {
        match result {
            Ok(detail) => CriterionOutcome {
                id,
                name,
                passed: true,
                detail,
            },
            Err(detail) => CriterionOutcome {
                id,
                name,
                passed: false,
                detail,
            },
        }
    }
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Criterion 1: the golden list of 01-partitions of weight <= 7 and length 5.
pub fn golden_enumeration() -> CriterionOutcome {
    let run = || -> Result<String, String> {
        let f01 = FamilySpec::f01();
        let mut got: Vec<Vec<u32>> = Vec::new();
        for w in 0..=7 {
            got.extend(f01.enumerate(w, Some(5)).iter().map(|p| p.parts().to_vec()));
        }
        got.sort();
        let mut expected: Vec<Vec<u32>> = [
            "10101", "20101", "11101", "30101", "21101", "11111", "12101", "40101", "31101",
            "22101", "21111", "12111", "21201", "50101", "41101", "32101", "31111", "22111",
            "23101", "21211", "12121", "31201", "22201",
        ]
        .iter()
        .map(|s| s.chars().map(|c| c.to_digit(10).unwrap()).collect())
        .collect();
        expected.sort();
        check(got == expected, || {
            format!(
                "enumeration produced {} tuples, expected the golden 23",
                got.len()
            )
        })?;
        Ok("23 golden tuples of weight <= 7, length 5 reproduced".into())
    };
    CriterionOutcome::from_result(1, "golden-enumeration", run())
}

/// Criterion 2: the weight-3 length polynomial three ways.
pub fn length_polynomial_three_ways() -> CriterionOutcome {
    let run = || -> Result<String, String> {
        let expected: Vec<BigInt> = [0i64, 1, 2, 2, 1, 1, 1, 0, 0]
            .iter()
            .map(|&c| c.into())
            .collect();
        let gf = closed_form("01", 8, 4).map_err(|e| e.to_string())?;
        let by_product = gf.q_column(3);
        check(by_product == expected, || {
            "closed form disagrees at q^3".into()
        })?;

        let tables = JkTables::build(8, 3);
        let by_recurrence: Vec<BigInt> = (0..=8).map(|m| tables.j(m, 3).clone()).collect();
        check(by_recurrence == expected, || {
            "length recurrence disagrees at q^3".into()
        })?;

        let f01 = FamilySpec::f01();
        let by_enumeration: Vec<BigInt> = (0..=8)
            .map(|m| {
                if m == 0 {
                    BigInt::zero()
                } else {
                    BigInt::from(f01.enumerate(3, Some(m)).len())
                }
            })
            .collect();
        check(by_enumeration == expected, || {
            "enumeration disagrees at q^3".into()
        })?;
        Ok("q^3 length polynomial z + 2z^2 + 2z^3 + z^4 + z^5 + z^6 agreed three ways".into())
    };
    CriterionOutcome::from_result(2, "length-polynomial-three-ways", run())
}

/// Criterion 3: j(15) with its exact per-level square breakdown, and four-way
/// agreement of the j computations up to n = 25.
pub fn j_cross_validation() -> CriterionOutcome {
    let run = || -> Result<String, String> {
        let breakdown = counting::j_by_squares(15);
        let got: Vec<(u32, i64)> = breakdown
            .terms
            .iter()
            .map(|t| (t.squares, i64::try_from(&t.signed_count).unwrap()))
            .collect();
        let expected = vec![(4, -12), (6, -20), (7, 7), (9, 36), (12, -12), (15, 1)];
        check(got == expected, || {
            format!("square breakdown of 15 was {got:?}")
        })?;
        check(breakdown.total == BigInt::from(1472), || {
            "j(15) != 1472".into()
        })?;

        let rec = counting::j_by_recurrence(25);
        let conv = counting::j_by_convolution(25);
        let series = counting::j_by_series(25);
        let f01 = FamilySpec::f01();
        for n in 0..=25usize {
            check(rec[n] == conv[n], || {
                format!("recurrence vs convolution at {n}")
            })?;
            check(rec[n] == series[n], || {
                format!("recurrence vs series at {n}")
            })?;
            let by_enum = if n == 0 {
                1
            } else {
                f01.enumerate(n as u32, None).len()
            };
            check(rec[n] == BigInt::from(by_enum), || {
                format!("recurrence vs enumeration at {n}")
            })?;
        }
        Ok("j(15) = 1472 = 64*23 with exact breakdown; j agreed 4 ways for n <= 25".into())
    };
    CriterionOutcome::from_result(3, "j-cross-validation", run())
}

/// Criterion 4: parity, least-squares power divisibility, mod 64 on 8n+7,
/// and the predicted worked cases for r = 7.
pub fn congruences() -> CriterionOutcome {
    let run = || -> Result<String, String> {
        let j = counting::j_by_recurrence(500);
        let even = counting::congruence_verify(&j, 1, 0, 2, 300, 2);
        check(even.passed(), || {
            format!("evenness failed at {:?}", even.counterexample)
        })?;

        let ms = counting::min_squares_upto(300);
        for n in 1..=300usize {
            let m = BigInt::one() << ms[n];
            check((&j[n] % &m).is_zero(), || {
                format!("2^{} does not divide j({n})", ms[n])
            })?;
        }

        let strong = counting::congruence_verify(&j, 8, 7, 64, 500, 0);
        check(strong.passed(), || {
            format!("mod 64 failed at {:?}", strong.counterexample)
        })?;

        // Worked cases at r = 7: the (7,2) and (7,5) predictions are pinned
        // exactly; the stated s = 3 modulus (4) is implied by the predicted 8.
        let p2 = counting::congruence_predict(7, 2).map_err(|e| e.to_string())?;
        check(p2.modulus == 4 && p2.p_prime == 2 && p2.c == 1, || {
            format!("prediction for (7,2) was {p2:?}")
        })?;
        let p3 = counting::congruence_predict(7, 3).map_err(|e| e.to_string())?;
        check(p3.modulus % 4 == 0, || {
            format!("prediction for (7,3) was {p3:?}")
        })?;
        let p5 = counting::congruence_predict(7, 5).map_err(|e| e.to_string())?;
        check(p5.modulus == 8 && p5.c == 2, || {
            format!("prediction for (7,5) was {p5:?}")
        })?;
        let p87 = counting::congruence_predict(8, 7).map_err(|e| e.to_string())?;
        check(p87.modulus == 64, || {
            format!("prediction for (8,7) was {p87:?}")
        })?;
        Ok("even for 2..300; 2^minsquares | j(n) to 300; 64 | j(8n+7) to 500; r=7 worked cases reproduced".into())
    };
    CriterionOutcome::from_result(4, "congruences", run())
}

/// Criterion 5: the nine compact slice identities plus the mod-64 slice, at
/// order 30 in the slice variable.
pub fn slice_identities() -> CriterionOutcome {
    let run = || -> Result<String, String> {
        let names = [
            "eq18_20", "eq18_21", "eq18_30", "eq18_31", "eq18_32", "eq18_40", "eq18_41", "eq18_42",
            "eq18_43", "eq20",
        ];
        for name in names {
            let report = identities::verify(name, 30).map_err(|e| e.to_string())?;
            check(report.passed(), || {
                format!("{name} mismatched: {:?}", report.mismatch)
            })?;
        }
        Ok("all ten progression slice identities passed at order 30".into())
    };
    CriterionOutcome::from_result(5, "slice-identities", run())
}

/// Criterion 6: the full identity registry at default orders.
pub fn identity_suite() -> CriterionOutcome {
    let run = || -> Result<String, String> {
        let reports = identities::verify_all(0);
        for report in &reports {
            check(report.passed(), || {
                format!(
                    "{} (order {}) mismatched: {:?}",
                    report.name, report.order, report.mismatch
                )
            })?;
        }
        Ok(format!(
            "all {} registry identities passed at their default orders",
            reports.len()
        ))
    };
    CriterionOutcome::from_result(6, "identity-suite", run())
}

/// Criterion 7: length-graded coefficients equal enumeration counts for all
/// four families up to weight 16.
pub fn length_graded_equivalence() -> CriterionOutcome {
    let run = || -> Result<String, String> {
        let n_max = 16u32;
        for name in ["01", "02", "012", "001"] {
            let family = FamilySpec::by_name(name).map_err(|e| e.to_string())?;
            let m_max = (1..=n_max).map(|w| family.max_length(w)).max().unwrap_or(0);
            let gf = closed_form(name, m_max, n_max as usize + 1).map_err(|e| e.to_string())?;
            for n in 0..=n_max {
                for m in 0..=m_max {
                    let count = if m == 0 {
                        usize::from(n == 0)
                    } else {
                        family.enumerate(n, Some(m)).len()
                    };
                    check(*gf.coeff(m, n as usize) == BigInt::from(count), || {
                        format!("family {name}: coefficient z^{m} q^{n} vs {count} members")
                    })?;
                }
            }
        }
        let f02 = FamilySpec::f02();
        check(f02.enumerate(9, Some(5)).len() == 7, || {
            "02 count at (5, 9) is not 7".into()
        })?;
        Ok("closed forms match enumeration for 01/02/012/001, n <= 16; count(5,9) = 7".into())
    };
    CriterionOutcome::from_result(7, "length-graded-equivalence", run())
}

fn family_sigma(family: &FamilySpec) -> impl Fn(usize) -> i64 + '_ {
    move |m| {
        family
            .staircase_weight(m)
            .expect("built-in families carry staircases")
    }
}

/// Staircase-transformed closed form of a family at exactly `(z_max, q_order)`.
fn transformed_closed_form(name: &str, z_max: usize, q_order: usize) -> Result<BiSeries, String> {
    let family = FamilySpec::by_name(name).map_err(|e| e.to_string())?;
    let max_down = (0..=z_max)
        .map(|m| (-family.staircase_weight(m).unwrap()).max(0) as usize)
        .max()
        .unwrap_or(0);
    let gf = closed_form(name, z_max, q_order + max_down).map_err(|e| e.to_string())?;
    let t = staircase_transform(&gf, family_sigma(&family)).map_err(|e| e.to_string())?;
    Ok(t.truncate(z_max, q_order))
}

/// Criterion 8: multi-sums equal closed forms / staircase transforms at
/// (6, 16), and the transformed series count the restricted partitions.
pub fn multisum_equivalences() -> CriterionOutcome {
    let run = || -> Result<String, String> {
        let (m_max, n_max) = (6usize, 16usize);
        let pairs: [(MultiSum, BiSeries); 6] = [
            (MultiSum::Eq63, transformed_closed_form("01", m_max, n_max)?),
            (
                MultiSum::Eq75,
                closed_form("02", m_max, n_max).map_err(|e| e.to_string())?,
            ),
            (
                MultiSum::Eq89,
                closed_form("012", m_max, n_max).map_err(|e| e.to_string())?,
            ),
            (MultiSum::Eq78, transformed_closed_form("02", m_max, n_max)?),
            (
                MultiSum::Eq88,
                transformed_closed_form("012", m_max, n_max)?,
            ),
            (
                MultiSum::Eq94,
                transformed_closed_form("001", m_max, n_max)?,
            ),
        ];
        for (id, expected) in &pairs {
            let sum = multisum(*id, m_max, n_max);
            check(sum == *expected, || {
                format!("multi-sum {} disagrees", id.name())
            })?;
        }

        // The transformed series must count difference-restricted partitions.
        for name in ["01", "02", "012", "001"] {
            let family = FamilySpec::by_name(name).map_err(|e| e.to_string())?;
            let conds = family.staircase().unwrap().image_conditions;
            let t = transformed_closed_form(name, m_max, n_max)?;
            for m in 0..=m_max {
                for n in 0..n_max {
                    let count = if m == 0 {
                        usize::from(n == 0)
                    } else {
                        enumerate_restricted(conds, n as u32, m).len()
                    };
                    check(*t.coeff(m, n) == BigInt::from(count), || {
                        format!("family {name}: restricted count at z^{m} q^{n}")
                    })?;
                }
            }
        }
        Ok("all six multi-sums matched at (6,16); transforms count restricted partitions".into())
    };
    CriterionOutcome::from_result(8, "multisum-equivalences", run())
}

/// Criterion 9: the q-difference systems reproduce their closed forms; the
/// partition-level system reproduces the staircase sum and satisfies its
/// third-order relation.
pub fn qdiff_solver() -> CriterionOutcome {
    let run = || -> Result<String, String> {
        let cases = [
            (genfun::system_01(), "01"),
            (genfun::system_02(), "02"),
            (genfun::system_012(), "012"),
            (genfun::system_001(), "001"),
        ];
        for (system, name) in cases {
            let sol = system.solve(8, 14).map_err(|e| e.to_string())?;
            let expected = closed_form(name, 8, 14).map_err(|e| e.to_string())?;
            check(sol[0] == expected, || {
                format!("system for family {name} missed its closed form")
            })?;
        }

        let sol = genfun::system_distance2()
            .solve(6, 20)
            .map_err(|e| e.to_string())?;
        let a = &sol[0];
        check(*a == multisum(MultiSum::Eq63, 6, 20), || {
            "partition-level system disagrees with the staircase sum".into()
        })?;

        let at18 = a.truncate(6, 18);
        let mut rhs = at18.dilate(1).scale_monomial(1, 1, 1);
        rhs = &rhs + &at18.dilate(1);
        rhs = &rhs + &at18.dilate(2).scale_monomial(1, 2, 2);
        rhs = &rhs + &at18.dilate(3).scale_monomial(-1, 3, 5);
        check(at18 == rhs, || {
            "third-order relation failed at (6,18)".into()
        })?;
        Ok(
            "four first-order systems matched closed forms at (8,14); third-order relation holds"
                .into(),
        )
    };
    CriterionOutcome::from_result(9, "qdiff-solver", run())
}

/// Criterion 10: the at-most-m count equals both of its table expressions for
/// m, n <= 20.
pub fn at_most_lemma() -> CriterionOutcome {
    let run = || -> Result<String, String> {
        let t = JkTables::build(20, 40);
        for m in 0..=20usize {
            for n in 0..=20usize {
                let direct = t.j_at_most(m, n);
                let mut alt = t.j(m, n + m).clone();
                if m >= 2 {
                    alt -= t.j(m - 2, n + m - 1);
                }
                check(direct == alt, || {
                    format!("at-most expressions differ at m={m}, n={n}")
                })?;
            }
        }
        Ok("k(m, n+m) = j(m, n+m) - j(m-2, n+m-1) for all m, n <= 20".into())
    };
    CriterionOutcome::from_result(10, "at-most-lemma", run())
}

/// Criterion 11: the hyperbolic estimate stays within 2% of exact j(n) on
/// 15 <= n <= 100 and improves on average.
pub fn estimate_quality() -> CriterionOutcome {
    let run = || -> Result<String, String> {
        let j = counting::j_by_recurrence(100);
        let mut errors = Vec::new();
        for n in 15..=100u64 {
            let err = counting::relative_error(counting::ramanujan_estimate(n), &j[n as usize]);
            check(err < 0.02, || {
                format!("relative error {err:.4} at n = {n} exceeds 2%")
            })?;
            errors.push(err);
        }
        let mean = |xs: &[f64]| xs.iter().sum::<f64>() / xs.len() as f64;
        let third = errors.len() / 3;
        let (a, b, c) = (
            mean(&errors[..third]),
            mean(&errors[third..2 * third]),
            mean(&errors[2 * third..]),
        );
        check(a > b && b > c, || {
            format!("mean relative error not improving: {a:.5} -> {b:.5} -> {c:.5}")
        })?;
        Ok(format!(
            "relative error below 2% on [15, 100], mean improving {a:.5} -> {b:.5} -> {c:.5}"
        ))
    };
    CriterionOutcome::from_result(11, "estimate-quality", run())
}

/// Run every acceptance criterion in order.
pub fn run_all() -> Vec<CriterionOutcome> {
    vec![
        golden_enumeration(),
        length_polynomial_three_ways(),
        j_cross_validation(),
        congruences(),
        slice_identities(),
        identity_suite(),
        length_graded_equivalence(),
        multisum_equivalences(),
        qdiff_solver(),
        at_most_lemma(),
        estimate_quality(),
    ]
}
