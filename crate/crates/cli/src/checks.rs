//! The `verify` subcommand's cross-checks: every identity the library
//! claims, executed over configurable ranges, reported as JSON.
//!
//! Each check scans its whole range and records the first mismatch as a
//! witness (`n`, plus both conflicting values), so a failure pinpoints
//! itself. The overall status is pass iff every check passes.

use serde::Serialize;

use lucky_cars::{enumeration, quicksort, sequences, Count, Rational};

use crate::render;

#[derive(Debug, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<CheckRecord>,
    pub status: Status,
}

#[derive(Debug, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub range: String,
    pub status: Status,
    /// On failure: the first failing `n` and the conflicting values. The
    /// one permanently annotated check (`gessel_seo_printed_form`) also
    /// carries a witness while passing — see below.
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl VerificationReport {
    /// Wraps the records; overall status is pass iff every record passes.
    fn from_checks(checks: Vec<CheckRecord>) -> Self {
        let all_pass = checks.iter().all(|c| c.status == Status::Pass);
        Self {
            checks,
            status: if all_pass { Status::Pass } else { Status::Fail },
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Runs every check. `max_enum_n` caps the exhaustive `[n]^n` sweeps
/// (callers gate it at 9); `max_seq_n` caps the formula-only identities.
pub fn run_all(max_enum_n: usize, max_seq_n: usize) -> VerificationReport {
    let e = max_enum_n;
    let s = max_seq_n;
    let checks = vec![
        lucky_count_brute_vs_formulas(e),
        split_by_pf_halves(e),
        competing_car_recurrences(e),
        pf_polynomial_product_form(e.min(7)),
        pf_count_brute_vs_formula(e.min(7)),
        gessel_seo_printed_form(),
        q_recursive_equals_closed(s),
        q_telescoped_relation(s),
        a_routes_agree(s),
        l_closed_equals_recurrence_f(s),
        case_split_halves_closed_form(s),
        binomial_identity(s),
        pf_polynomial_sums_to_pf_count(s),
        quicksort_totals_match_a(),
        quicksort_mean_matches_q(),
    ];
    VerificationReport::from_checks(checks)
}

fn record(name: &str, range: String, witness: Option<String>) -> CheckRecord {
    CheckRecord {
        name: name.to_string(),
        range,
        status: if witness.is_none() {
            Status::Pass
        } else {
            Status::Fail
        },
        witness,
    }
}

fn big(v: u64) -> Count {
    Count::from(v)
}

fn big_ratio(n: usize) -> Rational {
    Rational::from_integer(big(n as u64))
}

/// Brute-forced `L_n` against all three formula routes.
fn lucky_count_brute_vs_formulas(e: usize) -> CheckRecord {
    let mut witness = None;
    for n in 2..=e {
        let brute = enumeration::count_lucky_n_minus_1(n).expect("n is gated");
        let closed = sequences::l_closed_form::<Count>(n).expect("n >= 2");
        let two_step = sequences::recurrence_f::<Count>(n);
        let total = sequences::a_total::<Count>(n).expect("n!*Q_n is integral");
        if brute != closed || brute != two_step || brute != total {
            witness = Some(format!(
                "n = {n}: brute {brute}, closed {closed}, two-step {two_step}, n!*Q_n {total}"
            ));
            break;
        }
    }
    record("lucky_count_brute_vs_formulas", format!("2..={e}"), witness)
}

/// The lists behind `L_n` split evenly into parking functions and
/// lists where a car fails to park.
fn split_by_pf_halves(e: usize) -> CheckRecord {
    let mut witness = None;
    for n in 2..=e {
        let (pf, non_pf) = enumeration::split_by_pf(n).expect("n is gated");
        let total = sequences::l_closed_form::<Count>(n).expect("n >= 2");
        if pf != non_pf || pf.clone() + non_pf.clone() != total {
            witness = Some(format!(
                "n = {n}: PF half {pf}, non-PF half {non_pf}, L_n {total}"
            ));
            break;
        }
    }
    record("split_by_pf_halves", format!("2..={e}"), witness)
}

/// The competing-car decomposition: with `N_n` the `n-1`-lucky lists in
/// which car 1's preference is unshared and `M_n` the rest,
/// `N_n = n * L_(n-1)` and `M_n = n * M_(n-1) + 2(n-1)!`.
fn competing_car_recurrences(e: usize) -> CheckRecord {
    let mut witness = None;
    let base = enumeration::competing_car_split(2).expect("n = 2 is always in range");
    if base.uncontested != big(0) || base.competing != big(2) {
        witness = Some(format!(
            "n = 2: expected split (0, 2), got ({}, {})",
            base.uncontested, base.competing
        ));
    }
    let mut prev_competing = base.competing;
    if witness.is_none() {
        for n in 3..=e {
            let split = match enumeration::competing_car_split(n) {
                Ok(split) => split,
                Err(err) => {
                    witness = Some(format!("n = {n}: {err}"));
                    break;
                }
            };
            let want_uncontested =
                big(n as u64) * sequences::l_closed_form::<Count>(n - 1).expect("n-1 >= 2");
            let want_competing = big(n as u64) * prev_competing.clone()
                + big(2) * sequences::factorial::<Count>(n - 1);
            if split.uncontested != want_uncontested || split.competing != want_competing {
                witness = Some(format!(
                    "n = {n}: split ({}, {}), recurrences give ({want_uncontested}, {want_competing})",
                    split.uncontested, split.competing
                ));
                break;
            }
            prev_competing = split.competing;
        }
    }
    record("competing_car_recurrences", format!("3..={e}"), witness)
}

/// Brute-forced lucky polynomial over parking functions against the
/// expanded product form, coefficient by coefficient.
fn pf_polynomial_product_form(cap: usize) -> CheckRecord {
    let mut witness = None;
    for n in 1..=cap {
        let brute = enumeration::pf_lucky_polynomial(n).expect("n is gated");
        let product = sequences::gessel_seo_rhs::<Count>(n);
        if brute != product {
            witness = Some(format!(
                "n = {n}: enumerated {brute}, product form {product}"
            ));
            break;
        }
    }
    record("pf_polynomial_product_form", format!("1..={cap}"), witness)
}

/// Brute-forced `|PF_n|` against the closed form `(n+1)^(n-1)`.
fn pf_count_brute_vs_formula(cap: usize) -> CheckRecord {
    let mut witness = None;
    for n in 1..=cap {
        let dist = enumeration::lucky_distribution(n).expect("n is gated");
        let brute: Count = dist.pf_only.iter().cloned().sum();
        let formula = sequences::pf_count::<Count>(n);
        if brute != formula {
            witness = Some(format!("n = {n}: brute {brute}, (n+1)^(n-1) = {formula}"));
            break;
        }
    }
    record("pf_count_brute_vs_formula", format!("1..={cap}"), witness)
}

/// The product form is sometimes quoted with upper limit `n`; that cannot
/// be right, because at `q = 1` it would give `(n+1)^n` where `|PF_n| =
/// (n+1)^(n-1)` is required. This check confirms the `n-1`-factor form
/// matches `|PF_n|` while the `n`-factor form does not — and it always
/// carries a witness, so the report documents the correction instead of
/// hiding it.
fn gessel_seo_printed_form() -> CheckRecord {
    let mut failure = None;
    for n in 1..=10usize {
        let corrected = sequences::gessel_seo_rhs::<Count>(n).eval_at_one();
        let pf = sequences::pf_count::<Count>(n);
        // The skipped i = n factor contributes (n + q), i.e. n+1 at q = 1.
        let with_extra_factor = corrected.clone() * big(n as u64 + 1);
        if corrected != pf || with_extra_factor == pf {
            failure = Some(format!(
                "n = {n}: n-1 factors give {corrected}, n factors give {with_extra_factor}, |PF_n| = {pf}"
            ));
            break;
        }
    }
    let status = if failure.is_none() {
        Status::Pass
    } else {
        Status::Fail
    };
    CheckRecord {
        name: "gessel_seo_printed_form".into(),
        range: "1..=10".into(),
        status,
        witness: Some(failure.unwrap_or_else(|| {
            "an upper limit of n on the product would give (n+1)^n at q = 1; \
             the implemented n-1-factor form gives (n+1)^(n-1) = |PF_n|"
                .into()
        })),
    }
}

/// `Q_n` from the divide-and-conquer recursion against the closed form.
fn q_recursive_equals_closed(s: usize) -> CheckRecord {
    let table = sequences::q_expected_recursive_table::<Rational>(s);
    let mut witness = None;
    for (n, recursive) in table.iter().enumerate() {
        let closed = sequences::q_expected_closed::<Rational>(n);
        if recursive != &closed {
            witness = Some(format!(
                "n = {n}: recursive {}, closed {}",
                render::ratio(recursive),
                render::ratio(&closed)
            ));
            break;
        }
    }
    record("q_recursive_equals_closed", format!("0..={s}"), witness)
}

/// The telescoped one-step relation `n Q_n = (n+1) Q_(n-1) + 2(n-1)`.
fn q_telescoped_relation(s: usize) -> CheckRecord {
    let mut witness = None;
    let mut prev = sequences::q_expected_closed::<Rational>(0);
    for n in 1..=s {
        let q = sequences::q_expected_closed::<Rational>(n);
        let lhs = big_ratio(n) * q.clone();
        let rhs = big_ratio(n + 1) * prev + big_ratio(2 * (n - 1));
        if lhs != rhs {
            witness = Some(format!(
                "n = {n}: n*Q_n = {}, (n+1)*Q_(n-1) + 2(n-1) = {}",
                render::ratio(&lhs),
                render::ratio(&rhs)
            ));
            break;
        }
        prev = q;
    }
    record("q_telescoped_relation", format!("1..={s}"), witness)
}

/// `A_n` by rational product, one-step recurrence, and two-step recurrence.
fn a_routes_agree(s: usize) -> CheckRecord {
    let mut witness = None;
    for n in 0..=s {
        let total = match sequences::a_total::<Count>(n) {
            Ok(total) => total,
            Err(err) => {
                witness = Some(format!("n = {n}: {err}"));
                break;
            }
        };
        let stepwise = sequences::a_stepwise::<Count>(n);
        let two_step = sequences::recurrence_f::<Count>(n);
        if total != stepwise || total != two_step {
            witness = Some(format!(
                "n = {n}: n!*Q_n {total}, one-step {stepwise}, two-step {two_step}"
            ));
            break;
        }
    }
    record("a_routes_agree", format!("0..={s}"), witness)
}

/// The lucky-count closed form against the `A_n` recurrence.
fn l_closed_equals_recurrence_f(s: usize) -> CheckRecord {
    let mut witness = None;
    for n in 2..=s {
        let closed = sequences::l_closed_form::<Count>(n).expect("n >= 2");
        let two_step = sequences::recurrence_f::<Count>(n);
        if closed != two_step {
            witness = Some(format!("n = {n}: closed {closed}, two-step {two_step}"));
            break;
        }
    }
    record("l_closed_equals_recurrence_f", format!("2..={s}"), witness)
}

/// The unable/able case counts are equal and sum to the closed form.
fn case_split_halves_closed_form(s: usize) -> CheckRecord {
    let mut witness = None;
    for n in 2..=s {
        let unable = sequences::count_unable_to_park::<Count>(n).expect("n >= 2");
        let able = sequences::count_able_to_park::<Count>(n).expect("n >= 2");
        let total = sequences::l_closed_form::<Count>(n).expect("n >= 2");
        if unable != able || unable.clone() + able.clone() != total {
            witness = Some(format!(
                "n = {n}: unable {unable}, able {able}, L_n {total}"
            ));
            break;
        }
    }
    record("case_split_halves_closed_form", format!("2..={s}"), witness)
}

/// `sum_l l*C(n-l-1, i-l-1) = C(n, i-2)` over the whole triangle.
fn binomial_identity(s: usize) -> CheckRecord {
    let mut witness = None;
    'outer: for n in 2..=s {
        for i in 2..=n {
            let (lhs, rhs) =
                sequences::binomial_identity_check::<Count>(n, i).expect("2 <= i <= n");
            if lhs != rhs {
                witness = Some(format!("n = {n}, i = {i}: lhs {lhs}, rhs {rhs}"));
                break 'outer;
            }
        }
    }
    record("binomial_identity", format!("2 <= i <= n <= {s}"), witness)
}

/// The product form evaluated at `q = 1` equals `|PF_n|`.
fn pf_polynomial_sums_to_pf_count(s: usize) -> CheckRecord {
    let mut witness = None;
    for n in 1..=s {
        let sum = sequences::gessel_seo_rhs::<Count>(n).eval_at_one();
        let formula = sequences::pf_count::<Count>(n);
        if sum != formula {
            witness = Some(format!(
                "n = {n}: q = 1 gives {sum}, (n+1)^(n-1) = {formula}"
            ));
            break;
        }
    }
    record(
        "pf_polynomial_sums_to_pf_count",
        format!("1..={s}"),
        witness,
    )
}

/// Comparisons summed over all `n!` orderings against `A_n = n! * Q_n`.
fn quicksort_totals_match_a() -> CheckRecord {
    let mut witness = None;
    for n in 1..=8usize {
        let swept = quicksort::total_over_all_permutations(n).expect("n <= 9");
        let formula = sequences::a_total::<Count>(n).expect("n!*Q_n is integral");
        if swept != formula {
            witness = Some(format!("n = {n}: swept {swept}, n!*Q_n {formula}"));
            break;
        }
    }
    record("quicksort_totals_match_a", "1..=8".into(), witness)
}

/// Mean comparisons over all orderings against `2(n+1)H_n - 4n`.
fn quicksort_mean_matches_q() -> CheckRecord {
    let mut witness = None;
    for n in 1..=8usize {
        let measured = quicksort::empirical_mean(n).expect("n <= 9");
        let closed = sequences::q_expected_closed::<Rational>(n);
        if measured != closed {
            witness = Some(format!(
                "n = {n}: measured {}, closed {}",
                render::ratio(&measured),
                render::ratio(&closed)
            ));
            break;
        }
    }
    record("quicksort_mean_matches_q", "1..=8".into(), witness)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_derives_status_from_the_witness() {
        let pass = record("x", "2..=4".into(), None);
        assert_eq!(pass.status, Status::Pass);
        assert_eq!(pass.witness, None);
        let fail = record("x", "2..=4".into(), Some("n = 2: 4 != 2".into()));
        assert_eq!(fail.status, Status::Fail);
    }

    #[test]
    fn one_failing_record_fails_the_whole_report() {
        let good = record("good", "2..=4".into(), None);
        let report = VerificationReport::from_checks(vec![good]);
        assert!(report.passed());

        let good = record("good", "2..=4".into(), None);
        let bad = record("bad", "2..=4".into(), Some("n = 2: 4 != 2".into()));
        let report = VerificationReport::from_checks(vec![good, bad]);
        assert!(!report.passed());
        assert_eq!(report.status, Status::Fail);
    }

    #[test]
    fn report_serializes_with_the_documented_key_order() {
        let report = VerificationReport::from_checks(vec![record("x", "2..=4".into(), None)]);
        let json = serde_json::to_string(&report).unwrap();
        assert_eq!(
            json,
            r#"{"checks":[{"name":"x","range":"2..=4","status":"pass","witness":null}],"status":"pass"}"#
        );
    }

    #[test]
    fn default_ranges_all_pass() {
        // Small ranges keep this unit-level; the integration tests run the
        // full defaults through the binary.
        let report = run_all(3, 10);
        assert!(report.passed());
        assert_eq!(report.checks.len(), 15);
    }
}
