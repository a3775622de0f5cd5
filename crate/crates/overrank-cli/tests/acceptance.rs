//! Acceptance gate: the twelve criteria the library and CLI must satisfy,
//! run sequentially with one PASS/FAIL line per criterion. Every comparison
//! is exact integer equality.
//!
//! This target uses its own harness (`harness = false` in Cargo.toml) so the
//! per-criterion lines always reach the terminal; the process exits nonzero
//! if any criterion fails.

use std::panic::catch_unwind;
use std::process::Command;
use std::time::{Duration, Instant};

use overrank_core::partitions::{enumerate_overpartitions, oracle_rank_table};
use overrank_core::rank_gf::{fmk_by_definition, fmk_closed_form, fmk_tables_up_to, gf_rank_table};
use overrank_core::verify::{
    adjudicate_m2_convention_with, check_akm_lemma, check_cm_ordinary, check_diff_identity,
    check_fmk_nonneg, check_gf_vs_oracle, check_lemma_ratio, check_lemma_threshold,
    check_thm_m_monotone, check_thm_n_monotone_d, check_thm_n_monotone_m2, VerificationReport,
    Violation,
};
use overrank_core::{BigInt, M2Convention, RankStatistic};

/// A report that passed with nothing even at excluded points.
fn assert_clean(report: &VerificationReport) {
    assert!(
        report.passed && report.expected_exceptions.is_empty(),
        "{}: violations {:?}, exceptions {:?}",
        report.check_id,
        report.violations,
        report.expected_exceptions
    );
}

fn find_exception(report: &VerificationReport, m: i64, n: i64) -> &Violation {
    report
        .expected_exceptions
        .iter()
        .find(|v| v.location == [m, n])
        .unwrap_or_else(|| panic!("{}: no recorded failure at ({m},{n})", report.check_id))
}

/// Criterion 1: Enumeration ground truth: there are exactly 14 overpartitions of 4.
fn criterion_01_overpartition_count() {
    assert_eq!(enumerate_overpartitions(4).count(), 14);
}

/// Criterion 2: Pipeline equivalence: the generating-function table equals the
/// enumeration table entrywise at T = 30 for all three statistics, with the
/// M2 comparison singling out exactly one rounding convention (ceiling) and
/// pinning the other convention's first mismatch to (m,n) = (0,1).
fn criterion_02_pipeline_equivalence() {
    let t = 30;
    for statistic in [RankStatistic::Dyson, RankStatistic::DRank] {
        let gf = gf_rank_table(statistic, t);
        let oracle = oracle_rank_table(statistic, t, M2Convention::Ceiling);
        assert_clean(&check_gf_vs_oracle(statistic, &gf, &oracle));
    }

    let gf = gf_rank_table(RankStatistic::M2Rank, t);
    let floor = oracle_rank_table(RankStatistic::M2Rank, t, M2Convention::Floor);
    let ceiling = oracle_rank_table(RankStatistic::M2Rank, t, M2Convention::Ceiling);
    let (adjudication, detected) = adjudicate_m2_convention_with(&gf, &floor, &ceiling);
    assert_eq!(
        detected,
        Some(M2Convention::Ceiling),
        "exactly one convention must match"
    );
    assert!(adjudication.passed);
    let mismatch = &adjudication.expected_exceptions[0];
    assert_eq!(
        mismatch.location,
        [0, 1],
        "rejected convention's first mismatch"
    );
    assert_clean(&check_gf_vs_oracle(RankStatistic::M2Rank, &gf, &ceiling));
}

/// Criterion 3: The three ways of computing f_{m,k} agree: definition, recurrence and
/// closed form for k <= 2 (|m| <= 40, T = 60); definition and recurrence for
/// k <= 6 (|m| <= 40, T = 40).
fn criterion_03_fmk_triple_agreement() {
    let by_recurrence = fmk_tables_up_to(2, 60);
    for (k, level) in by_recurrence.iter().enumerate() {
        let by_definition = fmk_by_definition(k, 60);
        for m in -40..=40 {
            let definition = by_definition.row(m).unwrap();
            assert_eq!(definition, level.row(m).unwrap(), "f({m},{k}) def vs rec");
            let closed = fmk_closed_form(m, k, 60).unwrap();
            assert_eq!(definition, &closed, "f({m},{k}) def vs closed form");
        }
    }

    let by_recurrence = fmk_tables_up_to(6, 40);
    for (k, level) in by_recurrence.iter().enumerate() {
        let by_definition = fmk_by_definition(k, 40);
        for m in -40..=40 {
            assert_eq!(
                by_definition.row(m).unwrap(),
                level.row(m).unwrap(),
                "f({m},{k}) def vs rec"
            );
        }
    }
}

/// Criterion 4: Nonnegativity of the f-family for 2 <= k <= 8 at T = 60:
/// f_{0,k}+q-q^2 >= 0, constant term 1, f_{1,k} >= q^{k+2}, and f_{m,k} >= 0
/// for 2 <= m <= 40.
fn criterion_04_fmk_nonnegativity() {
    for report in check_fmk_nonneg(2, 8, 40, 60) {
        assert_clean(&report);
    }
}

/// Criterion 5: Threshold bound: q^a/(1+q^c) + q^b/((1-q^3)(1-q^4)) has nonnegative
/// coefficients from n = b+6 on, for 0 <= a <= 8, 0 <= b <= 12, 1 <= c <= 8,
/// swept to T = 120.
fn criterion_05_threshold_bound() {
    let report = check_lemma_threshold(8, 12, 8, 120);
    assert!(
        report.passed,
        "violations above threshold: {:?}",
        report.violations
    );
}

/// Criterion 6: Ratio bound: (1-q^{m+1})/((1-q^2)(1-q^3)) has all coefficients >= 0
/// for 1 <= m <= 40 at T = 120.
fn criterion_06_ratio_bound() {
    assert_clean(&check_lemma_ratio(40, 120));
}

/// Criterion 7: Kernel coefficient family at T = 30, 0 <= k <= 6: recurrence equals
/// kernel expansion, a-symmetry in m, b >= 0 for m >= 0, b-antisymmetry
/// about m = -1, and the b-level recurrence.
fn criterion_07_kernel_coefficient_suite() {
    for report in check_akm_lemma(6, 30) {
        assert_clean(&report);
    }
}

/// Criterion 8: Monotonicity in n at T = 40: every failure for the D-rank lies in
/// {(m, m+2) : m >= 0} ∪ {(0,4)} and the three known small failures carry
/// their exact values; the M2-rank sweep is failure-free.
fn criterion_08_n_monotonicity_sweep() {
    let report = check_thm_n_monotone_d(&gf_rank_table(RankStatistic::DRank, 40));
    assert!(
        report.passed,
        "failures outside the excluded set: {:?}",
        report.violations
    );
    for v in &report.expected_exceptions {
        let (m, n) = (v.location[0], v.location[1]);
        assert!(
            m >= 0 && (n == m + 2 || (m == 0 && n == 4)),
            "failure outside the allowed set at ({m},{n})"
        );
    }
    for (m, n, lhs, rhs) in [(0, 2, 0, 2), (0, 4, 2, 4), (1, 3, 0, 2)] {
        let v = find_exception(&report, m, n);
        assert_eq!(v.lhs, BigInt::from(lhs), "count at ({m},{n})");
        assert_eq!(v.rhs, BigInt::from(rhs), "count at ({m},{n}-1)");
    }

    assert_clean(&check_thm_n_monotone_m2(&gf_rank_table(
        RankStatistic::M2Rank,
        40,
    )));
}

/// Criterion 9: Monotonicity in m at T = 40: no failures for either overpartition
/// statistic.
fn criterion_09_m_monotonicity_sweep() {
    for statistic in [RankStatistic::DRank, RankStatistic::M2Rank] {
        assert_clean(&check_thm_m_monotone(
            statistic,
            &gf_rank_table(statistic, 40),
        ));
    }
}

/// Criterion 10: Ordinary-partition rank sweeps at T = 40: monotonicity in m is
/// failure-free; monotonicity in n fails only where n < 12 or n = m+2.
fn criterion_10_ordinary_rank_sweep() {
    let reports = check_cm_ordinary(&gf_rank_table(RankStatistic::Dyson, 40));
    assert_eq!(reports[0].check_id, "ordinary-rank-n-monotone");
    assert!(
        reports[0].passed,
        "failures outside the excluded set: {:?}",
        reports[0].violations
    );
    for v in &reports[0].expected_exceptions {
        let (m, n) = (v.location[0], v.location[1]);
        assert!(
            n < 12 || n == m + 2,
            "failure outside the allowed set at ({m},{n})"
        );
    }
    assert_eq!(reports[1].check_id, "ordinary-rank-m-monotone");
    assert_clean(&reports[1]);
}

/// Criterion 11: First-difference identity: the closed-form series for
/// c(m,n) - c(m,n-1) matches the table differences for |m| <= 10 at T = 40,
/// for both overpartition statistics.
fn criterion_11_first_difference_identity() {
    for statistic in [RankStatistic::DRank, RankStatistic::M2Rank] {
        let table = gf_rank_table(statistic, 40);
        assert_clean(&check_diff_identity(statistic, 10, &table));
    }
}

/// Criterion 12: CLI contract: `verify --check all --max-n 40` exits 0 in under 60
/// seconds and produces byte-identical output across two runs.
fn criterion_12_cli_determinism() {
    let exe = env!("CARGO_BIN_EXE_overrank");
    let args = ["verify", "--check", "all", "--max-n", "40"];
    let started = Instant::now();
    let first = Command::new(exe).args(args).output().expect("run overrank");
    let elapsed = started.elapsed();
    assert!(
        first.status.success(),
        "exit {:?}, stderr: {}",
        first.status.code(),
        String::from_utf8_lossy(&first.stderr)
    );
    assert!(elapsed < Duration::from_secs(60), "sweep took {elapsed:?}");
    let second = Command::new(exe).args(args).output().expect("run overrank");
    assert!(second.status.success());
    assert_eq!(first.stdout, second.stdout, "output differs between runs");
}

fn main() {
    let criteria: &[(&str, fn())] = &[
        ("criterion 01: 14 overpartitions of 4", criterion_01_overpartition_count),
        ("criterion 02: series and enumeration pipelines agree (T=30), ceiling convention adjudicated", criterion_02_pipeline_equivalence),
        ("criterion 03: f_{m,k} definition/recurrence/closed form agree", criterion_03_fmk_triple_agreement),
        ("criterion 04: f_{m,k} nonnegativity suite (k<=8, T=60)", criterion_04_fmk_nonnegativity),
        ("criterion 05: threshold bound from n=b+6 (T=120)", criterion_05_threshold_bound),
        ("criterion 06: ratio bound nonnegative (m<=40, T=120)", criterion_06_ratio_bound),
        ("criterion 07: kernel coefficient lemma suite (k<=6, T=30)", criterion_07_kernel_coefficient_suite),
        ("criterion 08: n-monotonicity sweep with exact exceptional points (T=40)", criterion_08_n_monotonicity_sweep),
        ("criterion 09: m-monotonicity sweep failure-free (T=40)", criterion_09_m_monotonicity_sweep),
        ("criterion 10: ordinary-rank sweeps with excluded small cases (T=40)", criterion_10_ordinary_rank_sweep),
        ("criterion 11: first-difference identity (|m|<=10, T=40)", criterion_11_first_difference_identity),
        ("criterion 12: CLI full sweep exits 0, deterministic, under 60 s", criterion_12_cli_determinism),
    ];

    // The default hook would print every panic before we format our own
    // FAIL line; keep the output to exactly one line per criterion.
    std::panic::set_hook(Box::new(|_| {}));

    let mut failures = 0usize;
    for (label, criterion) in criteria {
        match catch_unwind(*criterion) {
            Ok(()) => println!("PASS {label}"),
            Err(payload) => {
                failures += 1;
                let message = payload
                    .downcast_ref::<String>()
                    .map(String::as_str)
                    .or_else(|| payload.downcast_ref::<&str>().copied())
                    .unwrap_or("panicked");
                println!("FAIL {label}: {message}");
            }
        }
    }

    let _ = std::panic::take_hook();
    if failures > 0 {
        eprintln!(
            "{failures} of {} acceptance criteria failed",
            criteria.len()
        );
        std::process::exit(1);
    }
    println!("all {} acceptance criteria passed", criteria.len());
}
