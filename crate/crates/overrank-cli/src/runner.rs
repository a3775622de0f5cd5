//! Check orchestration: which verification checks run for each `--check`
//! value, over tables built once and shared, in a fixed report order.

use clap::ValueEnum;
use overrank_core::bivariate::RankTable;
use overrank_core::partitions::oracle_rank_table;
use overrank_core::rank_gf::gf_rank_table;
use overrank_core::verify::{self, VerificationReport};
use overrank_core::{M2Convention, RankStatistic};

/// Default sweep bound: covers every case the source results were
/// hand-checked on, with margin.
pub const DEFAULT_SWEEP: usize = 40;

/// Order used to auto-detect the M2 convention when no sweep is running:
/// small, and far beyond the n = 1 point that separates floor from ceiling.
pub const CONVENTION_PROBE: usize = 10;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StatisticArg {
    #[value(name = "dyson")]
    Dyson,
    #[value(name = "d-rank")]
    DRank,
    #[value(name = "m2-rank")]
    M2Rank,
}

impl StatisticArg {
    pub fn statistic(self) -> RankStatistic {
        match self {
            StatisticArg::Dyson => RankStatistic::Dyson,
            StatisticArg::DRank => RankStatistic::DRank,
            StatisticArg::M2Rank => RankStatistic::M2Rank,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    #[value(name = "auto")]
    Auto,
    #[value(name = "floor")]
    Floor,
    #[value(name = "ceiling")]
    Ceiling,
}

impl ConventionArg {
    /// Resolve `auto` by asking which convention the generating function
    /// selects on a small probe window.
    pub fn resolve(self) -> Result<M2Convention, String> {
        match self {
            ConventionArg::Floor => Ok(M2Convention::Floor),
            ConventionArg::Ceiling => Ok(M2Convention::Ceiling),
            ConventionArg::Auto => verify::adjudicate_m2_convention(CONVENTION_PROBE)
                .1
                .ok_or_else(|| {
                    String::from(
                    "auto-detection failed: neither M2 convention matches the generating function",
                )
                }),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckArg {
    #[value(name = "thm-d-mono")]
    ThmDMono,
    #[value(name = "thm-m2-mono")]
    ThmM2Mono,
    #[value(name = "thm-m-mono")]
    ThmMMono,
    #[value(name = "cm-ordinary")]
    CmOrdinary,
    #[value(name = "fmk-nonneg")]
    FmkNonneg,
    #[value(name = "lemma-threshold")]
    LemmaThreshold,
    #[value(name = "lemma-ratio")]
    LemmaRatio,
    #[value(name = "lemma-akm")]
    LemmaAkm,
    #[value(name = "gf-oracle")]
    GfOracle,
    #[value(name = "diff-identity")]
    DiffIdentity,
    #[value(name = "all")]
    All,
}

/// Generating-function tables built at most once per run.
struct Tables {
    max_n: usize,
    dyson: Option<RankTable>,
    d_rank: Option<RankTable>,
    m2: Option<RankTable>,
}

impl Tables {
    fn new(max_n: usize) -> Self {
        Tables {
            max_n,
            dyson: None,
            d_rank: None,
            m2: None,
        }
    }

    fn gf(&mut self, statistic: RankStatistic) -> &RankTable {
        let slot = match statistic {
            RankStatistic::Dyson => &mut self.dyson,
            RankStatistic::DRank => &mut self.d_rank,
            RankStatistic::M2Rank => &mut self.m2,
        };
        slot.get_or_insert_with(|| gf_rank_table(statistic, self.max_n))
    }
}

/// Everything a verify invocation produces: the reports in a fixed order
/// and the M2 convention that was used, when one was needed.
pub struct VerifyOutcome {
    pub reports: Vec<VerificationReport>,
    pub convention: Option<M2Convention>,
}

fn require(max_n: usize, minimum: usize, what: &str) -> Result<(), String> {
    if max_n < minimum {
        return Err(format!(
            "--max-n {max_n} is too small for {what} (needs at least {minimum})"
        ));
    }
    Ok(())
}

/// Run the named check (or every check, in the canonical order) over a
/// sweep of size `max_n`.
pub fn run_checks(
    check: CheckArg,
    max_n: usize,
    convention_arg: ConventionArg,
) -> Result<VerifyOutcome, String> {
    require(max_n, 1, "any verification sweep")?;
    let mut tables = Tables::new(max_n);
    let mut reports = Vec::new();
    let mut convention = None;

    let selected: &[CheckArg] = if check == CheckArg::All {
        &[
            CheckArg::ThmDMono,
            CheckArg::ThmM2Mono,
            CheckArg::ThmMMono,
            CheckArg::CmOrdinary,
            CheckArg::FmkNonneg,
            CheckArg::LemmaThreshold,
            CheckArg::LemmaRatio,
            CheckArg::LemmaAkm,
            CheckArg::GfOracle,
            CheckArg::DiffIdentity,
        ]
    } else {
        std::slice::from_ref(&check)
    };

    for &kind in selected {
        match kind {
            CheckArg::ThmDMono => {
                reports.push(verify::check_thm_n_monotone_d(
                    tables.gf(RankStatistic::DRank),
                ));
            }
            CheckArg::ThmM2Mono => {
                reports.push(verify::check_thm_n_monotone_m2(
                    tables.gf(RankStatistic::M2Rank),
                ));
            }
            CheckArg::ThmMMono => {
                reports.push(verify::check_thm_m_monotone(
                    RankStatistic::DRank,
                    tables.gf(RankStatistic::DRank),
                ));
                reports.push(verify::check_thm_m_monotone(
                    RankStatistic::M2Rank,
                    tables.gf(RankStatistic::M2Rank),
                ));
            }
            CheckArg::CmOrdinary => {
                reports.extend(verify::check_cm_ordinary(tables.gf(RankStatistic::Dyson)));
            }
            CheckArg::FmkNonneg => {
                require(max_n, 2, "the f-table nonnegativity checks")?;
                reports.extend(verify::check_fmk_nonneg(2, 8, max_n.min(40) as i64, max_n));
            }
            CheckArg::LemmaThreshold => {
                require(max_n, 6, "the threshold lemma (n >= b+6)")?;
                reports.push(verify::check_lemma_threshold(
                    8,
                    (max_n - 6).min(12),
                    8,
                    max_n,
                ));
            }
            CheckArg::LemmaRatio => {
                reports.push(verify::check_lemma_ratio(40, max_n));
            }
            CheckArg::LemmaAkm => {
                reports.extend(verify::check_akm_lemma(6, max_n));
            }
            CheckArg::GfOracle => {
                let dyson_oracle =
                    oracle_rank_table(RankStatistic::Dyson, max_n, M2Convention::Ceiling);
                reports.push(verify::check_gf_vs_oracle(
                    RankStatistic::Dyson,
                    tables.gf(RankStatistic::Dyson),
                    &dyson_oracle,
                ));
                let d_oracle =
                    oracle_rank_table(RankStatistic::DRank, max_n, M2Convention::Ceiling);
                reports.push(verify::check_gf_vs_oracle(
                    RankStatistic::DRank,
                    tables.gf(RankStatistic::DRank),
                    &d_oracle,
                ));

                let floor = oracle_rank_table(RankStatistic::M2Rank, max_n, M2Convention::Floor);
                let ceiling =
                    oracle_rank_table(RankStatistic::M2Rank, max_n, M2Convention::Ceiling);
                let gf_m2 = tables.gf(RankStatistic::M2Rank);
                let (adjudication, detected) =
                    verify::adjudicate_m2_convention_with(gf_m2, &floor, &ceiling);
                let chosen = match convention_arg {
                    ConventionArg::Auto => detected.ok_or_else(|| String::from(
                        "auto-detection failed: neither M2 convention matches the generating function",
                    ))?,
                    ConventionArg::Floor => M2Convention::Floor,
                    ConventionArg::Ceiling => M2Convention::Ceiling,
                };
                convention = Some(chosen);
                let oracle = match chosen {
                    M2Convention::Floor => &floor,
                    M2Convention::Ceiling => &ceiling,
                };
                reports.push(verify::check_gf_vs_oracle(
                    RankStatistic::M2Rank,
                    gf_m2,
                    oracle,
                ));
                reports.push(adjudication);
            }
            CheckArg::DiffIdentity => {
                let m_max = (max_n as i64).min(10);
                reports.push(verify::check_diff_identity(
                    RankStatistic::DRank,
                    m_max,
                    tables.gf(RankStatistic::DRank),
                ));
                reports.push(verify::check_diff_identity(
                    RankStatistic::M2Rank,
                    m_max,
                    tables.gf(RankStatistic::M2Rank),
                ));
            }
            CheckArg::All => unreachable!("expanded above"),
        }
    }

    Ok(VerifyOutcome {
        reports,
        convention,
    })
}
