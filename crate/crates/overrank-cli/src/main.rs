//! `overrank` — exact rank tables, difference-series rows, and
//! verification sweeps, all in arbitrary-precision integer arithmetic.
//!
//! Exit codes: 0 success, 1 a verification check found a violation,
//! 2 usage or input error.

mod output;
mod runner;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use overrank_core::partitions::oracle_rank_table;
use overrank_core::rank_gf::{fmk_by_definition, fmk_closed_form, fmk_tables_up_to, gf_rank_table};
use overrank_core::series::QSeries;
use overrank_core::{M2Convention, RankStatistic};
use runner::{CheckArg, ConventionArg, StatisticArg, DEFAULT_SWEEP};
use serde_json::{json, Map, Value};

#[derive(Parser)]
#[command(
    name = "overrank",
    version,
    about = "Exact partition and overpartition rank statistics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the table of rank counts: how many objects of size n have rank m.
    Table(TableArgs),
    /// Print one row of the rank-difference series family f_{m,k}.
    Fmk(FmkArgs),
    /// Run verification sweeps and report every violation exactly.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableMethod {
    /// Expand the bivariate generating function.
    #[value(name = "gf")]
    Gf,
    /// Enumerate the objects and classify each by its rank.
    #[value(name = "enumerate")]
    Enumerate,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FmkMethod {
    /// Slice the defining kernel product.
    #[value(name = "definition")]
    Definition,
    /// Build up from level 0 by the level recurrence.
    #[value(name = "recurrence")]
    Recurrence,
    /// Evaluate the closed form (available for levels 0, 1, 2).
    #[value(name = "closed-form")]
    ClosedForm,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    #[value(name = "csv")]
    Csv,
    #[value(name = "json")]
    Json,
}

#[derive(Args)]
struct TableArgs {
    /// Which rank statistic to tabulate.
    #[arg(long, value_enum)]
    statistic: StatisticArg,
    /// How to compute the table.
    #[arg(long, value_enum, default_value = "gf")]
    method: TableMethod,
    /// Largest object size n in the table.
    #[arg(long = "max-n")]
    max_n: usize,
    /// Rounding convention for the M2-rank (auto probes the series).
    #[arg(long = "m2-convention", value_enum, default_value = "auto")]
    m2_convention: ConventionArg,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
    /// Write the output to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct FmkArgs {
    /// Rank offset m (may be negative).
    #[arg(long, allow_hyphen_values = true)]
    m: i64,
    /// Level k of the series family.
    #[arg(long)]
    k: usize,
    /// Truncation order: coefficients of q^0 through q^trunc.
    #[arg(long, default_value_t = 40)]
    trunc: usize,
    /// How to compute the series.
    #[arg(long, value_enum, default_value = "definition")]
    method: FmkMethod,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
    /// Write the output to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which check to run.
    #[arg(long, value_enum)]
    check: CheckArg,
    /// Sweep bound: object sizes/truncation orders up to this value.
    #[arg(long = "max-n", default_value_t = DEFAULT_SWEEP)]
    max_n: usize,
    /// Convention the series-vs-enumeration comparison tests against.
    #[arg(long = "m2-convention", value_enum, default_value = "auto")]
    m2_convention: ConventionArg,
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
    /// Write the output to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// The kebab-case name a value-enum variant carries on the command line;
/// reused verbatim in serialized parameter blocks.
fn value_name<T: ValueEnum>(value: &T) -> String {
    value
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // Renders help/version on stdout (exit 0) and usage errors on
        // stderr (exit 2).
        Err(e) => e.exit(),
    };
    let result = match cli.command {
        Command::Table(args) => run_table(args),
        Command::Fmk(args) => run_fmk(args),
        Command::Verify(args) => run_verify(args),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run_table(args: TableArgs) -> Result<ExitCode, String> {
    let statistic = args.statistic.statistic();
    // The convention only affects enumeration (the generating function is
    // convention-free), but it is resolved for every M2 request so the
    // parameter block always reports a concrete convention.
    let convention = if statistic == RankStatistic::M2Rank {
        Some(args.m2_convention.resolve()?)
    } else {
        None
    };
    let table = match args.method {
        TableMethod::Gf => gf_rank_table(statistic, args.max_n),
        TableMethod::Enumerate => oracle_rank_table(
            statistic,
            args.max_n,
            convention.unwrap_or(M2Convention::Ceiling),
        ),
    };
    let text = match args.format {
        FormatArg::Csv => output::table_csv(&table),
        FormatArg::Json => {
            let mut parameters = Map::new();
            parameters.insert("statistic".into(), json!(statistic.label()));
            parameters.insert("method".into(), json!(value_name(&args.method)));
            parameters.insert("max-n".into(), json!(args.max_n));
            if let Some(convention) = convention {
                parameters.insert("m2-convention".into(), json!(convention.label()));
            }
            output::envelope(
                "table",
                Value::Object(parameters),
                output::table_json(&table),
            )
        }
    };
    output::emit(&text, args.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn run_fmk(args: FmkArgs) -> Result<ExitCode, String> {
    if args.m.unsigned_abs() > args.trunc as u64 {
        return Err(format!(
            "--m {} lies outside the representable window |m| <= {} at this truncation order",
            args.m, args.trunc
        ));
    }
    let series: QSeries = match args.method {
        FmkMethod::Definition => fmk_by_definition(args.k, args.trunc)
            .row(args.m)
            .map_err(|e| e.to_string())?
            .clone(),
        FmkMethod::Recurrence => fmk_tables_up_to(args.k, args.trunc)[args.k]
            .row(args.m)
            .map_err(|e| e.to_string())?
            .clone(),
        FmkMethod::ClosedForm => {
            fmk_closed_form(args.m, args.k, args.trunc).map_err(|e| e.to_string())?
        }
    };
    let text = match args.format {
        FormatArg::Csv => output::series_csv(&series),
        FormatArg::Json => {
            let parameters = json!({
                "m": args.m,
                "k": args.k,
                "trunc": args.trunc,
                "method": value_name(&args.method),
            });
            output::envelope(
                "fmk",
                parameters,
                json!({ "coefficients": output::series_json(&series) }),
            )
        }
    };
    output::emit(&text, args.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn run_verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let outcome = runner::run_checks(args.check, args.max_n, args.m2_convention)?;
    let all_passed = outcome.reports.iter().all(|r| r.passed);
    let text = match args.format {
        FormatArg::Csv => output::reports_csv(&outcome.reports),
        FormatArg::Json => {
            let mut parameters = Map::new();
            parameters.insert("check".into(), json!(value_name(&args.check)));
            parameters.insert("max-n".into(), json!(args.max_n));
            if let Some(convention) = outcome.convention {
                parameters.insert("m2-convention".into(), json!(convention.label()));
            }
            output::envelope(
                "verify",
                Value::Object(parameters),
                output::reports_json(&outcome.reports),
            )
        }
    };
    output::emit(&text, args.out.as_deref())?;
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
