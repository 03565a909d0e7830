//! Command-line surface: construct fields, classify forms, verify the
//! closed-form rank/sign tallies, compute and compare weight
//! distributions, and reproduce the five worked examples end to end.
//!
//! Exit codes: 0 success/match, 1 verification mismatch, 2 invalid input,
//! 3 work limit exceeded, 4 unsupported case.

mod parallel;
mod report;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use tracecodes::codes::{self, Family, Strategy, WeightDistribution};
use tracecodes::gf::{self, FieldCtx};
use tracecodes::quadform;
use tracecodes::spectrum;
use tracecodes::theory;
use tracecodes::Error;

use report::{
    profiles_table, to_json, FieldReport, ProfileReport, RSetReport, VerifyReport, WdBothReport,
    WdReport,
};

/// Environment override for the default work limits.
const WORK_LIMIT_ENV: &str = "CW_WORK_LIMIT";
/// Test-harness hook: when set, the reproduction suite perturbs one
/// closed-form count so the comparison must fail.
const FAULT_ENV: &str = "CW_FAULT_INJECT";

#[derive(Parser)]
#[command(
    name = "tracecodes",
    version,
    about = "Weight distributions of p-ary cyclic codes defined by trace forms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct F_{p^m} and print its modulus and primitive element
    Field(FieldArgs),
    /// Classify the quadratic form of each nonzero a (rank and sign class)
    Classify(ClassifyArgs),
    /// Verify closed-form rank/sign tallies against a full sweep
    Lemma3(Lemma3Args),
    /// Weight distribution of one code, closed-form and/or enumerated
    Wd(WdArgs),
    /// Reproduce the five worked examples end to end
    PaperSuite(PaperSuiteArgs),
}

#[derive(Args)]
struct FieldParams {
    /// Odd prime characteristic
    #[arg(long)]
    p: u64,
    /// Extension degree
    #[arg(long)]
    m: u32,
    /// Modulus coefficients, constant term first, e.g. 1,0,1
    #[arg(long, value_delimiter = ',')]
    modulus: Option<Vec<u64>>,
}

impl FieldParams {
    fn build(&self) -> Result<FieldCtx, Error> {
        match &self.modulus {
            Some(coeffs) => gf::make_field_with_modulus(self.p, self.m, coeffs),
            None => gf::make_field(self.p, self.m),
        }
    }
}

#[derive(Args)]
struct SweepArgs {
    /// Cap on sweep work; CW_WORK_LIMIT overrides the built-in default
    #[arg(long)]
    work_limit: Option<u128>,
    /// Worker threads (default: available parallelism)
    #[arg(long)]
    workers: Option<usize>,
}

impl SweepArgs {
    fn limit(&self, default: u128) -> u128 {
        self.work_limit
            .or_else(|| {
                std::env::var(WORK_LIMIT_ENV)
                    .ok()
                    .and_then(|s| s.parse().ok())
            })
            .unwrap_or(default)
    }

    fn workers(&self) -> usize {
        self.workers.unwrap_or_else(parallel::available_workers)
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Table,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum CodeArg {
    C1,
    C2,
}

impl CodeArg {
    fn family(self) -> Family {
        match self {
            CodeArg::C1 => Family::C1,
            CodeArg::C2 => Family::C2,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum SourceArg {
    Theory,
    Empirical,
    Both,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    Direct,
    Transform,
}

impl StrategyArg {
    fn strategy(self) -> Strategy {
        match self {
            StrategyArg::Direct => Strategy::Direct,
            StrategyArg::Transform => Strategy::Transform,
        }
    }
}

#[derive(Args)]
struct FieldArgs {
    #[command(flatten)]
    field: FieldParams,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Write output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    field: FieldParams,
    /// Exponent parameter of the form x^(p^k+1)
    #[arg(long)]
    k: u32,
    /// Classify only a = alpha^a_log instead of sweeping all nonzero a
    #[arg(long)]
    a_log: Option<u64>,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Write output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    sweep: SweepArgs,
}

#[derive(Args)]
struct Lemma3Args {
    #[command(flatten)]
    field: FieldParams,
    /// Exponent parameter of the form x^(p^k+1)
    #[arg(long)]
    k: u32,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Write output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    sweep: SweepArgs,
}

#[derive(Args)]
struct WdArgs {
    #[command(flatten)]
    field: FieldParams,
    /// Exponent parameter of the form x^(p^k+1)
    #[arg(long)]
    k: u32,
    /// Code family
    #[arg(long, value_enum)]
    code: CodeArg,
    #[arg(long, value_enum, default_value_t = SourceArg::Both)]
    source: SourceArg,
    /// Enumeration strategy for the empirical source
    #[arg(long, value_enum, default_value_t = StrategyArg::Direct)]
    strategy: StrategyArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,
    /// Write output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    sweep: SweepArgs,
}

#[derive(Args)]
struct PaperSuiteArgs {
    /// Enumeration strategy for the empirical distributions
    #[arg(long, value_enum, default_value_t = StrategyArg::Direct)]
    strategy: StrategyArg,
    /// Write output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    sweep: SweepArgs,
}

enum CliError {
    Core(Error),
    Io(std::io::Error),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

fn exit_code(err: &CliError) -> u8 {
    match err {
        CliError::Core(e) => match e {
            Error::NotAnOddPrime(_)
            | Error::DegreeTooSmall { .. }
            | Error::BadExponent { .. }
            | Error::BadModulus(_)
            | Error::FieldTooLarge { .. }
            | Error::ZeroOperand(_)
            | Error::OutOfRange(_)
            | Error::ArithmeticOverflow => 2,
            Error::NoTables | Error::WorkLimit { .. } => 3,
            Error::UnsupportedCase { .. } => 4,
            Error::Inconsistency(_) | Error::RoundingResidual => 1,
        },
        CliError::Io(_) | CliError::Usage(_) => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn run(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Field(args) => cmd_field(args),
        Command::Classify(args) => cmd_classify(args),
        Command::Lemma3(args) => cmd_lemma3(args),
        Command::Wd(args) => cmd_wd(args),
        Command::PaperSuite(args) => cmd_paper_suite(args),
    }
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

fn cmd_field(args: FieldArgs) -> Result<u8, CliError> {
    let ctx = args.field.build()?;
    let report = FieldReport::of(&ctx);
    let rendered = match args.format {
        FormatArg::Json => to_json(&report),
        FormatArg::Table => report.table(),
        FormatArg::Csv => return Err(CliError::Usage("csv format requires wd".into())),
    };
    emit(&args.out, &rendered)?;
    Ok(0)
}

fn cmd_classify(args: ClassifyArgs) -> Result<u8, CliError> {
    let ctx = args.field.build()?;
    let n = ctx.size() - 1;
    let logs: Vec<u64> = match args.a_log {
        Some(l) => {
            if l >= n {
                return Err(CliError::Core(Error::OutOfRange("a_log")));
            }
            vec![l]
        }
        None => {
            let limit = args.sweep.limit(spectrum::DEFAULT_SWEEP_LIMIT);
            let needed = spectrum::sweep_cost(&ctx);
            if needed > limit {
                return Err(CliError::Core(Error::WorkLimit { needed, limit }));
            }
            (0..n).collect()
        }
    };
    let mut rows = Vec::with_capacity(logs.len());
    for l in logs {
        let a = ctx.pow(ctx.alpha(), l as u128);
        let profile = quadform::classify(&ctx, args.k, &a)?;
        rows.push(ProfileReport::of(l, &profile));
    }
    let rendered = match (args.format, args.a_log) {
        (FormatArg::Json, Some(_)) => to_json(&rows[0]),
        (FormatArg::Json, None) => to_json(&rows),
        (FormatArg::Table, _) => profiles_table(&rows),
        (FormatArg::Csv, _) => return Err(CliError::Usage("csv format requires wd".into())),
    };
    emit(&args.out, &rendered)?;
    Ok(0)
}

fn empirical_rsets(
    ctx: &FieldCtx,
    k: u32,
    limit: u128,
    workers: usize,
) -> Result<spectrum::RSetSizes, Error> {
    let needed = spectrum::sweep_cost(ctx);
    if needed > limit {
        return Err(Error::WorkLimit { needed, limit });
    }
    let parts = parallel::run_chunked(ctx.size(), workers, |lo, hi| {
        spectrum::empirical_rsets_range(ctx, k, lo, hi)
    })?;
    let mut acc = spectrum::RSetSizes::default();
    for part in &parts {
        acc.merge(part);
    }
    Ok(acc)
}

fn cmd_lemma3(args: Lemma3Args) -> Result<u8, CliError> {
    let ctx = args.field.build()?;
    let ci = spectrum::case_of(ctx.p(), ctx.m(), args.k)?;
    let expected = spectrum::expected_rsets(ctx.p(), ctx.m(), args.k)?;
    let limit = args.sweep.limit(spectrum::DEFAULT_SWEEP_LIMIT);
    let empirical = empirical_rsets(&ctx, args.k, limit, args.sweep.workers())?;
    let report = VerifyReport {
        case: ci.label.as_str().to_string(),
        expected: RSetReport::of(&expected),
        empirical: RSetReport::of(&empirical),
        matches: expected == empirical,
    };
    let rendered = match args.format {
        FormatArg::Json => to_json(&report),
        FormatArg::Table => report.table(),
        FormatArg::Csv => return Err(CliError::Usage("csv format requires wd".into())),
    };
    emit(&args.out, &rendered)?;
    Ok(if report.matches { 0 } else { 1 })
}

fn empirical_wd(
    ctx: &FieldCtx,
    k: u32,
    family: Family,
    strategy: Strategy,
    limit: u128,
    workers: usize,
) -> Result<WeightDistribution, Error> {
    let needed = match family {
        Family::C1 => codes::c1_pair_cost(ctx),
        Family::C2 => codes::c2_sweep_cost(ctx),
    };
    if needed > limit {
        return Err(Error::WorkLimit { needed, limit });
    }
    let parts = parallel::run_chunked(ctx.size(), workers, |lo, hi| match family {
        Family::C1 => codes::c1_tally_range(ctx, k, strategy, lo, hi),
        Family::C2 => codes::c2_tally_range(ctx, k, strategy, lo, hi),
    })?;
    let tally = parallel::merge_tallies(parts);
    match family {
        Family::C1 => codes::finalize_wd_c1(ctx, k, &tally),
        Family::C2 => codes::finalize_wd_c2(ctx, k, &tally),
    }
}

fn theory_wd(p: u64, m: u32, k: u32, family: Family) -> Result<theory::TheoreticalWd, Error> {
    match family {
        Family::C1 => theory::wd_c1(p, m, k),
        Family::C2 => theory::wd_c2(p, m, k),
    }
}

fn default_wd_limit(family: Family) -> u128 {
    match family {
        Family::C1 => codes::DEFAULT_PAIR_LIMIT,
        Family::C2 => spectrum::DEFAULT_SWEEP_LIMIT,
    }
}

fn cmd_wd(args: WdArgs) -> Result<u8, CliError> {
    let family = args.code.family();
    let (rendered, matches) = match args.source {
        SourceArg::Theory => {
            let th = theory_wd(args.field.p, args.field.m, args.k, family)?;
            let report = WdReport::of_theory(&th);
            (render_wd(&report, args.format)?, true)
        }
        SourceArg::Empirical => {
            let ctx = args.field.build()?;
            let limit = args.sweep.limit(default_wd_limit(family));
            let wd = empirical_wd(
                &ctx,
                args.k,
                family,
                args.strategy.strategy(),
                limit,
                args.sweep.workers(),
            )?;
            let report = WdReport::of_empirical(&wd);
            (render_wd(&report, args.format)?, true)
        }
        SourceArg::Both => {
            let th = theory_wd(args.field.p, args.field.m, args.k, family)?;
            let ctx = args.field.build()?;
            let limit = args.sweep.limit(default_wd_limit(family));
            let wd = empirical_wd(
                &ctx,
                args.k,
                family,
                args.strategy.strategy(),
                limit,
                args.sweep.workers(),
            )?;
            let report = WdBothReport::of(WdReport::of_theory(&th), WdReport::of_empirical(&wd));
            let rendered = match args.format {
                FormatArg::Json => to_json(&report),
                FormatArg::Table => report.table(),
                FormatArg::Csv => {
                    return Err(CliError::Usage(
                        "csv format covers a single source; use --source theory|empirical".into(),
                    ))
                }
            };
            (rendered, report.matches)
        }
    };
    emit(&args.out, &rendered)?;
    Ok(if matches { 0 } else { 1 })
}

fn render_wd(report: &WdReport, format: FormatArg) -> Result<String, CliError> {
    Ok(match format {
        FormatArg::Json => to_json(report),
        FormatArg::Table => report.table(),
        FormatArg::Csv => report.csv(),
    })
}

/// The five worked examples: (p, m, k, family).
const EXAMPLES: [(u64, u32, u32, Family); 5] = [
    (3, 6, 1, Family::C1),
    (5, 4, 1, Family::C1),
    (3, 6, 2, Family::C2),
    (3, 8, 1, Family::C2),
    (3, 6, 3, Family::C2),
];

fn cmd_paper_suite(args: PaperSuiteArgs) -> Result<u8, CliError> {
    let strategy = args.strategy.strategy();
    let workers = args.sweep.workers();
    let inject_fault = std::env::var(FAULT_ENV).is_ok_and(|v| !v.is_empty());
    let mut out = String::new();
    let mut passed = 0usize;
    let mut total = 0usize;

    for (i, &(p, m, k, family)) in EXAMPLES.iter().enumerate() {
        let th = theory_wd(p, m, k, family)?;
        let mut th_counts = th.counts.clone();
        if inject_fault && i == 0 {
            // harness hook: prove a mismatch is caught and exits nonzero
            let (&w, &c) = th_counts.iter().find(|&(&w, _)| w > 0).expect("weights");
            th_counts.insert(w, c + 1);
        }
        let ctx = gf::make_field(p, m)?;
        let limit = args.sweep.limit(default_wd_limit(family));
        let emp = empirical_wd(&ctx, k, family, strategy, limit, workers)?;
        total += 1;
        let label = format!("example {} wd {} p={p} m={m} k={k}", i + 1, family.as_str());
        if th_counts == emp.counts {
            passed += 1;
            out.push_str(&format!("{label} PASS\n"));
        } else {
            let (w, t, e) = first_diff(&th_counts, &emp.counts);
            out.push_str(&format!(
                "{label} FAIL first-diff w={w} theory={t} empirical={e}\n"
            ));
        }
    }

    for &(p, m, k, _) in &EXAMPLES {
        let expected = spectrum::expected_rsets(p, m, k)?;
        let ctx = gf::make_field(p, m)?;
        let limit = args.sweep.limit(spectrum::DEFAULT_SWEEP_LIMIT);
        let empirical = empirical_rsets(&ctx, k, limit, workers)?;
        total += 1;
        let label = format!("rsets p={p} m={m} k={k}");
        if expected == empirical {
            passed += 1;
            out.push_str(&format!("{label} PASS\n"));
        } else {
            out.push_str(&format!("{label} FAIL\n"));
        }
    }

    let all = passed == total;
    out.push_str(&format!(
        "result {} ({passed}/{total})\n",
        if all { "PASS" } else { "FAIL" }
    ));
    emit(&args.out, &out)?;
    Ok(if all { 0 } else { 1 })
}

fn first_diff(
    theory: &std::collections::BTreeMap<u64, u128>,
    empirical: &std::collections::BTreeMap<u64, u128>,
) -> (u64, u128, u128) {
    let mut weights: Vec<u64> = theory.keys().chain(empirical.keys()).copied().collect();
    weights.sort_unstable();
    weights.dedup();
    for w in weights {
        let t = theory.get(&w).copied().unwrap_or(0);
        let e = empirical.get(&w).copied().unwrap_or(0);
        if t != e {
            return (w, t, e);
        }
    }
    unreachable!("called only on mismatching distributions")
}
