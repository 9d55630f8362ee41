//! Command-line front end: table construction and export, verification
//! suites, conjecture exploration, Beatty classification, and winning-move
//! queries.
//!
//! Exit codes: 0 when every report passes or is skipped, 1 when any check
//! fails, 2 on usage or configuration errors.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::beatty::{self, SeqKind};
use crate::build::construction_threads;
use crate::conjecture;
use crate::error::{Error, Result};
use crate::grundy::{winning_moves, GrundyTable};
use crate::position::Position;
use crate::report::{self, Report};
use crate::rules::{GameRule, RuleId};
use crate::verify;

/// Estimated table bytes above which construction requires `--yes`.
const MEMORY_GUARD_BYTES: u64 = 1 << 30;

#[derive(Parser)]
#[command(name = "wythoff", version, about = "Sprague-Grundy analysis for Wythoff's game and its restriction/extension variants")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a Sprague-Grundy table and render it.
    Table(TableArgs),
    /// Run a verification suite; exit code reflects the outcome.
    Verify(VerifyArgs),
    /// Explore conjectured structure (periods, envelopes, surveys).
    Conjecture(ConjectureArgs),
    /// Classify a positive integer into one of the two Beatty sequences.
    Classify(ClassifyArgs),
    /// List all winning moves from a position.
    BestMove(BestMoveArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Ascii,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(clap::Args)]
struct TableArgs {
    /// Game id: wythoff | r-wythoff | e-wythoff | generalized:<config-path>
    #[arg(long, default_value = "wythoff")]
    game: String,
    /// Largest pile size; the table covers 0 <= a, b <= max.
    #[arg(long)]
    max: u64,
    #[arg(long, value_enum, default_value_t = TableFormat::Ascii)]
    format: TableFormat,
    /// Write to a file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Emit only canonical cells (a <= b) in csv/json output.
    #[arg(long)]
    canonical: bool,
    /// Confirm construction past the memory guard.
    #[arg(long)]
    yes: bool,
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// p-positions | value1 | golden | bounds | rows | row-existence |
    /// diagonal | redundancy | all
    suite: String,
    #[arg(long, default_value = "r-wythoff")]
    game: String,
    /// Table bound for square-table suites.
    #[arg(long, default_value_t = 100)]
    max: u64,
    /// Column budget for the small-row closed forms.
    #[arg(long = "max-b", default_value_t = 1000)]
    max_b: u64,
    /// Largest removal size checked by the redundancy suite.
    #[arg(long = "k-max", default_value_t = 100)]
    k_max: u64,
    /// Row / diagonal-offset budget.
    #[arg(long = "a-max", default_value_t = 16)]
    a_max: u64,
    /// Largest target value for existence/uniqueness sweeps.
    #[arg(long = "c-max", default_value_t = 16)]
    c_max: u64,
    /// Column budget for existence/uniqueness sweeps.
    #[arg(long = "b-budget", default_value_t = 1024)]
    b_budget: u64,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    yes: bool,
}

#[derive(clap::Args)]
struct ConjectureArgs {
    /// additive-period | bw-upper2 | ew-diagonals | survey-value1
    name: String,
    #[arg(long, default_value = "r-wythoff")]
    game: String,
    /// Row to mine for additive periodicity.
    #[arg(long)]
    row: Option<u64>,
    /// Window (largest column) for additive-period mining.
    #[arg(long = "max-b", default_value_t = 10_000)]
    max_b: u64,
    /// Table bound for the conjecture checkers and the survey.
    #[arg(long, default_value_t = 500)]
    max: u64,
    /// Extra generalized-rule config files for the survey.
    #[arg(long, value_delimiter = ',')]
    rules: Vec<PathBuf>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    yes: bool,
}

#[derive(clap::Args)]
struct ClassifyArgs {
    /// Positive integer to classify.
    value: u64,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

#[derive(clap::Args)]
struct BestMoveArgs {
    #[arg(long, default_value = "wythoff")]
    game: String,
    /// Position as `a,b` (comma, no spaces).
    #[arg(long)]
    position: String,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

pub fn main_entry() -> i32 {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Cmd::Table(args) => cmd_table(args),
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::Conjecture(args) => cmd_conjecture(args),
        Cmd::Classify(args) => cmd_classify(args),
        Cmd::BestMove(args) => cmd_best_move(args),
    }
}

fn parse_game(s: &str) -> Result<GameRule> {
    if let Some(rule) = GameRule::named(s) {
        return Ok(rule);
    }
    if let Some(path) = s.strip_prefix("generalized:") {
        return GameRule::from_config_file(Path::new(path));
    }
    Err(Error::Config(format!(
        "unknown game '{s}' (expected wythoff, r-wythoff, e-wythoff, or generalized:<path>)"
    )))
}

fn memory_guard(a_max: u64, b_max: u64, yes: bool) -> Result<()> {
    let bytes = crate::grundy::cell_count(a_max, b_max) * 4;
    if bytes > MEMORY_GUARD_BYTES && !yes {
        return Err(Error::Config(format!(
            "estimated table size is {} MiB (> {} MiB guard); rerun with --yes to proceed",
            bytes >> 20,
            MEMORY_GUARD_BYTES >> 20
        )));
    }
    Ok(())
}

/// Square tables of the base game and the restriction can spread wavefront
/// evaluation over threads; everything else builds row-major.
fn build_square(rule: &GameRule, bound: u64) -> Result<GrundyTable> {
    if construction_threads() > 1 && matches!(rule.id(), RuleId::Wythoff | RuleId::RWythoff) {
        GrundyTable::build_wavefront(rule, bound)
    } else {
        GrundyTable::build(rule, bound)
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::Config(format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

// ---------------------------------------------------------------------------
// table

fn cmd_table(args: TableArgs) -> Result<i32> {
    let rule = parse_game(&args.game)?;
    memory_guard(args.max, args.max, args.yes)?;
    let table = build_square(&rule, args.max)?;
    let text = match args.format {
        TableFormat::Ascii => render_ascii(&table),
        TableFormat::Csv => {
            if args.canonical {
                table.to_csv()
            } else {
                render_csv_full(&table)
            }
        }
        TableFormat::Json => render_json(&table, args.canonical),
    };
    emit(&text, args.out.as_deref())?;
    Ok(0)
}

/// Grid layout mirroring the published tables: columns are `b = 0..=max`,
/// rows are `a` from `max` at the top down to 0, with an `a/b` label line
/// at the bottom.
pub fn render_ascii(table: &GrundyTable) -> String {
    let max = table.bound();
    let val_w = (0..=max)
        .flat_map(|a| (a..=max).map(move |b| (a, b)))
        .map(|(a, b)| table.g(a, b).to_string().len())
        .max()
        .unwrap_or(1);
    let label_w = max.to_string().len().max(3);
    let mut out = String::new();
    for a in (0..=max).rev() {
        out.push_str(&format!("{a:>label_w$} |"));
        for b in 0..=max {
            let g = table.grundy_at(a, b).unwrap();
            out.push_str(&format!(" {g:>val_w$}"));
        }
        out.push('\n');
    }
    out.push_str(&format!("{}-+{}\n", "-".repeat(label_w), "-".repeat((val_w + 1) * (max as usize + 1))));
    out.push_str(&format!("{:>label_w$} |", "a/b"));
    for b in 0..=max {
        out.push_str(&format!(" {b:>val_w$}"));
    }
    out.push('\n');
    out
}

/// Parse the ascii grid back into `(a, b, g)` cells (the rendering
/// round-trips; used by tests and available to scripts).
pub fn parse_ascii(text: &str) -> Result<Vec<(u64, u64, u32)>> {
    let mut cells = Vec::new();
    for line in text.lines() {
        if line.starts_with('-') {
            break;
        }
        let (label, rest) = line
            .split_once('|')
            .ok_or_else(|| Error::Config("ascii table: missing '|' separator".into()))?;
        let a: u64 = label
            .trim()
            .parse()
            .map_err(|_| Error::Config(format!("ascii table: bad row label '{}'", label.trim())))?;
        for (b, tok) in rest.split_whitespace().enumerate() {
            let g: u32 = tok
                .parse()
                .map_err(|_| Error::Config(format!("ascii table: bad cell '{tok}'")))?;
            cells.push((a, b as u64, g));
        }
    }
    Ok(cells)
}

fn render_csv_full(table: &GrundyTable) -> String {
    let max = table.bound();
    let mut out = String::from("a,b,g\n");
    for a in 0..=max {
        for b in 0..=max {
            out.push_str(&format!("{a},{b},{}\n", table.grundy_at(a, b).unwrap()));
        }
    }
    out
}

fn render_json(table: &GrundyTable, canonical: bool) -> String {
    let max = table.bound();
    let mut cells = Vec::new();
    for a in 0..=max {
        let b_start = if canonical { a } else { 0 };
        for b in b_start..=max {
            cells.push(serde_json::json!({"a": a, "b": b, "g": table.grundy_at(a, b).unwrap()}));
        }
    }
    let doc = serde_json::json!({
        "game": table.rule().name(),
        "max": max,
        "cells": cells,
    });
    serde_json::to_string_pretty(&doc).expect("table serializes")
}

// ---------------------------------------------------------------------------
// verify

fn cmd_verify(args: VerifyArgs) -> Result<i32> {
    let rule = parse_game(&args.game)?;
    let reports = run_verify_suite(&args, &rule)?;
    finish_reports(&reports, args.format, args.out.as_deref())
}

fn require_named(rule: &GameRule) -> Result<()> {
    if rule.id() == RuleId::GeneralizedE {
        return Err(Error::Config(format!(
            "suite not defined for configured rules (game '{}'); use the survey instead",
            rule.name()
        )));
    }
    Ok(())
}

fn run_verify_suite(args: &VerifyArgs, rule: &GameRule) -> Result<Vec<Report>> {
    let mut reports = Vec::new();
    match args.suite.as_str() {
        "p-positions" => {
            require_named(rule)?;
            memory_guard(args.max, args.max, args.yes)?;
            let t = build_square(rule, args.max)?;
            reports.push(Report::Verification(verify::verify_p_positions(&t)));
        }
        "value1" => {
            memory_guard(args.max, args.max, args.yes)?;
            let t = build_square(rule, args.max)?;
            reports.push(Report::Verification(verify::verify_value1(&t)?));
        }
        "golden" => {
            reports.push(Report::Verification(verify::verify_golden_tables()));
        }
        "bounds" => {
            memory_guard(args.max, args.max, args.yes)?;
            let t = build_square(rule, args.max)?;
            reports.push(Report::Verification(verify::verify_bounds(&t)?));
        }
        "rows" => {
            let rows = match rule.id() {
                RuleId::RWythoff => 3,
                RuleId::EWythoff => 2,
                _ => return Err(Error::Config("rows suite needs r-wythoff or e-wythoff".into())),
            };
            memory_guard(rows, args.max_b, args.yes)?;
            let t = GrundyTable::build_band(rule, rows, args.max_b.max(rows))?;
            reports.push(Report::Verification(verify::verify_small_row_formulas(&t, args.max_b.max(rows))?));
        }
        "row-existence" => {
            require_named(rule)?;
            memory_guard(args.a_max, args.b_budget.max(args.a_max), args.yes)?;
            let t = GrundyTable::build_band(rule, args.a_max, args.b_budget.max(args.a_max))?;
            reports.push(Report::Verification(verify::verify_row_existence(
                &t, args.a_max, args.c_max, args.b_budget,
            )?));
        }
        "diagonal" => {
            if rule.id() != RuleId::RWythoff {
                return Err(Error::Config("the diagonal suite applies to r-wythoff".into()));
            }
            let bound = args.a_max + args.b_budget;
            memory_guard(bound, bound, args.yes)?;
            let t = build_square(rule, bound)?;
            reports.push(Report::Verification(verify::verify_diagonal_uniqueness(
                &t, args.a_max, args.c_max, args.b_budget,
            )?));
        }
        "redundancy" => {
            reports.push(Report::Verification(verify::verify_no_redundant_moves(args.k_max)));
        }
        "all" => {
            require_named(rule)?;
            memory_guard(args.max, args.max, args.yes)?;
            let t = build_square(rule, args.max)?;
            reports.push(Report::Verification(verify::verify_p_positions(&t)));
            if matches!(rule.id(), RuleId::RWythoff | RuleId::EWythoff) {
                reports.push(Report::Verification(verify::verify_value1(&t)?));
                reports.push(Report::Verification(verify::verify_bounds(&t)?));
                reports.push(Report::Verification(verify::verify_golden_tables()));
                let rows = if rule.id() == RuleId::RWythoff { 3 } else { 2 };
                let band = GrundyTable::build_band(rule, rows, args.max.max(rows))?;
                reports.push(Report::Verification(verify::verify_small_row_formulas(
                    &band,
                    args.max.max(rows),
                )?));
                let a_max = args.a_max.min(args.max);
                reports.push(Report::Verification(verify::verify_row_existence(
                    &t,
                    a_max,
                    args.c_max,
                    args.max,
                )?));
            }
            if rule.id() == RuleId::RWythoff {
                let a_max = args.a_max.min(args.max / 2);
                reports.push(Report::Verification(verify::verify_diagonal_uniqueness(
                    &t,
                    a_max,
                    args.c_max,
                    args.max - a_max,
                )?));
                reports.push(Report::Verification(verify::verify_no_redundant_moves(args.k_max)));
            }
        }
        other => {
            return Err(Error::Config(format!(
                "unknown suite '{other}' (expected p-positions, value1, golden, bounds, rows, row-existence, diagonal, redundancy, all)"
            )))
        }
    }
    Ok(reports)
}

fn finish_reports(reports: &[Report], format: ReportFormat, out: Option<&Path>) -> Result<i32> {
    let text = match format {
        ReportFormat::Text => {
            reports.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n")
        }
        ReportFormat::Json => report::to_json(reports),
    };
    emit(&text, out)?;
    Ok(if report::all_ok(reports) { 0 } else { 1 })
}

// ---------------------------------------------------------------------------
// conjecture

fn cmd_conjecture(args: ConjectureArgs) -> Result<i32> {
    let mut reports = Vec::new();
    match args.name.as_str() {
        "additive-period" => {
            let rule = parse_game(&args.game)?;
            let row = args
                .row
                .ok_or_else(|| Error::Config("additive-period requires --row".into()))?;
            if args.max_b < row {
                return Err(Error::Config(format!("--max-b {} is below --row {row}", args.max_b)));
            }
            memory_guard(row, args.max_b, args.yes)?;
            let t = GrundyTable::build_band(&rule, row, args.max_b)?;
            reports.push(Report::Period(conjecture::mine_additive_period(&t, row)?));
        }
        "bw-upper2" => {
            memory_guard(args.max, args.max, args.yes)?;
            let t = build_square(&GameRule::RWythoff, args.max)?;
            reports.push(Report::Verification(conjecture::check_conjecture_bw_upper2(&t)?));
        }
        "ew-diagonals" => {
            memory_guard(args.max, args.max, args.yes)?;
            let t = GrundyTable::build(&GameRule::EWythoff, args.max)?;
            reports.push(Report::Verification(conjecture::check_conjecture_ew_diagonals(&t)?));
        }
        "survey-value1" => {
            memory_guard(args.max, args.max, args.yes)?;
            let mut rules = vec![GameRule::RWythoff, GameRule::EWythoff];
            for path in &args.rules {
                rules.push(GameRule::from_config_file(path)?);
            }
            for rule in &rules {
                let t = GrundyTable::build(rule, args.max)?;
                reports.push(Report::Survey(conjecture::survey_value1(&t)));
            }
        }
        other => {
            return Err(Error::Config(format!(
                "unknown conjecture '{other}' (expected additive-period, bw-upper2, ew-diagonals, survey-value1)"
            )))
        }
    }
    finish_reports(&reports, args.format, args.out.as_deref())
}

// ---------------------------------------------------------------------------
// classify / best-move

fn cmd_classify(args: ClassifyArgs) -> Result<i32> {
    let class = beatty::classify(args.value)?;
    let n = class.index;
    let (pa, pb) = (beatty::a(n)?, beatty::b(n)?);
    let kind = match class.kind {
        SeqKind::A => "A",
        SeqKind::B => "B",
    };
    let text = match args.format {
        ReportFormat::Text => format!("{} = {kind}(n={n}); companion P-position ({pa},{pb})", args.value),
        ReportFormat::Json => serde_json::to_string_pretty(&serde_json::json!({
            "value": args.value,
            "kind": kind,
            "index": n,
            "p_position": [pa, pb],
        }))
        .expect("classification serializes"),
    };
    println!("{text}");
    Ok(0)
}

fn parse_position(s: &str) -> Result<Position> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| Error::Config(format!("position '{s}' must be of the form a,b")))?;
    let a: u64 = a.parse().map_err(|_| Error::Config(format!("bad pile size '{a}'")))?;
    let b: u64 = b.parse().map_err(|_| Error::Config(format!("bad pile size '{b}'")))?;
    Ok(Position::new(a, b))
}

fn cmd_best_move(args: BestMoveArgs) -> Result<i32> {
    let rule = parse_game(&args.game)?;
    let p = parse_position(&args.position)?;
    let wins = winning_moves(&rule, p);
    let text = match args.format {
        ReportFormat::Text => {
            if wins.is_empty() {
                format!("{p}: P-position: no winning move")
            } else {
                let mut lines = vec![format!("{p}: {} winning move(s)", wins.len())];
                for (mv, q) in &wins {
                    lines.push(format!("  {mv} -> {q}"));
                }
                lines.join("\n")
            }
        }
        ReportFormat::Json => {
            let moves: Vec<_> = wins
                .iter()
                .map(|(mv, q)| {
                    serde_json::json!({
                        "move": mv,
                        "to": [q.low(), q.high()],
                    })
                })
                .collect();
            serde_json::to_string_pretty(&serde_json::json!({
                "game": rule.name(),
                "position": [p.low(), p.high()],
                "p_position": wins.is_empty(),
                "winning_moves": moves,
            }))
            .expect("moves serialize")
        }
    };
    println!("{text}");
    Ok(0)
}
