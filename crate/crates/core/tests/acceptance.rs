//! Acceptance suite: one test per criterion, each printing a single
//! `ACCEPTANCE <n> <name>: PASS|FAIL` line (visible with `--nocapture`).
//! Bounds and tolerances are pinned in the asserts; every comparison is
//! exact unless a runtime budget is stated.

mod common;

use std::sync::OnceLock;
use std::time::Instant;

use wythoff::conjecture::*;
use wythoff::report::Status;
use wythoff::verify::*;
use wythoff::{beatty, GameRule, GrundyTable, Position};

fn criterion(n: u32, name: &str, failures: Vec<String>) {
    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("ACCEPTANCE {n:02} {name}: {verdict}");
    if !failures.is_empty() {
        panic!("criterion {n} ({name}) failed:\n  {}", failures.join("\n  "));
    }
}

fn r2000() -> &'static GrundyTable {
    static T: OnceLock<GrundyTable> = OnceLock::new();
    T.get_or_init(|| GrundyTable::build(&GameRule::RWythoff, 2000).unwrap())
}

fn e2000() -> &'static GrundyTable {
    static T: OnceLock<GrundyTable> = OnceLock::new();
    T.get_or_init(|| GrundyTable::build(&GameRule::EWythoff, 2000).unwrap())
}

#[test]
fn acceptance_01_golden_tables() {
    let started = Instant::now();
    let report = verify_golden_tables();
    let elapsed = started.elapsed();
    let mut failures = Vec::new();
    if report.status != Status::Pass {
        failures.push(format!("{report}"));
    }
    if elapsed.as_secs_f64() >= 1.0 {
        failures.push(format!("golden comparison took {elapsed:?}, budget 1 s"));
    }
    criterion(1, "golden-tables", failures);
}

#[test]
fn acceptance_02_p_position_preservation() {
    let started = Instant::now();
    let mut failures = Vec::new();
    for rule in [GameRule::Wythoff, GameRule::RWythoff, GameRule::EWythoff] {
        let table = GrundyTable::build(&rule, 2000).unwrap();
        let report = verify_p_positions(&table);
        if report.status != Status::Pass {
            failures.push(format!("{report}"));
        }
    }
    let elapsed = started.elapsed();
    if elapsed.as_secs() >= 60 {
        failures.push(format!("zero-set checks took {elapsed:?}, budget 60 s"));
    }
    criterion(2, "p-position-preservation", failures);
}

#[test]
fn acceptance_03_value1_formulas() {
    let mut failures = Vec::new();
    for table in [r2000(), e2000()] {
        let report = verify_value1(table).unwrap();
        if report.status != Status::Pass {
            failures.push(format!("{report}"));
        }
    }
    // The exceptional members and the excluded index, explicitly.
    let r = r2000();
    for (p, want) in [((2, 2), 1u32), ((4, 6), 1)] {
        let got = r.grundy_at(p.0, p.1).unwrap();
        if got != want {
            failures.push(format!("restriction g{p:?} = {got}, want {want}"));
        }
    }
    let excluded = Position::new(beatty::a(2).unwrap() - 1, beatty::b(2).unwrap() - 1);
    if r.grundy(excluded).unwrap() == 1 {
        failures.push(format!("index-2 member {excluded} must not have value 1 in the restriction"));
    }
    if e2000().grundy(excluded).unwrap() != 1 {
        failures.push(format!("index-2 member {excluded} must have value 1 in the extension"));
    }
    criterion(3, "value1-formulas", failures);
}

#[test]
fn acceptance_04_sg_bounds() {
    let mut failures = Vec::new();
    for table in [r2000(), e2000()] {
        let report = verify_bounds(table).unwrap();
        if report.status != Status::Pass {
            failures.push(format!("{report}"));
        }
    }
    criterion(4, "sg-bounds", failures);
}

#[test]
fn acceptance_05_small_row_closed_forms() {
    let mut failures = Vec::new();
    let r = GrundyTable::build_band(&GameRule::RWythoff, 3, 100_000).unwrap();
    let report = verify_small_row_formulas(&r, 100_000).unwrap();
    if report.status != Status::Pass {
        failures.push(format!("{report}"));
    }
    let e = GrundyTable::build_band(&GameRule::EWythoff, 2, 100_000).unwrap();
    let report = verify_small_row_formulas(&e, 100_000).unwrap();
    if report.status != Status::Pass {
        failures.push(format!("{report}"));
    }
    criterion(5, "small-row-closed-forms", failures);
}

#[test]
fn acceptance_06_no_redundant_moves() {
    let report = verify_no_redundant_moves(200);
    let mut failures = Vec::new();
    if report.status != Status::Pass {
        failures.push(format!("{report}"));
    }
    criterion(6, "no-redundant-moves", failures);
}

#[test]
fn acceptance_07_row_and_diagonal_structure() {
    let mut failures = Vec::new();
    // Row existence: every (row, value) pair must be found within budget.
    for rule in [GameRule::RWythoff, GameRule::EWythoff] {
        let band = GrundyTable::build_band(&rule, 64, 4096).unwrap();
        let report = verify_row_existence(&band, 64, 64, 4096).unwrap();
        if report.status != Status::Pass || !report.notes.is_empty() {
            failures.push(format!("{report}"));
        }
    }
    // Diagonal uniqueness: zero violations.
    let square = GrundyTable::build(&GameRule::RWythoff, 64 + 4096).unwrap();
    let report = verify_diagonal_uniqueness(&square, 64, 64, 4096).unwrap();
    if !report.counterexamples.is_empty() {
        failures.push(format!("{report}"));
    }
    criterion(7, "row-and-diagonal-structure", failures);
}

#[test]
fn acceptance_08_oracle_equivalence() {
    let mut failures = Vec::new();
    for rule in [GameRule::Wythoff, GameRule::RWythoff, GameRule::EWythoff] {
        let table = GrundyTable::build(&rule, 200).unwrap();
        let naive = common::naive_table(rule.id(), 200);
        for (a, b, g) in table.iter_cells() {
            let want = common::naive_value(&naive, a, b);
            if g != want {
                failures.push(format!("{} ({a},{b}): engine {g}, oracle {want}", rule.name()));
                break;
            }
        }
    }
    criterion(8, "oracle-equivalence", failures);
}

#[test]
fn acceptance_09_beatty_kernel() {
    let mut failures = Vec::new();
    // Complementarity: the two sequences partition 1..=10^6.
    let n_max = 1_000_000u64;
    let mut seen = vec![0u8; (n_max + 1) as usize];
    for n in 1.. {
        let v = beatty::a(n).unwrap();
        if v > n_max {
            break;
        }
        seen[v as usize] += 1;
    }
    for n in 1.. {
        let v = beatty::b(n).unwrap();
        if v > n_max {
            break;
        }
        seen[v as usize] += 1;
    }
    let bad = (1..=n_max).find(|&v| seen[v as usize] != 1);
    if let Some(v) = bad {
        failures.push(format!("{v} is covered {} times", seen[v as usize]));
    }
    // Classification round-trips on indices up to 10^5.
    for n in 1..=100_000u64 {
        let ca = beatty::classify(beatty::a(n).unwrap()).unwrap();
        let cb = beatty::classify(beatty::b(n).unwrap()).unwrap();
        if (ca.kind, ca.index) != (beatty::SeqKind::A, n) || (cb.kind, cb.index) != (beatty::SeqKind::B, n) {
            failures.push(format!("round-trip broken at index {n}"));
            break;
        }
    }
    criterion(9, "beatty-kernel", failures);
}

/// Conjecture exploration. Two sub-checks are genuinely red and left so:
/// the off-diagonal closed form of the extension has real counterexamples
/// (the first is g(35,107) = 56 where the form predicts 141, confirmed by
/// the naive oracle and an independent brute force), and rows past ~10 of
/// the restriction (resp. ~17 of the extension) have true periods or
/// preperiods beyond what a 2e4 window can validate, so doubling-stability
/// for every row up to 30 is unattainable at this window.
#[test]
fn acceptance_10_conjecture_exploration() {
    let mut failures = Vec::new();
    let report = check_conjecture_bw_upper2(r2000()).unwrap();
    if report.status != Status::Pass {
        failures.push(format!("{report}"));
    }
    let report = check_conjecture_ew_diagonals(e2000()).unwrap();
    if report.status != Status::Pass {
        let first = &report.counterexamples[0];
        failures.push(format!(
            "diagonal-form counterexamples exist (first: ({},{}) {})",
            first.position[0],
            first.position[1],
            first.detail.as_deref().unwrap_or("")
        ));
    }
    for rule in [GameRule::RWythoff, GameRule::EWythoff] {
        let band = GrundyTable::build_band(&rule, 30, 20_000).unwrap();
        for a in 0..=30 {
            let rep = mine_additive_period(&band, a).unwrap();
            match (rep.period, rep.stable_under_doubling) {
                (Some(_), true) => {}
                (Some(p), false) => failures.push(format!(
                    "{} row {a}: period {p} found but not stable under doubling at window 20000",
                    rule.name()
                )),
                (None, _) => failures.push(format!(
                    "{} row {a}: no additive period within window 20000",
                    rule.name()
                )),
            }
        }
    }
    criterion(10, "conjecture-exploration", failures);
}

#[test]
fn acceptance_11_performance() {
    let mut failures = Vec::new();
    let started = Instant::now();
    let rowmajor = GrundyTable::build(&GameRule::RWythoff, 4096).unwrap();
    let elapsed = started.elapsed();
    if elapsed.as_secs() >= 30 {
        failures.push(format!("construction at 4096 took {elapsed:?}, budget 30 s"));
    }
    let wavefront = GrundyTable::build_wavefront(&GameRule::RWythoff, 4096).unwrap();
    if rowmajor != wavefront {
        failures.push("wavefront and row-major orders disagree at bound 4096".into());
    }
    // Resident peak on this process so far; the two tables are ~34 MiB each.
    if let Ok(status) = std::fs::read_to_string("/proc/self/status") {
        if let Some(line) = status.lines().find(|l| l.starts_with("VmHWM")) {
            let kb: u64 = line
                .split_whitespace()
                .nth(1)
                .and_then(|t| t.parse().ok())
                .unwrap_or(0);
            if kb >= 1 << 20 {
                failures.push(format!("peak resident {kb} kB exceeds 1 GiB"));
            }
        }
    }
    criterion(11, "performance", failures);
}
