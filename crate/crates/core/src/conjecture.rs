//! Empirical exploration of the open claims: additive-periodicity mining of
//! Grundy rows, the conjectured growth envelope of the restricted game, the
//! conjectured diagonal/row closed forms of the extension, and a descriptive
//! survey of how configured variants compare on the value-1 set.
//!
//! Nothing here proves anything: enumeration cannot settle these claims.
//! Reports carry a stability flag (re-mining on half the window) as the
//! confidence proxy, and conjecture checkers report counterexamples
//! prominently — finding one refutes the conjecture.

use std::collections::BTreeSet;
use std::time::Instant;

use crate::beatty;
use crate::error::{Error, Result};
use crate::grundy::{is_p_position, GrundyTable};
use crate::position::Position;
use crate::report::{PeriodReport, ReportBuilder, SurveyReport, VerificationReport};
use crate::rules::RuleId;

/// Minimal additive period of `seq[0..=window]`: the lexicographically
/// smallest `(p, n0)` with `seq[n + p] = seq[n] + p` for all
/// `n0 <= n <= window - p`. A candidate is accepted only when its validated
/// tail covers at least a quarter of the window (`n0 + p <= 3*window/4`);
/// without a floor like that, any `p` would qualify with a preperiod pushed
/// to the window's end, which says nothing.
fn mine_window(seq: &[u32], window: usize) -> Option<(u64, u64)> {
    debug_assert!(window < seq.len());
    let budget = 3 * window / 4;
    for p in 1..budget {
        // Walk down from the top so a late violation rejects p immediately.
        let mut n0 = 0usize;
        let mut n = window - p;
        loop {
            if seq[n + p] as u64 != seq[n] as u64 + p as u64 {
                n0 = n + 1;
                break;
            }
            if n == 0 {
                break;
            }
            n -= 1;
        }
        if n0 + p <= budget {
            return Some((p as u64, n0 as u64));
        }
    }
    None
}

/// Mine row `a` of the table for an additive period, re-mining on half the
/// window to set the stability flag.
pub fn mine_additive_period(table: &GrundyTable, a: u64) -> Result<PeriodReport> {
    let started = Instant::now();
    if table.b_max() < 4 {
        return Err(Error::WindowTooSmall { got: table.b_max() });
    }
    let seq = table.row(a)?;
    let window = seq.len() - 1;
    let found = mine_window(&seq, window);
    let stable = match found {
        Some(pq) => mine_window(&seq, window / 2) == Some(pq),
        None => false,
    };
    Ok(PeriodReport {
        rule: table.rule().name(),
        row: a,
        period: found.map(|(p, _)| p),
        preperiod: found.map(|(_, n0)| n0),
        checked_to: window as u64,
        stable_under_doubling: stable,
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

/// Conjectured growth envelope of the restricted game, for `4 <= a <= b`:
/// off the diagonal `g <= b + floor(b/3) - 1`; on it,
/// `floor(3b/4) <= g <= b + floor(b/3)`.
pub fn check_conjecture_bw_upper2(table: &GrundyTable) -> Result<VerificationReport> {
    if table.rule().id() != RuleId::RWythoff {
        return Err(Error::FormulaUnavailable { rule: table.rule().name() });
    }
    let mut rb = ReportBuilder::new("conjecture-upper-bound")
        .rule(table.rule().name())
        .bound("a_max", table.a_max())
        .bound("b_max", table.b_max());
    for (a, b, g) in table.iter_cells() {
        if a < 4 {
            continue;
        }
        let g = g as u64;
        if a < b {
            if g > b + b / 3 - 1 {
                rb.counterexample(Position::new(a, b), format!("g = {g} > {}", b + b / 3 - 1));
            }
        } else {
            if g < 3 * b / 4 {
                rb.counterexample(Position::new(a, b), format!("g = {g} < {}", 3 * b / 4));
            }
            if g > b + b / 3 {
                rb.counterexample(Position::new(a, b), format!("g = {g} > {}", b + b / 3));
            }
        }
    }
    Ok(rb.finish())
}

/// Conjectured closed forms of the extension near and off the diagonal:
/// `g(a, a+r) = 2a + r` for `a >= 2r` (with the single exception
/// `g(2,2) = 3`), and `g(a, 3a+r) = 4a + r - 1` for `a >= 4`,
/// `2 <= r <= a + 1`.
pub fn check_conjecture_ew_diagonals(table: &GrundyTable) -> Result<VerificationReport> {
    if table.rule().id() != RuleId::EWythoff {
        return Err(Error::FormulaUnavailable { rule: table.rule().name() });
    }
    let mut rb = ReportBuilder::new("conjecture-diagonal-forms")
        .rule(table.rule().name())
        .bound("a_max", table.a_max())
        .bound("b_max", table.b_max());
    // Near-diagonal family: b = a + r with a >= 2r.
    for (a, b, g) in table.iter_cells() {
        let r = b - a;
        if a < 2 * r {
            continue;
        }
        let want = if a == 2 && r == 0 { 3 } else { 2 * a + r };
        if g as u64 != want {
            rb.counterexample(
                Position::new(a, b),
                format!("near-diagonal form predicts {want}, table has {g}"),
            );
        }
    }
    // Off-diagonal family: b = 3a + r.
    for a in 4..=table.a_max() {
        for r in 2..=a + 1 {
            let b = 3 * a + r;
            if b > table.b_max() {
                break;
            }
            let want = 4 * a + r - 1;
            let got = table.g(a, b) as u64;
            if got != want {
                rb.counterexample(
                    Position::new(a, b),
                    format!("off-diagonal form predicts {want}, table has {got}"),
                );
            }
        }
    }
    Ok(rb.finish())
}

/// Descriptive survey of one rule: does its grundy-zero set match the
/// shared losing-position formula within the bound, and how does its
/// value-1 set differ from the bare `(a(n)-1, b(n)-1)` family?
pub fn survey_value1(table: &GrundyTable) -> SurveyReport {
    let started = Instant::now();
    let bound = table.b_max();
    let mut preserves = true;
    let mut in_game = BTreeSet::new();
    for (a, b, g) in table.iter_cells() {
        let p = Position::new(a, b);
        if (g == 0) != is_p_position(p) {
            preserves = false;
        }
        if g == 1 {
            in_game.insert(p);
        }
    }
    let mut baseline = BTreeSet::new();
    for n in 1..=bound {
        let p = Position::new(beatty::a(n).unwrap() - 1, beatty::b(n).unwrap() - 1);
        if p.high() <= bound && p.low() <= table.a_max() {
            baseline.insert(p);
        }
    }
    SurveyReport {
        rule: table.rule().name(),
        bound,
        preserves_p_positions: preserves,
        value1_extra: in_game.difference(&baseline).map(|p| [p.low(), p.high()]).collect(),
        value1_missing: baseline.difference(&in_game).map(|p| [p.low(), p.high()]).collect(),
        elapsed_ms: started.elapsed().as_millis() as u64,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;
    use crate::rules::GameRule;

    #[test]
    fn miner_on_known_rows() {
        let t = GrundyTable::build_band(&GameRule::RWythoff, 3, 400).unwrap();
        let r0 = mine_additive_period(&t, 0).unwrap();
        assert_eq!((r0.period, r0.preperiod), (Some(1), Some(0)));
        assert!(r0.stable_under_doubling);

        let r1 = mine_additive_period(&t, 1).unwrap();
        assert_eq!((r1.period, r1.preperiod), (Some(1), Some(3)));

        let r3 = mine_additive_period(&t, 3).unwrap();
        assert_eq!((r3.period, r3.preperiod), (Some(4), Some(7)));
        assert!(r3.stable_under_doubling);
    }

    #[test]
    fn miner_on_extension_rows() {
        let t = GrundyTable::build_band(&GameRule::EWythoff, 2, 400).unwrap();
        let r0 = mine_additive_period(&t, 0).unwrap();
        assert_eq!((r0.period, r0.preperiod), (Some(1), Some(0)));
        let r1 = mine_additive_period(&t, 1).unwrap();
        assert_eq!((r1.period, r1.preperiod), (Some(3), Some(0)));
        let r2 = mine_additive_period(&t, 2).unwrap();
        assert_eq!((r2.period, r2.preperiod), (Some(3), Some(2)));
    }

    #[test]
    fn mined_periods_revalidate() {
        let t = GrundyTable::build_band(&GameRule::RWythoff, 6, 600).unwrap();
        for a in 0..=6 {
            let rep = mine_additive_period(&t, a).unwrap();
            let (p, n0) = (rep.period.unwrap() as usize, rep.preperiod.unwrap() as usize);
            let seq = t.row(a).unwrap();
            let window = seq.len() - 1;
            for n in n0..=window - p {
                assert_eq!(seq[n + p], seq[n] + p as u32, "row {a} n={n}");
            }
        }
    }

    #[test]
    fn miner_rejects_tiny_windows() {
        let t = GrundyTable::build(&GameRule::RWythoff, 3).unwrap();
        assert!(matches!(mine_additive_period(&t, 0), Err(Error::WindowTooSmall { .. })));
    }

    #[test]
    fn window_monotonicity_when_stable() {
        let t = GrundyTable::build_band(&GameRule::RWythoff, 3, 512).unwrap();
        let seq = t.row(3).unwrap();
        let full = mine_window(&seq, 512);
        assert_eq!(full, Some((4, 7)));
        for w in (256..=512).step_by(32) {
            assert_eq!(mine_window(&seq, w), full, "window {w}");
        }
    }

    #[test]
    fn upper_bound_conjecture_small() {
        let t = GrundyTable::build(&GameRule::RWythoff, 200).unwrap();
        let r = check_conjecture_bw_upper2(&t).unwrap();
        assert_eq!(r.status, Status::Pass, "{r}");
    }

    #[test]
    fn diagonal_forms_conjecture_clean_below_first_counterexample() {
        let t = GrundyTable::build(&GameRule::EWythoff, 100).unwrap();
        let r = check_conjecture_ew_diagonals(&t).unwrap();
        assert_eq!(r.status, Status::Pass, "{r}");
    }

    #[test]
    fn diagonal_forms_conjecture_is_refuted_at_35_107() {
        // The off-diagonal closed form fails first at (35, 107): the true
        // value is 56 where the form predicts 4*35 + 2 - 1 = 141. Confirmed
        // by the generic and wavefront builders and by an independent
        // brute force; the checker's job is to surface exactly this.
        let t = GrundyTable::build(&GameRule::EWythoff, 110).unwrap();
        assert_eq!(t.g(35, 107), 56);
        let r = check_conjecture_ew_diagonals(&t).unwrap();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.counterexamples[0].position, [35, 107]);
    }

    #[test]
    fn diagonal_form_examples_from_table_2() {
        let t = GrundyTable::build(&GameRule::EWythoff, 9).unwrap();
        assert_eq!(t.g(2, 2), 3);
        assert_eq!(t.g(4, 4), 8);
        assert_eq!(t.g(4, 5), 9);
        assert_eq!(t.g(2, 3), 5); // boundary cell a = 2r of the near family
    }

    #[test]
    fn survey_matches_known_differences() {
        let tr = GrundyTable::build(&GameRule::RWythoff, 9).unwrap();
        let s = survey_value1(&tr);
        assert!(s.preserves_p_positions);
        assert_eq!(s.value1_extra, vec![[2, 2], [4, 6]]);
        assert_eq!(s.value1_missing, vec![[2, 4]]);

        let te = GrundyTable::build(&GameRule::EWythoff, 9).unwrap();
        let s = survey_value1(&te);
        assert!(s.preserves_p_positions);
        assert!(s.value1_extra.is_empty());
        assert!(s.value1_missing.is_empty());

        let successor = GameRule::preset("successor").unwrap();
        let ts = GrundyTable::build(&successor, 24).unwrap();
        let s = survey_value1(&ts);
        assert!(s.preserves_p_positions);
    }
}
