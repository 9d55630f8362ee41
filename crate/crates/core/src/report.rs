//! Structured pass/fail evidence for claim checks, periodicity mining, and
//! the value-1 survey. Reports serialize to a JSON array (each object tagged
//! with `kind`) and render to a human-readable text summary.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::position::Position;

/// How many counterexamples a report stores; the total is always recorded
/// in a note when the cap is hit.
pub const COUNTEREXAMPLE_CAP: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// A concrete position refuting a claim, with an optional explanation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub position: [u64; 2],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Counterexample {
    pub fn new(p: Position, detail: impl Into<String>) -> Self {
        Counterexample { position: [p.low(), p.high()], detail: Some(detail.into()) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub claim_id: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rule: Option<String>,
    pub bounds: BTreeMap<String, u64>,
    pub status: Status,
    pub counterexamples: Vec<Counterexample>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub elapsed_ms: u64,
}

/// Accumulator enforcing the report invariant: `Fail` exactly when at least
/// one counterexample was recorded; otherwise `Skipped` when any part of the
/// claim could not be decided within its budget, else `Pass`.
pub struct ReportBuilder {
    claim_id: String,
    rule: Option<String>,
    bounds: BTreeMap<String, u64>,
    counterexamples: Vec<Counterexample>,
    dropped: usize,
    notes: Vec<String>,
    skipped: bool,
    started: Instant,
}

impl ReportBuilder {
    pub fn new(claim_id: &str) -> Self {
        ReportBuilder {
            claim_id: claim_id.to_string(),
            rule: None,
            bounds: BTreeMap::new(),
            counterexamples: Vec::new(),
            dropped: 0,
            notes: Vec::new(),
            skipped: false,
            started: Instant::now(),
        }
    }

    pub fn rule(mut self, name: String) -> Self {
        self.rule = Some(name);
        self
    }

    pub fn bound(mut self, key: &str, value: u64) -> Self {
        self.bounds.insert(key.to_string(), value);
        self
    }

    pub fn counterexample(&mut self, p: Position, detail: impl Into<String>) {
        if self.counterexamples.len() < COUNTEREXAMPLE_CAP {
            self.counterexamples.push(Counterexample::new(p, detail));
        } else {
            self.dropped += 1;
        }
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    /// Mark part of the claim as undecided within budget (not a disproof).
    pub fn skip(&mut self, why: impl Into<String>) {
        self.skipped = true;
        self.notes.push(why.into());
    }

    pub fn has_failures(&self) -> bool {
        !self.counterexamples.is_empty()
    }

    pub fn finish(mut self) -> VerificationReport {
        if self.dropped > 0 {
            self.notes.push(format!(
                "{} further counterexamples not stored",
                self.dropped
            ));
        }
        let status = if !self.counterexamples.is_empty() {
            Status::Fail
        } else if self.skipped {
            Status::Skipped
        } else {
            Status::Pass
        };
        VerificationReport {
            claim_id: self.claim_id,
            rule: self.rule,
            bounds: self.bounds,
            status,
            counterexamples: self.counterexamples,
            notes: self.notes,
            elapsed_ms: self.started.elapsed().as_millis() as u64,
        }
    }
}

/// Additive-periodicity evidence for one Grundy row: the minimal `(period,
/// preperiod)` found on the observed window, if any, and whether re-mining
/// on half the window agrees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeriodReport {
    pub rule: String,
    pub row: u64,
    pub period: Option<u64>,
    pub preperiod: Option<u64>,
    pub checked_to: u64,
    pub stable_under_doubling: bool,
    pub elapsed_ms: u64,
}

/// Descriptive comparison of one rule against the shared losing-position set
/// and the value-1 closed form; makes no claim beyond the stated bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveyReport {
    pub rule: String,
    pub bound: u64,
    pub preserves_p_positions: bool,
    pub value1_extra: Vec<[u64; 2]>,
    pub value1_missing: Vec<[u64; 2]>,
    pub elapsed_ms: u64,
}

/// One entry of the report stream.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Report {
    Verification(VerificationReport),
    Period(PeriodReport),
    Survey(SurveyReport),
}

impl Report {
    /// A report is "ok" unless it is a failed verification.
    pub fn is_ok(&self) -> bool {
        match self {
            Report::Verification(v) => v.status != Status::Fail,
            _ => true,
        }
    }
}

pub fn all_ok(reports: &[Report]) -> bool {
    reports.iter().all(Report::is_ok)
}

pub fn to_json(reports: &[Report]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => write!(f, "PASS"),
            Status::Fail => write!(f, "FAIL"),
            Status::Skipped => write!(f, "SKIP"),
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.status, self.claim_id)?;
        if let Some(rule) = &self.rule {
            write!(f, " [{rule}]")?;
        }
        for (k, v) in &self.bounds {
            write!(f, " {k}={v}")?;
        }
        write!(f, " ({} ms)", self.elapsed_ms)?;
        for cex in &self.counterexamples {
            write!(f, "\n    counterexample ({},{})", cex.position[0], cex.position[1])?;
            if let Some(d) = &cex.detail {
                write!(f, ": {d}")?;
            }
        }
        for note in &self.notes {
            write!(f, "\n    note: {note}")?;
        }
        Ok(())
    }
}

impl fmt::Display for PeriodReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.period, self.preperiod) {
            (Some(p), Some(n0)) => write!(
                f,
                "PERIOD {} row {}: p={} n0={} checked_to={} stable_under_doubling={}",
                self.rule, self.row, p, n0, self.checked_to, self.stable_under_doubling
            ),
            _ => write!(
                f,
                "PERIOD {} row {}: none found (checked_to={})",
                self.rule, self.row, self.checked_to
            ),
        }
    }
}

impl fmt::Display for SurveyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fmt_set = |ps: &[[u64; 2]]| {
            if ps.is_empty() {
                "{}".to_string()
            } else {
                let items: Vec<String> = ps.iter().map(|p| format!("({},{})", p[0], p[1])).collect();
                format!("{{{}}}", items.join(", "))
            }
        };
        write!(
            f,
            "SURVEY {} bound={}: preserves_p_positions={} value1_extra={} value1_missing={}",
            self.rule,
            self.bound,
            self.preserves_p_positions,
            fmt_set(&self.value1_extra),
            fmt_set(&self.value1_missing)
        )
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Report::Verification(r) => r.fmt(f),
            Report::Period(r) => r.fmt(f),
            Report::Survey(r) => r.fmt(f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_tracks_counterexamples() {
        let b = ReportBuilder::new("demo");
        assert_eq!(b.finish().status, Status::Pass);

        let mut b = ReportBuilder::new("demo");
        b.skip("budget exhausted");
        assert_eq!(b.finish().status, Status::Skipped);

        let mut b = ReportBuilder::new("demo");
        b.skip("budget exhausted");
        b.counterexample(Position::new(1, 2), "broken");
        let r = b.finish();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.counterexamples.len(), 1);
    }

    #[test]
    fn counterexample_cap_is_noted() {
        let mut b = ReportBuilder::new("demo");
        for i in 0..COUNTEREXAMPLE_CAP + 5 {
            b.counterexample(Position::new(i as u64, i as u64), "x");
        }
        let r = b.finish();
        assert_eq!(r.counterexamples.len(), COUNTEREXAMPLE_CAP);
        assert!(r.notes.iter().any(|n| n.contains("5 further")));
    }

    #[test]
    fn json_stream_is_tagged() {
        let reports = vec![
            Report::Verification(ReportBuilder::new("demo").finish()),
            Report::Period(PeriodReport {
                rule: "r-wythoff".into(),
                row: 3,
                period: Some(4),
                preperiod: Some(7),
                checked_to: 100,
                stable_under_doubling: true,
                elapsed_ms: 0,
            }),
        ];
        let json = to_json(&reports);
        assert!(json.contains("\"kind\": \"verification\""));
        assert!(json.contains("\"kind\": \"period\""));
    }
}
