//! Machine-readable verification reports: one record per check, a summary,
//! and deterministic JSON / CSV / text serializations.

use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::io;
use std::path::{Path, PathBuf};
use std::str::FromStr;

/// One executed check. `pass` holds exactly when `max_error <= tol`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub paper_ref: String,
    pub max_error: f64,
    pub tol: f64,
    pub pass: bool,
    pub ms: f64,
}

#[derive(Clone, Copy, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
}

impl Report {
    pub fn new(suite: &str, seed: u64, checks: Vec<CheckRecord>) -> Self {
        let pass = checks.iter().filter(|c| c.pass).count();
        let fail = checks.len() - pass;
        Self {
            suite: suite.to_string(),
            seed,
            checks,
            summary: Summary { pass, fail },
        }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization is infallible")
    }

    /// One row per check under a fixed header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("id,paper_ref,max_error,tol,pass,ms\n");
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{},{},{:e},{:e},{},{}",
                c.id, c.paper_ref, c.max_error, c.tol, c.pass, c.ms
            );
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite {} (seed {})", self.suite, self.seed);
        for c in &self.checks {
            let _ = writeln!(
                out,
                "  [{}] {:<44} max_error {:.3e}  tol {:.1e}  ({:.1} ms)",
                if c.pass { "PASS" } else { "FAIL" },
                c.id,
                c.max_error,
                c.tol,
                c.ms
            );
        }
        let _ = writeln!(
            out,
            "summary: {} passed, {} failed",
            self.summary.pass, self.summary.fail
        );
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
    Text,
}

impl ReportFormat {
    pub fn extension(&self) -> &'static str {
        match self {
            ReportFormat::Json => "json",
            ReportFormat::Csv => "csv",
            ReportFormat::Text => "txt",
        }
    }
}

impl FromStr for ReportFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            "text" => Ok(ReportFormat::Text),
            other => Err(format!("unknown format '{other}' (expected json|csv|text)")),
        }
    }
}

/// Write the report to `<out_dir>/report_<suite>.<ext>` and return the path.
pub fn emit_report(report: &Report, format: ReportFormat, out_dir: &Path) -> io::Result<PathBuf> {
    std::fs::create_dir_all(out_dir)?;
    let path = out_dir.join(format!("report_{}.{}", report.suite, format.extension()));
    let body = match format {
        ReportFormat::Json => report.to_json(),
        ReportFormat::Csv => report.to_csv(),
        ReportFormat::Text => report.to_text(),
    };
    std::fs::write(&path, body)?;
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_serializes() {
        let r = Report::new("lie", 7, Vec::new());
        assert!(r.all_pass());
        let json = r.to_json();
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back.suite, "lie");
        assert_eq!(back.summary, Summary { pass: 0, fail: 0 });
        assert_eq!(r.to_csv(), "id,paper_ref,max_error,tol,pass,ms\n");
    }

    #[test]
    fn summary_counts_failures() {
        let checks = vec![
            CheckRecord {
                id: "a".into(),
                paper_ref: "x".into(),
                max_error: 1e-3,
                tol: 1e-6,
                pass: false,
                ms: 1.0,
            },
            CheckRecord {
                id: "b".into(),
                paper_ref: "y".into(),
                max_error: 1e-9,
                tol: 1e-6,
                pass: true,
                ms: 2.0,
            },
        ];
        let r = Report::new("orbit", 1, checks);
        assert_eq!(r.summary, Summary { pass: 1, fail: 1 });
        assert!(!r.all_pass());
        assert_eq!(r.to_csv().lines().count(), 3);
    }

    #[test]
    fn json_round_trip_preserves_records() {
        let checks = vec![CheckRecord {
            id: "c".into(),
            paper_ref: "identity".into(),
            max_error: 3.25e-11,
            tol: 1e-10,
            pass: true,
            ms: 0.0,
        }];
        let r = Report::new("moyal", 42, checks);
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back.checks[0].max_error, 3.25e-11);
        assert_eq!(back.seed, 42);
    }
}
