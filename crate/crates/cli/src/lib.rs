//! Verification suites and machine-readable check records for the command
//! line front end.
//!
//! A suite runs a deterministic list of cross-checks and reports one record
//! per check. Reports are newline-delimited with tab-separated fields in the
//! fixed order (suite, params, status, expected, actual, elapsed_us), so two
//! runs with identical flags are byte-identical except for the timing field.

mod suites;

pub use suites::{run_suite, Bounds, SUITE_NAMES};

use std::fmt;

/// Outcome of one check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Error,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Error => "error",
        };
        write!(f, "{word}")
    }
}

/// One comparison: canonical expected/actual text plus timing. `expected`
/// equals `actual` exactly when the status is `pass`; on `error` the message
/// is carried in `actual`.
#[derive(Clone, Debug)]
pub struct CheckRecord {
    pub suite: String,
    pub params: Vec<(String, String)>,
    pub status: CheckStatus,
    pub expected: String,
    pub actual: String,
    pub elapsed_us: u128,
}

impl CheckRecord {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    /// The tab-separated report line for this record.
    pub fn render(&self) -> String {
        let params = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.suite, params, self.status, self.expected, self.actual, self.elapsed_us
        )
    }
}

/// Renders a whole report, one line per record.
pub fn render_report(records: &[CheckRecord]) -> String {
    let mut out = String::new();
    for record in records {
        out.push_str(&record.render());
        out.push('\n');
    }
    out
}
