use serde::Serialize;
use serde_json::Value;

use crate::config::SuiteConfig;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseVerdict {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, Serialize)]
pub struct Case {
    pub id: String,
    pub input: Value,
    pub expected: Value,
    pub actual: Value,
    pub verdict: CaseVerdict,
    pub millis: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tool_version: String,
    pub config: SuiteConfig,
    pub cases: Vec<Case>,
    pub summary: Summary,
}

impl Report {
    pub fn new(config: SuiteConfig, cases: Vec<Case>) -> Self {
        let mut summary = Summary::default();
        for c in &cases {
            match c.verdict {
                CaseVerdict::Pass => summary.pass += 1,
                CaseVerdict::Fail => summary.fail += 1,
                CaseVerdict::Skip => summary.skip += 1,
            }
        }
        Report { tool_version: env!("CARGO_PKG_VERSION").to_string(), config, cases, summary }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One row per case: `id,verdict,expected,actual`, with JSON cells quoted.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("id,verdict,expected,actual\n");
        for c in &self.cases {
            let verdict = serde_json::to_value(c.verdict).expect("verdict serializes");
            let row = [
                c.id.clone(),
                verdict.as_str().unwrap_or_default().to_string(),
                c.expected.to_string(),
                c.actual.to_string(),
            ];
            out.push_str(&row.iter().map(|f| csv_field(f)).collect::<Vec<_>>().join(","));
            out.push('\n');
        }
        out
    }
}

pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
