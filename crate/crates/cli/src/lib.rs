//! Verification suites and report rendering behind the `hecke-bz` binary.

pub mod config;
pub mod report;
pub mod serialize;
pub mod suites;

use config::{Format, Suite, SuiteConfig};
use report::{csv_field, CaseVerdict, Report};

/// Run the configured suite and collect its report.
pub fn run(cfg: &SuiteConfig) -> Report {
    let cases = suites::run_cases(suites::cases_for(cfg.suite, cfg), cfg.jobs, cfg.timing);
    Report::new(cfg.clone(), cases)
}

/// Render `report` in the configured format. The `speh-table` suite renders
/// CSV as a `partition,i,summands` table.
pub fn render(report: &Report) -> String {
    match (report.config.format, report.config.suite) {
        (Format::Json, _) => report.to_json(),
        (Format::Csv, Suite::SpehTable) => speh_table_csv(report),
        (Format::Csv, _) => report.to_csv(),
    }
}

/// Summands are `;`-separated; failed or refused rows carry the verdict instead.
pub fn speh_table_csv(report: &Report) -> String {
    let mut out = String::from("partition,i,summands\n");
    for c in &report.cases {
        let partition = c.input["partition"].as_str().unwrap_or_default();
        let i = c.input["i"].to_string();
        let summands = match c.verdict {
            CaseVerdict::Pass => c.actual["summands"]
                .as_array()
                .map(|ss| ss.iter().filter_map(|s| s["label"].as_str()).collect::<Vec<_>>().join(";"))
                .unwrap_or_default(),
            CaseVerdict::Fail => "FAIL".to_string(),
            CaseVerdict::Skip => "SKIP".to_string(),
        };
        out.push_str(&format!("{},{},{}\n", csv_field(partition), i, csv_field(&summands)));
    }
    out
}
