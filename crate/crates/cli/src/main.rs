use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use hecke_bz_cli::config::{Args, SuiteConfig};

fn main() -> ExitCode {
    let cfg = match SuiteConfig::from_args(Args::parse()) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("hecke-bz: {e}");
            return ExitCode::from(2);
        }
    };
    let report = hecke_bz_cli::run(&cfg);
    let text = hecke_bz_cli::render(&report);
    let written = match &cfg.out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("hecke-bz: cannot write report: {e}");
        return ExitCode::from(2);
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
