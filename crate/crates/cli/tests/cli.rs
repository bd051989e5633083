use std::process::Command;

use clap::Parser;
use hecke_bz::heckeaff::{principal_series, steinberg_module};
use hecke_bz::{RatFunc, Rational};
use hecke_bz_cli::config::{Args, Suite, SuiteConfig};
use hecke_bz_cli::report::CaseVerdict;
use hecke_bz_cli::serialize::{module_from_json, module_to_json};
use hecke_bz_cli::{render, run};

fn config(args: &[&str]) -> Result<SuiteConfig, String> {
    let argv = std::iter::once("hecke-bz").chain(args.iter().copied());
    SuiteConfig::from_args(Args::try_parse_from(argv).map_err(|e| e.to_string())?)
}

fn bin(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_hecke-bz")).args(args).output().expect("binary runs")
}

#[test]
fn rejects_degenerate_q() {
    assert!(config(&["--q", "0"]).is_err());
    assert!(config(&["--q", "-1"]).is_err());
    // a primitive cube root of unity is irrational, so 2 and 1/2 are fine
    assert!(config(&["--q", "2"]).is_ok());
    assert!(config(&["--q", "1/2"]).is_ok());
    assert!(config(&["--n-max", "0"]).is_err());
    assert!(config(&["--partition", "1,3"]).is_err());
}

#[test]
fn module_json_round_trip() {
    let q = RatFunc::q();
    let t = [RatFunc::from_int(2), RatFunc::constant(Rational::new(5.into(), 7.into())), RatFunc::from_int(-3)];
    for m in [principal_series(&t, &q).unwrap(), steinberg_module(3, &q.add(&RatFunc::one()), &q).unwrap()] {
        let j = module_to_json(&m);
        let text = serde_json::to_string(&j).unwrap();
        let back = module_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(module_to_json(&back), j);
        assert!(back.relation_certificate().all_passed());
    }
}

#[test]
fn relations_suite_passes_at_rational_q() {
    let r = run(&config(&["--suite", "relations", "--q", "3", "--n-max", "3"]).unwrap());
    assert_eq!(r.summary.fail, 0);
    assert!(r.summary.pass > 0);
}

#[test]
fn rank1_classify_lists_fourteen() {
    let r = run(&config(&["--suite", "rank1-classify"]).unwrap());
    let count = &r.cases[0];
    assert_eq!(count.actual["count"], 14);
    assert_eq!(r.cases.len(), 15);
    assert!(r.cases.iter().all(|c| c.verdict == CaseVerdict::Pass));
}

fn table(args: &[&str]) -> Vec<String> {
    let mut full = vec!["--suite", "speh-table", "--format", "csv"];
    full.extend_from_slice(args);
    render(&run(&config(&full).unwrap())).lines().map(str::to_owned).collect()
}

#[test]
fn speh_table_rows() {
    assert_eq!(
        table(&["--partition", "2,2"]),
        ["partition,i,summands", "\"2,2\",0,\"2,2\"", "\"2,2\",1,\"2,1\"", "\"2,2\",2,\"1,1\"", "\"2,2\",3,", "\"2,2\",4,"]
    );
    assert_eq!(table(&["--partition", "3", "--i", "1"])[1], "3,1,2");
    assert_eq!(table(&["--partition", "1,1", "--i", "1"])[1], "\"1,1\",1,1");
}

#[test]
fn reports_are_reproducible() {
    let cfg = config(&["--suite", "mackey", "--n-max", "3"]).unwrap();
    let a = run(&cfg).to_json();
    let mut parallel = cfg.clone();
    parallel.jobs = 3;
    let b = run(&parallel).to_json();
    assert_eq!(a, run(&cfg).to_json());
    assert_eq!(a.replace("\"jobs\": 1", "\"jobs\": 3"), b);
}

#[test]
fn leibniz_grid_avoids_q_power_tags() {
    let cfg = config(&["--suite", "leibniz", "--q", "2", "--n-max", "3"]).unwrap();
    assert_eq!(cfg.suite, Suite::Leibniz);
    let r = run(&cfg);
    assert_eq!((r.summary.fail, r.summary.skip), (0, 0));
}

#[test]
fn binary_exit_codes() {
    let ok = bin(&["--suite", "steinberg", "--n-max", "3", "--format", "csv"]);
    assert_eq!(ok.status.code(), Some(0));
    let out = String::from_utf8(ok.stdout).unwrap();
    assert!(out.starts_with("id,verdict,expected,actual\n"));
    assert!(out.lines().skip(1).all(|l| l.contains(",pass,")));
    assert_eq!(bin(&["--q", "-1"]).status.code(), Some(2));
    assert_eq!(bin(&["--suite", "nonsense"]).status.code(), Some(2));
}
