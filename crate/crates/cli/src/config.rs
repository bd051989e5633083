use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, ValueEnum};
use hecke_bz::heckefin::poincare_sum;
use hecke_bz::{RatFunc, Rational};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Relations,
    SignProjector,
    Rank1Classify,
    GelfandGraev,
    Whittaker,
    Steinberg,
    SpehPieri,
    Leibniz,
    Mackey,
    SpehTable,
    All,
}

impl Suite {
    /// Every verification suite, in the order `all` runs them.
    pub const VERIFICATION: [Suite; 9] = [
        Suite::Relations,
        Suite::SignProjector,
        Suite::Rank1Classify,
        Suite::GelfandGraev,
        Suite::Whittaker,
        Suite::Steinberg,
        Suite::SpehPieri,
        Suite::Leibniz,
        Suite::Mackey,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::SignProjector => "sign-projector",
            Suite::Rank1Classify => "rank1-classify",
            Suite::GelfandGraev => "gelfand-graev",
            Suite::Whittaker => "whittaker",
            Suite::Steinberg => "steinberg",
            Suite::SpehPieri => "speh-pieri",
            Suite::Leibniz => "leibniz",
            Suite::Mackey => "mackey",
            Suite::SpehTable => "speh-table",
            Suite::All => "all",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

/// `generic` or an exact nonzero rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QMode {
    Generic,
    Value(Rational),
}

impl QMode {
    pub fn as_ratfunc(&self) -> RatFunc {
        match self {
            QMode::Generic => RatFunc::q(),
            QMode::Value(r) => RatFunc::constant(r.clone()),
        }
    }
}

impl FromStr for QMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "generic" {
            return Ok(QMode::Generic);
        }
        parse_rational(s).map(QMode::Value)
    }
}

impl fmt::Display for QMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QMode::Generic => f.write_str("generic"),
            QMode::Value(r) => write!(f, "{r}"),
        }
    }
}

impl Serialize for QMode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, String> {
    Rational::from_str(s.trim()).map_err(|e| format!("not a rational number: {s:?} ({e})"))
}

/// Derivative index: a number or `all`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexSpec {
    All,
    One(usize),
}

impl FromStr for IndexSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "all" {
            return Ok(IndexSpec::All);
        }
        s.parse().map(IndexSpec::One).map_err(|_| format!("expected a nonnegative integer or \"all\", got {s:?}"))
    }
}

impl fmt::Display for IndexSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexSpec::All => f.write_str("all"),
            IndexSpec::One(i) => write!(f, "{i}"),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "hecke-bz", version, about = "Exact verification suites for Bernstein-Zelevinsky derivatives of affine Hecke algebra modules")]
pub struct Args {
    /// Suite to run.
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
    /// Largest rank exercised by the suite.
    #[arg(long, default_value_t = 4)]
    pub n_max: usize,
    /// `generic` or an exact rational such as `2` or `3/2`.
    #[arg(long, default_value = "generic", allow_hyphen_values = true)]
    pub q: QMode,
    /// Graded parameter p (log q).
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub p: String,
    /// Graded parameter kappa.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub kappa: String,
    /// Degree window for the rank-one classification and the polynomial audits.
    #[arg(long, default_value_t = 3)]
    pub window: u32,
    /// Partition such as `3,2`; restricts speh-pieri and speh-table to it.
    #[arg(long)]
    pub partition: Option<String>,
    /// Derivative index for speh-table: a number or `all`.
    #[arg(long, default_value = "all")]
    pub i: IndexSpec,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Record wall-clock milliseconds per case (makes reports non-reproducible).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub n_max: usize,
    pub q: QMode,
    #[serde(serialize_with = "display")]
    pub p: Rational,
    #[serde(serialize_with = "display")]
    pub kappa: Rational,
    pub window: u32,
    pub partition: Option<String>,
    #[serde(serialize_with = "display")]
    pub i: IndexSpec,
    pub format: Format,
    #[serde(skip)]
    pub out: Option<PathBuf>,
    pub jobs: usize,
    #[serde(skip)]
    pub timing: bool,
}

fn display<T: fmt::Display, S: serde::Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl SuiteConfig {
    pub fn from_args(a: Args) -> Result<Self, String> {
        let cfg = SuiteConfig {
            suite: a.suite,
            n_max: a.n_max,
            q: a.q,
            p: parse_rational(&a.p)?,
            kappa: parse_rational(&a.kappa)?,
            window: a.window,
            partition: a.partition,
            i: a.i,
            format: a.format,
            out: a.out,
            jobs: a.jobs,
            timing: a.timing,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.n_max == 0 {
            return Err("--n-max must be positive".into());
        }
        if self.jobs == 0 {
            return Err("--jobs must be positive".into());
        }
        if self.window == 0 && self.suite == Suite::GelfandGraev {
            return Err("--window must be positive for the polynomial audit".into());
        }
        if let QMode::Value(r) = &self.q {
            let q = RatFunc::constant(r.clone());
            let inv = q.inv().ok_or("--q must be nonzero")?;
            for n in 1..=self.n_max {
                if poincare_sum(n, &q).is_zero() || poincare_sum(n, &inv).is_zero() {
                    return Err(format!("--q {r} is a root of the rank-{n} Poincare polynomial"));
                }
            }
        }
        if let Some(p) = &self.partition {
            hecke_bz::symgroup::Partition::from_str(p).map_err(|e| format!("--partition: {e}"))?;
        }
        Ok(())
    }
}
