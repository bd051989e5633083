use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::certificate::Certificate;

/// One isotypic or block summand of a derivative.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Summand {
    pub label: String,
    pub mult: u64,
    pub dim: usize,
}

impl Summand {
    pub fn new(label: impl Into<String>, mult: u64, dim: usize) -> Self {
        Summand { label: label.into(), mult, dim }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Match,
    Mismatch(String),
}

impl Verdict {
    pub fn is_match(&self) -> bool {
        matches!(self, Verdict::Match)
    }
}

/// A computed derivative, its decomposition, and the oracle's verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivativeReport {
    pub input: String,
    pub index: Vec<usize>,
    pub dim: usize,
    pub summands: Vec<Summand>,
    pub expected: Vec<Summand>,
    /// Side conditions checked along the way.
    pub checks: Certificate,
    pub verdict: Verdict,
}

impl DerivativeReport {
    /// Compare `summands` with `expected` and the checks, and set the verdict.
    pub fn new(
        input: String,
        index: Vec<usize>,
        dim: usize,
        mut summands: Vec<Summand>,
        mut expected: Vec<Summand>,
        checks: Certificate,
    ) -> Self {
        summands.sort();
        expected.sort();
        let mut problems = Vec::new();
        if summands != expected {
            let missing: Vec<String> = expected.iter().filter(|s| !summands.contains(s)).map(describe).collect();
            let extra: Vec<String> = summands.iter().filter(|s| !expected.contains(s)).map(describe).collect();
            problems.push(format!("missing [{}], unexpected [{}]", missing.join("; "), extra.join("; ")));
        }
        let total: usize = summands.iter().map(|s| s.mult as usize * s.dim).sum();
        if total != dim {
            problems.push(format!("summands account for {total} of {dim} dimensions"));
        }
        for c in checks.failures() {
            problems.push(format!("check failed: {}", c.name));
        }
        let verdict = if problems.is_empty() { Verdict::Match } else { Verdict::Mismatch(problems.join("; ")) };
        DerivativeReport { input, index, dim, summands, expected, checks, verdict }
    }

    /// `Σ mult · dim` equals the output dimension.
    pub fn is_consistent(&self) -> bool {
        self.summands.iter().map(|s| s.mult as usize * s.dim).sum::<usize>() == self.dim
    }
}

fn describe(s: &Summand) -> String {
    format!("{} x{} dim {}", s.label, s.mult, s.dim)
}
