//! JSON forms of modules and derivative reports. Matrix entries are
//! canonical rational-function strings, so parsing them back is exact.

use hecke_bz::derivatives::{DerivativeReport, Summand, Verdict};
use hecke_bz::exactalg::parse_ratfunc;
use hecke_bz::heckeaff::AffineModule;
use hecke_bz::linalg::Matrix;
use hecke_bz::RatFunc;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleJson {
    pub n: usize,
    pub dim: usize,
    pub q: String,
    /// Levi blocks; `[n]` for a module over the whole algebra.
    pub comp: Vec<usize>,
    #[serde(rename = "T")]
    pub t: Vec<Option<Vec<Vec<String>>>>,
    pub theta: Vec<Vec<Vec<String>>>,
}

fn matrix_json(m: &Matrix<RatFunc>) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()
}

fn matrix_from_json(rows: &[Vec<String>], dim: usize) -> Result<Matrix<RatFunc>, String> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(format!("expected a {dim}x{dim} matrix"));
    }
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(|e| parse_ratfunc(e).map_err(|err| err.to_string())).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(if dim == 0 { Matrix::zeros(0, 0) } else { Matrix::from_rows(parsed) })
}

pub fn module_to_json(m: &AffineModule) -> ModuleJson {
    ModuleJson {
        n: m.rank(),
        dim: m.dim(),
        q: m.q().to_string(),
        comp: m.comp().to_vec(),
        t: m.t_matrices().iter().map(|a| a.as_ref().map(matrix_json)).collect(),
        theta: m.theta_matrices().iter().map(matrix_json).collect(),
    }
}

pub fn module_from_json(j: &ModuleJson) -> Result<AffineModule, String> {
    let q = parse_ratfunc(&j.q).map_err(|e| e.to_string())?;
    if j.theta.len() != j.n {
        return Err(format!("expected {} theta matrices", j.n));
    }
    let t = j
        .t
        .iter()
        .map(|a| a.as_ref().map(|rows| matrix_from_json(rows, j.dim)).transpose())
        .collect::<Result<Vec<_>, _>>()?;
    let theta = j.theta.iter().map(|rows| matrix_from_json(rows, j.dim)).collect::<Result<Vec<_>, _>>()?;
    if j.n == 0 {
        return Ok(AffineModule::rank_zero(j.dim, q));
    }
    AffineModule::new_levi(j.comp.clone(), j.dim, q, t, theta).map_err(|e| e.to_string())
}

fn summand_json(s: &Summand) -> Value {
    json!({ "label": s.label, "mult": s.mult, "dim": s.dim })
}

/// `{input, i, dim, summands, oracle: {expected, verdict}}`.
pub fn derivative_report_json(r: &DerivativeReport) -> Value {
    let i = if r.index.len() == 1 { json!(r.index[0]) } else { json!(r.index) };
    let verdict = match &r.verdict {
        Verdict::Match => json!("match"),
        Verdict::Mismatch(diff) => json!({ "mismatch": diff }),
    };
    json!({
        "input": r.input,
        "i": i,
        "dim": r.dim,
        "summands": r.summands.iter().map(summand_json).collect::<Vec<_>>(),
        "oracle": {
            "expected": r.expected.iter().map(summand_json).collect::<Vec<_>>(),
            "verdict": verdict,
        },
    })
}
