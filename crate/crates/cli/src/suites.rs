use std::time::Instant;

use hecke_bz::derivatives::{
    bz, check_block_separation, leibniz_verify, mackey_verify, speh_derivative, whittaker_dim, DerivativeReport,
};
use hecke_bz::exactalg::LaurentPoly;
use hecke_bz::heckeaff::{
    antispherical_apply, eigen_monomial_search, expected_rank1_structures, principal_series,
    satisfies_functional_equation, satisfies_functional_equation_bivariate, solve_rank1_structures,
    steinberg_module, trivial_type_module, windowed_audit, AffineModule, Generator, InducedFromFinite,
    Rank1Structure,
};
use hecke_bz::heckefin::{FinHeckeElem, FiniteHecke};
use hecke_bz::heckegrad::{sign_projector_graded, speh_module, GroupAlgebraElem, SpehDatum};
use hecke_bz::symgroup::{Partition, Permutation};
use hecke_bz::certificate::Certificate;
use hecke_bz::{Error, RatFunc, Rational};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::config::{IndexSpec, Suite, SuiteConfig};
use crate::report::{Case, CaseVerdict};
use crate::serialize::{derivative_report_json, module_to_json};

pub struct Outcome {
    pub expected: Value,
    pub actual: Value,
    pub verdict: CaseVerdict,
}

impl Outcome {
    fn judged(expected: Value, actual: Value, ok: bool) -> Self {
        let verdict = if ok { CaseVerdict::Pass } else { CaseVerdict::Fail };
        Outcome { expected, actual, verdict }
    }

    /// Pass exactly when `actual == expected`.
    fn compare(expected: Value, actual: Value) -> Self {
        let ok = expected == actual;
        Self::judged(expected, actual, ok)
    }

    fn certificate(cert: &Certificate) -> Self {
        let failures: Vec<&str> = cert.failures().map(|c| c.name.as_str()).collect();
        Self::judged(
            json!({ "failures": [] }),
            json!({ "checked": cert.len(), "failures": failures }),
            cert.all_passed(),
        )
    }

    fn derivative(r: &DerivativeReport) -> Self {
        let exp: Vec<Value> = r.expected.iter().map(|s| json!({ "label": s.label, "mult": s.mult, "dim": s.dim })).collect();
        Self::judged(json!(exp), derivative_report_json(r), r.verdict.is_match())
    }
}

type Runner = Box<dyn Fn() -> hecke_bz::Result<Outcome> + Send + Sync>;

pub struct CaseSpec {
    pub id: String,
    pub input: Value,
    pub run: Runner,
}

fn spec(id: String, input: Value, run: impl Fn() -> hecke_bz::Result<Outcome> + Send + Sync + 'static) -> CaseSpec {
    CaseSpec { id, input, run: Box::new(run) }
}

/// Run the cases on `jobs` threads; the result keeps the input order.
pub fn run_cases(specs: Vec<CaseSpec>, jobs: usize, timing: bool) -> Vec<Case> {
    let run_one = |s: &CaseSpec| {
        let start = Instant::now();
        let outcome = match (s.run)() {
            Ok(o) => o,
            Err(e @ Error::IndistinguishableBlocks(_)) => {
                Outcome { expected: Value::Null, actual: json!({ "refused": e.to_string() }), verdict: CaseVerdict::Skip }
            }
            Err(e) => Outcome { expected: Value::Null, actual: json!({ "error": e.to_string() }), verdict: CaseVerdict::Fail },
        };
        let millis = if timing { start.elapsed().as_millis() as u64 } else { 0 };
        Case {
            id: s.id.clone(),
            input: s.input.clone(),
            expected: outcome.expected,
            actual: outcome.actual,
            verdict: outcome.verdict,
            millis,
        }
    };
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool");
    pool.install(|| specs.par_iter().map(run_one).collect())
}

pub fn cases_for(suite: Suite, cfg: &SuiteConfig) -> Vec<CaseSpec> {
    match suite {
        Suite::Relations => relations(cfg),
        Suite::SignProjector => sign_projector(cfg),
        Suite::Rank1Classify => rank1_classify(cfg),
        Suite::GelfandGraev => gelfand_graev(cfg),
        Suite::Whittaker => whittaker(cfg),
        Suite::Steinberg => steinberg(cfg),
        Suite::SpehPieri | Suite::SpehTable => speh(cfg),
        Suite::Leibniz => block_grid(cfg, "leibniz", leibniz_verify),
        Suite::Mackey => block_grid(cfg, "mackey", mackey_verify),
        Suite::All => Suite::VERIFICATION.iter().flat_map(|&s| cases_for(s, cfg)).collect(),
    }
}

fn rat(n: i64, d: i64) -> Rational {
    hecke_bz::field::rat(n, d)
}

fn principal_parameters(n: usize) -> Vec<RatFunc> {
    const NUMS: [(i64, i64); 6] = [(2, 1), (-3, 1), (5, 7), (11, 1), (13, 2), (-17, 3)];
    (0..n).map(|k| RatFunc::constant(rat(NUMS[k % 6].0 + 19 * (k / 6) as i64, NUMS[k % 6].1))).collect()
}

fn partitions(cfg: &SuiteConfig) -> Vec<Partition> {
    match &cfg.partition {
        Some(p) => vec![p.parse().expect("validated partition")],
        None => (1..=cfg.n_max).flat_map(Partition::all).collect(),
    }
}

type Builder = fn(usize, &RatFunc, &RatFunc) -> hecke_bz::Result<AffineModule>;

fn relations(cfg: &SuiteConfig) -> Vec<CaseSpec> {
    let q = cfg.q.as_ratfunc();
    let mut out = Vec::new();
    for n in 1..=cfg.n_max {
        let t = principal_parameters(n);
        let q1 = q.clone();
        let input = json!({ "module": "principal-series", "n": n, "t": t.iter().map(ToString::to_string).collect::<Vec<_>>() });
        out.push(spec(format!("relations/principal-series/n={n}"), input, move || {
            Ok(Outcome::certificate(&principal_series(&t, &q1)?.relation_certificate()))
        }));
        let builders: [(&str, Builder); 2] = [("steinberg", steinberg_module), ("trivial-type", trivial_type_module)];
        for (name, build) in builders {
            let q1 = q.clone();
            out.push(spec(format!("relations/{name}/n={n}"), json!({ "module": name, "n": n, "z": "3" }), move || {
                Ok(Outcome::certificate(&build(n, &RatFunc::from_int(3), &q1)?.relation_certificate()))
            }));
        }
    }
    for lambda in partitions(cfg) {
        let d = SpehDatum::new(lambda.clone(), cfg.kappa.clone(), cfg.p.clone());
        let input = json!({ "module": "speh", "partition": lambda.to_string(), "p": d.p.to_string(), "kappa": d.kappa.to_string() });
        out.push(spec(format!("relations/speh/{lambda}"), input, move || {
            Ok(Outcome::certificate(&speh_module(&d).relation_certificate()))
        }));
    }
    out
}

fn sign_projector(cfg: &SuiteConfig) -> Vec<CaseSpec> {
    let q = cfg.q.as_ratfunc();
    let mut out = Vec::new();
    for n in 1..=cfg.n_max {
        let q1 = q.clone();
        out.push(spec(format!("sign-projector/hecke/n={n}"), json!({ "n": n, "q": q.to_string() }), move || {
            let h = FiniteHecke::with_q(n, q1.clone());
            let s = h.sign_projector()?;
            let mut bad = Vec::new();
            if h.mul(&s, &s)? != s {
                bad.push("idempotent".to_string());
            }
            for w in Permutation::all(n) {
                let sign = RatFunc::from_int(if w.length() % 2 == 0 { 1 } else { -1 });
                if h.mul(&FinHeckeElem::basis(w.clone()), &s)? != s.scale(&sign) {
                    bad.push(format!("T{w}"));
                }
            }
            Ok(Outcome::judged(json!({ "failures": [] }), json!({ "projector": s.to_string(), "failures": bad }), bad.is_empty()))
        }));
        out.push(spec(format!("sign-projector/graded/i={n}"), json!({ "i": n }), move || {
            let s = sign_projector_graded(n);
            let mut bad = Vec::new();
            if s.mul(&s)? != s {
                bad.push("idempotent".to_string());
            }
            for w in Permutation::all(n) {
                let sign = Rational::from_integer(w.sign().into());
                if GroupAlgebraElem::basis(w.clone()).mul(&s)? != s.scale(&sign) {
                    bad.push(format!("t{w}"));
                }
            }
            Ok(Outcome::judged(json!({ "failures": [] }), json!({ "failures": bad }), bad.is_empty()))
        }));
    }
    out
}

fn rank1_classify(cfg: &SuiteConfig) -> Vec<CaseSpec> {
    let d = cfg.window;
    let mut out = vec![spec(format!("rank1/solutions/d={d}"), json!({ "window": d }), move || {
        let sols: Vec<String> = solve_rank1_structures(d)?.iter().map(ToString::to_string).collect();
        let want: Vec<String> = expected_rank1_structures(d).iter().map(ToString::to_string).collect();
        Ok(Outcome::compare(json!({ "count": want.len(), "solutions": want }), json!({ "count": sols.len(), "solutions": sols })))
    })];
    for f in expected_rank1_structures(d) {
        let window = d as i32;
        out.push(spec(format!("rank1/structure/{f}"), json!({ "f": f.to_string(), "window": window }), move || {
            let s = Rank1Structure::new(&f)?;
            let audit = windowed_audit(&s, window);
            let (m, eigen) = eigen_monomial_search(&s, &LaurentPoly::one(2), 2 * window as u32)?;
            let fe = satisfies_functional_equation(&f)?;
            let fe2 = satisfies_functional_equation_bivariate(&f)?;
            let failures: Vec<&str> = audit.failures().map(|c| c.name.as_str()).collect();
            let actual = json!({
                "functional_equation": fe,
                "functional_equation_bivariate": fe2,
                "audit_failures": failures,
                "eigen_monomial": format!("x2^{m}"),
                "eigenvalue": eigen.to_string(),
            });
            let ok = fe && fe2 && audit.all_passed();
            Ok(Outcome::judged(json!({ "functional_equation": true, "functional_equation_bivariate": true, "audit_failures": [] }), actual, ok))
        }));
    }
    out
}

fn gelfand_graev(cfg: &SuiteConfig) -> Vec<CaseSpec> {
    let q = cfg.q.as_ratfunc();
    let window = cfg.window as i32;
    let mut out = Vec::new();
    for n in 1..=cfg.n_max {
        for spherical in [false, true] {
            let q1 = q.clone();
            let name = if spherical { "spherical" } else { "antispherical" };
            out.push(spec(format!("gelfand-graev/{name}/n={n}"), json!({ "n": n, "window": window }), move || {
                let m = if spherical {
                    InducedFromFinite::spherical(n, q1.clone())
                } else {
                    InducedFromFinite::antispherical(n, q1.clone())
                };
                let audit = windowed_audit(&m, window);
                let one = LaurentPoly::one(n);
                let want = if spherical { one.scale(&q1) } else { one.neg() };
                let mut cyclic = Vec::new();
                for j in 1..n {
                    let got = if spherical {
                        hecke_bz::heckeaff::PolynomialModule::apply_t(&m, j, &one)?
                    } else {
                        antispherical_apply(n, Generator::T(j), &one, false)?
                    };
                    cyclic.push(got.to_string());
                }
                let failures: Vec<&str> = audit.failures().map(|c| c.name.as_str()).collect();
                let expected = json!({ "audit_failures": [], "T_j(1)": vec![want.to_string(); n - 1] });
                let actual = json!({ "audit_failures": failures, "T_j(1)": cyclic });
                Ok(Outcome::compare(expected, actual))
            }));
        }
    }
    out
}

fn random_parameters(rng: &mut StdRng, n: usize, q: &RatFunc) -> Vec<RatFunc> {
    (0..n)
        .map(|_| {
            let num = loop {
                let v = rng.gen_range(-20i64..=20);
                if v != 0 {
                    break v;
                }
            };
            let c = RatFunc::constant(rat(num, rng.gen_range(1i64..=9)));
            c.mul(&q.pow(rng.gen_range(-2..=2)).expect("q is nonzero"))
        })
        .collect()
}

fn whittaker(cfg: &SuiteConfig) -> Vec<CaseSpec> {
    let q = cfg.q.as_ratfunc();
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut out = Vec::new();
    for n in 1..=cfg.n_max {
        for trial in 0..5 {
            let t = random_parameters(&mut rng, n, &q);
            let q1 = q.clone();
            let input = json!({ "module": "principal-series", "t": t.iter().map(ToString::to_string).collect::<Vec<_>>() });
            out.push(spec(format!("whittaker/principal-series/n={n}/{trial}"), input, move || {
                Ok(Outcome::compare(json!(1), json!(whittaker_dim(&principal_series(&t, &q1)?)?)))
            }));
        }
        let q1 = q.clone();
        out.push(spec(format!("whittaker/steinberg/n={n}"), json!({ "module": "steinberg", "z": "3" }), move || {
            Ok(Outcome::compare(json!(1), json!(whittaker_dim(&steinberg_module(n, &RatFunc::from_int(3), &q1)?)?)))
        }));
        if n >= 2 {
            let q1 = q.clone();
            out.push(spec(format!("whittaker/trivial-type/n={n}"), json!({ "module": "trivial-type", "z": "3" }), move || {
                Ok(Outcome::compare(json!(0), json!(whittaker_dim(&trivial_type_module(n, &RatFunc::from_int(3), &q1)?)?)))
            }));
        }
    }
    out
}

fn steinberg(cfg: &SuiteConfig) -> Vec<CaseSpec> {
    let q = cfg.q.as_ratfunc();
    let z = RatFunc::from_int(3);
    let mut out = Vec::new();
    for n in 1..=cfg.n_max {
        for i in 0..=n {
            let (q1, z1) = (q.clone(), z.clone());
            out.push(spec(format!("steinberg/n={n}/i={i}"), json!({ "n": n, "z": z.to_string(), "i": i }), move || {
                let d = bz(&steinberg_module(n, &z1, &q1)?, i)?;
                let k = n - i;
                let want_theta: Vec<String> = (0..k).map(|e| z1.mul(&q1.pow(e as i32).expect("q is nonzero")).to_string()).collect();
                let expected = json!({ "dim": 1, "rank": k, "T": vec!["-1"; k.saturating_sub(1)], "theta": want_theta });
                let t: Vec<String> = (1..k).map(|j| d.t(j).map_or("missing".into(), |m| m.get(0, 0).to_string())).collect();
                let theta: Vec<String> = if d.dim() == 1 { (1..=d.rank()).map(|k| d.theta(k).get(0, 0).to_string()).collect() } else { Vec::new() };
                let mut actual = json!({ "dim": d.dim(), "rank": d.rank(), "T": t, "theta": theta });
                let ok = expected == actual;
                actual["module"] = serde_json::to_value(module_to_json(&d)).expect("module serializes");
                Ok(Outcome::judged(expected, actual, ok))
            }));
        }
    }
    out
}

fn speh_indices(cfg: &SuiteConfig, n: usize) -> Vec<usize> {
    match (cfg.suite, cfg.i) {
        (Suite::SpehTable, IndexSpec::One(i)) => vec![i],
        _ => (0..=n).collect(),
    }
}

fn speh(cfg: &SuiteConfig) -> Vec<CaseSpec> {
    let prefix = if cfg.suite == Suite::SpehTable { "speh-table" } else { "speh-pieri" };
    let mut out = Vec::new();
    for lambda in partitions(cfg) {
        for i in speh_indices(cfg, lambda.size()) {
            let d = SpehDatum::new(lambda.clone(), cfg.kappa.clone(), cfg.p.clone());
            let input = json!({ "partition": lambda.to_string(), "i": i, "p": d.p.to_string(), "kappa": d.kappa.to_string() });
            out.push(spec(format!("{prefix}/{lambda}/i={i}"), input, move || {
                if i > d.partition.size() {
                    return Err(Error::IndexOutOfRange { index: i as i64, bound: d.partition.size() });
                }
                Ok(Outcome::derivative(&speh_derivative(&d, i)?))
            }));
        }
    }
    out
}

/// Compositions of `n` with at most two blocks.
pub fn grid_compositions(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![n]];
    out.extend((1..n).map(|a| vec![a, n - a]));
    out
}

const TAGS: [i64; 8] = [1, 2, 3, 5, 7, 11, 13, -1];

/// One-dimensional factors for a grid cell. Each block takes the first tag
/// that keeps its eigenvalues off the `q`-strings of the earlier blocks.
pub fn grid_factors(comp: &[usize], kind: &str, q: &RatFunc) -> hecke_bz::Result<Vec<AffineModule>> {
    let mut factors: Vec<AffineModule> = Vec::new();
    for (b, &c) in comp.iter().enumerate() {
        let steinberg = match kind {
            "character" => false,
            "steinberg" => true,
            _ => b == 0,
        };
        let build = |z: i64| {
            let z = RatFunc::from_int(z);
            if steinberg {
                steinberg_module(c, &z, q)
            } else {
                trivial_type_module(c, &z, q)
            }
        };
        let mut chosen = None;
        for &tag in &TAGS {
            let f = build(tag)?;
            let mut trial = factors.clone();
            trial.push(f.clone());
            if check_block_separation(&trial).is_ok() {
                chosen = Some(f);
                break;
            }
        }
        match chosen {
            Some(f) => factors.push(f),
            None => return Err(Error::IndistinguishableBlocks(format!("no separating tag for block {}", b + 1))),
        }
    }
    Ok(factors)
}

type GridCheck = fn(&[usize], &[AffineModule], usize) -> hecke_bz::Result<DerivativeReport>;

fn block_grid(cfg: &SuiteConfig, name: &'static str, check: GridCheck) -> Vec<CaseSpec> {
    let q = cfg.q.as_ratfunc();
    let mut out = Vec::new();
    for n in 1..=cfg.n_max {
        for comp in grid_compositions(n) {
            for kind in ["character", "steinberg", "mixed"] {
                for i in 0..=n {
                    let (q1, comp1) = (q.clone(), comp.clone());
                    let id = format!("{name}/{comp:?}/{kind}/i={i}").replace(' ', "");
                    out.push(spec(id, json!({ "comp": comp, "factors": kind, "i": i }), move || {
                        let factors = grid_factors(&comp1, kind, &q1)?;
                        Ok(Outcome::derivative(&check(&comp1, &factors, i)?))
                    }));
                }
            }
        }
    }
    out
}
