//! The acceptance criteria, run exactly. One line per criterion.

use std::process::ExitCode;
use std::time::Instant;

use hecke_bz::derivatives::{bz, leibniz_verify, mackey_verify, speh_derivative, whittaker_dim};
use hecke_bz::exactalg::LaurentPoly;
use hecke_bz::field::rat;
use hecke_bz::heckeaff::{
    antispherical_apply, eigen_monomial_search, expected_rank1_structures, principal_series,
    satisfies_functional_equation, satisfies_functional_equation_bivariate, solve_rank1_structures,
    steinberg_module, trivial_type_module, windowed_audit, AffineModule, Generator, InducedFromFinite,
    Rank1Structure,
};
use hecke_bz::heckefin::{FinHeckeElem, FiniteHecke};
use hecke_bz::heckegrad::{sign_projector_graded, speh_module, GroupAlgebraElem, SpehDatum};
use hecke_bz::symgroup::{Partition, Permutation};
use hecke_bz::{RatFunc, Rational};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn q() -> RatFunc {
    RatFunc::q()
}

fn int(n: i64) -> RatFunc {
    RatFunc::from_int(n)
}

fn relation_certificates() -> Outcome {
    for q0 in [q(), int(2), int(3)] {
        for n in 1..=4 {
            let t: Vec<RatFunc> = [int(2), int(-3), RatFunc::constant(rat(5, 7)), int(11)][..n].to_vec();
            let m = principal_series(&t, &q0).map_err(|e| e.to_string())?;
            let cert = m.relation_certificate();
            ensure(m.dim() == (1..=n).product::<usize>() && cert.all_passed(), || {
                format!("principal series n={n} q={q0}: {:?}", cert.failures().next())
            })?;
        }
    }
    for (p, kappa) in [(rat(1, 1), rat(0, 1)), (rat(1, 1), rat(-2, 1)), (rat(2, 3), rat(5, 1))] {
        for n in 1..=6 {
            for lambda in Partition::all(n) {
                let m = speh_module(&SpehDatum::new(lambda.clone(), kappa.clone(), p.clone()));
                ensure(m.relation_certificate().all_passed(), || format!("speh {lambda} p={p} kappa={kappa}"))?;
            }
        }
    }
    Ok(())
}

fn sign_projector_laws() -> Outcome {
    for n in 1..=4 {
        let h = FiniteHecke::new(n);
        let s = h.sign_projector().map_err(|e| e.to_string())?;
        ensure(h.mul(&s, &s).map_err(|e| e.to_string())? == s, || format!("S_{n} not idempotent"))?;
        for w in Permutation::all(n) {
            let tw = FinHeckeElem::basis(w.clone());
            let sign = int(if w.length() % 2 == 0 { 1 } else { -1 });
            ensure(h.mul(&tw, &s).map_err(|e| e.to_string())? == s.scale(&sign), || format!("T_{w} S_{n}"))?;
        }
    }
    for i in 1..=4 {
        let s = sign_projector_graded(i);
        ensure(s.mul(&s).map_err(|e| e.to_string())? == s, || format!("s_{i} not idempotent"))?;
        for w in Permutation::all(i) {
            let tw = GroupAlgebraElem::basis(w.clone());
            let sign = Rational::from_integer(w.sign().into());
            ensure(tw.mul(&s).map_err(|e| e.to_string())? == s.scale(&sign), || format!("t_{w} s_{i}"))?;
        }
    }
    Ok(())
}

fn rank1_classification() -> Outcome {
    let sols = solve_rank1_structures(3).map_err(|e| e.to_string())?;
    ensure(sols.len() == 14, || format!("{} solutions", sols.len()))?;
    ensure(sols == expected_rank1_structures(3), || "solution set differs from the closed form".into())?;
    let g = LaurentPoly::one(2);
    for f in &sols {
        ensure(satisfies_functional_equation(f).map_err(|e| e.to_string())?, || format!("{f} via tilde"))?;
        ensure(satisfies_functional_equation_bivariate(f).map_err(|e| e.to_string())?, || format!("{f} bivariate"))?;
        let s = Rank1Structure::new(f).map_err(|e| e.to_string())?;
        let cert = windowed_audit(&s, 3);
        ensure(cert.all_passed(), || format!("{f}: {:?}", cert.failures().next()))?;
        eigen_monomial_search(&s, &g, 6).map_err(|e| format!("{f}: {e}"))?;
    }
    Ok(())
}

fn gelfand_graev() -> Outcome {
    for n in 1..=3 {
        let cert = windowed_audit(&InducedFromFinite::antispherical(n, q()), 3);
        ensure(cert.all_passed(), || format!("antispherical n={n}: {:?}", cert.failures().next()))?;
        let one = LaurentPoly::one(n);
        for j in 1..n {
            let a = antispherical_apply(n, Generator::T(j), &one, false).map_err(|e| e.to_string())?;
            ensure(a == one.neg(), || format!("T_{j} 1 = {a}"))?;
            let s = antispherical_apply(n, Generator::T(j), &one, true).map_err(|e| e.to_string())?;
            ensure(s == one.scale(&q()), || format!("spherical T_{j} 1 = {s}"))?;
        }
    }
    Ok(())
}

fn whittaker() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for n in 1..=4 {
        for _ in 0..5 {
            let t: Vec<RatFunc> = (0..n)
                .map(|_| {
                    let num = loop {
                        let v = rng.gen_range(-20i64..=20);
                        if v != 0 {
                            break v;
                        }
                    };
                    RatFunc::constant(rat(num, rng.gen_range(1i64..=9))).mul(&RatFunc::q_pow(rng.gen_range(-2..=2)))
                })
                .collect();
            let m = principal_series(&t, &q()).map_err(|e| e.to_string())?;
            let d = whittaker_dim(&m).map_err(|e| e.to_string())?;
            ensure(d == 1, || format!("principal series {t:?}: {d}"))?;
        }
        let st = steinberg_module(n, &int(3), &q()).map_err(|e| e.to_string())?;
        ensure(whittaker_dim(&st).map_err(|e| e.to_string())? == 1, || format!("steinberg n={n}"))?;
        if n >= 2 {
            let tr = trivial_type_module(n, &int(3), &q()).map_err(|e| e.to_string())?;
            ensure(whittaker_dim(&tr).map_err(|e| e.to_string())? == 0, || format!("trivial type n={n}"))?;
        }
    }
    Ok(())
}

fn steinberg_derivatives() -> Outcome {
    for z in [int(1), RatFunc::constant(rat(-3, 2)), q().add(&int(1))] {
        for n in 1..=5 {
            let st = steinberg_module(n, &z, &q()).map_err(|e| e.to_string())?;
            for i in 0..=n {
                let d = bz(&st, i).map_err(|e| e.to_string())?;
                ensure(d.dim() == 1 && d.rank() == n - i, || format!("n={n} i={i}: dim {}", d.dim()))?;
                for j in 1..n - i {
                    ensure(d.t(j).map(|m| m.get(0, 0).clone()) == Some(int(-1)), || format!("n={n} i={i}: T_{j}"))?;
                }
                for k in 1..=n - i {
                    let want = z.mul(&RatFunc::q_pow(k as i32 - 1));
                    ensure(d.theta(k).get(0, 0) == &want, || format!("n={n} i={i}: theta_{k}"))?;
                }
            }
        }
    }
    Ok(())
}

fn pieri() -> Outcome {
    for n in 0..=6 {
        for lambda in Partition::all(n) {
            for i in 0..=n {
                let d = SpehDatum::new(lambda.clone(), rat(0, 1), rat(1, 1));
                let r = speh_derivative(&d, i).map_err(|e| e.to_string())?;
                ensure(r.verdict.is_match() && r.summands.iter().all(|s| s.mult == 1), || {
                    format!("{lambda} i={i}: {:?}", r.verdict)
                })?;
            }
        }
    }
    Ok(())
}

/// Compositions of `n` with at most two blocks.
fn grid_compositions(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![n]];
    out.extend((1..n).map(|a| vec![a, n - a]));
    out
}

/// Factor modules for one grid cell; block `b` gets tag `b + 1`, so blocks
/// never differ by a power of `q`.
fn grid_factors(comp: &[usize], kind: &str) -> Vec<AffineModule> {
    comp.iter()
        .enumerate()
        .map(|(b, &c)| {
            let z = int(b as i64 + 1);
            let steinberg = match kind {
                "character" => false,
                "steinberg" => true,
                _ => b == 0,
            };
            if steinberg {
                steinberg_module(c, &z, &q()).unwrap()
            } else {
                trivial_type_module(c, &z, &q()).unwrap()
            }
        })
        .collect()
}

fn grid(check: fn(&[usize], &[AffineModule], usize) -> hecke_bz::Result<hecke_bz::derivatives::DerivativeReport>) -> Outcome {
    for n in 1..=4 {
        for comp in grid_compositions(n) {
            for kind in ["character", "steinberg", "mixed"] {
                let factors = grid_factors(&comp, kind);
                for i in 0..=n {
                    let r = check(&comp, &factors, i).map_err(|e| format!("{comp:?} {kind} i={i}: {e}"))?;
                    ensure(r.verdict.is_match(), || format!("{comp:?} {kind} i={i}: {:?}", r.verdict))?;
                }
            }
        }
    }
    Ok(())
}

fn leibniz() -> Outcome {
    grid(leibniz_verify)
}

fn mackey() -> Outcome {
    grid(mackey_verify)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("relation certificates", relation_certificates),
        ("sign projector laws", sign_projector_laws),
        ("rank-one classification", rank1_classification),
        ("antispherical module", gelfand_graev),
        ("Whittaker multiplicity one", whittaker),
        ("Steinberg derivatives", steinberg_derivatives),
        ("Pieri rule for Speh modules", pieri),
        ("Leibniz rule", leibniz),
        ("Mackey inventory", mackey),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS {}. {name} ({secs:.1}s)", k + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {}. {name} ({secs:.1}s): {e}", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
