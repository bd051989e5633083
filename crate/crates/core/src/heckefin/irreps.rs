//! Irreducible `H_{S_n}`-modules at generic `q` and character decomposition.

use alloc::vec::Vec;

use super::module::FinHeckeModule;
use crate::error::{Error, Result};
use crate::exactalg::RatFunc;
use crate::linalg::Matrix;
use crate::symgroup::tableau::{simple_action, SimpleAction};
use crate::symgroup::{standard_tableaux, Partition};

/// The irreducible module of shape `λ` in the `q`-analogue of Young's
/// seminormal form; `(n)` gives `T_j = q` and `(1^n)` gives `T_j = −1`.
pub fn hecke_irrep(lambda: &Partition, q: &RatFunc) -> Result<FinHeckeModule> {
    let tabs = standard_tableaux(lambda);
    let d = tabs.len();
    let n = lambda.size();
    let one = RatFunc::one();
    let qm1 = q.sub(&one);
    let mut gens = Vec::new();
    for j in 1..n {
        let mut m = Matrix::<RatFunc>::zeros(d, d);
        for a in 0..d {
            match simple_action(&tabs, a, j) {
                SimpleAction::SameRow => m.set(a, a, q.clone()),
                SimpleAction::SameColumn => m.set(a, a, one.neg()),
                SimpleAction::Pair { partner, axial, lower } => {
                    // Diagonal (q−1)/(1 − q^{−r}); the off-diagonal pair has
                    // product d·d' + q so that the eigenvalues are q and −1.
                    let diag = |r: i64| -> Result<RatFunc> {
                        let den = one.sub(&q.pow(-r as i32).ok_or(Error::VanishingDenominator)?);
                        qm1.div(&den).ok_or(Error::VanishingDenominator)
                    };
                    let d_here = diag(axial)?;
                    let d_there = diag(-axial)?;
                    m.set(a, a, d_here.clone());
                    let off = if lower { one.clone() } else { d_here.mul(&d_there).add(q) };
                    m.set(partner, a, off);
                }
            }
        }
        gens.push(m);
    }
    FinHeckeModule::new(n, d, q.clone(), gens)
}

/// Multiplicities of the irreducibles in a module, found by solving the
/// character equations against the irreducible characters at the module's `q`.
pub fn decompose(module: &FinHeckeModule) -> Result<Vec<(Partition, u64)>> {
    let n = module.rank();
    let parts = Partition::all(n);
    let q = module.q();
    let mut table = Vec::new();
    for lam in &parts {
        table.push(hecke_irrep(lam, q)?.character_vector());
    }
    // Rows: classes; columns: irreducibles. table^T · m = χ.
    let a = Matrix::from_fn(parts.len(), parts.len(), |c, l| table[l][c].clone());
    let chi = module.character_vector();
    let rhs = Matrix::from_fn(parts.len(), 1, |c, _| chi[c].clone());
    let sol = a
        .solve_left_inverse(&rhs)
        .map_err(|_| Error::Unsupported("character table singular at this q".into()))?;
    let mut out = Vec::new();
    for (k, lam) in parts.into_iter().enumerate() {
        let m = sol.get(k, 0);
        let c = m
            .as_constant()
            .filter(|r| r.is_integer() && *r >= num_rational::BigRational::from_integer(0.into()))
            .ok_or_else(|| Error::Inconsistent(alloc::format!("multiplicity {m} of {lam}")))?;
        let c: u64 = c.to_integer().try_into().map_err(|_| Error::Inconsistent("multiplicity overflow".into()))?;
        if c > 0 {
            out.push((lam, c));
        }
    }
    Ok(out)
}

/// Multiplicity of the sign representation `T_j ↦ −1`.
pub fn sign_multiplicity(module: &FinHeckeModule) -> Result<u64> {
    let sign = Partition::column(module.rank());
    Ok(decompose(module)?.into_iter().find(|(l, _)| *l == sign).map_or(0, |(_, m)| m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irreducibles_satisfy_relations() {
        for n in 1..=5 {
            for lam in Partition::all(n) {
                let m = hecke_irrep(&lam, &RatFunc::q()).unwrap();
                assert_eq!(m.dim() as u128, lam.hook_dimension());
                assert!(m.relation_certificate().all_passed(), "{lam}");
            }
        }
    }

    #[test]
    fn one_dimensional_cases() {
        let triv = hecke_irrep(&Partition::row(3), &RatFunc::q()).unwrap();
        assert!(triv.generators().iter().all(|m| *m.get(0, 0) == RatFunc::q()));
        let sign = hecke_irrep(&Partition::column(3), &RatFunc::q()).unwrap();
        assert!(sign.generators().iter().all(|m| *m.get(0, 0) == RatFunc::from_int(-1)));
    }

    #[test]
    fn irreducibles_decompose_to_themselves() {
        for n in 1..=4 {
            for lam in Partition::all(n) {
                let m = hecke_irrep(&lam, &RatFunc::q()).unwrap();
                assert_eq!(decompose(&m).unwrap(), alloc::vec![(lam.clone(), 1)]);
            }
        }
    }

    #[test]
    fn star_dual_of_two_dimensional_irreducible() {
        let m = hecke_irrep(&"2,1".parse().unwrap(), &RatFunc::q()).unwrap();
        let d = m.star_dual();
        assert!(d.relation_certificate().all_passed());
        assert_eq!(d.character_vector(), m.character_vector());
        assert_eq!(d.star_dual(), m);
    }
}
