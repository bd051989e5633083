//! Parabolic induction `H_{𝐜} ⊗_{H_{𝐜'}} σ` between Levi subalgebras.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::element::AffineHecke;
use super::module::{AffineModule, ThetaCache};
use crate::error::{Error, Result};
use crate::exactalg::{LaurentPoly, RatFunc};
use crate::linalg::Matrix;
use crate::symgroup::coset::{block_of, split_coset};
use crate::symgroup::{min_coset_reps, Permutation};

/// Induce a module over the Levi of `sigma.comp()` to the coarser Levi `target`.
///
/// The basis is `T_w ⊗ v` with `w` running over minimal representatives of
/// `W_target / W_sigma`. A generator `g` acts by rewriting `g T_w` as
/// `Σ T_u h_u`, splitting `u = w'·u''` and sending the term to
/// `T_{w'} ⊗ σ(T_{u''}) σ(h_u) v`.
pub fn induce_levi(sigma: &AffineModule, target: &[usize]) -> Result<AffineModule> {
    let n = sigma.rank();
    if target == sigma.comp() {
        return Ok(sigma.clone());
    }
    let inner = sigma.comp();
    let tb = block_of(target);
    let ib = block_of(inner);
    // sigma's blocks must refine target's blocks.
    crate::symgroup::validate_composition(n, target)?;
    if (1..n).any(|j| ib[j - 1] == ib[j] && tb[j - 1] != tb[j]) {
        return Err(Error::InvalidComposition(format!("{inner:?} does not refine {target:?}")));
    }
    let reps: Vec<Permutation> = min_coset_reps(n, inner)?
        .into_iter()
        .filter(|w| (0..n).all(|i| tb[w.apply(i)] == tb[i]))
        .collect();
    let index: BTreeMap<&Permutation, usize> = reps.iter().enumerate().map(|(a, w)| (w, a)).collect();
    let d = sigma.dim();
    let big = reps.len() * d;
    let alg = AffineHecke::with_q(n, sigma.q().clone());
    let mut thetas = ThetaCache::new(sigma);
    let mut t_words: BTreeMap<Permutation, Matrix<RatFunc>> = BTreeMap::new();

    let mut build = |column_block: &dyn Fn(&Permutation) -> Result<super::element::TLeftForm>| -> Result<Matrix<RatFunc>> {
        let mut m = Matrix::<RatFunc>::zeros(big, big);
        for (a, w) in reps.iter().enumerate() {
            for (u, h) in column_block(w)?.terms {
                let (wp, upp) = split_coset(&u, inner);
                let b = *index.get(&wp).ok_or_else(|| Error::Inconsistent("coset representative outside target".into()))?;
                if !t_words.contains_key(&upp) {
                    let mat = sigma.t_perm(&upp)?;
                    t_words.insert(upp.clone(), mat);
                }
                let block = t_words[&upp].mul(&thetas.action(&h)?);
                for r in 0..d {
                    for c in 0..d {
                        let v = block.get(r, c);
                        if !v.is_zero() {
                            let cur = m.get(b * d + r, a * d + c).add(v);
                            m.set(b * d + r, a * d + c, cur);
                        }
                    }
                }
            }
        }
        Ok(m)
    };

    let mut t = Vec::new();
    for j in 1..n {
        if tb[j - 1] == tb[j] {
            t.push(Some(build(&|w| Ok(alg.generator_t_left(j, w)))?));
        } else {
            t.push(None);
        }
    }
    let mut theta = Vec::new();
    for k in 1..=n {
        let x = LaurentPoly::var(n, k, 1);
        theta.push(build(&|w| alg.to_t_left(&x, w))?);
    }
    AffineModule::new_levi(target.to_vec(), big, sigma.q().clone(), t, theta)
}

/// `H_n ⊗_{H_𝐧} (σ_1 ⊠ ⋯ ⊠ σ_m)`.
pub fn induce(comp: &[usize], factors: &[AffineModule]) -> Result<AffineModule> {
    if comp.len() != factors.len() {
        return Err(Error::RankMismatch { expected: comp.len(), found: factors.len() });
    }
    for (c, f) in comp.iter().zip(factors) {
        if f.rank() != *c || !f.is_full() {
            return Err(Error::RankMismatch { expected: *c, found: f.rank() });
        }
    }
    let sigma = AffineModule::outer_all(factors)?;
    let n: usize = comp.iter().sum();
    let target: Vec<usize> = if n == 0 { Vec::new() } else { alloc::vec![n] };
    induce_levi(&sigma, &target)
}
