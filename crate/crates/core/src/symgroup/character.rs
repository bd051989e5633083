//! Irreducible characters of symmetric groups and branching multiplicities.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::partition::Partition;
use crate::error::{Error, Result};
use crate::field::Rational;
use crate::linalg::Matrix;

/// Memoized Murnaghan-Nakayama evaluation of `χ^λ(μ)`.
///
/// Each caller owns its table, so no synchronization is needed.
#[derive(Clone, Debug, Default)]
pub struct CharacterTable {
    cache: BTreeMap<(Partition, Partition), i64>,
}

impl CharacterTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// `χ^λ` at the class of cycle type `μ`; zero if the sizes differ.
    pub fn value(&mut self, lambda: &Partition, mu: &Partition) -> i64 {
        if lambda.size() != mu.size() {
            return 0;
        }
        if mu.is_empty() {
            return 1;
        }
        let key = (lambda.clone(), mu.clone());
        if let Some(&v) = self.cache.get(&key) {
            return v;
        }
        let r = mu.parts()[0];
        let rest = Partition::new(mu.parts()[1..].to_vec()).expect("tail of a partition");
        // Beta-set: positions λ_k + (ℓ − 1 − k). A border strip of length r
        // moves one bead down by r into an empty slot.
        let l = lambda.len();
        let beta: Vec<usize> = (0..l).map(|k| lambda.part(k) + l - 1 - k).collect();
        let mut total = 0i64;
        for (idx, &b) in beta.iter().enumerate() {
            if b < r || beta.contains(&(b - r)) {
                continue;
            }
            let between = beta.iter().filter(|&&c| c > b - r && c < b).count();
            let mut nb = beta.clone();
            nb[idx] = b - r;
            nb.sort_unstable_by(|x, y| y.cmp(x));
            let parts: Vec<usize> = (0..l).map(|k| nb[k] - (l - 1 - k)).filter(|&p| p > 0).collect();
            let smaller = Partition::new(parts).expect("border strip removal leaves a partition");
            let sign = if between % 2 == 0 { 1 } else { -1 };
            total += sign * self.value(&smaller, &rest);
        }
        self.cache.insert(key, total);
        total
    }

    /// Multiplicity of `σ_μ ⊠ σ_ν` in the restriction of `σ_λ` to `S_{n−i} × S_i`.
    pub fn branching_multiplicity(&mut self, lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
        if mu.size() + nu.size() != lambda.size() {
            return Err(Error::RankMismatch { expected: lambda.size(), found: mu.size() + nu.size() });
        }
        let mut sum = Rational::zero();
        for alpha in Partition::all(mu.size()) {
            let ca = self.value(mu, &alpha);
            if ca == 0 {
                continue;
            }
            for beta in Partition::all(nu.size()) {
                let cb = self.value(nu, &beta);
                if cb == 0 {
                    continue;
                }
                let mut joined = alpha.parts().to_vec();
                joined.extend_from_slice(beta.parts());
                let cl = self.value(lambda, &Partition::from_unsorted(joined));
                let z = BigInt::from(alpha.centralizer_order()) * BigInt::from(beta.centralizer_order());
                sum += Rational::new(BigInt::from(cl * ca * cb), z);
            }
        }
        to_multiplicity(sum)
    }

    /// Multiplicities of the irreducibles in a representation of `S_m`
    /// given by its character on cycle types.
    pub fn decompose(&mut self, m: usize, character: impl Fn(&Partition) -> Rational) -> Result<Vec<(Partition, u64)>> {
        let classes: Vec<(Partition, Rational)> = Partition::all(m)
            .into_iter()
            .map(|c| {
                let v = character(&c);
                (c, v)
            })
            .collect();
        let mut out = Vec::new();
        for lam in Partition::all(m) {
            let mut sum = Rational::zero();
            for (c, v) in &classes {
                let chi = self.value(&lam, c);
                if chi != 0 {
                    sum += v * Rational::from_integer(BigInt::from(chi)) / Rational::from_integer(BigInt::from(c.centralizer_order()));
                }
            }
            let mult = to_multiplicity(sum)?;
            if mult > 0 {
                out.push((lam, mult));
            }
        }
        Ok(out)
    }
}

fn to_multiplicity(r: Rational) -> Result<u64> {
    if !r.is_integer() || r.is_negative() {
        return Err(Error::Inconsistent(alloc::format!("non-integral multiplicity {r}")));
    }
    u64::try_from(r.to_integer()).map_err(|_| Error::Inconsistent("multiplicity overflow".into()))
}

/// Branching multiplicity with a throwaway character cache.
pub fn branching_multiplicity(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    CharacterTable::new().branching_multiplicity(lambda, mu, nu)
}

/// A permutation of cycle type `μ` of minimal length: consecutive cycles
/// `(1 2 ⋯ μ_1)(μ_1+1 ⋯)…`, as a word in simple reflections.
pub fn class_representative_word(mu: &Partition) -> Vec<usize> {
    let mut word = Vec::new();
    let mut start = 1;
    for &p in mu.parts() {
        word.extend(start..start + p - 1);
        start += p;
    }
    word
}

/// Character of a matrix representation of `S_m` given by generator matrices.
pub fn matrix_character(gens: &[Matrix<Rational>], dim: usize, mu: &Partition) -> Rational {
    class_representative_word(mu)
        .iter()
        .fold(Matrix::identity(dim), |acc: Matrix<Rational>, &j| acc.mul(&gens[j - 1]))
        .trace()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symgroup::{seminormal_rep, Permutation};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_character_values() {
        let mut t = CharacterTable::new();
        // S_3: χ^{(2,1)} = (2, 0, −1) on (1,1,1), (2,1), (3).
        assert_eq!(t.value(&p("2,1"), &p("1,1,1")), 2);
        assert_eq!(t.value(&p("2,1"), &p("2,1")), 0);
        assert_eq!(t.value(&p("2,1"), &p("3")), -1);
        assert_eq!(t.value(&p("1,1,1"), &p("2,1")), -1);
        assert_eq!(t.value(&p("2,2"), &p("2,2")), 2);
    }

    #[test]
    fn agrees_with_seminormal_traces() {
        let mut t = CharacterTable::new();
        for n in 1..=5 {
            for lam in Partition::all(n) {
                let rep = seminormal_rep(&lam);
                for mu in Partition::all(n) {
                    let w = Permutation::from_word(n, &class_representative_word(&mu));
                    assert_eq!(Partition::new(w.cycle_type()).unwrap(), mu);
                    let tr = rep.matrix_of(&w).trace();
                    assert_eq!(tr, Rational::from_integer(t.value(&lam, &mu).into()));
                }
            }
        }
    }

    #[test]
    fn branching_examples() {
        assert_eq!(branching_multiplicity(&p("2,2"), &p("2,1"), &p("1")).unwrap(), 1);
        assert_eq!(branching_multiplicity(&p("4"), &p("2"), &p("2")).unwrap(), 1);
        assert_eq!(branching_multiplicity(&p("2,2"), &p("2"), &p("1,1")).unwrap(), 0);
        assert!(branching_multiplicity(&p("2,2"), &p("2"), &p("1")).is_err());
    }
}
