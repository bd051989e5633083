//! Finite-dimensional modules over the graded Hecke algebra `ℍ_n` and its
//! Levi subalgebras, with `p` and `κ` exact rationals.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::exactalg::RatFunc;
use crate::field::Rational;
use crate::heckegrad::group_algebra::{jm_element, GroupAlgebraElem};
use crate::linalg::{joint_weight_spaces, Matrix};
use crate::symgroup::coset::{block_of, validate_composition};
use crate::symgroup::{class_representative_word, seminormal_rep, Partition, Permutation};

/// Matrices of `t_{s_j}` (present when `j`, `j+1` share a block) and of
/// `ε_1..ε_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedModule {
    comp: Vec<usize>,
    dim: usize,
    p: Rational,
    kappa: Rational,
    t: Vec<Option<Matrix<Rational>>>,
    eps: Vec<Matrix<Rational>>,
}

fn check_square(m: &Matrix<Rational>, dim: usize) -> Result<()> {
    if m.rows() != dim || m.cols() != dim {
        return Err(Error::RankMismatch { expected: dim, found: m.rows().max(m.cols()) });
    }
    Ok(())
}

impl GradedModule {
    pub fn new(p: Rational, kappa: Rational, t: Vec<Matrix<Rational>>, eps: Vec<Matrix<Rational>>) -> Result<Self> {
        let n = eps.len();
        let comp = if n == 0 { Vec::new() } else { alloc::vec![n] };
        let dim = eps.first().map_or(0, Matrix::rows);
        Self::new_levi(comp, dim, p, kappa, t.into_iter().map(Some).collect(), eps)
    }

    pub fn new_levi(
        comp: Vec<usize>,
        dim: usize,
        p: Rational,
        kappa: Rational,
        t: Vec<Option<Matrix<Rational>>>,
        eps: Vec<Matrix<Rational>>,
    ) -> Result<Self> {
        let n = eps.len();
        validate_composition(n, &comp)?;
        if t.len() != n.saturating_sub(1) {
            return Err(Error::RankMismatch { expected: n.saturating_sub(1), found: t.len() });
        }
        let blocks = block_of(&comp);
        for (idx, m) in t.iter().enumerate() {
            let internal = blocks[idx] == blocks[idx + 1];
            match m {
                Some(m) if internal => check_square(m, dim)?,
                None if !internal => {}
                _ => return Err(Error::InvalidGenerator(format!("t{} does not match blocks {comp:?}", idx + 1))),
            }
        }
        for m in &eps {
            check_square(m, dim)?;
        }
        Ok(GradedModule { comp, dim, p, kappa, t, eps })
    }

    pub fn rank_zero(dim: usize, p: Rational, kappa: Rational) -> Self {
        GradedModule { comp: Vec::new(), dim, p, kappa, t: Vec::new(), eps: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.eps.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn p(&self) -> &Rational {
        &self.p
    }

    pub fn kappa(&self) -> &Rational {
        &self.kappa
    }

    pub fn comp(&self) -> &[usize] {
        &self.comp
    }

    pub fn t(&self, j: usize) -> Option<&Matrix<Rational>> {
        self.t.get(j.checked_sub(1)?).and_then(Option::as_ref)
    }

    pub fn t_required(&self, j: usize) -> Result<&Matrix<Rational>> {
        self.t(j).ok_or_else(|| Error::InvalidGenerator(format!("t{j} for blocks {:?}", self.comp)))
    }

    pub fn t_matrices(&self) -> &[Option<Matrix<Rational>>] {
        &self.t
    }

    pub fn eps(&self, k: usize) -> &Matrix<Rational> {
        &self.eps[k - 1]
    }

    pub fn eps_matrices(&self) -> &[Matrix<Rational>] {
        &self.eps
    }

    pub fn word_matrix(&self, word: &[usize]) -> Result<Matrix<Rational>> {
        let mut acc = Matrix::identity(self.dim);
        for &j in word {
            acc = acc.mul(self.t_required(j)?);
        }
        Ok(acc)
    }

    pub fn perm_matrix(&self, w: &Permutation) -> Result<Matrix<Rational>> {
        self.word_matrix(&w.reduced_word())
    }

    /// Action of an element of `ℚ[S_n]` (restricted to the Young subgroup).
    pub fn group_algebra_action(&self, a: &GroupAlgebraElem) -> Result<Matrix<Rational>> {
        if a.rank() != self.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), found: a.rank() });
        }
        let mut acc = Matrix::zeros(self.dim, self.dim);
        for (w, c) in a.terms() {
            acc = acc.add(&self.perm_matrix(w)?.scale(c));
        }
        Ok(acc)
    }

    /// Forget to a finer composition.
    pub fn restrict_to_levi(&self, comp: &[usize]) -> Result<Self> {
        validate_composition(self.rank(), comp)?;
        let new_blocks = block_of(comp);
        let old_blocks = block_of(&self.comp);
        for j in 1..self.rank() {
            if new_blocks[j - 1] == new_blocks[j] && old_blocks[j - 1] != old_blocks[j] {
                return Err(Error::InvalidComposition(format!("{comp:?} does not refine {:?}", self.comp)));
            }
        }
        let t = (1..self.rank())
            .map(|j| if new_blocks[j - 1] == new_blocks[j] { self.t(j).cloned() } else { None })
            .collect();
        Ok(GradedModule { comp: comp.to_vec(), t, ..self.clone() })
    }

    /// Outer tensor product over the concatenated Levi.
    pub fn outer(&self, other: &Self) -> Result<Self> {
        if self.p != other.p {
            return Err(Error::Inconsistent("tensor factors at different p".into()));
        }
        let ia = Matrix::<Rational>::identity(self.dim);
        let ib = Matrix::<Rational>::identity(other.dim);
        let mut t: Vec<Option<Matrix<Rational>>> = self.t.iter().map(|m| m.as_ref().map(|m| m.kronecker(&ib))).collect();
        if self.rank() > 0 && other.rank() > 0 {
            t.push(None);
        }
        t.extend(other.t.iter().map(|m| m.as_ref().map(|m| ia.kronecker(m))));
        let mut eps: Vec<Matrix<Rational>> = self.eps.iter().map(|m| m.kronecker(&ib)).collect();
        eps.extend(other.eps.iter().map(|m| ia.kronecker(m)));
        let mut comp = self.comp.clone();
        comp.extend_from_slice(&other.comp);
        Ok(GradedModule { comp, dim: self.dim * other.dim, p: self.p.clone(), kappa: self.kappa.clone(), t, eps })
    }

    /// Character value of the `S_n`-action at cycle type `mu`; requires a
    /// single block.
    pub fn character(&self, mu: &Partition) -> Result<Rational> {
        if self.comp.len() > 1 {
            return Err(Error::InvalidComposition(format!("{:?} is not a single block", self.comp)));
        }
        Ok(self.word_matrix(&class_representative_word(mu))?.trace())
    }

    /// Joint ε-spectrum: each weight with the dimension of its generalized
    /// eigenspace, sorted.
    pub fn eps_spectrum(&self) -> Result<Vec<(Vec<Rational>, usize)>> {
        let mats: Vec<Matrix<RatFunc>> = self.eps.iter().map(|m| m.map(|a| RatFunc::constant(a.clone()))).collect();
        let mut acc: BTreeMap<Vec<Rational>, usize> = BTreeMap::new();
        for s in joint_weight_spaces(&mats, self.dim)? {
            let w = s
                .weight
                .iter()
                .map(|r| r.as_constant().ok_or_else(|| Error::Inconsistent(format!("non-constant eigenvalue {r}"))))
                .collect::<Result<Vec<_>>>()?;
            *acc.entry(w).or_default() += s.dim();
        }
        Ok(acc.into_iter().collect())
    }

    /// Every relation of `ℍ_n` restricted to the Levi: involutive and braid
    /// `t`'s, commuting ε's, and `ε_k t_j − t_j ε_{s_j(k)} = p(δ_{kj} − δ_{k,j+1})`.
    pub fn relation_certificate(&self) -> Certificate {
        let n = self.rank();
        let id = Matrix::<Rational>::identity(self.dim);
        let mut cert = Certificate::default();
        for j in 1..n {
            let Some(a) = self.t(j) else { continue };
            cert.record(format!("involution t{j}"), a.mul(a) == id);
            for l in j + 1..n {
                let Some(b) = self.t(l) else { continue };
                if l == j + 1 {
                    cert.record(format!("braid t{j} t{l}"), a.mul(b).mul(a) == b.mul(a).mul(b));
                } else {
                    cert.record(format!("commute t{j} t{l}"), a.mul(b) == b.mul(a));
                }
            }
        }
        for k in 1..=n {
            for l in k + 1..=n {
                cert.record(format!("commute eps{k} eps{l}"), self.eps(k).mul(self.eps(l)) == self.eps(l).mul(self.eps(k)));
            }
        }
        for j in 1..n {
            let Some(t) = self.t(j) else { continue };
            for k in 1..=n {
                let sk = Permutation::simple(n, j).apply(k - 1) + 1;
                let pairing = if k == j {
                    Rational::one()
                } else if k == j + 1 {
                    -Rational::one()
                } else {
                    Rational::zero()
                };
                let lhs = self.eps(k).mul(t).sub(&t.mul(self.eps(sk)));
                cert.record(format!("cross eps{k} t{j}"), lhs == id.scale(&(&self.p * pairing)));
            }
        }
        cert
    }
}

pub fn graded_relation_certificate(m: &GradedModule) -> Certificate {
    m.relation_certificate()
}

/// A partition with the parameters `κ` and `p`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpehDatum {
    pub partition: Partition,
    pub kappa: Rational,
    pub p: Rational,
}

impl SpehDatum {
    pub fn new(partition: Partition, kappa: Rational, p: Rational) -> Self {
        SpehDatum { partition, kappa, p }
    }
}

/// The pullback of the Specht module `σ_λ` along `t_w ↦ w`, `ε_k ↦ JM_k`.
pub fn speh_module(d: &SpehDatum) -> GradedModule {
    let rep = seminormal_rep(&d.partition);
    let n = d.partition.size();
    if n == 0 {
        return GradedModule::rank_zero(rep.dim(), d.p.clone(), d.kappa.clone());
    }
    let t: Vec<Matrix<Rational>> = rep.generators().to_vec();
    let eps = (1..=n)
        .map(|k| {
            let jm = jm_element(k, n, &d.p, &d.kappa).expect("k in range");
            let mut acc = Matrix::zeros(rep.dim(), rep.dim());
            for (w, c) in jm.terms() {
                acc = acc.add(&rep.matrix_of(w).scale(c));
            }
            acc
        })
        .collect();
    GradedModule::new(d.p.clone(), d.kappa.clone(), t, eps).expect("square matrices of one size")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;
    use crate::symgroup::standard_tableaux;

    fn datum(parts: &[usize], kappa: Rational, p: Rational) -> SpehDatum {
        SpehDatum::new(Partition::new(parts.to_vec()).unwrap(), kappa, p)
    }

    #[test]
    fn rows_and_columns() {
        let (k, p) = (rat(5, 1), rat(2, 3));
        let m = speh_module(&datum(&[4], k.clone(), p.clone()));
        for j in 1..=4 {
            let c = &k - &p * Rational::from_integer((j as i64 - 1).into());
            assert_eq!(m.eps(j), &Matrix::scalar(1, c));
        }
        let m = speh_module(&datum(&[1, 1, 1], k.clone(), p.clone()));
        for j in 1..=3 {
            let c = &k + &p * Rational::from_integer((j as i64 - 1).into());
            assert_eq!(m.eps(j), &Matrix::scalar(1, c));
        }
    }

    #[test]
    fn certificates_and_spectra() {
        for n in 1..=5 {
            for lambda in Partition::all(n) {
                let d = SpehDatum::new(lambda.clone(), rat(-2, 1), rat(1, 1));
                let m = speh_module(&d);
                assert!(m.relation_certificate().all_passed(), "{lambda}");
                let mut expected: Vec<Vec<Rational>> = standard_tableaux(&lambda)
                    .iter()
                    .map(|t| t.contents().iter().map(|&c| &d.kappa - &d.p * Rational::from_integer(c.into())).collect())
                    .collect();
                expected.sort();
                let got: Vec<Vec<Rational>> =
                    m.eps_spectrum().unwrap().into_iter().flat_map(|(w, d)| std::iter::repeat_n(w, d)).collect();
                assert_eq!(got, expected, "{lambda}");
            }
        }
    }

    #[test]
    fn negative_controls() {
        let m = speh_module(&datum(&[2, 1], rat(0, 1), rat(1, 1)));
        let mut eps = m.eps_matrices().to_vec();
        eps.swap(0, 1);
        let t = m.t_matrices().iter().map(|a| a.clone().unwrap()).collect();
        let bad = GradedModule::new(rat(1, 1), rat(0, 1), t, eps).unwrap();
        assert!(bad.relation_certificate().failures().any(|c| c.name.starts_with("cross")));

        let rep = seminormal_rep(&Partition::new(alloc::vec![2, 1]).unwrap());
        let eps = alloc::vec![Matrix::scalar(2, rat(3, 1)); 3];
        let deg = GradedModule::new(rat(0, 1), rat(3, 1), rep.generators().to_vec(), eps).unwrap();
        assert!(deg.relation_certificate().all_passed());
    }
}
