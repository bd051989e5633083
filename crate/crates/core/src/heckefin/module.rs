use alloc::format;
use alloc::vec::Vec;

use super::element::FinHeckeElem;
use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::exactalg::RatFunc;
use crate::linalg::Matrix;
use crate::symgroup::{class_representative_word, Partition, Permutation};

/// A finite-dimensional `H_{S_n}`-module given by the matrices of `T_1..T_{n−1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinHeckeModule {
    n: usize,
    dim: usize,
    q: RatFunc,
    gens: Vec<Matrix<RatFunc>>,
}

impl FinHeckeModule {
    pub fn new(n: usize, dim: usize, q: RatFunc, gens: Vec<Matrix<RatFunc>>) -> Result<Self> {
        if gens.len() != n.saturating_sub(1) {
            return Err(Error::RankMismatch { expected: n.saturating_sub(1), found: gens.len() });
        }
        if let Some(m) = gens.iter().find(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::RankMismatch { expected: dim, found: m.rows().max(m.cols()) });
        }
        Ok(FinHeckeModule { n, dim, q, gens })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn q(&self) -> &RatFunc {
        &self.q
    }

    pub fn generator(&self, j: usize) -> &Matrix<RatFunc> {
        &self.gens[j - 1]
    }

    pub fn generators(&self) -> &[Matrix<RatFunc>] {
        &self.gens
    }

    pub fn matrix_of_word(&self, word: &[usize]) -> Matrix<RatFunc> {
        word.iter().fold(Matrix::identity(self.dim), |acc, &j| acc.mul(&self.gens[j - 1]))
    }

    /// Matrix of `T_w`.
    pub fn matrix_of_perm(&self, w: &Permutation) -> Matrix<RatFunc> {
        self.matrix_of_word(&w.reduced_word())
    }

    pub fn matrix_of(&self, h: &FinHeckeElem) -> Result<Matrix<RatFunc>> {
        if h.rank() != self.n {
            return Err(Error::RankMismatch { expected: self.n, found: h.rank() });
        }
        let mut acc = Matrix::zeros(self.dim, self.dim);
        for (w, c) in h.terms() {
            acc = acc.add(&self.matrix_of_perm(w).scale(c));
        }
        Ok(acc)
    }

    /// Quadratic, braid and far-commutation relations.
    pub fn relation_certificate(&self) -> Certificate {
        finite_relations(&self.gens, self.dim, &self.q, |_| true)
    }

    /// The dual module twisted by `T_j ↦ T_j`: generator matrices transposed.
    pub fn star_dual(&self) -> Self {
        FinHeckeModule {
            n: self.n,
            dim: self.dim,
            q: self.q.clone(),
            gens: self.gens.iter().map(Matrix::transpose).collect(),
        }
    }

    /// Trace of `T_{w_μ}` for the minimal-length element of cycle type `μ`.
    pub fn character(&self, mu: &Partition) -> RatFunc {
        self.matrix_of_word(&class_representative_word(mu)).trace()
    }

    /// Character values on all cycle types of `n`, in `Partition::all` order.
    pub fn character_vector(&self) -> Vec<RatFunc> {
        Partition::all(self.n).iter().map(|mu| self.character(mu)).collect()
    }
}

/// Audit `(T_j+1)(T_j−q) = 0`, braid and commutation relations among
/// those generators selected by `active` (1-based index).
pub(crate) fn finite_relations(
    gens: &[Matrix<RatFunc>],
    dim: usize,
    q: &RatFunc,
    active: impl Fn(usize) -> bool,
) -> Certificate {
    let mut cert = Certificate::default();
    let id = Matrix::<RatFunc>::identity(dim);
    let k = gens.len();
    for j in 1..=k {
        if !active(j) {
            continue;
        }
        let t = &gens[j - 1];
        let lhs = t.add(&id).mul(&t.sub(&id.scale(q)));
        cert.record(format!("quadratic T{j}"), lhs.is_zero());
        for l in j + 1..=k {
            if !active(l) {
                continue;
            }
            let u = &gens[l - 1];
            if l == j + 1 {
                cert.record(format!("braid T{j} T{l}"), t.mul(u).mul(t) == u.mul(t).mul(u));
            } else {
                cert.record(format!("commute T{j} T{l}"), t.mul(u) == u.mul(t));
            }
        }
    }
    cert
}
