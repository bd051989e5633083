//! Finite-dimensional modules over `H_n` and over its Levi subalgebras.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::exactalg::{LaurentPoly, RatFunc};
use crate::heckefin::module::finite_relations;
use crate::heckefin::FinHeckeModule;
use crate::linalg::Matrix;
use crate::symgroup::coset::{block_of, block_offsets, validate_composition};
use crate::symgroup::Permutation;

/// A module over `H_{n_1} ⊗ ⋯ ⊗ H_{n_m}`, embedded in `H_n` by shifting
/// indices; the composition `(n)` gives an `H_n`-module.
///
/// `T_j` is present exactly when `j` and `j+1` lie in the same block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineModule {
    comp: Vec<usize>,
    dim: usize,
    q: RatFunc,
    t: Vec<Option<Matrix<RatFunc>>>,
    theta: Vec<Matrix<RatFunc>>,
}

fn check_square(m: &Matrix<RatFunc>, dim: usize) -> Result<()> {
    if m.rows() != dim || m.cols() != dim {
        return Err(Error::RankMismatch { expected: dim, found: m.rows().max(m.cols()) });
    }
    Ok(())
}

impl AffineModule {
    /// An `H_n`-module from the matrices of `T_1..T_{n−1}` and `θ_{ε_1}..θ_{ε_n}`.
    pub fn new(q: RatFunc, t: Vec<Matrix<RatFunc>>, theta: Vec<Matrix<RatFunc>>) -> Result<Self> {
        let n = theta.len();
        let comp = if n == 0 { Vec::new() } else { alloc::vec![n] };
        let dim = theta.first().map_or(0, Matrix::rows);
        Self::new_levi(comp, dim, q, t.into_iter().map(Some).collect(), theta)
    }

    pub fn new_levi(
        comp: Vec<usize>,
        dim: usize,
        q: RatFunc,
        t: Vec<Option<Matrix<RatFunc>>>,
        theta: Vec<Matrix<RatFunc>>,
    ) -> Result<Self> {
        let n = theta.len();
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
                _ => return Err(Error::InvalidGenerator(format!("T{} does not match blocks {comp:?}", idx + 1))),
            }
        }
        for m in &theta {
            check_square(m, dim)?;
        }
        Ok(AffineModule { comp, dim, q, t, theta })
    }

    /// The zero-rank module: a bare vector space of dimension `dim`.
    pub fn rank_zero(dim: usize, q: RatFunc) -> Self {
        AffineModule { comp: Vec::new(), dim, q, t: Vec::new(), theta: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.theta.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn q(&self) -> &RatFunc {
        &self.q
    }

    pub fn comp(&self) -> &[usize] {
        &self.comp
    }

    /// True for a module over the whole of `H_n`.
    pub fn is_full(&self) -> bool {
        self.comp.len() <= 1
    }

    /// `T_j` (1-based), if it belongs to the Levi subalgebra.
    pub fn t(&self, j: usize) -> Option<&Matrix<RatFunc>> {
        self.t.get(j.checked_sub(1)?).and_then(Option::as_ref)
    }

    pub fn t_required(&self, j: usize) -> Result<&Matrix<RatFunc>> {
        self.t(j).ok_or_else(|| Error::InvalidGenerator(format!("T{j} for blocks {:?}", self.comp)))
    }

    pub fn t_matrices(&self) -> &[Option<Matrix<RatFunc>>] {
        &self.t
    }

    /// `θ_{ε_k}` (1-based).
    pub fn theta(&self, k: usize) -> &Matrix<RatFunc> {
        &self.theta[k - 1]
    }

    pub fn theta_matrices(&self) -> &[Matrix<RatFunc>] {
        &self.theta
    }

    /// Matrix of `T_{s_{a_1}} ⋯ T_{s_{a_k}}`.
    pub fn word_matrix(&self, word: &[usize]) -> Result<Matrix<RatFunc>> {
        let mut acc = Matrix::identity(self.dim);
        for &j in word {
            acc = acc.mul(self.t_required(j)?);
        }
        Ok(acc)
    }

    /// Matrix of `T_w` for `w` in the Young subgroup.
    pub fn t_perm(&self, w: &Permutation) -> Result<Matrix<RatFunc>> {
        self.word_matrix(&w.reduced_word())
    }

    /// Action of a Laurent polynomial, via a cache of θ-powers.
    pub fn poly_action(&self, f: &LaurentPoly) -> Result<Matrix<RatFunc>> {
        ThetaCache::new(self).action(f)
    }

    /// Restriction to `H_{S_n}`.
    pub fn finite_restriction(&self) -> Result<FinHeckeModule> {
        if !self.is_full() {
            return Err(Error::InvalidComposition(format!("{:?} is not a single block", self.comp)));
        }
        let gens = self.t.iter().map(|m| m.clone().expect("full module has every T")).collect();
        FinHeckeModule::new(self.rank(), self.dim, self.q.clone(), gens)
    }

    /// Quadratic, braid and commutation relations among the `T`'s present,
    /// commuting invertible θ's, and the Bernstein relation
    /// `T_j θ_k − θ_{s_j(k)} T_j = (q−1)·x_j(x_k − x_{s_j(k)})/(x_j − x_{j+1})`.
    pub fn relation_certificate(&self) -> Certificate {
        let n = self.rank();
        let gens: Vec<Matrix<RatFunc>> = self
            .t
            .iter()
            .map(|m| m.clone().unwrap_or_else(|| Matrix::zeros(self.dim, self.dim)))
            .collect();
        let mut cert = finite_relations(&gens, self.dim, &self.q, |j| self.t(j).is_some());
        for k in 1..=n {
            cert.record(format!("invertible theta{k}"), self.theta(k).inverse().is_some());
            for l in k + 1..=n {
                cert.record(format!("commute theta{k} theta{l}"), self.theta(k).mul(self.theta(l)) == self.theta(l).mul(self.theta(k)));
            }
        }
        let qm1 = self.q.sub(&RatFunc::one());
        for j in 1..n {
            let Some(t) = self.t(j) else { continue };
            for k in 1..=n {
                let sk = Permutation::simple(n, j).apply(k - 1) + 1;
                let lhs = t.mul(self.theta(k)).sub(&self.theta(sk).mul(t));
                let d = LaurentPoly::var(n, k, 1).divided_difference(j).expect("j < n");
                let rhs = match self.poly_action(&d) {
                    Ok(m) => m.scale(&qm1),
                    Err(_) => {
                        cert.record(format!("bernstein T{j} theta{k}"), false);
                        continue;
                    }
                };
                cert.record(format!("bernstein T{j} theta{k}"), lhs == rhs);
            }
        }
        cert
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
        Ok(AffineModule { comp: comp.to_vec(), dim: self.dim, q: self.q.clone(), t, theta: self.theta.clone() })
    }

    /// Outer tensor product `self ⊠ other`, a module over the concatenated Levi.
    pub fn outer(&self, other: &Self) -> Result<Self> {
        if self.q != other.q {
            return Err(Error::Inconsistent("tensor factors at different q".into()));
        }
        let (da, db) = (self.dim, other.dim);
        let ia = Matrix::<RatFunc>::identity(da);
        let ib = Matrix::<RatFunc>::identity(db);
        let mut t: Vec<Option<Matrix<RatFunc>>> = self.t.iter().map(|m| m.as_ref().map(|m| m.kronecker(&ib))).collect();
        if self.rank() > 0 && other.rank() > 0 {
            t.push(None);
        }
        t.extend(other.t.iter().map(|m| m.as_ref().map(|m| ia.kronecker(m))));
        let mut theta: Vec<Matrix<RatFunc>> = self.theta.iter().map(|m| m.kronecker(&ib)).collect();
        theta.extend(other.theta.iter().map(|m| ia.kronecker(m)));
        let mut comp = self.comp.clone();
        comp.extend_from_slice(&other.comp);
        Ok(AffineModule { comp, dim: da * db, q: self.q.clone(), t, theta })
    }

    /// Outer tensor product of several factors.
    pub fn outer_all(factors: &[Self]) -> Result<Self> {
        let (first, rest) = factors.split_first().ok_or_else(|| Error::InvalidComposition("no factors".into()))?;
        rest.iter().try_fold(first.clone(), |acc, f| acc.outer(f))
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.comp != other.comp || self.q != other.q {
            return Err(Error::Inconsistent("direct sum of modules over different algebras".into()));
        }
        let t = self
            .t
            .iter()
            .zip(&other.t)
            .map(|(a, b)| match (a, b) {
                (Some(a), Some(b)) => Some(a.direct_sum(b)),
                _ => None,
            })
            .collect();
        let theta = self.theta.iter().zip(&other.theta).map(|(a, b)| a.direct_sum(b)).collect();
        Ok(AffineModule { comp: self.comp.clone(), dim: self.dim + other.dim, q: self.q.clone(), t, theta })
    }

    /// Relabel the Levi blocks: block `b` of the result is block `order[b]`
    /// of `self`. The underlying space is unchanged.
    pub fn reorder_blocks(&self, order: &[usize]) -> Result<Self> {
        let m = self.comp.len();
        let mut seen = alloc::vec![false; m];
        if order.len() != m || order.iter().any(|&b| b >= m || core::mem::replace(&mut seen[b], true)) {
            return Err(Error::InvalidComposition(format!("{order:?} is not a block order for {:?}", self.comp)));
        }
        let offsets = block_offsets(&self.comp);
        let comp: Vec<usize> = order.iter().map(|&b| self.comp[b]).collect();
        let mut theta = Vec::new();
        let mut t = Vec::new();
        for (pos, &b) in order.iter().enumerate() {
            let (o, c) = (offsets[b], self.comp[b]);
            if pos > 0 {
                t.push(None);
            }
            for k in 0..c {
                theta.push(self.theta[o + k].clone());
                if k + 1 < c {
                    t.push(self.t[o + k].clone());
                }
            }
        }
        Ok(AffineModule { comp, dim: self.dim, q: self.q.clone(), t, theta })
    }

    /// Replace `q` by a constant in every entry.
    pub fn specialize(&self, q0: &RatFunc) -> Result<Self> {
        let sub = |m: &Matrix<RatFunc>| m.try_map(|a| a.substitute(q0));
        Ok(AffineModule {
            comp: self.comp.clone(),
            dim: self.dim,
            q: self.q.substitute(q0)?,
            t: self.t.iter().map(|m| m.as_ref().map(sub).transpose()).collect::<Result<_>>()?,
            theta: self.theta.iter().map(sub).collect::<Result<_>>()?,
        })
    }

    /// Traces of `T_w` for `l(w) ≤ 3` (`w` in the Young subgroup) and of
    /// `θ_{ε_k}^{±1}`: a cheap isomorphism invariant.
    pub fn trace_signature(&self) -> Result<Vec<RatFunc>> {
        let n = self.rank();
        let blocks = block_of(&self.comp);
        let mut out = Vec::new();
        for w in Permutation::all(n) {
            let word = w.reduced_word();
            if word.len() <= 3 && word.iter().all(|&j| blocks[j - 1] == blocks[j]) {
                out.push(self.word_matrix(&word)?.trace());
            }
        }
        for k in 1..=n {
            out.push(self.theta(k).trace());
            let inv = self.theta(k).inverse().ok_or_else(|| Error::NotInvertible(format!("theta{k}")))?;
            out.push(inv.trace());
        }
        Ok(out)
    }
}

/// Powers of θ-matrices and their inverses, memoized for one module.
pub(crate) struct ThetaCache<'a> {
    module: &'a AffineModule,
    inverses: Vec<Option<Matrix<RatFunc>>>,
    powers: BTreeMap<(usize, i32), Matrix<RatFunc>>,
}

impl<'a> ThetaCache<'a> {
    pub(crate) fn new(module: &'a AffineModule) -> Self {
        ThetaCache { module, inverses: alloc::vec![None; module.rank()], powers: BTreeMap::new() }
    }

    fn power(&mut self, k: usize, e: i32) -> Result<Matrix<RatFunc>> {
        if let Some(m) = self.powers.get(&(k, e)) {
            return Ok(m.clone());
        }
        let m = if e == 0 {
            Matrix::identity(self.module.dim)
        } else if e > 0 {
            self.power(k, e - 1)?.mul(&self.module.theta[k])
        } else {
            if self.inverses[k].is_none() {
                let inv = self.module.theta[k]
                    .inverse()
                    .ok_or_else(|| Error::NotInvertible(format!("theta{}", k + 1)))?;
                self.inverses[k] = Some(inv);
            }
            let inv = self.inverses[k].clone().unwrap();
            self.power(k, e + 1)?.mul(&inv)
        };
        self.powers.insert((k, e), m.clone());
        Ok(m)
    }

    pub(crate) fn monomial(&mut self, e: &[i32]) -> Result<Matrix<RatFunc>> {
        let mut acc = Matrix::identity(self.module.dim);
        for (k, &a) in e.iter().enumerate() {
            if a != 0 {
                acc = acc.mul(&self.power(k, a)?);
            }
        }
        Ok(acc)
    }

    pub(crate) fn action(&mut self, f: &LaurentPoly) -> Result<Matrix<RatFunc>> {
        if f.nvars() != self.module.rank() {
            return Err(Error::VariableCountMismatch { left: self.module.rank(), right: f.nvars() });
        }
        let mut acc = Matrix::zeros(self.module.dim, self.module.dim);
        for (e, c) in f.terms() {
            acc = acc.add(&self.monomial(e)?.scale(c));
        }
        Ok(acc)
    }
}

/// A central character: for each Levi block, the sorted multiset of joint
/// θ-eigenvalues.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CentralCharacter {
    pub blocks: Vec<Vec<RatFunc>>,
}

impl CentralCharacter {
    pub fn from_weight(comp: &[usize], weight: &[RatFunc]) -> Self {
        let mut blocks = Vec::new();
        let mut start = 0;
        for &c in comp {
            let mut b = weight[start..start + c].to_vec();
            b.sort();
            blocks.push(b);
            start += c;
        }
        CentralCharacter { blocks }
    }

    /// Eigenvalues of all blocks, sorted together.
    pub fn merged(&self) -> Vec<RatFunc> {
        let mut all: Vec<RatFunc> = self.blocks.iter().flatten().cloned().collect();
        all.sort();
        all
    }
}

impl core::fmt::Display for CentralCharacter {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str("{")?;
            for (k, v) in b.iter().enumerate() {
                if k > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("}")?;
        }
        Ok(())
    }
}

/// Block inventory: central characters with the dimensions of their
/// generalized eigenspaces, sorted.
pub fn central_character_decomp(m: &AffineModule) -> Result<Vec<(CentralCharacter, usize)>> {
    if m.rank() == 0 {
        let whole = CentralCharacter { blocks: Vec::new() };
        return Ok(if m.dim() == 0 { Vec::new() } else { alloc::vec![(whole, m.dim())] });
    }
    let spaces = crate::linalg::joint_weight_spaces(m.theta_matrices(), m.dim())?;
    let mut acc: BTreeMap<CentralCharacter, usize> = BTreeMap::new();
    for s in spaces {
        *acc.entry(CentralCharacter::from_weight(m.comp(), &s.weight)).or_default() += s.dim();
    }
    Ok(acc.into_iter().collect())
}
