//! Elements of the affine Hecke algebra `H_n` in Bernstein presentation.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactalg::{LaurentPoly, RatFunc};
use crate::symgroup::Permutation;

/// An element `Σ_w f_w T_w` (polynomials to the left of the `T`'s).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffHeckeElem {
    n: usize,
    coeffs: BTreeMap<Permutation, LaurentPoly>,
}

/// An element `Σ_w T_w h_w` (polynomials to the right), used when acting
/// on induced modules.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TLeftForm {
    pub terms: BTreeMap<Permutation, LaurentPoly>,
}

fn add_into(map: &mut BTreeMap<Permutation, LaurentPoly>, w: Permutation, f: LaurentPoly) {
    if f.is_zero() {
        return;
    }
    match map.get(&w) {
        Some(g) => {
            let s = g.add(&f);
            if s.is_zero() {
                map.remove(&w);
            } else {
                map.insert(w, s);
            }
        }
        None => {
            map.insert(w, f);
        }
    }
}

impl AffHeckeElem {
    pub fn zero(n: usize) -> Self {
        AffHeckeElem { n, coeffs: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::poly(LaurentPoly::one(n))
    }

    /// `f · T_e`.
    pub fn poly(f: LaurentPoly) -> Self {
        Self::term(f.clone(), Permutation::identity(f.nvars()))
    }

    /// `T_w`.
    pub fn t(w: Permutation) -> Self {
        let n = w.size();
        Self::term(LaurentPoly::one(n), w)
    }

    /// `T_j` (1-based).
    pub fn generator(n: usize, j: usize) -> Self {
        Self::t(Permutation::simple(n, j))
    }

    /// `f · T_w`.
    pub fn term(f: LaurentPoly, w: Permutation) -> Self {
        assert_eq!(f.nvars(), w.size());
        let mut out = Self::zero(w.size());
        add_into(&mut out.coeffs, w, f);
        out
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &LaurentPoly)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, w: &Permutation) -> LaurentPoly {
        self.coeffs.get(w).cloned().unwrap_or_else(|| LaurentPoly::zero(self.n))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (w, f) in &other.coeffs {
            add_into(&mut out.coeffs, w.clone(), f.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        AffHeckeElem { n: self.n, coeffs: self.coeffs.iter().map(|(w, f)| (w.clone(), f.neg())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        let mut out = Self::zero(self.n);
        for (w, f) in &self.coeffs {
            add_into(&mut out.coeffs, w.clone(), f.scale(c));
        }
        out
    }

    /// `g · self` for a polynomial `g`.
    pub fn poly_mul_left(&self, g: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.n);
        for (w, f) in &self.coeffs {
            add_into(&mut out.coeffs, w.clone(), g.mul(f));
        }
        out
    }
}

/// The affine Hecke algebra `H_n` at a fixed `q` (formal by default).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineHecke {
    n: usize,
    q: RatFunc,
}

impl AffineHecke {
    pub fn new(n: usize) -> Self {
        Self::with_q(n, RatFunc::q())
    }

    pub fn with_q(n: usize, q: RatFunc) -> Self {
        AffineHecke { n, q }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> &RatFunc {
        &self.q
    }

    fn qm1(&self) -> RatFunc {
        self.q.sub(&RatFunc::one())
    }

    fn check(&self, a: &AffHeckeElem) -> Result<()> {
        if a.n != self.n {
            return Err(Error::RankMismatch { expected: self.n, found: a.n });
        }
        Ok(())
    }

    /// `T_j · T_u` in the `T_w` basis, as (permutation, coefficient) pairs.
    fn finite_left(&self, j: usize, u: &Permutation) -> Vec<(Permutation, RatFunc)> {
        let su = u.left_mul_simple(j);
        if u.has_left_descent(j) {
            alloc::vec![(u.clone(), self.qm1()), (su, self.q.clone())]
        } else {
            alloc::vec![(su, RatFunc::one())]
        }
    }

    /// `T_j · a`, moving `T_j` across each polynomial with
    /// `T_j f = f^{s_j} T_j + (q−1) D_j(f)`.
    pub fn t_mul(&self, j: usize, a: &AffHeckeElem) -> Result<AffHeckeElem> {
        self.check(a)?;
        if j == 0 || j >= self.n {
            return Err(Error::InvalidGenerator(alloc::format!("T{j} in rank {}", self.n)));
        }
        let qm1 = self.qm1();
        let mut out = AffHeckeElem::zero(self.n);
        for (u, f) in &a.coeffs {
            let fs = f.swap(j);
            for (v, c) in self.finite_left(j, u) {
                add_into(&mut out.coeffs, v, fs.scale(&c));
            }
            let d = f.divided_difference(j)?;
            add_into(&mut out.coeffs, u.clone(), d.scale(&qm1));
        }
        Ok(out)
    }

    /// Product in normal form.
    pub fn mul(&self, a: &AffHeckeElem, b: &AffHeckeElem) -> Result<AffHeckeElem> {
        self.check(a)?;
        self.check(b)?;
        let mut out = AffHeckeElem::zero(self.n);
        for (u, f) in &a.coeffs {
            // f T_u · b = f · (T_{a_1} ⋯ T_{a_k} · b)
            let mut cur = b.clone();
            for &j in u.reduced_word().iter().rev() {
                cur = self.t_mul(j, &cur)?;
            }
            out = out.add(&cur.poly_mul_left(f));
        }
        Ok(out)
    }

    /// `f · T_w` rewritten as `Σ T_u h_u`, using
    /// `f T_j = T_j f^{s_j} − (q−1) D_j(f^{s_j})`.
    pub fn to_t_left(&self, f: &LaurentPoly, w: &Permutation) -> Result<TLeftForm> {
        let word = w.reduced_word();
        self.poly_word_t_left(f, &word)
    }

    fn poly_word_t_left(&self, f: &LaurentPoly, word: &[usize]) -> Result<TLeftForm> {
        let mut out = TLeftForm::default();
        if f.is_zero() {
            return Ok(out);
        }
        let Some((&j, rest)) = word.split_first() else {
            out.terms.insert(Permutation::identity(self.n), f.clone());
            return Ok(out);
        };
        let fs = f.swap(j);
        let d = fs.divided_difference(j)?.scale(&self.qm1()).neg();
        let head = self.poly_word_t_left(&fs, rest)?;
        for (u, h) in head.terms {
            for (v, c) in self.finite_left(j, &u) {
                add_into(&mut out.terms, v, h.scale(&c));
            }
        }
        for (u, h) in self.poly_word_t_left(&d, rest)?.terms {
            add_into(&mut out.terms, u, h);
        }
        Ok(out)
    }

    /// `T_j · T_w` in T-left form (all polynomial parts constant).
    pub fn generator_t_left(&self, j: usize, w: &Permutation) -> TLeftForm {
        let mut out = TLeftForm::default();
        for (v, c) in self.finite_left(j, w) {
            add_into(&mut out.terms, v, LaurentPoly::constant(self.n, c));
        }
        out
    }

    /// Convert a T-left form back to normal form.
    pub fn from_t_left(&self, x: &TLeftForm) -> Result<AffHeckeElem> {
        let mut out = AffHeckeElem::zero(self.n);
        for (u, h) in &x.terms {
            out = out.add(&self.mul(&AffHeckeElem::t(u.clone()), &AffHeckeElem::poly(h.clone()))?);
        }
        Ok(out)
    }
}

/// Product at generic `q`.
pub fn aff_mul(a: &AffHeckeElem, b: &AffHeckeElem) -> Result<AffHeckeElem> {
    AffineHecke::new(a.rank()).mul(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, k: usize) -> LaurentPoly {
        LaurentPoly::var(n, k, 1)
    }

    #[test]
    fn single_commutation() {
        let lhs = aff_mul(&AffHeckeElem::generator(2, 1), &AffHeckeElem::poly(x(2, 1))).unwrap();
        let qm1 = RatFunc::q().sub(&RatFunc::one());
        let expect = AffHeckeElem::term(x(2, 2), Permutation::simple(2, 1))
            .add(&AffHeckeElem::poly(x(2, 1).scale(&qm1)));
        assert_eq!(lhs, expect);
    }

    #[test]
    fn symmetric_polynomials_commute() {
        let f = x(2, 1).mul(&x(2, 2)).add(&x(2, 1)).add(&x(2, 2));
        let lhs = aff_mul(&AffHeckeElem::generator(2, 1), &AffHeckeElem::poly(f.clone())).unwrap();
        assert_eq!(lhs, AffHeckeElem::term(f, Permutation::simple(2, 1)));
    }

    #[test]
    fn monomials_multiply() {
        let a = AffHeckeElem::poly(LaurentPoly::theta(&[1, -2, 0]));
        let b = AffHeckeElem::poly(LaurentPoly::theta(&[0, 3, 1]));
        assert_eq!(aff_mul(&a, &b).unwrap(), AffHeckeElem::poly(LaurentPoly::theta(&[1, 1, 1])));
    }

    #[test]
    fn t_left_round_trip() {
        let h = AffineHecke::new(3);
        let f = LaurentPoly::theta(&[2, -1, 0]).add(&x(3, 3));
        for w in Permutation::all(3) {
            let tl = h.to_t_left(&f, &w).unwrap();
            assert_eq!(h.from_t_left(&tl).unwrap(), AffHeckeElem::term(f.clone(), w));
        }
    }
}
