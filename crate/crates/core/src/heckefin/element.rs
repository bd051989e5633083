use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::exactalg::RatFunc;
use crate::field::Field;
use crate::symgroup::Permutation;

/// An element `Σ c_w T_w` of the finite Hecke algebra `H_{S_n}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FinHeckeElem {
    n: usize,
    coeffs: BTreeMap<Permutation, RatFunc>,
}

impl FinHeckeElem {
    pub fn zero(n: usize) -> Self {
        FinHeckeElem { n, coeffs: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::basis(Permutation::identity(n))
    }

    /// The basis element `T_w`.
    pub fn basis(w: Permutation) -> Self {
        Self::term(RatFunc::one(), w)
    }

    pub fn term(c: RatFunc, w: Permutation) -> Self {
        let mut out = Self::zero(w.size());
        out.add_term(w, c);
        out
    }

    /// The generator `T_j = T_{s_j}` (1-based).
    pub fn generator(n: usize, j: usize) -> Self {
        Self::basis(Permutation::simple(n, j))
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &RatFunc)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, w: &Permutation) -> RatFunc {
        self.coeffs.get(w).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    pub(crate) fn add_term(&mut self, w: Permutation, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        let s = self.coeff(&w).add(&c);
        if s.is_zero() {
            self.coeffs.remove(&w);
        } else {
            self.coeffs.insert(w, s);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (w, c) in &other.coeffs {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&RatFunc::from_int(-1))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        FinHeckeElem { n: self.n, coeffs: self.coeffs.iter().map(|(w, a)| (w.clone(), a.mul(c))).collect() }
    }
}

/// The algebra `H_{S_n}` at a fixed value of `q` (formal by default).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteHecke {
    n: usize,
    q: RatFunc,
}

impl FiniteHecke {
    /// Generic `q`.
    pub fn new(n: usize) -> Self {
        Self::with_q(n, RatFunc::q())
    }

    pub fn with_q(n: usize, q: RatFunc) -> Self {
        FiniteHecke { n, q }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> &RatFunc {
        &self.q
    }

    fn check(&self, a: &FinHeckeElem) -> Result<()> {
        if a.n != self.n {
            return Err(Error::RankMismatch { expected: self.n, found: a.n });
        }
        Ok(())
    }

    /// `a · T_j`.
    pub fn mul_simple_right(&self, a: &FinHeckeElem, j: usize) -> FinHeckeElem {
        let qm1 = self.q.sub(&RatFunc::one());
        let mut out = FinHeckeElem::zero(self.n);
        for (u, c) in &a.coeffs {
            let us = u.right_mul_simple(j);
            if u.has_right_descent(j) {
                out.add_term(u.clone(), c.mul(&qm1));
                out.add_term(us, c.mul(&self.q));
            } else {
                out.add_term(us, c.clone());
            }
        }
        out
    }

    /// `T_j · a`.
    pub fn mul_simple_left(&self, j: usize, a: &FinHeckeElem) -> FinHeckeElem {
        let qm1 = self.q.sub(&RatFunc::one());
        let mut out = FinHeckeElem::zero(self.n);
        for (u, c) in &a.coeffs {
            let su = u.left_mul_simple(j);
            if u.has_left_descent(j) {
                out.add_term(u.clone(), c.mul(&qm1));
                out.add_term(su, c.mul(&self.q));
            } else {
                out.add_term(su, c.clone());
            }
        }
        out
    }

    pub fn mul(&self, a: &FinHeckeElem, b: &FinHeckeElem) -> Result<FinHeckeElem> {
        self.check(a)?;
        self.check(b)?;
        let mut out = FinHeckeElem::zero(self.n);
        for (v, c) in &b.coeffs {
            let prod = v.reduced_word().iter().fold(a.clone(), |acc, &j| self.mul_simple_right(&acc, j));
            out = out.add(&prod.scale(c));
        }
        Ok(out)
    }

    /// `Σ_w q^{-l(w)}`, the normalizer of the sign projector.
    fn sign_normalizer(&self) -> Result<RatFunc> {
        let qi = self.q.inv().ok_or(Error::VanishingNormalizer)?;
        Ok(poincare_sum(self.n, &qi))
    }

    /// `S_n = (Σ q^{-l(w)})^{-1} Σ (−1/q)^{l(w)} T_w`.
    pub fn sign_projector(&self) -> Result<FinHeckeElem> {
        let norm = self.sign_normalizer()?.inv().ok_or(Error::VanishingNormalizer)?;
        let mq = self.q.inv().ok_or(Error::VanishingNormalizer)?.neg();
        Ok(self.weighted_sum(&mq).scale(&norm))
    }

    /// `(Σ q^{l(w)})^{-1} Σ T_w`, on which each `T_j` acts by `q`.
    pub fn trivial_projector(&self) -> Result<FinHeckeElem> {
        let norm = poincare_sum(self.n, &self.q).inv().ok_or(Error::VanishingNormalizer)?;
        Ok(self.weighted_sum(&RatFunc::one()).scale(&norm))
    }

    fn weighted_sum(&self, base: &RatFunc) -> FinHeckeElem {
        let mut out = FinHeckeElem::zero(self.n);
        for w in Permutation::all(self.n) {
            let c = base.pow(w.length() as i32).expect("nonzero base");
            out.add_term(w, c);
        }
        out
    }

    /// The anti-involution fixing each `T_j`: `T_w ↦ T_{w^{-1}}`.
    pub fn star(&self, a: &FinHeckeElem) -> FinHeckeElem {
        FinHeckeElem { n: a.n, coeffs: a.coeffs.iter().map(|(w, c)| (w.inverse(), c.clone())).collect() }
    }
}

/// `Σ_{w ∈ S_n} x^{l(w)} = Π_{k=1}^{n} (1 + x + ⋯ + x^{k−1})`.
pub fn poincare_sum(n: usize, x: &RatFunc) -> RatFunc {
    let mut acc = RatFunc::one();
    for k in 1..=n {
        let mut s = RatFunc::zero();
        let mut p = RatFunc::one();
        for _ in 0..k {
            s = s.add(&p);
            p = p.mul(x);
        }
        acc = acc.mul(&s);
    }
    acc
}

/// Free-function form of [`FiniteHecke::sign_projector`] at generic `q`.
pub fn sign_projector(n: usize) -> FinHeckeElem {
    FiniteHecke::new(n).sign_projector().expect("generic normalizer is nonzero")
}

impl fmt::Display for FinHeckeElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut entries: Vec<(&Permutation, &RatFunc)> = self.coeffs.iter().collect();
        entries.sort_by(|a, b| (b.0.length(), b.0).cmp(&(a.0.length(), a.0)));
        for (i, (w, c)) in entries.into_iter().enumerate() {
            let word: Vec<_> = w.reduced_word().iter().map(ToString::to_string).collect();
            let t = format!("T[{}]", word.join(","));
            let term = if c.is_one() {
                t
            } else if c.neg().is_one() {
                format!("-{t}")
            } else if c.is_single_term() {
                format!("{c}*{t}")
            } else {
                format!("({c})*{t}")
            };
            if i == 0 {
                f.write_str(&term)?;
            } else if let Some(rest) = term.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {term}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> RatFunc {
        RatFunc::q()
    }

    #[test]
    fn quadratic_relation() {
        let h = FiniteHecke::new(2);
        let t1 = FinHeckeElem::generator(2, 1);
        let sq = h.mul(&t1, &t1).unwrap();
        let expect = t1.scale(&q().sub(&RatFunc::one())).add(&FinHeckeElem::one(2).scale(&q()));
        assert_eq!(sq, expect);
        assert_eq!(sq.to_string(), "(q-1)*T[1] + q*T[]");
    }

    #[test]
    fn lengths_add_and_reduce() {
        let h = FiniteHecke::new(3);
        let t = |w: &[usize]| FinHeckeElem::basis(Permutation::from_word(3, w));
        assert_eq!(h.mul(&t(&[1]), &t(&[2])).unwrap(), t(&[1, 2]));
        let lhs = h.mul(&t(&[1, 2, 1]), &t(&[1])).unwrap();
        let expect = t(&[1, 2, 1]).scale(&q().sub(&RatFunc::one())).add(&t(&[1, 2]).scale(&q()));
        assert_eq!(lhs, expect);
        assert!(h.mul(&t(&[1]), &FinHeckeElem::one(2)).is_err());
    }

    #[test]
    fn sign_projector_small_cases() {
        assert_eq!(sign_projector(1), FinHeckeElem::one(1));
        let s2 = sign_projector(2);
        let expect = FinHeckeElem::one(2)
            .scale(&q())
            .sub(&FinHeckeElem::generator(2, 1))
            .scale(&q().add(&RatFunc::one()).inv().unwrap());
        assert_eq!(s2, expect);
        let h = FiniteHecke::new(2);
        assert_eq!(h.mul(&FinHeckeElem::generator(2, 1), &s2).unwrap(), s2.neg());
    }

    #[test]
    fn vanishing_normalizer_is_reported() {
        // Σ q^{-l(w)} over S_2 is 1 + 1/q, zero at q = −1.
        let h = FiniteHecke::with_q(2, RatFunc::from_int(-1));
        assert_eq!(h.sign_projector(), Err(Error::VanishingNormalizer));
        let h0 = FiniteHecke::with_q(2, RatFunc::zero());
        assert_eq!(h0.sign_projector(), Err(Error::VanishingNormalizer));
    }
}
