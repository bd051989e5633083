use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::Rational;
use crate::symgroup::Permutation;

/// An element `Σ c_w t_w` of `ℚ[S_n]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupAlgebraElem {
    n: usize,
    coeffs: BTreeMap<Permutation, Rational>,
}

impl GroupAlgebraElem {
    pub fn zero(n: usize) -> Self {
        GroupAlgebraElem { n, coeffs: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::basis(Permutation::identity(n))
    }

    pub fn scalar(n: usize, c: Rational) -> Self {
        Self::term(c, Permutation::identity(n))
    }

    pub fn basis(w: Permutation) -> Self {
        Self::term(Rational::one(), w)
    }

    pub fn term(c: Rational, w: Permutation) -> Self {
        let mut out = Self::zero(w.size());
        out.add_term(w, c);
        out
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Rational)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, w: &Permutation) -> Rational {
        self.coeffs.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_term(&mut self, w: Permutation, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(w).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::RankMismatch { expected: self.n, found: other.n });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (w, c) in &other.coeffs {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.n);
        for (w, a) in &self.coeffs {
            out.add_term(w.clone(), a * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.n);
        for (u, a) in &self.coeffs {
            for (v, b) in &other.coeffs {
                out.add_term(u.compose(v), a * b);
            }
        }
        Ok(out)
    }

    /// Image under `S_n ↪ S_total`, acting on positions `offset+1..offset+n`.
    pub fn shifted(&self, total: usize, offset: usize) -> Self {
        let mut out = Self::zero(total);
        for (w, c) in &self.coeffs {
            out.add_term(w.shifted(total, offset), c.clone());
        }
        out
    }
}

impl fmt::Display for GroupAlgebraElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.coeffs.iter().enumerate() {
            let word: Vec<_> = w.reduced_word().iter().map(ToString::to_string).collect();
            let t = format!("t[{}]", word.join(","));
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                f.write_str(&t)?;
            } else {
                write!(f, "({c})*{t}")?;
            }
        }
        Ok(())
    }
}

/// `JM_k = −p(t_{(1,k)} + ⋯ + t_{(k−1,k)}) + κ` in `ℚ[S_n]`.
pub fn jm_element(k: usize, n: usize, p: &Rational, kappa: &Rational) -> Result<GroupAlgebraElem> {
    if k == 0 || k > n {
        return Err(Error::IndexOutOfRange { index: k as i64, bound: n });
    }
    let mut out = GroupAlgebraElem::scalar(n, kappa.clone());
    for l in 1..k {
        out.add_term(Permutation::transposition(n, l, k), -p.clone());
    }
    Ok(out)
}

/// `(1/i!) Σ_{w ∈ S_i} (−1)^{l(w)} t_w`.
pub fn sign_projector_graded(i: usize) -> GroupAlgebraElem {
    let all = Permutation::all(i);
    let norm = Rational::from_integer(all.len().into());
    let mut out = GroupAlgebraElem::zero(i);
    for w in all {
        let s = Rational::from_integer(w.sign().into());
        out.add_term(w, s / &norm);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    #[test]
    fn jm_examples() {
        let (p, k) = (rat(3, 2), rat(-1, 1));
        assert_eq!(jm_element(1, 3, &p, &k).unwrap(), GroupAlgebraElem::scalar(3, k.clone()));
        let expect = GroupAlgebraElem::scalar(2, k.clone())
            .sub(&GroupAlgebraElem::term(p.clone(), Permutation::simple(2, 1)))
            .unwrap();
        assert_eq!(jm_element(2, 2, &p, &k).unwrap(), expect);
        let a = jm_element(2, 3, &p, &k).unwrap();
        let b = jm_element(3, 3, &p, &k).unwrap();
        assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        assert!(jm_element(4, 3, &p, &k).is_err());
    }

    #[test]
    fn graded_sign_projector() {
        assert_eq!(sign_projector_graded(1), GroupAlgebraElem::one(1));
        let half = rat(1, 2);
        let expect = GroupAlgebraElem::scalar(2, half.clone())
            .sub(&GroupAlgebraElem::term(half, Permutation::simple(2, 1)))
            .unwrap();
        assert_eq!(sign_projector_graded(2), expect);
        for i in 1..=4 {
            let s = sign_projector_graded(i);
            assert_eq!(s.mul(&s).unwrap(), s);
            for w in Permutation::all(i) {
                let tw = GroupAlgebraElem::basis(w.clone());
                let sign = Rational::from_integer(w.sign().into());
                assert_eq!(tw.mul(&s).unwrap(), s.scale(&sign));
            }
        }
    }
}
