//! Sparse multivariate Laurent polynomials with ℚ(q) coefficients.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::ratfunc::RatFunc;
use crate::field::Field;
use crate::error::{Error, Result};
use crate::symgroup::Permutation;

/// Exponent vector of a monomial `x_1^{e_1} ⋯ x_n^{e_n}`.
pub type Exponent = Vec<i32>;

/// A Laurent polynomial in `x_1, …, x_n`, stored as exponent → coefficient.
///
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Exponent, RatFunc>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, RatFunc::one())
    }

    pub fn constant(nvars: usize, c: RatFunc) -> Self {
        Self::monomial(c, vec![0; nvars])
    }

    pub fn monomial(c: RatFunc, exponent: Exponent) -> Self {
        let nvars = exponent.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        LaurentPoly { nvars, terms }
    }

    /// The basis element `θ_x = x_1^{m_1} ⋯ x_n^{m_n}`.
    pub fn theta(exponent: &[i32]) -> Self {
        Self::monomial(RatFunc::one(), exponent.to_vec())
    }

    /// The variable `x_k` (1-based), optionally raised to `power`.
    pub fn var(nvars: usize, k: usize, power: i32) -> Self {
        assert!((1..=nvars).contains(&k), "variable x{k} outside 1..={nvars}");
        let mut e = vec![0; nvars];
        e[k - 1] = power;
        Self::theta(&e)
    }

    /// Build from `(coefficient, exponent)` pairs, combining repeats.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (RatFunc, Exponent)>) -> Self {
        let mut out = Self::zero(nvars);
        for (c, e) in terms {
            assert_eq!(e.len(), nvars);
            out.add_term(e, c);
        }
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &RatFunc)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponent: &[i32]) -> RatFunc {
        self.terms.get(exponent).cloned().unwrap_or_else(RatFunc::zero)
    }

    /// The single term of a monomial.
    pub fn as_monomial(&self) -> Option<(&Exponent, &RatFunc)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// The value as a scalar if the polynomial has no `x` dependence.
    pub fn as_constant(&self) -> Option<RatFunc> {
        match self.terms.len() {
            0 => Some(RatFunc::zero()),
            1 => {
                let (e, c) = self.terms.iter().next()?;
                e.iter().all(|&k| k == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    fn add_term(&mut self, e: Exponent, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableCountMismatch { left: self.nvars, right: other.nvars });
        }
        Ok(())
    }

    /// Sum. Panics on a variable-count mismatch.
    pub fn add(&self, other: &Self) -> Self {
        self.check_same(other).expect("Laurent polynomials in different variable counts");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Product. Panics on a variable-count mismatch; see [`laurent_mul`].
    pub fn mul(&self, other: &Self) -> Self {
        self.check_same(other).expect("Laurent polynomials in different variable counts");
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a.mul(c))).collect(),
        }
    }

    /// Multiply by the monomial `θ_shift`.
    pub fn shift(&self, shift: &[i32]) -> Self {
        assert_eq!(shift.len(), self.nvars);
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Inverse of a monomial with invertible coefficient.
    pub fn monomial_inverse(&self) -> Option<Self> {
        let (e, c) = self.as_monomial()?;
        Some(Self::monomial(c.inv()?, e.iter().map(|a| -a).collect()))
    }

    /// `f^w`: substitute `x_i ↦ x_{w(i)}`, so that `θ_x ↦ θ_{w(x)}`.
    pub fn permute(&self, w: &Permutation) -> Result<Self> {
        if w.size() != self.nvars {
            return Err(Error::RankMismatch { expected: self.nvars, found: w.size() });
        }
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; self.nvars];
            for (i, &a) in e.iter().enumerate() {
                ne[w.apply(i)] = a;
            }
            out.terms.insert(ne, c.clone());
        }
        Ok(out)
    }

    /// `f^{s_j}`: exchange `x_j` and `x_{j+1}` (1-based `j`).
    pub fn swap(&self, j: usize) -> Self {
        assert!(j >= 1 && j < self.nvars, "simple reflection s{j} outside rank {}", self.nvars);
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut ne = e.clone();
                    ne.swap(j - 1, j);
                    (ne, c.clone())
                })
                .collect(),
        }
    }

    /// True if `f^{s_j} = f`.
    pub fn is_symmetric_in(&self, j: usize) -> bool {
        self.swap(j) == *self
    }

    /// `x_j (f − f^{s_j}) / (x_j − x_{j+1})`, the polynomial on the right of
    /// the Bernstein relation without its `(q−1)` factor.
    ///
    /// Each monomial `x_j^a x_{j+1}^b` contributes a geometric sum, so the
    /// quotient is always a Laurent polynomial.
    pub fn divided_difference(&self, j: usize) -> Result<Self> {
        if j == 0 || j >= self.nvars {
            return Err(Error::IndexOutOfRange { index: j as i64, bound: self.nvars });
        }
        let (a_idx, b_idx) = (j - 1, j);
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let (a, b) = (e[a_idx], e[b_idx]);
            if a == b {
                continue;
            }
            // (x^a y^b − x^b y^a)/(x − y) = ±(xy)^{min} · Σ x^{d−1−k} y^k, d = |a−b|,
            // then multiplied by x.
            let (lo, d, sign) = if a > b { (b, a - b, c.clone()) } else { (a, b - a, c.neg()) };
            for k in 0..d {
                let mut ne = e.clone();
                ne[a_idx] = lo + d - 1 - k + 1;
                ne[b_idx] = lo + k;
                out.add_term(ne, sign.clone());
            }
        }
        Ok(out)
    }

    /// Maximum and minimum total degree over the support.
    pub fn degree_stats(&self) -> Result<(i32, i32)> {
        let mut it = self.terms.keys().map(|e| e.iter().sum::<i32>());
        let first = it.next().ok_or(Error::ZeroPolynomial)?;
        Ok(it.fold((first, first), |(hi, lo), d| (hi.max(d), lo.min(d))))
    }

    /// Evaluate at a point of the torus.
    pub fn eval(&self, point: &[RatFunc]) -> Result<RatFunc> {
        if point.len() != self.nvars {
            return Err(Error::VariableCountMismatch { left: self.nvars, right: point.len() });
        }
        let mut acc = RatFunc::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k != 0 {
                    let p = x.pow(k).ok_or_else(|| Error::ZeroEntry("torus coordinate".to_string()))?;
                    t = t.mul(&p);
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Substitute a scalar for the variable `x_k` (1-based); the variable
    /// count is unchanged and `x_k` no longer occurs.
    pub fn substitute(&self, k: usize, value: &RatFunc) -> Result<Self> {
        if k == 0 || k > self.nvars {
            return Err(Error::IndexOutOfRange { index: k as i64, bound: self.nvars });
        }
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let p = value.pow(e[k - 1]).ok_or_else(|| Error::ZeroEntry(format!("x{k} = 0 with negative power")))?;
            let mut ne = e.clone();
            ne[k - 1] = 0;
            out.add_term(ne, c.mul(&p));
        }
        Ok(out)
    }

    /// Largest exponent of `x_k` (1-based) in the support.
    pub fn degree_in(&self, k: usize) -> Option<i32> {
        self.terms.keys().map(|e| e[k - 1]).max()
    }

    /// Place this polynomial into `total` variables starting at variable `offset + 1`.
    pub fn embed(&self, total: usize, offset: usize) -> Self {
        assert!(offset + self.nvars <= total);
        LaurentPoly {
            nvars: total,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut ne = vec![0; total];
                    ne[offset..offset + self.nvars].copy_from_slice(e);
                    (ne, c.clone())
                })
                .collect(),
        }
    }

    /// Componentwise minimum exponent, `None` for zero.
    fn min_exponent(&self) -> Option<Exponent> {
        let mut it = self.terms.keys();
        let mut m = it.next()?.clone();
        for e in it {
            for (a, b) in m.iter_mut().zip(e) {
                *a = (*a).min(*b);
            }
        }
        Some(m)
    }

    /// Exact quotient `self / divisor` in the Laurent ring, or `None`.
    ///
    /// Both sides are shifted to honest polynomials with no monomial factor
    /// on the divisor, then divided by lexicographic leading terms.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if self.nvars != divisor.nvars || divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.nvars));
        }
        let mf = self.min_exponent()?;
        let mg = divisor.min_exponent()?;
        let neg = |m: &Exponent| m.iter().map(|a| -a).collect::<Exponent>();
        let mut rem = self.shift(&neg(&mf));
        let g = divisor.shift(&neg(&mg));
        let (lg, lc) = g.terms.iter().next_back()?;
        let lc_inv = lc.inv()?;
        let mut quot = Self::zero(self.nvars);
        while let Some((lr, rc)) = rem.terms.iter().next_back() {
            let diff: Exponent = lr.iter().zip(lg).map(|(a, b)| a - b).collect();
            if diff.iter().any(|&d| d < 0) {
                return None;
            }
            let t = Self::monomial(rc.mul(&lc_inv), diff);
            rem = rem.sub(&t.mul(&g));
            quot = quot.add(&t);
        }
        let back: Exponent = mf.iter().zip(&mg).map(|(a, b)| a - b).collect();
        Some(quot.shift(&back))
    }
}

/// Product of Laurent polynomials, checking the variable counts.
pub fn laurent_mul(f: &LaurentPoly, g: &LaurentPoly) -> Result<LaurentPoly> {
    f.check_same(g)?;
    Ok(f.mul(g))
}

fn format_monomial(e: &[i32]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k != 0)
        .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, k) })
        .collect();
    parts.join("*")
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mono = format_monomial(e);
            let coeff = c.to_string();
            let term = if mono.is_empty() {
                if c.is_single_term() { coeff } else { format!("({coeff})") }
            } else if c.is_one() {
                mono
            } else if c.neg().is_one() {
                format!("-{mono}")
            } else if c.is_single_term() {
                format!("{coeff}*{mono}")
            } else {
                format!("({coeff})*{mono}")
            };
            if first {
                f.write_str(&term)?;
                first = false;
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

    fn x(n: usize, k: usize) -> LaurentPoly {
        LaurentPoly::var(n, k, 1)
    }

    #[test]
    fn inverse_monomials_cancel() {
        let f = laurent_mul(&x(1, 1), &LaurentPoly::var(1, 1, -1)).unwrap();
        assert_eq!(f, LaurentPoly::one(1));
    }

    #[test]
    fn monomial_rule() {
        let f = laurent_mul(&LaurentPoly::theta(&[1, 0]), &LaurentPoly::theta(&[0, 2])).unwrap();
        assert_eq!(f, LaurentPoly::theta(&[1, 2]));
    }

    #[test]
    fn difference_of_squares() {
        let a = x(2, 1).sub(&x(2, 2));
        let b = x(2, 1).add(&x(2, 2));
        let expect = LaurentPoly::var(2, 1, 2).sub(&LaurentPoly::var(2, 2, 2));
        assert_eq!(laurent_mul(&a, &b).unwrap(), expect);
    }

    #[test]
    fn mismatch_is_an_error() {
        assert_eq!(
            laurent_mul(&x(1, 1), &x(2, 1)),
            Err(Error::VariableCountMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn divided_difference_examples() {
        let one = LaurentPoly::one(2);
        assert!(one.divided_difference(1).unwrap().is_zero());
        assert_eq!(x(2, 2).divided_difference(1).unwrap(), x(2, 1).neg());
        assert_eq!(x(2, 1).divided_difference(1).unwrap(), x(2, 1));
        assert!(x(2, 1).divided_difference(2).is_err());
    }

    #[test]
    fn divided_difference_matches_exact_division() {
        let f = LaurentPoly::from_terms(
            3,
            [
                (RatFunc::from_int(3), vec![2, -1, 1]),
                (RatFunc::q(), vec![-2, 3, 0]),
                (RatFunc::from_int(-1), vec![0, 0, 5]),
            ],
        );
        for j in 1..3 {
            let num = x(3, j).mul(&f.sub(&f.swap(j)));
            let den = x(3, j).sub(&x(3, j + 1));
            assert_eq!(num.div_exact(&den).unwrap(), f.divided_difference(j).unwrap());
        }
    }

    #[test]
    fn degree_stats_examples() {
        let f = LaurentPoly::theta(&[2, -1]).add(&LaurentPoly::one(2));
        assert_eq!(f.degree_stats().unwrap(), (1, 0));
        assert_eq!(LaurentPoly::constant(2, RatFunc::from_int(5)).degree_stats().unwrap(), (0, 0));
        assert_eq!(LaurentPoly::theta(&[1, 1]).degree_stats().unwrap(), (2, 2));
        assert_eq!(LaurentPoly::zero(2).degree_stats(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn permutation_examples() {
        let s1 = Permutation::simple(2, 1);
        assert_eq!(x(2, 1).permute(&s1).unwrap(), x(2, 2));
        let sym = x(2, 1).mul(&x(2, 2));
        assert_eq!(sym.permute(&s1).unwrap(), sym);
        assert!(x(3, 1).permute(&s1).is_err());
    }

    #[test]
    fn exact_division_rejects_non_multiples() {
        let f = x(2, 1).add(&LaurentPoly::one(2));
        assert!(f.div_exact(&x(2, 1).sub(&x(2, 2))).is_none());
        let g = LaurentPoly::var(2, 1, -2).sub(&LaurentPoly::var(2, 2, -2));
        let d = LaurentPoly::var(2, 1, -1).sub(&LaurentPoly::var(2, 2, -1));
        let expect = LaurentPoly::var(2, 1, -1).add(&LaurentPoly::var(2, 2, -1));
        assert_eq!(g.div_exact(&d).unwrap(), expect);
    }

    #[test]
    fn rendering() {
        let f = LaurentPoly::from_terms(
            2,
            [
                (RatFunc::q().sub(&RatFunc::one()), vec![1, -1]),
                (RatFunc::q(), vec![0, 0]),
            ],
        );
        assert_eq!(f.to_string(), "(q-1)*x1*x2^-1 + q");
        let g = x(2, 1).sub(&x(2, 2));
        assert_eq!(g.to_string(), "x1 - x2");
    }
}
