//! Rational functions in the formal Hecke parameter `q` over the rationals.

use alloc::format;
use alloc::string::{String, ToString};
use core::fmt;

use num_traits::Signed;

use super::upoly::Poly;
use crate::error::{Error, Result};
use crate::field::{Field, Rational};

/// Polynomials in `q` with rational coefficients.
pub type QPoly = Poly<Rational>;

/// An element of ℚ(q) in canonical form.
///
/// The denominator is monic and coprime to the numerator; zero is `0/1`.
/// Canonical form makes derived equality, ordering and hashing agree with
/// equality of values.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RatFunc {
    num: QPoly,
    den: QPoly,
}

impl RatFunc {
    pub fn from_parts(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroEntry("denominator of a rational function".to_string()));
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: QPoly, den: QPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_constant() {
            let c = den.coeff(0);
            if c.is_one() {
                return RatFunc { num, den };
            }
            let inv = c.recip();
            return RatFunc { num: num.scale(&inv), den: QPoly::one() };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        let lead = den.leading().expect("nonzero").clone();
        if lead.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lead.recip();
            RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn zero() -> Self {
        RatFunc { num: QPoly::zero(), den: QPoly::one() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The formal parameter `q`.
    pub fn q() -> Self {
        Self::from_poly(QPoly::x())
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i32) -> Self {
        let m = QPoly::monomial(Rational::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            Self::from_poly(m)
        } else {
            RatFunc { num: QPoly::one(), den: m }
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(QPoly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(<Rational as Field>::from_int(n))
    }

    pub fn from_poly(num: QPoly) -> Self {
        RatFunc { num, den: QPoly::one() }
    }

    pub fn numerator(&self) -> &QPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The value as a rational, if it does not involve `q`.
    pub fn as_constant(&self) -> Option<Rational> {
        (self.den.is_one() && self.num.is_constant()).then(|| self.num.coeff(0))
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.add(&other.num));
        }
        if self.den == other.den {
            return Self::normalized(self.num.add(&other.num), self.den.clone());
        }
        Self::normalized(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.mul(&other.num));
        }
        // Cross-cancel so the product of canonical forms stays small.
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let a = self.num.div_exact(&g1).expect("gcd divides");
        let d = other.den.div_exact(&g1).expect("gcd divides");
        let c = other.num.div_exact(&g2).expect("gcd divides");
        let b = self.den.div_exact(&g2).expect("gcd divides");
        Self::normalized(a.mul(&c), b.mul(&d))
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|r| self.mul(&r))
    }

    pub fn pow(&self, k: i32) -> Option<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let e = k.unsigned_abs();
        Some(RatFunc { num: base.num.pow(e), den: base.den.pow(e) })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Substitute an exact rational for `q`.
    pub fn specialize(&self, q0: &Rational) -> Result<Rational> {
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(Error::VanishingDenominator);
        }
        Ok(self.num.eval(q0) / d)
    }

    /// Substitute a rational function for `q`.
    pub fn substitute(&self, value: &RatFunc) -> Result<RatFunc> {
        let eval = |p: &QPoly| {
            let mut acc = RatFunc::zero();
            for c in p.coeffs().iter().rev() {
                acc = acc.mul(value).add(&RatFunc::constant(c.clone()));
            }
            acc
        };
        let d = eval(&self.den);
        eval(&self.num).div(&d).ok_or(Error::VanishingDenominator)
    }

    /// True if the printed form is a single signed term, e.g. `3`, `-q^2`, `1/2*q`.
    pub(crate) fn is_single_term(&self) -> bool {
        self.den.is_one() && self.num.term_count() <= 1
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn from_int(n: i64) -> Self {
        RatFunc::from_int(n)
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn minus(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn negate(&self) -> Self {
        self.neg()
    }
    fn recip(&self) -> Option<Self> {
        self.inv()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl core::ops::$tr<&RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &RatFunc) -> RatFunc {
                RatFunc::$inner(self, rhs)
            }
        }
        impl core::ops::$tr for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                RatFunc::$inner(&self, &rhs)
            }
        }
    };
}
forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, mul);

impl core::ops::Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc::neg(&self)
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> Self {
        RatFunc::from_int(n)
    }
}

impl From<Rational> for RatFunc {
    fn from(c: Rational) -> Self {
        RatFunc::constant(c)
    }
}

/// Render a rational as `3`, `-3/2`.
pub fn format_rational(r: &Rational) -> String {
    if num_traits::One::is_one(r.denom()) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Render a polynomial in `q`, highest degree first, e.g. `q^2-2*q+1`.
pub fn format_qpoly(p: &QPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (deg, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let abs = c.abs();
        let mut term = String::new();
        if deg == 0 {
            term.push_str(&format_rational(&abs));
        } else {
            if !abs.is_one() {
                term.push_str(&format_rational(&abs));
                term.push('*');
            }
            term.push('q');
            if deg > 1 {
                term.push_str(&format!("^{deg}"));
            }
        }
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        out.push_str(&term);
    }
    out
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = format_qpoly(&self.num);
        if self.den.is_one() {
            return f.write_str(&num);
        }
        let den = format_qpoly(&self.den);
        let num = if self.num.term_count() > 1 { format!("({num})") } else { num };
        let den = if self.den.term_count() > 1 { format!("({den})") } else { den };
        write!(f, "{num}/{den}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    fn q() -> RatFunc {
        RatFunc::q()
    }

    #[test]
    fn canonical_form_cancels_common_factors() {
        // (q^2 - 1)/(2q + 2) = (q - 1)/2
        let num = q().mul(&q()).sub(&RatFunc::one());
        let den = q().scale(&rat(2, 1)).add(&RatFunc::from_int(2));
        let r = num.div(&den).unwrap();
        assert!(r.is_polynomial());
        assert_eq!(r, q().sub(&RatFunc::one()).scale(&rat(1, 2)));
    }

    #[test]
    fn denominator_is_monic() {
        let r = RatFunc::one().div(&q().scale(&rat(3, 1))).unwrap();
        assert!(r.denominator().leading().unwrap().is_one());
        assert_eq!(r.to_string(), "1/3/q");
    }

    #[test]
    fn rendering() {
        let qm1 = q().sub(&RatFunc::one());
        assert_eq!(qm1.to_string(), "q-1");
        assert_eq!(qm1.mul(&qm1).to_string(), "q^2-2*q+1");
        let r = qm1.div(&q().add(&RatFunc::one())).unwrap();
        assert_eq!(r.to_string(), "(q-1)/(q+1)");
        assert_eq!(RatFunc::q_pow(-2).to_string(), "1/q^2");
        assert_eq!(RatFunc::constant(rat(-3, 2)).to_string(), "-3/2");
    }

    #[test]
    fn specialization_refuses_poles() {
        let r = RatFunc::one().div(&q().add(&RatFunc::one())).unwrap();
        assert_eq!(r.specialize(&rat(1, 1)).unwrap(), rat(1, 2));
        assert_eq!(r.specialize(&rat(-1, 1)), Err(Error::VanishingDenominator));
    }

    #[test]
    fn inverse_and_powers() {
        let a = q().add(&RatFunc::from_int(2));
        assert_eq!(a.mul(&a.inv().unwrap()), RatFunc::one());
        assert_eq!(q().pow(-3).unwrap(), RatFunc::q_pow(-3));
        assert!(RatFunc::zero().inv().is_none());
    }
}
