//! `H_n` acting on `A_n` itself: the antispherical module
//! `H_n ⊗_{H_{S_n}} sgn` and its spherical counterpart, as operators.

use alloc::format;
use alloc::vec::Vec;

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::exactalg::{LaurentPoly, RatFunc};
use crate::heckeaff::levi::Generator;
use crate::symgroup::Permutation;

/// An `H_n`-structure on `A_n` in which every `θ_x` acts by multiplication.
pub trait PolynomialModule {
    fn rank(&self) -> usize;
    fn q(&self) -> &RatFunc;
    /// `T_j · f`.
    fn apply_t(&self, j: usize, f: &LaurentPoly) -> Result<LaurentPoly>;
}

/// Which one-dimensional `H_{S_n}`-character the cyclic vector `1` carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CyclicType {
    /// `T_j · 1 = −1`.
    Sign,
    /// `T_j · 1 = q`.
    Trivial,
}

/// `H_n ⊗_{H_{S_n}} χ` realized on `A_n`:
/// `T_j f = c·f^{s_j} + (q−1) D_j(f)` with `c = −1` (sign) or `q` (trivial).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedFromFinite {
    n: usize,
    q: RatFunc,
    kind: CyclicType,
}

impl InducedFromFinite {
    pub fn new(n: usize, q: RatFunc, kind: CyclicType) -> Self {
        InducedFromFinite { n, q, kind }
    }

    pub fn antispherical(n: usize, q: RatFunc) -> Self {
        Self::new(n, q, CyclicType::Sign)
    }

    pub fn spherical(n: usize, q: RatFunc) -> Self {
        Self::new(n, q, CyclicType::Trivial)
    }

    pub fn apply(&self, gen: Generator, f: &LaurentPoly) -> Result<LaurentPoly> {
        if f.nvars() != self.n {
            return Err(Error::VariableCountMismatch { left: self.n, right: f.nvars() });
        }
        match gen {
            Generator::T(j) => self.apply_t(j, f),
            Generator::X(k) if k >= 1 && k <= self.n => Ok(LaurentPoly::var(self.n, k, 1).mul(f)),
            Generator::X(k) => Err(Error::InvalidGenerator(format!("x{k} in rank {}", self.n))),
        }
    }
}

impl PolynomialModule for InducedFromFinite {
    fn rank(&self) -> usize {
        self.n
    }

    fn q(&self) -> &RatFunc {
        &self.q
    }

    fn apply_t(&self, j: usize, f: &LaurentPoly) -> Result<LaurentPoly> {
        if j == 0 || j >= self.n {
            return Err(Error::InvalidGenerator(format!("T{j} in rank {}", self.n)));
        }
        let c = match self.kind {
            CyclicType::Sign => RatFunc::from_int(-1),
            CyclicType::Trivial => self.q.clone(),
        };
        let d = f.divided_difference(j)?;
        Ok(f.swap(j).scale(&c).add(&d.scale(&self.q.sub(&RatFunc::one()))))
    }
}

/// Apply a generator in the antispherical (`spherical = false`) or
/// spherical module.
pub fn antispherical_apply(n: usize, gen: Generator, f: &LaurentPoly, spherical: bool) -> Result<LaurentPoly> {
    let kind = if spherical { CyclicType::Trivial } else { CyclicType::Sign };
    InducedFromFinite::new(n, RatFunc::q(), kind).apply(gen, f)
}

/// All monomials with exponents in `[−w, w]^n`.
pub fn window_monomials(n: usize, w: i32) -> Vec<LaurentPoly> {
    let mut out = Vec::new();
    let mut e = alloc::vec![-w; n];
    loop {
        out.push(LaurentPoly::theta(&e));
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            if e[i] < w {
                e[i] += 1;
                break;
            }
            e[i] = -w;
            i += 1;
        }
    }
}

/// Check the defining relations of `H_n` on every monomial of the window
/// `[−w, w]^n`; one certificate entry per relation instance.
pub fn windowed_audit<M: PolynomialModule + ?Sized>(m: &M, w: i32) -> Certificate {
    let n = m.rank();
    let q = m.q().clone();
    let qm1 = q.sub(&RatFunc::one());
    let mons = window_monomials(n, w);
    let mut cert = Certificate::default();
    let t = |j: usize, f: &LaurentPoly| m.apply_t(j, f);
    for j in 1..n {
        let ok = mons.iter().all(|f| {
            (|| -> Result<bool> {
                let tf = t(j, f)?;
                let ttf = t(j, &tf)?;
                Ok(ttf == tf.scale(&qm1).add(&f.scale(&q)))
            })()
            .unwrap_or(false)
        });
        cert.record(format!("quadratic T{j} on window {w}"), ok);
        for l in j + 1..n {
            let ok = mons.iter().all(|f| {
                (|| -> Result<bool> {
                    if l == j + 1 {
                        let a = t(j, &t(l, &t(j, f)?)?)?;
                        let b = t(l, &t(j, &t(l, f)?)?)?;
                        Ok(a == b)
                    } else {
                        Ok(t(j, &t(l, f)?)? == t(l, &t(j, f)?)?)
                    }
                })()
                .unwrap_or(false)
            });
            let name = if l == j + 1 { "braid" } else { "commute" };
            cert.record(format!("{name} T{j} T{l} on window {w}"), ok);
        }
        for k in 1..=n {
            let x = LaurentPoly::var(n, k, 1);
            let sk = Permutation::simple(n, j).apply(k - 1) + 1;
            let xs = LaurentPoly::var(n, sk, 1);
            let dx = x.divided_difference(j).expect("j < n").scale(&qm1);
            let ok = mons.iter().all(|f| {
                (|| -> Result<bool> {
                    let lhs = t(j, &x.mul(f))?.sub(&xs.mul(&t(j, f)?));
                    Ok(lhs == dx.mul(f))
                })()
                .unwrap_or(false)
            });
            cert.record(format!("bernstein T{j} x{k} on window {w}"), ok);
        }
    }
    cert
}
