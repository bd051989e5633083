//! Roots in `ℚ(q)` of univariate polynomials with `ℚ(q)` coefficients.
//!
//! A root `a(q)/b(q)` of a primitive `Σ F_i(q) λ^i` has `a | F_0` and
//! `b | F_d`. Specializing `q` to an integer `q0` where the polynomial
//! stays squarefree turns each such root into a rational root, found
//! p-adically; Newton iteration lifts it to a power series in `q − q0`,
//! and a Padé approximant within those degree bounds recovers the
//! candidate, which is then checked exactly.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{Poly, QPoly, RatFunc};
use crate::field::Rational;

type ZPoly = Vec<BigInt>;

fn ri(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn eval_z(f: &[BigInt], x: &BigInt) -> BigInt {
    f.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn derivative_z(f: &[BigInt]) -> ZPoly {
    f.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect()
}

fn small_primes_from(start: u64) -> impl Iterator<Item = u64> {
    (start..).filter(|&n| n > 1 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

fn mod_u64(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = (r as u128 * b as u128 % p as u128) as u64;
        }
        b = (b as u128 * b as u128 % p as u128) as u64;
        e >>= 1;
    }
    r
}

/// Degree of `gcd(f, g)` over `F_p` (coefficients low to high).
fn gcd_degree_mod_p(f: &[u64], g: &[u64], p: u64) -> usize {
    let trim = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    let (mut a, mut b) = (f.to_vec(), g.to_vec());
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        // a mod b
        let inv = pow_mod(*b.last().unwrap(), p - 2, p);
        while a.len() >= b.len() {
            let c = (*a.last().unwrap() as u128 * inv as u128 % p as u128) as u64;
            let shift = a.len() - b.len();
            for (i, &bc) in b.iter().enumerate() {
                let sub = (c as u128 * bc as u128 % p as u128) as u64;
                a[shift + i] = (a[shift + i] + p - sub) % p;
            }
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        core::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// Rational roots of a squarefree integer polynomial with nonzero constant term.
fn rational_roots(f: &[BigInt]) -> Vec<Rational> {
    let d = f.len() - 1;
    if d == 0 {
        return Vec::new();
    }
    let lc = f[d].abs();
    let c0 = f[0].abs();
    let bound = BigInt::from(2) * &lc * &c0;
    let df = derivative_z(f);
    let p = small_primes_from(101)
        .find(|&p| {
            if mod_u64(&f[d], p) == 0 {
                return false;
            }
            let fp: Vec<u64> = f.iter().map(|c| mod_u64(c, p)).collect();
            let dp: Vec<u64> = df.iter().map(|c| mod_u64(c, p)).collect();
            gcd_degree_mod_p(&fp, &dp, p) == 0
        })
        .expect("some prime keeps a squarefree polynomial squarefree");
    let fp: Vec<u64> = f.iter().map(|c| mod_u64(c, p)).collect();
    let mut out = Vec::new();
    for r in 0..p {
        let v = fp.iter().rev().fold(0u64, |acc, &c| ((acc as u128 * r as u128 + c as u128) % p as u128) as u64);
        if v != 0 {
            continue;
        }
        // Hensel lifting of the simple root r.
        let mut m = BigInt::from(p);
        let mut x = BigInt::from(r);
        while m <= bound {
            m = &m * &m;
            let fx = eval_z(f, &x).mod_floor(&m);
            let dx = eval_z(&df, &x).mod_floor(&m);
            let g = dx.extended_gcd(&m);
            debug_assert!(g.gcd.is_one());
            x = (x - fx * g.x).mod_floor(&m);
        }
        // Rational reconstruction with |a| ≤ c0, 0 < b ≤ lc.
        let (mut r0, mut r1) = (m.clone(), x);
        let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
        while r1 > c0 {
            let qt = &r0 / &r1;
            let r2 = &r0 - &qt * &r1;
            let t2 = &t0 - &qt * &t1;
            r0 = core::mem::replace(&mut r1, r2);
            t0 = core::mem::replace(&mut t1, t2);
        }
        if t1.is_zero() || t1.abs() > lc {
            continue;
        }
        let cand = Rational::new(r1, t1);
        let val = f.iter().rev().fold(Rational::zero(), |acc, c| acc * &cand + Rational::from_integer(c.clone()));
        if val.is_zero() && !out.contains(&cand) {
            out.push(cand);
        }
    }
    out
}

fn lcm_poly(a: &QPoly, b: &QPoly) -> QPoly {
    a.mul(b).div_exact(&a.gcd(b)).expect("gcd divides").monic()
}

/// Scale so that all coefficients are integers with no common content.
fn integer_coefficients(fs: &mut [QPoly]) {
    let mut den = BigInt::one();
    for f in fs.iter() {
        for c in f.coeffs() {
            den = den.lcm(c.denom());
        }
    }
    let s = Rational::from_integer(den);
    for f in fs.iter_mut() {
        *f = f.scale(&s);
    }
}

fn padé(series: &[Rational], num_deg: usize) -> (QPoly, QPoly) {
    let n = series.len();
    let (mut r0, mut r1) = (QPoly::monomial(Rational::one(), n), QPoly::new(series.to_vec()));
    let (mut t0, mut t1) = (QPoly::zero(), QPoly::one());
    while r1.degree().is_some_and(|d| d > num_deg) {
        let (qt, r2) = r0.div_rem(&r1);
        let t2 = t0.sub(&qt.mul(&t1));
        r0 = core::mem::replace(&mut r1, r2);
        t0 = core::mem::replace(&mut t1, t2);
    }
    (r1, t1)
}

fn lift_root(shifted: &[QPoly], r0: &Rational, order: usize) -> Vec<Rational> {
    let d = shifted.len() - 1;
    let slope = (1..=d)
        .rev()
        .fold(Rational::zero(), |acc, i| acc * r0 + shifted[i].coeff(0) * ri(i as i64));
    let mut series = vec![r0.clone()];
    for k in 1..order {
        // Coefficient of s^k in F(s, λ_{<k}(s)).
        let lam = QPoly::new(series.clone());
        let mut acc = QPoly::zero();
        for c in shifted.iter().rev() {
            acc = truncate(&acc.mul(&lam), k + 1).add(&truncate(c, k + 1));
        }
        series.push(-acc.coeff(k) / &slope);
    }
    series
}

fn lambda_derivative(fs: &[QPoly]) -> Vec<QPoly> {
    fs.iter().enumerate().skip(1).map(|(i, c)| c.scale(&ri(i as i64))).collect()
}

/// Candidate roots found through the specialization `q = q0`.
fn candidates_at(fs: &[QPoly], q0: i64) -> Vec<RatFunc> {
    let q0r = ri(q0);
    let f0 = QPoly::new(fs.iter().map(|c| c.eval(&q0r)).collect());
    let mut sf0 = vec![f0.squarefree_part()];
    integer_coefficients(&mut sf0);
    let zf: Vec<BigInt> = sf0[0].coeffs().iter().map(|c| c.to_integer()).collect();
    let back = QPoly::new(vec![-q0r.clone(), Rational::one()]);
    let fwd = QPoly::new(vec![q0r.clone(), Rational::one()]);
    let mut out = Vec::new();
    for r0 in rational_roots(&zf) {
        // A root of multiplicity e at q0 is a simple root of the (e−1)-th
        // λ-derivative, which is lifted instead.
        let lin = QPoly::new(vec![-r0.clone(), Rational::one()]);
        let mut rest = f0.clone();
        let mut g = fs.to_vec();
        while let Some(next) = rest.div_exact(&lin) {
            rest = next;
            if rest.eval(&r0).is_zero() {
                g = lambda_derivative(&g);
            }
        }
        while g.len() > 1 && g[0].is_zero() {
            g.remove(0);
        }
        let num_deg = g[0].degree().unwrap_or(0);
        let den_deg = g.last().and_then(QPoly::degree).unwrap_or(0);
        let shifted: Vec<QPoly> = g.iter().map(|c| c.compose(&fwd)).collect();
        let series = lift_root(&shifted, &r0, num_deg + den_deg + 1);
        let (a, b) = padé(&series, num_deg);
        if b.is_zero() {
            continue;
        }
        if let Ok(c) = RatFunc::from_parts(a.compose(&back), b.compose(&back)) {
            out.push(c);
        }
    }
    out
}

/// Distinct roots in `ℚ(q)` of `p` with their multiplicities.
///
/// Roots not in `ℚ(q)` are simply absent; callers compare the total
/// multiplicity with the degree.
pub fn roots_in_ratfunc(p: &Poly<RatFunc>) -> Result<Vec<(RatFunc, usize)>> {
    let Some(deg) = p.degree() else { return Err(Error::ZeroPolynomial) };
    let mut found: Vec<(RatFunc, usize)> = Vec::new();
    let mut rest = p.clone();
    let mut take = |r: RatFunc, rest: &mut Poly<RatFunc>| {
        if found.iter().any(|(f, _)| *f == r) {
            return;
        }
        let mut mult = 0;
        while let Some(next) = divide_linear(rest, &r) {
            *rest = next;
            mult += 1;
        }
        if mult > 0 {
            found.push((r, mult));
        }
    };
    take(RatFunc::zero(), &mut rest);
    if rest.degree().unwrap_or(0) > 0 {
        // Clear denominators into ℚ[q][λ].
        let mut den = QPoly::one();
        for c in rest.coeffs() {
            den = lcm_poly(&den, c.denominator());
        }
        let mut fs: Vec<QPoly> = rest
            .coeffs()
            .iter()
            .map(|c| c.numerator().mul(&den.div_exact(c.denominator()).expect("lcm")))
            .collect();
        integer_coefficients(&mut fs);
        let d = fs.len() - 1;
        // Specializations are ranked by how many distinct roots survive;
        // exact verification makes a poor choice cost only retries.
        let mut points: Vec<(usize, i64)> = (1..60i64)
            .flat_map(|k| [k + 1, -k])
            .filter_map(|q0| {
                let q0r = ri(q0);
                if fs[d].eval(&q0r).is_zero() {
                    return None;
                }
                let f0 = QPoly::new(fs.iter().map(|c| c.eval(&q0r)).collect());
                Some((f0.squarefree_part().degree().unwrap_or(0), q0))
            })
            .collect();
        points.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.abs().cmp(&b.1.abs())));
        for &(_, q0) in points.iter().take(6) {
            for c in candidates_at(&fs, q0) {
                take(c, &mut rest);
            }
            if rest.degree() == Some(0) {
                break;
            }
        }
    }
    debug_assert!(found.iter().map(|(_, m)| m).sum::<usize>() <= deg);
    found.sort();
    Ok(found)
}

/// `p / (λ − r)` if the division is exact.
fn divide_linear(p: &Poly<RatFunc>, r: &RatFunc) -> Option<Poly<RatFunc>> {
    let cs = p.coeffs();
    if cs.len() < 2 {
        return None;
    }
    let mut out = vec![RatFunc::zero(); cs.len() - 1];
    let mut carry = RatFunc::zero();
    for i in (1..cs.len()).rev() {
        carry = cs[i].add(&carry.mul(r));
        out[i - 1] = carry.clone();
    }
    let rem = cs[0].add(&carry.mul(r));
    rem.is_zero().then(|| Poly::new(out))
}

fn truncate(p: &QPoly, len: usize) -> QPoly {
    QPoly::new(p.coeffs().iter().take(len).cloned().collect())
}
