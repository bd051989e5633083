//! Rank-one structures: `H_2`-module structures on `A_2` whose restriction
//! to `H_{S_2}` is free of rank one with generator `1`, classified through
//! the functional equation `f(x) f(x^{-1}) = (q−1) f̃(x) + q`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactalg::{LaurentPoly, Poly, RatFunc};
use crate::heckeaff::gelfand_graev::PolynomialModule;
use crate::linalg::roots_in_ratfunc;

fn require_univariate(f: &LaurentPoly) -> Result<()> {
    if f.nvars() != 1 {
        return Err(Error::MultivariateInput);
    }
    Ok(())
}

fn tilde_monomial(m: i32) -> LaurentPoly {
    if m >= 0 {
        LaurentPoly::from_terms(1, (-m..=m).map(|e| (RatFunc::one(), vec![e])))
    } else {
        LaurentPoly::from_terms(1, (m + 1..=-m - 1).map(|e| (RatFunc::from_int(-1), vec![e])))
    }
}

/// `f̃`, extended linearly from its values on monomials.
pub fn tilde_transform(f: &LaurentPoly) -> Result<LaurentPoly> {
    require_univariate(f)?;
    let mut out = LaurentPoly::zero(1);
    for (e, c) in f.terms() {
        out = out.add(&tilde_monomial(e[0]).scale(c));
    }
    Ok(out)
}

/// `f(x^{-1})` for a one-variable `f`.
fn invert_variable(f: &LaurentPoly) -> LaurentPoly {
    LaurentPoly::from_terms(1, f.terms().map(|(e, c)| (c.clone(), vec![-e[0]])))
}

/// `f_m^λ`: `(q−1)(1 + … + x^{m−1}) + λx^m` for `m ≥ 0` and
/// `−(q−1)(x^{−1} + … + x^{m+1}) − λx^m` for `m < 0`.
pub fn f_m_lambda(m: i32, lambda: &RatFunc) -> LaurentPoly {
    let qm1 = RatFunc::q().sub(&RatFunc::one());
    let mut terms: Vec<(RatFunc, Vec<i32>)> = Vec::new();
    if m >= 0 {
        terms.extend((0..m).map(|e| (qm1.clone(), vec![e])));
        terms.push((lambda.clone(), vec![m]));
    } else {
        terms.extend((m + 1..0).map(|e| (qm1.neg(), vec![e])));
        terms.push((lambda.neg(), vec![m]));
    }
    LaurentPoly::from_terms(1, terms)
}

/// The expected classification for window `d`, ordered by `m` then `λ ∈ (−1, q)`.
pub fn expected_rank1_structures(d: u32) -> Vec<LaurentPoly> {
    let d = d as i32;
    let lambdas = [RatFunc::from_int(-1), RatFunc::q()];
    (-d..=d).flat_map(|m| lambdas.iter().map(move |l| f_m_lambda(m, l))).collect()
}

/// Whether `f` satisfies the functional equation, evaluated through `f̃`.
pub fn satisfies_functional_equation(f: &LaurentPoly) -> Result<bool> {
    require_univariate(f)?;
    let q = RatFunc::q();
    let lhs = f.mul(&invert_variable(f));
    let rhs = tilde_transform(f)?.scale(&q.sub(&RatFunc::one())).add(&LaurentPoly::constant(1, q));
    Ok(lhs == rhs)
}

/// `F(x_1, x_2) = f(x_2/x_1)`.
pub fn two_variable_form(f: &LaurentPoly) -> Result<LaurentPoly> {
    require_univariate(f)?;
    Ok(LaurentPoly::from_terms(2, f.terms().map(|(e, c)| (c.clone(), vec![-e[0], e[0]]))))
}

/// The same equation checked in two variables without `f̃`:
/// `F F^{s} = (q−1)(x_1 F^{s} − x_2 F)/(x_1 − x_2) + q`, with exact division.
pub fn satisfies_functional_equation_bivariate(f: &LaurentPoly) -> Result<bool> {
    let big = two_variable_form(f)?;
    let bs = big.swap(1);
    let x1 = LaurentPoly::var(2, 1, 1);
    let x2 = LaurentPoly::var(2, 2, 1);
    let num = x1.mul(&bs).sub(&x2.mul(&big));
    let Some(quot) = num.div_exact(&x1.sub(&x2)) else {
        return Ok(false);
    };
    let q = RatFunc::q();
    let rhs = quot.scale(&q.sub(&RatFunc::one())).add(&LaurentPoly::constant(2, q));
    Ok(big.mul(&bs) == rhs)
}

/// Coefficients of `x^j` in `f f(x^{-1}) − (q−1) f̃ − q`, where the
/// coefficient of `x^{support[i]}` in `f` is the unknown `a_{i+1}`.
fn residual_system(support: &[i32]) -> BTreeMap<i32, LaurentPoly> {
    let k = support.len();
    let q = RatFunc::q();
    let qm1 = q.sub(&RatFunc::one());
    let mut eqs: BTreeMap<i32, LaurentPoly> = BTreeMap::new();
    let mut add = |j: i32, p: LaurentPoly| {
        let e = eqs.entry(j).or_insert_with(|| LaurentPoly::zero(k));
        *e = e.add(&p);
    };
    for (a, &ea) in support.iter().enumerate() {
        for (b, &eb) in support.iter().enumerate() {
            add(ea - eb, LaurentPoly::var(k, a + 1, 1).mul(&LaurentPoly::var(k, b + 1, 1)));
        }
        for (e, c) in tilde_monomial(ea).terms() {
            add(e[0], LaurentPoly::var(k, a + 1, 1).scale(&c.mul(&qm1)).neg());
        }
    }
    add(0, LaurentPoly::constant(k, q).neg());
    eqs.retain(|_, p| !p.is_zero());
    eqs
}

/// Solve `α·a + β = 0` where `p` involves only the unknown `a_var`, linearly.
fn solve_linear(p: &LaurentPoly, var: usize) -> Result<RatFunc> {
    let mut alpha = RatFunc::zero();
    let mut beta = RatFunc::zero();
    for (e, c) in p.terms() {
        let others = e.iter().enumerate().all(|(i, &x)| i + 1 == var || x == 0);
        match (others, e[var - 1]) {
            (true, 0) => beta = c.clone(),
            (true, 1) => alpha = c.clone(),
            _ => return Err(Error::Inconsistent(format!("equation {p} is not linear in a{var}"))),
        }
    }
    if alpha.is_zero() {
        return Err(Error::Inconsistent(format!("equation {p} does not determine a{var}")));
    }
    Ok(beta.neg().div(&alpha).expect("nonzero"))
}

/// Solutions of the functional equation whose extreme exponent is exactly `m`
/// and whose support lies between `0` and `m`.
fn solve_for_extreme(m: i32) -> Result<Vec<LaurentPoly>> {
    let support: Vec<i32> = if m >= 0 { (0..=m).collect() } else { (m..=0).rev().collect() };
    let k = support.len();
    let var_of = |e: i32| support.iter().position(|&s| s == e).expect("in support") + 1;
    let lead = var_of(m);
    let u = LaurentPoly::var(k, lead, 1);
    let eqs = residual_system(&support);
    let mut known: Vec<(usize, RatFunc)> = Vec::new();
    let subst_all = |p: &LaurentPoly, known: &[(usize, RatFunc)]| -> Result<LaurentPoly> {
        known.iter().try_fold(p.clone(), |acc, (v, val)| acc.substitute(*v, val))
    };

    // Equations at x^j for j from m toward 0; each factors as u·(linear in the
    // coefficient of x^{m−j}) once the earlier coefficients are substituted.
    let step = if m >= 0 { -1 } else { 1 };
    let mut j = m;
    while j != 0 {
        let target = var_of(m - j);
        let p = subst_all(eqs.get(&j).unwrap_or(&LaurentPoly::zero(k)), &known)?;
        let reduced = p
            .div_exact(&u)
            .ok_or_else(|| Error::Inconsistent(format!("equation at x^{j} is not divisible by the leading coefficient")))?;
        known.push((target, solve_linear(&reduced, target)?));
        j += step;
    }

    let last = subst_all(eqs.get(&0).unwrap_or(&LaurentPoly::zero(k)), &known)?;
    let mut coeffs = vec![RatFunc::zero(); 3];
    for (e, c) in last.terms() {
        let d = e[lead - 1];
        if !(0..=2).contains(&d) || e.iter().enumerate().any(|(i, &x)| i + 1 != lead && x != 0) {
            return Err(Error::Inconsistent(format!("leading equation {last} is not quadratic")));
        }
        coeffs[d as usize] = c.clone();
    }
    let quadratic = Poly::new(coeffs);
    if quadratic.degree().is_none() {
        return Err(Error::Inconsistent("leading coefficient undetermined".into()));
    }

    let mut out = Vec::new();
    for (root, _) in roots_in_ratfunc(&quadratic)? {
        if root.is_zero() {
            continue;
        }
        let mut values = known.clone();
        values.push((lead, root));
        for p in eqs.values() {
            if !subst_all(p, &values)?.is_zero() {
                return Err(Error::Inconsistent(format!("residual {p} survives")));
            }
        }
        let f = LaurentPoly::from_terms(
            1,
            values.iter().map(|(v, val)| (val.clone(), vec![support[v - 1]])),
        );
        out.push(f);
    }
    Ok(out)
}

/// All solutions of the functional equation supported in `[−d, d]`, ordered
/// by extreme exponent and then by `λ`.
///
/// Every solution has support between `0` and its extreme exponent, so for
/// each `m` the unknown coefficients are eliminated from the top equation down.
pub fn solve_rank1_structures(d: u32) -> Result<Vec<LaurentPoly>> {
    let d = d as i32;
    let mut out = Vec::new();
    for m in -d..=d {
        let mut sols = solve_for_extreme(m)?;
        // λ = −1 before λ = q.
        let minus_one = RatFunc::from_int(-1);
        sols.sort_by_key(|f| {
            let c = f.coeff(&[m]);
            let lambda = if m >= 0 { c } else { c.neg() };
            lambda != minus_one
        });
        out.extend(sols);
    }
    Ok(out)
}

/// The `H_2`-structure on `A_2` determined by `f`:
/// `T_1 h = h^{s} f(x_2/x_1) + (q−1) D_1(h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rank1Structure {
    f: LaurentPoly,
    big: LaurentPoly,
    q: RatFunc,
}

impl Rank1Structure {
    pub fn new(f: &LaurentPoly) -> Result<Self> {
        Ok(Rank1Structure { f: f.clone(), big: two_variable_form(f)?, q: RatFunc::q() })
    }

    pub fn f(&self) -> &LaurentPoly {
        &self.f
    }
}

impl PolynomialModule for Rank1Structure {
    fn rank(&self) -> usize {
        2
    }

    fn q(&self) -> &RatFunc {
        &self.q
    }

    fn apply_t(&self, j: usize, h: &LaurentPoly) -> Result<LaurentPoly> {
        if j != 1 {
            return Err(Error::InvalidGenerator(format!("T{j} in rank 2")));
        }
        if h.nvars() != 2 {
            return Err(Error::VariableCountMismatch { left: 2, right: h.nvars() });
        }
        let d = h.divided_difference(1)?.scale(&self.q.sub(&RatFunc::one()));
        Ok(h.swap(1).mul(&self.big).add(&d))
    }
}

/// Smallest `|m| ≤ bound` (trying `0, 1, −1, 2, −2, …`) with `g·x_2^m` a
/// `T_1`-eigenvector, together with its eigenvalue.
pub fn eigen_monomial_search(s: &Rank1Structure, g: &LaurentPoly, bound: u32) -> Result<(i32, RatFunc)> {
    let (ge, gc) = g
        .as_monomial()
        .ok_or_else(|| Error::NotInvertible(format!("{g} is not a monomial")))?;
    if g.nvars() != 2 {
        return Err(Error::VariableCountMismatch { left: 2, right: g.nvars() });
    }
    let (ge, gc) = (ge.clone(), gc.clone());
    let bound = bound as i32;
    let candidates = core::iter::once(0).chain((1..=bound).flat_map(|m| [m, -m]));
    for m in candidates {
        let v = LaurentPoly::monomial(gc.clone(), vec![ge[0], ge[1] + m]);
        let tv = s.apply_t(1, &v)?;
        let lambda = tv.coeff(&[ge[0], ge[1] + m]).div(&gc).expect("nonzero monomial");
        if tv == v.scale(&lambda) {
            return Ok((m, lambda));
        }
    }
    Err(Error::NoEigenMonomial(bound))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse_laurent;
    use crate::heckeaff::gelfand_graev::windowed_audit;

    fn lp(s: &str) -> LaurentPoly {
        parse_laurent(s, 1).unwrap()
    }

    #[test]
    fn tilde_examples() {
        assert_eq!(tilde_transform(&lp("1")).unwrap(), lp("1"));
        assert_eq!(tilde_transform(&lp("x")).unwrap(), lp("x + 1 + x^-1"));
        assert_eq!(tilde_transform(&lp("x^-1")).unwrap(), lp("-1"));
        assert!(tilde_transform(&LaurentPoly::one(2)).is_err());
    }

    #[test]
    fn tilde_agrees_with_quotient() {
        for m in -4..=4 {
            let f = LaurentPoly::var(1, 1, m);
            let big = two_variable_form(&f).unwrap();
            let x1 = LaurentPoly::var(2, 1, 1);
            let x2 = LaurentPoly::var(2, 2, 1);
            let quot = x1.mul(&big.swap(1)).sub(&x2.mul(&big)).div_exact(&x1.sub(&x2)).unwrap();
            assert_eq!(quot, two_variable_form(&tilde_transform(&f).unwrap()).unwrap(), "m = {m}");
        }
    }

    #[test]
    fn classification() {
        assert_eq!(solve_rank1_structures(0).unwrap(), vec![lp("-1"), lp("q")]);
        let sols = solve_rank1_structures(3).unwrap();
        assert_eq!(sols.len(), 14);
        assert_eq!(sols, expected_rank1_structures(3));
        for f in &sols {
            assert!(satisfies_functional_equation(f).unwrap());
            assert!(satisfies_functional_equation_bivariate(f).unwrap());
        }
        assert!(satisfies_functional_equation(&lp("(q-1) - x")).unwrap());
        assert!(!satisfies_functional_equation(&lp("q - x")).unwrap());
        assert!(!satisfies_functional_equation_bivariate(&lp("x + 1")).unwrap());
    }

    #[test]
    fn structures_satisfy_relations() {
        for f in expected_rank1_structures(2) {
            let s = Rank1Structure::new(&f).unwrap();
            assert!(windowed_audit(&s, 2).all_passed(), "{f}");
        }
        let bad = Rank1Structure::new(&lp("x + 1")).unwrap();
        assert!(!windowed_audit(&bad, 1).all_passed());
    }

    #[test]
    fn eigen_monomials() {
        let one = LaurentPoly::one(2);
        let m1 = RatFunc::from_int(-1);
        let s = Rank1Structure::new(&f_m_lambda(0, &m1)).unwrap();
        assert_eq!(eigen_monomial_search(&s, &one, 3).unwrap(), (0, m1.clone()));
        let s = Rank1Structure::new(&f_m_lambda(1, &m1)).unwrap();
        assert_eq!(eigen_monomial_search(&s, &one, 3).unwrap().0, 1);
        let s = Rank1Structure::new(&f_m_lambda(0, &RatFunc::q())).unwrap();
        assert_eq!(eigen_monomial_search(&s, &one, 3).unwrap(), (0, RatFunc::q()));
        for f in expected_rank1_structures(3) {
            let s = Rank1Structure::new(&f).unwrap();
            let g = parse_laurent("x1^2*x2^-1", 2).unwrap();
            assert!(eigen_monomial_search(&s, &g, 6).is_ok(), "{f}");
        }
    }
}
