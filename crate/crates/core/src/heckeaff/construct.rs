//! Principal series, twisted Steinberg and trivial-type modules.

use alloc::vec::Vec;

use super::module::AffineModule;
use crate::error::{Error, Result};
use crate::exactalg::{LaurentPoly, RatFunc};
use crate::linalg::Matrix;
use crate::symgroup::{min_coset_reps, Permutation};

fn scalar(c: RatFunc) -> Matrix<RatFunc> {
    Matrix::scalar(1, c)
}

/// The one-dimensional module with `T_j = −1` and `θ_{ε_k} = z q^{k−1}`.
pub fn steinberg_module(n: usize, z: &RatFunc, q: &RatFunc) -> Result<AffineModule> {
    one_dimensional(n, z, q, RatFunc::from_int(-1), 1)
}

/// The one-dimensional module with `T_j = q` and `θ_{ε_k} = z q^{−(k−1)}`.
pub fn trivial_type_module(n: usize, z: &RatFunc, q: &RatFunc) -> Result<AffineModule> {
    one_dimensional(n, z, q, q.clone(), -1)
}

fn one_dimensional(n: usize, z: &RatFunc, q: &RatFunc, t: RatFunc, step: i32) -> Result<AffineModule> {
    if z.is_zero() {
        return Err(Error::ZeroEntry("torus parameter z".into()));
    }
    let mut theta = Vec::with_capacity(n);
    for k in 0..n {
        let p = q.pow(step * k as i32).ok_or_else(|| Error::ZeroEntry("q".into()))?;
        theta.push(scalar(z.mul(&p)));
    }
    AffineModule::new(q.clone(), (1..n).map(|_| scalar(t.clone())).collect(), theta)
}

/// `M(t) = H_n ⊗_{A_n} ℂ_t` on the basis `T_w ⊗ 1`, `w ∈ S_n`.
///
/// θ acts through `f T_j T_{w'} = T_j f^{s_j} T_{w'} − (q−1) D_j(f^{s_j}) T_{w'}`,
/// recursing on `l(w)`; `T_j` acts by the finite Hecke rule.
pub fn principal_series(t: &[RatFunc], q: &RatFunc) -> Result<AffineModule> {
    let n = t.len();
    if t.iter().any(RatFunc::is_zero) {
        return Err(Error::ZeroEntry("principal series parameter".into()));
    }
    let basis = min_coset_reps(n, &alloc::vec![1; n])?;
    let d = basis.len();
    let index = |w: &Permutation| basis.iter().position(|u| u == w).expect("all of S_n");
    let qm1 = q.sub(&RatFunc::one());
    let t_action = |j: usize, v: &[RatFunc]| -> Vec<RatFunc> {
        let mut out = alloc::vec![RatFunc::zero(); d];
        for (a, w) in basis.iter().enumerate() {
            if v[a].is_zero() {
                continue;
            }
            let sw = index(&w.left_mul_simple(j));
            if w.has_left_descent(j) {
                out[a] = out[a].add(&v[a].mul(&qm1));
                out[sw] = out[sw].add(&v[a].mul(q));
            } else {
                out[sw] = out[sw].add(&v[a]);
            }
        }
        out
    };
    // act(f, w) = f · (T_w ⊗ 1)
    fn act(
        f: &LaurentPoly,
        w: &Permutation,
        t: &[RatFunc],
        qm1: &RatFunc,
        d: usize,
        index: &dyn Fn(&Permutation) -> usize,
        t_action: &dyn Fn(usize, &[RatFunc]) -> Vec<RatFunc>,
    ) -> Result<Vec<RatFunc>> {
        let mut out = alloc::vec![RatFunc::zero(); d];
        if f.is_zero() {
            return Ok(out);
        }
        let word = w.reduced_word();
        let Some(&j) = word.first() else {
            out[index(w)] = f.eval(t)?;
            return Ok(out);
        };
        let rest = w.left_mul_simple(j);
        let fs = f.swap(j);
        let head = t_action(j, &act(&fs, &rest, t, qm1, d, index, t_action)?);
        let tail = act(&fs.divided_difference(j)?, &rest, t, qm1, d, index, t_action)?;
        for i in 0..d {
            out[i] = head[i].sub(&tail[i].mul(qm1));
        }
        Ok(out)
    }
    let mut theta = Vec::with_capacity(n);
    for k in 1..=n {
        let x = LaurentPoly::var(n, k, 1);
        let cols = basis
            .iter()
            .map(|w| act(&x, w, t, &qm1, d, &index, &t_action))
            .collect::<Result<Vec<_>>>()?;
        theta.push(Matrix::from_columns(d, &cols));
    }
    let gens = (1..n)
        .map(|j| {
            let cols: Vec<Vec<RatFunc>> = (0..d)
                .map(|a| {
                    let mut e = alloc::vec![RatFunc::zero(); d];
                    e[a] = RatFunc::one();
                    t_action(j, &e)
                })
                .collect();
            Matrix::from_columns(d, &cols)
        })
        .collect();
    AffineModule::new(q.clone(), gens, theta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heckeaff::central_character_decomp;

    fn rf(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn steinberg_examples() {
        let q = RatFunc::q();
        let s1 = steinberg_module(1, &rf("5"), &q).unwrap();
        assert_eq!(s1.theta(1).get(0, 0), &rf("5"));
        let s2 = steinberg_module(2, &RatFunc::one(), &q).unwrap();
        assert_eq!(s2.t(1).unwrap().get(0, 0), &rf("-1"));
        assert_eq!(s2.theta(2).get(0, 0), &q);
        assert!(s2.relation_certificate().all_passed());
        assert!(trivial_type_module(3, &rf("2"), &q).unwrap().relation_certificate().all_passed());
    }

    #[test]
    fn non_geometric_one_dimensional_fails() {
        let q = RatFunc::q();
        let bad = AffineModule::new(q, alloc::vec![scalar(rf("-1"))], alloc::vec![scalar(rf("1")), scalar(rf("2"))]).unwrap();
        assert!(!bad.relation_certificate().all_passed());
    }

    #[test]
    fn principal_series_small() {
        let q = RatFunc::q();
        let m = principal_series(&[rf("2"), rf("3*q")], &q).unwrap();
        assert_eq!(m.dim(), 2);
        assert_eq!(m.theta(1).trace(), rf("2+3*q"));
        assert!(m.relation_certificate().all_passed());
        let m3 = principal_series(&[rf("2"), rf("3"), rf("q")], &q).unwrap();
        assert_eq!(m3.dim(), 6);
        assert!(m3.relation_certificate().all_passed());
        assert!(principal_series(&[rf("0")], &q).is_err());
    }

    #[test]
    fn swapped_thetas_break_bernstein() {
        let q = RatFunc::q();
        let m = principal_series(&[rf("2"), rf("3")], &q).unwrap();
        let broken = AffineModule::new(
            q,
            alloc::vec![m.t(1).unwrap().clone()],
            alloc::vec![m.theta(2).clone(), m.theta(1).clone()],
        )
        .unwrap();
        let cert = broken.relation_certificate();
        assert!(cert.failures().any(|c| c.name.starts_with("bernstein")));
    }

    #[test]
    fn central_characters() {
        let q = RatFunc::q();
        let m = principal_series(&[rf("3"), rf("2*q"), rf("5")], &q).unwrap();
        let cc = central_character_decomp(&m).unwrap();
        assert_eq!(cc.len(), 1);
        assert_eq!(cc[0].1, 6);
        let mut expect = alloc::vec![rf("3"), rf("2*q"), rf("5")];
        expect.sort();
        assert_eq!(cc[0].0.merged(), expect);
        let st = steinberg_module(3, &rf("2"), &q).unwrap();
        let cc = central_character_decomp(&st).unwrap();
        let mut expect = alloc::vec![rf("2"), rf("2*q"), rf("2*q^2")];
        expect.sort();
        assert_eq!(cc, alloc::vec![(crate::heckeaff::CentralCharacter { blocks: alloc::vec![expect] }, 1)]);
        let sum = m.direct_sum(&principal_series(&[rf("7"), rf("7"), rf("1/q")], &q).unwrap()).unwrap();
        assert_eq!(central_character_decomp(&sum).unwrap().len(), 2);
    }
}
