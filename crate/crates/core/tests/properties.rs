use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use hecke_bz::derivatives::{gbz, whittaker_dim};
use hecke_bz::exactalg::{parse_laurent, parse_ratfunc, LaurentPoly};
use hecke_bz::field::rat;
use hecke_bz::heckeaff::{aff_mul, principal_series, steinberg_module, AffHeckeElem};
use hecke_bz::heckefin::sign_multiplicity;
use hecke_bz::heckegrad::{speh_module, SpehDatum};
use hecke_bz::symgroup::{branching_multiplicity, seminormal_rep, vertical_strip_removals, Partition, Permutation};
use hecke_bz::RatFunc;
use proptest::prelude::*;

fn coeff() -> impl Strategy<Value = RatFunc> {
    (-4i64..=4, 1i64..=3, 0i32..=2, prop::bool::ANY).prop_map(|(a, b, k, shift)| {
        let c = RatFunc::constant(rat(a, b)).mul(&RatFunc::q_pow(k));
        if shift {
            c.add(&RatFunc::one())
        } else {
            c
        }
    })
}

fn laurent(n: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((coeff(), prop::collection::vec(-2i32..=2, n)), 0..4)
        .prop_map(move |terms| LaurentPoly::from_terms(n, terms))
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (coeff(), coeff(), coeff()).prop_filter_map("nonzero denominator", |(a, b, c)| {
        a.add(&b.mul(&RatFunc::q())).div(&c.add(&RatFunc::q_pow(2)))
    })
}

fn hash_of<T: Hash>(x: &T) -> u64 {
    let mut h = DefaultHasher::new();
    x.hash(&mut h);
    h.finish()
}

fn aff_monomial(n: usize) -> impl Strategy<Value = AffHeckeElem> {
    let perms = Permutation::all(n);
    (prop::collection::vec(-1i32..=1, n), 0..perms.len(), coeff())
        .prop_map(move |(e, w, c)| AffHeckeElem::term(LaurentPoly::theta(&e).scale(&c), perms[w].clone()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn laurent_ring_axioms(a in laurent(2), b in laurent(2), c in laurent(2)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).sub(&b), a);
    }

    #[test]
    fn ratfunc_field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        if let Some(inv) = b.inv() {
            prop_assert_eq!(a.mul(&b).mul(&inv), a.clone());
        }
        prop_assert_eq!(parse_ratfunc(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn canonical_forms(a in laurent(3), b in laurent(3)) {
        let round = a.add(&b).sub(&b);
        prop_assert_eq!(hash_of(&round), hash_of(&a));
        prop_assert_eq!(parse_laurent(&a.to_string(), 3).unwrap(), a);
    }

    #[test]
    fn permutation_is_an_involution(f in laurent(3), j in 1usize..3) {
        let s = Permutation::simple(3, j);
        prop_assert_eq!(f.permute(&s).unwrap().permute(&s).unwrap(), f);
    }

    #[test]
    fn divided_difference_leibniz(f in laurent(3), h in laurent(3), j in 1usize..3) {
        let g = h.add(&h.swap(j));
        prop_assert_eq!(f.mul(&g).divided_difference(j).unwrap(), g.mul(&f.divided_difference(j).unwrap()));
        let lhs = f.mul(&h).divided_difference(j).unwrap();
        let rhs = f.divided_difference(j).unwrap().mul(&h).add(&f.swap(j).mul(&h.divided_difference(j).unwrap()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn aff_mul_associative_rank2(a in aff_monomial(2), b in aff_monomial(2), c in aff_monomial(2)) {
        let l = aff_mul(&aff_mul(&a, &b).unwrap(), &c).unwrap();
        let r = aff_mul(&a, &aff_mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn aff_mul_associative_rank3(a in aff_monomial(3), b in aff_monomial(3), c in aff_monomial(3)) {
        let l = aff_mul(&aff_mul(&a, &b).unwrap(), &c).unwrap();
        let r = aff_mul(&a, &aff_mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn whittaker_is_sign_multiplicity(t in prop::collection::vec(1i64..=9, 1..=3), shift in 0i32..=2) {
        let t: Vec<RatFunc> = t.into_iter().map(|v| RatFunc::from_int(v).mul(&RatFunc::q_pow(shift))).collect();
        let m = principal_series(&t, &RatFunc::q()).unwrap();
        let fin = m.finite_restriction().unwrap();
        prop_assert_eq!(whittaker_dim(&m).unwrap() as u64, sign_multiplicity(&fin).unwrap());
    }

    #[test]
    fn graded_parameters_do_not_matter(a in -5i64..=5, b in 1i64..=4, k in -5i64..=5, size in 1usize..=5, pick in 0usize..7) {
        let parts = Partition::all(size);
        let lambda = parts[pick % parts.len()].clone();
        let m = speh_module(&SpehDatum::new(lambda.clone(), rat(k, 1), rat(a, b)));
        prop_assert!(m.relation_certificate().all_passed());
        for i in 0..=size {
            let want: usize = vertical_strip_removals(&lambda, i).unwrap().iter().map(|mu| mu.hook_dimension() as usize).sum();
            prop_assert_eq!(gbz(&m, i).unwrap().dim(), want);
        }
    }
}

#[test]
fn seminormal_relations() {
    for n in 1..=6 {
        for lambda in Partition::all(n) {
            let rep = seminormal_rep(&lambda);
            assert_eq!(rep.dim() as u128, lambda.hook_dimension());
            for j in 1..n {
                let s = rep.generator(j);
                assert!(s.mul(s).is_identity());
                if j + 1 < n {
                    let t = rep.generator(j + 1);
                    assert_eq!(s.mul(t).mul(s), t.mul(s).mul(t), "{lambda} {j}");
                }
            }
        }
    }
}

#[test]
fn pieri_consistency_and_restriction_dimensions() {
    for n in 1..=6 {
        for lambda in Partition::all(n) {
            for i in 0..=n {
                let strips = vertical_strip_removals(&lambda, i).unwrap();
                let mut total = 0u128;
                for mu in Partition::all(n - i) {
                    let col = branching_multiplicity(&lambda, &mu, &Partition::column(i)).unwrap();
                    assert_eq!(col, u64::from(strips.contains(&mu)), "{lambda} {mu} {i}");
                    for nu in Partition::all(i) {
                        let m = branching_multiplicity(&lambda, &mu, &nu).unwrap() as u128;
                        total += m * mu.hook_dimension() * nu.hook_dimension();
                    }
                }
                assert_eq!(total, lambda.hook_dimension(), "{lambda} {i}");
            }
        }
    }
}

#[test]
fn iterated_steinberg_derivatives() {
    use hecke_bz::derivatives::bz;
    let q = RatFunc::q();
    for n in 1..=4 {
        let st = steinberg_module(n, &RatFunc::from_int(2), &q).unwrap();
        for i in 0..=n {
            for j in 0..=n - i {
                assert_eq!(bz(&bz(&st, i).unwrap(), j).unwrap(), bz(&st, i + j).unwrap());
            }
        }
    }
}
