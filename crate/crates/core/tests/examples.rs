//! Worked examples across the library, one test per operation.

use hecke_bz::derivatives::{bz, bz_multi, gbz, whittaker_dim};
use hecke_bz::exactalg::{laurent_mul, parse_laurent, parse_ratfunc, LaurentPoly};
use hecke_bz::field::rat;
use hecke_bz::heckeaff::{
    aff_mul, central_character_decomp, induce, levi_embed, principal_series, steinberg_module, tilde_transform,
    AffHeckeElem, Generator,
};
use hecke_bz::heckefin::{hecke_irrep, FinHeckeElem, FiniteHecke};
use hecke_bz::heckegrad::{speh_module, SpehDatum};
use hecke_bz::symgroup::{
    branching_multiplicity, length_and_reduced_word, min_coset_reps, seminormal_rep, vertical_strip_removals,
    Partition, Permutation,
};
use hecke_bz::RatFunc;

fn lp(s: &str, n: usize) -> LaurentPoly {
    parse_laurent(s, n).unwrap()
}

fn rf(s: &str) -> RatFunc {
    parse_ratfunc(s).unwrap()
}

fn part(p: &[usize]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

#[test]
fn laurent_products() {
    assert_eq!(laurent_mul(&lp("x1", 2), &lp("x1^-1", 2)).unwrap(), LaurentPoly::one(2));
    assert_eq!(
        laurent_mul(&LaurentPoly::theta(&[1, 0]), &LaurentPoly::theta(&[0, 2])).unwrap(),
        LaurentPoly::theta(&[1, 2])
    );
    assert_eq!(laurent_mul(&lp("x1 - x2", 2), &lp("x1 + x2", 2)).unwrap(), lp("x1^2 - x2^2", 2));
    assert!(laurent_mul(&lp("x1", 2), &lp("x1", 3)).is_err());
}

#[test]
fn permutation_action_and_divided_differences() {
    let s1 = Permutation::simple(2, 1);
    assert_eq!(lp("x1", 2).permute(&s1).unwrap(), lp("x2", 2));
    assert_eq!(lp("x1*x2", 2).permute(&s1).unwrap(), lp("x1*x2", 2));
    assert_eq!(LaurentPoly::one(2).divided_difference(1).unwrap(), LaurentPoly::zero(2));
    assert_eq!(lp("x2", 2).divided_difference(1).unwrap(), lp("-x1", 2));
    assert_eq!(lp("x1", 2).divided_difference(1).unwrap(), lp("x1", 2));
    assert_eq!(lp("x1^2*x2^-1 + 1", 2).degree_stats().unwrap(), (1, 0));
    assert_eq!(lp("5", 2).degree_stats().unwrap(), (0, 0));
    assert_eq!(lp("x1*x2", 2).degree_stats().unwrap(), (2, 2));
    assert!(LaurentPoly::zero(2).degree_stats().is_err());
}

#[test]
fn rendering() {
    let f = lp("(q-1)*x1*x2^-1 + q", 2);
    assert_eq!(f.to_string(), "(q-1)*x1*x2^-1 + q");
    assert_eq!(rf("(q-1)/(q+1)").to_string(), "(q-1)/(q+1)");
    let h = FiniteHecke::new(2);
    let t1 = FinHeckeElem::generator(2, 1);
    assert_eq!(h.mul(&t1, &t1).unwrap().to_string(), "(q-1)*T[1] + q*T[]");
}

#[test]
fn coxeter_combinatorics() {
    assert_eq!(length_and_reduced_word(&Permutation::identity(3)), (0, vec![]));
    assert_eq!(length_and_reduced_word(&Permutation::simple(2, 1)), (1, vec![1]));
    let (l, word) = length_and_reduced_word(&Permutation::longest(3));
    assert_eq!(l, 3);
    assert_eq!(Permutation::from_word(3, &word), Permutation::longest(3));
    assert_eq!(min_coset_reps(2, &[1, 1]).unwrap().len(), 2);
    assert_eq!(min_coset_reps(3, &[2, 1]).unwrap().len(), 3);
    assert_eq!(min_coset_reps(4, &[2, 2]).unwrap().len(), 6);
}

#[test]
fn symmetric_group_reps() {
    for j in 1..4 {
        assert!(seminormal_rep(&part(&[4])).generator(j).is_identity());
    }
    for j in 1..3 {
        assert_eq!(seminormal_rep(&part(&[1, 1, 1])).generator(j).get(0, 0), &rat(-1, 1));
    }
    assert_eq!(seminormal_rep(&part(&[2, 1])).dim(), 2);
    assert_eq!(branching_multiplicity(&part(&[2, 2]), &part(&[2, 1]), &part(&[1])).unwrap(), 1);
    assert_eq!(branching_multiplicity(&part(&[5]), &part(&[3]), &part(&[2])).unwrap(), 1);
    assert_eq!(branching_multiplicity(&part(&[2, 2]), &part(&[2]), &part(&[1, 1])).unwrap(), 0);
    assert_eq!(vertical_strip_removals(&part(&[2, 2]), 1).unwrap(), vec![part(&[2, 1])]);
    assert_eq!(vertical_strip_removals(&part(&[2, 2]), 2).unwrap(), vec![part(&[1, 1])]);
    assert_eq!(vertical_strip_removals(&part(&[3, 1]), 0).unwrap(), vec![part(&[3, 1])]);
}

#[test]
fn finite_hecke() {
    let h = FiniteHecke::new(3);
    let t = |w: &[usize]| FinHeckeElem::basis(Permutation::from_word(3, w));
    let q = RatFunc::q();
    assert_eq!(h.mul(&t(&[1]), &t(&[2])).unwrap(), t(&[1, 2]));
    let want = t(&[1, 2, 1]).scale(&q.sub(&RatFunc::one())).add(&t(&[1, 2]).scale(&q));
    assert_eq!(h.mul(&t(&[1, 2, 1]), &t(&[1])).unwrap(), want);
    let s2 = FiniteHecke::new(2).sign_projector().unwrap();
    let t1 = FinHeckeElem::generator(2, 1);
    let want = FinHeckeElem::one(2).scale(&q).sub(&t1).scale(&rf("1/(q+1)"));
    assert_eq!(s2, want);
    assert_eq!(FiniteHecke::new(2).mul(&t1, &s2).unwrap(), s2.neg());
    assert!(FiniteHecke::with_q(2, RatFunc::from_int(-1)).sign_projector().is_err());
    let m = hecke_irrep(&part(&[2, 1]), &q).unwrap();
    let d = m.star_dual();
    assert_eq!(d.character_vector(), m.character_vector());
    assert_eq!(d.star_dual(), m);
}

#[test]
fn affine_hecke() {
    let x1 = AffHeckeElem::poly(lp("x1", 2));
    let t1 = AffHeckeElem::generator(2, 1);
    let want = AffHeckeElem::term(lp("x2", 2), Permutation::simple(2, 1))
        .add(&AffHeckeElem::poly(lp("(q-1)*x1", 2)));
    assert_eq!(aff_mul(&t1, &x1).unwrap(), want);
    let sym = AffHeckeElem::poly(lp("x1 + x2 + x1*x2", 2));
    assert_eq!(aff_mul(&t1, &sym).unwrap(), aff_mul(&sym, &t1).unwrap());
    let e = levi_embed(5, 2).unwrap();
    assert_eq!(e.right(Generator::T(1)).unwrap(), Generator::T(4));
    assert_eq!(e.left(Generator::T(2)).unwrap(), Generator::T(2));
    assert_eq!(e.right(Generator::X(1)).unwrap(), Generator::X(4));
    assert_eq!(tilde_transform(&lp("x", 1)).unwrap(), lp("x + 1 + x^-1", 1));
}

#[test]
fn affine_modules() {
    let q = RatFunc::q();
    let t = [rf("2"), rf("5"), rf("7")];
    let ps = principal_series(&t[..2], &q).unwrap();
    assert_eq!(ps.theta(1).trace(), rf("7"));
    assert_eq!(principal_series(&t, &q).unwrap().dim(), 6);
    let inv = central_character_decomp(&principal_series(&t, &q).unwrap()).unwrap();
    assert_eq!(inv.len(), 1);
    assert_eq!(inv[0].0.merged(), vec![rf("2"), rf("5"), rf("7")]);
    let st = steinberg_module(3, &rf("2"), &q).unwrap();
    let inv = central_character_decomp(&st).unwrap();
    let mut want = vec![rf("2"), rf("2*q"), rf("2*q^2")];
    want.sort();
    assert_eq!(inv[0].0.merged(), want);
    let res = st.restrict_to_levi(&[2, 1]).unwrap();
    let want = steinberg_module(2, &rf("2"), &q).unwrap().outer(&steinberg_module(1, &rf("2*q^2"), &q).unwrap()).unwrap();
    assert_eq!(res, want);
    let chars: Vec<_> = t[..2].iter().map(|c| steinberg_module(1, c, &q).unwrap()).collect();
    assert_eq!(induce(&[1, 1], &chars).unwrap().dim(), 2);
    let sum = ps.direct_sum(&principal_series(&[rf("3"), rf("11")], &q).unwrap()).unwrap();
    assert_eq!(central_character_decomp(&sum).unwrap().len(), 2);
}

#[test]
fn derivatives() {
    let q = RatFunc::q();
    let st = steinberg_module(4, &rf("3"), &q).unwrap();
    assert_eq!(bz(&st, 0).unwrap(), st);
    assert_eq!(bz(&st, 2).unwrap(), steinberg_module(2, &rf("3"), &q).unwrap());
    let pair = st.outer(&steinberg_module(2, &rf("5"), &q).unwrap()).unwrap();
    assert_eq!(bz_multi(&pair, &[1, 2]).unwrap().dim(), 1);
    assert_eq!(whittaker_dim(&principal_series(&[rf("2"), rf("3"), rf("q")], &q).unwrap()).unwrap(), 1);
    let speh = speh_module(&SpehDatum::new(part(&[2, 2]), rat(0, 1), rat(1, 1)));
    assert_eq!(gbz(&speh, 1).unwrap().dim(), 2);
}
