use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::field::Rational;
use crate::heckegrad::{sign_projector_graded, speh_module, GradedModule, SpehDatum};
use crate::linalg::Matrix;
use crate::symgroup::coset::block_offsets;
use crate::symgroup::{vertical_strip_removals, CharacterTable, Partition};

use super::report::{DerivativeReport, Summand};

/// `gBZ_𝐢`: image of the graded sign projectors on the last `i_k` positions
/// of each block, as a module over `ℍ_{𝐧−𝐢}`.
pub fn gbz_multi(m: &GradedModule, index: &[usize]) -> Result<GradedModule> {
    if index.len() != m.comp().len() {
        return Err(Error::RankMismatch { expected: m.comp().len(), found: index.len() });
    }
    let offsets = block_offsets(m.comp());
    let mut proj = Matrix::identity(m.dim());
    for (b, (&i, &n)) in index.iter().zip(m.comp()).enumerate() {
        if i > n {
            return Err(Error::IndexOutOfRange { index: i as i64, bound: n });
        }
        if i > 1 {
            let s = sign_projector_graded(i).shifted(m.rank(), offsets[b] + n - i);
            proj = proj.mul(&m.group_algebra_action(&s)?);
        }
    }
    let cols = proj.column_basis();
    let d = cols.len();
    let basis = Matrix::from_columns(m.dim(), &cols);
    let restrict = |a: &Matrix<Rational>| -> Result<Matrix<Rational>> {
        if d == 0 {
            Ok(Matrix::zeros(0, 0))
        } else {
            a.restrict_to(&basis)
        }
    };
    let mut comp = Vec::new();
    let mut t = Vec::new();
    let mut eps = Vec::new();
    for (b, (&i, &n)) in index.iter().zip(m.comp()).enumerate() {
        let k = n - i;
        if k == 0 {
            continue;
        }
        if !comp.is_empty() {
            t.push(None);
        }
        comp.push(k);
        for pos in 0..k {
            let g = offsets[b] + pos + 1;
            eps.push(restrict(m.eps(g))?);
            if pos + 1 < k {
                t.push(Some(restrict(m.t_required(g)?)?));
            }
        }
    }
    if comp.is_empty() {
        return Ok(GradedModule::rank_zero(d, m.p().clone(), m.kappa().clone()));
    }
    GradedModule::new_levi(comp, d, m.p().clone(), m.kappa().clone(), t, eps)
}

/// `gBZ_i` of an `ℍ_n`-module.
pub fn gbz(m: &GradedModule, i: usize) -> Result<GradedModule> {
    if m.comp().len() > 1 {
        return Err(Error::InvalidComposition(format!("{:?} is not a single block", m.comp())));
    }
    if i > m.rank() {
        return Err(Error::IndexOutOfRange { index: i as i64, bound: m.rank() });
    }
    if m.rank() == 0 {
        return Ok(m.clone());
    }
    gbz_multi(m, &[i])
}

/// Decompose a single-block graded module as an `S_{rank}`-representation.
pub fn decompose_symmetric(m: &GradedModule, table: &mut CharacterTable) -> Result<Vec<(Partition, u64)>> {
    if m.rank() == 0 {
        return Ok(if m.dim() == 0 { Vec::new() } else { alloc::vec![(Partition::empty(), m.dim() as u64)] });
    }
    let chars: Vec<(Partition, Rational)> =
        Partition::all(m.rank()).into_iter().map(|mu| m.character(&mu).map(|c| (mu, c))).collect::<Result<_>>()?;
    table.decompose(m.rank(), |mu| chars.iter().find(|(c, _)| c == mu).map(|(_, v)| v.clone()).expect("all classes"))
}

/// `gBZ_i` of the Speh module, decomposed by characters and compared with
/// the vertical strips of size `i`; also checks that `ε_1` acts by `κ`.
pub fn speh_derivative(d: &SpehDatum, i: usize) -> Result<DerivativeReport> {
    let n = d.partition.size();
    if i > n {
        return Err(Error::IndexOutOfRange { index: i as i64, bound: n });
    }
    let out = gbz(&speh_module(d), i)?;
    let mut table = CharacterTable::new();
    let summands: Vec<Summand> = decompose_symmetric(&out, &mut table)?
        .into_iter()
        .map(|(mu, mult)| {
            let dim = mu.hook_dimension() as usize;
            Summand::new(mu.to_string(), mult, dim)
        })
        .collect();
    let expected = vertical_strip_removals(&d.partition, i)?
        .into_iter()
        .map(|mu| {
            let dim = mu.hook_dimension() as usize;
            Summand::new(mu.to_string(), 1, dim)
        })
        .collect();
    let mut checks = Certificate::default();
    checks.record("graded relations", out.relation_certificate().all_passed());
    if out.rank() > 0 {
        checks.record("eps1 acts by kappa", out.eps(1) == &Matrix::scalar(out.dim(), d.kappa.clone()));
    }
    let input = format!("speh({}; kappa={}, p={})", d.partition, d.kappa, d.p);
    Ok(DerivativeReport::new(input, alloc::vec![i], out.dim(), summands, expected, checks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    fn datum(parts: &[usize]) -> SpehDatum {
        SpehDatum::new(Partition::new(parts.to_vec()).unwrap(), rat(3, 2), rat(1, 1))
    }

    #[test]
    fn examples() {
        let m = speh_module(&datum(&[2, 2]));
        assert_eq!(gbz(&m, 0).unwrap(), m);
        assert_eq!(gbz(&m, 1).unwrap().dim(), 2);
        for i in 0..=4 {
            assert_eq!(gbz(&speh_module(&datum(&[1, 1, 1, 1])), i).unwrap().dim(), 1);
        }
        let r = speh_derivative(&datum(&[2, 2]), 1).unwrap();
        assert!(r.verdict.is_match(), "{:?}", r.verdict);
        assert_eq!(r.summands, alloc::vec![Summand::new("2,1", 1, 2)]);
        let r = speh_derivative(&datum(&[2, 2]), 2).unwrap();
        assert_eq!(r.summands, alloc::vec![Summand::new("1,1", 1, 1)]);
        let r = speh_derivative(&datum(&[3, 1]), 0).unwrap();
        assert_eq!(r.summands, alloc::vec![Summand::new("3,1", 1, 3)]);
        let r = speh_derivative(&datum(&[3, 1]), 4).unwrap();
        assert!(r.verdict.is_match(), "{:?}", r.verdict);
    }

    #[test]
    fn pieri_small() {
        for n in 0..=4 {
            for lambda in Partition::all(n) {
                for i in 0..=n {
                    let r = speh_derivative(&SpehDatum::new(lambda.clone(), rat(0, 1), rat(1, 1)), i).unwrap();
                    assert!(r.verdict.is_match(), "{lambda} {i}: {:?}", r.verdict);
                }
            }
        }
    }
}
