use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactalg::RatFunc;
use crate::heckeaff::AffineModule;
use crate::heckefin::FiniteHecke;
use crate::linalg::Matrix;
use crate::symgroup::coset::block_offsets;

/// Matrix of the sign projector of `H_{S_i}` placed on positions
/// `offset+1..offset+i`.
fn shifted_sign_projector(m: &AffineModule, i: usize, offset: usize) -> Result<Matrix<RatFunc>> {
    let proj = FiniteHecke::with_q(i, m.q().clone()).sign_projector()?;
    let mut acc = Matrix::zeros(m.dim(), m.dim());
    for (w, c) in proj.terms() {
        acc = acc.add(&m.t_perm(&w.shifted(m.rank(), offset))?.scale(c));
    }
    Ok(acc)
}

/// Restrict to the image of `proj`, keeping in block `b` the generators on
/// its first `keep[b]` positions.
fn keep_leading(m: &AffineModule, proj: &Matrix<RatFunc>, keep: &[usize]) -> Result<AffineModule> {
    let cols = proj.column_basis();
    let basis = Matrix::from_columns(m.dim(), &cols);
    let d = cols.len();
    let restrict = |a: &Matrix<RatFunc>| -> Result<Matrix<RatFunc>> {
        if d == 0 {
            Ok(Matrix::zeros(0, 0))
        } else {
            a.restrict_to(&basis)
        }
    };
    let offsets = block_offsets(m.comp());
    let mut comp = Vec::new();
    let mut t = Vec::new();
    let mut theta = Vec::new();
    for (b, &k) in keep.iter().enumerate() {
        if k == 0 {
            continue;
        }
        if !comp.is_empty() {
            t.push(None);
        }
        comp.push(k);
        for pos in 0..k {
            let g = offsets[b] + pos + 1;
            theta.push(restrict(m.theta(g))?);
            if pos + 1 < k {
                t.push(Some(restrict(m.t_required(g)?)?));
            }
        }
    }
    if comp.is_empty() {
        return Ok(AffineModule::rank_zero(d, m.q().clone()));
    }
    AffineModule::new_levi(comp, d, m.q().clone(), t, theta)
}

fn check_index(comp: &[usize], index: &[usize]) -> Result<()> {
    if index.len() != comp.len() {
        return Err(Error::RankMismatch { expected: comp.len(), found: index.len() });
    }
    for (&i, &n) in index.iter().zip(comp) {
        if i > n {
            return Err(Error::IndexOutOfRange { index: i as i64, bound: n });
        }
    }
    Ok(())
}

/// `BZ_𝐢`: the image of the product of the sign projectors of the last
/// `i_k` positions of each block, as a module over `H_{𝐧−𝐢}`.
pub fn bz_multi(m: &AffineModule, index: &[usize]) -> Result<AffineModule> {
    check_index(m.comp(), index)?;
    let offsets = block_offsets(m.comp());
    let mut proj = Matrix::identity(m.dim());
    for (b, (&i, &n)) in index.iter().zip(m.comp()).enumerate() {
        if i > 1 {
            proj = proj.mul(&shifted_sign_projector(m, i, offsets[b] + n - i)?);
        }
    }
    let keep: Vec<usize> = m.comp().iter().zip(index).map(|(n, i)| n - i).collect();
    keep_leading(m, &proj, &keep)
}

/// `BZ_i` of an `H_n`-module, a module over `H_{n−i}`.
pub fn bz(m: &AffineModule, i: usize) -> Result<AffineModule> {
    if !m.is_full() {
        return Err(Error::InvalidComposition(format!("{:?} is not a single block", m.comp())));
    }
    if i > m.rank() {
        return Err(Error::IndexOutOfRange { index: i as i64, bound: m.rank() });
    }
    if m.rank() == 0 {
        return Ok(m.clone());
    }
    bz_multi(m, &[i])
}

/// Dimension of the sign-isotypic part of the `H_{S_n}`-restriction.
pub fn whittaker_dim(m: &AffineModule) -> Result<usize> {
    if !m.is_full() {
        return Err(Error::InvalidComposition(format!("{:?} is not a single block", m.comp())));
    }
    Ok(shifted_sign_projector(m, m.rank(), 0)?.rank())
}
