//! Joint generalized eigenspaces of commuting matrices over `ℚ(q)`.

use alloc::format;
use alloc::vec::Vec;

use super::matrix::Matrix;
use super::roots::roots_in_ratfunc;
use crate::error::{Error, Result};
use crate::exactalg::{Poly, RatFunc};

/// A joint generalized eigenspace: one eigenvalue per matrix, and a basis
/// given as columns in the ambient coordinates.
#[derive(Clone, Debug)]
pub struct WeightSpace {
    pub weight: Vec<RatFunc>,
    pub basis: Matrix<RatFunc>,
}

impl WeightSpace {
    pub fn dim(&self) -> usize {
        self.basis.cols()
    }
}

/// Eigenvalues of a square matrix with algebraic multiplicities.
///
/// Fails if some eigenvalue lies outside `ℚ(q)`.
pub fn eigenvalues(a: &Matrix<RatFunc>) -> Result<Vec<(RatFunc, usize)>> {
    let n = a.rows();
    if n == 0 {
        return Ok(Vec::new());
    }
    if let Some(c) = scalar_value(a) {
        return Ok(alloc::vec![(c, n)]);
    }
    let cp = Poly::new(a.charpoly());
    let roots = roots_in_ratfunc(&cp)?;
    let total: usize = roots.iter().map(|(_, m)| m).sum();
    if total != n {
        return Err(Error::Unsupported(format!(
            "characteristic polynomial of degree {n} has only {total} roots in Q(q)"
        )));
    }
    Ok(roots)
}

fn scalar_value(a: &Matrix<RatFunc>) -> Option<RatFunc> {
    let c = a.get(0, 0).clone();
    let n = a.rows();
    let ok = (0..n).all(|i| (0..n).all(|j| if i == j { *a.get(i, j) == c } else { a.get(i, j).is_zero() }));
    ok.then_some(c)
}

/// Simultaneous generalized-eigenspace decomposition of pairwise
/// commuting square matrices of equal size.
pub fn joint_weight_spaces(mats: &[Matrix<RatFunc>], dim: usize) -> Result<Vec<WeightSpace>> {
    let mut out = Vec::new();
    if dim == 0 {
        return Ok(out);
    }
    split(mats, Matrix::identity(dim), Vec::new(), &mut out)?;
    Ok(out)
}

fn split(mats: &[Matrix<RatFunc>], basis: Matrix<RatFunc>, weight: Vec<RatFunc>, out: &mut Vec<WeightSpace>) -> Result<()> {
    let k = weight.len();
    if k == mats.len() {
        out.push(WeightSpace { weight, basis });
        return Ok(());
    }
    let a = mats[k].restrict_to(&basis)?;
    let m = a.rows();
    for (lambda, mult) in eigenvalues(&a)? {
        let sub = if mult == m {
            Matrix::identity(m)
        } else {
            let shifted = a.add_scalar(&lambda.neg()).pow(mult as u32);
            let ker = shifted.kernel();
            if ker.len() != mult {
                return Err(Error::Inconsistent("generalized eigenspace dimension".into()));
            }
            Matrix::from_columns(m, &ker)
        };
        let mut w = weight.clone();
        w.push(lambda);
        split(mats, basis.mul(&sub), w, out)?;
    }
    Ok(())
}
