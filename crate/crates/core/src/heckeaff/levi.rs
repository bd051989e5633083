//! Index-shifting embeddings of Levi subalgebras.

use crate::error::{Error, Result};
use crate::symgroup::coset::{block_offsets, validate_composition};

/// Generator labels of `H_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    /// `T_j`, 1-based.
    T(usize),
    /// `x_k = θ_{ε_k}`, 1-based.
    X(usize),
}

/// The embedding `H_{n_1} ⊗ ⋯ ⊗ H_{n_m} → H_n` shifting the generators of
/// factor `b` by `n_1 + ⋯ + n_{b−1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviEmbedding {
    comp: alloc::vec::Vec<usize>,
}

impl LeviEmbedding {
    pub fn new(comp: &[usize]) -> Result<Self> {
        validate_composition(comp.iter().sum(), comp)?;
        Ok(LeviEmbedding { comp: comp.to_vec() })
    }

    /// Image of a generator of factor `block` (0-based).
    pub fn map(&self, block: usize, g: Generator) -> Result<Generator> {
        let size = *self
            .comp
            .get(block)
            .ok_or(Error::IndexOutOfRange { index: block as i64, bound: self.comp.len() })?;
        let off = block_offsets(&self.comp)[block];
        match g {
            Generator::T(j) if j >= 1 && j < size => Ok(Generator::T(j + off)),
            Generator::X(k) if k >= 1 && k <= size => Ok(Generator::X(k + off)),
            Generator::T(j) | Generator::X(j) => Err(Error::IndexOutOfRange { index: j as i64, bound: size }),
        }
    }
}

/// The embedding `H_{n−i} ⊗ H_i → H_n`. For `i = 0` or `i = n` one factor
/// is `H_0 = ℚ(q)` and the map is onto the other.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwoBlockEmbedding {
    n: usize,
    i: usize,
}

pub fn levi_embed(n: usize, i: usize) -> Result<TwoBlockEmbedding> {
    if i > n {
        return Err(Error::IndexOutOfRange { index: i as i64, bound: n });
    }
    Ok(TwoBlockEmbedding { n, i })
}

impl TwoBlockEmbedding {
    /// `g ⊗ 1 ↦ g`.
    pub fn left(&self, g: Generator) -> Result<Generator> {
        let size = self.n - self.i;
        match g {
            Generator::T(j) if j >= 1 && j < size => Ok(g),
            Generator::X(k) if k >= 1 && k <= size => Ok(g),
            Generator::T(j) | Generator::X(j) => Err(Error::IndexOutOfRange { index: j as i64, bound: size }),
        }
    }

    /// `1 ⊗ T_j ↦ T_{j+n−i}` and `1 ⊗ x_j ↦ x_{j+n−i}`.
    pub fn right(&self, g: Generator) -> Result<Generator> {
        let off = self.n - self.i;
        match g {
            Generator::T(j) if j >= 1 && j < self.i => Ok(Generator::T(j + off)),
            Generator::X(k) if k >= 1 && k <= self.i => Ok(Generator::X(k + off)),
            Generator::T(j) | Generator::X(j) => Err(Error::IndexOutOfRange { index: j as i64, bound: self.i }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shifts() {
        let e = levi_embed(5, 2).unwrap();
        assert_eq!(e.right(Generator::T(1)).unwrap(), Generator::T(4));
        assert_eq!(e.left(Generator::T(2)).unwrap(), Generator::T(2));
        assert_eq!(e.right(Generator::X(1)).unwrap(), Generator::X(4));
        assert!(e.right(Generator::T(2)).is_err());
        assert!(levi_embed(3, 4).is_err());
        let full = levi_embed(3, 3).unwrap();
        assert_eq!(full.right(Generator::T(2)).unwrap(), Generator::T(2));
        let l = LeviEmbedding::new(&[2, 1, 2]).unwrap();
        assert_eq!(l.map(2, Generator::T(1)).unwrap(), Generator::T(4));
        assert!(l.map(1, Generator::T(1)).is_err());
    }
}
