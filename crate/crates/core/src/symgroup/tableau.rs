//! Standard Young tableaux and Young's seminormal form.

use alloc::vec::Vec;

use super::partition::Partition;
use super::perm::Permutation;
use crate::field::{Field, Rational};
use crate::linalg::Matrix;

/// A standard tableau, stored as the 0-based `(row, column)` of each entry.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StandardTableau {
    pos: Vec<(usize, usize)>,
}

impl StandardTableau {
    /// Position of the 1-based entry `k`.
    pub fn position(&self, k: usize) -> (usize, usize) {
        self.pos[k - 1]
    }

    /// Content `column − row` of the 1-based entry `k`.
    pub fn content(&self, k: usize) -> i64 {
        let (r, c) = self.pos[k - 1];
        c as i64 - r as i64
    }

    pub fn contents(&self) -> Vec<i64> {
        (1..=self.pos.len()).map(|k| self.content(k)).collect()
    }

    /// The tableau with `j` and `j+1` exchanged (not necessarily standard).
    pub fn swapped(&self, j: usize) -> Self {
        let mut pos = self.pos.clone();
        pos.swap(j - 1, j);
        StandardTableau { pos }
    }
}

/// All standard tableaux of shape `λ`, in last-letter order: the tableaux
/// are grouped by the row holding the largest entry, then recursively.
pub fn standard_tableaux(lambda: &Partition) -> Vec<StandardTableau> {
    if lambda.is_empty() {
        return alloc::vec![StandardTableau { pos: Vec::new() }];
    }
    let mut out = Vec::new();
    for r in lambda.removable_rows() {
        let c = lambda.part(r) - 1;
        for mut t in standard_tableaux(&lambda.remove_from_row(r)) {
            t.pos.push((r, c));
            out.push(t);
        }
    }
    out
}

/// How a simple transposition meets a tableau.
pub(crate) enum SimpleAction {
    SameRow,
    SameColumn,
    /// `j` and `j+1` in different rows and columns; partner index, axial
    /// distance `c(j+1) − c(j)`, and whether this tableau is the lower
    /// member of the pair (`j+1` strictly below `j`).
    Pair { partner: usize, axial: i64, lower: bool },
}

pub(crate) fn simple_action(tabs: &[StandardTableau], a: usize, j: usize) -> SimpleAction {
    let t = &tabs[a];
    let (rj, cj) = t.position(j);
    let (rk, ck) = t.position(j + 1);
    if rj == rk {
        SimpleAction::SameRow
    } else if cj == ck {
        SimpleAction::SameColumn
    } else {
        let s = t.swapped(j);
        let partner = tabs.iter().position(|u| *u == s).expect("swap of a standard tableau is standard");
        SimpleAction::Pair { partner, axial: t.content(j + 1) - t.content(j), lower: rk > rj }
    }
}

/// Young's seminormal form of the irreducible `ℚ[S_n]`-module `σ_λ`.
#[derive(Clone, Debug)]
pub struct SeminormalRep {
    partition: Partition,
    tableaux: Vec<StandardTableau>,
    gens: Vec<Matrix<Rational>>,
}

impl SeminormalRep {
    pub fn new(lambda: &Partition) -> Self {
        let tabs = standard_tableaux(lambda);
        let d = tabs.len();
        let n = lambda.size();
        let mut gens = Vec::new();
        for j in 1..n {
            let mut m = Matrix::<Rational>::zeros(d, d);
            for a in 0..d {
                match simple_action(&tabs, a, j) {
                    SimpleAction::SameRow => m.set(a, a, Rational::one()),
                    SimpleAction::SameColumn => m.set(a, a, Rational::one().negate()),
                    SimpleAction::Pair { partner, axial, lower } => {
                        let inv = Field::recip(&Rational::from_int(axial)).unwrap();
                        m.set(a, a, inv.clone());
                        let off = if lower { Rational::one() } else { Rational::one().minus(&inv.times(&inv)) };
                        m.set(partner, a, off);
                    }
                }
            }
            gens.push(m);
        }
        SeminormalRep { partition: lambda.clone(), tableaux: tabs, gens }
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn rank(&self) -> usize {
        self.partition.size()
    }

    pub fn tableaux(&self) -> &[StandardTableau] {
        &self.tableaux
    }

    /// Matrix of `s_j` (1-based).
    pub fn generator(&self, j: usize) -> &Matrix<Rational> {
        &self.gens[j - 1]
    }

    pub fn generators(&self) -> &[Matrix<Rational>] {
        &self.gens
    }

    /// Matrix of an arbitrary permutation, via a reduced word.
    pub fn matrix_of(&self, w: &Permutation) -> Matrix<Rational> {
        w.reduced_word()
            .iter()
            .fold(Matrix::identity(self.dim()), |acc, &j| acc.mul(&self.gens[j - 1]))
    }
}

pub fn seminormal_rep(lambda: &Partition) -> SeminormalRep {
    SeminormalRep::new(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_and_sign() {
        let triv = seminormal_rep(&Partition::row(4));
        assert_eq!(triv.dim(), 1);
        assert!(triv.generators().iter().all(Matrix::is_identity));
        let sign = seminormal_rep(&Partition::column(3));
        assert!(sign.generators().iter().all(|m| m.neg().is_identity()));
        assert_eq!(seminormal_rep(&"2,1".parse().unwrap()).dim(), 2);
    }

    #[test]
    fn coxeter_relations_hold() {
        for n in 1..=6 {
            for lam in Partition::all(n) {
                let rep = seminormal_rep(&lam);
                assert_eq!(rep.dim() as u128, lam.hook_dimension());
                for j in 1..n {
                    let s = rep.generator(j);
                    assert!(s.mul(s).is_identity(), "{lam} s{j}^2");
                    if j + 1 < n {
                        let t = rep.generator(j + 1);
                        assert_eq!(s.mul(t).mul(s), t.mul(s).mul(t), "{lam} braid {j}");
                    }
                    for k in j + 2..n {
                        let t = rep.generator(k);
                        assert_eq!(s.mul(t), t.mul(s));
                    }
                }
            }
        }
    }
}
