use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// An integer partition with weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("parts not decreasing: {parts:?}")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 { Self::empty() } else { Partition(vec![n]) }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    /// Sort arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn part(&self, k: usize) -> usize {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Self {
        let cols = self.part(0);
        Partition((0..cols).map(|c| self.0.iter().filter(|&&p| p > c).count()).collect())
    }

    /// Boxes as 0-based `(row, column)` pairs in reading order.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        self.0.iter().enumerate().flat_map(|(r, &p)| (0..p).map(move |c| (r, c))).collect()
    }

    /// Multiset of box contents `column − row`.
    pub fn contents(&self) -> Vec<i64> {
        self.boxes().iter().map(|&(r, c)| c as i64 - r as i64).collect()
    }

    /// Dimension of the irreducible representation by the hook-length formula.
    pub fn hook_dimension(&self) -> u128 {
        let t = self.transpose();
        let mut hooks: u128 = 1;
        for (r, c) in self.boxes() {
            hooks *= (self.0[r] - c + t.0[c] - r - 1) as u128;
        }
        let fact: u128 = (1..=self.size() as u128).product();
        fact / hooks
    }

    /// Rows from which a box can be removed leaving a partition.
    pub fn removable_rows(&self) -> Vec<usize> {
        (0..self.len()).filter(|&r| self.part(r) > self.part(r + 1)).collect()
    }

    pub(crate) fn remove_from_row(&self, r: usize) -> Self {
        let mut p = self.0.clone();
        p[r] -= 1;
        if p[r] == 0 {
            p.pop();
        }
        Partition(p)
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Self> {
        fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=max.min(n)).rev() {
                cur.push(p);
                go(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// `z_λ = Π k^{m_k} m_k!`, the centralizer order of the class of cycle type `λ`.
    pub fn centralizer_order(&self) -> u128 {
        let mut z: u128 = 1;
        let mut i = 0;
        while i < self.len() {
            let k = self.0[i];
            let m = self.0[i..].iter().take_while(|&&p| p == k).count();
            for j in 1..=m {
                z *= k as u128 * j as u128;
            }
            i += m;
        }
        z
    }

    /// Partitions `μ ⊆ λ` with `|λ| − |μ| = i` and at most one box removed per row.
    pub fn vertical_strip_removals(&self, i: usize) -> Result<Vec<Self>> {
        if i > self.size() {
            return Err(Error::IndexOutOfRange { index: i as i64, bound: self.size() });
        }
        let rows = self.len();
        let mut out = Vec::new();
        let mut chosen = vec![false; rows];
        fn go(lam: &Partition, r: usize, left: usize, chosen: &mut Vec<bool>, out: &mut Vec<Partition>) {
            if r == lam.len() {
                if left == 0 {
                    let m: Vec<usize> = (0..lam.len()).map(|k| lam.part(k) - chosen[k] as usize).collect();
                    if m.windows(2).all(|w| w[0] >= w[1]) {
                        out.push(Partition(m.into_iter().filter(|&p| p > 0).collect()));
                    }
                }
                return;
            }
            if left > 0 {
                chosen[r] = true;
                go(lam, r + 1, left - 1, chosen, out);
                chosen[r] = false;
            }
            go(lam, r + 1, left, chosen, out);
        }
        go(self, 0, i, &mut chosen, &mut out);
        out.sort_by(|a, b| b.cmp(a));
        out.dedup();
        Ok(out)
    }
}

/// Free-function form of [`Partition::vertical_strip_removals`].
pub fn vertical_strip_removals(lambda: &Partition, i: usize) -> Result<Vec<Partition>> {
    lambda.vertical_strip_removals(i)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("()");
        }
        let s: Vec<String> = self.0.iter().map(|p| format!("{p}")).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() || t == "()" {
            return Ok(Self::empty());
        }
        let parts = t
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad partition part '{p}'"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}
