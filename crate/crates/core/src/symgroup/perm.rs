use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A permutation of `{1, …, n}`.
///
/// Stored 0-based; the public constructors and `one_line` use 1-based
/// values. Composition is as functions: `(u * v)(i) = u(v(i))`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    img: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { img: (0..n).collect() }
    }

    /// From one-line notation with values `1..=n`.
    pub fn from_one_line(values: &[usize]) -> Result<Self> {
        let n = values.len();
        let mut seen = alloc::vec![false; n];
        let mut img = Vec::with_capacity(n);
        for &v in values {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidGenerator(format!("not a permutation: {values:?}")));
            }
            seen[v - 1] = true;
            img.push(v - 1);
        }
        Ok(Permutation { img })
    }

    pub(crate) fn from_images(img: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = img.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i == v)
        });
        Permutation { img }
    }

    /// The simple transposition `s_j` exchanging `j` and `j+1` (1-based).
    pub fn simple(n: usize, j: usize) -> Self {
        assert!(j >= 1 && j < n, "s{j} is not a simple reflection of S{n}");
        let mut w = Self::identity(n);
        w.img.swap(j - 1, j);
        w
    }

    /// The transposition exchanging `a` and `b` (1-based).
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut w = Self::identity(n);
        w.img.swap(a - 1, b - 1);
        w
    }

    /// Product of simple reflections `s_{a_1} ⋯ s_{a_k}`.
    pub fn from_word(n: usize, word: &[usize]) -> Self {
        let mut w = Self::identity(n);
        for &j in word {
            w = w.right_mul_simple(j);
        }
        w
    }

    pub fn longest(n: usize) -> Self {
        Permutation { img: (0..n).rev().collect() }
    }

    pub fn size(&self) -> usize {
        self.img.len()
    }

    /// Image of a 0-based point.
    pub fn apply(&self, i: usize) -> usize {
        self.img[i]
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.img.iter().map(|v| v + 1).collect()
    }

    pub(crate) fn images(&self) -> &[usize] {
        &self.img
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.size(), other.size());
        Permutation { img: other.img.iter().map(|&i| self.img[i]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut img = alloc::vec![0; self.size()];
        for (i, &v) in self.img.iter().enumerate() {
            img[v] = i;
        }
        Permutation { img }
    }

    /// `s_j · self`: exchanges the values `j` and `j+1`.
    pub fn left_mul_simple(&self, j: usize) -> Self {
        let (a, b) = (j - 1, j);
        Permutation {
            img: self
                .img
                .iter()
                .map(|&v| if v == a { b } else if v == b { a } else { v })
                .collect(),
        }
    }

    /// `self · s_j`: exchanges the entries in positions `j` and `j+1`.
    pub fn right_mul_simple(&self, j: usize) -> Self {
        let mut w = self.clone();
        w.img.swap(j - 1, j);
        w
    }

    /// `l(self · s_j) < l(self)`.
    pub fn has_right_descent(&self, j: usize) -> bool {
        self.img[j - 1] > self.img[j]
    }

    /// `l(s_j · self) < l(self)`.
    pub fn has_left_descent(&self, j: usize) -> bool {
        let inv = self.inverse();
        inv.img[j - 1] > inv.img[j]
    }

    /// Coxeter length, the number of inversions.
    pub fn length(&self) -> usize {
        let n = self.size();
        let mut count = 0;
        for i in 0..n {
            for k in i + 1..n {
                if self.img[i] > self.img[k] {
                    count += 1;
                }
            }
        }
        count
    }

    /// A reduced word `[a_1, …, a_k]` with `self = s_{a_1} ⋯ s_{a_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        'outer: loop {
            for j in 1..w.size() {
                if w.has_right_descent(j) {
                    word.push(j);
                    w = w.right_mul_simple(j);
                    continue 'outer;
                }
            }
            break;
        }
        word.reverse();
        word
    }

    pub fn sign(&self) -> i64 {
        if self.length().is_multiple_of(2) { 1 } else { -1 }
    }

    /// Cycle lengths in decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.size();
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.img[i];
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    /// All of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur = Self::identity(n).img;
        loop {
            out.push(Permutation { img: cur.clone() });
            // next permutation
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
            let k = (i..n).rev().find(|&k| cur[k] > cur[i - 1]).unwrap();
            cur.swap(i - 1, k);
            cur[i..].reverse();
        }
        out
    }

    /// Embed into `S_total`, acting on `offset+1 ..= offset+n`.
    pub fn shifted(&self, total: usize, offset: usize) -> Self {
        let mut img: Vec<usize> = (0..total).collect();
        for (i, &v) in self.img.iter().enumerate() {
            img[offset + i] = offset + v;
        }
        Permutation { img }
    }
}

/// Length and a reduced word.
pub fn length_and_reduced_word(w: &Permutation) -> (usize, Vec<usize>) {
    let word = w.reduced_word();
    (word.len(), word)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.img.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        f.write_str("]")
    }
}
