//! Minimal-length coset representatives for Young subgroups.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::perm::Permutation;
use crate::error::{Error, Result};

/// Check that `comp` has positive parts summing to `n`.
pub fn validate_composition(n: usize, comp: &[usize]) -> Result<()> {
    if comp.contains(&0) || comp.iter().sum::<usize>() != n {
        return Err(Error::InvalidComposition(format!("{comp:?} is not a composition of {n}")));
    }
    Ok(())
}

/// 0-based block index of each position.
pub fn block_of(comp: &[usize]) -> Vec<usize> {
    comp.iter().enumerate().flat_map(|(b, &c)| core::iter::repeat_n(b, c)).collect()
}

/// 0-based start offset of each block.
pub fn block_offsets(comp: &[usize]) -> Vec<usize> {
    let mut acc = 0;
    comp.iter()
        .map(|&c| {
            let o = acc;
            acc += c;
            o
        })
        .collect()
}

/// True if `s_j` (1-based) lies in the Young subgroup of `comp`.
pub fn is_internal_simple(comp: &[usize], j: usize) -> bool {
    let b = block_of(comp);
    b[j - 1] == b[j]
}

pub fn multinomial(comp: &[usize]) -> u128 {
    let mut out: u128 = 1;
    let mut total: u128 = 0;
    for &c in comp {
        for k in 1..=c as u128 {
            total += 1;
            out = out * total / k;
        }
    }
    out
}

/// Minimal-length representatives of `S_n / (S_{n_1} × ⋯ × S_{n_m})`.
///
/// These are the permutations increasing on each block of positions.
/// Sorted by length, then one-line notation.
pub fn min_coset_reps(n: usize, comp: &[usize]) -> Result<Vec<Permutation>> {
    validate_composition(n, comp)?;
    let mut out = Vec::new();
    let mut img = vec![0usize; n];
    let offsets = block_offsets(comp);
    // Assign values 0..n in increasing order to blocks; each block's values
    // then occupy its positions in increasing order.
    fn go(v: usize, n: usize, comp: &[usize], offsets: &[usize], fill: &mut Vec<usize>, img: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        if v == n {
            out.push(Permutation::from_images(img.clone()));
            return;
        }
        for b in 0..comp.len() {
            if fill[b] < comp[b] {
                img[offsets[b] + fill[b]] = v;
                fill[b] += 1;
                go(v + 1, n, comp, offsets, fill, img, out);
                fill[b] -= 1;
            }
        }
    }
    let mut fill = vec![0; comp.len()];
    go(0, n, comp, &offsets, &mut fill, &mut img, &mut out);
    out.sort_by_key(|w| (w.length(), w.clone()));
    Ok(out)
}

/// Factor `u = w · v` with `w` a minimal coset representative and `v` in
/// the Young subgroup; lengths add.
pub fn split_coset(u: &Permutation, comp: &[usize]) -> (Permutation, Permutation) {
    let n = u.size();
    let mut img = u.images().to_vec();
    for (&o, &c) in block_offsets(comp).iter().zip(comp) {
        img[o..o + c].sort_unstable();
    }
    let w = Permutation::from_images(img);
    let v = w.inverse().compose(u);
    debug_assert_eq!(v.size(), n);
    (w, v)
}
