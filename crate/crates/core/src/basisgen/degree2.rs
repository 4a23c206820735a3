use std::collections::BTreeSet;

use crate::error::Result;
use crate::symgroup::{enumerate_sn, Permutation};
use crate::tableaux::{canonical_square, MagicSquare, Move, Tableau};

/// The cyclic blocks of `p + q`: cells where the two agree hold a 2 and are
/// left out; the rest splits into cycles alternating between `p` and `q`.
/// Each block is returned as its list of positions.
pub(crate) fn blocks(p: &Permutation, q: &Permutation) -> Vec<Vec<usize>> {
    let n = p.degree();
    let qinv = q.inverse();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] || p.image(start) == q.image(start) {
            continue;
        }
        let mut block = Vec::new();
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            block.push(j);
            // the other position holding item p(j) under q
            j = qinv.image(p.image(j));
        }
        block.sort_unstable();
        out.push(block);
    }
    out
}

/// All tableaux over `p + q`: each block independently takes its cells from
/// `p` or from `q`, up to swapping the two rows.
pub(crate) fn degree2_fiber(p: &Permutation, q: &Permutation) -> Vec<Tableau> {
    let n = p.degree();
    let bl = blocks(p, q);
    let k = bl.len();
    let mut out = BTreeSet::new();
    let half = if k == 0 { 1 } else { 1usize << (k - 1) };
    for mask in 0..half {
        let mut a: Vec<u8> = p.images().to_vec();
        let mut b: Vec<u8> = q.images().to_vec();
        for (bi, block) in bl.iter().enumerate() {
            // block 0 always stays with p, which fixes the row swap
            if bi > 0 && mask & (1 << (bi - 1)) != 0 {
                for &j in block {
                    std::mem::swap(&mut a[j], &mut b[j]);
                }
            }
        }
        let rows = vec![Permutation::from_images_unchecked(&a), Permutation::from_images_unchecked(&b)];
        out.insert(Tableau::from_unsorted_unchecked(n, rows));
    }
    out.into_iter().collect()
}

/// Degree-two moves built from the block structure of each degree-two square,
/// without fiber search: a square with `k` blocks has `2^(k-1)` tableaux and
/// gets `2^(k-1) - 1` moves, from its smallest tableau to each of the others.
pub fn degree2_moves(n: usize) -> Result<Vec<Move>> {
    if n < 4 {
        return Ok(Vec::new());
    }
    let sn = enumerate_sn(n)?;
    let mut moves = BTreeSet::new();
    let mut done = std::collections::HashSet::new();
    for (a, p) in sn.iter().enumerate() {
        for q in &sn[a + 1..] {
            if blocks(p, q).len() < 2 {
                continue;
            }
            let b = MagicSquare::permutation(p).plus_permutation(q);
            if !done.insert(b) {
                continue;
            }
            let fiber = degree2_fiber(p, q);
            for t in &fiber[1..] {
                moves.insert(Move::new(fiber[0].clone(), t.clone()).expect("distinct tableaux"));
            }
        }
    }
    Ok(moves.into_iter().collect())
}

/// Symmetry classes of a move set: one per (square orbit, connecting move) slot.
pub fn count_classes(moves: &[Move]) -> usize {
    let mut per_square: std::collections::HashMap<MagicSquare, usize> = Default::default();
    for m in moves {
        *per_square.entry(m.square()).or_default() += 1;
    }
    let mut orbits: std::collections::HashMap<MagicSquare, usize> = Default::default();
    for (b, c) in per_square {
        orbits.insert(canonical_square(&b), c);
    }
    orbits.values().sum()
}

/// Number of partitions of `m` into at most `k` parts, read off the power
/// series of `1 / ((1 - q)(1 - q^2)...(1 - q^k))`.
pub(crate) fn partitions_at_most(m: usize, k: usize) -> u128 {
    let mut coeffs = vec![0u128; m + 1];
    coeffs[0] = 1;
    for i in 1..=k {
        for e in i..=m {
            coeffs[e] += coeffs[e - i];
        }
    }
    coeffs[m]
}

/// Degree-two symmetry classes of S_n.
pub fn d2_count(n: usize) -> u128 {
    let mut d = 0u128;
    for m in 4..=n {
        for k in 2..=m / 2 {
            d += ((1u128 << (k - 1)) - 1) * partitions_at_most(m - 2 * k, k);
        }
    }
    d
}
