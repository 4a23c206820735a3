use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{check_degree, Error, Result};
use crate::symgroup::{enumerate_sn, Permutation, MAX_DEGREE};
use crate::tableaux::{canonical_square, square_orbit_size, MagicSquare};

/// Canonical representatives of the orbits of line sum `s + 1`, given those of
/// line sum `s`: every square of sum `s + 1` is a representative of sum `s` plus
/// some permutation matrix, up to symmetry.
pub fn next_square_orbits(reps: &[MagicSquare], sn: &[Permutation]) -> Vec<MagicSquare> {
    let found: HashSet<MagicSquare> = reps
        .par_iter()
        .fold(HashSet::new, |mut acc, r| {
            for p in sn {
                acc.insert(canonical_square(&r.plus_permutation(p)));
            }
            acc
        })
        .reduce(HashSet::new, |mut a, b| {
            if a.len() < b.len() {
                return b.into_iter().chain(a).collect();
            }
            a.extend(b);
            a
        });
    let mut out: Vec<MagicSquare> = found.into_iter().collect();
    out.sort_unstable();
    out
}

/// One canonical square per S_n × S_n orbit of n×n magic squares with line sum `s`.
pub fn enumerate_square_orbits(n: usize, s: usize) -> Result<Vec<MagicSquare>> {
    Ok(square_orbits_up_to(n, s)?.pop().expect("s >= 1"))
}

/// Representatives for every line sum `1..=s`, index `d - 1` holding sum `d`.
pub fn square_orbits_up_to(n: usize, s: usize) -> Result<Vec<Vec<MagicSquare>>> {
    check_degree(n, 1, MAX_DEGREE)?;
    if s == 0 {
        return Err(Error::ZeroLineSum);
    }
    let sn = enumerate_sn(n)?;
    let mut levels = vec![vec![canonical_square(&MagicSquare::permutation(&Permutation::identity(n)))]];
    while levels.len() < s {
        let next = next_square_orbits(levels.last().unwrap(), &sn);
        levels.push(next);
    }
    Ok(levels)
}

/// Number of n×n magic squares with line sum `s`, summed over orbits.
pub fn count_squares(reps: &[MagicSquare]) -> u64 {
    reps.iter().map(square_orbit_size).sum()
}

/// Orbits met by a random walk on magic squares of line sum `s` that adds and
/// subtracts 2×2 swap patterns, starting from `s` times the identity.
pub fn sample_square_orbits(n: usize, s: usize, steps: usize, seed: u64) -> Result<Vec<MagicSquare>> {
    check_degree(n, 2, MAX_DEGREE)?;
    if s == 0 {
        return Err(Error::ZeroLineSum);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut entries = vec![0u32; n * n];
    for i in 0..n {
        entries[i * n + i] = s as u32;
    }
    let mut seen = HashSet::new();
    for _ in 0..steps {
        let (i1, i2) = distinct_pair(&mut rng, n);
        let (j1, j2) = distinct_pair(&mut rng, n);
        // +1 at (i1,j1),(i2,j2); -1 at (i1,j2),(i2,j1)
        if entries[i1 * n + j2] > 0 && entries[i2 * n + j1] > 0 {
            entries[i1 * n + j2] -= 1;
            entries[i2 * n + j1] -= 1;
            entries[i1 * n + j1] += 1;
            entries[i2 * n + j2] += 1;
            let b = MagicSquare::new(n, entries.clone()).expect("swaps keep line sums");
            seen.insert(canonical_square(&b));
        }
    }
    let mut out: Vec<MagicSquare> = seen.into_iter().collect();
    out.sort_unstable();
    Ok(out)
}

fn distinct_pair(rng: &mut ChaCha8Rng, n: usize) -> (usize, usize) {
    let a = rng.random_range(0..n);
    let mut b = rng.random_range(0..n - 1);
    if b >= a {
        b += 1;
    }
    (a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// All squares of each line sum, by brute force.
    fn all_squares(n: usize, s: usize) -> HashSet<MagicSquare> {
        let sn = enumerate_sn(n).unwrap();
        let mut cur: HashSet<MagicSquare> = [MagicSquare::zero(n)].into_iter().collect();
        for _ in 0..s {
            cur = cur.iter().flat_map(|b| sn.iter().map(move |p| b.plus_permutation(p))).collect();
        }
        cur
    }

    #[test]
    fn single_orbit_at_sum_one() {
        for n in 1..=6 {
            assert_eq!(enumerate_square_orbits(n, 1).unwrap().len(), 1);
        }
    }

    #[test]
    fn orbit_sizes_add_up_to_square_counts() {
        for n in 2..=4 {
            for s in 1..=4 {
                let reps = enumerate_square_orbits(n, s).unwrap();
                assert_eq!(count_squares(&reps), all_squares(n, s).len() as u64, "n={n} s={s}");
            }
        }
    }

    #[test]
    fn square_counts_n5() {
        let levels = square_orbits_up_to(5, 3).unwrap();
        let counts: Vec<u64> = levels.iter().map(|l| count_squares(l)).collect();
        assert_eq!(counts, vec![120, 6210, 153040]);
    }

    #[test]
    fn zero_line_sum_rejected() {
        assert!(enumerate_square_orbits(4, 0).is_err());
    }

    #[test]
    fn random_walk_finds_only_valid_orbits() {
        let exact: HashSet<MagicSquare> = enumerate_square_orbits(4, 3).unwrap().into_iter().collect();
        let sampled = sample_square_orbits(4, 3, 20_000, 5).unwrap();
        assert!(sampled.iter().all(|b| exact.contains(b)));
        assert_eq!(sampled.len(), exact.len());
    }
}
