use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::reptheory::RankFunction;

/// Draws `total()` rankings with replacement from the empirical distribution of `f`.
pub fn bootstrap<R: Rng + ?Sized>(f: &RankFunction, rng: &mut R) -> Result<RankFunction> {
    let total = f.total();
    if total == 0 {
        return Err(Error::EmptyData);
    }
    let dist = WeightedIndex::new(f.counts()).map_err(|e| Error::Format(e.to_string()))?;
    let mut counts = vec![0u64; f.counts().len()];
    for _ in 0..total {
        counts[dist.sample(rng)] += 1;
    }
    RankFunction::from_dense(f.n(), counts)
}

/// `replicates` resamples; replicate `k` uses its own generator seeded with `seed + k`.
pub fn bootstrap_replicates(f: &RankFunction, replicates: usize, seed: u64) -> Result<Vec<RankFunction>> {
    (0..replicates)
        .into_par_iter()
        .map(|k| bootstrap(f, &mut ChaCha8Rng::seed_from_u64(seed.wrapping_add(k as u64))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symgroup::Permutation;

    #[test]
    fn totals_preserved() {
        let f = RankFunction::from_pairs(3, [("123".parse().unwrap(), 4), ("321".parse().unwrap(), 9)]).unwrap();
        for g in bootstrap_replicates(&f, 20, 1).unwrap() {
            assert_eq!(g.total(), 13);
            assert_eq!(g.get(&"213".parse().unwrap()), 0);
        }
    }

    #[test]
    fn point_mass_is_fixed() {
        let mut f = RankFunction::point_mass("2431".parse::<Permutation>().unwrap());
        f.set(&"2431".parse().unwrap(), 17).unwrap();
        for g in bootstrap_replicates(&f, 5, 0).unwrap() {
            assert_eq!(g, f);
        }
    }

    #[test]
    fn empty_rejected() {
        let f = RankFunction::zeros(3).unwrap();
        assert_eq!(bootstrap(&f, &mut ChaCha8Rng::seed_from_u64(0)), Err(Error::EmptyData));
    }
}
