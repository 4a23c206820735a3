use crate::error::{check_degree, Error, Result};
use crate::symgroup::{factorial, Permutation, MAX_DEGREE};
use crate::tableaux::MagicSquare;
use crate::FourierMatrix;

/// Nonnegative counts on S_n: how many voters chose each ranking.
///
/// Stored densely, indexed by the lexicographic rank of the permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RankFunction {
    n: usize,
    counts: Vec<u64>,
}

impl RankFunction {
    pub fn zeros(n: usize) -> Result<Self> {
        check_degree(n, 1, MAX_DEGREE)?;
        Ok(RankFunction {
            n,
            counts: vec![0; factorial(n)],
        })
    }

    /// One vote for every permutation.
    pub fn uniform(n: usize) -> Result<Self> {
        let mut f = Self::zeros(n)?;
        f.counts.iter_mut().for_each(|c| *c = 1);
        Ok(f)
    }

    pub fn point_mass(p: Permutation) -> Self {
        let mut f = Self::zeros(p.degree()).expect("permutation degree is in range");
        f.counts[p.lex_rank()] = 1;
        f
    }

    /// Builds counts from `(ranking, count)` pairs; repeated rankings accumulate.
    pub fn from_pairs<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Permutation, u64)>,
    {
        let mut f = Self::zeros(n)?;
        for (p, c) in pairs {
            f.check_perm(&p)?;
            f.counts[p.lex_rank()] += c;
        }
        Ok(f)
    }

    /// Counts in lexicographic order of permutations.
    pub fn from_dense(n: usize, counts: Vec<u64>) -> Result<Self> {
        check_degree(n, 1, MAX_DEGREE)?;
        if counts.len() != factorial(n) {
            return Err(Error::Format(format!(
                "expected {} counts, got {}",
                factorial(n),
                counts.len()
            )));
        }
        Ok(RankFunction { n, counts })
    }

    fn check_perm(&self, p: &Permutation) -> Result<()> {
        if p.degree() != self.n {
            return Err(Error::MismatchedDegree {
                left: self.n,
                right: p.degree(),
            });
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, p: &Permutation) -> u64 {
        self.counts[p.lex_rank()]
    }

    pub fn set(&mut self, p: &Permutation, count: u64) -> Result<()> {
        self.check_perm(p)?;
        self.counts[p.lex_rank()] = count;
        Ok(())
    }

    #[inline]
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    #[inline]
    pub(crate) fn counts_mut(&mut self) -> &mut [u64] {
        &mut self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Nonzero entries as `(permutation, count)` in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (Permutation, u64)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(move |(r, &c)| (Permutation::from_lex_rank(self.n, r), c))
    }
}

/// `Σ_g f(g) ρ(g)`: entry `(i, j)` counts voters whose ranking has item `i` in position `j`.
pub fn fourier_transform(f: &RankFunction) -> FourierMatrix {
    let n = f.n();
    let mut entries = vec![0u32; n * n];
    for (p, c) in f.iter() {
        for j in 0..n {
            entries[p.image(j) * n + j] += c as u32;
        }
    }
    MagicSquare::new(n, entries).expect("sum of permutation matrices is magic")
}

pub fn same_transform(f: &RankFunction, g: &RankFunction) -> Result<bool> {
    if f.n() != g.n() {
        return Err(Error::MismatchedDegree {
            left: f.n(),
            right: g.n(),
        });
    }
    Ok(fourier_transform(f) == fourier_transform(g))
}
