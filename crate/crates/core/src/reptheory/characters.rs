use std::collections::HashMap;

use crate::error::{check_degree, Error, Result};
use crate::symgroup::{partitions_of, Partition, MAX_DEGREE};

/// Integer character table of S_n.
///
/// Rows are irreducibles `S^λ`, columns conjugacy classes (cycle types); both
/// follow the order of [`partitions_of`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    n: usize,
    partitions: Vec<Partition>,
    values: Vec<Vec<i64>>,
    class_sizes: Vec<u64>,
}

impl CharacterTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn class_sizes(&self) -> &[u64] {
        &self.class_sizes
    }

    /// `values()[λ][μ] = χ_λ(μ)`.
    pub fn values(&self) -> &[Vec<i64>] {
        &self.values
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.partitions.iter().position(|q| q == p)
    }

    pub fn value(&self, irrep: &Partition, class: &Partition) -> Result<i64> {
        let i = self.require(irrep)?;
        let j = self.require(class)?;
        Ok(self.values[i][j])
    }

    /// χ_λ at the identity class.
    pub fn dimension(&self, irrep: usize) -> i64 {
        self.values[irrep][self.partitions.len() - 1]
    }

    fn require(&self, p: &Partition) -> Result<usize> {
        self.index_of(p).ok_or_else(|| Error::PartitionMismatch {
            partition: p.to_string(),
            n: self.n,
        })
    }
}

/// Builds the character table with the Murnaghan–Nakayama rule.
pub fn character_table(n: usize) -> Result<CharacterTable> {
    check_degree(n, 1, MAX_DEGREE)?;
    let partitions = partitions_of(n)?;
    let mut memo = HashMap::new();
    let values = partitions
        .iter()
        .map(|lam| {
            partitions
                .iter()
                .map(|mu| murnaghan_nakayama(lam.parts(), mu.parts(), &mut memo))
                .collect()
        })
        .collect();
    let class_sizes = partitions.iter().map(Partition::class_size).collect();
    Ok(CharacterTable {
        n,
        partitions,
        values,
        class_sizes,
    })
}

type Memo = HashMap<(Vec<usize>, Vec<usize>), i64>;

/// χ_λ(μ): strip a rim hook of length μ₁ in every possible way, with sign
/// `(-1)^(height)`, and recurse on the remaining cycle lengths.
///
/// Rim hooks are handled on the beta-set (first-column hook lengths): a hook of
/// length k corresponds to moving one bead from `b` to a free `b - k`.
fn murnaghan_nakayama(lam: &[usize], mu: &[usize], memo: &mut Memo) -> i64 {
    if mu.is_empty() {
        return if lam.is_empty() { 1 } else { 0 };
    }
    let key = (lam.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let k = mu[0];
    let rest = &mu[1..];
    let len = lam.len();
    let beta: Vec<usize> = lam.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    let mut total = 0i64;
    for &b in &beta {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let crossed = beta.iter().filter(|&&x| x > b - k && x < b).count();
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        let mut moved: Vec<usize> = beta.iter().map(|&x| if x == b { b - k } else { x }).collect();
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let l2 = moved.len();
        let smaller: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (l2 - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        total += sign * murnaghan_nakayama(&smaller, rest, memo);
    }
    memo.insert(key, total);
    total
}
