use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::symgroup::{Permutation, MAX_DEGREE};

/// An n×n nonnegative integer matrix whose rows and columns all sum to `line_sum`.
///
/// Rows index items, columns index positions; entry `(i, j)` is the number of
/// rankings that put item `i` in position `j`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MagicSquare {
    n: usize,
    entries: Vec<u32>,
    line_sum: u32,
}

impl MagicSquare {
    /// Validates a row-major matrix.
    pub fn new(n: usize, entries: Vec<u32>) -> Result<Self> {
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::DegreeOutOfRange { n, min: 1, max: MAX_DEGREE });
        }
        if entries.len() != n * n {
            return Err(Error::NotMagic(format!("expected {} entries, got {}", n * n, entries.len())));
        }
        let line_sum: u32 = entries[..n].iter().sum();
        for k in 0..n {
            let row: u32 = entries[k * n..(k + 1) * n].iter().sum();
            let col: u32 = (0..n).map(|i| entries[i * n + k]).sum();
            if row != line_sum || col != line_sum {
                return Err(Error::NotMagic(format!(
                    "line {k} sums to {row}/{col}, expected {line_sum}"
                )));
            }
        }
        Ok(MagicSquare { n, entries, line_sum })
    }

    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotMagic("matrix is not square".into()));
        }
        Self::new(n, rows.concat())
    }

    pub fn zero(n: usize) -> Self {
        MagicSquare { n, entries: vec![0; n * n], line_sum: 0 }
    }

    pub fn all_ones(n: usize) -> Self {
        MagicSquare { n, entries: vec![1; n * n], line_sum: n as u32 }
    }

    pub fn permutation(p: &Permutation) -> Self {
        let mut s = Self::zero(p.degree());
        s.add_permutation(p);
        s
    }

    pub(crate) fn from_parts_unchecked(n: usize, entries: Vec<u32>, line_sum: u32) -> Self {
        MagicSquare { n, entries, line_sum }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn line_sum(&self) -> u32 {
        self.line_sum
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.entries.chunks(self.n).map(<[u32]>::to_vec).collect()
    }

    pub fn norm_squared(&self) -> u64 {
        self.entries.iter().map(|&v| (v as u64) * (v as u64)).sum()
    }

    #[inline]
    pub(crate) fn add_permutation(&mut self, p: &Permutation) {
        for j in 0..self.n {
            self.entries[p.image(j) * self.n + j] += 1;
        }
        self.line_sum += 1;
    }

    /// Subtracts a permutation matrix; `false` (and no change) if an entry would go negative.
    pub(crate) fn remove_permutation(&mut self, p: &Permutation) -> bool {
        if !self.fits(p) {
            return false;
        }
        for j in 0..self.n {
            self.entries[p.image(j) * self.n + j] -= 1;
        }
        self.line_sum -= 1;
        true
    }

    /// True when every cell `(p(j), j)` is positive.
    #[inline]
    pub fn fits(&self, p: &Permutation) -> bool {
        (0..self.n).all(|j| self.entries[p.image(j) * self.n + j] > 0)
    }

    pub fn plus_permutation(&self, p: &Permutation) -> Self {
        let mut s = self.clone();
        s.add_permutation(p);
        s
    }
}

impl fmt::Debug for MagicSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MagicSquare{:?}", self.rows())
    }
}

impl fmt::Display for MagicSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.entries.chunks(self.n) {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for MagicSquare {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MagicSquare {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<u32>>::deserialize(deserializer)?;
        MagicSquare::from_rows(&rows).map_err(serde::de::Error::custom)
    }
}
