use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{check_degree, Error, Result};
use crate::symgroup::{factorial, MAX_DEGREE};

/// An integer partition, parts weakly decreasing.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?}: parts must be positive")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?}: parts must be weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub(crate) fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Conjugate partition (transpose of the Young diagram).
    pub fn conjugate(&self) -> Partition {
        let first = self.parts[0];
        let parts = (0..first)
            .map(|c| self.parts.iter().filter(|&&p| p > c).count())
            .collect();
        Partition { parts }
    }

    /// Dimension of the irreducible representation, by the hook length formula.
    pub fn dimension(&self) -> u64 {
        let conj = self.conjugate();
        let mut hooks: u128 = 1;
        for (r, &row) in self.parts.iter().enumerate() {
            for (c, &col) in conj.parts.iter().enumerate().take(row) {
                hooks *= ((row - c - 1) + (col - r - 1) + 1) as u128;
            }
        }
        (factorial(self.n()) as u128 / hooks) as u64
    }

    /// Number of permutations with this cycle type.
    pub fn class_size(&self) -> u64 {
        let n = self.n();
        let mut denom: u128 = 1;
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let mult = self.parts[i..].iter().take_while(|&&q| q == p).count();
            denom *= (p as u128).pow(mult as u32) * factorial(mult) as u128;
            i += mult;
        }
        (factorial(n) as u128 / denom) as u64
    }
}

/// All partitions of `n`, in reverse lexicographic order: `(n)` first, `(1,…,1)` last.
pub fn partitions_of(n: usize) -> Result<Vec<Partition>> {
    check_degree(n, 1, MAX_DEGREE)?;
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for k in (1..=rest.min(max)).rev() {
            cur.push(k);
            rec(rest - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    Ok(out)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("{s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        assert_eq!(partitions_of(5).unwrap().len(), 7);
        assert_eq!(partitions_of(1).unwrap(), vec![Partition::new(vec![1]).unwrap()]);
        assert!(partitions_of(0).is_err());
    }

    #[test]
    fn six_has_eleven_partitions_by_brute_force() {
        // brute force: weakly decreasing sequences from the 2^(n-1) compositions of 6
        let n = 6usize;
        let mut seen = std::collections::BTreeSet::new();
        for mask in 0..(1u32 << (n - 1)) {
            let mut parts = vec![];
            let mut cur = 1;
            for b in 0..n - 1 {
                if mask & (1 << b) != 0 {
                    parts.push(cur);
                    cur = 1;
                } else {
                    cur += 1;
                }
            }
            parts.push(cur);
            parts.sort_unstable_by(|a, b| b.cmp(a));
            seen.insert(parts);
        }
        assert_eq!(seen.len(), 11);
        assert_eq!(partitions_of(6).unwrap().len(), 11);
    }

    #[test]
    fn order_matches_table_layout() {
        let names: Vec<String> = partitions_of(5).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(names, ["5", "4,1", "3,2", "3,1,1", "2,2,1", "2,1,1,1", "1,1,1,1,1"]);
    }

    #[test]
    fn dimensions_and_classes() {
        let dims: Vec<u64> = partitions_of(5).unwrap().iter().map(|p| p.dimension()).collect();
        assert_eq!(dims, [1, 4, 5, 6, 5, 4, 1]);
        let classes: u64 = partitions_of(5).unwrap().iter().map(|p| p.class_size()).sum();
        assert_eq!(classes, 120);
        assert_eq!("3,2".parse::<Partition>().unwrap().conjugate().to_string(), "2,2,1");
    }

    #[test]
    fn validation() {
        assert!(Partition::new(vec![2, 3]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!("3,x".parse::<Partition>().is_err());
    }
}
