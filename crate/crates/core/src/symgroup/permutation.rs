use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Partition;
use crate::error::{check_degree, Error, Result};

/// Largest supported group degree.
pub const MAX_DEGREE: usize = 8;

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// A permutation of `n` items, stored as its sequence of images.
///
/// Entry `j` is the item placed in position `j`, so the ranking string
/// `"54321"` puts item 5 first. Items and positions are 0-based
/// internally and 1-based in the string form.
///
/// Composition follows `(p ∘ q)(j) = p(q(j))`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Permutation {
    len: u8,
    map: [u8; MAX_DEGREE],
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_DEGREE);
        let mut map = [0u8; MAX_DEGREE];
        for (j, m) in map.iter_mut().enumerate().take(n) {
            *m = j as u8;
        }
        Permutation { len: n as u8, map }
    }

    /// Builds a permutation from 0-based images, validating bijectivity.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::InvalidPermutation(format!(
                "length {n} outside 1..={MAX_DEGREE}"
            )));
        }
        let mut seen = [false; MAX_DEGREE];
        let mut map = [0u8; MAX_DEGREE];
        for (j, &v) in images.iter().enumerate() {
            if v >= n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
            seen[v] = true;
            map[j] = v as u8;
        }
        Ok(Permutation { len: n as u8, map })
    }

    pub(crate) fn from_images_unchecked(images: &[u8]) -> Self {
        let mut map = [0u8; MAX_DEGREE];
        map[..images.len()].copy_from_slice(images);
        Permutation {
            len: images.len() as u8,
            map,
        }
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.len as usize
    }

    /// 0-based item in (0-based) position `j`.
    #[inline]
    pub fn image(&self, j: usize) -> usize {
        self.map[j] as usize
    }

    #[inline]
    pub fn images(&self) -> &[u8] {
        &self.map[..self.len as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images().iter().enumerate().all(|(j, &v)| j == v as usize)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.len != other.len {
            return Err(Error::MismatchedDegree {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }

    /// `self ∘ other`, i.e. `j ↦ self(other(j))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        let mut map = [0u8; MAX_DEGREE];
        for (j, m) in map.iter_mut().enumerate().take(self.degree()) {
            *m = self.map[other.map[j] as usize];
        }
        Permutation { len: self.len, map }
    }

    pub fn inverse(&self) -> Self {
        let mut map = [0u8; MAX_DEGREE];
        for j in 0..self.degree() {
            map[self.map[j] as usize] = j as u8;
        }
        Permutation { len: self.len, map }
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.degree();
        let mut seen = [false; MAX_DEGREE];
        let mut parts = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = self.map[j] as usize;
                len += 1;
            }
            parts.push(len);
        }
        Partition::from_unsorted(parts)
    }

    /// True when `self(j) != other(j)` for every position `j`.
    pub fn is_derangement_of(&self, other: &Self) -> Result<bool> {
        self.check_same(other)?;
        Ok(self.disjoint_from(other))
    }

    #[inline]
    pub(crate) fn disjoint_from(&self, other: &Self) -> bool {
        self.images().iter().zip(other.images()).all(|(a, b)| a != b)
    }

    /// Number of positions where the two permutations agree.
    #[inline]
    pub fn agreements(&self, other: &Self) -> usize {
        self.images().iter().zip(other.images()).filter(|(a, b)| a == b).count()
    }

    /// The n×n 0/1 matrix with entry `(i, j) = 1` iff `self(j) = i`.
    pub fn permutation_matrix(&self) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut m = vec![vec![0u32; n]; n];
        for j in 0..n {
            m[self.image(j)][j] = 1;
        }
        m
    }

    /// Position of this permutation in lexicographic order, 0-based.
    pub fn lex_rank(&self) -> usize {
        let n = self.degree();
        let mut rank = 0;
        let mut used: u16 = 0;
        for j in 0..n {
            let v = self.map[j] as usize;
            let smaller_unused = (0..v).filter(|&u| used & (1 << u) == 0).count();
            rank = rank * (n - j) + smaller_unused;
            used |= 1 << v;
        }
        rank
    }

    /// Inverse of [`Permutation::lex_rank`].
    pub fn from_lex_rank(n: usize, mut rank: usize) -> Self {
        let mut digits = [0usize; MAX_DEGREE];
        for k in 1..=n {
            digits[n - k] = rank % k;
            rank /= k;
        }
        let mut avail: Vec<u8> = (0..n as u8).collect();
        let mut map = [0u8; MAX_DEGREE];
        for j in 0..n {
            map[j] = avail.remove(digits[j]);
        }
        Permutation { len: n as u8, map }
    }
}

/// All `n!` permutations of S_n in lexicographic order of their image strings.
pub fn enumerate_sn(n: usize) -> Result<Vec<Permutation>> {
    check_degree(n, 1, MAX_DEGREE)?;
    let mut out = Vec::with_capacity(factorial(n));
    let mut cur: Vec<u8> = (0..n as u8).collect();
    loop {
        out.push(Permutation::from_images_unchecked(&cur));
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let k = (i + 1..n).rev().find(|&k| cur[k] > cur[i]).unwrap();
        cur.swap(i, k);
        cur[i + 1..].reverse();
    }
    Ok(out)
}

impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.images().cmp(other.images()))
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &v in self.images() {
            write!(f, "{}", v + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let images = s
            .chars()
            .map(|c| match c.to_digit(10) {
                Some(d) if d >= 1 => Ok(d as usize - 1),
                _ => Err(Error::InvalidPermutation(format!("{s:?}: bad digit {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(&images)
            .map_err(|_| Error::InvalidPermutation(format!("{s:?} is not a permutation")))
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
