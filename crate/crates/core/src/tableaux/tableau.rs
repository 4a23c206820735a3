use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::reptheory::RankFunction;
use crate::symgroup::Permutation;

use super::{MagicSquare, Symmetry};

/// A multiset of permutations of the same degree, kept sorted so that row
/// order never matters for equality or hashing.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    n: usize,
    rows: Vec<Permutation>,
}

impl Tableau {
    pub fn new(mut rows: Vec<Permutation>) -> Result<Self> {
        let n = rows.first().ok_or(Error::EmptyTableau)?.degree();
        if let Some(bad) = rows.iter().find(|r| r.degree() != n) {
            return Err(Error::MismatchedDegree { left: n, right: bad.degree() });
        }
        rows.sort_unstable();
        Ok(Tableau { n, rows })
    }

    pub fn empty(n: usize) -> Self {
        Tableau { n, rows: Vec::new() }
    }

    pub(crate) fn from_sorted_unchecked(n: usize, rows: Vec<Permutation>) -> Self {
        debug_assert!(rows.windows(2).all(|w| w[0] <= w[1]));
        Tableau { n, rows }
    }

    pub(crate) fn from_unsorted_unchecked(n: usize, mut rows: Vec<Permutation>) -> Self {
        rows.sort_unstable();
        Tableau { n, rows }
    }

    pub fn parse_rows<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let perms = rows.iter().map(|s| s.as_ref().parse()).collect::<Result<Vec<Permutation>>>()?;
        Self::new(perms)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Permutation] {
        &self.rows
    }

    /// Multiset inclusion.
    pub fn contains(&self, other: &Tableau) -> bool {
        let mut it = self.rows.iter();
        'outer: for r in &other.rows {
            for s in it.by_ref() {
                match s.cmp(r) {
                    std::cmp::Ordering::Less => continue,
                    std::cmp::Ordering::Equal => continue 'outer,
                    std::cmp::Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    /// `self − other` as multisets; `None` unless `other ⊆ self`.
    pub fn difference(&self, other: &Tableau) -> Option<Tableau> {
        let mut out = Vec::with_capacity(self.rows.len().saturating_sub(other.rows.len()));
        let mut j = 0;
        for r in &self.rows {
            if j < other.rows.len() && other.rows[j] == *r {
                j += 1;
            } else {
                if j < other.rows.len() && other.rows[j] < *r {
                    return None;
                }
                out.push(*r);
            }
        }
        (j == other.rows.len()).then(|| Tableau { n: self.n, rows: out })
    }

    /// Multiset union (sum).
    pub fn union(&self, other: &Tableau) -> Tableau {
        let mut rows = Vec::with_capacity(self.rows.len() + other.rows.len());
        let (mut a, mut b) = (self.rows.iter().peekable(), other.rows.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(x), Some(y)) => {
                    if x <= y {
                        rows.push(*a.next().unwrap());
                    } else {
                        rows.push(*b.next().unwrap());
                    }
                }
                (Some(_), None) => rows.push(*a.next().unwrap()),
                (None, Some(_)) => rows.push(*b.next().unwrap()),
                (None, None) => break,
            }
        }
        Tableau { n: self.n, rows }
    }

    pub fn sum(&self) -> Result<MagicSquare> {
        tableau_sum(self)
    }

    pub(crate) fn sum_unchecked(&self) -> MagicSquare {
        let mut s = MagicSquare::zero(self.n);
        for r in &self.rows {
            s.add_permutation(r);
        }
        s
    }

    pub(crate) fn act_unchecked(&self, g: &Symmetry) -> Tableau {
        Self::from_unsorted_unchecked(self.n, self.rows.iter().map(|r| g.act_on_permutation(r)).collect())
    }

    /// The tableau viewed as count data.
    pub fn to_rank_function(&self) -> RankFunction {
        let mut f = RankFunction::zeros(self.n).expect("tableau degree is valid");
        for r in &self.rows {
            f.counts_mut()[r.lex_rank()] += 1;
        }
        f
    }
}

pub fn tableau_sum(t: &Tableau) -> Result<MagicSquare> {
    if t.is_empty() {
        return Err(Error::EmptyTableau);
    }
    Ok(t.sum_unchecked())
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, r) in self.rows.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for Tableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Permutation>::deserialize(deserializer)?;
        Tableau::new(rows).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symgroup::enumerate_sn;

    fn t(rows: &[&str]) -> Tableau {
        Tableau::parse_rows(rows).unwrap()
    }

    #[test]
    fn order_is_irrelevant() {
        assert_eq!(t(&["231", "123", "312"]), t(&["123", "312", "231"]));
    }

    #[test]
    fn latin_square_sums_to_ones() {
        let s = tableau_sum(&t(&["123", "231", "312"])).unwrap();
        assert_eq!(s, MagicSquare::all_ones(3));
        assert_eq!(s.line_sum(), 3);
        assert!(tableau_sum(&Tableau::empty(3)).is_err());
    }

    #[test]
    fn single_row_sum() {
        for p in enumerate_sn(4).unwrap() {
            let s = tableau_sum(&Tableau::new(vec![p]).unwrap()).unwrap();
            assert_eq!(s, MagicSquare::permutation(&p));
        }
    }

    #[test]
    fn multiset_operations() {
        let a = t(&["123", "123", "231", "312"]);
        let b = t(&["123", "312"]);
        assert!(a.contains(&b));
        assert!(!b.contains(&a));
        assert!(!a.contains(&t(&["132"])));
        assert!(!t(&["123"]).contains(&t(&["123", "123"])));
        let d = a.difference(&b).unwrap();
        assert_eq!(d, t(&["123", "231"]));
        assert_eq!(d.union(&b), a);
        assert!(b.difference(&t(&["231"])).is_none());
    }

    #[test]
    fn mixed_degrees_rejected() {
        assert!(Tableau::parse_rows(&["123", "1234"]).is_err());
        assert!(Tableau::new(vec![]).is_err());
    }

    #[test]
    fn json_rows() {
        let x = t(&["312", "123"]);
        assert_eq!(serde_json::to_string(&x).unwrap(), r#"["123","312"]"#);
    }
}
